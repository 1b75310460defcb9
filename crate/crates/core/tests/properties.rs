use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use cubeturan::counting::{binomial_residue_sum, count_copies_qk, count_cycles, pow2};
use cubeturan::cube::{apply_automorphism, edge_count_of_cube, Edge, StarVector, Subgraph, Vertex};
use cubeturan::verification::{has_k_partite_representation, is_partite_coloring, verify_free};
use cubeturan::Pattern;

fn subgraph(n: usize, keep: &[bool]) -> Subgraph {
    let edges = keep
        .iter()
        .enumerate()
        .filter(|(_, &k)| k)
        .map(|(i, _)| Edge::from_index(n, i));
    Subgraph::from_edges(n, edges).unwrap()
}

fn graph_in(dims: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Subgraph> {
    dims.prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.75), edge_count_of_cube(n))
            .prop_map(move |keep| subgraph(n, &keep))
    })
}

fn counts(g: &Subgraph) -> Vec<u64> {
    let mut out = vec![g.len() as u64];
    for k in 2..=g.n().min(3) {
        out.push(count_copies_qk(g, k).unwrap());
    }
    for m in [4, 6, 8] {
        out.push(count_cycles(g, m).unwrap());
    }
    out
}

fn closed_walks(g: &Subgraph, len: usize) -> u64 {
    fn go(g: &Subgraph, path: &mut Vec<Vertex>, len: usize) -> u64 {
        let last = *path.last().unwrap();
        if path.len() == len {
            return g.neighbors(&last).filter(|v| *v == path[0]).count() as u64;
        }
        let next: Vec<Vertex> = g.neighbors(&last).filter(|v| !path.contains(v)).collect();
        next.into_iter()
            .map(|v| {
                path.push(v);
                let c = go(g, path, len);
                path.pop();
                c
            })
            .sum()
    }
    (0..1u64 << g.n())
        .map(|b| go(g, &mut vec![Vertex::new(g.n(), b).unwrap()], len))
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn counts_are_automorphism_invariant(
        (g, perm, flips) in graph_in(2..=5).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle(), 0..1u64 << n)
        })
    ) {
        let image = apply_automorphism(&perm, flips, &g).unwrap();
        prop_assert_eq!(counts(&g), counts(&image));
    }

    #[test]
    fn deleting_an_edge_never_adds_copies(
        (g, pick) in graph_in(2..=4).prop_flat_map(|g| (Just(g), any::<prop::sample::Index>()))
    ) {
        prop_assume!(!g.is_empty());
        let e = g.edges()[pick.index(g.len())];
        let smaller = g.without_edge(&e);
        for (before, after) in counts(&g).into_iter().zip(counts(&smaller)) {
            prop_assert!(after <= before);
        }
        for p in [Pattern::Cycle(4), Pattern::Cycle(6), Pattern::SubCube(2), Pattern::SubCube(3)] {
            if verify_free(&g, p).unwrap().free {
                prop_assert!(verify_free(&smaller, p).unwrap().free);
            }
        }
    }

    #[test]
    fn cycles_match_closed_walks(g in graph_in(2..=4), l in 2usize..=4) {
        prop_assume!(l <= 1 << (g.n() - 1));
        let cycles = count_cycles(&g, 2 * l).unwrap();
        prop_assert_eq!(4 * l as u64 * cycles, closed_walks(&g, 2 * l));
    }

    #[test]
    fn residue_sums_stay_within_one_of_a_third(m in 0u64..=40, a in 0u64..3) {
        let s = BigInt::from(binomial_residue_sum(m, 3, a).unwrap());
        let diff: BigInt = s * BigInt::from(3) - BigInt::from(pow2(m));
        prop_assert!(diff.abs() <= BigInt::from(3));
    }

    #[test]
    fn partite_checker_matches_brute_force(
        (l, picks, k) in (1usize..=8).prop_flat_map(|l| (
            Just(l),
            proptest::collection::vec(0..edge_count_of_cube(l), 1..=5),
            1..=l.min(4),
        ))
    ) {
        let mut edges: Vec<StarVector> =
            picks.iter().map(|&i| Edge::from_index(l, i).to_star_vector()).collect();
        edges.sort();
        edges.dedup();
        let rep = has_k_partite_representation(&edges, k).unwrap();
        let colourings = (k as u64).pow(l as u32);
        let brute = (0..colourings).any(|mut code| {
            let sigma: Vec<usize> = (0..l)
                .map(|_| {
                    let c = 1 + (code % k as u64) as usize;
                    code /= k as u64;
                    c
                })
                .collect();
            edges.iter().all(|e| {
                let support = e.star_mask() | e.ones_mask();
                let mut colours: Vec<usize> =
                    (0..l).filter(|p| support >> p & 1 == 1).map(|p| sigma[p]).collect();
                colours.sort();
                colours == (1..=k).collect::<Vec<_>>()
            })
        });
        prop_assert_eq!(rep.sigma.is_some(), brute);
        if let Some(sigma) = rep.sigma {
            prop_assert!(is_partite_coloring(&edges, k, &sigma));
        }
    }
}
