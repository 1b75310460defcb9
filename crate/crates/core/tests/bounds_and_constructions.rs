use num_bigint::BigUint;
use num_rational::BigRational;

use cubeturan::bounds::{
    bound_sandwich_report, eval_bound, BoundParams, CheckStatus, Measured, Side, TheoremId,
};
use cubeturan::constructions::{disjoint_qm_packing, parity_q2_packing};
use cubeturan::counting::{
    ceil_log2, closed_count_c2l, closed_count_qk, count_copies_qk, count_cycles, ZTable,
};
use cubeturan::cube::Subgraph;
use cubeturan::verification::verify_free;
use cubeturan::Pattern;

fn ratio(a: impl Into<BigUint>, b: impl Into<BigUint>) -> BigRational {
    let (a, b): (BigUint, BigUint) = (a.into(), b.into());
    BigRational::new(a.into(), b.into())
}

#[test]
fn packings_meet_the_exact_sub_cube_bound() {
    let mut z = ZTable::default();
    let mut checked = 0;
    for n in 3..=8u64 {
        for k in [4u64, 6, 7, 8, 9, 12, 16] {
            let span = ceil_log2(2 * k) as u64;
            if span > n {
                continue;
            }
            let m = span - 1;
            let packing = disjoint_qm_packing(n as usize, m as usize, None).unwrap();
            assert!(verify_free(&packing, Pattern::Cycle(2 * k as usize)).unwrap().free);
            for l in 2..=m {
                let params = BoundParams { n: Some(n), k: Some(k), l: Some(l) };
                let bound = eval_bound(TheoremId::T4, Side::Lower, &params, &mut z).unwrap();
                assert!(!bound.asymptotic);
                let kept = count_copies_qk(&packing, l as usize).unwrap();
                let density = ratio(kept, closed_count_qk(n, l).unwrap());
                assert!(density >= bound.value.unwrap(), "n={n} k={k} l={l}");
                checked += 1;
            }
        }
    }
    assert!(checked > 40);
}

#[test]
fn parity_packing_against_the_c4_c6_bounds() {
    let mut z = ZTable::default();
    let packing = parity_q2_packing(5).unwrap();
    assert!(verify_free(&packing.graph, Pattern::Cycle(6)).unwrap().free);
    let squares = count_cycles(&packing.graph, 4).unwrap();
    assert_eq!(squares, 6);
    z.ensure_for_cycles(5, 2).unwrap();
    let density = ratio(squares, closed_count_c2l(5, 2, &z).unwrap());
    let params = BoundParams { n: Some(5), ..Default::default() };
    let report = bound_sandwich_report(
        TheoremId::T2,
        &params,
        &mut z,
        Some(Measured::new("parity-q2 n=5", density)),
    );
    let statuses: Vec<_> = report.checks.iter().map(|c| c.status).collect();
    // 3/40 sits above 0.25/5 and just above 0.36578/5
    assert_eq!(
        statuses,
        vec![CheckStatus::Holds, CheckStatus::Holds, CheckStatus::Advisory]
    );
}

#[test]
fn squares_and_four_cycles_are_counted_alike() {
    let mut z = ZTable::default();
    for n in 2..=6usize {
        z.ensure_for_cycles(n, 2).unwrap();
        let cube = Subgraph::full_cube(n).unwrap();
        let q2 = closed_count_qk(n as u64, 2).unwrap();
        assert_eq!(closed_count_c2l(n as u64, 2, &z).unwrap(), q2);
        assert_eq!(BigUint::from(count_cycles(&cube, 4).unwrap()), q2);
    }
}

#[test]
fn z_dependent_bounds_use_the_word_formula_past_six() {
    let mut z = ZTable::default();
    let params = BoundParams { l: Some(7), ..Default::default() };
    let v = eval_bound(TheoremId::A7, Side::Lower, &params, &mut z).unwrap();
    let want = BigRational::new(1.into(), (3u64.pow(8) * 880_865_280u64).into());
    assert_eq!(v.value, Some(want));
    assert_eq!(z.get(7, 7), Some(880_865_280));
}
