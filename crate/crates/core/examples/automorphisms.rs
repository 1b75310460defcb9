//! Cube automorphisms move a subgraph without changing what it contains.
//!
//! cargo run --release --example automorphisms -- [n] [seed]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use cubeturan::constructions::conder_graph;
use cubeturan::counting::{count_copies_qk, count_cycles};
use cubeturan::cube::{Automorphism, Subgraph};

fn profile(g: &Subgraph) -> cubeturan::Result<Vec<u64>> {
    Ok(vec![
        g.len() as u64,
        count_copies_qk(g, 2)?,
        count_cycles(g, 6)?,
        count_cycles(g, 8)?,
    ])
}

fn main() -> cubeturan::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let n = args.next().flatten().unwrap_or(5) as usize;
    let seed = args.next().flatten().unwrap_or(7);
    let mut rng = StdRng::seed_from_u64(seed);
    let g = conder_graph(n)?;
    println!("conder n={n}: edges, Q_2, C_6, C_8 = {:?}", profile(&g)?);
    for _ in 0..5 {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let a = Automorphism::new(perm, rng.gen_range(0..1u64 << n))?;
        let image = a.apply(&g)?;
        let back = a.inverse().apply(&image)?;
        println!(
            "perm {:?} flips {:0w$b}: {:?}, changed {} edges, inverse restores: {}",
            a.perm(),
            a.flips(),
            profile(&image)?,
            image.difference(&g)?.len(),
            back == g,
            w = n
        );
    }
    Ok(())
}
