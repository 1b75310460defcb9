//! Exact generalized Turán numbers in small cubes.
//!
//! cargo run --release --example extremal_search -- [max_n]

use std::time::Instant;

use cubeturan::search::{exact_extremal, SearchOptions};
use cubeturan::Pattern;

fn main() -> cubeturan::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let pairs = [
        ("e", "c4"),
        ("e", "c6"),
        ("e", "q3"),
        ("c6", "c4"),
        ("c4", "c6"),
        ("q2", "q3"),
        ("c8", "c4"),
    ];
    println!("n  T   H   ex   N     density  nodes      time");
    for n in 2..=max_n {
        for (t, h) in pairs {
            let (target, forbid): (Pattern, Pattern) = (t.parse()?, h.parse()?);
            let started = Instant::now();
            let r = exact_extremal(n, target, forbid, &SearchOptions::default())?;
            println!(
                "{n}  {t:<3} {h:<3} {:<4} {:<5} {:<8} {:<10} {:.2?}",
                r.value,
                r.ambient_total,
                r.density().to_string(),
                r.nodes_explored,
                started.elapsed()
            );
        }
    }
    Ok(())
}
