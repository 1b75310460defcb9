//! The parity-selected `Q_2`'s: exact count, the summation formula, and the
//! asymptotic lower bound. For even `n` the count exceeds the sum by
//! `2^(n-3)`.
//!
//! cargo run --release --example parity_packing -- [max_n]

use cubeturan::constructions::{parity_q2_count, parity_q2_lower_bound, parity_q2_odd_sum};

fn main() -> cubeturan::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(16);
    println!(" n  count        sum          difference  bound");
    for n in 3..=max_n {
        let count = parity_q2_count(n)?;
        let sum = parity_q2_odd_sum(n)?;
        let diff = &count - &sum;
        println!("{n:>2}  {count:<12} {sum:<12} {diff:<11} {}", parity_q2_lower_bound(n));
    }
    Ok(())
}
