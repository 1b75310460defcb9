//! The `z_{k,l}` table by direct cycle enumeration, and `z_{l,l}` from
//! `Z(l)` words.
//!
//! cargo run --release --example z_table -- [max_k] [max_word_l]

use std::time::Instant;

use cubeturan::counting::{count_z_words, enumerate_z_words, z_kl, z_ll_via_words};

fn main() -> cubeturan::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().ok());
    let max_k = args.next().flatten().unwrap_or(5);
    let max_l = args.next().flatten().unwrap_or(6);

    println!("z_(k,l) by enumeration (rows k, columns l = 2..=6)");
    for k in 2..=max_k {
        let row: Vec<String> = (2..=6)
            .map(|l| z_kl(k, l).map(|v| v.to_string()))
            .collect::<Result<_, _>>()?;
        println!("k={k}: {}", row.join(" "));
    }

    println!("\nZ(2) = {:?}", enumerate_z_words(2)?.iter().map(|w| w.to_string()).collect::<Vec<_>>());
    for l in 3..=max_l {
        let started = Instant::now();
        let words = count_z_words(l)?;
        let z = z_ll_via_words(l, true)?;
        println!("|Z({l})| = {words}, z_({l},{l}) = {z}  ({:.2?})", started.elapsed());
    }
    Ok(())
}
