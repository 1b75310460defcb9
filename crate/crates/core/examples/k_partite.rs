//! k-partite representations of small edge sets.
//!
//! cargo run --release --example k_partite

use cubeturan::cube::StarVector;
use cubeturan::verification::has_k_partite_representation;

fn main() -> cubeturan::Result<()> {
    let families: [&[&str]; 4] = [
        &["1*0", "*10"],
        &["*10", "*01"],
        &["*11", "1*1", "11*"],
        &["*1100", "0*110", "00*11", "1*011"],
    ];
    for edges in families {
        let h: Vec<StarVector> = edges.iter().map(|e| e.parse()).collect::<Result<_, _>>()?;
        for k in 1..=3 {
            let rep = has_k_partite_representation(&h, k)?;
            let shown = rep.sigma.map_or("none".to_string(), |s| format!("{s:?}"));
            println!("{:<28} k={k}  sigma = {shown}", edges.join(" "));
        }
    }
    Ok(())
}
