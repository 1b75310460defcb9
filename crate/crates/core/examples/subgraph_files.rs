//! The text subgraph format: `cube v1 n=<n>` then one edge per line, sorted.
//!
//! cargo run --release --example subgraph_files

use cubeturan::constructions::parity_q2_packing;
use cubeturan::cube::Subgraph;

fn main() -> cubeturan::Result<()> {
    let g = parity_q2_packing(4)?.graph;
    let text = g.to_text();
    print!("{text}");
    let back = Subgraph::from_text(&text)?;
    println!("# round trip equal: {}", back == g);

    let shuffled = "cube v1 n=3\n# comment lines and blank lines are skipped\n\n1*1\n*00\n";
    println!("# parsed and re-emitted:\n{}", Subgraph::from_text(shuffled)?.to_text());
    for bad in ["cube v1 n=3\n*00\n*00\n", "cube v1 n=3\n**0\n", "cube v2 n=3\n"] {
        println!("# {:?} -> {}", bad, Subgraph::from_text(bad).unwrap_err());
    }
    Ok(())
}
