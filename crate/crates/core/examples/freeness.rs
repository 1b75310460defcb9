//! Freeness checks with witnesses: a sub-cube witness is a star vector, a
//! cycle witness a vertex list with its star list.
//!
//! cargo run --release --example freeness

use cubeturan::constructions::{conder_graph, even_odd_layer_graph};
use cubeturan::verification::{verify_free, Witness};
use cubeturan::Pattern;

fn main() -> cubeturan::Result<()> {
    let graphs = [
        ("conder n=5", conder_graph(5)?),
        ("even layers n=5", even_odd_layer_graph(5, 0)?),
    ];
    for (name, g) in &graphs {
        for p in ["c4", "c6", "c8", "q2", "q3"] {
            let pattern: Pattern = p.parse()?;
            let v = verify_free(g, pattern)?;
            let shown = match &v.witness {
                None => "free".to_string(),
                Some(Witness::SubCube(sv)) => format!("contains {sv}"),
                Some(Witness::Cycle(c)) => {
                    let vs: Vec<String> = c.vertices().iter().map(|v| v.to_string()).collect();
                    format!("contains {} (stars {:?})", vs.join(" "), c.star_list())
                }
            };
            println!("{name:<16} {p:<3} {shown}  [{} checked]", v.checked_count);
        }
    }
    Ok(())
}
