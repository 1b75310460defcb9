//! Builds every named construction, checks each pattern it claims to avoid,
//! and writes the subgraph files with their sidecars.
//!
//! cargo run --release --example constructions -- [out_dir]

use std::path::PathBuf;

use cubeturan::constructions::{ConstructionKind, ConstructionSpec};
use cubeturan::verification::verify_free;

fn main() -> cubeturan::Result<()> {
    let out: Option<PathBuf> = std::env::args().nth(1).map(PathBuf::from);
    use ConstructionKind::*;
    let specs = [
        ConstructionSpec::new(LayerComplement).with("n", 6).with("k", 3).with("i", 1),
        ConstructionSpec::new(AksGraph).with("n", 7).with("k", 3).with("i", 1).with("j", 0),
        ConstructionSpec::new(AksAppendixGraph).with("n", 7).with("k", 4),
        ConstructionSpec::new(ParityQ2Packing).with("n", 8),
        ConstructionSpec::new(ConderGraph).with("n", 8),
        ConstructionSpec::new(Mod3QlSelection).with("n", 9).with("l", 4),
        ConstructionSpec::new(ConderCycleFamily).with("n", 9).with("l", 7),
        ConstructionSpec::new(DisjointQmPacking).with("n", 8).with("m", 3).with("l", 3),
        ConstructionSpec::new(LayerUnionMod).with("n", 6).with("k", 3).with("j", 0).with("complement", 1),
        ConstructionSpec::new(EvenOddLayers).with("n", 8).with("j", 1),
    ];
    for spec in specs {
        let c = spec.build()?;
        let mut verdicts = Vec::new();
        for &p in &c.claimed_free_of {
            let v = verify_free(&c.graph, p)?;
            verdicts.push(format!("{p}:{}", if v.free { "free" } else { "FAILS" }));
        }
        let params: Vec<String> = spec.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!(
            "{:<16} {:<24} {:>6} edges  {}",
            spec.kind.name(),
            params.join(" "),
            c.graph.len(),
            if verdicts.is_empty() { "(no freeness claim)".to_string() } else { verdicts.join(" ") }
        );
        if let Some(dir) = &out {
            c.save(dir.join(format!("{}.cube", spec.kind.name())))?;
        }
    }
    Ok(())
}
