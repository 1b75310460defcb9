//! The explicit `2l`-cycle placed in each selected `Q_l`, and the mod-3
//! selection sizes against their lower bound.
//!
//! cargo run --release --example conder_cycles -- [n] [l]

use cubeturan::constructions::{
    conder_cycle_family, conder_cycle_pattern, mod3_selection_count, mod3_selection_lower_bound,
    Mod3Rule,
};
use cubeturan::counting::count_cycles;

fn main() -> cubeturan::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().ok());
    let n = args.next().flatten().unwrap_or(9);
    let l = args.next().flatten().unwrap_or(7);

    for len in 4..=9 {
        let stars: Vec<String> = conder_cycle_pattern(len)?
            .iter()
            .map(|m| format!("{{{}}}", (0..len).filter(|p| m >> p & 1 == 1).map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        println!("l={len}: {}", stars.join(" "));
    }

    let family = conder_cycle_family(n, l)?;
    let union = &family.union_graph;
    println!(
        "\nn={n} l={l}: {} selected Q_{l}, union has {} edges and {} C_6",
        family.members.len(),
        union.len(),
        count_cycles(union, 6)?
    );
    if let Some((q, c)) = family.members.first() {
        println!("first: {q} with star list {:?}", c.star_list());
    }

    println!("\n n  l  selected   bound");
    for (n, l) in [(9, 4), (12, 4), (16, 4), (11, 5), (14, 6), (20, 7)] {
        let count = mod3_selection_count(n, l, Mod3Rule::Standard)?;
        let bound = mod3_selection_lower_bound(n, l);
        println!("{n:>2} {l:>2}  {count:<10} {bound}");
    }
    Ok(())
}
