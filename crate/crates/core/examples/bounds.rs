//! Every theorem's bounds at sample parameters, then two finite-n sandwiches.
//!
//! cargo run --release --example bounds

use cubeturan::bounds::{bound_sandwich_report, eval_sides, BoundParams, Measured, TheoremId};
use cubeturan::counting::ZTable;
use cubeturan::search::{exact_extremal, SearchOptions};
use cubeturan::Pattern;

fn main() -> cubeturan::Result<()> {
    let mut z = ZTable::default();
    let samples = [
        (TheoremId::T1, BoundParams { k: Some(10), l: Some(2), ..Default::default() }),
        (TheoremId::T2, BoundParams { n: Some(20), ..Default::default() }),
        (TheoremId::T3, BoundParams { l: Some(5), ..Default::default() }),
        (TheoremId::T4, BoundParams { n: Some(20), k: Some(6), l: Some(2) }),
        (TheoremId::T5, BoundParams { k: Some(8), l: Some(4), ..Default::default() }),
        (TheoremId::T6, BoundParams::default()),
        (TheoremId::T7, BoundParams { n: Some(12), k: Some(4), l: Some(6) }),
        (TheoremId::A6, BoundParams { k: Some(30), l: Some(3), ..Default::default() }),
        (TheoremId::A7, BoundParams { l: Some(7), ..Default::default() }),
    ];
    for (t, params) in samples {
        for b in eval_sides(t, &params, &mut z)? {
            let value = match &b.value {
                Some(v) => format!("{v}"),
                None => format!("symbolic in {}", b.unresolved.join(", ")),
            };
            let flag = if b.asymptotic { "asymptotic" } else { "exact" };
            println!("{t} {:<5?} {:<44} {value}  ({flag})", b.side, b.expression);
        }
    }

    println!();
    let exact = exact_extremal(3, Pattern::Cycle(6), Pattern::Cycle(4), &SearchOptions::default())?;
    let params = BoundParams { n: Some(3), ..Default::default() };
    let report = bound_sandwich_report(TheoremId::T6, &params, &mut z, Some(Measured::from_search(&exact)));
    print!("{}", report.render());

    let exact = exact_extremal(4, Pattern::Cycle(4), Pattern::Cycle(6), &SearchOptions::default())?;
    let params = BoundParams { n: Some(4), ..Default::default() };
    let report = bound_sandwich_report(TheoremId::T2, &params, &mut z, Some(Measured::from_search(&exact)));
    print!("{}", report.render());
    Ok(())
}
