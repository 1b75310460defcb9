//! Sub-cube and cycle counts in `Q_n`: closed form against enumeration, then
//! closed form alone where enumeration is out of reach.
//!
//! cargo run --release --example counting -- [max_n]

use cubeturan::counting::{closed_form_report, count_report, ZTable};
use cubeturan::cube::Subgraph;
use cubeturan::Pattern;

fn main() -> cubeturan::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let patterns = ["q2", "q3", "c4", "c6", "c8"];
    let mut z = ZTable::default();

    println!("pattern  n  enumerated  closed form");
    for p in patterns {
        let pattern: Pattern = p.parse()?;
        for n in 3..=max_n {
            let cube = Subgraph::full_cube(n)?;
            let enumerated = count_report(&cube, pattern, &mut z)?;
            let closed = closed_form_report(n, pattern, &mut z)?;
            let mark = if enumerated.count == closed.count { "" } else { "  MISMATCH" };
            println!("{p:<8} {n}  {:<10}  {}{mark}", enumerated.count, closed.count);
        }
    }

    println!("\nclosed form only");
    for (n, p) in [(30, "c6"), (100, "q5"), (64, "c12")] {
        let r = closed_form_report(n, p.parse()?, &mut z)?;
        println!("N(Q_{n}, {p}) = {}", r.count);
    }
    Ok(())
}
