//! Cross-check both Hom computations on every instance up to a size bound,
//! then print the summary and any nonzero instances of one size.
//!
//! ```text
//! cargo run --release --example sweep -- 9
//! ```
//! Argument: the largest `d` (default 8).

use hook_specht::sweep::{run_sweep, SweepConfig};

fn main() -> hook_specht::Result<()> {
    let dmax = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let report = run_sweep(&SweepConfig::new(dmax, vec![3, 4, 5], vec![0, 2, 3, 5]))?;
    let s = &report.summary;
    println!(
        "{} instances, {} nonzero, {} disagreements, max dimension {}, Garnir closed forms {}/{} ok",
        s.instances,
        s.nonzero,
        s.disagreements,
        s.max_dimension,
        s.garnir_checked - s.garnir_failures,
        s.garnir_checked
    );
    println!("\nnonzero instances at d = {dmax}, e = 3:");
    for r in report.rows.iter().filter(|r| r.d == dmax && r.e == 3 && r.bruteforce_dimension > 0) {
        println!(
            "  ({}) -> ({})  char {}  case {}  Gc {}  degree {}",
            r.mu,
            r.lambda,
            r.char,
            r.case.map_or("-".into(), |c| c.to_string()),
            r.gc.as_deref().unwrap_or("-"),
            r.degree.map_or("-".into(), |x| x.to_string())
        );
    }
    for r in report.disagreements() {
        println!("DISAGREEMENT {r:?}");
    }
    Ok(())
}
