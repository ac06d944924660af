//! Graded dimensions `q^r` of nonzero Hom spaces into the trivial module `(d)`
//! and the standard module `(d-1, 1)` at `e = p`.
//!
//! ```text
//! cargo run --example graded_degrees -- 3 12
//! ```
//! Arguments: the prime `p = e` (default 3) and the largest `d` (default 12).

use hook_specht::arith::CoefficientField;
use hook_specht::combinatorics::{Partition, QuiverParams};
use hook_specht::hom::{classify_hom, hom_graded_dimension};
use hook_specht::hook::HookShape;

fn main() -> hook_specht::Result<()> {
    let nums: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let p = *nums.first().unwrap_or(&3);
    let dmax = (*nums.get(1).unwrap_or(&12)).min(hook_specht::sweep::dmax_cap());
    let q = QuiverParams::new(p)?;
    let field = CoefficientField::from_characteristic(p as u64)?;

    for (k, name) in [(0, "trivial"), (1, "standard")] {
        println!("{name} module, p = e = {p}:");
        for d in (k + 1)..=dmax {
            let shape = HookShape::new(d, k)?;
            let mut hits = Vec::new();
            for mu in Partition::all(d) {
                let cert = classify_hom(&mu, shape, &q, field)?;
                if cert.dimension == 1 {
                    let r = hom_graded_dimension(&cert, &mu, shape, &q)?;
                    let case = cert.case.map_or(String::new(), |c| c.to_string());
                    hits.push(format!("({mu}) q^{r} [{case}]"));
                }
            }
            println!("  d={d:>2}: {}", hits.join("  "));
        }
        println!();
    }
    Ok(())
}
