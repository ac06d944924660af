//! `Hom(S^mu, S^lambda)` for a hook `lambda`, by both methods.
//!
//! The brute-force path solves the Specht relations of `mu` inside `S^lambda`;
//! the classification matches `mu` against the three admissible shapes and
//! asks whether the field kills `Gc(a)`.
//!
//! ```text
//! cargo run --example hom_spaces -- 6,6 1 3
//! ```
//! Arguments: `mu`, `k`, `e`. Without arguments a few instances are shown.

use hook_specht::arith::CoefficientField;
use hook_specht::combinatorics::{Partition, QuiverParams};
use hook_specht::hom::{bruteforce_hom, classify_hom, conjugate_pair, target_tableau};
use hook_specht::hook::HookShape;

fn report(mu: &Partition, k: usize, e: usize) -> hook_specht::Result<()> {
    let shape = HookShape::new(mu.size(), k)?;
    let q = QuiverParams::new(e)?;
    let (lambda_c, mu_c) = conjugate_pair(mu, &shape.partition());
    println!("mu = ({mu}) -> lambda = {shape}, e = {e}; same as ({lambda_c}) -> ({mu_c}) after conjugating");
    if let Ok(t) = target_tableau(mu, shape) {
        println!("  target tableau {}, sigma = {}", t.tableau, t.word);
    }
    for c in [0u64, 2, 3, 5] {
        let field = CoefficientField::from_characteristic(c)?;
        let brute = bruteforce_hom(mu, shape, &q, field)?;
        let closed = classify_hom(mu, shape, &q, field)?;
        let shape_info = match (&closed.case, &closed.a) {
            (Some(case), Some(a)) => format!("case {case} a={a:?} m={} Gc={}", closed.m.unwrap_or(0), closed.gc.clone().unwrap_or_default()),
            _ => "no admissible shape".to_string(),
        };
        let degree = brute.degree.map_or(String::new(), |r| format!(" degree {r}"));
        println!(
            "  {field:<4} bruteforce dim {} (weight space {}), classified dim {}  [{shape_info}]{degree}",
            brute.dimension,
            brute.weight_space_dim.unwrap_or(0),
            closed.dimension
        );
    }
    Ok(())
}

fn main() -> hook_specht::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let Some(mu) = args.first() {
        let k = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(0);
        let e = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(3);
        return report(&mu.parse()?, k, e);
    }
    for (mu, k, e) in [("2,1", 0, 3), ("6,6", 1, 3), ("6,3", 1, 3), ("4,1,1", 1, 3), ("3,2,1", 2, 3), ("8,4", 1, 4)] {
        report(&mu.parse()?, k, e)?;
        println!();
    }
    let cert = classify_hom(&"2,1".parse()?, HookShape::new(3, 0)?, &QuiverParams::new(3)?, CoefficientField::from_characteristic(3)?)?;
    println!("certificate: {}", serde_json::to_string_pretty(&cert).expect("serializable"));
    Ok(())
}
