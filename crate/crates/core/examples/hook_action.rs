//! The hook Specht module `S^(d-k, 1^k)`: its shuffle basis, the action of
//! `e(i)`, `y_r`, `psi_r`, extreme vectors and the KLR relation check.
//!
//! ```text
//! cargo run --example hook_action -- 5 2 3 "psi2 psi3 y4"
//! ```
//! Arguments: `d`, `k`, `e`, and a word applied to every basis vector.

use std::collections::BTreeSet;

use hook_specht::arith::{PrimeField, Rationals};
use hook_specht::combinatorics::QuiverParams;
use hook_specht::hook::relations::verify_relations;
use hook_specht::hook::{HookModule, HookShape, HookVector};
use hook_specht::klr::{format_word, parse_word};

fn main() -> hook_specht::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, default: usize| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(default);
    let (d, k, e) = (num(0, 5), num(1, 2), num(2, 3));
    let shape = HookShape::new(d, k)?;
    let q = QuiverParams::new(e)?;
    let module = HookModule::new(shape, q);
    let word = parse_word(args.get(3).map_or("psi2 psi3 y4", String::as_str), &q)?;

    println!("S^{shape} at e = {e}: dimension {}", module.dim());
    println!("{:<16} {:<12} {:>4}   {} [sigma]", "sigma", "weight", "deg", format_word(&word));
    for b in module.basis() {
        let v = HookVector::basis_vector(shape, Rationals, b.key);
        let image = module.act_word(&word, &v)?;
        let weight: String = b.weight.iter().map(|r| r.to_string()).collect();
        println!("{:<16} {weight:<12} {:>4}   {image}", format!("{:?}", b.sigma.targets()), b.degree);
    }

    println!("\nextreme vectors (killed by every y_r), one per weight space:");
    let weights: BTreeSet<_> = module.basis().into_iter().map(|b| b.weight).collect();
    for i in &weights {
        let ext = module.extreme_vector(i).expect("nonzero weight space");
        let space = module.weight_space(i);
        let w: String = i.iter().map(|r| r.to_string()).collect();
        println!("  e({w}): {} basis vectors, extreme {:?} of degree {}", space.len(), ext.sigma.targets(), ext.degree);
    }

    println!("\nrelation check over F_3:");
    print!("{}", verify_relations(&module, PrimeField::new(3)?));
    Ok(())
}
