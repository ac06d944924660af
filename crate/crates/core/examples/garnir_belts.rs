//! Garnir belts, bricks and the relation generators of a Specht module.
//!
//! ```text
//! cargo run --example garnir_belts -- 6,3 3
//! ```
//! Arguments: a partition (default `6,3`) and `e` (default 3).

use hook_specht::combinatorics::{Partition, QuiverParams};
use hook_specht::presentation::{garnir_datum, garnir_nodes, relation_generators, specht_degree_shift, RelationKind};

fn main() -> hook_specht::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mu: Partition = args.first().map_or("6,3", String::as_str).parse()?;
    let e: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let q = QuiverParams::new(e)?;

    println!("mu = ({mu}), e = {e}, degree of T^mu = {}\n", specht_degree_shift(&mu, &q));
    for node in garnir_nodes(&mu) {
        let datum = garnir_datum(&mu, node, &q)?;
        println!("{}", datum.render(&q));
        println!("  g^A = {}\n", datum.garnir_element().normalized());
    }

    let gens = relation_generators(&mu, &q)?;
    let count = |kind| gens.iter().filter(|g| g.kind == kind).count();
    println!(
        "{} relation generators: {} idempotent, {} dots, {} row psi, {} Garnir",
        gens.len(),
        count(RelationKind::Idempotent),
        count(RelationKind::Dot),
        count(RelationKind::RowPsi),
        count(RelationKind::Garnir)
    );
    for g in gens.iter().take(8) {
        println!("  {:<24} {}", g.source, g.terms);
    }
    Ok(())
}
