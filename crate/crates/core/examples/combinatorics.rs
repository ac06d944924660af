//! Partitions, residues, tableaux and their degrees.
//!
//! ```text
//! cargo run --example combinatorics -- 4,2,1 3
//! ```
//! Arguments: a partition (default `4,2,1`) and `e` (default 3).

use hook_specht::combinatorics::{content, standard_tableaux, Partition, PermutationWord, QuiverParams, Tableau};

fn main() -> hook_specht::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mu: Partition = args.first().map_or("4,2,1", String::as_str).parse()?;
    let e: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let q = QuiverParams::new(e)?;

    println!("mu = ({mu}), size {}, conjugate ({})", mu.size(), mu.conjugate());
    println!("removable {:?}", mu.removable_nodes().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("addable   {:?}", mu.addable_nodes().iter().map(ToString::to_string).collect::<Vec<_>>());

    println!("\nresidues (col - row mod {e}):");
    for (r, &len) in mu.parts().iter().enumerate() {
        let row: Vec<String> = (1..=len).map(|c| q.residue(hook_specht::combinatorics::Node::new(r + 1, c)).to_string()).collect();
        println!("  {}", row.join(" "));
    }
    let c = content(&mu, &q);
    println!("content: {}", (0..e).map(|i| format!("{}*a{i}", c.multiplicity(q.res(i as i64)))).collect::<Vec<_>>().join(" + "));

    let t = Tableau::initial(&mu);
    println!("\nT^mu = {t}, residue sequence ({}), degree {}", seq(&t.residue_sequence(&q)), t.degree(&q)?);

    let all = standard_tableaux(&mu);
    println!("{} standard tableaux; the first few with w^T and degree:", all.len());
    for t in all.iter().take(6) {
        let w = t.word();
        println!("  {:<24} w^T = {:<18} length {:>2}  deg {:>2}", t.to_string(), w.to_string(), w.length(), t.degree(&q)?);
    }

    let w = PermutationWord::new(vec![3, 1, 4, 2])?;
    println!("\n{:?} has reduced word {w}, inverse {:?}, 321-avoiding: {}", w.targets(), w.inverse().targets(), w.avoids_321());
    println!("acting on places: {:?} -> {:?}", ['a', 'b', 'c', 'd'], w.act_on(&['a', 'b', 'c', 'd']));
    Ok(())
}

fn seq<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
