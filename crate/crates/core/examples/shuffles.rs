//! Minimal shuffles of an increasing and a decreasing residue segment.
//!
//! For every rearrangement `i` of `S^+(1, a) S^-(-1, b)` reachable by a
//! shuffle, prints the shortest shuffle `sigma_i` and the coset `H(i) sigma_i`.
//!
//! ```text
//! cargo run --example shuffles -- 3 2 3
//! ```
//! Arguments: `a`, `b`, `e` (defaults 3, 2, 3).

use std::collections::BTreeMap;

use hook_specht::combinatorics::QuiverParams;
use hook_specht::shuffles::{minimal_shuffle, shuffle_reps, SegmentSpec};

fn main() -> hook_specht::Result<()> {
    let nums: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (a, b, e) = (*nums.first().unwrap_or(&3), *nums.get(1).unwrap_or(&2), *nums.get(2).unwrap_or(&3));
    let q = QuiverParams::new(e)?;
    let plus = SegmentSpec::increasing(q.res(1), a);
    let minus = SegmentSpec::decreasing(q.res(-1), b);
    let word = [plus.residues(&q), minus.residues(&q)].concat();
    let show = |v: &[hook_specht::combinatorics::Residue]| v.iter().map(|r| r.to_string()).collect::<String>();
    println!("S^+ S^- = {} (e = {e}), |Sh({a},{b})| = {}", show(&word), shuffle_reps(a, b).len());

    let mut classes: BTreeMap<String, usize> = BTreeMap::new();
    for sigma in shuffle_reps(a, b) {
        *classes.entry(show(&sigma.act_on(&word))).or_default() += 1;
    }
    for sigma in shuffle_reps(a, b) {
        let i = sigma.act_on(&word);
        let key = show(&i);
        let Some(count) = classes.remove(&key) else { continue };
        let w = minimal_shuffle(&i, plus, minus, &q)?.expect("i is a shuffle");
        let coset: Vec<String> = w.coset().iter().map(ToString::to_string).collect();
        println!(
            "i = {key}  sigma_i = {:<14} H(i) = <{}>  coset {{{}}}  ({count} shuffles)",
            w.minimal.to_string(),
            w.stabilizer_generators.iter().map(|m| format!("s{m}")).collect::<Vec<_>>().join(","),
            coset.join(", ")
        );
    }

    let bogus = vec![q.res(0); a + b];
    println!("\nconstant sequence {}: {:?}", show(&bogus), minimal_shuffle(&bogus, plus, minus, &q)?.map(|w| w.minimal));
    Ok(())
}
