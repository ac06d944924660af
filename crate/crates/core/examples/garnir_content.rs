//! Garnir content `Gc(a)` and the valuation test for `p | Gc(a)`.
//!
//! ```text
//! cargo run --example garnir_content -- 6,3,2
//! ```
//! With a weakly decreasing sequence argument, prints its content and the
//! verdict for small primes; otherwise shows a table of pairs.

use hook_specht::arith::{ell_p, garnir_content, nu_p, p_divides_gc};

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn main() -> hook_specht::Result<()> {
    if let Some(arg) = std::env::args().nth(1) {
        let a: Vec<u64> = arg.split(',').map(|s| s.trim().parse().expect("positive integers")).collect();
        let gc = garnir_content(&a)?;
        println!("Gc({arg}) = {gc}");
        for p in PRIMES {
            let pairs: Vec<String> = a
                .windows(2)
                .map(|w| Ok(format!("nu({})={} vs l({})={}", w[0], nu_p(p, w[0])?, w[1] - 1, ell_p(p, w[1] - 1)?)))
                .collect::<hook_specht::Result<_>>()?;
            println!("  p={p}: divides = {:<5}  [{}]", p_divides_gc(p, &a)?, pairs.join("; "));
        }
        return Ok(());
    }

    println!("Gc(a1, a2) for 1 <= a2 <= a1 <= 9  (0 means every field kills it)");
    print!("a1\\a2");
    for a2 in 1..=9 {
        print!("{a2:>6}");
    }
    println!();
    for a1 in 1..=9u64 {
        print!("{a1:>5}");
        for a2 in 1..=a1 {
            print!("{:>6}", garnir_content(&[a1, a2])?.to_string());
        }
        println!();
    }
    println!("\nprimes dividing Gc(a1, a2), by the valuation test:");
    for a1 in [4u64, 6, 8, 9] {
        for a2 in [2u64, 3, 4] {
            let ps: Vec<u64> = PRIMES.into_iter().filter(|&p| p_divides_gc(p, &[a1, a2]).unwrap()).collect();
            println!("  ({a1},{a2}): {ps:?}");
        }
    }
    Ok(())
}
