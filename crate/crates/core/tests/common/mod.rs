//! Independent reference implementations used by the integration tests.
//!
//! Nothing here calls the library's matching, arithmetic or shuffle code; the
//! families below are generated straight from their parametrized statements.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type Parts = Vec<usize>;

/// All partitions of `d`, largest parts first.
pub fn partitions(d: usize) -> Vec<Parts> {
    fn go(rest: usize, max: usize, cur: &mut Parts, out: &mut Vec<Parts>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

pub fn is_partition(parts: &[usize]) -> bool {
    parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1])
}

pub fn nu(p: u64, mut n: u64) -> u32 {
    assert!(n > 0);
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Least `i` with `p^i > n`; `None` stands for negative infinity at `n = 0`.
pub fn ell(p: u64, n: u64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    (0..).find(|&i| p.pow(i) > n)
}

/// `nu_p(a_x) >= l_p(a_{x+1} - 1)` for every consecutive pair.
pub fn valuation_condition(p: u64, a: &[u64]) -> bool {
    a.windows(2).all(|w| ell(p, w[1] - 1).is_none_or(|l| nu(p, w[0]) >= l))
}

/// For each `a <= max`, the least `f >= 1` with `C(a, f)` not divisible by `p`,
/// from Pascal's triangle mod `p`. `C(a, a) = 1`, so the answer is at most `a`.
pub fn first_nonzero_binomial(p: u64, max: usize) -> Vec<usize> {
    let mut row = vec![1u64];
    let mut out = vec![0usize];
    for a in 1..=max {
        let mut next = vec![1u64; a + 1];
        for f in 1..a {
            next[f] = (row[f - 1] + row[f]) % p;
        }
        out.push((1..=a).find(|&f| next[f] != 0).expect("C(a,a) = 1"));
        row = next;
    }
    out
}

/// Brute-force `p | gcd{ C(a_x, f) : 1 <= f < a_{x+1} }`, using a table from
/// [`first_nonzero_binomial`].
pub fn p_divides_gc_direct(first_nonzero: &[usize], a: &[u64]) -> bool {
    a.windows(2).all(|w| (w[1] as usize) - 1 < first_nonzero[w[0] as usize])
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Trivial-module family: `mu = (a_1 p - 1, ..., a_{N-1} p - 1, a_N p - 1 - m)`
/// with the valuation condition, mapped to `r = N - ceil((N + m) / p)`.
pub fn trivial_module_family(d: usize, p: usize) -> BTreeMap<Parts, i64> {
    let mut out = BTreeMap::new();
    for mu in partitions(d) {
        let n = mu.len();
        if !mu[..n - 1].iter().all(|&x| (x + 1) % p == 0) {
            continue;
        }
        let mut a: Vec<u64> = mu[..n - 1].iter().map(|&x| ((x + 1) / p) as u64).collect();
        let last = ceil_div(mu[n - 1] + 1, p);
        let m = last * p - 1 - mu[n - 1];
        a.push(last as u64);
        if valuation_condition(p as u64, &a) {
            out.insert(mu, n as i64 - ceil_div(n + m, p) as i64);
        }
    }
    out
}

/// Standard-module family for `lambda = (d-1, 1)`, including `mu = lambda`.
pub fn standard_module_family(d: usize, p: usize) -> BTreeMap<Parts, i64> {
    let mut out = BTreeMap::new();
    let lambda = vec![d - 1, 1];
    out.insert(lambda.clone(), 0);
    for mu in partitions(d) {
        if mu == lambda {
            continue;
        }
        let n = mu.len();
        // (a_1 p, a_2 p - m)
        if n == 2 && mu[0] % p == 0 {
            let a2 = ceil_div(mu[1], p);
            let a = [(mu[0] / p) as u64, a2 as u64];
            if valuation_condition(p as u64, &a) {
                out.insert(mu.clone(), if (d - 1).is_multiple_of(p) { 0 } else { 1 });
            }
        }
        if d.is_multiple_of(p) && d >= 3 && mu == vec![d - 2, 1, 1] {
            out.insert(mu.clone(), 1);
        }
        // (a_1 p, a_2 p - 1, ..., a_{N-1} p - 1, a_N p - 1 - m), N >= 3
        if n >= 3 && mu[0] % p == 0 && mu[1..n - 1].iter().all(|&x| (x + 1) % p == 0) {
            let mut a = vec![(mu[0] / p) as u64];
            a.extend(mu[1..n - 1].iter().map(|&x| ((x + 1) / p) as u64));
            let last = ceil_div(mu[n - 1] + 1, p);
            let m = last * p - 1 - mu[n - 1];
            a.push(last as u64);
            if valuation_condition(p as u64, &a) {
                let shift = if (d - 1).is_multiple_of(p) {
                    -1
                } else if d.is_multiple_of(p) {
                    1
                } else {
                    0
                };
                out.insert(mu.clone(), n as i64 - ceil_div(n + m, p) as i64 + shift);
            }
        }
    }
    out
}

/// The six characteristic-zero families with nonzero Hom into `(d-k, 1^k)`.
pub fn char_zero_family(d: usize, k: usize, e: usize) -> BTreeSet<Parts> {
    let mut out = BTreeSet::new();
    let mut keep = |mu: Parts| {
        if mu.iter().sum::<usize>() == d && is_partition(&mu) {
            out.insert(mu);
        }
    };
    let ones = |n: usize| vec![1usize; n];
    let rep = |x: usize, n: usize| vec![x; n];
    let cat = |parts: &[Parts]| parts.concat();

    keep(cat(&[vec![d - k], ones(k)]));
    if d.is_multiple_of(e) && d > k + 1 {
        keep(cat(&[vec![d - k - 1], ones(k + 1)]));
    }
    for a in 1..=d {
        for n in 0..=d {
            for m in 0..=e {
                if k == 0 && m < e {
                    let tail = if m > 0 { vec![m] } else { vec![] };
                    keep(cat(&[vec![a * e - 1], rep(e - 1, n), tail]));
                }
                if k >= 1 && n < k && (1..=e).contains(&m) {
                    keep(cat(&[vec![a * e], rep(e, n), vec![m], ones(k - n - 1)]));
                }
                if k >= 1 && n > k + 1 && (1..e).contains(&m) {
                    keep(cat(&[vec![a * e], rep(e, k - 1), rep(e - 1, n - k - 1), vec![m]]));
                }
                if k >= 2 && d.is_multiple_of(e) && n + 2 <= k && (1..=e).contains(&m) {
                    keep(cat(&[vec![a * e], rep(e, n), vec![m], ones(k - n)]));
                }
            }
        }
    }
    out
}

/// Place action: the letter in position `r` moves to position `sigma(r)`.
pub fn place_action<T: Clone>(sigma: &[usize], seq: &[T]) -> Vec<T> {
    let mut out = seq.to_vec();
    for (r, &t) in sigma.iter().enumerate() {
        out[t - 1] = seq[r].clone();
    }
    out
}

/// One-line notation of every shuffle of blocks of sizes `a` and `b`.
pub fn shuffles(a: usize, b: usize) -> Vec<Vec<usize>> {
    let n = a + b;
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != a {
            continue;
        }
        let first: Vec<usize> = (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
        let second: Vec<usize> = (1..=n).filter(|&i| mask & (1 << (i - 1)) == 0).collect();
        out.push([first, second].concat());
    }
    out
}

pub fn inversions(sigma: &[usize]) -> usize {
    let n = sigma.len();
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| sigma[i] > sigma[j]).count()
}

/// `s_m` applied after `sigma`, in one-line notation.
pub fn left_multiply_simple(m: usize, sigma: &[usize]) -> Vec<usize> {
    sigma
        .iter()
        .map(|&t| match t {
            t if t == m => m + 1,
            t if t == m + 1 => m,
            t => t,
        })
        .collect()
}

/// Rank over `F_p` of an integer matrix, by plain elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<i64>>, p: i64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let inv = |a: i64| (1..p).find(|&b| a * b % p == 1).expect("p prime");
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, piv);
        let s = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = *x * s % p;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Spot checks of the oracles against hand-computed values.
pub fn self_check() {
    assert_eq!(partitions(5).len(), 7);
    assert_eq!(ell(3, 0), None);
    assert_eq!(ell(3, 2), Some(1));
    assert_eq!(ell(3, 3), Some(2));
    assert_eq!(first_nonzero_binomial(2, 4)[4], 4);
    assert_eq!(first_nonzero_binomial(3, 6)[6], 3);
    assert!(trivial_module_family(3, 3).contains_key(&vec![2, 1]));
    assert_eq!(trivial_module_family(3, 3)[&vec![2, 1]], 1);
    assert!(char_zero_family(3, 0, 3).contains(&vec![2, 1]));
    assert_eq!(shuffles(2, 1).len(), 3);
    assert_eq!(place_action(&[1, 3, 2], &['a', 'b', 'c']), vec!['a', 'c', 'b']);
    assert_eq!(rank_mod_p(vec![vec![1, 2], vec![2, 4]], 5), 1);
}
