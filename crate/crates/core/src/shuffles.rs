//! Shuffles of an increasing residue segment with a decreasing one.
//!
//! `Sh(a, b)` is the set of permutations keeping `1..a` and `a+1..a+b` in
//! order. For a residue sequence `i` obtainable by shuffling `S^+` and `S^-`,
//! the shuffles producing `i` form a coset of the stabilizer `H(i)`, with a
//! unique element of minimal length.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{PermutationWord, QuiverParams, Residue};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// `S^+(i, a) = (i, i+1, ..., i+a-1)` or `S^-(k, b) = (k, k-1, ..., k-b+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SegmentSpec {
    pub start: Residue,
    pub length: usize,
    pub direction: Direction,
}

impl SegmentSpec {
    pub fn increasing(start: Residue, length: usize) -> Self {
        SegmentSpec { start, length, direction: Direction::Increasing }
    }

    pub fn decreasing(start: Residue, length: usize) -> Self {
        SegmentSpec { start, length, direction: Direction::Decreasing }
    }

    pub fn residues(&self, q: &QuiverParams) -> Vec<Residue> {
        let step = match self.direction {
            Direction::Increasing => 1,
            Direction::Decreasing => -1,
        };
        (0..self.length as i64).map(|t| q.shift(self.start, step * t)).collect()
    }
}

/// All of `Sh(a, b)`, ordered by the positions taken by the first block.
pub fn shuffle_reps(a: usize, b: usize) -> Vec<PermutationWord> {
    let n = a + b;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(a);
    fn go(start: usize, n: usize, a: usize, chosen: &mut Vec<usize>, out: &mut Vec<PermutationWord>) {
        if chosen.len() == a {
            let rest = (1..=n).filter(|p| !chosen.contains(p));
            let targets: Vec<usize> = chosen.iter().copied().chain(rest).collect();
            out.push(PermutationWord::new(targets).expect("shuffle is a permutation"));
            return;
        }
        for p in start..=n {
            chosen.push(p);
            go(p + 1, n, a, chosen, out);
            chosen.pop();
        }
    }
    go(1, n, a, &mut chosen, &mut out);
    out
}

/// The minimal shuffle `sigma_i` together with generators of `H(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleWitness {
    pub weight: Vec<Residue>,
    pub minimal: PermutationWord,
    /// Indices `m` with `i_m = i_{m+1}`; the `s_m` commute pairwise.
    pub stabilizer_generators: Vec<usize>,
}

impl ShuffleWitness {
    /// `{ h sigma_i : h in H(i) }`, one element per subset of generators.
    pub fn coset(&self) -> Vec<PermutationWord> {
        let d = self.minimal.degree();
        let g = &self.stabilizer_generators;
        (0u64..1 << g.len())
            .map(|mask| {
                let word: Vec<usize> =
                    g.iter().enumerate().filter(|(bit, _)| mask >> bit & 1 == 1).map(|(_, &m)| m).collect();
                PermutationWord::from_word(d, &word)
                    .expect("stabilizer generator in range")
                    .compose(&self.minimal)
            })
            .collect()
    }
}

/// Find the shortest `sigma` in `Sh(a, b)` with `sigma . (S^+ S^-) = target`.
///
/// Returns `Ok(None)` when `target` is not a shuffle of the two segments.
pub fn minimal_shuffle(
    target: &[Residue],
    plus: SegmentSpec,
    minus: SegmentSpec,
    q: &QuiverParams,
) -> Result<Option<ShuffleWitness>> {
    if plus.direction != Direction::Increasing {
        return Err(Error::SegmentDirection("first segment must be increasing"));
    }
    if minus.direction != Direction::Decreasing {
        return Err(Error::SegmentDirection("second segment must be decreasing"));
    }
    let (a, b) = (plus.length, minus.length);
    if a + b != target.len() {
        return Err(Error::LengthMismatch { expected: a + b, got: target.len() });
    }
    let arm = plus.residues(q);
    let leg = minus.residues(q);

    // targets[p] = sigma(p + 1); arm letters occupy p < a
    let mut targets = vec![0; a + b];
    let (mut ra, mut rb, mut n) = (a, b, a + b);
    while n > 0 {
        let last = target[n - 1];
        let arm_fits = ra > 0 && arm[ra - 1] == last;
        let leg_fits = rb > 0 && leg[rb - 1] == last;
        match (arm_fits, leg_fits) {
            (false, false) => return Ok(None),
            (true, false) => {
                targets[ra - 1] = n;
                ra -= 1;
                n -= 1;
            }
            (false, true) => {
                targets[a + rb - 1] = n;
                rb -= 1;
                n -= 1;
            }
            (true, true) => {
                // both segments end in `last`; n >= 2 since a, b >= 1
                let prev = target[n - 2];
                if prev == q.shift(last, -1) {
                    targets[ra - 1] = n;
                    ra -= 1;
                    n -= 1;
                } else if prev == q.shift(last, 1) {
                    targets[a + rb - 1] = n;
                    rb -= 1;
                    n -= 1;
                } else if prev == last {
                    targets[ra - 1] = n - 1;
                    targets[a + rb - 1] = n;
                    ra -= 1;
                    rb -= 1;
                    n -= 2;
                } else {
                    return Ok(None);
                }
            }
        }
    }
    let minimal = PermutationWord::new(targets).expect("shuffle assignment is a bijection");
    let stabilizer_generators = (1..target.len()).filter(|&m| target[m - 1] == target[m]).collect();
    Ok(Some(ShuffleWitness { weight: target.to_vec(), minimal, stabilizer_generators }))
}
