//! Formal words in the KLR generators `e(i)`, `y_r` and `psi_r`.
//!
//! A word is written as a product left to right and acts right to left, so the
//! last token is applied first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{PermutationWord, QuiverParams, Residue};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    Idempotent(Vec<Residue>),
    Dot(usize),
    Psi(usize),
}

impl Generator {
    /// Parse `e(0,1,2)`, `y3` or `psi2`.
    pub fn parse(token: &str, q: &QuiverParams) -> Result<Self> {
        let bad = || Error::MalformedToken(token.to_string());
        let t = token.trim();
        if let Some(inner) = t.strip_prefix("e(").and_then(|s| s.strip_suffix(')')) {
            let residues = inner
                .split(',')
                .map(|x| x.trim().parse::<i64>().map(|n| q.res(n)).map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Generator::Idempotent(residues));
        }
        if let Some(n) = t.strip_prefix("psi") {
            return n.parse().map(Generator::Psi).map_err(|_| bad());
        }
        if let Some(n) = t.strip_prefix('y') {
            return n.parse().map(Generator::Dot).map_err(|_| bad());
        }
        Err(bad())
    }

    /// Check indices against `d`.
    pub fn validate(&self, d: usize) -> Result<()> {
        match *self {
            Generator::Idempotent(ref j) if j.len() != d => Err(Error::LengthMismatch { expected: d, got: j.len() }),
            Generator::Dot(r) if r == 0 || r > d => Err(Error::GeneratorOutOfRange { index: r, d }),
            Generator::Psi(r) if r == 0 || r >= d => Err(Error::GeneratorOutOfRange { index: r, d }),
            _ => Ok(()),
        }
    }

    /// Degree of the generator applied to a vector of weight `i`.
    pub fn degree_on(&self, i: &[Residue], q: &QuiverParams) -> i64 {
        match *self {
            Generator::Idempotent(_) => 0,
            Generator::Dot(_) => 2,
            Generator::Psi(r) => -q.cartan(i[r - 1], i[r]),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Idempotent(j) => {
                let parts: Vec<String> = j.iter().map(|r| r.to_string()).collect();
                write!(f, "e({})", parts.join(","))
            }
            Generator::Dot(r) => write!(f, "y{r}"),
            Generator::Psi(r) => write!(f, "psi{r}"),
        }
    }
}

pub type Word = Vec<Generator>;

/// `psi_{r_1} ... psi_{r_a}` for the canonical reduced word of `w`.
pub fn psi_word(w: &PermutationWord) -> Word {
    w.reduced_word().iter().map(|&r| Generator::Psi(r)).collect()
}

pub fn parse_word(text: &str, q: &QuiverParams) -> Result<Word> {
    split_tokens(text).iter().map(|t| Generator::parse(t, q)).collect()
}

// split on whitespace outside parentheses
fn split_tokens(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if ch.is_whitespace() && depth == 0 {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

pub fn format_word(word: &[Generator]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
}

/// Integer combination of words.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FormalSum {
    pub terms: Vec<(i64, Word)>,
}

impl FormalSum {
    pub fn word(word: Word) -> Self {
        FormalSum { terms: vec![(1, word)] }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self * other`, distributing over both sums.
    pub fn times(&self, other: &FormalSum) -> FormalSum {
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                let mut w = u.clone();
                w.extend(v.iter().cloned());
                terms.push((a * b, w));
            }
        }
        FormalSum { terms }
    }

    /// Merge equal words and drop zero coefficients; terms end up sorted.
    pub fn normalized(&self) -> FormalSum {
        let mut merged: std::collections::BTreeMap<Word, i64> = Default::default();
        for (c, w) in &self.terms {
            *merged.entry(w.clone()).or_default() += c;
        }
        FormalSum { terms: merged.into_iter().filter(|(_, c)| *c != 0).map(|(w, c)| (c, w)).collect() }
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, w)| match c {
                1 => format_word(w),
                c => format!("{c}*{}", format_word(w)),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn token_round_trip() {
        let q = QuiverParams::new(3).unwrap();
        let w = parse_word("psi2 y1 e(0, 2,1)", &q).unwrap();
        assert_eq!(w, vec![Generator::Psi(2), Generator::Dot(1), Generator::Idempotent(vec![q.res(0), q.res(2), q.res(1)])]);
        assert_eq!(format_word(&w), "psi2 y1 e(0,2,1)");
        assert_eq!(parse_word(&format_word(&w), &q).unwrap(), w);
        assert!(matches!(Generator::parse("z4", &q), Err(Error::MalformedToken(_))));
        assert!(matches!(Generator::parse("psi", &q), Err(Error::MalformedToken(_))));
    }

    #[test]
    fn validation() {
        assert!(Generator::Psi(3).validate(3).is_err());
        assert!(Generator::Dot(3).validate(3).is_ok());
        assert!(Generator::Dot(0).validate(3).is_err());
    }

    #[test]
    fn distributing_sums() {
        let one_plus_psi = FormalSum { terms: vec![(1, vec![Generator::Psi(1)]), (1, vec![])] };
        let sq = one_plus_psi.times(&one_plus_psi).normalized();
        assert_eq!(sq.len(), 3);
        assert!(sq.terms.contains(&(2, vec![Generator::Psi(1)])));
    }
}
