//! The hook Specht module `S^lambda`, `lambda = (d-k, 1^k)`, and the action of
//! the KLR generators on its shuffle basis.
//!
//! A basis element `[sigma]` is determined by its leg set `Leg(sigma)`, a subset
//! of `{2..d}` of size `k`; it is stored as a bitmask.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::Field;
use crate::combinatorics::{Adjacency, Partition, PermutationWord, QuiverParams, Residue, Tableau};
use crate::error::{Error, Result};
use crate::klr::{Generator, Word};
use crate::linalg::{kernel, Matrix};
use crate::shuffles::{minimal_shuffle, SegmentSpec};

pub mod relations;

/// Largest `d` representable by a leg bitmask.
pub const MAX_D: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HookShape {
    d: usize,
    k: usize,
}

impl HookShape {
    pub fn new(d: usize, k: usize) -> Result<Self> {
        if d == 0 || d > MAX_D || k >= d {
            return Err(Error::InvalidHook { d, k });
        }
        Ok(HookShape { d, k })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn arm_length(&self) -> usize {
        self.d - self.k
    }

    pub fn partition(&self) -> Partition {
        Partition::hook(self.d, self.k).expect("validated hook")
    }

    /// `i^lambda`.
    pub fn initial_weight(&self, q: &QuiverParams) -> Vec<Residue> {
        let mut w: Vec<Residue> = (0..self.arm_length() as i64).map(|c| q.res(c)).collect();
        w.extend((1..=self.k as i64).map(|j| q.res(-j)));
        w
    }

    /// Leg sets in increasing numeric order of their bitmasks.
    pub fn keys(&self) -> Vec<BasisKey> {
        let mut out = Vec::new();
        fn go(from: usize, d: usize, left: usize, mask: u64, out: &mut Vec<BasisKey>) {
            if left == 0 {
                out.push(BasisKey(mask));
                return;
            }
            for p in from..=d + 1 - left {
                go(p + 1, d, left - 1, mask | 1 << p, out);
            }
        }
        go(2, self.d, self.k, 0, &mut out);
        out.sort();
        out
    }

    /// The key of `[id]`: legs at `d-k+1..d`.
    pub fn identity_key(&self) -> BasisKey {
        BasisKey((self.arm_length() + 1..=self.d).fold(0, |m, p| m | 1 << p))
    }
}

impl fmt::Display for HookShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.d - self.k)?;
        for _ in 0..self.k {
            write!(f, ",1")?;
        }
        write!(f, ")")
    }
}

/// Bitmask of leg positions of a shuffle basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BasisKey(pub u64);

impl BasisKey {
    pub fn is_leg(self, p: usize) -> bool {
        p < 64 && self.0 >> p & 1 == 1
    }

    /// Key of `[s_j sigma]`; positions `j`, `j+1` must be one arm and one leg.
    fn swapped(self, j: usize) -> BasisKey {
        debug_assert_ne!(self.is_leg(j), self.is_leg(j + 1), "s_{j} would not give a shuffle");
        BasisKey(self.0 ^ (1 << j | 1 << (j + 1)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Strand {
    Corner,
    Arm,
    Leg,
    Outside,
}

/// A basis element of `S^lambda` with its bookkeeping data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookBasisElement {
    pub key: BasisKey,
    pub sigma: PermutationWord,
    pub weight: Vec<Residue>,
    pub arm: Vec<usize>,
    pub leg: Vec<usize>,
    pub degree: i64,
}

/// Prints `c[sigma]` terms with `sigma` in one-line notation, or `0`.
impl<F: Field> fmt::Display for HookVector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let d = self.shape.d;
        let one = self.field.one();
        let minus_one = self.field.neg(&one);
        for (n, (key, c)) in self.terms.iter().enumerate() {
            let sigma: Vec<String> = std::iter::once(1)
                .chain((2..=d).filter(|&p| !key.is_leg(p)))
                .chain((2..=d).filter(|&p| key.is_leg(p)))
                .map(|p| p.to_string())
                .collect();
            let sep = if n == 0 { "" } else { " + " };
            let coeff = if *c == one {
                String::new()
            } else if *c == minus_one {
                "-".to_string()
            } else {
                c.to_string()
            };
            write!(f, "{sep}{coeff}[{}]", sigma.join(","))?;
        }
        Ok(())
    }
}

/// Sparse vector in `S^lambda`; stored coefficients are nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookVector<F: Field> {
    shape: HookShape,
    field: F,
    terms: BTreeMap<BasisKey, F::Elem>,
}

impl<F: Field> HookVector<F> {
    pub fn zero(shape: HookShape, field: F) -> Self {
        HookVector { shape, field, terms: BTreeMap::new() }
    }

    pub fn basis_vector(shape: HookShape, field: F, key: BasisKey) -> Self {
        let one = field.one();
        let mut v = HookVector::zero(shape, field);
        v.terms.insert(key, one);
        v
    }

    pub fn shape(&self) -> HookShape {
        self.shape
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<BasisKey, F::Elem> {
        &self.terms
    }

    pub fn coefficient(&self, key: BasisKey) -> F::Elem {
        self.terms.get(&key).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: BasisKey, c: &F::Elem) {
        let f = &self.field;
        let sum = match self.terms.get(&key) {
            Some(old) => f.add(old, c),
            None => c.clone(),
        };
        if f.is_zero(&sum) {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn add_assign(&mut self, other: &HookVector<F>) {
        for (k, c) in &other.terms {
            self.add_term(*k, c);
        }
    }

    pub fn plus(&self, other: &HookVector<F>) -> HookVector<F> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &HookVector<F>) -> HookVector<F> {
        self.plus(&other.scaled(&self.field.from_i64(-1)))
    }

    pub fn scaled(&self, c: &F::Elem) -> HookVector<F> {
        let mut out = HookVector::zero(self.shape, self.field.clone());
        if self.field.is_zero(c) {
            return out;
        }
        for (k, x) in &self.terms {
            out.terms.insert(*k, self.field.mul(x, c));
        }
        out
    }

    /// If all terms share one key, return it and its coefficient.
    pub fn as_multiple_of_basis(&self) -> Option<(BasisKey, &F::Elem)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(k, c)| (*k, c))
    }
}

/// `S^lambda` over the quiver fixed by `q`: weights, degrees and the action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HookModule {
    shape: HookShape,
    q: QuiverParams,
}

impl HookModule {
    pub fn new(shape: HookShape, q: QuiverParams) -> Self {
        HookModule { shape, q }
    }

    pub fn shape(&self) -> HookShape {
        self.shape
    }

    pub fn quiver(&self) -> QuiverParams {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.shape.keys().len()
    }

    fn strand(&self, key: BasisKey, p: usize) -> Strand {
        if p == 0 || p > self.shape.d {
            Strand::Outside
        } else if p == 1 {
            Strand::Corner
        } else if key.is_leg(p) {
            Strand::Leg
        } else {
            Strand::Arm
        }
    }

    /// `i_sigma`: arm positions read `1, 2, ...`, leg positions read `-1, -2, ...`.
    pub fn weight(&self, key: BasisKey) -> Vec<Residue> {
        let mut out = Vec::with_capacity(self.shape.d);
        out.push(self.q.res(0));
        let (mut arm, mut leg) = (0i64, 0i64);
        for p in 2..=self.shape.d {
            if key.is_leg(p) {
                leg += 1;
                out.push(self.q.res(-leg));
            } else {
                arm += 1;
                out.push(self.q.res(arm));
            }
        }
        out
    }

    pub fn sigma(&self, key: BasisKey) -> PermutationWord {
        let d = self.shape.d;
        let mut targets = vec![1];
        targets.extend((2..=d).filter(|&p| !key.is_leg(p)));
        targets.extend((2..=d).filter(|&p| key.is_leg(p)));
        PermutationWord::new(targets).expect("shuffle is a permutation")
    }

    /// Key of a permutation, if it lies in `Sh^lambda`.
    pub fn key_of(&self, sigma: &PermutationWord) -> Option<BasisKey> {
        let d = self.shape.d;
        let t = sigma.targets();
        let a = self.shape.arm_length();
        let ok = t.len() == d && t[0] == 1 && t[1..a].windows(2).all(|w| w[0] < w[1]) && t[a..].windows(2).all(|w| w[0] < w[1]);
        ok.then(|| BasisKey(t[a..].iter().fold(0, |m, &p| m | 1 << p)))
    }

    /// `sigma T^lambda`.
    pub fn tableau(&self, key: BasisKey) -> Tableau {
        let d = self.shape.d;
        let mut rows = vec![std::iter::once(1).chain((2..=d).filter(|&p| !key.is_leg(p))).collect::<Vec<_>>()];
        rows.extend((2..=d).filter(|&p| key.is_leg(p)).map(|p| vec![p]));
        Tableau::new(rows).expect("hook tableau")
    }

    pub fn degree(&self, key: BasisKey) -> i64 {
        self.tableau(key).degree(&self.q).expect("sigma T^lambda is standard")
    }

    pub fn element(&self, key: BasisKey) -> HookBasisElement {
        let d = self.shape.d;
        HookBasisElement {
            key,
            sigma: self.sigma(key),
            weight: self.weight(key),
            arm: (2..=d).filter(|&p| !key.is_leg(p)).collect(),
            leg: (2..=d).filter(|&p| key.is_leg(p)).collect(),
            degree: self.degree(key),
        }
    }

    pub fn basis(&self) -> Vec<HookBasisElement> {
        self.shape.keys().into_iter().map(|k| self.element(k)).collect()
    }

    /// Keys whose weight is `i`, in key order.
    pub fn weight_space(&self, i: &[Residue]) -> Vec<BasisKey> {
        self.shape.keys().into_iter().filter(|&k| self.weight(k) == i).collect()
    }

    /// Weight of a nonzero vector whose terms all share one weight.
    pub fn weight_of<F: Field>(&self, v: &HookVector<F>) -> Option<Vec<Residue>> {
        let mut weights = v.terms.keys().map(|&k| self.weight(k));
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// `y_r [sigma]` as a signed basis element.
    pub fn dot_on_basis(&self, r: usize, key: BasisKey) -> Option<(bool, BasisKey)> {
        let i = self.weight(key);
        let at = |p: usize| i[p - 1];
        let s = |p| self.strand(key, p);
        if r < self.shape.d && s(r) == Strand::Leg && s(r + 1) == Strand::Arm && at(r) == at(r + 1) {
            return Some((true, key.swapped(r)));
        }
        if r >= 2 && s(r - 1) == Strand::Leg && s(r) == Strand::Arm && at(r - 1) == at(r) {
            return Some((false, key.swapped(r - 1)));
        }
        None
    }

    /// `psi_r [sigma]` as a signed basis element.
    pub fn psi_on_basis(&self, r: usize, key: BasisKey) -> Option<(bool, BasisKey)> {
        if r == 1 {
            return None;
        }
        let i = self.weight(key);
        let at = |p: usize| i.get(p.wrapping_sub(1)).copied();
        let s = |p| self.strand(key, p);
        let (ir, ir1) = (i[r - 1], i[r]);
        let adj = self.q.adjacency(ir, ir1);
        use Strand::{Arm, Leg};
        let mut hits: Vec<(bool, BasisKey)> = Vec::with_capacity(1);
        if (s(r) == Arm && s(r + 1) == Leg) || adj == Adjacency::Unlinked {
            hits.push((false, key.swapped(r)));
        }
        if s(r) == Leg && s(r + 1) == Arm && s(r + 2) == Arm && adj == Adjacency::Arrow {
            hits.push((false, key.swapped(r).swapped(r + 1)));
        }
        if s(r - 1) == Leg && s(r) == Leg && s(r + 1) == Arm && adj == Adjacency::Reverse {
            hits.push((true, key.swapped(r).swapped(r - 1)));
        }
        if s(r - 1) == Leg && s(r) == Arm && s(r + 1) == Arm && at(r - 1) == Some(ir) {
            hits.push((false, key.swapped(r - 1).swapped(r)));
        }
        if s(r) == Leg && s(r + 1) == Leg && s(r + 2) == Arm && at(r + 2) == Some(ir1) {
            hits.push((true, key.swapped(r + 1).swapped(r)));
        }
        assert!(hits.len() <= 1, "psi_{r} case table overlaps on {key:?}");
        hits.pop()
    }

    pub fn act_e<F: Field>(&self, j: &[Residue], v: &HookVector<F>) -> HookVector<F> {
        let mut out = HookVector::zero(v.shape, v.field.clone());
        for (k, c) in &v.terms {
            if self.weight(*k) == j {
                out.terms.insert(*k, c.clone());
            }
        }
        out
    }

    fn act_signed<F: Field>(
        &self,
        v: &HookVector<F>,
        on_basis: impl Fn(BasisKey) -> Option<(bool, BasisKey)>,
    ) -> HookVector<F> {
        let f = &v.field;
        let mut out = HookVector::zero(v.shape, f.clone());
        for (k, c) in &v.terms {
            if let Some((neg, target)) = on_basis(*k) {
                let c = if neg { f.neg(c) } else { c.clone() };
                out.add_term(target, &c);
            }
        }
        out
    }

    pub fn act_y<F: Field>(&self, r: usize, v: &HookVector<F>) -> Result<HookVector<F>> {
        Generator::Dot(r).validate(self.shape.d)?;
        Ok(self.act_signed(v, |k| self.dot_on_basis(r, k)))
    }

    pub fn act_psi<F: Field>(&self, r: usize, v: &HookVector<F>) -> Result<HookVector<F>> {
        Generator::Psi(r).validate(self.shape.d)?;
        Ok(self.act_signed(v, |k| self.psi_on_basis(r, k)))
    }

    pub fn act_generator<F: Field>(&self, g: &Generator, v: &HookVector<F>) -> Result<HookVector<F>> {
        g.validate(self.shape.d)?;
        Ok(match *g {
            Generator::Idempotent(ref j) => self.act_e(j, v),
            Generator::Dot(r) => self.act_signed(v, |k| self.dot_on_basis(r, k)),
            Generator::Psi(r) => self.act_signed(v, |k| self.psi_on_basis(r, k)),
        })
    }

    /// Apply a word, last token first.
    pub fn act_word<F: Field>(&self, word: &[Generator], v: &HookVector<F>) -> Result<HookVector<F>> {
        let mut cur = v.clone();
        for g in word.iter().rev() {
            if cur.is_zero() {
                g.validate(self.shape.d)?;
                continue;
            }
            cur = self.act_generator(g, &cur)?;
        }
        Ok(cur)
    }

    /// Signed image of a single basis element under a word, without allocation
    /// of intermediate vectors. Every generator sends a basis element to at
    /// most one signed basis element.
    pub fn word_on_basis(&self, word: &[Generator], key: BasisKey) -> Option<(bool, BasisKey)> {
        let mut neg = false;
        let mut cur = key;
        for g in word.iter().rev() {
            let (n, next) = match *g {
                Generator::Idempotent(ref j) => (self.weight(cur) == *j).then_some((false, cur))?,
                Generator::Dot(r) => self.dot_on_basis(r, cur)?,
                Generator::Psi(r) => self.psi_on_basis(r, cur)?,
            };
            neg ^= n;
            cur = next;
        }
        Some((neg, cur))
    }

    /// Basis of the joint kernel of `y_1..y_d` on the weight space of `i`.
    pub fn dot_kernel<F: Field>(&self, field: F, i: &[Residue]) -> Vec<HookVector<F>> {
        let space = self.weight_space(i);
        let mut m = Matrix::new(space.len());
        for r in 1..=self.shape.d {
            let mut rows: BTreeMap<BasisKey, Vec<F::Elem>> = BTreeMap::new();
            for (c, &k) in space.iter().enumerate() {
                if let Some((neg, target)) = self.dot_on_basis(r, k) {
                    let row = rows.entry(target).or_insert_with(|| vec![field.zero(); space.len()]);
                    row[c] = field.from_i64(if neg { -1 } else { 1 });
                }
            }
            for row in rows.into_values() {
                m.push_row(row);
            }
        }
        kernel(&field, &m)
            .into_iter()
            .map(|v| {
                let mut out = HookVector::zero(self.shape, field.clone());
                for (c, x) in v.iter().enumerate() {
                    out.add_term(space[c], x);
                }
                out
            })
            .collect()
    }

    /// `sum_w c_w w [sigma]` for an integer combination of words.
    pub fn sum_on_basis<F: Field>(&self, field: &F, terms: &[(i64, Word)], key: BasisKey) -> HookVector<F> {
        let mut out = HookVector::zero(self.shape, field.clone());
        for (c, w) in terms {
            if let Some((neg, k)) = self.word_on_basis(w, key) {
                out.add_term(k, &field.from_i64(if neg { -c } else { *c }));
            }
        }
        out
    }

    /// The unique basis element of weight `i` killed by every `y_r`.
    pub fn extreme_vector(&self, i: &[Residue]) -> Option<HookBasisElement> {
        let d = self.shape.d;
        if i.len() != d || i[0] != self.q.res(0) {
            return None;
        }
        let plus = SegmentSpec::increasing(self.q.res(1), self.shape.arm_length() - 1);
        let minus = SegmentSpec::decreasing(self.q.res(-1), self.shape.k);
        let witness = minimal_shuffle(&i[1..], plus, minus, &self.q).expect("segment lengths sum to d-1")?;
        let t = witness.minimal.targets();
        let key = BasisKey(t[plus.length..].iter().fold(0, |m, &p| m | 1 << (p + 1)));
        Some(self.element(key))
    }
}
