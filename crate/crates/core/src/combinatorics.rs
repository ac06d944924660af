//! Partitions, nodes, residues, tableaux and permutations.
//!
//! Nodes are `(row, col)` pairs, 1-indexed, with rows growing downward. The
//! residue of `(row, col)` is `(col - row) mod e`. Permutations act on the left
//! of tableaux by acting on their entries, and on residue sequences by place
//! permutation: `(w . i)_{w(p)} = i_p`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The quiver of type `A^(1)_{e-1}`: vertices `Z/eZ`, an edge `i -> j` when
/// `j = i - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuiverParams {
    e: usize,
}

/// How two residues sit relative to each other in the quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Adjacency {
    Equal,
    /// `i -> j`, i.e. `j = i - 1`.
    Arrow,
    /// `i <- j`, i.e. `j = i + 1`.
    Reverse,
    /// Neither equal nor joined by an edge.
    Unlinked,
}

impl QuiverParams {
    pub fn new(e: usize) -> Result<Self> {
        if e < 3 {
            return Err(Error::UnsupportedE(e));
        }
        Ok(QuiverParams { e })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// Reduce an arbitrary integer modulo `e`.
    pub fn res(&self, n: i64) -> Residue {
        Residue(n.rem_euclid(self.e as i64) as u32)
    }

    pub fn residue(&self, node: Node) -> Residue {
        self.res(node.col as i64 - node.row as i64)
    }

    pub fn shift(&self, i: Residue, by: i64) -> Residue {
        self.res(i.0 as i64 + by)
    }

    pub fn adjacency(&self, i: Residue, j: Residue) -> Adjacency {
        if i == j {
            Adjacency::Equal
        } else if j == self.shift(i, -1) {
            Adjacency::Arrow
        } else if j == self.shift(i, 1) {
            Adjacency::Reverse
        } else {
            Adjacency::Unlinked
        }
    }

    /// Cartan matrix entry `a_{ij}`.
    pub fn cartan(&self, i: Residue, j: Residue) -> i64 {
        match self.adjacency(i, j) {
            Adjacency::Equal => 2,
            Adjacency::Arrow | Adjacency::Reverse => -1,
            Adjacency::Unlinked => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Residue(u32);

impl Residue {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn residue(node: Node, q: &QuiverParams) -> Residue {
    q.residue(node)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub const fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The hook `(d - k, 1^k)`.
    pub fn hook(d: usize, k: usize) -> Result<Self> {
        if d == 0 || k >= d {
            return Err(Error::InvalidHook { d, k });
        }
        let mut parts = vec![d - k];
        parts.extend(std::iter::repeat_n(1, k));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `row` (1-indexed); zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.row_len(node.row)
    }

    /// Nodes in row-reading order.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Node::new(r + 1, c)))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        removable_in(&self.parts)
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        addable_in(&self.parts)
    }

    /// All partitions of `d`, in lexicographically decreasing order.
    pub fn all(d: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
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
}

fn removable_in(parts: &[usize]) -> Vec<Node> {
    (0..parts.len())
        .filter(|&r| parts.get(r + 1).copied().unwrap_or(0) < parts[r])
        .map(|r| Node::new(r + 1, parts[r]))
        .collect()
}

fn addable_in(parts: &[usize]) -> Vec<Node> {
    (0..=parts.len())
        .filter(|&r| {
            let here = parts.get(r).copied().unwrap_or(0);
            r == 0 || parts[r - 1] > here
        })
        .map(|r| Node::new(r + 1, parts.get(r).copied().unwrap_or(0) + 1))
        .collect()
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Comma-separated parts; the empty partition is the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Residue content: multiplicity of each residue.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootContent {
    multiplicities: Vec<usize>,
}

impl RootContent {
    pub fn from_residues<'a>(residues: impl IntoIterator<Item = &'a Residue>, q: &QuiverParams) -> Self {
        let mut multiplicities = vec![0; q.e()];
        for r in residues {
            multiplicities[r.0 as usize] += 1;
        }
        RootContent { multiplicities }
    }

    pub fn multiplicity(&self, i: Residue) -> usize {
        self.multiplicities.get(i.0 as usize).copied().unwrap_or(0)
    }

    pub fn height(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.height() == 0
    }
}

pub fn content(mu: &Partition, q: &QuiverParams) -> RootContent {
    let residues: Vec<Residue> = mu.nodes().map(|n| q.residue(n)).collect();
    RootContent::from_residues(&residues, q)
}

/// Removable and addable `i`-nodes of `mu`, each ordered by row.
pub fn removable_addable(mu: &Partition, i: Residue, q: &QuiverParams) -> (Vec<Node>, Vec<Node>) {
    let removable = mu.removable_nodes().into_iter().filter(|&n| q.residue(n) == i).collect();
    let addable = mu.addable_nodes().into_iter().filter(|&n| q.residue(n) == i).collect();
    (removable, addable)
}

/// `d_A(mu)`: addable minus removable `res(A)`-nodes strictly below `A`.
pub fn d_a(mu: &Partition, a: Node, q: &QuiverParams) -> Result<i64> {
    if !mu.removable_nodes().contains(&a) {
        return Err(Error::NotRemovable(a));
    }
    Ok(d_a_unchecked(mu.parts(), a, q))
}

fn d_a_unchecked(parts: &[usize], a: Node, q: &QuiverParams) -> i64 {
    let i = q.residue(a);
    let below = |n: &Node| n.row > a.row && q.residue(*n) == i;
    let addable = addable_in(parts).iter().filter(|n| below(n)).count() as i64;
    let removable = removable_in(parts).iter().filter(|n| below(n)).count() as i64;
    addable - removable
}

/// A bijective filling of a Young diagram by `1..=d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let d = shape.size();
        let mut seen = vec![false; d + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > d || seen[v] {
                return Err(Error::InvalidTableau(format!("entries {rows:?} are not a bijection onto 1..{d}")));
            }
            seen[v] = true;
        }
        Ok(Tableau { shape, rows })
    }

    /// `T^mu`: `1..d` along successive rows.
    pub fn initial(shape: &Partition) -> Self {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        Tableau { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, node: Node) -> Option<usize> {
        self.rows.get(node.row.checked_sub(1)?)?.get(node.col.checked_sub(1)?).copied()
    }

    /// `pos[v]` is the node holding `v`; index 0 is unused.
    pub fn positions(&self) -> Vec<Node> {
        let mut pos = vec![Node::new(0, 0); self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                pos[v] = Node::new(r + 1, c + 1);
            }
        }
        pos
    }

    pub fn is_row_strict(&self) -> bool {
        self.rows.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_column_strict(&self) -> bool {
        self.rows.windows(2).all(|rs| rs[1].iter().zip(&rs[0]).all(|(below, above)| above < below))
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_strict() && self.is_column_strict()
    }

    /// Entries read along successive rows.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `i(T)`: the residue of the node holding `r`, for `r = 1..d`.
    pub fn residue_sequence(&self, q: &QuiverParams) -> Vec<Residue> {
        self.positions().into_iter().skip(1).map(|n| q.residue(n)).collect()
    }

    /// `w^T` with `w^T T^mu = T`.
    pub fn word(&self) -> PermutationWord {
        let targets = Tableau::initial(&self.shape)
            .reading_word()
            .iter()
            .zip(self.reading_word())
            .fold(vec![0; self.size()], |mut acc, (&from, to)| {
                acc[from - 1] = to;
                acc
            });
        PermutationWord::new(targets).expect("tableau entries form a bijection")
    }

    /// Permute the entries: `(w T)(A) = w(T(A))`.
    pub fn permuted(&self, w: &PermutationWord) -> Result<Tableau> {
        if w.degree() != self.size() {
            return Err(Error::LengthMismatch { expected: self.size(), got: w.degree() });
        }
        let rows = self.rows.iter().map(|row| row.iter().map(|&v| w.apply(v)).collect()).collect();
        Ok(Tableau { shape: self.shape.clone(), rows })
    }

    /// Degree defined by removing the node holding `d` and recursing.
    pub fn degree(&self, q: &QuiverParams) -> Result<i64> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let pos = self.positions();
        let mut parts = self.shape.parts().to_vec();
        let mut deg = 0;
        for v in (1..=self.size()).rev() {
            let node = pos[v];
            debug_assert_eq!(parts[node.row - 1], node.col);
            deg += d_a_unchecked(&parts, node, q);
            parts[node.row - 1] -= 1;
            if parts[node.row - 1] == 0 {
                parts.pop();
            }
        }
        Ok(deg)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", rows.join(""))
    }
}

pub fn initial_tableau(mu: &Partition) -> Tableau {
    Tableau::initial(mu)
}

pub fn residue_sequence(t: &Tableau, q: &QuiverParams) -> Vec<Residue> {
    t.residue_sequence(q)
}

pub fn tableau_word(t: &Tableau) -> PermutationWord {
    t.word()
}

pub fn tableau_degree(t: &Tableau, q: &QuiverParams) -> Result<i64> {
    t.degree(q)
}

/// `St(mu)`, ordered lexicographically by reading word.
pub fn standard_tableaux(mu: &Partition) -> Vec<Tableau> {
    fn go(v: usize, d: usize, rows: &mut Vec<Vec<usize>>, shape: &[usize], out: &mut Vec<Tableau>) {
        if v > d {
            out.push(Tableau { shape: Partition { parts: shape.to_vec() }, rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let fits = len < shape[r] && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(v);
                go(v + 1, d, rows, shape, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); mu.len()];
    go(1, mu.size(), &mut rows, mu.parts(), &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

/// A permutation of `1..=d` together with its canonical reduced word.
///
/// The reduced word `[r_1, ..., r_a]` means `w = s_{r_1} s_{r_2} ... s_{r_a}`.
/// It is produced by sorting the one-line notation: the largest misplaced value
/// is carried rightward one step at a time until it is home.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationWord {
    targets: Vec<usize>,
    reduced_word: Vec<usize>,
}

impl PermutationWord {
    pub fn new(targets: Vec<usize>) -> Result<Self> {
        let d = targets.len();
        let mut seen = vec![false; d + 1];
        for &t in &targets {
            if t == 0 || t > d || seen[t] {
                return Err(Error::InvalidPermutation(d));
            }
            seen[t] = true;
        }
        let reduced_word = canonical_reduced_word(&targets);
        Ok(PermutationWord { targets, reduced_word })
    }

    pub fn identity(d: usize) -> Self {
        PermutationWord { targets: (1..=d).collect(), reduced_word: Vec::new() }
    }

    /// The product `s_{r_1} ... s_{r_a}` in `Sigma_d`.
    pub fn from_word(d: usize, word: &[usize]) -> Result<Self> {
        let mut targets: Vec<usize> = (1..=d).collect();
        for &r in word.iter().rev() {
            if r == 0 || r >= d {
                return Err(Error::GeneratorOutOfRange { index: r, d });
            }
            for t in targets.iter_mut() {
                if *t == r {
                    *t = r + 1;
                } else if *t == r + 1 {
                    *t = r;
                }
            }
        }
        PermutationWord::new(targets)
    }

    /// The cycle `(c_1, c_2, ..., c_n)`: `c_1 -> c_2 -> ... -> c_n -> c_1`.
    pub fn cycle(d: usize, cycle: &[usize]) -> Result<Self> {
        let mut targets: Vec<usize> = (1..=d).collect();
        for (i, &c) in cycle.iter().enumerate() {
            if c == 0 || c > d {
                return Err(Error::InvalidPermutation(d));
            }
            targets[c - 1] = cycle[(i + 1) % cycle.len()];
        }
        PermutationWord::new(targets)
    }

    pub fn degree(&self) -> usize {
        self.targets.len()
    }

    /// `(w(1), ..., w(d))`.
    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn reduced_word(&self) -> &[usize] {
        &self.reduced_word
    }

    pub fn apply(&self, i: usize) -> usize {
        self.targets[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.reduced_word.is_empty()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        self.reduced_word.len()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &t) in self.targets.iter().enumerate() {
            inv[t - 1] = i + 1;
        }
        PermutationWord::new(inv).expect("inverse of a permutation")
    }

    /// `self . other`, applying `other` first.
    pub fn compose(&self, other: &PermutationWord) -> Self {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degrees");
        let targets = other.targets.iter().map(|&t| self.targets[t - 1]).collect();
        PermutationWord::new(targets).expect("composition of permutations")
    }

    /// Place permutation: `(w . i)_{w(p)} = i_p`.
    pub fn act_on<T: Clone>(&self, seq: &[T]) -> Vec<T> {
        assert_eq!(seq.len(), self.degree(), "sequence length differs from permutation degree");
        let mut out = seq.to_vec();
        for (p, item) in seq.iter().enumerate() {
            out[self.targets[p] - 1] = item.clone();
        }
        out
    }

    pub fn inversions(&self) -> usize {
        let t = &self.targets;
        (0..t.len()).map(|i| (i + 1..t.len()).filter(|&j| t[i] > t[j]).count()).sum()
    }

    /// True when no `i < j < k` has `w(i) > w(j) > w(k)`.
    pub fn avoids_321(&self) -> bool {
        let t = &self.targets;
        let n = t.len();
        (0..n).all(|j| {
            let left_bigger = (0..j).any(|i| t[i] > t[j]);
            let right_smaller = (j + 1..n).any(|k| t[k] < t[j]);
            !(left_bigger && right_smaller)
        })
    }
}

impl fmt::Display for PermutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reduced_word.is_empty() {
            return write!(f, "id");
        }
        let letters: Vec<String> = self.reduced_word.iter().map(|r| format!("s{r}")).collect();
        write!(f, "{}", letters.join(" "))
    }
}

fn canonical_reduced_word(targets: &[usize]) -> Vec<usize> {
    let mut a = targets.to_vec();
    let mut swaps = Vec::new();
    for v in (1..=a.len()).rev() {
        let mut p = a.iter().position(|&x| x == v).expect("value present");
        while p + 1 < v {
            a.swap(p, p + 1);
            swaps.push(p + 1);
            p += 1;
        }
    }
    // identity = w s_{c_1} ... s_{c_m}, so w = s_{c_m} ... s_{c_1}
    swaps.reverse();
    swaps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3() -> QuiverParams {
        QuiverParams::new(3).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_small_e() {
        for e in 0..3 {
            assert_eq!(QuiverParams::new(e), Err(Error::UnsupportedE(e)));
        }
    }

    #[test]
    fn cartan_entries() {
        let q = QuiverParams::new(4).unwrap();
        let r = |n| q.res(n);
        assert_eq!(q.cartan(r(1), r(1)), 2);
        assert_eq!(q.cartan(r(1), r(0)), -1);
        assert_eq!(q.cartan(r(1), r(2)), -1);
        assert_eq!(q.cartan(r(0), r(3)), -1);
        assert_eq!(q.cartan(r(0), r(2)), 0);
        assert_eq!(q.adjacency(r(1), r(0)), Adjacency::Arrow);
        assert_eq!(q.adjacency(r(1), r(2)), Adjacency::Reverse);
    }

    #[test]
    fn residues() {
        let q = q3();
        assert_eq!(residue(Node::new(1, 1), &q).value(), 0);
        assert_eq!(residue(Node::new(2, 1), &q).value(), 2);
        assert_eq!(residue(Node::new(1, 4), &q).value(), 0);
    }

    #[test]
    fn contents() {
        let q = q3();
        let c = content(&p(&[2, 1]), &q);
        assert_eq!((0..3).map(|i| c.multiplicity(q.res(i))).collect::<Vec<_>>(), vec![1, 1, 1]);
        assert!(content(&Partition::empty(), &q).is_empty());
        assert_eq!(content(&p(&[3]), &q), c);
    }

    #[test]
    fn removable_and_addable() {
        let q = q3();
        assert_eq!(removable_addable(&p(&[3]), q.res(2), &q), (vec![Node::new(1, 3)], vec![Node::new(2, 1)]));
        assert_eq!(removable_addable(&Partition::empty(), q.res(0), &q), (vec![], vec![Node::new(1, 1)]));
        assert_eq!(removable_addable(&p(&[2, 2]), q.res(0), &q), (vec![Node::new(2, 2)], vec![]));
    }

    #[test]
    fn d_a_examples() {
        let q = q3();
        assert_eq!(d_a(&p(&[3]), Node::new(1, 3), &q), Ok(1));
        assert_eq!(d_a(&p(&[1]), Node::new(1, 1), &q), Ok(0));
        assert_eq!(d_a(&p(&[2, 1]), Node::new(2, 1), &q), Ok(0));
        assert_eq!(d_a(&p(&[2, 1]), Node::new(1, 1), &q), Err(Error::NotRemovable(Node::new(1, 1))));
    }

    #[test]
    fn degrees() {
        let q = q3();
        assert_eq!(Tableau::initial(&p(&[3])).degree(&q), Ok(1));
        assert_eq!(Tableau::initial(&Partition::empty()).degree(&q), Ok(0));
        assert_eq!(Tableau::initial(&p(&[2, 1])).degree(&q), Ok(0));
        let bad = Tableau::new(vec![vec![2, 1]]).unwrap();
        assert_eq!(bad.degree(&q), Err(Error::NotStandard));
    }

    #[test]
    fn initial_tableau_and_words() {
        let q = q3();
        let t = initial_tableau(&p(&[2, 1]));
        assert_eq!(t.rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(residue_sequence(&t, &q), vec![q.res(0), q.res(1), q.res(2)]);
        assert!(tableau_word(&t).is_identity());
        let t2 = Tableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(tableau_word(&t2).reduced_word(), &[2]);
    }

    #[test]
    fn reduced_word_evaluates_back() {
        let w = PermutationWord::new(vec![3, 1, 4, 2]).unwrap();
        assert_eq!(w.length(), w.inversions());
        assert_eq!(PermutationWord::from_word(4, w.reduced_word()).unwrap(), w);
    }

    #[test]
    fn cycle_notation() {
        let c = PermutationWord::cycle(3, &[1, 2, 3]).unwrap();
        assert_eq!(c.targets(), &[2, 3, 1]);
    }

    #[test]
    fn partition_parsing() {
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1, 1]).to_string(), "3,1,1");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|d| Partition::all(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
    }

    #[test]
    fn standard_tableau_counts() {
        // hook length formula values
        assert_eq!(standard_tableaux(&p(&[3, 2])).len(), 5);
        assert_eq!(standard_tableaux(&p(&[3, 1, 1])).len(), 6);
        assert_eq!(standard_tableaux(&p(&[2, 2, 2])).len(), 5);
    }
}
