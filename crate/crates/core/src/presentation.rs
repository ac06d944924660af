//! The Specht presentation: generators `y_r`, row `psi_r` and one Garnir
//! element per Garnir node.
//!
//! A node `A = (x, y)` is a Garnir node when `(x+1, y)` also lies in `mu`. Its
//! belt is the tail of row `x` from column `y` together with the head of row
//! `x+1` through column `y`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Node, Partition, PermutationWord, QuiverParams, Residue, Tableau};
use crate::error::{Error, Result};
use crate::klr::{psi_word, FormalSum, Generator, Word};
use crate::shuffles::shuffle_reps;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GarnirDatum {
    pub node: Node,
    pub belt: Vec<Node>,
    /// Row-`x` bricks left to right, then row-`x+1` bricks left to right.
    pub bricks: Vec<Vec<Node>>,
    pub c_nodes: Vec<Node>,
    pub d_nodes: Vec<Node>,
    /// Number of bricks in row `x`.
    pub f: usize,
    pub garnir_tableau: Tableau,
    pub weight: Vec<Residue>,
    /// `w^A_1, ..., w^A_{k-1}`.
    pub brick_generators: Vec<PermutationWord>,
    /// Minimal left coset representatives of `Sigma_f x Sigma_{k-f}` in `Sigma_k`.
    pub coset_reps: Vec<PermutationWord>,
    /// Each representative as a word in the brick generators.
    pub coset_words: Vec<Vec<usize>>,
    pub psi_ta_word: Word,
}

impl GarnirDatum {
    pub fn k(&self) -> usize {
        self.bricks.len()
    }

    /// The element of `Sigma_d` corresponding to a word in the brick generators.
    pub fn realize(&self, brick_word: &[usize]) -> PermutationWord {
        let d = self.garnir_tableau.size();
        brick_word
            .iter()
            .fold(PermutationWord::identity(d), |acc, &j| acc.compose(&self.brick_generators[j - 1]))
    }

    /// `tau^A_r = (psi_{w^A_r} + 1) e(i^A)`.
    pub fn tau(&self, r: usize) -> FormalSum {
        let idem = Generator::Idempotent(self.weight.clone());
        let mut swap = psi_word(&self.brick_generators[r - 1]);
        swap.push(idem.clone());
        FormalSum { terms: vec![(1, swap), (1, vec![idem])] }
    }

    /// `tau^A_u` for a representative given as a brick-generator word.
    pub fn tau_word(&self, brick_word: &[usize]) -> FormalSum {
        brick_word.iter().fold(FormalSum::word(Vec::new()), |acc, &r| acc.times(&self.tau(r)))
    }

    /// `g^A = sum_u tau^A_u psi^{T^A}`, distributed into words.
    pub fn garnir_element(&self) -> FormalSum {
        let tail = FormalSum::word(self.psi_ta_word.clone());
        let mut terms = Vec::new();
        for word in &self.coset_words {
            terms.extend(self.tau_word(word).times(&tail).terms);
        }
        FormalSum { terms }
    }

    /// Text picture of the belt: `T^A` entries grouped into `D`, bricks and `C`.
    pub fn render(&self, q: &QuiverParams) -> String {
        let t = &self.garnir_tableau;
        let cells = |nodes: &[Node]| nodes.iter().map(|&n| t.entry(n).expect("belt node").to_string()).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        let _ = writeln!(
            out,
            "Garnir node {} residue {}: {} bricks ({} in row {}), |C| = {}, |D| = {}",
            self.node,
            q.residue(self.node),
            self.k(),
            self.f,
            self.node.row,
            self.c_nodes.len(),
            self.d_nodes.len()
        );
        let mut top = Vec::new();
        for (r, b) in self.bricks.iter().enumerate().take(self.f) {
            top.push(format!("B{}[{}]", r + 1, cells(b)));
        }
        if !self.c_nodes.is_empty() {
            top.push(format!("C[{}]", cells(&self.c_nodes)));
        }
        let mut bottom = Vec::new();
        if !self.d_nodes.is_empty() {
            bottom.push(format!("D[{}]", cells(&self.d_nodes)));
        }
        for (r, b) in self.bricks.iter().enumerate().skip(self.f) {
            bottom.push(format!("B{}[{}]", r + 1, cells(b)));
        }
        let _ = writeln!(out, "  row {:>2} from col {}: {}", self.node.row, self.node.col, top.join(" | "));
        let _ = writeln!(out, "  row {:>2} to col {}:   {}", self.node.row + 1, self.node.col, bottom.join(" | "));
        let _ = writeln!(out, "  T^A = {}", t);
        let _ = writeln!(out, "  psi^(T^A) = {}", crate::klr::format_word(&self.psi_ta_word));
        let _ = writeln!(out, "  coset representatives: {}", self.coset_reps.len());
        out
    }
}

pub fn garnir_nodes(mu: &Partition) -> Vec<Node> {
    mu.nodes().filter(|n| mu.contains(Node::new(n.row + 1, n.col))).collect()
}

pub fn garnir_datum(mu: &Partition, a: Node, q: &QuiverParams) -> Result<GarnirDatum> {
    let (x, y) = (a.row, a.col);
    if !mu.contains(a) || !mu.contains(Node::new(x + 1, y)) {
        return Err(Error::NotGarnir(a));
    }
    let e = q.e();
    let width = mu.row_len(x);
    let belt: Vec<Node> =
        (y..=width).map(|z| Node::new(x, z)).chain((1..=y).map(|z| Node::new(x + 1, z))).collect();

    let f = (width + 1 - y) / e;
    let mut bricks: Vec<Vec<Node>> =
        (0..f).map(|j| (0..e).map(|t| Node::new(x, y + j * e + t)).collect()).collect();
    let c_nodes: Vec<Node> = (y + f * e..=width).map(|z| Node::new(x, z)).collect();
    let lower = y / e;
    let d_len = y - lower * e;
    bricks.extend((0..lower).map(|j| (0..e).map(|t| Node::new(x + 1, d_len + j * e + t + 1)).collect()));
    let d_nodes: Vec<Node> = (1..=d_len).map(|z| Node::new(x + 1, z)).collect();
    let k = bricks.len();

    let initial = Tableau::initial(mu);
    let u = initial.entry(a).expect("A in mu");
    let mut rows = initial.rows().to_vec();
    let order = d_nodes.iter().chain(bricks.iter().flatten()).chain(c_nodes.iter());
    for (offset, n) in order.enumerate() {
        rows[n.row - 1][n.col - 1] = u + offset;
    }
    let garnir_tableau = Tableau::new(rows)?;
    let weight = garnir_tableau.residue_sequence(q);
    let d = mu.size();

    let first = u + d_len;
    let brick_generators = (1..k)
        .map(|r| {
            let mut targets: Vec<usize> = (1..=d).collect();
            for z in first + (r - 1) * e..first + r * e {
                targets.swap(z - 1, z + e - 1);
            }
            PermutationWord::new(targets).expect("product of disjoint transpositions")
        })
        .collect();

    let small = shuffle_reps(f, k - f);
    let coset_words: Vec<Vec<usize>> = small.iter().map(|s| s.reduced_word().to_vec()).collect();
    let psi_ta_word = psi_word(&garnir_tableau.word());
    let mut datum = GarnirDatum {
        node: a,
        belt,
        bricks,
        c_nodes,
        d_nodes,
        f,
        garnir_tableau,
        weight,
        brick_generators,
        coset_reps: Vec::new(),
        coset_words,
        psi_ta_word,
    };
    datum.coset_reps = datum.coset_words.iter().map(|w| datum.realize(w)).collect();
    Ok(datum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationKind {
    Idempotent,
    Dot,
    RowPsi,
    Garnir,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationGenerator {
    pub kind: RelationKind,
    pub terms: FormalSum,
    pub source: String,
    pub garnir_node: Option<Node>,
}

/// The generators of `J^mu`. The idempotent family is a single marker word
/// `e(i^mu)`: callers impose it by restricting to the `i^mu` weight space.
pub fn relation_generators(mu: &Partition, q: &QuiverParams) -> Result<Vec<RelationGenerator>> {
    let t = Tableau::initial(mu);
    let d = mu.size();
    let mut out = vec![RelationGenerator {
        kind: RelationKind::Idempotent,
        terms: FormalSum::word(vec![Generator::Idempotent(t.residue_sequence(q))]),
        source: "restrict to weight i^mu".to_string(),
        garnir_node: None,
    }];
    out.extend((1..=d).map(|r| RelationGenerator {
        kind: RelationKind::Dot,
        terms: FormalSum::word(vec![Generator::Dot(r)]),
        source: format!("dot y{r}"),
        garnir_node: None,
    }));
    let pos = t.positions();
    out.extend((1..d).filter(|&r| pos[r].row == pos[r + 1].row).map(|r| RelationGenerator {
        kind: RelationKind::RowPsi,
        terms: FormalSum::word(vec![Generator::Psi(r)]),
        source: format!("row psi{r}"),
        garnir_node: None,
    }));
    for a in garnir_nodes(mu) {
        let datum = garnir_datum(mu, a, q)?;
        out.push(RelationGenerator {
            kind: RelationKind::Garnir,
            terms: datum.garnir_element(),
            source: format!("Garnir node {a}"),
            garnir_node: Some(a),
        });
    }
    Ok(out)
}

/// `deg(T^mu)`, the grading shift of `S^mu`.
pub fn specht_degree_shift(mu: &Partition, q: &QuiverParams) -> i64 {
    Tableau::initial(mu).degree(q).expect("initial tableau is standard")
}
