//! `Hom(S^mu, S^lambda)` for a hook `lambda`, computed two ways.
//!
//! [`bruteforce_hom`] solves the Specht relations of `mu` inside the `i^mu`
//! weight space of the hook module. [`classify_hom`] matches `mu` against three
//! parametrized shapes and tests whether the Garnir content `Gc(a)` vanishes in
//! the field. Neither path consults the other.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, garnir_content, CoefficientField, Field, GarnirContent};
use crate::combinatorics::{Node, Partition, PermutationWord, QuiverParams, Tableau};
use crate::error::{Error, Result};
use crate::hook::{BasisKey, HookModule, HookShape, HookVector};
use crate::klr::{format_word, Generator};
use crate::linalg::{kernel, Matrix};
use crate::presentation::{garnir_datum, garnir_nodes, relation_generators, RelationGenerator, RelationKind};
use crate::with_field;

pub const SCHEMA: &str = "hook-specht/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FormCase {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii")]
    III,
}

impl fmt::Display for FormCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormCase::I => "i",
            FormCase::II => "ii",
            FormCase::III => "iii",
        };
        write!(f, "{s}")
    }
}

/// One parametrization of `mu` by a shape form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormMatch {
    pub case: FormCase,
    /// Present for the first two forms.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c: Option<usize>,
    pub a: Vec<u64>,
    pub m: usize,
    /// For the second form: whether `m + c = k + 2 (mod e)`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub congruence: Option<bool>,
}

impl FormMatch {
    pub fn gc(&self) -> GarnirContent {
        garnir_content(&self.a).expect("shape parameters are positive and weakly decreasing")
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Parametrizations `(a_1 e, ..., a_{c-1} e, a_c e - m, 1^{tail})` of `mu`, with
/// `c` in `1..=c_max`, largest `c` first.
fn leading_forms(mu: &Partition, e: usize, c_max: usize) -> Vec<(usize, Vec<u64>, usize)> {
    let parts = mu.parts();
    let mut out = Vec::new();
    for c in (1..=c_max.min(parts.len())).rev() {
        let head_ok = parts[..c - 1].iter().all(|&p| p % e == 0);
        let tail_ok = parts[c..].iter().all(|&p| p == 1);
        if head_ok && tail_ok {
            let mut a: Vec<u64> = parts[..c - 1].iter().map(|&p| (p / e) as u64).collect();
            let ac = ceil_div(parts[c - 1], e);
            a.push(ac as u64);
            out.push((c, a, ac * e - parts[c - 1]));
        }
    }
    out
}

fn third_form(mu: &Partition, k: usize, e: usize) -> Option<FormMatch> {
    let parts = mu.parts();
    let n = parts.len();
    if n <= k + 1 {
        return None;
    }
    let head_ok = parts[..k].iter().all(|&p| p % e == 0);
    let mid_ok = parts[k..n - 1].iter().all(|&p| (p + 1) % e == 0);
    if !(head_ok && mid_ok) {
        return None;
    }
    let mut a: Vec<u64> = parts[..k].iter().map(|&p| (p / e) as u64).collect();
    a.extend(parts[k..n - 1].iter().map(|&p| ((p + 1) / e) as u64));
    let an = ceil_div(parts[n - 1] + 1, e);
    a.push(an as u64);
    Some(FormMatch { case: FormCase::III, c: None, a, m: an * e - 1 - parts[n - 1], congruence: None })
}

/// Every way `mu` fits one of the three shapes admitting a map to `S^lambda`,
/// with the second shape gated on `e | d`. Ordered by case, then largest `c`.
pub fn match_forms(mu: &Partition, shape: HookShape, q: &QuiverParams) -> Vec<FormMatch> {
    let (k, e, n) = (shape.k(), q.e(), mu.len());
    let mut out = Vec::new();
    if n == k + 1 {
        for (c, a, m) in leading_forms(mu, e, k + 1) {
            out.push(FormMatch { case: FormCase::I, c: Some(c), a, m, congruence: None });
        }
    }
    if n == k + 2 && k >= 1 {
        for (c, a, m) in leading_forms(mu, e, k) {
            let congruence = (m + c) % e == (k + 2) % e;
            if mu.size().is_multiple_of(e) {
                out.push(FormMatch { case: FormCase::II, c: Some(c), a, m, congruence: Some(congruence) });
            }
        }
    }
    out.extend(third_form(mu, k, e));
    out
}

/// The same shapes with the second one gated on `m + c = k + 2 (mod e)` instead.
pub fn match_forms_by_congruence(mu: &Partition, shape: HookShape, q: &QuiverParams) -> Vec<FormMatch> {
    let (k, e, n) = (shape.k(), q.e(), mu.len());
    let mut out: Vec<FormMatch> = match_forms(mu, shape, q).into_iter().filter(|f| f.case != FormCase::II).collect();
    if n == k + 2 && k >= 1 {
        let second = leading_forms(mu, e, k).into_iter().filter(|(c, _, m)| (m + c) % e == (k + 2) % e);
        let at = out.iter().position(|f| f.case == FormCase::III).unwrap_or(out.len());
        let extra: Vec<FormMatch> = second
            .map(|(c, a, m)| FormMatch { case: FormCase::II, c: Some(c), a, m, congruence: Some(true) })
            .collect();
        out.splice(at..at, extra);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetTableau {
    pub tableau: Tableau,
    pub word: PermutationWord,
}

/// `T^lambda_mu`: `T^mu` on `lambda ∩ mu`, the remaining entries in increasing order.
pub fn target_tableau(mu: &Partition, shape: HookShape) -> Result<TargetTableau> {
    let k = shape.k();
    if mu.len() < k + 1 {
        return Err(Error::TooFewParts { parts: mu.len(), needed: k + 1 });
    }
    if mu.size() != shape.d() {
        return Err(Error::SizeMismatch { mu: mu.size(), d: shape.d() });
    }
    let lambda = shape.partition();
    let t_mu = Tableau::initial(mu);
    let mut spare: Vec<usize> = mu.nodes().filter(|&n| !lambda.contains(n)).map(|n| t_mu.entry(n).expect("node of mu")).collect();
    spare.sort_unstable();
    let mut spare = spare.into_iter();
    let rows: Vec<Vec<usize>> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| {
            (1..=len)
                .map(|c| {
                    let node = Node::new(r + 1, c);
                    t_mu.entry(node).unwrap_or_else(|| spare.next().expect("as many spare entries as free nodes"))
                })
                .collect()
        })
        .collect();
    let tableau = Tableau::new(rows)?;
    let word = tableau.word();
    Ok(TargetTableau { tableau, word })
}

/// Result of comparing the weight of `[sigma^lambda_mu]` with `i^mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormsCheck {
    pub weight_matches: bool,
    pub matches: Vec<FormMatch>,
}

impl FormsCheck {
    /// Both computations agree.
    pub fn consistent(&self) -> bool {
        self.weight_matches == !self.matches.is_empty()
    }
}

pub fn mu_forms_check(mu: &Partition, shape: HookShape, q: &QuiverParams) -> Result<FormsCheck> {
    let target = target_tableau(mu, shape)?;
    let module = HookModule::new(shape, *q);
    let key = module.key_of(&target.word).expect("target tableau is standard");
    let weight_matches = module.weight(key) == Tableau::initial(mu).residue_sequence(q);
    Ok(FormsCheck { weight_matches, matches: match_forms_by_congruence(mu, shape, q) })
}

/// Outcome of imposing the dot, row-psi and idempotent relations only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct J123<F: Field> {
    /// `[sigma_mu]` when it survives, else `None`.
    pub line: Option<HookVector<F>>,
    /// Whether every leg node of `mu` lies in the first column.
    pub legs_in_first_column: bool,
}

/// Nodes of `mu` sent to the leg of `lambda` by `[sigma]`.
pub fn leg_nodes(mu: &Partition, key: BasisKey) -> Vec<Node> {
    let t = Tableau::initial(mu);
    mu.nodes().filter(|&n| key.is_leg(t.entry(n).expect("node of mu"))).collect()
}

pub fn solve_j123<F: Field>(mu: &Partition, shape: HookShape, q: &QuiverParams, field: F) -> Result<J123<F>> {
    if mu.size() != shape.d() {
        return Err(Error::SizeMismatch { mu: mu.size(), d: shape.d() });
    }
    let module = HookModule::new(shape, *q);
    let i_mu = Tableau::initial(mu).residue_sequence(q);
    let Some(ext) = module.extreme_vector(&i_mu) else {
        return Ok(J123 { line: None, legs_in_first_column: false });
    };
    let legs_in_first_column = leg_nodes(mu, ext.key).iter().all(|n| n.col == 1);
    let v = HookVector::basis_vector(shape, field, ext.key);
    let mut killed = true;
    for g in relation_generators(mu, q)? {
        if matches!(g.kind, RelationKind::Dot | RelationKind::RowPsi) {
            killed &= module.act_word(&g.terms.terms[0].1, &v)?.is_zero();
        }
    }
    Ok(J123 { line: killed.then_some(v), legs_in_first_column })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bruteforce,
    Classification,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageTerm {
    /// One-line notation `(sigma(1), ..., sigma(d))`.
    pub sigma: Vec<usize>,
    pub coefficient: String,
}

/// The reduced word pinned for `psi^{T^A}` at one Garnir node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GarnirWord {
    pub node: Node,
    pub psi_word: String,
    pub terms: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomCertificate {
    pub schema: String,
    pub method: Method,
    pub mu: Partition,
    pub d: usize,
    pub k: usize,
    pub e: usize,
    pub char: u64,
    pub dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub case: Option<FormCase>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gc: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree: Option<i64>,
    #[serde(default)]
    pub image: Vec<ImageTerm>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub matches: Vec<FormMatch>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub garnir_words: Vec<GarnirWord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weight_space_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub agreement: Option<bool>,
}

impl HomCertificate {
    fn empty(method: Method, mu: &Partition, shape: HookShape, q: &QuiverParams, field: CoefficientField) -> Self {
        HomCertificate {
            schema: SCHEMA.to_string(),
            method,
            mu: mu.clone(),
            d: shape.d(),
            k: shape.k(),
            e: q.e(),
            char: field.characteristic(),
            dimension: 0,
            case: None,
            c: None,
            a: None,
            m: None,
            gc: None,
            degree: None,
            image: Vec::new(),
            matches: Vec::new(),
            garnir_words: Vec::new(),
            weight_space_dim: None,
            agreement: None,
        }
    }

    pub fn shape(&self) -> Result<HookShape> {
        HookShape::new(self.d, self.k)
    }

    /// Key of the image when it is a multiple of one basis element.
    pub fn image_key(&self, module: &HookModule) -> Option<BasisKey> {
        match self.image.as_slice() {
            [term] => module.key_of(&PermutationWord::new(term.sigma.clone()).ok()?),
            _ => None,
        }
    }
}

fn image_terms<F: Field>(module: &HookModule, v: &HookVector<F>) -> Vec<ImageTerm> {
    v.terms()
        .iter()
        .map(|(k, c)| ImageTerm { sigma: module.sigma(*k).targets().to_vec(), coefficient: c.to_string() })
        .collect()
}

fn check_sizes(mu: &Partition, shape: HookShape) -> Result<()> {
    if mu.size() != shape.d() {
        return Err(Error::SizeMismatch { mu: mu.size(), d: shape.d() });
    }
    Ok(())
}

/// Joint kernel of the Specht relations of `mu` acting on the `i^mu` weight
/// space of `S^lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteforceKernel<F: Field> {
    pub weight_space: Vec<BasisKey>,
    pub basis: Vec<HookVector<F>>,
}

/// Solve with precomputed relation generators, so callers can reuse them
/// across hooks and fields.
pub fn bruteforce_kernel<F: Field>(
    module: &HookModule,
    mu: &Partition,
    generators: &[RelationGenerator],
    field: F,
) -> BruteforceKernel<F> {
    let q = module.quiver();
    let i_mu = Tableau::initial(mu).residue_sequence(&q);
    let space = module.weight_space(&i_mu);
    if space.is_empty() {
        return BruteforceKernel { weight_space: space, basis: Vec::new() };
    }
    let mut m = Matrix::new(space.len());
    for g in generators.iter().filter(|g| g.kind != RelationKind::Idempotent) {
        // one row per basis element reached by the generator
        let mut rows: std::collections::BTreeMap<BasisKey, Vec<F::Elem>> = Default::default();
        for (col, &key) in space.iter().enumerate() {
            let img = module.sum_on_basis(&field, &g.terms.terms, key);
            for (target, c) in img.terms() {
                let row = rows.entry(*target).or_insert_with(|| vec![field.zero(); space.len()]);
                row[col] = field.add(&row[col], c);
            }
        }
        for row in rows.into_values() {
            m.push_row(row);
        }
    }
    let basis = kernel(&field, &m)
        .into_iter()
        .map(|v| {
            let mut out = HookVector::zero(module.shape(), field.clone());
            for (c, x) in v.iter().enumerate() {
                out.add_term(space[c], x);
            }
            out
        })
        .collect();
    BruteforceKernel { weight_space: space, basis }
}

/// Brute-force certificate with a typed image vector.
pub fn bruteforce_hom_in<F: Field>(
    mu: &Partition,
    shape: HookShape,
    q: &QuiverParams,
    field: F,
    coefficient_field: CoefficientField,
) -> Result<(HomCertificate, HookVector<F>)> {
    check_sizes(mu, shape)?;
    let module = HookModule::new(shape, *q);
    let generators = relation_generators(mu, q)?;
    let solved = bruteforce_kernel(&module, mu, &generators, field.clone());
    let mut cert = HomCertificate::empty(Method::Bruteforce, mu, shape, q, coefficient_field);
    cert.dimension = solved.basis.len();
    cert.weight_space_dim = Some(solved.weight_space.len());
    cert.garnir_words = generators
        .iter()
        .filter(|g| g.kind == RelationKind::Garnir)
        .filter_map(|g| {
            let node = g.garnir_node?;
            let datum = garnir_datum(mu, node, q).ok()?;
            Some(GarnirWord { node, psi_word: format_word(&datum.psi_ta_word), terms: g.terms.len() })
        })
        .collect();
    let image = solved.basis.first().cloned().unwrap_or_else(|| HookVector::zero(shape, field));
    if cert.dimension == 1 {
        cert.image = image_terms(&module, &image);
        if let Some((key, _)) = image.as_multiple_of_basis() {
            cert.degree = Some(module.degree(key) - Tableau::initial(mu).degree(q)?);
        }
    }
    Ok((cert, image))
}

pub fn bruteforce_hom(mu: &Partition, shape: HookShape, q: &QuiverParams, field: CoefficientField) -> Result<HomCertificate> {
    with_field!(field, f => bruteforce_hom_in(mu, shape, q, f, field).map(|(c, _)| c))
}

/// Closed-form certificate with a typed image vector.
pub fn classify_hom_in<F: Field>(
    mu: &Partition,
    shape: HookShape,
    q: &QuiverParams,
    field: F,
    coefficient_field: CoefficientField,
) -> Result<(HomCertificate, HookVector<F>)> {
    check_sizes(mu, shape)?;
    let mut cert = HomCertificate::empty(Method::Classification, mu, shape, q, coefficient_field);
    let zero = HookVector::zero(shape, field.clone());
    let matches = match_forms(mu, shape, q);
    let Some(first) = matches.first().cloned() else {
        return Ok((cert, zero));
    };
    let gc = first.gc();
    cert.matches = matches;
    cert.case = Some(first.case);
    cert.c = first.c;
    cert.a = Some(first.a.clone());
    cert.m = Some(first.m);
    cert.gc = Some(gc.to_string());
    if !coefficient_field.kills(gc.value()) {
        return Ok((cert, zero));
    }
    let module = HookModule::new(shape, *q);
    let target = target_tableau(mu, shape)?;
    let key = module.key_of(&target.word).expect("target tableau is standard");
    let image = HookVector::basis_vector(shape, field, key);
    cert.dimension = 1;
    cert.image = image_terms(&module, &image);
    cert.degree = Some(module.degree(key) - Tableau::initial(mu).degree(q)?);
    Ok((cert, image))
}

pub fn classify_hom(mu: &Partition, shape: HookShape, q: &QuiverParams, field: CoefficientField) -> Result<HomCertificate> {
    with_field!(field, f => classify_hom_in(mu, shape, q, f, field).map(|(c, _)| c))
}

/// Degree `r` of the map `z^mu -> image`: `deg(sigma T^lambda) - deg(T^mu)`.
pub fn hom_graded_dimension(cert: &HomCertificate, mu: &Partition, shape: HookShape, q: &QuiverParams) -> Result<i64> {
    if cert.dimension == 0 {
        return Err(Error::ZeroHom);
    }
    let module = HookModule::new(shape, *q);
    let key = cert.image_key(&module).ok_or(Error::Precondition("an image that is a multiple of one basis element"))?;
    Ok(module.degree(key) - Tableau::initial(mu).degree(q)?)
}

/// `(lambda', mu')`, so that `Hom(S^mu, S^lambda) = Hom(S^{lambda'}, S^{mu'})`.
pub fn conjugate_pair(mu: &Partition, lambda: &Partition) -> (Partition, Partition) {
    (lambda.conjugate(), mu.conjugate())
}

/// Left multiplication of `sigma` by a cycle, as a hook basis key.
fn cycled(module: &HookModule, cycle: &[usize], sigma: &PermutationWord) -> Result<BasisKey> {
    let c = PermutationWord::cycle(sigma.degree(), cycle)?;
    module
        .key_of(&c.compose(sigma))
        .ok_or(Error::Precondition("cycle times sigma to stay inside the shuffle basis"))
}

/// Closed form of `psi^{T^A} [sigma^lambda_mu]` together with the binomial
/// that `g^A` contributes.
fn garnir_closed_form(
    mu: &Partition,
    shape: HookShape,
    q: &QuiverParams,
    a_node: Node,
) -> Result<(Option<BasisKey>, Option<BigUint>)> {
    let (x, y) = (a_node.row, a_node.col);
    if !mu.contains(a_node) || !mu.contains(Node::new(x + 1, y)) {
        return Err(Error::NotGarnir(a_node));
    }
    let forms = match_forms_by_congruence(mu, shape, q);
    let form = forms.first().ok_or(Error::Precondition("mu to match one of the three shapes"))?;
    let module = HookModule::new(shape, *q);
    let target = target_tableau(mu, shape)?;
    let sigma = &target.word;
    let t_mu = Tableau::initial(mu);
    let at = |n: Node| t_mu.entry(n).expect("node of mu");
    let (r, s, t) = (at(a_node), at(Node::new(x + 1, 1)), at(Node::new(x + 1, y)));
    let (e, k) = (q.e(), shape.k());
    let binom = |f: usize| form.a.get(x - 1).map(|&ax| binomial(ax, f as u64));
    if x <= k && y % e == 0 && y < mu.row_len(x + 1) {
        let cycle: Vec<usize> = (s..=t + 1).rev().collect();
        Ok((Some(cycled(&module, &cycle, sigma)?), binom(y / e)))
    } else if x <= k && y % e == 1 % e && y > 1 {
        let cycle: Vec<usize> = (r..=s).collect();
        Ok((Some(cycled(&module, &cycle, sigma)?), binom((y - 1) / e)))
    } else if x > k && y % e == 0 {
        Ok((module.key_of(sigma), binom(y / e)))
    } else {
        Ok((None, Some(BigUint::from(0u32))))
    }
}

/// `psi^{T^A} [sigma^lambda_mu]` from the case table.
pub fn garnir_psi_action<F: Field>(mu: &Partition, shape: HookShape, q: &QuiverParams, a_node: Node, field: F) -> Result<HookVector<F>> {
    let (key, _) = garnir_closed_form(mu, shape, q, a_node)?;
    Ok(match key {
        Some(k) => HookVector::basis_vector(shape, field, k),
        None => HookVector::zero(shape, field),
    })
}

/// `g^A [sigma^lambda_mu] = C(a_x, f) psi^{T^A} [sigma^lambda_mu]`.
pub fn garnir_action<F: Field>(mu: &Partition, shape: HookShape, q: &QuiverParams, a_node: Node, field: F) -> Result<HookVector<F>> {
    let (key, coefficient) = garnir_closed_form(mu, shape, q, a_node)?;
    let Some(k) = key else {
        return Ok(HookVector::zero(shape, field));
    };
    let coefficient = coefficient.ok_or(Error::Precondition("a shape parameter a_x for the Garnir row"))?;
    let c = field.from_biguint(&coefficient);
    Ok(HookVector::basis_vector(shape, field, k).scaled(&c))
}

/// Compare both closed forms with direct application of the relation words at
/// every Garnir node. Returns the number of nodes checked, or the first
/// mismatching node.
pub fn check_garnir_closed_forms<F: Field>(
    mu: &Partition,
    shape: HookShape,
    q: &QuiverParams,
    field: F,
) -> Result<std::result::Result<usize, Node>> {
    let module = HookModule::new(shape, *q);
    let target = target_tableau(mu, shape)?;
    let key = module.key_of(&target.word).expect("target tableau is standard");
    let v = HookVector::basis_vector(shape, field.clone(), key);
    let nodes = garnir_nodes(mu);
    for &node in &nodes {
        let datum = garnir_datum(mu, node, q)?;
        let direct_psi = module.act_word(&datum.psi_ta_word, &v)?;
        let direct_g = module.sum_on_basis(&field, &datum.garnir_element().terms, key);
        let psi_ok = direct_psi == garnir_psi_action(mu, shape, q, node, field.clone())?;
        let g_ok = direct_g == garnir_action(mu, shape, q, node, field.clone())?;
        if !(psi_ok && g_ok) {
            return Ok(Err(node));
        }
    }
    Ok(Ok(nodes.len()))
}

/// `psi^{T^A}` as a token word, for display.
pub fn psi_ta_tokens(mu: &Partition, a_node: Node, q: &QuiverParams) -> Result<Vec<Generator>> {
    Ok(garnir_datum(mu, a_node, q)?.psi_ta_word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(e: usize) -> QuiverParams {
        QuiverParams::new(e).unwrap()
    }

    fn field(c: u64) -> CoefficientField {
        CoefficientField::from_characteristic(c).unwrap()
    }

    #[test]
    fn target_tableaux() {
        let s31 = HookShape::new(4, 1).unwrap();
        let t = target_tableau(&p(&[2, 2]), s31).unwrap();
        assert_eq!(t.tableau.rows(), &[vec![1, 2, 4], vec![3]]);
        assert_eq!(t.word, PermutationWord::from_word(4, &[3]).unwrap());
        assert!(target_tableau(&p(&[3, 1]), s31).unwrap().word.is_identity());
        let t = target_tableau(&p(&[2, 1, 1]), s31).unwrap();
        assert_eq!(t.tableau.rows(), &[vec![1, 2, 4], vec![3]]);
        assert_eq!(target_tableau(&p(&[4]), s31), Err(Error::TooFewParts { parts: 1, needed: 2 }));
    }

    #[test]
    fn j123_stage() {
        let s3 = HookShape::new(3, 0).unwrap();
        let f = PrimeField::new(3).unwrap();
        let same = solve_j123(&p(&[3]), s3, &q(3), f).unwrap();
        assert_eq!(same.line, Some(HookVector::basis_vector(s3, f, s3.identity_key())));
        assert!(solve_j123(&p(&[2, 1]), s3, &q(3), f).unwrap().line.is_some());
        assert!(solve_j123(&p(&[1, 1, 1]), s3, &q(3), f).unwrap().line.is_none());
    }

    #[test]
    fn bruteforce_examples() {
        let c = bruteforce_hom(&p(&[3, 1]), HookShape::new(4, 1).unwrap(), &q(3), field(0)).unwrap();
        assert_eq!(c.dimension, 1);
        assert_eq!(c.image, vec![ImageTerm { sigma: vec![1, 2, 3, 4], coefficient: "1".into() }]);
        for ch in [0, 3] {
            assert_eq!(bruteforce_hom(&p(&[2, 1]), HookShape::new(3, 0).unwrap(), &q(3), field(ch)).unwrap().dimension, 1);
        }
        assert_eq!(bruteforce_hom(&p(&[2, 1, 1]), HookShape::new(4, 1).unwrap(), &q(3), field(0)).unwrap().dimension, 0);
        let s = HookShape::new(12, 1).unwrap();
        let dims: Vec<usize> =
            [2, 3, 0].iter().map(|&ch| bruteforce_hom(&p(&[6, 6]), s, &q(3), field(ch)).unwrap().dimension).collect();
        assert_eq!(dims, vec![1, 0, 0]);
    }

    #[test]
    fn classification_examples() {
        let c = classify_hom(&p(&[3, 1]), HookShape::new(4, 1).unwrap(), &q(3), field(0)).unwrap();
        assert_eq!((c.dimension, c.case), (1, Some(FormCase::I)));
        for ch in [0, 2, 3, 5] {
            let c = classify_hom(&p(&[2, 1]), HookShape::new(3, 0).unwrap(), &q(3), field(ch)).unwrap();
            assert_eq!((c.dimension, c.case, c.a.clone(), c.m), (1, Some(FormCase::III), Some(vec![1, 1]), Some(1)));
            assert_eq!(c.gc.as_deref(), Some("0"));
            let c = classify_hom(&p(&[6, 3]), HookShape::new(9, 1).unwrap(), &q(3), field(ch)).unwrap();
            assert_eq!((c.dimension, c.case, c.c, c.a.clone(), c.m), (1, Some(FormCase::I), Some(2), Some(vec![2, 1]), Some(0)));
        }
        let c = classify_hom(&p(&[1, 1, 1]), HookShape::new(3, 0).unwrap(), &q(3), field(3)).unwrap();
        assert_eq!(c.dimension, 0);
    }

    #[test]
    fn forms_check() {
        let s3 = HookShape::new(3, 0).unwrap();
        let fc = mu_forms_check(&p(&[2, 1]), s3, &q(3)).unwrap();
        assert!(fc.weight_matches && fc.consistent());
        assert_eq!(fc.matches[0].case, FormCase::III);
        let fc = mu_forms_check(&p(&[2, 1, 1]), HookShape::new(4, 1).unwrap(), &q(3)).unwrap();
        assert!(!fc.weight_matches && fc.consistent());
        let fc = mu_forms_check(&p(&[3, 1]), HookShape::new(4, 1).unwrap(), &q(3)).unwrap();
        assert_eq!(fc.matches[0].case, FormCase::I);
    }

    #[test]
    fn graded_degrees() {
        let s3 = HookShape::new(3, 0).unwrap();
        let c = classify_hom(&p(&[2, 1]), s3, &q(3), field(3)).unwrap();
        assert_eq!(hom_graded_dimension(&c, &p(&[2, 1]), s3, &q(3)), Ok(1));
        let c = classify_hom(&p(&[3]), s3, &q(3), field(3)).unwrap();
        assert_eq!(hom_graded_dimension(&c, &p(&[3]), s3, &q(3)), Ok(0));
        let s51 = HookShape::new(6, 1).unwrap();
        let c = classify_hom(&p(&[4, 1, 1]), s51, &q(3), field(3)).unwrap();
        assert_eq!(hom_graded_dimension(&c, &p(&[4, 1, 1]), s51, &q(3)), Ok(1));
        let zero = classify_hom(&p(&[1, 1, 1]), s3, &q(3), field(3)).unwrap();
        assert_eq!(hom_graded_dimension(&zero, &p(&[1, 1, 1]), s3, &q(3)), Err(Error::ZeroHom));
    }

    #[test]
    fn conjugates() {
        let (l, m) = conjugate_pair(&p(&[3, 1]), &p(&[3, 1, 1]));
        assert_eq!(l, p(&[3, 1, 1]));
        assert_eq!(m, p(&[2, 1, 1]));
        assert_eq!(conjugate_pair(&p(&[2, 1]), &p(&[2, 1])).1, p(&[2, 1]));
    }

    #[test]
    fn garnir_closed_forms() {
        let s = HookShape::new(12, 1).unwrap();
        let a = Node::new(1, 3);
        let psi = garnir_psi_action(&p(&[6, 6]), s, &q(3), a, Rationals).unwrap();
        assert!(!psi.is_zero());
        let g2 = garnir_action(&p(&[6, 6]), s, &q(3), a, PrimeField::new(2).unwrap()).unwrap();
        assert!(g2.is_zero());
        let g3 = garnir_action(&p(&[6, 6]), s, &q(3), a, PrimeField::new(3).unwrap()).unwrap();
        assert!(!g3.is_zero());
        let s81 = HookShape::new(9, 1).unwrap();
        assert!(garnir_psi_action(&p(&[6, 3]), s81, &q(3), a, Rationals).unwrap().is_zero());
        assert!(garnir_psi_action(&p(&[6, 3]), s81, &q(3), Node::new(1, 1), Rationals).unwrap().is_zero());
        for mu in [p(&[6, 6]), p(&[6, 3]), p(&[2, 1])] {
            let shape = if mu.size() == 3 { HookShape::new(3, 0).unwrap() } else { HookShape::new(mu.size(), 1).unwrap() };
            assert!(check_garnir_closed_forms(&mu, shape, &q(3), Rationals).unwrap().is_ok());
        }
    }

    #[test]
    fn certificate_round_trip() {
        let c = classify_hom(&p(&[2, 1]), HookShape::new(3, 0).unwrap(), &q(3), field(3)).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<HomCertificate>(&json).unwrap(), c);
        let b = bruteforce_hom(&p(&[6, 6]), HookShape::new(12, 1).unwrap(), &q(3), field(2)).unwrap();
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(serde_json::from_str::<HomCertificate>(&json).unwrap(), b);
    }
}
