//! The KLR defining relations, checked as operator identities on every basis
//! vector of a hook module.
//!
//! Each relation is written as `sum c_w w = 0` on `e(i)[sigma]` with
//! `i = i_sigma`; off that weight both sides vanish trivially.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{BasisKey, HookModule, HookVector};
use crate::arith::Field;
use crate::combinatorics::{Adjacency, Residue};
use crate::klr::{Generator, Word};

/// Counts for one relation family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCount {
    pub family: String,
    pub checked: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RelationReport {
    pub families: Vec<FamilyCount>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(|f| f.failures == 0)
    }

    pub fn total_checked(&self) -> usize {
        self.families.iter().map(|f| f.checked).sum()
    }

    /// Add another report's counts family by family.
    pub fn merge(&mut self, other: &RelationReport) {
        for f in &other.families {
            match self.families.iter_mut().find(|g| g.family == f.family) {
                Some(g) => {
                    g.checked += f.checked;
                    g.failures += f.failures;
                }
                None => self.families.push(f.clone()),
            }
        }
    }

    fn record(&mut self, family: &str, ok: bool) {
        let entry = match self.families.iter().position(|f| f.family == family) {
            Some(p) => &mut self.families[p],
            None => {
                self.families.push(FamilyCount { family: family.to_string(), checked: 0, failures: 0 });
                self.families.last_mut().expect("just pushed")
            }
        };
        entry.checked += 1;
        if !ok {
            entry.failures += 1;
        }
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fam in &self.families {
            let verdict = if fam.failures == 0 { "ok" } else { "FAIL" };
            writeln!(f, "{:<22} {:>9} checked {:>6} failed  {verdict}", fam.family, fam.checked, fam.failures)?;
        }
        Ok(())
    }
}

/// Relation families, in the order they are reported.
pub const FAMILIES: [&str; 12] = [
    "idempotent",
    "dot-weight",
    "psi-weight",
    "grading",
    "dot-commute",
    "psi-dot-distant",
    "psi-dot-adjacent",
    "quadratic",
    "psi-commute",
    "braid",
    "first-psi",
    "extreme-vector",
];

struct Checker<'a, F: Field> {
    module: &'a HookModule,
    field: F,
}

impl<F: Field> Checker<'_, F> {
    fn eval(&self, terms: &[(i64, Word)], key: BasisKey) -> HookVector<F> {
        self.module.sum_on_basis(&self.field, terms, key)
    }

    fn vanishes(&self, terms: &[(i64, Word)], key: BasisKey) -> bool {
        self.eval(terms, key).is_zero()
    }
}

fn y(r: usize) -> Generator {
    Generator::Dot(r)
}

fn psi(r: usize) -> Generator {
    Generator::Psi(r)
}

/// Check every family on every basis vector of `module` over `field`.
pub fn verify_relations<F: Field>(module: &HookModule, field: F) -> RelationReport {
    let mut report = RelationReport::default();
    for fam in FAMILIES {
        report.families.push(FamilyCount { family: fam.to_string(), checked: 0, failures: 0 });
    }
    let c = Checker { module, field: field.clone() };
    let q = module.quiver();
    let d = module.shape().d();
    let keys = module.shape().keys();
    let weights: BTreeSet<Vec<Residue>> = keys.iter().map(|&k| module.weight(k)).collect();
    let degrees: BTreeMap<BasisKey, i64> = keys.iter().map(|&k| (k, module.degree(k))).collect();

    for &key in &keys {
        let i = module.weight(key);
        let basis = HookVector::basis_vector(module.shape(), field.clone(), key);

        for j in &weights {
            let got = module.act_e(j, &basis);
            let ok = if *j == i { got == basis } else { got.is_zero() };
            report.record("idempotent", ok);
        }

        for r in 1..=d {
            let img = module.dot_on_basis(r, key);
            report.record("dot-weight", img.is_none_or(|(_, k)| module.weight(k) == i));
            report.record("grading", img.is_none_or(|(_, k)| degrees[&k] - degrees[&key] == 2));
        }
        for r in 1..d {
            let img = module.psi_on_basis(r, key);
            let mut swapped = i.clone();
            swapped.swap(r - 1, r);
            report.record("psi-weight", img.is_none_or(|(_, k)| module.weight(k) == swapped));
            let expected = -q.cartan(i[r - 1], i[r]);
            report.record("grading", img.is_none_or(|(_, k)| degrees[&k] - degrees[&key] == expected));
        }
        report.record("first-psi", d < 2 || module.psi_on_basis(1, key).is_none());

        for r in 1..=d {
            for s in r + 1..=d {
                report.record("dot-commute", c.vanishes(&[(1, vec![y(r), y(s)]), (-1, vec![y(s), y(r)])], key));
            }
        }

        for r in 1..d {
            for s in (1..=d).filter(|&s| s != r && s != r + 1) {
                let ok = c.vanishes(&[(1, vec![psi(r), y(s)]), (-1, vec![y(s), psi(r)])], key);
                report.record("psi-dot-distant", ok);
            }
            let delta = i64::from(i[r - 1] == i[r]);
            let mut first = vec![(1, vec![psi(r), y(r + 1)]), (-1, vec![y(r), psi(r)])];
            let mut second = vec![(1, vec![y(r + 1), psi(r)]), (-1, vec![psi(r), y(r)])];
            if delta != 0 {
                first.push((-1, vec![]));
                second.push((-1, vec![]));
            }
            report.record("psi-dot-adjacent", c.vanishes(&first, key));
            report.record("psi-dot-adjacent", c.vanishes(&second, key));

            let square = vec![psi(r), psi(r)];
            let quad: Vec<(i64, Word)> = match q.adjacency(i[r - 1], i[r]) {
                Adjacency::Equal => vec![(1, square)],
                Adjacency::Unlinked => vec![(1, square), (-1, vec![])],
                Adjacency::Arrow => vec![(1, square), (-1, vec![y(r + 1)]), (1, vec![y(r)])],
                Adjacency::Reverse => vec![(1, square), (-1, vec![y(r)]), (1, vec![y(r + 1)])],
            };
            report.record("quadratic", c.vanishes(&quad, key));

            for s in r + 2..d {
                report.record("psi-commute", c.vanishes(&[(1, vec![psi(r), psi(s)]), (-1, vec![psi(s), psi(r)])], key));
            }
        }

        for r in 1..d.saturating_sub(1) {
            let mut braid = vec![(1, vec![psi(r), psi(r + 1), psi(r)]), (-1, vec![psi(r + 1), psi(r), psi(r + 1)])];
            if i[r - 1] == i[r + 1] {
                match q.adjacency(i[r - 1], i[r]) {
                    Adjacency::Arrow => braid.push((-1, vec![])),
                    Adjacency::Reverse => braid.push((1, vec![])),
                    _ => {}
                }
            }
            report.record("braid", c.vanishes(&braid, key));
        }
    }

    // each weight space has a one-dimensional joint dot kernel, spanned by the
    // extreme vector, which has the largest degree in that space
    for i in &weights {
        let ok = match module.extreme_vector(i) {
            None => false,
            Some(ext) => {
                let kernel = module.dot_kernel(field.clone(), i);
                kernel.len() == 1
                    && kernel[0].as_multiple_of_basis().map(|(k, _)| k) == Some(ext.key)
                    && module.weight_space(i).iter().all(|k| degrees[k] <= degrees[&ext.key])
            }
        };
        report.record("extreme-vector", ok);
    }
    report
}
