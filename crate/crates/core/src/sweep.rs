//! Parallel cross-check of the two Hom computations over a grid of instances.
//!
//! One job per `(d, mu, e)`: the Specht relation words are built once and
//! reused for every hook and field. Jobs share nothing; rows are collected and
//! sorted at the end so the output does not depend on scheduling.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{CoefficientField, Field};
use crate::combinatorics::{Node, Partition, QuiverParams};
use crate::error::{Error, Result};
use crate::hom::{
    bruteforce_kernel, check_garnir_closed_forms, classify_hom_in, leg_nodes, match_forms, match_forms_by_congruence,
    FormCase,
};
use crate::hook::{HookModule, HookShape};
use crate::presentation::relation_generators;
use crate::with_field;

/// Hard ceiling on `--dmax`; the environment variable can only lower it.
pub const DMAX_CAP: usize = 12;
pub const DMAX_ENV: &str = "HOOK_SPECHT_DMAX";

/// The effective cap: [`DMAX_CAP`], lowered by `HOOK_SPECHT_DMAX` when set.
pub fn dmax_cap() -> usize {
    std::env::var(DMAX_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DMAX_CAP, |v| v.min(DMAX_CAP))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub dmin: usize,
    pub dmax: usize,
    pub e_list: Vec<usize>,
    pub char_list: Vec<u64>,
    /// Restrict to these `k`; every `k < d` when empty.
    #[serde(default)]
    pub k_list: Vec<usize>,
    /// Worker threads; hardware parallelism when `None`.
    #[serde(skip)]
    pub jobs: Option<usize>,
}

impl SweepConfig {
    pub fn new(dmax: usize, e_list: Vec<usize>, char_list: Vec<u64>) -> Self {
        SweepConfig { dmin: 1, dmax, e_list, char_list, k_list: Vec::new(), jobs: None }
    }

    fn validate(&self) -> Result<(Vec<QuiverParams>, Vec<CoefficientField>)> {
        let cap = dmax_cap();
        if self.dmax > cap {
            return Err(Error::Precondition("dmax within the configured cap"));
        }
        let quivers = self.e_list.iter().map(|&e| QuiverParams::new(e)).collect::<Result<Vec<_>>>()?;
        let fields = self.char_list.iter().map(|&c| CoefficientField::from_characteristic(c)).collect::<Result<Vec<_>>>()?;
        Ok((quivers, fields))
    }

    fn ks(&self, d: usize) -> Vec<usize> {
        (0..d).filter(|k| self.k_list.is_empty() || self.k_list.contains(k)).collect()
    }
}

/// One `(mu, lambda, e, field)` instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub d: usize,
    pub k: usize,
    pub mu: Partition,
    pub lambda: Partition,
    pub e: usize,
    pub char: u64,
    pub bruteforce_dimension: usize,
    pub classified_dimension: usize,
    pub case: Option<FormCase>,
    pub gc: Option<String>,
    pub degree: Option<i64>,
    /// Dimension one: the kernel is spanned by `[sigma^lambda_mu]`.
    pub image_matches: Option<bool>,
    /// Dimension one: leg nodes are exactly `(2,1), ..., (k+1,1)`.
    pub legs_in_first_column: Option<bool>,
    /// Whether every admissible parametrization gives the same verdict.
    pub parametrizations_agree: bool,
    /// Both gates on the second shape select the same parametrizations.
    pub congruence_consistent: bool,
    /// Matched instances: closed forms at every Garnir node agree with the words.
    pub garnir_closed_form: Option<bool>,
    pub agreement: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub nonzero: usize,
    pub disagreements: usize,
    pub max_dimension: usize,
    pub garnir_checked: usize,
    pub garnir_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema: String,
    pub parameters: SweepConfig,
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.summary.disagreements == 0
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| !r.agreement)
    }

    /// One JSON object per row, then a summary line.
    pub fn write_json_lines<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for row in &self.rows {
            serde_json::to_writer(&mut out, row)?;
            writeln!(out)?;
        }
        let tail = serde_json::json!({
            "schema": self.schema,
            "parameters": self.parameters,
            "summary": self.summary,
        });
        serde_json::to_writer(&mut out, &tail)?;
        writeln!(out)
    }

    /// Rows as CSV; list-valued fields use their display form.
    pub fn write_csv<W: Write>(&self, out: W) -> std::result::Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "d",
            "k",
            "mu",
            "lambda",
            "e",
            "char",
            "bruteforce_dimension",
            "classified_dimension",
            "case",
            "gc",
            "degree",
            "image_matches",
            "legs_in_first_column",
            "parametrizations_agree",
            "congruence_consistent",
            "garnir_closed_form",
            "agreement",
        ])?;
        let opt = |o: Option<String>| o.unwrap_or_default();
        for r in &self.rows {
            w.write_record([
                r.d.to_string(),
                r.k.to_string(),
                r.mu.to_string(),
                r.lambda.to_string(),
                r.e.to_string(),
                r.char.to_string(),
                r.bruteforce_dimension.to_string(),
                r.classified_dimension.to_string(),
                opt(r.case.map(|c| c.to_string())),
                opt(r.gc.clone()),
                opt(r.degree.map(|x| x.to_string())),
                opt(r.image_matches.map(|x| x.to_string())),
                opt(r.legs_in_first_column.map(|x| x.to_string())),
                r.parametrizations_agree.to_string(),
                r.congruence_consistent.to_string(),
                opt(r.garnir_closed_form.map(|x| x.to_string())),
                r.agreement.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn instance<F: Field>(
    mu: &Partition,
    shape: HookShape,
    q: &QuiverParams,
    module: &HookModule,
    generators: &[crate::presentation::RelationGenerator],
    field: F,
    coefficient_field: CoefficientField,
) -> Result<SweepRow> {
    let solved = bruteforce_kernel(module, mu, generators, field.clone());
    let (cert, image) = classify_hom_in(mu, shape, q, field.clone(), coefficient_field)?;
    let dim = solved.basis.len();

    let mut image_matches = None;
    let mut legs = None;
    if dim == 1 {
        let spanned = solved.basis[0].as_multiple_of_basis().map(|(k, _)| k);
        image_matches = Some(spanned.is_some() && spanned == image.as_multiple_of_basis().map(|(k, _)| k));
        legs = Some(spanned.is_some_and(|key| {
            let want: Vec<Node> = (2..=shape.k() + 1).map(|r| Node::new(r, 1)).collect();
            leg_nodes(mu, key) == want
        }));
    }

    let matches = match_forms(mu, shape, q);
    let parametrizations_agree = matches
        .iter()
        .map(|m| coefficient_field.kills(m.gc().value()))
        .collect::<Vec<_>>()
        .windows(2)
        .all(|w| w[0] == w[1]);
    let congruence_consistent = match_forms_by_congruence(mu, shape, q) == matches;
    let garnir_closed_form =
        if matches.is_empty() { None } else { Some(check_garnir_closed_forms(mu, shape, q, field)?.is_ok()) };

    let agreement = dim == cert.dimension
        && dim <= 1
        && image_matches.unwrap_or(true)
        && legs.unwrap_or(true)
        && parametrizations_agree
        && congruence_consistent
        && garnir_closed_form.unwrap_or(true);

    Ok(SweepRow {
        d: shape.d(),
        k: shape.k(),
        mu: mu.clone(),
        lambda: shape.partition(),
        e: q.e(),
        char: coefficient_field.characteristic(),
        bruteforce_dimension: dim,
        classified_dimension: cert.dimension,
        case: cert.case,
        gc: cert.gc,
        degree: cert.degree,
        image_matches,
        legs_in_first_column: legs,
        parametrizations_agree,
        congruence_consistent,
        garnir_closed_form,
        agreement,
    })
}

fn job(mu: &Partition, q: QuiverParams, config: &SweepConfig, fields: &[CoefficientField]) -> Result<Vec<SweepRow>> {
    let d = mu.size();
    let generators = relation_generators(mu, &q)?;
    let mut rows = Vec::new();
    for k in config.ks(d) {
        let shape = HookShape::new(d, k)?;
        let module = HookModule::new(shape, q);
        for &cf in fields {
            rows.push(with_field!(cf, f => instance(mu, shape, &q, &module, &generators, f, cf))?);
        }
    }
    Ok(rows)
}

/// Run every instance of the grid and collect a sorted report.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let (quivers, fields) = config.validate()?;
    let jobs: Vec<(Partition, QuiverParams)> = (config.dmin.max(1)..=config.dmax)
        .flat_map(Partition::all)
        .flat_map(|mu| quivers.iter().map(move |&q| (mu.clone(), q)))
        .collect();
    let work = || -> Result<Vec<SweepRow>> {
        let chunks: Vec<Vec<SweepRow>> =
            jobs.par_iter().map(|(mu, q)| job(mu, *q, config, &fields)).collect::<Result<_>>()?;
        Ok(chunks.into_iter().flatten().collect())
    };
    let mut rows = match config.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|_| Error::Precondition("a worker pool"))?
            .install(work)?,
        None => work()?,
    };
    // lexicographic by (d, k, mu) with mu compared as a part list, then e and char
    rows.sort_by(|a, b| (a.d, a.k, a.mu.parts(), a.e, a.char).cmp(&(b.d, b.k, b.mu.parts(), b.e, b.char)));

    let mut summary = SweepSummary { instances: rows.len(), ..Default::default() };
    for r in &rows {
        summary.nonzero += usize::from(r.bruteforce_dimension > 0);
        summary.disagreements += usize::from(!r.agreement);
        summary.max_dimension = summary.max_dimension.max(r.bruteforce_dimension);
        if let Some(ok) = r.garnir_closed_form {
            summary.garnir_checked += 1;
            summary.garnir_failures += usize::from(!ok);
        }
    }
    Ok(SweepReport { schema: crate::hom::SCHEMA.to_string(), parameters: config.clone(), rows, summary })
}
