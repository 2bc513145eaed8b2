//! Instance generation, the bound checks, and corpus runs.

pub mod bound;
pub mod checks;
pub mod instance;
pub mod report;

use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;

use crate::error::Result;

pub use bound::{Expr, Value};
pub use checks::{all_pass, run_checks, CheckConfig, Context, CHECK_GROUPS};
pub use instance::{
    complete_intersection, corpus, corpus_specs, edge_ideal, generate_instance, random_form, strongly_stable_closure,
    Family, Instance, InstanceSpec,
};
pub use report::{BoundReport, Relation, Verdict, Witness};

/// Runs the checks on every instance in parallel; reports come back ordered
/// by instance id, then in check order.
pub fn run_corpus(instances: &[Instance], config: &CheckConfig) -> Vec<BoundReport> {
    let mut per: Vec<(String, Vec<BoundReport>)> =
        instances.par_iter().map(|inst| (inst.id.clone(), run_checks(inst, config))).collect();
    per.sort_by(|a, b| a.0.cmp(&b.0));
    per.into_iter().flat_map(|(_, r)| r).collect()
}

pub fn write_jsonl<W: Write>(reports: &[BoundReport], mut out: W) -> Result<()> {
    for r in reports {
        let line = serde_json::to_string(r).map_err(|e| crate::Error::Io(e.to_string()))?;
        writeln!(out, "{line}")?;
    }
    Ok(())
}

pub fn write_tsv<W: Write>(reports: &[BoundReport], mut out: W) -> Result<()> {
    writeln!(out, "instance\tcheck\tlhs\tlog2_rhs\tverdict")?;
    for r in reports {
        writeln!(out, "{}", r.tsv_line())?;
    }
    Ok(())
}

/// Verdict counts per check name.
pub fn summarize(reports: &[BoundReport]) -> BTreeMap<String, BTreeMap<Verdict, usize>> {
    let mut out: BTreeMap<String, BTreeMap<Verdict, usize>> = BTreeMap::new();
    for r in reports {
        *out.entry(r.check.clone()).or_default().entry(r.verdict).or_default() += 1;
    }
    out
}
