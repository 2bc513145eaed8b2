use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::resolution::BettiTable;

use super::bound::{Expr, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesesNotMet,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::HypothesesNotMet => "hypotheses_not_met",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Le,
    Eq,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Witness {
    /// Nonzero `(i, j, beta_{i,j}(S/I))`.
    pub betti: Vec<[u64; 3]>,
    pub seeds: Vec<u64>,
    pub gb_sizes: BTreeMap<String, usize>,
    pub details: BTreeMap<String, serde_json::Value>,
}

impl Witness {
    pub fn with_table(table: &BettiTable) -> Self {
        Witness { betti: table.entries().map(|(i, j, b)| [i as u64, j as u64, b]).collect(), ..Default::default() }
    }

    pub fn detail(mut self, key: &str, value: impl Serialize) -> Self {
        self.details.insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub instance: String,
    pub check: String,
    pub relation: Relation,
    pub inputs: BTreeMap<String, i64>,
    pub lhs: Option<i64>,
    /// Decimal right-hand side when it could be materialized.
    pub rhs: Option<String>,
    pub rhs_expr: Option<String>,
    pub rhs_log2: Option<f64>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub witness: Witness,
}

fn log2_of(v: &BigUint) -> f64 {
    let shift = v.bits().saturating_sub(64);
    let top: BigUint = v >> shift;
    top.to_u64().map_or(f64::NAN, |t| (t as f64).log2() + shift as f64)
}

pub type Inputs = Vec<(&'static str, i64)>;

fn inputs_map(inputs: Inputs) -> BTreeMap<String, i64> {
    inputs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

impl BoundReport {
    /// `lhs <= expr`, decided exactly.
    pub fn le(instance: &str, check: impl Into<String>, inputs: Inputs, lhs: i64, rhs: Expr, witness: Witness) -> Result<Self> {
        let value = rhs.eval()?;
        let verdict = if lhs < 0 {
            Verdict::Pass
        } else {
            match value.ge(&BigUint::from(lhs as u64)) {
                Some(true) => Verdict::Pass,
                Some(false) => Verdict::Fail,
                None => return Err(Error::Degenerate("bound too weak to decide".into())),
            }
        };
        let log2 = match &value {
            Value::Exact(v) => log2_of(v),
            Value::AtLeastPow2(_) => rhs.approx_log2(),
        };
        Ok(BoundReport {
            instance: instance.to_string(),
            check: check.into(),
            relation: Relation::Le,
            inputs: inputs_map(inputs),
            lhs: Some(lhs),
            rhs: match &value {
                Value::Exact(v) => Some(v.to_string()),
                Value::AtLeastPow2(_) => None,
            },
            rhs_expr: Some(rhs.to_string()),
            rhs_log2: log2.is_finite().then_some(log2),
            verdict,
            note: None,
            witness,
        })
    }

    pub fn eq(instance: &str, check: impl Into<String>, inputs: Inputs, lhs: i64, rhs: i64, witness: Witness) -> Self {
        BoundReport {
            instance: instance.to_string(),
            check: check.into(),
            relation: Relation::Eq,
            inputs: inputs_map(inputs),
            lhs: Some(lhs),
            rhs: Some(rhs.to_string()),
            rhs_expr: None,
            rhs_log2: (rhs > 0).then(|| (rhs as f64).log2()),
            verdict: if lhs == rhs { Verdict::Pass } else { Verdict::Fail },
            note: None,
            witness,
        }
    }

    pub fn not_met(instance: &str, check: impl Into<String>, relation: Relation, inputs: Inputs, reason: &str, witness: Witness) -> Self {
        BoundReport {
            instance: instance.to_string(),
            check: check.into(),
            relation,
            inputs: inputs_map(inputs),
            lhs: None,
            rhs: None,
            rhs_expr: None,
            rhs_log2: None,
            verdict: Verdict::HypothesesNotMet,
            note: Some(reason.to_string()),
            witness,
        }
    }

    /// A check that could not be carried out counts as a failure.
    pub fn error(instance: &str, check: impl Into<String>, err: &Error) -> Self {
        BoundReport {
            instance: instance.to_string(),
            check: check.into(),
            relation: Relation::Le,
            inputs: BTreeMap::new(),
            lhs: None,
            rhs: None,
            rhs_expr: None,
            rhs_log2: None,
            verdict: Verdict::Fail,
            note: Some(format!("error: {err}")),
            witness: Witness::default(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// One TSV line: instance, check, lhs, log2(rhs), verdict.
    pub fn tsv_line(&self) -> String {
        let lhs = self.lhs.map_or_else(|| "-".to_string(), |v| v.to_string());
        let log2 = match (self.rhs_log2, &self.rhs_expr) {
            (Some(v), _) => format!("{v:.3}"),
            (None, Some(_)) => "inf".to_string(),
            (None, None) => "-".to_string(),
        };
        format!("{}\t{}\t{}\t{}\t{}", self.instance, self.check, lhs, log2, self.verdict)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn le_report_decides_exactly() {
        let r = BoundReport::le("x", "c", vec![("mu", 3)], 9, Expr::int(3).pow(Expr::int(2)), Witness::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.rhs.as_deref(), Some("9"));
        let r = BoundReport::le("x", "c", vec![], 10, Expr::int(3).pow(Expr::int(2)), Witness::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn serializes_verdicts_in_snake_case() {
        let r = BoundReport::not_met("x", "c", Relation::Le, vec![], "mu < 2", Witness::default());
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"verdict\":\"hypotheses_not_met\""));
        assert!(r.tsv_line().ends_with("hypotheses_not_met"));
    }
}
