//! Feasibility scans over a range of orders at a fixed degree.

use std::fmt::Write as _;

use cayley_nut_core::{
    check_cayley_feasible, construct_cayley_nut, select_regime, ConstructionResult, Error, Regime,
    SearchWindow,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::format::parameters_json;

#[derive(Debug, Clone, PartialEq)]
pub enum RowOutcome {
    Feasible(Box<ConstructionResult>),
    Infeasible(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub order: usize,
    pub outcome: RowOutcome,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub degree: usize,
    pub max_order: usize,
    pub rows: Vec<ScanRow>,
}

/// Scans `n = 1..=max_order`. Feasible rows are constructed and certified in
/// parallel; rows come back in ascending order regardless of scheduling.
///
/// Any construction error on a feasible row aborts the scan.
pub fn run_scan(
    degree: usize,
    max_order: usize,
    window: SearchWindow,
) -> Result<ScanReport, Error> {
    // Fail fast before any work if a circulant row lies outside the window.
    for n in 1..=max_order {
        if select_regime(n, degree).is_ok_and(|r| r == Regime::Circulant) {
            window.check(n)?;
        }
    }
    let rows = (1..=max_order)
        .into_par_iter()
        .map(|n| {
            let outcome = match check_cayley_feasible(n, degree) {
                Err(condition) => RowOutcome::Infeasible(condition.to_string()),
                Ok(()) => RowOutcome::Feasible(Box::new(construct_cayley_nut(n, degree, window)?)),
            };
            Ok(ScanRow { order: n, outcome })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(ScanReport {
        degree,
        max_order,
        rows,
    })
}

impl ScanReport {
    pub fn feasible_orders(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| matches!(r.outcome, RowOutcome::Feasible(_)))
            .map(|r| r.order)
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| match &row.outcome {
                RowOutcome::Feasible(r) => json!({
                    "order": row.order,
                    "feasible": true,
                    "regime": r.regime.as_str(),
                    "graph6": r.certificate.graph6(),
                    "parameters": parameters_json(r),
                    "verified": r.certificate.verify().is_ok(),
                }),
                RowOutcome::Infeasible(reason) => json!({
                    "order": row.order,
                    "feasible": false,
                    "reason": reason,
                    "graph6": "",
                }),
            })
            .collect();
        let feasible = self.feasible_orders().len();
        json!({
            "degree": self.degree,
            "max_order": self.max_order,
            "rows": rows,
            "summary": {
                "feasible": feasible,
                "infeasible": self.rows.len() - feasible,
                "total": self.rows.len(),
            },
        })
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# degree={} max_order={}", self.degree, self.max_order).unwrap();
        writeln!(
            out,
            "{:>5}  {:<8}  {:<24}  graph6",
            "order", "feasible", "regime/reason"
        )
        .unwrap();
        for row in &self.rows {
            match &row.outcome {
                RowOutcome::Feasible(r) => writeln!(
                    out,
                    "{:>5}  {:<8}  {:<24}  {}",
                    row.order,
                    "yes",
                    r.regime.as_str(),
                    r.certificate.graph6()
                ),
                RowOutcome::Infeasible(reason) => {
                    writeln!(out, "{:>5}  {:<8}  fails {reason}", row.order, "no")
                }
            }
            .unwrap();
        }
        let feasible = self.feasible_orders().len();
        writeln!(
            out,
            "# feasible={} infeasible={}",
            feasible,
            self.rows.len() - feasible
        )
        .unwrap();
        out
    }
}
