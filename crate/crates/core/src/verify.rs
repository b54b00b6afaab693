//! Sweeps that compare every closed-form result against the oracle.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circulant::{graphs_of_order, QuarticCirculant};
use crate::error::{Error, Result};
use crate::extremal::{
    applicable_families, extremal_report, ExtremumMode, GraphClass, NullSpaceDescriptor,
};
use crate::nullity::{is_nut, is_singular, nullity};
use crate::oracle::{self, extremum_of, kernel_dimension, oracle_nullities};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyMode {
    Formula,
    Extremal,
    Bases,
    All,
}

impl FromStr for VerifyMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(VerifyMode::Formula),
            "extremal" => Ok(VerifyMode::Extremal),
            "bases" => Ok(VerifyMode::Bases),
            "all" => Ok(VerifyMode::All),
            _ => Err(Error::Domain(format!("unknown verify mode `{s}`"))),
        }
    }
}

/// Outcome of one sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub checked: usize,
    /// First counterexample in sweep order, if any.
    pub failure: Option<String>,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: ok ({} checked)", self.name, self.checked),
            Some(msg) => write!(
                f,
                "{}: FAILED after {} checked: {}",
                self.name, self.checked, msg
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n_max: u64,
    pub checks: Vec<CheckSummary>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckSummary::passed)
    }
}

fn all_graphs(n_max: u64) -> Vec<QuarticCirculant> {
    (5..=n_max).flat_map(graphs_of_order).collect()
}

/// Collects per-item results in order and reports the first failure.
fn summarize(name: &str, results: Vec<std::result::Result<(), String>>) -> CheckSummary {
    let checked = results.len();
    let failure = results.into_iter().find_map(|r| r.err());
    CheckSummary {
        name: name.to_string(),
        checked,
        failure,
    }
}

/// Closed-form nullity, singularity and nut tests against exact kernel dimensions.
pub fn verify_formula(n_max: u64) -> CheckSummary {
    let results = all_graphs(n_max)
        .par_iter()
        .map(|g| {
            let formula = nullity(g).nullity;
            let exact = kernel_dimension(&g.adjacency_matrix()) as u64;
            if formula != exact {
                return Err(format!("{g}: formula {formula}, oracle {exact}"));
            }
            if is_singular(g) != (exact >= 1) {
                return Err(format!(
                    "{g}: singularity test disagrees with nullity {exact}"
                ));
            }
            if is_nut(g) != (exact == 1) {
                return Err(format!("{g}: nut test disagrees with nullity {exact}"));
            }
            Ok(())
        })
        .collect();
    summarize("formula", results)
}

/// Table values and attaining sets against brute-force extrema, both classes and modes.
pub fn verify_extremal(n_max: u64) -> CheckSummary {
    let results = (5..=n_max)
        .into_par_iter()
        .flat_map_iter(|n| {
            let everything = oracle_nullities(n, GraphClass::All);
            GraphClass::ALL
                .into_iter()
                .flat_map(move |class| {
                    let pool: Vec<_> = everything
                        .iter()
                        .filter(|(g, _)| class.admits(g))
                        .copied()
                        .collect();
                    ExtremumMode::ALL.into_iter().map(move |mode| {
                        let report =
                            extremal_report(n as i64, class, mode).map_err(|e| e.to_string())?;
                        let brute = extremum_of(&pool, mode);
                        if report.value != brute.value || report.attaining != brute.attaining {
                            return Err(format!(
                            "n={n} {class} {mode}: table gives {} at {:?}, brute force {} at {:?}",
                            report.value, report.attaining, brute.value, brute.attaining
                        ));
                        }
                        if report.nullspace.dimension() as u64 != report.value {
                            return Err(format!(
                            "n={n} {class} {mode}: null-space basis has {} vectors for value {}",
                            report.nullspace.dimension(),
                            report.value
                        ));
                        }
                        for &(p, q) in &report.attaining {
                            let g = QuarticCirculant::new(n as i64, p as i64, q as i64)
                                .map_err(|e| e.to_string())?;
                            let a = g.adjacency_matrix();
                            if let Some(v) =
                                report.nullspace.basis.iter().find(|v| !a.annihilates(v))
                            {
                                return Err(format!(
                                    "n={n} {class} {mode}: {g} does not annihilate {v:?}"
                                ));
                            }
                        }
                        Ok(())
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    summarize("extremal", results)
}

/// Checks one closed-form basis against a graph: exact annihilation,
/// dimension equal to the formula nullity and span equal to the oracle kernel.
pub fn check_closed_form(
    g: &QuarticCirculant,
    d: &NullSpaceDescriptor,
    oracle_basis: &[Vec<i64>],
) -> std::result::Result<(), String> {
    let a = g.adjacency_matrix();
    if let Some(v) = d.basis.iter().find(|v| !a.annihilates(v)) {
        return Err(format!("{g}: {} vector {v:?} is not in the kernel", d.kind));
    }
    let expected = nullity(g).nullity as usize;
    if d.dimension() != expected || oracle::rank_of_vectors(&d.basis) != expected {
        return Err(format!(
            "{g}: {} basis has {} vectors of rank {}, nullity is {expected}",
            d.kind,
            d.dimension(),
            oracle::rank_of_vectors(&d.basis)
        ));
    }
    if !oracle::same_span(&d.basis, oracle_basis) && expected > 0 {
        return Err(format!(
            "{g}: {} basis does not span the oracle kernel",
            d.kind
        ));
    }
    Ok(())
}

/// Every closed-form family each graph belongs to, against the oracle kernel.
pub fn verify_bases(n_max: u64) -> CheckSummary {
    let candidates: Vec<QuarticCirculant> = all_graphs(n_max)
        .into_iter()
        .filter(|g| !applicable_families(g).is_empty())
        .collect();
    let results = candidates
        .par_iter()
        .map(|g| {
            let families = applicable_families(g);
            let oracle_basis = oracle::kernel(&g.adjacency_matrix()).integer_basis();
            for kind in families {
                let d = NullSpaceDescriptor::closed_form(kind, g.order())
                    .ok_or_else(|| format!("{g}: {kind} has no closed form"))?;
                check_closed_form(g, &d, &oracle_basis)?;
            }
            Ok(())
        })
        .collect();
    summarize("bases", results)
}

pub fn verify(n_max: i64, mode: VerifyMode) -> Result<VerifyReport> {
    if n_max < 5 {
        return Err(Error::OrderTooSmall { n: n_max });
    }
    let n_max = n_max as u64;
    let mut checks = Vec::new();
    if matches!(mode, VerifyMode::Formula | VerifyMode::All) {
        checks.push(verify_formula(n_max));
    }
    if matches!(mode, VerifyMode::Extremal | VerifyMode::All) {
        checks.push(verify_extremal(n_max));
    }
    if matches!(mode, VerifyMode::Bases | VerifyMode::All) {
        checks.push(verify_bases(n_max));
    }
    Ok(VerifyReport { n_max, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_sweeps_pass() {
        let r = verify(6, VerifyMode::Formula).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks[0].checked, 2);
        assert!(verify(20, VerifyMode::All).unwrap().passed());
        assert_eq!(
            verify(4, VerifyMode::All),
            Err(Error::OrderTooSmall { n: 4 })
        );
    }

    #[test]
    fn closed_form_check_catches_wrong_basis() {
        let g = QuarticCirculant::new(10, 1, 4).unwrap();
        let oracle_basis = oracle::kernel(&g.adjacency_matrix()).integer_basis();
        let wrong =
            NullSpaceDescriptor::closed_form(crate::extremal::NullSpaceKind::AlternatingSpan, 10)
                .unwrap();
        assert!(check_closed_form(&g, &wrong, &oracle_basis).is_err());
    }
}
