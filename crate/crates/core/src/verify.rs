//! Numerical comparison of an Euler sum with a symbolic form of it.

use serde::Serialize;

use crate::algebra::LinComb;
use crate::index::EulerSumIndex;
use crate::numerics::{
    eval_euler_sum, Evaluator, NumericError, NumericResult, MIN_ATOM_TOL, MIN_EULER_TOL,
};

/// Oracle precision relative to the requested tolerance.
const ORACLE_FACTOR: f64 = 1e-2;

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub index: String,
    pub direct: f64,
    pub direct_bound: f64,
    pub symbolic: f64,
    pub symbolic_bound: f64,
    pub discrepancy: f64,
    pub tol: f64,
    pub passed: bool,
}

impl VerifyReport {
    /// `discrepancy <= direct_bound + symbolic_bound + tol`.
    pub fn allowance(&self) -> f64 {
        self.direct_bound + self.symbolic_bound + self.tol
    }
}

/// Atom tolerance used when checking against `tol`.
pub fn oracle_atom_tol(tol: f64) -> f64 {
    (tol * ORACLE_FACTOR).max(MIN_ATOM_TOL)
}

/// Euler-sum tolerance used when checking against `tol`.
pub fn oracle_sum_tol(tol: f64) -> f64 {
    (tol * ORACLE_FACTOR).max(MIN_EULER_TOL)
}

/// Evaluates `idx` directly and `form` atom by atom, and passes when the two
/// values agree within both bounds plus `tol`.
pub fn verify_form(
    idx: &EulerSumIndex,
    form: &LinComb,
    tol: f64,
    evaluator: Option<&Evaluator>,
) -> Result<VerifyReport, NumericError> {
    let direct = eval_euler_sum(idx, oracle_sum_tol(tol))?;
    let owned;
    let ev = match evaluator {
        Some(ev) => ev,
        None => {
            owned = Evaluator::new(oracle_atom_tol(tol))?;
            &owned
        }
    };
    let symbolic = ev.lincomb(form)?;
    Ok(report(idx, &direct, &symbolic, tol))
}

fn report(
    idx: &EulerSumIndex,
    direct: &NumericResult,
    symbolic: &NumericResult,
    tol: f64,
) -> VerifyReport {
    VerifyReport {
        index: idx.to_string(),
        direct: direct.to_f64(),
        direct_bound: direct.tail_bound,
        symbolic: symbolic.to_f64(),
        symbolic_bound: symbolic.tail_bound,
        discrepancy: direct.discrepancy(symbolic),
        tol,
        passed: direct.agrees_with(symbolic, tol),
    }
}
