//! Numerical oracle: exact finite harmonic sums and double-double evaluation
//! of (alternating) MZVs, `Li_q(1/2)` and Euler sums.
//!
//! Series are split at `N` (a power of two, so `ln N = k ln 2` is exact to
//! working precision). The head `n <= N` is summed directly in double-double;
//! the tail `n > N` comes from asymptotic expansions in `1/N` and `ln N`
//! (Euler-Maclaurin for plain tails, Boole summation for alternating ones).
//! The reported bound is the size of the highest retained orders plus a
//! rounding allowance of `8 · ops · 2^-106` relative to the summed magnitude.

mod atom;
mod dd;
mod euler;
mod lincomb;
mod mhs;
mod series;

use thiserror::Error;

pub use atom::{eval_atom, eval_atom_at};
pub use dd::{bernoulli, rational_to_dd};
pub use euler::{eval_euler_sum, eval_euler_sum_at};
pub use lincomb::{eval_lincomb, eval_term, Evaluator};
pub use mhs::{eval_mhs_exact, harmonic_exact, MAX_EXACT_DEPTH, MAX_EXACT_N};
pub use twofloat::TwoFloat;

/// Hard cap on the partial-sum length.
pub const N_MAX: usize = 10_000_000;
/// Smallest accepted target tolerance for atoms and combinations of atoms.
pub const MIN_ATOM_TOL: f64 = 1e-12;
/// Smallest accepted target tolerance for Euler sums.
pub const MIN_EULER_TOL: f64 = 1e-10;
/// Initial partial-sum length.
pub const BASE_TERMS: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericResult {
    pub value: TwoFloat,
    /// Bound on `|value - true value|` under the documented tail estimate.
    pub tail_bound: f64,
    pub terms_used: usize,
}

impl NumericResult {
    pub fn to_f64(&self) -> f64 {
        self.value.hi()
    }

    /// `|self - other| <= self.bound + other.bound + slack`.
    pub fn agrees_with(&self, other: &NumericResult, slack: f64) -> bool {
        self.discrepancy(other) <= self.tail_bound + other.tail_bound + slack
    }

    pub fn discrepancy(&self, other: &NumericResult) -> f64 {
        (self.value - other.value).hi().abs()
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum NumericError {
    #[error("target tolerance {tol:e} is outside the supported range (minimum {min:e})")]
    Tolerance { tol: f64, min: f64 },
    #[error("tolerance {target:e} not reached within {terms} terms (achieved bound {achieved:e})")]
    Capacity {
        target: f64,
        achieved: f64,
        terms: usize,
    },
    #[error("divergent series: {0}")]
    Divergent(String),
    #[error("size guard: {0}")]
    SizeGuard(String),
}

fn check_tol(tol: f64, min: f64) -> Result<(), NumericError> {
    if !tol.is_finite() || tol < min {
        return Err(NumericError::Tolerance { tol, min });
    }
    Ok(())
}

fn rounding_floor(ops: usize, magnitude: f64) -> f64 {
    8.0 * (ops.max(1) as f64) * 2f64.powi(-106) * (1.0 + magnitude)
}

/// Doubles the partial-sum length from [`BASE_TERMS`] until the bound meets
/// `tol`, giving up beyond [`N_MAX`].
fn escalate(
    tol: f64,
    mut f: impl FnMut(usize) -> Result<NumericResult, NumericError>,
) -> Result<NumericResult, NumericError> {
    let mut n = BASE_TERMS;
    loop {
        let r = f(n)?;
        if r.tail_bound <= tol {
            return Ok(r);
        }
        if n * 2 > N_MAX {
            return Err(NumericError::Capacity {
                target: tol,
                achieved: r.tail_bound,
                terms: n,
            });
        }
        n *= 2;
    }
}
