use std::collections::BTreeMap;

use twofloat::TwoFloat;

use crate::index::EulerSumIndex;

use super::atom::zeta_value;
use super::dd::{dd_abs, harmonic_coeff, ln2};
use super::series::{Series, ORDER_CAP};
use super::{escalate, rounding_floor, NumericError, NumericResult, BASE_TERMS, MIN_EULER_TOL};

/// Evaluates `S_{inner,outer}` to within `target_tol`.
pub fn eval_euler_sum(idx: &EulerSumIndex, target_tol: f64) -> Result<NumericResult, NumericError> {
    super::check_tol(target_tol, MIN_EULER_TOL)?;
    escalate(target_tol, |n| euler_sum_at(idx, n))
}

/// Evaluates `S_{inner,outer}` with a fixed partial-sum length (rounded up to
/// a power of two).
pub fn eval_euler_sum_at(idx: &EulerSumIndex, terms: usize) -> Result<NumericResult, NumericError> {
    euler_sum_at(idx, terms.next_power_of_two().max(2))
}

/// Euler's constant from `γ = H_N - ln N - 1/(2N) + Σ_k B_{2k}/(2k N^{2k})`.
pub(crate) fn euler_gamma() -> TwoFloat {
    let n = BASE_TERMS;
    let mut h = TwoFloat::from(0.0);
    for m in (1..=n).rev() {
        h += TwoFloat::from(1.0) / m as f64;
    }
    let inv = 1.0 / n as f64;
    let mut g = h - ln2() * (n.trailing_zeros() as f64) - TwoFloat::from(0.5 * inv);
    for k in 1..=(ORDER_CAP as usize / 2) {
        g += harmonic_coeff(k) * inv.powi(2 * k as i32);
    }
    g
}

/// `ζ(s̄) = Σ (-1)^n/n^s`: `-ln 2` for `s = 1`, else `(2^{1-s} - 1) ζ(s)`.
fn alternating_zeta(s: u32) -> Result<TwoFloat, NumericError> {
    if s == 1 {
        return Ok(-ln2());
    }
    Ok(zeta_value(s)? * (0.5f64.powi(s as i32 - 1) - 1.0))
}

/// Large-`n` expansion of one harmonic factor.
///
/// `H_n = ln n + γ + 1/(2n) - Σ_k B_{2k}/(2k n^{2k})`,
/// `H_n^(i) = ζ(i) - Σ_{m>n} m^{-i}`,
/// `H̄_n^(i) = -ζ(ī) + Σ_{m>n} (-1)^m m^{-i}`.
fn harmonic_series(i: i32, gamma: TwoFloat) -> Result<Series, NumericError> {
    let one = TwoFloat::from(1.0);
    let s = i.unsigned_abs();
    if i == 1 {
        let mut out = Series::monomial(false, 1, 0, one);
        out.add_term((false, 0, 0), gamma);
        out.add_term((false, 0, 1), TwoFloat::from(0.5));
        for k in 1..=(ORDER_CAP as usize / 2) {
            out.add_term((false, 0, 2 * k as u32), -harmonic_coeff(k));
        }
        Ok(out)
    } else if i > 0 {
        let tail = Series::monomial(false, 0, s, one).tail_sum()?;
        Ok(Series::constant(zeta_value(s)?).add(&tail.scale(-one)))
    } else {
        let tail = Series::monomial(true, 0, s, one).tail_sum()?;
        Ok(Series::constant(-alternating_zeta(s)?).add(&tail))
    }
}

fn euler_sum_at(idx: &EulerSumIndex, n: usize) -> Result<NumericResult, NumericError> {
    if idx.outer() == 1 {
        return Err(NumericError::Divergent(idx.to_string()));
    }
    let q = idx.outer().unsigned_abs();
    let barred_outer = idx.outer() < 0;

    let mut counts: BTreeMap<i32, u32> = BTreeMap::new();
    for &i in idx.inner() {
        *counts.entry(i).or_default() += 1;
    }
    let factors: Vec<(i32, u32)> = counts.into_iter().collect();

    // Direct part Σ_{m<=N} outer(m) Π H_m.
    let mut harmonic = vec![TwoFloat::from(0.0); factors.len()];
    let mut direct = TwoFloat::from(0.0);
    let mut magnitude = 0.0f64;
    for m in 1..=n {
        let inv = TwoFloat::from(1.0) / m as f64;
        for (h, &(i, _)) in harmonic.iter_mut().zip(&factors) {
            let mut t = inv;
            for _ in 1..i.unsigned_abs() {
                t *= inv;
            }
            if i < 0 && m % 2 == 0 {
                *h -= t;
            } else {
                *h += t;
            }
        }
        let mut term = TwoFloat::from(1.0);
        for _ in 0..q {
            term *= inv;
        }
        if barred_outer && m % 2 == 0 {
            term = -term;
        }
        for (h, &(_, mult)) in harmonic.iter().zip(&factors) {
            for _ in 0..mult {
                term *= *h;
            }
        }
        magnitude += dd_abs(term);
        direct += term;
    }

    // Tail Σ_{m>N} from the asymptotic expansion of the summand.
    let gamma = euler_gamma();
    let mut summand = if barred_outer {
        // (-1)^{m-1} m^{-q} = -(-1)^m m^{-q}
        Series::monomial(true, 0, q, TwoFloat::from(-1.0))
    } else {
        Series::monomial(false, 0, q, TwoFloat::from(1.0))
    };
    for &(i, mult) in &factors {
        let h = harmonic_series(i, gamma)?;
        for _ in 0..mult {
            summand = summand.mul(&h);
        }
    }
    let tail = summand.tail_sum()?;
    let log_n = ln2() * (n.trailing_zeros() as f64);
    let (tail_value, estimate) = tail.eval(1.0 / n as f64, log_n, n % 2 == 1);
    let value = direct + tail_value;
    let ops = n * (idx.inner().len() + q as usize + 2);
    Ok(NumericResult {
        value,
        tail_bound: estimate + rounding_floor(ops, magnitude.max(dd_abs(value))),
        terms_used: n,
    })
}
