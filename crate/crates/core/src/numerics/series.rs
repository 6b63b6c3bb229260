//! Asymptotic expansions in `n` used for the tails of nested sums.
//!
//! A series is a finite sum of terms `c · ε^n · (ln n)^a · n^{-b}` with
//! `ε = ±1`. Every term with `b <= complete` is exact; higher orders are
//! discarded.

use std::collections::BTreeMap;

use twofloat::TwoFloat;

use super::dd::{boole_coeff, dd_abs, em_coeff};
use super::NumericError;

/// Highest power of `1/n` carried by any series.
pub const ORDER_CAP: u32 = 28;

/// `(alternating, log power, inverse power)`.
type Key = (bool, u32, u32);

#[derive(Clone, Debug)]
pub struct Series {
    terms: BTreeMap<Key, TwoFloat>,
    complete: u32,
}

impl Series {
    pub fn zero() -> Self {
        Series {
            terms: BTreeMap::new(),
            complete: ORDER_CAP,
        }
    }

    pub fn constant(c: TwoFloat) -> Self {
        Self::monomial(false, 0, 0, c)
    }

    pub fn monomial(alternating: bool, log_power: u32, inv_power: u32, c: TwoFloat) -> Self {
        let mut s = Self::zero();
        s.add_term((alternating, log_power, inv_power), c);
        s
    }

    #[cfg(test)]
    pub fn complete(&self) -> u32 {
        self.complete
    }

    pub fn add_term(&mut self, key: Key, c: TwoFloat) {
        if key.2 > self.complete {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(|| TwoFloat::from(0.0));
        *e += c;
    }

    fn truncate(&mut self) {
        let limit = self.complete;
        self.terms.retain(|k, c| k.2 <= limit && c.hi() != 0.0);
    }

    fn min_order(&self) -> u32 {
        self.terms.keys().map(|k| k.2).min().unwrap_or(ORDER_CAP)
    }

    pub fn add(&self, other: &Series) -> Series {
        let mut out = Series {
            terms: self.terms.clone(),
            complete: self.complete.min(other.complete),
        };
        for (&k, &c) in &other.terms {
            out.add_term(k, c);
        }
        out.truncate();
        out
    }

    pub fn scale(&self, c: TwoFloat) -> Series {
        Series {
            terms: self.terms.iter().map(|(&k, &v)| (k, v * c)).collect(),
            complete: self.complete,
        }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let complete = (self.complete + other.min_order())
            .min(other.complete + self.min_order())
            .min(ORDER_CAP);
        let mut out = Series {
            terms: BTreeMap::new(),
            complete,
        };
        for (&(e1, a1, b1), &c1) in &self.terms {
            for (&(e2, a2, b2), &c2) in &other.terms {
                out.add_term((e1 != e2, a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out.truncate();
        out
    }

    /// The tail `Σ_{m>n} f(m)` as a series in `n`.
    ///
    /// Non-alternating terms use Euler-Maclaurin,
    /// `∫_n^∞ f - f(n)/2 - Σ_k B_{2k}/(2k)! f^{(2k-1)}(n)`; alternating terms
    /// use Boole summation,
    /// `(-1)^n [-f(n)/2 - Σ_k (2^{2k}-1) B_{2k}/(2k)! f^{(2k-1)}(n)]`.
    pub fn tail_sum(&self) -> Result<Series, NumericError> {
        let complete = self.complete.saturating_sub(1);
        let mut out = Series {
            terms: BTreeMap::new(),
            complete,
        };
        for (&(alt, a, b), &c) in &self.terms {
            if !alt {
                if b < 2 {
                    return Err(NumericError::Divergent(format!(
                        "tail of (ln n)^{a} n^-{b} diverges"
                    )));
                }
                // ∫_n^∞ L^a x^{-b} dx = Σ_j a!/(a-j)! L^{a-j} n^{1-b}/(b-1)^{j+1}
                let mut falling = 1.0f64;
                let mut scaled = c / (b - 1) as f64;
                for j in 0..=a {
                    out.add_term((false, a - j, b - 1), scaled * falling);
                    falling *= (a - j) as f64;
                    scaled /= (b - 1) as f64;
                }
            } else if b < 1 {
                return Err(NumericError::Divergent(format!(
                    "alternating tail of (ln n)^{a} n^-{b} does not converge"
                )));
            }
            out.add_term((alt, a, b), -c * 0.5);
            let mut deriv: BTreeMap<(u32, u32), TwoFloat> = BTreeMap::new();
            deriv.insert((a, b), TwoFloat::from(1.0));
            let mut order = 0usize;
            loop {
                deriv = differentiate(&deriv);
                order += 1;
                let lowest = deriv.keys().map(|k| k.1).min().unwrap_or(u32::MAX);
                if deriv.is_empty() || lowest > complete {
                    break;
                }
                if order % 2 == 1 {
                    let k = order.div_ceil(2);
                    let w = if alt { boole_coeff(k) } else { em_coeff(k) };
                    for (&(da, db), &dc) in &deriv {
                        out.add_term((alt, da, db), -c * w * dc);
                    }
                }
            }
        }
        out.truncate();
        Ok(out)
    }

    /// Value at `n` (given as `1/n`, `ln n` and the parity of `n`) together
    /// with an estimate of the truncation error: the magnitude of the two
    /// highest retained orders plus a bound for the first discarded one.
    pub fn eval(&self, inv_n: f64, log_n: TwoFloat, n_odd: bool) -> (TwoFloat, f64) {
        let mut value = TwoFloat::from(0.0);
        let mut estimate = 0.0f64;
        let mut coeff_mass = 0.0f64;
        let mut max_log = 0u32;
        for (&(alt, a, b), &c) in &self.terms {
            let mut t = c * inv_n.powi(b as i32);
            for _ in 0..a {
                t *= log_n;
            }
            if alt && n_odd {
                t = -t;
            }
            value += t;
            if b + 2 > self.complete {
                estimate += dd_abs(t);
            }
            coeff_mass += dd_abs(c);
            max_log = max_log.max(a);
        }
        let log_scale = dd_abs(log_n).max(1.0).powi(max_log as i32);
        estimate += inv_n.powi(self.complete as i32 + 1) * coeff_mass.max(1.0) * log_scale;
        (value, estimate)
    }
}

/// `d/dx` applied to `Σ c L^a x^{-b}`:
/// `D(L^a x^{-b}) = a L^{a-1} x^{-b-1} - b L^a x^{-b-1}`.
fn differentiate(p: &BTreeMap<(u32, u32), TwoFloat>) -> BTreeMap<(u32, u32), TwoFloat> {
    let mut out: BTreeMap<(u32, u32), TwoFloat> = BTreeMap::new();
    for (&(a, b), &c) in p {
        if a > 0 {
            *out.entry((a - 1, b + 1))
                .or_insert_with(|| TwoFloat::from(0.0)) += c * a as f64;
        }
        if b > 0 {
            *out.entry((a, b + 1)).or_insert_with(|| TwoFloat::from(0.0)) -= c * b as f64;
        }
    }
    out.retain(|_, c| c.hi() != 0.0);
    out
}
