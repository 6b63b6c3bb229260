use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};
use twofloat::TwoFloat;

use crate::algebra::Rational;

/// Highest Bernoulli index kept in the cache.
const BERNOULLI_MAX: usize = 80;

fn bigint_to_dd(x: &BigInt) -> TwoFloat {
    let hi = x.to_f64().unwrap_or(f64::NAN);
    let rest = match BigInt::from_f64(hi) {
        Some(h) => x - h,
        None => return TwoFloat::from(hi),
    };
    let lo = rest.to_f64().unwrap_or(0.0);
    TwoFloat::new_add(hi, lo)
}

/// Double-double quotient by three rounds of long division; the library
/// operator `TwoFloat / TwoFloat` is only accurate to about 1e-17.
pub fn dd_div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let q1 = a.hi() / b.hi();
    let r = a - b * q1;
    let q2 = r.hi() / b.hi();
    let r = r - b * q2;
    let q3 = r.hi() / b.hi();
    TwoFloat::new_add(q1, q2) + q3
}

/// Rounds a rational to double-double.
pub fn rational_to_dd(r: &Rational) -> TwoFloat {
    dd_div(bigint_to_dd(r.numer()), bigint_to_dd(r.denom()))
}

fn bernoulli_table() -> &'static [Rational] {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut b: Vec<Rational> = vec![Rational::one()];
        let mut binom_row: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
        for m in 1..=BERNOULLI_MAX {
            // advance to row m+1 of Pascal's triangle
            let mut next = vec![BigInt::one(); m + 2];
            for j in 1..=m {
                next[j] = &binom_row[j - 1] + binom_row.get(j).cloned().unwrap_or_default();
            }
            binom_row = next;
            let mut acc = Rational::zero();
            for (j, bj) in b.iter().enumerate() {
                acc += bj * Rational::from_integer(binom_row[j].clone());
            }
            b.push(-acc / Rational::from_integer(BigInt::from(m as u64 + 1)));
        }
        b
    })
}

/// Exact Bernoulli number `B_m` (with `B_1 = -1/2`).
pub fn bernoulli(m: usize) -> Rational {
    assert!(m <= BERNOULLI_MAX, "Bernoulli index {m} beyond cache");
    bernoulli_table()[m].clone()
}

fn factorial_rational(n: usize) -> Rational {
    Rational::from_integer((1..=n as u64).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
}

/// `B_{2k}/(2k)!` for `k >= 1`.
pub fn em_coeff(k: usize) -> TwoFloat {
    static TABLE: OnceLock<Vec<TwoFloat>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=BERNOULLI_MAX / 2)
            .map(|k| rational_to_dd(&(bernoulli(2 * k) / factorial_rational(2 * k))))
            .collect()
    })[k]
}

/// `(2^{2k} - 1) B_{2k}/(2k)!` for `k >= 1`.
pub fn boole_coeff(k: usize) -> TwoFloat {
    static TABLE: OnceLock<Vec<TwoFloat>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=BERNOULLI_MAX / 2)
            .map(|k| {
                let pow = Rational::from_integer((BigInt::one() << (2 * k)) - 1);
                rational_to_dd(&(pow * bernoulli(2 * k) / factorial_rational(2 * k)))
            })
            .collect()
    })[k]
}

/// `B_{2k}/(2k)` for `k >= 1`, the coefficients of the harmonic-number
/// expansion.
pub fn harmonic_coeff(k: usize) -> TwoFloat {
    static TABLE: OnceLock<Vec<TwoFloat>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=BERNOULLI_MAX / 2)
            .map(|k| {
                if k == 0 {
                    TwoFloat::from(0.0)
                } else {
                    rational_to_dd(
                        &(bernoulli(2 * k) / Rational::from_integer(BigInt::from(2 * k))),
                    )
                }
            })
            .collect()
    })[k]
}

/// `ln 2 = Σ_{k≥1} 1/(k 2^k)`, summed from the small end.
pub fn ln2() -> TwoFloat {
    static VALUE: OnceLock<TwoFloat> = OnceLock::new();
    *VALUE.get_or_init(|| {
        let mut acc = TwoFloat::from(0.0);
        for k in (1..=120).rev() {
            acc += TwoFloat::from(0.5f64.powi(k)) / k as f64;
        }
        acc
    })
}

/// `1/n^s` in double-double.
pub fn inv_pow(n: usize, s: u32) -> TwoFloat {
    let inv = TwoFloat::from(1.0) / n as f64;
    let mut out = TwoFloat::from(1.0);
    for _ in 0..s {
        out *= inv;
    }
    out
}

pub fn dd_abs(x: TwoFloat) -> f64 {
    x.hi().abs()
}
