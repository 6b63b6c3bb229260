//! Closed-form rewrites of single atoms.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{int, ratio, LinComb, MzvAtom, Rational};
use crate::combinatorics::binomial;

use super::wkl::{zeta_k1l, MAX_KL};
use super::ReductionError;

/// Largest multiplicity handled by [`rule_repeated`].
pub const MAX_REPEAT: usize = 64;

fn signed(s: u32, barred: bool) -> i32 {
    if barred {
        -(s as i32)
    } else {
        s as i32
    }
}

/// `ζ(s;σ)` with `ζ(1;+) = 0`.
fn zeta_signed(s: u32, barred: bool) -> LinComb {
    if s == 1 && !barred {
        LinComb::zero()
    } else {
        LinComb::zeta(&[signed(s, barred)])
    }
}

/// `ζ(s̄) = (2^{1-s} - 1) ζ(s)` for `s >= 2`; `ζ(1̄)` is a basis atom.
pub fn rule_alt_depth1(s: u32) -> Option<LinComb> {
    if s < 2 {
        return None;
    }
    let c = Rational::new(BigInt::one(), BigInt::one() << (s - 1)) - Rational::one();
    Some(LinComb::zeta(&[s as i32]).scale(&c))
}

/// `ζ({r}_m)` from
/// `ζ({r}_m) = (-1)^{m-1}/m Σ_{i=0}^{m-1} (-1)^i ζ({r}_i) ζ(r(m-i); ε_{m-i})`,
/// where for barred `r` the last factor is barred exactly when `m-i` is odd.
/// The output is a polynomial in depth-1 atoms.
pub fn rule_repeated(r: i32, m: usize) -> Result<LinComb, ReductionError> {
    if r == 0 || r == 1 {
        return Err(ReductionError::Precondition(format!(
            "repeated argument {r} is not admissible"
        )));
    }
    if m == 0 || m > MAX_REPEAT {
        return Err(ReductionError::Precondition(format!(
            "multiplicity {m} outside 1..={MAX_REPEAT}"
        )));
    }
    let s = r.unsigned_abs();
    let barred = r < 0;
    let power = |j: usize| zeta_signed(s * j as u32, barred && j % 2 == 1);
    // values[i] = ζ({r}_i)
    let mut values = vec![LinComb::one()];
    for n in 1..=m {
        let mut acc = LinComb::zero();
        for (i, v) in values.iter().enumerate() {
            let c = ratio(if (n - 1 + i) % 2 == 0 { 1 } else { -1 }, n as i64);
            acc.add_scaled(&(v * &power(n - i)), &c);
        }
        values.push(acc);
    }
    Ok(values.swap_remove(m))
}

/// `ζ({r̄}_m)`.
pub fn rule_repeated_bar(r: u32, m: usize) -> Result<LinComb, ReductionError> {
    rule_repeated(-(r as i32), m)
}

/// Depth-2 odd-weight evaluation
/// `ζ(s,t;σ,τ) = ½[-λ_w + (1+(-1)^s) ζ(s;σ)ζ(t;τ) + μ_w] - Σ_{0<k<w/2} λ_{2k} μ_{w-2k}`
/// with `λ_r = ζ(r;στ)`, `μ_r = (-1)^s [C(r-1,s-1) ζ(r;σ) + C(r-1,t-1) ζ(r;τ)]`
/// and `ζ(1;+) = 0`. Returns `None` for other atoms.
pub fn rule_depth2_oddweight(atom: &MzvAtom) -> Option<LinComb> {
    let (a, b) = match atom.args() {
        Some(&[a, b]) => (a, b),
        _ => return None,
    };
    let (s, t) = (a.unsigned_abs(), b.unsigned_abs());
    let w = s + t;
    if w % 2 == 0 || a == 1 {
        return None;
    }
    let (sigma, tau) = (a < 0, b < 0);
    let prod = sigma != tau;
    let lambda = |r: u32| zeta_signed(r, prod);
    let sgn_s = if s % 2 == 0 { int(1) } else { int(-1) };
    let mu = |r: u32| {
        let mut out = zeta_signed(r, sigma).scale(&Rational::from_integer(BigInt::from(binomial(
            (r - 1) as usize,
            (s - 1) as usize,
        ))));
        out.add_scaled(
            &zeta_signed(r, tau),
            &Rational::from_integer(BigInt::from(binomial((r - 1) as usize, (t - 1) as usize))),
        );
        out.scale(&sgn_s)
    };
    let mut out = lambda(w).scale(&ratio(-1, 2));
    if s % 2 == 0 {
        out = out + &zeta_signed(s, sigma) * &zeta_signed(t, tau);
    }
    out.add_scaled(&mu(w), &ratio(1, 2));
    for k in 1..=(w - 1) / 2 {
        out.add_scaled(&(&lambda(2 * k) * &mu(w - 2 * k)), &int(-1));
    }
    Some(out)
}

/// Matches `ζ(k+1,{1}_l)` with `k >= 1`, `l >= 1` and `k + l` within range.
pub(crate) fn k1l_shape(atom: &MzvAtom) -> Option<(u32, u32)> {
    let args = atom.args()?;
    if args.len() < 2 || args[0] < 2 || args[1..].iter().any(|&x| x != 1) {
        return None;
    }
    let k = args[0] as u32 - 1;
    let l = args.len() as u32 - 1;
    (k + l <= MAX_KL).then_some((k, l))
}

pub(crate) fn apply_k1l(atom: &MzvAtom) -> Option<LinComb> {
    let (k, l) = k1l_shape(atom)?;
    zeta_k1l(k, l).ok()
}

pub(crate) fn apply_alt_depth1(atom: &MzvAtom) -> Option<LinComb> {
    match atom.args() {
        Some(&[s]) if s < 0 => rule_alt_depth1(s.unsigned_abs()),
        _ => None,
    }
}

pub(crate) fn apply_repeated(atom: &MzvAtom) -> Option<LinComb> {
    let args = atom.args()?;
    if args.len() < 2 || args.iter().any(|&x| x != args[0]) {
        return None;
    }
    rule_repeated(args[0], args.len()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_lincomb;

    fn p(s: &str) -> LinComb {
        parse_lincomb(s).unwrap()
    }

    fn z(args: &[i32]) -> MzvAtom {
        MzvAtom::zeta(args.to_vec()).unwrap()
    }

    #[test]
    fn alternating_single() {
        assert_eq!(rule_alt_depth1(2).unwrap(), p("-1/2*z(2)"));
        assert_eq!(rule_alt_depth1(5).unwrap(), p("-15/16*z(5)"));
        assert!(rule_alt_depth1(1).is_none());
    }

    #[test]
    fn repeated_plain_displays() {
        for r in 2..6 {
            let zr = format!("z({r})");
            let z2 = format!("z({})", 2 * r);
            let z3 = format!("z({})", 3 * r);
            let z4 = format!("z({})", 4 * r);
            assert_eq!(
                rule_repeated(r, 2).unwrap(),
                p(&format!("1/2*{zr}^2 - 1/2*{z2}"))
            );
            assert_eq!(
                rule_repeated(r, 3).unwrap(),
                p(&format!("1/6*{zr}^3 - 1/2*{zr}*{z2} + 1/3*{z3}"))
            );
            assert_eq!(
                rule_repeated(r, 4).unwrap(),
                p(&format!(
                    "1/24*{zr}^4 - 1/4*{zr}^2*{z2} + 1/3*{zr}*{z3} + 1/8*{z2}^2 - 1/4*{z4}"
                ))
            );
        }
    }

    #[test]
    fn repeated_bar_displays() {
        for r in 1..6 {
            let zr = format!("z({})", -r);
            let z2 = format!("z({})", 2 * r);
            let z3 = format!("z({})", -3 * r);
            let z4 = format!("z({})", 4 * r);
            assert_eq!(
                rule_repeated_bar(r as u32, 2).unwrap(),
                p(&format!("-1/2*{z2} + 1/2*{zr}^2"))
            );
            assert_eq!(
                rule_repeated_bar(r as u32, 3).unwrap(),
                p(&format!("1/3*{z3} - 1/2*{zr}*{z2} + 1/6*{zr}^3"))
            );
            assert_eq!(
                rule_repeated_bar(r as u32, 4).unwrap(),
                p(&format!(
                    "-1/4*{z4} + 1/3*{zr}*{z3} + 1/8*{z2}^2 - 1/4*{z2}*{zr}^2 + 1/24*{zr}^4"
                ))
            );
        }
    }

    #[test]
    fn repeated_preconditions() {
        assert!(rule_repeated(1, 2).is_err());
        assert!(rule_repeated(2, 0).is_err());
        assert_eq!(rule_repeated(3, 1).unwrap(), p("z(3)"));
    }

    #[test]
    fn depth_two_odd() {
        assert_eq!(rule_depth2_oddweight(&z(&[2, 1])).unwrap(), p("z(3)"));
        assert!(rule_depth2_oddweight(&z(&[3, 1])).is_none());
        assert!(rule_depth2_oddweight(&z(&[2, 1, 1])).is_none());
        // ζ(3,2) = 3ζ(2)ζ(3) - 11/2 ζ(5)
        assert_eq!(
            rule_depth2_oddweight(&z(&[3, 2])).unwrap(),
            p("3*z(2)*z(3) - 11/2*z(5)")
        );
    }

    #[test]
    fn shapes() {
        assert_eq!(k1l_shape(&z(&[4, 1, 1])), Some((3, 2)));
        assert_eq!(k1l_shape(&z(&[4, 1, -1])), None);
        assert_eq!(k1l_shape(&z(&[4])), None);
        assert!(apply_repeated(&z(&[-2, -2])).is_some());
        assert!(apply_repeated(&z(&[2, -2])).is_none());
        assert!(apply_alt_depth1(&z(&[-1])).is_none());
    }
}
