use twofloat::TwoFloat;

use crate::algebra::MzvAtom;

use super::dd::{dd_abs, inv_pow, ln2};
use super::series::Series;
use super::{escalate, rounding_floor, NumericError, NumericResult, MIN_ATOM_TOL};

/// Terms of `Li_q(1/2)` summed directly.
const POLYLOG_TERMS: usize = 120;

/// Evaluates one atom to within `target_tol`.
pub fn eval_atom(atom: &MzvAtom, target_tol: f64) -> Result<NumericResult, NumericError> {
    super::check_tol(target_tol, MIN_ATOM_TOL)?;
    match atom {
        MzvAtom::PolylogHalf(q) => polylog_half(*q),
        MzvAtom::Zeta(args) => escalate(target_tol, |n| zeta_at(args, n)),
    }
}

/// Evaluates one atom with a fixed partial-sum length (rounded up to a power
/// of two).
pub fn eval_atom_at(atom: &MzvAtom, terms: usize) -> Result<NumericResult, NumericError> {
    match atom {
        MzvAtom::PolylogHalf(q) => polylog_half(*q),
        MzvAtom::Zeta(args) => zeta_at(args, terms.next_power_of_two().max(2)),
    }
}

/// `Li_q(1/2) = Σ 2^{-k}/k^q`; the tail after `K` terms is below
/// `2·2^{-K}/K^q`.
fn polylog_half(q: u32) -> Result<NumericResult, NumericError> {
    if q < 2 {
        return Err(NumericError::Divergent(format!(
            "Li({q},1/2) is not an atom"
        )));
    }
    let mut acc = TwoFloat::from(0.0);
    for k in (1..=POLYLOG_TERMS).rev() {
        acc += inv_pow(k, q) * 0.5f64.powi(k as i32);
    }
    let k = POLYLOG_TERMS as f64;
    let tail = 2.0 * 0.5f64.powi(POLYLOG_TERMS as i32) / k.powi(q as i32);
    Ok(NumericResult {
        value: acc,
        tail_bound: tail + rounding_floor(POLYLOG_TERMS, dd_abs(acc)),
        terms_used: POLYLOG_TERMS,
    })
}

/// Asymptotic series of `G_j(n) = Σ_{n_1 > ... > n_j > n} Π σ_i^{n_i} n_i^{-s_i}`
/// for `j = 0..=k`, built innermost-last: `G_j(n) = Σ_{m>n} σ_j^m m^{-s_j} G_{j-1}(m)`.
pub(crate) fn nested_tails(args: &[i32]) -> Result<Vec<Series>, NumericError> {
    let mut tails = vec![Series::constant(TwoFloat::from(1.0))];
    for &s in args {
        let step = Series::monomial(s < 0, 0, s.unsigned_abs(), TwoFloat::from(1.0));
        let next = tails.last().expect("nonempty").mul(&step).tail_sum()?;
        tails.push(next);
    }
    Ok(tails)
}

/// `ζ(s_1,...,s_k) = Σ_j G_j(N) · ζ_N(s_{j+1},...,s_k)`: the first `j`
/// summation variables exceed `N`, the rest do not.
fn zeta_at(args: &[i32], n: usize) -> Result<NumericResult, NumericError> {
    if args.is_empty() || args.contains(&0) {
        return Err(NumericError::Divergent("malformed zeta arguments".into()));
    }
    if args[0] == 1 {
        return Err(NumericError::Divergent(format!(
            "z({args:?}) has leading 1"
        )));
    }
    let k = args.len();
    let tails = nested_tails(args)?;

    let mut partial = vec![TwoFloat::from(0.0); k + 1];
    partial[k] = TwoFloat::from(1.0);
    let max_s = args.iter().map(|s| s.unsigned_abs()).max().unwrap_or(1) as usize;
    let mut powers = vec![TwoFloat::from(1.0); max_s + 1];
    for m in 1..=n {
        let inv = TwoFloat::from(1.0) / m as f64;
        for p in 1..=max_s {
            powers[p] = powers[p - 1] * inv;
        }
        for i in 0..k {
            let s = args[i];
            let mut t = powers[s.unsigned_abs() as usize] * partial[i + 1];
            if s < 0 && m % 2 == 1 {
                t = -t;
            }
            partial[i] += t;
        }
    }

    let inv_n = 1.0 / n as f64;
    let log_n = ln2() * (n.trailing_zeros() as f64);
    let mut value = TwoFloat::from(0.0);
    let mut bound = 0.0;
    for (j, tail) in tails.iter().enumerate() {
        let (g, est) = tail.eval(inv_n, log_n, n % 2 == 1);
        value += g * partial[j];
        bound += est * dd_abs(partial[j]).max(1.0);
    }
    Ok(NumericResult {
        value,
        tail_bound: bound + rounding_floor(n * (k + 1), dd_abs(value)),
        terms_used: n,
    })
}

/// `ζ(s)` for `s >= 2` at the base truncation.
pub(crate) fn zeta_value(s: u32) -> Result<TwoFloat, NumericError> {
    Ok(zeta_at(&[s as i32], super::BASE_TERMS)?.value)
}
