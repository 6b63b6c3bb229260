use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::Rational;

use super::NumericError;

pub const MAX_EXACT_N: usize = 60;
pub const MAX_EXACT_DEPTH: usize = 6;

fn signed_inverse_power(s: i32, n: usize) -> Rational {
    let mut r = Rational::new(BigInt::one(), BigInt::from(n).pow(s.unsigned_abs()));
    if s < 0 && n % 2 == 1 {
        r = -r;
    }
    r
}

/// `ζ_n(s_1,...,s_k) = Σ_{n >= n_1 > ... > n_k >= 1} Π σ_j^{n_j} / n_j^{|s_j|}`
/// with `σ_j = -1` for a negative (barred) entry. `ζ_n(∅) = 1`.
pub fn eval_mhs_exact(args: &[i32], n: usize) -> Result<Rational, NumericError> {
    if n > MAX_EXACT_N || args.len() > MAX_EXACT_DEPTH {
        return Err(NumericError::SizeGuard(format!(
            "exact harmonic sums need n <= {MAX_EXACT_N} and depth <= {MAX_EXACT_DEPTH}"
        )));
    }
    if args.contains(&0) {
        return Err(NumericError::SizeGuard("zero argument".into()));
    }
    let k = args.len();
    // acc[i] = ζ_m(s_{i+1},...,s_k) for the current m; acc[k] = 1.
    let mut acc = vec![Rational::zero(); k + 1];
    acc[k] = Rational::one();
    for m in 1..=n {
        for i in 0..k {
            let t = signed_inverse_power(args[i], m) * &acc[i + 1];
            acc[i] += t;
        }
    }
    Ok(acc.swap_remove(0))
}

/// `H_n^(i)` for `i > 0`, or the alternating `H̄_n^(|i|) = Σ (-1)^{k-1}/k^|i|`
/// for `i < 0`.
pub fn harmonic_exact(i: i32, n: usize) -> Rational {
    let mut acc = Rational::zero();
    for k in 1..=n {
        let t = Rational::new(BigInt::one(), BigInt::from(k).pow(i.unsigned_abs()));
        if i < 0 && k % 2 == 0 {
            acc -= t;
        } else {
            acc += t;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn conventions() {
        assert_eq!(eval_mhs_exact(&[], 5).unwrap(), ratio(1, 1));
        assert_eq!(eval_mhs_exact(&[3], 0).unwrap(), ratio(0, 1));
        assert_eq!(eval_mhs_exact(&[1, 1], 1).unwrap(), ratio(0, 1));
        assert_eq!(eval_mhs_exact(&[1, 1], 2).unwrap(), ratio(1, 2));
    }

    #[test]
    fn small_values() {
        assert_eq!(eval_mhs_exact(&[2, 1], 4).unwrap(), ratio(17, 32));
        assert_eq!(eval_mhs_exact(&[-1], 2).unwrap(), ratio(-1, 2));
        assert_eq!(harmonic_exact(-1, 2), ratio(1, 2));
        assert_eq!(harmonic_exact(2, 3), ratio(49, 36));
    }

    #[test]
    fn guards() {
        assert!(eval_mhs_exact(&[1], 61).is_err());
        assert!(eval_mhs_exact(&[1; 7], 3).is_err());
    }
}
