use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{LinComb, MzvAtom, Rational, SymbolicTerm};
use crate::combinatorics::{compositions, factorial, permutations};
use crate::index::EulerSumIndex;

use super::ExpansionError;

/// Expands `S_{i_1...i_m,q}` (all `i_j >= 2`, `q >= 2`, no bars) by writing
/// each factor as `ζ(i) - (ζ(i) - H_n^(i))` and expanding the product.
///
/// The selected tail factors `Π (ζ(i_j) - H_n^(i_j)) = Σ_{n_1..n_l > n}` are
/// ordered by a composition and a literal permutation of the selection; the
/// summation over `n` then contributes the final argument `q`.
pub fn expand_theorem2(idx: &EulerSumIndex) -> Result<LinComb, ExpansionError> {
    let inner = idx.inner();
    let q = idx.outer();
    if q < 2 || inner.iter().any(|&i| i < 2) {
        return Err(ExpansionError::UnsupportedHypothesis(format!(
            "{idx}: the tail-product expansion needs unbarred exponents >= 2"
        )));
    }
    let m = inner.len();
    if m > super::MAX_DEGREE {
        return Err(ExpansionError::DegreeCap { degree: m });
    }

    let mut out = LinComb::zero();
    for mask in 0u32..(1u32 << m) {
        let selected: Vec<i32> = (0..m)
            .filter(|&j| mask & (1 << j) != 0)
            .map(|j| inner[j])
            .collect();
        let prefactor = SymbolicTerm::new(
            (0..m)
                .filter(|&j| mask & (1 << j) == 0)
                .map(|j| MzvAtom::zeta_unchecked(vec![inner[j]]))
                .collect(),
        );
        let sign = if selected.len() % 2 == 1 {
            -Rational::one()
        } else {
            Rational::one()
        };
        for (args, c) in tail_product(&selected, q)? {
            let term = prefactor.mul(&SymbolicTerm::atom(MzvAtom::zeta_unchecked(args)));
            out.add_term(term, c * &sign);
        }
    }
    Ok(out)
}

/// `Σ_n n^{-q} Π_{j} Σ_{n_j > n} n_j^{-e_j}` as `(args, coeff)` pairs, one per
/// (composition, permutation) pair, without collapsing orbits.
fn tail_product(exponents: &[i32], q: i32) -> Result<Vec<(Vec<i32>, Rational)>, ExpansionError> {
    let l = exponents.len();
    if l == 0 {
        return Ok(vec![(vec![q], Rational::one())]);
    }
    let comps = compositions(l)?;
    let mut out = Vec::new();
    for comp in &comps {
        let denom = comp
            .parts()
            .iter()
            .fold(BigInt::one(), |acc, &p| acc * BigInt::from(factorial(p)));
        let c = Rational::new(BigInt::one(), denom);
        for perm in permutations(l)? {
            let mut args: Vec<i32> = comp
                .blocks()
                .map(|r| perm[r].iter().map(|&k| exponents[k - 1]).sum())
                .collect();
            args.push(q);
            out.push((args, c.clone()));
        }
    }
    Ok(out)
}
