//! Identities for symmetric sums of depth-2 and depth-3 atoms. They act on a
//! whole combination and fire only where every partner atom occurs with the
//! same cofactor.

use std::collections::BTreeSet;

use crate::algebra::{int, LinComb, MzvAtom, Rational, SymbolicTerm};
use crate::combinatorics::multiset_permutations;
use crate::expansion::expand_theorem1;
use crate::index::EulerSumIndex;

use super::ReductionError;

fn single(s: i32) -> LinComb {
    LinComb::zeta(&[s])
}

fn merge_sign(a: i32, b: i32) -> i32 {
    let s = (a.unsigned_abs() + b.unsigned_abs()) as i32;
    if (a < 0) != (b < 0) {
        -s
    } else {
        s
    }
}

/// `ζ(a,b;σ,τ) + ζ(b,a;τ,σ) = ζ(a;σ)ζ(b;τ) - ζ(a+b;στ)`, for signed `a`, `b`
/// that are not `+1`.
pub fn rule_reflection(a: i32, b: i32) -> Option<LinComb> {
    if a == 0 || b == 0 || a == 1 || b == 1 {
        return None;
    }
    Some(&single(a) * &single(b) - single(merge_sign(a, b)))
}

/// Sum of `ζ(x,y,z)` over all six orderings of `(a,b,c)`, for `a,b,c >= 2`:
/// `ζ(a)ζ(b)ζ(c) + 2ζ(a+b+c) - ζ(a)ζ(b+c) - ζ(b)ζ(a+c) - ζ(c)ζ(a+b)`.
pub fn rule_reflection3(a: u32, b: u32, c: u32) -> Option<LinComb> {
    if a < 2 || b < 2 || c < 2 {
        return None;
    }
    let z = |s: u32| single(s as i32);
    let mut out = &(&z(a) * &z(b)) * &z(c);
    out.add_scaled(&z(a + b + c), &int(2));
    out.add_scaled(&(&z(a) * &z(b + c)), &int(-1));
    out.add_scaled(&(&z(b) * &z(a + c)), &int(-1));
    out.add_scaled(&(&z(c) * &z(a + b)), &int(-1));
    Some(out)
}

/// `ζ(k,i,j) + ζ(k,j,i) = S_{ij,k} - S_{i,j+k} - S_{j,i+k} - S_{i+j,k} + 2ζ(i+j+k)`
/// for `j >= i >= 1`, `k >= 2`, with every Euler sum replaced by its
/// weak-ordering expansion.
pub fn rule_symmetric_triple(i: u32, j: u32, k: u32) -> Result<LinComb, ReductionError> {
    if i < 1 || j < i || k < 2 {
        return Err(ReductionError::Precondition(format!(
            "need j >= i >= 1 and k >= 2, got i={i} j={j} k={k}"
        )));
    }
    let s = |inner: Vec<u32>, outer: u32| -> Result<LinComb, ReductionError> {
        let idx = EulerSumIndex::new(inner.into_iter().map(|x| x as i32).collect(), outer as i32)?;
        Ok(expand_theorem1(&idx)?)
    };
    let mut out = s(vec![i, j], k)?;
    out = out - s(vec![i], j + k)?;
    out = out - s(vec![j], i + k)?;
    out = out - s(vec![i + j], k)?;
    out.add_scaled(&single((i + j + k) as i32), &int(2));
    Ok(out)
}

/// Replaces the factor at `pos` of `term` by `value`, scaled by `c`.
fn replace_factor(term: &SymbolicTerm, pos: usize, value: &LinComb, c: &Rational) -> LinComb {
    let rest = LinComb::from_term(term.without(pos), c.clone());
    &rest * value
}

/// One application of the pair reflection: finds a term `c₁·X·A` whose
/// partner `c₂·X·B` is present, `A < B`, and rewrites `A = P - B`.
pub(crate) fn apply_pair(x: &LinComb) -> Option<(MzvAtom, LinComb)> {
    for (term, c) in x.iter() {
        for (pos, atom) in term.factors().iter().enumerate() {
            let (a, b) = match atom.args() {
                Some(&[a, b]) => (a, b),
                _ => continue,
            };
            let partner = match MzvAtom::zeta(vec![b, a]) {
                Ok(p) if &p > atom => p,
                _ => continue,
            };
            let cofactor = term.without(pos);
            let partner_term = cofactor.mul(&SymbolicTerm::atom(partner.clone()));
            if x.coeff(&partner_term) == int(0) {
                continue;
            }
            let p = rule_reflection(a, b)?;
            let value = p - LinComb::atom(partner);
            let mut out = x.clone();
            out.add_term(term.clone(), -c.clone());
            out = out + replace_factor(term, pos, &value, c);
            return Some((atom.clone(), out));
        }
    }
    None
}

/// One application of the triple reflection on a term `c·X·A` with `A` the
/// smallest ordering of `(a,b,c)` and every other distinct ordering present
/// with cofactor `X`.
pub(crate) fn apply_triple(x: &LinComb) -> Option<(MzvAtom, LinComb)> {
    for (term, c) in x.iter() {
        for (pos, atom) in term.factors().iter().enumerate() {
            let args = match atom.args() {
                Some(args) if args.len() == 3 => args,
                _ => continue,
            };
            if args.iter().any(|&s| s < 2) || (args[0] == args[1] && args[1] == args[2]) {
                continue;
            }
            let mut sorted = args.to_vec();
            sorted.sort_unstable();
            let orderings: BTreeSet<Vec<i32>> = multiset_permutations(&sorted).ok()?.collect();
            if orderings.iter().next().map(Vec::as_slice) != Some(args) {
                continue;
            }
            let cofactor = term.without(pos);
            let with = |o: &Vec<i32>| {
                cofactor.mul(&SymbolicTerm::atom(MzvAtom::zeta_unchecked(o.clone())))
            };
            if orderings
                .iter()
                .skip(1)
                .any(|o| x.coeff(&with(o)) == int(0))
            {
                continue;
            }
            let mult = Rational::from_integer((6 / orderings.len() as i64).into());
            let mut value = rule_reflection3(sorted[0] as u32, sorted[1] as u32, sorted[2] as u32)?;
            for o in orderings.iter().skip(1) {
                value.add_scaled(&LinComb::zeta(o), &-mult.clone());
            }
            let value = value.scale(&(int(1) / mult));
            let mut out = x.clone();
            out.add_term(term.clone(), -c.clone());
            out = out + replace_factor(term, pos, &value, c);
            return Some((atom.clone(), out));
        }
    }
    None
}
