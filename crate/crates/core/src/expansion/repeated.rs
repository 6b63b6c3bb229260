//! Closed multinomial forms for `S_{r^m,q}` and its alternating variants.
//!
//! When all harmonic exponents coincide every permutation yields the same
//! block sums, so only compositions are enumerated and the `m!` permutations
//! collapse into a multinomial coefficient.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{LinComb, MzvAtom, Rational, SymbolicTerm};
use crate::combinatorics::{binomial, compositions, multinomial};

use super::ExpansionError;

pub const MAX_RM_MULTIPLICITY: usize = 20;

fn signed(value: i32, barred: bool) -> i32 {
    if barred {
        -value
    } else {
        value
    }
}

/// `S_{r^m,q}` with `r`, `outer` signed (negative = barred).
///
/// For a barred `r` the block of size `θ_c` carries `λ_c = θ_c` bars, so it
/// is barred iff `θ_c` is odd, and the overall sign is `(-1)^m`; a barred
/// outer exponent adds one more factor `-1` and flips the merged block.
pub fn expand_rm_theorem1(r: i32, m: usize, outer: i32) -> Result<LinComb, ExpansionError> {
    if r == 0 || outer == 0 {
        return Err(ExpansionError::InvalidArgument("zero exponent".into()));
    }
    if outer == 1 {
        return Err(ExpansionError::Index(crate::index::IndexError::Divergent(
            format!("S({r}^{m},1)"),
        )));
    }
    if m == 0 {
        return Err(ExpansionError::InvalidArgument(
            "multiplicity must be at least 1".into(),
        ));
    }
    if m > MAX_RM_MULTIPLICITY {
        return Err(ExpansionError::MultiplicityCap(m));
    }
    let r_abs = r.abs();
    let q = outer.abs();
    let r_barred = r < 0;
    let outer_barred = outer < 0;

    let mut sign_flips = 0usize;
    if r_barred {
        sign_flips += m;
    }
    if outer_barred {
        sign_flips += 1;
    }
    let global = if sign_flips % 2 == 1 {
        -Rational::one()
    } else {
        Rational::one()
    };

    let mut out = LinComb::zero();
    for comp in compositions(m)? {
        let parts = comp.parts();
        let c = Rational::from_integer(BigInt::from(multinomial(m, parts)?)) * &global;
        let block = |theta: usize| signed(r_abs * theta as i32, r_barred && theta % 2 == 1);

        let mut first: Vec<i32> = vec![outer];
        first.extend(parts.iter().map(|&t| block(t)));
        out.add_term(
            SymbolicTerm::atom(MzvAtom::zeta_unchecked(first)),
            c.clone(),
        );

        let lead_barred = (r_barred && parts[0] % 2 == 1) != outer_barred;
        let mut second = vec![signed(q + r_abs * parts[0] as i32, lead_barred)];
        second.extend(parts[1..].iter().map(|&t| block(t)));
        out.add_term(SymbolicTerm::atom(MzvAtom::zeta_unchecked(second)), c);
    }
    Ok(out)
}

/// `S_{r^m,q}` for `r, q >= 2` through the tail-product route:
/// `Σ_l Σ_{η ∈ C_l} (-1)^l C(m,l) (l; η) ζ(r)^{m-l} ζ(rη_1,...,rη_p,q)`.
pub fn expand_rm_theorem2(r: i32, m: usize, q: i32) -> Result<LinComb, ExpansionError> {
    if r < 2 || q < 2 {
        return Err(ExpansionError::UnsupportedHypothesis(format!(
            "S({r}^{m},{q}): the tail-product route needs unbarred r, q >= 2"
        )));
    }
    if m > MAX_RM_MULTIPLICITY {
        return Err(ExpansionError::MultiplicityCap(m));
    }
    let zeta_r = MzvAtom::zeta_unchecked(vec![r]);
    let mut out = LinComb::zero();
    out.add_term(
        SymbolicTerm::new(vec![zeta_r.clone(); m])
            .mul(&SymbolicTerm::atom(MzvAtom::zeta_unchecked(vec![q]))),
        Rational::one(),
    );
    for l in 1..=m {
        let sign = if l % 2 == 1 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let choose = BigInt::from(binomial(m, l));
        let power = SymbolicTerm::new(vec![zeta_r.clone(); m - l]);
        for comp in compositions(l)? {
            let mut args: Vec<i32> = comp.parts().iter().map(|&e| r * e as i32).collect();
            args.push(q);
            let c = &sign * &choose * BigInt::from(multinomial(l, comp.parts())?);
            out.add_term(
                power.mul(&SymbolicTerm::atom(MzvAtom::zeta_unchecked(args))),
                Rational::from_integer(c),
            );
        }
    }
    Ok(out)
}
