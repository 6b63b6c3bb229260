//! The log-power integrals `W(k,l)`, the values `ζ(k+1,{1}_l)` they
//! determine, and normalization of products of even zeta values.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{LinComb, MzvAtom, Rational, SymbolicTerm};
use crate::combinatorics::{binomial, factorial};
use crate::numerics::bernoulli;

use super::ReductionError;

/// Largest `k + l` accepted by [`w_integral`] and [`zeta_k1l`].
pub const MAX_KL: u32 = 30;

/// Largest even zeta argument produced by [`normalize_even_products`].
const MAX_EVEN_ARG: u32 = 80;

fn sign(e: u32) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn big(n: num_bigint::BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn zeta1(s: u32) -> LinComb {
    LinComb::zeta(&[s as i32])
}

fn check_range(k: u32, l: u32) -> Result<(), ReductionError> {
    if k == 0 || k + l > MAX_KL {
        return Err(ReductionError::Range { k, l, max: MAX_KL });
    }
    Ok(())
}

type WCache = Mutex<HashMap<(u32, u32), LinComb>>;

fn w_cache() -> &'static WCache {
    static CACHE: OnceLock<WCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `W(k,l) = ∫_0^1 ln^k(t) ln^l(1-t)/(1-t) dt` as a polynomial in single
/// zeta values, from the recurrence
/// `W(k,l) = (-1)^{k+l}(k+l)! ζ(k+l+1)/(l+1)
///   - Σ_{i=1}^{k-1} Σ_{j=1}^{l} C(k-1,i-1) C(l,j) (-1)^{i+j} (i+j-1)! ζ(i+j) W(k-i,l-j)`.
pub fn w_integral(k: u32, l: u32) -> Result<LinComb, ReductionError> {
    check_range(k, l)?;
    Ok(w_rec(k, l))
}

fn w_rec(k: u32, l: u32) -> LinComb {
    if let Some(v) = w_cache().lock().expect("cache poisoned").get(&(k, l)) {
        return v.clone();
    }
    let n = (k + l) as usize;
    let lead = sign(k + l) * big(factorial(n)) / Rational::from_integer(BigInt::from(l + 1));
    let mut out = zeta1(k + l + 1).scale(&lead);
    for i in 1..k {
        for j in 1..=l {
            let c = big(binomial((k - 1) as usize, (i - 1) as usize))
                * big(binomial(l as usize, j as usize))
                * sign(i + j)
                * big(factorial((i + j - 1) as usize));
            let inner = &zeta1(i + j) * &w_rec(k - i, l - j);
            out.add_scaled(&inner, &-c);
        }
    }
    let out = normalize_even_products(&out);
    w_cache()
        .lock()
        .expect("cache poisoned")
        .insert((k, l), out.clone());
    out
}

/// `ζ(k+1,{1}_l) = (-1)^{k+l}/(k! l!) · W(k,l)`.
pub fn zeta_k1l(k: u32, l: u32) -> Result<LinComb, ReductionError> {
    let w = w_integral(k, l)?;
    let c = sign(k + l) / (big(factorial(k as usize)) * big(factorial(l as usize)));
    Ok(w.scale(&c))
}

/// `ζ(2a)ζ(2b) / ζ(2a+2b) = -B_{2a} B_{2b} (2a+2b)! / (2 (2a)! (2b)! B_{2a+2b})`.
pub fn even_product_ratio(a: u32, b: u32) -> Rational {
    let (a, b) = (2 * a as usize, 2 * b as usize);
    -(bernoulli(a) * bernoulli(b) * big(factorial(a + b)))
        / (Rational::from_integer(BigInt::from(2))
            * big(factorial(a))
            * big(factorial(b))
            * bernoulli(a + b))
}

fn even_zeta_arg(atom: &MzvAtom) -> Option<u32> {
    match atom.args() {
        Some(&[s]) if s > 0 && s % 2 == 0 => Some(s as u32),
        _ => None,
    }
}

/// Merges the first two even single zetas of a term, if possible.
pub(crate) fn merge_even_pair(term: &SymbolicTerm) -> Option<(SymbolicTerm, Rational)> {
    let evens: Vec<(usize, u32)> = term
        .factors()
        .iter()
        .enumerate()
        .filter_map(|(i, a)| even_zeta_arg(a).map(|s| (i, s)))
        .take(2)
        .collect();
    if evens.len() < 2 {
        return None;
    }
    let (i, s) = evens[0];
    let (j, t) = evens[1];
    if s + t > MAX_EVEN_ARG {
        return None;
    }
    let rest = term.without(j).without(i);
    let merged = rest.mul(&SymbolicTerm::atom(MzvAtom::zeta_unchecked(vec![
        (s + t) as i32,
    ])));
    Some((merged, even_product_ratio(s / 2, t / 2)))
}

/// Rewrites every product of even single zetas as a rational multiple of
/// one even zeta value.
pub fn normalize_even_products(x: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (term, c) in x.iter() {
        let mut t = term.clone();
        let mut c = c.clone();
        while let Some((next, r)) = merge_even_pair(&t) {
            t = next;
            c *= r;
        }
        if !c.is_zero() {
            out.add_term(t, c);
        }
    }
    out
}
