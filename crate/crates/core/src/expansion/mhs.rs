use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::Rational;
use crate::combinatorics::{compositions, factorial, multiset_permutations, Composition};

use super::{ExpansionError, MAX_DEGREE};

/// One weak-ordering class: a block-size composition together with one
/// distinct arrangement of the signed exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingBlock {
    pub composition: Composition,
    pub arrangement: Vec<i32>,
}

impl OrderingBlock {
    /// Merged blocks as signed exponents (negative = the merged variable
    /// carries `(-1)^n`), together with `Σ λ_c`, the total count of barred
    /// entries.
    pub fn merged(&self) -> (Vec<i32>, u32) {
        let mut barred_total = 0u32;
        let merged = self
            .composition
            .blocks()
            .map(|r| {
                let block = &self.arrangement[r];
                let lambda = block.iter().filter(|&&v| v < 0).count() as u32;
                barred_total += lambda;
                let s: i32 = block.iter().map(|v| v.abs()).sum();
                if lambda % 2 == 1 {
                    -s
                } else {
                    s
                }
            })
            .collect();
        (merged, barred_total)
    }
}

/// A ℚ-combination of multiple harmonic sums `ζ_n(s_1,...,s_k; σ)`, keyed by
/// signed exponent lists. It is independent of `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MhsExpansion {
    terms: BTreeMap<Vec<i32>, Rational>,
}

impl MhsExpansion {
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i32>, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, key: &[i32]) -> Option<&Rational> {
        self.terms.get(key)
    }

    fn add(&mut self, key: Vec<i32>, c: Rational) {
        let e = self.terms.entry(key).or_default();
        *e += c;
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| *c != Rational::default());
    }
}

/// Iterates every (composition, distinct arrangement) pair for the signed
/// exponent multiset `inner`.
pub fn ordering_blocks(inner: &[i32]) -> Result<Vec<OrderingBlock>, ExpansionError> {
    let m = inner.len();
    if m > MAX_DEGREE {
        return Err(ExpansionError::DegreeCap { degree: m });
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    let comps = compositions(m)?;
    let arrangements: Vec<Vec<i32>> = multiset_permutations(inner)?.collect();
    let mut out = Vec::with_capacity(comps.len() * arrangements.len());
    for c in &comps {
        for a in &arrangements {
            out.push(OrderingBlock {
                composition: c.clone(),
                arrangement: a.clone(),
            });
        }
    }
    Ok(out)
}

/// Expands `∏ H_n^(i) · ∏ H̄_n^(j)` into multiple harmonic sums.
///
/// Permutations that only swap equal exponents give identical terms, so each
/// distinct arrangement is weighted by the size of its orbit, `∏ mult_v!`,
/// instead of being visited `∏ mult_v!` times.
pub fn expand_product_mhs(inner: &[i32]) -> Result<MhsExpansion, ExpansionError> {
    if inner.contains(&0) {
        return Err(ExpansionError::InvalidArgument(
            "zero harmonic exponent".into(),
        ));
    }
    let mut out = MhsExpansion::default();
    if inner.is_empty() {
        out.add(Vec::new(), Rational::one());
        return Ok(out);
    }
    let mut sorted = inner.to_vec();
    sorted.sort();
    let mut orbit = BigInt::one();
    let mut i = 0;
    while i < sorted.len() {
        let run = sorted[i..].iter().take_while(|&&v| v == sorted[i]).count();
        orbit *= BigInt::from(factorial(run));
        i += run;
    }
    for block in ordering_blocks(inner)? {
        let denom = block
            .composition
            .parts()
            .iter()
            .fold(BigInt::one(), |acc, &p| acc * BigInt::from(factorial(p)));
        let (merged, lambda) = block.merged();
        let mut c = Rational::new(orbit.clone(), denom);
        if lambda % 2 == 1 {
            c = -c;
        }
        out.add(merged, c);
    }
    out.prune();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    #[test]
    fn single_factor() {
        let e = expand_product_mhs(&[4]).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&[4]), Some(&int(1)));
    }

    #[test]
    fn square_of_harmonic_number() {
        // H_n^2 = ζ_n(2) + 2ζ_n(1,1)
        let e = expand_product_mhs(&[1, 1]).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.get(&[2]), Some(&int(1)));
        assert_eq!(e.get(&[1, 1]), Some(&int(2)));
    }

    #[test]
    fn square_of_alternating_harmonic_number() {
        // H̄_n^2: both barred entries merge into an unbarred block (λ = 2),
        // separate blocks keep bars and the sign (-1)^2.
        let e = expand_product_mhs(&[-1, -1]).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.get(&[2]), Some(&int(1)));
        assert_eq!(e.get(&[-1, -1]), Some(&int(2)));
    }

    #[test]
    fn mixed_product() {
        // H_n H̄_n = -ζ_n(2̄) - ζ_n(1,1̄) - ζ_n(1̄,1)
        let e = expand_product_mhs(&[1, -1]).unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(e.get(&[-2]), Some(&int(-1)));
        assert_eq!(e.get(&[1, -1]), Some(&int(-1)));
        assert_eq!(e.get(&[-1, 1]), Some(&int(-1)));
    }

    #[test]
    fn cube_coefficients() {
        // H_n^3 = ζ_n(3) + 3ζ_n(1,2) + 3ζ_n(2,1) + 6ζ_n(1,1,1)
        let e = expand_product_mhs(&[1, 1, 1]).unwrap();
        assert_eq!(e.get(&[3]), Some(&int(1)));
        assert_eq!(e.get(&[1, 2]), Some(&int(3)));
        assert_eq!(e.get(&[2, 1]), Some(&int(3)));
        assert_eq!(e.get(&[1, 1, 1]), Some(&int(6)));
        let total: Rational = e.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, int(13));
        let _ = ratio(1, 1);
    }

    #[test]
    fn degree_cap() {
        assert!(matches!(
            expand_product_mhs(&[1; 11]),
            Err(ExpansionError::DegreeCap { degree: 11 })
        ));
    }
}
