//! Compositions, permutations and multinomial coefficients.
//!
//! Enumeration orders are deterministic so that expansion output is
//! reproducible byte for byte.

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

/// Largest `m` accepted by the factorial-sized enumerators.
pub const MAX_PERMUTATION_SIZE: usize = 10;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("compositions of 0 are not enumerated")]
    EmptyComposition,
    #[error("size {0} is outside 1..={MAX_PERMUTATION_SIZE}")]
    Sizing(usize),
    #[error("parts sum to {actual}, expected {expected}")]
    PartSum { expected: usize, actual: usize },
}

/// An ordered tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        (!parts.is_empty() && parts.iter().all(|&p| p > 0)).then_some(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Half-open index ranges of the consecutive blocks.
    pub fn blocks(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        self.0.iter().scan(0usize, |start, &p| {
            let r = *start..*start + p;
            *start += p;
            Some(r)
        })
    }
}

/// All `2^(m-1)` compositions of `m`, ordered by number of parts and then
/// lexicographically.
pub fn compositions(m: usize) -> Result<Vec<Composition>, CombinatoricsError> {
    if m == 0 {
        return Err(CombinatoricsError::EmptyComposition);
    }
    let mut out = Vec::with_capacity(1 << (m - 1).min(30));
    for k in 1..=m {
        let mut cur = Vec::with_capacity(k);
        fill_compositions(m, k, &mut cur, &mut out);
    }
    Ok(out)
}

fn fill_compositions(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if slots == 1 {
        cur.push(rest);
        out.push(Composition(cur.clone()));
        cur.pop();
        return;
    }
    for first in 1..=rest - (slots - 1) {
        cur.push(first);
        fill_compositions(rest - first, slots - 1, cur, out);
        cur.pop();
    }
}

/// Rearranges `v` into the next lexicographic permutation; false once `v`
/// is the last (non-increasing) arrangement. Repeated values are handled, so
/// starting from sorted input this visits each distinct arrangement once.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Lazy lexicographic stream over arrangements, starting from a sorted
/// vector.
#[derive(Clone, Debug)]
pub struct Arrangements<T> {
    current: Option<Vec<T>>,
}

impl<T: Ord + Clone> Iterator for Arrangements<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        let cur = self.current.take()?;
        let mut nxt = cur.clone();
        if next_permutation(&mut nxt) {
            self.current = Some(nxt);
        }
        Some(cur)
    }
}

/// All `m!` permutations of `1..=m` in lexicographic order, as one-line
/// images (`perm[j]` is the image of position `j + 1`).
pub fn permutations(m: usize) -> Result<Arrangements<usize>, CombinatoricsError> {
    if m == 0 || m > MAX_PERMUTATION_SIZE {
        return Err(CombinatoricsError::Sizing(m));
    }
    Ok(Arrangements {
        current: Some((1..=m).collect()),
    })
}

/// Each distinct ordering of `values` exactly once, lexicographically.
pub fn multiset_permutations<T: Ord + Clone>(
    values: &[T],
) -> Result<Arrangements<T>, CombinatoricsError> {
    if values.is_empty() || values.len() > MAX_PERMUTATION_SIZE {
        return Err(CombinatoricsError::Sizing(values.len()));
    }
    let mut v = values.to_vec();
    v.sort();
    Ok(Arrangements { current: Some(v) })
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `m! / (parts_1! ... parts_p!)`.
pub fn multinomial(m: usize, parts: &[usize]) -> Result<BigUint, CombinatoricsError> {
    let actual: usize = parts.iter().sum();
    if actual != m {
        return Err(CombinatoricsError::PartSum {
            expected: m,
            actual,
        });
    }
    let denom = parts
        .iter()
        .fold(BigUint::one(), |acc, &p| acc * factorial(p));
    Ok(factorial(m) / denom)
}
