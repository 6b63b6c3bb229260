use std::fmt;

use super::MzvAtom;

/// A commutative product of atoms. The factor list is kept sorted, so two
/// products that differ only in factor order are the same key.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolicTerm {
    factors: Vec<MzvAtom>,
}

impl SymbolicTerm {
    /// The empty product, standing for the constant 1.
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn new(mut factors: Vec<MzvAtom>) -> Self {
        factors.sort();
        SymbolicTerm { factors }
    }

    pub fn atom(atom: MzvAtom) -> Self {
        SymbolicTerm {
            factors: vec![atom],
        }
    }

    pub fn factors(&self) -> &[MzvAtom] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.factors.iter().map(MzvAtom::weight).sum()
    }

    pub fn max_depth(&self) -> usize {
        self.factors.iter().map(MzvAtom::depth).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &SymbolicTerm) -> SymbolicTerm {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        SymbolicTerm::new(factors)
    }

    /// The term with the factor at `index` removed.
    pub fn without(&self, index: usize) -> SymbolicTerm {
        let mut factors = self.factors.clone();
        factors.remove(index);
        SymbolicTerm { factors }
    }

    /// Distinct factors with their multiplicities, in canonical order.
    pub fn powers(&self) -> Vec<(&MzvAtom, usize)> {
        let mut out: Vec<(&MzvAtom, usize)> = Vec::new();
        for f in &self.factors {
            match out.last_mut() {
                Some((last, k)) if *last == f => *k += 1,
                _ => out.push((f, 1)),
            }
        }
        out
    }
}

impl fmt::Display for SymbolicTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .powers()
            .into_iter()
            .map(|(a, k)| {
                if k == 1 {
                    a.to_string()
                } else {
                    format!("{a}^{k}")
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}
