use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{AlgebraError, MzvAtom, Rational, SymbolicTerm};

/// A finite ℚ-linear combination of symbolic terms. Zero coefficients are
/// never stored, and iteration order is the canonical term order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinComb {
    terms: BTreeMap<SymbolicTerm, Rational>,
}

/// JSON wire form of one term: `{"factors": ["z(3)", ...], "coeff": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub factors: Vec<String>,
    pub coeff: String,
}

impl LinComb {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_term(SymbolicTerm::unit(), c)
    }

    pub fn from_term(term: SymbolicTerm, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(term, c);
        out
    }

    pub fn atom(atom: MzvAtom) -> Self {
        Self::from_term(SymbolicTerm::atom(atom), Rational::one())
    }

    /// Shorthand for a single zeta atom with coefficient 1; panics on
    /// inadmissible arguments.
    pub fn zeta(args: &[i32]) -> Self {
        Self::atom(MzvAtom::zeta_unchecked(args.to_vec()))
    }

    /// Adds `c · term`, pruning the entry if it cancels.
    pub fn add_term(&mut self, term: SymbolicTerm, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(term) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (t, k) in &other.terms {
            self.add_term(t.clone(), k * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> LinComb {
        let mut out = LinComb::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn pow(&self, k: u32) -> LinComb {
        let mut out = LinComb::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, term: &SymbolicTerm) -> Rational {
        self.terms.get(term).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SymbolicTerm, &Rational)> {
        self.terms.iter()
    }

    pub fn terms(&self) -> &BTreeMap<SymbolicTerm, Rational> {
        &self.terms
    }

    /// Every distinct atom occurring in any term.
    pub fn atoms(&self) -> std::collections::BTreeSet<MzvAtom> {
        self.terms
            .keys()
            .flat_map(|t| t.factors().iter().cloned())
            .collect()
    }

    /// The common weight of all terms, if the combination is homogeneous and
    /// nonzero.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(SymbolicTerm::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(t, c)| JsonTerm {
                factors: t.factors().iter().map(|a| a.to_string()).collect(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<LinComb, AlgebraError> {
        let mut out = LinComb::zero();
        for jt in terms {
            let factors = jt
                .factors
                .iter()
                .map(|f| f.parse::<MzvAtom>())
                .collect::<Result<Vec<_>, _>>()?;
            let c: Rational = jt
                .coeff
                .trim()
                .parse()
                .map_err(|_| AlgebraError::CoefficientSyntax(jt.coeff.clone()))?;
            out.add_term(SymbolicTerm::new(factors), c);
        }
        Ok(out)
    }
}

impl FromIterator<(SymbolicTerm, Rational)> for LinComb {
    fn from_iter<I: IntoIterator<Item = (SymbolicTerm, Rational)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (t, c) in iter {
            out.add_term(t, c);
        }
        out
    }
}

impl Add for &LinComb {
    type Output = LinComb;

    fn add(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Add for LinComb {
    type Output = LinComb;

    fn add(self, rhs: LinComb) -> LinComb {
        &self + &rhs
    }
}

impl Sub for &LinComb {
    type Output = LinComb;

    fn sub(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Sub for LinComb {
    type Output = LinComb;

    fn sub(self, rhs: LinComb) -> LinComb {
        &self - &rhs
    }
}

impl Neg for &LinComb {
    type Output = LinComb;

    fn neg(self) -> LinComb {
        self.scale(&-Rational::one())
    }
}

impl Mul for &LinComb {
    type Output = LinComb;

    fn mul(self, rhs: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (ta, ca) in &self.terms {
            for (tb, cb) in &rhs.terms {
                out.add_term(ta.mul(tb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LinComb {
    type Output = LinComb;

    fn mul(self, rhs: LinComb) -> LinComb {
        &self * &rhs
    }
}

/// Plain text form, e.g. `z(9,3) + 3*z(9,1,2) - 1/2*z(2)*z(3)^2`. Parsed back
/// by [`super::parse_lincomb`].
impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if t.is_unit() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{mag}*{t}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn additive_inverse_prunes() {
        let a = LinComb::zeta(&[3]);
        let b = -&a;
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn halves_combine() {
        let h = LinComb::zeta(&[3]).scale(&q(1, 2));
        assert_eq!(&h + &h, LinComb::zeta(&[3]));
    }

    #[test]
    fn disjoint_terms() {
        let a = (LinComb::zeta(&[2]) * LinComb::zeta(&[3])).scale(&q(2, 1));
        let b = LinComb::zeta(&[5]).scale(&q(3, 1));
        let s = &a + &b;
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_string(), "2*z(2)*z(3) + 3*z(5)");
    }

    #[test]
    fn products() {
        let x = &LinComb::zeta(&[2]) + &LinComb::zeta(&[3]);
        assert_eq!(&LinComb::one() * &x, x);
        let p = LinComb::zeta(&[3]).scale(&q(2, 1)) * LinComb::zeta(&[3]).scale(&q(3, 1));
        assert_eq!(p.to_string(), "6*z(3)^2");
        let d = &x * &LinComb::zeta(&[2]);
        assert_eq!(d.to_string(), "z(2)^2 + z(2)*z(3)");
    }

    #[test]
    fn json_round_trip() {
        let x = &LinComb::zeta(&[-5, -1]).scale(&q(-3, 4)) + &LinComb::constant(q(7, 1));
        let back = LinComb::from_json_terms(&x.to_json_terms()).unwrap();
        assert_eq!(back, x);
    }
}
