//! Exact rational arithmetic over (alternating) multiple zeta values.

mod atom;
mod latex;
mod lincomb;
mod parse;
mod term;

use num_bigint::BigInt;
use thiserror::Error;

pub use atom::MzvAtom;
pub use lincomb::{JsonTerm, LinComb};
pub use parse::parse_lincomb;
pub use term::SymbolicTerm;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("an atom needs at least one argument")]
    EmptyAtom,
    #[error("zero argument at position {position}")]
    ZeroArgument { position: usize },
    #[error("{0} diverges (leading argument 1 without a bar)")]
    Divergent(String),
    #[error("Li(q,1/2) requires q >= 2, got {0}")]
    PolylogOrder(u32),
    #[error("cannot parse atom {0:?}")]
    AtomSyntax(String),
    #[error("cannot parse coefficient {0:?}")]
    CoefficientSyntax(String),
    #[error("syntax error at byte {position}: {message}")]
    ExprSyntax { position: usize, message: String },
}

/// `n/d` as a rational.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn atom_strategy() -> impl Strategy<Value = MzvAtom> {
        prop_oneof![
            (2i32..6).prop_map(|s| MzvAtom::zeta(vec![s]).unwrap()),
            (2i32..5, -3i32..4)
                .prop_filter("nonzero", |(_, b)| *b != 0)
                .prop_map(|(a, b)| MzvAtom::zeta(vec![a, b]).unwrap()),
            (-3i32..0).prop_map(|s| MzvAtom::zeta(vec![s]).unwrap()),
            (4u32..7).prop_map(|q| MzvAtom::polylog_half(q).unwrap()),
        ]
    }

    fn lincomb_strategy() -> impl Strategy<Value = LinComb> {
        prop::collection::vec(
            (
                prop::collection::vec(atom_strategy(), 0..3),
                -6i64..7,
                1i64..5,
            ),
            0..5,
        )
        .prop_map(|terms| {
            terms
                .into_iter()
                .map(|(f, n, d)| (SymbolicTerm::new(f), ratio(n, d)))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in lincomb_strategy(), b in lincomb_strategy(), c in lincomb_strategy()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!(a.iter().all(|(_, k)| *k != int(0)));
        }

        #[test]
        fn rational_normalizes(p in -1000i64..1000, q in 1i64..1000, k in 1i64..50) {
            prop_assert_eq!(ratio(p * k, q * k), ratio(p, q));
            prop_assert_eq!(ratio(p * k, -q * k), ratio(-p, q));
        }

        #[test]
        fn term_order_canonical(mut f in prop::collection::vec(atom_strategy(), 0..5), seed in any::<u64>()) {
            let a = SymbolicTerm::new(f.clone());
            let n = f.len();
            if n > 1 {
                f.rotate_left((seed as usize) % n);
                f.swap(0, n - 1);
            }
            prop_assert_eq!(SymbolicTerm::new(f), a);
        }

        #[test]
        fn plain_text_round_trip(a in lincomb_strategy()) {
            prop_assert_eq!(parse_lincomb(&a.to_string()).unwrap(), a);
        }
    }
}
