use num_traits::One;

use crate::algebra::{LinComb, MzvAtom, Rational, SymbolicTerm};
use crate::index::EulerSumIndex;

use super::{expand_product_mhs, ExpansionError};

/// Expands `S_{inner,outer}` into single (alternating) MZV atoms.
///
/// The harmonic product is first expanded into multiple harmonic sums
/// `ζ_n(T_1,...,T_p)`. Multiplying by the outer factor and summing over `n`
/// splits each term into the part with `n > n_1`, giving `ζ(q,T_1,...,T_p)`,
/// and the part with `n = n_1`, where `q` merges into the first block.
///
/// With an unbarred outer exponent the merged block keeps the bar of `T_1`.
/// With a barred outer exponent the factor `(-1)^(n-1) = -(-1)^n` contributes
/// a global minus sign and flips the bar of the merged block.
pub fn expand_theorem1(idx: &EulerSumIndex) -> Result<LinComb, ExpansionError> {
    let products = expand_product_mhs(idx.inner())?;
    let q = idx.outer().abs();
    let barred_outer = idx.outer() < 0;
    let global = if barred_outer {
        -Rational::one()
    } else {
        Rational::one()
    };

    let mut out = LinComb::zero();
    for (blocks, c) in products.iter() {
        let c = c * &global;

        let mut separate = Vec::with_capacity(blocks.len() + 1);
        separate.push(idx.outer());
        separate.extend_from_slice(blocks);
        out.add_term(
            SymbolicTerm::atom(MzvAtom::zeta_unchecked(separate)),
            c.clone(),
        );

        if let Some((&first, rest)) = blocks.split_first() {
            let merged_abs = q + first.abs();
            let first_barred = first < 0;
            let merged = if first_barred != barred_outer {
                -merged_abs
            } else {
                merged_abs
            };
            let mut args = Vec::with_capacity(blocks.len());
            args.push(merged);
            args.extend_from_slice(rest);
            out.add_term(SymbolicTerm::atom(MzvAtom::zeta_unchecked(args)), c);
        }
    }
    Ok(out)
}
