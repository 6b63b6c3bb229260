//! Expansion of Euler sums into (alternating) multiple zeta values.
//!
//! Two independent routes are provided: the weak-ordering expansion of the
//! harmonic product ([`expand_theorem1`]) and the tail-product inclusion-
//! exclusion ([`expand_theorem2`]), plus composition-only fast paths for
//! repeated exponents. Nothing here simplifies; raw expansions are returned.

mod mhs;
mod repeated;
mod tail;
mod weak_order;

use thiserror::Error;

use crate::combinatorics::CombinatoricsError;
use crate::index::IndexError;

pub use mhs::{expand_product_mhs, ordering_blocks, MhsExpansion, OrderingBlock};
pub use repeated::{expand_rm_theorem1, expand_rm_theorem2, MAX_RM_MULTIPLICITY};
pub use tail::expand_theorem2;
pub use weak_order::expand_theorem1;

/// Largest degree handled by the permutation-driven engines.
pub const MAX_DEGREE: usize = crate::combinatorics::MAX_PERMUTATION_SIZE;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExpansionError {
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error("degree {degree} exceeds the cap of {MAX_DEGREE}")]
    DegreeCap { degree: usize },
    #[error("multiplicity {0} exceeds the cap of {MAX_RM_MULTIPLICITY}")]
    MultiplicityCap(usize),
    #[error("hypothesis not satisfied: {0}")]
    UnsupportedHypothesis(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}

/// Which expansion route produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    WeakOrdering,
    TailProduct,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::WeakOrdering => "t1",
            Engine::TailProduct => "t2",
        }
    }
}
