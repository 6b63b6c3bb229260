//! Symbolic expansion, reduction and numerical evaluation of Euler sums and
//! alternating Euler sums.

pub mod algebra;
pub mod combinatorics;
pub mod expansion;
pub mod index;
pub mod numerics;
pub mod reduction;
pub mod verify;
