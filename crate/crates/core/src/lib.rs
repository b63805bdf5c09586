//! Ginzburg dg algebras of graded quivers with superpotential, their zeroth
//! homology, and orbit categories `D^b(kA_n) / τ⁻¹Σᵐ`.
//!
//! Paths compose right to left: the word `a b c` applies `c` first.
//! Coefficients are exact rationals throughout.

pub mod frontend;
pub mod ginzburg;
pub mod gqa;
pub mod jacobian;
pub mod orbitcat;
pub mod potential;
