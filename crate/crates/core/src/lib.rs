//! Exact-arithmetic computer algebra for generalized Jordan algebras.
//!
//! A generalized Jordan algebra is a vector space with a right-commutative
//! product satisfying the Jordan identity and the Hu-Liu identity. Every
//! associative Z2-algebra `A = A0 + A1` (with `A1 A1 = 0`) yields one via the
//! bullet product `x • y = (x y0 + y0 x) / 2`, where `y0` is the even
//! component of `y`.
//!
//! The crate provides:
//!
//! - [`freealg`]: the free associative Z2-algebra on declared even/odd
//!   generator sets, with sparse noncommutative polynomials over exact
//!   rationals, the reversal involution, braces, and homomorphism extension
//!   into structure-constant algebras;
//! - [`gja`]: the bullet product, long associators, multiplication operators,
//!   and randomized/exhaustive checkers for the defining and derived
//!   identities;
//! - [`scalg`]: finite-dimensional algebras given by rational structure
//!   constants — axiom checks, annihilators, ideals, quotients, Jordan
//!   bimodules, and split extensions;
//! - [`cohn`]: tetrad enumeration, the involution-fixed (reversible) subspace,
//!   degree-capped subalgebra closure, and verification of the generalized
//!   Cohn theorem together with its supporting congruence ladder.
//!
//! All coefficients are arbitrary-precision rationals; no floating point is
//! used anywhere.

pub mod cohn;
pub mod freealg;
pub mod gja;
pub mod report;
pub mod scalg;

pub use freealg::{FreePoly, Generator, Monomial, Parity, Rational, Universe};
