//! The free associative Z2-algebra on a declared set of generators.
//!
//! Generators come in two kinds: even symbols `x1, x2, …` and odd symbols
//! `t1, t2, …`. Monomials are words over the generators; any word containing
//! two or more odd letters is identified with zero, which realizes the
//! defining relation "odd times odd vanishes" without ever materializing the
//! quotient ideal.

mod generator;
mod hom;
mod monomial;
mod poly;
mod rational;

pub use generator::{Generator, Parity, Universe};
pub use hom::{extend_hom, HomError, HomMap};
pub use monomial::Monomial;
pub(crate) use poly::symmetrized_half_product;
pub use poly::{brace, rat, word, FreePoly};
pub use rational::Rational;
