//! Exact computation of multiplicities of plane curve singularities and of
//! the associated rational-curve counts.
//!
//! The multiplicity of a torus-knot singularity `x^q = y^p` is computed by
//! three independent routes: a closed binomial formula, the length of an
//! explicit zero-dimensional algebra via Groebner bases, and a weighted
//! Bezout count. The same length shows up as the local length of the
//! stable-map scheme attached to a parametrized rational plane curve,
//! which is computed directly from its defining equations. A truncated
//! power series module tabulates the curve counts n(g) as coefficients of
//! the 24th power of the inverse Euler product.
//!
//! Modules:
//! - [`poly`]: sparse exact-rational multivariate polynomials.
//! - [`groebner`]: Buchberger's algorithm, normal forms, quotient
//!   dimensions and local lengths at the origin.
//! - [`singularity`]: closed-form invariants of `x^q = y^p` singularities.
//! - [`moduli`]: builders for the torus-knot and stable-map systems, plus
//!   the weighted Bezout evaluator.
//! - [`series`]: truncated integer power series and the n(g) table.

pub mod groebner;
pub mod moduli;
pub mod poly;
pub mod series;
pub mod singularity;

pub use poly::{Monomial, MonomialOrder, Polynomial, QPoly, Rational, Ring};
