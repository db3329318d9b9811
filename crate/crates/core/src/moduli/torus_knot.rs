//! The zero-dimensional algebra attached to a torus-knot singularity.
//!
//! Deformations of the parametrization `t -> (t^p, t^q)` are carried by
//! `f = t^p + sum x_i t^i` and `g = t^q + sum y_i t^i` with the top two
//! perturbation coefficients removed by reparametrization and rescaling.
//! The image staying on the curve is equivalent to `q f' g = p g' f`, and
//! the t-coefficients of that relation cut out a weighted-homogeneous
//! system whose length is the multiplicity.

use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::groebner::{
    buchberger_with, quotient_dimension, GroebnerConfig, Ideal, QuotientDimension,
};
use crate::poly::{MonomialOrder, QPoly, Ring, WeightedDegree};
use crate::singularity::TorusKnotSingularity;

use super::error::ModuliError;

/// The weighted-homogeneous system of a torus-knot singularity: p+q-2
/// equations in the p+q-2 variables x_0..x_{p-2}, y_0..y_{q-2}, where
/// `wt(x_i) = p - i` and `wt(y_i) = q - i`, of weighted degrees
/// 2, ..., p+q-1.
#[derive(Debug, Clone)]
pub struct TorusKnotSystem {
    pub p: u64,
    pub q: u64,
    pub ring: Arc<Ring>,
    pub weights: Vec<u64>,
    pub equations: Vec<QPoly>,
    pub equation_degrees: Vec<u64>,
}

pub fn build_torus_knot_system(p: u64, q: u64) -> Result<TorusKnotSystem, ModuliError> {
    let singularity = TorusKnotSingularity::new(p, q)?;
    let p = singularity.p();
    let q = singularity.q();

    let mut names = vec!["t".to_string()];
    let mut weights = Vec::with_capacity((p + q - 2) as usize);
    for i in 0..=(p - 2) {
        names.push(format!("x{}", i));
        weights.push(p - i);
    }
    for i in 0..=(q - 2) {
        names.push(format!("y{}", i));
        weights.push(q - i);
    }
    let big = Ring::new(names)?;

    let t = QPoly::var_named(&big, "t")?;
    let mut f = t.pow(p as u32);
    for i in 0..=(p - 2) {
        let xi = QPoly::var_named(&big, &format!("x{}", i))?;
        f = &f + &(&xi * &t.pow(i as u32));
    }
    let mut g = t.pow(q as u32);
    for i in 0..=(q - 2) {
        let yi = QPoly::var_named(&big, &format!("y{}", i))?;
        g = &g + &(&yi * &t.pow(i as u32));
    }

    let fp = f.differentiate("t")?;
    let gp = g.differentiate("t")?;
    let relation = &(&fp * &g).scale(&rational(q)) - &(&gp * &f).scale(&rational(p));

    let split = relation.coefficients_in(&["t"])?;
    let ring = split.coefficient_ring.clone();

    // The t-degree of the relation is p+q-1, but its top two coefficients
    // vanish identically; everything else must survive.
    let mut equations = Vec::new();
    let mut equation_degrees = Vec::new();
    for (mono, coeff) in &split.parts {
        let j = mono.exps()[0] as u64;
        assert!(
            j <= p + q - 3,
            "coefficient of t^{} should vanish identically for ({}, {})",
            j,
            p,
            q
        );
        assert!(!coeff.is_zero());
        match coeff.weighted_degree(&weights)? {
            WeightedDegree::Homogeneous(d) => {
                assert_eq!(d, p + q - 1 - j, "unexpected weighted degree");
                equations.push(coeff.clone());
                equation_degrees.push(d);
            }
            WeightedDegree::Inhomogeneous => {
                panic!("torus-knot equation at t^{} is not weighted-homogeneous", j)
            }
        }
    }
    assert_eq!(
        equations.len() as u64,
        p + q - 2,
        "expected p+q-2 equations"
    );
    assert_eq!(
        equation_degrees,
        (2..=(p + q - 1)).collect::<Vec<_>>(),
        "expected weighted degrees 2..=p+q-1"
    );

    Ok(TorusKnotSystem {
        p,
        q,
        ring,
        weights,
        equations,
        equation_degrees,
    })
}

fn rational(n: u64) -> crate::poly::Rational {
    crate::poly::Rational::from_integer(n.into())
}

/// The weighted Bezout count for a zero-dimensional system of N
/// weighted-homogeneous equations of degrees `e_j` in N variables of
/// weights `d_j`: the length is `prod e_j / prod d_j`, and the division
/// must be exact.
pub fn weighted_bezout_length(
    equation_degrees: &[u64],
    variable_weights: &[u64],
) -> Result<BigUint, ModuliError> {
    if equation_degrees.is_empty()
        || equation_degrees.len() != variable_weights.len()
        || equation_degrees.contains(&0)
        || variable_weights.contains(&0)
    {
        return Err(ModuliError::BezoutShape);
    }
    let numerator = equation_degrees
        .iter()
        .fold(BigUint::from(1u64), |acc, &e| acc * BigUint::from(e));
    let denominator = variable_weights
        .iter()
        .fold(BigUint::from(1u64), |acc, &w| acc * BigUint::from(w));
    let (quotient, remainder) = numerator.div_rem(&denominator);
    if !remainder.is_zero() {
        return Err(ModuliError::NonIntegerQuotient {
            numerator: numerator.to_string(),
            denominator: denominator.to_string(),
        });
    }
    Ok(quotient)
}

/// The multiplicity as the length of the torus-knot algebra, computed by a
/// Groebner basis under the weighted-graded order.
pub fn multiplicity_via_groebner(p: u64, q: u64) -> Result<u64, ModuliError> {
    multiplicity_via_groebner_with(p, q, &GroebnerConfig::default())
}

pub fn multiplicity_via_groebner_with(
    p: u64,
    q: u64,
    config: &GroebnerConfig,
) -> Result<u64, ModuliError> {
    let system = build_torus_knot_system(p, q)?;
    let ideal = Ideal::new(
        system.equations.clone(),
        MonomialOrder::weighted(system.weights.clone()),
    )?;
    let basis = buchberger_with(&ideal, config)?;
    match quotient_dimension(&basis) {
        QuotientDimension::Finite(n) => Ok(n),
        QuotientDimension::Infinite => Err(ModuliError::NotZeroDimensional),
    }
}

/// The torus-knot ideal under its weighted-graded order, for callers that
/// want to rerun it (for example modulo a prime).
pub fn torus_knot_ideal(p: u64, q: u64) -> Result<Ideal, ModuliError> {
    let system = build_torus_knot_system(p, q)?;
    Ok(Ideal::new(
        system.equations,
        MonomialOrder::weighted(system.weights),
    )?)
}
