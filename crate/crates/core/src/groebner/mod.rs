//! Buchberger's algorithm, normal forms, and length computations for
//! zero-dimensional quotient rings, both global and local at the origin.
//!
//! Pair selection uses the normal strategy (smallest lcm degree first) with
//! the product and chain criteria; output bases are reduced and monic, so a
//! Groebner basis is a canonical attribute of (ideal, order). The local
//! length at the origin is computed by m-adic stabilization: the dimension
//! of `R/(I + m^k)` for growing `k` until two consecutive values agree.

mod dimension;
mod elimination;
mod engine;
mod error;
mod modular;

use std::sync::Arc;

use crate::poly::{Coeff, MonomialOrder, PolyError, Polynomial, Rational, Ring};

pub use dimension::{
    is_zero_dimensional, local_length_at_origin, quotient_dimension, standard_monomial_basis,
    LocalLengthConfig, QuotientDimension, StandardMonomialBasis,
};
pub use error::GroebnerError;
pub use modular::{ideal_to_modp, modular_quotient_dimension, polynomial_to_modp};

/// Limits that turn runaway computations into clean errors.
#[derive(Debug, Clone)]
pub struct GroebnerConfig {
    /// Maximum number of single division steps across one Buchberger run.
    pub step_limit: u64,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            step_limit: 10_000_000,
        }
    }
}

/// A finitely generated ideal together with the monomial order its
/// computations run under.
#[derive(Debug, Clone)]
pub struct Ideal<C: Coeff = Rational> {
    ring: Arc<Ring>,
    generators: Vec<Polynomial<C>>,
    order: MonomialOrder,
}

impl<C: Coeff> Ideal<C> {
    pub fn new(
        generators: Vec<Polynomial<C>>,
        order: MonomialOrder,
    ) -> Result<Self, GroebnerError> {
        let first = generators.first().ok_or(GroebnerError::EmptyIdeal)?;
        let ring = first.ring().clone();
        for g in &generators {
            if g.is_zero() {
                return Err(GroebnerError::ZeroGenerator);
            }
            if g.ring() != &ring {
                return Err(GroebnerError::Poly(PolyError::RingMismatch(
                    ring.to_string(),
                    g.ring().to_string(),
                )));
            }
        }
        order.validate(ring.nvars())?;
        Ok(Ideal {
            ring,
            generators,
            order,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }
}

/// A reduced Groebner basis: monic elements, no term of any element
/// divisible by the lead term of another, deterministic element order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<C: Coeff = Rational> {
    ring: Arc<Ring>,
    basis: Vec<Polynomial<C>>,
    order: MonomialOrder,
}

impl<C: Coeff> GroebnerBasis<C> {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial<C>] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn lead_monomials(&self) -> Vec<crate::poly::Monomial> {
        self.basis
            .iter()
            .map(|p| {
                p.leading_term(&self.order)
                    .expect("basis elements nonzero")
                    .0
                    .clone()
            })
            .collect()
    }
}

/// Compute the reduced Groebner basis with default limits.
pub fn buchberger<C: Coeff>(ideal: &Ideal<C>) -> Result<GroebnerBasis<C>, GroebnerError> {
    buchberger_with(ideal, &GroebnerConfig::default())
}

pub fn buchberger_with<C: Coeff>(
    ideal: &Ideal<C>,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis<C>, GroebnerError> {
    let mut eng = engine::Engine::new(&ideal.order, None, config.step_limit);
    let gens = ideal
        .generators
        .iter()
        .map(|g| engine::sort_terms(g, &ideal.order))
        .collect();
    eng.run(gens, Vec::new())?;
    let basis = eng
        .into_reduced_basis()?
        .into_iter()
        .map(|terms| Polynomial::from_terms(&ideal.ring, terms).expect("ring-checked terms"))
        .collect();
    Ok(GroebnerBasis {
        ring: ideal.ring.clone(),
        basis,
        order: ideal.order.clone(),
    })
}

/// Remainder of `p` on full division by the basis: no term of the result is
/// divisible by any lead term, and `p - result` lies in the ideal.
pub fn normal_form<C: Coeff>(
    p: &Polynomial<C>,
    basis: &GroebnerBasis<C>,
) -> Result<Polynomial<C>, GroebnerError> {
    if p.ring() != &basis.ring {
        return Err(GroebnerError::Poly(PolyError::RingMismatch(
            p.ring().to_string(),
            basis.ring.to_string(),
        )));
    }
    let reducers: Vec<engine::Terms<C>> = basis
        .basis
        .iter()
        .map(|g| engine::sort_terms(g, &basis.order))
        .collect();
    let refs: Vec<&engine::Terms<C>> = reducers.iter().collect();
    let mut reduction = engine::Reduction::new(&basis.order, None, u64::MAX);
    let remainder = reduction.normal_form(engine::sort_terms(p, &basis.order), &refs)?;
    Ok(Polynomial::from_terms(&basis.ring, remainder).expect("ring-checked terms"))
}

/// The S-polynomial of two nonzero polynomials under the given order.
pub fn s_polynomial<C: Coeff>(
    f: &Polynomial<C>,
    g: &Polynomial<C>,
    order: &MonomialOrder,
) -> Result<Polynomial<C>, GroebnerError> {
    if f.ring() != g.ring() {
        return Err(GroebnerError::Poly(PolyError::RingMismatch(
            f.ring().to_string(),
            g.ring().to_string(),
        )));
    }
    if f.is_zero() || g.is_zero() {
        return Err(GroebnerError::ZeroGenerator);
    }
    let (lf, cf) = f.leading_term(order).expect("nonzero");
    let (lg, cg) = g.leading_term(order).expect("nonzero");
    let lcm = lf.lcm(lg);
    let uf = lcm.try_div(lf).expect("lcm divisible");
    let ug = lcm.try_div(lg).expect("lcm divisible");
    let a = f
        .mul_monomial(&uf)
        .scale(&cf.inverse().expect("nonzero lead"));
    let b = g
        .mul_monomial(&ug)
        .scale(&cg.inverse().expect("nonzero lead"));
    Ok(a.try_sub(&b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, QPoly};

    fn q(ring: &Arc<Ring>, s: &str) -> QPoly {
        parse_polynomial(ring, s).unwrap()
    }

    fn ideal(ring: &Arc<Ring>, gens: &[&str], order: MonomialOrder) -> Ideal {
        Ideal::new(gens.iter().map(|s| q(ring, s)).collect(), order).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let ring = Ring::of(&["x", "y"]);
        let g = buchberger(&ideal(&ring, &["x"], MonomialOrder::GrevLex)).unwrap();
        assert!(normal_form(&q(&ring, "x^2"), &g).unwrap().is_zero());

        let g = buchberger(&ideal(&ring, &["x^2 - y"], MonomialOrder::GrevLex)).unwrap();
        assert_eq!(
            normal_form(&q(&ring, "x^2 + y"), &g).unwrap(),
            q(&ring, "2*y")
        );

        let g = buchberger(&ideal(&ring, &["x^2 - y", "y^2"], MonomialOrder::GrevLex)).unwrap();
        assert_eq!(normal_form(&q(&ring, "1"), &g).unwrap(), q(&ring, "1"));
    }

    #[test]
    fn normal_form_checks_rings() {
        let ring = Ring::of(&["x", "y"]);
        let other = Ring::of(&["z"]);
        let g = buchberger(&ideal(&ring, &["x"], MonomialOrder::GrevLex)).unwrap();
        assert!(normal_form(&q(&other, "z"), &g).is_err());
    }

    #[test]
    fn already_reduced_ideals_pass_through() {
        let ring = Ring::of(&["x", "y"]);
        let g = buchberger(&ideal(&ring, &["x", "y"], MonomialOrder::GrevLex)).unwrap();
        assert_eq!(g.basis(), &[q(&ring, "x"), q(&ring, "y")]);

        let g = buchberger(&ideal(&ring, &["x^2 - y", "y^2"], MonomialOrder::GrevLex)).unwrap();
        assert_eq!(g.basis(), &[q(&ring, "x^2 - y"), q(&ring, "y^2")]);
        // the single S-polynomial reduces to zero
        let s = s_polynomial(&g.basis()[0], &g.basis()[1], g.order()).unwrap();
        assert!(normal_form(&s, &g).unwrap().is_zero());
    }

    #[test]
    fn buchberger_is_deterministic() {
        let ring = Ring::of(&["x", "y", "z"]);
        let mk = || {
            buchberger(&ideal(
                &ring,
                &["x^2 + y*z - 1", "y^2 - x*z", "z^2 + x - y"],
                MonomialOrder::GrevLex,
            ))
            .unwrap()
        };
        let a = mk();
        let b = mk();
        assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn step_limit_is_enforced() {
        let ring = Ring::of(&["x", "y"]);
        let i = ideal(&ring, &["x^2 - y", "x*y - 1"], MonomialOrder::GrevLex);
        assert!(buchberger(&i).is_ok());
        let err = buchberger_with(&i, &GroebnerConfig { step_limit: 0 }).unwrap_err();
        assert!(matches!(err, GroebnerError::StepLimitExceeded(0)));
    }

    #[test]
    fn constant_ideal_collapses() {
        let ring = Ring::of(&["x", "y"]);
        let g = buchberger(&ideal(&ring, &["x", "x - 1"], MonomialOrder::GrevLex)).unwrap();
        assert_eq!(g.basis(), &[QPoly::one(&ring)]);
    }

    #[test]
    fn ideal_construction_errors() {
        let ring = Ring::of(&["x"]);
        assert!(matches!(
            Ideal::<Rational>::new(vec![], MonomialOrder::GrevLex).unwrap_err(),
            GroebnerError::EmptyIdeal
        ));
        assert!(matches!(
            Ideal::new(vec![QPoly::zero(&ring)], MonomialOrder::GrevLex).unwrap_err(),
            GroebnerError::ZeroGenerator
        ));
        assert!(Ideal::new(vec![q(&ring, "x")], MonomialOrder::weighted(vec![1, 2])).is_err());
    }
}
