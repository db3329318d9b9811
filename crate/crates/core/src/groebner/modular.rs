//! Cross-check layer: rerun dimension computations modulo a word-sized
//! prime. A mismatch with the rational result signals an unlucky prime and
//! is reported, never silently trusted.

use crate::poly::{Coeff, ModP, Polynomial, Rational, MODULAR_PRIME};

use super::dimension::{quotient_dimension, QuotientDimension};
use super::error::GroebnerError;
use super::{buchberger_with, GroebnerConfig, Ideal};

/// Reduce a rational polynomial modulo the prime. Errors when a denominator
/// is divisible by the prime or a nonzero coefficient vanishes, since either
/// would change the ideal.
pub fn polynomial_to_modp(p: &Polynomial<Rational>) -> Result<Polynomial<ModP>, GroebnerError> {
    let mut terms = Vec::with_capacity(p.num_terms());
    for (m, c) in p.terms() {
        let reduced = ModP::from_rational(c).ok_or(GroebnerError::UnluckyPrime {
            prime: MODULAR_PRIME,
            reason: format!("denominator of {} vanishes modulo the prime", c),
        })?;
        if reduced.is_zero() {
            return Err(GroebnerError::UnluckyPrime {
                prime: MODULAR_PRIME,
                reason: format!("nonzero coefficient {} vanishes modulo the prime", c),
            });
        }
        terms.push((m.clone(), reduced));
    }
    Ok(Polynomial::from_terms(p.ring(), terms).expect("same ring"))
}

pub fn ideal_to_modp(ideal: &Ideal<Rational>) -> Result<Ideal<ModP>, GroebnerError> {
    let generators = ideal
        .generators()
        .iter()
        .map(polynomial_to_modp)
        .collect::<Result<Vec<_>, _>>()?;
    Ideal::new(generators, ideal.order().clone())
}

/// Quotient dimension of the ideal computed entirely modulo the prime.
pub fn modular_quotient_dimension(
    ideal: &Ideal<Rational>,
    config: &GroebnerConfig,
) -> Result<QuotientDimension, GroebnerError> {
    let modular = ideal_to_modp(ideal)?;
    let basis = buchberger_with(&modular, config)?;
    Ok(quotient_dimension(&basis))
}
