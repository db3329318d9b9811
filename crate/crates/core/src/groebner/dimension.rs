//! Quotient-ring dimensions from lead-term data, and the m-adic local
//! length at the origin.

use std::collections::{HashSet, VecDeque};

use crate::poly::{Coeff, Monomial, MonomialOrder};

use super::elimination;
use super::engine::{self, Engine};
use super::error::GroebnerError;
use super::{GroebnerBasis, GroebnerConfig, Ideal};

/// Vector-space dimension of the quotient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite(u64),
    Infinite,
}

/// The monomials outside the lead-term ideal. When finite they form a
/// vector-space basis of the quotient, so their count is the scheme length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardMonomialBasis {
    Finite(Vec<Monomial>),
    Infinite,
}

/// True iff every ring variable appears as a pure power among the lead
/// terms (the classical finiteness test), or the basis contains a constant.
pub fn is_zero_dimensional<C: Coeff>(basis: &GroebnerBasis<C>) -> bool {
    let leads = basis.lead_monomials();
    leads_are_zero_dimensional(&leads, basis.ring().nvars())
}

fn leads_are_zero_dimensional(leads: &[Monomial], nvars: usize) -> bool {
    if leads.iter().any(|m| m.is_one()) {
        return true;
    }
    (0..nvars).all(|i| leads.iter().any(|m| m.as_pure_power() == Some(i)))
}

/// Breadth-first enumeration of the monomials not divisible by any lead
/// monomial. Standard monomials are closed under division, so walking up
/// from 1 reaches all of them. `degree_bound` restricts to total degree
/// strictly below the bound; `count_bound` aborts runaway enumerations.
fn enumerate_standard(
    leads: &[Monomial],
    nvars: usize,
    degree_bound: Option<u64>,
    count_bound: Option<u64>,
) -> Result<Vec<Monomial>, u64> {
    let mut found: Vec<Monomial> = Vec::new();
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue: VecDeque<Monomial> = VecDeque::new();
    let start = Monomial::one(nvars);
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(m) = queue.pop_front() {
        if let Some(k) = degree_bound {
            if m.total_degree() >= k {
                continue;
            }
        }
        if leads.iter().any(|l| l.divides(&m)) {
            continue;
        }
        found.push(m.clone());
        if let Some(cap) = count_bound {
            if found.len() as u64 > cap {
                return Err(cap);
            }
        }
        for i in 0..nvars {
            let child = m.mul(&Monomial::var(nvars, i));
            if seen.insert(child.clone()) {
                queue.push_back(child);
            }
        }
    }
    found.sort();
    Ok(found)
}

/// The standard monomials of a reduced basis, or `Infinite`.
pub fn standard_monomial_basis<C: Coeff>(basis: &GroebnerBasis<C>) -> StandardMonomialBasis {
    let nvars = basis.ring().nvars();
    let leads = basis.lead_monomials();
    if !leads_are_zero_dimensional(&leads, nvars) {
        return StandardMonomialBasis::Infinite;
    }
    let monomials =
        enumerate_standard(&leads, nvars, None, None).expect("finite by pure-power test");
    StandardMonomialBasis::Finite(monomials)
}

/// Number of standard monomials, i.e. the quotient's vector-space
/// dimension, or `Infinite`.
pub fn quotient_dimension<C: Coeff>(basis: &GroebnerBasis<C>) -> QuotientDimension {
    match standard_monomial_basis(basis) {
        StandardMonomialBasis::Finite(ms) => QuotientDimension::Finite(ms.len() as u64),
        StandardMonomialBasis::Infinite => QuotientDimension::Infinite,
    }
}

/// Guards for the m-adic stabilization loop.
#[derive(Debug, Clone)]
pub struct LocalLengthConfig {
    /// Largest power of the maximal ideal tried before giving up.
    pub cap: u32,
    /// Abort once a truncated quotient dimension exceeds this.
    pub dimension_bound: u64,
    pub groebner: GroebnerConfig,
}

impl Default for LocalLengthConfig {
    fn default() -> Self {
        LocalLengthConfig {
            cap: 50,
            dimension_bound: 1_000_000,
            groebner: GroebnerConfig::default(),
        }
    }
}

/// Dimension of `R/(I + m^k)` where `m` is the maximal ideal at the
/// origin, for an explicit generator list. The truncated Groebner run
/// happens under grevlex; the dimension does not depend on the order.
fn truncated_dimension<C: Coeff>(
    ring: &std::sync::Arc<crate::poly::Ring>,
    generators: &[crate::poly::Polynomial<C>],
    k: u64,
    config: &LocalLengthConfig,
) -> Result<u64, GroebnerError> {
    let nvars = ring.nvars();
    let order = MonomialOrder::GrevLex;
    let caps = engine::monomials_of_degree(nvars, k);
    let mut eng = Engine::new(&order, Some(k), config.groebner.step_limit);
    let gens = generators
        .iter()
        .map(|g| engine::sort_terms(g, &order))
        .collect();
    eng.run(gens, caps)?;
    // A lead of degree >= k cannot divide a monomial below the bound.
    let leads: Vec<Monomial> = eng
        .lead_monomials()
        .into_iter()
        .filter(|m| m.total_degree() < k)
        .collect();
    match enumerate_standard(&leads, nvars, Some(k), Some(config.dimension_bound)) {
        Ok(standard) => Ok(standard.len() as u64),
        Err(bound) => Err(GroebnerError::NotIsolatedAtOrigin(format!(
            "dimension of R/(I + m^{}) exceeds the bound {}",
            k, bound
        ))),
    }
}

/// Length of the localization of `ring/I` at the origin, computed as the
/// stabilized value of `dim R/(I + m^k)` for k = 1, 2, ... Two consecutive
/// equal values certify stabilization: once `m^k` and `m^(k+1)` agree
/// modulo `I`, Nakayama kills the whole tail.
pub fn local_length_at_origin<C: Coeff>(
    ideal: &Ideal<C>,
    config: &LocalLengthConfig,
) -> Result<u64, GroebnerError> {
    local_length_impl(ideal, config, true)
}

fn local_length_impl<C: Coeff>(
    ideal: &Ideal<C>,
    config: &LocalLengthConfig,
    eliminate: bool,
) -> Result<u64, GroebnerError> {
    assert!(config.cap >= 1, "stabilization cap must be at least 1");
    // Variables with a linear occurrence in a constant-free generator are
    // solved away up front (a coordinate change of the local ring); the
    // solver lifts its power series solutions as k grows.
    let mut solver = if eliminate {
        let system = elimination::LocalSystem::new(ideal.ring(), ideal.generators());
        system.has_pivots().then_some(system)
    } else {
        None
    };
    let mut previous: Option<u64> = None;
    for k in 1..=config.cap {
        let dim = match solver.as_mut().and_then(|s| s.reduced_at(k as u64)) {
            Some((ring, generators)) => truncated_dimension(&ring, &generators, k as u64, config)?,
            None => truncated_dimension(ideal.ring(), ideal.generators(), k as u64, config)?,
        };
        if dim > config.dimension_bound {
            return Err(GroebnerError::NotIsolatedAtOrigin(format!(
                "dimension of R/(I + m^{}) exceeds the bound {}",
                k, config.dimension_bound
            )));
        }
        if previous == Some(dim) {
            return Ok(dim);
        }
        previous = Some(dim);
    }
    Err(GroebnerError::NotIsolatedAtOrigin(format!(
        "no stabilization within m-adic cap {}",
        config.cap
    )))
}
