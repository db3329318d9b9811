use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::coeff::{Coeff, Rational};
use super::error::PolyError;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::ring::Ring;

/// A sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept in canonical form: no zero coefficients, at most one term
/// per monomial, sorted descending in the structural (grevlex) order. This
/// makes equality and hashing structural regardless of which monomial order
/// a computation happens to use.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C: Coeff = Rational> {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, C)>,
}

/// Result of checking a polynomial against a weight vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightedDegree {
    /// All terms share this weighted degree (zero counts as degree 0).
    Homogeneous(u64),
    Inhomogeneous,
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: C) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((Monomial::one(ring.nvars()), c));
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn integer(ring: &Arc<Ring>, n: i64) -> Self {
        Self::constant(ring, C::from_integer(n))
    }

    /// The variable with the given index; panics when out of range.
    pub fn variable(ring: &Arc<Ring>, index: usize) -> Self {
        assert!(index < ring.nvars(), "variable index out of range");
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), index), C::one())],
        }
    }

    pub fn var_named(ring: &Arc<Ring>, name: &str) -> Result<Self, PolyError> {
        let index = ring
            .var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::variable(ring, index))
    }

    /// Build a polynomial from arbitrary (monomial, coefficient) pairs,
    /// combining duplicates and dropping zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, C)>) -> Result<Self, PolyError> {
        for (m, _) in &terms {
            if m.nvars() != ring.nvars() {
                return Err(PolyError::ExponentWidth {
                    got: m.nvars(),
                    expected: ring.nvars(),
                });
            }
        }
        Ok(Self::collect(ring.clone(), terms))
    }

    fn collect(ring: Arc<Ring>, terms: Vec<(Monomial, C)>) -> Self {
        let mut map: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().add(&c);
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        Polynomial {
            ring,
            terms: map.into_iter().rev().collect(),
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Terms in descending structural order.
    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero included).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> C {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn coeff_of(&self, mono: &Monomial) -> C {
        self.terms
            .iter()
            .find(|(m, _)| m == mono)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Largest term with respect to the given order.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &C)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m, c))
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    /// Exact product; errors on a ring mismatch.
    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let mut acc: Vec<(Monomial, C)> = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Ok(Self::collect(self.ring.clone(), acc))
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() || j < other.terms.len() {
            let pick_left = match (self.terms.get(i), other.terms.get(j)) {
                (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                    std::cmp::Ordering::Greater => Some(true),
                    std::cmp::Ordering::Less => Some(false),
                    std::cmp::Ordering::Equal => None,
                },
                (Some(_), None) => Some(true),
                (None, Some(_)) => Some(false),
                (None, None) => unreachable!(),
            };
            match pick_left {
                Some(true) => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Some(false) => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if subtract { c.neg() } else { c.clone() }));
                    j += 1;
                }
                None => {
                    let (m, ca) = &self.terms[i];
                    let cb = &other.terms[j].1;
                    let c = if subtract { ca.sub(cb) } else { ca.add(cb) };
                    if !c.is_zero() {
                        out.push((m.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        if c.is_one() {
            return self.clone();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).expect("same ring");
            }
        }
        result
    }

    /// Formal partial derivative with respect to a named variable.
    pub fn differentiate(&self, var: &str) -> Result<Self, PolyError> {
        let index = self
            .ring
            .var_index(var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exps()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[index] -= 1;
            terms.push((Monomial::from_exps(exps), c.mul(&C::from_integer(e as i64))));
        }
        Ok(Self::collect(self.ring.clone(), terms))
    }

    /// Compose: replace each bound variable by the given polynomial. All
    /// bound values must live in a single target ring, and every variable
    /// that occurs unbound must exist in that target ring by name. With no
    /// bindings the polynomial is returned unchanged.
    pub fn substitute(&self, bindings: &[(&str, Polynomial<C>)]) -> Result<Self, PolyError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let target = bindings[0].1.ring.clone();
        let mut bound: Vec<Option<&Polynomial<C>>> = vec![None; self.ring.nvars()];
        for (name, value) in bindings {
            if value.ring != target {
                return Err(PolyError::InconsistentSubstitution(
                    target.to_string(),
                    value.ring.to_string(),
                ));
            }
            let index = self
                .ring
                .var_index(name)
                .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            if bound[index].is_some() {
                return Err(PolyError::DuplicateBinding(name.to_string()));
            }
            bound[index] = Some(value);
        }
        // Unbound variables pass through by name.
        let mut passthrough: Vec<Option<usize>> = vec![None; self.ring.nvars()];
        for (i, slot) in bound.iter().enumerate() {
            if slot.is_none() {
                passthrough[i] = target.var_index(self.ring.var_name(i));
            }
        }

        let mut result = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut factor = Self::constant(&target, c.clone());
            let mut carried = vec![0u32; target.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match bound[i] {
                    Some(value) => factor = factor.try_mul(&value.pow(e))?,
                    None => match passthrough[i] {
                        Some(j) => carried[j] += e,
                        None => {
                            return Err(PolyError::UnknownVariable(
                                self.ring.var_name(i).to_string(),
                            ))
                        }
                    },
                }
            }
            factor = factor.mul_monomial(&Monomial::from_exps(carried));
            result = result.try_add(&factor)?;
        }
        Ok(result)
    }

    /// Re-express the polynomial in another ring, matching variables by
    /// name. Every occurring variable must exist in the target.
    pub fn transport(&self, target: &Arc<Ring>) -> Result<Self, PolyError> {
        let map: Vec<Option<usize>> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(v))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    match map[i] {
                        Some(j) => exps[j] = e,
                        None => {
                            return Err(PolyError::UnknownVariable(
                                self.ring.var_name(i).to_string(),
                            ))
                        }
                    }
                }
            }
            terms.push((Monomial::from_exps(exps), c.clone()));
        }
        Ok(Self::collect(target.clone(), terms))
    }

    /// Split into coefficients with respect to a subset of the variables.
    pub fn coefficients_in(&self, params: &[&str]) -> Result<CoefficientSplit<C>, PolyError> {
        if params.is_empty() {
            return Err(PolyError::EmptyParameters);
        }
        let mut param_indices = Vec::new();
        for p in params {
            let index = self
                .ring
                .var_index(p)
                .ok_or_else(|| PolyError::UnknownVariable(p.to_string()))?;
            if !param_indices.contains(&index) {
                param_indices.push(index);
            }
        }
        param_indices.sort_unstable();
        let coeff_indices: Vec<usize> = (0..self.ring.nvars())
            .filter(|i| !param_indices.contains(i))
            .collect();
        let param_ring = self.ring.select(&param_indices);
        let coefficient_ring = self.ring.select(&coeff_indices);

        let mut groups: BTreeMap<Monomial, Vec<(Monomial, C)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let pm = Monomial::from_exps(param_indices.iter().map(|&i| m.exps()[i]).collect());
            let cm = Monomial::from_exps(coeff_indices.iter().map(|&i| m.exps()[i]).collect());
            groups.entry(pm).or_default().push((cm, c.clone()));
        }
        let parts: Vec<(Monomial, Polynomial<C>)> = groups
            .into_iter()
            .rev()
            .map(|(pm, terms)| (pm, Polynomial::collect(coefficient_ring.clone(), terms)))
            .collect();
        Ok(CoefficientSplit {
            ring: self.ring.clone(),
            param_indices,
            coeff_indices,
            param_ring,
            coefficient_ring,
            parts,
        })
    }

    /// Common weighted degree of all terms, or `Inhomogeneous`.
    pub fn weighted_degree(&self, weights: &[u64]) -> Result<WeightedDegree, PolyError> {
        if weights.len() != self.ring.nvars() {
            return Err(PolyError::WeightCount {
                got: weights.len(),
                expected: self.ring.nvars(),
            });
        }
        if weights.contains(&0) {
            return Err(PolyError::NonPositiveWeight);
        }
        let mut degree = None;
        for (m, _) in &self.terms {
            let d = m.weighted_degree(weights);
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return Ok(WeightedDegree::Inhomogeneous),
                _ => {}
            }
        }
        Ok(WeightedDegree::Homogeneous(degree.unwrap_or(0)))
    }

    pub fn is_homogeneous_of_degree(&self, d: u64) -> bool {
        !self.is_zero() && self.terms.iter().all(|(m, _)| m.total_degree() == d)
    }

    /// Evaluate at a point, one value per ring variable.
    pub fn eval(&self, values: &[C]) -> Result<C, PolyError> {
        if values.len() != self.ring.nvars() {
            return Err(PolyError::ValueCount {
                got: values.len(),
                expected: self.ring.nvars(),
            });
        }
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&values[i]);
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Divide by the leading coefficient under the given order.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inverse().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }
}

/// The decomposition produced by [`Polynomial::coefficients_in`]: parts are
/// (monomial in the parameters, coefficient in the remaining variables),
/// sorted descending by the parameter monomial.
#[derive(Clone, Debug)]
pub struct CoefficientSplit<C: Coeff> {
    ring: Arc<Ring>,
    param_indices: Vec<usize>,
    coeff_indices: Vec<usize>,
    pub param_ring: Arc<Ring>,
    pub coefficient_ring: Arc<Ring>,
    pub parts: Vec<(Monomial, Polynomial<C>)>,
}

impl<C: Coeff> CoefficientSplit<C> {
    /// Reassemble the original polynomial; the round trip is exact.
    pub fn recompose(&self) -> Polynomial<C> {
        let n = self.ring.nvars();
        let mut terms = Vec::new();
        for (pm, coeff) in &self.parts {
            for (cm, c) in coeff.terms() {
                let mut exps = vec![0u32; n];
                for (k, &i) in self.param_indices.iter().enumerate() {
                    exps[i] = pm.exps()[k];
                }
                for (k, &i) in self.coeff_indices.iter().enumerate() {
                    exps[i] = cm.exps()[k];
                }
                terms.push((Monomial::from_exps(exps), c.clone()));
            }
        }
        Polynomial::collect(self.ring.clone(), terms)
    }
}

impl<C: Coeff> std::ops::Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl<C: Coeff> std::ops::Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl<C: Coeff> std::ops::Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl<C: Coeff> std::ops::Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial::neg(self)
    }
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let repr = c.to_string();
            let (sign, magnitude) = match repr.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", repr),
            };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else if sign == "-" {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if magnitude != "1" || m.is_one() {
                factors.push(magnitude);
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.var_name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.var_name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in ({})", self, self.ring)
    }
}
