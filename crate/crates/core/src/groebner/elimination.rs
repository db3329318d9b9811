//! Local elimination of variables that occur linearly in a generator.
//!
//! Generators with zero constant term and a nonzero linear part solve
//! their pivot variables, modulo any power of the maximal ideal at the
//! origin, as power series in the remaining variables: Gaussian
//! elimination on the linear parts picks one pivot variable per usable
//! generator, and fixpoint sweeps push every leftover pivot occurrence
//! above the truncation degree (each sweep raises its order, since pivots
//! only survive inside terms of degree at least two). Substituting the
//! solutions is a coordinate change of the local ring, so the dimension of
//! R/(I + m^k) is unchanged while the ambient variable count drops to the
//! tangent-space dimension. The m-adic stabilization loop then runs in few
//! variables, where enumerating the cap monomials stays cheap.
//!
//! The solver is incremental: solutions correct modulo m^k lift to m^(k+1)
//! in a single extra sweep, so the stabilization loop pays for each
//! precision level once. All arithmetic is degree-truncated on the fly.

use std::collections::HashMap;
use std::sync::Arc;

use crate::poly::{Coeff, Monomial, Polynomial, Ring};

/// Give up on elimination once a substituted polynomial reaches this many
/// terms; the caller then proceeds with the untouched system.
const TERM_BUDGET: usize = 100_000;

fn truncate<C: Coeff>(p: &Polynomial<C>, k: u64) -> Polynomial<C> {
    let terms: Vec<(Monomial, C)> = p
        .terms()
        .iter()
        .filter(|(m, _)| m.total_degree() < k)
        .cloned()
        .collect();
    Polynomial::from_terms(p.ring(), terms).expect("same ring")
}

fn mul_trunc<C: Coeff>(a: &Polynomial<C>, b: &Polynomial<C>, k: u64) -> Polynomial<C> {
    let mut acc = Vec::new();
    for (ma, ca) in a.terms() {
        let da = ma.total_degree();
        if da >= k {
            continue;
        }
        for (mb, cb) in b.terms() {
            if da + mb.total_degree() < k {
                acc.push((ma.mul(mb), ca.mul(cb)));
            }
        }
    }
    Polynomial::from_terms(a.ring(), acc).expect("same ring")
}

fn pow_trunc<C: Coeff>(base: &Polynomial<C>, exp: u32, k: u64) -> Polynomial<C> {
    let mut result = Polynomial::one(base.ring());
    let mut acc = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_trunc(&result, &acc, k);
        }
        e >>= 1;
        if e > 0 {
            acc = mul_trunc(&acc, &acc, k);
        }
    }
    result
}

/// Coefficient of the bare monomial `x_var`.
fn linear_coeff<C: Coeff>(p: &Polynomial<C>, var: usize) -> C {
    p.coeff_of(&Monomial::var(p.ring().nvars(), var))
}

/// A local presentation of an ideal, with the linearly-solvable variables
/// split off. Built once per ideal at full precision; solutions lift
/// incrementally as the m-adic loop raises the truncation degree.
pub(crate) struct LocalSystem<C: Coeff> {
    ring: Arc<Ring>,
    essential: Arc<Ring>,
    /// (pivot variable, defining right side x - h); the right side holds
    /// the pivot variables only in terms of degree at least two.
    defining: Vec<(usize, Polynomial<C>)>,
    /// Remaining generators, full precision, pivot linear parts cleared.
    rows: Vec<Polynomial<C>>,
    /// Current solution series per ring variable (`None` = essential).
    solutions: Vec<Option<Polynomial<C>>>,
    /// Cached truncated powers of the solutions, valid at `powers_k` only.
    powers: HashMap<(usize, u32), Polynomial<C>>,
    powers_k: u64,
    precision: u64,
    budget_blown: bool,
}

impl<C: Coeff> LocalSystem<C> {
    /// Gaussian elimination on the linear parts, at full precision: pick a
    /// pivot variable per constant-free generator with a linear term, and
    /// clear its linear occurrences everywhere else. Row operations keep
    /// the generated ideal; pivot rows are constant-free so no constant
    /// terms appear.
    pub fn new(ring: &Arc<Ring>, generators: &[Polynomial<C>]) -> Self {
        let mut rows: Vec<Polynomial<C>> = generators
            .iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect();
        let mut pivots: Vec<(usize, Polynomial<C>)> = Vec::new();
        let mut pivoted = vec![false; ring.nvars()];
        loop {
            let mut found = None;
            'search: for (gi, g) in rows.iter().enumerate() {
                if !g.constant_term().is_zero() {
                    continue;
                }
                for (m, c) in g.terms() {
                    if m.total_degree() == 1 {
                        let v = m.as_pure_power().expect("degree-one monomial");
                        if !pivoted[v] {
                            found = Some((gi, v, c.clone()));
                            break 'search;
                        }
                    }
                }
            }
            let Some((gi, var, coeff)) = found else { break };
            let h = rows
                .remove(gi)
                .scale(&coeff.inverse().expect("nonzero linear coefficient"));
            for row in &mut rows {
                let c = linear_coeff(row, var);
                if !c.is_zero() {
                    *row = row.try_sub(&h.scale(&c)).expect("same ring");
                }
            }
            for (_, p) in &mut pivots {
                let c = linear_coeff(p, var);
                if !c.is_zero() {
                    *p = p.try_sub(&h.scale(&c)).expect("same ring");
                }
            }
            pivoted[var] = true;
            pivots.push((var, h));
        }
        rows.retain(|g| !g.is_zero());

        let keep: Vec<usize> = (0..ring.nvars()).filter(|&i| !pivoted[i]).collect();
        let essential = ring.select(&keep);
        let mut solutions = vec![None; ring.nvars()];
        let mut defining = Vec::with_capacity(pivots.len());
        for (var, h) in pivots {
            let x = Polynomial::variable(ring, var);
            let rhs = x.try_sub(&h).expect("same ring");
            // Seed with the linear part: every later iterate is then free
            // of pivot variables, hence small.
            let seed = Polynomial::from_terms(
                ring,
                rhs.terms()
                    .iter()
                    .filter(|(m, _)| m.total_degree() <= 1)
                    .cloned()
                    .collect(),
            )
            .expect("same ring");
            solutions[var] = Some(seed);
            defining.push((var, rhs));
        }

        LocalSystem {
            ring: ring.clone(),
            essential,
            defining,
            rows,
            solutions,
            powers: HashMap::new(),
            powers_k: 0,
            precision: 2,
            budget_blown: false,
        }
    }

    pub fn has_pivots(&self) -> bool {
        !self.defining.is_empty()
    }

    fn power(&mut self, var: usize, exp: u32, k: u64) -> Polynomial<C> {
        if self.powers_k != k {
            self.powers.clear();
            self.powers_k = k;
        }
        if let Some(p) = self.powers.get(&(var, exp)) {
            return p.clone();
        }
        let base = self.solutions[var]
            .as_ref()
            .expect("pivot variable")
            .clone();
        let p = pow_trunc(&base, exp, k);
        self.powers.insert((var, exp), p.clone());
        p
    }

    /// Replace every pivot variable by its current solution, truncating
    /// every intermediate product. `None` when the term budget is spent.
    fn substitute(&mut self, p: &Polynomial<C>, k: u64) -> Option<Polynomial<C>> {
        let nvars = self.ring.nvars();
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in p.terms().to_vec() {
            let mut passthrough = vec![0u32; nvars];
            let mut pivot_part: Vec<(usize, u32)> = Vec::new();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if self.solutions[i].is_some() {
                    pivot_part.push((i, e));
                } else {
                    passthrough[i] = e;
                }
            }
            let passthrough = Monomial::from_exps(passthrough);
            if passthrough.total_degree() >= k {
                continue;
            }
            let mut term =
                Polynomial::from_terms(&self.ring, vec![(passthrough, c)]).expect("same ring");
            for (var, exp) in pivot_part {
                let factor = self.power(var, exp, k);
                term = mul_trunc(&term, &factor, k);
                if term.is_zero() {
                    break;
                }
            }
            acc = acc.try_add(&term).expect("same ring");
            if acc.num_terms() > TERM_BUDGET {
                return None;
            }
        }
        Some(acc)
    }

    /// Lift the solutions to be correct modulo m^k. Each sweep evaluates
    /// the defining right sides at the current solutions; solutions
    /// correct modulo m^d come out correct modulo m^(d+1) because pivot
    /// variables only occur in terms of degree at least two.
    fn lift(&mut self, k: u64) -> bool {
        if self.precision >= k {
            return true;
        }
        loop {
            let mut changed = false;
            for i in 0..self.defining.len() {
                let (var, rhs) = self.defining[i].clone();
                let Some(next) = self.substitute(&rhs, k) else {
                    return false;
                };
                if self.solutions[var].as_ref() != Some(&next) {
                    self.powers.retain(|(v, _), _| *v != var);
                    self.solutions[var] = Some(next);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        self.precision = k;
        true
    }

    /// The system rewritten in the essential variables, valid modulo m^k,
    /// or `None` once the term budget is blown.
    pub fn reduced_at(&mut self, k: u64) -> Option<(Arc<Ring>, Vec<Polynomial<C>>)> {
        if self.budget_blown {
            return None;
        }
        if !self.lift(k) {
            self.budget_blown = true;
            return None;
        }
        let mut out = Vec::with_capacity(self.rows.len());
        for row in &self.rows.clone() {
            let Some(s) = self.substitute(&truncate(row, k), k) else {
                self.budget_blown = true;
                return None;
            };
            if !s.is_zero() {
                out.push(
                    s.transport(&self.essential)
                        .expect("pivot variables solved away"),
                );
            }
        }
        Some((self.essential.clone(), out))
    }
}

/// One-shot elimination at a fixed truncation degree.
#[cfg(test)]
pub(crate) struct Eliminated<C: Coeff> {
    pub ring: Arc<Ring>,
    pub generators: Vec<Polynomial<C>>,
}

#[cfg(test)]
pub(crate) fn eliminate_linear_mod<C: Coeff>(
    ring: &Arc<Ring>,
    generators: &[Polynomial<C>],
    k: u64,
) -> Eliminated<C> {
    let mut system = LocalSystem::new(ring, generators);
    if system.has_pivots() {
        if let Some((ring, generators)) = system.reduced_at(k) {
            return Eliminated { ring, generators };
        }
    }
    Eliminated {
        ring: ring.clone(),
        generators: generators
            .iter()
            .map(|g| truncate(g, k))
            .filter(|g| !g.is_zero())
            .collect(),
    }
}
