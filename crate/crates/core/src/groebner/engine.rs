//! Buchberger's algorithm over term lists sorted by the active order.
//!
//! The engine has one extra mode used by the local-length computation: a
//! total-degree truncation bound `k`. In that mode the generating set is
//! implicitly extended by every monomial of degree `k` (generators of the
//! k-th power of the maximal ideal at the origin), and any term of degree
//! at least `k` may be dropped on sight: dropping such a term is exactly a
//! reduction step by one of those monomial generators, so the computed lead
//! terms are those of the extended ideal.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial};

use super::error::GroebnerError;

/// Terms sorted strictly descending with respect to the active order.
pub(crate) type Terms<C> = Vec<(Monomial, C)>;

pub(crate) fn sort_terms<C: Coeff>(p: &Polynomial<C>, order: &MonomialOrder) -> Terms<C> {
    let mut terms: Terms<C> = p.terms().to_vec();
    terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
    terms
}

fn truncate_terms<C: Coeff>(terms: &mut Terms<C>, truncation: Option<u64>) {
    if let Some(k) = truncation {
        terms.retain(|(m, _)| m.total_degree() < k);
    }
}

/// `a - b` as descending-sorted term lists.
fn sub_terms<C: Coeff>(
    a: &[(Monomial, C)],
    b: &[(Monomial, C)],
    order: &MonomialOrder,
) -> Terms<C> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ma, ca)), Some((mb, cb))) => match order.cmp(ma, mb) {
                std::cmp::Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((mb.clone(), cb.neg()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca.sub(cb);
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            },
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (None, Some((mb, cb))) => {
                out.push((mb.clone(), cb.neg()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn scale_shift<C: Coeff>(terms: &[(Monomial, C)], mono: &Monomial, c: &C) -> Terms<C> {
    terms.iter().map(|(m, k)| (m.mul(mono), k.mul(c))).collect()
}

fn make_monic<C: Coeff>(terms: &mut Terms<C>) {
    if let Some((_, lead)) = terms.first() {
        let inv = lead.inverse().expect("nonzero lead coefficient");
        if !inv.is_one() {
            for (_, c) in terms.iter_mut() {
                *c = c.mul(&inv);
            }
        }
    }
}

/// The S-polynomial of two monic term lists.
fn s_poly_terms<C: Coeff>(
    f: &[(Monomial, C)],
    g: &[(Monomial, C)],
    order: &MonomialOrder,
) -> Terms<C> {
    let lf = &f[0].0;
    let lg = &g[0].0;
    let lcm = lf.lcm(lg);
    let uf = lcm.try_div(lf).expect("lcm divisible by lead");
    let ug = lcm.try_div(lg).expect("lcm divisible by lead");
    let a = scale_shift(f, &uf, &C::one());
    let b = scale_shift(g, &ug, &C::one());
    sub_terms(&a, &b, order)
}

pub(crate) struct Reduction<'a> {
    pub order: &'a MonomialOrder,
    pub truncation: Option<u64>,
    pub step_limit: u64,
    pub steps: u64,
}

impl<'a> Reduction<'a> {
    pub fn new(order: &'a MonomialOrder, truncation: Option<u64>, step_limit: u64) -> Self {
        Reduction {
            order,
            truncation,
            step_limit,
            steps: 0,
        }
    }

    /// Fully reduce `work` against the listed monic reducers: the remainder
    /// has no term divisible by any reducer lead monomial.
    pub fn normal_form<C: Coeff>(
        &mut self,
        mut work: Terms<C>,
        reducers: &[&Terms<C>],
    ) -> Result<Terms<C>, GroebnerError> {
        truncate_terms(&mut work, self.truncation);
        let mut remainder: Terms<C> = Vec::new();
        'outer: while let Some((lead_m, lead_c)) = work.first().cloned() {
            for r in reducers {
                let rl = &r[0].0;
                if rl.divides(&lead_m) {
                    self.steps += 1;
                    if self.steps > self.step_limit {
                        return Err(GroebnerError::StepLimitExceeded(self.step_limit));
                    }
                    let quot = lead_m.try_div(rl).expect("divisibility checked");
                    // work := work - lead_c * quot * r; the leads cancel.
                    let mut scaled = scale_shift(&r[1..], &quot, &lead_c);
                    truncate_terms(&mut scaled, self.truncation);
                    work.remove(0);
                    work = sub_terms(&work, &scaled, self.order);
                    continue 'outer;
                }
            }
            remainder.push(work.remove(0));
        }
        Ok(remainder)
    }
}

struct BasisElem<C: Coeff> {
    terms: Terms<C>,
    /// One of the degree-k monomials appended in truncation mode.
    is_cap: bool,
    /// Smallest total degree among tail terms (`u64::MAX` for monomials);
    /// used to pre-filter pairs whose S-polynomial truncates to nothing.
    min_tail_degree: u64,
}

impl<C: Coeff> BasisElem<C> {
    fn new(terms: Terms<C>, is_cap: bool) -> Self {
        let min_tail_degree = terms[1..]
            .iter()
            .map(|(m, _)| m.total_degree())
            .min()
            .unwrap_or(u64::MAX);
        BasisElem {
            terms,
            is_cap,
            min_tail_degree,
        }
    }

    fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

/// Priority key for the pair queue: normal selection strategy, smallest
/// lcm degree (with respect to the order's grading) first.
#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey(u64, Vec<u32>, usize, usize);

pub(crate) struct Engine<'a, C: Coeff> {
    order: &'a MonomialOrder,
    truncation: Option<u64>,
    basis: Vec<BasisElem<C>>,
    /// Indices of the non-cap basis elements.
    noncap: Vec<usize>,
    queue: BinaryHeap<Reverse<PairKey>>,
    handled: HashSet<(usize, usize)>,
    reduction_steps: u64,
    step_limit: u64,
}

impl<'a, C: Coeff> Engine<'a, C> {
    pub fn new(order: &'a MonomialOrder, truncation: Option<u64>, step_limit: u64) -> Self {
        Engine {
            order,
            truncation,
            basis: Vec::new(),
            noncap: Vec::new(),
            queue: BinaryHeap::new(),
            handled: HashSet::new(),
            reduction_steps: 0,
            step_limit,
        }
    }

    fn saturating_sub_degree(lcm: u64, lead: u64, min_tail: u64) -> u64 {
        if min_tail == u64::MAX {
            u64::MAX
        } else {
            lcm - lead + min_tail
        }
    }

    fn push_element(&mut self, terms: Terms<C>, is_cap: bool) {
        let elem = BasisElem::new(terms, is_cap);
        let t = self.basis.len();
        // Cap-cap pairs have an identically zero S-polynomial; they are
        // treated as handled implicitly (see `pair_is_handled`) instead of
        // being enumerated, which matters when there are many caps.
        let candidates: Vec<usize> = if elem.is_cap {
            self.noncap.clone()
        } else {
            (0..t).collect()
        };
        for s in candidates {
            let other = &self.basis[s];
            // S-polynomial of two monomials is identically zero.
            if other.is_monomial() && elem.is_monomial() {
                self.handled.insert((s, t));
                continue;
            }
            // Buchberger's product criterion.
            let ls = other.lead();
            let lt = elem.lead();
            if ls.gcd(lt).is_one() {
                self.handled.insert((s, t));
                continue;
            }
            let lcm = ls.lcm(lt);
            // In truncation mode, skip pairs whose S-polynomial consists
            // solely of terms at or above the truncation degree.
            if let Some(k) = self.truncation {
                let d = lcm.total_degree();
                let low =
                    Self::saturating_sub_degree(d, ls.total_degree(), other.min_tail_degree).min(
                        Self::saturating_sub_degree(d, lt.total_degree(), elem.min_tail_degree),
                    );
                if low >= k {
                    self.handled.insert((s, t));
                    continue;
                }
            }
            self.queue.push(Reverse(PairKey(
                self.order.degree(&lcm),
                lcm.exps().to_vec(),
                s,
                t,
            )));
        }
        if !elem.is_cap {
            self.noncap.push(t);
        }
        self.basis.push(elem);
    }

    /// A pair counts as handled once it has left the queue or was skipped
    /// by a criterion; cap-cap pairs are never enqueued at all.
    fn pair_is_handled(&self, a: usize, b: usize) -> bool {
        (self.basis[a].is_cap && self.basis[b].is_cap) || self.handled.contains(&key(a, b))
    }

    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial) -> bool {
        self.noncap.iter().any(|&k| {
            k != i
                && k != j
                && self.basis[k].lead().divides(lcm)
                && self.pair_is_handled(i, k)
                && self.pair_is_handled(j, k)
        })
    }

    fn reducer_refs(&self) -> Vec<&Terms<C>> {
        // Cap monomials are redundant as reducers: eager truncation already
        // removes every term they could rewrite.
        self.basis
            .iter()
            .filter(|e| !(e.is_cap && self.truncation.is_some()))
            .map(|e| &e.terms)
            .collect()
    }

    pub fn run(
        &mut self,
        generators: Vec<Terms<C>>,
        cap_monomials: Vec<Monomial>,
    ) -> Result<(), GroebnerError> {
        for mut g in generators {
            truncate_terms(&mut g, self.truncation);
            if g.is_empty() {
                continue;
            }
            make_monic(&mut g);
            self.push_element(g, false);
        }
        for m in cap_monomials {
            self.push_element(vec![(m, C::one())], true);
        }

        while let Some(Reverse(PairKey(_, _, i, j))) = self.queue.pop() {
            let lcm = self.basis[i].lead().lcm(self.basis[j].lead());
            if self.chain_criterion(i, j, &lcm) {
                self.handled.insert(key(i, j));
                continue;
            }
            let s = s_poly_terms(&self.basis[i].terms, &self.basis[j].terms, self.order);
            self.handled.insert(key(i, j));
            let reducers = self.reducer_refs();
            let mut reduction = Reduction::new(self.order, self.truncation, self.step_limit);
            reduction.steps = self.reduction_steps;
            let mut remainder = reduction.normal_form(s, &reducers)?;
            self.reduction_steps = reduction.steps;
            if !remainder.is_empty() {
                make_monic(&mut remainder);
                self.push_element(remainder, false);
            }
        }
        Ok(())
    }

    /// Lead monomials of the computed basis (caps included).
    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|e| e.lead().clone()).collect()
    }

    /// Interreduce into the reduced Groebner basis. Only meaningful without
    /// truncation.
    pub fn into_reduced_basis(mut self) -> Result<Vec<Terms<C>>, GroebnerError> {
        debug_assert!(self.truncation.is_none());
        // Minimize: keep elements whose lead monomial is not divisible by
        // the lead of another kept element; process leads in ascending
        // order so divisors are kept first.
        let mut indices: Vec<usize> = (0..self.basis.len()).collect();
        indices.sort_by(|&a, &b| {
            self.order
                .cmp(self.basis[a].lead(), self.basis[b].lead())
                .then(a.cmp(&b))
        });
        let mut kept: Vec<usize> = Vec::new();
        for idx in indices {
            if !kept
                .iter()
                .any(|&k| self.basis[k].lead().divides(self.basis[idx].lead()))
            {
                kept.push(idx);
            }
        }

        // Tail-reduce every kept element against the other kept elements.
        let mut reduced: Vec<Terms<C>> = Vec::with_capacity(kept.len());
        for (pos, &idx) in kept.iter().enumerate() {
            let others: Vec<&Terms<C>> = kept
                .iter()
                .enumerate()
                .filter(|(p, _)| *p != pos)
                .map(|(_, &k)| &self.basis[k].terms)
                .collect();
            let mut reduction = Reduction::new(self.order, None, self.step_limit);
            reduction.steps = self.reduction_steps;
            let mut terms = reduction.normal_form(self.basis[idx].terms.clone(), &others)?;
            self.reduction_steps = reduction.steps;
            debug_assert!(!terms.is_empty(), "kept element reduced to zero");
            make_monic(&mut terms);
            reduced.push(terms);
        }
        // Canonical output order: descending lead monomials.
        reduced.sort_by(|a, b| self.order.cmp(&b[0].0, &a[0].0));
        Ok(reduced)
    }
}

fn key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// All monomials of total degree exactly `degree` in `nvars` variables.
pub(crate) fn monomials_of_degree(nvars: usize, degree: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(exps: &mut Vec<u32>, var: usize, remaining: u64, out: &mut Vec<Monomial>) {
        if var + 1 == exps.len() {
            exps[var] = remaining as u32;
            out.push(Monomial::from_exps(exps.clone()));
            return;
        }
        for e in 0..=remaining {
            exps[var] = e as u32;
            rec(exps, var + 1, remaining - e, out);
        }
        exps[var] = 0;
    }
    if nvars == 0 {
        return out;
    }
    rec(&mut exps, 0, degree, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_of_degree(1, 4).len(), 1);
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        // C(12 + 4 - 1, 12 - 1)
        assert_eq!(monomials_of_degree(12, 4).len(), 1365);
    }
}
