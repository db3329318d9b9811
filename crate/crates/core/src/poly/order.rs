use std::cmp::Ordering;

use super::error::PolyError;
use super::monomial::Monomial;

/// A total order on monomials refining divisibility.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    GrevLex,
    /// Pure lexicographic.
    Lex,
    /// Weighted degree first (all weights positive), grevlex tie-break.
    Weighted(Vec<u64>),
}

impl MonomialOrder {
    pub fn weighted(weights: Vec<u64>) -> Self {
        MonomialOrder::Weighted(weights)
    }

    /// Check the order is usable on a ring with `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<(), PolyError> {
        if let MonomialOrder::Weighted(w) = self {
            if w.len() != nvars {
                return Err(PolyError::WeightCount {
                    got: w.len(),
                    expected: nvars,
                });
            }
            if w.contains(&0) {
                return Err(PolyError::NonPositiveWeight);
            }
        }
        Ok(())
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => Monomial::grevlex_cmp(a.exps(), b.exps()),
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::Weighted(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| Monomial::grevlex_cmp(a.exps(), b.exps())),
        }
    }

    /// The grading the order sorts by first; used for pair selection.
    pub fn degree(&self, m: &Monomial) -> u64 {
        match self {
            MonomialOrder::Weighted(w) => m.weighted_degree(w),
            _ => m.total_degree(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn weighted_order_uses_weights() {
        // wt(x) = 1, wt(y) = 3: y beats x^2.
        let o = MonomialOrder::weighted(vec![1, 3]);
        assert_eq!(o.cmp(&m(&[0, 1]), &m(&[2, 0])), Ordering::Greater);
        assert!(o.validate(2).is_ok());
        assert!(o.validate(3).is_err());
        assert!(MonomialOrder::weighted(vec![0, 1]).validate(2).is_err());
    }

    #[test]
    fn orders_refine_divisibility() {
        let orders = [
            MonomialOrder::GrevLex,
            MonomialOrder::Lex,
            MonomialOrder::weighted(vec![2, 3]),
        ];
        let a = m(&[1, 1]);
        let b = m(&[2, 1]);
        for o in &orders {
            assert_eq!(o.cmp(&a, &b), Ordering::Less);
        }
    }
}
