use std::cmp::Ordering;

/// A power product, stored as one exponent per ring variable.
///
/// `Ord` is the graded reverse lexicographic order; it serves as the fixed
/// structural order used for canonical term storage, independent of the
/// monomial order a particular computation runs under.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, divisor: &Self) -> Option<Self> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&divisor.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// `Some(i)` when the monomial is `x_i^e` with `e >= 1`.
    pub fn as_pure_power(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub(crate) fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
        let da: u64 = a.iter().map(|&e| e as u64).sum();
        let db: u64 = b.iter().map(|&e| e as u64).sum();
        match da.cmp(&db) {
            Ordering::Equal => {
                // Equal degree: the rightmost differing exponent decides,
                // with the smaller exponent winning.
                for i in (0..a.len()).rev() {
                    if a[i] != b[i] {
                        return b[i].cmp(&a[i]);
                    }
                }
                Ordering::Equal
            }
            other => other,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        Monomial::grevlex_cmp(&self.exps, &other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn division_and_lcm() {
        let xy2 = m(&[1, 2]);
        let y = m(&[0, 1]);
        assert_eq!(xy2.try_div(&y), Some(m(&[1, 1])));
        assert_eq!(y.try_div(&xy2), None);
        assert_eq!(xy2.lcm(&m(&[2, 0])), m(&[2, 2]));
        assert!(y.divides(&xy2));
    }

    #[test]
    fn structural_order_is_graded() {
        // x > y under grevlex with x first.
        assert!(m(&[1, 0]) > m(&[0, 1]));
        // degree dominates
        assert!(m(&[0, 2]) > m(&[1, 0]));
        // x*z < y^2 in three variables (rightmost difference rule)
        assert!(m(&[1, 0, 1]) < m(&[0, 2, 0]));
    }

    #[test]
    fn pure_powers() {
        assert_eq!(m(&[0, 3]).as_pure_power(), Some(1));
        assert_eq!(m(&[1, 1]).as_pure_power(), None);
        assert_eq!(m(&[0, 0]).as_pure_power(), None);
    }
}
