//! Truncated integer power series and the rational-curve counting function
//! n(g), the coefficients of the 24th power of the inverse Euler product.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(u64, u64),
    #[error("constant term {0} is not an integer unit")]
    NonUnitConstantTerm(BigInt),
}

/// An integer power series truncated at a fixed order G: coefficients of
/// q^0 .. q^G, with everything beyond discarded. Arithmetic never consults
/// discarded coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: u64) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::ZERO; order as usize + 1],
        }
    }

    pub fn one(order: u64) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Build from coefficients; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least order 0");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> u64 {
        self.coeffs.len() as u64 - 1
    }

    pub fn coeff(&self, i: u64) -> &BigInt {
        &self.coeffs[i as usize]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn multiply(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        let mut out = vec![BigInt::ZERO; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplicative inverse up to the order. The constant term must be
    /// an integer unit (plus or minus one) so the inverse stays integral.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if !c0.is_one() && !(-c0).is_one() {
            return Err(SeriesError::NonUnitConstantTerm(c0.clone()));
        }
        let n = self.coeffs.len();
        let mut out = vec![BigInt::ZERO; n];
        out[0] = c0.clone(); // (+-1) is its own inverse
        for k in 1..n {
            let mut acc = BigInt::ZERO;
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[k - i];
                }
            }
            out[k] = -c0 * acc;
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Integer power by binary exponentiation (for the 24th power: five
    /// squarings and one extra multiply).
    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.multiply(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base).expect("same order");
            }
        }
        result
    }

    /// The same power by successive multiplications; kept as the slow
    /// independent route for the cross-check.
    pub fn pow_iterative(&self, exp: u32) -> Self {
        let mut result = Self::one(self.order());
        for _ in 0..exp {
            result = result.multiply(self).expect("same order");
        }
        result
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }
}

/// `prod_{n=1..G} (1 - q^n)` truncated at order G, multiplied factor by
/// factor.
pub fn euler_product_naive(order: u64) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    for n in 1..=order {
        let mut factor = TruncatedSeries::one(order);
        factor.coeffs[n as usize] = -BigInt::one();
        acc = acc.multiply(&factor).expect("same order");
    }
    acc
}

/// The same product through the pentagonal number theorem:
/// `1 + sum_{k>=1} (-1)^k (q^(k(3k-1)/2) + q^(k(3k+1)/2))`.
pub fn euler_product_pentagonal(order: u64) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    s.coeffs[0] = BigInt::one();
    let mut k: u64 = 1;
    loop {
        let first = k * (3 * k - 1) / 2;
        if first > order {
            break;
        }
        let sign = BigInt::from(if k % 2 == 1 { -1 } else { 1 });
        s.coeffs[first as usize] += &sign;
        let second = k * (3 * k + 1) / 2;
        if second <= order {
            s.coeffs[second as usize] += &sign;
        }
        k += 1;
    }
    s
}

/// `prod (1 - q^n)` to the given order; the pentagonal expansion is the
/// default route, with the naive product kept as its cross-check.
pub fn euler_product(order: u64) -> TruncatedSeries {
    euler_product_pentagonal(order)
}

/// The counts n(0..G): coefficients of `prod (1 - q^n)^(-24)`. The leading
/// q of q/Delta(q) is cancelled symbolically, so index g holds n(g).
pub fn rational_curve_counts(order: u64) -> Vec<BigInt> {
    let inv = euler_product_pentagonal(order)
        .inverse()
        .expect("unit constant term");
    inv.pow(24).coeffs
}

/// Two independent pipelines for the n(g) table agree to the given order:
/// (a) invert the pentagonal series then square up to the 24th power;
/// (b) raise the naive factor-by-factor product to the 24th power by
/// successive multiplications, then invert.
pub fn counts_cross_check(order: u64) -> bool {
    let via_pentagonal = euler_product_pentagonal(order)
        .inverse()
        .expect("unit constant term")
        .pow(24);
    let via_naive = euler_product_naive(order)
        .pow_iterative(24)
        .inverse()
        .expect("unit constant term");
    via_pentagonal == via_naive
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn series(coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn multiply_examples() {
        let a = series(&[1, 1, 0]); // 1 + q
        let b = series(&[1, -1, 0]); // 1 - q
        assert_eq!(a.multiply(&b).unwrap(), series(&[1, 0, -1]));

        let one = TruncatedSeries::one(2);
        assert_eq!(a.multiply(&one).unwrap(), a);

        // telescoping: (1 + q + ... + q^5)(1 - q) = 1 up to order 5
        let geometric = series(&[1, 1, 1, 1, 1, 1]);
        let factor = series(&[1, -1, 0, 0, 0, 0]);
        assert!(geometric.multiply(&factor).unwrap().is_one());

        assert!(matches!(
            a.multiply(&TruncatedSeries::one(5)).unwrap_err(),
            SeriesError::OrderMismatch(2, 5)
        ));
    }

    #[test]
    fn inverse_examples() {
        let s = series(&[1, -1, 0, 0]); // 1 - q
        assert_eq!(s.inverse().unwrap(), series(&[1, 1, 1, 1]));

        let one = TruncatedSeries::one(4);
        assert_eq!(one.inverse().unwrap(), one);

        assert!(matches!(
            series(&[2, 0]).inverse().unwrap_err(),
            SeriesError::NonUnitConstantTerm(_)
        ));

        // a * a^{-1} == 1 exactly
        let a = series(&[-1, 7, -3, 2, 9]);
        assert!(a.multiply(&a.inverse().unwrap()).unwrap().is_one());
        assert_eq!(a.inverse().unwrap().inverse().unwrap(), a);
    }

    #[test]
    fn euler_product_examples() {
        assert!(euler_product(0).is_one());
        assert_eq!(euler_product(5), series(&[1, -1, -1, 0, 0, 1]));
        assert_eq!(euler_product_naive(200), euler_product_pentagonal(200));
    }

    #[test]
    fn first_counts() {
        let n = rational_curve_counts(3);
        assert_eq!(n[0], BigInt::from(1));
        assert_eq!(n[1], BigInt::from(24));
        assert_eq!(n[2], BigInt::from(324));
        assert_eq!(n[3], BigInt::from(3200));
    }

    #[test]
    fn cross_check_small_orders() {
        assert!(counts_cross_check(0));
        assert!(counts_cross_check(1));
        assert!(counts_cross_check(100));
    }

    #[test]
    fn counts_are_positive() {
        for (g, n) in rational_curve_counts(200).iter().enumerate() {
            assert!(n.is_positive(), "n({}) = {} not positive", g, n);
        }
    }
}
