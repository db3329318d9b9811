//! Coefficient fields: exact rationals and the word-sized prime field used
//! for cross-checking Groebner runs.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational coefficients. `num_rational` keeps values reduced to
/// lowest terms with a positive denominator, which is exactly the canonical
/// form all polynomial arithmetic here relies on.
pub type Rational = num_rational::BigRational;

/// A coefficient field. All polynomial and Groebner machinery is generic
/// over this so the same code runs over the rationals and modulo a prime.
pub trait Coeff:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` only for zero.
    fn inverse(&self) -> Option<Self>;
    fn from_integer(n: i64) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_integer(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

/// The prime backing the modular cross-check layer.
pub const MODULAR_PRIME: u64 = 32003;

/// An element of the field of integers modulo [`MODULAR_PRIME`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ModP(u64);

impl ModP {
    pub fn new(value: i64) -> Self {
        let p = MODULAR_PRIME as i64;
        ModP(value.rem_euclid(p) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Reduce a rational coefficient modulo the prime. `None` when the
    /// denominator is divisible by the prime (an unlucky prime for the input).
    pub fn from_rational(r: &Rational) -> Option<Self> {
        let p = BigInt::from(MODULAR_PRIME);
        let numer = r.numer().mod_floor(&p).to_u64()?;
        let denom = r.denom().mod_floor(&p).to_u64()?;
        let d = ModP(denom % MODULAR_PRIME);
        let inv = d.inverse()?;
        Some(inv.mul(&ModP(numer % MODULAR_PRIME)))
    }
}

// BigInt has no mod_floor in scope by default; small shim via num-integer.
trait ModFloor {
    fn mod_floor(&self, m: &BigInt) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

impl fmt::Display for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Coeff for ModP {
    fn zero() -> Self {
        ModP(0)
    }
    fn one() -> Self {
        ModP(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn is_one(&self) -> bool {
        self.0 == 1
    }
    fn add(&self, other: &Self) -> Self {
        ModP((self.0 + other.0) % MODULAR_PRIME)
    }
    fn sub(&self, other: &Self) -> Self {
        ModP((self.0 + MODULAR_PRIME - other.0) % MODULAR_PRIME)
    }
    fn mul(&self, other: &Self) -> Self {
        ModP(self.0 * other.0 % MODULAR_PRIME)
    }
    fn neg(&self) -> Self {
        if self.0 == 0 {
            ModP(0)
        } else {
            ModP(MODULAR_PRIME - self.0)
        }
    }
    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(p-2) mod p.
        let mut base = self.0;
        let mut exp = MODULAR_PRIME - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % MODULAR_PRIME;
            }
            base = base * base % MODULAR_PRIME;
            exp >>= 1;
        }
        Some(ModP(acc))
    }
    fn from_integer(n: i64) -> Self {
        ModP::new(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modp_inverse_is_two_sided() {
        for v in [1i64, 2, 17, 32002, -5] {
            let a = ModP::new(v);
            let inv = a.inverse().unwrap();
            assert!(a.mul(&inv).is_one());
        }
        assert_eq!(ModP::new(0).inverse(), None);
    }

    #[test]
    fn rational_reduction_mod_p() {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        let r = ModP::from_rational(&half).unwrap();
        assert!(r.mul(&ModP::new(2)).is_one());

        let bad = Rational::new(BigInt::from(1), BigInt::from(MODULAR_PRIME as i64));
        assert_eq!(ModP::from_rational(&bad), None);
    }
}
