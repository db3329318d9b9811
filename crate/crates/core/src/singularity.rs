//! Closed-form invariants of torus-knot plane curve singularities
//! `x^q = y^p`, and the multiplicative Euler-number bookkeeping across a
//! curve's singularities.
//!
//! The delta invariant and the conductor are each computed by two
//! independent routes (closed formula and semigroup enumeration) and
//! cross-asserted, so the module oracles itself.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularityError {
    #[error("invalid exponent pair ({p}, {q}): need 1 < p < q")]
    ExponentsOutOfOrder { p: u64, q: u64 },
    #[error("invalid exponent pair ({p}, {q}): p and q must be coprime")]
    NotCoprime { p: u64, q: u64 },
}

/// The unibranch plane curve singularity `x^q = y^p` with `1 < p < q` and
/// `gcd(p, q) = 1`, parametrized by `t -> (t^p, t^q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusKnotSingularity {
    p: u64,
    q: u64,
}

impl TorusKnotSingularity {
    pub fn new(p: u64, q: u64) -> Result<Self, SingularityError> {
        if !(1 < p && p < q) {
            return Err(SingularityError::ExponentsOutOfOrder { p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(SingularityError::NotCoprime { p, q });
        }
        Ok(TorusKnotSingularity { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Multiplicity of the delta-constant stratum: `C(p+q, p) / (p+q)`.
    /// The division is exact for coprime exponents and is asserted.
    pub fn multiplicity_closed_form(&self) -> BigUint {
        let binom = binomial(self.p + self.q, self.p);
        let (quotient, remainder) = binom.div_rem(&BigUint::from(self.p + self.q));
        assert!(
            remainder.is_zero(),
            "binomial C({}+{}, {}) not divisible by {}",
            self.p,
            self.q,
            self.p,
            self.p + self.q
        );
        quotient
    }

    /// The naturals not representable as `a*p + b*q` with `a, b >= 0`,
    /// sorted. Enumeration is the independent oracle for the delta
    /// invariant and the conductor.
    pub fn semigroup_gaps(&self) -> Vec<u64> {
        let conductor = (self.p - 1) * (self.q - 1);
        let bound = conductor as usize;
        let mut representable = vec![false; bound + 1];
        let mut a = 0;
        while a * self.p <= conductor {
            let mut value = a * self.p;
            while value <= conductor {
                representable[value as usize] = true;
                value += self.q;
            }
            a += 1;
        }
        (0..=conductor)
            .filter(|&n| !representable[n as usize])
            .collect()
    }

    /// `(p-1)(q-1)/2`, asserted against the semigroup gap count.
    pub fn delta_invariant(&self) -> u64 {
        let delta = (self.p - 1) * (self.q - 1) / 2;
        assert_eq!(
            delta,
            self.semigroup_gaps().len() as u64,
            "delta formula disagrees with gap enumeration for ({}, {})",
            self.p,
            self.q
        );
        delta
    }

    /// Smallest `c` with every integer `>= c` in the semigroup; equals
    /// twice the delta invariant, and both routes are asserted.
    pub fn conductor_exponent(&self) -> u64 {
        let by_enumeration = self.semigroup_gaps().last().map(|&g| g + 1).unwrap_or(0);
        assert_eq!(
            by_enumeration,
            2 * self.delta_invariant(),
            "conductor disagrees with 2*delta for ({}, {})",
            self.p,
            self.q
        );
        by_enumeration
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u64);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// What kind of singular point a record describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityKind {
    Node,
    TorusKnot(TorusKnotSingularity),
}

/// One singular point of a curve with its contribution to the Euler number
/// of the compactified Jacobian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityRecord {
    pub kind: SingularityKind,
    pub multiplicity: BigUint,
    pub delta: u64,
}

impl SingularityRecord {
    pub fn node() -> Self {
        SingularityRecord {
            kind: SingularityKind::Node,
            multiplicity: BigUint::from(1u64),
            delta: 1,
        }
    }

    pub fn torus_knot(s: TorusKnotSingularity) -> Self {
        SingularityRecord {
            kind: SingularityKind::TorusKnot(s),
            multiplicity: s.multiplicity_closed_form(),
            delta: s.delta_invariant(),
        }
    }
}

/// Euler number of the compactified Jacobian of a rational curve with the
/// given singularities: the product of their multiplicities. The empty
/// product is 1.
pub fn euler_compactified_jacobian(singularities: &[SingularityRecord]) -> BigUint {
    singularities
        .iter()
        .fold(BigUint::from(1u64), |acc, s| acc * &s.multiplicity)
}
