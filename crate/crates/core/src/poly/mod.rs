//! Exact sparse multivariate polynomial arithmetic over the rationals,
//! the substrate for everything else in the crate.
//!
//! All values are immutable after construction and every operation is pure,
//! so polynomials can be shared or sent across threads freely.

mod coeff;
mod error;
mod minors;
mod monomial;
mod order;
pub mod parse;
mod polynomial;
mod ring;

pub use coeff::{Coeff, ModP, Rational, MODULAR_PRIME};
pub use error::PolyError;
pub use minors::minors_ideal;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_polynomial, ParseError};
pub use polynomial::{CoefficientSplit, Polynomial, WeightedDegree};
pub use ring::Ring;

/// Polynomials over the rationals, the default everywhere.
pub type QPoly = Polynomial<Rational>;

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn q(ring: &Arc<Ring>, s: &str) -> QPoly {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn multiply_difference_of_squares() {
        let ring = Ring::of(&["x", "y"]);
        let product = q(&ring, "x+y").try_mul(&q(&ring, "x-y")).unwrap();
        assert_eq!(product, q(&ring, "x^2 - y^2"));
    }

    #[test]
    fn multiply_by_zero_annihilates() {
        let ring = Ring::of(&["x", "y"]);
        let zero = QPoly::zero(&ring);
        assert_eq!(q(&ring, "x^2 + 3*y").try_mul(&zero).unwrap(), zero);
    }

    #[test]
    fn multiply_in_three_variables() {
        let ring = Ring::of(&["t", "x0", "y1"]);
        let product = q(&ring, "t^2 + x0")
            .try_mul(&q(&ring, "3*t^2 + y1"))
            .unwrap();
        assert_eq!(product, q(&ring, "3*t^4 + (y1 + 3*x0)*t^2 + x0*y1"));
    }

    #[test]
    fn multiply_rejects_ring_mismatch() {
        let a = QPoly::one(&Ring::of(&["x"]));
        let b = QPoly::one(&Ring::of(&["y"]));
        assert!(matches!(
            a.try_mul(&b).unwrap_err(),
            PolyError::RingMismatch(..)
        ));
    }

    #[test]
    fn differentiate_examples() {
        let ring = Ring::of(&["t", "x0", "y0", "y1"]);
        assert_eq!(
            q(&ring, "t^2 + x0").differentiate("t").unwrap(),
            q(&ring, "2*t")
        );
        assert_eq!(
            q(&ring, "t^3 + y1*t + y0").differentiate("t").unwrap(),
            q(&ring, "3*t^2 + y1")
        );
        let xy = Ring::of(&["x", "y"]);
        assert_eq!(q(&xy, "y^2").differentiate("x").unwrap(), QPoly::zero(&xy));
        assert!(matches!(
            q(&xy, "y^2").differentiate("z").unwrap_err(),
            PolyError::UnknownVariable(_)
        ));
    }

    #[test]
    fn substitute_cusp_parametrization() {
        let xy = Ring::of(&["x", "y"]);
        let t = Ring::of(&["t"]);
        let result = q(&xy, "y^2 - x^3")
            .substitute(&[("x", q(&t, "t^2")), ("y", q(&t, "t^3"))])
            .unwrap();
        assert!(result.is_zero());
        assert_eq!(result.ring(), &t);
    }

    #[test]
    fn substitute_identity_and_shift() {
        let xy = Ring::of(&["x", "y"]);
        let p = q(&xy, "x^2 - y + 1");
        let identity = p
            .substitute(&[("x", q(&xy, "x")), ("y", q(&xy, "y"))])
            .unwrap();
        assert_eq!(identity, p);
        assert_eq!(p.substitute(&[]).unwrap(), p);

        let x = Ring::of(&["x"]);
        assert_eq!(
            q(&x, "x^2").substitute(&[("x", q(&x, "x+1"))]).unwrap(),
            q(&x, "x^2 + 2*x + 1")
        );
    }

    #[test]
    fn substitute_rejects_mixed_target_rings() {
        let xy = Ring::of(&["x", "y"]);
        let s = Ring::of(&["s"]);
        let t = Ring::of(&["t"]);
        let e = q(&xy, "x + y")
            .substitute(&[("x", QPoly::one(&s)), ("y", QPoly::one(&t))])
            .unwrap_err();
        assert!(matches!(e, PolyError::InconsistentSubstitution(..)));
    }

    #[test]
    fn substitute_passes_unbound_variables_through() {
        let xy = Ring::of(&["x", "y"]);
        let yt = Ring::of(&["y", "t"]);
        let result = q(&xy, "x*y + y^2")
            .substitute(&[("x", q(&yt, "t^2"))])
            .unwrap();
        assert_eq!(result, q(&yt, "t^2*y + y^2"));
        // unbound variable missing from the target ring
        let t_only = Ring::of(&["t"]);
        assert!(q(&xy, "x*y")
            .substitute(&[("x", QPoly::one(&t_only))])
            .is_err());
    }

    #[test]
    fn coefficient_split_of_torus_knot_polynomial() {
        let ring = Ring::of(&["t", "x0", "y0", "y1"]);
        let p = q(&ring, "(4*y1 - 6*x0)*t^2 + 6*y0*t - 2*x0*y1");
        let split = p.coefficients_in(&["t"]).unwrap();
        let coeff_ring = &split.coefficient_ring;
        let expected = [
            (Monomial::from_exps(vec![2]), q(coeff_ring, "4*y1 - 6*x0")),
            (Monomial::from_exps(vec![1]), q(coeff_ring, "6*y0")),
            (Monomial::from_exps(vec![0]), q(coeff_ring, "-2*x0*y1")),
        ];
        assert_eq!(split.parts.len(), 3);
        for ((m, c), (em, ec)) in split.parts.iter().zip(expected.iter()) {
            assert_eq!(m, em);
            assert_eq!(c, ec);
        }
        assert_eq!(split.recompose(), p);
    }

    #[test]
    fn coefficient_split_edge_cases() {
        let ring = Ring::of(&["t", "x"]);
        let constant = q(&ring, "7");
        let split = constant.coefficients_in(&["t"]).unwrap();
        assert_eq!(split.parts.len(), 1);
        assert!(split.parts[0].0.is_one());
        assert_eq!(split.parts[0].1, q(&split.coefficient_ring, "7"));

        assert!(QPoly::zero(&ring)
            .coefficients_in(&["t"])
            .unwrap()
            .parts
            .is_empty());
        assert!(matches!(
            constant.coefficients_in(&[]).unwrap_err(),
            PolyError::EmptyParameters
        ));
        assert!(matches!(
            constant.coefficients_in(&["u"]).unwrap_err(),
            PolyError::UnknownVariable(_)
        ));
    }

    #[test]
    fn weighted_degree_examples() {
        let ring = Ring::of(&["x0", "y0", "y1"]);
        let w = [2u64, 3, 2];
        assert_eq!(
            q(&ring, "4*y1 - 6*x0").weighted_degree(&w).unwrap(),
            WeightedDegree::Homogeneous(2)
        );
        assert_eq!(
            q(&ring, "x0*y1").weighted_degree(&w).unwrap(),
            WeightedDegree::Homogeneous(4)
        );
        assert_eq!(
            q(&ring, "x0 + y0").weighted_degree(&w).unwrap(),
            WeightedDegree::Inhomogeneous
        );
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn check<T: Send + Sync>() {}
        check::<QPoly>();
        check::<Polynomial<ModP>>();
        check::<Monomial>();
        check::<MonomialOrder>();
        check::<std::sync::Arc<Ring>>();
    }

    #[test]
    fn evaluation_at_a_rational_point() {
        let ring = Ring::of(&["x", "y"]);
        let p = q(&ring, "x^2*y - 3*y + 1/2");
        // p(2, 3) = 12 - 9 + 1/2 = 7/2
        let point = [
            Rational::from_integer(2.into()),
            Rational::from_integer(3.into()),
        ];
        assert_eq!(p.eval(&point).unwrap(), "7/2".parse::<Rational>().unwrap());
        assert!(p.eval(&point[..1]).is_err());
    }
}
