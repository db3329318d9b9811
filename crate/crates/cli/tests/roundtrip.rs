//! Printing any polynomial and re-parsing it yields a structurally equal
//! polynomial, so files written from computed output parse back exactly.

use num_bigint::BigInt;
use proptest::prelude::*;

use deltamult::poly::{parse_polynomial, Monomial, QPoly, Rational, Ring};

fn arb_poly() -> impl Strategy<Value = QPoly> {
    let coeff =
        (-99i64..=99, 1i64..=9).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)));
    let monomial =
        (0u32..=5, 0u32..=5, 0u32..=5).prop_map(|(a, b, c)| Monomial::from_exps(vec![a, b, c]));
    proptest::collection::vec((monomial, coeff), 0..8)
        .prop_map(|terms| QPoly::from_terms(&Ring::of(&["x", "y1", "z0"]), terms).unwrap())
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(p in arb_poly()) {
        let ring = Ring::of(&["x", "y1", "z0"]);
        let reparsed = parse_polynomial(&ring, &p.to_string()).unwrap();
        prop_assert_eq!(reparsed, p);
    }
}
