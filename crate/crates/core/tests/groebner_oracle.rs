//! Randomized Groebner correctness suite: quotient dimensions against a
//! brute-force Macaulay-matrix oracle, exhaustive S-polynomial reduction,
//! the mod-p layer, and determinism, plus the local/global agreement for
//! weighted-homogeneous ideals.

mod common;

use deltamult::groebner::{
    buchberger, local_length_at_origin, quotient_dimension, LocalLengthConfig, QuotientDimension,
};
use deltamult::moduli::torus_knot_ideal;
use deltamult::poly::{parse_polynomial, MonomialOrder, QPoly, Ring};

#[test]
fn random_ideals_agree_with_brute_force_oracle() {
    let dims = common::run_random_suite(24, 0xDE1A);
    // the suite must exercise genuinely different quotients
    assert!(dims.iter().any(|&d| d > 1));
    println!(
        "verified {} random instances, dimensions {:?}",
        dims.len(),
        dims
    );
}

#[test]
fn weighted_homogeneous_ideals_have_local_equal_global() {
    // the torus-knot systems are weighted-homogeneous and supported only
    // at the origin, so localization changes nothing
    for (p, q) in [(2u64, 3u64), (2, 5), (3, 4)] {
        let ideal = torus_knot_ideal(p, q).unwrap();
        let basis = buchberger(&ideal).unwrap();
        let QuotientDimension::Finite(global) = quotient_dimension(&basis) else {
            panic!("torus-knot system not zero-dimensional");
        };
        let local = local_length_at_origin(&ideal, &LocalLengthConfig::default()).unwrap();
        assert_eq!(local, global, "local/global mismatch for ({}, {})", p, q);
    }

    // a weighted-homogeneous pair: wt(x) = 3, wt(y) = 2
    let ring = Ring::of(&["x", "y"]);
    let gens: Vec<QPoly> = ["x^2 - y^3", "x*y^2"]
        .iter()
        .map(|s| parse_polynomial(&ring, s).unwrap())
        .collect();
    let ideal = deltamult::groebner::Ideal::new(gens, MonomialOrder::weighted(vec![3, 2])).unwrap();
    let basis = buchberger(&ideal).unwrap();
    let QuotientDimension::Finite(global) = quotient_dimension(&basis) else {
        panic!("expected zero-dimensional");
    };
    let local = local_length_at_origin(&ideal, &LocalLengthConfig::default()).unwrap();
    assert_eq!(local, global);
}

#[test]
fn macaulay_oracle_matches_known_dimensions() {
    // sanity-check the oracle itself on hand-computed quotients
    let ring = Ring::of(&["x", "y"]);
    let p = |s: &str| parse_polynomial(&ring, s).unwrap();
    assert_eq!(common::macaulay_dimension(&[p("x"), p("y")], 2), 1);
    assert_eq!(common::macaulay_dimension(&[p("x^2 - y"), p("y^2")], 4), 4);
    assert_eq!(
        common::macaulay_dimension(&[p("x^3"), p("y^2"), p("x*y")], 5),
        4
    );
}

#[test]
fn quotient_dimension_is_order_independent() {
    // the number of standard monomials depends on the ideal, not on the
    // order the basis was computed under
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0D0E);
    let mut nontrivial = 0;
    for _ in 0..8 {
        let (ring, generators) = common::random_zero_dimensional_ideal(&mut rng);
        let orders = [
            MonomialOrder::GrevLex,
            MonomialOrder::Lex,
            MonomialOrder::weighted((1..=ring.nvars() as u64).collect()),
        ];
        let dims: Vec<QuotientDimension> = orders
            .iter()
            .map(|order| {
                let ideal =
                    deltamult::groebner::Ideal::new(generators.clone(), order.clone()).unwrap();
                quotient_dimension(&buchberger(&ideal).unwrap())
            })
            .collect();
        assert!(dims.windows(2).all(|w| w[0] == w[1]), "dims {:?}", dims);
        if dims[0] != QuotientDimension::Finite(1) {
            nontrivial += 1;
        }
    }
    assert!(nontrivial >= 3, "suite too degenerate");
}
