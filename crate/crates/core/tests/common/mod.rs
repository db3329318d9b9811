//! Shared oracle machinery for the integration suites: a brute-force
//! linear-algebra quotient dimension, random zero-dimensional instances,
//! and the full per-instance cross-check bundle.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use deltamult::groebner::{
    buchberger, is_zero_dimensional, modular_quotient_dimension, normal_form, quotient_dimension,
    s_polynomial, GroebnerConfig, Ideal, QuotientDimension,
};
use deltamult::poly::{Monomial, MonomialOrder, QPoly, Rational, Ring};
use std::sync::Arc;

/// All monomials in `nvars` variables of total degree exactly `d`.
fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(exps: &mut Vec<u32>, var: usize, left: u32, out: &mut Vec<Monomial>) {
        if var + 1 == exps.len() {
            exps[var] = left;
            out.push(Monomial::from_exps(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[var] = e;
            rec(exps, var + 1, left - e, out);
        }
        exps[var] = 0;
    }
    let mut out = Vec::new();
    rec(&mut vec![0; nvars], 0, d, &mut out);
    out
}

fn monomials_up_to_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    (0..=d)
        .flat_map(|k| monomials_of_degree(nvars, k))
        .collect()
}

/// Rank of a rational matrix by Gaussian elimination.
fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let mut rank = 0;
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let pivot = rows[pivot_row][col].clone();
        for r in (pivot_row + 1)..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot;
            let pivot_tail = rows[pivot_row][col..ncols].to_vec();
            for (c, head) in (col..ncols).zip(pivot_tail) {
                let delta = &factor * &head;
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        pivot_row += 1;
        rank += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rank
}

/// Brute-force quotient dimension: row-reduce the multiplication-by-
/// generators linear system on all monomials up to a degree bound, and
/// count the monomials the row space misses. The bound grows until the
/// count stabilizes over two consecutive degrees.
pub fn macaulay_dimension(generators: &[QPoly], start_degree: u32) -> u64 {
    let nvars = generators[0].ring().nvars();
    let mut previous: Option<u64> = None;
    for degree in start_degree..=start_degree + 12 {
        let monomials = monomials_up_to_degree(nvars, degree);
        let index = |m: &Monomial| monomials.iter().position(|x| x == m).unwrap();
        let mut rows = Vec::new();
        for g in generators {
            let gdeg = g.total_degree() as u32;
            for m in monomials_up_to_degree(nvars, degree.saturating_sub(gdeg)) {
                let product = g.mul_monomial(&m);
                let mut row = vec![Rational::zero(); monomials.len()];
                for (mono, coeff) in product.terms() {
                    row[index(mono)] = coeff.clone();
                }
                rows.push(row);
            }
        }
        let dim = monomials.len() as u64 - rank(rows) as u64;
        if previous == Some(dim) {
            return dim;
        }
        previous = Some(dim);
    }
    panic!("macaulay dimension did not stabilize");
}

/// A random ideal that is zero-dimensional by construction: one generator
/// per variable of the shape `x_i^(a_i) + (lower total degree)`, plus an
/// optional extra random polynomial.
pub fn random_zero_dimensional_ideal(rng: &mut ChaCha8Rng) -> (Arc<Ring>, Vec<QPoly>) {
    let nvars = rng.random_range(1..=3usize);
    let names: Vec<&str> = ["x", "y", "z"][..nvars].to_vec();
    let ring = Ring::of(&names);

    let random_poly_below = |rng: &mut ChaCha8Rng, ring: &Arc<Ring>, max_degree: u32| {
        let mut terms = Vec::new();
        for m in monomials_up_to_degree(ring.nvars(), max_degree) {
            if rng.random_bool(0.4) {
                let c: i64 = rng.random_range(-5..=5);
                terms.push((m, Rational::from_integer(BigInt::from(c))));
            }
        }
        QPoly::from_terms(ring, terms).unwrap()
    };

    let mut generators = Vec::new();
    for i in 0..nvars {
        let a: u32 = rng.random_range(1..=3);
        let pure = QPoly::from_terms(
            &ring,
            vec![(
                Monomial::from_exps((0..nvars).map(|j| if j == i { a } else { 0 }).collect()),
                Rational::from_integer(1.into()),
            )],
        )
        .unwrap();
        let tail = random_poly_below(rng, &ring, a.saturating_sub(1));
        generators.push(&pure + &tail);
    }
    if rng.random_bool(0.5) {
        let extra = random_poly_below(rng, &ring, 2);
        if !extra.is_zero() {
            generators.push(extra);
        }
    }
    (ring, generators)
}

/// The full cross-check bundle on one ideal. Returns the agreed dimension.
pub fn cross_check_ideal(generators: &[QPoly]) -> u64 {
    let ideal = Ideal::new(generators.to_vec(), MonomialOrder::GrevLex).unwrap();
    let basis = buchberger(&ideal).unwrap();
    assert!(
        is_zero_dimensional(&basis),
        "instance built zero-dimensional"
    );
    let QuotientDimension::Finite(dim) = quotient_dimension(&basis) else {
        panic!("zero-dimensional basis reported infinite quotient");
    };

    // independent oracle
    let start = generators
        .iter()
        .map(|g| g.total_degree() as u32)
        .sum::<u32>()
        .max(2);
    let oracle = macaulay_dimension(generators, start);
    assert_eq!(
        dim, oracle,
        "Groebner dimension disagrees with Macaulay oracle"
    );

    // every S-polynomial of the reduced basis reduces to zero
    for (i, f) in basis.basis().iter().enumerate() {
        for g in basis.basis().iter().skip(i + 1) {
            let s = s_polynomial(f, g, basis.order()).unwrap();
            assert!(
                normal_form(&s, &basis).unwrap().is_zero(),
                "S-polynomial failed to reduce to zero"
            );
        }
    }

    // modular layer
    let modular = modular_quotient_dimension(&ideal, &GroebnerConfig::default()).unwrap();
    assert_eq!(
        modular,
        QuotientDimension::Finite(dim),
        "mod-p dimension disagrees"
    );

    // determinism
    let again = buchberger(&ideal).unwrap();
    assert_eq!(
        basis.basis(),
        again.basis(),
        "buchberger output not deterministic"
    );

    dim
}

/// Run the randomized suite; returns the dimensions found.
pub fn run_random_suite(instances: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dims = Vec::new();
    while dims.len() < instances {
        let (_, generators) = random_zero_dimensional_ideal(&mut rng);
        dims.push(cross_check_ideal(&generators));
    }
    dims
}
