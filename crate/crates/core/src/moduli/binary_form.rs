//! Small helpers for binary forms in (s, t), used by stable-map input
//! validation. The common-factor test works through the dehomogenization
//! at s = 1: a rational univariate gcd detects every common projective
//! root away from [0:1], and a shared factor of s covers [0:1] itself.

use num_traits::Zero;

use crate::poly::{QPoly, Rational};

/// Coefficient vector of a degree-d binary form: entry i is the
/// coefficient of s^i t^(d-i), where s is the first ring variable.
pub(crate) fn form_coefficients(form: &QPoly, d: u64) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); d as usize + 1];
    for (m, c) in form.terms() {
        let i = m.exps()[0] as usize;
        out[i] = c.clone();
    }
    out
}

/// Univariate polynomial as a dense coefficient vector, lowest degree
/// first, with no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct UniPoly(Vec<Rational>);

impl UniPoly {
    fn normalized(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.0.len() - 1
    }

    fn rem(&self, divisor: &UniPoly) -> UniPoly {
        let mut rem = self.0.clone();
        let dd = divisor.degree();
        let lead = divisor.0[dd].clone();
        while rem.len() > dd {
            let k = rem.len() - 1;
            let factor = &rem[k] / &lead;
            if !factor.is_zero() {
                for (i, c) in divisor.0.iter().enumerate() {
                    let idx = k - dd + i;
                    rem[idx] = &rem[idx] - &(&factor * c);
                }
            }
            rem.pop();
        }
        UniPoly::normalized(rem)
    }

    fn gcd(a: UniPoly, b: UniPoly) -> UniPoly {
        let (mut a, mut b) = (a, b);
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }
}

/// Dehomogenize at s = 1: coefficient of t^j is the form's s^(d-j) t^j
/// coefficient.
fn dehomogenize(form: &QPoly, d: u64) -> UniPoly {
    let cs = form_coefficients(form, d);
    let coeffs: Vec<Rational> = (0..=d as usize)
        .map(|j| cs[d as usize - j].clone())
        .collect();
    UniPoly::normalized(coeffs)
}

/// True iff the binary forms have no common projective root, i.e. their
/// gcd as forms is a constant.
pub(crate) fn forms_are_coprime(forms: &[&QPoly], d: u64) -> bool {
    // A common factor of s means every form misses the s^0 t^d monomial.
    if forms.iter().all(|f| form_coefficients(f, d)[0].is_zero()) {
        return false;
    }
    let mut gcd: Option<UniPoly> = None;
    for f in forms {
        let p = dehomogenize(f, d);
        gcd = Some(match gcd {
            None => p,
            Some(g) => UniPoly::gcd(g, p),
        });
    }
    match gcd {
        None => true,
        Some(g) => !g.is_zero() && g.degree() == 0,
    }
}
