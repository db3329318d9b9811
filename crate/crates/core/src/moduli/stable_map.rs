//! The zero-dimensional scheme of degree-d maps with image a fixed
//! rational plane curve, presented in the chart around its normalization.
//!
//! Each coordinate of the map is the given parametrization plus a general
//! degree-d perturbation. A gauge equation and three marked point/line
//! incidences pin down the reparametrization and rescaling freedom, and the
//! coefficients of the implicit equation composed with the perturbed map
//! cut out the scheme. Its local length at the origin (the normalization
//! itself) is the multiplicity of the curve.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::groebner::{local_length_at_origin, Ideal, LocalLengthConfig};
use crate::poly::{MonomialOrder, QPoly, Rational, Ring};

use super::binary_form::{form_coefficients, forms_are_coprime};
use super::error::ModuliError;

/// Seed for the deterministic marked-data search; `--seed` overrides it in
/// the CLI.
pub const DEFAULT_MARKED_DATA_SEED: u64 = 1;

/// A point (s : t) of the parameter line, in homogeneous coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamPoint {
    pub s: Rational,
    pub t: Rational,
}

impl ParamPoint {
    pub fn new(s: Rational, t: Rational) -> Self {
        ParamPoint { s, t }
    }

    pub fn from_integers(s: i64, t: i64) -> Self {
        ParamPoint {
            s: Rational::from_integer(s.into()),
            t: Rational::from_integer(t.into()),
        }
    }

    pub fn is_valid(&self) -> bool {
        !(self.s.is_zero() && self.t.is_zero())
    }

    pub fn projectively_equal(&self, other: &Self) -> bool {
        (&self.s * &other.t - &self.t * &other.s).is_zero()
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.s, self.t)
    }
}

/// A degree-d rational plane curve presented by parametrization and
/// implicit equation, with the marked data that rigidifies its stable-map
/// scheme.
#[derive(Debug, Clone)]
pub struct StableMapProblem {
    pub degree: u64,
    /// The components (x, y, z) of the normalization, degree-d forms in a
    /// two-variable ring whose first variable plays the role of s.
    pub parametrization: [QPoly; 3],
    /// The curve equation F, a degree-d form in a three-variable ring.
    pub implicit: QPoly,
    pub marked_points: [ParamPoint; 3],
    /// Linear forms in the implicit ring, one through each marked image.
    pub marked_lines: [QPoly; 3],
}

impl StableMapProblem {
    pub fn new(
        degree: u64,
        parametrization: [QPoly; 3],
        implicit: QPoly,
        marked_points: [ParamPoint; 3],
        marked_lines: [QPoly; 3],
    ) -> Self {
        StableMapProblem {
            degree,
            parametrization,
            implicit,
            marked_points,
            marked_lines,
        }
    }

    /// Build a problem with marked points and lines picked by the
    /// deterministic small-integer search.
    pub fn with_auto_marked_data(
        degree: u64,
        parametrization: [QPoly; 3],
        implicit: QPoly,
        seed: u64,
    ) -> Result<Self, ModuliError> {
        let (points, lines) = choose_marked_data(degree, &parametrization, &implicit, seed)?;
        Ok(StableMapProblem::new(
            degree,
            parametrization,
            implicit,
            points,
            lines,
        ))
    }
}

/// One validation item; `witness` explains a failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

impl ValidationCheck {
    fn pass(name: &'static str) -> Self {
        ValidationCheck {
            name,
            passed: true,
            witness: None,
        }
    }

    fn fail(name: &'static str, witness: String) -> Self {
        ValidationCheck {
            name,
            passed: false,
            witness: Some(witness),
        }
    }
}

/// The outcome of checking every invariant of a [`StableMapProblem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&ValidationCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn failure_summary(&self) -> String {
        self.failures()
            .iter()
            .map(|c| match &c.witness {
                Some(w) => format!("{} ({})", c.name, w),
                None => c.name.to_string(),
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match (&check.passed, &check.witness) {
                (true, _) => writeln!(f, "pass  {}", check.name)?,
                (false, Some(w)) => writeln!(f, "FAIL  {}: {}", check.name, w)?,
                (false, None) => writeln!(f, "FAIL  {}", check.name)?,
            }
        }
        Ok(())
    }
}

fn gradient_at(implicit: &QPoly, point: &[Rational; 3]) -> Result<[Rational; 3], ModuliError> {
    let ring = implicit.ring().clone();
    let mut out = Vec::with_capacity(3);
    for v in ring.vars() {
        out.push(implicit.differentiate(v)?.eval(point.as_slice())?);
    }
    Ok(out.try_into().expect("three variables"))
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn is_zero_vector(v: &[Rational; 3]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// Rescale to a primitive integer vector; keeps downstream coefficient
/// heights small.
fn primitive(v: [Rational; 3]) -> [Rational; 3] {
    use num_integer::Integer;
    let lcm = v
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<num_bigint::BigInt> = v.iter().map(|c| c.numer() * &lcm / c.denom()).collect();
    let gcd = scaled
        .iter()
        .fold(num_bigint::BigInt::ZERO, |acc, n| acc.gcd(n));
    if gcd.is_zero() {
        return v;
    }
    let out: Vec<Rational> = scaled
        .into_iter()
        .map(|n| Rational::from_integer(n / &gcd))
        .collect();
    out.try_into().expect("three entries")
}

/// Evaluate the parametrization at a parameter point.
fn image_of(
    parametrization: &[QPoly; 3],
    point: &ParamPoint,
) -> Result<[Rational; 3], ModuliError> {
    let values = [point.s.clone(), point.t.clone()];
    let mut out = Vec::with_capacity(3);
    for comp in parametrization {
        out.push(comp.eval(&values)?);
    }
    Ok(out.try_into().expect("three components"))
}

/// Linear form coefficients in ring-variable order.
fn line_coefficients(line: &QPoly) -> [Rational; 3] {
    let mut out = [Rational::zero(), Rational::zero(), Rational::zero()];
    for (m, c) in line.terms() {
        for (slot, &e) in out.iter_mut().zip(m.exps()) {
            if e == 1 {
                *slot = c.clone();
            }
        }
    }
    out
}

/// Check every invariant of the input; the report lists each check with a
/// witness on failure and never errors itself.
pub fn validate_stable_map_input(prob: &StableMapProblem) -> ValidationReport {
    let mut checks = Vec::new();
    let d = prob.degree;

    // Parametrization: three nonzero degree-d forms in one two-variable ring.
    let param_ring = prob.parametrization[0].ring().clone();
    let mut param_ok = true;
    if param_ring.nvars() != 2 {
        checks.push(ValidationCheck::fail(
            "parametrization-shape",
            format!("parameter ring ({}) must have two variables", param_ring),
        ));
        param_ok = false;
    } else if let Some((i, bad)) = prob
        .parametrization
        .iter()
        .enumerate()
        .find(|(_, c)| c.ring() != &param_ring || !c.is_homogeneous_of_degree(d))
    {
        checks.push(ValidationCheck::fail(
            "parametrization-shape",
            format!(
                "component {} = {} is not a nonzero degree-{} form",
                i, bad, d
            ),
        ));
        param_ok = false;
    } else {
        checks.push(ValidationCheck::pass("parametrization-shape"));
    }

    // Implicit equation: a nonzero degree-d form in three variables.
    let implicit_ring = prob.implicit.ring().clone();
    let implicit_ok = implicit_ring.nvars() == 3 && prob.implicit.is_homogeneous_of_degree(d);
    if implicit_ok {
        checks.push(ValidationCheck::pass("implicit-shape"));
    } else {
        checks.push(ValidationCheck::fail(
            "implicit-shape",
            format!(
                "implicit equation {} is not a nonzero degree-{} form in three variables",
                prob.implicit, d
            ),
        ));
    }

    // F composed with the parametrization must vanish identically.
    if param_ok && implicit_ok {
        let bindings: Vec<(&str, QPoly)> = implicit_ring
            .vars()
            .iter()
            .zip(prob.parametrization.iter())
            .map(|(v, c)| (v.as_str(), c.clone()))
            .collect();
        match prob.implicit.substitute(&bindings) {
            Ok(composed) if composed.is_zero() => checks.push(ValidationCheck::pass(
                "implicit-vanishes-on-parametrization",
            )),
            Ok(composed) => checks.push(ValidationCheck::fail(
                "implicit-vanishes-on-parametrization",
                format!("F(parametrization) = {}", composed),
            )),
            Err(e) => checks.push(ValidationCheck::fail(
                "implicit-vanishes-on-parametrization",
                e.to_string(),
            )),
        }
    } else {
        checks.push(ValidationCheck::fail(
            "implicit-vanishes-on-parametrization",
            "not checked: shapes invalid".into(),
        ));
    }

    // gcd(x, y, z) = 1 as binary forms.
    if param_ok {
        let forms: Vec<&QPoly> = prob.parametrization.iter().collect();
        if forms_are_coprime(&forms, d) {
            checks.push(ValidationCheck::pass("parametrization-coprime"));
        } else {
            checks.push(ValidationCheck::fail(
                "parametrization-coprime",
                "components share a projective root".into(),
            ));
        }
    } else {
        checks.push(ValidationCheck::fail(
            "parametrization-coprime",
            "not checked: shapes invalid".into(),
        ));
    }

    // The third component must contain s^d, the gauge the z_d equation uses.
    if param_ok {
        let coeffs = form_coefficients(&prob.parametrization[2], d);
        if coeffs[d as usize].is_zero() {
            checks.push(ValidationCheck::fail(
                "normalization-gauge-coefficient",
                format!(
                    "third component {} has no {}^{} term",
                    prob.parametrization[2],
                    param_ring.var_name(0),
                    d
                ),
            ));
        } else {
            checks.push(ValidationCheck::pass("normalization-gauge-coefficient"));
        }
    } else {
        checks.push(ValidationCheck::fail(
            "normalization-gauge-coefficient",
            "not checked: shapes invalid".into(),
        ));
    }

    // Marked points: valid and pairwise distinct on the parameter line.
    let mut points_ok = true;
    for (i, p) in prob.marked_points.iter().enumerate() {
        if !p.is_valid() {
            checks.push(ValidationCheck::fail(
                "marked-points-distinct",
                format!("point {} = {} is not a point of the projective line", i, p),
            ));
            points_ok = false;
            break;
        }
        for (j, q) in prob.marked_points.iter().enumerate().take(i) {
            if p.projectively_equal(q) {
                checks.push(ValidationCheck::fail(
                    "marked-points-distinct",
                    format!("points {} and {} coincide at {}", j, i, p),
                ));
                points_ok = false;
                break;
            }
        }
        if !points_ok {
            break;
        }
    }
    if points_ok {
        checks.push(ValidationCheck::pass("marked-points-distinct"));
    }

    // Images of marked points must be smooth points of the curve.
    let mut images: Vec<[Rational; 3]> = Vec::new();
    let mut gradients: Vec<[Rational; 3]> = Vec::new();
    if param_ok && implicit_ok && points_ok {
        let mut ok = true;
        for (i, point) in prob.marked_points.iter().enumerate() {
            let image = match image_of(&prob.parametrization, point) {
                Ok(v) => v,
                Err(e) => {
                    checks.push(ValidationCheck::fail("marked-points-smooth", e.to_string()));
                    ok = false;
                    break;
                }
            };
            if is_zero_vector(&image) {
                checks.push(ValidationCheck::fail(
                    "marked-points-smooth",
                    format!("parametrization vanishes at point {} = {}", i, point),
                ));
                ok = false;
                break;
            }
            let grad = match gradient_at(&prob.implicit, &image) {
                Ok(v) => v,
                Err(e) => {
                    checks.push(ValidationCheck::fail("marked-points-smooth", e.to_string()));
                    ok = false;
                    break;
                }
            };
            if is_zero_vector(&grad) {
                checks.push(ValidationCheck::fail(
                    "marked-points-smooth",
                    format!(
                        "point {} maps to the singular point ({}, {}, {})",
                        i, image[0], image[1], image[2]
                    ),
                ));
                ok = false;
                break;
            }
            images.push(image);
            gradients.push(grad);
        }
        if ok {
            checks.push(ValidationCheck::pass("marked-points-smooth"));
        }
    } else {
        checks.push(ValidationCheck::fail(
            "marked-points-smooth",
            "not checked: earlier failures".into(),
        ));
    }

    // Marked lines: nonzero linear forms in the implicit ring.
    let mut lines_ok = true;
    for (i, line) in prob.marked_lines.iter().enumerate() {
        if line.ring() != &implicit_ring || !line.is_homogeneous_of_degree(1) {
            checks.push(ValidationCheck::fail(
                "marked-lines-shape",
                format!(
                    "line {} = {} is not a linear form in ({})",
                    i, line, implicit_ring
                ),
            ));
            lines_ok = false;
            break;
        }
    }
    if lines_ok {
        checks.push(ValidationCheck::pass("marked-lines-shape"));
    }

    // Each line passes through the corresponding image and is transversal
    // (not the tangent line) there.
    if lines_ok && images.len() == 3 {
        let mut incident = true;
        let mut transversal = true;
        for (i, line) in prob.marked_lines.iter().enumerate() {
            let value = line
                .eval(images[i].as_slice())
                .expect("line in a three-variable ring");
            if !value.is_zero() {
                checks.push(ValidationCheck::fail(
                    "marked-lines-incident",
                    format!("line {} misses its marked image: value {}", i, value),
                ));
                incident = false;
                break;
            }
        }
        if incident {
            checks.push(ValidationCheck::pass("marked-lines-incident"));
        }
        for (i, line) in prob.marked_lines.iter().enumerate() {
            let coeffs = line_coefficients(line);
            if is_zero_vector(&cross(&coeffs, &gradients[i])) {
                checks.push(ValidationCheck::fail(
                    "marked-lines-transversal",
                    format!("line {} = {} is the tangent line at its image", i, line),
                ));
                transversal = false;
                break;
            }
        }
        if transversal {
            checks.push(ValidationCheck::pass("marked-lines-transversal"));
        }
    } else {
        checks.push(ValidationCheck::fail(
            "marked-lines-incident",
            "not checked: earlier failures".into(),
        ));
        checks.push(ValidationCheck::fail(
            "marked-lines-transversal",
            "not checked: earlier failures".into(),
        ));
    }

    ValidationReport { checks }
}

/// The equations cutting out the stable-map scheme inside the space of
/// coordinate perturbations: the gauge `z_d = 0`, three point conditions,
/// and all d^2 + 1 coefficients of F composed with the perturbed map.
#[derive(Debug, Clone)]
pub struct StableMapSystem {
    pub degree: u64,
    /// Perturbation coefficients x_0..x_d, y_0..y_d, z_0..z_d; the origin
    /// is the normalization map itself.
    pub ring: Arc<Ring>,
    pub equations: Vec<QPoly>,
}

pub fn build_stable_map_system(prob: &StableMapProblem) -> Result<StableMapSystem, ModuliError> {
    let report = validate_stable_map_input(prob);
    if !report.is_valid() {
        return Err(ModuliError::InvalidStableMap(report.failure_summary()));
    }

    let d = prob.degree;
    let param_ring = prob.parametrization[0].ring().clone();
    let s_name = param_ring.var_name(0).to_string();
    let t_name = param_ring.var_name(1).to_string();
    let implicit_ring = prob.implicit.ring().clone();

    let mut pert_names = Vec::new();
    for base in implicit_ring.vars() {
        for i in 0..=d {
            pert_names.push(format!("{}{}", base, i));
        }
    }
    let pert_ring = Ring::new(pert_names)?;

    let mut big_names = vec![s_name.clone(), t_name.clone()];
    big_names.extend(pert_ring.vars().iter().cloned());
    let big = Ring::new(big_names)?;

    let s = QPoly::var_named(&big, &s_name)?;
    let t = QPoly::var_named(&big, &t_name)?;

    // Perturbed coordinates: component + sum_i v_i s^i t^(d-i).
    let mut perturbed = Vec::with_capacity(3);
    for (component, base) in prob.parametrization.iter().zip(implicit_ring.vars()) {
        let mut poly = component.transport(&big)?;
        for i in 0..=d {
            let coeff = QPoly::var_named(&big, &format!("{}{}", base, i))?;
            let monomial = &s.pow(i as u32) * &t.pow((d - i) as u32);
            poly = &poly + &(&coeff * &monomial);
        }
        perturbed.push(poly);
    }

    // Gauge: the perturbation of the s^d coefficient of the third
    // coordinate is frozen.
    let gauge = QPoly::var_named(&pert_ring, &format!("{}{}", implicit_ring.var_name(2), d))?;
    let mut equations = vec![gauge];

    // Point conditions: the line evaluated on the perturbed map at the
    // marked parameter point; linear in the perturbations.
    for (point, line) in prob.marked_points.iter().zip(&prob.marked_lines) {
        let sv = QPoly::constant(&pert_ring, point.s.clone());
        let tv = QPoly::constant(&pert_ring, point.t.clone());
        let mut at_point = Vec::with_capacity(3);
        for coordinate in &perturbed {
            at_point.push(
                coordinate
                    .substitute(&[(s_name.as_str(), sv.clone()), (t_name.as_str(), tv.clone())])?,
            );
        }
        let bindings: Vec<(&str, QPoly)> = implicit_ring
            .vars()
            .iter()
            .map(|v| v.as_str())
            .zip(at_point)
            .collect();
        equations.push(line.substitute(&bindings)?);
    }

    // Coefficients of F(x, y, z) as a binary form of degree d^2.
    let bindings: Vec<(&str, QPoly)> = implicit_ring
        .vars()
        .iter()
        .map(|v| v.as_str())
        .zip(perturbed.iter().cloned())
        .collect();
    let composed = prob.implicit.substitute(&bindings)?;
    let split = composed.coefficients_in(&[&s_name, &t_name])?;
    let total = d * d;
    let mut slots = vec![QPoly::zero(&pert_ring); total as usize + 1];
    for (mono, coeff) in &split.parts {
        let i = mono.exps()[0] as u64;
        let j = mono.exps()[1] as u64;
        assert_eq!(i + j, total, "composition must be a degree d^2 binary form");
        slots[i as usize] = coeff.transport(&pert_ring)?;
    }
    equations.extend(slots);

    // The normalization itself solves every equation.
    for eq in &equations {
        assert!(
            eq.constant_term().is_zero(),
            "origin must be a solution of the stable-map system"
        );
    }

    Ok(StableMapSystem {
        degree: d,
        ring: pert_ring,
        equations,
    })
}

/// Local length of the stable-map scheme at the normalization: the
/// multiplicity of the curve. Uses default stabilization limits.
pub fn stable_map_local_length(prob: &StableMapProblem) -> Result<u64, ModuliError> {
    stable_map_local_length_with(prob, &LocalLengthConfig::default())
}

pub fn stable_map_local_length_with(
    prob: &StableMapProblem,
    config: &LocalLengthConfig,
) -> Result<u64, ModuliError> {
    let system = build_stable_map_system(prob)?;
    let generators: Vec<QPoly> = system
        .equations
        .iter()
        .filter(|e| !e.is_zero())
        .cloned()
        .collect();
    let ideal = Ideal::new(generators, MonomialOrder::GrevLex)?;
    Ok(local_length_at_origin(&ideal, config)?)
}

/// Deterministically search small-integer marked points and lines that
/// validate for the given curve.
pub fn choose_marked_data(
    degree: u64,
    parametrization: &[QPoly; 3],
    implicit: &QPoly,
    seed: u64,
) -> Result<([ParamPoint; 3], [QPoly; 3]), ModuliError> {
    const ATTEMPTS: u32 = 500;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let implicit_ring = implicit.ring().clone();
    if parametrization[0].ring().nvars() != 2 || implicit_ring.nvars() != 3 {
        return Err(ModuliError::InvalidStableMap(
            "parametrization needs a two-variable ring and the implicit equation a \
             three-variable ring"
                .into(),
        ));
    }

    'attempt: for _ in 0..ATTEMPTS {
        let mut points: Vec<ParamPoint> = Vec::with_capacity(3);
        for _ in 0..3 {
            let mut tries = 0;
            loop {
                tries += 1;
                if tries > 50 {
                    continue 'attempt;
                }
                let s: i64 = rng.random_range(-4..=4);
                let t: i64 = rng.random_range(-4..=4);
                if s == 0 && t == 0 {
                    continue;
                }
                let candidate = ParamPoint::from_integers(s, t);
                if points.iter().any(|p| p.projectively_equal(&candidate)) {
                    continue;
                }
                points.push(candidate);
                break;
            }
        }

        let mut lines: Vec<QPoly> = Vec::with_capacity(3);
        for point in &points {
            let image = match image_of(parametrization, point) {
                Ok(v) if !is_zero_vector(&v) => v,
                _ => continue 'attempt,
            };
            let gradient = match gradient_at(implicit, &image) {
                Ok(g) if !is_zero_vector(&g) => g,
                _ => continue 'attempt,
            };
            let mut found = None;
            for _ in 0..20 {
                let w = [
                    Rational::from_integer(rng.random_range(-4..=4i64).into()),
                    Rational::from_integer(rng.random_range(-4..=4i64).into()),
                    Rational::from_integer(rng.random_range(-4..=4i64).into()),
                ];
                // A line through the image: its coefficient vector is
                // orthogonal to the image point by construction.
                let coeffs = primitive(cross(&image, &w));
                if is_zero_vector(&coeffs) {
                    continue;
                }
                if is_zero_vector(&cross(&coeffs, &gradient)) {
                    continue; // tangent
                }
                let mut line = QPoly::zero(&implicit_ring);
                for (i, c) in coeffs.iter().enumerate() {
                    line = &line + &QPoly::variable(&implicit_ring, i).scale(c);
                }
                found = Some(line);
                break;
            }
            match found {
                Some(line) => lines.push(line),
                None => continue 'attempt,
            }
        }

        let candidate = StableMapProblem::new(
            degree,
            parametrization.clone(),
            implicit.clone(),
            points.clone().try_into().expect("three points"),
            lines.clone().try_into().expect("three lines"),
        );
        if validate_stable_map_input(&candidate).is_valid() {
            return Ok((
                candidate.marked_points.clone(),
                candidate.marked_lines.clone(),
            ));
        }
    }
    Err(ModuliError::MarkedDataSearchFailed(ATTEMPTS))
}
