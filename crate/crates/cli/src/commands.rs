//! Subcommand implementations. Every command returns a [`CommandResult`]
//! envelope; failures land in `results.error` with a nonzero exit status.

use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};

use deltamult::groebner::{
    buchberger_with, ideal_to_modp, local_length_at_origin, modular_quotient_dimension,
    quotient_dimension, GroebnerConfig, Ideal, LocalLengthConfig, QuotientDimension,
};
use deltamult::moduli::{
    build_torus_knot_system, choose_marked_data, multiplicity_via_groebner_with,
    stable_map_local_length_with, validate_stable_map_input, weighted_bezout_length,
    StableMapProblem, ValidationReport, DEFAULT_MARKED_DATA_SEED,
};
use deltamult::series::rational_curve_counts;
use deltamult::singularity::TorusKnotSingularity;

use crate::output::CommandResult;
use crate::parse::{parse_poly_source, parse_stable_map_doc};

#[derive(Debug, Clone, Copy)]
pub struct GlobalOpts {
    pub modular_check: bool,
    pub step_limit: Option<u64>,
    pub seed: Option<u64>,
}

impl GlobalOpts {
    fn groebner_config(&self) -> GroebnerConfig {
        let mut config = GroebnerConfig::default();
        if let Some(limit) = self.step_limit {
            config.step_limit = limit;
        }
        config
    }

    fn local_config(&self, cap: Option<u32>) -> LocalLengthConfig {
        let mut config = LocalLengthConfig {
            groebner: self.groebner_config(),
            ..LocalLengthConfig::default()
        };
        if let Some(cap) = cap {
            config.cap = cap;
        }
        config
    }
}

fn ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e3 * 1000.0).round() / 1000.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Closed,
    Groebner,
    Bezout,
    All,
}

pub fn torus_mult(p: u64, q: u64, method: Method, opts: &GlobalOpts) -> CommandResult {
    let mut out = CommandResult::new("torus-mult");
    out.input("p", json!(p));
    out.input("q", json!(q));
    out.input("method", json!(format!("{:?}", method).to_lowercase()));

    let singularity = match TorusKnotSingularity::new(p, q) {
        Ok(s) => s,
        Err(e) => {
            out.fail(e.to_string());
            return out;
        }
    };

    let mut values: Vec<String> = Vec::new();

    if matches!(method, Method::Closed | Method::All) {
        let start = Instant::now();
        let value = singularity.multiplicity_closed_form().to_string();
        out.timing_ms("closed_form", ms(start));
        out.result("closed_form", json!(value));
        values.push(value);
    }
    if matches!(method, Method::Groebner | Method::All) {
        let start = Instant::now();
        match multiplicity_via_groebner_with(p, q, &opts.groebner_config()) {
            Ok(value) => {
                out.timing_ms("groebner", ms(start));
                out.result("groebner", json!(value.to_string()));
                values.push(value.to_string());
                if opts.modular_check {
                    let start = Instant::now();
                    match modular_dimension_for(p, q, opts) {
                        Ok(modular) => {
                            out.timing_ms("modular", ms(start));
                            out.result("modular", json!(modular.clone()));
                            values.push(modular);
                        }
                        Err(message) => {
                            out.fail(message);
                            return out;
                        }
                    }
                }
            }
            Err(e) => {
                out.fail(e.to_string());
                return out;
            }
        }
    }
    if matches!(method, Method::Bezout | Method::All) {
        let start = Instant::now();
        let result = build_torus_knot_system(p, q)
            .and_then(|system| weighted_bezout_length(&system.equation_degrees, &system.weights));
        match result {
            Ok(value) => {
                out.timing_ms("bezout", ms(start));
                out.result("bezout", json!(value.to_string()));
                values.push(value.to_string());
            }
            Err(e) => {
                out.fail(e.to_string());
                return out;
            }
        }
    }

    let agree = values.windows(2).all(|w| w[0] == w[1]);
    if matches!(method, Method::All) {
        out.result("agree", json!(agree));
    }
    if !agree {
        out.fail("methods disagree");
    }
    out
}

fn modular_dimension_for(p: u64, q: u64, opts: &GlobalOpts) -> Result<String, String> {
    let ideal = deltamult::moduli::torus_knot_ideal(p, q).map_err(|e| e.to_string())?;
    match modular_quotient_dimension(&ideal, &opts.groebner_config()) {
        Ok(QuotientDimension::Finite(n)) => Ok(n.to_string()),
        Ok(QuotientDimension::Infinite) => Err("modular quotient unexpectedly infinite".into()),
        Err(e) => Err(e.to_string()),
    }
}

pub fn delta(p: u64, q: u64) -> CommandResult {
    let mut out = CommandResult::new("delta");
    out.input("p", json!(p));
    out.input("q", json!(q));
    let start = Instant::now();
    match TorusKnotSingularity::new(p, q) {
        Ok(s) => {
            out.result("delta", json!(s.delta_invariant().to_string()));
            out.result("conductor", json!(s.conductor_exponent().to_string()));
            out.result(
                "gaps",
                Value::Array(
                    s.semigroup_gaps()
                        .iter()
                        .map(|g| json!(g.to_string()))
                        .collect(),
                ),
            );
            out.result(
                "multiplicity",
                json!(s.multiplicity_closed_form().to_string()),
            );
            out.timing_ms("total", ms(start));
        }
        Err(e) => {
            out.fail(e.to_string());
        }
    }
    out
}

pub fn counts(gmax: u64) -> CommandResult {
    let mut out = CommandResult::new("counts");
    out.input("gmax", json!(gmax));
    let start = Instant::now();
    let table = rational_curve_counts(gmax);
    out.timing_ms("total", ms(start));
    out.result(
        "counts",
        Value::Array(table.iter().map(|n| json!(n.to_string())).collect()),
    );
    out
}

fn read_input(path: &Path, out: &mut CommandResult) -> Option<String> {
    out.input("input", json!(path.display().to_string()));
    match std::fs::read_to_string(path) {
        Ok(text) => Some(text),
        Err(e) => {
            out.fail(format!("cannot read {}: {}", path.display(), e));
            None
        }
    }
}

pub fn length(path: &Path, local: bool, cap: Option<u32>, opts: &GlobalOpts) -> CommandResult {
    let mut out = CommandResult::new("length");
    let Some(text) = read_input(path, &mut out) else {
        return out;
    };
    out.input("local", json!(local));

    let (_, order, polynomials) = match parse_poly_source(&text) {
        Ok(parsed) => parsed,
        Err(e) => {
            out.fail(e.to_string());
            return out;
        }
    };
    if polynomials.is_empty() {
        out.fail("input declares no polynomials");
        return out;
    }
    let ideal = match Ideal::new(polynomials, order) {
        Ok(i) => i,
        Err(e) => {
            out.fail(e.to_string());
            return out;
        }
    };

    if local {
        let config = opts.local_config(cap);
        let start = Instant::now();
        match local_length_at_origin(&ideal, &config) {
            Ok(length) => {
                out.timing_ms("local_length", ms(start));
                out.result("length", json!(length.to_string()));
            }
            Err(e) => {
                out.fail(e.to_string());
                return out;
            }
        }
        if opts.modular_check {
            let start = Instant::now();
            let modular = ideal_to_modp(&ideal).and_then(|m| local_length_at_origin(&m, &config));
            match modular {
                Ok(length) => {
                    out.timing_ms("modular", ms(start));
                    out.result("modular", json!(length.to_string()));
                    let agree = out.results["length"] == out.results["modular"];
                    out.result("modular_agrees", json!(agree));
                    if !agree {
                        out.fail("modular cross-check disagrees (unlucky prime?)");
                    }
                }
                Err(e) => {
                    out.fail(e.to_string());
                }
            }
        }
    } else {
        let start = Instant::now();
        match buchberger_with(&ideal, &opts.groebner_config()) {
            Ok(basis) => {
                out.timing_ms("groebner", ms(start));
                out.result("basis_size", json!(basis.basis().len()));
                match quotient_dimension(&basis) {
                    QuotientDimension::Finite(n) => {
                        out.result("dimension", json!(n.to_string()));
                        out.result("zero_dimensional", json!(true));
                    }
                    QuotientDimension::Infinite => {
                        out.result("dimension", json!("infinite"));
                        out.result("zero_dimensional", json!(false));
                    }
                }
            }
            Err(e) => {
                out.fail(e.to_string());
                return out;
            }
        }
        if opts.modular_check {
            let start = Instant::now();
            match modular_quotient_dimension(&ideal, &opts.groebner_config()) {
                Ok(dim) => {
                    out.timing_ms("modular", ms(start));
                    let rendered = match dim {
                        QuotientDimension::Finite(n) => n.to_string(),
                        QuotientDimension::Infinite => "infinite".into(),
                    };
                    out.result("modular", json!(rendered));
                    let agree = out.results["dimension"] == out.results["modular"];
                    out.result("modular_agrees", json!(agree));
                    if !agree {
                        out.fail("modular cross-check disagrees (unlucky prime?)");
                    }
                }
                Err(e) => {
                    out.fail(e.to_string());
                }
            }
        }
    }
    out
}

fn problem_from_doc(
    doc: crate::parse::StableMapDoc,
    opts: &GlobalOpts,
    out: &mut CommandResult,
) -> Option<StableMapProblem> {
    let auto = doc.marked_points.is_none() && doc.marked_lines.is_none();
    out.result("auto_marked_data", json!(auto));
    let (points, lines) = match (doc.marked_points, doc.marked_lines) {
        (Some(p), Some(l)) => (p, l),
        (None, None) => {
            let seed = opts.seed.unwrap_or(DEFAULT_MARKED_DATA_SEED);
            out.input("seed", json!(seed));
            match choose_marked_data(doc.degree, &doc.parametrization, &doc.implicit, seed) {
                Ok((p, l)) => (p, l),
                Err(e) => {
                    out.fail(e.to_string());
                    return None;
                }
            }
        }
        _ => {
            out.fail("marked_points and marked_lines must be given together or both omitted");
            return None;
        }
    };
    out.result(
        "marked_points",
        Value::Array(points.iter().map(|p| json!(p.to_string())).collect()),
    );
    out.result(
        "marked_lines",
        Value::Array(lines.iter().map(|l| json!(l.to_string())).collect()),
    );
    Some(StableMapProblem::new(
        doc.degree,
        doc.parametrization,
        doc.implicit,
        points,
        lines,
    ))
}

fn report_to_json(report: &ValidationReport) -> Value {
    Value::Array(
        report
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "passed": c.passed,
                    "witness": c.witness,
                })
            })
            .collect(),
    )
}

pub fn stable_map(path: &Path, cap: Option<u32>, opts: &GlobalOpts) -> CommandResult {
    let mut out = CommandResult::new("stable-map");
    let Some(text) = read_input(path, &mut out) else {
        return out;
    };
    let doc = match parse_stable_map_doc(&text) {
        Ok(d) => d,
        Err(e) => {
            out.fail(e.to_string());
            return out;
        }
    };
    out.input("degree", json!(doc.degree));
    let Some(problem) = problem_from_doc(doc, opts, &mut out) else {
        return out;
    };

    let report = validate_stable_map_input(&problem);
    out.result("valid_input", json!(report.is_valid()));
    if !report.is_valid() {
        out.result("validation", report_to_json(&report));
        out.fail(format!(
            "input failed validation: {}",
            report.failure_summary()
        ));
        return out;
    }

    let start = Instant::now();
    match stable_map_local_length_with(&problem, &opts.local_config(cap)) {
        Ok(length) => {
            out.timing_ms("local_length", ms(start));
            out.result("length", json!(length.to_string()));
        }
        Err(e) => {
            out.fail(e.to_string());
        }
    }
    out
}

pub fn validate(path: &Path, opts: &GlobalOpts) -> CommandResult {
    let mut out = CommandResult::new("validate");
    let Some(text) = read_input(path, &mut out) else {
        return out;
    };
    let doc = match parse_stable_map_doc(&text) {
        Ok(d) => d,
        Err(e) => {
            out.fail(e.to_string());
            return out;
        }
    };
    out.input("degree", json!(doc.degree));
    let Some(problem) = problem_from_doc(doc, opts, &mut out) else {
        return out;
    };
    let start = Instant::now();
    let report = validate_stable_map_input(&problem);
    out.timing_ms("validation", ms(start));
    out.result("validation", report_to_json(&report));
    out.result("valid", json!(report.is_valid()));
    if !report.is_valid() {
        out.fail(format!("validation failed: {}", report.failure_summary()));
    }
    out
}
