//! Document formats: the polynomial-system file and the stable-map input.
//!
//! A polynomial file declares its variables and order, then lists one
//! polynomial per line:
//!
//! ```text
//! vars: x0 y0 y1
//! order: weighted 2 3 2
//! 4*y1 - 6*x0
//! 6*y0
//! -2*x0*y1
//! ```
//!
//! A stable-map file is key/value lines with fields `degree`, `param_x`,
//! `param_y`, `param_z` (binary forms in s, t), `implicit` (a form in
//! x, y, z) and optional `marked_points` (comma-separated `s:t` pairs) and
//! `marked_lines` (comma-separated linear forms). Blank lines and lines
//! starting with `#` are ignored in both formats.

use std::fmt;
use std::sync::Arc;

use deltamult::moduli::ParamPoint;
use deltamult::poly::{parse_polynomial, MonomialOrder, QPoly, Rational, Ring};

/// A parse failure with 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for DocError {}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, DocError> {
    Err(DocError {
        line,
        column,
        message: message.into(),
    })
}

fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parse a polynomial-system document into its ring, order and polynomials.
pub fn parse_poly_source(text: &str) -> Result<(Arc<Ring>, MonomialOrder, Vec<QPoly>), DocError> {
    let mut lines = meaningful_lines(text);

    let (line_no, vars_line) = match lines.next() {
        Some(l) => l,
        None => return err(1, 1, "empty document; expected a `vars:` declaration"),
    };
    let names = match vars_line.strip_prefix("vars:") {
        Some(rest) => rest.split_whitespace().collect::<Vec<_>>(),
        None => return err(line_no, 1, "expected `vars: <name> <name> ...`"),
    };
    if names.is_empty() {
        return err(line_no, 1, "at least one variable is required");
    }
    for n in &names {
        if !is_valid_name(n) {
            return err(line_no, 1, format!("invalid variable name `{}`", n));
        }
    }
    let ring = match Ring::new(names.clone()) {
        Ok(r) => r,
        Err(e) => return err(line_no, 1, e.to_string()),
    };

    let (line_no, order_line) = match lines.next() {
        Some(l) => l,
        None => return err(line_no + 1, 1, "expected an `order:` declaration"),
    };
    let order_spec = match order_line.strip_prefix("order:") {
        Some(rest) => rest.trim(),
        None => {
            return err(
                line_no,
                1,
                "expected `order: grevlex | lex | weighted w1 w2 ...`",
            )
        }
    };
    let mut words = order_spec.split_whitespace();
    let order = match words.next() {
        Some("grevlex") => MonomialOrder::GrevLex,
        Some("lex") => MonomialOrder::Lex,
        Some("weighted") => {
            let mut weights = Vec::new();
            for w in words.by_ref() {
                match w.parse::<u64>() {
                    Ok(v) if v > 0 => weights.push(v),
                    _ => return err(line_no, 1, format!("malformed weight `{}`", w)),
                }
            }
            if weights.len() != ring.nvars() {
                return err(
                    line_no,
                    1,
                    format!(
                        "{} weights given for {} variables",
                        weights.len(),
                        ring.nvars()
                    ),
                );
            }
            MonomialOrder::weighted(weights)
        }
        other => {
            return err(
                line_no,
                1,
                format!("unknown order `{}`", other.unwrap_or("")),
            )
        }
    };
    if words.next().is_some() {
        return err(line_no, 1, "trailing input after order declaration");
    }

    let mut polynomials = Vec::new();
    for (line_no, line) in lines {
        match parse_polynomial(&ring, line) {
            Ok(p) => polynomials.push(p),
            Err(e) => return err(line_no, e.column, e.message),
        }
    }
    Ok((ring, order, polynomials))
}

/// The parsed stable-map input document.
#[derive(Debug, Clone)]
pub struct StableMapDoc {
    pub degree: u64,
    pub parametrization: [QPoly; 3],
    pub implicit: QPoly,
    pub marked_points: Option<[ParamPoint; 3]>,
    pub marked_lines: Option<[QPoly; 3]>,
}

pub fn parse_stable_map_doc(text: &str) -> Result<StableMapDoc, DocError> {
    let param_ring = Ring::of(&["s", "t"]);
    let curve_ring = Ring::of(&["x", "y", "z"]);

    let mut degree: Option<(usize, u64)> = None;
    let mut params: [Option<QPoly>; 3] = [None, None, None];
    let mut implicit: Option<QPoly> = None;
    let mut marked_points: Option<[ParamPoint; 3]> = None;
    let mut marked_lines: Option<[QPoly; 3]> = None;

    for (line_no, line) in meaningful_lines(text) {
        let Some((key, value)) = line.split_once(':') else {
            return err(line_no, 1, "expected `key: value`");
        };
        let key = key.trim();
        let value = value.trim();
        let value_col = line.find(':').unwrap_or(0) + 2;
        match key {
            "degree" => match value.parse::<u64>() {
                Ok(d) if d >= 1 => degree = Some((line_no, d)),
                _ => return err(line_no, value_col, format!("malformed degree `{}`", value)),
            },
            "param_x" | "param_y" | "param_z" => {
                let slot = match key {
                    "param_x" => 0,
                    "param_y" => 1,
                    _ => 2,
                };
                match parse_polynomial(&param_ring, value) {
                    Ok(p) => params[slot] = Some(p),
                    Err(e) => return err(line_no, value_col + e.column - 1, e.message),
                }
            }
            "implicit" => match parse_polynomial(&curve_ring, value) {
                Ok(p) => implicit = Some(p),
                Err(e) => return err(line_no, value_col + e.column - 1, e.message),
            },
            "marked_points" => {
                let mut points = Vec::new();
                for chunk in value.split(',') {
                    let chunk = chunk.trim();
                    let Some((s, t)) = chunk.split_once(':') else {
                        return err(
                            line_no,
                            value_col,
                            format!("expected `s:t`, got `{}`", chunk),
                        );
                    };
                    let parse_side = |side: &str| side.trim().parse::<Rational>();
                    match (parse_side(s), parse_side(t)) {
                        (Ok(s), Ok(t)) => points.push(ParamPoint::new(s, t)),
                        _ => {
                            return err(
                                line_no,
                                value_col,
                                format!("malformed point coordinates `{}`", chunk),
                            )
                        }
                    }
                }
                match <[ParamPoint; 3]>::try_from(points) {
                    Ok(p) => marked_points = Some(p),
                    Err(p) => {
                        return err(
                            line_no,
                            value_col,
                            format!("expected exactly three marked points, got {}", p.len()),
                        )
                    }
                }
            }
            "marked_lines" => {
                let mut lines_vec = Vec::new();
                for chunk in value.split(',') {
                    match parse_polynomial(&curve_ring, chunk.trim()) {
                        Ok(p) => lines_vec.push(p),
                        Err(e) => return err(line_no, value_col, e.message),
                    }
                }
                match <[QPoly; 3]>::try_from(lines_vec) {
                    Ok(l) => marked_lines = Some(l),
                    Err(l) => {
                        return err(
                            line_no,
                            value_col,
                            format!("expected exactly three marked lines, got {}", l.len()),
                        )
                    }
                }
            }
            other => return err(line_no, 1, format!("unknown field `{}`", other)),
        }
    }

    let (_, degree) = degree.ok_or(DocError {
        line: 1,
        column: 1,
        message: "missing `degree` field".into(),
    })?;
    let [x, y, z] = params;
    let missing = |name: &str| DocError {
        line: 1,
        column: 1,
        message: format!("missing `{}` field", name),
    };
    let parametrization = [
        x.ok_or_else(|| missing("param_x"))?,
        y.ok_or_else(|| missing("param_y"))?,
        z.ok_or_else(|| missing("param_z"))?,
    ];
    let implicit = implicit.ok_or_else(|| missing("implicit"))?;

    Ok(StableMapDoc {
        degree,
        parametrization,
        implicit,
        marked_points,
        marked_lines,
    })
}
