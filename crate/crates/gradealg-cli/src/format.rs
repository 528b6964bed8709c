//! The `.galg` algebra file format.
//!
//! Line-oriented and diff-friendly; `#` starts a comment. A file is
//!
//! ```text
//! algebra <name>
//! group Z2            # or Z2xZ3, factors separated by x
//! basis <label>...
//! grade <label> <g1,g2,...>
//! unit <coeff> <label> [+ <coeff> <label>]...
//! sc <label> <label> = <coeff> <label> [+ ...]
//! ```
//!
//! with coefficients `p/q` (q > 0, canonical). Omitted `sc` lines mean zero
//! product. Every basis label needs exactly one `grade` line. Serialization
//! is canonical, so parse-serialize-parse round-trips to an identical
//! algebra.

use std::collections::HashMap;

use gradealg::algebra::{Element, GradedAlgebra};
use gradealg::group::{FiniteAbelianGroup, GroupElement};
use gradealg::scalar::{format_scalar, parse_scalar, Scalar};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate basis label `{label}`")]
    DuplicateBasisLabel { line: usize, label: String },
    #[error("algebra fails validation: {summary}")]
    Validation { summary: String },
    #[error(transparent)]
    Algebra(#[from] gradealg::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses a `.galg` document without running the algebra validator. Used by
/// the `validate` subcommand, which reports violations as its verdict.
pub fn parse_algebra_unvalidated(text: &str) -> Result<GradedAlgebra, FormatError> {
    let mut name: Option<String> = None;
    let mut group: Option<FiniteAbelianGroup> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut label_line: HashMap<String, usize> = HashMap::new();
    let mut grades: HashMap<String, (usize, GroupElement)> = HashMap::new();
    let mut unit: Option<Vec<(usize, Scalar)>> = None;
    let mut structure: Vec<((usize, usize), Vec<(usize, Scalar)>)> = Vec::new();
    let mut seen_sc: HashMap<(usize, usize), usize> = HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match keyword {
            "algebra" => {
                if name.is_some() {
                    return Err(syntax(line_no, "repeated `algebra` line"));
                }
                if rest.is_empty() {
                    return Err(syntax(line_no, "`algebra` needs a name"));
                }
                name = Some(rest.to_string());
            }
            "group" => {
                if group.is_some() {
                    return Err(syntax(line_no, "repeated `group` line"));
                }
                group = Some(
                    FiniteAbelianGroup::parse(rest)
                        .map_err(|e| syntax(line_no, e.to_string()))?,
                );
            }
            "basis" => {
                for label in rest.split_whitespace() {
                    if label.contains(['+', '=', '#']) {
                        return Err(syntax(
                            line_no,
                            format!("label `{label}` may not contain '+', '=' or '#'"),
                        ));
                    }
                    if label_line.contains_key(label) {
                        return Err(FormatError::DuplicateBasisLabel {
                            line: line_no,
                            label: label.to_string(),
                        });
                    }
                    label_line.insert(label.to_string(), line_no);
                    labels.push(label.to_string());
                }
            }
            "grade" => {
                let group = group
                    .as_ref()
                    .ok_or_else(|| syntax(line_no, "`grade` before `group`"))?;
                let mut parts = rest.split_whitespace();
                let label = parts
                    .next()
                    .ok_or_else(|| syntax(line_no, "`grade` needs a label"))?;
                let degree = parts
                    .next()
                    .ok_or_else(|| syntax(line_no, "`grade` needs a degree"))?;
                if parts.next().is_some() {
                    return Err(syntax(line_no, "trailing tokens after `grade`"));
                }
                if !label_line.contains_key(label) {
                    return Err(syntax(line_no, format!("unknown basis label `{label}`")));
                }
                let g = GroupElement::parse(group, degree)
                    .map_err(|e| syntax(line_no, e.to_string()))?;
                if grades.insert(label.to_string(), (line_no, g)).is_some() {
                    return Err(syntax(line_no, format!("repeated grade for `{label}`")));
                }
            }
            "unit" => {
                if unit.is_some() {
                    return Err(syntax(line_no, "repeated `unit` line"));
                }
                let terms = parse_terms(rest, &labels, line_no)?;
                unit = Some(terms);
            }
            "sc" => {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| syntax(line_no, "`sc` needs `= <element>`"))?;
                let mut operands = lhs.split_whitespace();
                let (Some(a), Some(b), None) =
                    (operands.next(), operands.next(), operands.next())
                else {
                    return Err(syntax(line_no, "`sc` needs exactly two factor labels"));
                };
                let i = index_of(&labels, a, line_no)?;
                let j = index_of(&labels, b, line_no)?;
                if seen_sc.insert((i, j), line_no).is_some() {
                    return Err(syntax(
                        line_no,
                        format!("repeated `sc` line for ({a}, {b})"),
                    ));
                }
                let terms = parse_terms(rhs.trim(), &labels, line_no)?;
                structure.push(((i, j), terms));
            }
            other => {
                return Err(syntax(line_no, format!("unknown keyword `{other}`")));
            }
        }
    }

    let name = name.ok_or_else(|| syntax(0, "missing `algebra` line"))?;
    let group = group.ok_or_else(|| syntax(0, "missing `group` line"))?;
    if labels.is_empty() {
        return Err(syntax(0, "missing `basis` line"));
    }
    let unit = unit.ok_or_else(|| syntax(0, "missing `unit` line"))?;
    let mut grade_list = Vec::with_capacity(labels.len());
    for label in &labels {
        match grades.get(label) {
            Some((_, g)) => grade_list.push(g.clone()),
            None => {
                return Err(syntax(
                    label_line[label],
                    format!("basis label `{label}` has no `grade` line"),
                ))
            }
        }
    }

    Ok(GradedAlgebra::from_parts(
        name, group, labels, grade_list, structure, unit,
    )?)
}

/// Parses and validates; validation failures become parse-stage errors.
pub fn parse_algebra(text: &str) -> Result<GradedAlgebra, FormatError> {
    let algebra = parse_algebra_unvalidated(text)?;
    let report = algebra.validate();
    if !report.is_valid() {
        let mut summary = report.to_string();
        if let Some(v) = report.grading_violations.first() {
            summary.push_str(&format!(
                "; first grading violation at ({}, {}) -> {}",
                algebra.label(v.left),
                algebra.label(v.right),
                algebra.label(v.target)
            ));
        }
        if let Some((i, j, k)) = report.associativity_violations.first() {
            summary.push_str(&format!(
                "; first associativity violation at ({}, {}, {})",
                algebra.label(*i),
                algebra.label(*j),
                algebra.label(*k)
            ));
        }
        if let Some(v) = report.unit_violations.first() {
            summary.push_str(&format!(
                "; first unit violation at basis `{}`",
                algebra.label(v.basis)
            ));
        }
        return Err(FormatError::Validation { summary });
    }
    Ok(algebra)
}

fn index_of(labels: &[String], label: &str, line: usize) -> Result<usize, FormatError> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| syntax(line, format!("unknown basis label `{label}`")))
}

/// `<coeff> <label> [+ <coeff> <label>]...`, or the literal `0`.
fn parse_terms(
    text: &str,
    labels: &[String],
    line: usize,
) -> Result<Vec<(usize, Scalar)>, FormatError> {
    if text == "0" {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    for chunk in text.split('+') {
        let mut parts = chunk.split_whitespace();
        let (Some(coeff), Some(label), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(syntax(
                line,
                format!("malformed element term `{}`", chunk.trim()),
            ));
        };
        let c = parse_scalar(coeff).map_err(|e| syntax(line, e.to_string()))?;
        terms.push((index_of(labels, label, line)?, c));
    }
    Ok(terms)
}

/// Canonical serialization; `parse(serialize(a))` reproduces `a` exactly.
pub fn serialize_algebra(a: &GradedAlgebra) -> String {
    let mut out = String::new();
    out.push_str(&format!("algebra {}\n", a.name()));
    out.push_str(&format!("group {}\n", a.group()));
    out.push_str(&format!("basis {}\n", a.labels().join(" ")));
    for i in 0..a.dim() {
        out.push_str(&format!("grade {} {}\n", a.label(i), a.grade(i)));
    }
    out.push_str(&format!(
        "unit {}\n",
        format_terms(a, a.unit_element().terms())
    ));
    for ((i, j), row) in a.structure_entries() {
        out.push_str(&format!(
            "sc {} {} = {}\n",
            a.label(i),
            a.label(j),
            format_terms(a, row.iter().map(|(k, c)| (*k, c)))
        ));
    }
    out
}

fn format_terms<'a>(
    a: &GradedAlgebra,
    terms: impl Iterator<Item = (usize, &'a Scalar)>,
) -> String {
    let parts: Vec<String> = terms
        .map(|(i, c)| format!("{} {}", format_scalar(c), a.label(i)))
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Parses an element expression (`<coeff> <label> [+ ...]`, or `0`) over an
/// algebra's basis.
pub fn parse_element(a: &GradedAlgebra, text: &str) -> Result<Element, FormatError> {
    let labels: Vec<String> = a.labels().to_vec();
    let terms = parse_terms(text.trim(), &labels, 0)?;
    Ok(a.element_from_terms(terms)?)
}

/// Parses a generators file: one element expression per non-comment line.
pub fn parse_generators(a: &GradedAlgebra, text: &str) -> Result<Vec<Element>, FormatError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let labels: Vec<String> = a.labels().to_vec();
        let terms = parse_terms(line, &labels, idx + 1)?;
        out.push(a.element_from_terms(terms)?);
    }
    Ok(out)
}
