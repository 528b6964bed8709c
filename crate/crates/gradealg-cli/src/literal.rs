//! Polynomial and degree-pattern literals.
//!
//! A polynomial literal is a sum of terms, each a coefficient followed by
//! variables in product order:
//!
//! ```text
//! 1/1 x1:1 x2:1 + 1/1 x2:1 x1:1
//! ```
//!
//! A variable is `x<index>:<degree components comma-separated>`. A degree
//! pattern lists one degree per variable, `;`-separated (plain commas are
//! accepted for single-factor groups, so `1,1` means two odd variables over
//! Z2).

use gradealg::group::{FiniteAbelianGroup, GroupElement};
use gradealg::identities::{GradedVariable, MultilinearGradedPolynomial};
use gradealg::scalar::{parse_scalar, Scalar};

use crate::format::FormatError;

fn bad(message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line: 0,
        message: message.into(),
    }
}

fn parse_variable(group: &FiniteAbelianGroup, token: &str) -> Result<(usize, GroupElement), FormatError> {
    let rest = token
        .strip_prefix('x')
        .ok_or_else(|| bad(format!("variable `{token}` must start with `x`")))?;
    let (index, degree) = rest
        .split_once(':')
        .ok_or_else(|| bad(format!("variable `{token}` needs `:<degree>`")))?;
    let index: usize = index
        .parse()
        .map_err(|_| bad(format!("invalid variable index in `{token}`")))?;
    if index == 0 {
        return Err(bad("variable indices are 1-based"));
    }
    let degree = GroupElement::parse(group, degree).map_err(|e| bad(e.to_string()))?;
    Ok((index, degree))
}

/// Parses a polynomial literal over the given group. The variable list is
/// the set of distinct `(index, degree)` pairs sorted by index then degree;
/// every term must use each variable exactly once.
pub fn parse_polynomial(
    group: &FiniteAbelianGroup,
    text: &str,
) -> Result<MultilinearGradedPolynomial, FormatError> {
    let mut raw_terms: Vec<(Scalar, Vec<(usize, GroupElement)>)> = Vec::new();
    for chunk in text.split('+') {
        let mut tokens = chunk.split_whitespace();
        let coeff = tokens
            .next()
            .ok_or_else(|| bad("empty polynomial term"))?;
        let coeff = parse_scalar(coeff).map_err(|e| bad(e.to_string()))?;
        let vars: Vec<(usize, GroupElement)> = tokens
            .map(|t| parse_variable(group, t))
            .collect::<Result<_, _>>()?;
        if vars.is_empty() {
            return Err(bad("polynomial terms need at least one variable"));
        }
        raw_terms.push((coeff, vars));
    }

    let mut variables: Vec<(usize, GroupElement)> = raw_terms
        .iter()
        .flat_map(|(_, vars)| vars.iter().cloned())
        .collect();
    variables.sort_by(|a, b| (a.0, a.1.components()).cmp(&(b.0, b.1.components())));
    variables.dedup();

    let slot_of = |v: &(usize, GroupElement)| variables.iter().position(|w| w == v);
    let mut terms = Vec::new();
    for (coeff, vars) in raw_terms {
        let perm: Option<Vec<usize>> = vars.iter().map(&slot_of).collect();
        let perm = perm.ok_or_else(|| bad("internal variable lookup failed"))?;
        terms.push((perm, coeff));
    }

    MultilinearGradedPolynomial::new(
        group.clone(),
        variables
            .into_iter()
            .map(|(index, degree)| GradedVariable { index, degree })
            .collect(),
        terms,
    )
    .map_err(|e| bad(format!("not a multilinear polynomial: {e}")))
}

/// Parses a degree pattern: `;`-separated degrees, or `,`-separated for a
/// single-factor group.
pub fn parse_pattern(
    group: &FiniteAbelianGroup,
    text: &str,
) -> Result<Vec<GroupElement>, FormatError> {
    let chunks: Vec<&str> = if text.contains(';') {
        text.split(';').collect()
    } else if group.factor_orders().len() == 1 {
        text.split(',').collect()
    } else {
        return Err(bad(format!(
            "pattern for {group} needs `;` between variables (`,` separates components)"
        )));
    };
    chunks
        .into_iter()
        .map(|c| GroupElement::parse(group, c.trim()).map_err(|e| bad(e.to_string())))
        .collect()
}

/// Formats a degree tuple in the pattern syntax.
pub fn format_pattern(group: &FiniteAbelianGroup, tuple: &[GroupElement]) -> String {
    let sep = if group.factor_orders().len() == 1 { "," } else { ";" };
    tuple
        .iter()
        .map(GroupElement::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}
