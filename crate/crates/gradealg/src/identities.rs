//! Multilinear graded polynomials and identity testing.
//!
//! Polynomials are multilinear by construction: a degree pattern of graded
//! variables plus one rational coefficient per permutation monomial. In
//! characteristic zero this loses nothing for identity questions, and it
//! makes the completeness argument airtight: a multilinear polynomial
//! vanishes on all tuples of homogeneous basis elements iff it vanishes on
//! all tuples of homogeneous elements, so the basis-tuple scan decides.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{Element, GradedAlgebra};
use crate::error::Error;
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::linalg::Matrix;
use crate::scalar::{format_scalar, Scalar};

/// Degree cap for polynomials (d! coefficients per polynomial).
pub const MAX_DEGREE: usize = 8;

/// Degree cap for identity-space computation (d! unknowns in the kernel).
pub const IDENTITY_SPACE_MAX_DEGREE: usize = 5;

/// Elementary-step budget for basis-tuple scans: (#tuples) x d!.
pub const SEARCH_BUDGET: u128 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedVariable {
    /// 1-based display index.
    pub index: usize,
    pub degree: GroupElement,
}

/// A multilinear graded polynomial: every variable occurs exactly once in
/// every monomial, so a monomial is a permutation of the variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearGradedPolynomial {
    group: FiniteAbelianGroup,
    variables: Vec<GradedVariable>,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl MultilinearGradedPolynomial {
    pub fn new(
        group: FiniteAbelianGroup,
        variables: Vec<GradedVariable>,
        terms: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
    ) -> Result<Self, Error> {
        let d = variables.len();
        if d == 0 || d > MAX_DEGREE {
            return Err(Error::BadParams(format!(
                "polynomial degree must be between 1 and {MAX_DEGREE}, got {d}"
            )));
        }
        for (i, v) in variables.iter().enumerate() {
            if !group.contains(&v.degree) {
                return Err(Error::BadParams(format!(
                    "variable x{} has a degree outside {group}",
                    v.index
                )));
            }
            for w in &variables[..i] {
                if v == w {
                    return Err(Error::BadParams(format!(
                        "variable x{}:{} appears twice",
                        v.index, v.degree
                    )));
                }
            }
        }
        let mut table: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (perm, coeff) in terms {
            if !is_permutation(&perm, d) {
                return Err(Error::BadParams(format!(
                    "monomial {perm:?} is not a permutation of the {d} variables"
                )));
            }
            if coeff.is_zero() {
                continue;
            }
            match table.entry(perm) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(coeff);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().clone() + coeff;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        Ok(Self {
            group,
            variables,
            terms: table,
        })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[GradedVariable] {
        &self.variables
    }

    /// Degrees of the variables, in variable order.
    pub fn pattern(&self) -> Vec<GroupElement> {
        self.variables.iter().map(|v| v.degree.clone()).collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient vector over the lexicographic permutation list of the
    /// polynomial's degree.
    pub fn coefficient_vector(&self) -> Vec<Scalar> {
        permutations(self.degree())
            .iter()
            .map(|p| self.terms.get(p).cloned().unwrap_or_else(Scalar::zero))
            .collect()
    }
}

impl fmt::Display for MultilinearGradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(perm, coeff)| {
                let vars: Vec<String> = perm
                    .iter()
                    .map(|&slot| {
                        let v = &self.variables[slot];
                        format!("x{}:{}", v.index, v.degree)
                    })
                    .collect();
                format!("{} {}", format_scalar(coeff), vars.join(" "))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn is_permutation(perm: &[usize], d: usize) -> bool {
    if perm.len() != d {
        return false;
    }
    let mut seen = vec![false; d];
    for &p in perm {
        if p >= d || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

/// All permutations of `0..d` in lexicographic order.
pub fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..d).collect();
    let mut used = vec![false; d];
    fn rec(
        d: usize,
        depth: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == d {
            out.push(current.clone());
            return;
        }
        for v in 0..d {
            if used[v] {
                continue;
            }
            used[v] = true;
            current[depth] = v;
            rec(d, depth + 1, current, used, out);
            used[v] = false;
        }
    }
    rec(d, 0, &mut current, &mut used, &mut out);
    out
}

/// Substitutes one homogeneous element per variable and sums the permutation
/// monomials. Assignments must be homogeneous of the variable's degree.
pub fn evaluate(
    f: &MultilinearGradedPolynomial,
    algebra: &GradedAlgebra,
    assignment: &[Element],
) -> Result<Element, Error> {
    if f.group() != algebra.group() {
        return Err(Error::GroupMismatch);
    }
    if assignment.len() != f.degree() {
        return Err(Error::DimensionMismatch {
            expected: f.degree(),
            got: assignment.len(),
        });
    }
    for (v, e) in f.variables.iter().zip(assignment) {
        if e.algebra() != algebra {
            return Err(Error::AlgebraMismatch);
        }
        if !e.is_homogeneous(&v.degree) {
            return Err(Error::DegreeMismatch {
                index: v.index,
                degree: v.degree.to_string(),
            });
        }
    }
    let mut acc = algebra.zero_element();
    for (perm, coeff) in &f.terms {
        let mut product = algebra.unit_element();
        for &slot in perm {
            product = product.multiply(&assignment[slot])?;
            if product.is_zero() {
                break;
            }
        }
        acc = &acc + &product.scale(coeff);
    }
    Ok(acc)
}

/// Verdict of an identity test; the counterexample, when present,
/// re-evaluates to a nonzero element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub holds: bool,
    pub counterexample: Option<Vec<Element>>,
}

struct TupleSpace {
    slots: Vec<Vec<usize>>,
    count: u128,
}

fn tuple_space(a: &GradedAlgebra, pattern: &[GroupElement]) -> TupleSpace {
    let slots: Vec<Vec<usize>> = pattern.iter().map(|g| a.component_indices(g)).collect();
    let count = slots.iter().map(|s| s.len() as u128).product();
    TupleSpace { slots, count }
}

fn tuple_at(space: &TupleSpace, mut index: u128) -> Vec<usize> {
    let mut out = vec![0usize; space.slots.len()];
    for (slot, indices) in space.slots.iter().enumerate().rev() {
        let n = indices.len() as u128;
        out[slot] = indices[(index % n) as usize];
        index /= n;
    }
    out
}

fn check_budget(space: &TupleSpace, d: usize) -> Result<(), Error> {
    let factorial: u128 = (1..=d as u128).product();
    let required = space.count.saturating_mul(factorial);
    if required > SEARCH_BUDGET {
        return Err(Error::SearchBudgetExceeded {
            required,
            budget: SEARCH_BUDGET,
        });
    }
    Ok(())
}

fn tuple_is_counterexample(
    f: &MultilinearGradedPolynomial,
    a: &GradedAlgebra,
    tuple: &[usize],
) -> bool {
    let mut acc = a.zero_element();
    for (perm, coeff) in &f.terms {
        let mut product = a.basis_element(tuple[perm[0]]);
        for &slot in &perm[1..] {
            product = product
                .multiply(&a.basis_element(tuple[slot]))
                .expect("same algebra");
            if product.is_zero() {
                break;
            }
        }
        acc = &acc + &product.scale(coeff);
    }
    !acc.is_zero()
}

/// Tests whether `f` vanishes on every tuple of homogeneous basis elements
/// matching its degree pattern. Runs the scan on the worker pool when the
/// `parallel` feature is enabled; the counterexample (if any) is the first in
/// lexicographic tuple order either way.
pub fn is_graded_identity(
    a: &GradedAlgebra,
    f: &MultilinearGradedPolynomial,
) -> Result<IdentityVerdict, Error> {
    #[cfg(feature = "parallel")]
    {
        let space = tuple_space(a, &f.pattern());
        check_budget(&space, f.degree())?;
        if space.count > u64::MAX as u128 {
            return Err(Error::SearchBudgetExceeded {
                required: space.count,
                budget: SEARCH_BUDGET,
            });
        }
        use rayon::prelude::*;
        let hit = crate::exec::install(|| {
            (0..space.count as u64)
                .into_par_iter()
                .find_first(|&t| tuple_is_counterexample(f, a, &tuple_at(&space, t as u128)))
        });
        Ok(verdict_from_hit(a, &space, hit.map(|t| t as u128)))
    }
    #[cfg(not(feature = "parallel"))]
    {
        is_graded_identity_seq(a, f)
    }
}

/// Single-threaded identity scan; reference twin of [`is_graded_identity`].
pub fn is_graded_identity_seq(
    a: &GradedAlgebra,
    f: &MultilinearGradedPolynomial,
) -> Result<IdentityVerdict, Error> {
    let space = tuple_space(a, &f.pattern());
    check_budget(&space, f.degree())?;
    let hit = (0..space.count).find(|&t| tuple_is_counterexample(f, a, &tuple_at(&space, t)));
    Ok(verdict_from_hit(a, &space, hit))
}

fn verdict_from_hit(a: &GradedAlgebra, space: &TupleSpace, hit: Option<u128>) -> IdentityVerdict {
    match hit {
        None => IdentityVerdict {
            holds: true,
            counterexample: None,
        },
        Some(t) => IdentityVerdict {
            holds: false,
            counterexample: Some(
                tuple_at(space, t)
                    .into_iter()
                    .map(|i| a.basis_element(i))
                    .collect(),
            ),
        },
    }
}

/// The three generators of the Z2-graded identities of the Grassmann algebra,
/// in expanded multilinear form: the even-even commutator, the even-odd
/// commutator, and the odd-odd anticommutator.
pub fn grassmann_t_ideal_generators() -> [MultilinearGradedPolynomial; 3] {
    let z2 = FiniteAbelianGroup::z2();
    let even = z2.zero();
    let odd = z2.element(vec![1]).unwrap();
    let var = |index: usize, degree: &GroupElement| GradedVariable {
        index,
        degree: degree.clone(),
    };
    let commutator = |vars: Vec<GradedVariable>| {
        MultilinearGradedPolynomial::new(
            z2.clone(),
            vars,
            [
                (vec![0, 1], Scalar::one()),
                (vec![1, 0], -Scalar::one()),
            ],
        )
        .expect("well-formed")
    };
    let even_even = commutator(vec![var(1, &even), var(2, &even)]);
    let even_odd = commutator(vec![var(1, &even), var(1, &odd)]);
    let odd_odd = MultilinearGradedPolynomial::new(
        z2,
        vec![var(1, &odd), var(2, &odd)],
        [(vec![0, 1], Scalar::one()), (vec![1, 0], Scalar::one())],
    )
    .expect("well-formed");
    [even_even, even_odd, odd_odd]
}

/// Outcome of testing the three Grassmann T-ideal generators on a Z2-graded
/// algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrassmannIdentityReport {
    pub satisfied: bool,
    /// Index (0..3) of the first failing generator with its counterexample.
    pub failing: Option<(usize, IdentityVerdict)>,
}

pub fn satisfies_grassmann_identities(
    a: &GradedAlgebra,
) -> Result<GrassmannIdentityReport, Error> {
    if !a.group().is_z2() {
        return Err(Error::GroupMismatch);
    }
    for (idx, f) in grassmann_t_ideal_generators().iter().enumerate() {
        let verdict = is_graded_identity(a, f)?;
        if !verdict.holds {
            return Ok(GrassmannIdentityReport {
                satisfied: false,
                failing: Some((idx, verdict)),
            });
        }
    }
    Ok(GrassmannIdentityReport {
        satisfied: true,
        failing: None,
    })
}

/// Maintains the RREF of a growing row space; rank is capped by the column
/// count, so insertion stops contributing once the space is full.
struct RowAccumulator {
    cols: usize,
    rref_rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowAccumulator {
    fn new(cols: usize) -> Self {
        Self {
            cols,
            rref_rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rref_rows.len()
    }

    fn insert(&mut self, mut row: Vec<Scalar>) {
        for (r, &p) in self.pivots.iter().enumerate() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for c in 0..self.cols {
                let sub = factor.clone() * self.rref_rows[r][c].clone();
                row[c] = row[c].clone() - sub;
            }
        }
        let Some(pivot) = row.iter().position(|c| !c.is_zero()) else {
            return;
        };
        let lead = row[pivot].clone();
        for c in row.iter_mut() {
            *c = c.clone() / lead.clone();
        }
        for r in 0..self.rref_rows.len() {
            if self.rref_rows[r][pivot].is_zero() {
                continue;
            }
            let factor = self.rref_rows[r][pivot].clone();
            for c in 0..self.cols {
                let sub = factor.clone() * row[c].clone();
                self.rref_rows[r][c] = self.rref_rows[r][c].clone() - sub;
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rref_rows.insert(at, row);
    }

    fn into_matrix(self) -> Matrix {
        if self.rref_rows.is_empty() {
            Matrix::zero(1, self.cols)
        } else {
            Matrix::from_rows(self.rref_rows).expect("uniform rows")
        }
    }
}

/// Basis of the multilinear identities of `a` for one degree pattern, as
/// RREF-canonical coefficient vectors over the lexicographic permutation
/// monomials. Solves the linear system with one constraint per basis tuple
/// and result coordinate.
pub fn identity_space(
    a: &GradedAlgebra,
    pattern: &[GroupElement],
) -> Result<Vec<MultilinearGradedPolynomial>, Error> {
    let d = pattern.len();
    if d == 0 || d > IDENTITY_SPACE_MAX_DEGREE {
        return Err(Error::SearchBudgetExceeded {
            required: (1..=d as u128).product(),
            budget: (1..=IDENTITY_SPACE_MAX_DEGREE as u128).product(),
        });
    }
    for g in pattern {
        if !a.group().contains(g) {
            return Err(Error::BadParams(format!(
                "pattern degree {g} is outside {}",
                a.group()
            )));
        }
    }
    let space = tuple_space(a, pattern);
    check_budget(&space, d)?;

    let perms = permutations(d);
    let mut acc = RowAccumulator::new(perms.len());

    const CHUNK: u128 = 4096;
    let mut start = 0u128;
    while start < space.count && acc.rank() < perms.len() {
        let end = (start + CHUNK).min(space.count);
        let rows = tuple_rows(a, &space, &perms, start, end);
        for row in rows {
            acc.insert(row);
            if acc.rank() == perms.len() {
                break;
            }
        }
        start = end;
    }

    let kernel = acc.into_matrix().kernel_basis();
    if kernel.is_empty() {
        return Ok(Vec::new());
    }
    // canonicalize the kernel basis itself
    let canonical = Matrix::from_rows(kernel)?.rref();
    let variables: Vec<GradedVariable> = pattern
        .iter()
        .enumerate()
        .map(|(i, g)| GradedVariable {
            index: i + 1,
            degree: g.clone(),
        })
        .collect();
    (0..canonical.rank)
        .map(|r| {
            let coeffs = canonical.reduced.row(r);
            MultilinearGradedPolynomial::new(
                a.group().clone(),
                variables.clone(),
                perms
                    .iter()
                    .cloned()
                    .zip(coeffs.iter().cloned())
                    .filter(|(_, c)| !c.is_zero()),
            )
        })
        .collect()
}

/// Constraint rows contributed by the tuples in `[start, end)`, grouped per
/// result coordinate; generated on the worker pool when available.
fn tuple_rows(
    a: &GradedAlgebra,
    space: &TupleSpace,
    perms: &[Vec<usize>],
    start: u128,
    end: u128,
) -> Vec<Vec<Scalar>> {
    let one_tuple = |t: u128| -> Vec<Vec<Scalar>> {
        let tuple = tuple_at(space, t);
        let mut by_coord: BTreeMap<usize, Vec<Scalar>> = BTreeMap::new();
        for (p_idx, perm) in perms.iter().enumerate() {
            let mut product = a.basis_element(tuple[perm[0]]);
            for &slot in &perm[1..] {
                product = product
                    .multiply(&a.basis_element(tuple[slot]))
                    .expect("same algebra");
                if product.is_zero() {
                    break;
                }
            }
            for (k, c) in product.terms() {
                by_coord
                    .entry(k)
                    .or_insert_with(|| vec![Scalar::zero(); perms.len()])[p_idx] = c.clone();
            }
        }
        by_coord.into_values().collect()
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        crate::exec::install(|| {
            (start..end)
                .into_par_iter()
                .map(one_tuple)
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect()
        })
    }
    #[cfg(not(feature = "parallel"))]
    {
        (start..end).flat_map(one_tuple).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{k_plus_ck, wall_fixture, WallKind};
    use crate::grassmann::{envelope, materialize, EnvelopeSpec};
    use crate::scalar::int;

    fn z2_var(index: usize, odd: bool) -> GradedVariable {
        let z2 = FiniteAbelianGroup::z2();
        GradedVariable {
            index,
            degree: if odd {
                z2.element(vec![1]).unwrap()
            } else {
                z2.zero()
            },
        }
    }

    fn odd_anticommutator() -> MultilinearGradedPolynomial {
        grassmann_t_ideal_generators()[2].clone()
    }

    fn odd_monomial() -> MultilinearGradedPolynomial {
        MultilinearGradedPolynomial::new(
            FiniteAbelianGroup::z2(),
            vec![z2_var(1, true), z2_var(2, true)],
            [(vec![0, 1], Scalar::one())],
        )
        .unwrap()
    }

    #[test]
    fn evaluate_anticommutator_on_generators() {
        let e2 = materialize(2).unwrap();
        let out = evaluate(
            &odd_anticommutator(),
            &e2,
            &[e2.basis_element(1), e2.basis_element(2)],
        )
        .unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn evaluate_commutator_on_commutative_fixture() {
        let kck = k_plus_ck();
        let f = grassmann_t_ideal_generators()[0].clone();
        let out = evaluate(&f, &kck, &[kck.unit_element(), kck.unit_element()]).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn evaluate_single_monomial() {
        let e2 = materialize(2).unwrap();
        let out = evaluate(
            &odd_monomial(),
            &e2,
            &[e2.basis_element(1), e2.basis_element(2)],
        )
        .unwrap();
        assert_eq!(out, e2.basis_element(3));
    }

    #[test]
    fn evaluate_rejects_inhomogeneous_assignment() {
        let e2 = materialize(2).unwrap();
        let mixed = &e2.basis_element(0) + &e2.basis_element(1);
        let err = evaluate(&odd_monomial(), &e2, &[mixed, e2.basis_element(2)]);
        assert!(matches!(err, Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn anticommutator_is_identity_of_e4() {
        let e4 = materialize(4).unwrap();
        let verdict = is_graded_identity(&e4, &odd_anticommutator()).unwrap();
        assert!(verdict.holds);
    }

    #[test]
    fn monomial_fails_with_first_counterexample() {
        let e2 = materialize(2).unwrap();
        let verdict = is_graded_identity(&e2, &odd_monomial()).unwrap();
        assert!(!verdict.holds);
        let witness = verdict.counterexample.unwrap();
        assert_eq!(witness, vec![e2.basis_element(1), e2.basis_element(2)]);
        // re-evaluates to nonzero
        assert!(!evaluate(&odd_monomial(), &e2, &witness).unwrap().is_zero());
    }

    #[test]
    fn four_odd_variables_vanish_on_e3() {
        let e3 = materialize(3).unwrap();
        let f = MultilinearGradedPolynomial::new(
            FiniteAbelianGroup::z2(),
            (1..=4).map(|i| z2_var(i, true)).collect(),
            [(vec![0, 1, 2, 3], Scalar::one())],
        )
        .unwrap();
        assert!(is_graded_identity(&e3, &f).unwrap().holds);
    }

    #[test]
    fn seq_and_parallel_scans_agree() {
        let e3 = materialize(3).unwrap();
        for f in grassmann_t_ideal_generators() {
            assert_eq!(
                is_graded_identity(&e3, &f).unwrap(),
                is_graded_identity_seq(&e3, &f).unwrap()
            );
        }
        assert_eq!(
            is_graded_identity(&e3, &odd_monomial()).unwrap(),
            is_graded_identity_seq(&e3, &odd_monomial()).unwrap()
        );
    }

    #[test]
    fn generators_expand_to_two_term_polynomials() {
        let [even_even, even_odd, odd_odd] = grassmann_t_ideal_generators();
        assert_eq!(
            even_even.to_string(),
            "1/1 x1:0 x2:0 + -1/1 x2:0 x1:0"
        );
        assert_eq!(even_odd.terms().count(), 2);
        assert_eq!(odd_odd.to_string(), "1/1 x1:1 x2:1 + 1/1 x2:1 x1:1");
    }

    #[test]
    fn generators_hold_on_e4_exhaustively() {
        let e4 = materialize(4).unwrap();
        for f in grassmann_t_ideal_generators() {
            assert!(is_graded_identity(&e4, &f).unwrap().holds);
        }
    }

    #[test]
    fn anticommutator_fails_on_wall_a2() {
        // E1_2 E2_1 + E2_1 E1_2 = E1_1 + E2_2 != 0
        let a2 = wall_fixture(WallKind::A2 { k: 1, l: 1 }).unwrap();
        let verdict = is_graded_identity(&a2, &odd_anticommutator()).unwrap();
        assert!(!verdict.holds);
    }

    #[test]
    fn grassmann_report_on_envelope_and_fixtures() {
        let env = envelope(&EnvelopeSpec { c: k_plus_ck(), n: 3 }).unwrap();
        assert!(satisfies_grassmann_identities(&env).unwrap().satisfied);

        let a3 = wall_fixture(WallKind::A3 { n: 2 }).unwrap();
        let report = satisfies_grassmann_identities(&a3).unwrap();
        assert!(!report.satisfied);
        // noncommutative even part: the even-even commutator fails first
        assert_eq!(report.failing.unwrap().0, 0);

        // K+cK itself: commutative, but c.c + c.c = 2 != 0 fails the odd
        // anticommutator; the fixture separates C from its envelope.
        let report = satisfies_grassmann_identities(&k_plus_ck()).unwrap();
        assert!(!report.satisfied);
        assert_eq!(report.failing.unwrap().0, 2);
    }

    #[test]
    fn identity_space_dimensions() {
        let z2 = FiniteAbelianGroup::z2();
        let odd = z2.element(vec![1]).unwrap();
        let even = z2.zero();

        let e1 = materialize(1).unwrap();
        let both_vanish = identity_space(&e1, &[odd.clone(), odd.clone()]).unwrap();
        assert_eq!(both_vanish.len(), 2);

        let e2 = materialize(2).unwrap();
        let odd_space = identity_space(&e2, &[odd.clone(), odd.clone()]).unwrap();
        assert_eq!(odd_space.len(), 1);
        assert_eq!(
            odd_space[0].coefficient_vector(),
            vec![int(1), int(1)],
            "spanned by the anticommutator"
        );

        let even_space = identity_space(&e2, &[even.clone(), even]).unwrap();
        assert_eq!(even_space.len(), 1);
        assert_eq!(
            even_space[0].coefficient_vector(),
            vec![int(1), int(-1)],
            "spanned by the commutator"
        );
    }

    #[test]
    fn identity_space_members_are_identities() {
        let e3 = materialize(3).unwrap();
        let odd = e3.group().element(vec![1]).unwrap();
        for f in identity_space(&e3, &[odd.clone(), odd.clone(), odd]).unwrap() {
            assert!(is_graded_identity(&e3, &f).unwrap().holds);
        }
    }

    #[test]
    fn identity_space_shrinks_with_the_algebra() {
        // every identity of E_4 holds in the subalgebra E_2
        let z2 = FiniteAbelianGroup::z2();
        let odd = z2.element(vec![1]).unwrap();
        let even = z2.zero();
        let e2 = materialize(2).unwrap();
        let e4 = materialize(4).unwrap();
        for pattern in [vec![odd.clone(), odd.clone()], vec![even.clone(), even]] {
            let big = identity_space(&e4, &pattern).unwrap();
            let small = identity_space(&e2, &pattern).unwrap();
            let small_rows: Vec<Vec<Scalar>> = small
                .iter()
                .map(MultilinearGradedPolynomial::coefficient_vector)
                .collect();
            for f in &big {
                assert!(crate::linalg::in_span(&small_rows, &f.coefficient_vector()).unwrap());
            }
        }
    }

    #[test]
    fn identity_space_rejects_large_degree() {
        let e1 = materialize(1).unwrap();
        let odd = e1.group().element(vec![1]).unwrap();
        let err = identity_space(&e1, &vec![odd; 6]);
        assert!(matches!(err, Err(Error::SearchBudgetExceeded { .. })));
    }

    #[test]
    fn polynomial_rejects_duplicate_variables_and_bad_terms() {
        let z2 = FiniteAbelianGroup::z2();
        let dup = MultilinearGradedPolynomial::new(
            z2.clone(),
            vec![z2_var(1, true), z2_var(1, true)],
            [(vec![0, 1], Scalar::one())],
        );
        assert!(dup.is_err());
        let bad_term = MultilinearGradedPolynomial::new(
            z2,
            vec![z2_var(1, true), z2_var(2, true)],
            [(vec![0, 0], Scalar::one())],
        );
        assert!(bad_term.is_err());
    }

    #[test]
    fn random_homogeneous_assignments_respect_identity_verdicts() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let e3 = materialize(3).unwrap();
        let generators = grassmann_t_ideal_generators();
        for f in &generators {
            assert!(is_graded_identity(&e3, f).unwrap().holds);
            for _ in 0..100 {
                let assignment: Vec<Element> = f
                    .variables()
                    .iter()
                    .map(|v| {
                        let idxs = e3.component_indices(&v.degree);
                        let terms = idxs
                            .iter()
                            .map(|&i| (i, int(rng.random_range(-3..=3))))
                            .collect::<Vec<_>>();
                        e3.element_from_terms(terms).unwrap()
                    })
                    .collect();
                assert!(evaluate(f, &e3, &assignment).unwrap().is_zero());
            }
        }
    }
}
