//! Structure-constant graded algebras over exact rationals.
//!
//! A [`GradedAlgebra`] is a finite labeled basis, a grading map into a finite
//! abelian group, a sparse multiplication table keyed by basis-index pairs
//! (missing key means zero product), and a distinguished unit. Everything is
//! immutable after construction and cheap to share across threads.
//!
//! Construction does not validate the algebra axioms; [`GradedAlgebra::validate`]
//! checks the grading law, associativity on all basis triples, and the unit
//! law, and reports every violated triple.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::linalg::{self, Matrix, Rref};
use crate::scalar::{format_scalar, Scalar};

type SparseVec = Vec<(usize, Scalar)>;

#[derive(Debug)]
struct AlgebraData {
    name: String,
    group: FiniteAbelianGroup,
    basis_labels: Vec<String>,
    grades: Vec<GroupElement>,
    structure: HashMap<(usize, usize), SparseVec>,
    unit: BTreeMap<usize, Scalar>,
}

#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    data: Arc<AlgebraData>,
}

impl PartialEq for GradedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.data, &other.data) {
            return true;
        }
        let (a, b) = (&*self.data, &*other.data);
        a.name == b.name
            && a.group == b.group
            && a.basis_labels == b.basis_labels
            && a.grades == b.grades
            && a.unit == b.unit
            && a.structure == b.structure
    }
}

impl Eq for GradedAlgebra {}

impl GradedAlgebra {
    /// Builds an algebra from raw parts. Indices are bounds-checked, labels
    /// must be distinct, sparse rows are canonicalized (sorted, zero-free);
    /// the algebra axioms themselves are checked by [`Self::validate`].
    pub fn from_parts(
        name: impl Into<String>,
        group: FiniteAbelianGroup,
        basis_labels: Vec<String>,
        grades: Vec<GroupElement>,
        structure: Vec<((usize, usize), Vec<(usize, Scalar)>)>,
        unit: Vec<(usize, Scalar)>,
    ) -> Result<Self, Error> {
        let dim = basis_labels.len();
        if dim == 0 {
            return Err(Error::BadParams("algebra needs at least one basis element".into()));
        }
        if grades.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: grades.len(),
            });
        }
        {
            let mut seen = std::collections::HashSet::new();
            for label in &basis_labels {
                if !seen.insert(label.as_str()) {
                    return Err(Error::BadParams(format!("duplicate basis label `{label}`")));
                }
            }
        }
        for g in &grades {
            if !group.contains(g) {
                return Err(Error::BadParams(format!(
                    "grade {g} does not belong to {group}"
                )));
            }
        }
        let mut table = HashMap::new();
        for ((i, j), row) in structure {
            if i >= dim || j >= dim {
                return Err(Error::BadParams(format!(
                    "structure key ({i},{j}) out of range for dimension {dim}"
                )));
            }
            let canon = canonicalize_sparse(row, dim)?;
            if !canon.is_empty() && table.insert((i, j), canon).is_some() {
                return Err(Error::BadParams(format!(
                    "duplicate structure entry for ({i},{j})"
                )));
            }
        }
        let unit = canonicalize_sparse(unit, dim)?
            .into_iter()
            .collect::<BTreeMap<_, _>>();
        Ok(Self {
            data: Arc::new(AlgebraData {
                name: name.into(),
                group,
                basis_labels,
                grades,
                structure: table,
                unit,
            }),
        })
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.data.group
    }

    pub fn dim(&self) -> usize {
        self.data.basis_labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.data.basis_labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.data.basis_labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.data.basis_labels.iter().position(|l| l == label)
    }

    pub fn grade(&self, i: usize) -> &GroupElement {
        &self.data.grades[i]
    }

    /// Basis indices of the homogeneous component of degree `g`, ascending.
    pub fn component_indices(&self, g: &GroupElement) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.grade(i) == g).collect()
    }

    pub fn component_dim(&self, g: &GroupElement) -> usize {
        self.component_indices(g).len()
    }

    /// Sparse product row for a basis pair; empty slice means zero product.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.data
            .structure
            .get(&(i, j))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// All nonzero structure rows sorted by key.
    pub fn structure_entries(&self) -> Vec<((usize, usize), &[(usize, Scalar)])> {
        let mut keys: Vec<&(usize, usize)> = self.data.structure.keys().collect();
        keys.sort();
        keys.into_iter()
            .map(|&k| (k, self.data.structure[&k].as_slice()))
            .collect()
    }

    pub fn basis_element(&self, i: usize) -> Element {
        assert!(i < self.dim(), "basis index out of range");
        Element {
            algebra: self.clone(),
            coeffs: BTreeMap::from([(i, Scalar::one())]),
        }
    }

    pub fn unit_element(&self) -> Element {
        Element {
            algebra: self.clone(),
            coeffs: self.data.unit.clone(),
        }
    }

    pub fn zero_element(&self) -> Element {
        Element {
            algebra: self.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn element_from_terms(
        &self,
        terms: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> Result<Element, Error> {
        let sparse = canonicalize_sparse(terms.into_iter().collect(), self.dim())?;
        Ok(Element {
            algebra: self.clone(),
            coeffs: sparse.into_iter().collect(),
        })
    }

    /// `b_i · v` as a sparse row.
    fn mul_basis_left(&self, i: usize, v: &[(usize, Scalar)]) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (j, c) in v {
            for (k, s) in self.basis_product(i, *j) {
                accumulate(&mut acc, *k, c.clone() * s.clone());
            }
        }
        acc.into_iter().collect()
    }

    /// `v · b_k` as a sparse row.
    fn mul_basis_right(&self, v: &[(usize, Scalar)], k: usize) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in v {
            for (t, s) in self.basis_product(*i, k) {
                accumulate(&mut acc, *t, c.clone() * s.clone());
            }
        }
        acc.into_iter().collect()
    }

    /// Checks the grading law, associativity over all basis triples, and the
    /// unit law. Runs the associativity scan on the worker pool when the
    /// `parallel` feature is enabled.
    pub fn validate(&self) -> ValidationReport {
        #[cfg(feature = "parallel")]
        {
            crate::exec::install(|| self.validate_impl(true))
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.validate_impl(false)
        }
    }

    /// Single-threaded validation; reference twin of [`Self::validate`].
    pub fn validate_seq(&self) -> ValidationReport {
        self.validate_impl(false)
    }

    fn validate_impl(&self, parallel: bool) -> ValidationReport {
        let dim = self.dim();
        let group = self.group();

        let mut grading_violations = Vec::new();
        for ((i, j), row) in self.structure_entries() {
            let expected = group.add(self.grade(i), self.grade(j));
            for (k, _) in row {
                if self.grade(*k) != &expected {
                    grading_violations.push(GradingViolation {
                        left: i,
                        right: j,
                        target: *k,
                    });
                }
            }
        }

        // Partner lists let the associativity scan skip triples where both
        // sides are trivially zero: (b_i b_j) b_k = b_i (b_j b_k) = 0 whenever
        // b_i b_j = 0 and b_j b_k = 0.
        let mut lefts: Vec<Vec<usize>> = vec![Vec::new(); dim];
        let mut rights: Vec<Vec<usize>> = vec![Vec::new(); dim];
        for &(i, j) in self.data.structure.keys() {
            lefts[j].push(i);
            rights[i].push(j);
        }
        for list in lefts.iter_mut().chain(rights.iter_mut()) {
            list.sort_unstable();
        }

        let check_middle = |j: usize| -> Vec<(usize, usize, usize)> {
            let mut bad = Vec::new();
            let mut has_left = vec![false; dim];
            for &i in &lefts[j] {
                has_left[i] = true;
            }
            for &i in &lefts[j] {
                let left_row = self.basis_product(i, j);
                for k in 0..dim {
                    let lhs = self.mul_basis_right(left_row, k);
                    let rhs = self.mul_basis_left(i, self.basis_product(j, k));
                    if lhs != rhs {
                        bad.push((i, j, k));
                    }
                }
            }
            for &k in &rights[j] {
                let right_row = self.basis_product(j, k);
                for i in 0..dim {
                    if has_left[i] {
                        continue; // covered above
                    }
                    let lhs = self.mul_basis_right(self.basis_product(i, j), k);
                    let rhs = self.mul_basis_left(i, right_row);
                    if lhs != rhs {
                        bad.push((i, j, k));
                    }
                }
            }
            bad.sort_unstable();
            bad
        };

        let associativity_violations: Vec<(usize, usize, usize)> = if parallel {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                (0..dim)
                    .into_par_iter()
                    .map(check_middle)
                    .collect::<Vec<_>>()
                    .into_iter()
                    .flatten()
                    .collect()
            }
            #[cfg(not(feature = "parallel"))]
            unreachable!()
        } else {
            (0..dim).flat_map(check_middle).collect()
        };

        let unit_row: SparseVec = self.data.unit.iter().map(|(&i, c)| (i, c.clone())).collect();
        let mut unit_violations = Vec::new();
        for i in 0..dim {
            let expected = vec![(i, Scalar::one())];
            if self.mul_basis_right(&unit_row, i) != expected {
                unit_violations.push(UnitViolation {
                    basis: i,
                    side: Side::Left,
                });
            }
            if self.mul_basis_left(i, &unit_row) != expected {
                unit_violations.push(UnitViolation {
                    basis: i,
                    side: Side::Right,
                });
            }
        }

        ValidationReport {
            grading_violations,
            associativity_violations,
            unit_violations,
        }
    }

    /// First basis pair `(i, j)` with `b_i b_j != b_j b_i`, or `None` if the
    /// algebra is commutative.
    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        let dim = self.dim();
        for i in 0..dim {
            for j in i + 1..dim {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }
}

fn canonicalize_sparse(terms: Vec<(usize, Scalar)>, dim: usize) -> Result<SparseVec, Error> {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (i, c) in terms {
        if i >= dim {
            return Err(Error::BadParams(format!(
                "basis index {i} out of range for dimension {dim}"
            )));
        }
        accumulate(&mut acc, i, c);
    }
    Ok(acc.into_iter().collect())
}

fn accumulate(acc: &mut BTreeMap<usize, Scalar>, key: usize, value: Scalar) {
    if value.is_zero() {
        return;
    }
    match acc.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get().clone() + value;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// Sparse rational vector over an algebra's basis. No zero coefficients are
/// stored; iteration order is ascending basis index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    algebra: GradedAlgebra,
    coeffs: BTreeMap<usize, Scalar>,
}

impl Element {
    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }

    /// Dense coordinate vector over the full basis.
    pub fn coordinates(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.algebra.dim()];
        for (&i, c) in &self.coeffs {
            v[i] = c.clone();
        }
        v
    }

    pub fn from_coordinates(algebra: &GradedAlgebra, v: &[Scalar]) -> Result<Self, Error> {
        if v.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                got: v.len(),
            });
        }
        algebra.element_from_terms(v.iter().cloned().enumerate())
    }

    /// True iff every stored index has grade `g` (the zero element is
    /// homogeneous of every degree).
    pub fn is_homogeneous(&self, g: &GroupElement) -> bool {
        self.coeffs.keys().all(|&i| self.algebra.grade(i) == g)
    }

    /// The common degree of the stored terms; `None` for zero or mixed
    /// elements.
    pub fn homogeneous_degree(&self) -> Option<GroupElement> {
        let mut it = self.coeffs.keys();
        let first = self.algebra.grade(*it.next()?).clone();
        it.all(|&i| self.algebra.grade(i) == &first)
            .then_some(first)
    }

    /// Projection onto the homogeneous component of degree `g`.
    pub fn component(&self, g: &GroupElement) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&i, _)| self.algebra.grade(i) == g)
                .map(|(&i, c)| (i, c.clone()))
                .collect(),
        }
    }

    /// Degrees appearing in the support.
    pub fn support_grades(&self) -> Vec<GroupElement> {
        let mut grades: Vec<GroupElement> = self
            .coeffs
            .keys()
            .map(|&i| self.algebra.grade(i).clone())
            .collect();
        grades.sort();
        grades.dedup();
        grades
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        if s.is_zero() {
            return self.algebra.zero_element();
        }
        Element {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&i, c)| (i, c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Bilinear extension of the structure table.
    pub fn multiply(&self, other: &Element) -> Result<Element, Error> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                let ab = a.clone() * b.clone();
                for (k, c) in self.algebra.basis_product(i, j) {
                    accumulate(&mut acc, *k, ab.clone() * c.clone());
                }
            }
        }
        Ok(Element {
            algebra: self.algebra.clone(),
            coeffs: acc,
        })
    }

    /// `self^k` by repeated multiplication (`k = 0` gives the unit).
    pub fn pow(&self, k: u32) -> Result<Element, Error> {
        let mut acc = self.algebra.unit_element();
        for _ in 0..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// True iff some power up to `dim + 1` vanishes. For a unital algebra this
    /// is equivalent to nilpotency of the left-multiplication operator.
    pub fn is_nilpotent(&self) -> bool {
        let mut x = self.clone();
        let mut steps = self.algebra.dim() + 1;
        while steps > 0 {
            if x.is_zero() {
                return true;
            }
            x = x.multiply(&x).expect("same algebra");
            steps /= 2;
            if steps == 0 {
                break;
            }
        }
        x.is_zero()
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert!(self.algebra == rhs.algebra, "elements from different algebras");
        let mut coeffs = self.coeffs.clone();
        for (&i, c) in &rhs.coeffs {
            accumulate(&mut coeffs, i, c.clone());
        }
        Element {
            algebra: self.algebra.clone(),
            coeffs,
        }
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self + &(-rhs)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&i, c)| (i, -c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&i, c)| format!("{} {}", format_scalar(c), self.algebra.label(i)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

// ---------------------------------------------------------------------------
// Validation report
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingViolation {
    pub left: usize,
    pub right: usize,
    pub target: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitViolation {
    pub basis: usize,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub grading_violations: Vec<GradingViolation>,
    pub associativity_violations: Vec<(usize, usize, usize)>,
    pub unit_violations: Vec<UnitViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.grading_violations.is_empty()
            && self.associativity_violations.is_empty()
            && self.unit_violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        write!(
            f,
            "invalid: {} grading, {} associativity, {} unit violations",
            self.grading_violations.len(),
            self.associativity_violations.len(),
            self.unit_violations.len()
        )
    }
}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

/// A subspace of an algebra's underlying vector space, held in RREF-canonical
/// coordinate form; two spans of the same subspace compare equal.
#[derive(Debug, Clone)]
pub struct Subspace {
    algebra: GradedAlgebra,
    rref: Rref,
}

impl Subspace {
    pub fn span(algebra: &GradedAlgebra, elements: &[Element]) -> Result<Self, Error> {
        let mut rows = Vec::with_capacity(elements.len());
        for e in elements {
            if e.algebra() != algebra {
                return Err(Error::AlgebraMismatch);
            }
            rows.push(e.coordinates());
        }
        if rows.is_empty() {
            rows.push(vec![Scalar::zero(); algebra.dim()]);
        }
        let rref = Matrix::from_rows(rows)?.rref();
        Ok(Self {
            algebra: algebra.clone(),
            rref,
        })
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.rref.rank
    }

    pub fn contains(&self, e: &Element) -> Result<bool, Error> {
        if e.algebra() != &self.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let rem = linalg::reduce_against_rref(&self.rref, &e.coordinates());
        Ok(rem.iter().all(Scalar::is_zero))
    }

    /// Canonical basis: the nonzero RREF rows as elements.
    pub fn basis_elements(&self) -> Vec<Element> {
        (0..self.rref.rank)
            .map(|r| {
                Element::from_coordinates(&self.algebra, self.rref.reduced.row(r))
                    .expect("row length matches dimension")
            })
            .collect()
    }

    /// Span of the degree-`g` projections of the basis. Equals the graded
    /// component of the subspace when the subspace is graded.
    pub fn component_span(&self, g: &GroupElement) -> Subspace {
        let projected: Vec<Element> = self
            .basis_elements()
            .iter()
            .map(|e| e.component(g))
            .collect();
        Subspace::span(&self.algebra, &projected).expect("same algebra")
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.dim() == other.dim()
            && (0..self.dim()).all(|r| self.rref.reduced.row(r) == other.rref.reduced.row(r))
    }
}

impl Eq for Subspace {}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// Componentwise direct sum. Units are orthogonal idempotents summing to the
/// unit; grading is inherited componentwise. Left labels are prefixed `l.`,
/// right labels `r.`.
pub fn direct_sum(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra, Error> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch);
    }
    let offset = a.dim();
    let mut labels: Vec<String> = a.labels().iter().map(|l| format!("l.{l}")).collect();
    labels.extend(b.labels().iter().map(|l| format!("r.{l}")));
    let mut grades: Vec<GroupElement> = (0..a.dim()).map(|i| a.grade(i).clone()).collect();
    grades.extend((0..b.dim()).map(|i| b.grade(i).clone()));

    let mut structure = Vec::new();
    for ((i, j), row) in a.structure_entries() {
        structure.push(((i, j), row.to_vec()));
    }
    for ((i, j), row) in b.structure_entries() {
        let shifted: Vec<(usize, Scalar)> =
            row.iter().map(|(k, c)| (k + offset, c.clone())).collect();
        structure.push(((i + offset, j + offset), shifted));
    }

    let mut unit: Vec<(usize, Scalar)> = a.unit_element().terms().map(|(i, c)| (i, c.clone())).collect();
    unit.extend(
        b.unit_element()
            .terms()
            .map(|(i, c)| (i + offset, c.clone())),
    );

    GradedAlgebra::from_parts(
        format!("sum_{}_{}", a.name(), b.name()),
        a.group().clone(),
        labels,
        grades,
        structure,
        unit,
    )
}

/// Tensor product with a trivially graded factor `w`: the basis is the set of
/// pairs, graded by the `a`-factor, with factorwise multiplication.
pub fn tensor_trivial(a: &GradedAlgebra, w: &GradedAlgebra) -> Result<GradedAlgebra, Error> {
    let zero_w = w.group().zero();
    for i in 0..w.dim() {
        if w.grade(i) != &zero_w {
            return Err(Error::NotTriviallyGraded {
                label: w.label(i).to_string(),
                degree: w.grade(i).to_string(),
            });
        }
    }
    let dw = w.dim();
    let pair = |i: usize, j: usize| i * dw + j;

    let mut labels = Vec::with_capacity(a.dim() * dw);
    let mut grades = Vec::with_capacity(a.dim() * dw);
    for i in 0..a.dim() {
        for j in 0..dw {
            labels.push(format!("{}*{}", a.label(i), w.label(j)));
            grades.push(a.grade(i).clone());
        }
    }

    let mut structure = Vec::new();
    for ((i, k), row_a) in a.structure_entries() {
        for ((j, l), row_w) in w.structure_entries() {
            let mut out = Vec::new();
            for (m, c1) in row_a {
                for (p, c2) in row_w {
                    out.push((pair(*m, *p), c1.clone() * c2.clone()));
                }
            }
            structure.push(((pair(i, j), pair(k, l)), out));
        }
    }

    let mut unit = Vec::new();
    for (i, c1) in a.unit_element().terms() {
        for (j, c2) in w.unit_element().terms() {
            unit.push((pair(i, j), c1.clone() * c2.clone()));
        }
    }

    GradedAlgebra::from_parts(
        format!("tensor_{}_{}", a.name(), w.name()),
        a.group().clone(),
        labels,
        grades,
        structure,
        unit,
    )
}

/// Twisted group algebra `K^alpha G`: basis `{X_g}` with
/// `X_g X_h = alpha(g,h) X_{g+h}` and `grade(X_g) = g`. The cocycle table is
/// given row-major in the lexicographic enumeration of `G` and is verified
/// against the 2-cocycle law; a violating triple is reported otherwise. The
/// unit is `alpha(0,0)^{-1} X_0` (the cocycle law pins `alpha(0,h)` and
/// `alpha(g,0)` to `alpha(0,0)`).
pub fn twisted_group_algebra(
    group: &FiniteAbelianGroup,
    alpha: &[Scalar],
) -> Result<GradedAlgebra, Error> {
    let n = group.order();
    if alpha.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            got: alpha.len(),
        });
    }
    if alpha.iter().any(Scalar::is_zero) {
        return Err(Error::BadParams("cocycle values must be nonzero".into()));
    }
    let elems = group.elements();
    let value = |g: usize, h: usize| &alpha[g * n + h];
    for g in 0..n {
        for h in 0..n {
            let gh = group.index_of(&group.add(&elems[g], &elems[h]));
            for k in 0..n {
                let hk = group.index_of(&group.add(&elems[h], &elems[k]));
                let lhs = value(g, h).clone() * value(gh, k).clone();
                let rhs = value(h, k).clone() * value(g, hk).clone();
                if lhs != rhs {
                    return Err(Error::CocycleLawViolated {
                        g: elems[g].to_string(),
                        h: elems[h].to_string(),
                        k: elems[k].to_string(),
                    });
                }
            }
        }
    }

    let labels: Vec<String> = elems.iter().map(group_basis_label).collect();
    let grades = elems.clone();
    let mut structure = Vec::new();
    for g in 0..n {
        for h in 0..n {
            let gh = group.index_of(&group.add(&elems[g], &elems[h]));
            structure.push(((g, h), vec![(gh, value(g, h).clone())]));
        }
    }
    let unit = vec![(0, Scalar::one() / value(0, 0).clone())];

    GradedAlgebra::from_parts(
        format!("twisted_{group}"),
        group.clone(),
        labels,
        grades,
        structure,
        unit,
    )
}

fn group_basis_label(g: &GroupElement) -> String {
    let parts: Vec<String> = g.components().iter().map(u64::to_string).collect();
    format!("X{}", parts.join("_"))
}

/// The two-dimensional algebra `K + cK` with `c^2 = 1`, `c` odd: the group
/// algebra of Z2 in basis `{1, c}`.
pub fn k_plus_ck() -> GradedAlgebra {
    let z2 = FiniteAbelianGroup::z2();
    let one = z2.zero();
    let odd = z2.element(vec![1]).unwrap();
    GradedAlgebra::from_parts(
        "KcK",
        z2,
        vec!["1".into(), "c".into()],
        vec![one, odd],
        vec![
            ((0, 0), vec![(0, Scalar::one())]),
            ((0, 1), vec![(1, Scalar::one())]),
            ((1, 0), vec![(1, Scalar::one())]),
            ((1, 1), vec![(0, Scalar::one())]),
        ],
        vec![(0, Scalar::one())],
    )
    .expect("fixture is well formed")
}

/// Which of the three families of finite-dimensional Z2-graded simple
/// algebras to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WallKind {
    /// Full matrix algebra `M_n(K)` with the trivial grading.
    A1 { n: usize },
    /// `M_{k,l}(K)`: block-diagonal part even, off-diagonal part odd.
    A2 { k: usize, l: usize },
    /// `M_n(K + cK)` with `c^2 = 1`: plain matrix units even, `c`-multiples odd.
    A3 { n: usize },
}

pub fn wall_fixture(kind: WallKind) -> Result<GradedAlgebra, Error> {
    let z2 = FiniteAbelianGroup::z2();
    let even = z2.zero();
    let odd = z2.element(vec![1]).unwrap();
    match kind {
        WallKind::A1 { n } => {
            if n == 0 {
                return Err(Error::BadParams("wall A1 needs n >= 1".into()));
            }
            let (labels, structure, unit) = matrix_units(n, |_, _| 0);
            let grades = vec![even; n * n];
            GradedAlgebra::from_parts(format!("wall_a1_n{n}"), z2, labels, grades, structure, unit)
        }
        WallKind::A2 { k, l } => {
            if l == 0 || k < l {
                return Err(Error::BadParams("wall A2 needs k >= l > 0".into()));
            }
            let n = k + l;
            let (labels, structure, unit) = matrix_units(n, |_, _| 0);
            let grades = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| if (i < k) == (j < k) { even.clone() } else { odd.clone() })
                .collect();
            GradedAlgebra::from_parts(
                format!("wall_a2_k{k}_l{l}"),
                z2,
                labels,
                grades,
                structure,
                unit,
            )
        }
        WallKind::A3 { n } => {
            if n == 0 {
                return Err(Error::BadParams("wall A3 needs n >= 1".into()));
            }
            // basis: E_ij (parity 0) then cE_ij (parity 1); c is central, c^2 = 1
            let idx = |p: usize, i: usize, j: usize| p * n * n + i * n + j;
            let mut labels = Vec::new();
            let mut grades = Vec::new();
            for p in 0..2 {
                for i in 0..n {
                    for j in 0..n {
                        let prefix = if p == 0 { "" } else { "c" };
                        labels.push(format!("{prefix}E{}_{}", i + 1, j + 1));
                        grades.push(if p == 0 { even.clone() } else { odd.clone() });
                    }
                }
            }
            let mut structure = Vec::new();
            for p in 0..2 {
                for q in 0..2 {
                    for i in 0..n {
                        for j in 0..n {
                            for m in 0..n {
                                structure.push((
                                    (idx(p, i, j), idx(q, j, m)),
                                    vec![(idx((p + q) % 2, i, m), Scalar::one())],
                                ));
                            }
                        }
                    }
                }
            }
            let unit = (0..n).map(|i| (idx(0, i, i), Scalar::one())).collect();
            GradedAlgebra::from_parts(format!("wall_a3_n{n}"), z2, labels, grades, structure, unit)
        }
    }
}

fn matrix_units(
    n: usize,
    _grade: impl Fn(usize, usize) -> usize,
) -> (
    Vec<String>,
    Vec<((usize, usize), Vec<(usize, Scalar)>)>,
    Vec<(usize, Scalar)>,
) {
    let idx = |i: usize, j: usize| i * n + j;
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("E{}_{}", i + 1, j + 1));
        }
    }
    let mut structure = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                structure.push(((idx(i, j), idx(j, m)), vec![(idx(i, m), Scalar::one())]));
            }
        }
    }
    let unit = (0..n).map(|i| (idx(i, i), Scalar::one())).collect();
    (labels, structure, unit)
}

/// `K[x,t]/(t^2 - 1, x^m)` with `deg x = 0`, `deg t = 1`: a commutative
/// Z2-graded algebra whose odd part escapes the radical.
pub fn poly_quotient(m: usize) -> Result<GradedAlgebra, Error> {
    if m == 0 {
        return Err(Error::BadParams("poly quotient needs m >= 1".into()));
    }
    let z2 = FiniteAbelianGroup::z2();
    let even = z2.zero();
    let odd = z2.element(vec![1]).unwrap();
    let mut labels = Vec::new();
    let mut grades = Vec::new();
    for i in 0..m {
        labels.push(format!("x{i}"));
        grades.push(even.clone());
    }
    for i in 0..m {
        labels.push(format!("tx{i}"));
        grades.push(odd.clone());
    }
    // index: x^i -> i, t x^i -> m + i
    let mut structure = Vec::new();
    for p in 0..2 {
        for q in 0..2 {
            for i in 0..m {
                for j in 0..m {
                    if i + j >= m {
                        continue;
                    }
                    let target = ((p + q) % 2) * m + i + j;
                    structure.push(((p * m + i, q * m + j), vec![(target, Scalar::one())]));
                }
            }
        }
    }
    GradedAlgebra::from_parts(
        format!("polyquot_m{m}"),
        z2,
        labels,
        grades,
        structure,
        vec![(0, Scalar::one())],
    )
}

/// `K[x]/(x^m)` with the trivial Z2 grading (everything even).
pub fn truncated_poly_trivial(m: usize) -> Result<GradedAlgebra, Error> {
    if m == 0 {
        return Err(Error::BadParams("truncated polynomial needs m >= 1".into()));
    }
    let z2 = FiniteAbelianGroup::z2();
    let even = z2.zero();
    let labels = (0..m).map(|i| format!("x{i}")).collect();
    let grades = vec![even; m];
    let mut structure = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i + j < m {
                structure.push(((i, j), vec![(i + j, Scalar::one())]));
            }
        }
    }
    GradedAlgebra::from_parts(
        format!("xquot_m{m}"),
        z2,
        labels,
        grades,
        structure,
        vec![(0, Scalar::one())],
    )
}

/// The one-dimensional algebra `K` with the trivial Z2 grading.
pub fn scalar_field_z2() -> GradedAlgebra {
    truncated_poly_trivial(1).expect("m = 1 is valid")
}

/// Z2xZ2 twisted by the bilinear cocycle `alpha(g,h) = (-1)^{g2 h1}`: the
/// degree-(1,0) and degree-(0,1) basis elements anticommute, giving a
/// commutation-factor value of -1 on that pair of degrees.
pub fn twisted_z2z2_anticommuting() -> GradedAlgebra {
    let g = FiniteAbelianGroup::new(vec![2, 2]).expect("orders are positive");
    let elems = g.elements();
    let mut alpha = Vec::new();
    for a in &elems {
        for b in &elems {
            let exp = a.components()[1] * b.components()[0];
            alpha.push(if exp % 2 == 0 {
                Scalar::one()
            } else {
                -Scalar::one()
            });
        }
    }
    twisted_group_algebra(&g, &alpha).expect("bilinear tables satisfy the cocycle law")
}
