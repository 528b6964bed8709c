//! Jacobson radical of a finite-dimensional algebra in characteristic zero.
//!
//! The radical is the kernel of the trace form `(x, y) -> tr(L_{xy})` of the
//! left regular representation; since `L` is multiplicative this is the
//! Gram-matrix kernel of `tr(L_i L_j)` over the basis. The graded components
//! are returned alongside and their membership in the radical is verified
//! rather than assumed, so corrupted user input surfaces as a failed check
//! instead of silent misclassification.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::algebra::{GradedAlgebra, Subspace};
use crate::group::GroupElement;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Radical of an algebra with its graded pieces.
#[derive(Debug, Clone)]
pub struct Radical {
    pub subspace: Subspace,
    /// Span of the degree-`g` projections of the radical basis, for each
    /// degree that occurs; these are the components `J(A)_g` when `graded`
    /// holds.
    pub components: BTreeMap<GroupElement, Subspace>,
    /// True iff every homogeneous projection of the radical basis lies back
    /// in the radical.
    pub graded: bool,
}

impl Radical {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn component_dim(&self, g: &GroupElement) -> usize {
        self.components.get(g).map_or(0, Subspace::dim)
    }
}

pub fn jacobson_radical(a: &GradedAlgebra) -> Radical {
    let dim = a.dim();

    // Sparse left-multiplication operators: entries (row, col) -> value of
    // L_i, where L_i(b_q) = b_i b_q.
    let mut left: Vec<HashMap<(usize, usize), Scalar>> = vec![HashMap::new(); dim];
    for i in 0..dim {
        for q in 0..dim {
            for (k, c) in a.basis_product(i, q) {
                left[i].insert((*k, q), c.clone());
            }
        }
    }

    // Gram matrix of the trace form: tr(L_i L_j) via sparse dot products.
    let mut gram = Matrix::zero(dim, dim);
    for i in 0..dim {
        for j in 0..=i {
            let mut tr = Scalar::zero();
            for ((p, q), v) in &left[i] {
                if let Some(w) = left[j].get(&(*q, *p)) {
                    tr += v.clone() * w.clone();
                }
            }
            *gram.get_mut(i, j) = tr.clone();
            *gram.get_mut(j, i) = tr;
        }
    }

    let kernel = gram.kernel_basis();
    let elements: Vec<_> = kernel
        .iter()
        .map(|v| crate::algebra::Element::from_coordinates(a, v).expect("kernel length"))
        .collect();
    let subspace = Subspace::span(a, &elements).expect("same algebra");

    let mut components = BTreeMap::new();
    let mut graded = true;
    let basis = subspace.basis_elements();
    for e in &basis {
        for g in e.support_grades() {
            let projection = e.component(&g);
            if !subspace.contains(&projection).expect("same algebra") {
                graded = false;
            }
            components.entry(g).or_insert_with(Vec::new).push(projection);
        }
    }
    let components = components
        .into_iter()
        .map(|(g, parts)| (g, Subspace::span(a, &parts).expect("same algebra")))
        .collect();

    Radical {
        subspace,
        components,
        graded,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{k_plus_ck, poly_quotient, truncated_poly_trivial, wall_fixture, WallKind};
    use crate::grassmann::materialize;

    #[test]
    fn semisimple_fixtures_have_zero_radical() {
        assert_eq!(jacobson_radical(&k_plus_ck()).dim(), 0);
        let a1 = wall_fixture(WallKind::A1 { n: 2 }).unwrap();
        assert_eq!(jacobson_radical(&a1).dim(), 0);
        let a3 = wall_fixture(WallKind::A3 { n: 2 }).unwrap();
        assert_eq!(jacobson_radical(&a3).dim(), 0);
    }

    #[test]
    fn grassmann_radical_is_the_augmentation_ideal() {
        let e2 = materialize(2).unwrap();
        let rad = jacobson_radical(&e2);
        assert_eq!(rad.dim(), 3);
        for expected in 1..4 {
            assert!(rad.subspace.contains(&e2.basis_element(expected)).unwrap());
        }
        assert!(!rad.subspace.contains(&e2.basis_element(0)).unwrap());
        assert!(rad.graded);
    }

    #[test]
    fn nilpotent_line_radical() {
        let a = truncated_poly_trivial(2).unwrap();
        let rad = jacobson_radical(&a);
        assert_eq!(rad.dim(), 1);
        assert!(rad.subspace.contains(&a.basis_element(1)).unwrap());
    }

    #[test]
    fn radical_basis_is_nilpotent_and_ideal() {
        let e3 = materialize(3).unwrap();
        let rad = jacobson_radical(&e3);
        assert_eq!(rad.dim(), 7);
        let basis = rad.subspace.basis_elements();
        for v in &basis {
            assert!(v.is_nilpotent());
        }
        // two-sided ideal: A.J and J.A stay inside J
        for i in 0..e3.dim() {
            let b = e3.basis_element(i);
            for v in &basis {
                assert!(rad.subspace.contains(&b.multiply(v).unwrap()).unwrap());
                assert!(rad.subspace.contains(&v.multiply(&b).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn radical_components_split_by_degree() {
        let a = poly_quotient(3).unwrap();
        let rad = jacobson_radical(&a);
        // J = span{x, x^2, tx, tx^2}
        assert_eq!(rad.dim(), 4);
        assert!(rad.graded);
        let even = a.group().zero();
        let odd = a.group().element(vec![1]).unwrap();
        assert_eq!(rad.component_dim(&even), 2);
        assert_eq!(rad.component_dim(&odd), 2);
        // t itself escapes the radical
        assert!(!rad.subspace.contains(&a.basis_element(3)).unwrap());
    }
}
