//! Linear maps between graded algebras, given by images of basis elements.

use crate::algebra::{Element, GradedAlgebra};
use crate::error::Error;
use crate::linalg::Matrix;

/// A linear map determined by one target element per source basis index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    source: GradedAlgebra,
    target: GradedAlgebra,
    images: Vec<Element>,
}

/// Outcome of the graded-homomorphism check: degree preservation on the
/// basis, unit preservation, and multiplicativity on all basis pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub graded: bool,
    pub ungraded_basis: Option<usize>,
    pub unit_preserved: bool,
    pub multiplicative_witness: Option<(usize, usize)>,
}

impl HomomorphismReport {
    pub fn is_graded_homomorphism(&self) -> bool {
        self.graded && self.unit_preserved && self.multiplicative_witness.is_none()
    }
}

impl GradedMap {
    pub fn new(
        source: &GradedAlgebra,
        target: &GradedAlgebra,
        images: Vec<Element>,
    ) -> Result<Self, Error> {
        if source.group() != target.group() {
            return Err(Error::GroupMismatch);
        }
        if images.len() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                got: images.len(),
            });
        }
        for img in &images {
            if img.algebra() != target {
                return Err(Error::AlgebraMismatch);
            }
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(algebra: &GradedAlgebra) -> Self {
        let images = (0..algebra.dim()).map(|i| algebra.basis_element(i)).collect();
        Self {
            source: algebra.clone(),
            target: algebra.clone(),
            images,
        }
    }

    pub fn source(&self) -> &GradedAlgebra {
        &self.source
    }

    pub fn target(&self) -> &GradedAlgebra {
        &self.target
    }

    pub fn image(&self, i: usize) -> &Element {
        &self.images[i]
    }

    /// Linear extension to arbitrary elements.
    pub fn apply(&self, e: &Element) -> Result<Element, Error> {
        if e.algebra() != &self.source {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = self.target.zero_element();
        for (i, c) in e.terms() {
            out = &out + &self.images[i].scale(c);
        }
        Ok(out)
    }

    /// `other . self`: first apply `self`, then `other`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap, Error> {
        if self.target != other.source {
            return Err(Error::AlgebraMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|img| other.apply(img))
            .collect::<Result<Vec<_>, _>>()?;
        GradedMap::new(&self.source, &other.target, images)
    }

    /// Checks degree preservation on every basis element (zero images pass),
    /// unit preservation, and multiplicativity on all basis pairs.
    pub fn homomorphism_report(&self) -> HomomorphismReport {
        let mut ungraded_basis = None;
        for i in 0..self.source.dim() {
            if !self.images[i].is_homogeneous(self.source.grade(i)) {
                ungraded_basis = Some(i);
                break;
            }
        }

        let unit_preserved = self
            .apply(&self.source.unit_element())
            .map(|u| u == self.target.unit_element())
            .unwrap_or(false);

        let mut multiplicative_witness = None;
        'outer: for i in 0..self.source.dim() {
            for j in 0..self.source.dim() {
                let product = self
                    .source
                    .basis_element(i)
                    .multiply(&self.source.basis_element(j))
                    .expect("same algebra");
                let lhs = self.apply(&product).expect("same algebra");
                let rhs = self.images[i]
                    .multiply(&self.images[j])
                    .expect("same algebra");
                if lhs != rhs {
                    multiplicative_witness = Some((i, j));
                    break 'outer;
                }
            }
        }

        HomomorphismReport {
            graded: ungraded_basis.is_none(),
            ungraded_basis,
            unit_preserved,
            multiplicative_witness,
        }
    }

    pub fn is_graded_homomorphism(&self) -> bool {
        self.homomorphism_report().is_graded_homomorphism()
    }

    /// Kernel triviality via the rank of the image-coordinate matrix.
    pub fn is_injective(&self) -> bool {
        let rows: Vec<Vec<crate::scalar::Scalar>> =
            self.images.iter().map(Element::coordinates).collect();
        let m = Matrix::from_rows(rows).expect("uniform coordinate length");
        m.rank() == self.source.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::materialize;

    #[test]
    fn identity_map_is_graded_isomorphism() {
        let e2 = materialize(2).unwrap();
        let id = GradedMap::identity(&e2);
        assert!(id.is_graded_homomorphism());
        assert!(id.is_injective());
    }

    #[test]
    fn generator_inclusion_is_injective() {
        // E_1 -> E_2, 1 -> 1, e1 -> e1
        let e1 = materialize(1).unwrap();
        let e2 = materialize(2).unwrap();
        let map = GradedMap::new(
            &e1,
            &e2,
            vec![e2.basis_element(0), e2.basis_element(1)],
        )
        .unwrap();
        assert!(map.is_graded_homomorphism());
        assert!(map.is_injective());
    }

    #[test]
    fn collapsing_map_is_homomorphism_but_not_injective() {
        // E_1 -> E_1, 1 -> 1, e1 -> 0
        let e1 = materialize(1).unwrap();
        let map = GradedMap::new(
            &e1,
            &e1,
            vec![e1.basis_element(0), e1.zero_element()],
        )
        .unwrap();
        assert!(map.is_graded_homomorphism());
        assert!(!map.is_injective());
    }

    #[test]
    fn composition_applies_in_order() {
        let e1 = materialize(1).unwrap();
        let e2 = materialize(2).unwrap();
        let inc = GradedMap::new(&e1, &e2, vec![e2.basis_element(0), e2.basis_element(1)]).unwrap();
        let id2 = GradedMap::identity(&e2);
        let comp = inc.compose(&id2).unwrap();
        assert_eq!(comp, inc);
        assert!(matches!(
            id2.compose(&inc),
            Err(Error::AlgebraMismatch)
        ));
    }

    #[test]
    fn non_multiplicative_map_is_flagged() {
        // E_1 -> E_1, e1 -> 1 breaks e1^2 = 0
        let e1 = materialize(1).unwrap();
        let map = GradedMap::new(
            &e1,
            &e1,
            vec![e1.basis_element(0), e1.basis_element(0)],
        )
        .unwrap();
        let report = map.homomorphism_report();
        assert!(!report.graded);
        assert_eq!(report.multiplicative_witness, Some((1, 1)));
    }
}
