//! Bit-packed Grassmann algebra kernel and the Grassmann envelope.
//!
//! A blade is a machine word: bit `i` set means generator `e_{i+1}` is
//! present, so the canonical increasing product is implicit in the mask. The
//! product of two blades is zero iff the masks intersect; otherwise the result
//! is the union with a sign equal to the parity of the inversions between the
//! two increasing generator sequences, computed by shifted popcounts. This is
//! the performance core: one blade product is a handful of word operations.
//!
//! Two representations coexist: the native kernel (up to 64 generators) and
//! materialized structure constants (up to 12 generators) for interoperation
//! with the graded-algebra machinery; an exhaustive agreement test bridges
//! them.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::GradedAlgebra;
use crate::error::Error;
use crate::group::FiniteAbelianGroup;
use crate::scalar::Scalar;

/// Largest generator count for the native blade kernel.
pub const MAX_GENERATORS: usize = 64;

/// Largest generator count for materialized structure constants (2^n basis).
pub const MATERIALIZE_MAX: usize = 12;

/// A Grassmann monomial: bit `i` set means `e_{i+1}` is a factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u64);

impl Blade {
    pub fn mask(self) -> u64 {
        self.0
    }

    /// Number of generators in the monomial.
    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Z2 degree: parity of the generator count.
    pub fn parity(self) -> u64 {
        (self.0.count_ones() & 1) as u64
    }

    /// `1` for the empty blade, otherwise the concatenated generator names
    /// (`e1e3`).
    pub fn label(self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let mut out = String::new();
        for i in 0..64 {
            if self.0 >> i & 1 == 1 {
                out.push_str(&format!("e{}", i + 1));
            }
        }
        out
    }
}

/// Product of two blades: `None` when the supports intersect, otherwise the
/// union blade with the reordering sign.
#[inline]
pub fn blade_product(a: Blade, b: Blade) -> Option<(i8, Blade)> {
    if a.0 & b.0 != 0 {
        return None;
    }
    // Inversions: pairs (i in a, j in b) with j < i. Shifting `a` right by k
    // and intersecting with `b` counts exactly the pairs at distance k.
    let mut x = a.0 >> 1;
    let mut swaps = 0u32;
    while x != 0 {
        swaps += (x & b.0).count_ones();
        x >>= 1;
    }
    let sign = if swaps & 1 == 0 { 1 } else { -1 };
    Some((sign, Blade(a.0 | b.0)))
}

/// Sequential batch of blade products; reference twin of
/// [`blade_product_batch`].
pub fn blade_product_batch_seq(pairs: &[(Blade, Blade)]) -> Vec<Option<(i8, Blade)>> {
    pairs.iter().map(|&(a, b)| blade_product(a, b)).collect()
}

/// Batch of blade products, data-parallel when the `parallel` feature is
/// enabled.
#[cfg(feature = "parallel")]
pub fn blade_product_batch(pairs: &[(Blade, Blade)]) -> Vec<Option<(i8, Blade)>> {
    use rayon::prelude::*;
    crate::exec::install(|| {
        pairs
            .par_iter()
            .map(|&(a, b)| blade_product(a, b))
            .collect()
    })
}

#[cfg(not(feature = "parallel"))]
pub fn blade_product_batch(pairs: &[(Blade, Blade)]) -> Vec<Option<(i8, Blade)>> {
    blade_product_batch_seq(pairs)
}

/// Sparse multivector of `E_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrassmannElement {
    n: usize,
    terms: BTreeMap<Blade, Scalar>,
}

impl GrassmannElement {
    pub fn zero(n: usize) -> Result<Self, Error> {
        if n > MAX_GENERATORS {
            return Err(Error::TooLarge {
                n,
                max: MAX_GENERATORS,
            });
        }
        Ok(Self {
            n,
            terms: BTreeMap::new(),
        })
    }

    pub fn unit(n: usize) -> Result<Self, Error> {
        Self::from_terms(n, [(Blade(0), Scalar::one())])
    }

    /// The generator `e_i` (1-based).
    pub fn generator(n: usize, i: usize) -> Result<Self, Error> {
        if i == 0 || i > n {
            return Err(Error::BadParams(format!(
                "generator index {i} out of range 1..={n}"
            )));
        }
        Self::from_terms(n, [(Blade(1 << (i - 1)), Scalar::one())])
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Blade, Scalar)>,
    ) -> Result<Self, Error> {
        let mut out = Self::zero(n)?;
        for (blade, coeff) in terms {
            if n < 64 && blade.0 >> n != 0 {
                return Err(Error::BadParams(format!(
                    "blade {:#b} does not fit in {n} generators",
                    blade.0
                )));
            }
            out.add_term(blade, coeff);
        }
        Ok(out)
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Scalar)> {
        self.terms.iter().map(|(&b, c)| (b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, blade: Blade, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
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

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_size(other)?;
        let mut out = self.clone();
        for (&b, c) in &other.terms {
            out.add_term(b, c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(&b, c)| (b, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    /// Bilinear extension of the blade product; Z2-degree additivity holds by
    /// construction.
    pub fn multiply(&self, other: &Self) -> Result<Self, Error> {
        self.check_size(other)?;
        let mut out = Self::zero(self.n)?;
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                if let Some((sign, blade)) = blade_product(a, b) {
                    let mut coeff = ca.clone() * cb.clone();
                    if sign < 0 {
                        coeff = -coeff;
                    }
                    out.add_term(blade, coeff);
                }
            }
        }
        Ok(out)
    }

    fn check_size(&self, other: &Self) -> Result<(), Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

/// Materializes `E_n` as a structure-constant algebra: `2^n` basis elements
/// indexed by blade mask, graded over Z2 by popcount parity.
pub fn materialize(n: usize) -> Result<GradedAlgebra, Error> {
    if n > MATERIALIZE_MAX {
        return Err(Error::TooLarge {
            n,
            max: MATERIALIZE_MAX,
        });
    }
    let dim = 1usize << n;
    let z2 = FiniteAbelianGroup::z2();
    let labels: Vec<String> = (0..dim).map(|m| Blade(m as u64).label()).collect();
    let grades = (0..dim)
        .map(|m| z2.element(vec![Blade(m as u64).parity()]).unwrap())
        .collect();
    let mut structure = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if let Some((sign, blade)) = blade_product(Blade(i as u64), Blade(j as u64)) {
                let coeff = if sign < 0 { -Scalar::one() } else { Scalar::one() };
                structure.push(((i, j), vec![(blade.0 as usize, coeff)]));
            }
        }
    }
    GradedAlgebra::from_parts(
        format!("E{n}"),
        z2,
        labels,
        grades,
        structure,
        vec![(0, Scalar::one())],
    )
}

/// Recipe for a Grassmann envelope: a Z2-graded coefficient algebra and the
/// truncation size of the Grassmann factor.
#[derive(Debug, Clone)]
pub struct EnvelopeSpec {
    pub c: GradedAlgebra,
    pub n: usize,
}

/// The Grassmann envelope of `spec.c` over `E_n`: basis pairs
/// `(blade, basis of c)` with matching parity, ordered lexicographically by
/// `(blade mask, c index)`; products carry the blade sign.
pub fn envelope(spec: &EnvelopeSpec) -> Result<GradedAlgebra, Error> {
    let c = &spec.c;
    let n = spec.n;
    if n == 0 {
        return Err(Error::BadParams("envelope needs n >= 1".into()));
    }
    if n > MATERIALIZE_MAX {
        return Err(Error::TooLarge {
            n,
            max: MATERIALIZE_MAX,
        });
    }
    if !c.group().is_z2() {
        return Err(Error::GroupMismatch);
    }
    if !c.validate().is_valid() {
        return Err(Error::PreconditionViolated(format!(
            "coefficient algebra `{}` fails validation",
            c.name()
        )));
    }

    let masks = 1u64 << n;
    // basis: (blade, c-basis index) with parity(blade) = degree(c index)
    let mut pairs: Vec<(Blade, usize)> = Vec::new();
    for mask in 0..masks {
        let blade = Blade(mask);
        for ci in 0..c.dim() {
            if c.grade(ci).components()[0] == blade.parity() {
                pairs.push((blade, ci));
            }
        }
    }
    let index_of: std::collections::HashMap<(u64, usize), usize> = pairs
        .iter()
        .enumerate()
        .map(|(idx, &(b, ci))| ((b.0, ci), idx))
        .collect();

    let z2 = FiniteAbelianGroup::z2();
    let labels: Vec<String> = pairs
        .iter()
        .map(|&(b, ci)| format!("{}*{}", b.label(), c.label(ci)))
        .collect();
    let grades = pairs
        .iter()
        .map(|&(b, _)| z2.element(vec![b.parity()]).unwrap())
        .collect();

    let mut structure = Vec::new();
    for (li, &(b1, c1)) in pairs.iter().enumerate() {
        for (ri, &(b2, c2)) in pairs.iter().enumerate() {
            let Some((sign, blade)) = blade_product(b1, b2) else {
                continue;
            };
            let mut row = Vec::new();
            for (k, coeff) in c.basis_product(c1, c2) {
                // grading of c guarantees parity(blade) = degree(k)
                let target = index_of[&(blade.0, *k)];
                let mut value = coeff.clone();
                if sign < 0 {
                    value = -value;
                }
                row.push((target, value));
            }
            if !row.is_empty() {
                structure.push(((li, ri), row));
            }
        }
    }

    let mut unit = Vec::new();
    for (ci, coeff) in c.unit_element().terms() {
        if c.grade(ci).is_zero() {
            unit.push((index_of[&(0, ci)], coeff.clone()));
        }
    }

    GradedAlgebra::from_parts(
        format!("env_{}_N{}", c.name(), n),
        z2,
        labels,
        grades,
        structure,
        unit,
    )
}

/// Truncation size sufficient for multilinear identity tests of degree `d` on
/// an envelope: one blade per substituted variable suffices for evaluation on
/// basis elements, and `d` disjoint single-generator blades never vanish
/// spuriously, so `N = d`.
pub fn truncation_bound(d: usize, _c: &GradedAlgebra) -> usize {
    d
}
