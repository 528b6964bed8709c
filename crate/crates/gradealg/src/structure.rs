//! Constructive structure theory for Z2-graded algebras whose determined
//! commutation factors match the Grassmann table.
//!
//! From a witness tuple of odd elements with nonzero product, the module
//! materializes the Grassmann subalgebra they generate, verifies the
//! monomial-to-blade isomorphism pair by pair instead of assuming it, wires
//! the stages into a direct-system chain with exhaustively checked
//! composition laws, classifies finitely generated graded subalgebras into
//! Types I-IV, and runs the variety-equivalence surrogates for a coefficient
//! algebra.

use std::collections::BTreeMap;

use num_traits::One;

use crate::algebra::{Element, GradedAlgebra, Subspace};
use crate::error::Error;
use crate::grassmann::{self, blade_product, Blade, EnvelopeSpec};
use crate::group::GroupElement;
use crate::linalg::Matrix;
use crate::map::GradedMap;
use crate::radical::jacobson_radical;
use crate::regularity::{
    extract_partial_bicharacter, is_k_regular, regular_witness, Bicharacter, TupleOutcome,
    TupleSelection,
};
use crate::scalar::Scalar;

/// A materialized Grassmann subalgebra of an ambient algebra, with both the
/// inclusion and the monomial-to-blade isomorphism verified.
#[derive(Debug, Clone)]
pub struct GrassmannWitness {
    pub ambient: GradedAlgebra,
    /// Odd generators, in witness order.
    pub generators: Vec<Element>,
    /// The span of the generator monomials as a structure-constant algebra.
    pub f_n: GradedAlgebra,
    /// `f_n -> ambient`, monomial basis to actual monomials.
    pub inclusion: GradedMap,
    /// `f_n -> materialize(n)`, monomial basis to blades.
    pub nu: GradedMap,
}

impl GrassmannWitness {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }
}

fn odd_degree(a: &GradedAlgebra) -> GroupElement {
    a.group().element(vec![1]).expect("Z2 checked by caller")
}

/// Z2 grading plus agreement of every determined commutation factor with the
/// Grassmann table. Validation is the caller's responsibility (so chains can
/// validate the ambient once).
fn check_beta_commutative(a: &GradedAlgebra) -> Result<(), Error> {
    if !a.group().is_z2() {
        return Err(Error::PreconditionViolated(format!(
            "`{}` is graded by {}, not Z2",
            a.name(),
            a.group()
        )));
    }
    let partial = extract_partial_bicharacter(a).map_err(|e| {
        Error::PreconditionViolated(format!("`{}` is not beta-commutative: {e}", a.name()))
    })?;
    if !partial.agrees_with(&Bicharacter::grassmann_z2()) {
        return Err(Error::PreconditionViolated(format!(
            "`{}` has a determined commutation factor differing from the Grassmann table",
            a.name()
        )));
    }
    Ok(())
}

fn validate_ambient(a: &GradedAlgebra) -> Result<(), Error> {
    let report = a.validate();
    if !report.is_valid() {
        return Err(Error::PreconditionViolated(format!(
            "`{}` fails validation: {report}",
            a.name()
        )));
    }
    Ok(())
}

/// Finds odd generators with nonzero product by lexicographic search and
/// materializes the span of their monomials. All `2^n` monomials are checked
/// linearly independent by rank, and the product law against blade signs is
/// verified on every monomial pair, which simultaneously certifies the
/// monomial-to-blade map multiplicative.
pub fn build_f_n(a: &GradedAlgebra, n: usize) -> Result<GrassmannWitness, Error> {
    validate_ambient(a)?;
    check_beta_commutative(a)?;
    build_f_n_prevalidated(a, n)
}

fn build_f_n_prevalidated(a: &GradedAlgebra, n: usize) -> Result<GrassmannWitness, Error> {
    if n > grassmann::MATERIALIZE_MAX {
        return Err(Error::TooLarge {
            n,
            max: grassmann::MATERIALIZE_MAX,
        });
    }
    let odd = odd_degree(a);
    let tuple = vec![odd; n];
    let TupleOutcome::Witness(indices) = regular_witness(a, &tuple) else {
        return Err(Error::NoWitness(format!(
            "`{}` admits no nonzero product of {n} odd elements",
            a.name()
        )));
    };
    let generators: Vec<Element> = indices.iter().map(|&i| a.basis_element(i)).collect();

    // Monomials in increasing generator order, built by peeling the highest
    // factor: m_S = m_{S minus top bit} . gen[top].
    let size = 1usize << n;
    let mut monomials: Vec<Element> = Vec::with_capacity(size);
    monomials.push(a.unit_element());
    for mask in 1..size {
        let top = mask.ilog2() as usize;
        let rest = mask & !(1 << top);
        let m = monomials[rest].multiply(&generators[top])?;
        monomials.push(m);
    }

    let coords: Vec<Vec<Scalar>> = monomials.iter().map(Element::coordinates).collect();
    let rank = Matrix::from_rows(coords)?.rank();
    if rank != size {
        return Err(Error::IndependenceFailure(format!(
            "only {rank} of {size} generator monomials are linearly independent in `{}`",
            a.name()
        )));
    }

    // Verify the product law monomial pair by monomial pair against blade
    // signs; this is exactly multiplicativity of the blade map.
    for s in 0..size {
        for t in 0..size {
            let actual = monomials[s].multiply(&monomials[t])?;
            let expected = match blade_product(Blade(s as u64), Blade(t as u64)) {
                None => a.zero_element(),
                Some((sign, blade)) => {
                    let m = &monomials[blade.0 as usize];
                    if sign < 0 {
                        -m
                    } else {
                        m.clone()
                    }
                }
            };
            if actual != expected {
                return Err(Error::PreconditionViolated(format!(
                    "monomial product ({s:#b}, {t:#b}) in `{}` deviates from the blade law",
                    a.name()
                )));
            }
        }
    }

    let f_n = monomial_algebra(a.name(), n)?;
    let e_n = grassmann::materialize(n)?;

    let inclusion = GradedMap::new(&f_n, a, monomials)?;
    let nu = GradedMap::new(
        &f_n,
        &e_n,
        (0..size).map(|mask| e_n.basis_element(mask)).collect(),
    )?;

    for (map, what) in [(&inclusion, "inclusion"), (&nu, "monomial-to-blade map")] {
        if !map.is_graded_homomorphism() {
            return Err(Error::PreconditionViolated(format!(
                "{what} for `{}` is not a graded homomorphism",
                a.name()
            )));
        }
        if !map.is_injective() {
            return Err(Error::IndependenceFailure(format!(
                "{what} for `{}` is not injective",
                a.name()
            )));
        }
    }

    Ok(GrassmannWitness {
        ambient: a.clone(),
        generators,
        f_n,
        inclusion,
        nu,
    })
}

/// Abstract copy of `E_n` on the witness generators, labels `a1a3`-style.
fn monomial_algebra(ambient_name: &str, n: usize) -> Result<GradedAlgebra, Error> {
    let e_n = grassmann::materialize(n)?;
    let labels = (0..1usize << n)
        .map(|mask| {
            if mask == 0 {
                "1".to_string()
            } else {
                Blade(mask as u64).label().replace('e', "a")
            }
        })
        .collect();
    GradedAlgebra::from_parts(
        format!("F{n}_of_{ambient_name}"),
        e_n.group().clone(),
        labels,
        (0..e_n.dim()).map(|i| e_n.grade(i).clone()).collect(),
        e_n.structure_entries()
            .into_iter()
            .map(|(k, row)| (k, row.to_vec()))
            .collect(),
        vec![(0, Scalar::one())],
    )
}

/// The stages `F_1, ..., F_n_max` with all connecting maps, each verified to
/// be an injective graded homomorphism, plus the exhaustively checked
/// composition law.
#[derive(Debug, Clone)]
pub struct DirectSystemChain {
    /// `stages[k]` is the witness for `n = k + 1`.
    pub stages: Vec<GrassmannWitness>,
    maps: BTreeMap<(usize, usize), GradedMap>,
}

impl DirectSystemChain {
    pub fn n_max(&self) -> usize {
        self.stages.len()
    }

    /// The connecting map `F_n -> F_m` for `1 <= n <= m <= n_max`.
    pub fn map(&self, n: usize, m: usize) -> Option<&GradedMap> {
        self.maps.get(&(n, m))
    }
}

/// Builds every stage and connecting map and verifies injectivity,
/// gradedness, multiplicativity, the identity maps, and the composition law
/// on all index triples.
pub fn build_chain(a: &GradedAlgebra, n_max: usize) -> Result<DirectSystemChain, Error> {
    if n_max == 0 {
        return Err(Error::BadParams("chain needs n_max >= 1".into()));
    }
    validate_ambient(a)?;
    check_beta_commutative(a)?;

    let stages: Vec<GrassmannWitness> = (1..=n_max)
        .map(|n| build_f_n_prevalidated(a, n))
        .collect::<Result<_, _>>()?;

    let mut maps = BTreeMap::new();
    for n in 1..=n_max {
        for m in n..=n_max {
            let source = &stages[n - 1].f_n;
            let target = &stages[m - 1].f_n;
            let images = (0..source.dim()).map(|mask| target.basis_element(mask)).collect();
            let map = GradedMap::new(source, target, images)?;
            if !map.is_graded_homomorphism() || !map.is_injective() {
                return Err(Error::PreconditionViolated(format!(
                    "connecting map F_{n} -> F_{m} fails verification"
                )));
            }
            maps.insert((n, m), map);
        }
    }

    for n in 1..=n_max {
        if maps[&(n, n)] != GradedMap::identity(&stages[n - 1].f_n) {
            return Err(Error::PreconditionViolated(format!(
                "connecting map F_{n} -> F_{n} is not the identity"
            )));
        }
    }
    for p in 1..=n_max {
        for n in p..=n_max {
            for m in n..=n_max {
                let composed = maps[&(p, n)].compose(&maps[&(n, m)])?;
                if composed != maps[&(p, m)] {
                    return Err(Error::PreconditionViolated(format!(
                        "composition law fails at ({p}, {n}, {m})"
                    )));
                }
            }
        }
    }

    Ok(DirectSystemChain { stages, maps })
}

/// A verified injective graded homomorphism `materialize(n) -> a`, sending
/// each blade to the corresponding generator monomial.
pub fn embed_grassmann(a: &GradedAlgebra, n: usize) -> Result<GradedMap, Error> {
    let witness = build_f_n(a, n)?;
    let e_n = grassmann::materialize(n)?;
    let images = (0..e_n.dim())
        .map(|mask| witness.inclusion.image(mask).clone())
        .collect();
    let map = GradedMap::new(&e_n, a, images)?;
    if !map.is_graded_homomorphism() || !map.is_injective() {
        return Err(Error::PreconditionViolated(
            "embedding fails verification".into(),
        ));
    }
    Ok(map)
}

/// Span of the unital subalgebra generated by `elements`: iterated closure of
/// the span under pairwise products.
pub fn subalgebra_span(a: &GradedAlgebra, elements: &[Element]) -> Result<Subspace, Error> {
    let mut gens: Vec<Element> = vec![a.unit_element()];
    gens.extend_from_slice(elements);
    let mut span = Subspace::span(a, &gens)?;
    loop {
        let basis = span.basis_elements();
        let mut extended = basis.clone();
        for x in &basis {
            for y in &basis {
                extended.push(x.multiply(y)?);
            }
        }
        let next = Subspace::span(a, &extended)?;
        if next.dim() == span.dim() {
            return Ok(span);
        }
        span = next;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubalgebraType {
    I,
    II,
    III,
    IV,
}

impl std::fmt::Display for SubalgebraType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self {
            Self::I => "I",
            Self::II => "II",
            Self::III => "III",
            Self::IV => "IV",
        };
        write!(f, "{tag}")
    }
}

/// Outcome of the Types I-IV classification. All generator references are
/// positions in the original input list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeReport {
    pub type_tag: SubalgebraType,
    /// Generators removed by the redundancy reduction.
    pub removed_generators: Vec<usize>,
    /// Number of even generators kept.
    pub q: usize,
    /// Maximal length of a nonzero product of distinct odd generators
    /// (0 when there are none).
    pub l: usize,
    /// Number of extracted 3-dimensional odd blocks.
    pub r: usize,
    /// Dimension of the leftover block (Type IV); 0 otherwise.
    pub leftover_dim: usize,
    /// Odd generators realizing the maximal product.
    pub lambda_block: Vec<usize>,
    /// Generator pairs of the extracted blocks.
    pub e2_blocks: Vec<(usize, usize)>,
    /// Pairwise-annihilating leftover generators (Type III).
    pub annihilator_block: Vec<usize>,
    /// Leftover generators whose products fall back into the extracted span
    /// (Type IV).
    pub d_block: Vec<usize>,
    /// Even generators kept; they generate the coefficient algebra.
    pub c_generators: Vec<usize>,
    /// Dimension of the subalgebra generated by the even generators.
    pub c_dim: usize,
}

/// Classifies the graded subalgebra generated by homogeneous elements of a
/// beta-commutative ambient algebra, following the greedy block extraction:
/// a maximal full block first, then 3-dimensional odd blocks while some pair
/// multiplies outside the current span, then the leftover.
pub fn classify_subalgebra(
    a: &GradedAlgebra,
    generators: &[Element],
) -> Result<TypeReport, Error> {
    validate_ambient(a)?;
    check_beta_commutative(a)?;
    for (position, g) in generators.iter().enumerate() {
        if g.algebra() != a {
            return Err(Error::AlgebraMismatch);
        }
        if !g.is_zero() && g.homogeneous_degree().is_none() {
            return Err(Error::NotHomogeneous { position });
        }
    }

    // Redundancy reduction: drop any generator lying in the subalgebra
    // generated by the others, first match first, until stable.
    let mut kept: Vec<usize> = (0..generators.len()).collect();
    let mut removed = Vec::new();
    'reduce: loop {
        for (slot, &idx) in kept.iter().enumerate() {
            let others: Vec<Element> = kept
                .iter()
                .filter(|&&o| o != idx)
                .map(|&o| generators[o].clone())
                .collect();
            let closure = subalgebra_span(a, &others)?;
            if closure.contains(&generators[idx])? {
                removed.push(idx);
                kept.remove(slot);
                continue 'reduce;
            }
        }
        break;
    }

    let odd = odd_degree(a);
    let evens: Vec<usize> = kept
        .iter()
        .copied()
        .filter(|&i| generators[i].is_homogeneous(&a.group().zero()))
        .collect();
    let odds: Vec<usize> = kept
        .iter()
        .copied()
        .filter(|&i| generators[i].is_homogeneous(&odd))
        .collect();
    let q = evens.len();
    let n = kept.len();

    let c_span = subalgebra_span(
        a,
        &evens.iter().map(|&i| generators[i].clone()).collect::<Vec<_>>(),
    )?;
    let report_base = |type_tag, l, r, leftover_dim, lambda, blocks, annih, d_block| TypeReport {
        type_tag,
        removed_generators: removed.clone(),
        q,
        l,
        r,
        leftover_dim,
        lambda_block: lambda,
        e2_blocks: blocks,
        annihilator_block: annih,
        d_block,
        c_generators: evens.clone(),
        c_dim: c_span.dim(),
    };

    if odds.is_empty() {
        return Ok(report_base(
            SubalgebraType::I,
            0,
            0,
            0,
            Vec::new(),
            Vec::new(),
            Vec::new(),
            Vec::new(),
        ));
    }

    // Maximal nonzero product length over increasing-index subsets; repeats
    // vanish because odd elements square to zero under the Grassmann table.
    let odd_elems: Vec<Element> = odds.iter().map(|&i| generators[i].clone()).collect();
    let (l, lambda_slots) = longest_odd_product(&odd_elems)?;
    let lambda_block: Vec<usize> = lambda_slots.iter().map(|&s| odds[s]).collect();

    if l == n - q {
        return Ok(report_base(
            SubalgebraType::II,
            l,
            0,
            0,
            lambda_block,
            Vec::new(),
            Vec::new(),
            Vec::new(),
        ));
    }

    let mut span = subalgebra_span(
        a,
        &lambda_block
            .iter()
            .map(|&i| generators[i].clone())
            .collect::<Vec<_>>(),
    )?;
    let mut remaining: Vec<usize> = odds
        .iter()
        .copied()
        .filter(|i| !lambda_block.contains(i))
        .collect();
    let mut e2_blocks = Vec::new();

    loop {
        let mut extracted = None;
        'search: for ui in 0..remaining.len() {
            for vi in ui + 1..remaining.len() {
                let u = remaining[ui];
                let v = remaining[vi];
                let p = generators[u].multiply(&generators[v])?;
                if !p.is_zero() && !span.contains(&p)? {
                    extracted = Some((ui, vi, p));
                    break 'search;
                }
            }
        }
        let Some((ui, vi, p)) = extracted else {
            break;
        };
        let u = remaining[ui];
        let v = remaining[vi];
        let mut extended = span.basis_elements();
        extended.extend([generators[u].clone(), generators[v].clone(), p]);
        span = Subspace::span(a, &extended)?;
        e2_blocks.push((u, v));
        remaining.remove(vi);
        remaining.remove(ui);
    }

    let r = e2_blocks.len();
    if r == 0 {
        let mut annihilating = true;
        'pairs: for ui in 0..remaining.len() {
            for vi in ui + 1..remaining.len() {
                let p = generators[remaining[ui]].multiply(&generators[remaining[vi]])?;
                if !p.is_zero() {
                    annihilating = false;
                    break 'pairs;
                }
            }
        }
        if annihilating {
            return Ok(report_base(
                SubalgebraType::III,
                l,
                0,
                0,
                lambda_block,
                Vec::new(),
                remaining,
                Vec::new(),
            ));
        }
    }

    let leftover_dim = remaining.len();
    Ok(report_base(
        SubalgebraType::IV,
        l,
        r,
        leftover_dim,
        lambda_block,
        e2_blocks,
        Vec::new(),
        remaining,
    ))
}

/// Longest nonzero product over increasing-index subsets of `odds`, with the
/// lexicographically first witness of that length.
fn longest_odd_product(odds: &[Element]) -> Result<(usize, Vec<usize>), Error> {
    fn rec(
        odds: &[Element],
        start: usize,
        current: Option<&Element>,
        path: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) -> Result<(), Error> {
        for j in start..odds.len() {
            let next = match current {
                None => odds[j].clone(),
                Some(p) => p.multiply(&odds[j])?,
            };
            if next.is_zero() {
                continue;
            }
            path.push(j);
            if path.len() > best.len() {
                *best = path.clone();
            }
            rec(odds, j + 1, Some(&next), path, best)?;
            path.pop();
        }
        Ok(())
    }
    let mut best = Vec::new();
    let mut path = Vec::new();
    rec(odds, 0, None, &mut path, &mut best)?;
    Ok((best.len(), best))
}

/// Surrogate verdicts for the variety-equivalence triangle on a coefficient
/// algebra: commutativity plus the odd-part-escapes-radical criterion on one
/// side, envelope identities plus envelope regularity on the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyVerdict {
    pub commutative: bool,
    pub commutativity_witness: Option<(usize, usize)>,
    /// `dim C_1 > dim J(C)_1`.
    pub odd_escapes_radical: bool,
    pub c_dim: usize,
    /// Largest `k <= dim C + 1` with all degree tuples witnessed on C.
    pub c_regular_up_to: usize,
    pub envelope_satisfies_generators: bool,
    /// Largest `k <= 5` with all degree tuples witnessed on the envelope.
    pub envelope_k_regular_up_to: usize,
    pub equivalent: bool,
}

impl VarietyVerdict {
    /// The three surrogate criteria agree: commutative + fully regular up to
    /// the certified bound, commutative + odd part escaping the radical, and
    /// the envelope satisfying the generators and staying 5-regular.
    pub fn surrogates_agree(&self) -> bool {
        let by_regularity = self.commutative && self.c_regular_up_to == self.c_dim + 1;
        let by_envelope =
            self.envelope_satisfies_generators && self.envelope_k_regular_up_to >= 5;
        by_regularity == self.equivalent && by_envelope == self.equivalent
    }
}

/// Envelope truncation used by the variety check: degree-5 identity tests.
pub const VARIETY_ENVELOPE_N: usize = 5;

pub fn variety_equivalence_check(c: &GradedAlgebra) -> Result<VarietyVerdict, Error> {
    if !c.group().is_z2() {
        return Err(Error::GroupMismatch);
    }
    validate_ambient(c)?;

    let commutativity_witness = c.commutativity_witness();
    let commutative = commutativity_witness.is_none();

    let odd = odd_degree(c);
    let radical = jacobson_radical(c);
    let odd_escapes_radical = c.component_dim(&odd) > radical.component_dim(&odd);

    let c_dim = c.dim();
    let c_regular_up_to =
        is_k_regular(c, &TupleSelection::AllUpTo(c_dim + 1)).regular_up_to();

    let env = grassmann::envelope(&EnvelopeSpec {
        c: c.clone(),
        n: grassmann::truncation_bound(VARIETY_ENVELOPE_N, c),
    })?;
    let envelope_satisfies_generators =
        crate::identities::satisfies_grassmann_identities(&env)?.satisfied;
    let envelope_k_regular_up_to =
        is_k_regular(&env, &TupleSelection::AllUpTo(VARIETY_ENVELOPE_N)).regular_up_to();

    let equivalent = commutative && odd_escapes_radical;

    Ok(VarietyVerdict {
        commutative,
        commutativity_witness,
        odd_escapes_radical,
        c_dim,
        c_regular_up_to,
        envelope_satisfies_generators,
        envelope_k_regular_up_to,
        equivalent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_sum, k_plus_ck, scalar_field_z2};
    use crate::grassmann::{envelope, materialize};

    #[test]
    fn build_f_n_inside_grassmann() {
        let e4 = materialize(4).unwrap();
        let w = build_f_n(&e4, 3).unwrap();
        // first lexicographic witness: e1, e2, e3
        let expected: Vec<Element> = vec![
            e4.basis_element(1),
            e4.basis_element(2),
            e4.basis_element(4),
        ];
        assert_eq!(w.generators, expected);
        assert_eq!(w.f_n.dim(), 8);
        assert!(w.nu.is_graded_homomorphism());
        assert!(w.inclusion.is_injective());
    }

    #[test]
    fn build_f_n_inside_envelope() {
        let env = envelope(&EnvelopeSpec { c: k_plus_ck(), n: 4 }).unwrap();
        let w = build_f_n(&env, 4).unwrap();
        assert_eq!(w.f_n.dim(), 16);
        assert!(w.nu.is_injective());
    }

    #[test]
    fn build_f_n_rejects_group_algebra() {
        // beta(1,1) = +1 there, not the Grassmann value
        let err = build_f_n(&k_plus_ck(), 2);
        assert!(matches!(err, Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn build_f_n_no_witness_past_the_frontier() {
        let e2 = materialize(2).unwrap();
        assert!(matches!(build_f_n(&e2, 3), Err(Error::NoWitness(_))));
    }

    #[test]
    fn chain_inside_e6() {
        let e6 = materialize(6).unwrap();
        let chain = build_chain(&e6, 4).unwrap();
        assert_eq!(chain.n_max(), 4);
        assert_eq!(chain.map(2, 4).unwrap().source().dim(), 4);
        assert!(chain.map(4, 2).is_none());
    }

    #[test]
    fn chain_single_stage() {
        let e2 = materialize(2).unwrap();
        let chain = build_chain(&e2, 1).unwrap();
        assert_eq!(chain.n_max(), 1);
        assert_eq!(
            chain.map(1, 1).unwrap(),
            &GradedMap::identity(&chain.stages[0].f_n)
        );
    }

    #[test]
    fn chain_inside_envelope() {
        let env = envelope(&EnvelopeSpec { c: k_plus_ck(), n: 5 }).unwrap();
        let chain = build_chain(&env, 3).unwrap();
        assert_eq!(chain.n_max(), 3);
    }

    #[test]
    fn embedding_into_larger_grassmann() {
        let e5 = materialize(5).unwrap();
        let map = embed_grassmann(&e5, 4).unwrap();
        assert_eq!(map.source().dim(), 16);
        assert!(map.is_injective());
        assert!(map.is_graded_homomorphism());
    }

    #[test]
    fn embedding_of_the_scalars() {
        let e3 = materialize(3).unwrap();
        let map = embed_grassmann(&e3, 0).unwrap();
        assert_eq!(map.source().dim(), 1);
        assert_eq!(map.image(0), &e3.unit_element());
    }

    #[test]
    fn classify_type_ii_full_block() {
        let e4 = materialize(4).unwrap();
        let gens = vec![
            e4.basis_element(1),
            e4.basis_element(2),
            e4.basis_element(4),
        ];
        let report = classify_subalgebra(&e4, &gens).unwrap();
        assert_eq!(report.type_tag, SubalgebraType::II);
        assert_eq!(report.q, 0);
        assert_eq!(report.l, 3);
        assert_eq!(report.lambda_block, vec![0, 1, 2]);
    }

    #[test]
    fn classify_type_ii_with_shorter_block() {
        // generators e1 and e2e3e4: product e1e2e3e4 != 0, so l = 2 = n - q
        let e4 = materialize(4).unwrap();
        let gens = vec![e4.basis_element(0b0001), e4.basis_element(0b1110)];
        let report = classify_subalgebra(&e4, &gens).unwrap();
        assert_eq!(report.type_tag, SubalgebraType::II);
        assert_eq!(report.l, 2);
    }

    #[test]
    fn classify_type_iii_annihilating_remainder() {
        // generators e1 and e1e2e3 of E_3: all pairwise products vanish
        let e3 = materialize(3).unwrap();
        let gens = vec![e3.basis_element(0b001), e3.basis_element(0b111)];
        let report = classify_subalgebra(&e3, &gens).unwrap();
        assert_eq!(report.type_tag, SubalgebraType::III);
        assert_eq!(report.q, 0);
        assert_eq!(report.l, 1);
        assert_eq!(report.annihilator_block.len(), 1);
    }

    #[test]
    fn classify_type_iv_two_planes() {
        let e2 = materialize(2).unwrap();
        let a = direct_sum(&e2, &e2).unwrap();
        // (e1,0), (e2,0), (0,e1), (0,e2)
        let gens = vec![
            a.basis_element(1),
            a.basis_element(2),
            a.basis_element(5),
            a.basis_element(6),
        ];
        let report = classify_subalgebra(&a, &gens).unwrap();
        assert_eq!(report.type_tag, SubalgebraType::IV);
        assert_eq!(report.l, 2);
        assert_eq!(report.r, 1);
        assert_eq!(report.leftover_dim, 0);
    }

    #[test]
    fn classify_type_i_even_generators() {
        let e2 = materialize(2).unwrap();
        let gens = vec![e2.basis_element(3)]; // e1e2, even
        let report = classify_subalgebra(&e2, &gens).unwrap();
        assert_eq!(report.type_tag, SubalgebraType::I);
        assert_eq!(report.q, 1);
        assert_eq!(report.c_dim, 2); // span{1, e1e2}
    }

    #[test]
    fn classify_reports_redundant_generators() {
        let e3 = materialize(3).unwrap();
        // e1e2 lies in the subalgebra generated by e1 and e2
        let gens = vec![
            e3.basis_element(1),
            e3.basis_element(2),
            e3.basis_element(3),
        ];
        let report = classify_subalgebra(&e3, &gens).unwrap();
        assert_eq!(report.removed_generators, vec![2]);
        assert_eq!(report.type_tag, SubalgebraType::II);
        assert_eq!(report.l, 2);
    }

    #[test]
    fn classify_rejects_inhomogeneous_generators() {
        let e2 = materialize(2).unwrap();
        let mixed = &e2.basis_element(0) + &e2.basis_element(1);
        let err = classify_subalgebra(&e2, &[mixed]);
        assert!(matches!(err, Err(Error::NotHomogeneous { position: 0 })));
    }

    #[test]
    fn classify_witness_generators_give_type_ii() {
        let e5 = materialize(5).unwrap();
        let w = build_f_n(&e5, 3).unwrap();
        let report = classify_subalgebra(&e5, &w.generators).unwrap();
        assert_eq!(report.type_tag, SubalgebraType::II);
        assert_eq!(report.l, 3);
        assert_eq!(report.q, 0);
    }

    #[test]
    fn variety_check_on_group_algebra() {
        let verdict = variety_equivalence_check(&k_plus_ck()).unwrap();
        assert!(verdict.equivalent);
        assert!(verdict.commutative);
        assert!(verdict.odd_escapes_radical);
        assert!(verdict.envelope_satisfies_generators);
        assert_eq!(verdict.envelope_k_regular_up_to, 5);
        assert!(verdict.surrogates_agree());
    }

    #[test]
    fn variety_check_on_scalars_fails_regularity() {
        let verdict = variety_equivalence_check(&scalar_field_z2()).unwrap();
        assert!(!verdict.equivalent);
        assert_eq!(verdict.envelope_k_regular_up_to, 0);
        assert!(verdict.surrogates_agree());
    }

    #[test]
    fn variety_check_on_odd_nilpotent_line() {
        // E_1: odd part is the radical, envelope dies at two odd factors
        let e1 = materialize(1).unwrap();
        let verdict = variety_equivalence_check(&e1).unwrap();
        assert!(!verdict.equivalent);
        assert!(verdict.commutative);
        assert!(!verdict.odd_escapes_radical);
        assert_eq!(verdict.envelope_k_regular_up_to, 1);
        assert!(verdict.surrogates_agree());
    }
}
