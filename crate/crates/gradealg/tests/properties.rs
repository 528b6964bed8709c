//! Property suites: exact-arithmetic laws, blade kernel symmetries, cocycle
//! constructions, and corpus-wide invariants that every fixture constructor
//! must satisfy.

use num_traits::{One, Zero};
use proptest::prelude::*;

use gradealg::algebra::{
    self, direct_sum, k_plus_ck, poly_quotient, scalar_field_z2, truncated_poly_trivial,
    twisted_group_algebra, twisted_z2z2_anticommuting, wall_fixture, GradedAlgebra, WallKind,
};
use gradealg::grassmann::{
    blade_product, blade_product_batch, blade_product_batch_seq, envelope, materialize, Blade,
    EnvelopeSpec, GrassmannElement,
};
use gradealg::group::FiniteAbelianGroup;
use gradealg::identities::{grassmann_t_ideal_generators, is_graded_identity};
use gradealg::linalg::{in_span, Matrix};
use gradealg::radical::jacobson_radical;
use gradealg::regularity::{
    decomposition_matrix, extract_bicharacter, is_k_regular, regular_witness,
    verify_bicharacter_axioms, TupleSelection,
};
use gradealg::scalar::{ratio, Scalar};

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(small_scalar(), rows * cols)
        .prop_map(move |entries| Matrix::new(rows, cols, entries).unwrap())
}

fn any_small_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c))
}

fn square_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4).prop_flat_map(|n| matrix(n, n))
}

proptest! {
    #[test]
    fn scalar_addition_round_trips(a in small_scalar(), b in small_scalar()) {
        prop_assert_eq!((a.clone() + b.clone()) - b, a);
    }

    #[test]
    fn rref_is_idempotent(m in any_small_matrix()) {
        let first = m.rref();
        let second = first.reduced.rref();
        prop_assert_eq!(&second.reduced, &first.reduced);
        prop_assert_eq!(second.rank, first.rank);
    }

    #[test]
    fn det_nonzero_iff_full_rank(m in square_matrix()) {
        let det = m.det().unwrap();
        let rank = m.rref().rank;
        prop_assert_eq!(!det.is_zero(), rank == m.rows());
    }

    #[test]
    fn kernel_vectors_annihilate_exactly(m in any_small_matrix()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.len(), m.cols() - m.rref().rank);
        for v in kernel {
            prop_assert!(m.apply(&v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn span_accepts_combinations(
        m in matrix(3, 4),
        coeffs in proptest::collection::vec(small_scalar(), 3),
    ) {
        let rows = m.row_vectors();
        let mut combo = vec![Scalar::zero(); 4];
        for (row, c) in rows.iter().zip(&coeffs) {
            for (slot, v) in combo.iter_mut().zip(row) {
                *slot += c.clone() * v.clone();
            }
        }
        prop_assert!(in_span(&rows, &combo).unwrap());
    }

    #[test]
    fn blade_products_anticommute_by_length(a in any::<u64>(), b in any::<u64>()) {
        let (a, b) = (Blade(a), Blade(b));
        match (blade_product(a, b), blade_product(b, a)) {
            (None, None) => prop_assert!(a.mask() & b.mask() != 0),
            (Some((s1, r1)), Some((s2, r2))) => {
                prop_assert_eq!(r1, r2);
                let flip = (a.len() * b.len()) % 2 == 1;
                prop_assert_eq!(s1 == s2, !flip);
            }
            _ => prop_assert!(false, "one-sided vanishing is impossible"),
        }
    }

    #[test]
    fn blade_batches_agree(pairs in proptest::collection::vec((any::<u64>(), any::<u64>()), 1..200)) {
        let pairs: Vec<(Blade, Blade)> =
            pairs.into_iter().map(|(a, b)| (Blade(a), Blade(b))).collect();
        prop_assert_eq!(blade_product_batch(&pairs), blade_product_batch_seq(&pairs));
    }

    /// Coboundary-twisted bilinear tables are always 2-cocycles; the
    /// resulting algebra must validate and carry the antisymmetrized
    /// bilinear form as its commutation table.
    #[test]
    fn twisted_group_algebras_validate(
        f_vals in proptest::collection::vec((-3i64..=3).prop_filter("nonzero", |v| *v != 0), 4),
        bilinear in proptest::collection::vec(any::<bool>(), 4),
    ) {
        let group = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        let elems = group.elements();
        let f = |g: &gradealg::group::GroupElement| ratio(f_vals[group.index_of(g)], 1);
        let pairing = |g: &gradealg::group::GroupElement, h: &gradealg::group::GroupElement| {
            let mut e = 0u64;
            for (i, gi) in g.components().iter().enumerate() {
                for (j, hj) in h.components().iter().enumerate() {
                    if bilinear[i * 2 + j] {
                        e += gi * hj;
                    }
                }
            }
            e % 2
        };
        let mut alpha = Vec::new();
        for g in &elems {
            for h in &elems {
                let coboundary = f(g) * f(h) / f(&group.add(g, h));
                let sign = if pairing(g, h) == 1 { ratio(-1, 1) } else { ratio(1, 1) };
                alpha.push(coboundary * sign);
            }
        }
        let a = twisted_group_algebra(&group, &alpha).unwrap();
        prop_assert!(a.validate().is_valid());
        let beta = extract_bicharacter(&a).unwrap();
        prop_assert!(verify_bicharacter_axioms(&beta).is_empty());
        for g in &elems {
            for h in &elems {
                let expected = if (pairing(g, h) + pairing(h, g)) % 2 == 1 {
                    ratio(-1, 1)
                } else {
                    ratio(1, 1)
                };
                prop_assert_eq!(beta.value(g, h), &expected);
            }
        }
    }

    #[test]
    fn odd_multivector_products_overflow(n in 1usize..=5, seeds in proptest::collection::vec(0u64..1 << 5, 6)) {
        // any n+1 odd elements of E_n multiply to zero
        let odd_blades: Vec<Blade> = (0..1u64 << n)
            .map(Blade)
            .filter(|b| b.parity() == 1)
            .collect();
        let element = |seed: u64| {
            let terms: Vec<(Blade, Scalar)> = odd_blades
                .iter()
                .enumerate()
                .map(|(i, &b)| (b, ratio(((seed >> i) & 3) as i64 - 1, 1)))
                .collect();
            GrassmannElement::from_terms(n, terms).unwrap()
        };
        let mut acc = GrassmannElement::unit(n).unwrap();
        for seed in seeds.iter().take(n + 1) {
            acc = acc.multiply(&element(*seed)).unwrap();
        }
        prop_assert!(acc.is_zero());
    }
}

/// The Z2-graded fixture corpus every corpus-wide invariant runs over.
fn corpus() -> Vec<GradedAlgebra> {
    let neg_square = {
        let z2 = FiniteAbelianGroup::z2();
        let alpha = vec![ratio(1, 1), ratio(1, 1), ratio(1, 1), ratio(-1, 1)];
        twisted_group_algebra(&z2, &alpha).unwrap()
    };
    vec![
        scalar_field_z2(),
        k_plus_ck(),
        direct_sum(&k_plus_ck(), &truncated_poly_trivial(2).unwrap()).unwrap(),
        materialize(1).unwrap(),
        materialize(2).unwrap(),
        materialize(3).unwrap(),
        poly_quotient(3).unwrap(),
        direct_sum(&k_plus_ck(), &k_plus_ck()).unwrap(),
        direct_sum(&scalar_field_z2(), &materialize(1).unwrap()).unwrap(),
        direct_sum(&materialize(2).unwrap(), &materialize(2).unwrap()).unwrap(),
        neg_square,
        wall_fixture(WallKind::A1 { n: 2 }).unwrap(),
        wall_fixture(WallKind::A2 { k: 1, l: 1 }).unwrap(),
        wall_fixture(WallKind::A3 { n: 2 }).unwrap(),
        envelope(&EnvelopeSpec { c: k_plus_ck(), n: 2 }).unwrap(),
        algebra::tensor_trivial(&k_plus_ck(), &truncated_poly_trivial(2).unwrap()).unwrap(),
    ]
}

#[test]
fn every_constructor_fixture_validates() {
    for a in corpus() {
        let report = a.validate();
        assert!(report.is_valid(), "{} fails validation: {report}", a.name());
        assert_eq!(a.validate_seq(), report, "{}: seq/par disagree", a.name());
    }
}

#[test]
fn twisted_z2z2_fixture_validates() {
    assert!(twisted_z2z2_anticommuting().validate().is_valid());
}

#[test]
fn extraction_implies_axioms_and_consistent_minimality() {
    let mut extracted = 0;
    for a in corpus() {
        let Ok(beta) = extract_bicharacter(&a) else {
            continue;
        };
        extracted += 1;
        assert!(
            verify_bicharacter_axioms(&beta).is_empty(),
            "{}: extracted table violates the axioms",
            a.name()
        );
        let report = decomposition_matrix(&beta);
        assert_eq!(
            report.minimal, report.distinct_columns,
            "{}: determinant and column criteria disagree",
            a.name()
        );
    }
    assert!(extracted >= 6, "corpus should pin plenty of tables");
}

#[test]
fn lemma_infinite_shadow_over_corpus() {
    // wherever a fixture pins beta(h,h) = -1, the all-h tuple one longer
    // than dim A_h has no witness
    let mut exercised = 0;
    for a in corpus() {
        let Ok(beta) = extract_bicharacter(&a) else {
            continue;
        };
        for h in gradealg::regularity::infinite_dim_obligations(&beta) {
            let len = a.component_dim(&h) + 1;
            let outcome = regular_witness(&a, &vec![h.clone(); len]);
            assert!(
                !outcome.is_witness(),
                "{}: tuple of {len} copies of {h} should fail",
                a.name()
            );
            exercised += 1;
        }
    }
    assert!(exercised >= 3, "the shadow should bite on the corpus");
}

#[test]
fn materialized_grassmann_dimensions() {
    for n in 1..=6usize {
        let a = materialize(n).unwrap();
        assert_eq!(a.dim(), 1 << n);
        let even = a.group().zero();
        let odd = a.group().element(vec![1]).unwrap();
        assert_eq!(a.component_dim(&even), 1 << (n - 1));
        assert_eq!(a.component_dim(&odd), 1 << (n - 1));
    }
}

#[test]
fn materialized_table_matches_blade_kernel_exhaustively() {
    for n in 0..=5usize {
        let a = materialize(n).unwrap();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let row = a.basis_product(i, j);
                match blade_product(Blade(i as u64), Blade(j as u64)) {
                    None => assert!(row.is_empty()),
                    Some((sign, blade)) => {
                        assert_eq!(row.len(), 1);
                        assert_eq!(row[0].0, blade.mask() as usize);
                        let expected = if sign < 0 { ratio(-1, 1) } else { ratio(1, 1) };
                        assert_eq!(row[0].1, expected);
                    }
                }
            }
        }
    }
}

#[test]
fn envelope_odd_dimension_law() {
    // odd part of envelope(C, N) has dim (#odd blades) x dim C_1
    for c in corpus() {
        let env = envelope(&EnvelopeSpec { c: c.clone(), n: 3 }).unwrap();
        assert!(env.validate().is_valid(), "{}", env.name());
        let odd = env.group().element(vec![1]).unwrap();
        let c_odd = c.component_dim(&c.group().element(vec![1]).unwrap());
        assert_eq!(env.component_dim(&odd), 4 * c_odd, "{}", env.name());
    }
}

#[test]
fn direct_sum_dimension_and_orthogonal_units() {
    let pool = [k_plus_ck(), materialize(2).unwrap(), poly_quotient(2).unwrap()];
    for a in &pool {
        for b in &pool {
            let s = direct_sum(a, b).unwrap();
            assert_eq!(s.dim(), a.dim() + b.dim());
            // the two summand units are orthogonal idempotents adding to 1
            let left: Vec<_> = s
                .unit_element()
                .terms()
                .filter(|(i, _)| *i < a.dim())
                .map(|(i, c)| (i, c.clone()))
                .collect();
            let left = s.element_from_terms(left).unwrap();
            let right = &s.unit_element() - &left;
            assert_eq!(left.multiply(&left).unwrap(), left);
            assert_eq!(right.multiply(&right).unwrap(), right);
            assert!(left.multiply(&right).unwrap().is_zero());
        }
    }
}

#[test]
fn generators_hold_on_envelopes_of_commutative_fixtures() {
    for c in corpus() {
        if !c.is_commutative() {
            continue;
        }
        let env = envelope(&EnvelopeSpec { c, n: 3 }).unwrap();
        for f in grassmann_t_ideal_generators() {
            assert!(
                is_graded_identity(&env, &f).unwrap().holds,
                "{}: generator fails",
                env.name()
            );
        }
    }
}

#[test]
fn radical_is_a_graded_ideal_on_the_corpus() {
    for a in corpus() {
        if a.dim() > 8 {
            continue; // keep the quadratic span checks cheap
        }
        let rad = jacobson_radical(&a);
        assert!(rad.graded, "{}", a.name());
        let basis = rad.subspace.basis_elements();
        for v in &basis {
            assert!(v.is_nilpotent(), "{}: radical vector not nilpotent", a.name());
            for i in 0..a.dim() {
                let b = a.basis_element(i);
                assert!(rad.subspace.contains(&b.multiply(v).unwrap()).unwrap());
                assert!(rad.subspace.contains(&v.multiply(&b).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn full_regularity_of_group_algebras() {
    // twisted group algebras never drop a product, so every tuple has a
    // witness at any length
    for a in [k_plus_ck(), twisted_z2z2_anticommuting()] {
        let report = is_k_regular(&a, &TupleSelection::AllUpTo(5));
        assert!(report.all_regular(), "{}", a.name());
    }
}
