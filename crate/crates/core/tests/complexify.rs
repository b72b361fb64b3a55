use std::sync::OnceLock;

use crkit_core::catalog::models::{build_sl_complex, build_su};
use crkit_core::catalog::perturb::random_subalgebra;
use crkit_core::catalog::{self, heisenberg_solvmanifold, quadric_circle, quadric_orbit};
use crkit_core::complexify::{apply_j, complexify, complexify_any, j_image, realify, AnyAlgebra, OrbitModel};
use crkit_core::lie::{default_names, LieAlgebra};
use crkit_core::linalg::{unit_vec, Subspace};
use crkit_core::scalar::{q, Qi, Scalar, Q};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rows(n: usize, rs: &[&[i64]]) -> Subspace<Q> {
    Subspace::span(n, rs.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
}

fn heisenberg() -> LieAlgebra<Q> {
    LieAlgebra::from_brackets(default_names(3), vec![(0, 1, vec![(2, q(1))])]).unwrap()
}

/// `su(2) ⊂ sl₂(ℂ)` in the basis `E12, E21, H1` with trivial isotropy.
fn su2_in_sl2() -> OrbitModel {
    let amb = build_sl_complex(2).unwrap();
    let g = rows(6, &[&[0, 0, 0, 0, 0, 1], &[1, -1, 0, 0, 0, 0], &[0, 0, 0, 1, 1, 0]]);
    OrbitModel::new(amb, g, Subspace::zero(3)).unwrap()
}

fn assert_m_ideal(m: &OrbitModel, what: &str) {
    let ideal = m.max_complex_ideal();
    assert!(m.g().is_ideal(&ideal), "{what}: m is not an ideal");
    let amb = m.max_complex_ideal_ambient();
    assert_eq!(j_image(&amb), amb, "{what}: m is not J-stable");
    assert!(m.real_sub().contains(&amb), "{what}");
}

#[test]
fn complexify_examples() {
    let c = complexify(&LieAlgebra::abelian(2));
    assert!(c.g_hat.is_abelian());
    assert_eq!(c.realified.dim(), 4);

    let sl2 = catalog::models::build_sl_real(2).unwrap();
    let c = complexify(&sl2);
    let det_real = sl2.killing_form().matrix().determinant().unwrap();
    let det_hat = c.g_hat.killing_form().matrix().determinant().unwrap();
    assert_eq!(det_hat, Qi::from_q(det_real));
    for i in 0..3 {
        for j in 0..3 {
            let real: Vec<Qi> = sl2.basis_bracket(i, j).into_iter().map(Qi::from_q).collect();
            assert_eq!(c.g_hat.basis_bracket(i, j), real);
        }
    }

    let h = heisenberg();
    let c = complexify(&h);
    let lens = |a: &LieAlgebra<Q>| a.derived_series().len();
    assert_eq!(c.g_hat.derived_series().len(), lens(&h));
    assert_eq!(c.g_hat.lower_central_series().len(), h.lower_central_series().len());

    assert!(complexify_any(&AnyAlgebra::Complex(c.g_hat.clone())).is_err());
}

#[test]
fn m_examples() {
    assert!(su2_in_sl2().max_complex_ideal().is_zero());

    let amb = build_sl_complex(2).unwrap();
    let full = OrbitModel::new(amb.clone(), Subspace::full(6), Subspace::zero(3)).unwrap();
    assert_eq!(full.max_complex_ideal().dim(), 6);

    let amb = amb.direct_sum(&LieAlgebra::abelian(1));
    let mut g: Vec<Vec<Q>> = [0, 1, 2, 4, 5, 6].iter().map(|&i| unit_vec(8, i)).collect();
    g.push(unit_vec(8, 3));
    let mixed = OrbitModel::new(amb, Subspace::span(8, g).unwrap(), Subspace::zero(4)).unwrap();
    let want = Subspace::coordinate(8, &[0, 1, 2, 4, 5, 6]);
    assert_eq!(mixed.max_complex_ideal_ambient(), want);
    assert_m_ideal(&mixed, "mixed");
}

#[test]
fn cr_normalizer_examples() {
    let m = su2_in_sl2();
    assert!(m.cr_normalizer().is_full());

    let e = quadric_orbit(2, 1).unwrap();
    assert_eq!(e.model.g().dim(), 8);
    assert_eq!(e.model.isotropy_hat().dim(), 6);
    assert_eq!(e.model.h().dim(), 5);
    assert_eq!(e.model.cr_normalizer(), e.model.h());

    let amb = build_sl_complex(2).unwrap();
    let borel = Subspace::span(3, vec![unit_vec(3, 0), unit_vec(3, 2)]).unwrap();
    let model = OrbitModel::new(amb, Subspace::full(6), borel.clone()).unwrap();
    assert_eq!(model.complex_normalizer(), borel);
    assert_eq!(model.cr_normalizer().dim(), 4);
    assert_eq!(model.cr_normalizer(), model.h());
}

#[test]
fn fibration_examples() {
    let e = heisenberg_solvmanifold().unwrap();
    let f = e.model.fibration().unwrap();
    assert!(f.degenerate);
    assert_eq!(f.dim_fiber, e.model.g().dim());
    assert_eq!(f.dim_base, 0);
    assert_eq!(f.discrete_isotropy, Some(true));

    let f = quadric_orbit(2, 1).unwrap().model.fibration().unwrap();
    assert!(!f.degenerate);
    assert_eq!(f.dim_fiber, 0);
    assert_eq!(f.dim_base, quadric_orbit(2, 1).unwrap().model.orbit_dim());

    let f = quadric_circle().unwrap().model.fibration().unwrap();
    assert_eq!(f.dim_fiber, 1);
    assert!(f.fiber.is_abelian());
    assert!(!f.caveats.is_empty());
}

#[test]
fn fiber_globalization_examples() {
    let heis = heisenberg_solvmanifold().unwrap().model.fiber_globalization_check().unwrap();
    assert!(heis.passed(), "{heis:?}");

    let amb = build_sl_complex(2).unwrap();
    let full = OrbitModel::new(amb, Subspace::full(6), Subspace::zero(3)).unwrap();
    assert!(full.fiber_globalization_check().unwrap().passed());

    let bad = su2_in_sl2().fiber_globalization_check().unwrap();
    assert_eq!(bad.fact("ambient-within-two-of-m"), Some(false));

    assert!(quadric_orbit(2, 1).unwrap().model.fiber_globalization_check().is_err());
}

#[test]
fn catalog_models_satisfy_structural_invariants() {
    for e in catalog::all_entries().unwrap() {
        let m = &e.model;
        assert!(m.is_generic(), "{}", e.name);
        assert_m_ideal(m, &e.name);
        let n = m.cr_normalizer();
        let h = m.h();
        assert!(m.g().is_subalgebra(&n), "{}", e.name);
        assert!(n.contains(&h), "{}", e.name);
        assert!(m.g().normalizer_subalgebra(&h).contains(&n), "{}", e.name);
    }
}

#[test]
fn codim_is_additive_for_products() {
    let a = quadric_orbit(2, 1).unwrap().model;
    let b = quadric_orbit(1, 1).unwrap().model;
    let c = heisenberg_solvmanifold().unwrap().model;
    assert_eq!(a.product(&b).unwrap().codim(), a.codim() + b.codim());
    assert_eq!(b.product(&c).unwrap().codim(), b.codim() + c.codim());
}

#[test]
fn complexify_of_realified_complex_algebra() {
    for amb in [build_sl_complex(2).unwrap(), complexify(&heisenberg()).g_hat] {
        let back = complexify(&realify(&amb));
        assert_eq!(back.g_hat.dim(), 2 * amb.dim());
        assert_eq!(back.g_hat.radical().dim(), 2 * amb.radical().dim());
    }
}

#[test]
fn realified_su_is_a_real_form() {
    let g = build_su(2, 1).unwrap();
    let c = complexify(&g);
    let emb = c.embedding();
    assert!(emb.intersect(&j_image(&emb)).unwrap().is_zero());
    assert!(emb.sum(&j_image(&emb)).unwrap().is_full());
    let v = unit_vec(16, 3);
    assert_eq!(apply_j(&apply_j(&v)), v.iter().map(Scalar::negated).collect::<Vec<_>>());
}

fn small_models() -> &'static [OrbitModel] {
    static MODELS: OnceLock<Vec<OrbitModel>> = OnceLock::new();
    MODELS.get_or_init(|| {
        ["quadric(2,1)", "quadric(1,1)", "twisted(1)", "p2r", "heisenberg-solvmanifold", "quadric(2,1)*circle"]
            .iter()
            .map(|n| catalog::by_name(n).unwrap().model)
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn random_subalgebras_keep_m_an_ideal(seed in any::<u64>(), which in 0usize..64) {
        let models = small_models();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_subalgebra(&models[which % models.len()], &mut rng).unwrap();
        let ideal = m.max_complex_ideal();
        prop_assert!(m.g().is_ideal(&ideal));
        let amb = m.max_complex_ideal_ambient();
        prop_assert_eq!(j_image(&amb), amb);
        let n = m.cr_normalizer();
        prop_assert!(n.contains(&m.h()));
        prop_assert!(m.g().normalizer_subalgebra(&m.h()).contains(&n));
    }
}
