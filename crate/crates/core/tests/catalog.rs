use crkit_core::catalog::models::{build_sl_complex_as_real, build_sl_real, build_so, build_sp, build_su, build_u};
use crkit_core::catalog::taxon::{classify_fiber, involves_affine_quadric, BaseKind, FiberClass, FiberContext, FiberTag};
use crkit_core::catalog::{
    self, by_name, quadric_orbit, real_projective_orbit, sp_quadric_orbit, twisted_diagonal_orbit, verify_entry,
    Family, RowStatus,
};
use crkit_core::cr::CrType;
use crkit_core::forms::Signature;
use crkit_core::io::{entry_to_json, parse_document, Document};
use crkit_core::lie::LieAlgebra;
use crkit_core::scalar::Q;

fn killing_signature(g: &LieAlgebra<Q>) -> Signature {
    g.killing_form().signature().unwrap()
}

#[test]
fn builder_dimensions_and_radicals() {
    for (p, q) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
        let g = build_su(p, q).unwrap();
        assert_eq!(g.dim(), (p + q) * (p + q) - 1);
        assert!(g.validate().passed());
        assert!(g.radical().is_zero());
    }
    assert_eq!(build_su(2, 1).unwrap().dim(), 8);
    for n in 2..=4 {
        let sl = build_sl_real(n).unwrap();
        assert_eq!(sl.dim(), n * n - 1);
        assert!(sl.radical().is_zero());
        let so = build_so(n + 1).unwrap();
        assert_eq!(so.dim(), (n + 1) * n / 2);
        assert!(so.radical().is_zero());
        let u = build_u(n).unwrap();
        assert_eq!(u.dim(), n * n);
        assert_eq!(u.radical().dim(), 1);
        assert_eq!(u.radical(), u.center());
        assert_eq!(build_sl_complex_as_real(n).unwrap().dim(), 2 * (n * n - 1));
    }
    for (p, q) in [(1, 0), (1, 1), (2, 1)] {
        let m = p + q;
        let sp = build_sp(p, q).unwrap();
        assert_eq!(sp.dim(), m * (2 * m + 1));
        assert!(sp.validate().passed());
        assert!(sp.radical().is_zero());
    }
}

#[test]
fn compact_forms_have_definite_killing_form() {
    assert_eq!(killing_signature(&build_su(2, 0).unwrap()), Signature::new(0, 3, 0));
    assert_eq!(killing_signature(&build_so(3).unwrap()), Signature::new(0, 3, 0));
    assert_eq!(killing_signature(&build_sp(1, 0).unwrap()), Signature::new(0, 3, 0));
    let s = killing_signature(&build_su(2, 1).unwrap());
    assert!(s.pos > 0 && s.neg > 0);
}

#[test]
fn quadric_examples() {
    let e = quadric_orbit(2, 1).unwrap();
    assert_eq!(e.model.codim(), 1);
    let pair = e.model.cr_pair().unwrap();
    assert_eq!(pair.levi_signature(&[Q::from_integer(1.into())]).unwrap().unordered(), (1, 0));

    let small = quadric_orbit(1, 1).unwrap();
    assert_eq!(small.model.cr_pair().unwrap().cr_type().unwrap(), CrType { n: 1, l: 0, k: 1 });

    for (p, q) in [(1, 1), (2, 1), (2, 2), (3, 2), (1, 4)] {
        let m = quadric_orbit(p, q).unwrap().model;
        assert_eq!(m.orbit_dim(), 2 * (p + q) - 3);
        assert_eq!(m.orbit_dim(), 2 * (p + q - 1) - 1);
    }
}

#[test]
fn sp_quadric_acts_transitively_on_the_quadric() {
    for (p, q) in [(1, 1), (1, 2)] {
        let sp = sp_quadric_orbit(p, q).unwrap();
        let big = quadric_orbit(2 * p, 2 * q).unwrap();
        assert_eq!(sp.model.orbit_dim(), big.model.orbit_dim());
        assert_eq!(sp.model.codim(), 1);
        assert!(verify_entry(&sp).unwrap().passed());
    }
}

#[test]
fn real_projective_examples() {
    let e = real_projective_orbit().unwrap();
    assert_eq!(e.model.codim(), 2);
    assert_eq!(e.model.cr_pair().unwrap().cr_type().unwrap(), CrType { n: 2, l: 0, k: 2 });
    assert!(e.model.max_complex_ideal().is_zero());
    let r = verify_entry(&e).unwrap();
    assert!(r.passed());
    assert_eq!(r.row("totally-real").unwrap().computed, "true");
}

#[test]
fn twisted_diagonal_examples() {
    for n in 1..=4 {
        let e = twisted_diagonal_orbit(n).unwrap();
        assert_eq!(e.model.codim(), 2, "n = {n}");
        assert!(e.model.is_generic());
        assert_eq!(e.model.orbit_dim(), 2 * (2 * n) - 2);
    }
}

#[test]
fn classify_fiber_examples() {
    let plain = FiberContext::default();
    assert_eq!(classify_fiber(&LieAlgebra::abelian(2), &plain), FiberClass::Row(FiberTag::TorusPrincipal));
    let affine = FiberContext { base: BaseKind::AffineSpace, ..plain };
    assert_eq!(classify_fiber(&LieAlgebra::abelian(1), &affine), FiberClass::Row(FiberTag::LinearCStar));
    let quat = FiberContext { base: BaseKind::TangentQuaternionic, ..plain };
    let sl2 = build_sl_real(2).unwrap();
    assert_eq!(classify_fiber(&sl2, &quat), FiberClass::Row(FiberTag::SpSeries));
    assert_eq!(classify_fiber(&LieAlgebra::abelian(0), &plain), FiberClass::Point);
    assert_eq!(classify_fiber(&build_su(2, 1).unwrap(), &plain), FiberClass::OutsideTable);
    assert_eq!(FiberTag::ALL.len(), 8);
}

#[test]
fn affine_quadric_involvement_examples() {
    let ctx = FiberContext::default();
    assert!(involves_affine_quadric(FiberClass::Row(FiberTag::SpSeries), &ctx));
    assert!(!involves_affine_quadric(FiberClass::Row(FiberTag::TorusPrincipal), &ctx));
    assert!(!involves_affine_quadric(FiberClass::Row(FiberTag::So9Spin7), &ctx));
}

#[test]
fn every_entry_verifies() {
    for e in catalog::all_entries().unwrap() {
        let r = verify_entry(&e).unwrap();
        assert!(r.passed(), "{}: {:?}", e.name, r.mismatches());
        assert_eq!(e.model.codim(), e.expected.codim, "{}", e.name);
        assert!(e.model.g().validate().passed(), "{}", e.name);
    }
}

#[test]
fn corrupted_codim_gives_one_mismatch() {
    let mut e = quadric_orbit(2, 1).unwrap();
    e.expected.codim = 3;
    let r = verify_entry(&e).unwrap();
    let bad = r.mismatches();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].check, "codim");
    assert_eq!(bad[0].status, RowStatus::Mismatch);
}

#[test]
fn noncompact_simple_real_forms_are_covered_by_the_taxonomy() {
    let allowed = [Family::Quadric, Family::SpQuadric, Family::TwistedDiagonal, Family::RealProjective];
    let mut seen = 0;
    for e in catalog::all_entries().unwrap() {
        let g = e.model.g();
        let real_form = e.model.max_complex_ideal().is_zero();
        let noncompact = killing_signature(g).pos > 0;
        if e.tags.simple && real_form && noncompact {
            seen += 1;
            assert!(allowed.contains(&e.family), "{} is outside the taxonomy", e.name);
        }
    }
    assert!(seen > 20);
}

#[test]
fn compact_entries_have_abelian_central_radical() {
    for e in catalog::all_entries().unwrap().into_iter().filter(|e| e.tags.compact) {
        let g = e.model.g();
        let r = g.radical();
        assert!(g.subalgebra(&r).unwrap().is_abelian(), "{}", e.name);
        assert!(g.center().contains(&r), "{}", e.name);
    }
}

#[test]
fn products_add_codim_and_fiber_dimension() {
    let e = by_name("quadric(2,1)*quadric(1,1)").unwrap();
    let a = quadric_orbit(2, 1).unwrap().model;
    let b = quadric_orbit(1, 1).unwrap().model;
    assert_eq!(e.model.codim(), a.codim() + b.codim());
    let fib = |m: &crkit_core::complexify::OrbitModel| m.fibration().unwrap().dim_fiber;
    assert_eq!(fib(&e.model), fib(&a) + fib(&b));
}

#[test]
fn names_round_trip_and_unknown_names_fail() {
    for n in catalog::names() {
        assert_eq!(by_name(&n).unwrap().name, n);
    }
    assert!(by_name("quadric(0,1)").is_err());
    assert!(by_name("nothing").is_err());
}

#[test]
fn exported_entries_reload_and_reverify() {
    for name in ["quadric(2,1)", "p2r", "heisenberg-solvmanifold"] {
        let e = by_name(name).unwrap();
        let text = entry_to_json(&e).to_string();
        let Document::Orbit(f) = parse_document(&text).unwrap() else { panic!("orbit expected") };
        assert_eq!(f.model.codim(), e.model.codim());
        assert_eq!(f.model.real_sub(), e.model.real_sub());
        assert_eq!(f.model.isotropy_hat(), e.model.isotropy_hat());
    }
}
