//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use crkit_core::catalog::perturb::{random_conjugate, random_subalgebra};
use crkit_core::catalog::{self, quadric_orbit, real_projective_orbit, twisted_diagonal_orbit, verify_entry, CatalogEntry};
use crkit_core::complexify::{j_image, OrbitModel};
use crkit_core::cr::CrType;
use crkit_core::globalize::{
    condition_c_of, fine_classification_checks, is_parallelizable, verdict, ConditionC, Overall, P2R_NOTE,
};
use crkit_core::kernel::{self, KernelConfig};
use crkit_core::parallel::Execution;
use crkit_core::scalar::{Scalar, Q};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn quadric_signatures() -> Outcome {
    let mut n = 0;
    for total in 2..=6 {
        for p in 1..total {
            let q = total - p;
            let e = quadric_orbit(p, q).map_err(err)?;
            let r = verify_entry(&e).map_err(err)?;
            ensure(r.passed(), || format!("quadric({p},{q}): {:?}", r.mismatches()))?;
            ensure(e.model.codim() == 1, || format!("quadric({p},{q}): codim {}", e.model.codim()))?;
            let sig = e.model.cr_pair().map_err(err)?.levi_signature(&[Q::one()]).map_err(err)?;
            let want = (p.max(q) - 1, p.min(q) - 1);
            ensure(sig.unordered() == want, || format!("quadric({p},{q}): signature {:?}", sig.unordered()))?;
            n += 1;
        }
    }
    Ok(format!("{n} quadrics"))
}

fn real_projective_plane() -> Outcome {
    let e = real_projective_orbit().map_err(err)?;
    let t = e.model.cr_pair().map_err(err)?.cr_type().map_err(err)?;
    ensure(e.model.codim() == 2, || format!("codim {}", e.model.codim()))?;
    ensure(t == CrType { n: 2, l: 0, k: 2 }, || format!("type {t:?}"))?;
    ensure(e.model.max_complex_ideal().is_zero(), || "m is nonzero".into())?;
    let v = verdict(&e).map_err(err)?;
    ensure(v.overall == Overall::NotDecidableAtAlgebraLevel, || format!("verdict {}", v.overall))?;
    ensure(v.notes.iter().any(|n| n == P2R_NOTE), || "SO3 note missing".into())?;
    ensure(verify_entry(&e).map_err(err)?.passed(), || "verification mismatch".into())?;
    Ok("codim 2, type (2,0,2), m = 0".into())
}

fn twisted_diagonal() -> Outcome {
    for n in 1..=4 {
        let e = twisted_diagonal_orbit(n).map_err(err)?;
        ensure(e.model.codim() == 2, || format!("n = {n}: codim {}", e.model.codim()))?;
        ensure(e.model.is_generic(), || format!("n = {n}: not generic"))?;
    }
    Ok("n = 1..4".into())
}

fn m_is_ideal(m: &OrbitModel) -> bool {
    let amb = m.max_complex_ideal_ambient();
    m.g().is_ideal(&m.max_complex_ideal()) && j_image(&amb) == amb
}

fn m_ideal(entries: &[CatalogEntry]) -> Outcome {
    for e in entries {
        ensure(m_is_ideal(&e.model), || e.name.clone())?;
    }
    let bases: Vec<&CatalogEntry> = entries.iter().filter(|e| e.model.ambient().dim() <= 16).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut perturbed = 0;
    let mut k = 0usize;
    while perturbed < 50 {
        let base = bases[k % bases.len()];
        let model = if k.is_multiple_of(2) {
            random_subalgebra(&base.model, &mut rng).map_err(err)?
        } else {
            match random_conjugate(&base.model, &mut rng).map_err(err)? {
                Some(m) => random_subalgebra(&m, &mut rng).map_err(err)?,
                None => random_subalgebra(&base.model, &mut rng).map_err(err)?,
            }
        };
        k += 1;
        ensure(m_is_ideal(&model), || format!("perturbation {perturbed} of {}", base.name))?;
        perturbed += 1;
    }
    Ok(format!("{} shipped models, {perturbed} perturbations", entries.len()))
}

fn parallelizable(entries: &[CatalogEntry]) -> Result<Vec<&CatalogEntry>, String> {
    let mut out = Vec::new();
    for e in entries {
        if is_parallelizable(&e.model).map_err(err)? {
            out.push(e);
        }
    }
    Ok(out)
}

fn degenerate_fibration(entries: &[CatalogEntry]) -> Outcome {
    let par = parallelizable(entries)?;
    ensure(!par.is_empty(), || "no parallelizable entries".into())?;
    for e in &par {
        ensure(e.model.cr_normalizer().is_full(), || format!("{}: n_cr != g", e.name))?;
        ensure(e.model.h().is_zero(), || format!("{}: h != 0", e.name))?;
    }
    Ok(format!("{} parallelizable entries", par.len()))
}

fn fiber_globalization(entries: &[CatalogEntry]) -> Outcome {
    let par: Vec<&CatalogEntry> = parallelizable(entries)?.into_iter().filter(|e| e.model.codim() <= 2).collect();
    ensure(!par.is_empty(), || "no instances".into())?;
    for e in &par {
        let r = e.model.fiber_globalization_check().map_err(err)?;
        for fact in ["levi-factor-in-m", "ambient-within-two-of-m"] {
            ensure(r.fact(fact) == Some(true), || format!("{}: {fact}", e.name))?;
        }
    }
    Ok(format!("{} instances", par.len()))
}

fn compact_radicals(entries: &[CatalogEntry]) -> Outcome {
    let compact: Vec<&CatalogEntry> = entries.iter().filter(|e| e.tags.compact).collect();
    ensure(!compact.is_empty(), || "no compact entries".into())?;
    for e in &compact {
        let g = e.model.g();
        let r = g.radical();
        ensure(g.subalgebra(&r).map_err(err)?.is_abelian(), || format!("{}: radical not abelian", e.name))?;
        ensure(g.center().contains(&r), || format!("{}: radical not central", e.name))?;
    }
    Ok(format!("{} compact entries", compact.len()))
}

fn condition_c_boundary(entries: &[CatalogEntry]) -> Outcome {
    let mut fails = Vec::new();
    let mut not_decidable = 0;
    for e in entries {
        let c = condition_c_of(e.pi1.as_ref());
        let trivial_vs_z = e.pi1.as_ref().is_some_and(|p| p.real.rank == 0 && p.complex.rank == 1);
        ensure((c == ConditionC::Fail) == trivial_vs_z, || format!("{}: condition C {}", e.name, c.label()))?;
        if c == ConditionC::Fail {
            fails.push(e.name.clone());
        }
        if e.family == catalog::Family::SpQuadric {
            ensure(c == ConditionC::Pass, || format!("{}: condition C {}", e.name, c.label()))?;
        }
        let v = verdict(e).map_err(err)?;
        let boundary = v.affine_quadric || v.real_projective_plane;
        ensure((v.overall == Overall::NotDecidableAtAlgebraLevel) == boundary, || format!("{}: {}", e.name, v.overall))?;
        not_decidable += usize::from(boundary);
    }
    ensure(fails.iter().any(|n| n == "su2-affine-quadric"), || "SL2/C* pair does not fail".into())?;
    Ok(format!("condition C fails on {fails:?}; {not_decidable} not-decidable entries"))
}

fn fine_classification(entries: &[CatalogEntry]) -> Outcome {
    let mut applied = [0usize; 3];
    for e in entries {
        let r = fine_classification_checks(e).map_err(err)?;
        ensure(r.passed(), || format!("{}: {:?}", e.name, r.rows))?;
        for (i, row) in r.rows.iter().enumerate() {
            applied[i] += usize::from(row.applicable);
        }
    }
    ensure(applied.iter().all(|&n| n > 0), || format!("some check never applied: {applied:?}"))?;
    Ok(format!("applied {applied:?}"))
}

fn kernel_suite() -> Outcome {
    let r = kernel::run(&KernelConfig::default(), Execution::Parallel);
    ensure(r.total() >= 10_000, || format!("only {} checks", r.total()))?;
    ensure(r.passed(), || format!("{} failures, first: {}", r.failures.len(), r.failures[0]))?;
    let counts: Vec<String> = r.counts.iter().map(|(k, v)| format!("{k:?}={v}")).collect();
    Ok(format!("{} checks ({})", r.total(), counts.join(" ")))
}

fn run(n: usize, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let late = limit.is_some_and(|l| took > l);
    let (ok, detail) = match out {
        Ok(d) if late => (false, format!("{d}; took {took:.2?}, limit {:?}", limit.unwrap())),
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    println!("criterion {n}: {} ({detail}) [{took:.2?}]", if ok { "pass" } else { "fail" });
    ok
}

fn main() -> ExitCode {
    let entries = match catalog::all_entries() {
        Ok(e) => e,
        Err(e) => {
            println!("catalog failed to build: {e}");
            return ExitCode::FAILURE;
        }
    };
    let results = [
        run(1, Some(Duration::from_secs(10)), quadric_signatures),
        run(2, None, real_projective_plane),
        run(3, None, twisted_diagonal),
        run(4, None, || m_ideal(&entries)),
        run(5, None, || degenerate_fibration(&entries)),
        run(6, None, || fiber_globalization(&entries)),
        run(7, None, || compact_radicals(&entries)),
        run(8, None, || condition_c_boundary(&entries)),
        run(9, None, || fine_classification(&entries)),
        run(10, Some(Duration::from_secs(60)), kernel_suite),
    ];
    let passed = results.iter().filter(|&&b| b).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
