//! Randomized exact checks of the structural kernel.
//!
//! Algebras are drawn as commutator closures of random rational matrices,
//! Borel and nilpotent triangular algebras; each is checked against its own
//! matrix model and the Lie-algebra identities.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::models::{commutator_closure, matrix_algebra};
use crate::lie::{default_names, LieAlgebra};
use crate::linalg::{combine, is_zero_vec, Matrix};
use crate::parallel::{self, Execution};
use crate::scalar::{Scalar, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Jacobi,
    KillingInvariance,
    Antisymmetry,
    /// Bracket in coordinates agrees with the matrix commutator.
    MatrixModel,
    RadicalSolvable,
}

#[derive(Clone, Copy, Debug)]
pub struct KernelConfig {
    pub seed: u64,
    pub algebras: usize,
    pub triples_per_algebra: usize,
}

impl Default for KernelConfig {
    fn default() -> Self {
        KernelConfig { seed: 0x5eed, algebras: 100, triples_per_algebra: 25 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub counts: BTreeMap<CheckKind, usize>,
    pub failures: Vec<String>,
}

impl KernelReport {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(&mut self, other: KernelReport) {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self.failures.extend(other.failures);
    }
}

fn small<R: Rng>(rng: &mut R) -> Q {
    Q::new(rng.gen_range(-4i64..=4).into(), rng.gen_range(1i64..=2).into())
}

fn sparse_matrix<R: Rng>(rng: &mut R, n: usize, allowed: impl Fn(usize, usize) -> bool) -> Matrix<Q> {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if allowed(i, j) && rng.gen_bool(0.5) {
                m.set(i, j, small(rng));
            }
        }
    }
    m
}

/// A random algebra with its faithful matrix model.
pub struct Sample {
    pub label: String,
    pub n: usize,
    pub mats: Vec<Matrix<Q>>,
    pub algebra: LieAlgebra<Q>,
}

pub fn sample(seed: u64) -> Sample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let n = rng.gen_range(2..=4);
        let (label, gens) = match rng.gen_range(0..3) {
            0 => {
                let k = rng.gen_range(1..=2);
                ("gl-closure", (0..k).map(|_| sparse_matrix(&mut rng, n, |_, _| true)).collect::<Vec<_>>())
            }
            1 => {
                let mut gens: Vec<Matrix<Q>> = Vec::new();
                for i in 0..n {
                    for j in i..n {
                        let mut m = Matrix::zeros(n, n);
                        m.set(i, j, Q::one());
                        gens.push(m);
                    }
                }
                ("borel", gens)
            }
            _ => {
                let k = rng.gen_range(1..=3);
                ("nilpotent-closure", (0..k).map(|_| sparse_matrix(&mut rng, n, |i, j| i < j)).collect())
            }
        };
        let mats = commutator_closure(n, &gens);
        if mats.is_empty() {
            continue;
        }
        let algebra = matrix_algebra(default_names(mats.len()), &mats).expect("closure is a subalgebra");
        return Sample { label: format!("{label}(n={n},dim={})", mats.len()), n, mats, algebra };
    }
}

fn random_vec<R: Rng>(rng: &mut R, d: usize) -> Vec<Q> {
    (0..d).map(|_| small(rng)).collect()
}

fn to_matrix(s: &Sample, coeffs: &[Q]) -> Matrix<Q> {
    let mut out = Matrix::zeros(s.n, s.n);
    for (c, m) in coeffs.iter().zip(&s.mats) {
        if !c.is_zero() {
            out = out.add(&m.scale(c)).expect("size");
        }
    }
    out
}

/// All checks for one sampled algebra.
pub fn check_sample(seed: u64, triples: usize) -> KernelReport {
    let s = sample(seed);
    let g = &s.algebra;
    let d = g.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let kappa = g.killing_form();
    let mut report = KernelReport::default();
    let mut record = |kind: CheckKind, ok: bool, what: &str| {
        *report.counts.entry(kind).or_default() += 1;
        if !ok {
            report.failures.push(format!("seed {seed} {}: {kind:?} {what}", s.label));
        }
    };
    let br = |x: &[Q], y: &[Q]| g.bracket(x, y).expect("dimension");
    for t in 0..triples {
        let (x, y, z) = (random_vec(&mut rng, d), random_vec(&mut rng, d), random_vec(&mut rng, d));
        let jac = combine(
            &[Q::one(), Q::one(), Q::one()],
            &[br(&x, &br(&y, &z)), br(&y, &br(&z, &x)), br(&z, &br(&x, &y))],
            d,
        );
        record(CheckKind::Jacobi, is_zero_vec(&jac), &format!("triple {t}"));

        let xy = br(&x, &y);
        let yx = br(&y, &x);
        let anti = combine(&[Q::one(), Q::one()], &[xy.clone(), yx], d);
        record(CheckKind::Antisymmetry, is_zero_vec(&anti), &format!("triple {t}"));

        let k1 = kappa.eval(&br(&z, &x), &y).expect("dimension");
        let k2 = kappa.eval(&x, &br(&z, &y)).expect("dimension");
        record(CheckKind::KillingInvariance, k1.plus(&k2).is_zero(), &format!("triple {t}"));

        let (mx, my) = (to_matrix(&s, &x), to_matrix(&s, &y));
        let comm = mx.mul(&my).expect("size").sub(&my.mul(&mx).expect("size")).expect("size");
        record(CheckKind::MatrixModel, to_matrix(&s, &xy) == comm, &format!("triple {t}"));
    }
    let r = g.radical();
    let solvable = g.is_ideal(&r) && g.subalgebra(&r).map(|a| a.is_solvable()).unwrap_or(false);
    record(CheckKind::RadicalSolvable, solvable, "radical");
    report
}

pub fn run(config: &KernelConfig, exec: Execution) -> KernelReport {
    let seeds: Vec<u64> = (0..config.algebras as u64).map(|i| config.seed.wrapping_add(i)).collect();
    let parts = parallel::map(exec, &seeds, |&s| check_sample(s, config.triples_per_algebra));
    let mut out = KernelReport::default();
    for p in parts {
        out.merge(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let cfg = KernelConfig { seed: 1, algebras: 6, triples_per_algebra: 3 };
        let r = run(&cfg, Execution::Sequential);
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.total(), 6 * (3 * 4 + 1));
    }

    #[test]
    fn borel_samples_are_solvable() {
        for seed in 0..20 {
            let s = sample(seed);
            if s.label.starts_with("borel") || s.label.starts_with("nilpotent") {
                assert!(s.algebra.is_solvable());
            }
        }
    }
}
