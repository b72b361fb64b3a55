//! Randomized variants of shipped models: conjugates by unipotent inner
//! automorphisms and random real subalgebras.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complexify::OrbitModel;
use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Qi, Scalar, Q};

/// `exp(M)` for a nilpotent matrix `M`.
pub fn exp_nilpotent<F: Scalar>(m: &Matrix<F>) -> Matrix<F> {
    let n = m.nrows();
    let mut out = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..=n {
        term = term.mul(m).expect("square").scale(&F::from_int(k as i64).inverse().expect("k > 0"));
        if term.is_zero() {
            break;
        }
        out = out.add(&term).expect("square");
    }
    out
}

/// A complex-linear map of `ℂⁿ` as a real `2n × 2n` matrix on `(re, im)` coordinates.
pub fn realify_matrix(m: &Matrix<Qi>) -> Matrix<Q> {
    let n = m.nrows();
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        let z = m.get(i % n, j % n);
        match (i < n, j < n) {
            (true, true) | (false, false) => z.re.clone(),
            (false, true) => z.im.clone(),
            (true, false) => z.im.negated(),
        }
    })
}

pub fn is_ad_nilpotent(g: &LieAlgebra<Qi>, x: &[Qi]) -> bool {
    let ad = g.ad_matrix(x).expect("dimension");
    let mut p = ad.clone();
    for _ in 1..g.dim() {
        if p.is_zero() {
            return true;
        }
        p = p.mul(&ad).expect("square");
    }
    p.is_zero()
}

/// Basis elements of `ĝ` whose adjoint action is nilpotent.
pub fn ad_nilpotent_basis(g: &LieAlgebra<Qi>) -> Vec<usize> {
    (0..g.dim()).filter(|&i| is_ad_nilpotent(g, &crate::linalg::unit_vec(g.dim(), i))).collect()
}

/// A random ad-nilpotent element among basis vectors and sums `e_a + c e_b`
/// with `c` in `{±1, ±i}`.
pub fn random_ad_nilpotent<R: Rng>(g: &LieAlgebra<Qi>, rng: &mut R) -> Option<Vec<Qi>> {
    let d = g.dim();
    let mut singles: Vec<usize> = (0..d).collect();
    singles.shuffle(rng);
    for i in singles {
        let x = crate::linalg::unit_vec(d, i);
        if is_ad_nilpotent(g, &x) {
            return Some(x);
        }
    }
    let units = [Qi::from_ints(1, 0), Qi::from_ints(-1, 0), Qi::from_ints(0, 1), Qi::from_ints(0, -1)];
    let mut pairs: Vec<(usize, usize, usize)> =
        (0..d).flat_map(|a| (a + 1..d).flat_map(move |b| (0..4).map(move |c| (a, b, c)))).collect();
    pairs.shuffle(rng);
    pairs.into_iter().find_map(|(a, b, c)| {
        let mut x = crate::linalg::unit_vec(d, a);
        x[b] = units[c].clone();
        is_ad_nilpotent(g, &x).then_some(x)
    })
}

fn small_rational<R: Rng>(rng: &mut R) -> Q {
    Q::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into())
}

/// Conjugates `model` by `exp(ad(cX))` for a random ad-nilpotent element
/// `X` from [`random_ad_nilpotent`] and random Gaussian rational `c`.
/// Returns `None` when no such `X` is found.
pub fn random_conjugate<R: Rng>(model: &OrbitModel, rng: &mut R) -> Result<Option<OrbitModel>> {
    let amb = model.ambient();
    let Some(x) = random_ad_nilpotent(amb, rng) else {
        return Ok(None);
    };
    let c = Qi::new(small_rational(rng), small_rational(rng));
    let x: Vec<Qi> = x.iter().map(|v| v.times(&c)).collect();
    let auto = exp_nilpotent(&amb.ad_matrix(&x)?);
    model.transformed(&realify_matrix(&auto)).map(Some)
}

/// Replaces `g` by the subalgebra generated by a few random elements of `g`.
pub fn random_subalgebra<R: Rng>(model: &OrbitModel, rng: &mut R) -> Result<OrbitModel> {
    let basis = model.real_sub().basis();
    let gens = rng.gen_range(1..=3);
    let vectors: Vec<Vec<Q>> = (0..gens)
        .map(|_| {
            let coeffs: Vec<Q> = (0..basis.len())
                .map(|_| if rng.gen_bool(0.4) { small_rational(rng) } else { Q::zero() })
                .collect();
            crate::linalg::combine(&coeffs, basis, model.real_sub().ambient_dim())
        })
        .collect();
    let span = Subspace::span(model.real_sub().ambient_dim(), vectors)?;
    let sub = model.realified().subalgebra_closure(&span);
    OrbitModel::new_nongeneric(model.ambient().clone(), sub, model.isotropy_hat().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::quadric_orbit;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn conjugates_keep_codim() {
        let e = quadric_orbit(2, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let t = random_conjugate(&e.model, &mut rng).unwrap().unwrap();
        assert_eq!(t.codim(), 1);
        assert!(t.is_generic());
    }

    #[test]
    fn realified_matrix_commutes_with_j() {
        let m = Matrix::from_rows(vec![vec![Qi::from_ints(1, 2)]], 1).unwrap();
        let r = realify_matrix(&m);
        let j = crate::complexify::j_matrix(1);
        assert_eq!(r.mul(&j).unwrap(), j.mul(&r).unwrap());
    }
}
