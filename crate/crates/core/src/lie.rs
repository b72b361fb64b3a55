//! Lie algebras given by structure constants.
//!
//! `[e_i, e_j] = Σ_k c[i][j][k] e_k`, stored sparsely per ordered pair.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::forms::{BilinearForm, Symmetry};
use crate::linalg::{is_zero_vec, unit_vec, zero_vec, Matrix, Subspace};
use crate::scalar::{FieldKind, Scalar};

type Column<F> = Vec<(usize, F)>;

#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra<F> {
    names: Vec<String>,
    table: Vec<Column<F>>,
}

/// First violations found by [`LieAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub antisymmetry: Option<(usize, usize, usize)>,
    pub jacobi: Option<(usize, usize, usize)>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.antisymmetry.is_none() && self.jacobi.is_none()
    }
}

/// Quotient by an ideal, realized on the span of the ideal's free columns.
#[derive(Clone)]
pub struct Quotient<F> {
    pub algebra: LieAlgebra<F>,
    pub ideal: Subspace<F>,
    pub representatives: Vec<usize>,
}

pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

fn sparse<F: Scalar>(dense: Vec<F>) -> Column<F> {
    dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

impl<F: Scalar> LieAlgebra<F> {
    /// Builds an algebra from brackets `[e_i, e_j]` with `i != j`; the
    /// opposite order is filled in by antisymmetry. Repeated pairs accumulate.
    pub fn from_brackets<I>(names: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<(usize, F)>)>,
    {
        let n = names.len();
        let mut acc: BTreeMap<(usize, usize), Vec<F>> = BTreeMap::new();
        for (i, j, terms) in brackets {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch { expected: n, found: i.max(j) + 1 });
            }
            if i == j {
                return Err(Error::Format(format!("bracket [e{i}, e{i}] must be omitted")));
            }
            let (a, b, sign) = if i < j { (i, j, false) } else { (j, i, true) };
            let col = acc.entry((a, b)).or_insert_with(|| zero_vec(n));
            for (k, c) in terms {
                if k >= n {
                    return Err(Error::DimensionMismatch { expected: n, found: k + 1 });
                }
                let c = if sign { c.negated() } else { c };
                col[k] = col[k].plus(&c);
            }
        }
        let mut table = vec![Vec::new(); n * n];
        for ((i, j), col) in acc {
            let neg = col.iter().map(Scalar::negated).collect();
            table[i * n + j] = sparse(col);
            table[j * n + i] = sparse(neg);
        }
        Ok(LieAlgebra { names, table })
    }

    /// Raw tensor `c[i][j][k]`, taken as given (no antisymmetry fill).
    pub fn from_tensor(names: Vec<String>, c: Vec<Vec<Vec<F>>>) -> Result<Self> {
        let n = names.len();
        let mut table = Vec::with_capacity(n * n);
        if c.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: c.len() });
        }
        for row in c {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            for col in row {
                if col.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: col.len() });
                }
                table.push(sparse(col));
            }
        }
        Ok(LieAlgebra { names, table })
    }

    /// Builds the algebra whose bracket of basis vectors `i < j` is `f(i, j)`.
    pub fn from_fn(names: Vec<String>, f: impl Fn(usize, usize) -> Vec<F>) -> Self {
        let n = names.len();
        let mut table = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let col = f(i, j);
                let neg = col.iter().map(Scalar::negated).collect();
                table[i * n + j] = sparse(col);
                table[j * n + i] = sparse(neg);
            }
        }
        LieAlgebra { names, table }
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra { names: default_names(n), table: vec![Vec::new(); n * n] }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> FieldKind {
        F::KIND
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: names.len() });
        }
        self.names = names;
        Ok(self)
    }

    /// Nonzero terms of `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.table[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> F {
        self.structure(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(F::zero)
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<F> {
        let mut out = zero_vec(self.dim());
        for (k, c) in self.structure(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    /// `[x, y] = Σ x_i y_j [e_i, e_j]`.
    pub fn bracket(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
        }
        Ok(self.bracket_unchecked(x, y))
    }

    fn bracket_unchecked(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = zero_vec::<F>(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let col = &self.table[i * n + j];
                if col.is_empty() {
                    continue;
                }
                let w = xi.times(yj);
                for (k, c) in col {
                    out[*k].add_product(&w, c);
                }
            }
        }
        out
    }

    /// Matrix of `ad x`; column `j` is `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[F]) -> Result<Matrix<F>> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.bracket(x, &unit_vec(n, j))?;
            for (k, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    m.set(k, j, c);
                }
            }
        }
        Ok(m)
    }

    fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vec<F> {
        let n = self.dim();
        let mut out = zero_vec::<F>(n);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (m, coeff) in self.structure(a, b) {
                for (t, d) in self.structure(*m, c) {
                    out[*t].add_product(coeff, d);
                }
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut antisymmetry = None;
        'outer: for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let s = self.structure_constant(i, j, k).plus(&self.structure_constant(j, i, k));
                    if !s.is_zero() {
                        antisymmetry = Some((i, j, k));
                        break 'outer;
                    }
                }
            }
        }
        let mut jacobi = None;
        'jac: for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !is_zero_vec(&self.jacobi_sum(i, j, k)) {
                        jacobi = Some((i, j, k));
                        break 'jac;
                    }
                }
            }
        }
        ValidationReport { antisymmetry, jacobi }
    }

    pub fn full(&self) -> Subspace<F> {
        Subspace::full(self.dim())
    }

    /// Span of all `[a, b]` with `a ∈ A`, `b ∈ B`.
    pub fn bracket_spaces(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        let mut vs = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis() {
            for y in b.basis() {
                let v = self.bracket_unchecked(x, y);
                if !is_zero_vec(&v) {
                    vs.push(v);
                }
            }
        }
        Subspace::span(self.dim(), vs).expect("bracket lengths match")
    }

    pub fn derived_algebra(&self) -> Subspace<F> {
        let f = self.full();
        self.bracket_spaces(&f, &f)
    }

    fn series(&self, next: impl Fn(&Subspace<F>) -> Subspace<F>) -> Vec<Subspace<F>> {
        let mut out = vec![self.full()];
        loop {
            let last = out.last().expect("nonempty");
            let n = next(last);
            if &n == last {
                return out;
            }
            out.push(n);
        }
    }

    /// `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ …`, stopping at the first repeat.
    pub fn derived_series(&self) -> Vec<Subspace<F>> {
        self.series(|s| self.bracket_spaces(s, s))
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …`, stopping at the first repeat.
    pub fn lower_central_series(&self) -> Vec<Subspace<F>> {
        let f = self.full();
        self.series(|s| self.bracket_spaces(&f, s))
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(Subspace::is_zero)
    }

    /// Number of steps for the derived series to reach zero.
    pub fn derived_length(&self) -> Option<usize> {
        let s = self.derived_series();
        s.last().is_some_and(Subspace::is_zero).then(|| s.len() - 1)
    }

    /// `κ(x, y) = tr(ad x ∘ ad y)`.
    pub fn killing_form(&self) -> BilinearForm<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for a in 0..n {
            for b in a..n {
                let mut s = F::zero();
                for k in 0..n {
                    for (j, c1) in self.structure(a, k) {
                        if let Some((_, c2)) = self.structure(b, *j).iter().find(|(t, _)| *t == k) {
                            s.add_product(c1, c2);
                        }
                    }
                }
                if !s.is_zero() {
                    m.set(b, a, s.clone());
                    m.set(a, b, s);
                }
            }
        }
        BilinearForm::new(m, Symmetry::Symmetric).expect("trace form is symmetric")
    }

    /// Radical as the Killing-orthogonal of `[L, L]`.
    pub fn radical(&self) -> Subspace<F> {
        let n = self.dim();
        let d = self.derived_algebra();
        if d.is_zero() {
            return self.full();
        }
        let k = self.killing_form();
        let rows: Vec<Vec<F>> = d
            .basis()
            .iter()
            .map(|y| k.matrix().mul_vec(y).expect("square form"))
            .collect();
        let m = Matrix::from_rows(rows, n).expect("row lengths match");
        Subspace::span(n, m.nullspace()).expect("kernel lengths match")
    }

    pub fn center(&self) -> Subspace<F> {
        self.centralizer(&self.full())
    }

    pub fn is_subalgebra(&self, s: &Subspace<F>) -> bool {
        s.ambient_dim() == self.dim() && s.contains(&self.bracket_spaces(s, s))
    }

    pub fn is_ideal(&self, s: &Subspace<F>) -> bool {
        s.ambient_dim() == self.dim() && s.contains(&self.bracket_spaces(&self.full(), s))
    }

    /// Smallest subalgebra containing `s`.
    pub fn subalgebra_closure(&self, s: &Subspace<F>) -> Subspace<F> {
        let mut cur = s.clone();
        loop {
            let next = cur.sum(&self.bracket_spaces(&cur, &cur)).expect("same ambient");
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace<F>) -> Subspace<F> {
        let f = self.full();
        let mut cur = s.clone();
        loop {
            let next = cur.sum(&self.bracket_spaces(&f, &cur)).expect("same ambient");
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Solution space of `proj([x, s]) = 0` for all basis vectors `s`.
    fn solve_bracket_condition(&self, s: &Subspace<F>, target: &Subspace<F>) -> Subspace<F> {
        let n = self.dim();
        let free = target.free_columns();
        let mut rows: Vec<Vec<F>> = Vec::with_capacity(s.dim() * free.len());
        let cols: Vec<Vec<Vec<F>>> = s
            .basis()
            .iter()
            .map(|sv| (0..n).map(|j| target.quotient_coords(&self.bracket_unchecked(sv, &unit_vec(n, j)))).collect())
            .collect();
        for block in &cols {
            for c in 0..free.len() {
                let row: Vec<F> = block.iter().take(n).map(|col| col[c].clone()).collect();
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
        let m = Matrix::from_rows(rows, n).expect("row lengths match");
        Subspace::span(n, m.nullspace()).expect("kernel lengths match")
    }

    /// `{x : [x, s] = 0 for all s ∈ S}`.
    pub fn centralizer(&self, s: &Subspace<F>) -> Subspace<F> {
        self.solve_bracket_condition(s, &Subspace::zero(self.dim()))
    }

    /// `{x : [x, S] ⊆ S}`.
    pub fn normalizer_subalgebra(&self, s: &Subspace<F>) -> Subspace<F> {
        self.solve_bracket_condition(s, s)
    }

    /// `{x : [x, S] ⊆ T}`.
    pub fn transporter(&self, s: &Subspace<F>, t: &Subspace<F>) -> Subspace<F> {
        self.solve_bracket_condition(s, t)
    }

    /// The subalgebra `s` as an algebra in its own right, on its echelon basis.
    pub fn subalgebra(&self, s: &Subspace<F>) -> Result<LieAlgebra<F>> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: s.ambient_dim() });
        }
        let b = s.basis();
        let n = b.len();
        let mut table = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket_unchecked(&b[i], &b[j]);
                let c = s
                    .coords(&v)
                    .ok_or_else(|| Error::NotSubalgebra(format!("[b{i}, b{j}] leaves the span")))?;
                let neg = c.iter().map(Scalar::negated).collect();
                table[i * n + j] = sparse(c);
                table[j * n + i] = sparse(neg);
            }
        }
        Ok(LieAlgebra { names: default_names(n), table })
    }

    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<Quotient<F>> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotIdeal("quotient requires an ideal".into()));
        }
        let reps = ideal.free_columns();
        let names = reps.iter().map(|&r| self.names[r].clone()).collect();
        let n = self.dim();
        let algebra = LieAlgebra::from_fn(names, |a, b| {
            ideal.quotient_coords(&self.bracket_unchecked(&unit_vec(n, reps[a]), &unit_vec(n, reps[b])))
        });
        Ok(Quotient { algebra, ideal: ideal.clone(), representatives: reps })
    }

    /// Checks that `s` is a semisimple subalgebra complementary to the radical.
    pub fn verify_levi_complement(&self, s: &Subspace<F>) -> bool {
        if !self.is_subalgebra(s) {
            return false;
        }
        let r = self.radical();
        let Ok(meet) = s.intersect(&r) else { return false };
        let Ok(total) = s.sum(&r) else { return false };
        if !meet.is_zero() || !total.is_full() {
            return false;
        }
        match self.subalgebra(s) {
            Ok(sa) => sa.killing_form().is_nondegenerate(),
            Err(_) => false,
        }
    }

    pub fn direct_sum(&self, other: &LieAlgebra<F>) -> LieAlgebra<F> {
        let (n, m) = (self.dim(), other.dim());
        let t = n + m;
        let mut table = vec![Vec::new(); t * t];
        for i in 0..n {
            for j in 0..n {
                table[i * t + j] = self.structure(i, j).to_vec();
            }
        }
        for i in 0..m {
            for j in 0..m {
                table[(n + i) * t + n + j] =
                    other.structure(i, j).iter().map(|(k, c)| (n + k, c.clone())).collect();
            }
        }
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        LieAlgebra { names, table }
    }

    /// Entrywise image of the structure constants under a field map.
    pub fn map_scalars<G: Scalar>(&self, f: impl Fn(&F) -> G) -> LieAlgebra<G> {
        let table = self
            .table
            .iter()
            .map(|col| col.iter().map(|(k, c)| (*k, f(c))).filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        LieAlgebra { names: self.names.clone(), table }
    }

    /// Ordered pairs `(i, j, terms)` with `i < j` and `[e_i, e_j] != 0`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Column<F>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let col = self.structure(i, j);
                if !col.is_empty() {
                    out.push((i, j, col.to_vec()));
                }
            }
        }
        out
    }
}

impl<F: Scalar> fmt::Debug for Quotient<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quotient({:?} by {:?})", self.algebra, self.ideal)
    }
}

impl<F: Scalar> fmt::Debug for LieAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {}, {})", self.dim(), F::KIND)
    }
}
