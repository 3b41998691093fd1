//! Lie algebras given by rational structure constants.
//!
//! The tensor convention is `[e_i, e_j] = sum_k c[i][j][k] e_k`. Construction
//! validates antisymmetry and the Jacobi identity on all basis triples, so
//! every `LieAlgebra` in circulation is a genuine Lie algebra. Subspaces of an
//! algebra are plain [`Subspace`] values over its coordinate space.
//!
//! The radical is computed as the Killing-orthogonal complement of the derived
//! subalgebra (exact Cartan criterion), and the nilradical by splitting off a
//! Cartan subalgebra of the radical and solving a linear system on the
//! semisimple parts of its adjoints; both results are re-verified after the
//! fact.

use crate::decomp::{fitting_decomposition, jordan_chevalley};
use crate::mat::{
    std_basis_vec, symmetric_signature, vec_add, vec_is_zero, vec_scale, vec_zero, Mat, Subspace,
};
use crate::rat::Rat;
use std::sync::OnceLock;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("antisymmetry violated at basis pair ({i}, {j})")]
    AntisymmetryViolation { i: usize, j: usize },
    #[error("Jacobi identity violated at basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("operation requires a semisimple algebra")]
    NotSemisimple,
    #[error("subspace is not closed under the bracket")]
    NotBracketClosed,
    #[error("structure constant tensor has inconsistent dimensions")]
    MalformedTensor,
}

/// A finite-dimensional Lie algebra over the rationals.
#[derive(Clone)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    // c[i][j][k]: coefficient of e_k in [e_i, e_j].
    structure: Vec<Vec<Vec<Rat>>>,
    profile: OnceLock<Box<StructureProfile>>,
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra(dim {}, basis {:?})", self.dim, self.labels)
    }
}

/// Everything the structure theory of one algebra feeds to the verifiers.
#[derive(Clone, Debug)]
pub struct StructureProfile {
    pub nilradical: Subspace,
    pub solvable_radical: Subspace,
    pub derived_series: Vec<Subspace>,
    pub lower_central_series: Vec<Subspace>,
    pub center: Subspace,
    pub killing_form: Mat,
    pub is_semisimple: bool,
    pub is_solvable: bool,
    pub is_nilpotent: bool,
    pub nilpotency_class: Option<usize>,
}

impl LieAlgebra {
    /// Build and validate an algebra from its structure tensor.
    pub fn new(labels: Vec<String>, structure: Vec<Vec<Vec<Rat>>>) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if structure.len() != dim
            || structure
                .iter()
                .any(|p| p.len() != dim || p.iter().any(|r| r.len() != dim))
        {
            return Err(AlgebraError::MalformedTensor);
        }
        let alg = LieAlgebra {
            dim,
            labels,
            structure,
            profile: OnceLock::new(),
        };
        alg.validate()?;
        Ok(alg)
    }

    /// Build from the nonzero brackets `[e_i, e_j] = sum c e_k` for `i < j`;
    /// the antisymmetric completion is automatic.
    pub fn from_brackets(
        labels: Vec<String>,
        brackets: &[(usize, usize, Vec<(usize, Rat)>)],
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        let mut c = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        for (i, j, terms) in brackets {
            for (k, coeff) in terms {
                c[*i][*j][*k] = &c[*i][*j][*k] + coeff;
                c[*j][*i][*k] = &c[*j][*i][*k] - coeff;
            }
        }
        LieAlgebra::new(labels, c)
    }

    pub fn abelian(dim: usize) -> Self {
        let labels = (0..dim).map(|i| format!("e{}", i + 1)).collect();
        LieAlgebra::new(labels, vec![vec![vec![Rat::zero(); dim]; dim]; dim])
            .expect("abelian algebra is trivially valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.structure[i][j][k]
    }

    /// Check antisymmetry and the Jacobi identity on all basis triples,
    /// reporting the first violation.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if &self.structure[i][j][k] + &self.structure[j][i][k] != Rat::zero() {
                        return Err(AlgebraError::AntisymmetryViolation { i, j });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket(&self.bracket_basis(j, k), &std_basis_vec(n, i));
                    let b = self.bracket(&self.bracket_basis(k, i), &std_basis_vec(n, j));
                    let c = self.bracket(&self.bracket_basis(i, j), &std_basis_vec(n, k));
                    // [[y,z],x] + [[z,x],y] + [[x,y],z] = 0
                    let sum = vec_add(&vec_add(&a, &b), &c);
                    if !vec_is_zero(&sum) {
                        return Err(AlgebraError::JacobiViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        self.structure[i][j].clone()
    }

    /// Bilinear bracket of coordinate vectors.
    pub fn bracket(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = vec_zero(self.dim);
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let f = &u[i] * &v[j];
                for k in 0..self.dim {
                    if !self.structure[i][j][k].is_zero() {
                        out[k] += &(&self.structure[i][j][k] * &f);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(u): v -> [u, v]` in the algebra basis.
    pub fn adjoint(&self, u: &[Rat]) -> Mat {
        let n = self.dim;
        let mut m = Mat::zeros(n, n);
        for j in 0..n {
            m.set_column(j, &self.bracket(u, &std_basis_vec(n, j)));
        }
        m
    }

    pub fn adjoint_basis(&self, i: usize) -> Mat {
        self.adjoint(&std_basis_vec(self.dim, i))
    }

    /// Span of `[a, b]` over basis vectors of the two subspaces.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut gens = Vec::new();
        for u in a.basis_vectors() {
            for v in b.basis_vectors() {
                let w = self.bracket(&u, &v);
                if !vec_is_zero(&w) {
                    gens.push(w);
                }
            }
        }
        Subspace::from_vectors(self.dim, &gens)
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_subspaces(&full, &full)
    }

    /// Derived series starting at the full algebra, until stabilization.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_subspaces(last, last);
            if &next == last {
                break;
            }
            series.push(next.clone());
            if next.is_zero() {
                break;
            }
        }
        series
    }

    /// Lower central series `C^1 = g, C^{k+1} = [g, C^k]`, until stabilization.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_subspaces(&full, last);
            if &next == last {
                break;
            }
            series.push(next.clone());
            if next.is_zero() {
                break;
            }
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero() || self.dim == 0
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero() || self.dim == 0
    }

    /// Smallest `c` with vanishing `C^{c+1}`, when nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        if series.last().unwrap().is_zero() {
            Some(series.len() - 1)
        } else if self.dim == 0 {
            Some(0)
        } else {
            None
        }
    }

    /// `{x : [x, g] = 0}`.
    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim))
    }

    /// `{x : [x, s] = 0}`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim;
        if s.is_zero() || n == 0 {
            return Subspace::full(n);
        }
        // For x = sum c_i e_i the condition [x, v] = 0 is linear in c.
        let mut rows = Vec::new();
        for v in s.basis_vectors() {
            // Column i of this block is [e_i, v].
            for k in 0..n {
                let mut row = Vec::with_capacity(n);
                for i in 0..n {
                    row.push(self.bracket(&std_basis_vec(n, i), &v)[k].clone());
                }
                rows.push(row);
            }
        }
        Subspace::from_columns(n, Mat::from_rows(rows).kernel())
    }

    /// `{x : [x, s] <= s}`.
    pub fn normalizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim;
        if s.is_zero() || s.is_full() || n == 0 {
            return Subspace::full(n);
        }
        let membership = s.membership_conditions();
        let mut rows = Vec::new();
        for v in s.basis_vectors() {
            let mut block = Mat::zeros(n, n);
            for i in 0..n {
                block.set_column(i, &self.bracket(&std_basis_vec(n, i), &v));
            }
            let cond = &membership * &block;
            for r in 0..cond.rows() {
                rows.push(cond.row(r));
            }
        }
        Subspace::from_columns(n, Mat::from_rows(rows).kernel())
    }

    /// Killing form `k(x, y) = tr(ad x . ad y)` as a Gram matrix.
    pub fn killing_form(&self) -> Mat {
        let n = self.dim;
        let ads: Vec<Mat> = (0..n).map(|i| self.adjoint_basis(i)).collect();
        let mut k = Mat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = (&ads[i] * &ads[j]).trace();
                *k.at_mut(i, j) = v.clone();
                *k.at_mut(j, i) = v;
            }
        }
        k
    }

    /// Cartan criterion: semisimple iff the Killing form is nondegenerate.
    pub fn is_semisimple(&self) -> bool {
        self.dim > 0 && self.killing_form().rank() == self.dim
    }

    /// Negative definiteness of the Killing form, for semisimple algebras.
    pub fn is_compact_type(&self) -> Result<bool, AlgebraError> {
        if !self.is_semisimple() {
            return Err(AlgebraError::NotSemisimple);
        }
        let (pos, neg, zero) = symmetric_signature(&self.killing_form());
        Ok(pos == 0 && zero == 0 && neg == self.dim)
    }

    /// Maximal solvable ideal: the Killing-orthogonal complement of the
    /// derived subalgebra.
    pub fn solvable_radical(&self) -> Subspace {
        let n = self.dim;
        if n == 0 {
            return Subspace::zero(0);
        }
        let k = self.killing_form();
        let derived = self.derived_subalgebra();
        if derived.is_zero() {
            return Subspace::full(n);
        }
        let mut rows = Vec::new();
        for d in derived.basis_vectors() {
            rows.push(k.apply(&d));
        }
        let radical = Subspace::from_columns(n, Mat::from_rows(rows).kernel());
        debug_assert!(self.is_ideal(&radical));
        debug_assert!(self
            .subalgebra(&radical)
            .expect("radical is bracket closed")
            .is_solvable());
        radical
    }

    /// Maximal nilpotent ideal.
    ///
    /// Inside the solvable radical, the elements with nilpotent adjoint form
    /// exactly the nilradical. They are computed by splitting the radical into
    /// a Cartan subalgebra `H` plus the Fitting-one part of a regular element
    /// (which lies in the derived algebra, hence in the nilradical), and then
    /// solving `sum c_j s(h_j) = 0` for the semisimple parts `s(h_j)` of the
    /// adjoints of the Cartan basis; on a nilpotent subalgebra the semisimple
    /// part is linear in the element. The result is re-verified to be a
    /// nilpotent ideal.
    pub fn nilradical(&self) -> Subspace {
        let radical = self.solvable_radical();
        let nil = self.nilradical_within(&radical);
        assert!(self.is_ideal(&nil), "nilradical must be an ideal");
        assert!(
            self.subalgebra(&nil)
                .expect("ideals are bracket closed")
                .is_nilpotent(),
            "nilradical must be nilpotent"
        );
        nil
    }

    fn nilradical_within(&self, radical: &Subspace) -> Subspace {
        let n = self.dim;
        if radical.is_zero() {
            return Subspace::zero(n);
        }
        let restricted = self
            .subalgebra(radical)
            .expect("the radical is bracket closed");
        if restricted.is_nilpotent() {
            return radical.clone();
        }
        let (cartan, fitting_one) = restricted.cartan_split();
        // Lift back to ambient coordinates.
        let lift = |v: &[Rat]| -> Vec<Rat> {
            let mut out = vec_zero(n);
            for (c, b) in v.iter().zip(radical.basis_vectors()) {
                out = vec_add(&out, &vec_scale(&b, c));
            }
            out
        };
        let mut generators: Vec<Vec<Rat>> = fitting_one.basis_vectors().iter().map(|v| lift(v)).collect();
        // Semisimple parts of ad(h_j) for the lifted Cartan basis; their joint
        // kernel is the nilpotent-adjoint part of the Cartan subalgebra.
        let cartan_lifted: Vec<Vec<Rat>> = cartan.basis_vectors().iter().map(|v| lift(v)).collect();
        let mut stack = Mat::zeros(n * n, cartan_lifted.len());
        for (j, h) in cartan_lifted.iter().enumerate() {
            let (s, _) = jordan_chevalley(&self.adjoint(h));
            stack.set_column(j, &s.vectorize());
        }
        let ker = stack.kernel();
        for c in 0..ker.cols() {
            let coeffs = ker.column(c);
            let mut v = vec_zero(n);
            for (coef, h) in coeffs.iter().zip(&cartan_lifted) {
                v = vec_add(&v, &vec_scale(h, coef));
            }
            generators.push(v);
        }
        Subspace::from_vectors(n, &generators)
    }

    /// Split a solvable, non-nilpotent algebra as `H + E1(x)` where `H` is a
    /// Cartan subalgebra arising as the Fitting-null space of a regular
    /// element `x` and `E1(x)` is its Fitting-one space.
    fn cartan_split(&self) -> (Subspace, Subspace) {
        let n = self.dim;
        let mut best: Option<(Subspace, Subspace)> = None;
        for candidate in regular_candidates(n) {
            let ad = self.adjoint(&candidate);
            let (e0, e1) = fitting_decomposition(&ad);
            if let Some((b0, _)) = &best {
                if e0.dim() >= b0.dim() {
                    continue;
                }
            }
            // A Fitting-null space of minimal dimension is a Cartan
            // subalgebra; verify nilpotency and self-normalization instead of
            // trusting regularity of the candidate.
            let sub = match self.subalgebra(&e0) {
                Ok(s) => s,
                Err(_) => continue,
            };
            if sub.is_nilpotent() && self.normalizer(&e0) == e0 {
                best = Some((e0, e1));
            }
        }
        best.expect("a regular element exists among the deterministic candidates")
    }

    /// Largest ideal of the algebra contained in `s`, by fixed-point
    /// refinement `J_{k+1} = {x in J_k : [g, x] <= J_k}`.
    pub fn maximal_ideal_within(&self, s: &Subspace) -> Subspace {
        let n = self.dim;
        let mut current = s.clone();
        loop {
            if current.is_zero() || current.is_full() {
                // The zero space and the whole algebra are ideals already.
                return current;
            }
            let membership = current.membership_conditions();
            let mut rows: Vec<Vec<Rat>> = Vec::new();
            for r in 0..membership.rows() {
                rows.push(membership.row(r));
            }
            for i in 0..n {
                let cond = &membership * &self.adjoint_basis(i);
                for r in 0..cond.rows() {
                    rows.push(cond.row(r));
                }
            }
            let next = Subspace::from_columns(n, Mat::from_rows(rows).kernel());
            if next == current {
                return next;
            }
            current = next;
        }
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.contains(&self.bracket_subspaces(&Subspace::full(self.dim), s))
    }

    /// Smallest ideal containing `s`, by repeated bracketing with the algebra.
    pub fn ideal_generated_by(&self, s: &Subspace) -> Subspace {
        let full = Subspace::full(self.dim);
        let mut current = s.clone();
        loop {
            let next = current.sum(&self.bracket_subspaces(&full, &current));
            if next == current {
                return next;
            }
            current = next;
        }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains(&self.bracket_subspaces(s, s))
    }

    /// The restricted algebra on a bracket-closed subspace, with basis the
    /// canonical basis of the subspace.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra, AlgebraError> {
        let k = s.dim();
        let basis = s.basis_vectors();
        let mut c = vec![vec![vec![Rat::zero(); k]; k]; k];
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                let w = self.bracket(&basis[i], &basis[j]);
                match s.coordinates_of(&w) {
                    Some(coords) => c[i][j] = coords,
                    None => return Err(AlgebraError::NotBracketClosed),
                }
            }
        }
        let labels = (0..k).map(|i| format!("s{}", i + 1)).collect();
        LieAlgebra::new(labels, c)
    }

    /// Quotient by an ideal: the algebra on a deterministic complement,
    /// together with the projection matrix from ambient coordinates to
    /// quotient coordinates.
    pub fn quotient(&self, ideal: &Subspace) -> (LieAlgebra, Mat) {
        assert!(self.is_ideal(ideal), "quotient needs an ideal");
        let n = self.dim;
        let comp = ideal.echelon_complement();
        let q = comp.dim();
        // Change of basis [ideal | complement]; the projection keeps the
        // complement coordinates.
        let basis = ideal.basis().hstack(comp.basis());
        let inv = basis.inverse().expect("ideal + complement span everything");
        let proj = Mat::from_fn(q, n, |i, j| inv.at(ideal.dim() + i, j).clone());
        let comp_vectors = comp.basis_vectors();
        let mut c = vec![vec![vec![Rat::zero(); q]; q]; q];
        for i in 0..q {
            for j in 0..q {
                if i == j {
                    continue;
                }
                let w = self.bracket(&comp_vectors[i], &comp_vectors[j]);
                c[i][j] = proj.apply(&w);
            }
        }
        let labels = (0..q).map(|i| format!("q{}", i + 1)).collect();
        let quot = LieAlgebra::new(labels, c).expect("quotient by an ideal is a Lie algebra");
        (quot, proj)
    }

    /// The same algebra expressed in a new basis; column `j` of `p` holds the
    /// old coordinates of the new basis vector `f_j`.
    pub fn change_basis(&self, p: &Mat, labels: Vec<String>) -> LieAlgebra {
        assert!(p.is_square() && p.rows() == self.dim);
        let p_inv = p.inverse().expect("basis change must be invertible");
        let n = self.dim;
        let mut c = vec![vec![vec![Rat::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let w = self.bracket(&p.column(i), &p.column(j));
                c[i][j] = p_inv.apply(&w);
            }
        }
        LieAlgebra::new(labels, c).expect("basis change preserves the Jacobi identity")
    }

    /// Direct product of two algebras (brackets across factors vanish).
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim;
        let m = other.dim;
        let dim = n + m;
        let mut labels = Vec::with_capacity(dim);
        for l in &self.labels {
            labels.push(format!("l.{}", l));
        }
        for l in &other.labels {
            labels.push(format!("r.{}", l));
        }
        let mut c = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[i][j][k] = self.structure[i][j][k].clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    c[n + i][n + j][n + k] = other.structure[i][j][k].clone();
                }
            }
        }
        LieAlgebra::new(labels, c).expect("direct sums preserve the Jacobi identity")
    }

    /// Full structure profile, computed once and cached.
    pub fn profile(&self) -> &StructureProfile {
        self.profile.get_or_init(|| {
            let killing = self.killing_form();
            Box::new(StructureProfile {
                nilradical: self.nilradical(),
                solvable_radical: self.solvable_radical(),
                derived_series: self.derived_series(),
                lower_central_series: self.lower_central_series(),
                center: self.center(),
                is_semisimple: self.dim > 0 && killing.rank() == self.dim,
                killing_form: killing,
                is_solvable: self.is_solvable(),
                is_nilpotent: self.is_nilpotent(),
                nilpotency_class: self.nilpotency_class(),
            })
        })
    }
}

/// Deterministic coefficient sequences used to find a regular element: the
/// standard basis vectors first, then rows of powers (1, t, t^2, ...).
fn regular_candidates(n: usize) -> Vec<Vec<Rat>> {
    let mut out = Vec::new();
    for i in 0..n {
        out.push(std_basis_vec(n, i));
    }
    for t in 1..=(2 * n as i64 + 2) {
        let mut v = Vec::with_capacity(n);
        let mut acc = Rat::one();
        for _ in 0..n {
            v.push(acc.clone());
            acc = &acc * &Rat::int(t);
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
pub mod test_algebras {
    use super::*;

    /// Heisenberg algebra `H_n`: `[x_i, y_i] = z`.
    pub fn heisenberg(n: usize) -> LieAlgebra {
        let mut labels: Vec<String> = Vec::new();
        for i in 1..=n {
            labels.push(format!("x{}", i));
            labels.push(format!("y{}", i));
        }
        labels.push("z".into());
        let z = 2 * n;
        let brackets: Vec<(usize, usize, Vec<(usize, Rat)>)> = (0..n)
            .map(|i| (2 * i, 2 * i + 1, vec![(z, Rat::one())]))
            .collect();
        LieAlgebra::from_brackets(labels, &brackets).unwrap()
    }

    /// Two-dimensional solvable algebra `[x, y] = y`.
    pub fn two_dim_solvable() -> LieAlgebra {
        LieAlgebra::from_brackets(
            vec!["x".into(), "y".into()],
            &[(0, 1, vec![(1, Rat::one())])],
        )
        .unwrap()
    }

    /// Compact form: `[e1, e2] = e3` cyclically.
    pub fn su2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            vec!["e1".into(), "e2".into(), "e3".into()],
            &[
                (0, 1, vec![(2, Rat::one())]),
                (1, 2, vec![(0, Rat::one())]),
                (2, 0, vec![(1, Rat::one())]),
            ],
        )
        .unwrap()
    }

    /// Split form: `[h, e] = 2e, [h, f] = -2f, [e, f] = h`.
    pub fn sl2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            vec!["h".into(), "e".into(), "f".into()],
            &[
                (0, 1, vec![(1, Rat::int(2))]),
                (0, 2, vec![(2, Rat::int(-2))]),
                (1, 2, vec![(0, Rat::one())]),
            ],
        )
        .unwrap()
    }

    /// The solvable algebra `G_n` extending the Heisenberg algebra by the
    /// grading derivation: basis `a, x_1, y_1, ..., x_n, y_n, z` with
    /// `[x_i, y_i] = z`, `[a, x_i] = x_i`, `[a, y_i] = y_i`, `[a, z] = 2z`.
    pub fn g_n(n: usize) -> LieAlgebra {
        let mut labels: Vec<String> = vec!["a".into()];
        for i in 1..=n {
            labels.push(format!("x{}", i));
            labels.push(format!("y{}", i));
        }
        labels.push("z".into());
        let z = 2 * n + 1;
        let mut brackets: Vec<(usize, usize, Vec<(usize, Rat)>)> = Vec::new();
        for i in 0..n {
            let x = 1 + 2 * i;
            let y = 2 + 2 * i;
            brackets.push((x, y, vec![(z, Rat::one())]));
            brackets.push((0, x, vec![(x, Rat::one())]));
            brackets.push((0, y, vec![(y, Rat::one())]));
        }
        brackets.push((0, z, vec![(z, Rat::int(2))]));
        LieAlgebra::from_brackets(labels, &brackets).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_algebras::*;
    use super::*;

    fn span(alg_dim: usize, idx: &[usize]) -> Subspace {
        Subspace::from_vectors(
            alg_dim,
            &idx.iter()
                .map(|&i| std_basis_vec(alg_dim, i))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn validate_accepts_standard_algebras() {
        assert!(LieAlgebra::abelian(4).validate().is_ok());
        assert!(heisenberg(1).validate().is_ok());
        assert!(su2().validate().is_ok());
        assert!(sl2().validate().is_ok());
        assert!(g_n(2).validate().is_ok());
    }

    #[test]
    fn validate_rejects_antisymmetry_violation() {
        let mut c = vec![vec![vec![Rat::zero(); 2]; 2]; 2];
        c[0][1][0] = Rat::one();
        c[1][0][0] = Rat::one();
        match LieAlgebra::new(vec!["x".into(), "y".into()], c) {
            Err(AlgebraError::AntisymmetryViolation { i: 0, j: 1 }) => {}
            other => panic!("expected antisymmetry violation, got {:?}", other),
        }
    }

    #[test]
    fn validate_rejects_jacobi_violation() {
        // [x,y] = z, [x,z] = x, [y,z] = y: the cyclic sum at (x,y,z) is 2z.
        let res = LieAlgebra::from_brackets(
            vec!["x".into(), "y".into(), "z".into()],
            &[
                (0, 1, vec![(2, Rat::one())]),
                (0, 2, vec![(0, Rat::one())]),
                (1, 2, vec![(1, Rat::one())]),
            ],
        );
        match res {
            Err(AlgebraError::JacobiViolation { i: 0, j: 1, k: 2 }) => {}
            other => panic!("expected Jacobi violation, got {:?}", other),
        }
    }

    #[test]
    fn bracket_heisenberg() {
        let h = heisenberg(1);
        let x = std_basis_vec(3, 0);
        let y = std_basis_vec(3, 1);
        assert_eq!(h.bracket(&x, &y), std_basis_vec(3, 2));
        assert!(vec_is_zero(&h.bracket(&x, &x)));
    }

    #[test]
    fn bracket_g1_grading() {
        let g = g_n(1);
        let a = std_basis_vec(4, 0);
        let z = std_basis_vec(4, 3);
        assert_eq!(g.bracket(&a, &z), vec_scale(&z, &Rat::int(2)));
    }

    #[test]
    fn adjoint_matrices() {
        let h = heisenberg(1);
        let ad_x = h.adjoint_basis(0);
        // ad(x) sends y to z and kills x, z.
        let mut expected = Mat::zeros(3, 3);
        *expected.at_mut(2, 1) = Rat::one();
        assert_eq!(ad_x, expected);
        assert!(LieAlgebra::abelian(3).adjoint_basis(1).is_zero());
    }

    #[test]
    fn adjoint_g1_eigenvalues() {
        let g = g_n(1);
        let ad_a = g.adjoint_basis(0);
        // Eigenvalues 0 on a, 1 on x,y, 2 on z.
        let mut expected = Mat::zeros(4, 4);
        *expected.at_mut(1, 1) = Rat::one();
        *expected.at_mut(2, 2) = Rat::one();
        *expected.at_mut(3, 3) = Rat::int(2);
        assert_eq!(ad_a, expected);
    }

    #[test]
    fn series_and_flags() {
        let h = heisenberg(1);
        let lcs = h.lower_central_series();
        assert_eq!(lcs.len(), 3);
        assert_eq!(lcs[1], span(3, &[2]));
        assert!(lcs[2].is_zero());
        assert!(h.is_nilpotent());
        assert_eq!(h.nilpotency_class(), Some(2));

        let ab = LieAlgebra::abelian(2);
        let ds = ab.derived_series();
        assert_eq!(ds.len(), 2);
        assert!(ds[1].is_zero());

        assert!(two_dim_solvable().is_solvable());
        assert!(!two_dim_solvable().is_nilpotent());
        assert!(!sl2().is_solvable());
    }

    #[test]
    fn center_of_heisenberg() {
        assert_eq!(heisenberg(1).center(), span(3, &[2]));
        assert_eq!(heisenberg(2).center(), span(5, &[4]));
    }

    #[test]
    fn killing_forms() {
        assert!(LieAlgebra::abelian(3).killing_form().is_zero());
        // su2 cyclic basis: kappa = -2 Id (direct trace computation).
        assert_eq!(su2().killing_form(), Mat::identity(3).scale(&Rat::int(-2)));
        // [x,y] = y: kappa(x,x) = 1, everything else 0.
        let mut expected = Mat::zeros(2, 2);
        *expected.at_mut(0, 0) = Rat::one();
        assert_eq!(two_dim_solvable().killing_form(), expected);
    }

    #[test]
    fn killing_associativity_su2_sl2() {
        for alg in [su2(), sl2(), g_n(1)] {
            let k = alg.killing_form();
            let n = alg.dim();
            for i in 0..n {
                for j in 0..n {
                    for l in 0..n {
                        let left = k.apply(&alg.bracket_basis(i, j));
                        let lhs = std_basis_vec(n, l)
                            .iter()
                            .zip(&left)
                            .map(|(a, b)| a * b)
                            .fold(Rat::zero(), |acc, v| &acc + &v);
                        let right = k.apply(&alg.bracket_basis(j, l));
                        let rhs = std_basis_vec(n, i)
                            .iter()
                            .zip(&right)
                            .map(|(a, b)| a * b)
                            .fold(Rat::zero(), |acc, v| &acc + &v);
                        assert_eq!(lhs, rhs, "kappa([e{},e{}],e{}) != kappa(e{},[e{},e{}])", i, j, l, i, j, l);
                    }
                }
            }
        }
    }

    #[test]
    fn compact_type_classification() {
        assert_eq!(su2().is_compact_type(), Ok(true));
        assert_eq!(sl2().is_compact_type(), Ok(false));
        assert_eq!(
            LieAlgebra::abelian(2).is_compact_type(),
            Err(AlgebraError::NotSemisimple)
        );
        let (pos, neg, zero) = symmetric_signature(&sl2().killing_form());
        assert_eq!((pos, neg, zero), (2, 1, 0));
    }

    #[test]
    fn solvable_radical_cases() {
        let s = two_dim_solvable();
        assert!(s.solvable_radical().is_full());
        assert!(sl2().solvable_radical().is_zero());
        let mixed = sl2().direct_sum(&LieAlgebra::abelian(2));
        assert_eq!(mixed.solvable_radical(), span(5, &[3, 4]));
    }

    #[test]
    fn nilradical_cases() {
        // Nilpotent algebra: the whole thing.
        assert!(heisenberg(2).nilradical().is_full());
        // [x,y] = y: span{y}.
        assert_eq!(two_dim_solvable().nilradical(), span(2, &[1]));
        // G_1: the Heisenberg part x, y, z.
        assert_eq!(g_n(1).nilradical(), span(4, &[1, 2, 3]));
        // Semisimple: zero.
        assert!(sl2().nilradical().is_zero());
        // Abelian: everything.
        assert!(LieAlgebra::abelian(3).nilradical().is_full());
    }

    #[test]
    fn nilradical_oscillator_pattern() {
        // a acting by rotation on (x, y): nilradical is span{x, y} even though
        // the Killing radical is everything.
        let alg = LieAlgebra::from_brackets(
            vec!["a".into(), "x".into(), "y".into()],
            &[
                (0, 1, vec![(2, Rat::one())]),
                (0, 2, vec![(1, Rat::int(-1))]),
            ],
        )
        .unwrap();
        assert!(alg.is_solvable());
        assert_eq!(alg.nilradical(), span(3, &[1, 2]));
    }

    #[test]
    fn nilradical_mixed_split_rotation() {
        // One rotation plane and one split plane; kappa(a, a) = 0, so the
        // Killing-isotropic trap would wrongly keep `a`.
        let alg = LieAlgebra::from_brackets(
            vec![
                "a".into(),
                "x1".into(),
                "y1".into(),
                "x2".into(),
                "y2".into(),
            ],
            &[
                (0, 1, vec![(2, Rat::one())]),
                (0, 2, vec![(1, Rat::int(-1))]),
                (0, 3, vec![(3, Rat::one())]),
                (0, 4, vec![(4, Rat::int(-1))]),
            ],
        )
        .unwrap();
        assert_eq!(
            symmetric_signature(&alg.killing_form()).0,
            symmetric_signature(&alg.killing_form()).1
        );
        assert_eq!(alg.nilradical(), span(5, &[1, 2, 3, 4]));
    }

    #[test]
    fn maximal_ideal_within_cases() {
        let s = two_dim_solvable();
        assert!(s.maximal_ideal_within(&Subspace::full(2)).is_full());
        assert!(s.maximal_ideal_within(&span(2, &[0])).is_zero());
        let h = heisenberg(1);
        assert_eq!(h.maximal_ideal_within(&span(3, &[2])), span(3, &[2]));
    }

    #[test]
    fn quotient_by_radical_is_semisimple() {
        let mixed = sl2().direct_sum(&LieAlgebra::abelian(2));
        let rad = mixed.solvable_radical();
        let (q, _) = mixed.quotient(&rad);
        assert_eq!(q.dim(), 3);
        assert!(q.is_semisimple());
        assert_eq!(q.is_compact_type(), Ok(false));

        let gq = g_n(1);
        let (q, _) = gq.quotient(&gq.solvable_radical());
        assert_eq!(q.dim(), 0);
    }

    #[test]
    fn centralizer_normalizer() {
        let h = heisenberg(1);
        assert_eq!(h.centralizer(&span(3, &[0])), span(3, &[0, 2]));
        assert!(h.normalizer(&span(3, &[0, 2])).is_full());
        let s = two_dim_solvable();
        assert_eq!(s.normalizer(&span(2, &[0])), span(2, &[0]));
    }

    #[test]
    fn change_basis_preserves_structure() {
        let g = g_n(1);
        let p = Mat::from_i64(&[
            &[1, 0, 0, 0],
            &[2, 1, 0, 0],
            &[0, 1, 1, 0],
            &[1, 0, 2, 1],
        ]);
        let labels = g.labels().to_vec();
        let moved = g.change_basis(&p, labels);
        assert!(moved.validate().is_ok());
        assert!(!moved.is_nilpotent());
        assert!(moved.is_solvable());
        assert_eq!(moved.nilradical().dim(), 3);
    }

    #[test]
    fn dim_zero_everything_degenerates() {
        let z = LieAlgebra::abelian(0);
        assert!(z.nilradical().is_zero());
        assert!(z.solvable_radical().is_zero());
        assert!(z.center().is_zero());
        assert!(z.is_solvable());
        assert!(z.is_nilpotent());
    }

    #[test]
    fn profile_is_consistent() {
        let g = g_n(1);
        let p = g.profile();
        assert!(p.solvable_radical.contains(&p.nilradical));
        assert!(!p.is_semisimple);
        assert!(p.is_solvable);
        assert!(!p.is_nilpotent);
        assert_eq!(p.nilradical.dim(), 3);
    }
}
