//! Bilinear forms, J-structures, and h-structures on Lie algebras.
//!
//! A form is a Gram matrix tagged symmetric or skew. A J-structure is an
//! endomorphism with `J^2 = -id` modulo its kernel and `V = ker J (+) im J`.
//! An h-structure couples a J-structure with a J-invariant symmetric form
//! whose kernel contains `ker J`; its fundamental two-form is
//! `omega(u, v) = <Ju, v>`. The homogeneous-space model conditions
//! (J1), (J2), (J4), (H) are checked by [`validate_homogeneous_model`].

use crate::lie::LieAlgebra;
use crate::mat::{std_basis_vec, vec_add, vec_is_zero, Mat, Subspace};
use crate::rat::Rat;
use serde::Serialize;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum FormError {
    #[error("gram matrix does not match the declared kind ({0:?})")]
    KindMismatch(FormKind),
    #[error("operator does not satisfy J^2 = -id modulo its kernel")]
    JSquareViolation,
    #[error("kernel and image of the J operator do not split the space")]
    KernelImageOverlap,
    #[error("metric is not J-invariant")]
    MetricNotJInvariant,
    #[error("kernel of J is not contained in the kernel of the metric")]
    JKernelNotInMetricKernel,
    #[error("h-structure is degenerate where a nondegenerate one is required")]
    DegenerateHStructure,
    #[error("operation requires a {expected:?} form")]
    WrongKind { expected: FormKind },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symmetric,
    Skew,
}

/// A symmetric or skew bilinear form given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Mat,
    kind: FormKind,
}

impl BilinearForm {
    pub fn new(gram: Mat, kind: FormKind) -> Result<Self, FormError> {
        let ok = match kind {
            FormKind::Symmetric => gram.is_symmetric(),
            FormKind::Skew => gram.is_skew_symmetric(),
        };
        if !ok {
            return Err(FormError::KindMismatch(kind));
        }
        Ok(BilinearForm { gram, kind })
    }

    pub fn symmetric(gram: Mat) -> Result<Self, FormError> {
        BilinearForm::new(gram, FormKind::Symmetric)
    }

    pub fn skew(gram: Mat) -> Result<Self, FormError> {
        BilinearForm::new(gram, FormKind::Skew)
    }

    pub fn zero(dim: usize, kind: FormKind) -> Self {
        BilinearForm {
            gram: Mat::zeros(dim, dim),
            kind,
        }
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, u: &[Rat], v: &[Rat]) -> Rat {
        let gv = self.gram.apply(v);
        u.iter()
            .zip(&gv)
            .fold(Rat::zero(), |acc, (a, b)| &acc + &(a * b))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }
}

/// `{v : f(v, w) = 0 for all w}`.
pub fn form_kernel(f: &BilinearForm) -> Subspace {
    // For symmetric and skew forms the left and right kernels agree.
    Subspace::from_columns(f.dim(), f.gram().kernel())
}

/// `{v : f(v, s) = 0}`.
pub fn orthogonal_complement(f: &BilinearForm, s: &Subspace) -> Subspace {
    let n = f.dim();
    if s.is_zero() {
        return Subspace::full(n);
    }
    let mut rows = Vec::new();
    for b in s.basis_vectors() {
        rows.push(f.gram().apply(&b));
    }
    Subspace::from_columns(n, Mat::from_rows(rows).kernel())
}

/// The subalgebra of `f`-skew elements
/// `{x : f([x,y],z) = -f(y,[x,z]) for all y, z}`, solved as the kernel of
/// `x -> ad(x)^T G + G ad(x)`.
pub fn skew_set(algebra: &LieAlgebra, f: &BilinearForm) -> Subspace {
    let n = algebra.dim();
    assert_eq!(f.dim(), n);
    let mut stack = Mat::zeros(n * n, n);
    for i in 0..n {
        let ad = algebra.adjoint_basis(i);
        let cond = &(&ad.transpose() * f.gram()) + &(f.gram() * &ad);
        stack.set_column(i, &cond.vectorize());
    }
    let out = Subspace::from_columns(n, stack.kernel());
    debug_assert!(
        algebra.is_subalgebra(&out),
        "the skew set is always a subalgebra"
    );
    out
}

/// Independent route for the skew set: enumerate the defining condition over
/// all basis pairs directly. Kept separate from [`skew_set`] so the two can be
/// compared as an oracle.
pub fn skew_set_by_triples(algebra: &LieAlgebra, f: &BilinearForm) -> Subspace {
    let n = algebra.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let ej = std_basis_vec(n, j);
            let ek = std_basis_vec(n, k);
            let mut row = Vec::with_capacity(n);
            for i in 0..n {
                let left = f.eval(&algebra.bracket_basis(i, j), &ek);
                let right = f.eval(&ej, &algebra.bracket_basis(i, k));
                row.push(&left + &right);
            }
            rows.push(row);
        }
    }
    Subspace::from_columns(n, Mat::from_rows(rows).kernel())
}

/// Closedness of a skew form: the cyclic sum
/// `f([x,y],z) + f([y,z],x) + f([z,x],y)` vanishes on all basis triples.
pub fn is_closed(algebra: &LieAlgebra, f: &BilinearForm) -> bool {
    assert_eq!(f.kind(), FormKind::Skew, "closedness applies to skew forms");
    closedness_witness(algebra, f).is_none()
}

/// First basis triple where the cyclic sum fails, if any.
pub fn closedness_witness(algebra: &LieAlgebra, f: &BilinearForm) -> Option<(usize, usize, usize)> {
    let n = algebra.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let ei = std_basis_vec(n, i);
                let ej = std_basis_vec(n, j);
                let ek = std_basis_vec(n, k);
                let sum = &(&f.eval(&algebra.bracket_basis(i, j), &ek)
                    + &f.eval(&algebra.bracket_basis(j, k), &ei))
                    + &f.eval(&algebra.bracket_basis(k, i), &ej);
                if !sum.is_zero() {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Effectiveness: the kernel of the form contains no nontrivial ideal.
pub fn is_effective(algebra: &LieAlgebra, f: &BilinearForm) -> bool {
    algebra
        .maximal_ideal_within(&form_kernel(f))
        .is_zero()
}

/// A J-structure: `J^2 = -id` modulo `ker J`, with `V = ker J (+) im J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JStructure {
    matrix: Mat,
}

impl JStructure {
    pub fn new(matrix: Mat) -> Result<Self, FormError> {
        assert!(matrix.is_square());
        // J^2 v + v in ker J for all v is exactly J^3 + J = 0.
        let j3 = &matrix.pow(3) + &matrix;
        if !j3.is_zero() {
            return Err(FormError::JSquareViolation);
        }
        // ker J (+) im J spans by rank-nullity; disjointness is rank J^2 = rank J.
        if matrix.pow(2).rank() != matrix.rank() {
            return Err(FormError::KernelImageOverlap);
        }
        Ok(JStructure { matrix })
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::from_columns(self.dim(), self.matrix.kernel())
    }

    pub fn is_complex_structure(&self) -> bool {
        self.matrix.rank() == self.dim()
    }

    /// The standard complex structure pairing consecutive coordinates:
    /// `J e_{2i} = e_{2i+1}`, `J e_{2i+1} = -e_{2i}`.
    pub fn standard(dim: usize) -> Self {
        assert!(dim % 2 == 0, "the standard complex structure needs even dimension");
        let mut m = Mat::zeros(dim, dim);
        for i in 0..dim / 2 {
            *m.at_mut(2 * i + 1, 2 * i) = Rat::one();
            *m.at_mut(2 * i, 2 * i + 1) = Rat::int(-1);
        }
        JStructure::new(m).expect("standard J is a complex structure")
    }
}

/// An h-structure: J plus a J-invariant symmetric form whose kernel contains
/// `ker J`, with the derived fundamental two-form `omega(u,v) = <Ju, v>`.
#[derive(Debug, Clone)]
pub struct HStructure {
    pub j: JStructure,
    pub metric: BilinearForm,
    pub fundamental: BilinearForm,
}

impl HStructure {
    pub fn new(j: JStructure, metric: BilinearForm) -> Result<Self, FormError> {
        if metric.kind() != FormKind::Symmetric {
            return Err(FormError::WrongKind {
                expected: FormKind::Symmetric,
            });
        }
        assert_eq!(j.dim(), metric.dim());
        let jm = j.matrix();
        // J-invariance: J^T G J = G.
        if &(&jm.transpose() * metric.gram()) * jm != *metric.gram() {
            return Err(FormError::MetricNotJInvariant);
        }
        if !form_kernel(&metric).contains(&j.kernel()) {
            return Err(FormError::JKernelNotInMetricKernel);
        }
        let omega_gram = &jm.transpose() * metric.gram();
        let fundamental =
            BilinearForm::skew(omega_gram).expect("fundamental form of an h-structure is skew");
        // Shared kernel: V-perp under the metric and under omega agree.
        debug_assert_eq!(form_kernel(&metric), form_kernel(&fundamental));
        Ok(HStructure {
            j,
            metric,
            fundamental,
        })
    }

    pub fn dim(&self) -> usize {
        self.j.dim()
    }

    /// The kernel of the h-structure, `V^perp`.
    pub fn kernel(&self) -> Subspace {
        form_kernel(&self.metric)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.metric.is_nondegenerate()
    }
}

/// An h-structure on a Lie algebra together with its kernel subspace
/// `H = g^perp`, the candidate almost-h-algebra kernel.
#[derive(Debug, Clone)]
pub struct HAlgebraModel {
    pub h: HStructure,
    pub kernel_subalgebra: Subspace,
}

impl HAlgebraModel {
    pub fn new(algebra: &LieAlgebra, h: HStructure) -> Self {
        assert_eq!(algebra.dim(), h.dim());
        let kernel_subalgebra = h.kernel();
        HAlgebraModel {
            h,
            kernel_subalgebra,
        }
    }
}

/// `g_J`: elements whose adjoint preserves `ker J` and commutes with J modulo
/// `ker J`.
pub fn g_j(algebra: &LieAlgebra, j: &JStructure) -> Subspace {
    g_j_modulo(algebra, j, &j.kernel())
}

/// `g_J^h`: adjoint preserves `g^perp` and commutes with J modulo `g^perp`.
pub fn g_j_h(algebra: &LieAlgebra, model: &HAlgebraModel) -> Subspace {
    g_j_modulo(algebra, &model.h.j, &model.kernel_subalgebra)
}

fn g_j_modulo(algebra: &LieAlgebra, j: &JStructure, modulus: &Subspace) -> Subspace {
    let n = algebra.dim();
    let membership = modulus.membership_conditions();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    // ad(x) preserves the modulus subspace.
    for v in modulus.basis_vectors() {
        let mut block = Mat::zeros(n, n);
        for i in 0..n {
            block.set_column(i, &algebra.bracket(&std_basis_vec(n, i), &v));
        }
        let cond = &membership * &block;
        for r in 0..cond.rows() {
            rows.push(cond.row(r));
        }
    }
    // ad(x) J = J ad(x) modulo the subspace: stack columns vec(M_i) where
    // M_i = membership * (ad(e_i) J - J ad(e_i)).
    let mrows = membership.rows();
    let mut stack = Mat::zeros(mrows * n, n);
    for i in 0..n {
        let ad = algebra.adjoint_basis(i);
        let comm = &(&ad * j.matrix()) - &(j.matrix() * &ad);
        let cond = &membership * &comm;
        stack.set_column(i, &cond.vectorize());
    }
    for r in 0..stack.rows() {
        rows.push(stack.row(r));
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    Subspace::from_columns(n, Mat::from_rows(rows).kernel())
}

/// `g_h = g_omega intersect g_metric`.
pub fn g_h(algebra: &LieAlgebra, h: &HStructure) -> Subspace {
    skew_set(algebra, &h.fundamental).intersect(&skew_set(algebra, &h.metric))
}

/// `g_{metric,J} = g_metric intersect g_J`.
pub fn g_metric_j(algebra: &LieAlgebra, h: &HStructure) -> Subspace {
    skew_set(algebra, &h.metric).intersect(&g_j(algebra, &h.j))
}

/// Basis of the Lie algebra `O(f)` of `f`-skew endomorphisms.
pub fn skew_endomorphisms(f: &BilinearForm) -> Vec<Mat> {
    let n = f.dim();
    let mut stack = Mat::zeros(n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            let mut e = Mat::zeros(n, n);
            *e.at_mut(a, b) = Rat::one();
            let cond = &(&e.transpose() * f.gram()) + &(f.gram() * &e);
            stack.set_column(a * n + b, &cond.vectorize());
        }
    }
    let ker = stack.kernel();
    (0..ker.cols())
        .map(|c| Mat::from_vectorized(n, &ker.column(c)))
        .collect()
}

/// Basis of the unitary algebra `U(V) = O(metric) intersect GL_J` for a
/// nondegenerate h-structure.
pub fn unitary_algebra(h: &HStructure) -> Result<Vec<Mat>, FormError> {
    if !h.is_nondegenerate() {
        return Err(FormError::DegenerateHStructure);
    }
    let n = h.dim();
    let jm = h.j.matrix();
    let mut stack = Mat::zeros(2 * n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            let mut e = Mat::zeros(n, n);
            *e.at_mut(a, b) = Rat::one();
            let skew = &(&e.transpose() * h.metric.gram()) + &(h.metric.gram() * &e);
            let lin = &(jm * &e) - &(&e * jm);
            let mut col = skew.vectorize();
            col.extend(lin.vectorize());
            stack.set_column(a * n + b, &col);
        }
    }
    let ker = stack.kernel();
    Ok((0..ker.cols())
        .map(|c| Mat::from_vectorized(n, &ker.column(c)))
        .collect())
}

/// One named condition of the homogeneous model check.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

impl ConditionCheck {
    fn pass(name: &'static str) -> Self {
        ConditionCheck {
            name,
            passed: true,
            witness: None,
        }
    }

    fn fail(name: &'static str, witness: String) -> Self {
        ConditionCheck {
            name,
            passed: false,
            witness: Some(witness),
        }
    }
}

/// Report of the almost-h-algebra and integrability conditions.
#[derive(Debug, Clone, Serialize)]
pub struct HomogeneousModelReport {
    pub checks: Vec<ConditionCheck>,
    pub almost_h_algebra: bool,
    pub integrable: bool,
}

/// Check the homogeneous model conditions for an h-structure on a Lie algebra:
/// (J1) `J H = 0` with `H = ker J = g^perp`, (J2) `J^2 = -id mod H`,
/// (H) J-invariance of the metric, the kernel coincidences, bracket closure of
/// `H`, `H <= g_h`, and separately the integrability condition (J4).
pub fn validate_homogeneous_model(algebra: &LieAlgebra, model: &HAlgebraModel) -> HomogeneousModelReport {
    let n = algebra.dim();
    let h = &model.h;
    let hker = &model.kernel_subalgebra;
    let jm = h.j.matrix();
    let mut checks = Vec::new();

    // (J1) J vanishes on the declared kernel, and ker J = g^perp exactly.
    let j1 = hker
        .basis_vectors()
        .iter()
        .all(|v| vec_is_zero(&jm.apply(v)));
    checks.push(if j1 {
        ConditionCheck::pass("J1: J vanishes on the kernel subalgebra")
    } else {
        ConditionCheck::fail(
            "J1: J vanishes on the kernel subalgebra",
            "some kernel vector is not annihilated by J".into(),
        )
    });
    let kernels_agree = h.j.kernel() == *hker;
    checks.push(if kernels_agree {
        ConditionCheck::pass("ker J = g^perp")
    } else {
        ConditionCheck::fail(
            "ker J = g^perp",
            format!(
                "dim ker J = {}, dim g^perp = {}",
                h.j.kernel().dim(),
                hker.dim()
            ),
        )
    });

    // (J2) J^2 v + v lies in H for every basis vector.
    let mut j2_witness = None;
    for i in 0..n {
        let v = std_basis_vec(n, i);
        let w = vec_add(&jm.apply(&jm.apply(&v)), &v);
        if !hker.contains_vector(&w) {
            j2_witness = Some(algebra.label(i).to_string());
            break;
        }
    }
    checks.push(match j2_witness {
        None => ConditionCheck::pass("J2: J^2 = -id modulo the kernel"),
        Some(w) => ConditionCheck::fail("J2: J^2 = -id modulo the kernel", w),
    });

    // (H) metric is J-invariant.
    let hcond = &(&jm.transpose() * h.metric.gram()) * jm == *h.metric.gram();
    checks.push(if hcond {
        ConditionCheck::pass("H: metric is J-invariant")
    } else {
        ConditionCheck::fail("H: metric is J-invariant", "J^T G J != G".into())
    });

    // Kernel coincidence of the two forms (eq. g^perp = H under both).
    let shared = form_kernel(&h.metric) == form_kernel(&h.fundamental)
        && form_kernel(&h.metric) == *hker;
    checks.push(if shared {
        ConditionCheck::pass("metric and fundamental form share the kernel H")
    } else {
        ConditionCheck::fail(
            "metric and fundamental form share the kernel H",
            "kernels differ".into(),
        )
    });

    // H is a subalgebra.
    let closed = algebra.is_subalgebra(hker);
    checks.push(if closed {
        ConditionCheck::pass("H is a subalgebra")
    } else {
        ConditionCheck::fail("H is a subalgebra", "bracket leaves the kernel".into())
    });

    // H is contained in g_h (and in g_{metric,J}, which agrees with it here).
    let gh = g_h(algebra, h);
    let in_gh = gh.contains(hker);
    checks.push(if in_gh {
        ConditionCheck::pass("H acts skewly: H <= g_h")
    } else {
        ConditionCheck::fail("H acts skewly: H <= g_h", "some kernel element is not skew".into())
    });

    let almost = checks.iter().all(|c| c.passed);

    // (J4) integrability, reported separately.
    let mut j4_witness = None;
    'outer: for i in 0..n {
        for jdx in i + 1..n {
            let x = std_basis_vec(n, i);
            let y = std_basis_vec(n, jdx);
            let jx = jm.apply(&x);
            let jy = jm.apply(&y);
            let mut nij = algebra.bracket(&jx, &jy);
            nij = crate::mat::vec_sub(&nij, &algebra.bracket(&x, &y));
            nij = crate::mat::vec_sub(&nij, &jm.apply(&algebra.bracket(&x, &jy)));
            nij = crate::mat::vec_sub(&nij, &jm.apply(&algebra.bracket(&jx, &y)));
            if !hker.contains_vector(&nij) {
                j4_witness = Some(format!("({}, {})", algebra.label(i), algebra.label(jdx)));
                break 'outer;
            }
        }
    }
    let integrable = almost && j4_witness.is_none();
    checks.push(match j4_witness {
        None => ConditionCheck::pass("J4: Nijenhuis condition modulo the kernel"),
        Some(w) => ConditionCheck::fail("J4: Nijenhuis condition modulo the kernel", w),
    });

    HomogeneousModelReport {
        checks,
        almost_h_algebra: almost,
        integrable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::test_algebras::{g_n, heisenberg, su2, two_dim_solvable};

    fn gram_from(entries: &[(usize, usize, i64)], n: usize, kind: FormKind) -> BilinearForm {
        let mut m = Mat::zeros(n, n);
        for &(i, j, v) in entries {
            *m.at_mut(i, j) = Rat::int(v);
            match kind {
                FormKind::Symmetric => *m.at_mut(j, i) = Rat::int(v),
                FormKind::Skew => *m.at_mut(j, i) = Rat::int(-v),
            }
        }
        BilinearForm::new(m, kind).unwrap()
    }

    /// omega on G_n: omega(a, z) = 1, omega(x_i, y_i) = 1, W perp (A + B).
    pub fn gn_omega(n: usize) -> BilinearForm {
        let dim = 2 * n + 2;
        let mut entries = vec![(0, dim - 1, 1)];
        for i in 0..n {
            entries.push((1 + 2 * i, 2 + 2 * i, 1));
        }
        gram_from(&entries, dim, FormKind::Skew)
    }

    #[test]
    fn kind_mismatch_rejected() {
        let m = Mat::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(BilinearForm::skew(m).is_err());
    }

    #[test]
    fn form_kernel_cases() {
        let omega = gn_omega(1);
        assert!(form_kernel(&omega).is_zero());
        assert!(omega.is_nondegenerate());
        let zero = BilinearForm::zero(g_n(1).dim(), FormKind::Skew);
        assert!(form_kernel(&zero).is_full());
    }

    #[test]
    fn skew_set_invariant_killing() {
        let k = su2();
        let killing = BilinearForm::symmetric(k.killing_form()).unwrap();
        assert!(skew_set(&k, &killing).is_full());
    }

    #[test]
    fn skew_set_two_dim_solvable() {
        // omega = dx ^ dy on [x,y] = y: invariant by ad(y) but not ad(x).
        let alg = two_dim_solvable();
        let omega = gram_from(&[(0, 1, 1)], 2, FormKind::Skew);
        let s = skew_set(&alg, &omega);
        assert_eq!(s.dim(), 1);
        assert!(s.contains_vector(&std_basis_vec(2, 1)));
        assert!(!s.contains_vector(&std_basis_vec(2, 0)));
    }

    #[test]
    fn skew_set_zero_form_is_everything() {
        let alg = two_dim_solvable();
        let zero = BilinearForm::zero(2, FormKind::Skew);
        assert!(skew_set(&alg, &zero).is_full());
    }

    #[test]
    fn skew_set_routes_agree() {
        let alg = g_n(1);
        let omega = gn_omega(1);
        assert_eq!(skew_set(&alg, &omega), skew_set_by_triples(&alg, &omega));
        let killing = BilinearForm::symmetric(alg.killing_form()).unwrap();
        assert_eq!(skew_set(&alg, &killing), skew_set_by_triples(&alg, &killing));
    }

    #[test]
    fn closedness_cases() {
        // Any skew form on an abelian algebra is closed.
        let ab = crate::lie::LieAlgebra::abelian(4);
        let f = gram_from(&[(0, 1, 1), (2, 3, 5)], 4, FormKind::Skew);
        assert!(is_closed(&ab, &f));
        // dx ^ dy on [x,y] = y: no triples in dimension 2, vacuously closed.
        let alg = two_dim_solvable();
        let omega = gram_from(&[(0, 1, 1)], 2, FormKind::Skew);
        assert!(is_closed(&alg, &omega));
        // omega on G_1 is not closed: the (a, x, y) cyclic sum is 1.
        let g1 = g_n(1);
        assert!(!is_closed(&g1, &gn_omega(1)));
        assert_eq!(closedness_witness(&g1, &gn_omega(1)), Some((0, 1, 2)));
    }

    #[test]
    fn orthogonal_complement_cases() {
        let omega = gn_omega(1);
        assert!(orthogonal_complement(&omega, &Subspace::zero(4)).is_full());
        assert!(orthogonal_complement(&omega, &Subspace::full(4)).is_zero());
        // W = span{x, y}: its omega-complement is A + B = span{a, z}.
        let w = Subspace::from_vectors(4, &[std_basis_vec(4, 1), std_basis_vec(4, 2)]);
        let perp = orthogonal_complement(&omega, &w);
        assert_eq!(
            perp,
            Subspace::from_vectors(4, &[std_basis_vec(4, 0), std_basis_vec(4, 3)])
        );
    }

    #[test]
    fn effectiveness_cases() {
        let g1 = g_n(1);
        assert!(is_effective(&g1, &gn_omega(1)));
        // Zero form on a nonabelian algebra: kernel is everything.
        assert!(!is_effective(&g1, &BilinearForm::zero(4, FormKind::Skew)));
        // H_1 with metric kernel span{z}: z spans a central ideal.
        let h1 = heisenberg(1);
        let f = gram_from(&[(0, 0, 1), (1, 1, 1)], 3, FormKind::Symmetric);
        assert!(!is_effective(&h1, &f));
    }

    #[test]
    fn j_structure_validation() {
        assert!(JStructure::standard(4).is_complex_structure());
        // Nilpotent J fails J^2 = -id mod ker.
        let bad = Mat::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(JStructure::new(bad).unwrap_err(), FormError::JSquareViolation);
        // J with ker meeting im: J^3 + J = 0 but rank J^2 < rank J.
        let mixed = Mat::from_i64(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, 0, 0],
        ]);
        assert_eq!(
            JStructure::new(mixed).unwrap_err(),
            FormError::JSquareViolation
        );
        let overlap = Mat::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]);
        // J^3 = 0 = -J fails since J != 0 ... J^3 + J = J != 0.
        assert!(JStructure::new(overlap).is_err());
    }

    #[test]
    fn h_structure_construction() {
        // Flat torus C^{1,1}: metric diag(1,1,-1,-1), standard J.
        let j = JStructure::standard(4);
        let metric = BilinearForm::symmetric(Mat::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, -1, 0],
            &[0, 0, 0, -1],
        ]))
        .unwrap();
        let h = HStructure::new(j, metric).unwrap();
        assert!(h.is_nondegenerate());
        // omega(u, v) = <Ju, v>: omega(e1, e2) = <e2, e2> = 1.
        assert_eq!(
            h.fundamental.eval(&std_basis_vec(4, 0), &std_basis_vec(4, 1)),
            Rat::one()
        );
        assert_eq!(form_kernel(&h.fundamental).dim(), 0);
    }

    #[test]
    fn h_structure_rejects_non_invariant_metric() {
        let j = JStructure::standard(2);
        let metric = BilinearForm::symmetric(Mat::from_i64(&[&[1, 0], &[0, 2]])).unwrap();
        assert_eq!(
            HStructure::new(j, metric).unwrap_err(),
            FormError::MetricNotJInvariant
        );
    }

    #[test]
    fn unitary_algebra_dimensions() {
        // Definite plane: u(1) is one-dimensional (the rotation generator).
        let h = HStructure::new(
            JStructure::standard(2),
            BilinearForm::symmetric(Mat::identity(2)).unwrap(),
        )
        .unwrap();
        let u = unitary_algebra(&h).unwrap();
        assert_eq!(u.len(), 1);
        // The generator commutes with J and is skew: it is a multiple of J.
        assert_eq!(u[0].commutator(h.j.matrix()), Mat::zeros(2, 2));

        // Signature (1,1) Hermitian plane, real dimension 4: dim u(1,1) = 4.
        let metric = BilinearForm::symmetric(Mat::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, -1, 0],
            &[0, 0, 0, -1],
        ]))
        .unwrap();
        let h2 = HStructure::new(JStructure::standard(4), metric).unwrap();
        assert_eq!(unitary_algebra(&h2).unwrap().len(), 4);
    }

    #[test]
    fn unitary_meets_j_skew_trivially() {
        // U(V) intersect J O(V) = 0.
        let metric = BilinearForm::symmetric(Mat::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, -1, 0],
            &[0, 0, 0, -1],
        ]))
        .unwrap();
        let h = HStructure::new(JStructure::standard(4), metric.clone()).unwrap();
        let u = unitary_algebra(&h).unwrap();
        let o = skew_endomorphisms(&metric);
        let n = 4;
        // Solve sum a_i U_i = J * sum b_j O_j as one homogeneous system.
        let mut cols = Vec::new();
        for m in &u {
            cols.push(m.vectorize());
        }
        for m in &o {
            cols.push((&-&(h.j.matrix() * m)).vectorize());
        }
        let mut stack = Mat::zeros(n * n, cols.len());
        for (c, col) in cols.iter().enumerate() {
            stack.set_column(c, col);
        }
        let ker = stack.kernel();
        // Any solution must have the U-part zero.
        for c in 0..ker.cols() {
            let coeffs = ker.column(c);
            let mut combo = Mat::zeros(n, n);
            for (a, m) in coeffs.iter().take(u.len()).zip(&u) {
                combo = &combo + &m.scale(a);
            }
            assert!(combo.is_zero());
        }
    }

    #[test]
    fn degenerate_h_structure_rejected_by_unitary() {
        // ker J = span{e3} contained in the metric kernel.
        let mut jm = Mat::zeros(3, 3);
        *jm.at_mut(1, 0) = Rat::one();
        *jm.at_mut(0, 1) = Rat::int(-1);
        let j = JStructure::new(jm).unwrap();
        let metric = BilinearForm::symmetric(Mat::from_i64(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 0],
        ]))
        .unwrap();
        let h = HStructure::new(j, metric).unwrap();
        assert!(!h.is_nondegenerate());
        assert_eq!(unitary_algebra(&h).unwrap_err(), FormError::DegenerateHStructure);
    }

    #[test]
    fn g_j_chain_on_torus() {
        // Abelian algebra: everything acts trivially, all subalgebras full.
        let alg = crate::lie::LieAlgebra::abelian(4);
        let metric = BilinearForm::symmetric(Mat::identity(4)).unwrap();
        let h = HStructure::new(JStructure::standard(4), metric).unwrap();
        let model = HAlgebraModel::new(&alg, h.clone());
        assert!(g_j(&alg, &h.j).is_full());
        assert!(g_j_h(&alg, &model).is_full());
        assert!(g_h(&alg, &h).is_full());
        assert!(g_metric_j(&alg, &h).is_full());
    }

    #[test]
    fn g_j_chain_inclusions() {
        // eq:Jlinear2 on the nondegenerate torus and on a degenerate model.
        let alg = crate::lie::LieAlgebra::abelian(4);
        let metric = BilinearForm::symmetric(Mat::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, -1, 0],
            &[0, 0, 0, -1],
        ]))
        .unwrap();
        let h = HStructure::new(JStructure::standard(4), metric).unwrap();
        let model = HAlgebraModel::new(&alg, h.clone());
        let a = g_metric_j(&alg, &h);
        let b = g_h(&alg, &h);
        let c = g_j_h(&alg, &model);
        assert!(b.contains(&a));
        assert!(c.contains(&b));
        // Nondegenerate case: ker J = g^perp = 0, so g_{metric,J} = g_h.
        assert_eq!(a, b);
    }

    #[test]
    fn homogeneous_model_torus_integrable() {
        let alg = crate::lie::LieAlgebra::abelian(4);
        let metric = BilinearForm::symmetric(Mat::identity(4)).unwrap();
        let h = HStructure::new(JStructure::standard(4), metric).unwrap();
        let model = HAlgebraModel::new(&alg, h);
        let report = validate_homogeneous_model(&alg, &model);
        assert!(report.almost_h_algebra, "{:?}", report);
        assert!(report.integrable);
    }

    #[test]
    fn homogeneous_model_detects_open_kernel() {
        // Kernel span{x} of [x,y] = y is a subalgebra, but J fails J1 if it
        // does not kill the kernel: build J on the 2-dim solvable algebra with
        // metric kernel span{x} but J e1 != 0.
        let alg = two_dim_solvable();
        // J: standard complex structure, metric zero: kernel = everything,
        // but ker J = 0 != g^perp.
        let h = HStructure::new(
            JStructure::standard(2),
            BilinearForm::zero(2, FormKind::Symmetric),
        )
        .unwrap();
        let model = HAlgebraModel::new(&alg, h);
        let report = validate_homogeneous_model(&alg, &model);
        assert!(!report.almost_h_algebra);
        let j1 = report
            .checks
            .iter()
            .find(|c| c.name.starts_with("J1"))
            .unwrap();
        assert!(!j1.passed);
    }
}
