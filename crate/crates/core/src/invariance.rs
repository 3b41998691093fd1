//! Invariance, nil-invariance, and quasi-invariance deciders.
//!
//! The algebraic closure of `ad(g)` is not computed in full generality.
//! Instead each decider works with a generator set that provably lies inside
//! that closure: the nilpotent Jordan parts of the basis adjoints, the
//! adjoints of a nilradical basis, declared nilpotent generators of a
//! non-compact Levi part, and (for quasi-invariance) the real-split Jordan
//! parts; the set is closed under brackets before testing. Skewness is linear,
//! so testing the closure basis tests the whole subalgebra it spans.
//!
//! A negative verdict is always conclusive: every generator lies in the
//! subalgebra of the closure generated by trigonalizable elements, which a
//! (quasi-/nil-)invariant form must see skewly. A positive verdict is
//! conclusive relative to the generator set; verdicts carry a mode flag that
//! says whether the positive direction is exact (nilpotent or fully invariant
//! situations) or a generator approximation.

use crate::decomp::{jordan_chevalley, split_imaginary_parts, LinalgError, OperatorDecomposition};
use crate::forms::{skew_set, BilinearForm, HAlgebraModel};
use crate::lie::LieAlgebra;
use crate::mat::{Mat, Subspace};
use crate::rat::Rat;
use serde::Serialize;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum InvarianceError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("declared Levi data is invalid: {0}")]
    InvalidLevi(String),
}

/// Declared Levi decomposition data for an algebra: a compact-type factor, a
/// non-compact factor, and ad-nilpotent generators of the latter. Verified on
/// construction.
#[derive(Debug, Clone)]
pub struct LeviData {
    pub compact: Subspace,
    pub noncompact: Subspace,
    pub noncompact_nilpotents: Vec<Vec<Rat>>,
}

impl LeviData {
    pub fn new(
        algebra: &LieAlgebra,
        compact: Subspace,
        noncompact: Subspace,
        noncompact_nilpotents: Vec<Vec<Rat>>,
    ) -> Result<Self, InvarianceError> {
        let data = LeviData {
            compact,
            noncompact,
            noncompact_nilpotents,
        };
        data.verify(algebra)?;
        Ok(data)
    }

    /// Trust-but-verify: both factors are semisimple subalgebras of the right
    /// type, they commute, together with the radical they span the algebra,
    /// and the declared nilpotents generate the non-compact factor.
    fn verify(&self, algebra: &LieAlgebra) -> Result<(), InvarianceError> {
        let err = |msg: &str| Err(InvarianceError::InvalidLevi(msg.to_string()));
        if !algebra.is_subalgebra(&self.compact) {
            return err("compact part is not a subalgebra");
        }
        if !algebra.is_subalgebra(&self.noncompact) {
            return err("non-compact part is not a subalgebra");
        }
        if self.compact.dim() > 0 {
            let k = algebra
                .subalgebra(&self.compact)
                .expect("bracket closure was checked");
            if k.is_compact_type() != Ok(true) {
                return err("compact part is not semisimple of compact type");
            }
        }
        if self.noncompact.dim() > 0 {
            let s = algebra
                .subalgebra(&self.noncompact)
                .expect("bracket closure was checked");
            if !s.is_semisimple() {
                return err("non-compact part is not semisimple");
            }
            if s.is_compact_type() == Ok(true) {
                return err("non-compact part has compact type");
            }
        }
        if !algebra
            .bracket_subspaces(&self.compact, &self.noncompact)
            .is_zero()
        {
            return err("compact and non-compact parts do not commute");
        }
        let radical = algebra.solvable_radical();
        let levi = self.compact.sum(&self.noncompact);
        if self.compact.intersect(&self.noncompact).dim() != 0
            || levi.intersect(&radical).dim() != 0
            || levi.sum(&radical).dim() != algebra.dim()
        {
            return err("compact + non-compact + radical is not a direct sum decomposition");
        }
        for v in &self.noncompact_nilpotents {
            if !self.noncompact.contains_vector(v) {
                return err("declared nilpotent generator lies outside the non-compact part");
            }
            let ad = algebra.adjoint(v);
            if !ad.pow(algebra.dim() as u32).is_zero() {
                return err("declared nilpotent generator has a non-nilpotent adjoint");
            }
        }
        if self.noncompact.dim() > 0 {
            // The declared nilpotents must generate ad(S): close them under
            // brackets and check the span captures every basis adjoint.
            let gens: Vec<(String, Mat)> = self
                .noncompact_nilpotents
                .iter()
                .enumerate()
                .map(|(i, v)| (format!("ad(levi n{})", i + 1), algebra.adjoint(v)))
                .collect();
            let closure = bracket_closure(gens, algebra.dim());
            let span = matrix_span(&closure, algebra.dim());
            for b in self.noncompact.basis_vectors() {
                if !span.contains_vector(&algebra.adjoint(&b).vectorize()) {
                    return err("declared nilpotents do not generate the non-compact part");
                }
            }
        }
        Ok(())
    }

    /// Levi factor as a whole (compact x non-compact).
    pub fn levi(&self) -> Subspace {
        self.compact.sum(&self.noncompact)
    }
}

/// Generators for the closure approximation, with human-readable labels.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    /// Nilpotent matrices: Jordan nilpotent parts of basis adjoints, adjoints
    /// of a nilradical basis, and adjoints of declared Levi nilpotents.
    pub nilpotent_parts: Vec<(String, Mat)>,
    /// Real-diagonalizable matrices: real-split Jordan parts of basis adjoints.
    pub split_parts: Vec<(String, Mat)>,
    /// Adjoints of the declared nilpotent generators of the non-compact Levi
    /// part, when provided.
    pub levi_nilpotents: Vec<(String, Mat)>,
    /// Basis of the bracket closure of all of the above.
    pub closure: Vec<(String, Mat)>,
}

impl GeneratorSet {
    fn assemble(
        nilpotent_parts: Vec<(String, Mat)>,
        split_parts: Vec<(String, Mat)>,
        levi_nilpotents: Vec<(String, Mat)>,
        dim: usize,
    ) -> Self {
        let mut all = Vec::new();
        all.extend(nilpotent_parts.iter().cloned());
        all.extend(split_parts.iter().cloned());
        all.extend(levi_nilpotents.iter().cloned());
        let closure = bracket_closure(all, dim);
        GeneratorSet {
            nilpotent_parts,
            split_parts,
            levi_nilpotents,
            closure,
        }
    }
}

/// Close a list of matrices under commutators; the result is a basis of the
/// Lie algebra they span inside gl(n). Terminates because the span is a
/// subspace of an n^2-dimensional space.
pub fn bracket_closure(generators: Vec<(String, Mat)>, dim: usize) -> Vec<(String, Mat)> {
    let mut basis: Vec<(String, Mat)> = Vec::new();
    let mut span = Subspace::zero(dim * dim);
    for (desc, m) in generators {
        if !span.contains_vector(&m.vectorize()) {
            span = span.with_vector(&m.vectorize());
            basis.push((desc, m));
        }
    }
    let mut frontier = 0;
    while frontier < basis.len() {
        let upto = basis.len();
        for i in 0..upto {
            for j in frontier.max(i + 1)..upto {
                let c = basis[i].1.commutator(&basis[j].1);
                if !c.is_zero() && !span.contains_vector(&c.vectorize()) {
                    span = span.with_vector(&c.vectorize());
                    basis.push((format!("[{}, {}]", basis[i].0, basis[j].0), c));
                }
            }
        }
        frontier = upto;
    }
    basis
}

fn matrix_span(ms: &[(String, Mat)], dim: usize) -> Subspace {
    Subspace::from_vectors(
        dim * dim,
        &ms.iter().map(|(_, m)| m.vectorize()).collect::<Vec<_>>(),
    )
}

/// The four Jordan parts of `ad(u)`.
pub fn ad_jordan_parts(algebra: &LieAlgebra, u: &[Rat]) -> Result<OperatorDecomposition, LinalgError> {
    OperatorDecomposition::of(&algebra.adjoint(u))
}

/// Generators for the nil-invariance test: nilpotent parts of basis adjoints,
/// adjoints of the nilradical basis, declared Levi nilpotents. Never needs an
/// eigenvalue field beyond the rationals.
pub fn nil_generators(algebra: &LieAlgebra, levi: Option<&LeviData>) -> GeneratorSet {
    let n = algebra.dim();
    let mut nil = Vec::new();
    for i in 0..n {
        let (_, np) = jordan_chevalley(&algebra.adjoint_basis(i));
        if !np.is_zero() {
            nil.push((format!("phi_n(ad {})", algebra.label(i)), np));
        }
    }
    for (k, v) in algebra.profile().nilradical.basis_vectors().iter().enumerate() {
        let ad = algebra.adjoint(v);
        if !ad.is_zero() {
            nil.push((format!("ad(nilradical b{})", k + 1), ad));
        }
    }
    let levi_nil = levi_nilpotent_adjoints(algebra, levi);
    GeneratorSet::assemble(nil, Vec::new(), levi_nil, n)
}

/// Generators for the quasi-invariance test: the nil generators plus the
/// real-split parts of the basis adjoints.
pub fn quasi_generators(
    algebra: &LieAlgebra,
    levi: Option<&LeviData>,
) -> Result<GeneratorSet, LinalgError> {
    let n = algebra.dim();
    let base = nil_generators(algebra, levi);
    let mut split = Vec::new();
    for i in 0..n {
        let (s, _) = jordan_chevalley(&algebra.adjoint_basis(i));
        let (_, real_split) = split_imaginary_parts(&s)?;
        if !real_split.is_zero() {
            split.push((format!("phi_split(ad {})", algebra.label(i)), real_split));
        }
    }
    Ok(GeneratorSet::assemble(
        base.nilpotent_parts,
        split,
        base.levi_nilpotents,
        n,
    ))
}

fn levi_nilpotent_adjoints(algebra: &LieAlgebra, levi: Option<&LeviData>) -> Vec<(String, Mat)> {
    let mut out = Vec::new();
    if let Some(l) = levi {
        for (k, v) in l.noncompact_nilpotents.iter().enumerate() {
            let ad = algebra.adjoint(v);
            if !ad.is_zero() {
                out.push((format!("ad(levi n{})", k + 1), ad));
            }
        }
    }
    out
}

/// A failing generator with the first basis pair where skewness breaks.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub generator: String,
    pub pair: (String, String),
    pub defect: Rat,
}

/// Test every closure element for f-skewness; generators are processed in
/// order and the first failing (generator, pair) is the witness.
pub fn generators_skew(
    algebra: &LieAlgebra,
    f: &BilinearForm,
    gens: &GeneratorSet,
) -> (bool, Option<Witness>) {
    let n = algebra.dim();
    for (desc, m) in &gens.closure {
        let defect = &(&m.transpose() * f.gram()) + &(f.gram() * m);
        if !defect.is_zero() {
            'search: for j in 0..n {
                for k in 0..n {
                    if !defect.at(j, k).is_zero() {
                        return (
                            false,
                            Some(Witness {
                                generator: desc.clone(),
                                pair: (
                                    algebra.label(j).to_string(),
                                    algebra.label(k).to_string(),
                                ),
                                defect: defect.at(j, k).clone(),
                            }),
                        );
                    }
                }
                #[allow(unreachable_code)]
                {
                    break 'search;
                }
            }
        }
    }
    (true, None)
}

/// Nil-invariance: every nilpotent element of the ad-closure approximation is
/// skew with respect to `f`. When the check passes, the consequence
/// `S + N <= g_f` is asserted.
pub fn nil_invariance_check(
    algebra: &LieAlgebra,
    f: &BilinearForm,
    levi: Option<&LeviData>,
) -> (bool, Option<Witness>) {
    let gens = nil_generators(algebra, levi);
    let (holds, witness) = generators_skew(algebra, f, &gens);
    if holds {
        let skew = skew_set(algebra, f);
        assert!(
            skew.contains(&algebra.profile().nilradical),
            "nil-invariance must place the nilradical inside the skew set"
        );
        if let Some(l) = levi {
            assert!(
                skew.contains(&l.noncompact),
                "nil-invariance must place the non-compact Levi part inside the skew set"
            );
        }
    }
    (holds, witness)
}

/// Quasi-invariance: every real-trigonalizable element of the approximation is
/// skew with respect to `f`.
pub fn quasi_invariance_check(
    algebra: &LieAlgebra,
    f: &BilinearForm,
    levi: Option<&LeviData>,
) -> Result<(bool, Option<Witness>), LinalgError> {
    let gens = quasi_generators(algebra, levi)?;
    Ok(generators_skew(algebra, f, &gens))
}

/// Plain invariance: the skew set is the whole algebra.
pub fn full_invariance_check(algebra: &LieAlgebra, f: &BilinearForm) -> bool {
    skew_set(algebra, f).is_full()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerdictMode {
    #[serde(rename = "exact")]
    Exact,
    #[serde(rename = "generator-approximation")]
    GeneratorApproximation,
}

/// Combined verdict for one form. The implication chain
/// `invariant => quasiInvariant => nilInvariant` holds by construction: the
/// quasi generator set contains the nil generator set, and full invariance
/// forces every generator (a Jordan part of some ad) to be skew.
#[derive(Debug, Clone, Serialize)]
pub struct InvarianceVerdict {
    pub invariant: bool,
    #[serde(rename = "nilInvariant")]
    pub nil_invariant: bool,
    #[serde(rename = "quasiInvariant")]
    pub quasi_invariant: bool,
    pub mode: VerdictMode,
    pub witnesses: Vec<Witness>,
}

/// Run all three deciders on one form.
pub fn invariance_verdict(
    algebra: &LieAlgebra,
    f: &BilinearForm,
    levi: Option<&LeviData>,
) -> Result<InvarianceVerdict, LinalgError> {
    let invariant = full_invariance_check(algebra, f);
    let (nil, nil_witness) = nil_invariance_check(algebra, f, levi);
    let (quasi, quasi_witness) = quasi_invariance_check(algebra, f, levi)?;
    // Monotonicity is structural; make violations loud.
    assert!(!invariant || quasi, "invariant forms are quasi-invariant");
    assert!(!quasi || nil, "quasi-invariant forms are nil-invariant");
    // Positive verdicts are exact when the ad-closure is the algebra itself
    // (nilpotent algebras) or when everything is skew anyway; negative
    // verdicts are always exact.
    let conclusive_positive = algebra.is_nilpotent() || invariant;
    let mode = if conclusive_positive || (!nil && !quasi) {
        VerdictMode::Exact
    } else {
        VerdictMode::GeneratorApproximation
    };
    let mut witnesses = Vec::new();
    witnesses.extend(quasi_witness);
    witnesses.extend(nil_witness);
    Ok(InvarianceVerdict {
        invariant,
        nil_invariant: nil,
        quasi_invariant: quasi,
        mode,
        witnesses,
    })
}

/// Verdicts for both forms of an h-structure; the structure is nil-invariant
/// (quasi-invariant) when both forms are.
pub fn h_structure_invariance(
    algebra: &LieAlgebra,
    model: &HAlgebraModel,
    levi: Option<&LeviData>,
) -> Result<(InvarianceVerdict, InvarianceVerdict), LinalgError> {
    let metric = invariance_verdict(algebra, &model.h.metric, levi)?;
    let omega = invariance_verdict(algebra, &model.h.fundamental, levi)?;
    Ok((metric, omega))
}

/// Image condition of the closure: `phi(e_j)` lies in the skew set for every
/// closure generator `phi` and basis vector `e_j`. Sound for quasi-invariant
/// forms.
pub fn acis_image_check(algebra: &LieAlgebra, f: &BilinearForm, gens: &GeneratorSet) -> bool {
    let n = algebra.dim();
    let skew = skew_set(algebra, f);
    for (_, m) in &gens.closure {
        for j in 0..n {
            if !skew.contains_vector(&m.column(j)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::FormKind;
    use crate::lie::test_algebras::{g_n, heisenberg, sl2, su2, two_dim_solvable};
    use crate::mat::std_basis_vec;

    fn skew_form(entries: &[(usize, usize, i64)], n: usize) -> BilinearForm {
        let mut m = Mat::zeros(n, n);
        for &(i, j, v) in entries {
            *m.at_mut(i, j) = Rat::int(v);
            *m.at_mut(j, i) = Rat::int(-v);
        }
        BilinearForm::skew(m).unwrap()
    }

    fn gn_omega(n: usize) -> BilinearForm {
        let dim = 2 * n + 2;
        let mut entries = vec![(0, dim - 1, 1)];
        for i in 0..n {
            entries.push((1 + 2 * i, 2 + 2 * i, 1));
        }
        skew_form(&entries, dim)
    }

    #[test]
    fn ad_jordan_parts_examples() {
        // Nilpotent algebra: ad(u) is its own nilpotent part.
        let h = heisenberg(1);
        let d = ad_jordan_parts(&h, &std_basis_vec(3, 0)).unwrap();
        assert!(d.semisimple.is_zero());
        assert_eq!(d.nilpotent, h.adjoint_basis(0));

        // G_1, u = a: ad(a) is real-split with eigenvalues 0, 1, 1, 2.
        let g = g_n(1);
        let d = ad_jordan_parts(&g, &std_basis_vec(4, 0)).unwrap();
        assert_eq!(d.real_split, g.adjoint_basis(0));
        assert!(d.imaginary.is_zero());
        assert!(d.nilpotent.is_zero());

        // Rotation generator: ad(a) is purely imaginary.
        let rot = LieAlgebra::from_brackets(
            vec!["a".into(), "x".into(), "y".into()],
            &[
                (0, 1, vec![(2, Rat::one())]),
                (0, 2, vec![(1, Rat::int(-1))]),
            ],
        )
        .unwrap();
        let d = ad_jordan_parts(&rot, &std_basis_vec(3, 0)).unwrap();
        assert_eq!(d.imaginary, rot.adjoint_basis(0));
        assert!(d.real_split.is_zero());
        assert!(d.nilpotent.is_zero());
        d.verify(&rot.adjoint_basis(0)).unwrap();
    }

    #[test]
    fn generator_set_invariants() {
        let g = g_n(1);
        let gens = quasi_generators(&g, None).unwrap();
        let n = g.dim() as u32;
        for (_, m) in &gens.nilpotent_parts {
            assert!(m.pow(n).is_zero(), "nilpotent part is not nilpotent");
        }
        for (_, m) in &gens.split_parts {
            let (_, rs) = split_imaginary_parts(&jordan_chevalley(m).0).unwrap();
            assert_eq!(&rs, m, "split part is not real-diagonalizable");
        }
        // Closure is bracket closed.
        let span = matrix_span(&gens.closure, g.dim());
        for (i, (_, a)) in gens.closure.iter().enumerate() {
            for (_, b) in gens.closure.iter().skip(i + 1) {
                assert!(span.contains_vector(&a.commutator(b).vectorize()));
            }
        }
    }

    #[test]
    fn two_dim_solvable_verdicts() {
        // Example: nil-invariant without being quasi-invariant.
        let alg = two_dim_solvable();
        let omega = skew_form(&[(0, 1, 1)], 2);
        let v = invariance_verdict(&alg, &omega, None).unwrap();
        assert!(v.nil_invariant);
        assert!(!v.quasi_invariant);
        assert!(!v.invariant);
        let w = &v.witnesses[0];
        assert_eq!(w.generator, "phi_split(ad x)");
        assert_eq!(w.pair, ("x".to_string(), "y".to_string()));
        assert_eq!(w.defect, Rat::one());
    }

    #[test]
    fn gn_family_verdicts() {
        for n in 1..=2 {
            let alg = g_n(n);
            let omega = gn_omega(n);
            assert!(omega.is_nondegenerate());
            let v = invariance_verdict(&alg, &omega, None).unwrap();
            assert!(v.nil_invariant, "G_{} omega must be nil-invariant", n);
            assert!(!v.quasi_invariant, "G_{} omega must not be quasi-invariant", n);
            assert!(!v.invariant);
            // The split part of ad(a) is the witness.
            assert_eq!(v.witnesses[0].generator, "phi_split(ad a)");
            assert_eq!(v.mode, VerdictMode::GeneratorApproximation);
        }
    }

    #[test]
    fn zero_form_everything_invariant() {
        let alg = g_n(1);
        let zero = BilinearForm::zero(4, FormKind::Skew);
        let v = invariance_verdict(&alg, &zero, None).unwrap();
        assert!(v.invariant && v.quasi_invariant && v.nil_invariant);
        assert_eq!(v.mode, VerdictMode::Exact);
    }

    #[test]
    fn killing_form_fully_invariant() {
        for alg in [su2(), sl2()] {
            let k = BilinearForm::symmetric(alg.killing_form()).unwrap();
            assert!(full_invariance_check(&alg, &k));
            let v = invariance_verdict(&alg, &k, None).unwrap();
            assert!(v.invariant && v.quasi_invariant && v.nil_invariant);
            assert_eq!(v.mode, VerdictMode::Exact);
        }
    }

    #[test]
    fn abelian_everything_invariant() {
        let alg = LieAlgebra::abelian(3);
        let f = skew_form(&[(0, 1, 1)], 3);
        let v = invariance_verdict(&alg, &f, None).unwrap();
        assert!(v.invariant && v.quasi_invariant && v.nil_invariant);
        assert_eq!(v.mode, VerdictMode::Exact);
    }

    #[test]
    fn symmetric_form_nil_equals_quasi() {
        // Corollary for symmetric forms on a couple of hand instances.
        let g = g_n(1);
        let mut gram = Mat::zeros(4, 4);
        *gram.at_mut(0, 0) = Rat::one();
        let f = BilinearForm::symmetric(gram).unwrap();
        let (nil, _) = nil_invariance_check(&g, &f, None);
        let (quasi, _) = quasi_invariance_check(&g, &f, None).unwrap();
        assert_eq!(nil, quasi);
    }

    #[test]
    fn levi_data_validation() {
        let alg = sl2().direct_sum(&LieAlgebra::abelian(2));
        let n = alg.dim();
        let s = Subspace::from_vectors(
            n,
            &[std_basis_vec(n, 0), std_basis_vec(n, 1), std_basis_vec(n, 2)],
        );
        let nilp = vec![std_basis_vec(n, 1), std_basis_vec(n, 2)];
        let levi = LeviData::new(&alg, Subspace::zero(n), s, nilp).unwrap();
        assert_eq!(levi.levi().dim(), 3);

        // su2 declared as non-compact must be rejected.
        let alg2 = su2();
        let bad = LeviData::new(
            &alg2,
            Subspace::zero(3),
            Subspace::full(3),
            vec![std_basis_vec(3, 0)],
        );
        assert!(bad.is_err());

        // su2 declared as compact is fine.
        let ok = LeviData::new(&alg2, Subspace::full(3), Subspace::zero(3), vec![]);
        assert!(ok.is_ok());
    }

    #[test]
    fn levi_nilpotents_feed_nil_check() {
        // sl2 x R^2 with the Killing form of sl2 extended by zero: ad(e), ad(f)
        // are declared nilpotents; the form is invariant, so everything holds.
        let alg = sl2().direct_sum(&LieAlgebra::abelian(2));
        let n = alg.dim();
        let s = Subspace::from_vectors(
            n,
            &[std_basis_vec(n, 0), std_basis_vec(n, 1), std_basis_vec(n, 2)],
        );
        let levi = LeviData::new(
            &alg,
            Subspace::zero(n),
            s,
            vec![std_basis_vec(n, 1), std_basis_vec(n, 2)],
        )
        .unwrap();
        let k = BilinearForm::symmetric(alg.killing_form()).unwrap();
        let (nil, _) = nil_invariance_check(&alg, &k, Some(&levi));
        assert!(nil);
        let gens = nil_generators(&alg, Some(&levi));
        assert!(!gens.levi_nilpotents.is_empty());
        assert!(acis_image_check(&alg, &k, &gens));
    }

    #[test]
    fn acis_images_for_gn_nil_generators() {
        let g = g_n(1);
        let omega = gn_omega(1);
        let gens = nil_generators(&g, None);
        assert!(acis_image_check(&g, &omega, &gens));
    }
}
