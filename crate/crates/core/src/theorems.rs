//! Structure theorem verifiers.
//!
//! Each verifier checks the hypotheses of one structure theorem with the
//! invariance deciders, and only when they hold evaluates every conclusion
//! exactly, recording a witness when one fails. A failing conclusion under
//! exactly-established hypotheses is a contradiction alert; under
//! generator-approximation hypotheses it is downgraded to a research flag.

use crate::decomp::{fitting_decomposition, jordan_chevalley, split_imaginary_parts};
use crate::forms::{
    form_kernel, is_closed, is_effective, orthogonal_complement, skew_set, BilinearForm, FormKind,
    HAlgebraModel,
};
use crate::invariance::{
    full_invariance_check, nil_invariance_check, quasi_invariance_check, InvarianceError,
    LeviData, VerdictMode,
};
use crate::lie::LieAlgebra;
use crate::mat::{Mat, Subspace};
use crate::rat::Rat;
use serde::Serialize;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum VerifierError {
    #[error(transparent)]
    Invariance(#[from] InvarianceError),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("instance lacks required data: {0}")]
    MissingData(String),
}

impl From<crate::decomp::LinalgError> for VerifierError {
    fn from(e: crate::decomp::LinalgError) -> Self {
        VerifierError::Invariance(InvarianceError::Linalg(e))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HypothesisResult {
    pub label: String,
    pub met: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub label: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Structured outcome of one verifier run.
#[derive(Debug, Clone, Serialize)]
pub struct VerifierReport {
    pub theorem_id: String,
    pub hypotheses: Vec<HypothesisResult>,
    #[serde(rename = "hypothesesMet")]
    pub hypotheses_met: bool,
    /// Evaluated only when the hypotheses are met.
    pub conclusions: Vec<ClaimResult>,
    pub mode: VerdictMode,
    pub notes: Vec<String>,
}

impl VerifierReport {
    fn new(theorem_id: &str) -> Self {
        VerifierReport {
            theorem_id: theorem_id.into(),
            hypotheses: Vec::new(),
            hypotheses_met: true,
            conclusions: Vec::new(),
            mode: VerdictMode::Exact,
            notes: Vec::new(),
        }
    }

    fn hypothesis(&mut self, label: &str, met: bool, detail: Option<String>) {
        self.hypotheses.push(HypothesisResult {
            label: label.into(),
            met,
            detail,
        });
        self.hypotheses_met &= met;
    }

    fn claim(&mut self, label: &str, passed: bool, witness: Option<String>) {
        self.conclusions.push(ClaimResult {
            label: label.into(),
            passed,
            witness,
        });
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn all_conclusions_hold(&self) -> bool {
        self.conclusions.iter().all(|c| c.passed)
    }

    /// A conclusion failed although the hypotheses were established exactly.
    pub fn is_contradiction_alert(&self) -> bool {
        self.hypotheses_met && !self.all_conclusions_hold() && self.mode == VerdictMode::Exact
    }

    /// A conclusion failed under generator-approximation hypotheses.
    pub fn is_research_flag(&self) -> bool {
        self.hypotheses_met
            && !self.all_conclusions_hold()
            && self.mode == VerdictMode::GeneratorApproximation
    }
}

/// The verifiable theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    NilSkew,
    SkewSolvable,
    QuasiSolvAbelian,
    RadicalNilpotent,
    SymplecticStructure,
    MetricSymplectic,
    PkOrthogonality,
    ZbProfile,
}

pub const ALL_THEOREMS: &[TheoremId] = &[
    TheoremId::NilSkew,
    TheoremId::SkewSolvable,
    TheoremId::QuasiSolvAbelian,
    TheoremId::RadicalNilpotent,
    TheoremId::SymplecticStructure,
    TheoremId::MetricSymplectic,
    TheoremId::PkOrthogonality,
    TheoremId::ZbProfile,
];

impl TheoremId {
    pub fn name(self) -> &'static str {
        match self {
            TheoremId::NilSkew => "nil_skew",
            TheoremId::SkewSolvable => "skew_solvable",
            TheoremId::QuasiSolvAbelian => "quasi_solv_abelian",
            TheoremId::RadicalNilpotent => "radical_nilpotent",
            TheoremId::SymplecticStructure => "symplectic_structure",
            TheoremId::MetricSymplectic => "metric_symplectic",
            TheoremId::PkOrthogonality => "pk_orthogonality",
            TheoremId::ZbProfile => "zb_profile",
        }
    }

    pub fn parse(s: &str) -> Result<Self, VerifierError> {
        ALL_THEOREMS
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| VerifierError::UnknownTheorem(s.to_string()))
    }
}

// ---- shared helpers ----

fn orthogonal(f: &BilinearForm, a: &Subspace, b: &Subspace) -> bool {
    orthogonal_complement(f, b).contains(a)
}

fn restrict_gram(f: &BilinearForm, s: &Subspace) -> Mat {
    let b = s.basis();
    &(&b.transpose() * f.gram()) * b
}

/// Positive nil/quasi verdicts are exact on nilpotent algebras and for fully
/// invariant forms; otherwise they are generator approximations.
fn positive_mode(algebra: &LieAlgebra, f: &BilinearForm) -> VerdictMode {
    if algebra.is_nilpotent() || full_invariance_check(algebra, f) {
        VerdictMode::Exact
    } else {
        VerdictMode::GeneratorApproximation
    }
}

fn merge_mode(report: &mut VerifierReport, mode: VerdictMode) {
    if mode == VerdictMode::GeneratorApproximation {
        report.mode = VerdictMode::GeneratorApproximation;
    }
}

/// The compact factor used for K-dependent claims: the declared one, or the
/// zero subspace when the algebra is solvable. `None` means the claims that
/// need an embedded K are skipped with a note.
fn compact_part(algebra: &LieAlgebra, levi: Option<&LeviData>) -> Option<Subspace> {
    match levi {
        Some(l) => Some(l.compact.clone()),
        None if algebra.is_solvable() => Some(Subspace::zero(algebra.dim())),
        None => None,
    }
}

fn quotient_compact_claim(algebra: &LieAlgebra, report: &mut VerifierReport, label: &str) {
    let radical = algebra.profile().solvable_radical.clone();
    if radical.dim() == algebra.dim() {
        report.claim(label, true, None);
        report.note("the quotient modulo the radical is trivial");
        return;
    }
    let (q, _) = algebra.quotient(&radical);
    match q.is_compact_type() {
        Ok(true) => report.claim(label, true, None),
        Ok(false) => report.claim(
            label,
            false,
            Some("the quotient Killing form is not negative definite".into()),
        ),
        Err(_) => report.claim(
            label,
            false,
            Some("the quotient modulo the radical is not semisimple".into()),
        ),
    }
}

/// `phi_split(ad r) = 0` for every basis vector `r` of the subspace, i.e. the
/// adjoints have purely imaginary spectrum.
fn imaginary_type_claim(
    algebra: &LieAlgebra,
    sub: &Subspace,
    report: &mut VerifierReport,
    label: &str,
) -> Result<(), VerifierError> {
    for (k, r) in sub.basis_vectors().iter().enumerate() {
        let (s, _) = jordan_chevalley(&algebra.adjoint(r));
        let (_, real_split) = split_imaginary_parts(&s)?;
        if !real_split.is_zero() {
            report.claim(
                label,
                false,
                Some(format!("basis vector {} has a nonzero real-split part", k + 1)),
            );
            return Ok(());
        }
    }
    report.claim(label, true, None);
    Ok(())
}

// ---- verifiers ----

/// Nil-invariant effective skew form: compact-type Levi factors, at most
/// two-step nilradical, abelian if nilpotent; plus the supporting exact
/// identities around `R_omega`.
pub fn verify_nil_skew(
    algebra: &LieAlgebra,
    omega: &BilinearForm,
    levi: Option<&LeviData>,
) -> Result<VerifierReport, VerifierError> {
    let mut report = VerifierReport::new("nil_skew");
    report.hypothesis(
        "form is skew-symmetric",
        omega.kind() == FormKind::Skew,
        None,
    );
    if omega.kind() != FormKind::Skew {
        return Ok(report);
    }
    let (nil, witness) = nil_invariance_check(algebra, omega, levi);
    report.hypothesis(
        "omega is nil-invariant",
        nil,
        witness.map(|w| format!("non-skew generator {}", w.generator)),
    );
    let effective = is_effective(algebra, omega);
    report.hypothesis("the pair is effective", effective, None);
    if !report.hypotheses_met {
        return Ok(report);
    }
    merge_mode(&mut report, positive_mode(algebra, omega));

    quotient_compact_claim(algebra, &mut report, "Levi factors have compact type");

    let profile = algebra.profile();
    let nilrad = &profile.nilradical;
    let derived_nil = algebra.bracket_subspaces(nilrad, nilrad);
    let two_step = algebra.bracket_subspaces(nilrad, &derived_nil).is_zero();
    report.claim("nilradical is at most two-step", two_step, None);

    if profile.is_nilpotent {
        report.claim(
            "nilpotent algebras are abelian",
            algebra.derived_subalgebra().is_zero(),
            None,
        );
    } else {
        report.claim("nilpotent algebras are abelian", true, None);
        report.note("the algebra is not nilpotent; the abelian conclusion is vacuous");
    }

    // Supporting identities for R_omega = R intersect g_omega.
    let g_omega = skew_set(algebra, omega);
    let r_omega = profile.solvable_radical.intersect(&g_omega);
    let kernel = form_kernel(omega);
    let c1 = algebra.bracket_subspaces(&r_omega, &algebra.bracket_subspaces(&g_omega, &g_omega));
    report.claim(
        "[R_omega, [g_omega, g_omega]] lies in the kernel",
        kernel.contains(&c1),
        None,
    );
    report.claim(
        "[N, N] is omega-orthogonal to N",
        orthogonal(omega, &derived_nil, nilrad),
        None,
    );
    let perp_dn = orthogonal_complement(omega, &derived_nil);
    report.claim(
        "[[N,N]-perp, [N,N]] lies in the kernel",
        kernel.contains(&algebra.bracket_subspaces(&perp_dn, &derived_nil)),
        None,
    );
    let centralizer_n = algebra.centralizer(nilrad);
    report.claim(
        "[g, N] is omega-orthogonal to the centralizer of N",
        orthogonal(
            omega,
            &algebra.bracket_subspaces(&Subspace::full(algebra.dim()), nilrad),
            &centralizer_n,
        ),
        None,
    );
    report.claim(
        "R_omega equals the nilradical",
        r_omega == *nilrad,
        Some(format!("dim R_omega = {}, dim N = {}", r_omega.dim(), nilrad.dim()))
            .filter(|_| r_omega != *nilrad),
    );
    Ok(report)
}

/// Quasi-invariant effective skew form on a declared direct product K x R:
/// abelian nilradical and radical of imaginary type.
pub fn verify_skew_solvable(
    algebra: &LieAlgebra,
    omega: &BilinearForm,
    levi: Option<&LeviData>,
) -> Result<VerifierReport, VerifierError> {
    let mut report = VerifierReport::new("skew_solvable");
    report.hypothesis(
        "form is skew-symmetric",
        omega.kind() == FormKind::Skew,
        None,
    );
    if omega.kind() != FormKind::Skew {
        return Ok(report);
    }
    let (quasi, witness) = quasi_invariance_check(algebra, omega, levi)?;
    report.hypothesis(
        "omega is quasi-invariant",
        quasi,
        witness.map(|w| format!("non-skew generator {}", w.generator)),
    );
    report.hypothesis("the pair is effective", is_effective(algebra, omega), None);
    let radical = algebra.profile().solvable_radical.clone();
    let structure_ok = match compact_part(algebra, levi) {
        Some(k) => {
            k.sum(&radical).dim() == algebra.dim()
                && algebra.bracket_subspaces(&k, &radical).is_zero()
                && levi.map_or(true, |l| l.noncompact.is_zero())
        }
        None => false,
    };
    report.hypothesis(
        "the algebra is a declared direct product K x R",
        structure_ok,
        None,
    );
    if !report.hypotheses_met {
        return Ok(report);
    }
    merge_mode(&mut report, positive_mode(algebra, omega));

    let nilrad = algebra.profile().nilradical.clone();
    let derived_nil = algebra.bracket_subspaces(&nilrad, &nilrad);
    report.claim("nilradical is abelian", derived_nil.is_zero(), None);
    imaginary_type_claim(algebra, &radical, &mut report, "radical has imaginary type")?;

    let kernel = form_kernel(omega);
    report.claim(
        "[N, N] meets the kernel trivially",
        derived_nil.intersect(&kernel).is_zero(),
        None,
    );
    report.claim(
        "[N, N] is central",
        algebra.center().contains(&derived_nil),
        None,
    );
    let rn = algebra.bracket_subspaces(&radical, &nilrad);
    let centralizer_in_n = algebra
        .centralizer(&nilrad)
        .intersect(&nilrad);
    report.claim(
        "[R, N] lies in the center of N",
        centralizer_in_n.contains(&rn),
        None,
    );
    Ok(report)
}

/// Quasi-invariant nondegenerate skew form on a solvable algebra forces the
/// algebra to be abelian.
pub fn verify_quasi_solv_abelian(
    algebra: &LieAlgebra,
    omega: &BilinearForm,
    levi: Option<&LeviData>,
) -> Result<VerifierReport, VerifierError> {
    let mut report = VerifierReport::new("quasi_solv_abelian");
    report.hypothesis("the algebra is solvable", algebra.is_solvable(), None);
    report.hypothesis(
        "form is skew-symmetric",
        omega.kind() == FormKind::Skew,
        None,
    );
    if omega.kind() != FormKind::Skew {
        return Ok(report);
    }
    report.hypothesis("omega is nondegenerate", omega.is_nondegenerate(), None);
    if !report.hypotheses_met {
        return Ok(report);
    }
    let (quasi, witness) = quasi_invariance_check(algebra, omega, levi)?;
    report.hypothesis(
        "omega is quasi-invariant",
        quasi,
        witness.map(|w| format!("non-skew generator {}", w.generator)),
    );
    if !report.hypotheses_met {
        return Ok(report);
    }
    merge_mode(&mut report, positive_mode(algebra, omega));
    report.claim(
        "the algebra is abelian",
        algebra.derived_subalgebra().is_zero(),
        None,
    );
    Ok(report)
}

/// Nil-invariant effective almost h-structure: the radical is the nilradical
/// (at most two-step), the Levi part has compact type, and the solvable case
/// collapses to an abelian algebra with nondegenerate structure.
pub fn verify_radical_nilpotent(
    algebra: &LieAlgebra,
    model: &HAlgebraModel,
    levi: Option<&LeviData>,
) -> Result<VerifierReport, VerifierError> {
    let mut report = VerifierReport::new("radical_nilpotent");
    let metric = &model.h.metric;
    let omega = &model.h.fundamental;
    report.hypothesis(
        "the pair is effective",
        is_effective(algebra, metric),
        None,
    );
    let (nil_metric, wm) = nil_invariance_check(algebra, metric, levi);
    report.hypothesis(
        "the metric is nil-invariant",
        nil_metric,
        wm.map(|w| format!("non-skew generator {}", w.generator)),
    );
    let (nil_omega, wo) = nil_invariance_check(algebra, omega, levi);
    report.hypothesis(
        "the fundamental form is nil-invariant",
        nil_omega,
        wo.map(|w| format!("non-skew generator {}", w.generator)),
    );
    if !report.hypotheses_met {
        return Ok(report);
    }
    merge_mode(&mut report, positive_mode(algebra, metric));
    merge_mode(&mut report, positive_mode(algebra, omega));

    let profile = algebra.profile();
    let radical = &profile.solvable_radical;
    let nilrad = &profile.nilradical;
    report.claim(
        "the solvable radical is nilpotent",
        radical == nilrad,
        Some(format!("dim R = {}, dim N = {}", radical.dim(), nilrad.dim()))
            .filter(|_| radical != nilrad),
    );
    let derived_nil = algebra.bracket_subspaces(nilrad, nilrad);
    report.claim(
        "nilradical is at most two-step",
        algebra.bracket_subspaces(nilrad, &derived_nil).is_zero(),
        None,
    );
    quotient_compact_claim(algebra, &mut report, "Levi factors have compact type");

    if profile.is_solvable {
        report.claim(
            "solvable case: the algebra is abelian",
            algebra.derived_subalgebra().is_zero(),
            None,
        );
        report.claim(
            "solvable case: the h-structure is nondegenerate",
            model.h.is_nondegenerate(),
            None,
        );
    } else {
        report.note("the algebra is not solvable; the abelian specialization is vacuous");
    }

    // Supporting J-identities modulo the kernel.
    let jm = model.h.j.matrix();
    let kernel = &model.kernel_subalgebra;
    let full = Subspace::full(algebra.dim());
    let gn = algebra.bracket_subspaces(&full, nilrad);
    let jg = full.image_under(jm);
    let lhs = gn.image_under(jm).sum(kernel);
    let rhs = algebra.bracket_subspaces(&jg, nilrad).sum(kernel);
    report.claim("J[g, N] = [Jg, N] modulo the kernel", lhs == rhs, None);
    let gn_mod = gn.sum(kernel);
    report.claim(
        "J maps [g, N] + kernel to itself",
        gn_mod.contains(&gn_mod.image_under(jm)),
        None,
    );
    let gjh = crate::forms::g_j_h(algebra, model);
    report.claim(
        "[g_J^h, [g, N]] is metric-orthogonal to [g, N]",
        orthogonal(
            metric,
            &algebra.bracket_subspaces(&gjh, &gn),
            &gn,
        ),
        None,
    );
    let target = gn.intersect(kernel);
    let mut e1_ok = true;
    let mut e1_witness = None;
    for (k, a) in radical.basis_vectors().iter().enumerate() {
        let (_, e1) = fitting_decomposition(&algebra.adjoint(a));
        if !target.contains(&e1) {
            e1_ok = false;
            e1_witness = Some(format!("radical basis vector {}", k + 1));
            break;
        }
    }
    report.claim(
        "E1(a) lies in [g, N] intersect the kernel for radical a",
        e1_ok,
        e1_witness,
    );
    Ok(report)
}

/// Nil-invariant closed skew form: orthogonality relations, kernel splitting,
/// and under effectiveness the abelian nilradical and the direct product.
pub fn verify_symplectic_structure(
    algebra: &LieAlgebra,
    omega: &BilinearForm,
    levi: Option<&LeviData>,
) -> Result<VerifierReport, VerifierError> {
    let mut report = VerifierReport::new("symplectic_structure");
    report.hypothesis(
        "form is skew-symmetric",
        omega.kind() == FormKind::Skew,
        None,
    );
    if omega.kind() != FormKind::Skew {
        return Ok(report);
    }
    report.hypothesis("omega is closed", is_closed(algebra, omega), None);
    let (nil, witness) = nil_invariance_check(algebra, omega, levi);
    report.hypothesis(
        "omega is nil-invariant",
        nil,
        witness.map(|w| format!("non-skew generator {}", w.generator)),
    );
    if !report.hypotheses_met {
        return Ok(report);
    }
    merge_mode(&mut report, positive_mode(algebra, omega));

    let profile = algebra.profile();
    let nilrad = &profile.nilradical;
    let radical = &profile.solvable_radical;
    let full = Subspace::full(algebra.dim());
    let derived = algebra.derived_subalgebra();
    report.claim(
        "[g, g] is omega-orthogonal to N",
        orthogonal(omega, &derived, nilrad),
        None,
    );
    let derived_nil = algebra.bracket_subspaces(nilrad, nilrad);
    report.claim(
        "[N, N] is omega-orthogonal to g",
        orthogonal(omega, &derived_nil, &full),
        None,
    );
    match compact_part(algebra, levi) {
        Some(k) => {
            report.claim(
                "K is omega-orthogonal to R",
                orthogonal(omega, &k, radical),
                None,
            );
            let kn = algebra.bracket_subspaces(&k, nilrad);
            report.claim(
                "[K, N] is omega-orthogonal to g",
                orthogonal(omega, &kn, &full),
                None,
            );
            let kernel = form_kernel(omega);
            let split = kernel.intersect(&k).sum(&kernel.intersect(radical));
            report.claim(
                "the kernel splits along K and R",
                split == kernel,
                None,
            );
        }
        None => report.note(
            "no declared Levi factor and the algebra is not solvable; K-orthogonality claims skipped",
        ),
    }
    if is_effective(algebra, omega) {
        report.claim("nilradical is abelian", derived_nil.is_zero(), None);
        match compact_part(algebra, levi) {
            Some(k) => report.claim(
                "g is the direct product K x R",
                algebra.bracket_subspaces(&k, radical).is_zero()
                    && k.sum(radical).dim() == algebra.dim(),
                None,
            ),
            None => {}
        }
    } else {
        report.note("the pair is not effective; the effectiveness conclusions are skipped");
    }
    Ok(report)
}

/// Closed nil-invariant skew form plus an independent nil-invariant metric
/// with the same kernel: abelian radical, kernel inside K, direct product,
/// omega nondegenerate on R.
pub fn verify_metric_symplectic(
    algebra: &LieAlgebra,
    omega: &BilinearForm,
    metric: &BilinearForm,
    levi: Option<&LeviData>,
) -> Result<VerifierReport, VerifierError> {
    let mut report = VerifierReport::new("metric_symplectic");
    report.hypothesis(
        "omega is skew and the metric symmetric",
        omega.kind() == FormKind::Skew && metric.kind() == FormKind::Symmetric,
        None,
    );
    if omega.kind() != FormKind::Skew || metric.kind() != FormKind::Symmetric {
        return Ok(report);
    }
    report.hypothesis("omega is closed", is_closed(algebra, omega), None);
    report.hypothesis(
        "omega and the metric share their kernel",
        form_kernel(omega) == form_kernel(metric),
        None,
    );
    let (nil_o, wo) = nil_invariance_check(algebra, omega, levi);
    report.hypothesis(
        "omega is nil-invariant",
        nil_o,
        wo.map(|w| format!("non-skew generator {}", w.generator)),
    );
    let (nil_m, wm) = nil_invariance_check(algebra, metric, levi);
    report.hypothesis(
        "the metric is nil-invariant",
        nil_m,
        wm.map(|w| format!("non-skew generator {}", w.generator)),
    );
    report.hypothesis("the pair is effective", is_effective(algebra, omega), None);
    if !report.hypotheses_met {
        return Ok(report);
    }
    merge_mode(&mut report, positive_mode(algebra, omega));
    merge_mode(&mut report, positive_mode(algebra, metric));

    let radical = algebra.profile().solvable_radical.clone();
    report.claim(
        "the radical is abelian",
        algebra.bracket_subspaces(&radical, &radical).is_zero(),
        None,
    );
    let kernel = form_kernel(omega);
    match compact_part(algebra, levi) {
        Some(k) => {
            report.claim("the kernel lies in K", k.contains(&kernel), None);
            report.claim(
                "g is the direct product K x R",
                algebra.bracket_subspaces(&k, &radical).is_zero()
                    && k.sum(&radical).dim() == algebra.dim(),
                None,
            );
        }
        None => report.note("no declared Levi factor; the K-placement claims are skipped"),
    }
    let restricted = restrict_gram(omega, &radical);
    report.claim(
        "omega is nondegenerate on the radical",
        restricted.rank() == radical.dim(),
        None,
    );
    Ok(report)
}

/// Pseudo-Kaehler orthogonality: on a compact-type K x R model with closed
/// fundamental form, K and R are orthogonal under both forms, the kernel is
/// K-sided and splits along the simple ideals, and the fundamental form on K
/// is a Killing coadjoint form.
pub fn verify_pk_orthogonality(
    algebra: &LieAlgebra,
    model: &HAlgebraModel,
    levi: Option<&LeviData>,
) -> Result<VerifierReport, VerifierError> {
    let mut report = VerifierReport::new("pk_orthogonality");
    let omega = &model.h.fundamental;
    let metric = &model.h.metric;
    report.hypothesis(
        "the fundamental form is closed",
        is_closed(algebra, omega),
        None,
    );
    let (nil, w) = nil_invariance_check(algebra, omega, levi);
    report.hypothesis(
        "the fundamental form is nil-invariant",
        nil,
        w.map(|w| format!("non-skew generator {}", w.generator)),
    );
    let radical = algebra.profile().solvable_radical.clone();
    let k_part = compact_part(algebra, levi);
    let structure_ok = match &k_part {
        Some(k) => {
            algebra.bracket_subspaces(k, &radical).is_zero()
                && k.sum(&radical).dim() == algebra.dim()
                && levi.map_or(true, |l| l.noncompact.is_zero())
        }
        None => false,
    };
    report.hypothesis("the algebra is a compact-type product K x R", structure_ok, None);
    report.hypothesis(
        "the radical is abelian",
        algebra.bracket_subspaces(&radical, &radical).is_zero(),
        None,
    );
    if !report.hypotheses_met {
        return Ok(report);
    }
    merge_mode(&mut report, positive_mode(algebra, omega));
    let k = k_part.expect("structure hypothesis guarantees a compact part");

    report.claim(
        "K and R are orthogonal under both forms",
        orthogonal(omega, &k, &radical) && orthogonal(metric, &k, &radical),
        None,
    );
    let kernel = &model.kernel_subalgebra;
    let komega_in_k = orthogonal_complement(omega, &k).intersect(&k);
    report.claim(
        "the kernel is the omega-complement of K inside K",
        *kernel == komega_in_k,
        None,
    );

    if k.is_zero() {
        report.note("the compact factor is trivial; simple-ideal claims are vacuous");
        report.claim("simple ideals are mutually orthogonal under both forms", true, None);
        report.claim("the kernel splits along the simple ideals", true, None);
        report.claim("omega on K comes from the Killing form", true, None);
        return Ok(report);
    }

    let k_alg = algebra
        .subalgebra(&k)
        .expect("the compact factor is a subalgebra");
    match simple_ideals(&k_alg) {
        Some(ideals_in_k) => {
            // Map the ideals back to ambient coordinates.
            let ideals: Vec<Subspace> = ideals_in_k
                .iter()
                .map(|s| lift_subspace(&k, s))
                .collect();
            let mut mutually = true;
            for i in 0..ideals.len() {
                for j in i + 1..ideals.len() {
                    if !orthogonal(omega, &ideals[i], &ideals[j])
                        || !orthogonal(metric, &ideals[i], &ideals[j])
                    {
                        mutually = false;
                    }
                }
            }
            report.claim(
                "simple ideals are mutually orthogonal under both forms",
                mutually,
                None,
            );
            let mut split = Subspace::zero(algebra.dim());
            for ideal in &ideals {
                split = split.sum(&kernel.intersect(ideal));
            }
            report.claim(
                "the kernel splits along the simple ideals",
                split == *kernel,
                None,
            );
        }
        None => report.note("simple ideal decomposition unavailable; splitting claims skipped"),
    }

    // omega(x, y) = kappa(a, [x, y]) on K for some a, solved exactly.
    let kk = k_alg.killing_form();
    let m = k_alg.dim();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let k_basis = k.basis_vectors();
    for i in 0..m {
        for j in i + 1..m {
            rows.push(kk.apply(&k_alg.bracket_basis(i, j)));
            rhs.push(omega.eval(&k_basis[i], &k_basis[j]));
        }
    }
    let solvable = if rows.is_empty() {
        true
    } else {
        let a_mat = Mat::from_rows(rows);
        a_mat.solve(&rhs).is_some()
    };
    report.claim("omega on K comes from the Killing form", solvable, None);
    Ok(report)
}

/// Closed quasi-invariant effective skew form: direct product K x R, abelian
/// nilradical, and rotation action of a complement of N on N. Group-level
/// claims (compactness, connectedness) are out of scope and noted.
pub fn verify_zb_profile(
    algebra: &LieAlgebra,
    omega: &BilinearForm,
    levi: Option<&LeviData>,
) -> Result<VerifierReport, VerifierError> {
    let mut report = VerifierReport::new("zb_profile");
    report.hypothesis(
        "form is skew-symmetric",
        omega.kind() == FormKind::Skew,
        None,
    );
    if omega.kind() != FormKind::Skew {
        return Ok(report);
    }
    report.hypothesis("omega is closed", is_closed(algebra, omega), None);
    let (quasi, w) = quasi_invariance_check(algebra, omega, levi)?;
    report.hypothesis(
        "omega is quasi-invariant",
        quasi,
        w.map(|w| format!("non-skew generator {}", w.generator)),
    );
    report.hypothesis("the pair is effective", is_effective(algebra, omega), None);
    if !report.hypotheses_met {
        return Ok(report);
    }
    merge_mode(&mut report, positive_mode(algebra, omega));
    report.note("group-level claims (compactness, connectedness, centralizer of a torus) are out of scope");

    let radical = algebra.profile().solvable_radical.clone();
    match compact_part(algebra, levi) {
        Some(k) => report.claim(
            "g is the direct product K x R",
            algebra.bracket_subspaces(&k, &radical).is_zero()
                && k.sum(&radical).dim() == algebra.dim(),
            None,
        ),
        None => report.note("no declared Levi factor; the direct-product claim is skipped"),
    }
    let nilrad = algebra.profile().nilradical.clone();
    report.claim(
        "nilradical is abelian",
        algebra.bracket_subspaces(&nilrad, &nilrad).is_zero(),
        None,
    );
    report.claim(
        "R modulo N is abelian",
        radical.contains(&nilrad) && {
            let rr = algebra.bracket_subspaces(&radical, &radical);
            nilrad.contains(&rr)
        },
        None,
    );
    // Rotation action: a deterministic complement of N inside R acts on N
    // with purely imaginary spectrum.
    let complement = complement_within(&radical, &nilrad);
    let mut rotation_ok = true;
    let mut witness = None;
    for (idx, a) in complement.basis_vectors().iter().enumerate() {
        let ad = algebra.adjoint(a);
        let restricted = restrict_operator(&ad, &nilrad);
        let (s, _) = jordan_chevalley(&restricted);
        let (_, real_split) = split_imaginary_parts(&s)?;
        if !real_split.is_zero() {
            rotation_ok = false;
            witness = Some(format!("complement vector {} acts with real-split part", idx + 1));
            break;
        }
    }
    report.claim("the complement of N in R acts on N by rotations", rotation_ok, witness);
    Ok(report)
}

/// Dispatch by theorem id, picking the required forms out of the instance
/// data: the first skew form serves as omega, the first symmetric as metric,
/// the h-structure provides the model.
pub struct InstanceView<'a> {
    pub algebra: &'a LieAlgebra,
    pub omega: Option<&'a BilinearForm>,
    pub metric: Option<&'a BilinearForm>,
    pub model: Option<&'a HAlgebraModel>,
    pub levi: Option<&'a LeviData>,
}

pub fn run_verifier(id: TheoremId, view: &InstanceView) -> Result<VerifierReport, VerifierError> {
    let need_omega = || {
        view.omega
            .ok_or_else(|| VerifierError::MissingData("a skew form".into()))
    };
    let need_model = || {
        view.model
            .ok_or_else(|| VerifierError::MissingData("an h-structure".into()))
    };
    match id {
        TheoremId::NilSkew => verify_nil_skew(view.algebra, need_omega()?, view.levi),
        TheoremId::SkewSolvable => verify_skew_solvable(view.algebra, need_omega()?, view.levi),
        TheoremId::QuasiSolvAbelian => {
            verify_quasi_solv_abelian(view.algebra, need_omega()?, view.levi)
        }
        TheoremId::RadicalNilpotent => {
            verify_radical_nilpotent(view.algebra, need_model()?, view.levi)
        }
        TheoremId::SymplecticStructure => {
            verify_symplectic_structure(view.algebra, need_omega()?, view.levi)
        }
        TheoremId::MetricSymplectic => {
            let metric = view
                .metric
                .ok_or_else(|| VerifierError::MissingData("a symmetric form".into()))?;
            verify_metric_symplectic(view.algebra, need_omega()?, metric, view.levi)
        }
        TheoremId::PkOrthogonality => {
            verify_pk_orthogonality(view.algebra, need_model()?, view.levi)
        }
        TheoremId::ZbProfile => verify_zb_profile(view.algebra, need_omega()?, view.levi),
    }
}

// ---- structural helpers ----

/// Deterministic complement of `inner` within `outer` (both subspaces of the
/// same ambient space, `inner <= outer`).
fn complement_within(outer: &Subspace, inner: &Subspace) -> Subspace {
    assert!(outer.contains(inner));
    let mut comp = inner.clone();
    let mut gens = Vec::new();
    for v in outer.basis_vectors() {
        if !comp.contains_vector(&v) {
            comp = comp.with_vector(&v);
            gens.push(v);
        }
    }
    Subspace::from_vectors(outer.ambient(), &gens)
}

/// Matrix of an operator restricted to an invariant subspace, in the
/// subspace basis.
fn restrict_operator(op: &Mat, s: &Subspace) -> Mat {
    let k = s.dim();
    let mut out = Mat::zeros(k, k);
    for j in 0..k {
        let image = op.apply(&s.basis().column(j));
        let coords = s
            .coordinates_of(&image)
            .expect("subspace must be invariant under the operator");
        out.set_column(j, &coords);
    }
    out
}

fn lift_subspace(ambient_sub: &Subspace, inner: &Subspace) -> Subspace {
    let vectors: Vec<Vec<Rat>> = inner
        .basis_vectors()
        .iter()
        .map(|v| ambient_sub.basis().apply(v))
        .collect();
    Subspace::from_vectors(ambient_sub.ambient(), &vectors)
}

/// Decompose a semisimple algebra into its simple ideals via the centroid:
/// the centroid of a product of absolutely simple factors is split, so a
/// generic centroid element has a squarefree minimal polynomial with rational
/// roots whose eigenprojections cut out the factors. Returns `None` when no
/// splitting centroid element is found.
pub fn simple_ideals(k_alg: &LieAlgebra) -> Option<Vec<Subspace>> {
    let n = k_alg.dim();
    if n == 0 {
        return Some(Vec::new());
    }
    if !k_alg.is_semisimple() {
        return None;
    }
    // Centroid: phi with phi [x, y] = [phi x, y] = [x, phi y] for basis x, y.
    let mut stack_rows: Vec<Vec<Rat>> = Vec::new();
    for i in 0..n {
        let ad = k_alg.adjoint_basis(i);
        // phi ad(e_i) - ad(e_i) phi = 0 and phi ad(e_i) = ad(phi-image ...)
        // encoded as: phi [e_i, e_j] = [phi e_i, e_j] means
        // phi ad(e_i) e_j = -ad(e_j) phi e_i; stack both linear conditions.
        for j in 0..n {
            // Row block for: (phi ad(e_i))_{., j} - (ad(e_i) phi)_{., j} = 0.
            for r in 0..n {
                let mut row = vec![Rat::zero(); n * n];
                for c in 0..n {
                    // (phi ad)_{r j} = sum_c phi_{r c} ad_{c j}
                    row[r * n + c] = &row[r * n + c] + ad.at(c, j);
                    // (ad phi)_{r j} = sum_c ad_{r c} phi_{c j}
                    row[c * n + j] = &row[c * n + j] - ad.at(r, c);
                }
                stack_rows.push(row);
            }
        }
    }
    let centroid_basis = Mat::from_rows(stack_rows).kernel();
    let dim_centroid = centroid_basis.cols();
    if dim_centroid == 1 {
        return Some(vec![Subspace::full(n)]);
    }
    // Generic element: try deterministic coefficient vectors until the
    // minimal polynomial splits into distinct rational roots of full degree.
    for t in 1..=(4 * dim_centroid as i64 + 4) {
        let mut coeffs = Vec::with_capacity(dim_centroid);
        let mut acc = Rat::one();
        for _ in 0..dim_centroid {
            coeffs.push(acc.clone());
            acc = &acc * &Rat::int(t);
        }
        let mut gamma = Mat::zeros(n, n);
        for (c, coeff) in coeffs.iter().enumerate() {
            let phi = Mat::from_vectorized(n, &centroid_basis.column(c));
            gamma = &gamma + &phi.scale(coeff);
        }
        let p = crate::decomp::minimal_polynomial(&gamma);
        if p.degree() != Some(dim_centroid) || !p.is_squarefree() {
            continue;
        }
        let roots = crate::poly::rational_roots(&p);
        if roots.len() != dim_centroid {
            continue;
        }
        let mut ideals = Vec::new();
        for root in &roots {
            let proj_kernel = {
                let shifted = &gamma - &Mat::identity(n).scale(root);
                Subspace::from_columns(n, shifted.kernel())
            };
            if proj_kernel.is_zero() || !k_alg.is_ideal(&proj_kernel) {
                return None;
            }
            ideals.push(proj_kernel);
        }
        let total: usize = ideals.iter().map(|i| i.dim()).sum();
        if total == n {
            return Some(ideals);
        }
    }
    None
}
