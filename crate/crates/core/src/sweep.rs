//! Corpus sweeps: run the deciders and every applicable verifier over catalog
//! and random instances, check the cross-cutting invariants, and count
//! contradiction alerts (a conclusion failing although the hypotheses were
//! established exactly) and research flags (the same under a
//! generator-approximation positive verdict).

use crate::catalog::{self, CatalogError};
use crate::forms::{
    form_kernel, is_effective, orthogonal_complement, skew_set, BilinearForm, FormKind,
    HAlgebraModel,
};
use crate::instance::InstanceData;
use crate::invariance::{invariance_verdict, InvarianceVerdict};
use crate::lie::LieAlgebra;
use crate::mat::Subspace;
use crate::theorems::{run_verifier, InstanceView, TheoremId, VerifierError, ALL_THEOREMS};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub count: usize,
    pub max_dim: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            count: 200,
            max_dim: 6,
            seed: 7,
        }
    }
}

/// Outcome of sweeping one instance.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub name: String,
    pub dim: usize,
    /// theorem name -> hypotheses met?
    pub hypothesis_passes: BTreeMap<String, bool>,
    /// Conclusion failures with exactly-established hypotheses.
    pub alerts: Vec<String>,
    /// Conclusion failures under generator-approximation hypotheses.
    pub research_flags: Vec<String>,
    /// Verifier runs skipped because of unsupported eigenvalue fields.
    pub skipped: Vec<String>,
    /// Cross-cutting invariant violations (implication chain, symmetric
    /// equivalence, orthogonality lemmas); always expected empty.
    pub invariant_violations: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub hypothesis_pass_counts: BTreeMap<String, usize>,
    pub alerts: Vec<String>,
    pub research_flags: usize,
    pub skipped: usize,
    pub invariant_violations: Vec<String>,
}

/// Build the deterministic work list: all catalog entries with their default
/// parameters, plus `count` random instances.
pub fn tasks(config: &SweepConfig) -> Vec<(String, InstanceData, u64)> {
    let mut out = Vec::new();
    for entry in default_catalog_entries() {
        let inst = InstanceData::from_catalog_entry(&entry);
        let name = inst.name.clone().unwrap_or_else(|| entry.name.clone());
        out.push((name, inst, config.seed));
    }
    for (k, (name, random)) in catalog::corpus(config.count, config.max_dim, config.seed)
        .into_iter()
        .enumerate()
    {
        let inst = InstanceData {
            name: Some(name.clone()),
            algebra: random.algebra,
            forms: BTreeMap::new(),
            h: None,
            levi: random.levi,
        };
        out.push((name, inst, config.seed.wrapping_add(1000 + k as u64)));
    }
    out
}

/// All catalog entries at their smallest sensible parameters.
pub fn default_catalog_entries() -> Vec<catalog::CatalogEntry> {
    let p = |pairs: &[(&str, i64)]| -> BTreeMap<String, i64> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    };
    let specs: Vec<(&str, BTreeMap<String, i64>)> = vec![
        ("abelian-torus", p(&[("p", 1), ("q", 1)])),
        ("two-dim-solvable", BTreeMap::new()),
        ("heisenberg", p(&[("n", 1)])),
        ("heisenberg", p(&[("n", 2)])),
        ("Gn", p(&[("n", 1)])),
        ("Gn", p(&[("n", 2)])),
        ("su2", BTreeMap::new()),
        ("sl2", BTreeMap::new()),
        ("su2-times-abelian", p(&[("d", 2)])),
        ("su2-times-su2", BTreeMap::new()),
        ("dual-pairing", p(&[("d", 2)])),
        ("oscillator", p(&[("n", 1)])),
        ("oscillator", p(&[("n", 2)])),
        ("u2-hopf", BTreeMap::new()),
    ];
    specs
        .into_iter()
        .map(|(name, params)| catalog::get(name, &params).expect("default catalog entries exist"))
        .collect()
}

/// Sweep one instance: verdicts on its forms (random ones are generated when
/// the instance carries none), the cross-cutting invariants, and every
/// verifier whose input data is available.
pub fn run_instance(name: &str, instance: &InstanceData, form_seed: u64) -> InstanceReport {
    let mut report = InstanceReport {
        name: name.to_string(),
        dim: instance.algebra.dim(),
        hypothesis_passes: BTreeMap::new(),
        alerts: Vec::new(),
        research_flags: Vec::new(),
        skipped: Vec::new(),
        invariant_violations: Vec::new(),
    };
    let algebra = &instance.algebra;
    let levi = instance.levi.as_ref();

    // Forms under test: the instance's own, or one random pair.
    let mut forms: Vec<(String, BilinearForm)> = instance
        .forms
        .iter()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    if forms.is_empty() {
        match catalog::random_form(algebra, FormKind::Symmetric, form_seed, false) {
            Ok(f) => forms.push(("random-symmetric".into(), f)),
            Err(CatalogError::GenerationFailed(_)) => {}
            Err(e) => report.skipped.push(format!("symmetric form: {}", e)),
        }
        match catalog::random_form(algebra, FormKind::Skew, form_seed.wrapping_add(1), false) {
            Ok(f) => forms.push(("random-skew".into(), f)),
            Err(CatalogError::GenerationFailed(_)) => {}
            Err(e) => report.skipped.push(format!("skew form: {}", e)),
        }
    }

    let mut verdicts: Vec<(String, BilinearForm, InvarianceVerdict)> = Vec::new();
    for (fname, f) in &forms {
        match invariance_verdict(algebra, f, levi) {
            Ok(v) => verdicts.push((fname.clone(), f.clone(), v)),
            Err(e) => report.skipped.push(format!("verdict on {}: {}", fname, e)),
        }
    }

    check_cross_invariants(algebra, instance, &verdicts, &mut report);

    // Verifier battery.
    let model = instance
        .h
        .clone()
        .map(|h| HAlgebraModel::new(algebra, h));
    let omega = instance.omega().cloned().or_else(|| {
        forms
            .iter()
            .find(|(_, f)| f.kind() == FormKind::Skew)
            .map(|(_, f)| f.clone())
    });
    let metric = instance.metric().cloned().or_else(|| {
        forms
            .iter()
            .find(|(_, f)| f.kind() == FormKind::Symmetric)
            .map(|(_, f)| f.clone())
    });
    let view = InstanceView {
        algebra,
        omega: omega.as_ref(),
        metric: metric.as_ref(),
        model: model.as_ref(),
        levi,
    };
    for &id in ALL_THEOREMS {
        match run_verifier(id, &view) {
            Ok(vr) => {
                report
                    .hypothesis_passes
                    .insert(id.name().into(), vr.hypotheses_met);
                if vr.is_contradiction_alert() {
                    let failing: Vec<&str> = vr
                        .conclusions
                        .iter()
                        .filter(|c| !c.passed)
                        .map(|c| c.label.as_str())
                        .collect();
                    report.alerts.push(format!(
                        "{}: {} fails on {}",
                        id.name(),
                        failing.join("; "),
                        name
                    ));
                } else if vr.is_research_flag() {
                    let failing: Vec<&str> = vr
                        .conclusions
                        .iter()
                        .filter(|c| !c.passed)
                        .map(|c| c.label.as_str())
                        .collect();
                    report.research_flags.push(format!(
                        "{}: {} (generator approximation) on {}",
                        id.name(),
                        failing.join("; "),
                        name
                    ));
                }
            }
            Err(VerifierError::MissingData(_)) => {}
            Err(VerifierError::UnknownTheorem(_)) => unreachable!(),
            Err(e) => report.skipped.push(format!("{}: {}", id.name(), e)),
        }
    }
    report
}

/// The theorem-shaped invariants that every instance must satisfy regardless
/// of which verifier hypotheses hold.
fn check_cross_invariants(
    algebra: &LieAlgebra,
    instance: &InstanceData,
    verdicts: &[(String, BilinearForm, InvarianceVerdict)],
    report: &mut InstanceReport,
) {
    let profile = algebra.profile();
    let nilrad = &profile.nilradical;
    let radical = &profile.solvable_radical;
    let full = Subspace::full(algebra.dim());
    for (fname, f, v) in verdicts {
        let fail = |report: &mut InstanceReport, what: &str| {
            let name = report.name.clone();
            report
                .invariant_violations
                .push(format!("{} on form {} of {}", what, fname, name));
        };
        // Monotone implication chain.
        if (v.invariant && !v.quasi_invariant) || (v.quasi_invariant && !v.nil_invariant) {
            fail(report, "implication chain invariant => quasi => nil broken");
        }
        // Symmetric forms: nil-invariance and quasi-invariance coincide, and
        // on solvable algebras nil-invariant symmetric forms are invariant.
        if f.kind() == FormKind::Symmetric {
            if v.nil_invariant != v.quasi_invariant {
                fail(report, "symmetric equivalence nil == quasi broken");
            }
            if profile.is_solvable && v.nil_invariant && !v.invariant {
                fail(report, "solvable symmetric nil-invariant form not invariant");
            }
        }
        let kernel = form_kernel(f);
        let gf = skew_set(algebra, f);
        // Invariant + effective skew forms force abelian and nondegenerate.
        if f.kind() == FormKind::Skew && v.invariant && is_effective(algebra, f) {
            if !algebra.derived_subalgebra().is_zero() || !f.is_nondegenerate() {
                fail(report, "effective invariant skew form on nonabelian algebra");
            }
        }
        // [g_f, g_f] is f-orthogonal to g_f (a skew-form relation).
        if f.kind() == FormKind::Skew {
            let gg = algebra.bracket_subspaces(&gf, &gf);
            if !orthogonal_complement(f, &gf).contains(&gg) {
                fail(report, "[g_f, g_f] not f-orthogonal to g_f");
            }
        }
        // Ideals inside the skew set: [J-perp, J] lies in J and in the kernel.
        for cand in [nilrad.clone(), algebra.center(), algebra.derived_subalgebra()] {
            if cand.is_zero() || !gf.contains(&cand) || !algebra.is_ideal(&cand) {
                continue;
            }
            // [J-perp, J] <= J intersect kernel for ideals J inside the skew set.
            let perp = orthogonal_complement(f, &cand);
            let br = algebra.bracket_subspaces(&perp, &cand);
            if !(cand.contains(&br) && kernel.contains(&br)) {
                fail(report, "ideal orthogonality relation broken");
            }
        }
        if f.kind() == FormKind::Skew {
            if v.nil_invariant {
                // Nilradical sits inside the skew set.
                if !gf.contains(nilrad) {
                    fail(report, "nil-invariant form with nilradical outside skew set");
                }
                // [[a,n],n'] - [n,[a,n']] lies in the kernel.
                let mut lsym_ok = true;
                'outer: for a in radical.basis_vectors() {
                    for nvec in nilrad.basis_vectors() {
                        for nvec2 in nilrad.basis_vectors() {
                            let lhs = algebra.bracket(&algebra.bracket(&a, &nvec), &nvec2);
                            let rhs = algebra.bracket(&nvec, &algebra.bracket(&a, &nvec2));
                            let diff = crate::mat::vec_sub(&lhs, &rhs);
                            if !kernel.contains_vector(&diff) {
                                lsym_ok = false;
                                break 'outer;
                            }
                        }
                    }
                }
                if !lsym_ok {
                    fail(report, "radical symmetry relation broken on nil-invariant form");
                }
                // Declared non-compact parts generate ideals inside the kernel.
                if let Some(l) = &instance.levi {
                    if !l.noncompact.is_zero() {
                        let ideal = algebra.ideal_generated_by(&l.noncompact);
                        if !kernel.contains(&ideal) {
                            fail(report, "non-compact Levi ideal escapes the kernel");
                        }
                    }
                }
            }
            if v.quasi_invariant {
                // [g, [N, N]] <= [N, N] intersect kernel.
                let dn = algebra.bracket_subspaces(nilrad, nilrad);
                let gdn = algebra.bracket_subspaces(&full, &dn);
                if !(dn.contains(&gdn) && kernel.contains(&gdn)) {
                    fail(report, "prolongation inclusion broken on quasi-invariant form");
                }
            }
        }
    }
}

pub fn summarize(reports: &[InstanceReport]) -> SweepSummary {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut alerts = Vec::new();
    let mut flags = 0;
    let mut skipped = 0;
    let mut violations = Vec::new();
    for r in reports {
        for (t, met) in &r.hypothesis_passes {
            if *met {
                *counts.entry(t.clone()).or_insert(0) += 1;
            }
        }
        alerts.extend(r.alerts.iter().cloned());
        flags += r.research_flags.len();
        skipped += r.skipped.len();
        violations.extend(r.invariant_violations.iter().cloned());
    }
    SweepSummary {
        instances: reports.len(),
        hypothesis_pass_counts: counts,
        alerts,
        research_flags: flags,
        skipped,
        invariant_violations: violations,
    }
}

/// Serial sweep over the whole work list.
pub fn run(config: &SweepConfig) -> (Vec<InstanceReport>, SweepSummary) {
    let reports: Vec<InstanceReport> = tasks(config)
        .iter()
        .map(|(name, inst, seed)| run_instance(name, inst, *seed))
        .collect();
    let summary = summarize(&reports);
    (reports, summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_has_no_alerts() {
        let config = SweepConfig {
            count: 24,
            max_dim: 5,
            seed: 11,
        };
        let (reports, summary) = run(&config);
        assert_eq!(summary.instances, reports.len());
        assert!(
            summary.alerts.is_empty(),
            "contradiction alerts: {:?}",
            summary.alerts
        );
        assert!(
            summary.invariant_violations.is_empty(),
            "invariant violations: {:?}",
            summary.invariant_violations
        );
        // The catalog positives must show up as hypothesis passes.
        assert!(summary.hypothesis_pass_counts["nil_skew"] >= 2);
        assert!(summary.hypothesis_pass_counts["skew_solvable"] >= 1);
    }

    #[test]
    fn sweep_is_deterministic() {
        let config = SweepConfig {
            count: 8,
            max_dim: 4,
            seed: 3,
        };
        let (r1, s1) = run(&config);
        let (r2, s2) = run(&config);
        assert_eq!(r1.len(), r2.len());
        for (a, b) in r1.iter().zip(&r2) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.hypothesis_passes, b.hypothesis_passes);
        }
        assert_eq!(s1.hypothesis_pass_counts, s2.hypothesis_pass_counts);
    }
}
