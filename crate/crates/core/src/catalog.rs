//! Built-in example instances and seeded random generators.
//!
//! Catalog entries bundle an algebra with named forms, an optional h-structure
//! and declared Levi data, plus the expected checker verdicts with provenance
//! tags; reproducing those verdicts is the regression suite. The random
//! generators build Jacobi-valid instances by construction (graded brackets,
//! commuting derivations, direct products with standard simple factors) and
//! then move them through a random change of basis, so the corpus is
//! deterministic in the seed.

use crate::forms::{BilinearForm, FormKind, HStructure, JStructure};
use crate::invariance::LeviData;
use crate::lie::LieAlgebra;
use crate::mat::{std_basis_vec, Mat, Subspace};
use crate::rat::Rat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::collections::BTreeMap;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("bad parameters for `{name}`: {reason}")]
    BadParameters { name: String, reason: String },
    #[error("generation failed: {0}")]
    GenerationFailed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

/// One expected checker outcome for a catalog entry.
#[derive(Debug, Clone)]
pub enum Expectation {
    /// invariant / nil-invariant / quasi-invariant flags for a named form.
    FormVerdict {
        form: String,
        invariant: bool,
        nil_invariant: bool,
        quasi_invariant: bool,
    },
    FormNondegenerate { form: String, expected: bool },
    FormClosed { form: String, expected: bool },
    FormEffective { form: String, expected: bool },
    NilradicalDim(usize),
    /// Compact-type flag of g modulo its radical; `None` means the quotient is
    /// trivial.
    QuotientCompactType(Option<bool>),
    AlmostHAlgebra { almost: bool, integrable: bool },
}

#[derive(Debug, Clone)]
pub struct ExpectedVerdict {
    pub expectation: Expectation,
    pub provenance: Provenance,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub parameters: BTreeMap<String, i64>,
    pub algebra: LieAlgebra,
    pub forms: BTreeMap<String, BilinearForm>,
    pub h_structure: Option<HStructure>,
    pub levi: Option<LeviData>,
    pub expected: Vec<ExpectedVerdict>,
}

pub const ENTRY_NAMES: &[&str] = &[
    "abelian-torus",
    "two-dim-solvable",
    "heisenberg",
    "Gn",
    "su2",
    "sl2",
    "su2-times-abelian",
    "su2-times-su2",
    "dual-pairing",
    "oscillator",
    "u2-hopf",
];

/// Parameter summary for `catalog list`.
pub fn describe(name: &str) -> Option<&'static str> {
    match name {
        "abelian-torus" => Some("p, q >= 0: flat complex torus model C^{p,q}, dim 2(p+q)"),
        "two-dim-solvable" => Some("[x,y] = y with omega = dx ^ dy"),
        "heisenberg" => Some("n >= 1: Heisenberg algebra H_n, dim 2n+1"),
        "Gn" => Some("n >= 1: solvable extension of H_n with grading element, dim 2n+2"),
        "su2" => Some("compact simple model with Killing form"),
        "sl2" => Some("split simple model with Killing form and declared nilpotents"),
        "su2-times-abelian" => Some("d >= 0 even: su2 x R^d with product symplectic-type form"),
        "su2-times-su2" => Some("two compact factors with coadjoint-orbit forms"),
        "dual-pairing" => Some("d = 2: su2 x R^d, metric dually pairing W with R^d"),
        "oscillator" => Some("n >= 1: rotation algebra a |x (x_i, y_i), distinct speeds, dim 2n+1"),
        "u2-hopf" => Some("u(2) = su2 x R with Hopf-type complex structure"),
        _ => None,
    }
}

fn param(params: &BTreeMap<String, i64>, key: &str, name: &str) -> Result<i64, CatalogError> {
    params
        .get(key)
        .copied()
        .ok_or_else(|| CatalogError::BadParameters {
            name: name.into(),
            reason: format!("missing parameter `{}`", key),
        })
}

fn skew_gram(n: usize, entries: &[(usize, usize, Rat)]) -> BilinearForm {
    let mut m = Mat::zeros(n, n);
    for (i, j, v) in entries {
        *m.at_mut(*i, *j) = v.clone();
        *m.at_mut(*j, *i) = -v;
    }
    BilinearForm::skew(m).expect("constructed gram is skew")
}

fn sym_gram(n: usize, entries: &[(usize, usize, Rat)]) -> BilinearForm {
    let mut m = Mat::zeros(n, n);
    for (i, j, v) in entries {
        *m.at_mut(*i, *j) = v.clone();
        *m.at_mut(*j, *i) = v.clone();
    }
    BilinearForm::symmetric(m).expect("constructed gram is symmetric")
}

/// Fetch a catalog entry by name and integer parameters.
pub fn get(name: &str, params: &BTreeMap<String, i64>) -> Result<CatalogEntry, CatalogError> {
    match name {
        "abelian-torus" => abelian_torus(params),
        "two-dim-solvable" => Ok(two_dim_solvable()),
        "heisenberg" => heisenberg_entry(params),
        "Gn" => gn_entry(params),
        "su2" => Ok(su2_entry()),
        "sl2" => Ok(sl2_entry()),
        "su2-times-abelian" => su2_times_abelian(params),
        "su2-times-su2" => Ok(su2_times_su2()),
        "dual-pairing" => dual_pairing(params),
        "oscillator" => oscillator(params),
        "u2-hopf" => Ok(u2_hopf()),
        _ => Err(CatalogError::UnknownEntry(name.to_string())),
    }
}

// ---- Standard algebras ----

pub fn su2_algebra() -> LieAlgebra {
    LieAlgebra::from_brackets(
        vec!["e1".into(), "e2".into(), "e3".into()],
        &[
            (0, 1, vec![(2, Rat::one())]),
            (1, 2, vec![(0, Rat::one())]),
            (2, 0, vec![(1, Rat::one())]),
        ],
    )
    .expect("su2 model is a Lie algebra")
}

pub fn sl2_algebra() -> LieAlgebra {
    LieAlgebra::from_brackets(
        vec!["h".into(), "e".into(), "f".into()],
        &[
            (0, 1, vec![(1, Rat::int(2))]),
            (0, 2, vec![(2, Rat::int(-2))]),
            (1, 2, vec![(0, Rat::one())]),
        ],
    )
    .expect("sl2 model is a Lie algebra")
}

pub fn heisenberg_algebra(n: usize) -> LieAlgebra {
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
    LieAlgebra::from_brackets(labels, &brackets).expect("Heisenberg algebra is valid")
}

pub fn gn_algebra(n: usize) -> LieAlgebra {
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
    LieAlgebra::from_brackets(labels, &brackets).expect("G_n is a Lie algebra")
}

/// omega on G_n: `omega(a, z) = 1`, `omega(x_i, y_i) = 1`, `W perp (A + B)`,
/// with the standard block form on W.
pub fn gn_omega(n: usize) -> BilinearForm {
    let dim = 2 * n + 2;
    let mut entries = vec![(0, dim - 1, Rat::one())];
    for i in 0..n {
        entries.push((1 + 2 * i, 2 + 2 * i, Rat::one()));
    }
    skew_gram(dim, &entries)
}

// ---- Entries ----

fn abelian_torus(params: &BTreeMap<String, i64>) -> Result<CatalogEntry, CatalogError> {
    let p = param(params, "p", "abelian-torus")?;
    let q = param(params, "q", "abelian-torus")?;
    if p < 0 || q < 0 || p + q == 0 || 2 * (p + q) > 12 {
        return Err(CatalogError::BadParameters {
            name: "abelian-torus".into(),
            reason: "need p, q >= 0 with 0 < 2(p+q) <= 12".into(),
        });
    }
    let dim = 2 * (p + q) as usize;
    let algebra = LieAlgebra::abelian(dim);
    let mut gram = Mat::zeros(dim, dim);
    for i in 0..dim {
        let sign = if i < 2 * p as usize { 1 } else { -1 };
        *gram.at_mut(i, i) = Rat::int(sign);
    }
    let metric = BilinearForm::symmetric(gram).expect("diagonal gram is symmetric");
    let h = HStructure::new(JStructure::standard(dim), metric.clone())
        .expect("standard J preserves the block-diagonal metric");
    let mut forms = BTreeMap::new();
    forms.insert("metric".to_string(), metric);
    forms.insert("omega".to_string(), h.fundamental.clone());
    let expected = vec![
        ExpectedVerdict {
            expectation: Expectation::FormVerdict {
                form: "metric".into(),
                invariant: true,
                nil_invariant: true,
                quasi_invariant: true,
            },
            provenance: Provenance::Trivial,
        },
        ExpectedVerdict {
            expectation: Expectation::FormVerdict {
                form: "omega".into(),
                invariant: true,
                nil_invariant: true,
                quasi_invariant: true,
            },
            provenance: Provenance::Trivial,
        },
        ExpectedVerdict {
            expectation: Expectation::FormNondegenerate {
                form: "metric".into(),
                expected: true,
            },
            provenance: Provenance::Trivial,
        },
        ExpectedVerdict {
            expectation: Expectation::AlmostHAlgebra {
                almost: true,
                integrable: true,
            },
            provenance: Provenance::Trivial,
        },
        ExpectedVerdict {
            expectation: Expectation::NilradicalDim(dim),
            provenance: Provenance::Trivial,
        },
    ];
    Ok(CatalogEntry {
        name: "abelian-torus".into(),
        parameters: params.clone(),
        algebra,
        forms,
        h_structure: Some(h),
        levi: None,
        expected,
    })
}

fn two_dim_solvable() -> CatalogEntry {
    let algebra = LieAlgebra::from_brackets(
        vec!["x".into(), "y".into()],
        &[(0, 1, vec![(1, Rat::one())])],
    )
    .expect("[x,y] = y is a Lie algebra");
    let omega = skew_gram(2, &[(0, 1, Rat::one())]);
    let mut forms = BTreeMap::new();
    forms.insert("omega".to_string(), omega);
    let expected = vec![
        ExpectedVerdict {
            expectation: Expectation::FormVerdict {
                form: "omega".into(),
                invariant: false,
                nil_invariant: true,
                quasi_invariant: false,
            },
            provenance: Provenance::Paper,
        },
        ExpectedVerdict {
            expectation: Expectation::FormNondegenerate {
                form: "omega".into(),
                expected: true,
            },
            provenance: Provenance::Trivial,
        },
        ExpectedVerdict {
            expectation: Expectation::FormClosed {
                form: "omega".into(),
                expected: true,
            },
            provenance: Provenance::Derived,
        },
        ExpectedVerdict {
            expectation: Expectation::FormEffective {
                form: "omega".into(),
                expected: true,
            },
            provenance: Provenance::Trivial,
        },
        ExpectedVerdict {
            expectation: Expectation::NilradicalDim(1),
            provenance: Provenance::Derived,
        },
    ];
    CatalogEntry {
        name: "two-dim-solvable".into(),
        parameters: BTreeMap::new(),
        algebra,
        forms,
        h_structure: None,
        levi: None,
        expected,
    }
}

fn heisenberg_entry(params: &BTreeMap<String, i64>) -> Result<CatalogEntry, CatalogError> {
    let n = param(params, "n", "heisenberg")?;
    if n < 1 || 2 * n + 1 > 12 {
        return Err(CatalogError::BadParameters {
            name: "heisenberg".into(),
            reason: "need 1 <= n with 2n+1 <= 12".into(),
        });
    }
    let algebra = heisenberg_algebra(n as usize);
    let dim = algebra.dim();
    Ok(CatalogEntry {
        name: "heisenberg".into(),
        parameters: params.clone(),
        algebra,
        forms: BTreeMap::new(),
        h_structure: None,
        levi: None,
        expected: vec![ExpectedVerdict {
            expectation: Expectation::NilradicalDim(dim),
            provenance: Provenance::Trivial,
        }],
    })
}

fn gn_entry(params: &BTreeMap<String, i64>) -> Result<CatalogEntry, CatalogError> {
    let n = param(params, "n", "Gn")?;
    if n < 1 || 2 * n + 2 > 12 {
        return Err(CatalogError::BadParameters {
            name: "Gn".into(),
            reason: "need 1 <= n with 2n+2 <= 12".into(),
        });
    }
    let n = n as usize;
    let algebra = gn_algebra(n);
    let omega = gn_omega(n);
    let mut forms = BTreeMap::new();
    forms.insert("omega".to_string(), omega);
    let expected = vec![
        ExpectedVerdict {
            expectation: Expectation::FormVerdict {
                form: "omega".into(),
                invariant: false,
                nil_invariant: true,
                quasi_invariant: false,
            },
            provenance: Provenance::Paper,
        },
        ExpectedVerdict {
            expectation: Expectation::FormNondegenerate {
                form: "omega".into(),
                expected: true,
            },
            provenance: Provenance::Paper,
        },
        ExpectedVerdict {
            expectation: Expectation::FormClosed {
                form: "omega".into(),
                expected: false,
            },
            provenance: Provenance::Derived,
        },
        ExpectedVerdict {
            expectation: Expectation::FormEffective {
                form: "omega".into(),
                expected: true,
            },
            provenance: Provenance::Derived,
        },
        ExpectedVerdict {
            expectation: Expectation::NilradicalDim(2 * n + 1),
            provenance: Provenance::Paper,
        },
        ExpectedVerdict {
            expectation: Expectation::QuotientCompactType(None),
            provenance: Provenance::Trivial,
        },
    ];
    Ok(CatalogEntry {
        name: "Gn".into(),
        parameters: params.clone(),
        algebra,
        forms,
        h_structure: None,
        levi: None,
        expected,
    })
}

fn su2_entry() -> CatalogEntry {
    let algebra = su2_algebra();
    let killing = BilinearForm::symmetric(algebra.killing_form()).expect("Killing is symmetric");
    let levi = LeviData::new(&algebra, Subspace::full(3), Subspace::zero(3), vec![])
        .expect("su2 is compact type");
    let mut forms = BTreeMap::new();
    forms.insert("killing".to_string(), killing);
    CatalogEntry {
        name: "su2".into(),
        parameters: BTreeMap::new(),
        algebra,
        forms,
        h_structure: None,
        levi: Some(levi),
        expected: vec![
            ExpectedVerdict {
                expectation: Expectation::FormVerdict {
                    form: "killing".into(),
                    invariant: true,
                    nil_invariant: true,
                    quasi_invariant: true,
                },
                provenance: Provenance::Trivial,
            },
            ExpectedVerdict {
                expectation: Expectation::QuotientCompactType(Some(true)),
                provenance: Provenance::Derived,
            },
            ExpectedVerdict {
                expectation: Expectation::NilradicalDim(0),
                provenance: Provenance::Trivial,
            },
        ],
    }
}

fn sl2_entry() -> CatalogEntry {
    let algebra = sl2_algebra();
    let killing = BilinearForm::symmetric(algebra.killing_form()).expect("Killing is symmetric");
    let levi = LeviData::new(
        &algebra,
        Subspace::zero(3),
        Subspace::full(3),
        vec![std_basis_vec(3, 1), std_basis_vec(3, 2)],
    )
    .expect("sl2 with nilpotents e, f");
    let mut forms = BTreeMap::new();
    forms.insert("killing".to_string(), killing);
    CatalogEntry {
        name: "sl2".into(),
        parameters: BTreeMap::new(),
        algebra,
        forms,
        h_structure: None,
        levi: Some(levi),
        expected: vec![
            ExpectedVerdict {
                expectation: Expectation::FormVerdict {
                    form: "killing".into(),
                    invariant: true,
                    nil_invariant: true,
                    quasi_invariant: true,
                },
                provenance: Provenance::Trivial,
            },
            ExpectedVerdict {
                expectation: Expectation::QuotientCompactType(Some(false)),
                provenance: Provenance::Derived,
            },
        ],
    }
}

/// su2 x R^d with the coadjoint-orbit form on su2 and the standard symplectic
/// form on R^d, plus the pseudo-Kaehler-type h-structure.
fn su2_times_abelian(params: &BTreeMap<String, i64>) -> Result<CatalogEntry, CatalogError> {
    let d = param(params, "d", "su2-times-abelian")?;
    if d < 0 || d % 2 != 0 || 3 + d > 12 {
        return Err(CatalogError::BadParameters {
            name: "su2-times-abelian".into(),
            reason: "need even d >= 0 with 3 + d <= 12".into(),
        });
    }
    let d = d as usize;
    let algebra = su2_algebra().direct_sum(&LieAlgebra::abelian(d));
    let dim = 3 + d;
    // omega: lambda([.,.]) with lambda = kappa(e3, .) on su2, dx ^ dy on R^d.
    let mut omega_entries = vec![(0, 1, Rat::int(-2))];
    for i in 0..d / 2 {
        omega_entries.push((3 + 2 * i, 4 + 2 * i, Rat::one()));
    }
    let omega = skew_gram(dim, &omega_entries);
    // Metric <u, v> = omega(-Ju, v): diag(-2, -2, 0, 1, ..., 1).
    let mut metric_entries = vec![(0, 0, Rat::int(-2)), (1, 1, Rat::int(-2))];
    for i in 0..d {
        metric_entries.push((3 + i, 3 + i, Rat::one()));
    }
    let metric = sym_gram(dim, &metric_entries);
    // J: e1 -> e2 on the su2 plane, standard on R^d, ker J = span{e3}.
    let mut jm = Mat::zeros(dim, dim);
    *jm.at_mut(1, 0) = Rat::one();
    *jm.at_mut(0, 1) = Rat::int(-1);
    for i in 0..d / 2 {
        *jm.at_mut(4 + 2 * i, 3 + 2 * i) = Rat::one();
        *jm.at_mut(3 + 2 * i, 4 + 2 * i) = Rat::int(-1);
    }
    let j = JStructure::new(jm).expect("J^2 = -1 off the kernel");
    let h = HStructure::new(j, metric.clone()).expect("metric is J-invariant");
    debug_assert_eq!(h.fundamental, omega);
    let levi = LeviData::new(
        &algebra,
        Subspace::from_vectors(
            dim,
            &[
                std_basis_vec(dim, 0),
                std_basis_vec(dim, 1),
                std_basis_vec(dim, 2),
            ],
        ),
        Subspace::zero(dim),
        vec![],
    )
    .expect("su2 factor is compact type");
    let mut forms = BTreeMap::new();
    forms.insert("omega".to_string(), omega);
    forms.insert("metric".to_string(), metric);
    let expected = vec![
        ExpectedVerdict {
            expectation: Expectation::FormVerdict {
                form: "omega".into(),
                invariant: false,
                nil_invariant: true,
                quasi_invariant: true,
            },
            provenance: Provenance::Derived,
        },
        ExpectedVerdict {
            expectation: Expectation::FormClosed {
                form: "omega".into(),
                expected: true,
            },
            provenance: Provenance::Derived,
        },
        ExpectedVerdict {
            expectation: Expectation::FormEffective {
                form: "omega".into(),
                expected: true,
            },
            provenance: Provenance::Derived,
        },
        ExpectedVerdict {
            expectation: Expectation::AlmostHAlgebra {
                almost: true,
                integrable: true,
            },
            provenance: Provenance::Derived,
        },
        ExpectedVerdict {
            expectation: Expectation::NilradicalDim(d),
            provenance: Provenance::Trivial,
        },
        ExpectedVerdict {
            expectation: Expectation::QuotientCompactType(Some(true)),
            provenance: Provenance::Derived,
        },
    ];
    Ok(CatalogEntry {
        name: "su2-times-abelian".into(),
        parameters: params.clone(),
        algebra,
        forms,
        h_structure: Some(h),
        levi: Some(levi),
        expected,
    })
}

/// Two compact factors with coadjoint-orbit forms; exercises the mutual
/// orthogonality of simple ideals.
fn su2_times_su2() -> CatalogEntry {
    let algebra = su2_algebra().direct_sum(&su2_algebra());
    let dim = 6;
    let omega = skew_gram(dim, &[(0, 1, Rat::int(-2)), (3, 4, Rat::int(-2))]);
    let metric = sym_gram(
        dim,
        &[
            (0, 0, Rat::int(-2)),
            (1, 1, Rat::int(-2)),
            (3, 3, Rat::int(-2)),
            (4, 4, Rat::int(-2)),
        ],
    );
    let mut jm = Mat::zeros(dim, dim);
    *jm.at_mut(1, 0) = Rat::one();
    *jm.at_mut(0, 1) = Rat::int(-1);
    *jm.at_mut(4, 3) = Rat::one();
    *jm.at_mut(3, 4) = Rat::int(-1);
    let j = JStructure::new(jm).expect("J^2 = -1 off the kernel");
    let h = HStructure::new(j, metric.clone()).expect("metric is J-invariant");
    let levi = LeviData::new(&algebra, Subspace::full(dim), Subspace::zero(dim), vec![])
        .expect("su2 x su2 is compact type");
    let mut forms = BTreeMap::new();
    forms.insert("omega".to_string(), omega);
    forms.insert("metric".to_string(), metric);
    CatalogEntry {
        name: "su2-times-su2".into(),
        parameters: BTreeMap::new(),
        algebra,
        forms,
        h_structure: Some(h),
        levi: Some(levi),
        expected: vec![
            ExpectedVerdict {
                expectation: Expectation::FormClosed {
                    form: "omega".into(),
                    expected: true,
                },
                provenance: Provenance::Derived,
            },
            ExpectedVerdict {
                expectation: Expectation::QuotientCompactType(Some(true)),
                provenance: Provenance::Derived,
            },
        ],
    }
}

/// The non-splitting example: su2 x R^2 where the metric dually pairs the
/// complement W of H = span{e3} with R^2, while omega splits.
fn dual_pairing(params: &BTreeMap<String, i64>) -> Result<CatalogEntry, CatalogError> {
    let d = param(params, "d", "dual-pairing")?;
    if d != 2 {
        return Err(CatalogError::BadParameters {
            name: "dual-pairing".into(),
            reason: "the su2 model fixes d = dim W = 2".into(),
        });
    }
    let algebra = su2_algebra().direct_sum(&LieAlgebra::abelian(2));
    let dim = 5;
    let omega = skew_gram(dim, &[(0, 1, Rat::int(-2)), (3, 4, Rat::one())]);
    // W = span{e1, e2} dually paired with R^2; both blocks are isotropic.
    let metric = sym_gram(dim, &[(0, 3, Rat::one()), (1, 4, Rat::one())]);
    let levi = LeviData::new(
        &algebra,
        Subspace::from_vectors(
            dim,
            &[
                std_basis_vec(dim, 0),
                std_basis_vec(dim, 1),
                std_basis_vec(dim, 2),
            ],
        ),
        Subspace::zero(dim),
        vec![],
    )
    .expect("su2 factor is compact type");
    let mut forms = BTreeMap::new();
    forms.insert("omega".to_string(), omega);
    forms.insert("metric".to_string(), metric);
    let expected = vec![
        ExpectedVerdict {
            expectation: Expectation::FormVerdict {
                form: "metric".into(),
                invariant: false,
                nil_invariant: true,
                quasi_invariant: true,
            },
            provenance: Provenance::Paper,
        },
        ExpectedVerdict {
            expectation: Expectation::FormClosed {
                form: "omega".into(),
                expected: true,
            },
            provenance: Provenance::Derived,
        },
        ExpectedVerdict {
            expectation: Expectation::FormEffective {
                form: "omega".into(),
                expected: true,
            },
            provenance: Provenance::Derived,
        },
        ExpectedVerdict {
            expectation: Expectation::FormEffective {
                form: "metric".into(),
                expected: true,
            },
            provenance: Provenance::Derived,
        },
    ];
    Ok(CatalogEntry {
        name: "dual-pairing".into(),
        parameters: params.clone(),
        algebra,
        forms,
        h_structure: None,
        levi: Some(levi),
        expected,
    })
}

/// Rotation algebra: `a` acts on n planes with distinct integer speeds,
/// abelian nilradical, and the quasi-invariant effective form
/// `omega(a, x_i) = 1`.
fn oscillator(params: &BTreeMap<String, i64>) -> Result<CatalogEntry, CatalogError> {
    let n = param(params, "n", "oscillator")?;
    if n < 1 || 2 * n + 1 > 12 {
        return Err(CatalogError::BadParameters {
            name: "oscillator".into(),
            reason: "need 1 <= n with 2n+1 <= 12".into(),
        });
    }
    let n = n as usize;
    let dim = 2 * n + 1;
    let mut labels: Vec<String> = vec!["a".into()];
    for i in 1..=n {
        labels.push(format!("x{}", i));
        labels.push(format!("y{}", i));
    }
    let mut brackets = Vec::new();
    for i in 0..n {
        let x = 1 + 2 * i;
        let y = 2 + 2 * i;
        let speed = Rat::int(i as i64 + 1);
        brackets.push((0, x, vec![(y, speed.clone())]));
        brackets.push((0, y, vec![(x, -&speed)]));
    }
    let algebra =
        LieAlgebra::from_brackets(labels, &brackets).expect("rotation algebra is a Lie algebra");
    let omega_entries: Vec<(usize, usize, Rat)> =
        (0..n).map(|i| (0, 1 + 2 * i, Rat::one())).collect();
    let omega = skew_gram(dim, &omega_entries);
    let mut forms = BTreeMap::new();
    forms.insert("omega".to_string(), omega);
    let expected = vec![
        ExpectedVerdict {
            expectation: Expectation::FormVerdict {
                form: "omega".into(),
                invariant: false,
                nil_invariant: true,
                quasi_invariant: true,
            },
            provenance: Provenance::Derived,
        },
        ExpectedVerdict {
            expectation: Expectation::FormClosed {
                form: "omega".into(),
                expected: true,
            },
            provenance: Provenance::Derived,
        },
        ExpectedVerdict {
            expectation: Expectation::FormEffective {
                form: "omega".into(),
                expected: true,
            },
            provenance: Provenance::Derived,
        },
        ExpectedVerdict {
            expectation: Expectation::NilradicalDim(2 * n),
            provenance: Provenance::Derived,
        },
    ];
    Ok(CatalogEntry {
        name: "oscillator".into(),
        parameters: params.clone(),
        algebra,
        forms,
        h_structure: None,
        levi: None,
        expected,
    })
}

/// u(2) = su2 x R(c) with the Hopf-type complex structure J e1 = e2,
/// J e3 = c, and the definite invariant metric.
fn u2_hopf() -> CatalogEntry {
    let algebra = su2_algebra().direct_sum(&LieAlgebra::abelian(1));
    let dim = 4;
    let metric = BilinearForm::symmetric(Mat::identity(dim)).expect("identity is symmetric");
    let mut jm = Mat::zeros(dim, dim);
    *jm.at_mut(1, 0) = Rat::one();
    *jm.at_mut(0, 1) = Rat::int(-1);
    *jm.at_mut(3, 2) = Rat::one();
    *jm.at_mut(2, 3) = Rat::int(-1);
    let j = JStructure::new(jm).expect("Hopf J is a complex structure");
    let h = HStructure::new(j, metric.clone()).expect("identity metric is J-invariant");
    let levi = LeviData::new(
        &algebra,
        Subspace::from_vectors(
            dim,
            &[
                std_basis_vec(dim, 0),
                std_basis_vec(dim, 1),
                std_basis_vec(dim, 2),
            ],
        ),
        Subspace::zero(dim),
        vec![],
    )
    .expect("su2 factor is compact type");
    let mut forms = BTreeMap::new();
    forms.insert("metric".to_string(), metric);
    forms.insert("omega".to_string(), h.fundamental.clone());
    CatalogEntry {
        name: "u2-hopf".into(),
        parameters: BTreeMap::new(),
        algebra,
        forms,
        h_structure: Some(h),
        levi: Some(levi),
        expected: vec![
            ExpectedVerdict {
                expectation: Expectation::FormVerdict {
                    form: "metric".into(),
                    invariant: true,
                    nil_invariant: true,
                    quasi_invariant: true,
                },
                provenance: Provenance::Derived,
            },
            ExpectedVerdict {
                expectation: Expectation::AlmostHAlgebra {
                    almost: true,
                    integrable: true,
                },
                provenance: Provenance::Derived,
            },
            ExpectedVerdict {
                expectation: Expectation::NilradicalDim(1),
                provenance: Provenance::Trivial,
            },
            ExpectedVerdict {
                expectation: Expectation::QuotientCompactType(Some(true)),
                provenance: Provenance::Derived,
            },
        ],
    }
}

// ---- Random generators ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraClass {
    Abelian,
    Nilpotent,
    Solvable,
    Mixed,
}

impl AlgebraClass {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraClass::Abelian => "abelian",
            AlgebraClass::Nilpotent => "nilpotent",
            AlgebraClass::Solvable => "solvable",
            AlgebraClass::Mixed => "mixed",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "abelian" => Some(AlgebraClass::Abelian),
            "nilpotent" => Some(AlgebraClass::Nilpotent),
            "solvable" => Some(AlgebraClass::Solvable),
            "mixed" => Some(AlgebraClass::Mixed),
            _ => None,
        }
    }
}

/// A generated instance: the algebra plus the Levi data the construction
/// yields for mixed classes.
#[derive(Debug, Clone)]
pub struct RandomInstance {
    pub algebra: LieAlgebra,
    pub levi: Option<LeviData>,
}

fn small_int(rng: &mut ChaCha20Rng) -> Rat {
    Rat::int(rng.gen_range(-2..=2))
}

fn nonzero_small_int(rng: &mut ChaCha20Rng) -> Rat {
    loop {
        let v = small_int(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Random invertible change of basis as a product of elementary shears with
/// small integer entries; exactly invertible and keeps entries small.
fn random_basis_change(rng: &mut ChaCha20Rng, n: usize) -> Mat {
    let mut p = Mat::identity(n);
    if n < 2 {
        return p;
    }
    let ops = rng.gen_range(1..=n.min(4));
    for _ in 0..ops {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let mut shear = Mat::identity(n);
        *shear.at_mut(i, j) = nonzero_small_int(rng);
        p = &p * &shear;
    }
    p
}

fn apply_basis_change(instance: RandomInstance, p: &Mat) -> RandomInstance {
    let n = instance.algebra.dim();
    let labels = (0..n).map(|i| format!("b{}", i + 1)).collect();
    let algebra = instance.algebra.change_basis(p, labels);
    let p_inv = p.inverse().expect("basis changes are invertible");
    let levi = instance.levi.map(|l| {
        let move_space = |s: &Subspace| -> Subspace {
            Subspace::from_vectors(
                n,
                &s.basis_vectors()
                    .iter()
                    .map(|v| p_inv.apply(v))
                    .collect::<Vec<_>>(),
            )
        };
        LeviData::new(
            &algebra,
            move_space(&l.compact),
            move_space(&l.noncompact),
            l.noncompact_nilpotents
                .iter()
                .map(|v| p_inv.apply(v))
                .collect(),
        )
        .expect("Levi data stays valid under a change of basis")
    });
    RandomInstance { algebra, levi }
}

/// Deterministic random algebra of the requested class. `dim <= 12`.
pub fn random_algebra(
    class: AlgebraClass,
    dim: usize,
    seed: u64,
) -> Result<RandomInstance, CatalogError> {
    if dim > 12 {
        return Err(CatalogError::GenerationFailed(
            "random instances are limited to dim <= 12".into(),
        ));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed.wrapping_mul(0x9e3779b97f4a7c15) ^ dim as u64);
    let raw = match class {
        AlgebraClass::Abelian => RandomInstance {
            algebra: LieAlgebra::abelian(dim),
            levi: None,
        },
        AlgebraClass::Nilpotent => RandomInstance {
            algebra: random_nilpotent(&mut rng, dim),
            levi: None,
        },
        AlgebraClass::Solvable => RandomInstance {
            algebra: random_solvable(&mut rng, dim),
            levi: None,
        },
        AlgebraClass::Mixed => random_mixed(&mut rng, dim)?,
    };
    debug_assert!(raw.algebra.validate().is_ok());
    let p = random_basis_change(&mut rng, dim);
    Ok(apply_basis_change(raw, &p))
}

/// Nilpotent algebras from Jacobi-safe patterns: two-step graded brackets,
/// Heisenberg plus abelian, or the standard filiform string.
fn random_nilpotent(rng: &mut ChaCha20Rng, dim: usize) -> LieAlgebra {
    if dim <= 2 {
        return LieAlgebra::abelian(dim);
    }
    let labels: Vec<String> = (0..dim).map(|i| format!("n{}", i + 1)).collect();
    match rng.gen_range(0..3u8) {
        0 => {
            // Two-step graded: [V1, V1] <= V2 central, arbitrary coefficients.
            let v1 = rng.gen_range(2..=dim - 1);
            let mut brackets = Vec::new();
            for i in 0..v1 {
                for j in i + 1..v1 {
                    let terms: Vec<(usize, Rat)> = (v1..dim)
                        .filter_map(|k| {
                            let c = small_int(rng);
                            if c.is_zero() {
                                None
                            } else {
                                Some((k, c))
                            }
                        })
                        .collect();
                    if !terms.is_empty() {
                        brackets.push((i, j, terms));
                    }
                }
            }
            LieAlgebra::from_brackets(labels, &brackets)
                .expect("two-step graded brackets satisfy Jacobi")
        }
        1 => {
            // Heisenberg factor plus an abelian complement.
            let pairs = (dim - 1) / 2;
            let use_pairs = rng.gen_range(1..=pairs);
            let z = 2 * use_pairs;
            let brackets: Vec<(usize, usize, Vec<(usize, Rat)>)> = (0..use_pairs)
                .map(|i| (2 * i, 2 * i + 1, vec![(z, nonzero_small_int(rng))]))
                .collect();
            LieAlgebra::from_brackets(labels, &brackets).expect("Heisenberg pattern is valid")
        }
        _ => {
            // Filiform string [n1, n_i] = n_{i+1}.
            let brackets: Vec<(usize, usize, Vec<(usize, Rat)>)> = (1..dim - 1)
                .map(|i| (0, i, vec![(i + 1, nonzero_small_int(rng))]))
                .collect();
            LieAlgebra::from_brackets(labels, &brackets).expect("filiform string is valid")
        }
    }
}

/// Solvable algebras: an abelian or Heisenberg nilpotent part acted on by one
/// or two commuting semisimple derivations built from per-plane scalings and
/// rotations.
fn random_solvable(rng: &mut ChaCha20Rng, dim: usize) -> LieAlgebra {
    if dim <= 1 {
        return LieAlgebra::abelian(dim);
    }
    let derivations = if dim >= 5 && rng.gen_bool(0.3) { 2 } else { 1 };
    let nil_dim = dim - derivations;
    let labels: Vec<String> = (0..derivations)
        .map(|i| format!("a{}", i + 1))
        .chain((0..nil_dim).map(|i| format!("n{}", i + 1)))
        .collect();
    let heisenberg = nil_dim >= 3 && nil_dim % 2 == 1 && rng.gen_bool(0.5);
    let mut brackets: Vec<(usize, usize, Vec<(usize, Rat)>)> = Vec::new();
    let base = derivations;
    // Plane layout over the first 2k nilpotent coordinates; a trailing odd
    // coordinate is the Heisenberg center or an extra scaled line.
    let planes = nil_dim / 2;
    let modes: Vec<bool> = (0..planes).map(|_| rng.gen_bool(0.5)).collect(); // true = rotation
    if heisenberg {
        let z = base + nil_dim - 1;
        for p in 0..planes {
            brackets.push((base + 2 * p, base + 2 * p + 1, vec![(z, Rat::one())]));
        }
        let any_rotation = modes.iter().any(|&m| m);
        for a in 0..derivations {
            // On Heisenberg the derivation must scale z by the common pair sum;
            // rotations force that sum to zero.
            let mu = if any_rotation { Rat::zero() } else { Rat::int(rng.gen_range(1..=2)) };
            for p in 0..planes {
                let x = base + 2 * p;
                let y = base + 2 * p + 1;
                if modes[p] {
                    let speed = nonzero_small_int(rng);
                    brackets.push((a, x, vec![(y, speed.clone())]));
                    brackets.push((a, y, vec![(x, -&speed)]));
                } else {
                    let lx = small_int(rng);
                    let ly = &mu - &lx;
                    if !lx.is_zero() {
                        brackets.push((a, x, vec![(x, lx)]));
                    }
                    if !ly.is_zero() {
                        brackets.push((a, y, vec![(y, ly)]));
                    }
                }
            }
            if !mu.is_zero() {
                brackets.push((a, z, vec![(z, mu)]));
            }
        }
    } else {
        // Abelian nilpotent part.
        for a in 0..derivations {
            for p in 0..planes {
                let x = base + 2 * p;
                let y = base + 2 * p + 1;
                if modes[p] {
                    let speed = nonzero_small_int(rng);
                    brackets.push((a, x, vec![(y, speed.clone())]));
                    brackets.push((a, y, vec![(x, -&speed)]));
                } else {
                    let lx = small_int(rng);
                    let ly = small_int(rng);
                    if !lx.is_zero() {
                        brackets.push((a, x, vec![(x, lx)]));
                    }
                    if !ly.is_zero() {
                        brackets.push((a, y, vec![(y, ly)]));
                    }
                }
            }
            if nil_dim % 2 == 1 {
                let last = base + nil_dim - 1;
                let c = small_int(rng);
                if !c.is_zero() {
                    brackets.push((a, last, vec![(last, c)]));
                }
            }
        }
    }
    LieAlgebra::from_brackets(labels, &brackets)
        .expect("commuting semisimple derivations keep Jacobi")
}

/// Mixed instances: a compact or split simple factor times a random solvable
/// algebra, with the Levi data declared by construction.
fn random_mixed(rng: &mut ChaCha20Rng, dim: usize) -> Result<RandomInstance, CatalogError> {
    if dim < 3 {
        return Err(CatalogError::GenerationFailed(
            "mixed instances need dim >= 3".into(),
        ));
    }
    let use_sl2 = rng.gen_bool(0.5);
    let simple = if use_sl2 { sl2_algebra() } else { su2_algebra() };
    let rest = dim - 3;
    let tail_class = if rest == 0 {
        None
    } else {
        Some(match rng.gen_range(0..3u8) {
            0 => AlgebraClass::Abelian,
            1 => AlgebraClass::Nilpotent,
            _ => AlgebraClass::Solvable,
        })
    };
    let tail = match tail_class {
        None => LieAlgebra::abelian(0),
        Some(AlgebraClass::Abelian) => LieAlgebra::abelian(rest),
        Some(AlgebraClass::Nilpotent) => random_nilpotent(rng, rest),
        Some(AlgebraClass::Solvable) => random_solvable(rng, rest),
        Some(AlgebraClass::Mixed) => unreachable!(),
    };
    let algebra = simple.direct_sum(&tail);
    let simple_part = Subspace::from_vectors(
        dim,
        &[
            std_basis_vec(dim, 0),
            std_basis_vec(dim, 1),
            std_basis_vec(dim, 2),
        ],
    );
    let levi = if use_sl2 {
        LeviData::new(
            &algebra,
            Subspace::zero(dim),
            simple_part,
            vec![std_basis_vec(dim, 1), std_basis_vec(dim, 2)],
        )
    } else {
        LeviData::new(&algebra, simple_part, Subspace::zero(dim), vec![])
    }
    .expect("declared factors are valid by construction");
    Ok(RandomInstance {
        algebra,
        levi: Some(levi),
    })
}

/// Deterministic random form; nondegeneracy enforced by resampling. Requests
/// for a nondegenerate skew form in odd dimension fail immediately.
pub fn random_form(
    algebra: &LieAlgebra,
    kind: FormKind,
    seed: u64,
    nondegenerate: bool,
) -> Result<BilinearForm, CatalogError> {
    let n = algebra.dim();
    if nondegenerate && kind == FormKind::Skew && n % 2 == 1 {
        return Err(CatalogError::GenerationFailed(
            "odd-dimensional skew forms are always degenerate".into(),
        ));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed.wrapping_mul(0x2545f4914f6cdd1d) ^ n as u64);
    for _ in 0..64 {
        let mut gram = Mat::zeros(n, n);
        match kind {
            FormKind::Symmetric => {
                for i in 0..n {
                    for j in i..n {
                        let v = small_int(&mut rng);
                        *gram.at_mut(i, j) = v.clone();
                        *gram.at_mut(j, i) = v;
                    }
                }
            }
            FormKind::Skew => {
                for i in 0..n {
                    for j in i + 1..n {
                        let v = small_int(&mut rng);
                        *gram.at_mut(i, j) = v.clone();
                        *gram.at_mut(j, i) = -&v;
                    }
                }
            }
        }
        let form = BilinearForm::new(gram, kind).expect("construction matches the kind");
        if !nondegenerate || form.is_nondegenerate() {
            return Ok(form);
        }
    }
    Err(CatalogError::GenerationFailed(
        "no nondegenerate form found within the retry budget".into(),
    ))
}

/// The deterministic sweep corpus: `count` instances cycling through the four
/// classes and dimensions `1..=max_dim`.
pub fn corpus(count: usize, max_dim: usize, base_seed: u64) -> Vec<(String, RandomInstance)> {
    let classes = [
        AlgebraClass::Abelian,
        AlgebraClass::Nilpotent,
        AlgebraClass::Solvable,
        AlgebraClass::Mixed,
    ];
    let mut out = Vec::with_capacity(count);
    let mut k = 0usize;
    while out.len() < count {
        let class = classes[k % classes.len()];
        let dim = 1 + (k / classes.len()) % max_dim;
        let seed = base_seed.wrapping_add(k as u64);
        k += 1;
        let min_dim = match class {
            AlgebraClass::Mixed => 3,
            _ => 1,
        };
        if dim < min_dim {
            continue;
        }
        match random_algebra(class, dim, seed) {
            Ok(inst) => out.push((format!("{}-d{}-s{}", class.name(), dim, seed), inst)),
            Err(_) => continue,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{form_kernel, is_closed, is_effective, validate_homogeneous_model, HAlgebraModel};
    use crate::invariance::invariance_verdict;

    fn params(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    /// Reproduce every expected verdict of an entry; this is the catalog
    /// regression gate.
    pub fn check_entry(entry: &CatalogEntry) -> Result<(), String> {
        for ev in &entry.expected {
            match &ev.expectation {
                Expectation::FormVerdict {
                    form,
                    invariant,
                    nil_invariant,
                    quasi_invariant,
                } => {
                    let f = entry
                        .forms
                        .get(form)
                        .ok_or_else(|| format!("missing form {}", form))?;
                    let v = invariance_verdict(&entry.algebra, f, entry.levi.as_ref())
                        .map_err(|e| e.to_string())?;
                    if v.invariant != *invariant
                        || v.nil_invariant != *nil_invariant
                        || v.quasi_invariant != *quasi_invariant
                    {
                        return Err(format!(
                            "{}[{}]: got (inv {}, nil {}, quasi {}), expected ({}, {}, {})",
                            entry.name,
                            form,
                            v.invariant,
                            v.nil_invariant,
                            v.quasi_invariant,
                            invariant,
                            nil_invariant,
                            quasi_invariant
                        ));
                    }
                }
                Expectation::FormNondegenerate { form, expected } => {
                    let f = entry.forms.get(form).ok_or("missing form")?;
                    if f.is_nondegenerate() != *expected {
                        return Err(format!("{}[{}]: nondegeneracy mismatch", entry.name, form));
                    }
                }
                Expectation::FormClosed { form, expected } => {
                    let f = entry.forms.get(form).ok_or("missing form")?;
                    if is_closed(&entry.algebra, f) != *expected {
                        return Err(format!("{}[{}]: closedness mismatch", entry.name, form));
                    }
                }
                Expectation::FormEffective { form, expected } => {
                    let f = entry.forms.get(form).ok_or("missing form")?;
                    if is_effective(&entry.algebra, f) != *expected {
                        return Err(format!("{}[{}]: effectiveness mismatch", entry.name, form));
                    }
                }
                Expectation::NilradicalDim(d) => {
                    let got = entry.algebra.profile().nilradical.dim();
                    if got != *d {
                        return Err(format!(
                            "{}: nilradical dim {} != expected {}",
                            entry.name, got, d
                        ));
                    }
                }
                Expectation::QuotientCompactType(expected) => {
                    let rad = entry.algebra.profile().solvable_radical.clone();
                    let (q, _) = entry.algebra.quotient(&rad);
                    let got = if q.dim() == 0 {
                        None
                    } else {
                        Some(q.is_compact_type().map_err(|e| e.to_string())?)
                    };
                    if got != *expected {
                        return Err(format!(
                            "{}: quotient compact type {:?} != expected {:?}",
                            entry.name, got, expected
                        ));
                    }
                }
                Expectation::AlmostHAlgebra { almost, integrable } => {
                    let h = entry
                        .h_structure
                        .clone()
                        .ok_or("expected an h-structure on the entry")?;
                    let model = HAlgebraModel::new(&entry.algebra, h);
                    let report = validate_homogeneous_model(&entry.algebra, &model);
                    if report.almost_h_algebra != *almost || report.integrable != *integrable {
                        return Err(format!(
                            "{}: h-model flags ({}, {}) != expected ({}, {})",
                            entry.name,
                            report.almost_h_algebra,
                            report.integrable,
                            almost,
                            integrable
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Every entry with smallest sensible parameters.
    pub fn default_entries() -> Vec<CatalogEntry> {
        vec![
            get("abelian-torus", &params(&[("p", 1), ("q", 1)])).unwrap(),
            get("two-dim-solvable", &BTreeMap::new()).unwrap(),
            get("heisenberg", &params(&[("n", 1)])).unwrap(),
            get("heisenberg", &params(&[("n", 2)])).unwrap(),
            get("Gn", &params(&[("n", 1)])).unwrap(),
            get("Gn", &params(&[("n", 2)])).unwrap(),
            get("su2", &BTreeMap::new()).unwrap(),
            get("sl2", &BTreeMap::new()).unwrap(),
            get("su2-times-abelian", &params(&[("d", 2)])).unwrap(),
            get("su2-times-su2", &BTreeMap::new()).unwrap(),
            get("dual-pairing", &params(&[("d", 2)])).unwrap(),
            get("oscillator", &params(&[("n", 1)])).unwrap(),
            get("oscillator", &params(&[("n", 2)])).unwrap(),
            get("u2-hopf", &BTreeMap::new()).unwrap(),
        ]
    }

    #[test]
    fn all_catalog_expectations_reproduce() {
        for entry in default_entries() {
            check_entry(&entry).unwrap();
        }
    }

    #[test]
    fn unknown_entry_and_bad_parameters() {
        assert!(matches!(
            get("no-such-thing", &BTreeMap::new()),
            Err(CatalogError::UnknownEntry(_))
        ));
        assert!(matches!(
            get("Gn", &BTreeMap::new()),
            Err(CatalogError::BadParameters { .. })
        ));
        assert!(matches!(
            get("Gn", &params(&[("n", 0)])),
            Err(CatalogError::BadParameters { .. })
        ));
    }

    #[test]
    fn gn1_shape() {
        let e = get("Gn", &params(&[("n", 1)])).unwrap();
        assert_eq!(e.algebra.dim(), 4);
        assert!(e.forms["omega"].is_nondegenerate());
    }

    #[test]
    fn torus_shape() {
        let e = get("abelian-torus", &params(&[("p", 1), ("q", 1)])).unwrap();
        assert_eq!(e.algebra.dim(), 4);
        let (pos, neg, zero) = crate::mat::symmetric_signature(e.forms["metric"].gram());
        assert_eq!((pos, neg, zero), (2, 2, 0));
    }

    #[test]
    fn random_algebras_validate_and_classify() {
        for seed in 0..12 {
            let a = random_algebra(AlgebraClass::Abelian, 4, seed).unwrap();
            assert!(a.algebra.derived_subalgebra().is_zero());
            let n = random_algebra(AlgebraClass::Nilpotent, 5, seed).unwrap();
            assert!(n.algebra.validate().is_ok());
            assert!(n.algebra.is_nilpotent());
            let s = random_algebra(AlgebraClass::Solvable, 5, seed).unwrap();
            assert!(s.algebra.validate().is_ok());
            assert!(s.algebra.is_solvable());
            let m = random_algebra(AlgebraClass::Mixed, 6, seed).unwrap();
            assert!(m.algebra.validate().is_ok());
            assert!(m.levi.is_some());
            assert!(!m.algebra.is_solvable());
        }
    }

    #[test]
    fn nilpotent_dim3_is_heisenberg_or_abelian() {
        for seed in 0..30 {
            let inst = random_algebra(AlgebraClass::Nilpotent, 3, seed).unwrap();
            let derived = inst.algebra.derived_subalgebra();
            // dim-3 nilpotent algebras: abelian (derived 0) or H_1 (derived 1,
            // central).
            match derived.dim() {
                0 => {}
                1 => {
                    assert!(inst.algebra.center().contains(&derived));
                    assert_eq!(inst.algebra.nilpotency_class(), Some(2));
                }
                d => panic!("impossible derived dimension {} in dim 3 nilpotent", d),
            }
        }
    }

    #[test]
    fn solvable_dim2_classification() {
        // Up to basis change: abelian or [x,y] = y.
        for seed in 0..20 {
            let inst = random_algebra(AlgebraClass::Solvable, 2, seed).unwrap();
            let d = inst.algebra.derived_subalgebra().dim();
            assert!(d <= 1);
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let a = random_algebra(AlgebraClass::Solvable, 6, 42).unwrap();
        let b = random_algebra(AlgebraClass::Solvable, 6, 42).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                for k in 0..6 {
                    assert_eq!(
                        a.algebra.structure_constant(i, j, k),
                        b.algebra.structure_constant(i, j, k)
                    );
                }
            }
        }
        let f1 = random_form(&a.algebra, FormKind::Symmetric, 7, false).unwrap();
        let f2 = random_form(&b.algebra, FormKind::Symmetric, 7, false).unwrap();
        assert_eq!(f1.gram(), f2.gram());
    }

    #[test]
    fn random_form_odd_skew_nondegenerate_fails() {
        let h1 = heisenberg_algebra(1);
        match random_form(&h1, FormKind::Skew, 3, true) {
            Err(CatalogError::GenerationFailed(msg)) => {
                assert!(msg.contains("odd-dimensional"))
            }
            other => panic!("expected GenerationFailed, got {:?}", other),
        }
        // Even-dimensional nondegenerate requests succeed.
        let g1 = gn_algebra(1);
        let f = random_form(&g1, FormKind::Skew, 3, true).unwrap();
        assert!(f.is_nondegenerate());
    }

    #[test]
    fn abelian_random_form_kernel_matches_rank() {
        let a = LieAlgebra::abelian(2);
        let f = random_form(&a, FormKind::Skew, 11, true).unwrap();
        assert!(form_kernel(&f).is_zero());
    }

    #[test]
    fn corpus_is_deterministic_and_sized() {
        let c1 = corpus(40, 6, 1000);
        let c2 = corpus(40, 6, 1000);
        assert_eq!(c1.len(), 40);
        for ((n1, i1), (n2, i2)) in c1.iter().zip(&c2) {
            assert_eq!(n1, n2);
            assert_eq!(i1.algebra.dim(), i2.algebra.dim());
        }
    }
}
