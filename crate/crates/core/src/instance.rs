//! JSON interchange for algebras, forms, J-structures, and bundled instances.
//!
//! The algebra format lists only the nonzero brackets and completes them
//! antisymmetrically; rationals travel as strings `"p/q"` (or `"p"`), and all
//! grams are dense row-major string matrices. An instance file bundles one
//! algebra with named forms, an optional h-structure referring to one of the
//! forms by name, and optional declared Levi data given by coordinate vectors.

use crate::forms::{BilinearForm, FormKind, HStructure, JStructure};
use crate::invariance::{InvarianceError, LeviData};
use crate::lie::{AlgebraError, LieAlgebra};
use crate::mat::{Mat, Subspace};
use crate::rat::Rat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;

#[derive(Debug, thiserror::Error)]
pub enum InstanceError {
    #[error("JSON parse error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad rational `{value}` in {context}: {reason}")]
    Rational {
        value: String,
        context: String,
        reason: String,
    },
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("basis has {expected} labels but {context} has {got} entries")]
    DimensionMismatch {
        expected: usize,
        got: usize,
        context: String,
    },
    #[error("bracket of `{0}` with itself must be zero")]
    SelfBracket(String),
    #[error("unknown form kind `{0}` (expected \"symmetric\" or \"skew\")")]
    UnknownKind(String),
    #[error("h-structure refers to unknown form `{0}`")]
    UnknownForm(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("form error: {0}")]
    Form(#[from] crate::forms::FormError),
    #[error(transparent)]
    Levi(#[from] InvarianceError),
}

#[derive(Debug, Serialize, Deserialize)]
struct BracketJson {
    left: String,
    right: String,
    result: BTreeMap<String, String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    basis: Vec<String>,
    #[serde(default)]
    brackets: Vec<BracketJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct FormJson {
    kind: String,
    gram: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JJson {
    matrix: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct HJson {
    j: JJson,
    metric: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct LeviJson {
    #[serde(default)]
    compact: Vec<Vec<String>>,
    #[serde(default)]
    noncompact: Vec<Vec<String>>,
    #[serde(default, rename = "noncompactNilpotents")]
    noncompact_nilpotents: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct InstanceJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    algebra: AlgebraJson,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    forms: BTreeMap<String, FormJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h: Option<HJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    levi: Option<LeviJson>,
}

/// A parsed instance: everything the deciders and verifiers consume.
#[derive(Debug, Clone)]
pub struct InstanceData {
    pub name: Option<String>,
    pub algebra: LieAlgebra,
    pub forms: BTreeMap<String, BilinearForm>,
    pub h: Option<HStructure>,
    pub levi: Option<LeviData>,
}

fn parse_rat(s: &str, context: &str) -> Result<Rat, InstanceError> {
    Rat::from_str(s).map_err(|e| InstanceError::Rational {
        value: s.to_string(),
        context: context.to_string(),
        reason: e.to_string(),
    })
}

fn parse_matrix(rows: &[Vec<String>], n: usize, context: &str) -> Result<Mat, InstanceError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(InstanceError::DimensionMismatch {
            expected: n,
            got: rows.len(),
            context: context.to_string(),
        });
    }
    let mut m = Mat::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            *m.at_mut(i, j) = parse_rat(s, context)?;
        }
    }
    Ok(m)
}

fn parse_vectors(
    rows: &[Vec<String>],
    n: usize,
    context: &str,
) -> Result<Vec<Vec<Rat>>, InstanceError> {
    let mut out = Vec::new();
    for row in rows {
        if row.len() != n {
            return Err(InstanceError::DimensionMismatch {
                expected: n,
                got: row.len(),
                context: context.to_string(),
            });
        }
        let mut v = Vec::with_capacity(n);
        for s in row {
            v.push(parse_rat(s, context)?);
        }
        out.push(v);
    }
    Ok(out)
}

fn matrix_to_strings(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.at(i, j).to_string()).collect())
        .collect()
}

impl InstanceData {
    pub fn from_json_str(s: &str) -> Result<Self, InstanceError> {
        let raw: InstanceJson = serde_json::from_str(s)?;
        Self::from_raw(raw)
    }

    /// Parse a bare algebra file (the `{"dim", "basis", "brackets"}` format)
    /// or a full instance file.
    pub fn from_json_str_lenient(s: &str) -> Result<Self, InstanceError> {
        if let Ok(raw) = serde_json::from_str::<InstanceJson>(s) {
            return Self::from_raw(raw);
        }
        let raw: AlgebraJson = serde_json::from_str(s)?;
        Ok(InstanceData {
            name: None,
            algebra: parse_algebra(raw)?,
            forms: BTreeMap::new(),
            h: None,
            levi: None,
        })
    }

    fn from_raw(raw: InstanceJson) -> Result<Self, InstanceError> {
        let algebra = parse_algebra(raw.algebra)?;
        let n = algebra.dim();
        let mut forms = BTreeMap::new();
        for (name, fj) in &raw.forms {
            let kind = match fj.kind.as_str() {
                "symmetric" => FormKind::Symmetric,
                "skew" => FormKind::Skew,
                other => return Err(InstanceError::UnknownKind(other.to_string())),
            };
            let gram = parse_matrix(&fj.gram, n, &format!("form `{}`", name))?;
            forms.insert(name.clone(), BilinearForm::new(gram, kind)?);
        }
        let h = match &raw.h {
            None => None,
            Some(hj) => {
                let jm = parse_matrix(&hj.j.matrix, n, "J-structure")?;
                let j = JStructure::new(jm)?;
                let metric = forms
                    .get(&hj.metric)
                    .cloned()
                    .ok_or_else(|| InstanceError::UnknownForm(hj.metric.clone()))?;
                Some(HStructure::new(j, metric)?)
            }
        };
        let levi = match &raw.levi {
            None => None,
            Some(lj) => {
                let compact = parse_vectors(&lj.compact, n, "levi.compact")?;
                let noncompact = parse_vectors(&lj.noncompact, n, "levi.noncompact")?;
                let nilpotents =
                    parse_vectors(&lj.noncompact_nilpotents, n, "levi.noncompactNilpotents")?;
                Some(LeviData::new(
                    &algebra,
                    Subspace::from_vectors(n, &compact),
                    Subspace::from_vectors(n, &noncompact),
                    nilpotents,
                )?)
            }
        };
        Ok(InstanceData {
            name: raw.name,
            algebra,
            forms,
            h,
            levi,
        })
    }

    pub fn from_catalog_entry(entry: &crate::catalog::CatalogEntry) -> Self {
        let mut name = entry.name.clone();
        if !entry.parameters.is_empty() {
            let params: Vec<String> = entry
                .parameters
                .iter()
                .map(|(k, v)| format!("{}={}", k, v))
                .collect();
            name = format!("{}({})", name, params.join(","));
        }
        InstanceData {
            name: Some(name),
            algebra: entry.algebra.clone(),
            forms: entry.forms.clone(),
            h: entry.h_structure.clone(),
            levi: entry.levi.clone(),
        }
    }

    /// The distinguished skew form: `omega` by name, else the first skew one.
    pub fn omega(&self) -> Option<&BilinearForm> {
        if let Some(f) = self.forms.get("omega") {
            if f.kind() == FormKind::Skew {
                return Some(f);
            }
        }
        self.forms.values().find(|f| f.kind() == FormKind::Skew)
    }

    /// The distinguished symmetric form: `metric` by name, else the first
    /// symmetric one.
    pub fn metric(&self) -> Option<&BilinearForm> {
        if let Some(f) = self.forms.get("metric") {
            if f.kind() == FormKind::Symmetric {
                return Some(f);
            }
        }
        self.forms
            .values()
            .find(|f| f.kind() == FormKind::Symmetric)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let n = self.algebra.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let w = self.algebra.bracket_basis(i, j);
                let result: BTreeMap<String, String> = w
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (self.algebra.label(k).to_string(), c.to_string()))
                    .collect();
                if !result.is_empty() {
                    brackets.push(BracketJson {
                        left: self.algebra.label(i).to_string(),
                        right: self.algebra.label(j).to_string(),
                        result,
                    });
                }
            }
        }
        let forms: BTreeMap<String, FormJson> = self
            .forms
            .iter()
            .map(|(name, f)| {
                (
                    name.clone(),
                    FormJson {
                        kind: match f.kind() {
                            FormKind::Symmetric => "symmetric".into(),
                            FormKind::Skew => "skew".into(),
                        },
                        gram: matrix_to_strings(f.gram()),
                    },
                )
            })
            .collect();
        let h = self.h.as_ref().map(|h| {
            // Serialize the metric by reference; make sure a form with the
            // same gram exists under some name.
            let metric_name = self
                .forms
                .iter()
                .find(|(_, f)| f.gram() == h.metric.gram())
                .map(|(n, _)| n.clone())
                .unwrap_or_else(|| "metric".to_string());
            HJson {
                j: JJson {
                    matrix: matrix_to_strings(h.j.matrix()),
                },
                metric: metric_name,
            }
        });
        let levi = self.levi.as_ref().map(|l| LeviJson {
            compact: l
                .compact
                .basis_vectors()
                .iter()
                .map(|v| v.iter().map(|c| c.to_string()).collect())
                .collect(),
            noncompact: l
                .noncompact
                .basis_vectors()
                .iter()
                .map(|v| v.iter().map(|c| c.to_string()).collect())
                .collect(),
            noncompact_nilpotents: l
                .noncompact_nilpotents
                .iter()
                .map(|v| v.iter().map(|c| c.to_string()).collect())
                .collect(),
        });
        let raw = InstanceJson {
            name: self.name.clone(),
            algebra: AlgebraJson {
                dim: n,
                basis: self.algebra.labels().to_vec(),
                brackets,
            },
            forms,
            h,
            levi,
        };
        serde_json::to_value(raw).expect("instance serialization cannot fail")
    }
}

fn parse_algebra(raw: AlgebraJson) -> Result<LieAlgebra, InstanceError> {
    if raw.basis.len() != raw.dim {
        return Err(InstanceError::DimensionMismatch {
            expected: raw.dim,
            got: raw.basis.len(),
            context: "basis labels".into(),
        });
    }
    let n = raw.dim;
    let index = |label: &str| -> Result<usize, InstanceError> {
        raw.basis
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| InstanceError::UnknownLabel(label.to_string()))
    };
    let mut c = vec![vec![vec![Rat::zero(); n]; n]; n];
    for b in &raw.brackets {
        let i = index(&b.left)?;
        let j = index(&b.right)?;
        if i == j && b.result.values().any(|v| v != "0") {
            return Err(InstanceError::SelfBracket(b.left.clone()));
        }
        for (label, value) in &b.result {
            let k = index(label)?;
            let v = parse_rat(value, &format!("bracket [{}, {}]", b.left, b.right))?;
            c[i][j][k] = &c[i][j][k] + &v;
            c[j][i][k] = &c[j][i][k] - &v;
        }
    }
    Ok(LieAlgebra::new(raw.basis, c)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const H1_JSON: &str = r#"{
        "algebra": {
            "dim": 3,
            "basis": ["x", "y", "z"],
            "brackets": [ {"left": "x", "right": "y", "result": {"z": "1"}} ]
        },
        "forms": {
            "omega": { "kind": "skew", "gram": [["0","1","0"],["-1","0","0"],["0","0","0"]] }
        }
    }"#;

    #[test]
    fn parse_heisenberg_instance() {
        let inst = InstanceData::from_json_str(H1_JSON).unwrap();
        assert_eq!(inst.algebra.dim(), 3);
        let x = crate::mat::std_basis_vec(3, 0);
        let y = crate::mat::std_basis_vec(3, 1);
        assert_eq!(inst.algebra.bracket(&x, &y), crate::mat::std_basis_vec(3, 2));
        assert!(inst.omega().is_some());
        assert!(inst.metric().is_none());
    }

    #[test]
    fn antisymmetric_completion_is_automatic() {
        let inst = InstanceData::from_json_str(H1_JSON).unwrap();
        let x = crate::mat::std_basis_vec(3, 0);
        let y = crate::mat::std_basis_vec(3, 1);
        let back = inst.algebra.bracket(&y, &x);
        assert_eq!(back[2], Rat::int(-1));
    }

    #[test]
    fn zero_denominator_is_a_parse_error() {
        let bad = H1_JSON.replace("\"z\": \"1\"", "\"z\": \"1/0\"");
        match InstanceData::from_json_str(&bad) {
            Err(InstanceError::Rational { value, .. }) => assert_eq!(value, "1/0"),
            other => panic!("expected rational error, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn antisymmetry_violation_reported() {
        // Malformed tensor via an explicit pair of same-sign brackets is
        // impossible in this format (completion is automatic), but a bracket
        // of a label with itself is caught.
        let bad = r#"{
            "algebra": {
                "dim": 2, "basis": ["x", "y"],
                "brackets": [ {"left": "x", "right": "x", "result": {"y": "1"}} ]
            }
        }"#;
        assert!(matches!(
            InstanceData::from_json_str(bad),
            Err(InstanceError::SelfBracket(_))
        ));
    }

    #[test]
    fn jacobi_violation_reported() {
        let bad = r#"{
            "algebra": {
                "dim": 3, "basis": ["x", "y", "z"],
                "brackets": [
                    {"left": "x", "right": "y", "result": {"z": "1"}},
                    {"left": "x", "right": "z", "result": {"x": "1"}},
                    {"left": "y", "right": "z", "result": {"y": "1"}}
                ]
            }
        }"#;
        assert!(matches!(
            InstanceData::from_json_str(bad),
            Err(InstanceError::Algebra(AlgebraError::JacobiViolation { .. }))
        ));
    }

    #[test]
    fn round_trip_catalog_entry() {
        let entry = crate::catalog::get(
            "su2-times-abelian",
            &[("d".to_string(), 2i64)].into_iter().collect(),
        )
        .unwrap();
        let inst = InstanceData::from_catalog_entry(&entry);
        let json = serde_json::to_string(&inst.to_json()).unwrap();
        let back = InstanceData::from_json_str(&json).unwrap();
        assert_eq!(back.algebra.dim(), inst.algebra.dim());
        for i in 0..inst.algebra.dim() {
            for j in 0..inst.algebra.dim() {
                for k in 0..inst.algebra.dim() {
                    assert_eq!(
                        back.algebra.structure_constant(i, j, k),
                        inst.algebra.structure_constant(i, j, k)
                    );
                }
            }
        }
        assert_eq!(back.forms.len(), inst.forms.len());
        assert!(back.h.is_some());
        assert!(back.levi.is_some());
        // The h-structure fundamental form survives the round trip.
        assert_eq!(
            back.h.as_ref().unwrap().fundamental.gram(),
            inst.h.as_ref().unwrap().fundamental.gram()
        );
    }

    #[test]
    fn lenient_parses_bare_algebra() {
        let bare = r#"{ "dim": 2, "basis": ["x", "y"],
            "brackets": [ {"left": "x", "right": "y", "result": {"y": "1"}} ] }"#;
        let inst = InstanceData::from_json_str_lenient(bare).unwrap();
        assert_eq!(inst.algebra.dim(), 2);
        assert!(inst.forms.is_empty());
    }
}
