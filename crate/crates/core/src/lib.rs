//! Exact-arithmetic computational Lie theory.
//!
//! The crate decides invariance, nil-invariance, and quasi-invariance of
//! bilinear forms and h-structures on finite-dimensional Lie algebras given by
//! rational structure constants, and verifies the associated structure
//! theorems (compact-type Levi factors, two-step nilradicals, abelian solvable
//! cases, symplectic and pseudo-Kaehler splitting) on catalog and random
//! instances. Everything is computed over the rationals; no floating point or
//! tolerances appear anywhere.

pub mod rat;
pub mod mat;
pub mod poly;
pub mod decomp;
pub mod lie;
pub mod forms;
pub mod invariance;
pub mod catalog;
pub mod theorems;
pub mod instance;
pub mod sweep;

pub use decomp::{
    fitting_decomposition, jordan_chevalley, minimal_polynomial, split_imaginary_parts,
    LinalgError, OperatorDecomposition,
};
pub use forms::{
    form_kernel, is_closed, is_effective, orthogonal_complement, skew_set, skew_set_by_triples,
    validate_homogeneous_model, BilinearForm, FormKind, HAlgebraModel, HStructure, JStructure,
};
pub use instance::{InstanceData, InstanceError};
pub use invariance::{
    ad_jordan_parts, full_invariance_check, h_structure_invariance, invariance_verdict,
    nil_invariance_check, quasi_invariance_check, GeneratorSet, InvarianceVerdict, LeviData,
    VerdictMode,
};
pub use lie::{AlgebraError, LieAlgebra, StructureProfile};
pub use mat::{Mat, Subspace};
pub use poly::Poly;
pub use rat::Rat;
pub use theorems::{run_verifier, InstanceView, TheoremId, VerifierError, VerifierReport};
