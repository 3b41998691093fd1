//! Operator decompositions over the rationals: minimal polynomials,
//! factorization-free Jordan-Chevalley splitting, the imaginary/real-split
//! refinement of the semisimple part, and Fitting decompositions.
//!
//! The Jordan-Chevalley part is computed by Newton iteration in `Q[t]/(p)`
//! against the squarefree part of the minimal polynomial `p`, so no eigenvalue
//! factorization is needed. Factorization into irreducible pieces is only
//! attempted afterwards, on the semisimple part, and rejects irreducible
//! factors of degree greater than two.

use crate::mat::{Mat, Subspace};
use crate::poly::{factor_degle2, FactorOutcome, Poly};
use crate::rat::Rat;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error(
        "eigenvalue field of degree {degree} is not supported (irreducible factor {factor} of the minimal polynomial); only degree <= 2 factors are handled"
    )]
    UnsupportedEigenvalueField { degree: usize, factor: String },
}

/// The four commuting Jordan parts of a square operator.
///
/// `semisimple + nilpotent` reconstructs the input, and
/// `imaginary + real_split` reconstructs the semisimple part. All four are
/// polynomials in the input, so they commute with everything the input
/// commutes with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorDecomposition {
    pub semisimple: Mat,
    pub nilpotent: Mat,
    pub imaginary: Mat,
    pub real_split: Mat,
}

impl OperatorDecomposition {
    pub fn of(m: &Mat) -> Result<Self, LinalgError> {
        let (semisimple, nilpotent) = jordan_chevalley(m);
        let (imaginary, real_split) = split_imaginary_parts(&semisimple)?;
        Ok(OperatorDecomposition {
            semisimple,
            nilpotent,
            imaginary,
            real_split,
        })
    }

    /// Check the defining invariants exactly. Used by tests and sweeps.
    pub fn verify(&self, input: &Mat) -> Result<(), String> {
        let n = input.rows() as u32;
        if &(&self.semisimple + &self.nilpotent) != input {
            return Err("semisimple + nilpotent does not reconstruct the input".into());
        }
        if self.semisimple.commutator(&self.nilpotent) != Mat::zeros(input.rows(), input.cols()) {
            return Err("semisimple and nilpotent parts do not commute".into());
        }
        if !self.nilpotent.pow(n).is_zero() {
            return Err("nilpotent part is not nilpotent".into());
        }
        if &(&self.imaginary + &self.real_split) != &self.semisimple {
            return Err("imaginary + real_split does not reconstruct the semisimple part".into());
        }
        if !self.imaginary.commutator(&self.real_split).is_zero() {
            return Err("imaginary and real_split parts do not commute".into());
        }
        let ps = minimal_polynomial(&self.semisimple);
        if !ps.is_squarefree() {
            return Err("semisimple part has a non-squarefree minimal polynomial".into());
        }
        // real_split: distinct linear or positive-discriminant quadratic factors.
        let pr = minimal_polynomial(&self.real_split);
        match factor_degle2(&pr) {
            FactorOutcome::Split(fs) => {
                for (f, mult) in fs {
                    if mult != 1 {
                        return Err("real_split minimal polynomial is not squarefree".into());
                    }
                    if f.degree() == Some(2) {
                        let p = f.coeff(1);
                        let q = f.coeff(0);
                        let disc = &(&p * &p) - &(&Rat::int(4) * &q);
                        if !disc.is_positive() {
                            return Err(
                                "real_split has a quadratic factor without real roots".into()
                            );
                        }
                    }
                }
            }
            FactorOutcome::IrreducibleResidue(_) => {
                return Err("real_split minimal polynomial does not split into degree <= 2".into())
            }
        }
        // imaginary: factors of shape t or t^2 + c with c > 0.
        let pi = minimal_polynomial(&self.imaginary);
        match factor_degle2(&pi) {
            FactorOutcome::Split(fs) => {
                for (f, _) in fs {
                    match f.degree() {
                        Some(1) => {
                            if !f.coeff(0).is_zero() {
                                return Err("imaginary part has a nonzero real eigenvalue".into());
                            }
                        }
                        Some(2) => {
                            if !f.coeff(1).is_zero() || !f.coeff(0).is_positive() {
                                return Err(
                                    "imaginary part has a factor that is not t^2 + c, c > 0"
                                        .into(),
                                );
                            }
                        }
                        _ => return Err("unexpected factor degree in imaginary part".into()),
                    }
                }
            }
            FactorOutcome::IrreducibleResidue(_) => {
                return Err("imaginary minimal polynomial does not split into degree <= 2".into())
            }
        }
        Ok(())
    }
}

/// Monic minimal polynomial, found as the first linear dependency among the
/// powers of the matrix.
pub fn minimal_polynomial(m: &Mat) -> Poly {
    assert!(m.is_square(), "minimal polynomial needs a square matrix");
    let n = m.rows();
    if n == 0 {
        return Poly::one();
    }
    let mut powers: Vec<Mat> = vec![Mat::identity(n)];
    for k in 1..=n {
        powers.push(&powers[k - 1] * m);
        // Columns are vec(I), vec(m), ..., vec(m^k); a kernel vector is an
        // annihilating polynomial of degree <= k.
        let mut stack = Mat::zeros(n * n, k + 1);
        for (j, p) in powers.iter().enumerate() {
            stack.set_column(j, &p.vectorize());
        }
        let ker = stack.kernel();
        if ker.cols() > 0 {
            let v = ker.column(0);
            // First dependency: the top coefficient cannot vanish, otherwise a
            // shorter dependency existed.
            let lead = v[k].clone();
            debug_assert!(!lead.is_zero());
            let inv = lead.recip();
            return Poly::from_coeffs(v.iter().map(|c| c * &inv).collect());
        }
    }
    unreachable!("Cayley-Hamilton guarantees a dependency by degree n");
}

/// Jordan-Chevalley decomposition `m = semisimple + nilpotent` with commuting
/// parts, the semisimple one a polynomial in `m`.
pub fn jordan_chevalley(m: &Mat) -> (Mat, Mat) {
    assert!(m.is_square());
    let n = m.rows();
    let p = minimal_polynomial(m);
    let g = p.squarefree_part();
    if g == p {
        return (m.clone(), Mat::zeros(n, n));
    }
    let dg = g.derivative();
    // Newton iteration on s in Q[t]/(p): s <- s - g(s)/g'(s). Starting from
    // s = t, each step squares the ideal generated by g(s), so the loop ends
    // after about log2 of the largest multiplicity.
    let mut s = Poly::x().div_rem(&p).1;
    loop {
        let gs = g.compose_mod(&s, &p);
        if gs.is_zero() {
            break;
        }
        let dgs = dg.compose_mod(&s, &p);
        let inv = dgs
            .inverse_mod(&p)
            .expect("g'(s) is invertible modulo p because g is squarefree");
        let step = gs.mul(&inv).div_rem(&p).1;
        s = s.sub(&step).div_rem(&p).1;
    }
    let semisimple = s.eval_matrix(m);
    let nilpotent = m - &semisimple;
    (semisimple, nilpotent)
}

/// Split a semisimple operator into commuting `imaginary + real_split` parts.
///
/// On the primary component of a linear factor `t - c`, real_split acts as
/// `c * id`; on an irreducible quadratic `t^2 + p t + q` with negative
/// discriminant it acts as `-p/2 * id`; with positive discriminant the whole
/// restriction is real-split. Errors if an irreducible factor of the minimal
/// polynomial has degree greater than two.
pub fn split_imaginary_parts(semisimple: &Mat) -> Result<(Mat, Mat), LinalgError> {
    assert!(semisimple.is_square());
    let n = semisimple.rows();
    let p = minimal_polynomial(semisimple);
    assert!(
        p.is_squarefree(),
        "split_imaginary_parts requires a semisimple input"
    );
    let factors = match factor_degle2(&p) {
        FactorOutcome::Split(fs) => fs,
        FactorOutcome::IrreducibleResidue(r) => {
            return Err(LinalgError::UnsupportedEigenvalueField {
                degree: r.degree().unwrap_or(0),
                factor: format!("{:?}", r),
            })
        }
    };
    if n == 0 {
        return Ok((Mat::zeros(0, 0), Mat::zeros(0, 0)));
    }
    // Primary decomposition: component_i = ker f_i(semisimple).
    let mut basis = Mat::zeros(n, 0);
    let mut block_action: Vec<Mat> = Vec::new();
    for (f, mult) in &factors {
        debug_assert_eq!(*mult, 1);
        let comp = f.eval_matrix(semisimple).kernel();
        let k = comp.cols();
        debug_assert!(k > 0);
        let action = match f.degree() {
            Some(1) => {
                let lambda = -f.coeff(0);
                Mat::identity(k).scale(&lambda)
            }
            Some(2) => {
                let pc = f.coeff(1);
                let qc = f.coeff(0);
                let disc = &(&pc * &pc) - &(&Rat::int(4) * &qc);
                if disc.is_negative() {
                    let half_trace = -&pc / Rat::int(2);
                    Mat::identity(k).scale(&half_trace)
                } else {
                    // Positive discriminant: real eigenvalues, the whole
                    // restriction belongs to the real-split part.
                    restriction_matrix(semisimple, &comp)
                }
            }
            _ => unreachable!("factors have degree 1 or 2"),
        };
        basis = basis.hstack(&comp);
        block_action.push(action);
    }
    debug_assert_eq!(basis.cols(), n);
    let mut block = Mat::zeros(n, n);
    let mut offset = 0;
    for action in &block_action {
        for i in 0..action.rows() {
            for j in 0..action.cols() {
                *block.at_mut(offset + i, offset + j) = action.at(i, j).clone();
            }
        }
        offset += action.rows();
    }
    let basis_inv = basis
        .inverse()
        .expect("primary components span the whole space");
    let real_split = &(&basis * &block) * &basis_inv;
    let imaginary = semisimple - &real_split;
    Ok((imaginary, real_split))
}

/// Matrix of `op` restricted to the invariant subspace spanned by the columns
/// of `cols`, in those coordinates.
fn restriction_matrix(op: &Mat, cols: &Mat) -> Mat {
    let k = cols.cols();
    let mut out = Mat::zeros(k, k);
    for j in 0..k {
        let image = op.apply(&cols.column(j));
        let coords = cols
            .solve(&image)
            .expect("subspace is invariant under the operator");
        out.set_column(j, &coords);
    }
    out
}

/// Fitting decomposition: `e0 = ker m^n` and `e1 = im m^n`, complementary and
/// with `m` invertible on `e1`.
pub fn fitting_decomposition(m: &Mat) -> (Subspace, Subspace) {
    assert!(m.is_square());
    let n = m.rows();
    let mn = m.pow(n as u32);
    let e0 = Subspace::from_columns(n, mn.kernel());
    let e1 = mn.column_space();
    (e0, e1)
}
