//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest degree first; the zero polynomial is the
//! empty vector and the leading coefficient is otherwise nonzero. Besides
//! arithmetic and gcds this module carries the deliberately restricted
//! factorization used by the eigenstructure splitting: squarefree
//! decomposition, rational-root extraction, and a search for monic quadratic
//! divisors. Irreducible factors of degree greater than two are reported as
//! [`UnsupportedEigenvalueField`](crate::decomp::LinalgError::UnsupportedEigenvalueField)
//! by the callers.

use crate::mat::Mat;
use crate::rat::Rat;
use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};
use std::fmt;

/// A polynomial with rational coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn x() -> Self {
        Poly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `t - root`.
    pub fn linear_root(root: &Rat) -> Self {
        Poly::from_coeffs(vec![-root, Rat::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rat::int(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, Rat::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, Rat::is_one)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.recip();
                Poly::from_coeffs(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().unwrap().recip();
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() * &lead_inv;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            for i in 0..=dd {
                let v = &rem.coeff(shift + i) - &(&divisor.coeff(i) * &factor);
                rem.coeffs[shift + i] = v;
            }
            rem.normalize();
        }
        (Poly::from_coeffs(quot), rem)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_rem(self).1.is_zero()
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * &Rat::int(i as i64 + 1))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, u, v)` monic with `u*self + v*other = g`.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Poly::one(), Poly::zero());
        let (mut v0, mut v1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let nu = u0.sub(&q.mul(&u1));
            let nv = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = nu;
            v0 = v1;
            v1 = nv;
        }
        match r0.leading() {
            None => (Poly::zero(), Poly::zero(), Poly::zero()),
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
            }
        }
    }

    /// Inverse of `self` modulo `modulus`, when the two are coprime.
    pub fn inverse_mod(&self, modulus: &Poly) -> Option<Poly> {
        let (g, u, _) = self.ext_gcd(modulus);
        if g.degree() == Some(0) {
            Some(u.div_rem(modulus).1)
        } else {
            None
        }
    }

    /// The product of the distinct irreducible factors: `self / gcd(self, self')`.
    pub fn squarefree_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Evaluate at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Mat) -> Mat {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = Mat::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Mat::identity(n).scale(c);
        }
        acc
    }

    /// Substitute another polynomial, reducing modulo `modulus` throughout.
    pub fn compose_mod(&self, inner: &Poly, modulus: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
            acc = acc.div_rem(modulus).1;
        }
        acc
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*t", c)?,
                _ => write!(f, "{}*t^{}", c, i)?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Outcome of the degree-restricted factorization.
#[derive(Clone, Debug)]
pub enum FactorOutcome {
    /// Monic irreducible factors of degree at most two, with multiplicities.
    Split(Vec<(Poly, usize)>),
    /// A factor of degree greater than two with no rational root and no
    /// rational quadratic divisor remained.
    IrreducibleResidue(Poly),
}

/// Factor a nonzero polynomial into monic irreducible pieces of degree <= 2.
///
/// Strategy: squarefree (Yun) decomposition, then per squarefree piece
/// exhaustive rational-root extraction followed by a search for monic rational
/// quadratic divisors (candidates interpolated through divisor triples of the
/// integer values at -1, 0, 1, in the style of Kronecker's method).
pub fn factor_degle2(p: &Poly) -> FactorOutcome {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let mut factors: Vec<(Poly, usize)> = Vec::new();
    for (piece, mult) in squarefree_decomposition(&p.monic()) {
        match factor_squarefree_degle2(&piece) {
            Ok(irreds) => {
                for f in irreds {
                    match factors.iter_mut().find(|(g, _)| *g == f) {
                        Some((_, m)) => *m += mult,
                        None => factors.push((f, mult)),
                    }
                }
            }
            Err(residue) => return FactorOutcome::IrreducibleResidue(residue),
        }
    }
    FactorOutcome::Split(factors)
}

/// Yun's algorithm: `p = prod a_i^i` with the `a_i` squarefree and coprime.
/// Returns the nontrivial `(a_i, i)` pairs for monic `p`.
pub fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    let p = p.monic();
    if p.degree() == Some(0) {
        return Vec::new();
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let mut c = dp.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

/// Split a monic squarefree polynomial into irreducible factors of degree <= 2,
/// or return the unsplittable residue.
fn factor_squarefree_degle2(p: &Poly) -> Result<Vec<Poly>, Poly> {
    let mut rest = p.monic();
    let mut out = Vec::new();
    // Exhaust rational roots first.
    for root in rational_roots(&rest) {
        let lin = Poly::linear_root(&root);
        let (q, r) = rest.div_rem(&lin);
        debug_assert!(r.is_zero());
        rest = q;
        out.push(lin);
    }
    loop {
        match rest.degree().unwrap_or(0) {
            0 => return Ok(out),
            2 => {
                out.push(rest.clone());
                return Ok(out);
            }
            deg => {
                debug_assert!(deg != 1, "linear factors were exhausted");
                match find_quadratic_divisor(&rest) {
                    Some(q) => {
                        let (quot, r) = rest.div_rem(&q);
                        debug_assert!(r.is_zero());
                        out.push(q);
                        rest = quot;
                    }
                    None => return Err(rest),
                }
            }
        }
    }
}

/// All rational roots of a polynomial, with multiplicity, by the rational root
/// theorem applied to the primitive integer form.
pub fn rational_roots(p: &Poly) -> Vec<Rat> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let ints = to_integer_coeffs(p);
    // Strip powers of t.
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = vec![Rat::zero(); low];
    let reduced: Vec<BigInt> = ints[low..].to_vec();
    if reduced.len() == 1 {
        return roots;
    }
    let lead = reduced.last().unwrap().abs();
    let constant = reduced.first().unwrap().abs();
    let mut candidates = Vec::new();
    for r in divisors(&constant) {
        for s in divisors(&lead) {
            let c = Rat(num::BigRational::new(r.clone(), s.clone()));
            if !candidates.contains(&c) {
                candidates.push(c.clone());
                candidates.push(-&c);
            }
        }
    }
    let mut rest = p.monic();
    for c in candidates {
        while !rest.is_zero() && rest.degree().unwrap_or(0) >= 1 && rest.eval(&c).is_zero() {
            roots.push(c.clone());
            rest = rest.div_rem(&Poly::linear_root(&c)).0;
        }
    }
    roots
}

/// Find a monic rational quadratic divisor of a monic squarefree polynomial
/// with no rational roots, if one exists.
fn find_quadratic_divisor(p: &Poly) -> Option<Poly> {
    let ints = to_integer_coeffs(p);
    let h = |x: i64| -> BigInt {
        let mut acc = BigInt::zero();
        for c in ints.iter().rev() {
            acc = acc * BigInt::from(x) + c;
        }
        acc
    };
    let (h0, h1, hm1) = (h(0), h(1), h(-1));
    // No rational roots remain, so none of these values vanish.
    debug_assert!(!h0.is_zero() && !h1.is_zero() && !hm1.is_zero());
    let lead = ints.last().unwrap().abs();
    let two = BigInt::from(2);
    let d0 = signed_divisors(&h0);
    let d1 = signed_divisors(&h1);
    let dm1 = signed_divisors(&hm1);
    // An integer quadratic factor g satisfies g(x) | H(x) at x = -1, 0, 1 and
    // its leading coefficient divides the leading coefficient of H. Interpolate
    // each divisor triple and test by exact division.
    for b in &d1 {
        for c in &dm1 {
            let s = b + c;
            if (&s % &two) != BigInt::zero() {
                continue;
            }
            let g1_num = (b - c) / &two;
            let half = &s / &two;
            for a in &d0 {
                let g2 = &half - a;
                if g2.is_zero() || g2.is_negative() {
                    continue;
                }
                if (&lead % &g2) != BigInt::zero() {
                    continue;
                }
                let quad = Poly::from_coeffs(vec![
                    Rat(num::BigRational::new(a.clone(), g2.clone())),
                    Rat(num::BigRational::new(g1_num.clone(), g2.clone())),
                    Rat::one(),
                ]);
                if quad.divides(p) {
                    return Some(quad);
                }
            }
        }
    }
    None
}

/// Clear denominators and content: primitive integer coefficients.
fn to_integer_coeffs(p: &Poly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.0.denom());
    }
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.0.numer() * (&lcm / c.0.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in &mut ints {
            *c /= &content;
        }
    }
    ints
}

/// Positive divisors of a nonzero integer, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    loop {
        let dsq = &d * &d;
        if dsq > n {
            break;
        }
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    for d in divisors(n) {
        out.push(d.clone());
        out.push(-d);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_rem_exact() {
        // (t-1)(t-2) = t^2 - 3t + 2
        let p = Poly::from_i64(&[2, -3, 1]);
        let (q, r) = p.div_rem(&Poly::from_i64(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_i64(&[-2, 1]));
    }

    #[test]
    fn gcd_of_common_factor() {
        let a = Poly::from_i64(&[-1, 1]).mul(&Poly::from_i64(&[1, 0, 1]));
        let b = Poly::from_i64(&[-1, 1]).mul(&Poly::from_i64(&[-2, 1]));
        assert_eq!(a.gcd(&b), Poly::from_i64(&[-1, 1]));
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // (t-1)^2 (t+2) -> (t-1)(t+2)
        let p = Poly::from_i64(&[-1, 1])
            .mul(&Poly::from_i64(&[-1, 1]))
            .mul(&Poly::from_i64(&[2, 1]));
        let sf = p.squarefree_part();
        assert_eq!(sf, Poly::from_i64(&[-1, 1]).mul(&Poly::from_i64(&[2, 1])).monic());
        assert!(sf.is_squarefree());
    }

    #[test]
    fn inverse_mod_is_inverse() {
        let m = Poly::from_i64(&[2, 0, 1]); // t^2 + 2
        let a = Poly::from_i64(&[1, 1]); // t + 1
        let inv = a.inverse_mod(&m).unwrap();
        let prod = a.mul(&inv).div_rem(&m).1;
        assert_eq!(prod, Poly::one());
    }

    #[test]
    fn rational_roots_of_split_quadratic() {
        // (t-1)(t-2)
        let p = Poly::from_i64(&[2, -3, 1]);
        let mut roots = rational_roots(&p);
        roots.sort();
        assert_eq!(roots, vec![Rat::int(1), Rat::int(2)]);
    }

    #[test]
    fn factor_mixed_linear_and_quadratic() {
        // (t-3)(t^2+1)(t^2-2)
        let p = Poly::from_i64(&[-3, 1])
            .mul(&Poly::from_i64(&[1, 0, 1]))
            .mul(&Poly::from_i64(&[-2, 0, 1]));
        match factor_degle2(&p) {
            FactorOutcome::Split(fs) => {
                assert_eq!(fs.len(), 3);
                assert!(fs.iter().all(|(_, m)| *m == 1));
                assert!(fs.iter().any(|(f, _)| *f == Poly::from_i64(&[-3, 1])));
                assert!(fs.iter().any(|(f, _)| *f == Poly::from_i64(&[1, 0, 1])));
                assert!(fs.iter().any(|(f, _)| *f == Poly::from_i64(&[-2, 0, 1])));
            }
            FactorOutcome::IrreducibleResidue(r) => panic!("unexpected residue {:?}", r),
        }
    }

    #[test]
    fn factor_product_of_quadratics_no_rational_roots() {
        // (t^2+1)(t^2+2)(t^2 - 2t + 2): degree 6 cofactor, all quadratic.
        let p = Poly::from_i64(&[1, 0, 1])
            .mul(&Poly::from_i64(&[2, 0, 1]))
            .mul(&Poly::from_i64(&[2, -2, 1]));
        match factor_degle2(&p) {
            FactorOutcome::Split(fs) => {
                assert_eq!(fs.len(), 3);
                assert!(fs.iter().any(|(f, _)| *f == Poly::from_i64(&[2, -2, 1])));
            }
            FactorOutcome::IrreducibleResidue(r) => panic!("unexpected residue {:?}", r),
        }
    }

    #[test]
    fn irreducible_cubic_is_reported() {
        // t^3 - 2 has no rational root and no quadratic divisor.
        let p = Poly::from_i64(&[-2, 0, 0, 1]);
        match factor_degle2(&p) {
            FactorOutcome::IrreducibleResidue(r) => assert_eq!(r, p),
            FactorOutcome::Split(_) => panic!("t^3 - 2 must not split"),
        }
    }

    #[test]
    fn multiplicities_pass_through() {
        // (t-1)^3 (t^2+1)^2
        let lin = Poly::from_i64(&[-1, 1]);
        let quad = Poly::from_i64(&[1, 0, 1]);
        let p = lin.mul(&lin).mul(&lin).mul(&quad).mul(&quad);
        match factor_degle2(&p) {
            FactorOutcome::Split(fs) => {
                assert!(fs.contains(&(lin, 3)));
                assert!(fs.contains(&(quad, 2)));
            }
            FactorOutcome::IrreducibleResidue(r) => panic!("unexpected residue {:?}", r),
        }
    }
}
