//! Dense univariate polynomials over an exact coefficient field.
//!
//! The same type is reused at every layer of the system: over `BigRational`
//! for cyclotomic minimal polynomials, and over tower `FieldElement`s for
//! everything in the variable q.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact field coefficients. Elements may carry a context (e.g. the field
/// tower they live in), so zero/one are derived from an existing value.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse. Fails on zero.
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }
}

impl Coeff for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::one() / self)
    }
}

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`.
/// Invariant: no trailing zero coefficients (the zero polynomial is empty).
#[derive(Clone, PartialEq)]
pub struct Poly<F: Coeff> {
    pub coeffs: Vec<F>,
}

impl<F: Coeff> std::fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<F: Coeff> Poly<F> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial c * x^k.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree as isize with deg 0 for constants and -1 for zero, convenient
    /// for comparisons.
    pub fn degi(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc: Option<Poly<F>> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        match acc {
            Some(a) => a,
            // x^0 = 1 needs a context element; empty product of a zero poly
            // is not representable, so callers must not raise zero to 0.
            None => panic!("pow(0) needs a sample coefficient; use one_like"),
        }
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn divrem(&self, div: &Self) -> Result<(Self, Self)> {
        if div.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dlead = div.leading().unwrap().clone();
        let dlead_inv = dlead.inv()?;
        let ddeg = div.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < div.coeffs.len() {
            return Ok((Poly::zero(), self.clone()));
        }
        let qdeg = rem.len() - div.coeffs.len();
        let zero = dlead.zero_like();
        let mut quot = vec![zero; qdeg + 1];
        for k in (0..=qdeg).rev() {
            let top = rem[k + ddeg].clone();
            if top.is_zero() {
                continue;
            }
            let c = top.mul(&dlead_inv);
            for (i, d) in div.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub(&c.mul(d));
            }
            quot[k] = c;
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Exact division; errors if a nonzero remainder appears.
    pub fn exact_div(&self, div: &Self) -> Result<Self> {
        let (q, r) = self.divrem(div)?;
        if !r.is_zero() {
            return Err(Error::Precondition("non-exact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic normalization: divides by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        match self.leading() {
            None => Ok(self.clone()),
            Some(l) => {
                let inv = l.inv()?;
                Ok(self.scale(&inv))
            }
        }
    }

    /// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &Self) -> Result<Self> {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut acc = c.zero_like();
            for _ in 0..i {
                acc = acc.add(c);
            }
            out.push(acc);
        }
        Poly::from_coeffs(out)
    }

    pub fn eval(&self, x: &F) -> F {
        match self.coeffs.last() {
            None => panic!("eval of zero polynomial needs a context; handle upstream"),
            Some(top) => {
                let mut acc = top.clone();
                for c in self.coeffs.iter().rev().skip(1) {
                    acc = acc.mul(x).add(c);
                }
                acc
            }
        }
    }

    pub fn eval_or(&self, x: &F, zero: F) -> F {
        if self.is_zero() {
            zero
        } else {
            self.eval(x)
        }
    }

    /// Deflate by a known root: self = (x - root) * q. Errors if the value
    /// at `root` is nonzero.
    pub fn deflate(&self, root: &F) -> Result<Self> {
        let lin = Poly::from_coeffs(vec![root.neg(), root.one_like()]);
        self.exact_div(&lin)
    }

    /// Substitute x -> x^k (inflation).
    pub fn inflate(&self, k: usize) -> Self {
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Poly::from_coeffs(out)
    }

    /// Inverse of `inflate(k)`: interpret a polynomial whose support lies in
    /// exponents divisible by k as a polynomial in x^k. Returns None if some
    /// exponent is not divisible by k.
    pub fn try_deflate_var(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let mut out = vec![self.coeffs[0].zero_like(); (self.coeffs.len() - 1) / k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i % k != 0 {
                return None;
            }
            out[i / k] = c.clone();
        }
        Some(Poly::from_coeffs(out))
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut acc = Poly::constant(self.coeffs.last().unwrap().clone());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(inner);
            acc = acc.add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Square-free decomposition (Musser/Yun by repeated gcd): returns the
    /// list of (factor, multiplicity) with the factors square-free, pairwise
    /// coprime, and the product of factor^multiplicity equal to self up to
    /// the leading coefficient. The constant content is returned separately.
    pub fn squarefree_decomposition(&self) -> Result<(F, Vec<(Self, usize)>)> {
        if self.is_zero() {
            return Err(Error::Precondition(
                "square-free decomposition of zero".into(),
            ));
        }
        let lead = self.leading().unwrap().clone();
        let monic = self.monic()?;
        if monic.is_constant() {
            return Ok((lead, Vec::new()));
        }
        let mut parts: Vec<(Poly<F>, usize)> = Vec::new();
        // Yun's algorithm over characteristic zero.
        let deriv = monic.derivative();
        let mut g = monic.gcd(&deriv)?;
        let mut c = monic.exact_div(&g)?;
        let mut d = deriv.exact_div(&g)?.sub(&c.derivative());
        let mut i = 1usize;
        while !c.is_constant() {
            let p = c.gcd(&d)?;
            if p.deg().unwrap_or(0) > 0 {
                parts.push((p.clone(), i));
            }
            c = c.exact_div(&p)?;
            d = d.exact_div(&p)?.sub(&c.derivative());
            i += 1;
        }
        let _ = &mut g;
        Ok((lead, parts))
    }

    /// Write self = lead * a1 * m^2 with a1 square-free (the square-free part
    /// carrying the odd-multiplicity factors) and m the extracted square root
    /// of the rest. `one` supplies the coefficient context.
    pub fn squarefree_part(&self, one: &F) -> Result<(Self, Self)> {
        let (lead, parts) = self.squarefree_decomposition()?;
        let mut a1 = Poly::constant(lead);
        let mut m = Poly::constant(one.one_like());
        for (p, e) in parts {
            if e % 2 == 1 {
                a1 = a1.mul(&p);
            }
            if e / 2 > 0 {
                m = m.mul(&p.pow((e / 2) as u32));
            }
        }
        Ok((a1, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    fn poly(cs: &[i64]) -> Poly<BigRational> {
        Poly::from_coeffs(cs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn divrem_and_gcd() {
        let a = poly(&[-1, 0, 1]); // x^2 - 1
        let b = poly(&[1, 1]); // x + 1
        let (quot, rem) = a.divrem(&b).unwrap();
        assert_eq!(quot, poly(&[-1, 1]));
        assert!(rem.is_zero());
        assert_eq!(a.gcd(&b).unwrap(), poly(&[1, 1]));
    }

    #[test]
    fn squarefree_part_examples() {
        // (x-1)^2 (x+2) -> (x+2, x-1)
        let a = poly(&[1, -2, 1]).mul(&poly(&[2, 1]));
        let (a1, m) = a.squarefree_part(&q(1)).unwrap();
        assert_eq!(a1, poly(&[2, 1]));
        assert_eq!(m, poly(&[-1, 1]));

        // square-free input stays put
        let b = poly(&[2, 1]);
        let (b1, mb) = b.squarefree_part(&q(1)).unwrap();
        assert_eq!(b1, b);
        assert_eq!(mb, poly(&[1]));

        // x^4 -> (1, x^2)
        let c = poly(&[0, 0, 0, 0, 1]);
        let (c1, mc) = c.squarefree_part(&q(1)).unwrap();
        assert_eq!(c1, poly(&[1]));
        assert_eq!(mc, poly(&[0, 0, 1]));
    }

    #[test]
    fn derivative_and_eval() {
        let a = poly(&[1, 2, 3]); // 3x^2 + 2x + 1
        assert_eq!(a.derivative(), poly(&[2, 6]));
        assert_eq!(a.eval(&q(2)), q(17));
    }

    #[test]
    fn deflate_inflate_roundtrip() {
        let a = poly(&[1, 0, 2, 0, 1]);
        let d = a.try_deflate_var(2).unwrap();
        assert_eq!(d, poly(&[1, 2, 1]));
        assert_eq!(d.inflate(2), a);
        assert!(poly(&[1, 1]).try_deflate_var(2).is_none());
    }
}
