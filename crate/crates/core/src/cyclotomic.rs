//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! Elements are coefficient vectors over the power basis 1, zeta, ...,
//! zeta^(phi(N)-1) with reduction by the N-th cyclotomic polynomial. The
//! conductor is kept divisible by 4 so that i = zeta^(N/4) is always
//! available.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Ascending divisors of n.
fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn x_n_minus_1(n: u32) -> Poly<BigRational> {
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    coeffs[0] = -BigRational::one();
    coeffs[n as usize] = BigRational::one();
    Poly::from_coeffs(coeffs)
}

/// The N-th cyclotomic polynomial, by recursive division of x^N - 1 by
/// Phi_d for the proper divisors d.
pub fn cyclotomic_poly(n: u32) -> Poly<BigRational> {
    assert!(n > 0, "cyclotomic_poly: n must be positive");
    if n == 1 {
        return Poly::from_coeffs(vec![-BigRational::one(), BigRational::one()]);
    }
    let mut result = x_n_minus_1(n);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        result = result.exact_div(&phi_d).expect("cyclotomic division is exact");
    }
    result
}

/// Per-conductor context: the minimal polynomial, reduction rows for
/// x^(phi..2*phi-2), and the table of reduced powers of zeta.
pub struct CycCtx {
    pub n: u32,
    pub degree: usize,
    pub phi_poly: Poly<BigRational>,
    /// red_rows[t] = coefficients of x^(degree + t) mod Phi_N.
    red_rows: Vec<Vec<BigRational>>,
    /// zeta_pows[j] = coefficients of zeta^j for j in 0..n.
    zeta_pows: Vec<Vec<BigRational>>,
}

static CTX_CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycCtx>>>> = OnceLock::new();

/// Fetch (or build) the shared context for conductor n. The conductor is
/// normalized to a multiple of 4.
pub fn cyc_ctx(n: u32) -> Arc<CycCtx> {
    let n = normalize_conductor(n);
    let cache = CTX_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(ctx) = guard.get(&n) {
        return Arc::clone(ctx);
    }
    let ctx = Arc::new(CycCtx::build(n));
    guard.insert(n, Arc::clone(&ctx));
    ctx
}

pub fn normalize_conductor(n: u32) -> u32 {
    let n = n.max(1);
    num_integer::lcm(n, 4)
}

impl CycCtx {
    fn build(n: u32) -> CycCtx {
        assert!(n % 4 == 0, "conductor must be divisible by 4");
        let phi_poly = cyclotomic_poly(n);
        let degree = phi_poly.deg().unwrap();
        // Rows for reducing x^(degree+t), t = 0..degree-1.
        let mut red_rows: Vec<Vec<BigRational>> = Vec::with_capacity(degree.max(1));
        let mut row: Vec<BigRational> = (0..degree)
            .map(|i| -phi_poly.coeffs[i].clone())
            .collect();
        red_rows.push(row.clone());
        for _ in 1..degree {
            // multiply row by x and reduce the spill.
            let spill = row[degree - 1].clone();
            let mut next = vec![BigRational::zero(); degree];
            for i in (1..degree).rev() {
                next[i] = row[i - 1].clone();
            }
            if !spill.is_zero() {
                for i in 0..degree {
                    next[i] += &spill * &red_rows[0][i];
                }
            }
            red_rows.push(next.clone());
            row = next;
        }
        // Table of zeta^j for j in 0..n.
        let mut zeta_pows: Vec<Vec<BigRational>> = Vec::with_capacity(n as usize);
        let mut cur = vec![BigRational::zero(); degree];
        cur[0] = BigRational::one();
        for _ in 0..n {
            zeta_pows.push(cur.clone());
            // multiply by zeta
            let spill = cur[degree - 1].clone();
            let mut next = vec![BigRational::zero(); degree];
            for i in (1..degree).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !spill.is_zero() {
                for i in 0..degree {
                    next[i] += &spill * &red_rows[0][i];
                }
            }
            cur = next;
        }
        CycCtx {
            n,
            degree,
            phi_poly,
            red_rows,
            zeta_pows,
        }
    }

    pub fn zero(&self) -> CycElem {
        CycElem {
            coeffs: vec![BigRational::zero(); self.degree],
        }
    }

    pub fn one(&self) -> CycElem {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, r: BigRational) -> CycElem {
        let mut coeffs = vec![BigRational::zero(); self.degree];
        coeffs[0] = r;
        CycElem { coeffs }
    }

    pub fn zeta_pow(&self, j: u32) -> CycElem {
        CycElem {
            coeffs: self.zeta_pows[(j % self.n) as usize].clone(),
        }
    }

    /// i = zeta^(N/4).
    pub fn imag_unit(&self) -> CycElem {
        self.zeta_pow(self.n / 4)
    }

    pub fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    pub fn neg(&self, a: &CycElem) -> CycElem {
        CycElem {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        let d = self.degree;
        let mut conv = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                conv[i + j] += x * y;
            }
        }
        let mut out = conv[..d].to_vec();
        for t in 0..d.saturating_sub(1) {
            let c = &conv[d + t];
            if c.is_zero() {
                continue;
            }
            for i in 0..d {
                let term = c * &self.red_rows[t][i];
                out[i] += term;
            }
        }
        CycElem { coeffs: out }
    }

    pub fn inv(&self, a: &CycElem) -> Result<CycElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid in Q[x] against the (irreducible) minimal polynomial.
        let a_poly = Poly::from_coeffs(a.coeffs.clone());
        let mut r0 = self.phi_poly.clone();
        let mut r1 = a_poly;
        let mut s0: Poly<BigRational> = Poly::zero();
        let mut s1: Poly<BigRational> = Poly::constant(BigRational::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd (a nonzero constant since Phi_N is irreducible over Q)
        if r0.deg() != Some(0) {
            return Err(Error::ZeroDivisor);
        }
        let scale = r0.coeffs[0].clone().recip();
        let inv_poly = s0.scale(&scale);
        let mut coeffs = inv_poly.coeffs;
        coeffs.resize(self.degree, BigRational::zero());
        Ok(CycElem { coeffs })
    }

    /// Decompose a nonzero element as rho * zeta^j with rho a positive
    /// rational, if it has that shape.
    pub fn monomial_decompose(&self, a: &CycElem) -> Option<(BigRational, u32)> {
        if a.is_zero() {
            return None;
        }
        for j in 0..self.n {
            let row = &self.zeta_pows[j as usize];
            let k = match row.iter().position(|c| !c.is_zero()) {
                Some(k) => k,
                None => continue,
            };
            if a.coeffs[k].is_zero() {
                continue;
            }
            let ratio = &a.coeffs[k] / &row[k];
            let mut matches = true;
            for i in 0..self.degree {
                if a.coeffs[i] != &ratio * &row[i] {
                    matches = false;
                    break;
                }
            }
            if matches {
                if ratio.is_negative() {
                    return Some((-ratio, (j + self.n / 2) % self.n));
                }
                return Some((ratio, j));
            }
        }
        None
    }

    /// The quadratic Gauss sum for an odd prime p dividing the conductor:
    /// returns an element g with g^2 = (-1)^((p-1)/2) * p.
    fn gauss_sum(&self, p: u32) -> CycElem {
        debug_assert!(self.n % p == 0);
        let step = self.n / p;
        let mut acc = self.zero();
        for a in 1..p {
            let sym = legendre_symbol(a, p);
            let term = self.zeta_pow((a * step) % self.n);
            if sym == 1 {
                acc = self.add(&acc, &term);
            } else {
                acc = self.sub(&acc, &term);
            }
        }
        acc
    }

    /// Square root of a square-free positive integer d inside this field,
    /// when the conductor supports it.
    fn sqrt_squarefree_nat(&self, d: u64) -> Option<CycElem> {
        let mut acc = self.one();
        let mut minus_count = 0u32;
        let mut m = d;
        if m % 2 == 0 {
            if self.n % 8 != 0 {
                return None;
            }
            // sqrt(2) = zeta_8 + zeta_8^(-1)
            let step = self.n / 8;
            let s2 = self.add(&self.zeta_pow(step), &self.zeta_pow(self.n - step));
            acc = self.mul(&acc, &s2);
            m /= 2;
        }
        let mut p = 3u64;
        while p * p <= m {
            if m % p == 0 {
                m /= p;
                if m % p == 0 {
                    return None; // not square-free
                }
                if self.n as u64 % p != 0 {
                    return None;
                }
                let g = self.gauss_sum(p as u32);
                if p % 4 == 3 {
                    minus_count += 1; // g^2 = -p
                }
                acc = self.mul(&acc, &g);
            }
            p += 2;
        }
        if m > 1 {
            let p = m;
            if self.n as u64 % p != 0 {
                return None;
            }
            let g = self.gauss_sum(p as u32);
            if p % 4 == 3 {
                minus_count += 1;
            }
            acc = self.mul(&acc, &g);
        }
        // each (p = 3 mod 4)-factor contributed i*sqrt(p); divide out the i's.
        if minus_count % 4 != 0 {
            let i_inv = self.zeta_pow(self.n - self.n / 4);
            for _ in 0..(minus_count % 4) {
                acc = self.mul(&acc, &i_inv);
            }
        }
        acc.canonical_sign();
        Some(acc)
    }

    /// Square root of a rational number inside this field, if representable.
    pub fn sqrt_rational(&self, r: &BigRational) -> Option<CycElem> {
        if r.is_zero() {
            return Some(self.zero());
        }
        let negative = r.is_negative();
        let a = r.abs();
        // sqrt(p/q) = sqrt(p*q)/q
        let pq = a.numer() * a.denom();
        let (s, d) = int_square_split(&pq)?;
        let mut root = if d == 1 {
            self.from_rational(BigRational::from(s) / BigRational::from(a.denom().clone()))
        } else {
            let sd = self.sqrt_squarefree_nat(d)?;
            let scale = BigRational::from(s) / BigRational::from(a.denom().clone());
            let mut out = sd;
            for c in out.coeffs.iter_mut() {
                *c *= &scale;
            }
            out
        };
        if negative {
            root = self.mul(&root, &self.imag_unit());
        }
        root.canonical_sign();
        Some(root)
    }

    /// Best-effort square root in Q(zeta_N). Complete on rationals (up to
    /// factoring limits), on monomials rho * zeta^j, and on monomials times
    /// squares of the cyclotomic units 1 +- zeta^k; returns None otherwise.
    pub fn sqrt(&self, a: &CycElem) -> Option<CycElem> {
        if a.is_zero() {
            return Some(self.zero());
        }
        if let Some(s) = self.sqrt_monomial(a) {
            return Some(s);
        }
        // try a = (1 +- zeta^k)^2 * monomial
        for k in 1..self.n {
            for sign in [1i32, -1] {
                let mut u = self.zeta_pow(k);
                if sign < 0 {
                    u = self.neg(&u);
                }
                u = self.add(&self.one(), &u);
                if u.is_zero() {
                    continue;
                }
                let u2 = self.mul(&u, &u);
                let quotient = match self.inv(&u2) {
                    Ok(inv) => self.mul(a, &inv),
                    Err(_) => continue,
                };
                if let Some(s) = self.sqrt_monomial(&quotient) {
                    let mut out = self.mul(&s, &u);
                    out.canonical_sign();
                    debug_assert!(self.mul(&out, &out) == *a);
                    return Some(out);
                }
            }
        }
        None
    }

    fn sqrt_monomial(&self, a: &CycElem) -> Option<CycElem> {
        let (rho, j) = self.monomial_decompose(a)?;
        if j % 2 != 0 {
            // odd zeta-power: the root lives in conductor 2N, not here
            return None;
        }
        let r = self.sqrt_rational(&rho)?;
        let mut out = self.mul(&r, &self.zeta_pow(j / 2));
        out.canonical_sign();
        debug_assert!(self.mul(&out, &out) == *a);
        Some(out)
    }

    /// Embed an element of Q(zeta_M) into this field (M must divide N).
    pub fn embed_from(&self, src: &CycCtx, a: &CycElem) -> CycElem {
        assert!(self.n % src.n == 0, "embedding requires conductor divisibility");
        if self.n == src.n {
            return a.clone();
        }
        let step = self.n / src.n;
        let mut acc = self.zero();
        for (j, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pow = &self.zeta_pows[(j as u32 * step % self.n) as usize];
            for i in 0..self.degree {
                let term = c * &pow[i];
                acc.coeffs[i] += term;
            }
        }
        acc
    }
}

/// n = s^2 * d with d square-free; returns (s, d) or None if n has a prime
/// factor above the trial-division bound.
pub(crate) fn int_square_split(n: &BigInt) -> Option<(BigInt, u64)> {
    use num_traits::ToPrimitive;
    let mut m = n.clone();
    let mut s = BigInt::one();
    let mut d = 1u64;
    let bound = 1_000_000u64;
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= m {
        let bp = BigInt::from(p);
        if (&m % &bp).is_zero() {
            let mut e = 0u32;
            while (&m % &bp).is_zero() {
                m /= &bp;
                e += 1;
            }
            for _ in 0..(e / 2) {
                s *= &bp;
            }
            if e % 2 == 1 {
                d = d.checked_mul(p)?;
            }
        }
        p += if p == 2 { 1 } else { 2 };
        if p > bound {
            return None;
        }
    }
    if m > BigInt::one() {
        // remaining prime
        d = d.checked_mul(m.to_u64()?)?;
    }
    Some((s, d))
}

fn legendre_symbol(a: u32, p: u32) -> i32 {
    let mut result = 1u64;
    let mut base = (a % p) as u64;
    let mut exp = (p as u64 - 1) / 2;
    let m = p as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

/// An element of Q(zeta_N); interpretation requires the matching context.
#[derive(Clone, PartialEq, Debug)]
pub struct CycElem {
    pub coeffs: Vec<BigRational>,
}

impl CycElem {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Flip the global sign so the first nonzero coefficient is positive.
    /// Used to pick deterministic square-root branches.
    pub fn canonical_sign(&mut self) {
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                for x in self.coeffs.iter_mut() {
                    *x = -&*x;
                }
            }
            return;
        }
    }
}
