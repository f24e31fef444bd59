//! Rational functions in q over a field tower, in canonical reduced form:
//! gcd(num, den) = 1, den monic, zero = 0/1. Laurent values (denominator a
//! power of q) are ordinary values of the same type.

use std::sync::Arc;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::tower::{embed, sqrt_in_tower, unify, FieldElement, Tower};

#[derive(Clone)]
pub struct RatFunc {
    pub tower: Arc<Tower>,
    pub num: Poly<FieldElement>,
    pub den: Poly<FieldElement>,
}

pub fn embed_poly(p: &Poly<FieldElement>, target: &Arc<Tower>) -> Result<Poly<FieldElement>> {
    let coeffs = p
        .coeffs
        .iter()
        .map(|c| embed(c, target))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

/// Join the towers of all coefficients of a polynomial pair, by pairwise
/// unification through a running representative element.
fn join_towers(polys: &[&Poly<FieldElement>], start: &Arc<Tower>) -> Arc<Tower> {
    let mut rep = start.zero();
    for p in polys {
        for c in &p.coeffs {
            let (r2, _) = unify(&rep, c).expect("tower join failed");
            rep = r2;
        }
    }
    rep.tower
}

impl RatFunc {
    fn normalized(
        tower: Arc<Tower>,
        num: Poly<FieldElement>,
        den: Poly<FieldElement>,
    ) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::constant(tower.one()),
                tower,
            };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den).expect("poly gcd");
            if g.deg().unwrap_or(0) > 0 {
                (
                    num.exact_div(&g).expect("gcd divides"),
                    den.exact_div(&g).expect("gcd divides"),
                )
            } else {
                (num, den)
            }
        };
        let lead_inv = den.leading().unwrap().inv().expect("nonzero leading");
        let num = num.scale(&lead_inv);
        let den = den.scale(&lead_inv);
        RatFunc { tower, num, den }
    }

    /// Both inputs already reduced: cross-cancel and skip the final gcd.
    fn mul_reduced(a: &RatFunc, b: &RatFunc) -> RatFunc {
        let tower = Arc::clone(&a.tower);
        let (an, bd) = if a.num.is_constant() || b.den.is_constant() {
            (a.num.clone(), b.den.clone())
        } else {
            let g = a.num.gcd(&b.den).expect("gcd");
            if g.deg().unwrap_or(0) > 0 {
                (
                    a.num.exact_div(&g).expect("div"),
                    b.den.exact_div(&g).expect("div"),
                )
            } else {
                (a.num.clone(), b.den.clone())
            }
        };
        let (bn, ad) = if b.num.is_constant() || a.den.is_constant() {
            (b.num.clone(), a.den.clone())
        } else {
            let g = b.num.gcd(&a.den).expect("gcd");
            if g.deg().unwrap_or(0) > 0 {
                (
                    b.num.exact_div(&g).expect("div"),
                    a.den.exact_div(&g).expect("div"),
                )
            } else {
                (b.num.clone(), a.den.clone())
            }
        };
        let num = an.mul(&bn);
        if num.is_zero() {
            return RatFunc::zero(&tower);
        }
        let den = ad.mul(&bd);
        let lead_inv = den.leading().unwrap().inv().expect("nonzero leading");
        RatFunc {
            tower,
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }

    pub fn from_parts(num: Poly<FieldElement>, den: Poly<FieldElement>) -> RatFunc {
        let tower = join_towers(
            &[&num, &den],
            &den.leading()
                .map(|c| Arc::clone(&c.tower))
                .unwrap_or_else(|| Tower::base(4)),
        );
        let num = embed_poly(&num, &tower).unwrap();
        let den = embed_poly(&den, &tower).unwrap();
        RatFunc::normalized(tower, num, den)
    }

    pub fn from_poly(num: Poly<FieldElement>, tower: &Arc<Tower>) -> RatFunc {
        let num = embed_poly(&num, &join_towers(&[&num], tower)).unwrap();
        let tower = join_towers(&[&num], tower);
        RatFunc::normalized(tower.clone(), num, Poly::constant(tower.one()))
    }

    pub fn zero(tower: &Arc<Tower>) -> RatFunc {
        RatFunc {
            tower: Arc::clone(tower),
            num: Poly::zero(),
            den: Poly::constant(tower.one()),
        }
    }

    pub fn one(tower: &Arc<Tower>) -> RatFunc {
        RatFunc::constant(tower.one())
    }

    pub fn constant(c: FieldElement) -> RatFunc {
        let tower = Arc::clone(&c.tower);
        let den = Poly::constant(tower.one());
        RatFunc::normalized(tower, Poly::constant(c), den)
    }

    pub fn from_int(tower: &Arc<Tower>, n: i64) -> RatFunc {
        RatFunc::constant(tower.from_int(n))
    }

    /// Laurent combination sum of c * q^e.
    pub fn from_laurent(tower: &Arc<Tower>, terms: &[(i64, FieldElement)]) -> RatFunc {
        let shift = terms.iter().map(|(e, _)| *e).min().unwrap_or(0).min(0);
        let mut coeffs =
            vec![tower.zero(); terms.iter().map(|(e, _)| (e - shift) as usize).max().unwrap_or(0) + 1];
        for (e, c) in terms {
            let idx = (e - shift) as usize;
            let c = embed(c, tower).expect("tower embed");
            coeffs[idx] = coeffs[idx].add(&c);
        }
        let num = Poly::from_coeffs(coeffs);
        let den = Poly::monomial(tower.one(), (-shift) as usize);
        RatFunc::normalized(Arc::clone(tower), num, den)
    }

    /// q^e for any integer e.
    pub fn q_pow(tower: &Arc<Tower>, e: i64) -> RatFunc {
        RatFunc::from_laurent(tower, &[(e, tower.one())])
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == Poly::constant(self.tower.one())
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<FieldElement> {
        if !self.is_constant() {
            return None;
        }
        if self.num.is_zero() {
            return Some(self.tower.zero());
        }
        Some(self.num.coeffs[0].clone())
    }

    fn unified(&self, rhs: &RatFunc) -> (RatFunc, RatFunc) {
        if Arc::ptr_eq(&self.tower, &rhs.tower) {
            return (self.clone(), rhs.clone());
        }
        let (a, b) = unify(&self.tower.zero(), &rhs.tower.zero()).expect("tower join");
        let _ = b;
        let t = a.tower;
        (
            RatFunc {
                tower: Arc::clone(&t),
                num: embed_poly(&self.num, &t).expect("embed"),
                den: embed_poly(&self.den, &t).expect("embed"),
            },
            RatFunc {
                tower: Arc::clone(&t),
                num: embed_poly(&rhs.num, &t).expect("embed"),
                den: embed_poly(&rhs.den, &t).expect("embed"),
            },
        )
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        let (a, b) = self.unified(rhs);
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.den == b.den {
            let num = a.num.add(&b.num);
            return RatFunc::normalized(a.tower, num, a.den);
        }
        let num = a.num.mul(&b.den).add(&b.num.mul(&a.den));
        let den = a.den.mul(&b.den);
        RatFunc::normalized(a.tower, num, den)
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            tower: Arc::clone(&self.tower),
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        let (a, b) = self.unified(rhs);
        RatFunc::mul_reduced(&a, &b)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::normalized(
            Arc::clone(&self.tower),
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        if e == 0 {
            return Ok(RatFunc::one(&self.tower));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one(&base.tower);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &FieldElement) -> RatFunc {
        self.mul(&RatFunc::constant(c.clone()))
    }

    pub fn scale_rational(&self, r: &BigRational) -> RatFunc {
        self.scale(&self.tower.from_rational(r.clone()))
    }

    /// Exact evaluation at q = 1. Errors if the reduced denominator
    /// vanishes there.
    pub fn eval_at_one(&self) -> Result<FieldElement> {
        let one = self.tower.one();
        let d = self.den.eval(&one);
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        if self.num.is_zero() {
            return Ok(self.tower.zero());
        }
        self.num.eval(&one).div(&d)
    }

    /// Exact evaluation at an arbitrary point.
    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        let x = embed(x, &self.tower).or_else(|_| {
            let (a, _) = unify(x, &self.tower.zero())?;
            Ok::<_, Error>(a)
        })?;
        let d = self.den.eval_or(&x, x.tower.zero());
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.num.is_zero() {
            return Ok(x.tower.zero());
        }
        self.num.eval(&x).div(&d)
    }

    /// True iff the value is a square in C(q) (constants taken modulo the
    /// algebraic closure): every irreducible factor of num*den must appear
    /// with even multiplicity.
    pub fn is_square_over_closure(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::Precondition(
                "squareness of zero is degenerate".into(),
            ));
        }
        let g = self.num.mul(&self.den);
        let (_lead, parts) = g.squarefree_decomposition()?;
        Ok(parts.iter().all(|(_, e)| e % 2 == 0))
    }

    /// Exact square root within the current tower, if one exists there.
    pub fn sqrt(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let g = self.num.mul(&self.den);
        let (lead, parts) = g.squarefree_decomposition().ok()?;
        if parts.iter().any(|(_, e)| e % 2 == 1) {
            return None;
        }
        let s = sqrt_in_tower(&lead)?;
        let mut root = Poly::constant(s);
        for (p, e) in &parts {
            root = root.mul(&p.pow((*e as u32) / 2));
        }
        // sqrt(num/den) = sqrt(num*den)/den
        Some(RatFunc::normalized(
            Arc::clone(&self.tower),
            root,
            self.den.clone(),
        ))
    }

    /// Numerator-degree minus denominator-degree.
    pub fn degree_diff(&self) -> isize {
        self.num.degi() - self.den.degi()
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        // canonical form + common tower makes this structural
        let (a, b) = self.unified(other);
        a.num == b.num && a.den == b.den
    }
}

impl std::fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RatFunc({:?} / {:?})", self.num, self.den)
    }
}

/// The q-integer [n]_q = (q^n - q^-n)/(q - q^-1) as a Laurent polynomial.
pub fn q_int(tower: &Arc<Tower>, n: i64) -> RatFunc {
    if n == 0 {
        return RatFunc::zero(tower);
    }
    if n < 0 {
        return q_int(tower, -n).neg();
    }
    let terms: Vec<(i64, FieldElement)> = (0..n).map(|k| (n - 1 - 2 * k, tower.one())).collect();
    RatFunc::from_laurent(tower, &terms)
}

/// Lambda_i = (q^{2 l} - q^{-2 l})/(q^2 - q^{-2}) = [l]_{q^2}; zero iff l = 0.
pub fn lambda_cap(tower: &Arc<Tower>, l: i64) -> RatFunc {
    if l == 0 {
        return RatFunc::zero(tower);
    }
    if l < 0 {
        return lambda_cap(tower, -l).neg();
    }
    let terms: Vec<(i64, FieldElement)> =
        (0..l).map(|k| (2 * (l - 1) - 4 * k, tower.one())).collect();
    RatFunc::from_laurent(tower, &terms)
}

/// The bracket pair ([q^m; n]_q, (q^m; n)_q):
/// (q^m q^n - q^-m q^-n)/(q - q^-1) and (q^m q^n - 1)/(q - 1).
pub fn gadget_values(tower: &Arc<Tower>, m: i64, n: i64) -> (RatFunc, RatFunc) {
    let square = q_int(tower, m + n);
    let round = round_bracket(tower, m + n);
    (square, round)
}

/// (q^k - 1)/(q - 1) in reduced form, for any integer k.
pub fn round_bracket(tower: &Arc<Tower>, k: i64) -> RatFunc {
    let num = RatFunc::q_pow(tower, k).sub(&RatFunc::one(tower));
    let den = RatFunc::q_pow(tower, 1).sub(&RatFunc::one(tower));
    num.div(&den).expect("q - 1 is nonzero")
}
