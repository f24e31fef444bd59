//! The quantum Clifford superalgebra Cliff_q(lambda): basis arithmetic over
//! the 2^n monomials t_S, kernel splitting, the discriminant, and the
//! classification of simple modules.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratfunc::{lambda_cap, RatFunc};
use crate::tower::Tower;
use crate::weights::Weight;

/// The diagonal quadratic data (Lambda_1, ..., Lambda_n) of Cliff_q(lambda),
/// with the index split into the nondegenerate part and the kernel.
#[derive(Clone)]
pub struct QuadSpace {
    pub caps: Vec<RatFunc>,
    pub tower: Arc<Tower>,
}

impl QuadSpace {
    pub fn from_weight(tower: &Arc<Tower>, lambda: &Weight) -> QuadSpace {
        QuadSpace {
            caps: lambda.0.iter().map(|&l| lambda_cap(tower, l)).collect(),
            tower: Arc::clone(tower),
        }
    }

    /// Classical specialization: Lambda_i replaced by the integer lambda_i.
    pub fn classical_from_weight(tower: &Arc<Tower>, lambda: &Weight) -> QuadSpace {
        QuadSpace {
            caps: lambda
                .0
                .iter()
                .map(|&l| RatFunc::from_int(tower, l))
                .collect(),
            tower: Arc::clone(tower),
        }
    }

    pub fn from_caps(tower: &Arc<Tower>, caps: Vec<RatFunc>) -> QuadSpace {
        QuadSpace {
            caps,
            tower: Arc::clone(tower),
        }
    }

    pub fn n(&self) -> usize {
        self.caps.len()
    }

    /// N_Lambda: indices with Lambda_i != 0 (0-based).
    pub fn nondegenerate_indices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| !self.caps[i].is_zero()).collect()
    }

    /// Z_Lambda: indices with Lambda_i = 0 (0-based).
    pub fn kernel_indices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.caps[i].is_zero()).collect()
    }

    pub fn size_nonzero(&self) -> usize {
        self.nondegenerate_indices().len()
    }
}

/// Restrict to the nondegenerate indices; simple modules factor through the
/// restricted algebra with the kernel generators acting by zero.
pub fn split_kernel(space: &QuadSpace) -> (QuadSpace, Vec<usize>) {
    let n_idx = space.nondegenerate_indices();
    let z_idx = space.kernel_indices();
    let restricted = QuadSpace {
        caps: n_idx.iter().map(|&i| space.caps[i].clone()).collect(),
        tower: Arc::clone(&space.tower),
    };
    let _ = n_idx;
    (restricted, z_idx)
}

/// An element of Cliff_q(lambda): a finite combination of basis monomials
/// t_S = t_{i1}...t_{ik} (i1 < ... < ik), S encoded as a bitmask.
#[derive(Clone, PartialEq)]
pub struct CliffElem {
    pub n: usize,
    pub terms: BTreeMap<u32, RatFunc>,
}

impl std::fmt::Debug for CliffElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CliffElem[")?;
        for (s, c) in &self.terms {
            write!(f, " {s:b}:{c:?}")?;
        }
        write!(f, " ]")
    }
}

impl CliffElem {
    pub fn zero(n: usize) -> Self {
        CliffElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, mask: u32, coeff: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mask, coeff);
        }
        CliffElem { n, terms }
    }

    pub fn one(n: usize, tower: &Arc<Tower>) -> Self {
        CliffElem::basis(n, 0, RatFunc::one(tower))
    }

    /// The generator t_i (0-based index).
    pub fn generator(n: usize, i: usize, tower: &Arc<Tower>) -> Self {
        CliffElem::basis(n, 1 << i, RatFunc::one(tower))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (s, c) in &rhs.terms {
            let entry = terms.remove(s);
            let sum = match entry {
                Some(e) => e.add(c),
                None => c.clone(),
            };
            if !sum.is_zero() {
                terms.insert(*s, sum);
            }
        }
        CliffElem { n: self.n, terms }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return CliffElem::zero(self.n);
        }
        CliffElem {
            n: self.n,
            terms: self.terms.iter().map(|(s, x)| (*s, x.mul(c))).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CliffElem {
            n: self.n,
            terms: self.terms.iter().map(|(s, x)| (*s, x.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Parity of a homogeneous element: Some(0) even, Some(1) odd, None for
    /// mixed or zero.
    pub fn parity(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|s| s.count_ones() % 2);
        let first = it.next()?;
        if it.all(|p| p == first) {
            Some(first)
        } else {
            None
        }
    }
}

/// Multiply two basis monomials t_s * t_t, returning (sign, squares, mask):
/// the sign from anticommutation, the set of indices contributing a
/// Lambda_i factor, and the resulting basis mask (symmetric difference).
fn mul_masks(s: u32, t: u32) -> (i64, u32, u32) {
    let mut sign = 1i64;
    let mut left = s;
    for j in 0..32u32 {
        if t & (1 << j) == 0 {
            continue;
        }
        // move t_j leftwards past the elements of `left` above j
        let above = (left >> (j + 1)).count_ones();
        if above % 2 == 1 {
            sign = -sign;
        }
        left ^= 1 << j;
    }
    (sign, s & t, s ^ t)
}

/// Product in Cliff_q(lambda): bilinear extension of the monomial rule
/// t_i t_j = -t_j t_i (i != j), t_i^2 = Lambda_i.
pub fn cliff_mul(x: &CliffElem, y: &CliffElem, space: &QuadSpace) -> Result<CliffElem> {
    if x.n != y.n || x.n != space.n() {
        return Err(Error::DimensionMismatch(
            "cliff_mul over mismatched sizes".into(),
        ));
    }
    let mut out = CliffElem::zero(x.n);
    for (&s, a) in &x.terms {
        for (&t, b) in &y.terms {
            let (sign, squares, mask) = mul_masks(s, t);
            let mut coeff = a.mul(b);
            if sign < 0 {
                coeff = coeff.neg();
            }
            let mut sq = squares;
            while sq != 0 {
                let j = sq.trailing_zeros() as usize;
                coeff = coeff.mul(&space.caps[j]);
                sq &= sq - 1;
            }
            if !coeff.is_zero() {
                out = out.add(&CliffElem::basis(x.n, mask, coeff));
            }
        }
    }
    Ok(out)
}

/// Orbit criterion: the discriminant of the nondegenerate part is a square
/// iff the orbit {j : lambda_j^2 = lambda_i^2} of every nonzero
/// lambda_i != +-1 has even size.
pub fn discriminant_square_orbit(lambda: &Weight) -> bool {
    let nonzero: Vec<i64> = lambda.0.iter().copied().filter(|&x| x != 0).collect();
    let mut sizes: BTreeMap<i64, usize> = BTreeMap::new();
    for &x in &nonzero {
        *sizes.entry(x * x).or_insert(0) += 1;
    }
    sizes.iter().all(|(&sq, &count)| sq == 1 || count % 2 == 0)
}

/// Square-free route: is the product of the nonzero Lambda_i a square in
/// C(q)? An empty product counts as a square.
pub fn discriminant_square_ratfunc(tower: &Arc<Tower>, lambda: &Weight) -> Result<bool> {
    let mut prod = RatFunc::one(tower);
    let mut any = false;
    for &l in &lambda.0 {
        if l == 0 {
            continue;
        }
        any = true;
        prod = prod.mul(&lambda_cap(tower, l));
    }
    if !any {
        return Ok(true);
    }
    prod.is_square_over_closure()
}

/// Both discriminant routes; they must agree.
pub fn discriminant_routes(tower: &Arc<Tower>, lambda: &Weight) -> Result<(bool, bool)> {
    Ok((
        discriminant_square_orbit(lambda),
        discriminant_square_ratfunc(tower, lambda)?,
    ))
}

/// The orbit route, cross-checked against the square-free route in debug
/// builds.
pub fn discriminant_is_square(lambda: &Weight) -> bool {
    let orbit = discriminant_square_orbit(lambda);
    debug_assert_eq!(
        orbit,
        discriminant_square_ratfunc(&Tower::base(4), lambda).unwrap(),
        "discriminant routes disagree for {lambda}"
    );
    orbit
}

#[derive(Clone, Serialize, PartialEq, Eq, Debug)]
pub struct Classification {
    pub lambda: Vec<i64>,
    pub size_nonzero: usize,
    pub discriminant_square: bool,
    /// 1 or 2 simple modules up to isomorphism.
    pub count: usize,
    pub dim_even: u64,
    pub dim_odd: u64,
    pub parity_invariant: bool,
    pub witt_index: usize,
}

impl Classification {
    pub fn total_dim(&self) -> u64 {
        self.dim_even + self.dim_odd
    }
}

/// Classify the simple Z2-graded modules of Cliff_q(lambda).
///
/// With |lambda| nonzero entries: |lambda| = 2k with square discriminant
/// gives two simples of dimension 2^(k-1)|2^(k-1); |lambda| = 2k with
/// non-square discriminant one parity-invariant simple 2^k|2^k; odd
/// |lambda| = 2k+1 one parity-invariant simple 2^k|2^k.
pub fn classify_simples(lambda: &Weight) -> Classification {
    let m = lambda.size_nonzero();
    let square = discriminant_is_square(lambda);
    let (count, dim_even, dim_odd, parity_invariant, witt_index) = if m == 0 {
        // exterior algebra: one-dimensional simples E and Pi(E)
        (2, 1u64, 0u64, false, 0usize)
    } else if m % 2 == 0 {
        let k = m / 2;
        if square {
            (2, 1u64 << (k - 1), 1u64 << (k - 1), false, k)
        } else {
            (1, 1u64 << k, 1u64 << k, true, k - 1)
        }
    } else {
        let k = (m - 1) / 2;
        (1, 1u64 << k, 1u64 << k, true, k)
    };
    Classification {
        lambda: lambda.0.clone(),
        size_nonzero: m,
        discriminant_square: square,
        count,
        dim_even,
        dim_odd,
        parity_invariant,
        witt_index,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::q_int;

    fn base() -> Arc<Tower> {
        Tower::base(4)
    }

    fn wt(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn cliff_mul_examples() {
        let t = base();
        let lam = wt(&[4, 2, 1]);
        let sp = QuadSpace::from_weight(&t, &lam);
        // t1 * t1 = Lambda_1 = (q^2+q^-2)(q^4+q^-4)
        let t1 = CliffElem::generator(3, 0, &t);
        let sq = cliff_mul(&t1, &t1, &sp).unwrap();
        let l4 = lambda_cap(&t, 4);
        assert_eq!(sq, CliffElem::basis(3, 0, l4.clone()));
        // t2 * t1 = -t1 t2
        let t2 = CliffElem::generator(3, 1, &t);
        let p = cliff_mul(&t2, &t1, &sp).unwrap();
        assert_eq!(p, CliffElem::basis(3, 0b11, RatFunc::one(&t)).neg());
        // (t1 t2)^2 = -Lambda_1 Lambda_2
        let t12 = CliffElem::basis(3, 0b11, RatFunc::one(&t));
        let sq = cliff_mul(&t12, &t12, &sp).unwrap();
        let expect = CliffElem::basis(3, 0, l4.mul(&lambda_cap(&t, 2)).neg());
        assert_eq!(sq, expect);
    }

    #[test]
    fn cliff_mul_associative_small() {
        let t = base();
        let lam = wt(&[2, 1, 3]);
        let sp = QuadSpace::from_weight(&t, &lam);
        let n = 3usize;
        for s in 0u32..8 {
            for u in 0u32..8 {
                for v in 0u32..8 {
                    let a = CliffElem::basis(n, s, RatFunc::one(&t));
                    let b = CliffElem::basis(n, u, RatFunc::one(&t));
                    let c = CliffElem::basis(n, v, RatFunc::one(&t));
                    let left = cliff_mul(&cliff_mul(&a, &b, &sp).unwrap(), &c, &sp).unwrap();
                    let right = cliff_mul(&a, &cliff_mul(&b, &c, &sp).unwrap(), &sp).unwrap();
                    assert_eq!(left, right, "assoc at {s} {u} {v}");
                }
            }
        }
    }

    #[test]
    fn center_element_commutation() {
        // t_1...t_n anticommutes with each t_i for n even, commutes for n odd
        let t = base();
        for n in 2..=4usize {
            let lam = Weight::new((1..=n as i64).collect());
            let sp = QuadSpace::from_weight(&t, &lam);
            let full = CliffElem::basis(n, (1u32 << n) - 1, RatFunc::one(&t));
            for i in 0..n {
                let ti = CliffElem::generator(n, i, &t);
                let ab = cliff_mul(&full, &ti, &sp).unwrap();
                let ba = cliff_mul(&ti, &full, &sp).unwrap();
                if n % 2 == 0 {
                    assert_eq!(ab, ba.neg(), "n={n} i={i}");
                } else {
                    assert_eq!(ab, ba, "n={n} i={i}");
                }
            }
        }
    }

    #[test]
    fn split_kernel_examples() {
        let t = base();
        let sp = QuadSpace::from_weight(&t, &wt(&[2, 0, 0]));
        let (nd, z) = split_kernel(&sp);
        assert_eq!(nd.n(), 1);
        assert_eq!(z, vec![1, 2]);

        let sp = QuadSpace::from_weight(&t, &wt(&[0, 0, 0]));
        let (nd, z) = split_kernel(&sp);
        assert_eq!(nd.n(), 0);
        assert_eq!(z, vec![0, 1, 2]);

        let sp = QuadSpace::from_weight(&t, &wt(&[4, 2, 1]));
        let (nd, z) = split_kernel(&sp);
        assert_eq!(nd.n(), 3);
        assert!(z.is_empty());
    }

    #[test]
    fn discriminant_examples() {
        let t = base();
        assert!(discriminant_is_square(&wt(&[1, 1])));
        assert!(!discriminant_is_square(&wt(&[3, 1])));
        assert!(discriminant_is_square(&wt(&[2, 2, 3, 3])));
        // routes agree on a sweep
        for a in 0..=3i64 {
            for b in 0..=3i64 {
                for c in 0..=3i64 {
                    let lam = wt(&[a, b, c]);
                    let (orbit, sqfree) = discriminant_routes(&t, &lam).unwrap();
                    assert_eq!(orbit, sqfree, "routes disagree at {lam}");
                }
            }
        }
    }

    #[test]
    fn negative_entries() {
        let t = base();
        // Lambda_{-m} = -Lambda_m; orbit criterion uses squares
        assert_eq!(lambda_cap(&t, -3), lambda_cap(&t, 3).neg());
        assert!(discriminant_is_square(&wt(&[2, -2])));
        let (o, s) = discriminant_routes(&t, &wt(&[2, -2])).unwrap();
        assert!(o && s);
        let (o, s) = discriminant_routes(&t, &wt(&[3, -1])).unwrap();
        assert!(!o && !s);
    }

    #[test]
    fn classification_examples() {
        // (4,2,1): one simple of dimension 2|2
        let c = classify_simples(&wt(&[4, 2, 1]));
        assert_eq!(
            (c.count, c.dim_even, c.dim_odd, c.parity_invariant, c.witt_index),
            (1, 2, 2, true, 1)
        );
        // (1,1): two simples 1|1
        let c = classify_simples(&wt(&[1, 1]));
        assert_eq!(
            (c.count, c.dim_even, c.dim_odd, c.parity_invariant, c.witt_index),
            (2, 1, 1, false, 1)
        );
        // (3,1): one parity-invariant simple 2|2
        let c = classify_simples(&wt(&[3, 1]));
        assert_eq!(
            (c.count, c.dim_even, c.dim_odd, c.parity_invariant, c.witt_index),
            (1, 2, 2, true, 0)
        );
        // strictly decreasing positive entries: witt index floor((n-1)/2)
        let c = classify_simples(&wt(&[4, 3, 2, 1]));
        assert_eq!(c.witt_index, 1);
        let c = classify_simples(&wt(&[5, 4, 3, 2, 1]));
        assert_eq!(c.witt_index, 2);
    }

    #[test]
    fn classification_serializes() {
        let c = classify_simples(&wt(&[4, 2, 1]));
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["count"], 1);
        assert_eq!(json["dim_even"], 2);
        assert_eq!(json["parity_invariant"], true);
    }

    #[test]
    fn quad_space_from_caps() {
        let t = base();
        let sp = QuadSpace::from_caps(&t, vec![q_int(&t, 2), RatFunc::zero(&t)]);
        assert_eq!(sp.nondegenerate_indices(), vec![0]);
        assert_eq!(sp.kernel_indices(), vec![1]);
    }
}
