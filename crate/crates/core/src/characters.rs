//! Weight combinatorics and the generic character formula: the alternating
//! Weyl sum with the typical-root product, exact division by the Weyl
//! denominator, and the delta-symbol test for equality of central
//! characters.
//!
//! Character polynomials live in the group ring of the weight lattice.
//! Exponents are stored doubled so that the half-integer shifts coming from
//! rho_0 stay integral; all public outputs land back on the integer
//! lattice.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weights::Weight;

/// Laurent polynomial in x_1..x_n with integer coefficients and doubled
/// exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterPoly {
    pub n: usize,
    /// doubled exponent vector -> coefficient (nonzero)
    pub terms: BTreeMap<Vec<i64>, i64>,
}

impl CharacterPoly {
    pub fn zero(n: usize) -> Self {
        CharacterPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(n: usize, doubled_exp: Vec<i64>, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(doubled_exp, coeff);
        }
        CharacterPoly { n, terms }
    }

    pub fn one(n: usize) -> Self {
        CharacterPoly::monomial(n, vec![0; n], 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let v = terms.remove(e).unwrap_or(0) + c;
            if v != 0 {
                terms.insert(e.clone(), v);
            }
        }
        CharacterPoly { n: self.n, terms }
    }

    pub fn neg(&self) -> Self {
        CharacterPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let v = terms.remove(&e).unwrap_or(0) + c1 * c2;
                if v != 0 {
                    terms.insert(e, v);
                }
            }
        }
        CharacterPoly { n: self.n, terms }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return CharacterPoly::zero(self.n);
        }
        CharacterPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Apply a permutation of the variables: (w . p)(x) has exponent
    /// vectors e' with e'[w[i]] = e[i].
    pub fn permute(&self, w: &[usize]) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = vec![0i64; self.n];
            for (i, &wi) in w.iter().enumerate() {
                e2[wi] = e[i];
            }
            let v: i64 = terms.remove(&e2).unwrap_or(0) + c;
            if v != 0 {
                terms.insert(e2, v);
            }
        }
        CharacterPoly { n: self.n, terms }
    }

    pub fn is_symmetric(&self) -> bool {
        // transpositions of adjacent variables generate S_n
        for i in 0..self.n.saturating_sub(1) {
            let mut w: Vec<usize> = (0..self.n).collect();
            w.swap(i, i + 1);
            if self.permute(&w) != *self {
                return false;
            }
        }
        true
    }

    pub fn coeff(&self, doubled_exp: &[i64]) -> i64 {
        self.terms.get(doubled_exp).copied().unwrap_or(0)
    }

    /// Value at x_1 = ... = x_n = 1.
    pub fn eval_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    fn leading(&self) -> Option<(&Vec<i64>, i64)> {
        self.terms.iter().next_back().map(|(e, c)| (e, *c))
    }

    /// Exact division in the Laurent group ring; errors when the division
    /// leaves a remainder. Both sides are shifted into the polynomial ring
    /// so that lex monomial division terminates.
    pub fn exact_div(&self, div: &Self) -> Result<Self> {
        if div.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let n = self.n;
        let min_of = |p: &CharacterPoly| -> Vec<i64> {
            let mut m = vec![i64::MAX; n];
            for e in p.terms.keys() {
                for i in 0..n {
                    m[i] = m[i].min(e[i]);
                }
            }
            m
        };
        let shift = |p: &CharacterPoly, by: &[i64]| -> CharacterPoly {
            CharacterPoly {
                n,
                terms: p
                    .terms
                    .iter()
                    .map(|(e, c)| {
                        (
                            e.iter().zip(by).map(|(a, b)| a - b).collect::<Vec<i64>>(),
                            *c,
                        )
                    })
                    .collect(),
            }
        };
        let smin = min_of(self);
        let dmin = min_of(div);
        let mut rem = shift(self, &smin);
        let d = shift(div, &dmin);
        let (de, dc) = d.leading().map(|(e, c)| (e.clone(), c)).unwrap();
        let mut quot = CharacterPoly::zero(n);
        while !rem.is_zero() {
            let (re, rc) = rem.leading().map(|(e, c)| (e.clone(), c)).unwrap();
            if rc % dc != 0 || re.iter().zip(&de).any(|(a, b)| a < b) {
                return Err(Error::NonExactDivision);
            }
            let qe: Vec<i64> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let qterm = CharacterPoly::monomial(n, qe, rc / dc);
            rem = rem.sub(&qterm.mul(&d));
            quot = quot.add(&qterm);
        }
        // undo the shift: quotient exponents gain (dmin - smin)
        let back: Vec<i64> = dmin.iter().zip(&smin).map(|(a, b)| a - b).collect();
        Ok(shift(&quot, &back))
    }

    /// Halve all exponents back onto the integer lattice. Errors if some
    /// doubled exponent is odd.
    pub fn undouble(&self) -> Result<CharacterPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.iter().any(|x| x % 2 != 0) {
                return Err(Error::Precondition(
                    "character has half-integer exponents".into(),
                ));
            }
            terms.insert(e.iter().map(|x| x / 2).collect::<Vec<i64>>(), *c);
        }
        Ok(CharacterPoly {
            n: self.n,
            terms,
        })
    }

    /// Serialize with integer exponents: {"e1,e2,...": coeff}.
    pub fn to_json_map(&self) -> Result<BTreeMap<String, i64>> {
        let half = self.undouble()?;
        Ok(half
            .terms
            .iter()
            .map(|(e, c)| {
                (
                    e.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    *c,
                )
            })
            .collect())
    }
}

/// All permutations of 0..n with signs.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == cur.len() {
            out.push((cur.clone(), sign));
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            let s = if i == k { sign } else { -sign };
            rec(k + 1, cur, s, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, 1, &mut out);
    out
}

/// rho_0 = half the sum of the positive even roots, in doubled coordinates:
/// (n-1, n-3, ..., -(n-1)).
pub fn rho0_doubled(n: usize) -> Vec<i64> {
    (0..n).map(|i| (n as i64 - 1) - 2 * i as i64).collect()
}

/// Positive even roots eps_i - eps_j (i < j) at which lambda is typical:
/// lambda_i + lambda_j != 0.
pub fn typical_roots(lambda: &Weight) -> Vec<(usize, usize)> {
    let n = lambda.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if lambda.0[i] + lambda.0[j] != 0 {
                out.push((i, j));
            }
        }
    }
    out
}

/// The Weyl denominator D = sum over w of sgn(w) e^{w(rho_0)}.
pub fn weyl_denominator(n: usize) -> CharacterPoly {
    let rho = rho0_doubled(n);
    let mut d = CharacterPoly::zero(n);
    for (w, sign) in permutations_with_sign(n) {
        let mut e = vec![0i64; n];
        for (i, &wi) in w.iter().enumerate() {
            e[wi] = rho[i];
        }
        d = d.add(&CharacterPoly::monomial(n, e, sign));
    }
    d
}

/// Product form of the Weyl denominator:
/// prod_{i<j} (x_i^{1/2} x_j^{-1/2} - x_i^{-1/2} x_j^{1/2}).
pub fn weyl_denominator_product(n: usize) -> CharacterPoly {
    let mut d = CharacterPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut ep = vec![0i64; n];
            ep[i] = 1;
            ep[j] = -1;
            let mut em = vec![0i64; n];
            em[i] = -1;
            em[j] = 1;
            let factor = CharacterPoly::monomial(n, ep, 1).sub(&CharacterPoly::monomial(n, em, 1));
            d = d.mul(&factor);
        }
    }
    d
}

/// Total dimension of the highest weight space: 1 for |lambda| = 0, else
/// 2^(floor((|lambda|-1)/2) + 1).
pub fn highest_weight_space_dim(lambda: &Weight) -> i64 {
    let m = lambda.size_nonzero();
    if m == 0 {
        1
    } else {
        1i64 << ((m - 1) / 2 + 1)
    }
}

fn check_domain(lambda: &Weight) -> Result<()> {
    if !lambda.q_dominant() || !lambda.in_p_geq0() {
        return Err(Error::NotQDominant(format!("{lambda}")));
    }
    Ok(())
}

/// The generic character formula: ch V(lambda) =
/// (dim v_lambda / D) * sum_w sgn(w) w(e^{lambda+rho_0} prod_typical (1 + e^{-alpha})).
/// The division by D is checked to be exact.
pub fn sergeev_character(lambda: &Weight) -> Result<CharacterPoly> {
    check_domain(lambda)?;
    let n = lambda.n();
    let rho = rho0_doubled(n);
    let top: Vec<i64> = lambda.0.iter().zip(&rho).map(|(l, r)| 2 * l + r).collect();
    let mut base = CharacterPoly::monomial(n, top, 1);
    for (i, j) in typical_roots(lambda) {
        let mut e = vec![0i64; n];
        e[i] = -2;
        e[j] = 2;
        let factor = CharacterPoly::one(n).add(&CharacterPoly::monomial(n, e, 1));
        base = base.mul(&factor);
    }
    let mut num = CharacterPoly::zero(n);
    for (w, sign) in permutations_with_sign(n) {
        num = num.add(&base.permute(&w).scale(sign));
    }
    let d = weyl_denominator(n);
    let quot = num.exact_div(&d)?;
    Ok(quot.scale(highest_weight_space_dim(lambda)))
}

/// Multiplicative factor between ch V^q and ch V: 2 exactly when |lambda|
/// is even with non-square discriminant, else 1.
pub fn quantum_character_factor(lambda: &Weight) -> i64 {
    let c = crate::clifford::classify_simples(lambda);
    let m = lambda.size_nonzero();
    if m % 2 == 0 && !c.discriminant_square && m > 0 {
        2
    } else {
        1
    }
}

/// ch V^q(lambda): the generic character scaled by the case factor.
pub fn ch_vq(lambda: &Weight) -> Result<CharacterPoly> {
    check_domain(lambda)?;
    let base = sergeev_character(lambda)?;
    Ok(base.scale(quantum_character_factor(lambda)))
}

/// The formal symbol delta(lambda) = delta_{lambda_1} + ... with
/// delta_0 = 0 and delta_{-m} = -delta_m, stored as a normalized multiset.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DeltaSymbol {
    /// magnitude -> net signed count (zero entries dropped)
    pub entries: BTreeMap<u64, i64>,
}

pub fn delta_symbol(lambda: &Weight) -> DeltaSymbol {
    let mut entries: BTreeMap<u64, i64> = BTreeMap::new();
    for &x in &lambda.0 {
        if x == 0 {
            continue;
        }
        let mag = x.unsigned_abs();
        let delta = if x > 0 { 1 } else { -1 };
        let v = entries.remove(&mag).unwrap_or(0) + delta;
        if v != 0 {
            entries.insert(mag, v);
        }
    }
    DeltaSymbol { entries }
}

/// chi_lambda = chi_mu iff delta(lambda) = delta(mu).
pub fn central_char_equal(lambda: &Weight, mu: &Weight) -> bool {
    delta_symbol(lambda) == delta_symbol(mu)
}
