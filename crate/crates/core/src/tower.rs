//! Towers of quadratic extensions over a cyclotomic base field.
//!
//! A tower is Q(zeta_N)(sqrt(r_1))(sqrt(r_2))... where each radicand r_j is
//! an element of the tower below it and is not a square there. Elements are
//! stored as binary coefficient trees: a depth-k element is a pair (a, b)
//! of depth-(k-1) elements meaning a + b*sqrt(r_k).
//!
//! Towers are append-only; arithmetic between elements of related towers
//! embeds into the deeper one. Unrelated towers are merged by replaying
//! radical adjunctions.

use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::{cyc_ctx, normalize_conductor, CycCtx, CycElem};
use crate::error::{Error, Result};
use crate::poly::Coeff;

static TOWER_ID: AtomicU64 = AtomicU64::new(1);

pub struct Tower {
    id: u64,
    parent: Option<Arc<Tower>>,
    pub conductor: u32,
    pub ctx: Arc<CycCtx>,
    /// radicands[j] has 2^j coordinates over the current conductor and the
    /// radicals 0..j.
    pub radicands: Vec<Vec<CycElem>>,
}

impl std::fmt::Debug for Tower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Tower(id={}, conductor={}, radicals={})",
            self.id,
            self.conductor,
            self.radicands.len()
        )
    }
}

fn next_id() -> u64 {
    TOWER_ID.fetch_add(1, AtomicOrdering::Relaxed)
}

impl Tower {
    /// The base tower Q(zeta_N) with no radicals. N is normalized to a
    /// multiple of 4 so that i is always present.
    pub fn base(conductor: u32) -> Arc<Tower> {
        let n = normalize_conductor(conductor);
        let ctx = cyc_ctx(n);
        Arc::new(Tower {
            id: next_id(),
            parent: None,
            conductor: n,
            ctx,
            radicands: Vec::new(),
        })
    }

    pub fn depth(&self) -> usize {
        self.radicands.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.depth()
    }

    /// Total degree over Q.
    pub fn degree_over_q(&self) -> usize {
        self.ctx.degree * self.dim()
    }

    /// Enlarge the conductor to lcm(current, m); returns self if unchanged.
    pub fn with_conductor(self: &Arc<Tower>, m: u32) -> Arc<Tower> {
        let target = normalize_conductor(num_integer::lcm(self.conductor, m));
        if target == self.conductor {
            return Arc::clone(self);
        }
        let new_ctx = cyc_ctx(target);
        let radicands = self
            .radicands
            .iter()
            .map(|r| r.iter().map(|c| new_ctx.embed_from(&self.ctx, c)).collect())
            .collect();
        Arc::new(Tower {
            id: next_id(),
            parent: Some(Arc::clone(self)),
            conductor: target,
            ctx: new_ctx,
            radicands,
        })
    }

    /// True if `self` appears in `other`'s parent chain (or is a radical-free
    /// tower whose conductor divides `other`'s).
    fn embeds_into(&self, other: &Tower) -> bool {
        if self.radicands.is_empty() && other.conductor % self.conductor == 0 {
            return true;
        }
        let mut cur = Some(other);
        while let Some(t) = cur {
            if t.id == self.id {
                return true;
            }
            cur = t.parent.as_deref();
        }
        false
    }

    pub fn zero(self: &Arc<Tower>) -> FieldElement {
        FieldElement {
            tower: Arc::clone(self),
            coords: vec![self.ctx.zero(); self.dim()],
        }
    }

    pub fn one(self: &Arc<Tower>) -> FieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(self: &Arc<Tower>, r: BigRational) -> FieldElement {
        let mut coords = vec![self.ctx.zero(); self.dim()];
        coords[0] = self.ctx.from_rational(r);
        FieldElement {
            tower: Arc::clone(self),
            coords,
        }
    }

    pub fn from_int(self: &Arc<Tower>, n: i64) -> FieldElement {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    /// zeta_d as an element; requires d | conductor.
    pub fn zeta(self: &Arc<Tower>, d: u32) -> Result<FieldElement> {
        if self.conductor % d != 0 {
            return Err(Error::Precondition(format!(
                "zeta_{d} needs conductor divisible by {d}"
            )));
        }
        let mut coords = vec![self.ctx.zero(); self.dim()];
        coords[0] = self.ctx.zeta_pow(self.conductor / d);
        Ok(FieldElement {
            tower: Arc::clone(self),
            coords,
        })
    }

    pub fn imag_unit(self: &Arc<Tower>) -> FieldElement {
        let mut coords = vec![self.ctx.zero(); self.dim()];
        coords[0] = self.ctx.imag_unit();
        FieldElement {
            tower: Arc::clone(self),
            coords,
        }
    }

    /// The j-th radical generator sqrt(r_j) as an element.
    pub fn radical(self: &Arc<Tower>, j: usize) -> FieldElement {
        assert!(j < self.depth());
        let mut coords = vec![self.ctx.zero(); self.dim()];
        coords[1 << j] = self.ctx.one();
        FieldElement {
            tower: Arc::clone(self),
            coords,
        }
    }

    /// Adjoin sqrt(a). If a is already a square in the tower the tower is
    /// returned unchanged together with the witness.
    pub fn adjoin_sqrt(self: &Arc<Tower>, a: &FieldElement) -> Result<(Arc<Tower>, FieldElement)> {
        if a.is_zero() {
            return Err(Error::DegenerateAdjunction);
        }
        let a = embed(a, self)?;
        if let Some(s) = sqrt_in_tower(&a) {
            return Ok((Arc::clone(self), s));
        }
        let new = Arc::new(Tower {
            id: next_id(),
            parent: Some(Arc::clone(self)),
            conductor: self.conductor,
            ctx: Arc::clone(&self.ctx),
            radicands: {
                let mut rs = self.radicands.clone();
                rs.push(a.coords.clone());
                rs
            },
        });
        let g = new.radical(new.depth() - 1);
        Ok((new, g))
    }
}

/// An element of a quadratic-extension tower over a cyclotomic field.
#[derive(Clone)]
pub struct FieldElement {
    pub tower: Arc<Tower>,
    pub coords: Vec<CycElem>,
}

impl std::fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Fe{:?}", self.coords.iter().map(|c| &c.coeffs).collect::<Vec<_>>())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.tower, &other.tower) {
            return self.coords == other.coords;
        }
        match unify(self, other) {
            Ok((a, b)) => a.coords == b.coords,
            Err(_) => false,
        }
    }
}

// --- recursive kernels over coordinate slices ---

fn rec_add(ctx: &CycCtx, a: &[CycElem], b: &[CycElem]) -> Vec<CycElem> {
    a.iter().zip(b).map(|(x, y)| ctx.add(x, y)).collect()
}

fn rec_neg(ctx: &CycCtx, a: &[CycElem]) -> Vec<CycElem> {
    a.iter().map(|x| ctx.neg(x)).collect()
}

fn rec_mul(tower: &Tower, depth: usize, a: &[CycElem], b: &[CycElem]) -> Vec<CycElem> {
    if depth == 0 {
        return vec![tower.ctx.mul(&a[0], &b[0])];
    }
    let h = 1 << (depth - 1);
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    let r = &tower.radicands[depth - 1][..h];
    let a0b0 = rec_mul(tower, depth - 1, a0, b0);
    let a1b1 = rec_mul(tower, depth - 1, a1, b1);
    let a0b1 = rec_mul(tower, depth - 1, a0, b1);
    let a1b0 = rec_mul(tower, depth - 1, a1, b0);
    let a1b1r = rec_mul(tower, depth - 1, &a1b1, r);
    let mut out = rec_add(&tower.ctx, &a0b0, &a1b1r);
    out.extend(rec_add(&tower.ctx, &a0b1, &a1b0));
    out
}

fn rec_is_zero(a: &[CycElem]) -> bool {
    a.iter().all(|c| c.is_zero())
}

fn rec_inv(tower: &Tower, depth: usize, a: &[CycElem]) -> Result<Vec<CycElem>> {
    if rec_is_zero(a) {
        return Err(Error::DivisionByZero);
    }
    if depth == 0 {
        return Ok(vec![tower.ctx.inv(&a[0])?]);
    }
    let h = 1 << (depth - 1);
    let (a0, a1) = a.split_at(h);
    if rec_is_zero(a1) {
        let inv0 = rec_inv(tower, depth - 1, a0)?;
        let mut out = inv0;
        out.extend(vec![tower.ctx.zero(); h]);
        return Ok(out);
    }
    let r = &tower.radicands[depth - 1][..h];
    // norm n = a0^2 - a1^2 r down one level
    let a0sq = rec_mul(tower, depth - 1, a0, a0);
    let a1sq = rec_mul(tower, depth - 1, a1, a1);
    let a1sqr = rec_mul(tower, depth - 1, &a1sq, r);
    let n: Vec<CycElem> = a0sq
        .iter()
        .zip(&a1sqr)
        .map(|(x, y)| tower.ctx.sub(x, y))
        .collect();
    if rec_is_zero(&n) {
        // a0^2 = a1^2 r with a1 != 0 would mean r is a square below,
        // violating the adjunction invariant.
        return Err(Error::ZeroDivisor);
    }
    let ninv = rec_inv(tower, depth - 1, &n)?;
    let mut out = rec_mul(tower, depth - 1, a0, &ninv);
    let a1n = rec_mul(tower, depth - 1, a1, &ninv);
    out.extend(rec_neg(&tower.ctx, &a1n));
    Ok(out)
}

fn rec_sqrt(tower: &Tower, depth: usize, a: &[CycElem]) -> Option<Vec<CycElem>> {
    if depth == 0 {
        return tower.ctx.sqrt(&a[0]).map(|c| vec![c]);
    }
    let h = 1 << (depth - 1);
    let (a0, a1) = a.split_at(h);
    let ctx = &tower.ctx;
    let r = &tower.radicands[depth - 1][..h];
    if rec_is_zero(a1) {
        // either sqrt(a0) below, or d*g with d^2 = a0/r
        if let Some(s) = rec_sqrt(tower, depth - 1, a0) {
            let mut out = s;
            out.extend(vec![ctx.zero(); h]);
            return Some(out);
        }
        if rec_is_zero(a0) {
            return Some(vec![ctx.zero(); 2 * h]);
        }
        let rinv = rec_inv(tower, depth - 1, r).ok()?;
        let a0_over_r = rec_mul(tower, depth - 1, a0, &rinv);
        if let Some(d) = rec_sqrt(tower, depth - 1, &a0_over_r) {
            let mut out = vec![ctx.zero(); h];
            out.extend(d);
            return Some(out);
        }
        return None;
    }
    // y = c + d g with c^2 + d^2 r = a0, 2 c d = a1: c^2 = (a0 +- s)/2,
    // s^2 = a0^2 - a1^2 r.
    let a0sq = rec_mul(tower, depth - 1, a0, a0);
    let a1sq = rec_mul(tower, depth - 1, a1, a1);
    let a1sqr = rec_mul(tower, depth - 1, &a1sq, r);
    let n: Vec<CycElem> = a0sq
        .iter()
        .zip(&a1sqr)
        .map(|(x, y)| ctx.sub(x, y))
        .collect();
    let s = rec_sqrt(tower, depth - 1, &n)?;
    let half = ctx.from_rational(BigRational::new(1.into(), 2.into()));
    for sgn in [1, -1] {
        let sterm: Vec<CycElem> = if sgn == 1 {
            s.clone()
        } else {
            rec_neg(ctx, &s)
        };
        let c2: Vec<CycElem> = a0
            .iter()
            .zip(&sterm)
            .map(|(x, y)| ctx.mul(&ctx.add(x, y), &half))
            .collect();
        if let Some(c) = rec_sqrt(tower, depth - 1, &c2) {
            if rec_is_zero(&c) {
                continue;
            }
            // d = a1 / (2c)
            let two_c: Vec<CycElem> = c.iter().map(|x| ctx.add(x, x)).collect();
            let inv2c = match rec_inv(tower, depth - 1, &two_c) {
                Ok(v) => v,
                Err(_) => continue,
            };
            let d = rec_mul(tower, depth - 1, a1, &inv2c);
            let mut y = c;
            y.extend(d);
            // exact verification
            let y2 = rec_mul(tower, depth, &y, &y);
            if y2.as_slice() == a {
                return Some(y);
            }
        }
    }
    None
}

// --- embeddings ---

/// Rewrite a depth-`depth` coordinate slice of `src` over `target`, given
/// square-root witnesses in `target` for the first `depth` radicals of
/// `src`. Radicand coordinates only involve radicals below their own level,
/// so prefixes suffice.
fn embed_prefix(
    src: &Tower,
    depth: usize,
    coords: &[CycElem],
    target: &Arc<Tower>,
    witnesses: &[FieldElement],
) -> Result<FieldElement> {
    if witnesses.len() < depth {
        return Err(Error::IncompatibleTowers);
    }
    if depth == 0 {
        let mut c = vec![target.ctx.zero(); target.dim()];
        c[0] = target.ctx.embed_from(&src.ctx, &coords[0]);
        return Ok(FieldElement {
            tower: Arc::clone(target),
            coords: c,
        });
    }
    let h = 1 << (depth - 1);
    let (a0, a1) = coords.split_at(h);
    let lo = embed_prefix(src, depth - 1, a0, target, witnesses)?;
    let hi = embed_prefix(src, depth - 1, a1, target, witnesses)?;
    let w = &witnesses[depth - 1];
    Ok(lo.add(&hi.mul(w)))
}

/// Witnesses in `target` for every radical of `src`, provided each radicand
/// has a square root there.
fn radical_witnesses(src: &Tower, target: &Arc<Tower>) -> Result<Vec<FieldElement>> {
    let mut witnesses: Vec<FieldElement> = Vec::with_capacity(src.depth());
    for j in 0..src.depth() {
        let rad_t = embed_prefix(src, j, &src.radicands[j], target, &witnesses)?;
        let w = sqrt_in_tower(&rad_t).ok_or(Error::IncompatibleTowers)?;
        witnesses.push(w);
    }
    Ok(witnesses)
}

/// Embed an element into a tower it is compatible with (identity, ancestor
/// chain, radical-free base into anything with a matching conductor, or any
/// tower whose radicands all have square roots in the target).
pub fn embed(elem: &FieldElement, target: &Arc<Tower>) -> Result<FieldElement> {
    if Arc::ptr_eq(&elem.tower, target) {
        return Ok(elem.clone());
    }
    if elem.tower.embeds_into(target) {
        let mut coords: Vec<CycElem> = elem
            .coords
            .iter()
            .map(|c| target.ctx.embed_from(&elem.tower.ctx, c))
            .collect();
        coords.resize(target.dim(), target.ctx.zero());
        return Ok(FieldElement {
            tower: Arc::clone(target),
            coords,
        });
    }
    if target.conductor % elem.tower.conductor != 0 {
        return Err(Error::IncompatibleTowers);
    }
    let witnesses = radical_witnesses(&elem.tower, target)?;
    embed_prefix(
        &elem.tower,
        elem.tower.depth(),
        &elem.coords,
        target,
        &witnesses,
    )
}

/// Bring two elements into a common tower, merging towers if necessary.
pub fn unify(a: &FieldElement, b: &FieldElement) -> Result<(FieldElement, FieldElement)> {
    if Arc::ptr_eq(&a.tower, &b.tower) {
        return Ok((a.clone(), b.clone()));
    }
    if let Ok(a2) = embed(a, &b.tower) {
        return Ok((a2, b.clone()));
    }
    if let Ok(b2) = embed(b, &a.tower) {
        return Ok((a.clone(), b2));
    }
    // merge: extend a's tower by b's conductor and replay b's radicals
    let mut cur = a.tower.with_conductor(b.tower.conductor);
    let mut witnesses: Vec<FieldElement> = Vec::with_capacity(b.tower.depth());
    for j in 0..b.tower.depth() {
        let rad_cur = embed_prefix(&b.tower, j, &b.tower.radicands[j], &cur, &witnesses)?;
        let (next, w) = cur.adjoin_sqrt(&rad_cur)?;
        cur = next;
        witnesses = witnesses
            .into_iter()
            .map(|w| embed(&w, &cur))
            .collect::<Result<Vec<_>>>()?;
        witnesses.push(w);
    }
    let a2 = embed(a, &cur)?;
    let b2 = embed_prefix(&b.tower, b.tower.depth(), &b.coords, &cur, &witnesses)?;
    Ok((a2, b2))
}

// --- public element API ---

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        rec_is_zero(&self.coords)
    }

    pub fn add(&self, rhs: &FieldElement) -> FieldElement {
        let (a, b) = unify(self, rhs).expect("tower unification failed");
        FieldElement {
            coords: rec_add(&a.tower.ctx, &a.coords, &b.coords),
            tower: a.tower,
        }
    }

    pub fn sub(&self, rhs: &FieldElement) -> FieldElement {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            tower: Arc::clone(&self.tower),
            coords: rec_neg(&self.tower.ctx, &self.coords),
        }
    }

    pub fn mul(&self, rhs: &FieldElement) -> FieldElement {
        let (a, b) = unify(self, rhs).expect("tower unification failed");
        let depth = a.tower.depth();
        FieldElement {
            coords: rec_mul(&a.tower, depth, &a.coords, &b.coords),
            tower: a.tower,
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        let depth = self.tower.depth();
        Ok(FieldElement {
            tower: Arc::clone(&self.tower),
            coords: rec_inv(&self.tower, depth, &self.coords)?,
        })
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn square(&self) -> FieldElement {
        self.mul(self)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coords.iter().skip(1).all(|c| c.is_zero()) {
            self.coords[0].as_rational()
        } else {
            None
        }
    }

    pub fn scale(&self, r: &BigRational) -> FieldElement {
        let s = self.tower.from_rational(r.clone());
        self.mul(&s)
    }

    /// Deterministic order on elements of one tower: lexicographic on the
    /// flattened coefficient vector.
    pub fn cmp_flat(&self, rhs: &FieldElement) -> std::cmp::Ordering {
        for (a, b) in self.coords.iter().zip(&rhs.coords) {
            for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
                match x.cmp(y) {
                    std::cmp::Ordering::Equal => continue,
                    o => return o,
                }
            }
        }
        std::cmp::Ordering::Equal
    }

    /// The branch of +-self whose first nonzero coefficient is positive.
    pub fn canonical_branch(&self) -> FieldElement {
        for c in &self.coords {
            for x in &c.coeffs {
                if Zero::is_zero(x) {
                    continue;
                }
                return if x.is_negative() { self.neg() } else { self.clone() };
            }
        }
        self.clone()
    }
}

/// Square root within the current tower; never extends it.
pub fn sqrt_in_tower(a: &FieldElement) -> Option<FieldElement> {
    let depth = a.tower.depth();
    rec_sqrt(&a.tower, depth, &a.coords).map(|coords| {
        FieldElement {
            tower: Arc::clone(&a.tower),
            coords,
        }
        .canonical_branch()
    })
}

/// Square root of a base-field monomial value rho * zeta^j by enlarging
/// the conductor instead of the radical tower: sqrt lands in Q(zeta_2N)
/// (plus the quadratic subfields needed for sqrt(rho)).
fn sqrt_via_conductor(
    tower: &Arc<Tower>,
    a: &FieldElement,
) -> Option<(Arc<Tower>, FieldElement)> {
    if a.coords.iter().skip(1).any(|c| !c.is_zero()) {
        return None;
    }
    let (rho, j) = tower.ctx.monomial_decompose(&a.coords[0])?;
    let mut target = tower.conductor;
    if j % 2 == 1 {
        target = target.checked_mul(2)?;
    }
    // conductor support for sqrt of the square-free part of rho
    let pq = rho.numer() * rho.denom();
    let (_, d) = crate::cyclotomic::int_square_split(&pq)?;
    let mut m = d;
    if m % 2 == 0 {
        target = num_integer::lcm(target, 8);
        m /= 2;
    }
    let mut p = 3u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            target = num_integer::lcm(target, u32::try_from(p).ok()?);
            if target > 4096 {
                return None;
            }
        }
        p += 2;
    }
    if m > 1 {
        target = num_integer::lcm(target, u32::try_from(m).ok()?);
    }
    if target > 4096 {
        return None;
    }
    let ext = tower.with_conductor(target);
    let a2 = embed(a, &ext).ok()?;
    let s = ext.ctx.sqrt(&a2.coords[0])?;
    let mut coords = vec![ext.ctx.zero(); ext.dim()];
    coords[0] = s;
    let root = FieldElement {
        tower: Arc::clone(&ext),
        coords,
    }
    .canonical_branch();
    Some((ext, root))
}

/// sqrt(a): find it in the tower, or in a conductor extension, or as a
/// combination with existing radicals, before adjoining a new radical.
pub fn sqrt_or_adjoin(tower: &Arc<Tower>, a: &FieldElement) -> Result<(Arc<Tower>, FieldElement)> {
    if a.is_zero() {
        return Ok((Arc::clone(tower), tower.zero()));
    }
    let a = embed(a, tower)?;
    if let Some(s) = sqrt_in_tower(&a) {
        return Ok((Arc::clone(tower), s));
    }
    if let Some((ext, s)) = sqrt_via_conductor(tower, &a) {
        return Ok((ext, s));
    }
    // collision with existing radicals: a * r_S a square makes
    // sqrt(a) = sqrt(a r_S) * g_S / r_S expressible
    let depth = tower.depth().min(6);
    for mask in 1u32..(1u32 << depth) {
        if mask.count_ones() > 2 {
            continue;
        }
        let mut r_prod = tower.one();
        let mut g_prod = tower.one();
        for j in 0..depth {
            if mask & (1 << j) != 0 {
                let rad = FieldElement {
                    tower: Arc::clone(tower),
                    coords: {
                        let mut c = tower.radicands[j].clone();
                        c.resize(tower.dim(), tower.ctx.zero());
                        c
                    },
                };
                r_prod = r_prod.mul(&rad);
                g_prod = g_prod.mul(&tower.radical(j));
            }
        }
        let candidate = a.mul(&r_prod);
        let hit = sqrt_in_tower(&candidate)
            .map(|s| (Arc::clone(tower), s))
            .or_else(|| sqrt_via_conductor(tower, &candidate));
        if let Some((ext, s)) = hit {
            let g = embed(&g_prod, &ext)?;
            let r = embed(&r_prod, &ext)?;
            let root = s.mul(&g).div(&r)?.canonical_branch();
            debug_assert_eq!(root.square(), embed(&a, &ext)?);
            return Ok((ext, root));
        }
    }
    tower.adjoin_sqrt(&a)
}

impl Coeff for FieldElement {
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        self.tower.zero()
    }
    fn one_like(&self) -> Self {
        self.tower.one()
    }
    fn add(&self, rhs: &Self) -> Self {
        FieldElement::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        FieldElement::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        FieldElement::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        FieldElement::mul(self, rhs)
    }
    fn inv(&self) -> Result<Self> {
        FieldElement::inv(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn adjoin_sqrt_minus_one_is_noop() {
        let t = Tower::base(4);
        let minus_one = t.from_int(-1);
        let (t2, s) = t.adjoin_sqrt(&minus_one).unwrap();
        assert!(Arc::ptr_eq(&t, &t2));
        assert_eq!(s.square(), t.from_int(-1));
        assert_eq!(s, t.imag_unit());
    }

    #[test]
    fn adjoin_sqrt_perfect_square_is_noop() {
        let t = Tower::base(4);
        let four = t.from_int(4);
        let (t2, s) = t.adjoin_sqrt(&four).unwrap();
        assert!(Arc::ptr_eq(&t, &t2));
        assert_eq!(s, t.from_int(2));
    }

    #[test]
    fn adjoin_sqrt2_then_fourth_root() {
        // Q(i) -> adjoin sqrt(2) -> adjoin sqrt(sqrt(2)); degree 8 over Q.
        let t = Tower::base(4);
        let two = t.from_int(2);
        let (t1, s2) = t.adjoin_sqrt(&two).unwrap();
        assert_eq!(t1.depth(), 1);
        assert_eq!(s2.square(), t1.from_int(2));
        let (t2, s4) = t1.adjoin_sqrt(&s2).unwrap();
        assert_eq!(t2.depth(), 2);
        assert_eq!(t2.degree_over_q(), 8);
        assert_eq!(s4.square().square(), t2.from_int(2));
        // sqrt(sqrt(2)) is found again without extension
        let s2_in_t2 = embed(&s2, &t2).unwrap();
        let found = sqrt_in_tower(&s2_in_t2).unwrap();
        assert_eq!(found.square(), s2_in_t2);
    }

    #[test]
    fn sqrt_absent_without_extension() {
        let t = Tower::base(4);
        let two = t.from_int(2);
        assert!(sqrt_in_tower(&two).is_none());
    }

    #[test]
    fn inverse_exact() {
        let t = Tower::base(4);
        let (t1, s2) = t.adjoin_sqrt(&t.from_int(2)).unwrap();
        // x = 3 + sqrt(2) + i
        let x = t1.from_int(3).add(&s2).add(&t1.imag_unit());
        let xi = x.inv().unwrap();
        assert_eq!(x.mul(&xi), t1.one());
    }

    #[test]
    fn field_axioms_spot() {
        let t = Tower::base(8);
        let (t1, s2) = t.adjoin_sqrt(&t.from_int(3)).unwrap();
        let a = t1.from_int(2).add(&s2);
        let b = t1.imag_unit().add(&t1.from_int(-1));
        let c = s2.mul(&t1.from_int(5));
        let left = a.mul(&b.add(&c));
        let right = a.mul(&b).add(&a.mul(&c));
        assert_eq!(left, right);
        assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn unify_unrelated_towers() {
        let base = Tower::base(4);
        let (ta, sa) = base.adjoin_sqrt(&base.from_int(2)).unwrap();
        let (tb, sb) = base.adjoin_sqrt(&base.from_int(3)).unwrap();
        let (a2, b2) = unify(&sa, &sb).unwrap();
        assert_eq!(a2.square(), a2.tower.from_int(2));
        assert_eq!(b2.square(), b2.tower.from_int(3));
        let prod = a2.mul(&b2);
        assert_eq!(prod.square(), a2.tower.from_int(6));
        let _ = (ta, tb);
    }

    #[test]
    fn scale_by_rational() {
        let t = Tower::base(4);
        let x = t.from_int(3).scale(&(rat(1) / rat(2)));
        assert_eq!(x.add(&x), t.from_int(3));
    }
}
