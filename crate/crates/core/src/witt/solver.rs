//! Nontrivial solutions of A X^2 + B Y^2 + C Z^2 = 0 over C(q).
//!
//! The solver clears inputs to square-free polynomials, reduces the
//! variable (q -> q^2 -> ... and the symmetric combination v + v^-1 where
//! the inputs allow it), and runs a residue descent on the resulting conic:
//! the modulus is split into linear factors, a square root of the other
//! coefficient is interpolated through the roots by the Chinese remainder
//! theorem, and the degree drops until a constant is reached. Splitting is
//! supported for polynomials whose roots are roots of unity, sums
//! zeta + zeta^-1, or expressible by the quadratic formula; anything else
//! reports UnsupportedSplitting rather than approximating.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Coeff, Poly};
use crate::ratfunc::{embed_poly, RatFunc};
use crate::tower::{sqrt_or_adjoin, FieldElement, Tower};

type FPoly = Poly<FieldElement>;

const PROBE_LIMIT: u32 = 72;

#[derive(Clone, Debug)]
pub struct LegendreSolution {
    pub x: RatFunc,
    pub y: RatFunc,
    pub z: RatFunc,
    pub tower: Arc<Tower>,
}

/// A = A1 * M^2 with A1 square-free. Public form of the decomposition on
/// polynomials over the tower.
pub fn squarefree_part_poly(a: &FPoly) -> Result<(FPoly, FPoly)> {
    if a.is_zero() {
        return Err(Error::Precondition("square-free part of zero".into()));
    }
    let one = a.leading().unwrap().one_like();
    a.squarefree_part(&one)
}

fn fe_pow(x: &FieldElement, k: u32) -> FieldElement {
    let mut acc = x.tower.one();
    for _ in 0..k {
        acc = acc.mul(x);
    }
    acc
}

/// x^d - 1 over the given tower.
fn unity_poly(tower: &Arc<Tower>, d: u32) -> FPoly {
    let mut coeffs = vec![tower.zero(); d as usize + 1];
    coeffs[0] = tower.from_int(-1);
    coeffs[d as usize] = tower.one();
    Poly::from_coeffs(coeffs)
}

/// C_d with C_0 = 2, C_1 = v, C_d = v C_{d-1} - C_{d-2}; the image of
/// v^d + v^-d under t = v + v^-1.
fn chebyshev_c(tower: &Arc<Tower>, d: u32) -> FPoly {
    let mut c0 = Poly::constant(tower.from_int(2));
    if d == 0 {
        return c0;
    }
    let v = Poly::from_coeffs(vec![tower.zero(), tower.one()]);
    let mut c1 = v.clone();
    for _ in 1..d {
        let next = v.mul(&c1).sub(&c0);
        c0 = c1;
        c1 = next;
    }
    c1
}

/// Lagrange interpolation through distinct nodes.
fn lagrange(points: &[(FieldElement, FieldElement)], tower: &Arc<Tower>) -> Result<FPoly> {
    let mut acc = FPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut numer = Poly::constant(tower.one());
        let mut denom = tower.one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            numer = numer.mul(&Poly::from_coeffs(vec![xj.neg(), tower.one()]));
            denom = denom.mul(&xi.sub(xj));
        }
        let scale = yi.div(&denom)?;
        acc = acc.add(&numer.scale(&scale));
    }
    Ok(acc)
}

/// Split a polynomial into a leading constant and a full list of roots in
/// (an extension of) the tower. Roots of unity and their symmetric sums are
/// probed by gcds; a residual factor of degree <= 2 is closed by the
/// quadratic formula; higher residual degree is an unsupported splitting.
pub fn split_roots(
    p: &FPoly,
    tower: &Arc<Tower>,
) -> Result<(Arc<Tower>, FieldElement, Vec<FieldElement>)> {
    if p.is_zero() {
        return Err(Error::Precondition("cannot split zero".into()));
    }
    let mut cur = Arc::clone(tower);
    let mut rem = embed_poly(p, &cur)?;
    let lead = rem.leading().unwrap().clone();
    let mut roots: Vec<FieldElement> = Vec::new();

    // roots at zero
    while rem.deg().unwrap_or(0) >= 1 && rem.coeffs[0].is_zero() {
        roots.push(cur.zero());
        rem = rem.deflate(&cur.zero())?;
    }

    let extract_at = |rem: &mut FPoly,
                          cur: &mut Arc<Tower>,
                          roots: &mut Vec<FieldElement>,
                          cand: FieldElement|
     -> Result<()> {
        loop {
            if rem.deg().unwrap_or(0) == 0 {
                return Ok(());
            }
            let val = rem.eval(&cand);
            if !val.is_zero() {
                return Ok(());
            }
            roots.push(cand.clone());
            *rem = rem.deflate(&cand)?;
            let _ = &cur;
        }
    };

    for d in 1..=PROBE_LIMIT {
        if rem.deg().unwrap_or(0) <= 2 {
            break;
        }
        // roots of unity of order dividing d
        let g = rem.gcd(&unity_poly(&cur, d))?;
        if g.deg().unwrap_or(0) >= 1 {
            let next = cur.with_conductor(d);
            rem = embed_poly(&rem, &next)?;
            for r in roots.iter_mut() {
                *r = crate::tower::embed(r, &next)?;
            }
            cur = next;
            let zeta = cur.zeta(d)?;
            for j in 0..d {
                let cand = fe_pow(&zeta, j);
                extract_at(&mut rem, &mut cur, &mut roots, cand)?;
            }
        }
        if rem.deg().unwrap_or(0) <= 2 {
            break;
        }
        // symmetric sums zeta^j + zeta^-j
        let g = rem.gcd(&chebyshev_c(&cur, d).sub(&Poly::constant(cur.from_int(2))))?;
        if g.deg().unwrap_or(0) >= 1 {
            let next = cur.with_conductor(d);
            rem = embed_poly(&rem, &next)?;
            for r in roots.iter_mut() {
                *r = crate::tower::embed(r, &next)?;
            }
            cur = next;
            let zeta = cur.zeta(d)?;
            for j in 0..=d / 2 {
                let zj = fe_pow(&zeta, j);
                let cand = zj.add(&zj.inv()?);
                extract_at(&mut rem, &mut cur, &mut roots, cand)?;
            }
        }
    }

    match rem.deg().unwrap_or(0) {
        0 => {}
        1 => {
            let root = rem.coeffs[0].neg().div(&rem.coeffs[1])?;
            roots.push(root);
        }
        2 => {
            let a = rem.coeffs[2].clone();
            let b = rem.coeffs[1].clone();
            let c = rem.coeffs[0].clone();
            let disc = b.mul(&b).sub(&a.mul(&c).scale(&num_rational::BigRational::from_integer(4.into())));
            let (next, s) = sqrt_or_adjoin(&cur, &disc)?;
            cur = next;
            let two_a_inv = a.add(&a).inv()?;
            let r1 = b.neg().add(&s).mul(&two_a_inv);
            let r2 = b.neg().sub(&s).mul(&two_a_inv);
            roots.push(r1);
            roots.push(r2);
        }
        degree => return Err(Error::UnsupportedSplitting { degree }),
    }
    for r in roots.iter_mut() {
        *r = crate::tower::embed(r, &cur)?;
    }
    Ok((cur, lead, roots))
}

/// Square roots of `q1` at the given nodes, interpolated into a single
/// polynomial y with y^2 = q1 at every node. Branches are fixed by the
/// canonical-sign rule; `flips` toggles the sign at the matching node
/// index, giving deterministic alternate branches for retries.
fn crt_sqrt_at_nodes(
    q1: &FPoly,
    nodes: &[FieldElement],
    tower: &Arc<Tower>,
    flips: u32,
) -> Result<(Arc<Tower>, FPoly)> {
    let mut cur = Arc::clone(tower);
    let mut values: Vec<(FieldElement, FieldElement)> = Vec::with_capacity(nodes.len());
    for (idx, z) in nodes.iter().enumerate() {
        let z = crate::tower::embed(z, &cur)?;
        let val = q1.eval_or(&z, cur.zero());
        let (next, y) = sqrt_or_adjoin(&cur, &val)?;
        let y = if idx < 32 && flips & (1 << idx) != 0 {
            y.neg()
        } else {
            y
        };
        cur = next;
        values.push((z, y));
    }
    let values: Vec<(FieldElement, FieldElement)> = values
        .into_iter()
        .map(|(z, y)| {
            Ok((
                crate::tower::embed(&z, &cur)?,
                crate::tower::embed(&y, &cur)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let interp = lagrange(&values, &cur)?;
    Ok((cur, interp))
}

/// y with y^2 = R (mod S), deg y < deg S, for square-free S whose roots the
/// splitter can reach. The spare branch choices are made canonically.
pub fn quadratic_residue_mod(
    r: &FPoly,
    s: &FPoly,
    tower: &Arc<Tower>,
) -> Result<(Arc<Tower>, FPoly)> {
    let (cur, _lead, roots) = split_roots(s, tower)?;
    let r = embed_poly(r, &cur)?;
    let (cur, y) = crt_sqrt_at_nodes(&r, &roots, &cur, 0)?;
    // verify y^2 = R mod S
    let s_cur = embed_poly(s, &cur)?;
    let y2 = y.mul(&y);
    let (_, check) = y2.sub(&embed_poly(&r, &cur)?).divrem(&s_cur)?;
    if !check.is_zero() {
        return Err(Error::Precondition(
            "quadratic residue verification failed (S not square-free?)".into(),
        ));
    }
    Ok((cur, y))
}

/// Core descent on the conic P X^2 + Q Y^2 = Z^2 with P, Q square-free.
/// Returns polynomial witnesses over a possibly extended tower, verified
/// exactly.
fn conic_core(
    p: &FPoly,
    q: &FPoly,
    tower: &Arc<Tower>,
    flips: u32,
) -> Result<(Arc<Tower>, FPoly, FPoly, FPoly)> {
    // constant coefficient: direct square root
    if p.is_constant() {
        let c = p.coeffs[0].clone();
        let (cur, s) = sqrt_or_adjoin(tower, &c)?;
        return Ok((
            cur.clone(),
            Poly::constant(cur.one()),
            Poly::zero(),
            Poly::constant(s),
        ));
    }
    if q.is_constant() {
        let c = q.coeffs[0].clone();
        let (cur, s) = sqrt_or_adjoin(tower, &c)?;
        return Ok((
            cur.clone(),
            Poly::zero(),
            Poly::constant(cur.one()),
            Poly::constant(s),
        ));
    }
    if p.degi() < q.degi() {
        let (cur, y, x, z) = conic_core(q, p, tower, flips)?;
        return Ok((cur, x, y, z));
    }
    // split the modulus and take square roots of Q at its roots
    let (cur0, _lead, roots) = split_roots(p, tower)?;
    let p0 = embed_poly(p, &cur0)?;
    let q0 = embed_poly(q, &cur0)?;
    let (cur, c1) = crt_sqrt_at_nodes(&q0, &roots, &cur0, flips)?;
    let p = embed_poly(&p0, &cur)?;
    let q = embed_poly(&q0, &cur)?;
    let t = c1.mul(&c1).sub(&q).exact_div(&p)?;
    if t.is_zero() {
        // Q = C1^2 exactly
        let one = Poly::constant(cur.one());
        return Ok((cur, Poly::zero(), one, c1));
    }
    let (a1, m) = squarefree_part_poly(&t)?;
    let (cur, x1, y1, z1) = conic_core(&a1, &q, &cur, flips)?;
    let a1 = embed_poly(&a1, &cur)?;
    let m = embed_poly(&m, &cur)?;
    let c1 = embed_poly(&c1, &cur)?;
    let q = embed_poly(&q, &cur)?;
    let p = embed_poly(&p, &cur)?;
    // lift: (A1 X1 M, C1 Y1 + Z1, Z1 C1 + Q Y1)
    let x = a1.mul(&x1).mul(&m);
    let y = c1.mul(&y1).add(&z1);
    let z = z1.mul(&c1).add(&q.mul(&y1));
    let check = p.mul(&x.mul(&x)).add(&q.mul(&y.mul(&y))).sub(&z.mul(&z));
    if !check.is_zero() {
        return Err(Error::Precondition("conic lift verification failed".into()));
    }
    if x.is_zero() && y.is_zero() && z.is_zero() {
        return Err(Error::Precondition("conic produced a trivial point".into()));
    }
    Ok((cur, x, y, z))
}

/// Solve P X^2 + Q Y^2 = Z^2 for arbitrary nonzero polynomials, stripping
/// square parts into the witnesses. When the descent runs into a residual
/// it cannot split, a few alternate residue branches are tried before the
/// error is reported.
fn conic_solve(
    p: &FPoly,
    q: &FPoly,
    tower: &Arc<Tower>,
) -> Result<(Arc<Tower>, FPoly, FPoly, FPoly)> {
    let one = tower.one();
    let (p1, mp) = p.squarefree_part(&one)?;
    let (q1, mq) = q.squarefree_part(&one)?;
    let mut attempt = conic_core(&p1, &q1, tower, 0);
    if matches!(attempt, Err(Error::UnsupportedSplitting { .. })) {
        for flips in [1u32, 2, 3, 5, 6] {
            let retry = conic_core(&p1, &q1, tower, flips);
            if retry.is_ok() {
                attempt = retry;
                break;
            }
            if !matches!(retry, Err(Error::UnsupportedSplitting { .. })) {
                attempt = retry;
                break;
            }
            attempt = retry;
        }
    }
    let (cur, x, y, z) = attempt?;
    let mp = embed_poly(&mp, &cur)?;
    let mq = embed_poly(&mq, &cur)?;
    // p (x mq)^2 + q (y mp)^2 = (z mp mq)^2, up to the stripped squares:
    // p = p1 mp^2, q = q1 mq^2.
    let x = x.mul(&mq);
    let y = y.mul(&mp);
    let z = z.mul(&mp).mul(&mq);
    Ok((cur, x, y, z))
}

/// The square class of a rational function: f = rep * mult^2 with rep a
/// polynomial that is square-free apart from a possible single factor q.
fn square_class(f: &RatFunc) -> Result<(FPoly, RatFunc)> {
    if f.is_zero() {
        return Err(Error::Precondition("square class of zero".into()));
    }
    let tower = Arc::clone(&f.tower);
    // f = num/den = (num * den) * (1/den)^2
    let g = f.num.mul(&f.den);
    let mut mult = RatFunc::from_poly(f.den.clone(), &tower).inv()?;
    // strip the q-power
    let k = g
        .coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero poly");
    let mut h = Poly::from_coeffs(g.coeffs[k..].to_vec());
    if k / 2 > 0 {
        mult = mult.mul(&RatFunc::q_pow(&tower, (k / 2) as i64));
    }
    let (h1, m) = h.squarefree_part(&tower.one())?;
    mult = mult.mul(&RatFunc::from_poly(m, &tower));
    h = h1;
    if k % 2 == 1 {
        // reattach a single factor q
        h = h.mul(&Poly::from_coeffs(vec![tower.zero(), tower.one()]));
    }
    Ok((h, mult))
}

fn is_palindromic(p: &FPoly) -> bool {
    let d = match p.deg() {
        Some(d) => d,
        None => return false,
    };
    (0..=d / 2).all(|i| p.coeffs[i] == p.coeffs[d - i])
}

/// p palindromic of even degree 2d: p = v^d * sum c_{d+k} (v^k + v^-k),
/// rewritten as a polynomial in t = v + v^-1.
fn to_symmetric_variable(p: &FPoly, tower: &Arc<Tower>) -> Option<(FPoly, usize)> {
    let deg = p.deg()?;
    if deg % 2 != 0 || !is_palindromic(p) {
        return None;
    }
    let d = deg / 2;
    let mut acc = Poly::constant(p.coeffs[d].clone());
    for k in 1..=d {
        acc = acc.add(&chebyshev_c(tower, k as u32).scale(&p.coeffs[d + k]));
    }
    Some((acc, d))
}

struct ReducedPair {
    p: FPoly,
    q: FPoly,
    /// image of the reduced variable in C(q)
    var_image: RatFunc,
    mult_p: RatFunc,
    mult_q: RatFunc,
}

/// Shrink the pair by substituting v -> v^2 while both polynomials live in
/// even exponents, then pass to t = v + v^-1 when both are palindromic.
fn reduce_pair(p: FPoly, q: FPoly, tower: &Arc<Tower>) -> ReducedPair {
    let mut p = p;
    let mut q = q;
    let mut mult_p = RatFunc::one(tower);
    let mut mult_q = RatFunc::one(tower);
    let mut level = 0u32; // v = q^(2^level)
    loop {
        match (p.try_deflate_var(2), q.try_deflate_var(2)) {
            (Some(p2), Some(q2)) => {
                p = p2;
                q = q2;
                level += 1;
            }
            _ => break,
        }
    }
    let mut var_image = RatFunc::q_pow(tower, 1 << level);
    // symmetric-variable step
    let tp = to_symmetric_variable(&p, tower);
    let tq = to_symmetric_variable(&q, tower);
    if let (Some((pt, dp)), Some((qt, dq))) = (tp, tq) {
        let v_ok = level > 0 || (dp % 2 == 0 && dq % 2 == 0);
        if v_ok {
            // v^dp is a square in C(q) whenever v = q^(2^level) with
            // level > 0; for level = 0 we require even exponents.
            let half = |d: usize| -> RatFunc {
                let e = ((1i64 << level) * d as i64) / 2;
                RatFunc::q_pow(tower, e)
            };
            mult_p = mult_p.mul(&half(dp));
            mult_q = mult_q.mul(&half(dq));
            p = pt;
            q = qt;
            var_image = var_image.add(&var_image.inv().expect("q^k nonzero"));
        }
    }
    ReducedPair {
        p,
        q,
        var_image,
        mult_p,
        mult_q,
    }
}

/// Evaluate a polynomial at a rational-function argument.
fn poly_at_ratfunc(p: &FPoly, x: &RatFunc) -> RatFunc {
    let tower = &x.tower;
    if p.is_zero() {
        return RatFunc::zero(tower);
    }
    let mut acc = RatFunc::constant(p.coeffs.last().unwrap().clone());
    for c in p.coeffs.iter().rev().skip(1) {
        acc = acc.mul(x).add(&RatFunc::constant(c.clone()));
    }
    acc
}

/// Replace the ternary form by a pairwise-coprime square-free one, moving
/// shared factors to the third slot and squares into per-coordinate
/// multipliers. A solution u of the reduced form maps back through
/// coordinate-wise multiplication.
fn minimize_ternary(
    reps: &mut [FPoly; 3],
    coord_mults: &mut [RatFunc; 3],
    tower: &Arc<Tower>,
) -> Result<()> {
    loop {
        let mut changed = false;
        for (i, j, k) in [(0usize, 1usize, 2usize), (0, 2, 1), (1, 2, 0)] {
            let g = reps[i].gcd(&reps[j])?;
            if g.deg().unwrap_or(0) == 0 {
                continue;
            }
            // <gA', gB', C> -> <A', B', gC>; new solutions (x,y,z) pull back
            // with the receiving coordinate scaled by g
            reps[i] = reps[i].exact_div(&g)?;
            reps[j] = reps[j].exact_div(&g)?;
            reps[k] = reps[k].mul(&g);
            coord_mults[k] = coord_mults[k].mul(&RatFunc::from_poly(g, tower));
            // keep the receiver square-free
            let (s, m) = reps[k].squarefree_part(&tower.one())?;
            if m.deg().unwrap_or(0) > 0 {
                reps[k] = s;
                coord_mults[k] = coord_mults[k].mul(&RatFunc::from_poly(m, tower));
            }
            changed = true;
        }
        if !changed {
            return Ok(());
        }
    }
}

/// A nontrivial exact solution of A X^2 + B Y^2 + C Z^2 = 0.
///
/// The inputs are cleared to a pairwise-coprime square-free triple, the
/// conic pairing with the smallest reduced degrees is chosen, and the
/// result is verified by substitution before it is returned; towers are
/// extended by square roots of constants as the descent requires.
pub fn legendre_solve(a: &RatFunc, b: &RatFunc, c: &RatFunc) -> Result<LegendreSolution> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::Precondition(
            "legendre_solve requires nonzero coefficients".into(),
        ));
    }
    let tower = Arc::clone(&a.tower);

    // fast paths: a two-coordinate solution when a ratio is a square
    if let Some(rho) = b.div(a)?.neg().sqrt() {
        return finish(a, b, c, rho, RatFunc::one(&tower), RatFunc::zero(&tower));
    }
    if let Some(rho) = c.div(a)?.neg().sqrt() {
        return finish(a, b, c, rho, RatFunc::zero(&tower), RatFunc::one(&tower));
    }
    if let Some(rho) = c.div(b)?.neg().sqrt() {
        return finish(a, b, c, RatFunc::zero(&tower), rho, RatFunc::one(&tower));
    }

    // square classes and minimization
    let (pa, ma) = square_class(a)?;
    let (pb, mb) = square_class(b)?;
    let (pc, mc) = square_class(c)?;
    let mut reps = [pa, pb, pc];
    let one = RatFunc::one(&tower);
    let mut coord_mults = [one.clone(), one.clone(), one.clone()];
    minimize_ternary(&mut reps, &mut coord_mults, &tower)?;

    // choose the rotation whose conic pair reduces to the smallest degrees
    let rotations = [(0usize, 1usize, 2usize), (1, 2, 0), (2, 0, 1)];
    let mut best: Option<(usize, ReducedPair, isize)> = None;
    for (idx, (r0, r1, r2)) in rotations.iter().enumerate() {
        let p = reps[*r0].mul(&reps[*r2]);
        let q = reps[*r1].mul(&reps[*r2]);
        let red = reduce_pair(p, q, &tower);
        let score = red.p.degi().max(red.q.degi());
        if best.as_ref().map_or(true, |(_, _, s)| score < *s) {
            best = Some((idx, red, score));
        }
    }
    let (rot_idx, red, _) = best.expect("three rotations");
    let (r0, r1, r2) = rotations[rot_idx];

    let (cur, x_v, y_v, z_v) = conic_solve(&red.p, &red.q, &tower)?;
    let x_q = poly_at_ratfunc(&x_v, &red.var_image.clone());
    let y_q = poly_at_ratfunc(&y_v, &red.var_image.clone());
    let z_q = poly_at_ratfunc(&z_v, &red.var_image);
    // p_{r0} (x_q/rp)^2 + p_{r1} (y_q/rq)^2 + p_{r2} (i z_q / p_{r2})^2 = 0,
    // scaled projectively by rp rq p_{r2}
    let rp = &red.mult_p;
    let rq = &red.mult_q;
    let p_r2 = RatFunc::from_poly(reps[r2].clone(), &tower);
    let i_unit = RatFunc::constant(cur.imag_unit());
    let mut u = [
        RatFunc::zero(&tower),
        RatFunc::zero(&tower),
        RatFunc::zero(&tower),
    ];
    u[r0] = x_q.mul(rq).mul(&p_r2);
    u[r1] = y_q.mul(rp).mul(&p_r2);
    u[r2] = i_unit.mul(&z_q).mul(rp).mul(rq);
    // undo minimization and square-class multipliers
    let x = u[0].mul(&coord_mults[0]).div(&ma)?;
    let y = u[1].mul(&coord_mults[1]).div(&mb)?;
    let z = u[2].mul(&coord_mults[2]).div(&mc)?;
    finish(a, b, c, x, y, z)
}

fn finish(
    a: &RatFunc,
    b: &RatFunc,
    c: &RatFunc,
    x: RatFunc,
    y: RatFunc,
    z: RatFunc,
) -> Result<LegendreSolution> {
    if x.is_zero() && y.is_zero() && z.is_zero() {
        return Err(Error::Precondition("trivial legendre solution".into()));
    }
    let total = a
        .mul(&x.mul(&x))
        .add(&b.mul(&y.mul(&y)))
        .add(&c.mul(&z.mul(&z)));
    if !total.is_zero() {
        return Err(Error::Precondition(
            "legendre solution failed exact verification".into(),
        ));
    }
    let tower = total.tower;
    let x = embed_rf(&x, &tower);
    let y = embed_rf(&y, &tower);
    let z = embed_rf(&z, &tower);
    Ok(LegendreSolution { x, y, z, tower })
}

fn embed_rf(f: &RatFunc, tower: &Arc<Tower>) -> RatFunc {
    RatFunc::from_parts(
        embed_poly(&f.num, tower).expect("embed"),
        embed_poly(&f.den, tower).expect("embed"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::{lambda_cap, q_int};

    fn base() -> Arc<Tower> {
        Tower::base(4)
    }

    #[test]
    fn split_cyclotomic_roots() {
        let t = base();
        // q^4 - 1 splits with conductor 4
        let p = unity_poly(&t, 4);
        let (cur, lead, roots) = split_roots(&p, &t).unwrap();
        assert_eq!(lead, t.one());
        assert_eq!(roots.len(), 4);
        for r in &roots {
            assert!(p
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul(&fe_pow(&crate::tower::embed(r, &cur).unwrap(), i as u32)))
                .fold(cur.zero(), |acc, v| acc.add(&v))
                .is_zero());
        }
    }

    #[test]
    fn split_quadratic_by_formula() {
        let t = base();
        // v^2 - 2: roots +-sqrt(2) via adjunction
        let p = Poly::from_coeffs(vec![t.from_int(-2), t.zero(), t.one()]);
        let (cur, _, roots) = split_roots(&p, &t).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].square(), cur.from_int(2));
    }

    #[test]
    fn split_unsupported() {
        let t = base();
        // v^3 - 2 has no roots in the supported class
        let p = Poly::from_coeffs(vec![t.from_int(-2), t.zero(), t.zero(), t.one()]);
        match split_roots(&p, &t) {
            Err(Error::UnsupportedSplitting { degree }) => assert_eq!(degree, 3),
            other => panic!("expected unsupported splitting, got {other:?}"),
        }
    }

    #[test]
    fn residue_examples() {
        let t = base();
        // R = 4, S = v - 1 -> y = 2
        let r = Poly::constant(t.from_int(4));
        let s = Poly::from_coeffs(vec![t.from_int(-1), t.one()]);
        let (_, y) = quadratic_residue_mod(&r, &s, &t).unwrap();
        assert_eq!(y, Poly::constant(t.from_int(2)));
        // R = v, S = v - 9 -> y = 3
        let r = Poly::from_coeffs(vec![t.zero(), t.one()]);
        let s = Poly::from_coeffs(vec![t.from_int(-9), t.one()]);
        let (_, y) = quadratic_residue_mod(&r, &s, &t).unwrap();
        assert_eq!(y, Poly::constant(t.from_int(3)));
    }

    #[test]
    fn residue_for_t2_minus_2() {
        // R = t, S = t^2 - 2: y^2 = t mod (t^2 - 2)
        let t = base();
        let r = Poly::from_coeffs(vec![t.zero(), t.one()]);
        let s = Poly::from_coeffs(vec![t.from_int(-2), t.zero(), t.one()]);
        let (cur, y) = quadratic_residue_mod(&r, &s, &t).unwrap();
        let y2 = y.mul(&y);
        let (_, rem) = y2.sub(&embed_poly(&r, &cur).unwrap()).divrem(&embed_poly(&s, &cur).unwrap()).unwrap();
        assert!(rem.is_zero());
        assert!(y.deg() == Some(1));
    }

    #[test]
    fn legendre_constants() {
        let t = base();
        let one = RatFunc::one(&t);
        let sol = legendre_solve(&one, &one, &one).unwrap();
        assert!(!(sol.x.is_zero() && sol.y.is_zero() && sol.z.is_zero()));
    }

    #[test]
    fn legendre_equal_pair_fast_path() {
        let t = base();
        let l2 = lambda_cap(&t, 2);
        let l3 = lambda_cap(&t, 3);
        let sol = legendre_solve(&l2, &l2, &l3).unwrap();
        // fast path: (i, 1, 0)-type solution with no tower growth
        assert!(sol.z.is_zero());
        assert_eq!(sol.tower.depth(), 0);
    }

    #[test]
    fn legendre_421() {
        let t = base();
        let sol = legendre_solve(
            &lambda_cap(&t, 4),
            &lambda_cap(&t, 2),
            &lambda_cap(&t, 1),
        )
        .unwrap();
        assert!(!sol.x.is_zero() || !sol.y.is_zero() || !sol.z.is_zero());
    }

    #[test]
    fn legendre_qints_with_repeat() {
        let t = base();
        let sol = legendre_solve(&q_int(&t, 3), &q_int(&t, 2), &q_int(&t, 2));
        assert!(sol.is_ok());
    }

    #[test]
    fn legendre_lambda_sweep_small() {
        let t = base();
        for (a, b, c) in [(2i64, 1, 1), (3, 2, 1), (4, 3, 1), (4, 3, 2), (3, 1, 1)] {
            let sol = legendre_solve(
                &lambda_cap(&t, a),
                &lambda_cap(&t, b),
                &lambda_cap(&t, c),
            );
            assert!(sol.is_ok(), "triple ({a},{b},{c}): {:?}", sol.err());
        }
    }
}
