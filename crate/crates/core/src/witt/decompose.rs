//! Witt decomposition V = Z + W + W* of the diagonal quadratic space with
//! nonzero entries Lambda_i, by repeatedly peeling hyperbolic pairs found
//! through the ternary conic solver.

use std::sync::Arc;

use num_rational::BigRational;

use crate::clifford::QuadSpace;
use crate::error::{Error, Result};
use crate::matrix::RMatrix;
use crate::ratfunc::RatFunc;
use crate::tower::Tower;
use crate::witt::solver::legendre_solve;

/// Bases of W, W*, Z as coordinate vectors over the ambient diagonal basis,
/// with the exact Gram matrix of the combined basis (rows/cols ordered
/// w_1..w_m, w*_1..w*_m, z_1..z_k).
#[derive(Clone)]
pub struct WittDecomposition {
    pub tower: Arc<Tower>,
    pub diag: Vec<RatFunc>,
    pub w_basis: Vec<Vec<RatFunc>>,
    pub w_star_basis: Vec<Vec<RatFunc>>,
    pub z_basis: Vec<Vec<RatFunc>>,
}

fn beta(diag: &[RatFunc], u: &[RatFunc], v: &[RatFunc]) -> RatFunc {
    let tower = &diag
        .first()
        .map(|d| Arc::clone(&d.tower))
        .unwrap_or_else(|| Tower::base(4));
    let mut acc = RatFunc::zero(tower);
    for i in 0..diag.len() {
        if u[i].is_zero() || v[i].is_zero() {
            continue;
        }
        acc = acc.add(&diag[i].mul(&u[i]).mul(&v[i]));
    }
    acc
}

impl WittDecomposition {
    pub fn dim_w(&self) -> usize {
        self.w_basis.len()
    }

    pub fn dim_z(&self) -> usize {
        self.z_basis.len()
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// beta(u, v) with respect to the ambient diagonal form.
    pub fn form(&self, u: &[RatFunc], v: &[RatFunc]) -> RatFunc {
        beta(&self.diag, u, v)
    }

    /// The full basis in Gram order: w's, then w*'s, then z's.
    pub fn full_basis(&self) -> Vec<&Vec<RatFunc>> {
        self.w_basis
            .iter()
            .chain(self.w_star_basis.iter())
            .chain(self.z_basis.iter())
            .collect()
    }

    pub fn gram(&self) -> RMatrix {
        let basis = self.full_basis();
        let k = basis.len();
        let mut g = RMatrix::zero(k, k, &self.tower);
        for r in 0..k {
            for c in 0..k {
                g.set(r, c, self.form(basis[r], basis[c]));
            }
        }
        g
    }

    /// Exact verification of all Gram identities: W and W* isotropic and
    /// dual, Z orthogonal to both, and Z anisotropic of dimension <= 2
    /// (with non-square discriminant when dim Z = 2).
    pub fn verify(&self) -> Result<()> {
        let m = self.dim_w();
        for i in 0..m {
            for j in 0..m {
                if !self.form(&self.w_basis[i], &self.w_basis[j]).is_zero() {
                    return Err(Error::Precondition(format!("beta(w{i}, w{j}) != 0")));
                }
                if !self
                    .form(&self.w_star_basis[i], &self.w_star_basis[j])
                    .is_zero()
                {
                    return Err(Error::Precondition(format!("beta(w*{i}, w*{j}) != 0")));
                }
                let pairing = self.form(&self.w_basis[i], &self.w_star_basis[j]);
                let expect = if i == j {
                    RatFunc::one(&self.tower)
                } else {
                    RatFunc::zero(&self.tower)
                };
                if pairing != expect {
                    return Err(Error::Precondition(format!("beta(w{i}, w*{j}) wrong")));
                }
            }
        }
        for z in &self.z_basis {
            for i in 0..m {
                if !self.form(z, &self.w_basis[i]).is_zero()
                    || !self.form(z, &self.w_star_basis[i]).is_zero()
                {
                    return Err(Error::Precondition("Z not orthogonal to W + W*".into()));
                }
            }
        }
        if self.dim_z() > 2 {
            return Err(Error::Precondition("dim Z > 2".into()));
        }
        if self.dim_z() == 2 {
            let d1 = self.form(&self.z_basis[0], &self.z_basis[0]);
            let d2 = self.form(&self.z_basis[1], &self.z_basis[1]);
            if d1.mul(&d2).is_square_over_closure()? {
                return Err(Error::Precondition(
                    "dim Z = 2 with square discriminant is not anisotropic".into(),
                ));
            }
            if !self.form(&self.z_basis[0], &self.z_basis[1]).is_zero() {
                return Err(Error::Precondition("Z basis not orthogonal".into()));
            }
        }
        for z in &self.z_basis {
            if self.form(z, z).is_zero() {
                return Err(Error::Precondition("isotropic vector left in Z".into()));
            }
        }
        Ok(())
    }
}

/// Decompose the diagonal space given by `diag` (all entries nonzero).
/// Vectors are returned as coordinates over that diagonal basis.
fn decompose_diag(
    diag: &[RatFunc],
    tower: &Arc<Tower>,
) -> Result<(Arc<Tower>, Vec<Vec<RatFunc>>, Vec<Vec<RatFunc>>, Vec<Vec<RatFunc>>)> {
    let n = diag.len();
    let zero = |t: &Arc<Tower>| RatFunc::zero(t);
    match n {
        0 => Ok((Arc::clone(tower), vec![], vec![], vec![])),
        1 => {
            let e0 = vec![RatFunc::one(tower)];
            Ok((Arc::clone(tower), vec![], vec![], vec![e0]))
        }
        2 => {
            let ratio = diag[1].div(&diag[0])?.neg();
            match ratio.sqrt_extending()? {
                None => {
                    // anisotropic plane
                    let e0 = vec![RatFunc::one(tower), zero(tower)];
                    let e1 = vec![zero(tower), RatFunc::one(tower)];
                    Ok((Arc::clone(tower), vec![], vec![], vec![e0, e1]))
                }
                Some((cur, rho)) => {
                    // w = rho e_0 + e_1 is isotropic
                    let w = vec![rho, RatFunc::one(&cur)];
                    let (wstar, _) = dual_partner(diag, &w, &cur)?;
                    Ok((cur, vec![w], vec![wstar], vec![]))
                }
            }
        }
        _ => {
            let sol = legendre_solve(&diag[0], &diag[1], &diag[2])?;
            let cur = Arc::clone(&sol.tower);
            let mut w = vec![sol.x.clone(), sol.y.clone(), sol.z.clone()];
            w.extend(std::iter::repeat(zero(&cur)).take(n - 3));
            let (wstar, _) = dual_partner(diag, &w, &cur)?;
            // orthogonal complement spanned by the weighted cross product of
            // (w, w*) within the first three coordinates, then e_4..e_n
            let i_unit = RatFunc::constant(cur.imag_unit());
            let x = &w;
            let y = &wstar;
            let cross = |a: usize, b: usize| x[a].mul(&y[b]).sub(&x[b].mul(&y[a]));
            let z3 = vec![
                i_unit.mul(&diag[1]).mul(&diag[2]).mul(&cross(1, 2)),
                i_unit.mul(&diag[0]).mul(&diag[2]).mul(&cross(2, 0)),
                i_unit.mul(&diag[0]).mul(&diag[1]).mul(&cross(0, 1)),
            ];
            let mut z_vec = z3;
            z_vec.extend(std::iter::repeat(zero(&cur)).take(n - 3));
            debug_assert!(beta(diag, &z_vec, &w).is_zero());
            debug_assert!(beta(diag, &z_vec, &wstar).is_zero());
            let dz = beta(diag, &z_vec, &z_vec);
            if dz.is_zero() {
                return Err(Error::Precondition(
                    "degenerate complement in Witt step".into(),
                ));
            }
            // recurse on the diagonal space (z, e_4, ..., e_n)
            let mut sub_diag = vec![dz];
            for d in diag.iter().skip(3) {
                sub_diag.push(d.clone());
            }
            let (cur, sub_w, sub_ws, sub_z) = decompose_diag(&sub_diag, &cur)?;
            // lift a sub-coordinate vector to ambient coordinates
            let lift = |v: &Vec<RatFunc>| -> Vec<RatFunc> {
                let mut out = vec![RatFunc::zero(&cur); n];
                for (k, c) in v.iter().enumerate() {
                    if k == 0 {
                        for t in 0..n {
                            out[t] = out[t].add(&c.mul(&z_vec[t]));
                        }
                    } else {
                        out[k + 2] = out[k + 2].add(c);
                    }
                }
                out
            };
            let mut w_list = vec![w];
            w_list.extend(sub_w.iter().map(&lift));
            let mut ws_list = vec![wstar];
            ws_list.extend(sub_ws.iter().map(&lift));
            let z_list: Vec<Vec<RatFunc>> = sub_z.iter().map(&lift).collect();
            Ok((cur, w_list, ws_list, z_list))
        }
    }
}

/// The dual partner w* of an isotropic w: pick x with beta(w, x) = 1
/// supported on a single coordinate j with w_j != 0, then
/// w* = x - beta(x,x)/2 w.
fn dual_partner(
    diag: &[RatFunc],
    w: &[RatFunc],
    tower: &Arc<Tower>,
) -> Result<(Vec<RatFunc>, usize)> {
    let n = diag.len();
    let j = (0..n)
        .find(|&j| !w[j].is_zero())
        .ok_or_else(|| Error::Precondition("zero isotropic vector".into()))?;
    // x = e_j / (w_j Lambda_j)
    let scale = w[j].mul(&diag[j]).inv()?;
    let mut x = vec![RatFunc::zero(tower); n];
    x[j] = scale;
    let bxx = beta(diag, &x, &x);
    let half = RatFunc::one(tower)
        .scale_rational(&BigRational::new(1.into(), 2.into()))
        .mul(&bxx);
    let wstar: Vec<RatFunc> = (0..n).map(|t| x[t].sub(&half.mul(&w[t]))).collect();
    Ok((wstar, j))
}

/// Witt-decompose the nondegenerate quadratic space (all caps nonzero).
pub fn witt_decompose(space: &QuadSpace) -> Result<WittDecomposition> {
    if space.caps.iter().any(|c| c.is_zero()) {
        return Err(Error::Precondition(
            "witt_decompose requires a nondegenerate space; split the kernel first".into(),
        ));
    }
    let (tower, w_basis, w_star_basis, z_basis) = decompose_diag(&space.caps, &space.tower)?;
    let diag: Vec<RatFunc> = space.caps.clone();
    let wd = WittDecomposition {
        tower,
        diag,
        w_basis,
        w_star_basis,
        z_basis,
    };
    wd.verify()?;
    Ok(wd)
}

impl RatFunc {
    /// Square root that may extend the tower by a constant radical; None if
    /// the value is not a square in C(q) at all.
    pub fn sqrt_extending(&self) -> Result<Option<(Arc<Tower>, RatFunc)>> {
        if self.is_zero() {
            return Ok(Some((Arc::clone(&self.tower), self.clone())));
        }
        if !self.is_square_over_closure()? {
            return Ok(None);
        }
        if let Some(s) = self.sqrt() {
            return Ok(Some((Arc::clone(&self.tower), s)));
        }
        // the polynomial part is square; only the leading constant needs a
        // new radical
        let g = self.num.mul(&self.den);
        let (lead, parts) = g.squarefree_decomposition()?;
        let (cur, s) = crate::tower::sqrt_or_adjoin(&self.tower, &lead)?;
        let mut root = crate::poly::Poly::constant(s);
        for (p, e) in &parts {
            debug_assert!(e % 2 == 0);
            root = root.mul(&p.pow((*e as u32) / 2));
        }
        let den = crate::ratfunc::embed_poly(&self.den, &cur)?;
        let root = crate::ratfunc::embed_poly(&root, &cur)?;
        let out = RatFunc::from_parts(root, den);
        Ok(Some((cur, out)))
    }
}
