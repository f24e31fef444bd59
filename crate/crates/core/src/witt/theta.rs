//! Explicit matrices for the simple Cliff_q(lambda)-module, built by
//! peeling hyperbolic pairs of the Witt decomposition: v = z + r w + s w*
//! maps to [[z, r], [s, -z]] over the Clifford algebra of the complement,
//! with the residual rank-one or rank-two algebra realized on a doubled
//! basis. Parity is tracked per basis vector and the final basis is sorted
//! even-first, so every generator matrix exchanges the two halves.

use std::sync::Arc;

use crate::clifford::QuadSpace;
use crate::error::{Error, Result};
use crate::matrix::RMatrix;
use crate::ratfunc::RatFunc;
use crate::tower::Tower;
use crate::weights::Weight;
use crate::witt::decompose::{witt_decompose, WittDecomposition};

/// Action matrices of the generators on a graded simple module. Matrices
/// act on column vectors; the basis is ordered with all even vectors first.
#[derive(Clone)]
pub struct ModuleMatrices {
    pub tower: Arc<Tower>,
    pub dim_even: usize,
    pub dim_odd: usize,
    /// one matrix per ambient generator index
    pub action: Vec<RMatrix>,
    /// coordinates of each generator over the Witt basis (w's, w*'s, z's),
    /// for the nondegenerate indices; empty when no Witt data was used
    pub witt_coords: Vec<Vec<RatFunc>>,
}

impl ModuleMatrices {
    pub fn total_dim(&self) -> usize {
        self.dim_even + self.dim_odd
    }
}

/// Matrices for the Witt-basis vectors themselves (order w's, w*'s, z's)
/// plus the parity of each module basis vector (0 even, 1 odd).
fn theta_rec(
    wd: &WittDecomposition,
    w: &[Vec<RatFunc>],
    ws: &[Vec<RatFunc>],
    z: &[Vec<RatFunc>],
    tower: &Arc<Tower>,
) -> Result<(Vec<RMatrix>, Vec<u32>)> {
    if w.is_empty() {
        return match z.len() {
            0 => Ok((Vec::new(), vec![0])),
            1 => {
                let d = wd.form(&z[0], &z[0]);
                let mut m = RMatrix::zero(2, 2, tower);
                m.set(0, 1, d);
                m.set(1, 0, RatFunc::one(tower));
                Ok((vec![m], vec![0, 1]))
            }
            2 => {
                let d1 = wd.form(&z[0], &z[0]);
                let d2 = wd.form(&z[1], &z[1]);
                // basis (1, z1 z2, z1, z1 z1 z2); even part is the quadratic
                // extension by (z1 z2)^2 = -d1 d2
                let mut m1 = RMatrix::zero(4, 4, tower);
                m1.set(2, 0, RatFunc::one(tower));
                m1.set(3, 1, RatFunc::one(tower));
                m1.set(0, 2, d1.clone());
                m1.set(1, 3, d1.clone());
                let mut m2 = RMatrix::zero(4, 4, tower);
                m2.set(3, 0, d1.inv()?);
                m2.set(2, 1, d2.neg());
                m2.set(1, 2, RatFunc::one(tower).neg());
                m2.set(0, 3, d1.mul(&d2));
                Ok((vec![m1, m2], vec![0, 0, 1, 1]))
            }
            k => Err(Error::Precondition(format!("dim Z = {k} > 2"))),
        };
    }
    let (sub_mats, sub_par) = theta_rec(wd, &w[1..], &ws[1..], z, tower)?;
    let s = sub_par.len();
    let dim = 2 * s;
    // basis: (top_0..top_{s-1}, bot_0..bot_{s-1});
    // Psi(z + r w + s w*) = [[S(z), r I], [2 s I, -S(z)]], so that
    // Psi(v)^2 = beta(z,z) + 2 r s = B(v, v)
    let block = |zmat: Option<&RMatrix>, r: Option<&RatFunc>, sc: Option<&RatFunc>| -> RMatrix {
        let mut out = RMatrix::zero(dim, dim, tower);
        if let Some(zm) = zmat {
            for i in 0..s {
                for j in 0..s {
                    let v = zm.get(i, j).clone();
                    out.set(i, j, v.clone());
                    out.set(s + i, s + j, v.neg());
                }
            }
        }
        if let Some(r) = r {
            for j in 0..s {
                out.set(j, s + j, r.clone());
            }
        }
        if let Some(sc) = sc {
            for j in 0..s {
                out.set(s + j, j, sc.clone());
            }
        }
        out
    };
    let one = RatFunc::one(tower);
    let two = RatFunc::from_int(tower, 2);
    let w1_mat = block(None, Some(&one), None);
    let w1s_mat = block(None, None, Some(&two));
    let m = w.len();
    // sub order: (w_2..w_m, w*_2..w*_m, z's)
    let sub_w = &sub_mats[0..m - 1];
    let sub_ws = &sub_mats[m - 1..2 * (m - 1)];
    let sub_z = &sub_mats[2 * (m - 1)..];
    let mut mats = Vec::with_capacity(2 * m + z.len());
    mats.push(w1_mat);
    for sm in sub_w {
        mats.push(block(Some(sm), None, None));
    }
    mats.push(w1s_mat);
    for sm in sub_ws {
        mats.push(block(Some(sm), None, None));
    }
    for sm in sub_z {
        mats.push(block(Some(sm), None, None));
    }
    let mut parities = sub_par.clone();
    parities.extend(sub_par.iter().map(|p| p ^ 1));
    Ok((mats, parities))
}

/// Matrices for the generators of the nondegenerate space through the Witt
/// decomposition: each generator is expressed over the Witt basis by
/// solving against the Gram matrix, then pushed through the recursion.
pub fn theta_matrices(space: &QuadSpace, wd: &WittDecomposition) -> Result<ModuleMatrices> {
    if wd.dim_z() > 2 {
        return Err(Error::Precondition("dim Z > 2".into()));
    }
    let tower = Arc::clone(&wd.tower);
    let (basis_mats, parities) =
        theta_rec(wd, &wd.w_basis, &wd.w_star_basis, &wd.z_basis, &tower)?;
    let n = space.n();
    let full = wd.full_basis();
    let k = full.len();
    let gram = wd.gram();
    let dim = parities.len();
    let mut action_unsorted: Vec<RMatrix> = Vec::with_capacity(n);
    let mut witt_coords = Vec::with_capacity(n);
    for i in 0..n {
        // beta(t_i, b_j) = Lambda_i * (b_j)_i
        let rhs: Vec<RatFunc> = (0..k).map(|j| space.caps[i].mul(&full[j][i])).collect();
        let coords = gram.solve(&rhs)?;
        let mut t = RMatrix::zero(dim, dim, &tower);
        for (c, m) in coords.iter().zip(&basis_mats) {
            if c.is_zero() {
                continue;
            }
            t = t.add(&m.scale(c));
        }
        action_unsorted.push(t);
        witt_coords.push(coords);
    }
    // sort the module basis even-first
    let mut perm: Vec<usize> = (0..dim).collect();
    perm.sort_by_key(|&i| (parities[i], i));
    let dim_even = parities.iter().filter(|&&p| p == 0).count();
    let action: Vec<RMatrix> = action_unsorted
        .iter()
        .map(|t| {
            let mut out = RMatrix::zero(dim, dim, &tower);
            for r in 0..dim {
                for c in 0..dim {
                    out.set(r, c, t.get(perm[r], perm[c]).clone());
                }
            }
            out
        })
        .collect();
    Ok(ModuleMatrices {
        tower,
        dim_even,
        dim_odd: dim - dim_even,
        action,
        witt_coords,
    })
}

/// Full pipeline for a weight: kernel split, Witt decomposition, matrices;
/// kernel generators act by zero.
pub fn simple_module_matrices(lambda: &Weight) -> Result<ModuleMatrices> {
    let base = Tower::base(4);
    let space = QuadSpace::from_weight(&base, lambda);
    let nd_idx = space.nondegenerate_indices();
    let (restricted, _kernel) = crate::clifford::split_kernel(&space);
    let wd = witt_decompose(&restricted)?;
    let mm = theta_matrices(&restricted, &wd)?;
    let dim = mm.total_dim();
    let mut action = Vec::with_capacity(lambda.n());
    let mut it = nd_idx.iter().zip(mm.action.iter());
    let mut next = it.next();
    for i in 0..lambda.n() {
        match next {
            Some((&j, m)) if j == i => {
                action.push(m.clone());
                next = it.next();
            }
            _ => action.push(RMatrix::zero(dim, dim, &mm.tower)),
        }
    }
    Ok(ModuleMatrices {
        tower: mm.tower.clone(),
        dim_even: mm.dim_even,
        dim_odd: mm.dim_odd,
        action,
        witt_coords: mm.witt_coords.clone(),
    })
}

/// Exact verification: T_i T_j + T_j T_i = 2 delta_ij Lambda_i, every
/// generator exchanges the even and odd halves, and the generated algebra
/// has the full dimension 2^(number of nonzero caps).
pub fn verify_module(mm: &ModuleMatrices, space: &QuadSpace) -> Result<bool> {
    let n = space.n();
    if mm.action.len() != n {
        return Ok(false);
    }
    let dim = mm.total_dim();
    if dim == 0 {
        return Ok(false);
    }
    let tower = &mm.tower;
    let id = RMatrix::identity(dim, tower);
    for i in 0..n {
        for j in 0..n {
            let anti = mm.action[i].mul(&mm.action[j]).add(&mm.action[j].mul(&mm.action[i]));
            let expect = if i == j {
                id.scale(&space.caps[i].add(&space.caps[i]))
            } else {
                RMatrix::zero(dim, dim, tower)
            };
            if anti != expect {
                return Ok(false);
            }
        }
    }
    // parity exchange: even-first basis means diagonal blocks vanish
    for t in &mm.action {
        for r in 0..dim {
            for c in 0..dim {
                let even_r = r < mm.dim_even;
                let even_c = c < mm.dim_even;
                if even_r == even_c && !t.get(r, c).is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    // span dimension of all subset products
    let active: Vec<usize> = (0..n).filter(|&i| !space.caps[i].is_zero()).collect();
    let mut products: Vec<RMatrix> = vec![id.clone()];
    let mut vectors: Vec<Vec<RatFunc>> = vec![id.data.clone()];
    for mask in 1u32..(1 << active.len()) {
        let low = mask.trailing_zeros() as usize;
        let rest = (mask & (mask - 1)) as usize;
        let m = if rest == 0 {
            mm.action[active[low]].clone()
        } else {
            mm.action[active[low]].mul(&products[rest])
        };
        vectors.push(m.data.clone());
        products.push(m);
    }
    let rank = RMatrix::rank_of_vectors(&vectors);
    Ok(rank == 1 << active.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::split_kernel;
    use crate::ratfunc::lambda_cap;

    fn setup(v: &[i64]) -> (QuadSpace, WittDecomposition) {
        let t = Tower::base(4);
        let lam = Weight::new(v.to_vec());
        let space = QuadSpace::from_weight(&t, &lam);
        let (restricted, _) = split_kernel(&space);
        let wd = witt_decompose(&restricted).unwrap();
        (restricted, wd)
    }

    #[test]
    fn theta_421_relations() {
        let (space, wd) = setup(&[4, 2, 1]);
        let mm = theta_matrices(&space, &wd).unwrap();
        assert_eq!((mm.dim_even, mm.dim_odd), (2, 2));
        assert!(verify_module(&mm, &space).unwrap());
    }

    #[test]
    fn theta_10() {
        // lambda = (1,0): 1|1 module, T_1 = offdiag(1,1), T_2 = 0
        let lam = Weight::new(vec![1, 0]);
        let mm = simple_module_matrices(&lam).unwrap();
        assert_eq!((mm.dim_even, mm.dim_odd), (1, 1));
        let t = &mm.tower;
        let one = RatFunc::one(t);
        assert_eq!(mm.action[0].get(0, 1), &one);
        assert_eq!(mm.action[0].get(1, 0), &one);
        assert!(mm.action[1].is_zero());
        let space = QuadSpace::from_weight(t, &lam);
        assert!(verify_module(&mm, &space).unwrap());
    }

    #[test]
    fn theta_zero_weight() {
        let lam = Weight::new(vec![0, 0, 0]);
        let mm = simple_module_matrices(&lam).unwrap();
        assert_eq!((mm.dim_even, mm.dim_odd), (1, 0));
        assert!(mm.action.iter().all(|m| m.is_zero()));
    }

    #[test]
    fn theta_11_and_31() {
        let (space, wd) = setup(&[1, 1]);
        let mm = theta_matrices(&space, &wd).unwrap();
        assert_eq!((mm.dim_even, mm.dim_odd), (1, 1));
        assert!(verify_module(&mm, &space).unwrap());

        let (space, wd) = setup(&[3, 1]);
        let mm = theta_matrices(&space, &wd).unwrap();
        assert_eq!((mm.dim_even, mm.dim_odd), (2, 2));
        assert!(verify_module(&mm, &space).unwrap());
    }

    #[test]
    fn verify_rejects_scaled_and_zero() {
        let (space, wd) = setup(&[4, 2, 1]);
        let mut mm = theta_matrices(&space, &wd).unwrap();
        assert!(verify_module(&mm, &space).unwrap());
        // doubling T_1 breaks T_1^2 = Lambda_1
        mm.action[0] = mm.action[0].scale(&RatFunc::from_int(&mm.tower, 2));
        assert!(!verify_module(&mm, &space).unwrap());
        // all-zero matrices fail against nonzero caps
        let dim = mm.total_dim();
        let zeros = ModuleMatrices {
            tower: mm.tower.clone(),
            dim_even: mm.dim_even,
            dim_odd: mm.dim_odd,
            action: vec![RMatrix::zero(dim, dim, &mm.tower); 3],
            witt_coords: vec![],
        };
        assert!(!verify_module(&zeros, &space).unwrap());
    }

    #[test]
    fn classification_dims_match_matrices() {
        for lam in [
            vec![1, 0],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![2, 2],
            vec![3, 2, 1],
            vec![4, 2, 1],
            vec![1, 1, 1],
        ] {
            let w = Weight::new(lam.clone());
            let c = crate::clifford::classify_simples(&w);
            let mm = simple_module_matrices(&w).unwrap();
            assert_eq!(
                (mm.dim_even as u64, mm.dim_odd as u64),
                (c.dim_even, c.dim_odd),
                "dims at {lam:?}"
            );
            let space = QuadSpace::from_weight(&Tower::base(4), &w);
            assert!(verify_module(&mm, &space).unwrap(), "relations at {lam:?}");
        }
    }

    #[test]
    fn squares_match_caps() {
        let (space, wd) = setup(&[4, 2, 1]);
        let mm = theta_matrices(&space, &wd).unwrap();
        let t = &mm.tower;
        let id = RMatrix::identity(4, t);
        for (i, l) in [4i64, 2, 1].iter().enumerate() {
            let sq = mm.action[i].mul(&mm.action[i]);
            assert_eq!(sq, id.scale(&lambda_cap(t, *l)));
        }
    }
}
