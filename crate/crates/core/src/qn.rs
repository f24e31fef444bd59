//! Matrix realization of the queer Lie superalgebra q(n) inside gl(n|n)
//! and an automated verifier for its defining presentation.
//!
//! q(n) consists of the 2n x 2n matrices [[A, B], [B, A]]; the even part
//! has B = 0, the odd part A = 0. All structure constants here are
//! integers, so matrices carry i64 entries.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, PartialEq, Eq)]
pub struct SuperMatrix {
    pub n: usize,
    /// Row-major 2n x 2n entries.
    pub entries: Vec<i64>,
    pub parity: Parity,
}

impl std::fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "SuperMatrix(n={}, parity={:?})", self.n, self.parity)?;
        let d = 2 * self.n;
        for r in 0..d {
            writeln!(f, "  {:?}", &self.entries[r * d..(r + 1) * d])?;
        }
        Ok(())
    }
}

impl SuperMatrix {
    pub fn zero(n: usize, parity: Parity) -> Self {
        SuperMatrix {
            n,
            entries: vec![0; 4 * n * n],
            parity,
        }
    }

    fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.dim() + c]
    }

    fn set(&mut self, r: usize, c: usize, v: i64) {
        let d = self.dim();
        self.entries[r * d + c] = v;
    }

    /// Even generator shape: E_{rc} in both diagonal blocks.
    pub fn even_unit(n: usize, r: usize, c: usize) -> Self {
        let mut m = SuperMatrix::zero(n, Parity::Even);
        m.set(r, c, 1);
        m.set(n + r, n + c, 1);
        m
    }

    /// Odd generator shape: E_{rc} in both off-diagonal blocks.
    pub fn odd_unit(n: usize, r: usize, c: usize) -> Self {
        let mut m = SuperMatrix::zero(n, Parity::Odd);
        m.set(r, n + c, 1);
        m.set(n + r, c, 1);
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// Block membership test for q(n): equal diagonal blocks and equal
    /// off-diagonal blocks.
    pub fn is_in_qn(&self) -> bool {
        let n = self.n;
        for r in 0..n {
            for c in 0..n {
                if self.get(r, c) != self.get(n + r, n + c) {
                    return false;
                }
                if self.get(r, n + c) != self.get(n + r, c) {
                    return false;
                }
            }
        }
        true
    }

    /// Parity-consistency with the q(n) block shape: even matrices have no
    /// off-diagonal block, odd matrices no diagonal block.
    pub fn parity_consistent(&self) -> bool {
        let n = self.n;
        for r in 0..n {
            for c in 0..n {
                match self.parity {
                    Parity::Even => {
                        if self.get(r, n + c) != 0 || self.get(n + r, c) != 0 {
                            return false;
                        }
                    }
                    Parity::Odd => {
                        if self.get(r, c) != 0 || self.get(n + r, n + c) != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        SuperMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
            parity: self.parity,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        SuperMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a * k).collect(),
            parity: self.parity,
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Vec<i64> {
        let d = self.dim();
        let mut out = vec![0i64; d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.entries[r * d + k];
                if a == 0 {
                    continue;
                }
                for c in 0..d {
                    out[r * d + c] += a * rhs.entries[k * d + c];
                }
            }
        }
        out
    }
}

/// Supercommutator [a, b] = ab - (-1)^{|a||b|} ba with parity |a| + |b|.
pub fn supercommutator(a: &SuperMatrix, b: &SuperMatrix) -> Result<SuperMatrix> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(
            "supercommutator of different sizes".into(),
        ));
    }
    if !a.parity_consistent() || !b.parity_consistent() {
        return Err(Error::Precondition(
            "supercommutator requires homogeneous inputs".into(),
        ));
    }
    let ab = a.matmul(b);
    let ba = b.matmul(a);
    let sign = if a.parity == Parity::Odd && b.parity == Parity::Odd {
        1
    } else {
        -1
    };
    let entries: Vec<i64> = ab.iter().zip(&ba).map(|(x, y)| x + sign * y).collect();
    let parity = if a.parity == b.parity {
        Parity::Even
    } else {
        Parity::Odd
    };
    Ok(SuperMatrix {
        n: a.n,
        entries,
        parity,
    })
}

/// The full generator set of q(n): e_i, ebar_i, f_i, fbar_i (1 <= i < n)
/// and k_l, kbar_l (1 <= l <= n).
pub struct GeneratorSet {
    pub n: usize,
    pub e: Vec<SuperMatrix>,
    pub ebar: Vec<SuperMatrix>,
    pub f: Vec<SuperMatrix>,
    pub fbar: Vec<SuperMatrix>,
    pub k: Vec<SuperMatrix>,
    pub kbar: Vec<SuperMatrix>,
}

pub fn build_generators(n: usize) -> Result<GeneratorSet> {
    if n < 2 {
        return Err(Error::Precondition("q(n) generators need n >= 2".into()));
    }
    let mut e = Vec::new();
    let mut ebar = Vec::new();
    let mut f = Vec::new();
    let mut fbar = Vec::new();
    for i in 0..n - 1 {
        e.push(SuperMatrix::even_unit(n, i, i + 1));
        ebar.push(SuperMatrix::odd_unit(n, i, i + 1));
        f.push(SuperMatrix::even_unit(n, i + 1, i));
        fbar.push(SuperMatrix::odd_unit(n, i + 1, i));
    }
    let mut k = Vec::new();
    let mut kbar = Vec::new();
    for l in 0..n {
        k.push(SuperMatrix::even_unit(n, l, l));
        kbar.push(SuperMatrix::odd_unit(n, l, l));
    }
    Ok(GeneratorSet {
        n,
        e,
        ebar,
        f,
        fbar,
        k,
        kbar,
    })
}

impl GeneratorSet {
    /// All generators with printable names, for closure/Jacobi sweeps.
    pub fn all(&self) -> Vec<(String, &SuperMatrix)> {
        let mut out = Vec::new();
        for i in 0..self.n - 1 {
            out.push((format!("e_{}", i + 1), &self.e[i]));
            out.push((format!("ebar_{}", i + 1), &self.ebar[i]));
            out.push((format!("f_{}", i + 1), &self.f[i]));
            out.push((format!("fbar_{}", i + 1), &self.fbar[i]));
        }
        for l in 0..self.n {
            out.push((format!("k_{}", l + 1), &self.k[l]));
            out.push((format!("kbar_{}", l + 1), &self.kbar[l]));
        }
        out
    }
}

/// alpha_i(k_l) = delta_{l,i} - delta_{l,i+1}; 1-based indices.
fn alpha(i: usize, l: usize) -> i64 {
    (if l == i { 1 } else { 0 }) - (if l == i + 1 { 1 } else { 0 })
}

#[derive(Serialize, Clone)]
pub struct RelationRecord {
    pub relation_family: String,
    pub indices: Vec<usize>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub total: usize,
    pub passed: usize,
    pub records: Vec<RelationRecord>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }

    /// One line per family with pass counts.
    pub fn family_summary(&self) -> Vec<(String, usize, usize)> {
        let mut out: Vec<(String, usize, usize)> = Vec::new();
        for r in &self.records {
            match out.iter_mut().find(|(f, _, _)| *f == r.relation_family) {
                Some((_, pass, total)) => {
                    *total += 1;
                    if r.status == "pass" {
                        *pass += 1;
                    }
                }
                None => out.push((
                    r.relation_family.clone(),
                    usize::from(r.status == "pass"),
                    1,
                )),
            }
        }
        out
    }
}

struct Checker {
    gens: GeneratorSet,
    records: Vec<RelationRecord>,
}

impl Checker {
    fn check(
        &mut self,
        family: &str,
        indices: Vec<usize>,
        lhs: Result<SuperMatrix>,
        rhs: Result<SuperMatrix>,
    ) {
        let rec = match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                let diff = l.sub(&r);
                if diff.is_zero() {
                    RelationRecord {
                        relation_family: family.into(),
                        indices,
                        status: "pass".into(),
                        witness: None,
                    }
                } else {
                    RelationRecord {
                        relation_family: family.into(),
                        indices,
                        status: "fail".into(),
                        witness: Some(format!("{:?}", diff)),
                    }
                }
            }
            (l, r) => RelationRecord {
                relation_family: family.into(),
                indices,
                status: "fail".into(),
                witness: Some(format!("evaluation error: {:?} / {:?}", l.err(), r.err())),
            },
        };
        self.records.push(rec);
    }
}

/// Evaluate every family of the defining presentation on the matrix
/// realization, including the Serre-type relations and the replaced
/// adjacent relations together with the older bracket forms they subsume.
pub fn verify_presentation(n: usize) -> Result<RelationReport> {
    let gens = build_generators(n)?;
    let mut ch = Checker {
        gens,
        records: Vec::new(),
    };
    let nn = n;
    let zero_even = SuperMatrix::zero(nn, Parity::Even);
    let zero_odd = SuperMatrix::zero(nn, Parity::Odd);

    macro_rules! g {
        ($field:ident, $i:expr) => {
            &ch.gens.$field[$i - 1]
        };
    }
    macro_rules! br {
        ($a:expr, $b:expr) => {
            supercommutator($a, $b)
        };
    }

    // [k_l, k_m] = 0
    for l in 1..=nn {
        for m in 1..=nn {
            let lhs = br!(g!(k, l), g!(k, m));
            ch.check("cartan_even_commute", vec![l, m], lhs, Ok(zero_even.clone()));
        }
    }
    // [k_l, e_i] = alpha_i(k_l) e_i   (and ebar, f, fbar versions)
    for l in 1..=nn {
        for i in 1..nn {
            let a = alpha(i, l);
            ch.check(
                "cartan_e",
                vec![l, i],
                br!(g!(k, l), g!(e, i)),
                Ok(g!(e, i).scale(a)),
            );
            ch.check(
                "cartan_ebar",
                vec![l, i],
                br!(g!(k, l), g!(ebar, i)),
                Ok(g!(ebar, i).scale(a)),
            );
            ch.check(
                "cartan_f",
                vec![l, i],
                br!(g!(k, l), g!(f, i)),
                Ok(g!(f, i).scale(-a)),
            );
            ch.check(
                "cartan_fbar",
                vec![l, i],
                br!(g!(k, l), g!(fbar, i)),
                Ok(g!(fbar, i).scale(-a)),
            );
        }
    }
    // [k_l, kbar_m] = 0
    for l in 1..=nn {
        for m in 1..=nn {
            ch.check(
                "cartan_kbar",
                vec![l, m],
                br!(g!(k, l), g!(kbar, m)),
                Ok(zero_odd.clone()),
            );
        }
    }
    // [e_i, f_j] = delta_ij (k_i - k_{i+1})
    for i in 1..nn {
        for j in 1..nn {
            let rhs = if i == j {
                g!(k, i).sub(g!(k, i + 1))
            } else {
                zero_even.clone()
            };
            ch.check("e_f", vec![i, j], br!(g!(e, i), g!(f, j)), Ok(rhs));
        }
    }
    // [e_i, fbar_j] = delta_ij (kbar_i - kbar_{i+1}),
    // [ebar_i, f_j] = delta_ij (kbar_i - kbar_{i+1})
    for i in 1..nn {
        for j in 1..nn {
            let rhs = if i == j {
                g!(kbar, i).sub(g!(kbar, i + 1))
            } else {
                zero_odd.clone()
            };
            ch.check("e_fbar", vec![i, j], br!(g!(e, i), g!(fbar, j)), Ok(rhs.clone()));
            ch.check("ebar_f", vec![i, j], br!(g!(ebar, i), g!(f, j)), Ok(rhs));
        }
    }
    // [kbar_l, e_i] = alpha_i(k_l) ebar_i ; [kbar_l, f_i] = -alpha_i(k_l) fbar_i
    for l in 1..=nn {
        for i in 1..nn {
            let a = alpha(i, l);
            ch.check(
                "kbar_e",
                vec![l, i],
                br!(g!(kbar, l), g!(e, i)),
                Ok(g!(ebar, i).scale(a)),
            );
            ch.check(
                "kbar_f",
                vec![l, i],
                br!(g!(kbar, l), g!(f, i)),
                Ok(g!(fbar, i).scale(-a)),
            );
        }
    }
    // [ebar_i, fbar_j] = delta_ij (k_i + k_{i+1})
    for i in 1..nn {
        for j in 1..nn {
            let rhs = if i == j {
                g!(k, i).add(g!(k, i + 1))
            } else {
                zero_even.clone()
            };
            ch.check("ebar_fbar", vec![i, j], br!(g!(ebar, i), g!(fbar, j)), Ok(rhs));
        }
    }
    // [kbar_l, ebar_i] = e_i if l = i, i+1 else 0 (and fbar version)
    for l in 1..=nn {
        for i in 1..nn {
            let hit = l == i || l == i + 1;
            let rhs_e = if hit { g!(e, i).clone() } else { zero_even.clone() };
            let rhs_f = if hit { g!(f, i).clone() } else { zero_even.clone() };
            ch.check("kbar_ebar", vec![l, i], br!(g!(kbar, l), g!(ebar, i)), Ok(rhs_e));
            ch.check("kbar_fbar", vec![l, i], br!(g!(kbar, l), g!(fbar, i)), Ok(rhs_f));
        }
    }
    // vanishing mixed brackets for |i-j| != 1
    for i in 1..nn {
        for j in 1..nn {
            if (i as i64 - j as i64).abs() == 1 {
                continue;
            }
            ch.check("e_ebar_vanish", vec![i, j], br!(g!(e, i), g!(ebar, j)), Ok(zero_odd.clone()));
            ch.check(
                "ebar_ebar_vanish",
                vec![i, j],
                br!(g!(ebar, i), g!(ebar, j)),
                Ok(zero_even.clone()),
            );
            ch.check("f_fbar_vanish", vec![i, j], br!(g!(f, i), g!(fbar, j)), Ok(zero_odd.clone()));
            ch.check(
                "fbar_fbar_vanish",
                vec![i, j],
                br!(g!(fbar, i), g!(fbar, j)),
                Ok(zero_even.clone()),
            );
        }
    }
    // [e_i, e_j] = [f_i, f_j] = 0 for |i-j| > 1
    for i in 1..nn {
        for j in 1..nn {
            if (i as i64 - j as i64).abs() <= 1 {
                continue;
            }
            ch.check("e_e_distant", vec![i, j], br!(g!(e, i), g!(e, j)), Ok(zero_even.clone()));
            ch.check("f_f_distant", vec![i, j], br!(g!(f, i), g!(f, j)), Ok(zero_even.clone()));
        }
    }
    // replaced adjacent relations:
    // [e_i, e_{i+1}] = [ebar_i, ebar_{i+1}], [e_i, ebar_{i+1}] = [ebar_i, e_{i+1}],
    // [f_{i+1}, f_i] = [fbar_{i+1}, fbar_i], [f_{i+1}, fbar_i] = [fbar_{i+1}, f_i]
    for i in 1..nn.saturating_sub(1) {
        ch.check(
            "adjacent_e_pair",
            vec![i],
            br!(g!(e, i), g!(e, i + 1)),
            br!(g!(ebar, i), g!(ebar, i + 1)),
        );
        ch.check(
            "adjacent_e_mixed",
            vec![i],
            br!(g!(e, i), g!(ebar, i + 1)),
            br!(g!(ebar, i), g!(e, i + 1)),
        );
        ch.check(
            "adjacent_f_pair",
            vec![i],
            br!(g!(f, i + 1), g!(f, i)),
            br!(g!(fbar, i + 1), g!(fbar, i)),
        );
        ch.check(
            "adjacent_f_mixed",
            vec![i],
            br!(g!(f, i + 1), g!(fbar, i)),
            br!(g!(fbar, i + 1), g!(f, i)),
        );
    }
    // [kbar_l, kbar_m] = 2 delta_lm k_l
    for l in 1..=nn {
        for m in 1..=nn {
            let rhs = if l == m {
                g!(k, l).scale(2)
            } else {
                zero_even.clone()
            };
            ch.check("kbar_kbar", vec![l, m], br!(g!(kbar, l), g!(kbar, m)), Ok(rhs));
        }
    }
    // Serre-type relations for |i-j| = 1
    for i in 1..nn {
        for j in 1..nn {
            if (i as i64 - j as i64).abs() != 1 {
                continue;
            }
            let inner_e = br!(g!(e, i), g!(e, j));
            let inner_f = br!(g!(f, i), g!(f, j));
            ch.check(
                "serre_e",
                vec![i, j],
                inner_e.clone().and_then(|m| br!(g!(e, i), &m)),
                Ok(zero_even.clone()),
            );
            ch.check(
                "serre_ebar",
                vec![i, j],
                inner_e.and_then(|m| br!(g!(ebar, i), &m)),
                Ok(zero_odd.clone()),
            );
            ch.check(
                "serre_f",
                vec![i, j],
                inner_f.clone().and_then(|m| br!(g!(f, i), &m)),
                Ok(zero_even.clone()),
            );
            ch.check(
                "serre_fbar",
                vec![i, j],
                inner_f.and_then(|m| br!(g!(fbar, i), &m)),
                Ok(zero_odd.clone()),
            );
        }
    }
    // older bracket forms subsumed by the adjacent relations
    for i in 1..nn {
        for j in 1..nn {
            if (i as i64 - j as i64).abs() != 1 {
                continue;
            }
            ch.check(
                "old_ls_e",
                vec![i, j],
                br!(g!(e, i), g!(ebar, j)).and_then(|m| br!(g!(ebar, i), &m)),
                Ok(zero_even.clone()),
            );
            ch.check(
                "old_ls_f",
                vec![i, j],
                br!(g!(f, i), g!(fbar, j)).and_then(|m| br!(g!(fbar, i), &m)),
                Ok(zero_even.clone()),
            );
        }
    }

    let total = ch.records.len();
    let passed = ch.records.iter().filter(|r| r.status == "pass").count();
    Ok(RelationReport {
        n,
        total,
        passed,
        records: ch.records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_shapes_n2() {
        let g = build_generators(2).unwrap();
        // e_1 has 1 at (1,2) and (3,4) in 1-based terms
        let e1 = &g.e[0];
        assert_eq!(e1.get(0, 1), 1);
        assert_eq!(e1.get(2, 3), 1);
        assert_eq!(e1.entries.iter().filter(|&&x| x != 0).count(), 2);
        // kbar_1 has 1 at (1,3) and (3,1)
        let kb1 = &g.kbar[0];
        assert_eq!(kb1.get(0, 2), 1);
        assert_eq!(kb1.get(2, 0), 1);
        assert_eq!(kb1.entries.iter().filter(|&&x| x != 0).count(), 2);
        assert!(build_generators(1).is_err());
    }

    #[test]
    fn sum_of_cartans_is_identity_pattern() {
        for n in 2..=4 {
            let g = build_generators(n).unwrap();
            let mut sum = SuperMatrix::zero(n, Parity::Even);
            for k in &g.k {
                sum = sum.add(k);
            }
            for r in 0..2 * n {
                for c in 0..2 * n {
                    assert_eq!(sum.get(r, c), i64::from(r == c));
                }
            }
        }
    }

    #[test]
    fn basic_brackets_n2() {
        let g = build_generators(2).unwrap();
        // [e1, f1] = k1 - k2
        let b = supercommutator(&g.e[0], &g.f[0]).unwrap();
        assert_eq!(b, g.k[0].sub(&g.k[1]));
        // [kbar1, kbar1] = 2 k1 (odd-odd bracket is an anticommutator)
        let b = supercommutator(&g.kbar[0], &g.kbar[0]).unwrap();
        assert_eq!(b, g.k[0].scale(2));
        // [x, x] = 0 for even x
        let b = supercommutator(&g.e[0], &g.e[0]).unwrap();
        assert!(b.is_zero());
    }

    #[test]
    fn generators_lie_in_qn_and_brackets_close() {
        for n in 2..=4 {
            let g = build_generators(n).unwrap();
            let all = g.all();
            for (_, m) in &all {
                assert!(m.is_in_qn());
                assert!(m.parity_consistent());
            }
            for (_, a) in &all {
                for (_, b) in &all {
                    let c = supercommutator(a, b).unwrap();
                    assert!(c.is_in_qn());
                }
            }
        }
    }

    #[test]
    fn presentation_passes_n2_to_n4() {
        for n in 2..=4 {
            let rep = verify_presentation(n).unwrap();
            assert!(
                rep.all_passed(),
                "n={} failures: {:?}",
                n,
                rep.records
                    .iter()
                    .filter(|r| r.status != "pass")
                    .map(|r| (&r.relation_family, &r.indices))
                    .collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn super_jacobi_on_generators() {
        // (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0
        for n in 2..=3 {
            let g = build_generators(n).unwrap();
            let all = g.all();
            let sgn = |a: Parity, b: Parity| {
                if a == Parity::Odd && b == Parity::Odd {
                    -1
                } else {
                    1
                }
            };
            for (_, x) in &all {
                for (_, y) in &all {
                    for (_, z) in &all {
                        let t1 = supercommutator(x, &supercommutator(y, z).unwrap())
                            .unwrap()
                            .scale(sgn(x.parity, z.parity));
                        let t2 = supercommutator(y, &supercommutator(z, x).unwrap())
                            .unwrap()
                            .scale(sgn(y.parity, x.parity));
                        let t3 = supercommutator(z, &supercommutator(x, y).unwrap())
                            .unwrap()
                            .scale(sgn(z.parity, y.parity));
                        assert!(t1.add(&t2).add(&t3).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn report_serializes() {
        let rep = verify_presentation(2).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("relation_family"));
    }
}
