//! Integer weights of q(n) and their dominance predicates.

use serde::Serialize;

/// A weight lambda = (lambda_1, ..., lambda_n) in the standard epsilon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight(pub Vec<i64>);

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Dominance {
    pub gl_dominant: bool,
    pub q_dominant: bool,
    pub in_p_geq0: bool,
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Number of nonzero entries, written |lambda|.
    pub fn size_nonzero(&self) -> usize {
        self.0.iter().filter(|&&x| x != 0).count()
    }

    pub fn nonzero_indices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn zero_indices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.0[i] == 0).collect()
    }

    pub fn in_p_geq0(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// lambda_i - lambda_{i+1} >= 0 for all i.
    pub fn gl_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// gl-dominant, and equal neighbours only at zero:
    /// lambda_i = lambda_{i+1} implies both are 0.
    pub fn q_dominant(&self) -> bool {
        self.gl_dominant()
            && self
                .0
                .windows(2)
                .all(|w| w[0] != w[1] || w[0] == 0)
    }

    pub fn dominance(&self) -> Dominance {
        Dominance {
            gl_dominant: self.gl_dominant(),
            q_dominant: self.q_dominant(),
            in_p_geq0: self.in_p_geq0(),
        }
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominance_examples() {
        let w = Weight::new(vec![1, 1, 0]);
        assert!(w.gl_dominant());
        assert!(!w.q_dominant());

        let w = Weight::new(vec![0, 0]);
        let d = w.dominance();
        assert!(d.gl_dominant && d.q_dominant && d.in_p_geq0);

        let w = Weight::new(vec![2, 3]);
        assert!(!w.gl_dominant());

        let w = Weight::new(vec![4, 2, 1]);
        assert!(w.q_dominant() && w.in_p_geq0());
    }

    #[test]
    fn size_nonzero() {
        assert_eq!(Weight::new(vec![2, 0, 0]).size_nonzero(), 1);
        assert_eq!(Weight::new(vec![0, 0, 0]).size_nonzero(), 0);
        assert_eq!(Weight::new(vec![4, 2, 1]).size_nonzero(), 3);
        assert_eq!(Weight::new(vec![1, -1]).size_nonzero(), 2);
    }
}
