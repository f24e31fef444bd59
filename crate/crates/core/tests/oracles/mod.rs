//! Independent combinatorial oracle: Schur P-functions by brute-force
//! enumeration of shifted semistandard tableaux. Kept free of the character
//! code it cross-checks.

use cliffq_core::characters::CharacterPoly;

/// Letters are 1' < 1 < 2' < 2 < ...; encode k' as 2k-1 and k as 2k.
fn is_primed(letter: u32) -> bool {
    letter % 2 == 1
}

fn value(letter: u32) -> u32 {
    letter.div_ceil(2)
}

struct Search {
    parts: Vec<usize>,
    n: u32,
    cells: Vec<(usize, usize)>,
    filling: Vec<u32>,
    result: CharacterPoly,
}

impl Search {
    fn cell_index(&self, row: usize, col: usize) -> Option<usize> {
        let mut idx = 0usize;
        for (r, &len) in self.parts.iter().enumerate() {
            if r == row {
                let j = col.checked_sub(row)?;
                if j < len {
                    return Some(idx + j);
                }
                return None;
            }
            idx += len;
        }
        None
    }

    fn admissible(&self, pos: usize, letter: u32) -> bool {
        let (row, col) = self.cells[pos];
        // main diagonal is unprimed
        if row == col && is_primed(letter) {
            return false;
        }
        // left neighbor: weak increase; primed letters strict along rows
        if col > row {
            if let Some(li) = self.cell_index(row, col - 1) {
                let left = self.filling[li];
                if letter < left {
                    return false;
                }
                if letter == left && is_primed(letter) {
                    return false;
                }
            }
        }
        // upper neighbor: weak increase; unprimed letters strict down columns
        if row > 0 {
            if let Some(ui) = self.cell_index(row - 1, col) {
                let up = self.filling[ui];
                if letter < up {
                    return false;
                }
                if letter == up && !is_primed(letter) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, pos: usize) {
        if pos == self.cells.len() {
            let mut exp = vec![0i64; self.n as usize];
            for &l in &self.filling {
                exp[(value(l) - 1) as usize] += 2; // doubled exponents
            }
            let term = CharacterPoly::monomial(self.n as usize, exp, 1);
            self.result = self.result.add(&term);
            return;
        }
        for letter in 1..=2 * self.n {
            if self.admissible(pos, letter) {
                self.filling[pos] = letter;
                self.run(pos + 1);
            }
        }
        self.filling[pos] = 0;
    }
}

/// P_lambda(x_1..x_n) for a strict partition lambda, by enumerating all
/// shifted semistandard fillings.
pub fn schur_p_poly(parts: &[i64], n: usize) -> CharacterPoly {
    assert!(parts.windows(2).all(|w| w[0] > w[1]), "strict partition");
    assert!(parts.iter().all(|&p| p > 0));
    let parts: Vec<usize> = parts.iter().map(|&p| p as usize).collect();
    let mut cells = Vec::new();
    for (r, &len) in parts.iter().enumerate() {
        for j in 0..len {
            cells.push((r, r + j));
        }
    }
    let total = cells.len();
    let mut search = Search {
        parts,
        n: n as u32,
        cells,
        filling: vec![0; total],
        result: CharacterPoly::zero(n),
    };
    search.run(0);
    search.result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_single_box() {
        // P_(1) = x_1 + ... + x_n
        let p = schur_p_poly(&[1], 3);
        assert_eq!(p.terms.len(), 3);
        assert!(p.terms.values().all(|&c| c == 1));
    }

    #[test]
    fn p_21_two_vars() {
        // P_(2,1)(x1, x2) = x1^2 x2 + x1 x2^2
        let p = schur_p_poly(&[2, 1], 2);
        assert_eq!(p.coeff(&[4, 2]), 1);
        assert_eq!(p.coeff(&[2, 4]), 1);
        assert_eq!(p.terms.len(), 2);
    }

    #[test]
    fn p_2_has_primed_multiplicity() {
        // P_(2)(x1, x2) = x1^2 + 2 x1 x2 + x2^2: the (1, 2') and (1, 2)
        // fillings both contribute to x1 x2
        let p = schur_p_poly(&[2], 2);
        assert_eq!(p.coeff(&[4, 0]), 1);
        assert_eq!(p.coeff(&[2, 2]), 2);
        assert_eq!(p.coeff(&[0, 4]), 1);
    }
}
