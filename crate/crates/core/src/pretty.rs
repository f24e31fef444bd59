//! Human-readable rendering of tower elements and rational functions.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::tower::FieldElement;

fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Render a cyclotomic coefficient vector over the power basis of zeta_N,
/// writing i for the imaginary unit when possible.
fn cyc_string(coeffs: &[BigRational], conductor: u32) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let base = if k == 0 {
            String::new()
        } else if conductor == 4 && k == 1 {
            "i".to_string()
        } else {
            format!("z{}^{}", conductor, k)
        };
        let cs = rational_string(c);
        let term = if base.is_empty() {
            cs
        } else if c.is_one() {
            base
        } else if (-c).is_one() {
            format!("-{base}")
        } else {
            format!("{cs}*{base}")
        };
        parts.push(term);
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        if p.starts_with('-') {
            out.push_str(p);
        } else {
            out.push('+');
            out.push_str(p);
        }
    }
    out
}

/// Render a tower element as a combination of radical monomials r0, r1, ...
/// over the cyclotomic base, with a legend naming each radical.
pub fn fe_string(x: &FieldElement) -> String {
    let depth = x.tower.depth();
    let mut parts: Vec<String> = Vec::new();
    for (idx, c) in x.coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut label = String::new();
        for j in 0..depth {
            if idx & (1 << j) != 0 {
                if !label.is_empty() {
                    label.push('*');
                }
                label.push_str(&format!("r{j}"));
            }
        }
        let cs = cyc_string(&c.coeffs, x.tower.conductor);
        let term = if label.is_empty() {
            cs
        } else if cs == "1" {
            label
        } else if cs == "-1" {
            format!("-{label}")
        } else if cs.contains('+') || (cs.matches('-').count() > 0 && !cs.starts_with('-')) {
            format!("({cs})*{label}")
        } else {
            format!("{cs}*{label}")
        };
        parts.push(term);
    }
    if parts.is_empty() {
        return "0".into();
    }
    parts.join(" + ").replace("+ -", "- ")
}

/// Legend lines describing each radical generator of the tower.
pub fn tower_legend(x: &FieldElement) -> Vec<String> {
    let t = &x.tower;
    (0..t.depth())
        .map(|j| {
            let rad = FieldElement {
                tower: std::sync::Arc::clone(t),
                coords: {
                    let mut c = t.radicands[j].clone();
                    c.resize(t.dim(), t.ctx.zero());
                    c
                },
            };
            format!("r{j} = sqrt({})", fe_string(&rad))
        })
        .collect()
}

fn poly_string(p: &Poly<FieldElement>, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let cs = fe_string(c);
        let vs = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let term = match (cs.as_str(), vs.as_str()) {
            (c, "") => c.to_string(),
            ("1", v) => v.to_string(),
            ("-1", v) => format!("-{v}"),
            (c, v) if c.contains('+') || c.contains(" - ") || c.contains('*') => {
                format!("({c})*{v}")
            }
            (c, v) => format!("{c}*{v}"),
        };
        parts.push(term);
    }
    parts.join(" + ").replace("+ -", "- ")
}

/// Render a rational function in q.
pub fn ratfunc_string(f: &RatFunc) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let num = poly_string(&f.num, "q");
    if f.den.is_constant() {
        return num;
    }
    let den = poly_string(&f.den, "q");
    format!("({num})/({den})")
}

/// Render a polynomial with tower coefficients in a named variable.
pub fn tpoly_string(p: &Poly<FieldElement>, var: &str) -> String {
    poly_string(p, var)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::q_int;
    use crate::tower::Tower;

    #[test]
    fn renders() {
        let t = Tower::base(4);
        let x = t.from_int(3).add(&t.imag_unit());
        assert_eq!(fe_string(&x), "3+i");
        let (t2, s2) = t.adjoin_sqrt(&t.from_int(2)).unwrap();
        let y = s2.add(&t2.one());
        assert_eq!(fe_string(&y), "1 + r0");
        assert_eq!(tower_legend(&y), vec!["r0 = sqrt(2)".to_string()]);
        let f = q_int(&t, 2);
        assert_eq!(ratfunc_string(&f), "(q^2 + 1)/(q)");
    }
}
