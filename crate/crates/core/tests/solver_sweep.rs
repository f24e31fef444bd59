//! Exhaustive solver sweep over all lambda-triples in [1,5]^3 (up to the
//! 35 sorted representatives), with per-triple timing output.

use std::time::Instant;

use cliffq_core::ratfunc::lambda_cap;
use cliffq_core::tower::Tower;
use cliffq_core::witt::legendre_solve;

#[test]
fn all_sorted_triples_1_to_5() {
    let base = Tower::base(4);
    let mut failures = Vec::new();
    for a in 1..=5i64 {
        for b in 1..=a {
            for c in 1..=b {
                let start = Instant::now();
                let ca = lambda_cap(&base, a);
                let cb = lambda_cap(&base, b);
                let cc = lambda_cap(&base, c);
                match legendre_solve(&ca, &cb, &cc) {
                    Ok(sol) => {
                        let total = ca
                            .mul(&sol.x.mul(&sol.x))
                            .add(&cb.mul(&sol.y.mul(&sol.y)))
                            .add(&cc.mul(&sol.z.mul(&sol.z)));
                        assert!(total.is_zero(), "bad solution at ({a},{b},{c})");
                        println!(
                            "({a},{b},{c}): ok in {:.3?} (tower depth {}, conductor {})",
                            start.elapsed(),
                            sol.tower.depth(),
                            sol.tower.conductor
                        );
                    }
                    Err(e) => {
                        println!("({a},{b},{c}): FAILED in {:.3?}: {e}", start.elapsed());
                        failures.push((a, b, c));
                    }
                }
            }
        }
    }
    assert!(failures.is_empty(), "failing triples: {failures:?}");
}
