//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its runtime. Every check is exact; the stated time budgets are
//! asserted.

use std::collections::HashMap;
use std::time::Instant;

use cliffq_core::clifford::{
    classify_simples, discriminant_routes, split_kernel, QuadSpace,
};
use cliffq_core::characters::{
    ch_vq, highest_weight_space_dim, quantum_character_factor, sergeev_character,
};
use cliffq_core::example::run_example_411;
use cliffq_core::limit::{gadget_identity_suite, limit_structure_constants};
use cliffq_core::qn::verify_presentation;
use cliffq_core::ratfunc::{lambda_cap, q_int, round_bracket, RatFunc};
use cliffq_core::tower::Tower;
use cliffq_core::weights::Weight;
use cliffq_core::witt::{legendre_solve, theta_matrices, verify_module, witt_decompose};

mod oracles;

fn weights_in_box(n: usize, max: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let count = (max + 1).pow(n as u32);
    for code in 0..count {
        let mut c = code;
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(c % (max + 1));
            c /= max + 1;
        }
        out.push(Weight::new(v));
    }
    out
}

#[test]
fn criterion_1_presentation() {
    let start = Instant::now();
    for n in 2..=5 {
        let rep = verify_presentation(n).unwrap();
        assert!(
            rep.all_passed(),
            "presentation failed at n={n}: {:?}",
            rep.records
                .iter()
                .filter(|r| r.status != "pass")
                .map(|r| (&r.relation_family, &r.indices))
                .collect::<Vec<_>>()
        );
    }
    let dt = start.elapsed();
    println!(
        "PASS criterion 1: presentation verified exactly for n=2..5 ({} relation instances at n=5) in {:.2?}",
        verify_presentation(5).unwrap().total,
        dt
    );
    assert!(dt.as_secs_f64() < 2.0, "criterion 1 exceeded 2 s: {dt:?}");
}

#[test]
fn criterion_2_example_reproduction() {
    let start = Instant::now();
    let ex = run_example_411().unwrap();
    assert!(ex.printed_solution_verified, "(a) printed solution failed");
    assert!(ex.residue_verified, "(b) printed residue failed");
    assert!(ex.gram_verified, "(c) Gram identities failed");
    assert!(ex.beta_zz_matches, "(c) beta(z,z) != -1/4 t^2 (t^2-2)");
    assert_eq!(
        (ex.module_dim_even, ex.module_dim_odd),
        (2, 2),
        "(d) module dimension"
    );
    assert!(ex.module_relations_verified, "(d) module relations failed");
    let dt = start.elapsed();
    println!("PASS criterion 2: worked example (4,2,1) reproduced exactly in {dt:.2?}");
    for cmp in &ex.tbar_comparisons {
        if cmp.matches_exactly {
            println!(
                "  note: generator {} matches the printed expression exactly",
                cmp.generator
            );
        } else {
            println!(
                "  note: generator {} deviates from the printed expression by ratios {:?} (logged, not failed)",
                cmp.generator, cmp.ratios
            );
        }
    }
    assert!(dt.as_secs_f64() < 1.0, "criterion 2 exceeded 1 s: {dt:?}");
}

#[test]
fn criterion_3_classification_sweep() {
    let start = Instant::now();
    let base = Tower::base(4);
    // explicit-matrix dimensions depend only on the multiset of nonzero
    // entries; cache by that key
    let mut cache: HashMap<Vec<i64>, (usize, usize)> = HashMap::new();
    let mut checked = 0usize;
    for n in 1..=3usize {
        for lam in weights_in_box(n, 4) {
            let (orbit, sqfree) = discriminant_routes(&base, &lam).unwrap();
            assert_eq!(orbit, sqfree, "discriminant routes disagree at {lam}");
            let c = classify_simples(&lam);
            let mut key: Vec<i64> = lam.0.iter().copied().filter(|&x| x != 0).collect();
            key.sort_unstable();
            let dims = match cache.get(&key) {
                Some(d) => *d,
                None => {
                    let space = QuadSpace::from_weight(&base, &lam);
                    let (restricted, _) = split_kernel(&space);
                    let wd = witt_decompose(&restricted).unwrap();
                    assert!(wd.dim_z() <= 2, "dim Z > 2 at {lam}");
                    assert_eq!(wd.dim_w(), c.witt_index, "witt index at {lam}");
                    let mm = theta_matrices(&restricted, &wd).unwrap();
                    assert!(
                        verify_module(&mm, &restricted).unwrap(),
                        "module relations at {lam}"
                    );
                    let d = (mm.dim_even, mm.dim_odd);
                    cache.insert(key, d);
                    d
                }
            };
            assert_eq!(
                (dims.0 as u64, dims.1 as u64),
                (c.dim_even, c.dim_odd),
                "matrix dims vs classification at {lam}"
            );
            checked += 1;
        }
    }
    let dt = start.elapsed();
    println!(
        "PASS criterion 3: classification sweep over {checked} weights in [0,4]^n, n<=3, in {dt:.2?}"
    );
    assert!(dt.as_secs_f64() < 30.0, "criterion 3 exceeded 30 s: {dt:?}");
}

#[test]
fn criterion_4_legendre_random_suite() {
    use rand::{Rng, SeedableRng};
    let start = Instant::now();
    let base = Tower::base(4);
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5e_4d_3c_2b);
    let mut cache: HashMap<[i64; 3], ()> = HashMap::new();
    for trial in 0..200 {
        let a = rng.gen_range(1..=5i64);
        let b = rng.gen_range(1..=5i64);
        let c = rng.gen_range(1..=5i64);
        if cache.contains_key(&[a, b, c]) {
            continue;
        }
        let ca = lambda_cap(&base, a);
        let cb = lambda_cap(&base, b);
        let cc = lambda_cap(&base, c);
        let sol = legendre_solve(&ca, &cb, &cc)
            .unwrap_or_else(|e| panic!("trial {trial} triple ({a},{b},{c}): {e}"));
        // independent re-verification of the returned witnesses
        let total = ca
            .mul(&sol.x.mul(&sol.x))
            .add(&cb.mul(&sol.y.mul(&sol.y)))
            .add(&cc.mul(&sol.z.mul(&sol.z)));
        assert!(total.is_zero(), "triple ({a},{b},{c}) failed verification");
        assert!(
            !(sol.x.is_zero() && sol.y.is_zero() && sol.z.is_zero()),
            "trivial solution at ({a},{b},{c})"
        );
        cache.insert([a, b, c], ());
    }
    let dt = start.elapsed();
    println!(
        "PASS criterion 4: 200 random lambda-triples solved and re-verified ({} distinct) in {dt:.2?}",
        cache.len()
    );
    assert!(dt.as_secs_f64() < 60.0, "criterion 4 exceeded 60 s: {dt:?}");
}

fn strict_partitions(max_part: i64, n: usize) -> Vec<Weight> {
    // q-dominant weights in P_{>=0} with parts <= max_part: strictly
    // decreasing positive parts followed by zeros
    fn rec(max: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if slots == 0 {
            out.push(cur.clone());
            return;
        }
        // stop here: pad with zeros
        let mut padded = cur.clone();
        padded.extend(std::iter::repeat(0).take(slots));
        out.push(padded);
        let hi = cur.last().map(|&x| x - 1).unwrap_or(max);
        for next in (1..=hi).rev() {
            cur.push(next);
            rec(max, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    let mut cur = Vec::new();
    for first in (1..=max_part).rev() {
        cur.push(first);
        rec(max_part, n - 1, &mut cur, &mut raw);
        cur.pop();
    }
    raw.push(vec![0; n]);
    raw.sort();
    raw.dedup();
    raw.into_iter().map(Weight::new).collect()
}

#[test]
fn criterion_5_character_suite() {
    let start = Instant::now();
    let mut checked = 0usize;
    for n in 1..=4usize {
        for lam in strict_partitions(4, n) {
            let ch = sergeev_character(&lam)
                .unwrap_or_else(|e| panic!("character failed at {lam}: {e}"));
            assert!(ch.is_symmetric(), "not symmetric at {lam}");
            assert!(
                ch.terms.values().all(|&c| c > 0),
                "negative coefficient at {lam}"
            );
            let top: Vec<i64> = lam.0.iter().map(|x| 2 * x).collect();
            assert_eq!(
                ch.coeff(&top),
                highest_weight_space_dim(&lam),
                "highest coefficient at {lam}"
            );
            ch.undouble().expect("integer exponents");
            // quantum character factor matches the case analysis
            let m = lam.size_nonzero();
            let c = classify_simples(&lam);
            let expected = if m > 0 && m % 2 == 0 && !c.discriminant_square {
                2
            } else {
                1
            };
            assert_eq!(quantum_character_factor(&lam), expected, "factor at {lam}");
            let q = ch_vq(&lam).unwrap();
            assert_eq!(q, ch.scale(expected), "ch V^q at {lam}");
            checked += 1;
        }
    }
    // the natural-module case against the combinatorial oracle
    let ch10 = sergeev_character(&Weight::new(vec![1, 0])).unwrap();
    let oracle = oracles::schur_p_poly(&[1], 2);
    assert_eq!(ch10, oracle.scale(2), "lambda=(1,0) vs shifted-tableau oracle");
    // every strict partition with parts <= 4 and n <= 3 against the oracle
    for n in 1..=3usize {
        for lam in strict_partitions(4, n) {
            if lam.size_nonzero() == 0 {
                continue;
            }
            let parts: Vec<i64> = lam.0.iter().copied().filter(|&x| x > 0).collect();
            let expected = oracles::schur_p_poly(&parts, n)
                .scale(highest_weight_space_dim(&lam));
            let got = sergeev_character(&lam).unwrap();
            assert_eq!(got, expected, "oracle mismatch at {lam}");
        }
    }
    let dt = start.elapsed();
    println!(
        "PASS criterion 5: character suite over {checked} strict partitions (parts <= 4, n <= 4) with tableau oracle in {dt:.2?}"
    );
    assert!(dt.as_secs_f64() < 10.0, "criterion 5 exceeded 10 s: {dt:?}");
}

#[test]
fn criterion_6_classical_limit_suite() {
    let start = Instant::now();
    let mut checked = 0usize;
    for n in 1..=3usize {
        for lam in weights_in_box(n, 4) {
            let rep = limit_structure_constants(&lam).unwrap();
            assert!(
                rep.all_passed(),
                "limit failure at {lam}: {}/{} entries, ratio consistent: {}",
                rep.passed,
                rep.total,
                rep.ratio_consistent
            );
            checked += 1;
        }
    }
    let records = gadget_identity_suite(8);
    assert!(
        records.iter().all(|r| r.status == "pass"),
        "gadget identity failed: {:?}",
        records
            .iter()
            .filter(|r| r.status != "pass")
            .map(|r| (&r.identity, r.m, r.n))
            .collect::<Vec<_>>()
    );
    // the k-bar square chain is part of the suite; count its instances
    let chain = records
        .iter()
        .filter(|r| r.identity == "kbar_square_chain")
        .count();
    assert_eq!(chain, 17);
    let dt = start.elapsed();
    println!(
        "PASS criterion 6: classical-limit tables over {checked} weights and {} gadget identities in {dt:.2?}",
        records.len()
    );
    assert!(dt.as_secs_f64() < 10.0, "criterion 6 exceeded 10 s: {dt:?}");
}

#[test]
fn round_bracket_consistency() {
    // spot-check the building block used throughout the gadget suite
    let t = Tower::base(4);
    assert_eq!(round_bracket(&t, 1), RatFunc::one(&t));
    assert_eq!(
        round_bracket(&t, 3),
        RatFunc::one(&t)
            .add(&RatFunc::q_pow(&t, 1))
            .add(&RatFunc::q_pow(&t, 2))
    );
    assert_eq!(q_int(&t, 1), RatFunc::one(&t));
}
