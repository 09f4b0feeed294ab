//! Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use tildecube::counting::{
    edges_tilde_fibonacci, edges_tilde_fibonacci_recurrence, edges_tilde_hypercube,
    edges_tilde_hypercube_recurrence, fibo_tilde_ratio, table1, verify_table1, vertices_fibonacci,
};
use tildecube::{
    check_ham_isometric, check_tilde_isometric, classify_all_words, tilde_distance, BinaryWord,
    CubeGraph, Metric, Precise,
};

const TABLE_BUDGET: Duration = Duration::from_secs(60);
const CLASSIFY_BUDGET: Duration = Duration::from_secs(300);
const RATIO_BUDGET: Duration = Duration::from_secs(1);
const RATIO_DIGITS: usize = 30;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Check {
    let spent = start.elapsed();
    ensure(spent < budget, || format!("took {spent:.2?}, budget {budget:?}"))
}

fn table_reproduction() -> Check {
    let start = Instant::now();
    let columns = table1(4, 16).map_err(|e| e.to_string())?;
    let report = verify_table1(&columns);
    for m in &report.mismatches {
        eprintln!("  {} n={}: expected {}, computed {}", m.row, m.n, m.expected, m.computed);
    }
    ensure(report.compared == 130, || format!("compared {} cells", report.compared))?;
    ensure(report.all_match(), || format!("{} mismatching cells", report.mismatches.len()))?;
    within(start, TABLE_BUDGET)
}

fn edge_count_identities() -> Check {
    for n in 1..=14 {
        let built = CubeGraph::build(n, Metric::Tilde, None).unwrap().edge_count() as u64;
        let closed: u64 = edges_tilde_hypercube(n).unwrap();
        let rec: u64 = edges_tilde_hypercube_recurrence(n).unwrap();
        ensure(built == closed && closed == rec, || {
            format!("|E(Q~_{n})|: built {built}, closed {closed}, recurrence {rec}")
        })?;
    }
    let f11 = w("11");
    for n in 1..=16 {
        let g = CubeGraph::build(n, Metric::Tilde, Some(&f11)).unwrap();
        let built = g.edge_count() as u64;
        let closed: u64 = edges_tilde_fibonacci(n).unwrap();
        let rec: u64 = edges_tilde_fibonacci_recurrence(n).unwrap();
        ensure(built == closed && closed == rec, || {
            format!("|E(F~_{n})|: built {built}, closed {closed}, recurrence {rec}")
        })?;
        let vertices: u64 = vertices_fibonacci(n).unwrap();
        ensure(g.vertex_count() as u64 == vertices, || {
            format!("|V(F~_{n})| = {}, expected {vertices}", g.vertex_count())
        })?;
    }
    Ok(())
}

fn paper_witness_holds(f: &str, u: &str, v: &str) -> Check {
    let (f, u, v) = (w(f), w(u), w(v));
    ensure(!u.contains_factor(&f) && !v.contains_factor(&f), || format!("{u}/{v} not {f}-free"))?;
    let sub = CubeGraph::build(u.len(), Metric::Tilde, Some(&f)).unwrap();
    let d_sub = sub.bfs_distance(&u, &v).unwrap();
    let d = tilde_distance(&u, &v).unwrap() as u32;
    ensure(d_sub.is_none_or(|s| s > d), || {
        format!("{f}: {u}/{v} has d_sub {d_sub:?}, d~ {d}")
    })
}

fn classification() -> Check {
    let start = Instant::now();
    let tilde_isometric = |length: usize| -> Vec<String> {
        classify_all_words(length, length + 4)
            .unwrap()
            .into_iter()
            .filter(|c| c.tilde.is_isometric())
            .map(|c| c.word.to_string())
            .collect()
    };
    let all = |n: usize| -> Vec<String> { words(n).iter().map(|x| x.to_string()).collect() };
    let len2 = tilde_isometric(2);
    ensure(len2 == all(2), || format!("length 2 isometric: {len2:?}"))?;
    let len3 = tilde_isometric(3);
    let expected3: Vec<String> = all(3).into_iter().filter(|x| x != "101" && x != "010").collect();
    ensure(len3 == expected3, || format!("length 3 isometric: {len3:?}"))?;
    let mut len4 = tilde_isometric(4);
    len4.sort();
    let mut expected4 = ["1111", "1110", "1000", "0000", "0001", "0111"].map(String::from).to_vec();
    expected4.sort();
    ensure(len4 == expected4, || format!("length 4 isometric: {len4:?}"))?;
    for (f, u, v) in [
        ("101", "1111", "1001"),
        ("1010", "11000", "10110"),
        ("1100", "110100", "101010"),
        ("1001", "11011", "10001"),
        ("1011", "11111", "10011"),
    ] {
        paper_witness_holds(f, u, v)?;
    }
    within(start, CLASSIFY_BUDGET)
}

fn separating_words() -> Check {
    let f = w("11100");
    let t = check_tilde_isometric(&f, 12).unwrap();
    ensure(t.is_isometric() && t.checked_max_n == 12, || format!("11100 tilde: {t:?}"))?;
    let h = check_ham_isometric(&f, 12).unwrap();
    ensure(!h.is_isometric() && h.witness.is_some(), || format!("11100 ham: {h:?}"))?;
    let f = w("1010");
    let h = check_ham_isometric(&f, 10).unwrap();
    ensure(h.is_isometric() && h.checked_max_n == 10, || format!("1010 ham: {h:?}"))?;
    let t = check_tilde_isometric(&f, 10).unwrap();
    ensure(!t.is_isometric(), || format!("1010 tilde: {t:?}"))
}

fn ones_then_zeros() -> Check {
    for len in 1..=8usize {
        for h in 0..=len {
            let k = len - h;
            let f = BinaryWord::repeat(1, h).unwrap().concat(&BinaryWord::repeat(0, k).unwrap()).unwrap();
            let verdict = check_tilde_isometric(&f, len + 6).unwrap();
            let expected = (h, k) != (2, 2);
            ensure(verdict.is_isometric() == expected, || format!("1^{h}0^{k}: {verdict:?}"))?;
        }
    }
    Ok(())
}

fn diameters() -> Check {
    let f11 = w("11");
    for n in 2..=14 {
        let tilde = CubeGraph::build(n, Metric::Tilde, Some(&f11)).unwrap().diameter().unwrap();
        ensure(tilde as usize == n.div_ceil(2), || format!("diam(F~_{n}) = {tilde}"))?;
        let ham = CubeGraph::build(n, Metric::Hamming, Some(&f11)).unwrap().diameter().unwrap();
        ensure(ham as usize == n, || format!("diam(F_{n}) = {ham}"))?;
    }
    Ok(())
}

fn ratio_corollary() -> Check {
    let start = Instant::now();
    let low = Precise::from_ratio(&BigInt::from(85), &BigInt::from(100));
    let high = Precise::from_ratio(&BigInt::from(86), &BigInt::from(100));
    let mut outside = Vec::new();
    for n in [200, 500, 1000] {
        let r = fibo_tilde_ratio(n).unwrap();
        let shown = r.value.to_decimal(RATIO_DIGITS);
        println!("      ratio({n}) = {shown}");
        if !(r.value > low && r.value < high) {
            outside.push(format!("ratio({n}) = {shown} outside (0.85, 0.86)"));
        }
    }
    within(start, RATIO_BUDGET)?;
    ensure(outside.is_empty(), || outside.join("; "))
}

fn oracle_suites() -> Check {
    dp_matches_bfs(10)?;
    recursive_matches_direct(12, 16)?;
    extension_identities(10)?;
    metric_axioms(8)?;
    overlap_matches_brute_force(6)?;
    definitional_matches_graph(4, 8)
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 8] = [
        ("table reproduction, n = 4..16", table_reproduction),
        ("edge-count identities", edge_count_identities),
        ("classification of words of length 2..4", classification),
        ("separating words 11100 and 1010", separating_words),
        ("family 1^h 0^k, h + k <= 8", ones_then_zeros),
        ("diameters of F~_n and F_n, n = 2..14", diameters),
        ("ratio in (0.85, 0.86) for n = 200, 500, 1000", ratio_corollary),
        ("oracle suites", oracle_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let spent = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS [{}] {name} ({spent:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name} ({spent:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
