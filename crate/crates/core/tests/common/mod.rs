//! Brute-force oracles shared by the oracle suite and the acceptance runner.
//! Each returns `Err` with the first disagreement found.
#![allow(dead_code)]

use std::collections::VecDeque;

use num_bigint::BigUint;
use tildecube::counting::{
    edges_tilde_fibonacci_numerator, edges_tilde_fibonacci_recurrence, edges_tilde_hypercube,
    edges_tilde_hypercube_recurrence,
};
use tildecube::{
    build_tilde_fibonacci_recursive, build_tilde_hypercube_recursive, check_ham_isometric,
    check_tilde_isometric_by_transformations, ham_isometric_by_overlap, hamming,
    is_isometric_subgraph, tilde_distance, BinaryWord, CubeGraph, Metric,
};

pub type Check = Result<(), String>;

pub fn words(n: usize) -> Vec<BinaryWord> {
    BinaryWord::all(n).unwrap().collect()
}

/// Every word of length `1..=max_len`.
pub fn all_words_up_to(max_len: usize) -> Vec<BinaryWord> {
    (1..=max_len).flat_map(words).collect()
}

pub fn w(s: &str) -> BinaryWord {
    s.parse().unwrap()
}

/// Graph distance by plain BFS over an explicit neighbour rule on bit patterns.
pub fn bfs_over_rule(n: usize, source: u64, step: impl Fn(u64) -> Vec<u64>) -> Vec<u32> {
    let mut dist = vec![u32::MAX; 1 << n];
    dist[source as usize] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for y in step(x) {
            if dist[y as usize] == u32::MAX {
                dist[y as usize] = dist[x as usize] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Single replacements and swaps of unequal adjacent symbols.
pub fn tilde_steps(n: usize) -> impl Fn(u64) -> Vec<u64> {
    move |x| {
        let mut out: Vec<u64> = (0..n).map(|k| x ^ (1 << k)).collect();
        for k in 0..n.saturating_sub(1) {
            if ((x >> k) ^ (x >> (k + 1))) & 1 == 1 {
                out.push(x ^ (3 << k));
            }
        }
        out
    }
}

/// DP distance equals BFS distance in the tilde-hypercube built from the
/// raw move rule.
pub fn dp_matches_bfs(max_n: usize) -> Check {
    for n in 1..=max_n {
        let ws = words(n);
        for u in &ws {
            let dist = bfs_over_rule(n, u.bits(), tilde_steps(n));
            for v in &ws {
                let dp = tilde_distance(u, v).unwrap();
                if dp as u32 != dist[v.bits() as usize] {
                    return Err(format!("n={n} {u} {v}: dp {dp}, bfs {}", dist[v.bits() as usize]));
                }
            }
        }
    }
    Ok(())
}

fn same_graph(a: &CubeGraph, b: &CubeGraph) -> bool {
    a.vertices() == b.vertices() && a.edges().eq(b.edges())
}

pub fn recursive_matches_direct(max_q: usize, max_f: usize) -> Check {
    for n in 1..=max_q {
        let rec = build_tilde_hypercube_recursive(n).unwrap();
        let direct = CubeGraph::build(n, Metric::Tilde, None).unwrap();
        if !same_graph(&rec, &direct) {
            return Err(format!("Q~_{n}: recursive and direct differ"));
        }
    }
    let f11 = w("11");
    for n in 1..=max_f {
        let rec = build_tilde_fibonacci_recursive(n).unwrap();
        let direct = CubeGraph::build(n, Metric::Tilde, Some(&f11)).unwrap();
        if !same_graph(&rec, &direct) {
            return Err(format!("F~_{n}: recursive and direct differ"));
        }
    }
    Ok(())
}

/// Appending a common symbol keeps the distance; `u0`/`u1` and `u'01`/`u'10`
/// are adjacent.
pub fn extension_identities(max_n: usize) -> Check {
    for m in 1..max_n {
        let ws = words(m);
        for u in &ws {
            let (u0, u1) = (u.push(0).unwrap(), u.push(1).unwrap());
            if tilde_distance(&u0, &u1).unwrap() != 1 {
                return Err(format!("d({u0}, {u1}) != 1"));
            }
            for v in &ws {
                let d = tilde_distance(u, v).unwrap();
                let d0 = tilde_distance(&u0, &v.push(0).unwrap()).unwrap();
                let d1 = tilde_distance(&u1, &v.push(1).unwrap()).unwrap();
                if d0 != d || d1 != d {
                    return Err(format!("{u} {v}: d={d}, with 0: {d0}, with 1: {d1}"));
                }
            }
        }
    }
    for m in 0..=max_n - 2 {
        for p in BinaryWord::all(m).unwrap() {
            let a = p.concat(&w("01")).unwrap();
            let b = p.concat(&w("10")).unwrap();
            if tilde_distance(&a, &b).unwrap() != 1 {
                return Err(format!("d({a}, {b}) != 1"));
            }
        }
    }
    Ok(())
}

/// Identity, symmetry and triangle inequality over all triples, and
/// `d~ <= d_H <= 2 d~`.
pub fn metric_axioms(max_n: usize) -> Check {
    for n in 1..=max_n {
        let ws = words(n);
        let size = ws.len();
        let mut d = vec![0usize; size * size];
        for (i, u) in ws.iter().enumerate() {
            for (j, v) in ws.iter().enumerate() {
                d[i * size + j] = tilde_distance(u, v).unwrap();
                let h = hamming(u, v).unwrap();
                let t = d[i * size + j];
                if t > h || h > 2 * t {
                    return Err(format!("{u} {v}: tilde {t}, hamming {h}"));
                }
                if (t == 0) != (i == j) {
                    return Err(format!("identity fails for {u} {v}"));
                }
            }
        }
        for i in 0..size {
            for j in 0..size {
                if d[i * size + j] != d[j * size + i] {
                    return Err(format!("asymmetric at {} {}", ws[i], ws[j]));
                }
                for k in 0..size {
                    if d[i * size + k] > d[i * size + j] + d[j * size + k] {
                        return Err(format!("triangle fails at {} {} {}", ws[i], ws[j], ws[k]));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Order up to which Hamming isometricity is searched for a word of length `len`.
pub fn ham_search_order(len: usize) -> usize {
    (2 * len).max(len + 2)
}

/// Overlap prediction equals an exhaustive search in `Q_n(f)`, `2 <= |f|`.
pub fn overlap_matches_brute_force(max_len: usize) -> Check {
    for f in all_words_up_to(max_len).into_iter().filter(|f| f.len() >= 2) {
        let predicted = ham_isometric_by_overlap(&f).unwrap();
        let found = check_ham_isometric(&f, ham_search_order(f.len())).unwrap();
        if predicted != found.is_isometric() {
            return Err(format!("{f}: overlap says {predicted}, search gives {found:?}"));
        }
    }
    Ok(())
}

/// Transformation-based check equals the graph check at every order.
pub fn definitional_matches_graph(max_len: usize, max_n: usize) -> Check {
    for f in all_words_up_to(max_len) {
        for n in f.len()..=max_n {
            let by_def = check_tilde_isometric_by_transformations(&f, n).unwrap();
            let sub = CubeGraph::build(n, Metric::Tilde, Some(&f)).unwrap();
            let by_graph = is_isometric_subgraph(&sub, Metric::Tilde).unwrap();
            if by_def.status != by_graph.status {
                return Err(format!("{f} n={n}: definition {by_def:?}, graph {by_graph:?}"));
            }
        }
    }
    Ok(())
}

/// Closed forms equal recurrences in exact arithmetic, and the tilde-Fibonacci
/// numerator is a multiple of 5.
pub fn closed_forms_match_recurrences(max_n: usize) -> Check {
    let five = BigUint::from(5u8);
    for n in 1..=max_n {
        let closed: BigUint = edges_tilde_hypercube(n).unwrap();
        let rec: BigUint = edges_tilde_hypercube_recurrence(n).unwrap();
        if closed != rec {
            return Err(format!("|E(Q~_{n})|: closed {closed}, recurrence {rec}"));
        }
        let num: BigUint = edges_tilde_fibonacci_numerator(n).unwrap();
        let rec: BigUint = edges_tilde_fibonacci_recurrence(n).unwrap();
        if &num % &five != BigUint::ZERO || num / &five != rec {
            return Err(format!("|E(F~_{n})|: closed form disagrees with recurrence {rec}"));
        }
    }
    Ok(())
}
