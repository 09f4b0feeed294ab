//! Isometric-subgraph checks and tilde-/Ham-isometricity of words.
//!
//! A check only ever refutes: a passing word is reported as isometric up to
//! the largest order examined, never as isometric outright.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cube::{CubeGraph, Metric};
use crate::distance::{find_f_free_minimal_transformation, tilde_distance_packed};
use crate::error::{Error, Result};
use crate::word::{enumerate_f_free, BinaryWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "isometric-up-to-n")]
    IsometricUpTo,
    #[serde(rename = "non-isometric")]
    NonIsometric,
}

/// A pair of vertices whose distance in the subgraph differs from their
/// distance in the ambient cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub u: BinaryWord,
    pub v: BinaryWord,
    /// `None` when `v` is unreachable from `u` inside the subgraph.
    #[serde(rename = "d_sub")]
    pub subgraph_distance: Option<u32>,
    #[serde(rename = "d_ambient")]
    pub ambient_distance: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IsometryVerdict {
    pub status: Status,
    /// Largest order examined; for a refutation, the order of the witness.
    pub checked_max_n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl IsometryVerdict {
    pub fn isometric_up_to(n: usize) -> Self {
        Self {
            status: Status::IsometricUpTo,
            checked_max_n: n,
            witness: None,
        }
    }

    pub fn refuted(witness: Witness) -> Self {
        Self {
            status: Status::NonIsometric,
            checked_max_n: witness.u.len(),
            witness: Some(witness),
        }
    }

    pub fn is_isometric(&self) -> bool {
        self.status == Status::IsometricUpTo
    }
}

/// Sources handled together by one bit-parallel BFS.
const LANES: usize = 64;

/// First failing pair `(u, v)`, `u < v`, among sources `batch * 64 ..` of `g`.
fn batch_failure(g: &CubeGraph, batch: usize) -> Option<Witness> {
    let metric = g.metric();
    let vs = g.vertices();
    let count = vs.len();
    let first = batch * LANES;
    let lanes = LANES.min(count - first);
    let all = if lanes == 64 { u64::MAX } else { (1u64 << lanes) - 1 };

    // Lanes whose source index is below `j`: only pairs with u < v matter.
    let below = |j: usize| -> u64 {
        if j >= first + lanes {
            all
        } else if j <= first {
            0
        } else {
            (1u64 << (j - first)) - 1
        }
    };

    let mut visited = vec![0u64; count];
    let mut frontier = vec![0u64; count];
    for lane in 0..lanes {
        visited[first + lane] |= 1 << lane;
        frontier[first + lane] |= 1 << lane;
    }
    let mut next = vec![0u64; count];
    let mut best: Option<(usize, usize, Witness)> = None;
    let mut record = |lane: usize, j: usize, sub: Option<u32>, amb: u32| {
        let key = (first + lane, j);
        if best.as_ref().is_none_or(|(a, b, _)| key < (*a, *b)) {
            best = Some((
                key.0,
                key.1,
                Witness {
                    u: vs[key.0],
                    v: vs[j],
                    subgraph_distance: sub,
                    ambient_distance: amb,
                },
            ));
        }
    };

    let mut level = 0u32;
    loop {
        level += 1;
        let mut any = false;
        for j in 0..count {
            let mut acc = 0u64;
            for &k in g.neighbors(j) {
                acc |= frontier[k as usize];
            }
            acc &= !visited[j];
            next[j] = acc;
            any |= acc != 0;
        }
        if !any {
            break;
        }
        // Neighbours are at metric distance 1, so level 1 needs no check.
        if level > 1 {
            for j in 0..count {
                let mut fresh = next[j] & below(j);
                while fresh != 0 {
                    let lane = fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    let amb = metric.distance_packed(vs[first + lane].bits(), vs[j].bits());
                    if amb != level {
                        record(lane, j, Some(level), amb);
                    }
                }
            }
        }
        for j in 0..count {
            visited[j] |= next[j];
        }
        std::mem::swap(&mut frontier, &mut next);
    }
    for j in 0..count {
        let mut missing = !visited[j] & below(j);
        while missing != 0 {
            let lane = missing.trailing_zeros() as usize;
            missing &= missing - 1;
            let amb = metric.distance_packed(vs[first + lane].bits(), vs[j].bits());
            record(lane, j, None, amb);
        }
    }
    best.map(|(_, _, w)| w)
}

/// First pair, in lexicographic order of `(u, v)`, whose subgraph distance
/// differs from the metric distance. Batches are examined in parallel a
/// few at a time; the earliest failing batch wins.
fn first_failure(g: &CubeGraph) -> Option<Witness> {
    let batches = g.vertex_count().div_ceil(LANES);
    let stride = rayon::current_num_threads().max(1);
    let mut start = 0;
    while start < batches {
        let end = (start + stride).min(batches);
        let found = (start..end)
            .into_par_iter()
            .filter_map(|b| batch_failure(g, b))
            .min_by_key(|w| (w.u, w.v));
        if found.is_some() {
            return found;
        }
        start = end;
    }
    None
}

/// Whether `sub` preserves distances of its ambient cube, whose distance is
/// the metric distance itself.
pub fn is_isometric_subgraph(sub: &CubeGraph, ambient_metric: Metric) -> Result<IsometryVerdict> {
    if sub.metric() != ambient_metric {
        return Err(Error::MetricMismatch {
            built: sub.metric(),
            requested: ambient_metric,
        });
    }
    Ok(match first_failure(sub) {
        Some(w) => IsometryVerdict::refuted(w),
        None => IsometryVerdict::isometric_up_to(sub.order()),
    })
}

fn check_range(f: &BinaryWord, max_n: usize) -> Result<()> {
    if f.is_empty() {
        return Err(Error::EmptyFactor);
    }
    if max_n < f.len() || max_n > crate::cube::MAX_ORDER {
        return Err(Error::OutOfRange {
            name: "max_n",
            value: max_n.to_string(),
            range: format!("{}..={}", f.len(), crate::cube::MAX_ORDER),
        });
    }
    Ok(())
}

/// Checks `Q_n(f)` (Hamming) or `Q̃_n(f)` (tilde) for `n = |f| ..= max_n`.
pub fn check_isometric(f: &BinaryWord, max_n: usize, metric: Metric) -> Result<IsometryVerdict> {
    check_range(f, max_n)?;
    for n in f.len()..=max_n {
        let sub = CubeGraph::build(n, metric, Some(f))?;
        let verdict = is_isometric_subgraph(&sub, metric)?;
        if !verdict.is_isometric() {
            return Ok(verdict);
        }
    }
    Ok(IsometryVerdict::isometric_up_to(max_n))
}

pub fn check_tilde_isometric(f: &BinaryWord, max_n: usize) -> Result<IsometryVerdict> {
    check_isometric(f, max_n, Metric::Tilde)
}

pub fn check_ham_isometric(f: &BinaryWord, max_n: usize) -> Result<IsometryVerdict> {
    check_isometric(f, max_n, Metric::Hamming)
}

/// Largest order accepted by [`check_tilde_isometric_by_transformations`].
pub const MAX_TRANSFORMATION_CHECK_N: usize = 14;

/// Tilde-isometricity at order `n` straight from the definition: every pair
/// of `f`-free words must be joined by an `f`-free minimal transformation.
///
/// The witness distance inside the subgraph is measured by BFS in `Q̃_n(f)`.
pub fn check_tilde_isometric_by_transformations(
    f: &BinaryWord,
    n: usize,
) -> Result<IsometryVerdict> {
    if f.is_empty() {
        return Err(Error::EmptyFactor);
    }
    if n < f.len() || n > MAX_TRANSFORMATION_CHECK_N {
        return Err(Error::OutOfRange {
            name: "n",
            value: n.to_string(),
            range: format!("{}..={MAX_TRANSFORMATION_CHECK_N}", f.len()),
        });
    }
    let words = enumerate_f_free(n, f)?;
    let failing = words
        .par_iter()
        .enumerate()
        .find_map_first(|(i, u)| -> Option<Result<(BinaryWord, BinaryWord)>> {
            for v in &words[i + 1..] {
                if tilde_distance_packed(u.bits(), v.bits()) <= 1 {
                    continue;
                }
                match find_f_free_minimal_transformation(u, v, f) {
                    Ok(Some(_)) => {}
                    Ok(None) => return Some(Ok((*u, *v))),
                    Err(e) => return Some(Err(e)),
                }
            }
            None
        });
    match failing {
        None => Ok(IsometryVerdict::isometric_up_to(n)),
        Some(Err(e)) => Err(e),
        Some(Ok((u, v))) => {
            let sub = CubeGraph::build(n, Metric::Tilde, Some(f))?;
            Ok(IsometryVerdict::refuted(Witness {
                u,
                v,
                subgraph_distance: sub.bfs_distance(&u, &v)?,
                ambient_distance: tilde_distance_packed(u.bits(), v.bits()),
            }))
        }
    }
}

/// Ham-isometricity predicted from overlaps: isometric exactly when `f` has
/// no 2-error overlap.
pub fn ham_isometric_by_overlap(f: &BinaryWord) -> Result<bool> {
    Ok(!f.has_two_error_overlap()?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordClassification {
    pub word: BinaryWord,
    pub tilde: IsometryVerdict,
    pub ham: IsometryVerdict,
}

/// Tilde and Hamming verdicts for every word of the given length.
pub fn classify_all_words(length: usize, max_n: usize) -> Result<Vec<WordClassification>> {
    if !(2..=5).contains(&length) {
        return Err(Error::OutOfRange {
            name: "length",
            value: length.to_string(),
            range: "2..=5".into(),
        });
    }
    BinaryWord::all(length)?
        .map(|word| {
            Ok(WordClassification {
                word,
                tilde: check_tilde_isometric(&word, max_n)?,
                ham: check_ham_isometric(&word, max_n)?,
            })
        })
        .collect()
}

/// Re-derives a witness from scratch: both words avoid `f`, and the recorded
/// distances match BFS in the avoiding cube and the metric distance.
pub fn verify_witness(f: &BinaryWord, metric: Metric, witness: &Witness) -> Result<bool> {
    let Witness { u, v, subgraph_distance, ambient_distance } = *witness;
    if u.len() != v.len() || u.contains_factor(f) || v.contains_factor(f) {
        return Ok(false);
    }
    let sub = CubeGraph::build(u.len(), metric, Some(f))?;
    let d_sub = sub.bfs_distance(&u, &v)?;
    let d_amb = metric.distance(&u, &v)? as u32;
    Ok(d_sub == subgraph_distance && d_amb == ambient_distance && d_sub != Some(d_amb))
}
