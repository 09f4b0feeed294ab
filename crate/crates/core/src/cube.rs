//! Hypercubes, tilde-hypercubes and their word-avoiding subgraphs.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::distance::tilde_distance_packed;
use crate::error::{Error, Result};
use crate::word::{enumerate_f_free, BinaryWord};

/// Which single-step edits define adjacency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    /// Replacements only.
    Hamming,
    /// Replacements and adjacent swaps.
    Tilde,
}

impl Metric {
    /// Distance between two packed words of the same length.
    #[inline]
    pub(crate) fn distance_packed(self, a: u64, b: u64) -> u32 {
        match self {
            Metric::Hamming => (a ^ b).count_ones(),
            Metric::Tilde => tilde_distance_packed(a, b),
        }
    }

    pub fn distance(self, u: &BinaryWord, v: &BinaryWord) -> Result<usize> {
        match self {
            Metric::Hamming => crate::distance::hamming(u, v),
            Metric::Tilde => crate::distance::tilde_distance(u, v),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Hamming => "ham",
            Metric::Tilde => "tilde",
        })
    }
}

/// Largest supported cube order.
pub const MAX_ORDER: usize = 30;

/// An undirected graph whose vertices are the words of one length, optionally
/// restricted to words avoiding a factor.
///
/// Vertices are kept in lexicographic order; adjacency is stored as sorted
/// neighbor lists of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeGraph {
    order: usize,
    metric: Metric,
    avoided: Option<BinaryWord>,
    vertices: Vec<BinaryWord>,
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::InvalidOrder {
            order,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

/// Packed words at distance one from `bits` under `metric`.
fn candidates(metric: Metric, order: usize, bits: u64) -> impl Iterator<Item = u64> {
    let flips = (0..order).map(move |k| bits ^ (1u64 << k));
    let swaps = (0..order.saturating_sub(1))
        .filter(move |&k| matches!(metric, Metric::Tilde) && ((bits >> k) ^ (bits >> (k + 1))) & 1 == 1)
        .map(move |k| bits ^ (3u64 << k));
    flips.chain(swaps)
}

impl CubeGraph {
    /// Builds `Q_n`, `Q̃_n` or their `f`-avoiding subgraphs directly: each
    /// vertex is linked to every vertex among its single-edit candidates.
    pub fn build(order: usize, metric: Metric, avoided: Option<&BinaryWord>) -> Result<Self> {
        check_order(order)?;
        let vertices = match avoided {
            Some(f) => enumerate_f_free(order, f)?,
            None => BinaryWord::all(order)?.collect(),
        };
        let mut offsets = Vec::with_capacity(vertices.len() + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        let mut row = Vec::with_capacity(2 * order);
        for w in &vertices {
            row.clear();
            row.extend(
                candidates(metric, order, w.bits())
                    .filter_map(|c| index_of(&vertices, c).map(|i| i as u32)),
            );
            row.sort_unstable();
            neighbors.extend_from_slice(&row);
            offsets.push(neighbors.len());
        }
        Ok(Self {
            order,
            metric,
            avoided: avoided.copied(),
            vertices,
            offsets,
            neighbors,
        })
    }

    /// Builds a graph from an explicit edge list over the given vertices.
    /// Edges may be listed in either orientation; duplicates are merged.
    pub fn from_edges(
        order: usize,
        metric: Metric,
        avoided: Option<BinaryWord>,
        mut vertices: Vec<BinaryWord>,
        edges: &[(BinaryWord, BinaryWord)],
    ) -> Result<Self> {
        check_order(order)?;
        vertices.sort_unstable();
        vertices.dedup();
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); vertices.len()];
        for (a, b) in edges {
            let i = index_of(&vertices, a.bits())
                .filter(|_| a.len() == order)
                .ok_or(Error::NotAVertex(*a))?;
            let j = index_of(&vertices, b.bits())
                .filter(|_| b.len() == order)
                .ok_or(Error::NotAVertex(*b))?;
            if i != j {
                rows[i].push(j as u32);
                rows[j].push(i as u32);
            }
        }
        let mut offsets = Vec::with_capacity(vertices.len() + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        for mut row in rows {
            row.sort_unstable();
            row.dedup();
            neighbors.extend_from_slice(&row);
            offsets.push(neighbors.len());
        }
        Ok(Self {
            order,
            metric,
            avoided,
            vertices,
            offsets,
            neighbors,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn avoided(&self) -> Option<&BinaryWord> {
        self.avoided.as_ref()
    }

    pub fn vertices(&self) -> &[BinaryWord] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn neighbors(&self, index: usize) -> &[u32] {
        &self.neighbors[self.offsets[index]..self.offsets[index + 1]]
    }

    pub fn index(&self, w: &BinaryWord) -> Option<usize> {
        if w.len() != self.order {
            return None;
        }
        index_of(&self.vertices, w.bits())
    }

    pub fn contains(&self, w: &BinaryWord) -> bool {
        self.index(w).is_some()
    }

    pub fn has_edge(&self, u: &BinaryWord, v: &BinaryWord) -> bool {
        match (self.index(u), self.index(v)) {
            (Some(i), Some(j)) => self.neighbors(i).binary_search(&(j as u32)).is_ok(),
            _ => false,
        }
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (BinaryWord, BinaryWord)> + '_ {
        (0..self.vertices.len()).flat_map(move |i| {
            self.neighbors(i)
                .iter()
                .filter(move |&&j| j as usize > i)
                .map(move |&j| (self.vertices[i], self.vertices[j as usize]))
        })
    }

    /// Single-source BFS; `None` marks unreachable vertices.
    pub fn bfs_from(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertices.len()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].expect("queued vertices are reached");
            for &y in self.neighbors(x) {
                let y = y as usize;
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    fn require(&self, w: &BinaryWord) -> Result<usize> {
        self.index(w).ok_or(Error::NotAVertex(*w))
    }

    /// Shortest-path length between two vertices, `None` if unreachable.
    pub fn bfs_distance(&self, u: &BinaryWord, v: &BinaryWord) -> Result<Option<u32>> {
        let i = self.require(u)?;
        let j = self.require(v)?;
        Ok(self.bfs_from(i)[j])
    }

    /// Fails with the first vertex not reachable from the first vertex.
    pub fn check_connected(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Ok(());
        }
        let dist = self.bfs_from(0);
        match dist.iter().position(Option::is_none) {
            Some(j) => Err(Error::Disconnected {
                u: self.vertices[0],
                v: self.vertices[j],
            }),
            None => Ok(()),
        }
    }

    /// Largest shortest-path distance over all vertex pairs.
    pub fn diameter(&self) -> Result<u32> {
        self.check_connected()?;
        let best = (0..self.vertices.len())
            .map(|s| {
                self.bfs_from(s)
                    .into_iter()
                    .map(|d| d.expect("connected"))
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0);
        Ok(best)
    }
}

fn index_of(vertices: &[BinaryWord], bits: u64) -> Option<usize> {
    vertices.binary_search_by(|w| w.bits().cmp(&bits)).ok()
}

/// `Q̃_n` by doubling: two suffixed copies of `Q̃_{n-1}`, the edges
/// `(u0, u1)`, and the swap edges `(u'10, u'01)`.
pub fn build_tilde_hypercube_recursive(order: usize) -> Result<CubeGraph> {
    check_order(order)?;
    let zero: BinaryWord = "0".parse()?;
    let one: BinaryWord = "1".parse()?;
    let mut vertices = vec![zero, one];
    let mut edges = vec![(zero, one)];
    for n in 2..=order {
        let mut next_edges = Vec::with_capacity(2 * edges.len() + 3 * vertices.len());
        for (a, b) in &edges {
            for x in [0, 1] {
                next_edges.push((a.push(x)?, b.push(x)?));
            }
        }
        for u in &vertices {
            next_edges.push((u.push(0)?, u.push(1)?));
        }
        for prefix in BinaryWord::all(n - 2)? {
            let ten = prefix.push(1)?.push(0)?;
            let zero_one = prefix.push(0)?.push(1)?;
            next_edges.push((ten, zero_one));
        }
        vertices = vertices
            .iter()
            .flat_map(|u| [u.push(0), u.push(1)])
            .collect::<Result<Vec<_>>>()?;
        edges = next_edges;
    }
    CubeGraph::from_edges(order, Metric::Tilde, None, vertices, &edges)
}

/// `F̃_n` from a copy of `F̃_{n-1}` suffixed `0` and a copy of `F̃_{n-2}`
/// suffixed `01`, joined by the edges `(v00, v01)` and `(v10, v01)` whenever
/// both endpoints are 11-free.
pub fn build_tilde_fibonacci_recursive(order: usize) -> Result<CubeGraph> {
    check_order(order)?;
    let eleven: BinaryWord = "11".parse()?;
    let parse = |s: &str| s.parse::<BinaryWord>();
    // (vertices, edges) for orders n - 2 and n - 1.
    let mut older = (
        vec![parse("0")?, parse("1")?],
        vec![(parse("0")?, parse("1")?)],
    );
    if order == 1 {
        return CubeGraph::from_edges(1, Metric::Tilde, Some(eleven), older.0, &older.1);
    }
    let mut newer = (
        vec![parse("00")?, parse("01")?, parse("10")?],
        vec![
            (parse("00")?, parse("10")?),
            (parse("00")?, parse("01")?),
            (parse("01")?, parse("10")?),
        ],
    );
    for _ in 3..=order {
        let mut vertices = Vec::with_capacity(newer.0.len() + older.0.len());
        let mut edges = Vec::with_capacity(newer.1.len() + older.1.len() + newer.0.len());
        for u in &newer.0 {
            vertices.push(u.push(0)?);
        }
        for (a, b) in &newer.1 {
            edges.push((a.push(0)?, b.push(0)?));
        }
        for v in &older.0 {
            vertices.push(v.push(0)?.push(1)?);
        }
        for (a, b) in &older.1 {
            edges.push((a.push(0)?.push(1)?, b.push(0)?.push(1)?));
        }
        // Cross edges: v01 meets v00 and, when v ends in 0, v10.
        for v in &older.0 {
            let v01 = v.push(0)?.push(1)?;
            edges.push((v.push(0)?.push(0)?, v01));
            let v10 = v.push(1)?.push(0)?;
            if !v10.contains_factor(&eleven) {
                edges.push((v10, v01));
            }
        }
        older = std::mem::replace(&mut newer, (vertices, edges));
    }
    let n = newer.0[0].len();
    CubeGraph::from_edges(n, Metric::Tilde, Some(eleven), newer.0, &newer.1)
}
