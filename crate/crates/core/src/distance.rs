//! Hamming and swap-and-mismatch (tilde) distances, edit operations and
//! minimal transformations between equal-length binary words.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::BinaryWord;

/// A single length-preserving edit. Positions are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EditOp {
    /// Flip the symbol at the position.
    Replace(usize),
    /// Exchange the unequal symbols at the position and the next one.
    Swap(usize),
}

impl EditOp {
    pub fn position(&self) -> usize {
        match *self {
            EditOp::Replace(i) | EditOp::Swap(i) => i,
        }
    }

    /// Positions modified by the operation.
    pub fn touched(&self) -> std::ops::RangeInclusive<usize> {
        match *self {
            EditOp::Replace(i) => i..=i,
            EditOp::Swap(i) => i..=i + 1,
        }
    }

    /// Bit mask of touched positions in the packed layout of a length-`n` word.
    fn mask(&self, n: usize) -> u64 {
        match *self {
            EditOp::Replace(i) => 1u64 << (n - i),
            EditOp::Swap(i) => 3u64 << (n - i - 1),
        }
    }

    /// Applies the operation, rejecting out-of-range positions and swaps of
    /// equal adjacent symbols.
    pub fn apply(&self, w: &BinaryWord) -> Result<BinaryWord> {
        let n = w.len();
        match *self {
            EditOp::Replace(i) if i == 0 || i > n => {
                Err(Error::PositionOutOfRange { position: i, len: n })
            }
            EditOp::Swap(i) if i == 0 || i >= n => Err(Error::PositionOutOfRange {
                position: i,
                len: n,
            }),
            EditOp::Swap(i) if w.symbol(i) == w.symbol(i + 1) => {
                Err(Error::SwapOnEqualSymbols { position: i, word: *w })
            }
            // A valid swap flips both symbols since they differ.
            _ => Ok(BinaryWord::from_raw(n, w.bits() ^ self.mask(n))),
        }
    }
}

impl fmt::Display for EditOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EditOp::Replace(i) => write!(f, "R{i}"),
            EditOp::Swap(i) => write!(f, "S{i}"),
        }
    }
}

/// Applies `op` to `w`.
pub fn apply(op: EditOp, w: &BinaryWord) -> Result<BinaryWord> {
    op.apply(w)
}

fn check_lengths(u: &BinaryWord, v: &BinaryWord) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(())
}

pub fn hamming(u: &BinaryWord, v: &BinaryWord) -> Result<usize> {
    check_lengths(u, v)?;
    Ok((u.bits() ^ v.bits()).count_ones() as usize)
}

/// Whether positions `i - 1, i` of `u` and `v` form a swap pattern.
#[inline]
fn swap_pattern(u: &BinaryWord, v: &BinaryWord, i: usize) -> bool {
    let (a, b) = (u.symbol(i - 1), u.symbol(i));
    a != b && a == v.symbol(i) && b == v.symbol(i - 1)
}

/// Minimum number of replacements and swaps turning `u` into `v`.
///
/// Left-to-right recurrence: each position either costs a replacement when
/// it differs, or positions `i - 1, i` are fixed together by one swap.
pub fn tilde_distance(u: &BinaryWord, v: &BinaryWord) -> Result<usize> {
    check_lengths(u, v)?;
    let n = u.len();
    let mut prev2 = 0usize;
    let mut prev = 0usize;
    for i in 1..=n {
        let mut cur = prev + usize::from(u.symbol(i) != v.symbol(i));
        if i >= 2 && swap_pattern(u, v, i) {
            cur = cur.min(prev2 + 1);
        }
        prev2 = prev;
        prev = cur;
    }
    Ok(prev)
}

/// Tilde distance on packed words of a common length.
///
/// Equals the number of mismatches minus a maximum matching of adjacent
/// mismatch pairs that can be fixed by one swap; the matching on each run
/// of such pairs is taken greedily from the low end.
#[inline]
pub(crate) fn tilde_distance_packed(a: u64, b: u64) -> u32 {
    let x = a ^ b;
    let mut pairs = x & (x >> 1) & (a ^ (a >> 1));
    let mut swaps = 0;
    while pairs != 0 {
        let low = pairs & pairs.wrapping_neg();
        swaps += 1;
        pairs &= !(low | (low << 1));
    }
    x.count_ones() - swaps
}

/// A sequence of edit operations starting from a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transformation {
    pub start: BinaryWord,
    pub ops: Vec<EditOp>,
}

impl Transformation {
    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// The words `w_0, ..., w_h` visited, or an error if some operation is
    /// not applicable to the word it meets.
    pub fn words(&self) -> Result<Vec<BinaryWord>> {
        let mut out = Vec::with_capacity(self.ops.len() + 1);
        let mut cur = self.start;
        out.push(cur);
        for op in &self.ops {
            cur = op.apply(&cur)?;
            out.push(cur);
        }
        Ok(out)
    }

    pub fn end(&self) -> Result<BinaryWord> {
        Ok(*self.words()?.last().expect("at least the start word"))
    }

    /// Whether no position is modified by more than one operation.
    pub fn is_position_disjoint(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.ops.iter().all(|op| op.touched().all(|p| seen.insert(p)))
    }

    /// Whether every visited word avoids `f`.
    pub fn is_f_free(&self, f: &BinaryWord) -> Result<bool> {
        Ok(self.words()?.iter().all(|w| !w.contains_factor(f)))
    }
}

impl fmt::Display for Transformation {
    /// Arrow chain such as `1011 →S1 0111 →R4 0110`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        let mut cur = self.start;
        for op in &self.ops {
            match op.apply(&cur) {
                Ok(next) => {
                    write!(f, " →{op} {next}")?;
                    cur = next;
                }
                Err(_) => return write!(f, " →{op} ?"),
            }
        }
        Ok(())
    }
}

/// All sets of pairwise position-disjoint operations of size
/// `tilde_distance(u, v)` that turn `u` into `v`, each sorted by position.
///
/// Disjoint operations commute, so a set is a tiling of the mismatch
/// positions by single replacements and adjacent swaps.
pub fn minimal_op_sets(u: &BinaryWord, v: &BinaryWord) -> Result<Vec<Vec<EditOp>>> {
    let distance = tilde_distance(u, v)?;
    let n = u.len();
    let differs = |i: usize| u.symbol(i) != v.symbol(i);
    let swappable = |i: usize| i < n && differs(i) && differs(i + 1) && u.symbol(i) != u.symbol(i + 1);

    // best[i] = minimum number of operations to fix positions i..=n.
    let mut best = vec![0usize; n + 2];
    for i in (1..=n).rev() {
        best[i] = if !differs(i) {
            best[i + 1]
        } else {
            let mut b = 1 + best[i + 1];
            if swappable(i) {
                b = b.min(1 + best[i + 2]);
            }
            b
        };
    }
    debug_assert_eq!(best[1], distance);

    #[allow(clippy::too_many_arguments)]
    fn walk(
        i: usize,
        n: usize,
        used: usize,
        distance: usize,
        best: &[usize],
        differs: &dyn Fn(usize) -> bool,
        swappable: &dyn Fn(usize) -> bool,
        current: &mut Vec<EditOp>,
        out: &mut Vec<Vec<EditOp>>,
    ) {
        if used + best[i.min(n + 1)] > distance {
            return;
        }
        if i > n {
            out.push(current.clone());
            return;
        }
        if !differs(i) {
            walk(i + 1, n, used, distance, best, differs, swappable, current, out);
            return;
        }
        current.push(EditOp::Replace(i));
        walk(i + 1, n, used + 1, distance, best, differs, swappable, current, out);
        current.pop();
        if swappable(i) {
            current.push(EditOp::Swap(i));
            walk(i + 2, n, used + 1, distance, best, differs, swappable, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    walk(1, n, 0, distance, &best, &differs, &swappable, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Longest word accepted by [`minimal_transformations`].
pub const MAX_TRANSFORMATION_LEN: usize = 24;

/// Every minimal tilde-transformation from `u` to `v`: every position-disjoint
/// operation set of size `tilde_distance(u, v)` in every application order.
///
/// The result is ordered by operation set and then lexicographically by the
/// order of application. Its size grows factorially with the distance.
pub fn minimal_transformations(u: &BinaryWord, v: &BinaryWord) -> Result<Vec<Transformation>> {
    check_lengths(u, v)?;
    if u.len() > MAX_TRANSFORMATION_LEN {
        return Err(Error::OutOfRange {
            name: "word length",
            value: u.len().to_string(),
            range: format!("0..={MAX_TRANSFORMATION_LEN}"),
        });
    }
    let sets = minimal_op_sets(u, v)?;
    if sets.is_empty() {
        return Err(Error::NoMinimalTransformation {
            u: *u,
            v: *v,
            distance: tilde_distance(u, v)?,
        });
    }
    let mut out = Vec::new();
    for set in sets {
        let mut order: Vec<usize> = (0..set.len()).collect();
        loop {
            out.push(Transformation {
                start: *u,
                ops: order.iter().map(|&k| set[k]).collect(),
            });
            if !next_permutation(&mut order) {
                break;
            }
        }
    }
    Ok(out)
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).expect("pivot");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Finds a minimal tilde-transformation from `u` to `v` all of whose words
/// avoid `f`, if one exists. Same search space as
/// [`minimal_transformations`], explored as subsets of each operation set so
/// that orders sharing a prefix of applied operations are visited once.
pub fn find_f_free_minimal_transformation(
    u: &BinaryWord,
    v: &BinaryWord,
    f: &BinaryWord,
) -> Result<Option<Transformation>> {
    check_lengths(u, v)?;
    if u.len() > MAX_TRANSFORMATION_LEN {
        return Err(Error::OutOfRange {
            name: "word length",
            value: u.len().to_string(),
            range: format!("0..={MAX_TRANSFORMATION_LEN}"),
        });
    }
    if u.contains_factor(f) || v.contains_factor(f) {
        return Ok(None);
    }
    let n = u.len();
    for set in minimal_op_sets(u, v)? {
        let masks: Vec<u64> = set.iter().map(|op| op.mask(n)).collect();
        let full = (1u32 << set.len()) - 1;
        let mut dead = vec![false; 1usize << set.len()];
        let mut path = Vec::with_capacity(set.len());
        if search(u.bits(), 0, full, n, f, &masks, &mut dead, &mut path) {
            return Ok(Some(Transformation {
                start: *u,
                ops: path.iter().map(|&k| set[k]).collect(),
            }));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn search(
    bits: u64,
    applied: u32,
    full: u32,
    n: usize,
    f: &BinaryWord,
    masks: &[u64],
    dead: &mut [bool],
    path: &mut Vec<usize>,
) -> bool {
    if applied == full {
        return true;
    }
    if dead[applied as usize] {
        return false;
    }
    for (k, &m) in masks.iter().enumerate() {
        if applied & (1 << k) != 0 {
            continue;
        }
        let next = bits ^ m;
        if BinaryWord::from_raw(n, next).contains_factor(f) {
            continue;
        }
        path.push(k);
        if search(next, applied | (1 << k), full, n, f, masks, dead, path) {
            return true;
        }
        path.pop();
    }
    dead[applied as usize] = true;
    false
}
