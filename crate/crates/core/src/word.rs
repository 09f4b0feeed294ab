//! Fixed-length binary words.
//!
//! A [`BinaryWord`] packs up to 64 symbols into a `u64`. Position 1 is the
//! most significant of the `len` low bits, so for words of equal length the
//! numeric order of the packed value coincides with lexicographic order.
//! Every public accessor uses 1-based positions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A binary word of length at most [`BinaryWord::MAX_LEN`].
///
/// Ordering compares length first and then symbols lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BinaryWord {
    len: u8,
    bits: u64,
}

#[inline]
pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BinaryWord {
    pub const MAX_LEN: usize = 64;

    /// The empty word.
    pub const EMPTY: BinaryWord = BinaryWord { len: 0, bits: 0 };

    /// Builds a word from its packed representation. Bits above `len` are
    /// discarded.
    pub fn from_bits(len: usize, bits: u64) -> Result<Self> {
        if len > Self::MAX_LEN {
            return Err(Error::WordTooLong(len));
        }
        Ok(Self {
            len: len as u8,
            bits: bits & low_mask(len),
        })
    }

    /// Unchecked constructor for hot loops; `len <= 64` and no stray bits.
    #[inline]
    pub(crate) fn from_raw(len: usize, bits: u64) -> Self {
        debug_assert!(len <= Self::MAX_LEN && bits & !low_mask(len) == 0);
        Self {
            len: len as u8,
            bits,
        }
    }

    pub fn from_symbols(symbols: &[u8]) -> Result<Self> {
        if symbols.len() > Self::MAX_LEN {
            return Err(Error::WordTooLong(symbols.len()));
        }
        let mut bits = 0u64;
        for &s in symbols {
            if s > 1 {
                return Err(Error::Parse {
                    literal: format!("{symbols:?}"),
                    reason: format!("symbol {s} is not 0 or 1"),
                });
            }
            bits = (bits << 1) | u64::from(s);
        }
        Ok(Self::from_raw(symbols.len(), bits))
    }

    /// The word `symbol^len`.
    pub fn repeat(symbol: u8, len: usize) -> Result<Self> {
        if len > Self::MAX_LEN {
            return Err(Error::WordTooLong(len));
        }
        let bits = if symbol == 0 { 0 } else { low_mask(len) };
        Ok(Self::from_raw(len, bits))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Packed symbols; position 1 is bit `len - 1`.
    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Symbol at 1-based position `i`.
    pub fn get(&self, i: usize) -> Result<u8> {
        if i == 0 || i > self.len() {
            return Err(Error::PositionOutOfRange {
                position: i,
                len: self.len(),
            });
        }
        Ok(self.symbol(i))
    }

    #[inline]
    pub(crate) fn symbol(&self, i: usize) -> u8 {
        ((self.bits >> (self.len() - i)) & 1) as u8
    }

    pub fn symbols(&self) -> impl Iterator<Item = u8> + '_ {
        (1..=self.len()).map(move |i| self.symbol(i))
    }

    /// `w[i..j]`, both ends inclusive and 1-based.
    pub fn factor(&self, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i > j || j > self.len() {
            return Err(Error::PositionOutOfRange {
                position: if i == 0 { i } else { j },
                len: self.len(),
            });
        }
        let width = j - i + 1;
        Ok(Self::from_raw(
            width,
            (self.bits >> (self.len() - j)) & low_mask(width),
        ))
    }

    /// Length-`l` prefix, `0 <= l <= len`.
    pub fn prefix(&self, l: usize) -> Result<Self> {
        if l > self.len() {
            return Err(Error::PositionOutOfRange {
                position: l,
                len: self.len(),
            });
        }
        Ok(Self::from_raw(l, self.bits >> (self.len() - l)))
    }

    /// Length-`l` suffix, `0 <= l <= len`.
    pub fn suffix(&self, l: usize) -> Result<Self> {
        if l > self.len() {
            return Err(Error::PositionOutOfRange {
                position: l,
                len: self.len(),
            });
        }
        Ok(Self::from_raw(l, self.bits & low_mask(l)))
    }

    /// Appends one symbol at the end.
    pub fn push(&self, symbol: u8) -> Result<Self> {
        if self.len() == Self::MAX_LEN {
            return Err(Error::WordTooLong(Self::MAX_LEN + 1));
        }
        Ok(Self::from_raw(
            self.len() + 1,
            (self.bits << 1) | u64::from(symbol & 1),
        ))
    }

    pub fn concat(&self, other: &BinaryWord) -> Result<Self> {
        let len = self.len() + other.len();
        if len > Self::MAX_LEN {
            return Err(Error::WordTooLong(len));
        }
        let shifted = if other.len() == 64 {
            0
        } else {
            self.bits << other.len()
        };
        Ok(Self::from_raw(len, shifted | other.bits))
    }

    /// Flips every symbol.
    pub fn complement(&self) -> Self {
        Self::from_raw(self.len(), !self.bits & low_mask(self.len()))
    }

    pub fn reverse(&self) -> Self {
        if self.len == 0 {
            return *self;
        }
        Self::from_raw(self.len(), self.bits.reverse_bits() >> (64 - self.len()))
    }

    /// Whether `f` occurs as a contiguous factor. The empty word is a factor
    /// of every word.
    pub fn contains_factor(&self, f: &BinaryWord) -> bool {
        if f.len() > self.len() {
            return false;
        }
        if f.is_empty() {
            return true;
        }
        let mask = low_mask(f.len());
        (0..=self.len() - f.len()).any(|shift| (self.bits >> shift) & mask == f.bits)
    }

    /// Hamming distance between the length-`l` prefix and suffix.
    pub fn overlap_errors(&self, l: usize) -> Result<usize> {
        if l == 0 || l >= self.len() {
            return Err(Error::OverlapLength { l, word: *self });
        }
        let pre = self.bits >> (self.len() - l);
        let suf = self.bits & low_mask(l);
        Ok((pre ^ suf).count_ones() as usize)
    }

    /// Whether some overlap length has prefix and suffix at Hamming
    /// distance exactly two.
    pub fn has_two_error_overlap(&self) -> Result<bool> {
        if self.len() < 2 {
            return Err(Error::WordTooShort {
                word: *self,
                min: 2,
            });
        }
        for l in 1..self.len() {
            if self.overlap_errors(l)? == 2 {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// All words of length `n`, in lexicographic order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = BinaryWord>> {
        if n >= 64 {
            return Err(Error::WordTooLong(n));
        }
        Ok((0..1u64 << n).map(move |bits| BinaryWord::from_raw(n, bits)))
    }
}

/// Matcher automaton for a single factor: state `k` means the longest suffix
/// read so far that is a prefix of the factor has length `k`.
struct FactorAutomaton {
    len: usize,
    next: Vec<[usize; 2]>,
}

impl FactorAutomaton {
    fn new(f: &BinaryWord) -> Self {
        let m = f.len();
        let sym: Vec<u8> = f.symbols().collect();
        let mut fail = vec![0usize; m + 1];
        let mut next = vec![[0usize; 2]; m + 1];
        for state in 0..=m {
            for c in 0..2u8 {
                next[state][c as usize] = if state < m && sym[state] == c {
                    state + 1
                } else if state == 0 {
                    0
                } else {
                    next[fail[state]][c as usize]
                };
            }
            if state < m && state > 0 {
                fail[state + 1] = next[fail[state]][sym[state] as usize];
            }
        }
        Self { len: m, next }
    }
}

/// All `f`-free words of length `n`, in lexicographic order.
pub fn enumerate_f_free(n: usize, f: &BinaryWord) -> Result<Vec<BinaryWord>> {
    if f.is_empty() {
        return Err(Error::EmptyFactor);
    }
    if n >= 64 {
        return Err(Error::WordTooLong(n));
    }
    let automaton = FactorAutomaton::new(f);
    let mut out = Vec::new();
    // (depth, bits, state) stack; 1 is pushed before 0 so 0 pops first.
    let mut stack = vec![(0usize, 0u64, 0usize)];
    while let Some((depth, bits, state)) = stack.pop() {
        if depth == n {
            out.push(BinaryWord::from_raw(n, bits));
            continue;
        }
        for c in [1u8, 0u8] {
            let s = automaton.next[state][c as usize];
            if s < automaton.len {
                stack.push((depth + 1, (bits << 1) | u64::from(c), s));
            }
        }
    }
    Ok(out)
}

/// Number of `f`-free words of length `n`, without enumerating them.
pub fn count_f_free(n: usize, f: &BinaryWord) -> Result<u128> {
    if f.is_empty() {
        return Err(Error::EmptyFactor);
    }
    if n >= 128 {
        return Err(Error::WordTooLong(n));
    }
    let automaton = FactorAutomaton::new(f);
    let mut ways = vec![0u128; automaton.len];
    ways[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; automaton.len];
        for (state, &count) in ways.iter().enumerate() {
            for c in 0..2 {
                let s = automaton.next[state][c];
                if s < automaton.len {
                    next[s] += count;
                }
            }
        }
        ways = next;
    }
    Ok(ways.iter().sum())
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            f.write_str(if s == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > Self::MAX_LEN {
            return Err(Error::WordTooLong(s.len()));
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            let b = match c {
                '0' => 0,
                '1' => 1,
                other => {
                    return Err(Error::Parse {
                        literal: s.to_string(),
                        reason: format!("character {other:?} at position {} is not 0 or 1", i + 1),
                    })
                }
            };
            bits = (bits << 1) | b;
        }
        Ok(Self::from_raw(s.len(), bits))
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinaryWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(w("1011").complement(), w("0100"));
        assert_eq!(BinaryWord::EMPTY.complement(), BinaryWord::EMPTY);
        assert_eq!(w("0000").complement(), w("1111"));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w("1100").reverse(), w("0011"));
        assert_eq!(w("010").reverse(), w("010"));
        assert_eq!(BinaryWord::EMPTY.reverse(), BinaryWord::EMPTY);
        let long = BinaryWord::from_bits(64, 1).unwrap();
        assert_eq!(long.reverse().bits(), 1u64 << 63);
    }

    #[test]
    fn positions_are_one_based() {
        let x = w("1000");
        assert_eq!(x.get(1).unwrap(), 1);
        assert_eq!(x.get(4).unwrap(), 0);
        assert!(x.get(0).is_err());
        assert!(x.get(5).is_err());
        assert_eq!(w("110100").factor(2, 4).unwrap(), w("101"));
        assert_eq!(w("11100").prefix(2).unwrap(), w("11"));
        assert_eq!(w("11100").suffix(2).unwrap(), w("00"));
    }

    #[test]
    fn factor_containment() {
        assert!(!w("11000").contains_factor(&w("1010")));
        assert!(!w("10110").contains_factor(&w("1010")));
        assert!(w("10100").contains_factor(&w("1010")));
        assert!(w("0110").contains_factor(&w("0110")));
        assert!(w("0110").contains_factor(&BinaryWord::EMPTY));
        assert!(!w("01").contains_factor(&w("011")));
    }

    #[test]
    fn f_free_enumeration() {
        let words: Vec<String> = enumerate_f_free(4, &w("11"))
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(
            words,
            ["0000", "0001", "0010", "0100", "0101", "1000", "1001", "1010"]
        );
        let no1010 = enumerate_f_free(4, &w("1010")).unwrap();
        assert_eq!(no1010.len(), 15);
        assert!(!no1010.contains(&w("1010")));
        assert_eq!(enumerate_f_free(2, &w("111")).unwrap().len(), 4);
        assert_eq!(enumerate_f_free(0, &w("1")).unwrap(), vec![BinaryWord::EMPTY]);
        assert_eq!(enumerate_f_free(3, &BinaryWord::EMPTY), Err(Error::EmptyFactor));
    }

    #[test]
    fn counting_agrees_with_enumeration() {
        for f in ["1", "11", "101", "1010", "11100", "0110"] {
            for n in 0..=12 {
                assert_eq!(
                    count_f_free(n, &w(f)).unwrap(),
                    enumerate_f_free(n, &w(f)).unwrap().len() as u128
                );
            }
        }
        assert_eq!(count_f_free(16, &w("11100")).unwrap(), 42744);
    }

    #[test]
    fn overlaps() {
        assert_eq!(w("11100").overlap_errors(2).unwrap(), 2);
        assert_eq!(w("1010").overlap_errors(2).unwrap(), 0);
        assert_eq!(w("11").overlap_errors(1).unwrap(), 0);
        let errs: Vec<usize> = (1..4).map(|l| w("1010").overlap_errors(l).unwrap()).collect();
        assert_eq!(errs, [1, 0, 3]);
        assert!(w("1010").overlap_errors(0).is_err());
        assert!(w("1010").overlap_errors(4).is_err());

        assert!(w("11100").has_two_error_overlap().unwrap());
        assert!(!w("1010").has_two_error_overlap().unwrap());
        assert!(!w("11").has_two_error_overlap().unwrap());
        assert!(w("1").has_two_error_overlap().is_err());
    }

    #[test]
    fn parse_rejects_non_binary() {
        assert!("10a1".parse::<BinaryWord>().is_err());
        assert!("0b101".parse::<BinaryWord>().is_err());
        assert_eq!("".parse::<BinaryWord>().unwrap(), BinaryWord::EMPTY);
        assert_eq!(w("0110").to_string(), "0110");
        assert_eq!(w("0001").to_string(), "0001");
    }

    #[test]
    fn lexicographic_order_within_length() {
        assert!(w("0111") < w("1000"));
        assert!(w("10110") < w("11000"));
    }
}
