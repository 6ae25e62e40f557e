//! Partitions, compositions, and binary boundary words.
//!
//! Partitions are stored at a fixed length `d` with explicit trailing
//! zeros; `d` is carried by every context that needs it. Rows of reverse
//! diagrams are numbered from the bottom and columns from the right
//! throughout the crate.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A weakly decreasing vector of `d` nonnegative integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from explicit parts, validating monotonicity.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// The zero partition of length `d`.
    pub fn zero(d: usize) -> Self {
        Partition { parts: vec![0; d] }
    }

    /// Pads or re-checks `parts` to length exactly `d`.
    pub fn with_length(mut parts: Vec<u32>, d: usize) -> Result<Self> {
        if parts.len() > d && parts[d..].iter().any(|&p| p != 0) {
            return Err(Error::NotAPartition(parts));
        }
        parts.resize(d, 0);
        Partition::new(parts)
    }

    /// The staircase `(d-1, d-2, ..., 0)`.
    pub fn staircase(d: usize) -> Self {
        Partition {
            parts: (0..d as u32).rev().collect(),
        }
    }

    /// The all-ones partition of length `d`.
    pub fn ones(d: usize) -> Self {
        Partition { parts: vec![1; d] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// 1-based part access; parts beyond the stored length are 0.
    pub fn part(&self, i: usize) -> u32 {
        debug_assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// |λ| = sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Membership in P_{d,n}: length d and first part at most n-d.
    pub fn fits_in_box(&self, d: usize, n: usize) -> bool {
        self.len() == d && n >= d && self.part(1) as usize <= n - d
    }

    pub fn check_in_box(&self, d: usize, n: usize) -> Result<()> {
        if self.fits_in_box(d, n) {
            Ok(())
        } else {
            Err(Error::NotInBox {
                parts: self.parts.clone(),
                d,
                n,
            })
        }
    }

    /// Containment κ ⊆ μ, comparing part by part.
    pub fn contains(&self, inner: &Partition) -> bool {
        (1..=inner.len().max(self.len())).all(|i| inner.part(i) <= self.part(i))
    }

    /// The conjugate (transposed diagram). Trailing zeros are dropped.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1) as usize;
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Entrywise sum with a composition; the result need not be a partition.
    pub fn plus(&self, xi: &Composition) -> Composition {
        let len = self.len().max(xi.len());
        Composition::new(
            (1..=len)
                .map(|i| self.part(i) as i64 + xi.entry(i))
                .collect(),
        )
    }

    /// All partitions of length `d` contained in `bound` (entrywise),
    /// in lexicographic order.
    pub fn all_in(bound: &Partition, d: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; d];
        fn rec(bound: &Partition, cur: &mut Vec<u32>, i: usize, out: &mut Vec<Partition>) {
            if i == cur.len() {
                out.push(Partition {
                    parts: cur.clone(),
                });
                return;
            }
            let hi = bound.part(i + 1).min(if i == 0 { u32::MAX } else { cur[i - 1] });
            for v in 0..=hi {
                cur[i] = v;
                rec(bound, cur, i + 1, out);
            }
            cur[i] = 0;
        }
        rec(bound, &mut cur, 0, &mut out);
        out
    }

    /// Parses a comma-separated part list; the empty string is the empty partition.
    pub fn parse(s: &str, d: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::zero(d));
        }
        let mut parts = Vec::new();
        for (i, tok) in s.split(',').enumerate() {
            let v: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad part at position {}: {:?}", i + 1, tok)))?;
            parts.push(v);
        }
        Partition::with_length(parts, d)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A vector of `d` integers, indexed 1-based. Houses contents ω(·) and the
/// exponents ξ fed to weight functions and alternants.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    entries: Vec<i64>,
}

impl Composition {
    pub fn new(entries: Vec<i64>) -> Self {
        Composition { entries }
    }

    pub fn zero(d: usize) -> Self {
        Composition {
            entries: vec![0; d],
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based entry access; entries beyond the stored length are 0.
    pub fn entry(&self, i: usize) -> i64 {
        debug_assert!(i >= 1);
        self.entries.get(i - 1).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, v: i64) {
        self.entries[i - 1] = v;
    }

    pub fn add(&self, other: &Composition) -> Composition {
        let len = self.len().max(other.len());
        Composition::new((1..=len).map(|i| self.entry(i) + other.entry(i)).collect())
    }

    /// Applies the simple transposition σ_i, exchanging entries i and i+1.
    pub fn swap_adjacent(&self, i: usize) -> Composition {
        let mut e = self.entries.clone();
        e.swap(i - 1, i);
        Composition::new(e)
    }

    /// True iff the entries are weakly decreasing and nonnegative.
    pub fn is_partition(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1]) && self.entries.iter().all(|&e| e >= 0)
    }

    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_partition() {
            return Err(Error::NotAPartition(
                self.entries.iter().map(|&e| e.max(0) as u32).collect(),
            ));
        }
        Partition::new(self.entries.iter().map(|&e| e as u32).collect())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// d+1-m: the primed index m' used by the weight formulas.
pub fn primed(m: usize, d: usize) -> usize {
    d + 1 - m
}

/// ω(seq): entry k counts the occurrences of k in the sequence.
pub fn content(seq: &[usize], d: usize) -> Result<Composition> {
    let mut entries = vec![0i64; d];
    for &v in seq {
        if v < 1 || v > d {
            return Err(Error::ValueOutOfRange {
                value: v as i64,
                d,
            });
        }
        entries[v - 1] += 1;
    }
    Ok(Composition::new(entries))
}

/// True iff every prefix contains at least as many k's as (k+1)'s, for all k.
pub fn is_yamanouchi(seq: &[usize]) -> bool {
    let d = seq.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0i64; d + 1];
    for &v in seq {
        counts[v - 1] += 1;
        if v >= 2 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    true
}

/// An n-digit binary word with exactly d ones. `bits[0]` is the leftmost
/// digit as printed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct BoundaryWord {
    bits: Vec<bool>,
}

impl BoundaryWord {
    pub fn new(bits: Vec<bool>) -> Self {
        BoundaryWord { bits }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(Error::Parse(format!("bad word digit {:?}", ch))),
            }
        }
        Ok(BoundaryWord { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// 1-based digit access, left to right.
    pub fn bit(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    /// η_j = number of zeros to the right of the j-th one (from the left).
    pub fn to_partition(&self) -> Partition {
        let d = self.ones();
        let mut parts = Vec::with_capacity(d);
        let mut zeros_seen = 0u32;
        let total_zeros = (self.len() - d) as u32;
        for &b in &self.bits {
            if b {
                parts.push(total_zeros - zeros_seen);
            } else {
                zeros_seen += 1;
            }
        }
        Partition { parts }
    }
}

impl From<BoundaryWord> for String {
    fn from(w: BoundaryWord) -> String {
        format!("{}", w)
    }
}

impl TryFrom<String> for BoundaryWord {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        BoundaryWord::parse(&s)
    }
}

impl fmt::Display for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Inverse of [`BoundaryWord::to_partition`] on P_{d,n}.
pub fn partition_to_word(p: &Partition, n: usize) -> Result<BoundaryWord> {
    let d = p.len();
    p.check_in_box(d, n)?;
    // The j-th one (from the left) has p_j zeros to its right, so it sits
    // at position j + (n - d - p_j) from the left.
    let mut bits = vec![false; n];
    for j in 1..=d {
        let pos = j + (n - d) - p.part(j) as usize;
        bits[pos - 1] = true;
    }
    Ok(BoundaryWord { bits })
}

/// Checked counterpart of [`BoundaryWord::to_partition`].
pub fn word_to_partition(w: &BoundaryWord, d: usize) -> Result<Partition> {
    if w.ones() != d {
        return Err(Error::WrongOneCount {
            expected: d,
            found: w.ones(),
        });
    }
    Ok(w.to_partition())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn content_of_figure_word() {
        let seq = [1, 1, 2, 3, 2, 4, 3, 1, 2];
        let c = content(&seq, 4).unwrap();
        assert_eq!(c.entries(), &[3, 3, 2, 1]);
    }

    #[test]
    fn content_trivia() {
        assert_eq!(content(&[], 3).unwrap().entries(), &[0, 0, 0]);
        assert_eq!(content(&[2, 2, 2], 2).unwrap().entries(), &[0, 3]);
        assert!(content(&[5], 4).is_err());
    }

    #[test]
    fn yamanouchi_examples() {
        assert!(is_yamanouchi(&[1, 1, 2, 3, 2, 4, 3, 1, 2]));
        assert!(!is_yamanouchi(&[2, 1]));
        assert!(is_yamanouchi(&[1, 2, 1, 2, 3]));
        assert!(is_yamanouchi(&[]));
    }

    #[test]
    fn word_partition_examples() {
        let w = BoundaryWord::parse("0110001010").unwrap();
        assert_eq!(word_to_partition(&w, 4).unwrap(), Partition::new(vec![5, 5, 2, 1]).unwrap());

        let w = BoundaryWord::parse("001001100").unwrap();
        assert_eq!(word_to_partition(&w, 3).unwrap(), Partition::new(vec![4, 2, 2]).unwrap());

        // 1^d 0^{n-d} -> (n-d, ..., n-d)
        let w = BoundaryWord::parse("1110000").unwrap();
        assert_eq!(word_to_partition(&w, 3).unwrap(), Partition::new(vec![4, 4, 4]).unwrap());

        let p = Partition::new(vec![5, 5, 2, 1]).unwrap();
        assert_eq!(partition_to_word(&p, 10).unwrap().to_string(), "0110001010");
        let p = Partition::new(vec![4, 3, 1]).unwrap();
        assert_eq!(partition_to_word(&p, 9).unwrap().to_string(), "001010010");
        let p = Partition::zero(3);
        assert_eq!(partition_to_word(&p, 7).unwrap().to_string(), "0000111");
    }

    #[test]
    fn word_partition_roundtrip_exhaustive() {
        for d in 1..=4usize {
            for n in d..=10usize {
                let bound = Partition::new(vec![(n - d) as u32; d]).unwrap();
                for p in Partition::all_in(&bound, d) {
                    let w = partition_to_word(&p, n).unwrap();
                    assert_eq!(word_to_partition(&w, d).unwrap(), p);
                }
                // and conversely over all words with d ones
                for mask in 0u32..(1 << n) {
                    if mask.count_ones() as usize != d {
                        continue;
                    }
                    let bits: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
                    let w = BoundaryWord::new(bits);
                    let p = word_to_partition(&w, d).unwrap();
                    assert_eq!(partition_to_word(&p, n).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        let p = Partition::new(vec![3, 2]).unwrap();
        assert_eq!(p.conjugate(), Partition::new(vec![2, 2, 1]).unwrap());
        let p = Partition::new(vec![3, 3, 1]).unwrap();
        assert_eq!(p.conjugate(), Partition::new(vec![3, 2, 2]).unwrap());
        let p = Partition::new(vec![4]).unwrap();
        assert_eq!(p.conjugate(), Partition::new(vec![1, 1, 1, 1]).unwrap());
    }

    #[test]
    fn conjugate_involution() {
        let bound = Partition::new(vec![4, 4, 4]).unwrap();
        for p in Partition::all_in(&bound, 3) {
            let trimmed: Vec<u32> = p.parts().iter().copied().filter(|&x| x > 0).collect();
            assert_eq!(p.conjugate().conjugate().parts(), &trimmed[..]);
        }
    }

    #[test]
    fn yamanouchi_iff_prefix_contents_are_partitions() {
        // exhaustive over short words in 1..=3
        for len in 0..=6usize {
            let mut seq = vec![1usize; len];
            loop {
                let y = is_yamanouchi(&seq);
                let mut ok = true;
                for k in 0..=len {
                    let c = content(&seq[..k], 3).unwrap();
                    ok &= c.is_partition();
                }
                assert_eq!(y, ok, "seq {:?}", seq);
                // next word
                let mut i = len;
                loop {
                    if i == 0 {
                        break;
                    }
                    if seq[i - 1] < 3 {
                        seq[i - 1] += 1;
                        break;
                    }
                    seq[i - 1] = 1;
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
            }
        }
    }
}
