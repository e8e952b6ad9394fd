//! Subsets of the affine simple roots of `GL_d`.
//!
//! The affine node set is identified with `Z/dZ`: index `k` stands for the
//! simple root `alpha_k`, index `0` for the affine node. Subsets are stored as
//! bitmasks together with their rank, and every binary operation checks that
//! both operands live over the same rank.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported rank; subsets are packed into a `u64`.
pub const MAX_RANK: u32 = 63;

/// The size `d` of the matrices in `GL_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Rank(u32);

impl Rank {
    pub fn new(d: u32) -> Result<Self> {
        if d == 0 || d > MAX_RANK {
            return Err(Error::InvalidRank {
                got: d,
                max: MAX_RANK,
            });
        }
        Ok(Rank(d))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Reduces `k` into `0..d`.
    #[inline]
    pub fn reduce(self, k: i64) -> u32 {
        k.rem_euclid(self.0 as i64) as u32
    }

    fn full_mask(self) -> u64 {
        (1u64 << self.0) - 1
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of the affine simple roots `{alpha_0, ..., alpha_{d-1}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSubset {
    d: Rank,
    bits: u64,
}

impl RootSubset {
    pub fn empty(d: Rank) -> Self {
        RootSubset { d, bits: 0 }
    }

    /// The full affine set, which is never strict.
    pub fn affine_full(d: Rank) -> Self {
        RootSubset {
            d,
            bits: d.full_mask(),
        }
    }

    /// The classical simple roots `S = {1, ..., d-1}`.
    pub fn classical_full(d: Rank) -> Self {
        RootSubset {
            d,
            bits: d.full_mask() & !1,
        }
    }

    pub fn from_bitmask(d: Rank, bits: u64) -> Result<Self> {
        if bits & !d.full_mask() != 0 {
            let index = 63 - bits.leading_zeros();
            return Err(Error::IndexOutOfRange { index, d: d.get() });
        }
        Ok(RootSubset { d, bits })
    }

    pub fn from_indices<I>(d: Rank, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut bits = 0u64;
        for index in indices {
            if index >= d.get() {
                return Err(Error::IndexOutOfRange { index, d: d.get() });
            }
            bits |= 1 << index;
        }
        Ok(RootSubset { d, bits })
    }

    /// `{lo, lo+1, ..., hi}` as plain integers; empty when `lo > hi`.
    pub fn interval(d: Rank, lo: u32, hi: u32) -> Result<Self> {
        if lo > hi {
            return Ok(Self::empty(d));
        }
        Self::from_indices(d, lo..=hi)
    }

    /// Parses either an unsigned bitmask (`"5"`), a comma list (`"1,3"`, `"3,"`),
    /// or a JSON array (`"[1,3]"`). The empty string and `"[]"` give the empty set.
    ///
    /// A bare integer without a comma is always read as a bitmask.
    pub fn parse(d: Rank, input: &str) -> Result<Self> {
        let err = |reason: &str| Error::ParseSubset {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = input.trim();
        if trimmed.starts_with('[') {
            let indices: Vec<u32> =
                serde_json::from_str(trimmed).map_err(|e| err(&e.to_string()))?;
            return Self::from_indices(d, indices);
        }
        if trimmed.is_empty() {
            return Ok(Self::empty(d));
        }
        if !trimmed.contains(',') {
            let bits = parse_mask(trimmed).ok_or_else(|| err("expected a bitmask"))?;
            return Self::from_bitmask(d, bits);
        }
        let mut indices = Vec::new();
        for piece in trimmed.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            indices.push(piece.parse::<u32>().map_err(|_| err("expected an index"))?);
        }
        Self::from_indices(d, indices)
    }

    #[inline]
    pub fn rank(&self) -> Rank {
        self.d
    }

    #[inline]
    pub fn bitmask(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn contains(&self, index: u32) -> bool {
        index < self.d.get() && self.bits & (1 << index) != 0
    }

    /// Membership of `k mod d`.
    #[inline]
    pub fn contains_mod(&self, k: i64) -> bool {
        self.contains(self.d.reduce(k))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// `0` is not a member, i.e. the subset lies inside `S`.
    #[inline]
    pub fn is_classical(&self) -> bool {
        self.bits & 1 == 0
    }

    /// The subset is not all of `Z/dZ`.
    #[inline]
    pub fn is_strict(&self) -> bool {
        self.bits != self.d.full_mask()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        let bits = self.bits;
        (0..self.d.get()).filter(move |k| bits & (1 << k) != 0)
    }

    pub fn indices(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn with(&self, index: u32) -> Result<Self> {
        if index >= self.d.get() {
            return Err(Error::IndexOutOfRange {
                index,
                d: self.d.get(),
            });
        }
        Ok(RootSubset {
            d: self.d,
            bits: self.bits | (1 << index),
        })
    }

    pub fn without(&self, index: u32) -> Self {
        if index >= self.d.get() {
            return *self;
        }
        RootSubset {
            d: self.d,
            bits: self.bits & !(1 << index),
        }
    }

    fn same_rank(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::RankMismatch {
                left: self.d.get(),
                right: other.d.get(),
            });
        }
        Ok(())
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        Ok(RootSubset {
            d: self.d,
            bits: self.bits | other.bits,
        })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        Ok(RootSubset {
            d: self.d,
            bits: self.bits & other.bits,
        })
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        Ok(RootSubset {
            d: self.d,
            bits: self.bits & !other.bits,
        })
    }

    /// Complement inside `Z/dZ`.
    pub fn complement(&self) -> Self {
        RootSubset {
            d: self.d,
            bits: !self.bits & self.d.full_mask(),
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.same_rank(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    /// Image under the `k`-th power of the Coxeter rotation `alpha_a -> alpha_{a+1}`.
    pub fn shift(&self, k: i64) -> Self {
        let d = self.d.get();
        let k = self.d.reduce(k);
        if k == 0 {
            return *self;
        }
        let full = self.d.full_mask();
        let bits = ((self.bits << k) | (self.bits >> (d - k))) & full;
        RootSubset { d: self.d, bits }
    }

    pub fn require_strict(&self) -> Result<()> {
        if !self.is_strict() {
            return Err(Error::NotStrict(self.to_string()));
        }
        Ok(())
    }

    pub fn require_classical(&self) -> Result<()> {
        if !self.is_classical() {
            return Err(Error::NotClassical(self.to_string()));
        }
        Ok(())
    }

    pub fn require_rank(&self, d: Rank) -> Result<()> {
        if self.d != d {
            return Err(Error::RankMismatch {
                left: self.d.get(),
                right: d.get(),
            });
        }
        Ok(())
    }

    /// All strict subsets of `Z/dZ`, in basis order.
    pub fn all_strict(d: Rank) -> Vec<Self> {
        let full = d.full_mask();
        let mut out: Vec<Self> = (0..full).map(|bits| RootSubset { d, bits }).collect();
        out.sort();
        out
    }

    /// All subsets of `S = {1, ..., d-1}`, in basis order.
    pub fn all_classical(d: Rank) -> Vec<Self> {
        let full = d.full_mask();
        let mut out: Vec<Self> = (0..=full)
            .filter(|bits| bits & 1 == 0)
            .map(|bits| RootSubset { d, bits })
            .collect();
        out.sort();
        out
    }

    /// Supersets of `self` that are subsets of `bound`, in basis order.
    pub fn supersets_within(&self, bound: &Self) -> Result<Vec<Self>> {
        if !self.is_subset_of(bound)? {
            return Ok(Vec::new());
        }
        let free = bound.bits & !self.bits;
        // Enumerate submasks of `free`.
        let mut out = Vec::with_capacity(1 << free.count_ones());
        let mut sub = free;
        loop {
            out.push(RootSubset {
                d: self.d,
                bits: self.bits | sub,
            });
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
        out.sort();
        Ok(out)
    }
}

fn parse_mask(s: &str) -> Option<u64> {
    if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        u64::from_str_radix(hex, 16).ok()
    } else if let Some(bin) = s.strip_prefix("0b") {
        u64::from_str_radix(bin, 2).ok()
    } else {
        s.parse().ok()
    }
}

/// Basis order: rank, then cardinality, then bitmask value.
impl Ord for RootSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.d
            .cmp(&other.d)
            .then(self.len().cmp(&other.len()))
            .then(self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for RootSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, k) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("}")
    }
}

/// Serialized as the sorted JSON array of member indices.
impl Serialize for RootSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for k in self.iter() {
            seq.serialize_element(&k)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(d: u32) -> Rank {
        Rank::new(d).unwrap()
    }

    fn set(d: u32, xs: &[u32]) -> RootSubset {
        RootSubset::from_indices(rank(d), xs.iter().copied()).unwrap()
    }

    #[test]
    fn rank_bounds() {
        assert!(Rank::new(0).is_err());
        assert!(Rank::new(64).is_err());
        assert_eq!(Rank::new(63).unwrap().get(), 63);
    }

    #[test]
    fn parse_encodings() {
        let d = rank(4);
        assert_eq!(RootSubset::parse(d, "10").unwrap(), set(4, &[1, 3]));
        assert_eq!(RootSubset::parse(d, "1,3").unwrap(), set(4, &[1, 3]));
        assert_eq!(RootSubset::parse(d, "[3,1]").unwrap(), set(4, &[1, 3]));
        assert_eq!(RootSubset::parse(d, "3,").unwrap(), set(4, &[3]));
        assert_eq!(RootSubset::parse(d, "0b1010").unwrap(), set(4, &[1, 3]));
        assert_eq!(RootSubset::parse(d, "").unwrap(), RootSubset::empty(d));
        assert_eq!(RootSubset::parse(d, "[]").unwrap(), RootSubset::empty(d));
        assert!(RootSubset::parse(d, "16").is_err());
        assert!(RootSubset::parse(d, "1,4").is_err());
        assert!(RootSubset::parse(d, "x").is_err());
    }

    #[test]
    fn predicates() {
        let d = rank(3);
        assert!(!RootSubset::affine_full(d).is_strict());
        assert!(RootSubset::classical_full(d).is_strict());
        assert!(RootSubset::classical_full(d).is_classical());
        assert!(!set(3, &[0]).is_classical());
    }

    #[test]
    fn mismatched_ranks_are_errors() {
        let a = set(3, &[1]);
        let b = set(4, &[1]);
        assert!(matches!(a.union(&b), Err(Error::RankMismatch { .. })));
        assert!(a.is_subset_of(&b).is_err());
    }

    #[test]
    fn basis_order_and_counts() {
        let all = RootSubset::all_strict(rank(3));
        assert_eq!(all.len(), 7);
        let masks: Vec<u64> = all.iter().map(|s| s.bitmask()).collect();
        assert_eq!(masks, vec![0, 1, 2, 4, 3, 5, 6]);
        assert_eq!(RootSubset::all_classical(rank(4)).len(), 8);
    }

    #[test]
    fn supersets() {
        let i = set(3, &[1]);
        let sups = i
            .supersets_within(&RootSubset::classical_full(rank(3)))
            .unwrap();
        assert_eq!(sups, vec![set(3, &[1]), set(3, &[1, 2])]);
    }

    #[test]
    fn json_is_sorted_array() {
        assert_eq!(
            serde_json::to_string(&set(5, &[4, 0, 2])).unwrap(),
            "[0,2,4]"
        );
        assert_eq!(set(5, &[4, 0, 2]).to_string(), "{0,2,4}");
    }
}
