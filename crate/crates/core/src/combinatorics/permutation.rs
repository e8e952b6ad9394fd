use std::fmt;

use serde::Serialize;

use super::subset::{Rank, RootSubset};
use crate::error::{Error, Result};

/// A bijection of `{0, ..., d-1}`, i.e. an element of the Weyl group of the
/// diagonal torus of `GL_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Permutation {
    d: Rank,
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(d: Rank, images: Vec<u32>) -> Result<Self> {
        let n = d.get() as usize;
        let mut seen = vec![false; n];
        let ok = images.len() == n
            && images.iter().all(|&x| {
                let fresh = (x as usize) < n && !seen[x as usize];
                if fresh {
                    seen[x as usize] = true;
                }
                fresh
            });
        if !ok {
            return Err(Error::NotAPermutation { d: d.get(), images });
        }
        Ok(Permutation { d, images })
    }

    pub fn identity(d: Rank) -> Self {
        Permutation {
            d,
            images: (0..d.get()).collect(),
        }
    }

    /// The Coxeter element `c`: `i -> i+1` for `i < d-1` and `d-1 -> 0`.
    pub fn coxeter(d: Rank) -> Self {
        let n = d.get();
        Permutation {
            d,
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    pub fn rank(&self) -> Rank {
        self.d
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.d != other.d {
            return Err(Error::RankMismatch {
                left: self.d.get(),
                right: other.d.get(),
            });
        }
        let images = other.images.iter().map(|&x| self.apply(x)).collect();
        Ok(Permutation { d: self.d, images })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Permutation { d: self.d, images }
    }

    /// Every element of the symmetric group in lexicographic order of images.
    pub fn all(d: Rank) -> AllPermutations {
        AllPermutations {
            d,
            next: Some((0..d.get()).collect()),
        }
    }

    /// The classical and affine descent sets of `w`.
    ///
    /// Classical: `{i in 1..d : w(i-1) < w(i)}`. Affine: `{j in Z/dZ : w(j-1 mod d) < w(j)}`.
    pub fn descents(&self) -> (RootSubset, RootSubset) {
        let n = self.d.get();
        let mut classical = 0u64;
        let mut affine = 0u64;
        for j in 0..n {
            let prev = (j + n - 1) % n;
            if self.apply(prev) < self.apply(j) {
                affine |= 1 << j;
                if j > 0 {
                    classical |= 1 << j;
                }
            }
        }
        (
            RootSubset::from_bitmask(self.d, classical).expect("bits below rank"),
            RootSubset::from_bitmask(self.d, affine).expect("bits below rank"),
        )
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// Lexicographic enumeration of the symmetric group.
pub struct AllPermutations {
    d: Rank,
    next: Option<Vec<u32>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation {
            d: self.d,
            images: current,
        })
    }
}

fn next_lexicographic(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(d: u32) -> Rank {
        Rank::new(d).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(rank(3), vec![0, 0, 1]).is_err());
        assert!(Permutation::new(rank(3), vec![0, 1]).is_err());
        assert!(Permutation::new(rank(3), vec![0, 1, 3]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        for (d, count) in [(1, 1), (2, 2), (3, 6), (5, 120)] {
            assert_eq!(Permutation::all(rank(d)).count(), count);
        }
    }

    #[test]
    fn coxeter_has_order_d() {
        let d = rank(5);
        let c = Permutation::coxeter(d);
        let mut w = Permutation::identity(d);
        for k in 1..=5 {
            w = c.compose(&w).unwrap();
            assert_eq!(w == Permutation::identity(d), k == 5);
        }
        assert_eq!(c.compose(&c.inverse()).unwrap(), Permutation::identity(d));
    }

    #[test]
    fn composition_is_function_composition() {
        let d = rank(3);
        let w = Permutation::new(d, vec![1, 2, 0]).unwrap();
        let v = Permutation::new(d, vec![0, 2, 1]).unwrap();
        let wv = w.compose(&v).unwrap();
        for x in 0..3 {
            assert_eq!(wv.apply(x), w.apply(v.apply(x)));
        }
    }
}
