//! Weil-Deligne objects whose semisimple part is a sum of unramified
//! characters `nu_W^a`, `a in Z/dZ`.
//!
//! A nilpotent operator compatible with the twist moves the `nu_W^a` line to
//! `nu_W^{a+1}` (direction `N`) or to `nu_W^{a-1}` (direction `L`). Up to
//! isomorphism such an object is a multiset of strings: a top line and a
//! length, the operator being an isomorphism along every internal step.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Partition, Rank, RootSubset};
use crate::error::{Error, Result};
use crate::oracle::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    /// `a -> a + 1`, the monodromy side.
    N,
    /// `a -> a - 1`, the Lefschetz side.
    L,
}

impl Direction {
    /// Index step taken by the operator.
    pub fn step(self) -> i64 {
        match self {
            Direction::N => 1,
            Direction::L => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Direction::N => Direction::L,
            Direction::L => Direction::N,
        }
    }
}

/// One indecomposable summand: lines `top, top+s, ..., top+(len-1)s` where
/// `s` is the direction's step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WdString {
    pub top: u32,
    pub len: u32,
}

/// Canonical order: length descending, then top ascending.
impl Ord for WdString {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.len.cmp(&self.len).then(self.top.cmp(&other.top))
    }
}

impl PartialOrd for WdString {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A Weil-Deligne object in canonical string form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WdObject {
    d: Rank,
    direction: Direction,
    strings: Vec<WdString>,
}

#[derive(Deserialize)]
struct RawWdObject {
    d: u32,
    direction: Direction,
    strings: Vec<WdString>,
}

/// Primitive parts of the Deligne filtration: entry `n` lists the primitive
/// line of each string of length `n + 1`, ascending with multiplicity.
pub type PrimitiveParts = Vec<Vec<u32>>;

impl WdObject {
    pub fn from_strings(d: Rank, direction: Direction, mut strings: Vec<WdString>) -> Result<Self> {
        for s in &strings {
            if s.top >= d.get() {
                return Err(Error::MalformedWd(format!(
                    "string top {} outside Z/{}Z",
                    s.top, d
                )));
            }
            if s.len == 0 || s.len > d.get() {
                return Err(Error::MalformedWd(format!(
                    "string length {} not in 1..={}",
                    s.len, d
                )));
            }
        }
        strings.sort();
        Ok(WdObject {
            d,
            direction,
            strings,
        })
    }

    /// Parses `{"d":…, "direction":"L", "strings":[{"top":…, "len":…}, …]}`.
    pub fn from_json(input: &str) -> Result<Self> {
        let raw: RawWdObject =
            serde_json::from_str(input).map_err(|e| Error::MalformedWd(e.to_string()))?;
        Self::from_strings(Rank::new(raw.d)?, raw.direction, raw.strings)
    }

    /// Decomposes an explicit operator. `labels[x]` is the character index of
    /// basis vector `x`, and `matrix[y][x] = 1` means `x` is sent to `y`.
    ///
    /// The matrix must have 0/1 entries with at most one nonzero per row and
    /// column, respect the labels in the given direction, and be nilpotent
    /// with chains no longer than `d`.
    pub fn from_operator(
        d: Rank,
        labels: &[u32],
        matrix: &[Vec<i64>],
        direction: Direction,
    ) -> Result<Self> {
        let n = labels.len();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::MalformedWd(format!("operator must be {n}x{n}")));
        }
        if let Some(&bad) = labels.iter().find(|&&a| a >= d.get()) {
            return Err(Error::MalformedWd(format!("label {bad} outside Z/{d}Z")));
        }
        let mut image_of: Vec<Option<usize>> = vec![None; n];
        let mut in_image = vec![false; n];
        for (y, row) in matrix.iter().enumerate() {
            for (x, &v) in row.iter().enumerate() {
                match v {
                    0 => continue,
                    1 => {}
                    _ => {
                        return Err(Error::MalformedWd(format!(
                            "entry ({y},{x}) is {v}, expected 0/1"
                        )))
                    }
                }
                if image_of[x].is_some() || in_image[y] {
                    return Err(Error::MalformedWd(
                        "more than one nonzero in a row or column".into(),
                    ));
                }
                if labels[y] != d.reduce(labels[x] as i64 + direction.step()) {
                    return Err(Error::MalformedWd(format!(
                        "vector {x} (line {}) mapped to vector {y} (line {}) against direction {:?}",
                        labels[x], labels[y], direction
                    )));
                }
                image_of[x] = Some(y);
                in_image[y] = true;
            }
        }
        let mut visited = vec![false; n];
        let mut strings = Vec::new();
        for start in (0..n).filter(|&x| !in_image[x]) {
            let mut len = 0u32;
            let mut cur = Some(start);
            while let Some(x) = cur {
                visited[x] = true;
                len += 1;
                cur = image_of[x];
            }
            strings.push(WdString {
                top: labels[start],
                len,
            });
        }
        if visited.iter().any(|v| !v) {
            return Err(Error::MalformedWd("operator is not nilpotent".into()));
        }
        Self::from_strings(d, direction, strings)
    }

    pub fn rank(&self) -> Rank {
        self.d
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn strings(&self) -> &[WdString] {
        &self.strings
    }

    pub fn dim(&self) -> usize {
        self.strings.iter().map(|s| s.len as usize).sum()
    }

    /// Lines of a string in operator order, starting from the top.
    pub fn string_lines(&self, s: &WdString) -> Vec<u32> {
        (0..s.len as i64)
            .map(|t| self.d.reduce(s.top as i64 + t * self.direction.step()))
            .collect()
    }

    /// The semisimple part as a sorted multiset of character indices.
    pub fn lines(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .strings
            .iter()
            .flat_map(|s| self.string_lines(s))
            .collect();
        out.sort_unstable();
        out
    }

    /// Explicit operator, one basis vector per line, strings laid out in
    /// canonical order. Returns `(labels, matrix)` in the convention of
    /// [`WdObject::from_operator`].
    pub fn to_operator(&self) -> (Vec<u32>, Matrix) {
        let n = self.dim();
        let mut labels = Vec::with_capacity(n);
        let mut matrix = vec![vec![0; n]; n];
        for s in &self.strings {
            let start = labels.len();
            labels.extend(self.string_lines(s));
            for t in 1..s.len as usize {
                matrix[start + t][start + t - 1] = 1;
            }
        }
        (labels, matrix)
    }

    pub fn jordan_type(&self) -> Partition {
        Partition::new(self.strings.iter().map(|s| s.len).collect())
    }

    fn primitive_line(&self, s: &WdString) -> u32 {
        match self.direction {
            Direction::L => self.d.reduce(s.top as i64 - (s.len as i64 - 1)),
            Direction::N => s.top,
        }
    }

    pub fn deligne_primitive_parts(&self) -> PrimitiveParts {
        let longest = self.strings.first().map_or(0, |s| s.len as usize);
        let mut parts = vec![Vec::new(); longest];
        for s in &self.strings {
            parts[s.len as usize - 1].push(self.primitive_line(s));
        }
        for p in &mut parts {
            p.sort_unstable();
        }
        parts
    }

    /// Rebuilds the object from its primitive parts.
    pub fn from_primitive_parts(d: Rank, direction: Direction, parts: &[Vec<u32>]) -> Result<Self> {
        let mut strings = Vec::new();
        for (n, lines) in parts.iter().enumerate() {
            for &p in lines {
                if p >= d.get() {
                    return Err(Error::MalformedWd(format!(
                        "primitive line {p} outside Z/{d}Z"
                    )));
                }
                let top = match direction {
                    Direction::L => d.reduce(p as i64 + n as i64),
                    Direction::N => p,
                };
                strings.push(WdString {
                    top,
                    len: n as u32 + 1,
                });
            }
        }
        Self::from_strings(d, direction, strings)
    }

    /// Exchanges `N` and `L` keeping every string's set of lines.
    pub fn transpose(&self) -> Self {
        let step = self.direction.step();
        let strings = self
            .strings
            .iter()
            .map(|s| WdString {
                top: self.d.reduce(s.top as i64 + step * (s.len as i64 - 1)),
                len: s.len,
            })
            .collect();
        WdObject::from_strings(self.d, self.direction.flip(), strings).expect("lengths preserved")
    }

    /// Twist by `nu_W^k`: every line index moves by `k`.
    pub fn twist(&self, k: i64) -> Self {
        let strings = self
            .strings
            .iter()
            .map(|s| WdString {
                top: self.d.reduce(s.top as i64 + k),
                len: s.len,
            })
            .collect();
        WdObject::from_strings(self.d, self.direction, strings).expect("lengths preserved")
    }
}

impl fmt::Display for WdObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[", self.direction)?;
        for (n, s) in self.strings.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            let lines: Vec<String> = self.string_lines(s).iter().map(u32::to_string).collect();
            f.write_str(&lines.join(">"))?;
        }
        f.write_str("]")
    }
}

/// The transposed Weil-Deligne parameter `(sigma^ss(pi_I), L(pi_I))`:
/// lines `0, ..., d-1` once each, with `L` sending line `a` to `a - 1` exactly
/// for `a in I`.
pub fn wd_elliptic(subset: &RootSubset) -> Result<WdObject> {
    subset.require_strict()?;
    let d = subset.rank();
    let n = d.get() as i64;
    let mut strings = Vec::new();
    // A string starts at each line with no incoming arrow from above.
    for top in (0..n).filter(|&a| !subset.contains_mod(a + 1)) {
        let mut len = 1;
        while subset.contains_mod(top - (len - 1)) {
            len += 1;
        }
        strings.push(WdString {
            top: top as u32,
            len: len as u32,
        });
    }
    WdObject::from_strings(d, Direction::L, strings)
}

pub fn jordan_type(x: &WdObject) -> Partition {
    x.jordan_type()
}

pub fn deligne_primitive_parts(x: &WdObject) -> PrimitiveParts {
    x.deligne_primitive_parts()
}

pub fn transpose_wd(x: &WdObject) -> WdObject {
    x.transpose()
}

pub fn twist_wd(x: &WdObject, k: i64) -> WdObject {
    x.twist(k)
}
