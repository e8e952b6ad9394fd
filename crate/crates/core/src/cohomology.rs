//! Bigraded model of `(R_pi^*)_{i,j}` for the elliptic principal series, with
//! its Lefschetz operator.
//!
//! The Frobenius index `i` and the `Pi` index `j` live in `Z/dZ`. A
//! one-dimensional space shifted by `[m]` sits in cohomological degree `-m`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{coxeter_shift, partial, Rank, RootSubset};
use crate::error::{Error, Result};
use crate::jacquet_langlands::lj_effective;
use crate::weil_deligne::{wd_elliptic, Direction, WdObject};

/// Every unipotent representation outside the elliptic principal series has
/// vanishing `R_pi^*`.
pub const NON_ELLIPTIC_TOTAL_DIM: usize = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub degree: i64,
    pub i: u32,
    pub j: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LefschetzKind {
    Iso,
    Zero,
}

/// The component `(R^n)_{i,j} -> (R^{n+2})_{i-1,j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LefschetzComponent {
    pub source: Cell,
    pub target: Cell,
    pub kind: LefschetzKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiGradedR {
    d: Rank,
    #[serde(serialize_with = "serialize_cells")]
    dims: BTreeMap<Cell, u32>,
    lefschetz: Vec<LefschetzComponent>,
}

fn serialize_cells<S: serde::Serializer>(
    dims: &BTreeMap<Cell, u32>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry {
        degree: i64,
        i: u32,
        j: u32,
        dim: u32,
    }
    s.collect_seq(dims.iter().map(|(c, &dim)| Entry {
        degree: c.degree,
        i: c.i,
        j: c.j,
        dim,
    }))
}

impl BiGradedR {
    pub fn rank(&self) -> Rank {
        self.d
    }

    pub fn dim(&self, degree: i64, i: u32, j: u32) -> u32 {
        self.dims.get(&Cell { degree, i, j }).copied().unwrap_or(0)
    }

    pub fn cells(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.dims.iter().map(|(&c, &n)| (c, n))
    }

    pub fn lefschetz(&self) -> &[LefschetzComponent] {
        &self.lefschetz
    }

    pub fn total_dim(&self) -> u64 {
        self.dims.values().map(|&n| n as u64).sum()
    }

    /// Degrees carrying a nonzero `(i, j)` component, ascending.
    pub fn degrees_at(&self, i: u32, j: u32) -> Vec<i64> {
        self.dims
            .keys()
            .filter(|c| c.i == i && c.j == j)
            .map(|c| c.degree)
            .collect()
    }

    pub fn column_is_zero(&self, j: u32) -> bool {
        self.dims.keys().all(|c| c.j != j)
    }

    /// `(i, j)` positions where the Lefschetz component is an isomorphism.
    pub fn iso_positions(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = self
            .lefschetz
            .iter()
            .filter(|c| c.kind == LefschetzKind::Iso)
            .map(|c| (c.source.i, c.source.j))
            .collect();
        out.sort_unstable();
        out
    }

    /// Relabels `(i, j)` as `(i + k, j + k)`.
    pub fn shifted(&self, k: i64) -> Self {
        let d = self.d;
        let move_cell = |c: Cell| Cell {
            degree: c.degree,
            i: d.reduce(c.i as i64 + k),
            j: d.reduce(c.j as i64 + k),
        };
        let dims = self.dims.iter().map(|(&c, &n)| (move_cell(c), n)).collect();
        let mut lefschetz: Vec<LefschetzComponent> = self
            .lefschetz
            .iter()
            .map(|c| LefschetzComponent {
                source: move_cell(c.source),
                target: move_cell(c.target),
                kind: c.kind,
            })
            .collect();
        lefschetz.sort_by_key(|c| (c.source.i, c.source.j));
        BiGradedR { d, dims, lefschetz }
    }

    /// Degree range `[1-d, d-1]`, and every Lefschetz component goes from a
    /// nonzero cell `(n, i, j)` to a nonzero cell `(n+2, i-1, j)`.
    pub fn check_invariants(&self) -> Result<()> {
        let bound = self.d.get() as i64 - 1;
        if let Some(c) = self.dims.keys().find(|c| c.degree.abs() > bound) {
            return Err(Error::OutOfBounds(format!(
                "cell {c:?} outside degrees [{}, {}]",
                -bound, bound
            )));
        }
        for comp in &self.lefschetz {
            let (s, t) = (comp.source, comp.target);
            let shape_ok =
                t.degree == s.degree + 2 && t.i == self.d.reduce(s.i as i64 - 1) && t.j == s.j;
            let cells_ok = self.dims.contains_key(&s) && self.dims.contains_key(&t);
            if comp.kind == LefschetzKind::Iso && !(shape_ok && cells_ok) {
                return Err(Error::OutOfBounds(format!(
                    "ill-formed Lefschetz component {comp:?}"
                )));
            }
        }
        Ok(())
    }

    /// Rows `i j degree dim lefschetz`, the last column describing the
    /// component leaving the cell.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("i\tj\tdegree\tdim\tlefschetz\n");
        for (c, n) in self.cells() {
            let kind = self
                .lefschetz
                .iter()
                .find(|l| l.source == c)
                .map_or("-", |l| match l.kind {
                    LefschetzKind::Iso => "iso",
                    LefschetzKind::Zero => "zero",
                });
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                c.i, c.j, c.degree, n, kind
            ));
        }
        out
    }
}

/// Degree of the `(i, j)` component for `j ∉ I`: `-partial_{c^{-j} I}(i - j)`.
fn cell_degree(subset: &RootSubset, i: u32, j: u32) -> Result<i64> {
    let rotated = coxeter_shift(subset, -(j as i64));
    Ok(-partial(&rotated, i as i64 - j as i64)?)
}

pub fn r_star(subset: &RootSubset) -> Result<BiGradedR> {
    subset.require_strict()?;
    let d = subset.rank();
    let mut dims = BTreeMap::new();
    let mut lefschetz = Vec::new();
    for j in (0..d.get()).filter(|&j| !subset.contains(j)) {
        for i in 0..d.get() {
            let source = Cell {
                degree: cell_degree(subset, i, j)?,
                i,
                j,
            };
            dims.insert(source, 1);
            let target = Cell {
                degree: source.degree + 2,
                i: d.reduce(i as i64 - 1),
                j,
            };
            let kind = if subset.contains(i) {
                LefschetzKind::Iso
            } else {
                LefschetzKind::Zero
            };
            lefschetz.push(LefschetzComponent {
                source,
                target,
                kind,
            });
        }
    }
    lefschetz.sort_by_key(|c| (c.source.i, c.source.j));
    Ok(BiGradedR { d, dims, lefschetz })
}

/// The `(i, j)` positions where `L_pi^*` is an isomorphism: `i ∈ I`, `j ∉ I`.
pub fn lefschetz(subset: &RootSubset) -> Result<Vec<(u32, u32)>> {
    Ok(r_star(subset)?.iso_positions())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SsEntry {
    pub j: u32,
    pub wd: WdObject,
}

/// A multiset of `nu_D^j ⊗ (WD object)` pairs, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SsPair {
    d: Rank,
    entries: Vec<SsEntry>,
}

impl SsPair {
    pub fn new(d: Rank, mut entries: Vec<SsEntry>) -> Self {
        entries.sort();
        SsPair { d, entries }
    }

    pub fn entries(&self) -> &[SsEntry] {
        &self.entries
    }
}

impl fmt::Display for SsPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("nu_D^{}⊗{}", e.j, e.wd))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Forgets degrees in `(R_pi^*, L_pi^*)` and splits along `j`, reading each
/// column as a WD object whose operator is the Lefschetz isomorphisms.
pub fn semisimplify_lhs(subset: &RootSubset) -> Result<SsPair> {
    let r = r_star(subset)?;
    let d = r.rank();
    let mut entries = Vec::new();
    for j in 0..d.get() {
        // One basis vector per unit of dimension, indexed by (cell, copy).
        let basis: Vec<(Cell, u32)> = r
            .cells()
            .filter(|(c, _)| c.j == j)
            .flat_map(|(c, n)| (0..n).map(move |copy| (c, copy)))
            .collect();
        if basis.is_empty() {
            continue;
        }
        let position: BTreeMap<(Cell, u32), usize> =
            basis.iter().enumerate().map(|(x, &b)| (b, x)).collect();
        let labels: Vec<u32> = basis.iter().map(|(c, _)| c.i).collect();
        let mut matrix = vec![vec![0; basis.len()]; basis.len()];
        for comp in r
            .lefschetz()
            .iter()
            .filter(|c| c.source.j == j && c.kind == LefschetzKind::Iso)
        {
            for copy in 0..r.dim(comp.source.degree, comp.source.i, j) {
                let x = position[&(comp.source, copy)];
                let y = position[&(comp.target, copy)];
                matrix[y][x] = 1;
            }
        }
        let wd = WdObject::from_operator(d, &labels, &matrix, Direction::L)?;
        entries.push(SsEntry { j, wd });
    }
    Ok(SsPair::new(d, entries))
}

/// `|LJ(pi_I)| ⊗ (sigma^ss(pi_I), L(pi_I))`.
pub fn rhs(subset: &RootSubset) -> Result<SsPair> {
    let wd = wd_elliptic(subset)?;
    let entries = lj_effective(subset)?
        .chars
        .into_iter()
        .map(|j| SsEntry { j, wd: wd.clone() })
        .collect();
    Ok(SsPair::new(subset.rank(), entries))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub subset: RootSubset,
    pub holds: bool,
    pub lhs: SsPair,
    pub rhs: SsPair,
}

pub fn verify_main_theorem(subset: &RootSubset) -> Result<VerifyReport> {
    let lhs = semisimplify_lhs(subset)?;
    let rhs = rhs(subset)?;
    Ok(VerifyReport {
        subset: *subset,
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyAll {
    pub d: Rank,
    pub verified: usize,
    pub total: usize,
    pub reports: Vec<VerifyReport>,
}

impl VerifyAll {
    pub fn all_hold(&self) -> bool {
        self.verified == self.total
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyReport> {
        self.reports.iter().filter(|r| !r.holds)
    }
}

/// Runs [`verify_main_theorem`] over every strict subset in parallel; reports
/// come back in basis order.
pub fn verify_all(d: Rank) -> Result<VerifyAll> {
    let reports = RootSubset::all_strict(d)
        .par_iter()
        .map(verify_main_theorem)
        .collect::<Result<Vec<_>>>()?;
    let verified = reports.iter().filter(|r| r.holds).count();
    Ok(VerifyAll {
        d,
        verified,
        total: reports.len(),
        reports,
    })
}

/// `r_star(c^k I)` against `r_star(I)` with `(i, j)` moved by `k`, Lefschetz
/// components included.
pub fn twist_equivariance_check(subset: &RootSubset, k: i64) -> Result<bool> {
    let twisted = r_star(&coxeter_shift(subset, k))?;
    Ok(twisted == r_star(subset)?.shifted(k))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadicEntry {
    pub degree: u32,
    /// Classical subset `J` of the class `v_J(Q_l)`.
    pub class: RootSubset,
    pub tate_twist: i64,
    /// Whether the entry is an extension of `v_J` by the cuspidal kernel.
    pub cuspidal_kernel: bool,
}

impl fmt::Display for LadicEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "H^{}: v_{}({})",
            self.degree, self.class, self.tate_twist
        )?;
        if self.cuspidal_kernel {
            f.write_str(" extended by K")?;
        }
        f.write_str(" ⊗ I_varpi")
    }
}

/// The `l`-adic cohomology of the Drinfeld tower up to the `I_varpi` factor:
/// degree `d-1` holds `v_∅` together with the cuspidal kernel, and degree
/// `d-1+i` holds `v_{1..i}(-i)` for `i = 1..d-1`.
pub fn ladic_cohomology(d: Rank) -> Result<Vec<LadicEntry>> {
    let top = d.get() - 1;
    let mut out = vec![LadicEntry {
        degree: top,
        class: RootSubset::empty(d),
        tate_twist: 0,
        cuspidal_kernel: true,
    }];
    for i in 1..d.get() {
        out.push(LadicEntry {
            degree: top + i,
            class: RootSubset::interval(d, 1, i)?,
            tate_twist: -(i as i64),
            cuspidal_kernel: false,
        });
    }
    Ok(out)
}
