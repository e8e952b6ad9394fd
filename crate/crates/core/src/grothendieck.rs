//! Integer Grothendieck-group bookkeeping for the unipotent block.
//!
//! Classes are finitely supported integer combinations over one of two bases
//! indexed by strict subsets: the irreducibles `[pi_J]` or the induced classes
//! `[i_J]`. The two are related by `[i_I] = Σ_{J ⊇ I} [pi_J]` and its Möbius
//! inverse. Coefficients are exact `i64`; nothing is reduced modulo anything.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::combinatorics::{Rank, RootSubset};
use crate::error::Result;

/// Marker for a basis of the Grothendieck group indexed by strict subsets.
pub trait Basis: Clone + fmt::Debug + PartialEq + Eq {
    /// Prefix used when printing basis vectors, e.g. `pi` or `i`.
    const SYMBOL: &'static str;
}

/// The basis of irreducible classes `[pi_J]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiBasis;

/// The basis of parabolically induced classes `[i_J]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InducedBasis;

impl Basis for PiBasis {
    const SYMBOL: &'static str = "pi";
}

impl Basis for InducedBasis {
    const SYMBOL: &'static str = "i";
}

/// A virtual class: integer coefficients on strict subsets of a fixed rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualClass<B: Basis> {
    d: Rank,
    coeffs: BTreeMap<RootSubset, i64>,
    basis: PhantomData<B>,
}

pub type PiBasisClass = VirtualClass<PiBasis>;
pub type InducedBasisClass = VirtualClass<InducedBasis>;

impl<B: Basis> VirtualClass<B> {
    pub fn zero(d: Rank) -> Self {
        VirtualClass {
            d,
            coeffs: BTreeMap::new(),
            basis: PhantomData,
        }
    }

    /// The basis vector at `subset`.
    pub fn unit(subset: &RootSubset) -> Result<Self> {
        let mut out = Self::zero(subset.rank());
        out.add_term(subset, 1)?;
        Ok(out)
    }

    pub fn rank(&self) -> Rank {
        self.d
    }

    /// Adds `coeff` to the coefficient at `subset`, rejecting non-strict or
    /// wrong-rank indices.
    pub fn add_term(&mut self, subset: &RootSubset, coeff: i64) -> Result<()> {
        subset.require_rank(self.d)?;
        subset.require_strict()?;
        let entry = self.coeffs.entry(*subset).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(subset);
        }
        Ok(())
    }

    pub fn coeff(&self, subset: &RootSubset) -> i64 {
        self.coeffs.get(subset).copied().unwrap_or(0)
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&RootSubset, i64)> {
        self.coeffs.iter().map(|(s, &c)| (s, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, -1)
    }

    pub fn add_scaled(&self, other: &Self, factor: i64) -> Result<Self> {
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, factor * c)?;
        }
        Ok(out)
    }

    /// Permutes coefficients along the Coxeter rotation `I -> c^k I`.
    pub fn twist(&self, k: i64) -> Self {
        let coeffs = self.coeffs.iter().map(|(s, &c)| (s.shift(k), c)).collect();
        VirtualClass {
            d: self.d,
            coeffs,
            basis: PhantomData,
        }
    }

    /// Dense coefficient vector over all strict subsets in basis order.
    pub fn to_dense(&self) -> Vec<i64> {
        RootSubset::all_strict(self.d)
            .iter()
            .map(|s| self.coeff(s))
            .collect()
    }
}

impl<B: Basis> fmt::Display for VirtualClass<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (s, c)) in self.terms().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if n > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.unsigned_abs();
            f.write_str(sign)?;
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "[{}{}]", B::SYMBOL, s)?;
        }
        Ok(())
    }
}

/// JSON object keyed by the bitmask of each basis vector.
impl<B: Basis> Serialize for VirtualClass<B> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (s, c) in self.terms() {
            map.serialize_entry(&s.bitmask().to_string(), &c)?;
        }
        map.end()
    }
}

/// `[i_I] = Σ_{I ⊆ J ⊊ S̃} [pi_J]`.
pub fn class_i(subset: &RootSubset) -> Result<PiBasisClass> {
    subset.require_strict()?;
    let d = subset.rank();
    let mut out = PiBasisClass::zero(d);
    for j in subset.supersets_within(&RootSubset::affine_full(d))? {
        if j.is_strict() {
            out.add_term(&j, 1)?;
        }
    }
    Ok(out)
}

/// `[pi_I] = Σ_{I ⊆ J ⊊ S̃} (-1)^{|J∖I|} [i_J]`.
pub fn class_pi_in_i(subset: &RootSubset) -> Result<InducedBasisClass> {
    subset.require_strict()?;
    let d = subset.rank();
    let mut out = InducedBasisClass::zero(d);
    for j in subset.supersets_within(&RootSubset::affine_full(d))? {
        if j.is_strict() {
            out.add_term(&j, alternating_sign(j.len() - subset.len()))?;
        }
    }
    Ok(out)
}

/// Rewrites an `[i_J]`-combination in the `[pi_J]` basis.
pub fn induced_to_pi(x: &InducedBasisClass) -> Result<PiBasisClass> {
    let mut out = PiBasisClass::zero(x.rank());
    for (j, c) in x.terms() {
        out = out.add_scaled(&class_i(j)?, c)?;
    }
    Ok(out)
}

/// Reduction mod `l` of the banal irreducible `v_I`, `I ⊆ S`:
/// `[pi_I] + [pi_{I ∪ {0}}]`, or `[pi_S]` when `I = S`.
pub fn class_v(subset: &RootSubset) -> Result<PiBasisClass> {
    subset.require_classical()?;
    let mut out = PiBasisClass::unit(subset)?;
    let with_affine = subset.with(0)?;
    if with_affine.is_strict() {
        out.add_term(&with_affine, 1)?;
    }
    Ok(out)
}

/// `[v_I]` read off the exact resolution
/// `0 -> i_S -> ... -> ⊕ i_J -> i_I -> v_I -> 0`:
/// `Σ_{I ⊆ J ⊆ S} (-1)^{|J∖I|} [i_J]`.
pub fn class_v_from_resolution(subset: &RootSubset) -> Result<InducedBasisClass> {
    subset.require_classical()?;
    let d = subset.rank();
    let mut out = InducedBasisClass::zero(d);
    for j in subset.supersets_within(&RootSubset::classical_full(d))? {
        out.add_term(&j, alternating_sign(j.len() - subset.len()))?;
    }
    Ok(out)
}

/// The class of the reduction `h̄_i` of the lattice in `v_{{1..i}}`:
/// `[pi_{{1..i}}] + [pi_{{0..i}}]`, where the second term is dropped at
/// `i = d - 1` (it would be indexed by the non-strict set).
pub fn class_hbar(i: u32, d: Rank) -> Result<PiBasisClass> {
    if i >= d.get() {
        return Err(crate::Error::IndexOutOfRange {
            index: i,
            d: d.get(),
        });
    }
    let tail = RootSubset::interval(d, 1, i)?;
    class_v(&tail)
}

/// `twist_class(x, k)`: coefficients moved along `I -> c^k I`.
pub fn twist_class(x: &PiBasisClass, k: i64) -> PiBasisClass {
    x.twist(k)
}

/// Rows `r_l(v_I)` for `I ⊆ S` against columns `[pi_J]`, `J` strict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionMatrix {
    d: Rank,
    rows: Vec<RootSubset>,
    columns: Vec<RootSubset>,
    entries: Vec<Vec<u32>>,
}

impl DecompositionMatrix {
    pub fn rank(&self) -> Rank {
        self.d
    }

    pub fn rows(&self) -> &[RootSubset] {
        &self.rows
    }

    pub fn columns(&self) -> &[RootSubset] {
        &self.columns
    }

    pub fn entries(&self) -> &[Vec<u32>] {
        &self.entries
    }

    pub fn entry(&self, row: &RootSubset, column: &RootSubset) -> Option<u32> {
        let r = self.rows.iter().position(|x| x == row)?;
        let c = self.columns.iter().position(|x| x == column)?;
        Some(self.entries[r][c])
    }

    /// Tab-separated table. Columns are labelled `pi{..}`; each row starts
    /// with its bitmask and its index list.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("mask\tsubset");
        for c in &self.columns {
            out.push_str(&format!("\tpi{c}"));
        }
        out.push('\n');
        for (row, values) in self.rows.iter().zip(&self.entries) {
            out.push_str(&format!("{}\tv{}", row.bitmask(), row));
            for v in values {
                out.push_str(&format!("\t{v}"));
            }
            out.push('\n');
        }
        out
    }
}

pub fn decomposition_matrix(d: Rank) -> Result<DecompositionMatrix> {
    let rows = RootSubset::all_classical(d);
    let columns = RootSubset::all_strict(d);
    let mut entries = Vec::with_capacity(rows.len());
    for row in &rows {
        let class = class_v(row)?;
        let values = columns
            .iter()
            .map(|c| u32::try_from(class.coeff(c)).expect("decomposition numbers are nonnegative"))
            .collect();
        entries.push(values);
    }
    Ok(DecompositionMatrix {
        d,
        rows,
        columns,
        entries,
    })
}

fn alternating_sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn rank(d: u32) -> Rank {
        Rank::new(d).unwrap()
    }

    fn set(d: u32, xs: &[u32]) -> RootSubset {
        RootSubset::from_indices(rank(d), xs.iter().copied()).unwrap()
    }

    fn pi(d: u32, terms: &[(&[u32], i64)]) -> PiBasisClass {
        let mut out = PiBasisClass::zero(rank(d));
        for (xs, c) in terms {
            out.add_term(&set(d, xs), *c).unwrap();
        }
        out
    }

    fn ind(d: u32, terms: &[(&[u32], i64)]) -> InducedBasisClass {
        let mut out = InducedBasisClass::zero(rank(d));
        for (xs, c) in terms {
            out.add_term(&set(d, xs), *c).unwrap();
        }
        out
    }

    #[test]
    fn class_i_examples() {
        assert_eq!(
            class_i(&set(2, &[])).unwrap(),
            pi(2, &[(&[], 1), (&[0], 1), (&[1], 1)])
        );
        assert_eq!(class_i(&set(2, &[1])).unwrap(), pi(2, &[(&[1], 1)]));
        assert_eq!(
            class_i(&set(3, &[1])).unwrap(),
            pi(3, &[(&[1], 1), (&[0, 1], 1), (&[1, 2], 1)])
        );
        assert!(matches!(
            class_i(&RootSubset::affine_full(rank(2))),
            Err(Error::NotStrict(_))
        ));
    }

    #[test]
    fn class_pi_in_i_examples() {
        assert_eq!(
            class_pi_in_i(&set(2, &[])).unwrap(),
            ind(2, &[(&[], 1), (&[0], -1), (&[1], -1)])
        );
        assert_eq!(
            class_pi_in_i(&set(3, &[1, 2])).unwrap(),
            ind(3, &[(&[1, 2], 1)])
        );
        for d in 1..=5 {
            for missing in 0..d {
                let top = RootSubset::affine_full(rank(d)).without(missing);
                assert_eq!(
                    class_pi_in_i(&top).unwrap(),
                    InducedBasisClass::unit(&top).unwrap()
                );
            }
        }
    }

    #[test]
    fn class_v_examples() {
        assert_eq!(
            class_v(&set(2, &[])).unwrap(),
            pi(2, &[(&[], 1), (&[0], 1)])
        );
        assert_eq!(class_v(&set(2, &[1])).unwrap(), pi(2, &[(&[1], 1)]));
        assert_eq!(
            class_v(&set(3, &[2])).unwrap(),
            pi(3, &[(&[2], 1), (&[0, 2], 1)])
        );
        assert!(matches!(
            class_v(&set(3, &[0])),
            Err(Error::NotClassical(_))
        ));
    }

    #[test]
    fn class_hbar_examples() {
        assert_eq!(
            class_hbar(0, rank(2)).unwrap(),
            pi(2, &[(&[], 1), (&[0], 1)])
        );
        assert_eq!(class_hbar(1, rank(2)).unwrap(), pi(2, &[(&[1], 1)]));
        assert_eq!(class_hbar(3, rank(4)).unwrap(), pi(4, &[(&[1, 2, 3], 1)]));
        assert_eq!(
            class_hbar(1, rank(4)).unwrap(),
            pi(4, &[(&[1], 1), (&[0, 1], 1)])
        );
        assert_eq!(class_hbar(0, rank(1)).unwrap(), pi(1, &[(&[], 1)]));
        assert!(class_hbar(4, rank(4)).is_err());
    }

    #[test]
    fn twist_examples() {
        let x = pi(2, &[(&[1], 1)]);
        assert_eq!(twist_class(&x, 1), pi(2, &[(&[0], 1)]));
        assert_eq!(twist_class(&x, 2), x);
        for d in 1..=6 {
            let all = class_i(&RootSubset::empty(rank(d))).unwrap();
            for k in 0..d as i64 {
                assert_eq!(twist_class(&all, k), all);
            }
        }
    }

    #[test]
    fn non_strict_terms_are_rejected() {
        let mut x = PiBasisClass::zero(rank(2));
        assert!(x.add_term(&RootSubset::affine_full(rank(2)), 1).is_err());
        assert!(x.add_term(&set(3, &[]), 1).is_err());
    }

    #[test]
    fn decomposition_matrix_examples() {
        let m = decomposition_matrix(rank(2)).unwrap();
        assert_eq!(m.rows(), &[set(2, &[]), set(2, &[1])]);
        assert_eq!(m.columns(), &[set(2, &[]), set(2, &[0]), set(2, &[1])]);
        assert_eq!(m.entries(), &[vec![1, 1, 0], vec![0, 0, 1]]);

        let m1 = decomposition_matrix(rank(1)).unwrap();
        assert_eq!(m1.entries(), &[vec![1]]);

        for d in 1..=8 {
            let m = decomposition_matrix(rank(d)).unwrap();
            assert_eq!(m.rows().len(), 1 << (d - 1));
            assert_eq!(m.columns().len(), (1 << d) - 1);
            for (row, values) in m.rows().iter().zip(m.entries()) {
                let ones: Vec<&RootSubset> = m
                    .columns()
                    .iter()
                    .zip(values)
                    .filter(|(_, &v)| v == 1)
                    .map(|(c, _)| c)
                    .collect();
                assert!(values.iter().all(|&v| v <= 1));
                if *row == RootSubset::classical_full(rank(d)) {
                    assert_eq!(ones, vec![row]);
                } else {
                    assert_eq!(ones, vec![row, &row.with(0).unwrap()]);
                }
            }
        }
    }

    #[test]
    fn tsv_layout() {
        let tsv = decomposition_matrix(rank(2)).unwrap().to_tsv();
        assert_eq!(
            tsv,
            "mask\tsubset\tpi{}\tpi{0}\tpi{1}\n0\tv{}\t1\t1\t0\n2\tv{1}\t0\t0\t1\n"
        );
    }

    #[test]
    fn multiplicity_one() {
        for d in 1..=8 {
            let all = class_i(&RootSubset::empty(rank(d))).unwrap();
            assert!(all.terms().all(|(_, c)| c == 1));
            assert_eq!(all.terms().map(|(_, c)| c).sum::<i64>(), (1 << d) - 1);
        }
    }

    #[test]
    fn display() {
        let x = pi(2, &[(&[], 1), (&[0], -2)]);
        assert_eq!(x.to_string(), "[pi{}]-2[pi{0}]");
        assert_eq!(PiBasisClass::zero(rank(2)).to_string(), "0");
    }
}
