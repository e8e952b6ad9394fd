//! Root and Weyl-group combinatorics of `GL_d` with its affine node.
//!
//! Everything here is a pure function of small immutable values: Coxeter
//! rotation of subsets, the Levi and Whittaker partitions attached to a strict
//! subset, descent sets of permutations, the degree function `partial`, and
//! Jacquet modules as multisets of torus characters.

mod partition;
mod permutation;
mod subset;

use std::collections::BTreeMap;

use serde::Serialize;

pub use partition::Partition;
pub use permutation::{AllPermutations, Permutation};
pub use subset::{Rank, RootSubset, MAX_RANK};

use crate::error::{Error, Result};

/// A character of the diagonal torus, recorded by its exponents on the
/// generators `eps_0, ..., eps_{d-1}` (each exponent in `Z/dZ`).
///
/// The central factor `nu_G^{(1-d)/2}` is dropped; it is Weyl-invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct TorusCharacter {
    exponents: Vec<u32>,
}

impl TorusCharacter {
    /// The half-sum character `delta = prod eps_k^k`, exponents `(0, 1, ..., d-1)`.
    pub fn delta(d: Rank) -> Self {
        TorusCharacter {
            exponents: (0..d.get()).collect(),
        }
    }

    pub fn new(d: Rank, exponents: Vec<u32>) -> Result<Self> {
        if exponents.len() != d.get() as usize {
            return Err(Error::OutOfBounds(format!(
                "torus character needs {} exponents, got {}",
                d,
                exponents.len()
            )));
        }
        let n = d.get();
        Ok(TorusCharacter {
            exponents: exponents.into_iter().map(|e| e % n).collect(),
        })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `w^{-1}(self)`. Since `w^{-1}(eps_k) = eps_{w^{-1}(k)}`, position `x` of the
    /// result carries the exponent found at position `w(x)`.
    pub fn act_inverse(&self, w: &Permutation) -> Self {
        let exponents = (0..self.exponents.len() as u32)
            .map(|x| self.exponents[w.apply(x) as usize])
            .collect();
        TorusCharacter { exponents }
    }

    /// Pairwise-distinct exponents, so the stabilizer in the Weyl group is trivial.
    pub fn is_regular(&self) -> bool {
        let mut sorted = self.exponents.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

/// Which family a Jacquet module is computed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum JacquetKind {
    /// The mod-`l` irreducibles `pi_I`, `I` strict in the affine set.
    Pi,
    /// The banal irreducibles `v_I`, `I` inside `S`.
    V,
}

/// `{(a + k) mod d : a in I}`.
pub fn coxeter_shift(subset: &RootSubset, k: i64) -> RootSubset {
    subset.shift(k)
}

/// The block sizes of the Levi subgroup attached to a strict subset.
///
/// Each maximal cyclic run of `r` consecutive members contributes a part `r + 1`;
/// every other position contributes a part `1`.
pub fn levi_partition(subset: &RootSubset) -> Result<Partition> {
    subset.require_strict()?;
    let d = subset.rank().get();
    // A block starts at every position b with alpha_b absent, and then absorbs
    // b+1, b+2, ... for as long as those roots are present.
    let mut parts = Vec::with_capacity(d as usize - subset.len());
    for b in (0..d).filter(|&b| !subset.contains(b)) {
        let mut size = 1;
        while subset.contains((b + size) % d) {
            size += 1;
        }
        parts.push(size);
    }
    Ok(Partition::new(parts))
}

/// Length of the longest chain `alpha_a, alpha_{a-1}, ...` of members ending at `a`.
fn descending_depth(subset: &RootSubset, a: u32) -> u32 {
    let d = subset.rank().get();
    let mut depth = 0;
    while depth < d && subset.contains_mod(a as i64 - depth as i64) {
        depth += 1;
    }
    depth
}

/// The Whittaker partition `lambda_I = (|A_1|, |A_2|, ...)`, with
/// `A_k = {a : depth(a) = k - 1}`.
pub fn whittaker_partition(subset: &RootSubset) -> Result<Partition> {
    subset.require_strict()?;
    let d = subset.rank().get();
    let mut counts = vec![0u32; d as usize];
    for a in 0..d {
        counts[descending_depth(subset, a) as usize] += 1;
    }
    Ok(Partition::new(counts))
}

/// The sets `A_1, A_2, ...` underlying [`whittaker_partition`].
pub fn whittaker_sets(subset: &RootSubset) -> Result<Vec<RootSubset>> {
    subset.require_strict()?;
    let d = subset.rank();
    let mut sets = vec![RootSubset::empty(d); d.get() as usize];
    for a in 0..d.get() {
        let depth = descending_depth(subset, a) as usize;
        sets[depth] = sets[depth].with(a)?;
    }
    while sets.last().is_some_and(|s| s.is_empty()) {
        sets.pop();
    }
    Ok(sets)
}

/// Classical and affine descent sets of `w`.
pub fn descents(w: &Permutation) -> (RootSubset, RootSubset) {
    w.descents()
}

/// The degree function `partial_I(k) = k - |I Δ {1..k}|`, extended `d`-periodically.
pub fn partial(subset: &RootSubset, k: i64) -> Result<i64> {
    subset.require_classical()?;
    let k = subset.rank().reduce(k);
    let prefix = RootSubset::interval(subset.rank(), 1, k)?;
    let sym_diff = subset.bitmask() ^ prefix.bitmask();
    Ok(k as i64 - sym_diff.count_ones() as i64)
}

/// `J(i, I) = I ∪ {i+1, ..., d-1}`.
pub fn j_corner(i: u32, subset: &RootSubset) -> Result<RootSubset> {
    subset.require_classical()?;
    let d = subset.rank();
    if i >= d.get() {
        return Err(Error::IndexOutOfRange {
            index: i,
            d: d.get(),
        });
    }
    subset.union(&RootSubset::interval(d, i + 1, d.get() - 1)?)
}

/// The normalized Jacquet module along the Borel as a multiset of torus
/// characters, by enumeration of the symmetric group.
///
/// `Pi`: characters `w^{-1}(delta)` over all `w` whose affine descent set is `I`
/// (empty for `I = ∅`, the cuspidal one). `V`: same with the classical descent set.
pub fn jacquet_module(kind: JacquetKind, subset: &RootSubset) -> Result<Vec<TorusCharacter>> {
    match kind {
        JacquetKind::Pi => subset.require_strict()?,
        JacquetKind::V => subset.require_classical()?,
    }
    let d = subset.rank();
    if kind == JacquetKind::Pi && subset.is_empty() {
        return Ok(Vec::new());
    }
    let delta = TorusCharacter::delta(d);
    let mut out: Vec<TorusCharacter> = Permutation::all(d)
        .filter(|w| {
            let (classical, affine) = w.descents();
            match kind {
                JacquetKind::Pi => affine == *subset,
                JacquetKind::V => classical == *subset,
            }
        })
        .map(|w| delta.act_inverse(&w))
        .collect();
    out.sort();
    Ok(out)
}

/// Number of permutations with each affine descent set, by enumeration.
pub fn affine_descent_classes(d: Rank) -> BTreeMap<RootSubset, usize> {
    let mut classes = BTreeMap::new();
    for w in Permutation::all(d) {
        *classes.entry(w.descents().1).or_insert(0) += 1;
    }
    classes
}

/// Checks `r_B(v_I) = r_B(pi_I) + r_B(pi_{I ∪ {0}})` as multisets, for `I ⊊ S`.
pub fn jacquet_consistency(subset: &RootSubset) -> Result<bool> {
    subset.require_classical()?;
    if *subset == RootSubset::classical_full(subset.rank()) {
        return Err(Error::OutOfBounds(format!(
            "{subset} must be a proper subset of S"
        )));
    }
    let mut rhs = jacquet_module(JacquetKind::Pi, subset)?;
    rhs.extend(jacquet_module(JacquetKind::Pi, &subset.with(0)?)?);
    rhs.sort();
    Ok(jacquet_module(JacquetKind::V, subset)? == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rank(d: u32) -> Rank {
        Rank::new(d).unwrap()
    }

    fn set(d: u32, xs: &[u32]) -> RootSubset {
        RootSubset::from_indices(rank(d), xs.iter().copied()).unwrap()
    }

    fn part(xs: &[u32]) -> Partition {
        Partition::new(xs.to_vec())
    }

    #[test]
    fn coxeter_shift_examples() {
        assert_eq!(coxeter_shift(&set(4, &[1, 3]), 1), set(4, &[0, 2]));
        assert_eq!(coxeter_shift(&set(3, &[]), 2), set(3, &[]));
        assert_eq!(coxeter_shift(&set(5, &[0, 4]), 1), set(5, &[0, 1]));
        assert_eq!(coxeter_shift(&set(5, &[0, 4]), -1), set(5, &[3, 4]));
        assert_eq!(coxeter_shift(&set(5, &[0, 4]), 10), set(5, &[0, 4]));
    }

    #[test]
    fn levi_partition_examples() {
        assert_eq!(levi_partition(&set(4, &[1, 2])).unwrap(), part(&[3, 1]));
        assert_eq!(levi_partition(&set(4, &[])).unwrap(), part(&[1, 1, 1, 1]));
        assert_eq!(levi_partition(&set(4, &[0, 1, 3])).unwrap(), part(&[4]));
        assert_eq!(levi_partition(&set(1, &[])).unwrap(), part(&[1]));
        assert!(matches!(
            levi_partition(&RootSubset::affine_full(rank(4))),
            Err(Error::NotStrict(_))
        ));
    }

    #[test]
    fn whittaker_partition_examples() {
        assert_eq!(
            whittaker_partition(&set(4, &[1, 2])).unwrap(),
            part(&[2, 1, 1])
        );
        for d in 1..=7 {
            assert_eq!(whittaker_partition(&set(d, &[])).unwrap(), part(&[d]));
            for missing in 0..d {
                let i = RootSubset::affine_full(rank(d)).without(missing);
                assert_eq!(whittaker_partition(&i).unwrap(), Partition::ones(d));
            }
        }
        assert!(whittaker_partition(&RootSubset::affine_full(rank(2))).is_err());
    }

    #[test]
    fn whittaker_sets_recover_subset() {
        // I is the complement of A_1, and A_{k+1} ⊂ A_k + 1.
        for d in 1..=6 {
            for i in RootSubset::all_strict(rank(d)) {
                let sets = whittaker_sets(&i).unwrap();
                assert_eq!(sets[0].complement(), i);
                for pair in sets.windows(2) {
                    assert!(pair[1].is_subset_of(&pair[0].shift(1)).unwrap());
                }
            }
        }
    }

    #[test]
    fn descent_examples() {
        let d3 = rank(3);
        let (c, a) = descents(&Permutation::identity(d3));
        assert_eq!((c, a), (set(3, &[1, 2]), set(3, &[1, 2])));
        let (c, a) = descents(&Permutation::coxeter(d3));
        assert_eq!((c, a), (set(3, &[1]), set(3, &[0, 1])));
        let swap = Permutation::new(rank(2), vec![1, 0]).unwrap();
        assert_eq!(descents(&swap), (set(2, &[]), set(2, &[0])));
    }

    #[test]
    fn partial_examples() {
        let i = set(4, &[1, 3]);
        let values: Vec<i64> = (0..4).map(|k| partial(&i, k).unwrap()).collect();
        assert_eq!(values, vec![-2, 0, 0, 2]);
        assert_eq!(partial(&i, 5).unwrap(), 0);
        assert_eq!(partial(&i, -1).unwrap(), 2);
        for d in 1..=6 {
            for k in -3..10 {
                assert_eq!(partial(&set(d, &[]), k).unwrap(), 0);
            }
            let s = RootSubset::classical_full(rank(d));
            for k in 0..d as i64 {
                assert_eq!(partial(&s, k).unwrap(), 1 - d as i64 + 2 * k);
            }
        }
        assert!(matches!(
            partial(&set(3, &[0]), 1),
            Err(Error::NotClassical(_))
        ));
    }

    #[test]
    fn j_corner_examples() {
        assert_eq!(j_corner(2, &set(4, &[1])).unwrap(), set(4, &[1, 3]));
        assert_eq!(
            j_corner(0, &set(4, &[])).unwrap(),
            RootSubset::classical_full(rank(4))
        );
        assert_eq!(j_corner(3, &set(4, &[2])).unwrap(), set(4, &[2]));
        assert!(j_corner(1, &set(4, &[0])).is_err());
        assert!(j_corner(4, &set(4, &[])).is_err());
    }

    #[test]
    fn jacquet_examples() {
        assert!(jacquet_module(JacquetKind::Pi, &set(3, &[]))
            .unwrap()
            .is_empty());
        let pi = jacquet_module(JacquetKind::Pi, &set(2, &[1])).unwrap();
        assert_eq!(pi, vec![TorusCharacter::new(rank(2), vec![0, 1]).unwrap()]);
        let v = jacquet_module(JacquetKind::V, &set(2, &[])).unwrap();
        assert_eq!(v, vec![TorusCharacter::new(rank(2), vec![1, 0]).unwrap()]);
        assert!(jacquet_module(JacquetKind::V, &set(2, &[0])).is_err());
        assert!(jacquet_module(JacquetKind::Pi, &RootSubset::affine_full(rank(2))).is_err());
    }

    #[test]
    fn enumeration_checks() {
        let classes = affine_descent_classes(rank(3));
        assert_eq!(classes.len(), 6);
        assert_eq!(classes.values().sum::<usize>(), 6);
        assert!(!classes.contains_key(&set(3, &[])));
        for d in 2..=5 {
            for i in RootSubset::all_classical(rank(d)) {
                if i != RootSubset::classical_full(rank(d)) {
                    assert!(jacquet_consistency(&i).unwrap());
                }
            }
            assert!(jacquet_consistency(&RootSubset::classical_full(rank(d))).is_err());
        }
    }

    #[test]
    fn delta_is_regular() {
        for d in 1..=10 {
            assert!(TorusCharacter::delta(rank(d)).is_regular());
        }
        assert!(!TorusCharacter::new(rank(3), vec![0, 3, 1])
            .unwrap()
            .is_regular());
    }

    fn strict_subset() -> impl Strategy<Value = RootSubset> {
        (1u32..=10).prop_flat_map(|d| {
            (0u64..((1u64 << d) - 1))
                .prop_map(move |bits| RootSubset::from_bitmask(rank(d), bits).unwrap())
        })
    }

    proptest! {
        #[test]
        fn levi_transpose_is_whittaker(i in strict_subset()) {
            let levi = levi_partition(&i).unwrap();
            prop_assert_eq!(levi.weight(), i.rank().get());
            prop_assert_eq!(levi.len(), i.rank().get() as usize - i.len());
            prop_assert_eq!(levi.transpose(), whittaker_partition(&i).unwrap());
        }

        #[test]
        fn shift_is_an_action_commuting_with_partitions(i in strict_subset(), k in -20i64..20, m in -20i64..20) {
            let shifted = coxeter_shift(&i, k);
            prop_assert!(shifted.is_strict());
            prop_assert_eq!(shifted.len(), i.len());
            prop_assert_eq!(coxeter_shift(&shifted, m), coxeter_shift(&i, k + m));
            prop_assert_eq!(coxeter_shift(&i, i.rank().get() as i64), i);
            prop_assert_eq!(levi_partition(&shifted).unwrap(), levi_partition(&i).unwrap());
            prop_assert_eq!(whittaker_partition(&shifted).unwrap(), whittaker_partition(&i).unwrap());
        }
    }
}
