//! The mod-`l` Langlands-Jacquet transfer restricted to the unipotent block.

use std::fmt;

use serde::Serialize;

use crate::combinatorics::{Rank, RootSubset};
use crate::error::Result;
use crate::grothendieck::PiBasisClass;

/// A virtual representation of `D^×` supported on the unramified characters
/// `nu_D^j`, `j in Z/dZ`. Coefficient `j` is the multiplicity of `[nu_D^j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DVirtualClass {
    #[serde(skip)]
    d: Rank,
    coeffs: Vec<i64>,
}

impl DVirtualClass {
    pub fn zero(d: Rank) -> Self {
        DVirtualClass {
            d,
            coeffs: vec![0; d.get() as usize],
        }
    }

    pub fn from_coeffs(d: Rank, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != d.get() as usize {
            return Err(crate::Error::OutOfBounds(format!(
                "D-class needs {} coefficients, got {}",
                d,
                coeffs.len()
            )));
        }
        Ok(DVirtualClass { d, coeffs })
    }

    pub fn rank(&self) -> Rank {
        self.d
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Twist by `nu_D^k`: coefficient at `j` moves to `j + k`.
    pub fn rotate(&self, k: i64) -> Self {
        let mut coeffs = vec![0; self.coeffs.len()];
        for (j, &c) in self.coeffs.iter().enumerate() {
            coeffs[self.d.reduce(j as i64 + k) as usize] = c;
        }
        DVirtualClass { d: self.d, coeffs }
    }

    fn add_scaled(&mut self, other: &Self, factor: i64) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += factor * b;
        }
    }
}

impl fmt::Display for DVirtualClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            f.write_str(sign)?;
            if c.unsigned_abs() != 1 {
                write!(f, "{}", c.unsigned_abs())?;
            }
            write!(f, "[nu_D^{j}]")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `LJ(pi_I) = (-1)^{|I|} Σ_{j ∉ I} [nu_D^j]`.
pub fn lj(subset: &RootSubset) -> Result<DVirtualClass> {
    subset.require_strict()?;
    let d = subset.rank();
    let sign = if subset.len().is_multiple_of(2) {
        1
    } else {
        -1
    };
    let coeffs = (0..d.get())
        .map(|j| if subset.contains(j) { 0 } else { sign })
        .collect();
    Ok(DVirtualClass { d, coeffs })
}

/// `LJ(pi_I) = sign · |LJ(pi_I)|` with `|LJ(pi_I)|` multiplicity free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LjEffective {
    pub sign: i8,
    /// The exponents `j` of the characters `nu_D^j` in `|LJ(pi_I)|`, ascending.
    pub chars: Vec<u32>,
}

pub fn lj_effective(subset: &RootSubset) -> Result<LjEffective> {
    subset.require_strict()?;
    let sign = if subset.len().is_multiple_of(2) {
        1
    } else {
        -1
    };
    Ok(LjEffective {
        sign,
        chars: subset.complement().indices(),
    })
}

/// Linear extension of [`lj`] over the `[pi_J]` basis.
pub fn lj_linear(x: &PiBasisClass) -> Result<DVirtualClass> {
    let mut out = DVirtualClass::zero(x.rank());
    for (j, c) in x.terms() {
        out.add_scaled(&lj(j)?, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grothendieck::class_i;

    fn rank(d: u32) -> Rank {
        Rank::new(d).unwrap()
    }

    fn set(d: u32, xs: &[u32]) -> RootSubset {
        RootSubset::from_indices(rank(d), xs.iter().copied()).unwrap()
    }

    #[test]
    fn lj_examples() {
        assert_eq!(lj(&set(3, &[1])).unwrap().coeffs(), &[-1, 0, -1]);
        assert_eq!(lj(&set(2, &[1])).unwrap().coeffs(), &[-1, 0]);
        for d in 1..=6 {
            assert_eq!(
                lj(&set(d, &[])).unwrap().coeffs(),
                vec![1; d as usize].as_slice()
            );
        }
        assert!(lj(&RootSubset::affine_full(rank(3))).is_err());
    }

    #[test]
    fn lj_effective_examples() {
        assert_eq!(
            lj_effective(&set(3, &[1])).unwrap(),
            LjEffective {
                sign: -1,
                chars: vec![0, 2]
            }
        );
        assert_eq!(
            lj_effective(&set(4, &[1, 3])).unwrap(),
            LjEffective {
                sign: 1,
                chars: vec![0, 2]
            }
        );
        assert_eq!(
            lj_effective(&set(1, &[])).unwrap(),
            LjEffective {
                sign: 1,
                chars: vec![0]
            }
        );
    }

    #[test]
    fn lj_linear_examples() {
        for d in 1..=6 {
            let s = RootSubset::classical_full(rank(d));
            let expected_sign = if (d - 1) % 2 == 0 { 1 } else { -1 };
            let mut expected = vec![0; d as usize];
            expected[0] = expected_sign;
            assert_eq!(
                lj_linear(&class_i(&s).unwrap()).unwrap().coeffs(),
                expected.as_slice()
            );
            assert!(lj_linear(&PiBasisClass::zero(rank(d))).unwrap().is_zero());
        }
        assert!(lj_linear(&class_i(&set(3, &[1])).unwrap())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn json_is_plain_array() {
        assert_eq!(
            serde_json::to_string(&lj(&set(3, &[1])).unwrap()).unwrap(),
            "[-1,0,-1]"
        );
    }

    #[test]
    fn display() {
        assert_eq!(lj(&set(3, &[1])).unwrap().to_string(), "-[nu_D^0]-[nu_D^2]");
        assert_eq!(DVirtualClass::zero(rank(2)).to_string(), "0");
    }
}
