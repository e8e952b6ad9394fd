//! Ext dimensions between parabolically induced and generic representations
//! as exterior-algebra Poincaré polynomials, and the `E_1` page computing
//! `(R_{pi_I}^*)_{i,0}` from the `(R_{i_J}^*)_{i,0}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::combinatorics::{j_corner, partial, RootSubset};
use crate::error::{Error, Result};

/// `dim Y_I = d - 1 - |I|`, the number of Levi blocks minus one.
pub fn dim_y(subset: &RootSubset) -> Result<u32> {
    subset.require_classical()?;
    Ok(subset.rank().get() - 1 - subset.len() as u32)
}

pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    (0..k).fold(1u64, |acc, m| acc * (n as u64 - m) / (m + 1))
}

/// Finitely supported Laurent polynomial with nonnegative coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PoincarePolynomial {
    coeffs: BTreeMap<i32, u64>,
}

impl PoincarePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `t^shift (1 + t)^n`, the Poincaré polynomial of `⋀^* Y` with `dim Y = n`.
    pub fn exterior(n: u32, shift: i32) -> Self {
        let coeffs = (0..=n)
            .map(|k| (k as i32 + shift, binomial(n, k)))
            .collect();
        PoincarePolynomial { coeffs }
    }

    pub fn coeff(&self, degree: i32) -> u64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, u64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at `t = 1`, the total dimension.
    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    /// Coefficients with signs, as used for graded Euler characteristics.
    pub fn signed(&self) -> BTreeMap<i32, i64> {
        self.coeffs.iter().map(|(&k, &c)| (k, c as i64)).collect()
    }
}

impl Serialize for PoincarePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|(&k, &c)| (k, c)))
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&k, &c)| {
                let var = match k {
                    0 => String::new(),
                    1 => "t".into(),
                    _ => format!("t^{k}"),
                };
                match (c, var.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => var,
                    _ => format!("{c}{var}"),
                }
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtKind {
    /// `Ext^*(i_J, i_I)`.
    Ii,
    /// `Ext^*(v_J, i_I)`.
    Vi,
    /// `Ext^*(pi_J, i_I)`.
    PiI,
}

pub fn ext_poincare(kind: ExtKind, j: &RootSubset, i: &RootSubset) -> Result<PoincarePolynomial> {
    i.require_classical()?;
    j.require_rank(i.rank())?;
    match kind {
        ExtKind::Ii => {
            j.require_classical()?;
            if i.is_subset_of(j)? {
                Ok(PoincarePolynomial::exterior(dim_y(i)?, 0))
            } else {
                Ok(PoincarePolynomial::zero())
            }
        }
        ExtKind::Vi => {
            j.require_classical()?;
            let s = RootSubset::classical_full(i.rank());
            if i.union(j)? == s {
                let shift = s.difference(j)?.len() as i32;
                Ok(PoincarePolynomial::exterior(dim_y(i)?, shift))
            } else {
                Ok(PoincarePolynomial::zero())
            }
        }
        ExtKind::PiI => {
            j.require_strict()?;
            if j.contains(0) {
                Ok(PoincarePolynomial::zero())
            } else {
                ext_poincare(ExtKind::Vi, j, i)
            }
        }
    }
}

/// Graded Euler characteristics of the spectral sequence computing
/// `Ext^*(v_J, i_I)` from the resolution of `v_J` by the `i_K`, `K ⊇ J`:
///
/// `Σ_{J ⊆ K ⊆ S} (-1)^{|K∖J|} P_ii(K, I)(t) = (-1)^{|S∖J|} t^{-|S∖J|} P_vi(J, I)(t)`.
pub fn spectral_row_identity(j: &RootSubset, i: &RootSubset) -> Result<bool> {
    j.require_classical()?;
    i.require_classical()?;
    let s = RootSubset::classical_full(i.rank());
    let mut lhs: BTreeMap<i32, i64> = BTreeMap::new();
    for k in j.supersets_within(&s)? {
        let sign = if k.difference(j)?.len() % 2 == 0 {
            1
        } else {
            -1
        };
        for (deg, c) in ext_poincare(ExtKind::Ii, &k, i)?.terms() {
            *lhs.entry(deg).or_default() += sign * c as i64;
        }
    }
    lhs.retain(|_, c| *c != 0);
    let gap = s.difference(j)?.len() as i32;
    let sign = if gap % 2 == 0 { 1 } else { -1 };
    let rhs: BTreeMap<i32, i64> = ext_poincare(ExtKind::Vi, j, i)?
        .terms()
        .map(|(deg, c)| (deg - gap, sign * c as i64))
        .collect();
    Ok(lhs == rhs)
}

/// Corner of the triangle bounding the support of an `E_1` page.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Corner {
    pub p: i32,
    pub q: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct E1Page {
    pub subset: RootSubset,
    pub i: u32,
    #[serde(serialize_with = "serialize_cells")]
    cells: BTreeMap<(i32, i32), u64>,
}

fn serialize_cells<S: Serializer>(
    cells: &BTreeMap<(i32, i32), u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(cells.iter().map(|(&(p, q), &dim)| (p, q, dim)))
}

impl E1Page {
    pub fn dim(&self, p: i32, q: i32) -> u64 {
        self.cells.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn cells(&self) -> impl Iterator<Item = ((i32, i32), u64)> + '_ {
        self.cells.iter().map(|(&k, &v)| (k, v))
    }

    /// `Σ (-1)^{p+q} dim E_1^{p,q}`.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .map(|(&(p, q), &n)| {
                if (p + q).rem_euclid(2) == 0 {
                    n as i64
                } else {
                    -(n as i64)
                }
            })
            .sum()
    }

    /// Left corner, bottom right corner and top right corner.
    pub fn corners(&self) -> Result<[Corner; 3]> {
        let d = self.subset.rank().get() as i32;
        let i = self.i as i32;
        let s = RootSubset::classical_full(self.subset.rank());
        let corner = j_corner(self.i, &self.subset)?;
        let left = -(s.difference(&self.subset)?.len() as i32);
        let right = -(corner.difference(&self.subset)?.len() as i32);
        let bottom = d - 1 - 2 * i;
        Ok([
            Corner { p: left, q: bottom },
            Corner {
                p: right,
                q: bottom,
            },
            Corner {
                p: right,
                q: 2 * d - 2 - 2 * i - corner.len() as i32,
            },
        ])
    }

    /// Whether every nonzero cell lies in the closed triangle spanned by
    /// [`E1Page::corners`].
    pub fn support_within_corners(&self) -> Result<bool> {
        let [a, b, c] = self.corners()?;
        let cross = |u: Corner, v: Corner, w: (i32, i32)| -> i64 {
            (v.p - u.p) as i64 * (w.1 - u.q) as i64 - (v.q - u.q) as i64 * (w.0 - u.p) as i64
        };
        let (pmin, pmax) = (a.p.min(b.p).min(c.p), a.p.max(b.p).max(c.p));
        let (qmin, qmax) = (a.q.min(b.q).min(c.q), a.q.max(b.q).max(c.q));
        Ok(self.cells.keys().all(|&x| {
            let signs = [cross(a, b, x), cross(b, c, x), cross(c, a, x)];
            let inside = signs.iter().all(|&s| s >= 0) || signs.iter().all(|&s| s <= 0);
            inside && (pmin..=pmax).contains(&x.0) && (qmin..=qmax).contains(&x.1)
        }))
    }

    /// Grid with `q` descending down the rows and `p` ascending across.
    pub fn to_tsv(&self) -> String {
        let ps: Vec<i32> = {
            let lo = self.cells.keys().map(|k| k.0).min().unwrap_or(0);
            let hi = self.cells.keys().map(|k| k.0).max().unwrap_or(0);
            (lo..=hi).collect()
        };
        let qlo = self.cells.keys().map(|k| k.1).min().unwrap_or(0);
        let qhi = self.cells.keys().map(|k| k.1).max().unwrap_or(0);
        let mut out = String::from("q\\p");
        for p in &ps {
            out.push_str(&format!("\t{p}"));
        }
        out.push('\n');
        for q in (qlo..=qhi).rev() {
            out.push_str(&q.to_string());
            for &p in &ps {
                out.push_str(&format!("\t{}", self.dim(p, q)));
            }
            out.push('\n');
        }
        out
    }
}

/// `E_1^{p,q} = ⊕_{J ⊇ I, |J∖I| = -p} (R^q_{i_J})_{i,0}`.
///
/// For `J ≠ S` the summand is `⋀^{q+2i+1-d} Y_J` when `{i+1, ..., d-1} ⊆ J`
/// and zero otherwise; the `J = S` summand is one-dimensional in degree
/// `d-1-2i`.
pub fn e1_page(subset: &RootSubset, i: u32) -> Result<E1Page> {
    subset.require_classical()?;
    let d = subset.rank();
    if i >= d.get() {
        return Err(Error::IndexOutOfRange {
            index: i,
            d: d.get(),
        });
    }
    let s = RootSubset::classical_full(d);
    let tail = RootSubset::interval(d, i + 1, d.get() - 1)?;
    let bottom = d.get() as i32 - 1 - 2 * i as i32;
    let mut cells: BTreeMap<(i32, i32), u64> = BTreeMap::new();
    for j in subset.supersets_within(&s)? {
        let p = -(j.difference(subset)?.len() as i32);
        if j == s {
            *cells.entry((p, bottom)).or_default() += 1;
        } else if tail.is_subset_of(&j)? {
            for (k, n) in PoincarePolynomial::exterior(dim_y(&j)?, bottom).terms() {
                *cells.entry((p, k)).or_default() += n;
            }
        }
    }
    cells.retain(|_, n| *n != 0);
    Ok(E1Page {
        subset: *subset,
        i,
        cells,
    })
}

/// The Euler characteristic of the `E_1` page equals that of a single line
/// in degree `-partial_I(i)`.
pub fn euler_check(subset: &RootSubset, i: u32) -> Result<bool> {
    let page = e1_page(subset, i)?;
    let expected = if partial(subset, i as i64)?.rem_euclid(2) == 0 {
        1
    } else {
        -1
    };
    Ok(page.euler_characteristic() == expected)
}
