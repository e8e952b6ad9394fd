//! Arithmetic of the triple `(q, l, d)`: the Coxeter congruence and the
//! number of summands of the cuspidal kernel.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest `q^d - 1` accepted by [`cuspidal_kernel_count`].
pub const MAX_CHARACTER_GROUP: u64 = 1 << 26;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// `Some(p)` if `q = p^k` with `p` prime and `k ≥ 1`.
pub fn prime_base(q: u64) -> Option<u64> {
    let p = (2..=q).find(|k| q.is_multiple_of(*k))?;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    (rest == 1).then_some(p)
}

/// Multiplicative order of `q` modulo `m`, for `gcd(q, m) = 1` and `m ≥ 2`.
pub fn multiplicative_order(q: u64, m: u64) -> u64 {
    let q = q % m;
    let mut x = q;
    let mut k = 1;
    while x != 1 % m {
        x = (x as u128 * q as u128 % m as u128) as u64;
        k += 1;
    }
    k
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Params {
    pub q: u64,
    pub ell: u64,
    /// The prime below `q`.
    pub p: u64,
    pub d: u32,
    /// Whether the order of `q` modulo `l` is `d`.
    pub coxeter: bool,
}

impl Params {
    pub fn new(q: u64, ell: u64, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParams("d must be at least 1".into()));
        }
        let p = prime_base(q)
            .ok_or_else(|| Error::InvalidParams(format!("q = {q} is not a prime power")))?;
        if !is_prime(ell) {
            return Err(Error::InvalidParams(format!("l = {ell} is not prime")));
        }
        if ell == p {
            return Err(Error::InvalidParams(format!("l = {ell} divides q = {q}")));
        }
        let coxeter = multiplicative_order(q, ell) == d as u64;
        Ok(Params {
            q,
            ell,
            p,
            d,
            coxeter,
        })
    }
}

pub fn validate_coxeter(q: u64, ell: u64, d: u32) -> Result<bool> {
    Ok(Params::new(q, ell, d)?.coxeter)
}

/// Frobenius orbits of size exactly `d` among the nontrivial characters of
/// `F_{q^d}^× ≅ Z/(q^d - 1)` whose order is a power of `l`.
///
/// Characters are identified with residues `x`, Frobenius acting by
/// `x ↦ q x`. Enumerates the whole group.
pub fn cuspidal_kernel_count(q: u64, ell: u64, d: u32) -> Result<u64> {
    let params = Params::new(q, ell, d)?;
    if !params.coxeter {
        return Err(Error::InvalidParams(format!(
            "order of {q} mod {ell} is {}, not {d}",
            multiplicative_order(q, ell)
        )));
    }
    let n = q
        .checked_pow(d)
        .map(|x| x - 1)
        .filter(|&n| n <= MAX_CHARACTER_GROUP)
        .ok_or_else(|| Error::OutOfBounds(format!("{q}^{d} - 1 exceeds {MAX_CHARACTER_GROUP}")))?;
    let is_ell_power = |mut m: u64| {
        while m.is_multiple_of(ell) {
            m /= ell;
        }
        m == 1
    };
    let mut seen = vec![false; n as usize];
    let mut count = 0;
    for x in 1..n {
        if seen[x as usize] || !is_ell_power(n / gcd(x, n)) {
            continue;
        }
        let mut size = 0;
        let mut y = x;
        while !seen[y as usize] {
            seen[y as usize] = true;
            size += 1;
            y = (y as u128 * q as u128 % n as u128) as u64;
        }
        if size == d {
            count += 1;
        }
    }
    Ok(count)
}
