//! Rank-based cross-checks for nilpotent operators.
//!
//! These routines only look at explicit integer matrices and exact ranks over
//! the rationals. They never consult the string decomposition, so they serve as
//! an independent witness for [`crate::weil_deligne`].

use crate::combinatorics::{Partition, Rank};
use crate::weil_deligne::Direction;

/// Square integer matrix, row-major. `matrix[y][x]` is the coefficient of
/// basis vector `y` in the image of basis vector `x`.
pub type Matrix = Vec<Vec<i64>>;

/// Exact rank over `Q` by fraction-free (Bareiss) elimination.
pub fn rank(matrix: &[Vec<i64>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn multiply(a: &[Vec<i64>], b: &[Vec<i64>]) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    let mut out = vec![vec![0; m]; n];
    for i in 0..n {
        for k in 0..inner {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn transpose(a: &[Vec<i64>]) -> Matrix {
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| (0..n).map(|i| a[i][j]).collect()).collect()
}

/// `[M^0, M^1, ..., M^n]`.
fn powers(matrix: &[Vec<i64>]) -> Vec<Matrix> {
    let n = matrix.len();
    let mut out = vec![identity(n)];
    for _ in 0..n {
        let next = multiply(matrix, out.last().unwrap());
        out.push(next);
    }
    out
}

/// Jordan type of a nilpotent matrix: the number of blocks of size at least
/// `k` is `rank(M^{k-1}) - rank(M^k)`.
pub fn jordan_type(matrix: &[Vec<i64>]) -> Partition {
    let ranks: Vec<usize> = powers(matrix).iter().map(|p| rank(p)).collect();
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    // Blocks of size exactly k = at_least[k-1] - at_least[k].
    let mut parts = Vec::new();
    for (k, pair) in at_least.windows(2).enumerate() {
        parts.extend(std::iter::repeat_n(k as u32 + 1, pair[0] - pair[1]));
    }
    if let Some(&last) = at_least.last() {
        parts.extend(std::iter::repeat_n(at_least.len() as u32, last));
    }
    Partition::new(parts)
}

/// Primitive data of a twist-compatible nilpotent operator from graded ranks.
///
/// `labels[x]` is the character index of basis vector `x`. Entry `n` of the
/// result lists, with multiplicity and ascending, the primitive line of every
/// block of size `n + 1`. For direction `L` that is the line killed by the
/// operator; for direction `N` it is the generating line, so a string and its
/// transpose share primitive data.
pub fn primitive_parts(
    d: Rank,
    labels: &[u32],
    matrix: &[Vec<i64>],
    direction: Direction,
) -> Vec<Vec<u32>> {
    // Work with an L-type operator: for N the transpose has the same chains
    // traversed backwards, and its kernel ends are the N-generators.
    let op = match direction {
        Direction::L => matrix.to_vec(),
        Direction::N => transpose(matrix),
    };
    let n = labels.len();
    let pw = powers(&op);
    let dd = d.get() as i64;
    // graded_rank(k, b): rank of M^k restricted to V_{b+k} -> V_b.
    let graded_rank = |k: usize, b: i64| -> usize {
        if k > n {
            return 0;
        }
        let b = b.rem_euclid(dd) as u32;
        let src = d.reduce(b as i64 + k as i64);
        let rows: Vec<usize> = (0..n).filter(|&y| labels[y] == b).collect();
        let cols: Vec<usize> = (0..n).filter(|&x| labels[x] == src).collect();
        let sub: Matrix = rows
            .iter()
            .map(|&y| cols.iter().map(|&x| pw[k][y][x]).collect())
            .collect();
        if sub.is_empty() || cols.is_empty() {
            0
        } else {
            rank(&sub)
        }
    };
    // dim(ker M ∩ im M^k ∩ V_b) = graded_rank(k, b) - graded_rank(k+1, b-1).
    let kernel_in_image = |k: usize, b: i64| graded_rank(k, b) - graded_rank(k + 1, b - 1);
    let mut parts: Vec<Vec<u32>> = (0..n)
        .map(|k| {
            (0..dd)
                .flat_map(|b| {
                    let exact = kernel_in_image(k, b) - kernel_in_image(k + 1, b);
                    std::iter::repeat_n(b as u32, exact)
                })
                .collect()
        })
        .collect();
    while parts.last().is_some_and(Vec::is_empty) {
        parts.pop();
    }
    parts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block_diag(sizes: &[usize]) -> Matrix {
        let n: usize = sizes.iter().sum();
        let mut m = vec![vec![0; n]; n];
        let mut start = 0;
        for &s in sizes {
            for t in 1..s {
                m[start + t - 1][start + t] = 1;
            }
            start += s;
        }
        m
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&identity(5)), 5);
        assert_eq!(rank(&[vec![2, 3, 5], vec![7, 11, 13], vec![17, 19, 23]]), 3);
        assert_eq!(rank(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]), 2);
    }

    #[test]
    fn jordan_type_of_blocks() {
        let m = block_diag(&[2, 2, 1]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&multiply(&m, &m)), 0);
        assert_eq!(jordan_type(&m), Partition::new(vec![2, 2, 1]));
        assert_eq!(jordan_type(&vec![vec![0; 5]; 5]), Partition::ones(5));
        assert_eq!(jordan_type(&block_diag(&[3])), Partition::new(vec![3]));
    }

    #[test]
    fn primitive_parts_of_blocks() {
        let d = Rank::new(3).unwrap();
        // Blocks 1 -> 0, 2 -> 1, and a lone 2, in direction L.
        let labels = [0, 1, 1, 2, 2];
        let m = block_diag(&[2, 2, 1]);
        let parts = primitive_parts(d, &labels, &m, Direction::L);
        assert_eq!(parts, vec![vec![2], vec![0, 1]]);
    }
}
