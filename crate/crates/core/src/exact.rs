//! Exact integer linear algebra for settling spectral comparisons that land too
//! close to a threshold for floating point to decide.
//!
//! Everything here is fraction-free (Bareiss) elimination over `BigInt`, so the
//! answers are exact for integer matrices of any size we can afford to store.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graph::Graph;

pub type IntMatrix = Vec<Vec<BigInt>>;

fn to_big(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

/// Determinant by Bareiss elimination with row pivoting.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let mut a = to_big(m);
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for p in 0..n {
        if a[p][p].is_zero() {
            match (p + 1..n).find(|&r| !a[r][p].is_zero()) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let v = &a[p][p] * &a[i][j] - &a[i][p] * &a[p][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[p][p].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Positive semidefiniteness of a symmetric integer matrix.
///
/// Symmetric Bareiss: pivot on any strictly positive diagonal entry; a negative
/// diagonal entry refutes; a zero diagonal entry forces its row to vanish and
/// the index is dropped. Reduced entries stay integral because each one is a
/// bordered minor of the original matrix.
pub fn is_positive_semidefinite(m: &[Vec<BigInt>]) -> bool {
    let mut a: IntMatrix = m.to_vec();
    let mut live: Vec<usize> = (0..a.len()).collect();
    let mut prev = BigInt::one();
    loop {
        if live.iter().any(|&i| a[i][i].is_negative()) {
            return false;
        }
        // Zero diagonals must have zero rows; drop them.
        let mut kept = Vec::with_capacity(live.len());
        for &i in &live {
            if a[i][i].is_zero() {
                if live.iter().any(|&j| !a[i][j].is_zero()) {
                    return false;
                }
            } else {
                kept.push(i);
            }
        }
        live = kept;
        let Some(pos) = live.first().copied() else {
            return true;
        };
        let p = pos;
        let rest: Vec<usize> = live.iter().copied().filter(|&i| i != p).collect();
        for &i in &rest {
            for &j in &rest {
                if j < i {
                    continue;
                }
                let v = (&a[p][p] * &a[i][j] - &a[i][p] * &a[p][j]) / &prev;
                a[i][j] = v.clone();
                a[j][i] = v;
            }
        }
        prev = a[p][p].clone();
        live = rest;
    }
}

/// Positive definiteness via Sylvester's criterion on Bareiss pivots.
pub fn is_positive_definite(m: &[Vec<BigInt>]) -> bool {
    let mut a: IntMatrix = m.to_vec();
    let n = a.len();
    let mut prev = BigInt::one();
    for p in 0..n {
        if !a[p][p].is_positive() {
            return false;
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let v = (&a[p][p] * &a[i][j] - &a[i][p] * &a[p][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[p][p].clone();
    }
    true
}

pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    let n = g.order();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(g.has_edge(i, j) as i64))
                .collect()
        })
        .collect()
}

pub fn signless_laplacian_matrix(g: &Graph) -> IntMatrix {
    let mut q = adjacency_matrix(g);
    for (v, row) in q.iter_mut().enumerate() {
        row[v] = BigInt::from(g.degree(v));
    }
    q
}

fn square(a: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &a[k][j];
            }
        }
    }
    out
}

/// `scale·I − m`.
fn shifted(m: &IntMatrix, scale: &BigInt, factor: &BigInt) -> IntMatrix {
    let n = m.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let d = if i == j { scale.clone() } else { BigInt::zero() };
                    d - factor * &m[i][j]
                })
                .collect()
        })
        .collect()
}

/// Exactly decides `μ(G) ≤ √c` as positive semidefiniteness of `cI − A²`.
/// For adjacency matrices the spectral radius dominates `|λ_min|`, so the square
/// loses nothing.
pub fn mu_at_most_sqrt(g: &Graph, c: u64) -> bool {
    let a2 = square(&adjacency_matrix(g));
    is_positive_semidefinite(&shifted(&a2, &BigInt::from(c), &BigInt::one()))
}

/// Exactly decides `μ(G) ≥ t` (integer `t`): false iff `tI − A` is positive definite.
pub fn mu_at_least(g: &Graph, t: i64) -> bool {
    let a = adjacency_matrix(g);
    !is_positive_definite(&shifted(&a, &BigInt::from(t), &BigInt::one()))
}

/// Exactly decides `q(G) ≤ num/den` as positive semidefiniteness of `num·I − den·Q`.
pub fn q_at_most(g: &Graph, num: i64, den: i64) -> bool {
    assert!(den > 0, "denominator must be positive");
    let q = signless_laplacian_matrix(g);
    is_positive_semidefinite(&shifted(&q, &BigInt::from(num), &BigInt::from(den)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> IntMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 3]]), BigInt::from(5));
        assert_eq!(
            determinant(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 4]]),
            BigInt::from(-4)
        );
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
    }

    #[test]
    fn semidefinite_cases() {
        assert!(is_positive_semidefinite(&big(&[&[1, 1], &[1, 1]])));
        assert!(!is_positive_definite(&big(&[&[1, 1], &[1, 1]])));
        assert!(!is_positive_semidefinite(&big(&[&[0, 1], &[1, 0]])));
        assert!(is_positive_semidefinite(&big(&[&[0, 0], &[0, 3]])));
        assert!(!is_positive_semidefinite(&big(&[&[1, 2], &[2, 1]])));
        assert!(is_positive_definite(&big(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])));
    }

    #[test]
    fn spectral_comparisons_at_equality() {
        let k4 = Graph::complete(4);
        assert!(mu_at_least(&k4, 3));
        assert!(!mu_at_least(&k4, 4));
        assert!(mu_at_most_sqrt(&k4, 9));
        assert!(!mu_at_most_sqrt(&k4, 8));
        // K_{2,4}: μ = √8 exactly.
        let k24 = Graph::empty(2).join(&Graph::empty(4));
        assert!(mu_at_most_sqrt(&k24, 8));
        assert!(!mu_at_most_sqrt(&k24, 7));
        // q(K_4) = 6.
        assert!(q_at_most(&k4, 6, 1));
        assert!(!q_at_most(&k4, 11, 2));
    }
}
