//! Exact Gaussian elimination.

use num_traits::{One, Zero};

use crate::rational::Q;

/// Row-reduces `m` in place; returns pivot columns.
pub fn row_reduce(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (pivot_row, row) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m).len()
}

/// Unique solution of the square system `a x = b`, if any.
pub fn solve_unique(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| row.iter().cloned().chain(std::iter::once(rhs.clone())).collect())
        .collect();
    let pivots = row_reduce(&mut m);
    if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Coefficients `c` with `sum_k c_k generators[k] = target`, if the target
/// lies in their span. Free coefficients are set to zero.
pub fn span_coefficients(generators: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let k = generators.len();
    let dim = target.len();
    let mut m: Vec<Vec<Q>> = (0..dim)
        .map(|d| generators.iter().map(|g| g[d].clone()).chain(std::iter::once(target[d].clone())).collect())
        .collect();
    let pivots = row_reduce(&mut m);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut coeffs = vec![Q::zero(); k];
    for (row, &c) in pivots.iter().enumerate() {
        coeffs[c] = m[row][k].clone();
    }
    Some(coeffs)
}

/// Reduced row-echelon basis of the row space.
pub fn row_space_basis(rows: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let r = row_reduce(&mut m).len();
    m.truncate(r);
    m
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn unit(dim: usize, k: usize) -> Vec<Q> {
    (0..dim).map(|i| if i == k { Q::one() } else { Q::zero() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn rank_and_solve() {
        let a = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert_eq!(rank(&a), 1);
        assert!(solve_unique(&a, &[q(1, 1), q(2, 1)]).is_none());
        let b = vec![vec![q(1, 1), q(1, 1)], vec![q(1, 1), q(-1, 1)]];
        assert_eq!(solve_unique(&b, &[q(1, 1), q(0, 1)]).unwrap(), vec![q(1, 2), q(1, 2)]);
    }

    #[test]
    fn span() {
        let g = vec![vec![q(1, 1), q(1, 1), q(0, 1)], vec![q(0, 1), q(0, 1), q(1, 1)]];
        let c = span_coefficients(&g, &[q(2, 1), q(2, 1), q(-1, 3)]).unwrap();
        assert_eq!(c, vec![q(2, 1), q(-1, 3)]);
        assert!(span_coefficients(&g, &[q(1, 1), q(0, 1), q(0, 1)]).is_none());
        assert_eq!(row_space_basis(&g).len(), 2);
    }
}
