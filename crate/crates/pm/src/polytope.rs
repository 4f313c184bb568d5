//! Polytopes `{pi in simplex : a_k . pi >= 0}` by vertex enumeration.

use crate::linalg::{dot, rank, solve_unique, sub, unit};
use crate::rational::Q;
use num_traits::{One, Signed, Zero};

/// Homogeneous inequality system intersected with the probability simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexPolytope {
    dim: usize,
    rows: Vec<Vec<Q>>,
}

impl SimplexPolytope {
    /// The simplex itself (nonnegativity rows only).
    pub fn simplex(dim: usize) -> Self {
        Self { dim, rows: (0..dim).map(|k| unit(dim, k)).collect() }
    }

    pub fn with_constraints(mut self, rows: impl IntoIterator<Item = Vec<Q>>) -> Self {
        for r in rows {
            debug_assert_eq!(r.len(), self.dim);
            if !r.iter().all(Zero::is_zero) && !self.rows.contains(&r) {
                self.rows.push(r);
            }
        }
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn contains(&self, point: &[Q]) -> bool {
        let total = point.iter().fold(Q::zero(), |a, x| a + x);
        total.is_one() && self.rows.iter().all(|r| !dot(r, point).is_negative())
    }

    /// All vertices, sorted and deduplicated.
    pub fn vertices(&self) -> Vec<Vec<Q>> {
        let m = self.dim;
        let ones = vec![Q::one(); m];
        let mut rhs = vec![Q::zero(); m];
        rhs[m - 1] = Q::one();
        let mut out: Vec<Vec<Q>> = Vec::new();
        for_each_combination(self.rows.len(), m - 1, |chosen| {
            let mut a: Vec<Vec<Q>> = chosen.iter().map(|&k| self.rows[k].clone()).collect();
            a.push(ones.clone());
            if let Some(x) = solve_unique(&a, &rhs) {
                if self.contains(&x) {
                    out.push(x);
                }
            }
        });
        out.sort();
        out.dedup();
        out
    }
}

/// Affine dimension of the hull of `points`; `-1` when empty.
pub fn affine_dimension(points: &[Vec<Q>]) -> i64 {
    match points.split_first() {
        None => -1,
        Some((first, rest)) => {
            let diffs: Vec<Vec<Q>> = rest.iter().map(|p| sub(p, first)).collect();
            rank(&diffs) as i64
        }
    }
}

fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn combinations() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(seen.len(), 6);
        let mut count = 0;
        for_each_combination(3, 0, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn simplex_vertices() {
        let s = SimplexPolytope::simplex(3);
        let v = s.vertices();
        assert_eq!(v.len(), 3);
        assert_eq!(affine_dimension(&v), 2);
        let half = s.with_constraints([vec![q(1, 1), q(-1, 1), q(0, 1)]]);
        assert_eq!(affine_dimension(&half.vertices()), 2);
        let line = SimplexPolytope::simplex(3)
            .with_constraints([vec![q(1, 1), q(-1, 1), q(0, 1)], vec![q(-1, 1), q(1, 1), q(0, 1)]]);
        let v = line.vertices();
        assert_eq!(v, vec![vec![q(0, 1), q(0, 1), q(1, 1)], vec![q(1, 2), q(1, 2), q(0, 1)]]);
        assert_eq!(affine_dimension(&v), 1);
        let empty = SimplexPolytope::simplex(2).with_constraints([vec![q(-1, 1), q(-1, 1)]]);
        assert_eq!(affine_dimension(&empty.vertices()), -1);
    }

    #[test]
    fn one_dimensional_simplex() {
        let v = SimplexPolytope::simplex(1).vertices();
        assert_eq!(v, vec![vec![q(1, 1)]]);
        assert_eq!(affine_dimension(&v), 0);
    }
}
