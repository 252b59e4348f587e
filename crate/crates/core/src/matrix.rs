//! Intersection forms of plumbing graphs and exact integer linear algebra.
//!
//! All elimination is fraction-free (Bareiss): every intermediate entry is a
//! minor of the input, so the only division performed is exact. Entries are
//! held in `i128`; arithmetic is checked and overflow panics rather than
//! silently wrapping.

use crate::fraction::Fraction;
use crate::graph::VertexId;

/// Symmetric integer matrix `(E_u, E_v)` indexed by the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionMatrix {
    ids: Vec<VertexId>,
    entries: Vec<i64>,
}

impl IntersectionMatrix {
    pub(crate) fn from_parts(ids: Vec<VertexId>, entries: Vec<i64>) -> Self {
        debug_assert_eq!(ids.len() * ids.len(), entries.len());
        Self { ids, entries }
    }

    /// Build from a dense row-major square matrix. Row/column `i` is
    /// labelled with vertex id `i`.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            entries.extend_from_slice(row);
        }
        Self {
            ids: (0..n as u32).map(VertexId).collect(),
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.ids.len()
    }

    /// Vertex labelling of rows and columns.
    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim() + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.dim().max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Same form with rows and columns permuted: new index `i` is old index
    /// `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.dim();
        assert_eq!(perm.len(), n);
        let mut entries = Vec::with_capacity(n * n);
        for &pi in perm {
            for &pj in perm {
                entries.push(self.get(pi, pj));
            }
        }
        Self {
            ids: perm.iter().map(|&i| self.ids[i]).collect(),
            entries,
        }
    }

    fn wide(&self) -> Vec<Vec<i128>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j) as i128).collect())
            .collect()
    }

    /// Exact determinant by fraction-free elimination with row pivoting.
    ///
    /// # Panics
    ///
    /// If an intermediate minor product exceeds `i128`.
    pub fn determinant(&self) -> i128 {
        bareiss_determinant(self.wide())
    }

    /// Leading principal minors `Δ_1, …, Δ_k`, stopping after the first zero
    /// (later minors are not needed by Sylvester's criterion and cannot be
    /// reached without pivoting).
    pub fn leading_minors(&self) -> Vec<i128> {
        let mut a = self.wide();
        let n = a.len();
        let mut minors = Vec::with_capacity(n);
        let mut prev = 1i128;
        for k in 0..n {
            let pivot = a[k][k];
            minors.push(pivot);
            if pivot == 0 {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = bareiss_step(a[i][j], pivot, a[i][k], a[k][j], prev);
                }
            }
            prev = pivot;
        }
        minors
    }

    /// Sylvester's criterion: `(-1)^k Δ_k > 0` for every leading principal
    /// minor. The empty form counts as negative definite.
    pub fn is_negative_definite(&self) -> bool {
        let minors = self.leading_minors();
        minors.len() == self.dim()
            && minors.iter().enumerate().all(|(k, &d)| {
                // Δ_{k+1} must have sign (-1)^{k+1}
                if k % 2 == 0 {
                    d < 0
                } else {
                    d > 0
                }
            })
    }

    /// Unique solution of `M x = rhs` by Cramer's rule, or `None` when `M`
    /// is singular.
    pub fn solve(&self, rhs: &[i128]) -> Option<Vec<Fraction>> {
        let n = self.dim();
        assert_eq!(rhs.len(), n);
        let det = self.determinant();
        if det == 0 {
            return None;
        }
        let base = self.wide();
        let solution = (0..n)
            .map(|col| {
                let mut a = base.clone();
                for (row, &b) in a.iter_mut().zip(rhs) {
                    row[col] = b;
                }
                Fraction::new(bareiss_determinant(a), det)
            })
            .collect();
        Some(solution)
    }
}

fn bareiss_step(aij: i128, akk: i128, aik: i128, akj: i128, prev: i128) -> i128 {
    let lhs = aij.checked_mul(akk).expect("determinant overflow");
    let rhs = aik.checked_mul(akj).expect("determinant overflow");
    let num = lhs.checked_sub(rhs).expect("determinant overflow");
    debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
    num / prev
}

pub(crate) fn bareiss_determinant(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        let pivot = a[k][k];
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = bareiss_step(a[i][j], pivot, a[i][k], a[k][j], prev);
            }
        }
        prev = pivot;
    }
    sign * a[n - 1][n - 1]
}
