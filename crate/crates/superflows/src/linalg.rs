//! Exact sparse row reduction shared by the invariant-space, kernel and
//! dimension computations.  Rows are maps column → coefficient; everything is
//! over the big rationals, so ranks and kernels are exact.

use crate::exactalg::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub type SparseRow = BTreeMap<usize, Rat>;

/// Result of reduced row-echelon elimination.
pub struct Rref {
    /// Nonzero reduced rows, sorted by pivot column; each pivot entry is 1.
    pub rows: Vec<SparseRow>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Reduced row echelon form of the given rows (columns indexed arbitrarily but
/// consistently).  Deterministic: pivots are chosen in increasing column order
/// and rows fully reduced against each other.
pub fn rref(rows: Vec<SparseRow>) -> Rref {
    let mut work: Vec<SparseRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut out_rows: Vec<SparseRow> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    loop {
        // Smallest remaining leading column.
        let Some(col) = work.iter().filter_map(|r| r.keys().next().copied()).min() else {
            break;
        };
        let idx = work
            .iter()
            .position(|r| r.keys().next() == Some(&col))
            .expect("row with minimal leading column exists");
        let mut pivot_row = work.swap_remove(idx);
        let inv = pivot_row[&col].recip();
        for v in pivot_row.values_mut() {
            *v *= &inv;
        }
        for r in work.iter_mut() {
            eliminate(r, &pivot_row, col);
        }
        for r in out_rows.iter_mut() {
            eliminate(r, &pivot_row, col);
        }
        out_rows.push(pivot_row);
        pivots.push(col);
        work.retain(|r| !r.is_empty());
    }
    // Sort by pivot for a canonical presentation.
    let mut order: Vec<usize> = (0..pivots.len()).collect();
    order.sort_by_key(|&i| pivots[i]);
    Rref {
        rows: order.iter().map(|&i| out_rows[i].clone()).collect(),
        pivots: {
            let mut p = pivots.clone();
            p.sort_unstable();
            p
        },
    }
}

fn eliminate(row: &mut SparseRow, pivot_row: &SparseRow, col: usize) {
    let Some(f) = row.get(&col).cloned() else { return };
    if f.is_zero() {
        return;
    }
    for (c, v) in pivot_row {
        let delta = &f * v;
        match row.entry(*c) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !delta.is_zero() {
                    e.insert(-delta);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() -= delta;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// Exact kernel of the linear map whose `j`-th **column** is `cols[j]`
/// (entries index the target space).  Returns a basis of coefficient vectors
/// `v` (length `cols.len()`) with `Σ v_j · cols[j] = 0`, one per free column,
/// in increasing free-column order.
pub fn kernel_of_columns(cols: &[SparseRow]) -> Vec<Vec<Rat>> {
    // Build rows of the matrix (transpose of the column list).
    let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col {
            rows.entry(*i).or_default().insert(j, v.clone());
        }
    }
    let red = rref(rows.into_values().collect());
    let pivot_set: std::collections::BTreeSet<usize> = red.pivots.iter().copied().collect();
    let mut kernel = Vec::new();
    for free in 0..cols.len() {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); cols.len()];
        v[free] = Rat::one();
        for (row, &p) in red.rows.iter().zip(&red.pivots) {
            if let Some(c) = row.get(&free) {
                v[p] = -c.clone();
            }
        }
        kernel.push(v);
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rint, rq};

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|&(c, v)| (c, rint(v))).collect()
    }

    #[test]
    fn rref_reduces_and_ranks() {
        let r = rref(vec![row(&[(0, 2), (1, 4)]), row(&[(0, 1), (1, 2)]), row(&[(1, 1), (2, 1)])]);
        assert_eq!(r.rank(), 2);
        assert_eq!(r.pivots, vec![0, 2]);
        // First row reduced against the second: x + 2y, then y + z pivots on y.
        assert_eq!(r.rows[0], row(&[(0, 1), (2, -2)]));
        assert_eq!(r.rows[1], row(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn kernel_matches_hand_computation() {
        // Columns c0=(1,0), c1=(0,1), c2=(1,1): kernel spanned by (1,1,-1).
        let cols = vec![row(&[(0, 1)]), row(&[(1, 1)]), row(&[(0, 1), (1, 1)])];
        let k = kernel_of_columns(&cols);
        assert_eq!(k, vec![vec![rint(-1), rint(-1), rint(1)]]);
    }

    #[test]
    fn kernel_of_independent_columns_is_empty() {
        let cols = vec![row(&[(0, 1)]), row(&[(1, 3)])];
        assert!(kernel_of_columns(&cols).is_empty());
        let k = kernel_of_columns(&[row(&[(0, 1), (1, 2)]), row(&[(0, 2), (1, 4)])]);
        assert_eq!(k, vec![vec![rq(-2, 1), rint(1)]]);
    }
}
