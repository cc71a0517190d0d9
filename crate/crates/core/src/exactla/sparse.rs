use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Rational;

pub type SparseRow = BTreeMap<usize, Rational>;

/// Incremental Gaussian elimination over sparse rational rows.
///
/// Rows are kept in echelon form keyed by their leading column (normalized to
/// 1), so adding a row costs one reduction pass against the existing pivots.
#[derive(Clone, Debug, Default)]
pub struct SparseEliminator {
    cols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

fn axpy(row: &mut SparseRow, c: &Rational, other: &SparseRow) {
    for (&k, v) in other {
        let e = row.entry(k).or_insert_with(Rational::zero);
        *e -= c * v;
        if e.is_zero() {
            row.remove(&k);
        }
    }
}

impl SparseEliminator {
    pub fn new(cols: usize) -> Self {
        Self { cols, pivots: BTreeMap::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns whether it was independent of the rows so far.
    pub fn add_row(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, coeff)) = row.iter().next() else { return false };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let c = coeff.clone();
                    axpy(&mut row, &c, p);
                }
                None => {
                    assert!(lead < self.cols, "column {lead} out of range");
                    let inv = coeff.recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    pub fn add_dense(&mut self, row: &[Rational]) -> bool {
        self.add_row(row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect())
    }

    /// Fully reduced rows (reduced row-echelon form), keyed by pivot column.
    pub fn reduced(&self) -> BTreeMap<usize, SparseRow> {
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&p, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            let hits: Vec<(usize, Rational)> =
                r.iter().filter(|(k, _)| **k != p && done.contains_key(k)).map(|(k, v)| (*k, v.clone())).collect();
            for (k, c) in hits {
                // earlier reductions may already have cancelled this entry
                let c = r.get(&k).cloned().unwrap_or(c);
                if !c.is_zero() {
                    axpy(&mut r, &c, &done[&k]);
                }
            }
            done.insert(p, r);
        }
        done
    }

    /// Basis of the solution space of the homogeneous system, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let rref = self.reduced();
        let free: Vec<usize> = (0..self.cols).filter(|c| !rref.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (&p, row) in &rref {
                    if let Some(x) = row.get(&f) {
                        v[p] = -x.clone();
                    }
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{q, MatrixQ};

    #[test]
    fn matches_dense_kernel() {
        let rows = [vec![1, 2, 0, -1, 3], vec![2, 4, 1, 0, 0], vec![3, 6, 1, -1, 3], vec![0, 0, 0, 2, 1]];
        let mut el = SparseEliminator::new(5);
        let indep: Vec<bool> =
            rows.iter().map(|r| el.add_dense(&r.iter().map(|&x| q(x)).collect::<Vec<_>>())).collect();
        assert_eq!(indep, vec![true, true, false, true]);
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let dense = MatrixQ::from_i64(&refs);
        let k = el.kernel();
        assert_eq!(k.len(), dense.kernel().dim());
        for v in &k {
            assert!(dense.mul_vec(v).iter().all(Zero::is_zero));
        }
    }
}
