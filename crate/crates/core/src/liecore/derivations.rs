use std::collections::BTreeMap;

use num_traits::Zero;

use super::LieAlgebra;
use crate::exactla::{MatrixQ, Rational, SparseEliminator, Subspace};

impl LieAlgebra {
    /// Linear equations (in the `n^2` entries of `D`, row-major) expressing
    /// `D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j]` for all `i < j`.
    fn derivation_equations(&self) -> impl Iterator<Item = BTreeMap<usize, Rational>> + '_ {
        let n = self.dim();
        let var = move |a: usize, b: usize| a * n + b;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j))).flat_map(move |(i, j)| {
            (0..n).filter_map(move |r| {
                let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                let mut push = |key: usize, c: Rational| {
                    let e = row.entry(key).or_insert_with(Rational::zero);
                    *e += c;
                };
                // D[e_i, e_j]_r = sum_k c_ij^k D[r][k]
                for (k, c) in self.basis_bracket(i, j) {
                    push(var(r, *k), c.clone());
                }
                // [D e_i, e_j]_r = sum_a D[a][i] c_aj^r ; [e_i, D e_j]_r = sum_a D[a][j] c_ia^r
                for a in 0..n {
                    let caj = self.constant(a, j, r);
                    if !caj.is_zero() {
                        push(var(a, i), -caj);
                    }
                    let cia = self.constant(i, a, r);
                    if !cia.is_zero() {
                        push(var(a, j), -cia);
                    }
                }
                row.retain(|_, v| !v.is_zero());
                (!row.is_empty()).then_some(row)
            })
        })
    }

    /// All derivations, as a subspace of `n x n` matrices flattened row-major.
    pub fn derivation_algebra(&self) -> Subspace {
        let n = self.dim();
        let mut el = SparseEliminator::new(n * n);
        for row in self.derivation_equations() {
            el.add_row(row);
        }
        Subspace::span(n * n, &el.kernel())
    }

    /// Exact check of the derivation identity on all basis pairs.
    pub fn is_derivation(&self, d: &MatrixQ) -> bool {
        let n = self.dim();
        if d.rows() != n || d.cols() != n {
            return false;
        }
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let (ei, ej) = (self.unit(i), self.unit(j));
                let lhs = d.mul_vec(&self.bracket(&ei, &ej));
                let a = self.bracket(&d.column(i), &ej);
                let b = self.bracket(&ei, &d.column(j));
                lhs.iter().zip(a.iter().zip(&b)).all(|(l, (x, y))| *l == x + y)
            })
        })
    }

    /// Whether `e` is a Lie algebra endomorphism: `E[x, y] = [Ex, Ey]` on basis pairs.
    pub fn is_endomorphism(&self, e: &MatrixQ) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                e.mul_vec(&self.bracket(&self.unit(i), &self.unit(j))) == self.bracket(&e.column(i), &e.column(j))
            })
        })
    }
}
