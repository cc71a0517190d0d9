use num_traits::Zero;

use crate::exactla::{complex_roots_default, MatrixQ, Rational, Subspace};
use crate::liecore::LieAlgebra;

/// Diagonal entries of a rational triangularization of `ad`, as linear
/// functionals: `functionals[i][k]` is the `i`-th weight evaluated at `e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    pub functionals: Vec<Vec<Rational>>,
    pub success: bool,
}

impl WeightTable {
    fn failed() -> Self {
        Self { functionals: Vec::new(), success: false }
    }

    /// Rank over Q of the functional rows.
    pub fn rank(&self) -> usize {
        if self.functionals.is_empty() {
            return 0;
        }
        MatrixQ::from_rows(self.functionals.clone()).rank()
    }
}

/// Coordinates of `v` modulo `v_sub`, on the non-pivot columns of its canonical basis.
fn quotient_coords(v: &[Rational], v_sub: &Subspace, free: &[usize]) -> Vec<Rational> {
    let mut w = v.to_vec();
    for (row, &p) in v_sub.pivots().iter().enumerate() {
        let c = w[p].clone();
        if c.is_zero() {
            continue;
        }
        for (x, b) in w.iter_mut().zip(v_sub.basis().row(row)) {
            *x -= &c * b;
        }
    }
    free.iter().map(|&f| w[f].clone()).collect()
}

fn rational_eigenvalue(m: &MatrixQ) -> Option<Rational> {
    let cp = m.charpoly().ok()?;
    complex_roots_default(&cp, 64).ok()?.into_iter().find_map(|r| r.exact)
}

/// Tries to build a full flag of ideals `0 = V_0 < V_1 < ... < V_n = g`, each
/// step one-dimensional, on which every `ad e_k` acts by a rational scalar.
///
/// At each step the quotient `g / V` is a module for the solvable algebra `g`.
/// The derived algebra acts nilpotently on it, so the joint kernel `K` of
/// `ad g'` on the quotient is nonzero and `g`-invariant; there `ad g` is a
/// commuting family and a common eigenvector is found by successively
/// intersecting eigenspaces. Any irrational or nonreal eigenvalue means no
/// rational flag exists (the weights do not depend on the flag).
pub fn weight_functionals(l: &LieAlgebra) -> WeightTable {
    let n = l.dim();
    let ds = l.derived_series();
    if ds.length.is_none() {
        return WeightTable::failed();
    }
    let derived: Vec<Vec<Rational>> = ds.terms.get(1).map(Subspace::vectors).unwrap_or_default();
    let ads: Vec<MatrixQ> = (0..n).map(|k| l.ad_basis(k)).collect();
    let der_ads: Vec<MatrixQ> = derived.iter().map(|y| l.ad_matrix(y)).collect();

    let mut v = Subspace::zero(n);
    let mut functionals: Vec<Vec<Rational>> = Vec::with_capacity(n);
    while v.dim() < n {
        let free: Vec<usize> = (0..n).filter(|c| !v.pivots().contains(c)).collect();
        let qd = free.len();
        // induced action on the quotient, in the coordinates `free`
        let induced = |a: &MatrixQ| -> MatrixQ {
            let cols: Vec<Vec<Rational>> = free.iter().map(|&f| quotient_coords(&a.column(f), &v, &free)).collect();
            MatrixQ::from_columns(&cols)
        };
        let mut space = Subspace::full(qd);
        for a in &der_ads {
            let kernel = induced(a).kernel();
            space = space.intersect(&kernel).expect("same ambient");
        }
        if space.is_zero() {
            return WeightTable::failed();
        }
        let qads: Vec<MatrixQ> = ads.iter().map(induced).collect();
        let mut weights = Vec::with_capacity(n);
        for a in &qads {
            let basis = space.vectors();
            let images: Vec<Vec<Rational>> = basis
                .iter()
                .map(|b| space.coordinates(&a.mul_vec(b)).expect("joint kernel is invariant"))
                .collect();
            let restricted = MatrixQ::from_columns(&images);
            let Some(mu) = rational_eigenvalue(&restricted) else {
                return WeightTable::failed();
            };
            let shifted = restricted.sub(&MatrixQ::identity(basis.len()).scale(&mu));
            let eig: Vec<Vec<Rational>> = shifted
                .kernel()
                .vectors()
                .iter()
                .map(|c| {
                    let mut out = vec![Rational::zero(); qd];
                    for (coef, b) in c.iter().zip(&basis) {
                        if !coef.is_zero() {
                            for (o, x) in out.iter_mut().zip(b) {
                                *o += coef * x;
                            }
                        }
                    }
                    out
                })
                .collect();
            space = Subspace::span(qd, &eig);
            weights.push(mu);
        }
        let w = space.vectors().swap_remove(0);
        let mut lifted = vec![Rational::zero(); n];
        for (x, &f) in w.into_iter().zip(&free) {
            lifted[f] = x;
        }
        let mut vs = v.vectors();
        vs.push(lifted);
        v = Subspace::span(n, &vs);
        functionals.push(weights);
    }
    WeightTable { functionals, success: true }
}
