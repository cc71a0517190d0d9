use num_traits::{One, Zero};

use super::{LinalgError, MatrixQ, Rational};

/// A rational subspace of `Q^ambient`, stored as the nonzero rows of its
/// reduced row-echelon basis. Two subspaces are equal exactly when their
/// canonical bases coincide, so derived `PartialEq` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: MatrixQ,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: MatrixQ::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self { ambient, basis: MatrixQ::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let m = MatrixQ::from_rows(vectors.to_vec());
        assert_eq!(m.cols(), ambient, "vector length differs from ambient dimension");
        Self::from_rref_of(&m)
    }

    /// Row space of `m`.
    pub fn row_space(m: &MatrixQ) -> Self {
        if m.rows() == 0 {
            return Self::zero(m.cols());
        }
        Self::from_rref_of(m)
    }

    fn from_rref_of(m: &MatrixQ) -> Self {
        let rref = m.rref();
        let rows: Vec<Vec<Rational>> = (0..rref.rank).map(|r| rref.reduced.row(r).to_vec()).collect();
        let basis = if rows.is_empty() { MatrixQ::zeros(0, m.cols()) } else { MatrixQ::from_rows(rows) };
        Self { ambient: m.cols(), basis, pivots: rref.pivots }
    }

    pub fn unit(ambient: usize, index: usize) -> Self {
        let mut v = vec![Rational::zero(); ambient];
        v[index] = Rational::one();
        Self::span(ambient, &[v])
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &MatrixQ {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (r, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, b) in residual.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *x -= c * b;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    fn check(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        let mut vs = self.vectors();
        vs.extend(other.vectors());
        Ok(Self::span(self.ambient, &vs))
    }

    /// Exact intersection via the kernel of `[A^T | -B^T]`.
    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Ok(Self::zero(self.ambient));
        }
        let mut stacked = MatrixQ::zeros(self.ambient, da + db);
        for i in 0..da {
            for (r, x) in self.basis.row(i).iter().enumerate() {
                stacked.set(r, i, x.clone());
            }
        }
        for j in 0..db {
            for (r, x) in other.basis.row(j).iter().enumerate() {
                stacked.set(r, da + j, -x.clone());
            }
        }
        let kernel = stacked.kernel();
        let vectors: Vec<Vec<Rational>> = kernel
            .vectors()
            .iter()
            .map(|k| {
                let mut v = vec![Rational::zero(); self.ambient];
                for (i, c) in k[..da].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, b) in v.iter_mut().zip(self.basis.row(i)) {
                        *x += c * b;
                    }
                }
                v
            })
            .collect();
        Ok(Self::span(self.ambient, &vectors))
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(other.basis.row_vecs().iter().all(|v| self.contains_vector(v)))
    }

    /// Image of the subspace under a linear map given as a matrix acting on columns.
    pub fn image(&self, map: &MatrixQ) -> Self {
        let vs: Vec<Vec<Rational>> = self.vectors().iter().map(|v| map.mul_vec(v)).collect();
        Self::span(map.rows(), &vs)
    }

    /// Whether the subspace is mapped into itself by `map`.
    pub fn is_invariant_under(&self, map: &MatrixQ) -> bool {
        self.vectors().iter().all(|v| self.contains_vector(&map.mul_vec(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;

    fn e(n: usize, i: usize) -> Vec<Rational> {
        (0..n).map(|k| if k == i { q(1) } else { q(0) }).collect()
    }

    #[test]
    fn sum_of_axes() {
        let a = Subspace::span(3, &[e(3, 0)]);
        let b = Subspace::span(3, &[e(3, 1)]);
        assert_eq!(a.sum(&b).unwrap(), Subspace::span(3, &[e(3, 0), e(3, 1)]));
    }

    #[test]
    fn intersect_with_self() {
        let v = Subspace::span(3, &[vec![q(1), q(2), q(3)], vec![q(0), q(1), q(-1)]]);
        assert_eq!(v.intersect(&v).unwrap(), v);
    }

    #[test]
    fn intersect_diagonal_with_plane() {
        let diag = Subspace::span(3, &[vec![q(1), q(1), q(0)]]);
        let plane = Subspace::span(3, &[e(3, 0), e(3, 1)]);
        assert_eq!(diag.intersect(&plane).unwrap(), diag);
        assert!(plane.contains(&diag).unwrap());
        assert!(!diag.contains(&plane).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(LinalgError::DimensionMismatch { .. })));
        assert!(a.intersect(&b).is_err());
        assert!(a.contains(&b).is_err());
    }

    #[test]
    fn coordinates_recover_combination() {
        let s = Subspace::span(3, &[vec![q(1), q(0), q(2)], vec![q(0), q(1), q(1)]]);
        let v = vec![q(3), q(-2), q(4)];
        assert_eq!(s.coordinates(&v), Some(vec![q(3), q(-2)]));
        assert_eq!(s.coordinates(&[q(0), q(0), q(1)]), None);
    }
}
