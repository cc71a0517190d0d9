use serde::Serialize;

use super::LieAlgebra;
use crate::exactla::{MatrixQ, Rational, Subspace};

/// A descending chain of ideals. `length` is the first index at which the
/// chain reaches zero; `None` when it stabilizes at a nonzero term, which is
/// then the last entry of `terms`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesResult {
    pub terms: Vec<Subspace>,
    pub length: Option<usize>,
}

impl SeriesResult {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl LieAlgebra {
    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// Span of all brackets between basis vectors of `a` and `b`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let (va, vb) = (a.vectors(), b.vectors());
        let mut out = Vec::new();
        for x in &va {
            for y in &vb {
                let z = self.bracket(x, y);
                if z.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                    out.push(z);
                }
            }
        }
        Subspace::span(self.dim(), &out)
    }

    fn descend(&self, step: impl Fn(&Subspace) -> Subspace) -> SeriesResult {
        let mut terms = vec![self.full_space()];
        loop {
            let last = terms.last().unwrap();
            if last.is_zero() {
                let length = terms.len() - 1;
                return SeriesResult { terms, length: Some(length) };
            }
            let next = step(last);
            if next.dim() == last.dim() {
                return SeriesResult { terms, length: None };
            }
            terms.push(next);
        }
    }

    /// `g^(0) = g`, `g^(j+1) = [g^(j), g^(j)]`; `length` is the derived length.
    pub fn derived_series(&self) -> SeriesResult {
        self.descend(|t| self.bracket_span(t, t))
    }

    /// `g_(0) = g`, `g_(j+1) = [g, g_(j)]`; `length` is the nilpotency class.
    pub fn lower_central_series(&self) -> SeriesResult {
        let full = self.full_space();
        self.descend(|t| self.bracket_span(&full, t))
    }

    pub fn derived_length(&self) -> Option<usize> {
        self.derived_series().length
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        self.lower_central_series().length
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_length().is_some()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // row block j of the stacked map is ad(e_j) with a sign flip, which
        // does not change the kernel
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n * n);
        for j in 0..n {
            rows.extend(self.ad_basis(j).row_vecs());
        }
        if rows.is_empty() {
            return Subspace::full(n);
        }
        MatrixQ::from_rows(rows).kernel()
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.contains(&self.bracket_span(&self.full_space(), s)).unwrap_or(false)
    }

    pub fn killing_form(&self) -> MatrixQ {
        let n = self.dim();
        let ads: Vec<MatrixQ> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut k = MatrixQ::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].trace_product(&ads[j]);
                k.set(i, j, t.clone());
                k.set(j, i, t);
            }
        }
        k
    }

    pub fn killing_det_sign(&self) -> Sign {
        let d = self.killing_form().det().expect("killing form is square");
        match d.cmp(&Rational::default()) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    /// Cartan's criterion; the zero algebra is not counted as semisimple.
    pub fn is_semisimple(&self) -> bool {
        self.dim() > 0 && self.killing_det_sign() != Sign::Zero
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;
    use crate::liecore::{validate_structure, RawAlgebra};

    fn heisenberg() -> LieAlgebra {
        let mut r = RawAlgebra::new(3);
        r.set(0, 1, 2, q(1));
        validate_structure(r).unwrap()
    }

    fn sl2() -> LieAlgebra {
        let mut r = RawAlgebra::new(3);
        r.set(0, 1, 1, q(2));
        r.set(0, 2, 2, q(-2));
        r.set(1, 2, 0, q(1));
        validate_structure(r).unwrap()
    }

    #[test]
    fn heisenberg_series() {
        let h = heisenberg();
        assert_eq!(h.lower_central_series().dims(), vec![3, 1, 0]);
        assert_eq!(h.nilpotency_class(), Some(2));
        assert_eq!(h.derived_length(), Some(2));
        assert_eq!(h.center(), Subspace::unit(3, 2));
    }

    #[test]
    fn sl2_is_perfect_and_semisimple() {
        let s = sl2();
        let d = s.derived_series();
        assert_eq!(d.length, None);
        assert_eq!(d.dims(), vec![3]);
        assert_eq!(s.killing_form(), MatrixQ::from_i64(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
        assert_eq!(s.killing_form().det().unwrap(), q(-128));
        assert!(s.is_semisimple());
        assert!(s.center().is_zero());
    }

    #[test]
    fn abelian_killing_form_vanishes() {
        let a = validate_structure(RawAlgebra::new(3)).unwrap();
        assert!(a.killing_form().is_zero());
        assert!(!a.is_semisimple());
        assert_eq!(a.derived_series().dims(), vec![3, 0]);
        assert_eq!(a.center().dim(), 3);
    }
}
