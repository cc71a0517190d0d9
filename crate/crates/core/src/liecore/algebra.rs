use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::StructureError;
use crate::exactla::{format_rational, MatrixQ, Rational, Subspace};

/// Unvalidated structure constants, as read from a file or produced by a builder.
///
/// Entries are `(i, j, k, c)` meaning `[e_i, e_j]` has `e_k`-coefficient `c`,
/// all indices 0-based. Entries with `i > j` are accepted and folded onto
/// `(j, i, k, -c)`; a conflicting pair is an antisymmetry violation.
#[derive(Clone, Debug, Default)]
pub struct RawAlgebra {
    pub dim: usize,
    pub entries: Vec<(usize, usize, usize, Rational)>,
    pub labels: Option<Vec<String>>,
    pub matrix_rep: Option<Vec<MatrixQ>>,
    pub grading: Option<Vec<Rational>>,
    pub origin: Option<String>,
}

impl RawAlgebra {
    pub fn new(dim: usize) -> Self {
        Self { dim, ..Self::default() }
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Rational) {
        self.entries.push((i, j, k, c));
    }
}

/// A validated real Lie algebra with rational structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// Nonzero constants for `i < j`: `(i, j) -> [(k, c)]` sorted by `k`.
    constants: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    /// `table[i][j]` = sparse expansion of `[e_i, e_j]` for all ordered pairs.
    table: Vec<Vec<Vec<(usize, Rational)>>>,
    labels: Vec<String>,
    matrix_rep: Option<Vec<MatrixQ>>,
    grading: Option<Vec<Rational>>,
    origin: Option<String>,
}

pub fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("x{i}")).collect()
}

/// Checks antisymmetry, the Jacobi identity on all basis triples `i < j < k`,
/// and, when present, that the matrix realization is linearly independent and
/// reproduces every bracket.
pub fn validate_structure(raw: RawAlgebra) -> Result<LieAlgebra, StructureError> {
    let n = raw.dim;
    let mut merged: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
    let mut seen: BTreeMap<(usize, usize, usize), (bool, Rational)> = BTreeMap::new();
    for (i, j, k, c) in raw.entries {
        for idx in [i, j, k] {
            if idx >= n {
                return Err(StructureError::IndexOutOfRange { index: idx + 1, dim: n });
            }
        }
        if i == j {
            if !c.is_zero() {
                return Err(StructureError::AntisymmetryViolation { i: i + 1, j: j + 1, k: k + 1 });
            }
            continue;
        }
        let (key, val, flipped) = if i < j { ((i, j, k), c, false) } else { ((j, i, k), -c, true) };
        match seen.get(&key) {
            Some((was_flipped, prev)) if *was_flipped != flipped => {
                if *prev != val {
                    return Err(StructureError::AntisymmetryViolation { i: i + 1, j: j + 1, k: k + 1 });
                }
                continue;
            }
            Some(_) => return Err(StructureError::DuplicateEntry { i: key.0 + 1, j: key.1 + 1, k: key.2 + 1 }),
            None => {}
        }
        seen.insert(key, (flipped, val.clone()));
        if !val.is_zero() {
            merged.insert(key, val);
        }
    }
    let mut constants: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    for ((i, j, k), c) in merged {
        constants.entry((i, j)).or_default().push((k, c));
    }
    let labels = match raw.labels {
        Some(l) if l.len() == n => l,
        Some(l) => return Err(StructureError::LabelCount { expected: n, found: l.len() }),
        None => default_labels(n),
    };
    if let Some(g) = &raw.grading {
        if g.len() != n {
            return Err(StructureError::GradingLength { expected: n, found: g.len() });
        }
    }
    let alg = LieAlgebra::assemble(n, constants, labels, None, raw.grading, raw.origin);

    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (ei, ej, ek) = (alg.unit(i), alg.unit(j), alg.unit(k));
                let mut r = alg.bracket(&ei, &alg.bracket(&ej, &ek));
                add_into(&mut r, &alg.bracket(&ej, &alg.bracket(&ek, &ei)));
                add_into(&mut r, &alg.bracket(&ek, &alg.bracket(&ei, &ej)));
                if r.iter().any(|x| !x.is_zero()) {
                    return Err(StructureError::JacobiViolation {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        triple: format!("{}, {}, {}", alg.labels[i], alg.labels[j], alg.labels[k]),
                        residual: format_vector(&r, &alg.labels),
                    });
                }
            }
        }
    }

    let mut alg = alg;
    if let Some(rep) = raw.matrix_rep {
        check_rep(&alg, &rep)?;
        alg.matrix_rep = Some(rep);
    }
    Ok(alg)
}

fn check_rep(alg: &LieAlgebra, rep: &[MatrixQ]) -> Result<(), StructureError> {
    let n = alg.dim;
    if rep.len() != n {
        return Err(StructureError::RepShape(format!("{} matrices for dimension {n}", rep.len())));
    }
    let d = rep.first().map_or(0, MatrixQ::rows);
    if rep.iter().any(|m| m.rows() != d || m.cols() != d) {
        return Err(StructureError::RepShape("matrices must be square of one common size".into()));
    }
    let flat: Vec<Vec<Rational>> = rep.iter().map(MatrixQ::to_flat).collect();
    if n > 0 && Subspace::span(d * d, &flat).dim() != n {
        return Err(StructureError::RepNotFaithful);
    }
    for i in 0..n {
        for j in i + 1..n {
            let expected = alg.table[i][j]
                .iter()
                .fold(MatrixQ::zeros(d, d), |acc, (k, c)| acc.add(&rep[*k].scale(c)));
            if rep[i].commutator(&rep[j]) != expected {
                return Err(StructureError::RepMismatch { i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(())
}

fn add_into(acc: &mut [Rational], v: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += b;
        }
    }
}

/// `2e - 1/2h + f` style rendering of a coefficient vector.
pub fn format_vector(v: &[Rational], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels).filter(|(c, _)| !c.is_zero()) {
        let abs = c.abs();
        let sign = match (out.is_empty(), c.is_negative()) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let coeff = if abs.is_one() { String::new() } else { format_rational(&abs) };
        out.push_str(&format!("{sign}{coeff}{l}"));
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl LieAlgebra {
    fn assemble(
        dim: usize,
        constants: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
        labels: Vec<String>,
        matrix_rep: Option<Vec<MatrixQ>>,
        grading: Option<Vec<Rational>>,
        origin: Option<String>,
    ) -> Self {
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for (&(i, j), terms) in &constants {
            table[i][j] = terms.clone();
            table[j][i] = terms.iter().map(|(k, c)| (*k, -c.clone())).collect();
        }
        Self { dim, constants, table, labels, matrix_rep, grading, origin }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero constants `(i, j, k, c)` with `i < j`, sorted.
    pub fn constants(&self) -> Vec<(usize, usize, usize, Rational)> {
        self.constants
            .iter()
            .flat_map(|(&(i, j), terms)| terms.iter().map(move |(k, c)| (i, j, *k, c.clone())))
            .collect()
    }

    /// `c_{ij}^k` for any ordered pair.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.table[i][j].iter().find(|(kk, _)| *kk == k).map(|(_, c)| c.clone()).unwrap_or_default()
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i][j]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix_rep(&self) -> Option<&[MatrixQ]> {
        self.matrix_rep.as_deref()
    }

    pub fn grading(&self) -> Option<&[Rational]> {
        self.grading.as_deref()
    }

    pub fn origin(&self) -> Option<&str> {
        self.origin.as_deref()
    }

    pub fn with_origin(mut self, origin: impl Into<String>) -> Self {
        self.origin = Some(origin.into());
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    /// Attaches grading metadata (one weight per basis vector).
    pub fn with_grading(mut self, grading: Option<Vec<Rational>>) -> Self {
        if let Some(g) = &grading {
            assert_eq!(g.len(), self.dim);
        }
        self.grading = grading;
        self
    }

    pub fn without_matrix_rep(mut self) -> Self {
        self.matrix_rep = None;
        self
    }

    pub fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.is_empty()
    }

    /// `[u, v]` in coordinates.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = vec![Rational::zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || self.table[i][j].is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Matrix of `ad X`; column `j` holds `[X, e_j]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> MatrixQ {
        assert_eq!(x.len(), self.dim);
        let mut m = MatrixQ::zeros(self.dim, self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in &self.table[i][j] {
                    *m.get_mut(*k, j) += a * c;
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> MatrixQ {
        self.ad_matrix(&self.unit(i))
    }

    /// Block direct sum with zero cross brackets. Labels are kept as given;
    /// the realization and grading survive only when both summands carry them.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut constants = self.constants.clone();
        for (&(i, j), terms) in &other.constants {
            constants.insert((i + n, j + n), terms.iter().map(|(k, c)| (k + n, c.clone())).collect());
        }
        let labels = self.labels.iter().chain(&other.labels).cloned().collect();
        let rep = match (&self.matrix_rep, &other.matrix_rep) {
            (Some(a), Some(b)) => {
                let (da, db) = (a.first().map_or(0, MatrixQ::rows), b.first().map_or(0, MatrixQ::rows));
                let mut out: Vec<MatrixQ> = a.iter().map(|m| MatrixQ::block_diag(m, &MatrixQ::zeros(db, db))).collect();
                out.extend(b.iter().map(|m| MatrixQ::block_diag(&MatrixQ::zeros(da, da), m)));
                Some(out)
            }
            _ => None,
        };
        let grading = match (&self.grading, &other.grading) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        let origin = match (&self.origin, &other.origin) {
            (Some(a), Some(b)) => Some(format!("{a} x {b}")),
            _ => None,
        };
        Self::assemble(n + other.dim, constants, labels, rep, grading, origin)
    }

    /// The subalgebra spanned by `s` in its canonical basis, with induced
    /// constants, realization and (when every basis vector is homogeneous) grading.
    pub fn subalgebra(&self, s: &Subspace) -> Result<Self, StructureError> {
        assert_eq!(s.ambient(), self.dim);
        let basis = s.vectors();
        let d = basis.len();
        let mut constants: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
        for p in 0..d {
            for q in p + 1..d {
                let br = self.bracket(&basis[p], &basis[q]);
                let coords = s.coordinates(&br).ok_or(StructureError::NotSubalgebra)?;
                let terms: Vec<(usize, Rational)> =
                    coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                if !terms.is_empty() {
                    constants.insert((p, q), terms);
                }
            }
        }
        let support = |v: &[Rational]| -> Vec<usize> { (0..v.len()).filter(|&i| !v[i].is_zero()).collect() };
        let labels = basis
            .iter()
            .enumerate()
            .map(|(p, v)| {
                let sup = support(v);
                if sup.len() == 1 && v[sup[0]].is_one() {
                    self.labels[sup[0]].clone()
                } else {
                    format!("v{}", p + 1)
                }
            })
            .collect();
        let rep = self.matrix_rep.as_ref().map(|rep| {
            let dd = rep.first().map_or(0, MatrixQ::rows);
            basis
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .fold(MatrixQ::zeros(dd, dd), |acc, (i, c)| acc.add(&rep[i].scale(c)))
                })
                .collect()
        });
        let grading = self.grading.as_ref().and_then(|g| {
            basis
                .iter()
                .map(|v| {
                    let sup = support(v);
                    let w = &g[*sup.first()?];
                    sup.iter().all(|&i| &g[i] == w).then(|| w.clone())
                })
                .collect::<Option<Vec<_>>>()
        });
        Ok(Self::assemble(d, constants, labels, rep, grading, None))
    }

    /// Raw form, suitable for serialization or revalidation.
    pub fn to_raw(&self) -> RawAlgebra {
        RawAlgebra {
            dim: self.dim,
            entries: self.constants(),
            labels: Some(self.labels.clone()),
            matrix_rep: self.matrix_rep.clone(),
            grading: self.grading.clone(),
            origin: self.origin.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;

    fn sl2_raw() -> RawAlgebra {
        // basis h, e, f
        let mut r = RawAlgebra::new(3);
        r.set(0, 1, 1, q(2));
        r.set(0, 2, 2, q(-2));
        r.set(1, 2, 0, q(1));
        r.labels = Some(vec!["h".into(), "e".into(), "f".into()]);
        r
    }

    #[test]
    fn sl2_is_valid() {
        let l = validate_structure(sl2_raw()).unwrap();
        assert_eq!(l.bracket(&l.unit(1), &l.unit(2)), l.unit(0));
        assert_eq!(l.ad_basis(0), MatrixQ::diag(&[q(0), q(2), q(-2)]));
    }

    #[test]
    fn corrupted_sl2_names_the_triple() {
        let mut r = RawAlgebra::new(3);
        r.set(0, 1, 1, q(2));
        r.set(0, 2, 2, q(-2));
        r.set(1, 2, 1, q(1));
        r.labels = Some(vec!["h".into(), "e".into(), "f".into()]);
        match validate_structure(r) {
            Err(StructureError::JacobiViolation { i, j, k, triple, residual }) => {
                assert_eq!((i, j, k), (1, 2, 3));
                assert_eq!(triple, "h, e, f");
                assert_eq!(residual, "2e");
            }
            other => panic!("expected a Jacobi violation, got {other:?}"),
        }
    }

    #[test]
    fn antisymmetry_conflict() {
        let mut r = RawAlgebra::new(2);
        r.set(0, 1, 1, q(1));
        r.set(1, 0, 1, q(1));
        assert!(matches!(validate_structure(r), Err(StructureError::AntisymmetryViolation { .. })));
        let mut r = RawAlgebra::new(2);
        r.set(0, 1, 1, q(1));
        r.set(1, 0, 1, q(-1));
        assert!(validate_structure(r).is_ok());
    }

    #[test]
    fn rep_mismatch_is_reported() {
        let mut r = sl2_raw();
        let h = MatrixQ::from_i64(&[&[1, 0], &[0, -1]]);
        let e = MatrixQ::from_i64(&[&[0, 1], &[0, 0]]);
        let f = MatrixQ::from_i64(&[&[0, 0], &[1, 0]]);
        r.matrix_rep = Some(vec![h.clone(), e.clone(), f.clone()]);
        assert!(validate_structure(r.clone()).is_ok());
        r.matrix_rep = Some(vec![h, f, e]);
        assert!(matches!(validate_structure(r), Err(StructureError::RepMismatch { .. })));
    }

    #[test]
    fn bracket_is_antisymmetric() {
        let l = validate_structure(sl2_raw()).unwrap();
        let v = vec![q(1), q(-3), q(2)];
        assert!(l.bracket(&v, &v).iter().all(Zero::is_zero));
    }
}
