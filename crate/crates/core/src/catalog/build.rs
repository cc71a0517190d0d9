use num_traits::Zero;
use thiserror::Error;

use super::expr::{AlgebraExpr, AtomName, Field};
use crate::exactla::{q, MatrixQ, Rational};
use crate::liecore::{validate_structure, LieAlgebra, RawAlgebra, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("unsupported algebra {0}")]
    Unsupported(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

const MAX_MATRIX_SIZE: u32 = 12;
const MAX_ABELIAN: u32 = 64;

/// Builds the algebra named by `e`, with the expression recorded as its origin.
pub fn build(e: &AlgebraExpr) -> Result<LieAlgebra, BuildError> {
    let factors = e.factors();
    if factors.len() == 1 {
        return Ok(build_term(e)?.with_origin(e.to_string()));
    }
    let parts: Vec<LieAlgebra> = factors.iter().map(|f| build_term(f)).collect::<Result<_, _>>()?;
    let mut labels: Vec<String> = parts.iter().flat_map(|p| p.labels().to_vec()).collect();
    let mut sorted = labels.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != labels.len() {
        labels = parts
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.labels().iter().map(move |l| format!("{}.{l}", i + 1)))
            .collect();
    }
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        acc = acc.direct_sum(p);
    }
    Ok(acc.with_labels(labels).with_origin(e.to_string()))
}

fn build_term(e: &AlgebraExpr) -> Result<LieAlgebra, BuildError> {
    match e {
        AlgebraExpr::Product(..) => build(e),
        AlgebraExpr::Derived(inner) => {
            let l = build(inner)?;
            let d = l.bracket_span(&l.full_space(), &l.full_space());
            Ok(l.subalgebra(&d)?)
        }
        AlgebraExpr::Atom { name, size, field } => build_atom(*name, *size, *field),
    }
}

fn unsupported(e: impl std::fmt::Display, why: &str) -> BuildError {
    BuildError::Unsupported(format!("{e}: {why}"))
}

fn build_atom(name: AtomName, m: u32, field: Option<Field>) -> Result<LieAlgebra, BuildError> {
    let shown = AlgebraExpr::atom(name, m, field);
    let min = match name {
        AtomName::St | AtomName::Abelian | AtomName::Strn => 1,
        AtomName::Nt | AtomName::Sl => 2,
    };
    if m < min {
        return Err(unsupported(&shown, &format!("size must be at least {min}")));
    }
    let cap = if name == AtomName::Abelian { MAX_ABELIAN } else { MAX_MATRIX_SIZE - u32::from(name == AtomName::Strn) };
    if m > cap {
        return Err(unsupported(&shown, &format!("size must be at most {cap}")));
    }
    let m = m as usize;
    let (basis, labels, grading) = match name {
        AtomName::St => triangular_basis(m, true),
        AtomName::Nt => triangular_basis(m, false),
        AtomName::Sl => {
            let (b, l) = sl_basis(m);
            (b, l, None)
        }
        AtomName::Abelian => {
            let basis = (0..m).map(|j| unit_matrix(m + 1, 0, j + 1)).collect();
            let labels = (1..=m).map(|j| format!("a{j}")).collect();
            (basis, labels, Some(vec![q(1); m]))
        }
        AtomName::Strn => {
            let e = AlgebraExpr::product(
                AlgebraExpr::derived(AlgebraExpr::atom(AtomName::St, m as u32 + 1, Some(Field::R))),
                AlgebraExpr::atom(AtomName::Abelian, 1, None),
            );
            return build(&e);
        }
    };
    match field {
        Some(Field::C) => {
            let (rb, rl, rg) = realify(&basis, &labels, grading);
            from_matrix_basis(rb, rl, rg)
        }
        _ => from_matrix_basis(basis, labels, grading),
    }
}

fn unit_matrix(d: usize, i: usize, j: usize) -> MatrixQ {
    let mut m = MatrixQ::zeros(d, d);
    m.set(i, j, q(1));
    m
}

fn entry_label(i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("e{i}{j}")
    } else {
        format!("e{i}_{j}")
    }
}

/// Upper triangular (`with_diagonal`) or strictly upper triangular matrix
/// units, ordered by superdiagonal level; each unit is graded by its level.
fn triangular_basis(m: usize, with_diagonal: bool) -> (Vec<MatrixQ>, Vec<String>, Option<Vec<Rational>>) {
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    let mut grading = Vec::new();
    let first = if with_diagonal { 0 } else { 1 };
    for level in first..m {
        for i in 0..m - level {
            basis.push(unit_matrix(m, i, i + level));
            labels.push(entry_label(i + 1, i + level + 1));
            grading.push(q(level as i64));
        }
    }
    (basis, labels, Some(grading))
}

fn sl_basis(m: usize) -> (Vec<MatrixQ>, Vec<String>) {
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..m - 1 {
        let mut h = unit_matrix(m, i, i);
        h.set(i + 1, i + 1, q(-1));
        basis.push(h);
        labels.push(if m == 2 { "h".to_string() } else { format!("h{}", i + 1) });
    }
    for upper in [true, false] {
        for i in 0..m {
            for j in 0..m {
                if (upper && i < j) || (!upper && i > j) {
                    basis.push(unit_matrix(m, i, j));
                    labels.push(match (m, upper) {
                        (2, true) => "e".to_string(),
                        (2, false) => "f".to_string(),
                        _ => entry_label(i + 1, j + 1),
                    });
                }
            }
        }
    }
    (basis, labels)
}

/// Complex span of real matrices, viewed as a real algebra: `B` becomes
/// `[[B, 0], [0, B]]` and `iB` becomes `[[0, -B], [B, 0]]`.
fn realify(
    basis: &[MatrixQ],
    labels: &[String],
    grading: Option<Vec<Rational>>,
) -> (Vec<MatrixQ>, Vec<String>, Option<Vec<Rational>>) {
    let d = basis.first().map_or(0, MatrixQ::rows);
    let embed = |b: &MatrixQ, imag: bool| {
        let mut out = MatrixQ::zeros(2 * d, 2 * d);
        for r in 0..d {
            for c in 0..d {
                let v = b.get(r, c);
                if v.is_zero() {
                    continue;
                }
                if imag {
                    out.set(r, c + d, -v.clone());
                    out.set(r + d, c, v.clone());
                } else {
                    out.set(r, c, v.clone());
                    out.set(r + d, c + d, v.clone());
                }
            }
        }
        out
    };
    let mut rb: Vec<MatrixQ> = basis.iter().map(|b| embed(b, false)).collect();
    rb.extend(basis.iter().map(|b| embed(b, true)));
    let mut rl = labels.to_vec();
    rl.extend(labels.iter().map(|l| format!("i{l}")));
    let rg = grading.map(|g| g.iter().chain(&g).cloned().collect());
    (rb, rl, rg)
}

/// Structure constants of the matrix Lie algebra spanned by `basis`.
pub fn from_matrix_basis(
    basis: Vec<MatrixQ>,
    labels: Vec<String>,
    grading: Option<Vec<Rational>>,
) -> Result<LieAlgebra, BuildError> {
    let n = basis.len();
    let d = basis.first().map_or(0, MatrixQ::rows);
    let flat: Vec<Vec<Rational>> = basis.iter().map(MatrixQ::to_flat).collect();
    // rows of the basis matrix (flat vectors as rows) whose pivots pick
    // n matrix positions that determine coordinates
    let coords_from = {
        let stacked = MatrixQ::from_rows(flat.clone());
        let rref = stacked.rref();
        if rref.rank != n {
            return Err(StructureError::RepNotFaithful.into());
        }
        let positions = rref.pivots.clone();
        let mut sub = MatrixQ::zeros(n, n);
        for (r, &p) in positions.iter().enumerate() {
            for (k, v) in flat.iter().enumerate() {
                sub.set(r, k, v[p].clone());
            }
        }
        let inv = sub.inverse().expect("pivot positions give an invertible minor");
        move |v: &[Rational]| -> Vec<Rational> {
            let picked: Vec<Rational> = positions.iter().map(|&p| v[p].clone()).collect();
            inv.mul_vec(&picked)
        }
    };
    let mut raw = RawAlgebra::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let c = basis[i].commutator(&basis[j]).to_flat();
            if c.iter().all(Zero::is_zero) {
                continue;
            }
            let a = coords_from(&c);
            let back = a
                .iter()
                .enumerate()
                .fold(vec![Rational::zero(); d * d], |mut acc, (k, ak)| {
                    if !ak.is_zero() {
                        for (x, y) in acc.iter_mut().zip(&flat[k]) {
                            *x += ak * y;
                        }
                    }
                    acc
                });
            if back != c {
                return Err(BuildError::Unsupported("matrix span is not closed under commutators".into()));
            }
            for (k, ak) in a.into_iter().enumerate() {
                if !ak.is_zero() {
                    raw.set(i, j, k, ak);
                }
            }
        }
    }
    raw.labels = Some(labels);
    raw.grading = grading;
    raw.matrix_rep = Some(basis);
    Ok(validate_structure(raw)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_expression;

    fn b(s: &str) -> LieAlgebra {
        build(&parse_expression(s).unwrap()).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(b("abelian(3)").dim(), 3);
        assert!(b("abelian(3)").is_abelian());
        assert_eq!(b("st(4,R)").dim(), 10);
        assert_eq!(b("nt(4,R)").dim(), 6);
        assert_eq!(b("sl(3,R)").dim(), 8);
        assert_eq!(b("sl(2,C)").dim(), 6);
        assert_eq!(b("st(3,C)").dim(), 12);
    }

    #[test]
    fn nt3_is_heisenberg() {
        let n = b("nt(3,R)");
        assert_eq!(n.labels(), &["e12", "e23", "e13"]);
        assert_eq!(n.constants(), vec![(0, 1, 2, q(1))]);
    }

    #[test]
    fn strn2_has_two_dimensional_center() {
        let s = b("strn(2)");
        assert_eq!(s.dim(), 4);
        assert_eq!(s.center().dim(), 2);
    }

    #[test]
    fn sl2_labels_and_constants() {
        let s = b("sl(2,R)");
        assert_eq!(s.labels(), &["h", "e", "f"]);
        assert_eq!(s.constants(), vec![(0, 1, 1, q(2)), (0, 2, 2, q(-2)), (1, 2, 0, q(1))]);
    }

    #[test]
    fn product_labels_are_disambiguated() {
        let p = b("nt(3,R) x nt(3,R)");
        assert_eq!(p.labels()[0], "1.e12");
        assert_eq!(p.labels()[5], "2.e13");
        assert_eq!(p.origin(), Some("nt(3,R) x nt(3,R)"));
        assert_eq!(p.center().dim(), 2);
    }

    #[test]
    fn unsupported_sizes() {
        assert!(build(&parse_expression("sl(1,R)").unwrap()).is_err());
        assert!(build(&parse_expression("nt(1,R)").unwrap()).is_err());
        assert!(build(&parse_expression("st(40,R)").unwrap()).is_err());
    }
}
