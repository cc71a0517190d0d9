use num_traits::{Signed, Zero};
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::exactla::{complex_roots_default, find_nonnegative_point, q, Fx, MatrixQ, PolyQ, Rational, Subspace};
use crate::liecore::LieAlgebra;
use crate::spectral::SpectralConfig;

/// Derivations sampled by the unipotence test.
pub const UNIPOTENCE_SAMPLES: usize = 5;

const SPOT_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ACState {
    AC,
    NotAC,
    Unknown,
}

impl ACState {
    pub fn as_str(self) -> &'static str {
        match self {
            ACState::AC => "AC",
            ACState::NotAC => "NotAC",
            ACState::Unknown => "Unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateSource {
    Grading,
    DiagonalDerivation,
    SemisimplePart,
}

/// A derivation `D` with real nonnegative spectrum whose flow contracts the algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct ACCertificate {
    pub derivation: MatrixQ,
    /// Distinct eigenvalues with algebraic multiplicities.
    pub eigenvalues: Vec<(Rational, usize)>,
    pub source: CertificateSource,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ACStatus {
    pub status: ACState,
    pub certificate: Option<ACCertificate>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CertificateFailure {
    #[error("matrix is not {0} x {0}")]
    Shape(usize),
    #[error("derivation identity fails")]
    NotADerivation,
    #[error("spectrum is not real")]
    NonrealSpectrum,
    #[error("spectrum has a negative eigenvalue")]
    NegativeEigenvalue,
    #[error("derivation is nilpotent")]
    Nilpotent,
    #[error("eigenvalue 0 is not semisimple")]
    DefectiveZero,
    #[error("kernel is not abelian")]
    KernelNotAbelian,
    #[error("limit projection is not an endomorphism")]
    LimitNotEndomorphism,
    #[error("exp(-{s} D) fails the homomorphism identity: residual {residual}")]
    SpotCheck { s: String, residual: String },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CertificateCheck {
    pub charpoly: PolyQ,
    /// Largest homomorphism residual over the numeric spot checks.
    pub residual: f64,
}

/// Sign changes in a coefficient list, zeros skipped.
fn sign_changes(c: &[Rational]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(Signed::is_positive).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Checks that `D` contracts `l` to zero through endomorphisms.
///
/// `D` must be a derivation with real nonnegative spectrum whose eigenvalue 0
/// is semisimple and has an abelian eigenspace. Then `exp(-sD)` is a path of
/// automorphisms tending, as `s` grows, to the projection `P` onto `ker D`
/// along `im D`; `P` must be an endomorphism, after which `tP` for `t` from 1
/// to 0 finishes the path. With `ker D = 0` this is the grading case, where
/// `exp(-sD)` tends to 0 directly.
///
/// `exp(-sD)` is also evaluated numerically at `s = 1/2, 1, 2` and tested on
/// random pairs against a residual of `1e-10`.
pub fn verify_ac_certificate(l: &LieAlgebra, d: &MatrixQ) -> Result<CertificateCheck, CertificateFailure> {
    let n = l.dim();
    if d.rows() != n || d.cols() != n {
        return Err(CertificateFailure::Shape(n));
    }
    if !l.is_derivation(d) {
        return Err(CertificateFailure::NotADerivation);
    }
    let charpoly = d.charpoly().expect("square");
    if n == 0 {
        return Ok(CertificateCheck { charpoly, residual: 0.0 });
    }
    let zeros = charpoly.zero_root_multiplicity();
    if zeros == n {
        return Err(CertificateFailure::Nilpotent);
    }
    let sf = charpoly.square_free_part().expect("nonzero");
    if sf.sturm_count().expect("nonzero") != sf.degree().unwrap_or(0) {
        return Err(CertificateFailure::NonrealSpectrum);
    }
    // with only real roots, Descartes' count of p(-t) is exact
    let reduced: Vec<Rational> = charpoly.coeffs()[zeros..]
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    if sign_changes(&reduced) > 0 {
        return Err(CertificateFailure::NegativeEigenvalue);
    }
    let kernel = d.kernel();
    if kernel.dim() != zeros {
        return Err(CertificateFailure::DefectiveZero);
    }
    let kv = kernel.vectors();
    if kv.iter().enumerate().any(|(i, a)| kv[i + 1..].iter().any(|b| l.bracket(a, b).iter().any(|x| !x.is_zero()))) {
        return Err(CertificateFailure::KernelNotAbelian);
    }
    if zeros > 0 {
        let image = Subspace::row_space(&d.transpose()).vectors();
        let mut cols = kv.clone();
        cols.extend(image);
        let b = MatrixQ::from_columns(&cols);
        let mut keep = vec![q(0); n];
        keep[..zeros].fill(q(1));
        let p = b.mul(&MatrixQ::diag(&keep)).mul(&b.inverse().expect("ker D and im D are complementary"));
        if !l.is_endomorphism(&p) {
            return Err(CertificateFailure::LimitNotEndomorphism);
        }
    }
    let mut residual: f64 = 0.0;
    for (num, den) in [(1, 2), (1, 1), (2, 1)] {
        let s = Rational::new(num.into(), den.into());
        let r = spot_check(l, d, &s);
        if r.is_nan() || r >= SPOT_TOLERANCE {
            return Err(CertificateFailure::SpotCheck { s: s.to_string(), residual: format!("{r:e}") });
        }
        residual = residual.max(r);
    }
    Ok(CertificateCheck { charpoly, residual })
}

type FxMatrix = Vec<Vec<Fx>>;

fn fx_mul(a: &FxMatrix, b: &FxMatrix, wp: u32) -> FxMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Fx::zero(wp), |acc, k| if a[i][k].is_zero() { acc } else { acc.add(&a[i][k].mul(&b[k][j])) }))
                .collect()
        })
        .collect()
}

/// `exp(a)` by scaling, a Taylor polynomial and repeated squaring.
fn fx_exp(a: &MatrixQ, wp: u32) -> FxMatrix {
    let n = a.rows();
    let norm: Rational = (0..n).map(|i| (0..n).map(|j| a.get(i, j).abs()).sum::<Rational>()).max().unwrap_or_default();
    let mut squarings = 0u32;
    let mut bound = norm;
    while bound > q(1) / q(2) {
        bound /= q(2);
        squarings += 1;
    }
    let scale = Rational::new(1.into(), num_bigint::BigInt::from(1) << squarings);
    let m: FxMatrix = (0..n).map(|i| (0..n).map(|j| Fx::from_rational(&(a.get(i, j) * &scale), wp)).collect()).collect();
    let id: FxMatrix =
        (0..n).map(|i| (0..n).map(|j| if i == j { Fx::from_int(1, wp) } else { Fx::zero(wp) }).collect()).collect();
    let mut sum = id.clone();
    let mut term = id;
    // the terms shrink at least like 2^-k / k!
    for k in 1..=(wp as i64 / 2).max(20) {
        term = fx_mul(&term, &m, wp);
        let inv = Rational::new(1.into(), k.into());
        for row in term.iter_mut() {
            for x in row.iter_mut() {
                *x = x.mul_rational(&inv);
            }
        }
        for (srow, trow) in sum.iter_mut().zip(&term) {
            for (s, t) in srow.iter_mut().zip(trow) {
                *s = s.add(t);
            }
        }
        if term.iter().flatten().all(|x| x.log2_abs() < -f64::from(wp)) {
            break;
        }
    }
    for _ in 0..squarings {
        sum = fx_mul(&sum, &sum, wp);
    }
    sum
}

fn fx_bracket(l: &LieAlgebra, u: &[Fx], v: &[Fx], wp: u32) -> Vec<Fx> {
    let n = l.dim();
    let mut out = vec![Fx::zero(wp); n];
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            let uv = ui.mul(vj);
            for (k, c) in l.basis_bracket(i, j) {
                out[*k] = out[*k].add(&uv.mul_rational(c));
            }
        }
    }
    out
}

fn fx_apply(m: &FxMatrix, v: &[Fx], wp: u32) -> Vec<Fx> {
    m.iter().map(|row| row.iter().zip(v).fold(Fx::zero(wp), |acc, (a, b)| acc.add(&a.mul(b)))).collect()
}

/// Largest entry of `E[x, y] - [Ex, Ey]` for `E = exp(-sD)` over random integer pairs.
fn spot_check(l: &LieAlgebra, d: &MatrixQ, s: &Rational) -> f64 {
    let n = l.dim();
    let wp = 160;
    let e = fx_exp(&d.scale(&-s.clone()), wp);
    let mut rng = crate::spectral::sample_rng(0, 0);
    let mut worst: f64 = 0.0;
    for _ in 0..6 {
        let mut draw = || -> Vec<Fx> { (0..n).map(|_| Fx::from_int(rng.gen_range(-3..=3), wp)).collect() };
        let (x, y) = (draw(), draw());
        let lhs = fx_apply(&e, &fx_bracket(l, &x, &y, wp), wp);
        let rhs = fx_bracket(l, &fx_apply(&e, &x, wp), &fx_apply(&e, &y, wp), wp);
        for (a, b) in lhs.iter().zip(&rhs) {
            worst = worst.max(a.sub(b).abs().to_f64());
        }
    }
    worst
}

fn rational_eigenvalues(p: &PolyQ) -> Option<Vec<(Rational, usize)>> {
    let roots = complex_roots_default(p, 64).ok()?;
    roots.into_iter().map(|r| r.exact.map(|x| (x, r.multiplicity))).collect()
}

fn certify(l: &LieAlgebra, d: MatrixQ, source: CertificateSource) -> Option<ACCertificate> {
    let check = verify_ac_certificate(l, &d).ok()?;
    let eigenvalues = rational_eigenvalues(&check.charpoly)?;
    Some(ACCertificate { derivation: d, eigenvalues, source, residual: check.residual })
}

/// Diagonal derivations `diag(d)` satisfy `d_k = d_i + d_j` whenever `[e_i, e_j]` has an `e_k` term.
fn diagonal_equations(l: &LieAlgebra) -> Vec<Vec<Rational>> {
    let n = l.dim();
    let mut rows = Vec::new();
    for (i, j, k, _) in l.constants() {
        let mut r = vec![q(0); n];
        r[k] += q(1);
        r[i] -= q(1);
        r[j] -= q(1);
        if r.iter().any(|x| !x.is_zero()) && !rows.contains(&r) {
            rows.push(r);
        }
    }
    rows
}

/// A nonnegative diagonal derivation: strictly positive when one exists,
/// otherwise one with maximal support.
fn diagonal_certificate_candidate(l: &LieAlgebra) -> Option<MatrixQ> {
    let n = l.dim();
    let eqs = diagonal_equations(l);
    // with d = 1 + y, y >= 0
    let shifted: Vec<Rational> = eqs.iter().map(|r| -r.iter().sum::<Rational>()).collect();
    if let Some(y) = find_nonnegative_point(&eqs, &shifted) {
        let d: Vec<Rational> = y.into_iter().map(|v| v + q(1)).collect();
        return Some(MatrixQ::diag(&d));
    }
    let mut total = vec![q(0); n];
    for i in 0..n {
        if !total[i].is_zero() {
            continue;
        }
        // d >= 0 with d_i - s = 1, s >= 0
        let mut a: Vec<Vec<Rational>> = eqs
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.push(q(0));
                r
            })
            .collect();
        let mut pin = vec![q(0); n + 1];
        pin[i] = q(1);
        pin[n] = q(-1);
        a.push(pin);
        let mut b = vec![q(0); eqs.len()];
        b.push(q(1));
        if let Some(x) = find_nonnegative_point(&a, &b) {
            for (t, v) in total.iter_mut().zip(&x[..n]) {
                *t += v;
            }
        }
    }
    total.iter().any(|x| !x.is_zero()).then(|| MatrixQ::diag(&total))
}

/// Semisimple part of `d` by Newton iteration on the square-free part of its
/// characteristic polynomial.
fn semisimple_part(d: &MatrixQ) -> Option<MatrixQ> {
    let p = d.charpoly().ok()?.square_free_part().ok()?;
    let dp = p.derivative();
    let mut s = d.clone();
    for _ in 0..64 {
        let ps = s.eval_poly(&p);
        if ps.is_zero() {
            return Some(s);
        }
        s = s.sub(&ps.mul(&s.eval_poly(&dp).inverse()?));
    }
    None
}

fn sample_derivations(basis: &[Vec<Rational>], n: usize, cfg: &SpectralConfig, count: usize) -> Vec<MatrixQ> {
    (0..count)
        .map(|s| {
            let mut rng = crate::spectral::sample_rng(cfg.seed ^ 0xd1b5_4a32_d192_ed03, s as u64);
            let b = 3 + s as i64;
            let mut flat = vec![q(0); n * n];
            for v in basis {
                let c = q(rng.gen_range(-b..=b));
                if !c.is_zero() {
                    for (f, x) in flat.iter_mut().zip(v) {
                        *f += &c * x;
                    }
                }
            }
            MatrixQ::from_flat(n, n, flat)
        })
        .collect()
}

/// Random derivations drawn from the derivation algebra, for tests and diagnostics.
pub fn random_derivations(l: &LieAlgebra, cfg: &SpectralConfig, count: usize) -> Vec<MatrixQ> {
    sample_derivations(&l.derivation_algebra().vectors(), l.dim(), cfg, count)
}

/// Algebraic contractibility, decided where possible.
///
/// Not solvable, or a unipotent derivation algebra, gives `NotAC`. A
/// verified certificate gives `AC`; candidates are tried from the grading
/// metadata, from a nonnegative diagonal derivation, and from semisimple
/// parts of sampled derivations.
pub fn ac_status(l: &LieAlgebra, cfg: &SpectralConfig) -> ACStatus {
    let n = l.dim();
    let found = |c: ACCertificate, reason: &str| ACStatus {
        status: ACState::AC,
        certificate: Some(c),
        reason: reason.to_string(),
    };
    if !l.is_solvable() {
        return ACStatus { status: ACState::NotAC, certificate: None, reason: "not solvable".into() };
    }
    if let Some(g) = l.grading() {
        if g.iter().all(|w| !w.is_negative()) {
            if let Some(c) = certify(l, MatrixQ::diag(g), CertificateSource::Grading) {
                return found(c, "grading derivation contracts the algebra");
            }
        }
    }
    let basis = l.derivation_algebra().vectors();
    let samples = sample_derivations(&basis, n, cfg, UNIPOTENCE_SAMPLES);
    if n > 0 && samples.iter().all(|d| d.charpoly().expect("square") == PolyQ::monomial(n)) {
        return ACStatus {
            status: ACState::NotAC,
            certificate: None,
            reason: format!("derivation algebra is unipotent ({UNIPOTENCE_SAMPLES} sampled derivations nilpotent)"),
        };
    }
    if let Some(c) = diagonal_certificate_candidate(l).and_then(|d| certify(l, d, CertificateSource::DiagonalDerivation)) {
        return found(c, "diagonal derivation contracts the algebra");
    }
    for d in &samples {
        if let Some(s) = semisimple_part(d) {
            for cand in [s.clone(), s.scale(&q(-1))] {
                if let Some(c) = certify(l, cand, CertificateSource::SemisimplePart) {
                    return found(c, "semisimple part of a derivation contracts the algebra");
                }
            }
        }
    }
    ACStatus { status: ACState::Unknown, certificate: None, reason: "no contracting derivation found".into() }
}
