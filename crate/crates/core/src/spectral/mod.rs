//! Adjoint spectra, weight spaces and spectral ranks.
//!
//! The spectral rank of a linear map is the rank of the additive group
//! generated by its nonzero eigenvalues; the nonreal spectral rank uses only
//! the nonreal ones. For an algebra both are maximized over `ad X`.
//!
//! Rational sample points are useless for that maximum: every eigenvalue of
//! `ad X` is then an algebraic number whose Q-span is usually one dimensional
//! already. The sampled strategy therefore evaluates `ad X` at directions
//! whose coordinates are Q-independent algebraic numbers (powers of the real
//! root of `t^d - t - 1`), numerically, and searches integer relations among
//! the resulting eigenvalues. See [`algebra_spectral_rank`].

mod numeric;
mod rank;
mod weights;

pub use numeric::{numeric_spectral_rank, AlgebraicDirection};
pub use rank::{algebra_spectral_rank, numeric_sampled_rank, RankMethod, SpectralRankReport, Witness};
pub(crate) use rank::integer_sample;
pub use weights::{weight_functionals, WeightTable};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactla::{
    complex_roots, q_linear_rank, real_root_count, ApproxRoot, Certainty, LinalgError, MatrixQ, PolyQ, QRank,
    Rational, SpanValue, Subspace, DEFAULT_MAX_PRECISION,
};
use crate::liecore::LieAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("the given eigenvalue is not a root of the characteristic polynomial")]
    NotARoot,
    #[error("irrational real eigenvalues have no exact weight space here")]
    IrrationalReal,
    #[error("matrix must be square")]
    NotSquare,
}

/// Knobs for every sampled or numeric computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralConfig {
    pub samples: usize,
    pub precision: u32,
    pub height_bound: u64,
    pub seed: u64,
    pub max_precision: u32,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        Self { samples: 8, precision: 256, height_bound: 1_000_000, seed: 1, max_precision: DEFAULT_MAX_PRECISION }
    }
}

/// Generator for sample `index`: one stream per index, so samples do not
/// depend on how many were drawn before.
pub(crate) fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub charpoly: PolyQ,
    pub roots: Vec<ApproxRoot>,
    pub all_rational: bool,
    pub all_real: bool,
}

pub fn spectrum_of(t: &MatrixQ, precision: u32) -> Result<Spectrum, LinalgError> {
    let charpoly = t.charpoly()?;
    let roots = complex_roots(&charpoly, precision, DEFAULT_MAX_PRECISION.max(precision))?;
    let distinct = charpoly.square_free_part()?.degree().unwrap_or(0);
    let all_real = real_root_count(&charpoly)? == distinct;
    let all_rational = roots.iter().all(|r| r.exact.is_some());
    Ok(Spectrum { charpoly, roots, all_rational, all_real })
}

/// Spectrum of `ad X`.
pub fn ad_spectrum(l: &LieAlgebra, x: &[Rational], precision: u32) -> Result<Spectrum, LinalgError> {
    spectrum_of(&l.ad_matrix(x), precision)
}

/// An eigenvalue given exactly: a rational number, or a nonreal conjugate pair
/// through its real part and squared modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eigenvalue {
    Rational(Rational),
    ConjugatePair { re: Rational, norm_sq: Rational },
}

impl Eigenvalue {
    /// `t - λ`, or `t^2 - 2 Re(λ) t + |λ|^2`.
    pub fn minimal_factor(&self) -> PolyQ {
        match self {
            Eigenvalue::Rational(l) => PolyQ::linear(l),
            Eigenvalue::ConjugatePair { re, norm_sq } => {
                PolyQ::from_coeffs(vec![norm_sq.clone(), -(re.clone() + re.clone()), Rational::from_integer(1.into())])
            }
        }
    }

    /// The exact form of an isolated root, when there is one.
    pub fn from_root(root: &ApproxRoot, charpoly: &PolyQ) -> Result<Self, SpectralError> {
        if let Some(r) = &root.exact {
            return Ok(Eigenvalue::Rational(r.clone()));
        }
        if root.is_real() {
            return Err(SpectralError::IrrationalReal);
        }
        // only nonreal pairs with a rational quadratic factor have an exact form
        let re = root.value.re.to_rational();
        let n2 = root.value.norm_sq().to_rational();
        for (factor, _) in charpoly.square_free_decomposition()? {
            // with D the integrality scale, 2D Re(λ) and D^2 |λ|^2 are integers
            let d = Rational::from_integer(factor.integrality_scale());
            let round = |x: &Rational, s: Rational| (x * &s).round() / s;
            let cand = Eigenvalue::ConjugatePair { re: round(&re, &d + &d), norm_sq: round(&n2, &d * &d) };
            if cand.minimal_factor().divides(&factor) {
                return Ok(cand);
            }
        }
        Err(SpectralError::IrrationalReal)
    }
}

fn check_root(t: &MatrixQ, lambda: &Eigenvalue) -> Result<PolyQ, SpectralError> {
    if !t.is_square() {
        return Err(SpectralError::NotSquare);
    }
    let f = lambda.minimal_factor();
    if let Eigenvalue::ConjugatePair { re, norm_sq } = lambda {
        if norm_sq <= &(re * re) {
            // discriminant >= 0: not a nonreal pair
            return Err(SpectralError::NotARoot);
        }
    }
    let cp = t.charpoly()?;
    if !f.divides(&cp) {
        return Err(SpectralError::NotARoot);
    }
    Ok(f)
}

/// Generalized weight space: kernel of `q(T)^n` for the minimal real factor `q` of λ.
pub fn weight_space(t: &MatrixQ, lambda: &Eigenvalue) -> Result<Subspace, SpectralError> {
    let f = check_root(t, lambda)?;
    let n = t.rows() as u32;
    Ok(t.eval_poly(&f.pow(n)).kernel())
}

/// Kernel of `q(T)` itself.
pub fn semisimple_weight_space(t: &MatrixQ, lambda: &Eigenvalue) -> Result<Subspace, SpectralError> {
    let f = check_root(t, lambda)?;
    Ok(t.eval_poly(&f).kernel())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralRank {
    pub r: usize,
    pub r_nr: usize,
    pub certainty: Certainty,
}

/// Rank of the group generated by `values`, doubling precision while the
/// relation search asks for more.
pub(crate) fn rank_with_retry(
    values: impl Fn(u32) -> Result<Vec<SpanValue>, SpectralError>,
    cfg: &SpectralConfig,
) -> Result<QRank, SpectralError> {
    let mut prec = cfg.precision.max(64);
    loop {
        match q_linear_rank(&values(prec)?, prec, cfg.height_bound) {
            Err(LinalgError::PrecisionTooLow { .. }) if prec * 2 <= cfg.max_precision.max(cfg.precision) => prec *= 2,
            other => return Ok(other?),
        }
    }
}

/// Spectral rank and nonreal spectral rank of a rational matrix.
pub fn spectral_rank_of(t: &MatrixQ, cfg: &SpectralConfig) -> Result<SpectralRank, SpectralError> {
    if !t.is_square() {
        return Err(SpectralError::NotSquare);
    }
    let cp = t.charpoly()?;
    let values = |nonreal_only: bool| {
        let cp = &cp;
        move |prec: u32| -> Result<Vec<SpanValue>, SpectralError> {
            // isolate at twice the relation precision so root errors sit well
            // below the relation threshold
            let roots = complex_roots(cp, 2 * prec, 2 * prec.max(cfg.max_precision))?;
            Ok(roots
                .into_iter()
                .filter(|r| !nonreal_only || !r.is_real())
                .filter_map(|r| match r.exact {
                    Some(x) if num_traits::Zero::is_zero(&x) => None,
                    Some(x) => Some(SpanValue::Rational(x)),
                    None => Some(SpanValue::Approx(r.value)),
                })
                .collect())
        }
    };
    let all = rank_with_retry(values(false), cfg)?;
    let nonreal = rank_with_retry(values(true), cfg)?;
    let certainty =
        if all.certainty == Certainty::Exact && nonreal.certainty == Certainty::Exact { Certainty::Exact } else { Certainty::Heuristic };
    Ok(SpectralRank { r: all.rank, r_nr: nonreal.rank, certainty })
}
