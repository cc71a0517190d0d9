use rand::Rng;
use serde::Serialize;

use super::{numeric_spectral_rank, sample_rng, spectral_rank_of, weight_functionals, AlgebraicDirection};
use super::{SpectralConfig, SpectralError};
use crate::exactla::{q, Certainty, Rational};
use crate::liecore::LieAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    /// Nilpotent algebra: every spectrum is `{0}`.
    ExactRational,
    ExactWeights,
    CartanRank,
    NumericSampled,
}

impl RankMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            RankMethod::ExactRational => "exact-rational",
            RankMethod::ExactWeights => "exact-weights",
            RankMethod::CartanRank => "cartan-rank",
            RankMethod::NumericSampled => "numeric-sampled",
        }
    }
}

/// An element attaining the reported rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Zero,
    Rational(Vec<Rational>),
    Algebraic(AlgebraicDirection),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralRankReport {
    pub r: usize,
    pub r_nr: usize,
    pub method: RankMethod,
    pub samples_used: usize,
    pub certainty: Certainty,
    pub witness: Witness,
    pub seed: u64,
    pub precision: u32,
}

/// `r(g)` and `r_NR(g)` by the first applicable strategy:
///
/// 1. nilpotent algebras have `r = r_NR = 0`;
/// 2. a rational triangularization of `ad` gives `r` as the rank of the weight
///    functionals and `r_NR = 0`;
/// 3. for semisimple algebras both equal the rank (minimal centralizer
///    dimension over integer samples);
/// 4. otherwise the maximum over samples at integer and algebraic directions,
///    reported as heuristic.
pub fn algebra_spectral_rank(l: &LieAlgebra, cfg: &SpectralConfig) -> Result<SpectralRankReport, SpectralError> {
    let base = |r, r_nr, method, samples_used, witness| SpectralRankReport {
        r,
        r_nr,
        method,
        samples_used,
        certainty: Certainty::Exact,
        witness,
        seed: cfg.seed,
        precision: cfg.precision,
    };
    let n = l.dim();
    if l.is_nilpotent() {
        return Ok(base(0, 0, RankMethod::ExactRational, 0, Witness::Zero));
    }
    let table = weight_functionals(l);
    if table.success {
        let dir = AlgebraicDirection { coeffs: vec![1; n], degree: n + 1 };
        return Ok(base(table.rank(), 0, RankMethod::ExactWeights, 0, Witness::Algebraic(dir)));
    }
    if l.is_semisimple() {
        let mut best: Option<(usize, Vec<Rational>)> = None;
        for s in 0..cfg.samples.max(1) {
            let x = integer_sample(n, cfg.seed, s);
            let k = l.ad_matrix(&x).kernel().dim();
            if best.as_ref().is_none_or(|(b, _)| k < *b) {
                best = Some((k, x));
            }
        }
        let (rank, x) = best.unwrap();
        return Ok(base(rank, rank, RankMethod::CartanRank, cfg.samples.max(1), Witness::Rational(x)));
    }
    numeric_sampled_rank(l, cfg)
}

/// Random integer coordinates in a box that grows with the sample index.
pub(crate) fn integer_sample(n: usize, seed: u64, index: usize) -> Vec<Rational> {
    let mut rng = sample_rng(seed, index as u64);
    let b = 3 + index as i64;
    (0..n).map(|_| q(rng.gen_range(-b..=b))).collect()
}

fn algebraic_sample(n: usize, seed: u64, index: usize) -> AlgebraicDirection {
    // a separate stream from the integer samples
    let mut rng = sample_rng(seed ^ 0x9e37_79b9_7f4a_7c15, index as u64);
    let b = 2 + index as i64;
    let coeffs = (0..n)
        .map(|_| {
            let v = rng.gen_range(1..=b);
            if rng.gen_bool(0.5) {
                -v
            } else {
                v
            }
        })
        .collect();
    AlgebraicDirection { coeffs, degree: n + 1 }
}

/// Strategy 4 on its own: the maximum over `cfg.samples` integer and
/// `cfg.samples` algebraic directions.
pub fn numeric_sampled_rank(l: &LieAlgebra, cfg: &SpectralConfig) -> Result<SpectralRankReport, SpectralError> {
    let n = l.dim();
    let mut r = 0;
    let mut r_nr = 0;
    let mut witness = Witness::Zero;
    for s in 0..cfg.samples {
        let x = integer_sample(n, cfg.seed, s);
        let exact = spectral_rank_of(&l.ad_matrix(&x), cfg)?;
        if exact.r > r {
            r = exact.r;
            witness = Witness::Rational(x);
        }
        r_nr = r_nr.max(exact.r_nr);
        let dir = algebraic_sample(n, cfg.seed, s);
        let approx = numeric_spectral_rank(l, &dir, cfg)?;
        if approx.r > r {
            r = approx.r;
            witness = Witness::Algebraic(dir);
        }
        r_nr = r_nr.max(approx.r_nr);
    }
    Ok(SpectralRankReport {
        r,
        r_nr,
        method: RankMethod::NumericSampled,
        samples_used: 2 * cfg.samples,
        certainty: Certainty::Heuristic,
        witness,
        seed: cfg.seed,
        precision: cfg.precision,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, parse_expression};

    fn alg(s: &str) -> LieAlgebra {
        build(&parse_expression(s).unwrap()).unwrap()
    }

    #[test]
    fn st3_by_weights() {
        let rep = algebra_spectral_rank(&alg("st(3,R)"), &SpectralConfig::default()).unwrap();
        assert_eq!((rep.r, rep.r_nr, rep.method), (2, 0, RankMethod::ExactWeights));
    }

    #[test]
    fn sl2_by_cartan_rank() {
        let rep = algebra_spectral_rank(&alg("sl(2,R)"), &SpectralConfig::default()).unwrap();
        assert_eq!((rep.r, rep.r_nr, rep.method), (1, 1, RankMethod::CartanRank));
    }

    #[test]
    fn nilpotent_is_zero() {
        let rep = algebra_spectral_rank(&alg("nt(4,R)"), &SpectralConfig::default()).unwrap();
        assert_eq!((rep.r, rep.r_nr, rep.method), (0, 0, RankMethod::ExactRational));
    }
}
