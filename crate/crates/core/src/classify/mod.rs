//! Classification predicates and algebraic contractibility.

mod ac;

pub use ac::{
    ac_status, random_derivations, verify_ac_certificate, ACCertificate, ACState, ACStatus, CertificateCheck,
    CertificateFailure, CertificateSource, UNIPOTENCE_SAMPLES,
};

use num_traits::Zero;
use serde::Serialize;

use crate::exactla::{MatrixQ, PolyQ, Rational, Subspace};
use crate::liecore::LieAlgebra;
use crate::spectral::{integer_sample, weight_functionals, Eigenvalue, SpectralConfig};

/// Sampled elements used by the supersolubility test.
pub const SUPERSOLUBLE_SAMPLES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SupersolubleCertainty {
    /// Every sampled element was checked exactly; genericity is assumed.
    ExactPerSample,
    Certified,
}

/// An element whose adjoint spectrum is not real.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonrealWitness {
    pub x: Vec<Rational>,
    pub charpoly: PolyQ,
    /// Nonreal eigenvalue pairs that have an exact quadratic form.
    pub pairs: Vec<Eigenvalue>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Supersolubility {
    pub value: bool,
    pub certainty: SupersolubleCertainty,
    pub witness: Option<NonrealWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationFlags {
    pub dim: usize,
    pub abelian: bool,
    pub nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub solvable: bool,
    pub derived_length: Option<usize>,
    pub supersoluble: Supersolubility,
    pub semisimple: bool,
    pub semisimple_rank: Option<usize>,
    pub has_scalar_free_rep: Option<bool>,
}

fn has_nonreal_root(p: &PolyQ) -> bool {
    let sf = p.square_free_part().expect("characteristic polynomials are nonzero");
    let deg = sf.degree().unwrap_or(0);
    sf.sturm_count().expect("nonzero") < deg
}

fn nonreal_witness(l: &LieAlgebra, x: Vec<Rational>) -> Option<NonrealWitness> {
    let charpoly = l.ad_matrix(&x).charpoly().expect("square");
    if !has_nonreal_root(&charpoly) {
        return None;
    }
    let pairs = crate::spectral::spectrum_of(&l.ad_matrix(&x), 128)
        .map(|s| {
            s.roots
                .iter()
                .filter(|r| !r.is_real() && !r.value.im.is_negative())
                .filter_map(|r| Eigenvalue::from_root(r, &s.charpoly).ok())
                .collect()
        })
        .unwrap_or_default();
    Some(NonrealWitness { x, charpoly, pairs })
}

/// Deterministic candidates `e_i - e_j`, then `e_i + e_j`.
fn pair_candidates(n: usize) -> impl Iterator<Item = Vec<Rational>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let minus = pairs.clone().into_iter().map(move |(i, j)| (i, j, -1));
    let plus = pairs.into_iter().map(move |(i, j)| (i, j, 1));
    minus.chain(plus).map(move |(i, j, s)| {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::from_integer(1.into());
        v[j] = Rational::from_integer(s.into());
        v
    })
}

/// Whether every `ad X` has real spectrum.
///
/// A non-solvable algebra is never supersoluble; a witness with nonreal
/// spectrum is still searched for. For solvable algebras a rational
/// triangularization certifies the answer; otherwise
/// [`SUPERSOLUBLE_SAMPLES`] integer elements are tested exactly with Sturm
/// counts.
pub fn is_supersoluble(l: &LieAlgebra, cfg: &SpectralConfig) -> Supersolubility {
    let n = l.dim();
    let samples = || (0..SUPERSOLUBLE_SAMPLES).map(|s| integer_sample(n, cfg.seed, s));
    if !l.is_solvable() {
        let witness = pair_candidates(n).chain(samples()).find_map(|x| nonreal_witness(l, x));
        return Supersolubility { value: false, certainty: SupersolubleCertainty::Certified, witness };
    }
    if weight_functionals(l).success {
        return Supersolubility { value: true, certainty: SupersolubleCertainty::Certified, witness: None };
    }
    if let Some(w) = samples().find_map(|x| nonreal_witness(l, x)) {
        return Supersolubility { value: false, certainty: SupersolubleCertainty::Certified, witness: Some(w) };
    }
    Supersolubility { value: true, certainty: SupersolubleCertainty::ExactPerSample, witness: None }
}

/// Whether the span of the matrix realization meets the scalar matrices only
/// in zero. `None` without a realization.
pub fn scalar_free_rep(l: &LieAlgebra) -> Option<bool> {
    let rep = l.matrix_rep()?;
    let d = rep.first().map_or(0, MatrixQ::rows);
    if d == 0 {
        return Some(true);
    }
    let span = Subspace::span(d * d, &rep.iter().map(MatrixQ::to_flat).collect::<Vec<_>>());
    let scalars = Subspace::span(d * d, &[MatrixQ::identity(d).to_flat()]);
    Some(span.intersect(&scalars).expect("same ambient").is_zero())
}

/// Minimal centralizer dimension over integer samples.
pub fn semisimple_rank(l: &LieAlgebra, cfg: &SpectralConfig) -> usize {
    (0..cfg.samples.max(1))
        .map(|s| l.ad_matrix(&integer_sample(l.dim(), cfg.seed, s)).kernel().dim())
        .min()
        .unwrap_or(0)
}

pub fn classify(l: &LieAlgebra, cfg: &SpectralConfig) -> ClassificationFlags {
    let derived_length = l.derived_length();
    let nilpotency_class = l.nilpotency_class();
    let semisimple = l.is_semisimple();
    ClassificationFlags {
        dim: l.dim(),
        abelian: l.is_abelian(),
        nilpotent: nilpotency_class.is_some(),
        nilpotency_class,
        solvable: derived_length.is_some(),
        derived_length,
        supersoluble: is_supersoluble(l, cfg),
        semisimple,
        semisimple_rank: semisimple.then(|| semisimple_rank(l, cfg)),
        has_scalar_free_rep: scalar_free_rep(l),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, parse_expression};
    use crate::exactla::q;

    fn alg(s: &str) -> LieAlgebra {
        build(&parse_expression(s).unwrap()).unwrap()
    }

    #[test]
    fn supersolubility() {
        let cfg = SpectralConfig::default();
        let s = is_supersoluble(&alg("st(4,R)"), &cfg);
        assert!(s.value);
        assert_eq!(s.certainty, SupersolubleCertainty::Certified);
        assert!(is_supersoluble(&alg("abelian(3)"), &cfg).value);

        let s = is_supersoluble(&alg("sl(2,R)"), &cfg);
        assert!(!s.value);
        let w = s.witness.unwrap();
        assert_eq!(w.x, vec![q(0), q(1), q(-1)]);
        assert_eq!(w.charpoly, PolyQ::from_i64(&[0, 4, 0, 1]));
        assert_eq!(w.pairs, vec![Eigenvalue::ConjugatePair { re: q(0), norm_sq: q(4) }]);

        let s = is_supersoluble(&alg("st(2,C)"), &cfg);
        assert!(!s.value);
        assert_eq!(s.certainty, SupersolubleCertainty::Certified);
    }

    #[test]
    fn scalar_free() {
        assert_eq!(scalar_free_rep(&alg("st(3,R)")), Some(false));
        assert_eq!(scalar_free_rep(&alg("nt(3,R)")), Some(true));
        assert_eq!(scalar_free_rep(&alg("nt(3,R)").without_matrix_rep()), None);
    }

    #[test]
    fn classification_examples() {
        let cfg = SpectralConfig::default();
        let f = classify(&alg("st(3,R)"), &cfg);
        assert_eq!(f.derived_length, Some(3));
        assert!(f.solvable && f.supersoluble.value && !f.nilpotent && !f.semisimple);

        let f = classify(&alg("nt(3,R) x abelian(1)"), &cfg);
        assert_eq!((f.nilpotency_class, f.derived_length), (Some(2), Some(2)));

        let f = classify(&alg("sl(2,R)"), &cfg);
        assert!(f.semisimple && !f.supersoluble.value);
        assert_eq!(f.semisimple_rank, Some(1));
    }
}
