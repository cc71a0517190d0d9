mod common;

use common::{alg, profile};
use lieact::exactla::{q, Certainty, Rational};
use lieact::spectral::{spectral_rank_of, SpectralConfig};

fn coords(labels: &[String], entries: &[(&str, i64)]) -> Vec<Rational> {
    let mut x = vec![q(0); labels.len()];
    for (name, c) in entries {
        let i = labels.iter().position(|l| l == name).unwrap_or_else(|| panic!("no basis element {name} in {labels:?}"));
        x[i] = q(*c);
    }
    x
}

// (1+2i) e22 in st(2,C): ad has eigenvalues -(1+2i) and its conjugate on e12,
// which are Q-independent, so the nonreal rank is at least 2.
#[test]
fn complex_triangular_witness_exceeds_m_minus_one() {
    let l = alg("st(2,C)");
    let x = coords(l.labels(), &[("e22", 1), ("ie22", 2)]);
    let sr = spectral_rank_of(&l.ad_matrix(&x), &SpectralConfig::default()).unwrap();
    assert_eq!((sr.r, sr.r_nr), (2, 2));
    assert_eq!(sr.certainty, Certainty::Heuristic);
}

#[test]
fn sampled_rank_reaches_witness_bound() {
    for (m, expected) in [(2, 2), (3, 4)] {
        let p = profile(&format!("st({m},C)"));
        assert_eq!(p.spectral.r_nr, expected, "st({m},C)");
        assert!(p.spectral.r >= p.spectral.r_nr);
    }
}

#[test]
fn real_triangular_has_no_nonreal_spectrum() {
    for m in 2..=4 {
        let p = profile(&format!("st({m},R)"));
        assert_eq!(p.spectral.r, m - 1, "st({m},R)");
        assert_eq!(p.spectral.r_nr, 0);
    }
}

#[test]
fn rotation_generator_spectrum() {
    let l = alg("sl(2,R)");
    let x = coords(l.labels(), &[("e", 1), ("f", -1)]);
    let sr = spectral_rank_of(&l.ad_matrix(&x), &SpectralConfig::default()).unwrap();
    assert_eq!((sr.r, sr.r_nr), (1, 1));
}
