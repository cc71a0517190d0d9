#![allow(dead_code)]

use lieact::catalog::{build, parse_expression, standard_catalog};
use lieact::liecore::LieAlgebra;
use lieact::obstruction::{AlgebraProfile, ManifoldDescriptor};
use lieact::spectral::SpectralConfig;

pub fn alg(s: &str) -> LieAlgebra {
    build(&parse_expression(s).unwrap()).unwrap()
}

pub fn profile(s: &str) -> AlgebraProfile {
    let e = parse_expression(s).unwrap();
    AlgebraProfile::compute(&build(&e).unwrap(), Some(&e), &SpectralConfig::default()).unwrap()
}

pub fn catalog_profiles() -> Vec<AlgebraProfile> {
    standard_catalog().into_iter().map(profile).collect()
}

pub fn json_manifold(text: &str) -> ManifoldDescriptor {
    ManifoldDescriptor::from_json(text).unwrap().validate().unwrap()
}

pub const PRESETS: &[&str] = &[
    "circle",
    "plane",
    "sphere",
    "cylinder",
    "torus",
    "projective-plane",
    "moebius",
    "klein-bottle",
    "genus-2",
    "genus-3",
    "nonorientable-genus-3",
    "nonorientable-genus-4",
    "3-sphere",
    "4-sphere",
];

/// Presets plus descriptors with boundary and in higher dimensions.
pub fn descriptor_grid() -> Vec<(String, ManifoldDescriptor)> {
    let mut out: Vec<(String, ManifoldDescriptor)> =
        PRESETS.iter().map(|p| (p.to_string(), ManifoldDescriptor::preset(p).unwrap())).collect();
    for (name, text) in [
        ("disk", r#"{"dim":2,"compact":true,"boundary":true,"orientable":true,"euler":1}"#),
        ("annulus", r#"{"dim":2,"compact":true,"boundary":true,"orientable":true,"euler":0}"#),
        ("punctured-torus", r#"{"dim":2,"compact":true,"boundary":true,"orientable":true,"euler":-1}"#),
        ("S2xI", r#"{"dim":3,"compact":true,"boundary":true,"orientable":true,"euler":2}"#),
        ("R3", r#"{"dim":3,"compact":false,"boundary":false,"orientable":true,"parallelizable":true}"#),
        ("R4", r#"{"dim":4,"compact":false,"boundary":false,"orientable":true,"parallelizable":true}"#),
        ("CP2", r#"{"dim":4,"compact":true,"boundary":false,"orientable":true,"euler":3,"pi1_finite":true}"#),
        ("surface-unknown-chi", r#"{"dim":2,"compact":true,"boundary":false}"#),
    ] {
        out.push((name.to_string(), json_manifold(text)));
    }
    out
}
