//! Manifold descriptors, the rule table and the verdict engine.

mod engine;
mod manifold;
mod profile;
mod rules;

pub use engine::{analyze, analyze_all, Citation, EngineOptions, Query, TraceEntry, Verdict};
pub use manifold::{ManifoldDescriptor, SurfaceKind};
pub use profile::{AlgebraProfile, AtomPattern, FactorProfile};
pub use rules::{rule_by_id, Mode, Regularity, Rule, Status, RULES};

use thiserror::Error;

use crate::catalog::BuildError;
use crate::spectral::SpectralError;

#[derive(Debug, Error)]
pub enum ObstructionError {
    #[error("inconsistent manifold descriptor ({first} vs {second}): {detail}")]
    InconsistentDescriptor { first: &'static str, second: &'static str, detail: String },
    #[error("invalid manifold JSON: {0}")]
    Json(String),
    #[error("unknown manifold preset {0:?}")]
    UnknownManifold(String),
    #[error(
        "rules disagree at {regularity}/{mode}: IMPOSSIBLE by {impossible:?}, POSSIBLE by {possible:?}",
        regularity = regularity.as_str(),
        mode = mode.as_str()
    )]
    EngineContradiction { regularity: Regularity, mode: Mode, impossible: Vec<String>, possible: Vec<String> },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Build(#[from] BuildError),
}
