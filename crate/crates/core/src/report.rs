//! JSON reports with a stable, sorted key order.

use serde_json::{json, Value};

use crate::classify::{ACStatus, NonrealWitness};
use crate::exactla::{format_rational, MatrixQ, Rational};
use crate::obstruction::{AlgebraProfile, ManifoldDescriptor, Verdict};
use crate::spectral::{Eigenvalue, SpectralConfig, Witness};

pub const REPORT_VERSION: u32 = 1;

/// Run settings recorded in every report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToolInfo {
    pub version: &'static str,
    pub seed: u64,
    pub samples: usize,
    pub precision: u32,
    pub height_bound: u64,
    pub strict: bool,
}

impl ToolInfo {
    pub fn new(cfg: &SpectralConfig, strict: bool) -> Self {
        ToolInfo {
            version: env!("CARGO_PKG_VERSION"),
            seed: cfg.seed,
            samples: cfg.samples,
            precision: cfg.precision,
            height_bound: cfg.height_bound,
            strict,
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "name": env!("CARGO_PKG_NAME"),
            "version": self.version,
            "seed": self.seed,
            "samples": self.samples,
            "precision": self.precision,
            "height_bound": self.height_bound,
            "strict": self.strict,
        })
    }
}

fn q_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn vec_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(q_json).collect())
}

fn matrix_json(m: &MatrixQ) -> Value {
    let flat = m.to_flat();
    Value::Array(flat.chunks(m.cols().max(1)).map(vec_json).collect())
}

fn eigenvalue_json(e: &Eigenvalue) -> Value {
    match e {
        Eigenvalue::Rational(r) => json!({ "kind": "real", "value": q_json(r) }),
        Eigenvalue::ConjugatePair { re, norm_sq } => {
            json!({ "kind": "conjugate_pair", "re": q_json(re), "norm_sq": q_json(norm_sq) })
        }
    }
}

fn nonreal_witness_json(w: &NonrealWitness) -> Value {
    json!({
        "x": vec_json(&w.x),
        "charpoly": w.charpoly.to_string(),
        "pairs": w.pairs.iter().map(eigenvalue_json).collect::<Vec<_>>(),
    })
}

fn spectral_witness_json(w: &Witness) -> Value {
    match w {
        Witness::Zero => json!({ "kind": "zero" }),
        Witness::Rational(x) => json!({ "kind": "rational", "x": vec_json(x) }),
        Witness::Algebraic(d) => json!({
            "kind": "algebraic",
            "coeffs": d.coeffs,
            "degree": d.degree,
            "minimal_polynomial": d.minimal_polynomial().to_string(),
        }),
    }
}

pub fn ac_json(ac: &ACStatus) -> Value {
    let certificate = ac.certificate.as_ref().map(|c| {
        json!({
            "source": c.source,
            "derivation": matrix_json(&c.derivation),
            "eigenvalues": c.eigenvalues.iter()
                .map(|(v, m)| json!({ "value": q_json(v), "multiplicity": m }))
                .collect::<Vec<_>>(),
            "residual": format!("{:.3e}", c.residual),
        })
    });
    json!({ "status": ac.status.as_str(), "reason": ac.reason, "certificate": certificate })
}

pub fn algebra_json(p: &AlgebraProfile) -> Value {
    let f = &p.flags;
    let s = &p.spectral;
    json!({
        "expression": p.expression,
        "dim": f.dim,
        "abelian": f.abelian,
        "nilpotent": f.nilpotent,
        "nilpotency_class": f.nilpotency_class,
        "solvable": f.solvable,
        "derived_length": f.derived_length,
        "semisimple": f.semisimple,
        "semisimple_rank": f.semisimple_rank,
        "scalar_free_rep": f.has_scalar_free_rep,
        "supersoluble": {
            "value": f.supersoluble.value,
            "certainty": f.supersoluble.certainty,
            "witness": f.supersoluble.witness.as_ref().map(nonreal_witness_json),
        },
        "center_dim": p.center_dim,
        "derived_dims": p.derived_dims,
        "lower_central_dims": p.lower_central_dims,
        "derived_in_center": p.derived_in_center,
        "killing_det_sign": p.killing_det_sign,
        "spectral": {
            "r": s.r,
            "r_nr": s.r_nr,
            "method": s.method,
            "certainty": s.certainty,
            "samples_used": s.samples_used,
            "seed": s.seed,
            "precision": s.precision,
            "witness": spectral_witness_json(&s.witness),
        },
        "ac": ac_json(&p.ac),
        "factors": p.factors.iter().map(|x| json!({
            "expression": x.expression,
            "ac": x.ac.status.as_str(),
            "scalar_free": x.scalar_free,
            "rep_dim": x.rep_dim,
            "action_dim": x.action_dim,
        })).collect::<Vec<_>>(),
    })
}

pub fn manifold_json(m: &ManifoldDescriptor) -> Value {
    serde_json::to_value(m).expect("descriptor serializes")
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({
        "regularity": v.query.regularity,
        "mode": v.query.mode,
        "status": v.status,
        "citations": v.citations,
        "trace": v.trace.iter().map(|t| json!({
            "rule": t.rule,
            "effect": t.effect,
            "stated_at": t.stated_at,
            "fired": t.fired,
            "values": t.values.iter().map(|(k, v)| (k.to_string(), Value::String(v.clone())))
                .collect::<serde_json::Map<_, _>>(),
            "suppressed": t.suppressed,
        })).collect::<Vec<_>>(),
        "notes": v.notes,
    })
}

/// A full report. `manifold` and `verdicts` are empty for `invariants` runs.
#[derive(Clone, Debug)]
pub struct Report<'a> {
    pub tool: ToolInfo,
    pub algebra: Option<&'a AlgebraProfile>,
    pub manifold: Option<&'a ManifoldDescriptor>,
    pub verdicts: &'a [Verdict],
    pub notes: Vec<String>,
}

impl Report<'_> {
    pub fn to_value(&self) -> Value {
        let mut notes: Vec<String> = self.algebra.map(|p| p.notes.clone()).unwrap_or_default();
        notes.extend(self.notes.iter().cloned());
        json!({
            "report_v": REPORT_VERSION,
            "tool": self.tool.to_json(),
            "algebra": self.algebra.map(algebra_json),
            "manifold": self.manifold.map(manifold_json),
            "verdicts": self.verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
            "notes": notes,
        })
    }

    /// Pretty-printed JSON; object keys are sorted.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&canonical(self.to_value())).expect("values serialize")
    }
}

/// Rebuilds every object with its keys in sorted order, whatever map type
/// `serde_json` was compiled with.
pub fn canonical(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().map(|(k, v)| (k, canonical(v))).collect())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonical).collect()),
        other => other,
    }
}
