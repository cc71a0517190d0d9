use serde::Serialize;

use super::manifold::{ManifoldDescriptor, SurfaceKind};
use super::profile::AlgebraProfile;
use super::rules::{Mode, Regularity, Rule, Status, RULES};
use super::ObstructionError;
use crate::catalog::{AtomName, Field};
use crate::classify::SupersolubleCertainty;
use crate::exactla::Certainty;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Query {
    pub regularity: Regularity,
    pub mode: Mode,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineOptions {
    /// Drop firings that rest on a sampled spectral rank.
    pub strict: bool,
}

pub const SPECTRAL_HEURISTIC: &str = "spectral rank heuristic";
pub const SUPERSOLUBLE_SAMPLED: &str = "supersolubility sampled";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Citation {
    pub rule: &'static str,
    pub theorem: &'static str,
    pub statement: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub heuristic: Option<&'static str>,
}

impl Citation {
    fn of(rule: &Rule, heuristic: Option<&'static str>) -> Self {
        Citation { rule: rule.id, theorem: rule.theorem, statement: rule.statement, heuristic }
    }
}

/// One evaluated rule and the values its condition read.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub rule: &'static str,
    pub effect: Status,
    pub stated_at: Regularity,
    pub fired: bool,
    pub values: Vec<(&'static str, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suppressed: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub query: Query,
    pub status: Status,
    pub citations: Vec<Citation>,
    pub trace: Vec<TraceEntry>,
    pub notes: Vec<String>,
}

struct Eval {
    fired: bool,
    values: Vec<(&'static str, String)>,
    heuristic: Option<&'static str>,
}

fn show<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "unknown".to_string(), |x| x.to_string())
}

/// Facts shared by several rule conditions.
struct Facts<'a> {
    p: &'a AlgebraProfile,
    m: &'a ManifoldDescriptor,
    n: usize,
    chi: Option<i64>,
    ell: Option<usize>,
}

impl Facts<'_> {
    fn compact_surface(&self) -> bool {
        self.m.is_surface() && self.m.compact
    }

    fn chi_nonzero(&self) -> bool {
        self.chi.is_some_and(|c| c != 0)
    }

    fn abelian_of_dim(&self, d: usize) -> bool {
        self.p.flags.abelian && self.p.flags.dim == d
    }

    fn is_torus(&self) -> bool {
        self.m.is_surface() && self.m.is_closed() && self.m.orientable == Some(true) && self.chi == Some(0)
    }

    fn spectral_tag(&self) -> Option<&'static str> {
        (self.p.spectral.certainty == Certainty::Heuristic).then_some(SPECTRAL_HEURISTIC)
    }

    fn base(&self) -> Vec<(&'static str, String)> {
        vec![("n", self.n.to_string())]
    }

    fn eval(&self, rule: &Rule) -> Eval {
        let f = &self.p.flags;
        let p = self.p;
        let m = self.m;
        let n = self.n;
        let mut values = self.base();
        let mut heuristic = None;
        let mut put = |k: &'static str, v: String| values.push((k, v));
        let fired = match rule.id {
            "R1" => {
                put("solvable", f.solvable.to_string());
                put("l", show(self.ell));
                f.solvable && self.ell.is_some_and(|l| n + 1 < l)
            }
            "R2" => {
                put("nilpotent", f.nilpotent.to_string());
                put("l", show(self.ell));
                f.nilpotent && self.ell.is_some_and(|l| n < l)
            }
            "R3" => {
                put("l", show(self.ell));
                put("nilpotent", f.nilpotent.to_string());
                put("derived_term_central", p.derived_term_in_center(n - 1).to_string());
                put("center_dim", p.center_dim.to_string());
                critical_dimension(self) && p.derived_term_in_center(n - 1) && p.center_dim >= 2
            }
            "R4" | "R5" | "R6" => {
                put("compact", m.compact.to_string());
                put("euler", show(self.chi));
                put("r", p.spectral.r.to_string());
                put("r_nr", p.spectral.r_nr.to_string());
                put("spectral_method", p.spectral.method.as_str().to_string());
                heuristic = self.spectral_tag();
                m.compact
                    && match rule.id {
                        "R4" => self.chi_nonzero() && p.spectral.r > n,
                        "R5" => self.chi_nonzero() && p.spectral.r_nr > n / 2,
                        _ => self.chi.is_some_and(|c| c < 0) && 2 * p.spectral.r_nr == n,
                    }
            }
            "R7" => {
                put("abelian", f.abelian.to_string());
                put("dim", f.dim.to_string());
                f.abelian && f.dim >= 1 && n >= 2
            }
            "R8" => {
                let atoms = p.factor_atoms();
                let small = atoms.as_ref().is_some_and(|a| {
                    a.iter().all(|x| {
                        x.is(AtomName::Sl, 2, Some(Field::R))
                            || x.is(AtomName::St, 2, Some(Field::R))
                            || x.name == AtomName::Abelian
                    })
                });
                put("factors", factor_list(p));
                (small || f.abelian) && n >= 1
            }
            "R9" => {
                put("compact", m.compact.to_string());
                p.is_atom(AtomName::St, 3, Some(Field::R)) && self.compact_surface()
            }
            "R10" => {
                let ok = p.factors.iter().all(|x| {
                    x.ac.status == crate::classify::ACState::AC
                        && x.scalar_free == Some(true)
                        && x.action_dim.is_some_and(|d| d <= n)
                });
                put("factors", factor_list(p));
                put(
                    "ac",
                    p.factors.iter().map(|x| x.ac.status.as_str()).collect::<Vec<_>>().join(","),
                );
                put("scalar_free", p.factors.iter().map(|x| show(x.scalar_free)).collect::<Vec<_>>().join(","));
                put("action_dim", p.factors.iter().map(|x| show(x.action_dim)).collect::<Vec<_>>().join(","));
                ok && !p.factors.is_empty()
            }
            "R11" => {
                put("compact", m.compact.to_string());
                m.is_surface()
                    && !m.compact
                    && (p.is_atom(AtomName::Sl, 3, Some(Field::R)) || p.is_atom(AtomName::Sl, 2, Some(Field::C)))
            }
            "R12" => {
                put("compact", m.compact.to_string());
                put("parallelizable", show(m.parallelizable));
                let sl_r = p.is_atom(AtomName::Sl, (n + 1) as u32, Some(Field::R));
                let sl_c = if n.is_multiple_of(2) {
                    n / 2 >= 2 && p.is_atom(AtomName::Sl, (n / 2) as u32, Some(Field::C))
                } else {
                    n / 2 >= 1 && p.is_atom(AtomName::Sl, (n / 2 + 1) as u32, Some(Field::C))
                };
                !m.compact && m.parallelizable == Some(true) && (sl_r || sl_c)
            }
            "F1" => {
                put("nilpotent", f.nilpotent.to_string());
                put("euler", show(self.chi));
                f.nilpotent && self.compact_surface() && self.chi_nonzero()
            }
            "F2" => {
                put("euler", show(self.chi));
                self.compact_surface() && self.chi.is_some_and(|c| c < 0)
            }
            "F3" => {
                put("supersoluble", f.supersoluble.value.to_string());
                put("euler", show(self.chi));
                if f.supersoluble.certainty == SupersolubleCertainty::ExactPerSample {
                    heuristic = Some(SUPERSOLUBLE_SAMPLED);
                }
                f.supersoluble.value && self.compact_surface() && self.chi_nonzero()
            }
            "F4" => {
                put("dim", f.dim.to_string());
                put("euler", show(self.chi));
                self.abelian_of_dim(1) && m.compact && self.chi_nonzero()
            }
            "F4s" => {
                put("dim", f.dim.to_string());
                put("euler", show(self.chi));
                put("boundary", m.boundary.to_string());
                self.abelian_of_dim(1) && m.compact && m.boundary && self.chi == Some(0)
            }
            "F4a" => {
                put("dim", f.dim.to_string());
                put("euler", show(self.chi));
                self.abelian_of_dim(1) && m.is_closed() && self.chi == Some(0)
            }
            "F5" => {
                put("compact", m.compact.to_string());
                p.is_atom(AtomName::St, 2, Some(Field::R)) && self.compact_surface()
            }
            "F6" => {
                put("dim", f.dim.to_string());
                put("euler", show(self.chi));
                self.abelian_of_dim(2) && m.compact && (3..=4).contains(&n) && self.chi_nonzero()
            }
            "F7" => {
                put("abelian", f.abelian.to_string());
                put("euler", show(self.chi));
                put("orientable", show(m.orientable));
                f.abelian && f.dim >= 1 && self.is_torus()
            }
            "T1" | "T2" => {
                put("surface_kind", show(m.surface_kind.map(|k| format!("{k:?}"))));
                put("euler", show(self.chi));
                put("boundary", m.boundary.to_string());
                let t = transitive_status(m);
                t == Some(rule.effect)
            }
            "H1" => {
                put("closed", m.is_closed().to_string());
                put("euler", show(self.chi));
                put("pi1_finite", show(m.pi1_finite));
                m.is_closed()
                    && self
                        .chi
                        .is_some_and(|c| c < 0 || (c > 0 && m.pi1_finite == Some(false)))
            }
            other => unreachable!("rule {other} has no condition"),
        };
        Eval { fired, values, heuristic }
    }
}

fn critical_dimension(fx: &Facts) -> bool {
    let f = &fx.p.flags;
    fx.ell.is_some_and(|l| (f.solvable && fx.n + 1 == l) || (f.nilpotent && fx.n == l))
}

fn factor_list(p: &AlgebraProfile) -> String {
    p.factors
        .iter()
        .map(|x| x.expression.clone().unwrap_or_else(|| "?".to_string()))
        .collect::<Vec<_>>()
        .join(" x ")
}

/// Transitive actions on surfaces without boundary.
fn transitive_status(m: &ManifoldDescriptor) -> Option<Status> {
    if !m.is_surface() || m.boundary {
        return None;
    }
    if let Some(kind) = m.surface_kind {
        if SurfaceKind::HOMOGENEOUS.contains(&kind) {
            return Some(Status::Possible);
        }
    }
    if !m.compact {
        return None;
    }
    m.euler.map(|c| if c >= 0 { Status::Possible } else { Status::Impossible })
}

fn informational_notes(fx: &Facts, q: Query, status: Status) -> Vec<String> {
    let mut notes = Vec::new();
    if q.mode == Mode::Effective && fx.p.flags.solvable && critical_dimension(fx) {
        notes.push(format!(
            "dimension {} is critical for this algebra: every effective action has an open orbit, dense in the \
             union of open orbits when the action is nondegenerate",
            fx.n
        ));
        if fx.p.derived_term_in_center(fx.n - 1) {
            let d = fx.p.derived_dims.get(fx.n - 1).copied().unwrap_or(0);
            notes.push(format!(
                "the derived term g^({}) is central: its nontrivial orbits are one-dimensional and lie in open \
                 orbits, and there are at least {d} open orbits",
                fx.n - 1
            ));
        }
    }
    if q.mode == Mode::Effective
        && q.regularity == Regularity::Analytic
        && status == Status::Unknown
        && fx.m.compact
        && fx.chi.is_none_or(|c| c == 0)
        && st_square_size(fx.p) == Some(fx.n as u32 + 1)
    {
        notes.push(format!(
            "st({k},R) x st({k},R) is claimed to have no effective analytic action on any compact {n}-manifold; \
             the kernel estimate encoded here needs nonzero Euler characteristic, so this case stays UNKNOWN",
            k = fx.n + 1,
            n = fx.n
        ));
    }
    notes
}

fn st_square_size(p: &AlgebraProfile) -> Option<u32> {
    match p.factor_atoms()?.as_slice() {
        [a, b] if a == b && a.name == AtomName::St && a.field == Some(Field::R) => Some(a.size),
        _ => None,
    }
}

/// Evaluates every rule of the query's mode that speaks at its regularity.
///
/// Both inputs should already be validated. Firings of opposite effect are
/// reported as [`ObstructionError::EngineContradiction`].
pub fn analyze(
    p: &AlgebraProfile,
    m: &ManifoldDescriptor,
    q: Query,
    opts: EngineOptions,
) -> Result<Verdict, ObstructionError> {
    let fx = Facts { p, m, n: m.dim as usize, chi: m.euler, ell: p.flags.derived_length };
    let mut trace = Vec::new();
    let mut impossible = Vec::new();
    let mut possible = Vec::new();
    for rule in RULES.iter().filter(|r| r.mode == q.mode && r.applies_at(q.regularity)) {
        let e = fx.eval(rule);
        let suppressed = (e.fired && opts.strict && e.heuristic.is_some()).then_some("strict");
        if e.fired && suppressed.is_none() {
            let c = Citation::of(rule, e.heuristic);
            match rule.effect {
                Status::Impossible => impossible.push(c),
                _ => possible.push(c),
            }
        }
        trace.push(TraceEntry {
            rule: rule.id,
            effect: rule.effect,
            stated_at: rule.regularity,
            fired: e.fired,
            values: e.values,
            suppressed,
        });
    }
    let (status, citations) = match (impossible.is_empty(), possible.is_empty()) {
        (false, false) => {
            return Err(ObstructionError::EngineContradiction {
                regularity: q.regularity,
                mode: q.mode,
                impossible: impossible.iter().map(|c| c.rule.to_string()).collect(),
                possible: possible.iter().map(|c| c.rule.to_string()).collect(),
            })
        }
        (false, true) => (Status::Impossible, impossible),
        (true, false) => (Status::Possible, possible),
        (true, true) => (Status::Unknown, Vec::new()),
    };
    let notes = informational_notes(&fx, q, status);
    Ok(Verdict { query: q, status, citations, trace, notes })
}

/// All combinations of the given regularities and modes, in that order.
pub fn analyze_all(
    p: &AlgebraProfile,
    m: &ManifoldDescriptor,
    regularities: &[Regularity],
    modes: &[Mode],
    opts: EngineOptions,
) -> Result<Vec<Verdict>, ObstructionError> {
    let mut out = Vec::new();
    for &mode in modes {
        for &regularity in regularities {
            out.push(analyze(p, m, Query { regularity, mode }, opts)?);
        }
    }
    Ok(out)
}
