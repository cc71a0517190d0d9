use super::ObstructionError;
use crate::catalog::{build, AlgebraExpr, AtomName, Field};
use crate::classify::{ac_status, classify, scalar_free_rep, ACState, ACStatus, ClassificationFlags};
use crate::liecore::{LieAlgebra, Sign};
use crate::spectral::{algebra_spectral_rank, SpectralConfig, SpectralRankReport};

/// A catalog atom, as matched by the syntactic rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AtomPattern {
    pub name: AtomName,
    pub size: u32,
    pub field: Option<Field>,
}

impl AtomPattern {
    pub fn is(&self, name: AtomName, size: u32, field: Option<Field>) -> bool {
        self.name == name && self.size == size && self.field == field
    }
}

/// One direct factor of the input expression.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorProfile {
    pub expression: Option<String>,
    /// `None` for `derived(...)` factors and for algebras read from files.
    pub atom: Option<AtomPattern>,
    pub ac: ACStatus,
    pub scalar_free: Option<bool>,
    pub rep_dim: Option<usize>,
    /// Dimension of the space the realization acts on: the matrix size, or one
    /// less when every realizing matrix is strictly upper triangular (the
    /// group then preserves an affine hyperplane).
    pub action_dim: Option<usize>,
}

/// Everything the rule engine reads about an algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraProfile {
    pub expression: Option<String>,
    pub flags: ClassificationFlags,
    pub spectral: SpectralRankReport,
    pub center_dim: usize,
    pub derived_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    /// `derived_in_center[j]` says whether `g^(j)` lies in the center.
    pub derived_in_center: Vec<bool>,
    pub killing_det_sign: Sign,
    pub ac: ACStatus,
    pub factors: Vec<FactorProfile>,
    pub notes: Vec<String>,
}

fn factor_profile(l: &LieAlgebra, expr: Option<&AlgebraExpr>, ac: ACStatus) -> FactorProfile {
    let atom = match expr {
        Some(AlgebraExpr::Atom { name, size, field }) => Some(AtomPattern { name: *name, size: *size, field: *field }),
        _ => None,
    };
    let rep = l.matrix_rep();
    let rep_dim = rep.and_then(|r| r.first()).map(|m| m.rows());
    let action_dim = rep.zip(rep_dim).map(|(r, d)| if d > 0 && r.iter().all(|m| m.is_strictly_upper()) { d - 1 } else { d });
    FactorProfile { expression: expr.map(ToString::to_string), atom, ac, scalar_free: scalar_free_rep(l), rep_dim, action_dim }
}

/// Top-level factors, with `strn(n)` replaced by `derived(st(n+1,R))` and `abelian(1)`.
fn expand_factors(e: &AlgebraExpr) -> Vec<AlgebraExpr> {
    e.factors()
        .into_iter()
        .flat_map(|f| match f {
            AlgebraExpr::Atom { name: AtomName::Strn, size, .. } => vec![
                AlgebraExpr::derived(AlgebraExpr::atom(AtomName::St, size + 1, Some(Field::R))),
                AlgebraExpr::atom(AtomName::Abelian, 1, None),
            ],
            other => vec![other.clone()],
        })
        .collect()
}

/// The closed form `l(st(m,F)) = m` and `l(strn(n)) = n` only hold for small sizes.
fn derived_length_notes(expr: Option<&AlgebraExpr>, length: Option<usize>) -> Vec<String> {
    let Some(AlgebraExpr::Atom { name, size, .. }) = expr else {
        return Vec::new();
    };
    let expected = match name {
        AtomName::St | AtomName::Strn => *size as usize,
        _ => return Vec::new(),
    };
    match length {
        Some(l) if l != expected => vec![format!(
            "derived length of {} is {l} by the derived series; the closed form l = {expected} does not hold at this size",
            expr.expect("matched above")
        )],
        _ => Vec::new(),
    }
}

impl AlgebraProfile {
    pub fn compute(l: &LieAlgebra, expr: Option<&AlgebraExpr>, cfg: &SpectralConfig) -> Result<Self, ObstructionError> {
        let flags = classify(l, cfg);
        let spectral = algebra_spectral_rank(l, cfg)?;
        let center = l.center();
        let ds = l.derived_series();
        let derived_in_center = ds.terms.iter().map(|t| center.contains(t).expect("same ambient")).collect();
        let ac = ac_status(l, cfg);
        let factor_exprs: Vec<AlgebraExpr> = expr.map(expand_factors).unwrap_or_default();
        let factors = if factor_exprs.len() <= 1 {
            vec![factor_profile(l, factor_exprs.first(), ac.clone())]
        } else {
            factor_exprs
                .iter()
                .map(|e| {
                    let f = build(e)?;
                    let fac = ac_status(&f, cfg);
                    Ok(factor_profile(&f, Some(e), fac))
                })
                .collect::<Result<Vec<_>, ObstructionError>>()?
        };
        let mut notes = derived_length_notes(expr, flags.derived_length);
        if factors.iter().any(|f| f.ac.status == ACState::AC && f.scalar_free == Some(false)) {
            notes.push(
                "a contractible factor's matrix realization contains a nonzero scalar matrix; the scalar-matrix \
                 condition is tested on the span of the realization, which can be stricter than the condition on \
                 the group"
                    .to_string(),
            );
        }
        Ok(Self {
            expression: expr.map(ToString::to_string),
            spectral,
            center_dim: center.dim(),
            derived_dims: ds.dims(),
            lower_central_dims: l.lower_central_series().dims(),
            derived_in_center,
            killing_det_sign: l.killing_det_sign(),
            ac,
            factors,
            notes,
            flags,
        })
    }

    /// The whole expression is the single atom `name(size, field)`.
    pub fn is_atom(&self, name: AtomName, size: u32, field: Option<Field>) -> bool {
        self.factors.len() == 1 && self.factors[0].atom.is_some_and(|a| a.is(name, size, field))
    }

    pub fn factor_atoms(&self) -> Option<Vec<AtomPattern>> {
        self.factors.iter().map(|f| f.atom).collect()
    }

    /// `g^(j)` is central. Past the computed terms the series is constant:
    /// zero for solvable algebras, the last term otherwise.
    pub fn derived_term_in_center(&self, j: usize) -> bool {
        self.derived_in_center.get(j).or(self.derived_in_center.last()).copied().unwrap_or(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_expression;

    fn profile(s: &str) -> AlgebraProfile {
        let e = parse_expression(s).unwrap();
        AlgebraProfile::compute(&build(&e).unwrap(), Some(&e), &SpectralConfig::default()).unwrap()
    }

    #[test]
    fn nt3_squared() {
        let p = profile("nt(3,R) x nt(3,R)");
        assert_eq!(p.center_dim, 2);
        assert_eq!(p.derived_dims, vec![6, 2, 0]);
        assert_eq!(p.derived_in_center, vec![false, true, true]);
        assert_eq!(p.factors.len(), 2);
        assert!(p.factors.iter().all(|f| f.ac.status == ACState::AC && f.scalar_free == Some(true)));
        assert!(p.factors.iter().all(|f| f.action_dim == Some(2)));
    }

    #[test]
    fn strn_splits_into_factors() {
        let p = profile("strn(3)");
        assert_eq!(p.factors.len(), 2);
        assert_eq!(p.factors[0].action_dim, Some(3));
        assert_eq!(p.factors[1].action_dim, Some(1));
    }

    #[test]
    fn derived_length_note() {
        assert!(profile("st(3,R)").notes.iter().all(|n| !n.contains("derived length")));
        let p = profile("st(4,R)");
        assert_eq!(p.flags.derived_length, Some(3));
        assert!(p.notes.iter().any(|n| n.contains("derived length of st(4,R) is 3")));
    }
}
