use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regularity {
    Continuous,
    Smooth,
    Analytic,
}

impl Regularity {
    pub const ALL: [Regularity; 3] = [Regularity::Continuous, Regularity::Smooth, Regularity::Analytic];

    pub fn as_str(self) -> &'static str {
        match self {
            Regularity::Continuous => "continuous",
            Regularity::Smooth => "smooth",
            Regularity::Analytic => "analytic",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Effective,
    FixedPointFree,
    Transitive,
    CompactHomogeneous,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::Effective, Mode::FixedPointFree, Mode::Transitive, Mode::CompactHomogeneous];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Effective => "effective",
            Mode::FixedPointFree => "fixed_point_free",
            Mode::Transitive => "transitive",
            Mode::CompactHomogeneous => "compact_homogeneous",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Impossible,
    Possible,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Impossible => "IMPOSSIBLE",
            Status::Possible => "POSSIBLE",
            Status::Unknown => "UNKNOWN",
        }
    }
}

/// One encoded theorem consequence.
///
/// An `Impossible` rule stated at regularity `r` also holds at every stronger
/// regularity; a `Possible` rule also holds at every weaker one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rule {
    pub id: &'static str,
    pub mode: Mode,
    pub regularity: Regularity,
    pub effect: Status,
    pub theorem: &'static str,
    pub statement: &'static str,
}

impl Rule {
    /// Whether the rule speaks about a query at `reg`.
    pub fn applies_at(&self, reg: Regularity) -> bool {
        match self.effect {
            Status::Impossible => self.regularity <= reg,
            _ => self.regularity >= reg,
        }
    }
}

const fn rule(
    id: &'static str,
    mode: Mode,
    regularity: Regularity,
    effect: Status,
    theorem: &'static str,
    statement: &'static str,
) -> Rule {
    Rule { id, mode, regularity, effect, theorem, statement }
}

use Mode::{CompactHomogeneous as H, Effective as E, FixedPointFree as F, Transitive as T};
use Regularity::{Analytic as A, Continuous as C, Smooth as S};
use Status::{Impossible as NO, Possible as YES};

/// The rule table. Every citation printed by the engine comes from here.
pub const RULES: &[Rule] = &[
    rule(
        "R1",
        E,
        C,
        NO,
        "Epstein-Thurston dimension bound",
        "A solvable Lie algebra of derived length l acts effectively only on manifolds of dimension at least l - 1.",
    ),
    rule(
        "R2",
        E,
        C,
        NO,
        "Epstein-Thurston dimension bound",
        "A nilpotent Lie algebra of derived length l acts effectively only on manifolds of dimension at least l.",
    ),
    rule(
        "R3",
        E,
        A,
        NO,
        "Epstein-Thurston critical dimension",
        "In the critical dimension, with the (n-1)-th derived algebra central, a nondegenerate action forces a \
         one-dimensional center; effective analytic actions are nondegenerate.",
    ),
    rule(
        "R4",
        E,
        A,
        NO,
        "kernel estimate for analytic actions",
        "On a compact n-manifold with nonzero Euler characteristic, the kernel of an analytic action has dimension \
         at least r(g) - n.",
    ),
    rule(
        "R5",
        E,
        A,
        NO,
        "kernel estimate for analytic actions",
        "On a compact n-manifold with nonzero Euler characteristic, the kernel of an analytic action has dimension \
         at least r_NR(g) - floor(n/2).",
    ),
    rule(
        "R6",
        E,
        A,
        NO,
        "zero count for analytic actions",
        "If n = 2 r_NR(ad X) on a compact n-manifold, the Euler characteristic equals the number of zeros of the \
         vector field of X in an effective analytic action, so it is nonnegative.",
    ),
    rule(
        "R7",
        E,
        A,
        YES,
        "analytic actions of vector groups",
        "R^m (m >= 1) acts effectively and analytically on every manifold of dimension at least 2.",
    ),
    rule(
        "R8",
        E,
        C,
        YES,
        "actions of products of small groups",
        "Products of copies of the universal cover of SL(2,R), of ST(2,R) and of R^m act effectively on every \
         manifold of positive dimension.",
    ),
    rule(
        "R9",
        E,
        A,
        YES,
        "Turiel's surface actions",
        "The identity component of ST(3,R) acts effectively and analytically on every compact surface.",
    ),
    rule(
        "R10",
        E,
        S,
        YES,
        "contractible linear groups",
        "A product of algebraically contractible linear groups acting in dimension n, none of whose Lie algebras \
         contains a nonzero scalar matrix, acts effectively and smoothly on every n-manifold.",
    ),
    rule(
        "R11",
        E,
        A,
        YES,
        "pullback along immersions",
        "Every noncompact surface carries effective analytic actions of sl(3,R) and of sl(2,C).",
    ),
    rule(
        "R12",
        E,
        A,
        YES,
        "pullback along immersions",
        "Every parallelizable noncompact n-manifold carries effective analytic actions of sl(n+1,R), of sl(n/2,C) \
         for even n and of sl(floor(n/2)+1,C) for odd n.",
    ),
    rule(
        "F1",
        F,
        C,
        NO,
        "Lima-Plante fixed point theorem",
        "A nilpotent group acting on a compact surface without fixed points forces Euler characteristic 0.",
    ),
    rule(
        "F2",
        F,
        A,
        NO,
        "Turiel's fixed point theorem",
        "An analytic action on a compact surface without fixed points forces Euler characteristic at least 0.",
    ),
    rule(
        "F3",
        F,
        A,
        NO,
        "fixed points of supersoluble groups",
        "A supersoluble group acting analytically on a compact surface without fixed points forces Euler \
         characteristic 0.",
    ),
    rule(
        "F4",
        F,
        C,
        NO,
        "Poincare-Hopf",
        "R acts effectively without fixed points on a compact manifold exactly when its Euler characteristic is 0.",
    ),
    rule(
        "F4s",
        F,
        S,
        YES,
        "Poincare-Hopf",
        "R acts effectively without fixed points on a compact manifold exactly when its Euler characteristic is 0.",
    ),
    rule(
        "F4a",
        F,
        A,
        YES,
        "Poincare-Hopf",
        "R acts effectively without fixed points on a compact manifold exactly when its Euler characteristic is 0; \
         without boundary the nonvanishing field can be taken analytic.",
    ),
    rule(
        "F5",
        F,
        S,
        YES,
        "fixed-point-free actions of ST(2,R)",
        "The identity component of ST(2,R) has effective smooth actions without fixed points on every compact surface.",
    ),
    rule(
        "F6",
        F,
        A,
        NO,
        "Bonatti's fixed point theorem",
        "On a compact 3- or 4-manifold with nonzero Euler characteristic, every analytic action of R^2 has a fixed point.",
    ),
    rule(
        "F7",
        F,
        A,
        YES,
        "commuting fields on the torus",
        "On the torus with angles (x, y) the commuting analytic fields d/dx and f_k(y) d/dx, with 1 and the f_k \
         linearly independent, give an effective action of R^m without fixed points.",
    ),
    rule(
        "T1",
        T,
        A,
        YES,
        "Mostow's classification",
        "A surface without boundary admits a transitive Lie group action exactly when it is a plane, sphere, \
         cylinder, torus, projective plane, Moebius strip or Klein bottle.",
    ),
    rule(
        "T2",
        T,
        C,
        NO,
        "Mostow's classification",
        "A surface without boundary admits a transitive Lie group action exactly when it is a plane, sphere, \
         cylinder, torus, projective plane, Moebius strip or Klein bottle.",
    ),
    rule(
        "H1",
        H,
        C,
        NO,
        "compact homogeneous spaces",
        "A compact homogeneous space G/H has Euler characteristic at least 0, and finite fundamental group when its \
         Euler characteristic is positive.",
    ),
];

pub fn rule_by_id(id: &str) -> Option<&'static Rule> {
    RULES.iter().find(|r| r.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = RULES.iter().map(|r| r.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), RULES.len());
    }

    #[test]
    fn propagation_direction() {
        let r1 = rule_by_id("R1").unwrap();
        assert!(Regularity::ALL.iter().all(|&g| r1.applies_at(g)));
        let r10 = rule_by_id("R10").unwrap();
        assert!(r10.applies_at(Regularity::Continuous) && !r10.applies_at(Regularity::Analytic));
        let r3 = rule_by_id("R3").unwrap();
        assert!(!r3.applies_at(Regularity::Smooth));
    }
}
