use serde::{Deserialize, Serialize};

use super::ObstructionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    Plane,
    Sphere,
    Cylinder,
    Torus,
    ProjectivePlane,
    Moebius,
    KleinBottle,
    ClosedOrientableGenusG,
    ClosedNonorientableGenusG,
    Other,
}

impl SurfaceKind {
    /// The surfaces without boundary that carry a transitive Lie group action.
    pub const HOMOGENEOUS: [SurfaceKind; 7] = [
        SurfaceKind::Plane,
        SurfaceKind::Sphere,
        SurfaceKind::Cylinder,
        SurfaceKind::Torus,
        SurfaceKind::ProjectivePlane,
        SurfaceKind::Moebius,
        SurfaceKind::KleinBottle,
    ];
}

/// What the rules need to know about a manifold. Unknown facts are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldDescriptor {
    pub dim: u32,
    pub compact: bool,
    pub boundary: bool,
    #[serde(default)]
    pub orientable: Option<bool>,
    #[serde(default)]
    pub euler: Option<i64>,
    #[serde(default)]
    pub genus: Option<u32>,
    #[serde(default)]
    pub pi1_finite: Option<bool>,
    #[serde(default)]
    pub parallelizable: Option<bool>,
    #[serde(default)]
    pub surface_kind: Option<SurfaceKind>,
}

/// Facts implied by a surface kind.
struct KindFacts {
    compact: Option<bool>,
    boundary: Option<bool>,
    orientable: Option<bool>,
    euler: Option<i64>,
    genus: Option<u32>,
    pi1_finite: Option<bool>,
}

fn kind_facts(kind: SurfaceKind, genus: Option<u32>) -> KindFacts {
    let none = KindFacts { compact: None, boundary: None, orientable: None, euler: None, genus: None, pi1_finite: None };
    let closed = |orientable, euler, genus, pi1| KindFacts {
        compact: Some(true),
        boundary: Some(false),
        orientable: Some(orientable),
        euler,
        genus,
        pi1_finite: pi1,
    };
    match kind {
        SurfaceKind::Plane => KindFacts {
            compact: Some(false),
            boundary: Some(false),
            orientable: Some(true),
            euler: Some(1),
            genus: Some(0),
            pi1_finite: Some(true),
        },
        SurfaceKind::Sphere => closed(true, Some(2), Some(0), Some(true)),
        SurfaceKind::Torus => closed(true, Some(0), Some(1), Some(false)),
        SurfaceKind::ProjectivePlane => closed(false, Some(1), Some(1), Some(true)),
        SurfaceKind::KleinBottle => closed(false, Some(0), Some(2), Some(false)),
        SurfaceKind::Cylinder => {
            KindFacts { orientable: Some(true), euler: Some(0), pi1_finite: Some(false), ..none }
        }
        SurfaceKind::Moebius => {
            KindFacts { orientable: Some(false), euler: Some(0), pi1_finite: Some(false), ..none }
        }
        SurfaceKind::ClosedOrientableGenusG => {
            closed(true, genus.map(|g| 2 - 2 * i64::from(g)), None, genus.map(|g| g == 0))
        }
        SurfaceKind::ClosedNonorientableGenusG => {
            closed(false, genus.map(|g| 2 - i64::from(g)), None, genus.map(|g| g == 1))
        }
        SurfaceKind::Other => none,
    }
}

fn inconsistent(a: &'static str, b: &'static str, detail: impl Into<String>) -> ObstructionError {
    ObstructionError::InconsistentDescriptor { first: a, second: b, detail: detail.into() }
}

fn merge<T: PartialEq + Copy + std::fmt::Debug>(
    slot: &mut Option<T>,
    implied: Option<T>,
    field: &'static str,
    source: &'static str,
) -> Result<(), ObstructionError> {
    match (*slot, implied) {
        (Some(a), Some(b)) if a != b => Err(inconsistent(field, source, format!("{field} is {a:?}, {source} implies {b:?}"))),
        (None, Some(b)) => {
            *slot = Some(b);
            Ok(())
        }
        _ => Ok(()),
    }
}

impl ManifoldDescriptor {
    pub fn from_json(text: &str) -> Result<Self, ObstructionError> {
        serde_json::from_str(text).map_err(|e| ObstructionError::Json(e.to_string()))
    }

    pub fn is_surface(&self) -> bool {
        self.dim == 2
    }

    pub fn is_closed(&self) -> bool {
        self.compact && !self.boundary
    }

    /// Named examples: `circle`, `plane`, `sphere`, `cylinder`, `torus`,
    /// `projective-plane`, `moebius`, `klein-bottle`, `3-sphere`, `4-sphere`,
    /// `genus-G` (closed orientable) and `nonorientable-genus-G`.
    pub fn preset(name: &str) -> Option<Self> {
        let base = |dim, compact| ManifoldDescriptor {
            dim,
            compact,
            boundary: false,
            orientable: None,
            euler: None,
            genus: None,
            pi1_finite: None,
            parallelizable: None,
            surface_kind: None,
        };
        let surface = |kind| {
            let compact = !matches!(kind, SurfaceKind::Plane | SurfaceKind::Cylinder | SurfaceKind::Moebius);
            ManifoldDescriptor { surface_kind: Some(kind), ..base(2, compact) }
        };
        let m = match name {
            "circle" => ManifoldDescriptor {
                orientable: Some(true),
                euler: Some(0),
                pi1_finite: Some(false),
                parallelizable: Some(true),
                ..base(1, true)
            },
            "plane" => surface(SurfaceKind::Plane),
            "sphere" => surface(SurfaceKind::Sphere),
            "cylinder" => surface(SurfaceKind::Cylinder),
            "torus" => surface(SurfaceKind::Torus),
            "projective-plane" => surface(SurfaceKind::ProjectivePlane),
            "moebius" => surface(SurfaceKind::Moebius),
            "klein-bottle" => surface(SurfaceKind::KleinBottle),
            "3-sphere" => ManifoldDescriptor {
                orientable: Some(true),
                euler: Some(0),
                pi1_finite: Some(true),
                parallelizable: Some(true),
                ..base(3, true)
            },
            "4-sphere" => ManifoldDescriptor {
                orientable: Some(true),
                euler: Some(2),
                pi1_finite: Some(true),
                parallelizable: Some(false),
                ..base(4, true)
            },
            _ => {
                let (kind, g) = if let Some(g) = name.strip_prefix("nonorientable-genus-") {
                    (SurfaceKind::ClosedNonorientableGenusG, g)
                } else {
                    (SurfaceKind::ClosedOrientableGenusG, name.strip_prefix("genus-")?)
                };
                ManifoldDescriptor { genus: Some(g.parse().ok()?), ..surface(kind) }
            }
        };
        m.validate().ok()
    }

    /// Cross-checks the fields and fills in what they imply.
    pub fn validate(mut self) -> Result<Self, ObstructionError> {
        if self.dim == 0 {
            return Err(inconsistent("dim", "dim", "dimension must be at least 1"));
        }
        if let Some(kind) = self.surface_kind {
            if self.dim != 2 {
                return Err(inconsistent("surface_kind", "dim", "surface kinds need dim 2"));
            }
            if matches!(kind, SurfaceKind::ClosedNonorientableGenusG) && self.genus == Some(0) {
                return Err(inconsistent("genus", "surface_kind", "nonorientable genus is at least 1"));
            }
            let f = kind_facts(kind, self.genus);
            if let Some(c) = f.compact {
                if c != self.compact {
                    return Err(inconsistent("compact", "surface_kind", format!("{kind:?} has compact = {c}")));
                }
            }
            if let Some(b) = f.boundary {
                if b != self.boundary {
                    return Err(inconsistent("boundary", "surface_kind", format!("{kind:?} has boundary = {b}")));
                }
            }
            if matches!(kind, SurfaceKind::Cylinder | SurfaceKind::Moebius) && self.compact && !self.boundary {
                return Err(inconsistent("compact", "surface_kind", format!("a compact {kind:?} has boundary")));
            }
            merge(&mut self.orientable, f.orientable, "orientable", "surface_kind")?;
            merge(&mut self.euler, f.euler, "euler", "surface_kind")?;
            merge(&mut self.genus, f.genus, "genus", "surface_kind")?;
            merge(&mut self.pi1_finite, f.pi1_finite, "pi1_finite", "surface_kind")?;
        }
        if self.genus.is_some() && self.dim != 2 {
            return Err(inconsistent("genus", "dim", "genus is only meaningful for surfaces"));
        }
        if self.dim == 2 && self.is_closed() {
            if let (Some(g), Some(o)) = (self.genus, self.orientable) {
                if !o && g == 0 {
                    return Err(inconsistent("genus", "orientable", "nonorientable genus is at least 1"));
                }
                let chi = if o { 2 - 2 * i64::from(g) } else { 2 - i64::from(g) };
                merge(&mut self.euler, Some(chi), "euler", "genus")?;
            }
            if let Some(chi) = self.euler {
                if chi > 2 {
                    return Err(inconsistent("euler", "dim", "a closed surface has euler characteristic at most 2"));
                }
                if self.orientable == Some(true) && chi % 2 != 0 {
                    return Err(inconsistent("euler", "orientable", "a closed orientable surface has even euler characteristic"));
                }
                if self.orientable == Some(true) && chi == 2 {
                    merge(&mut self.pi1_finite, Some(true), "pi1_finite", "euler")?;
                }
            }
        }
        if self.is_closed() && self.dim % 2 == 1 {
            merge(&mut self.euler, Some(0), "euler", "dim")?;
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closed_genus(g: u32) -> ManifoldDescriptor {
        ManifoldDescriptor {
            dim: 2,
            compact: true,
            boundary: false,
            orientable: Some(true),
            euler: None,
            genus: Some(g),
            pi1_finite: None,
            parallelizable: None,
            surface_kind: Some(SurfaceKind::ClosedOrientableGenusG),
        }
    }

    #[test]
    fn genus_fills_euler() {
        assert_eq!(closed_genus(2).validate().unwrap().euler, Some(-2));
        let mut m = closed_genus(1);
        m.surface_kind = None;
        assert_eq!(m.validate().unwrap().euler, Some(0));
    }

    #[test]
    fn inconsistent_sphere() {
        let m = ManifoldDescriptor { euler: Some(0), genus: None, ..ManifoldDescriptor::preset("sphere").unwrap() };
        assert!(matches!(
            m.validate(),
            Err(ObstructionError::InconsistentDescriptor { first: "euler", second: "surface_kind", .. })
        ));
    }

    #[test]
    fn torus_is_valid() {
        let t = ManifoldDescriptor::preset("torus").unwrap();
        assert_eq!((t.compact, t.euler, t.genus), (true, Some(0), Some(1)));
        assert_eq!(ManifoldDescriptor::preset("genus-3").unwrap().euler, Some(-4));
        assert_eq!(ManifoldDescriptor::preset("nonorientable-genus-3").unwrap().euler, Some(-1));
        assert!(ManifoldDescriptor::preset("nonorientable-genus-0").is_none());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"dim":2,"compact":true,"boundary":false,"orientable":true,"genus":2}"#;
        let m = ManifoldDescriptor::from_json(text).unwrap().validate().unwrap();
        assert_eq!(m.euler, Some(-2));
        let back = ManifoldDescriptor::from_json(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
        assert!(ManifoldDescriptor::from_json(r#"{"dim":2,"compact":true}"#).is_err());
        assert!(ManifoldDescriptor::from_json(r#"{"dim":2,"compact":true,"boundary":false,"colour":1}"#).is_err());
    }
}
