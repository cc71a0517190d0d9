mod common;

use common::{catalog_profiles, descriptor_grid};
use lieact::obstruction::{analyze, EngineOptions, Mode, Query, Regularity, Status};
use lieact::report::{Report, ToolInfo};
use lieact::spectral::SpectralConfig;

const ORDER: [Regularity; 3] = [Regularity::Continuous, Regularity::Smooth, Regularity::Analytic];

#[test]
fn grid_is_monotone_and_consistent() {
    let profiles = catalog_profiles();
    let grid = descriptor_grid();
    let mut checked = 0;
    for p in &profiles {
        for (name, m) in &grid {
            for mode in Mode::ALL {
                for strict in [false, true] {
                    let verdicts: Vec<_> = ORDER
                        .iter()
                        .map(|&regularity| {
                            analyze(p, m, Query { regularity, mode }, EngineOptions { strict }).unwrap_or_else(|e| {
                                panic!("{:?} on {name}: {e}", p.expression)
                            })
                        })
                        .collect();
                    for v in &verdicts {
                        assert_eq!(v.status == Status::Unknown, v.citations.is_empty(), "{:?} on {name}", p.expression);
                        checked += 1;
                    }
                    for w in verdicts.windows(2) {
                        let (weak, strong) = (&w[0], &w[1]);
                        if weak.status == Status::Impossible {
                            assert_eq!(strong.status, Status::Impossible, "{:?} on {name} {mode:?}", p.expression);
                        }
                        if strong.status == Status::Possible {
                            assert_eq!(weak.status, Status::Possible, "{:?} on {name} {mode:?}", p.expression);
                        }
                    }
                }
            }
        }
    }
    assert!(checked >= 40 * 20 * 3 * 4);
}

#[test]
fn homogeneous_mode_ignores_the_algebra() {
    let profiles = catalog_profiles();
    for (name, m) in descriptor_grid() {
        for regularity in ORDER {
            let q = Query { regularity, mode: Mode::CompactHomogeneous };
            let statuses: Vec<Status> =
                profiles.iter().map(|p| analyze(p, &m, q, EngineOptions::default()).unwrap().status).collect();
            assert!(statuses.windows(2).all(|w| w[0] == w[1]), "{name}");
        }
    }
}

#[test]
fn reports_are_byte_stable() {
    let cfg = SpectralConfig::default();
    let render = || {
        let p = common::profile("st(2,C) x abelian(1)");
        let m = lieact::obstruction::ManifoldDescriptor::preset("genus-2").unwrap();
        let verdicts =
            lieact::obstruction::analyze_all(&p, &m, &Regularity::ALL, &Mode::ALL, EngineOptions::default()).unwrap();
        Report { tool: ToolInfo::new(&cfg, false), algebra: Some(&p), manifold: Some(&m), verdicts: &verdicts, notes: vec![] }
            .to_json_string()
    };
    assert_eq!(render(), render());
}
