//! Runs the rule engine for a few algebras on several surfaces and prints the
//! verdicts with the rules that decided them.

use lieact::catalog::{build, parse_expression};
use lieact::obstruction::{analyze_all, AlgebraProfile, EngineOptions, ManifoldDescriptor, Mode, Regularity};
use lieact::spectral::SpectralConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SpectralConfig::default();
    let modes = [Mode::Effective, Mode::FixedPointFree];
    for name in ["st(2,R)", "sl(2,R)", "abelian(2)"] {
        let expr = parse_expression(name)?;
        let profile = AlgebraProfile::compute(&build(&expr)?, Some(&expr), &cfg)?;
        for surface in ["sphere", "torus", "genus-2"] {
            let m = ManifoldDescriptor::preset(surface).expect("known preset");
            for v in analyze_all(&profile, &m, &[Regularity::Analytic], &modes, EngineOptions::default())? {
                let rules: Vec<&str> = v.citations.iter().map(|c| c.rule).collect();
                println!("{name:<11} {surface:<8} {:<17} {:<10} {rules:?}", v.query.mode.as_str(), v.status.as_str());
            }
        }
    }
    Ok(())
}
