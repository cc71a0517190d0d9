//! Produces the same JSON report as `lieact analyze --format json`.

use lieact::catalog::{build, parse_expression};
use lieact::obstruction::{analyze_all, AlgebraProfile, EngineOptions, ManifoldDescriptor, Mode, Regularity};
use lieact::report::{Report, ToolInfo};
use lieact::spectral::SpectralConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SpectralConfig::default();
    let expr = parse_expression("sl(2,R)")?;
    let profile = AlgebraProfile::compute(&build(&expr)?, Some(&expr), &cfg)?;
    let m = ManifoldDescriptor::from_json(r#"{"dim": 2, "compact": true, "boundary": false, "orientable": true, "genus": 2}"#)?
        .validate()?;
    let verdicts = analyze_all(&profile, &m, &[Regularity::Analytic], &[Mode::Effective], EngineOptions::default())?;
    let report = Report {
        tool: ToolInfo::new(&cfg, false),
        algebra: Some(&profile),
        manifold: Some(&m),
        verdicts: &verdicts,
        notes: Vec::new(),
    };
    println!("{}", report.to_json_string());
    Ok(())
}
