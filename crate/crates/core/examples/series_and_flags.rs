//! Derived and lower central series, plus the classification flags, for a few
//! catalog algebras.

use lieact::catalog::{build, parse_expression};
use lieact::classify::classify;
use lieact::spectral::SpectralConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SpectralConfig::default();
    for name in ["nt(4,R)", "st(3,R)", "strn(3)", "st(2,C)", "sl(2,R) x abelian(1)"] {
        let l = build(&parse_expression(name)?)?;
        let f = classify(&l, &cfg);
        println!(
            "{name:<22} dim {:>2}  derived {:?}  lower central {:?}  l = {:?}  class = {:?}  supersoluble = {}",
            f.dim,
            l.derived_series().dims(),
            l.lower_central_series().dims(),
            f.derived_length,
            f.nilpotency_class,
            f.supersoluble.value,
        );
    }
    Ok(())
}
