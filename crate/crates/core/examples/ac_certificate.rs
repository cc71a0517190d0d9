//! Algebraic contractibility: find a certificate derivation and re-check it
//! independently.

use lieact::catalog::{build, parse_expression};
use lieact::classify::{ac_status, verify_ac_certificate};
use lieact::exactla::format_rational;
use lieact::spectral::SpectralConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SpectralConfig::default();
    for name in ["nt(4,R)", "st(3,R)", "strn(2)", "sl(2,R)"] {
        let l = build(&parse_expression(name)?)?;
        let ac = ac_status(&l, &cfg);
        println!("{name:<8} {}: {}", ac.status.as_str(), ac.reason);
        if let Some(c) = &ac.certificate {
            let spectrum: Vec<String> =
                c.eigenvalues.iter().map(|(v, m)| format!("{}^{m}", format_rational(v))).collect();
            let check = verify_ac_certificate(&l, &c.derivation);
            println!("         {:?} spectrum {}, re-check ok: {}", c.source, spectrum.join(" "), check.is_ok());
        }
    }
    Ok(())
}
