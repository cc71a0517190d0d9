//! Spectral rank of a single matrix and of whole algebras, on the exact and
//! the sampled paths.

use lieact::catalog::{build, parse_expression};
use lieact::exactla::MatrixQ;
use lieact::spectral::{algebra_spectral_rank, spectral_rank_of, SpectralConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SpectralConfig::default();

    // eigenvalues 1, 2 and the pair +-i
    let t = MatrixQ::from_i64(&[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    let sr = spectral_rank_of(&t, &cfg)?;
    println!("matrix: r = {}, r_NR = {} ({:?})", sr.r, sr.r_nr, sr.certainty);

    for name in ["st(4,R)", "sl(3,R)", "st(2,C)", "st(3,C)"] {
        let l = build(&parse_expression(name)?)?;
        let rep = algebra_spectral_rank(&l, &cfg)?;
        println!(
            "{name:<8} r = {}, r_NR = {} via {} ({:?}, {} samples)",
            rep.r,
            rep.r_nr,
            rep.method.as_str(),
            rep.certainty,
            rep.samples_used
        );
    }
    Ok(())
}
