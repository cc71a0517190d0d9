//! Builds algebras from the catalog and from `.lie` text, and shows how a
//! Jacobi violation is reported.

use lieact::catalog::{build, parse_expression, parse_lie};
use lieact::liecore::format_vector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sl2 = build(&parse_expression("sl(2,R)")?)?;
    println!("sl(2,R): dim {}, basis {:?}", sl2.dim(), sl2.labels());
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let b = sl2.bracket(&sl2.unit(i), &sl2.unit(j));
        println!("  [{}, {}] = {}", sl2.labels()[i], sl2.labels()[j], format_vector(&b, sl2.labels()));
    }

    let heis = parse_lie("lie-sc v1\ndim 3\nlabel 1 x\nlabel 2 y\nlabel 3 z\n1 2 3 1\n")?;
    println!("from .lie text: dim {}, center dim {}", heis.dim(), heis.center().dim());

    match parse_lie("lie-sc v1\ndim 3\nlabel 1 h\nlabel 2 e\nlabel 3 f\n1 2 2 3\n1 3 3 -2\n2 3 1 1\n") {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
