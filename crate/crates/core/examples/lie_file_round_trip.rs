//! Writes a catalog algebra to a `.lie` file and reads it back.

use lieact::catalog::{build, load_lie_file, parse_expression, save_lie_file, to_lie_string};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = build(&parse_expression("st(3,R)")?)?;
    print!("{}", to_lie_string(&l));
    let path = std::env::temp_dir().join("lieact-example-st3.lie");
    save_lie_file(&l, &path)?;
    let back = load_lie_file(&path)?;
    println!("read back {}: same constants = {}", path.display(), back.constants() == l.constants());
    std::fs::remove_file(&path)?;
    Ok(())
}
