//! Named algebras, the expression language, the `.lie` file format and reports.

mod build;
mod lie_file;
mod expr;

pub use build::{build, from_matrix_basis, BuildError};
pub use expr::{parse_expression, AlgebraExpr, AtomName, Field, ParseError};
pub use lie_file::{load_lie_file, parse_lie, save_lie_file, to_lie_string, LieFileError, LIE_HEADER};

use serde::Serialize;

/// One supported atom, as shown by `catalog list`.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub syntax: &'static str,
    pub description: &'static str,
    pub dimension: &'static str,
}

pub fn catalog_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            syntax: "st(m,R)",
            description: "upper triangular real m x m matrices",
            dimension: "m(m+1)/2",
        },
        CatalogEntry {
            syntax: "st(m,C)",
            description: "upper triangular complex matrices, as a real algebra",
            dimension: "m(m+1)",
        },
        CatalogEntry {
            syntax: "nt(m,R)",
            description: "strictly upper triangular real matrices",
            dimension: "m(m-1)/2",
        },
        CatalogEntry {
            syntax: "nt(m,C)",
            description: "strictly upper triangular complex matrices, as a real algebra",
            dimension: "m(m-1)",
        },
        CatalogEntry { syntax: "sl(m,R)", description: "traceless real matrices", dimension: "m^2-1" },
        CatalogEntry {
            syntax: "sl(m,C)",
            description: "traceless complex matrices, as a real algebra",
            dimension: "2(m^2-1)",
        },
        CatalogEntry { syntax: "abelian(m)", description: "the abelian algebra R^m", dimension: "m" },
        CatalogEntry {
            syntax: "strn(n)",
            description: "alias for derived(st(n+1,R)) x abelian(1)",
            dimension: "n(n+1)/2+1",
        },
    ]
}

/// Expressions exercised by the test grid and the examples.
pub fn standard_catalog() -> Vec<&'static str> {
    vec![
        "abelian(1)",
        "abelian(2)",
        "abelian(3)",
        "abelian(4)",
        "st(1,R)",
        "st(2,R)",
        "st(3,R)",
        "st(4,R)",
        "st(5,R)",
        "st(6,R)",
        "nt(3,R)",
        "nt(4,R)",
        "nt(5,R)",
        "nt(6,R)",
        "sl(2,R)",
        "sl(3,R)",
        "sl(2,C)",
        "st(2,C)",
        "st(3,C)",
        "nt(3,C)",
        "strn(2)",
        "strn(3)",
        "strn(4)",
        "derived(st(3,R))",
        "derived(st(4,R))",
        "nt(3,R) x nt(3,R)",
        "st(2,R) x st(2,R)",
        "st(3,R) x st(3,R)",
        "st(4,R) x st(4,R)",
        "st(3,R) x abelian(2)",
        "nt(3,R) x abelian(1)",
        "sl(2,R) x abelian(1)",
        "sl(2,R) x st(2,R)",
        "sl(2,R) x sl(2,R)",
        "sl(2,R) x st(2,R) x abelian(2)",
        "st(2,R) x nt(4,R)",
        "nt(4,R) x abelian(2)",
        "st(2,R) x abelian(1)",
        "nt(3,R) x nt(3,R) x nt(3,R)",
        "st(2,C) x abelian(1)",
    ]
}
