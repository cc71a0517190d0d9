mod common;

use common::{alg, descriptor_grid, PRESETS};
use lieact::catalog::{load_lie_file, parse_expression, parse_lie, save_lie_file, standard_catalog, LieFileError, ParseError};
use lieact::exactla::q;
use lieact::liecore::StructureError;
use lieact::obstruction::{ManifoldDescriptor, ObstructionError};

#[test]
fn lie_files_survive_disk() {
    let dir = tempfile::tempdir().unwrap();
    for (i, name) in standard_catalog().into_iter().enumerate() {
        let l = alg(name);
        let path = dir.path().join(format!("{i}.lie"));
        save_lie_file(&l, &path).unwrap();
        let back = load_lie_file(&path).unwrap();
        assert_eq!(back.constants(), l.constants(), "{name}");
        assert_eq!(back.labels(), l.labels(), "{name}");
        assert_eq!(back.origin(), None);
    }
}

#[test]
fn lie_comments_and_blank_lines() {
    let text = "# leading comment\n\nlie-sc v1   # header\ndim 2\n\n1 2 2 -1/2  # [x1, x2] = -1/2 x2\n";
    let l = parse_lie(text).unwrap();
    assert_eq!(l.dim(), 2);
    assert_eq!(l.constants().len(), 1);
    assert_eq!(l.labels(), ["x1", "x2"]);
}

#[test]
fn lie_error_lines() {
    let cases: [(&str, usize); 5] = [
        ("", 1),
        ("lie-sc v1\n", 1),
        ("lie-sc v1\ndim x\n", 2),
        ("lie-sc v1\ndim 2\n1 2 2\n", 3),
        ("lie-sc v1\ndim 2\nlabel 1 a\nlabel 1 b\n", 4),
    ];
    for (text, line) in cases {
        match parse_lie(text) {
            Err(LieFileError::FormatError { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn missing_file_is_io_error() {
    assert!(matches!(load_lie_file("/nonexistent/a.lie"), Err(LieFileError::Io(_))));
}

#[test]
fn antisymmetry_is_implied() {
    // only i < j lines are allowed, so [e2, e1] comes from antisymmetry
    let l = parse_lie("lie-sc v1\ndim 2\n1 2 2 1\n").unwrap();
    assert_eq!(l.bracket(&l.unit(1), &l.unit(0)), vec![q(0), q(-1)]);
}

#[test]
fn jacobi_violation_reports_triple() {
    match parse_lie("lie-sc v1\ndim 3\n1 2 2 1\n1 3 3 1\n2 3 1 1\n") {
        Err(LieFileError::Structure(StructureError::JacobiViolation { .. })) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn expression_errors_carry_offsets() {
    match parse_expression("st(3,R) x qq(2,R)") {
        Err(ParseError::UnknownName { offset, name }) => assert_eq!((offset, name.as_str()), (10, "qq")),
        other => panic!("{other:?}"),
    }
    match parse_expression("st(3,R) x") {
        Err(ParseError::SyntaxError { offset, .. }) => assert_eq!(offset, 9),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_expression("sl(2)"), Err(ParseError::ArityError { found: 1, expected: 2, .. })));
}

#[test]
fn expression_display_is_canonical() {
    let e = parse_expression("  st( 3 , R )x abelian(2)\tx nt(4,R) ").unwrap();
    assert_eq!(e.to_string(), "st(3,R) x abelian(2) x nt(4,R)");
    assert_eq!(parse_expression(&e.to_string()).unwrap(), e);
}

#[test]
fn manifold_json_round_trip() {
    for (name, m) in descriptor_grid() {
        let text = serde_json::to_string(&m).unwrap();
        let back = ManifoldDescriptor::from_json(&text).unwrap().validate().unwrap();
        assert_eq!(back, m, "{name}: {text}");
    }
}

#[test]
fn presets_are_valid_and_stable() {
    for name in PRESETS {
        let m = ManifoldDescriptor::preset(name).unwrap_or_else(|| panic!("{name}"));
        assert_eq!(m.clone().validate().unwrap(), m, "{name}");
    }
    assert!(ManifoldDescriptor::preset("genus-x").is_none());
}

#[test]
fn inconsistent_descriptors_rejected() {
    for text in [
        r#"{"dim":2,"compact":true,"boundary":false,"surface_kind":"sphere","euler":0}"#,
        r#"{"dim":2,"compact":false,"boundary":false,"surface_kind":"torus"}"#,
        r#"{"dim":3,"compact":true,"boundary":false,"euler":2}"#,
        r#"{"dim":2,"compact":true,"boundary":false,"orientable":true,"genus":1,"euler":-2}"#,
        r#"{"dim":0,"compact":true,"boundary":false}"#,
    ] {
        let r = ManifoldDescriptor::from_json(text).unwrap().validate();
        assert!(matches!(r, Err(ObstructionError::InconsistentDescriptor { .. })), "{text}: {r:?}");
    }
    assert!(matches!(ManifoldDescriptor::from_json("{\"dim\":2}"), Err(ObstructionError::Json(_))));
}
