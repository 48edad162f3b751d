use std::sync::Arc;

use gqlrc::formats::*;
use gqlrc::instance::{build_instance, build_structure, elementary, GqKind, InstanceSpec};
use gqlrc_core::codes::LinearCode;
use gqlrc_core::gf::Field;
use gqlrc_core::matrix::BinaryMatrix;
use proptest::prelude::*;

fn small_instances() -> Vec<InstanceSpec> {
    let mut v = vec![
        InstanceSpec::new(GqKind::TeConic, 2),
        InstanceSpec::new(GqKind::TeOvoid, 2),
        InstanceSpec::new(GqKind::T2star, 2),
        InstanceSpec::new(GqKind::W3, 2),
        InstanceSpec::new(GqKind::H3, 2),
    ];
    v.push(InstanceSpec {
        construction: gqlrc::instance::Construction::Form,
        ..InstanceSpec::new(GqKind::Q4, 3)
    });
    v
}

#[test]
fn structure_json_round_trips() {
    for spec in small_instances() {
        let g = build_instance(&spec).unwrap().structure;
        let text = structure_to_json(&g);
        let mut back = parse_structure(&text).unwrap();
        assert_eq!(back.params(), None);
        assert_eq!(back.verify_partial_geometry().ok(), g.params());
        assert_eq!(back.lines(), g.lines());
        assert_eq!(back.point_kinds(), g.point_kinds());
        assert_eq!(back.line_kinds(), g.line_kinds());
        assert_eq!(structure_to_json(&back), text);
    }
}

#[test]
fn alist_round_trips_byte_for_byte() {
    for spec in small_instances() {
        let m = build_instance(&spec).unwrap().structure.incidence_matrix();
        let text = write_alist(&m);
        let back = parse_alist(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(write_alist(&back), text);
    }
}

#[test]
fn fano_alist() {
    let lines: Vec<Vec<usize>> = (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
    let m = BinaryMatrix::from_supports(7, lines);
    let text = write_alist(&m);
    assert!(text.starts_with("7 7\n3 3 \n3 3 3 3 3 3 3 \n"));
    assert_eq!(parse_alist(&text).unwrap(), m);
}

#[test]
fn egg_file_round_trips() {
    let f = Arc::new(Field::new(2, 1).unwrap());
    for (n, ovoid) in [(1, false), (1, true), (2, false)] {
        let egg = elementary(&f, n, ovoid).unwrap();
        let text = egg_to_json(&egg);
        let back = parse_egg(&text).unwrap();
        assert_eq!(back, egg);
        assert_eq!(egg_to_json(&back), text);
    }
}

#[test]
fn hand_written_conic_egg() {
    // conic x0 x2 = x1^2 of PG(2,2) and its tangent lines
    let text = r#"{
        "p": 2, "h": 1, "n": 1, "m": 1,
        "elements": [[[1,0,0]], [[0,0,1]], [[1,1,1]]],
        "tangents": [[[1,0,0],[0,1,0]], [[0,0,1],[0,1,0]], [[1,1,1],[0,1,0]]]
    }"#;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("conic.json");
    std::fs::write(&path, text).unwrap();
    let spec = InstanceSpec {
        kind: Some(GqKind::EggFile),
        input: Some(path),
        ..Default::default()
    };
    let i = build_instance(&spec).unwrap();
    assert_eq!(
        (i.structure.num_points(), i.structure.num_lines()),
        (15, 15)
    );
    assert_eq!((i.params.s, i.params.t), (2, 2));
}

#[test]
fn broken_egg_file_warns_or_fails() {
    let f = Arc::new(Field::new(2, 1).unwrap());
    let egg = elementary(&f, 1, false).unwrap();
    let mut json: serde_json::Value = serde_json::from_str(&egg_to_json(&egg)).unwrap();
    // a second copy of element 0 with its tangent: cardinality and disjointness fail
    for key in ["elements", "tangents"] {
        let first = json[key][0].clone();
        json[key].as_array_mut().unwrap().push(first);
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, json.to_string()).unwrap();
    let mut spec = InstanceSpec {
        kind: Some(GqKind::EggFile),
        input: Some(path),
        ..Default::default()
    };
    let built = build_structure(&spec).unwrap();
    assert!(!built.warnings.is_empty());
    assert!(build_instance(&spec).is_err());
    spec.strict = true;
    assert!(build_structure(&spec).is_err());
}

#[test]
fn matrix_json_and_csv() {
    let g = build_instance(&InstanceSpec::new(GqKind::TeConic, 2))
        .unwrap()
        .structure;
    let code = LinearCode::of_structure(&g).unwrap();
    let csv = write_matrix(MatrixFormat::Csv, 2, code.k(), code.generator_rows()).unwrap();
    assert_eq!(csv.lines().count(), 15);
    assert!(csv.lines().all(|l| l.split(',').count() == 15));
    let json = write_matrix(MatrixFormat::Json, 2, code.k(), code.rref_basis()).unwrap();
    let parsed: MatrixJson = serde_json::from_str(&json).unwrap();
    assert_eq!(
        (parsed.p, parsed.length, parsed.k, parsed.nrows),
        (2, 15, 10, 10)
    );
    assert!(write_matrix(MatrixFormat::Json, 2, 0, &[]).is_err());
    assert!("xml".parse::<MatrixFormat>().is_err());
}

proptest! {
    #[test]
    fn random_alist_round_trips(
        ncols in 1usize..12,
        rows in prop::collection::vec(prop::collection::btree_set(0usize..12, 0..6), 1..10),
    ) {
        let rows: Vec<Vec<usize>> = rows.into_iter().map(|r| r.into_iter().filter(|&c| c < ncols).collect()).collect();
        let m = BinaryMatrix::from_supports(ncols, rows);
        let text = write_alist(&m);
        let back = parse_alist(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(write_alist(&back), text);
    }
}
