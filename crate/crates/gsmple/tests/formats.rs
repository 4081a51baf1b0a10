use std::path::Path;

use gsmple::io::{dataset_to_string, format_edges, parse_edges, read_dataset_from};
use gsmple_core::synthgen::{GeneratorKind, GeneratorSpec};
use gsmple_core::EdgeSet;

fn parse(text: &str) -> gsmple::Result<gsmple_core::Dataset> {
    read_dataset_from(text.as_bytes(), Path::new("<mem>"))
}

#[test]
fn dataset_round_trip() {
    for kind in GeneratorKind::ALL {
        let (data, _) = GeneratorSpec::new(kind, 40, 3).generate().unwrap();
        let text = dataset_to_string(&data).unwrap();
        let back = parse(&text).unwrap();
        assert_eq!(back, data, "{}", kind.name());
        assert_eq!(dataset_to_string(&back).unwrap(), text);
    }
}

#[test]
fn dataset_errors() {
    assert!(parse("").is_err());
    assert!(parse("a,b\n").is_err());
    assert!(parse("a,b\nd:2,x\n0,1\n").is_err());
    assert!(parse("a,b\nd:2,c\n0,\n").is_err(), "missing value");
    assert!(parse("a,b\nd:2,c\n2,0.5\n").is_err(), "code out of range");
    assert!(parse("a,b\nd:2,c\n0,inf\n").is_err());
    assert!(parse("a,b\nd:2,c\n0\n").is_err(), "ragged row");
    assert!(parse("a,b\nd:2,c\n").is_err(), "no rows");
    let err = parse("a,b\nd:2,c\n0,1\n1,nope\n").unwrap_err().to_string();
    assert!(err.contains(":4:"), "{err}");
}

#[test]
fn edge_file_format() {
    let es = EdgeSet::from_pairs(4, [(2, 3), (1, 0), (0, 2)]).unwrap();
    let text = format_edges(&es);
    assert_eq!(text, "D=4\n0 1\n0 2\n2 3\n");
    assert_eq!(parse_edges(&text, Path::new("x")).unwrap(), es);
    // Insertion order does not matter.
    let other = EdgeSet::from_pairs(4, [(0, 2), (3, 2), (0, 1)]).unwrap();
    assert_eq!(format_edges(&other), text);

    assert!(parse_edges("0 1\n", Path::new("x")).is_err());
    assert!(parse_edges("D=3\n0 0\n", Path::new("x")).is_err());
    assert!(parse_edges("D=3\n0 3\n", Path::new("x")).is_err());
    assert!(parse_edges("D=3\n0 1 2\n", Path::new("x")).is_err());
    assert_eq!(parse_edges("D=3\n# none\n\n", Path::new("x")).unwrap().len(), 0);
}
