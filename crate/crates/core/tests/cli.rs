use std::fs;
use std::path::{Path, PathBuf};

use modk::cli::{run, EXIT_BUDGET, EXIT_INPUT, EXIT_INVALID, EXIT_OK};
use modk::document::ColoringDocument;
use tempfile::TempDir;

fn modk(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("modk").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn color_then_verify() {
    let dir = TempDir::new().unwrap();
    let (code, star, _) = modk(&["gen", "star", "3"]);
    assert_eq!(code, EXIT_OK);
    let g = write(dir.path(), "star.g", &star);
    let (code, doc, _) = modk(&["color", s(&g), "--k", "3", "--peel", "exact"]);
    assert_eq!(code, EXIT_OK);
    let c = write(dir.path(), "star.coloring.json", &doc);
    let (code, out, _) = modk(&["verify", s(&g), s(&c), "--k", "3"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.starts_with("valid"));
}

#[test]
fn tampered_coloring_is_rejected() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "star.g", "n 4\n0 1\n0 2\n0 3\n");
    let doc = ColoringDocument {
        k: 3,
        num_colors: 2,
        edges: vec![(0, 1, 0), (0, 2, 0), (0, 3, 1)],
    };
    let c = write(dir.path(), "bad.json", &doc.to_json());
    let (code, out, _) = modk(&["verify", s(&g), s(&c), "--k", "3"]);
    assert_eq!(code, EXIT_INVALID);
    assert!(out.contains("color 0 vertex 0 degree 2"), "{out}");
}

#[test]
fn partial_coloring_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "p.g", "0 1\n1 2\n");
    let doc = ColoringDocument {
        k: 2,
        num_colors: 1,
        edges: vec![(0, 1, 0)],
    };
    let c = write(dir.path(), "partial.json", &doc.to_json());
    let (code, _, err) = modk(&["verify", s(&g), s(&c), "--k", "2"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("partial"));
}

#[test]
fn exact_on_triangle() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "k3.g", "0 1\n0 2\n1 2\n");
    let (code, out, _) = modk(&["exact", s(&g), "--k", "2"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.splitn(2, '\n');
    assert_eq!(lines.next(), Some("3"));
    let doc = ColoringDocument::parse(lines.next().unwrap()).unwrap();
    assert_eq!(doc.num_colors, 3);
}

#[test]
fn exact_budget_exit_code() {
    let dir = TempDir::new().unwrap();
    let (_, text, _) = modk(&["gen", "kkkuniversal", "2"]);
    let g = write(dir.path(), "u.g", &text);
    let (code, out, _) = modk(&["exact", s(&g), "--k", "2", "--budget", "3"]);
    assert_eq!(code, EXIT_BUDGET);
    assert_eq!(out, "bound_exceeded\n");
}

#[test]
fn parse_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "loop.g", "0 0\n");
    assert_eq!(modk(&["color", s(&g), "--k", "2"]).0, EXIT_INPUT);
    assert_eq!(
        modk(&["color", "/nonexistent/x.g", "--k", "2"]).0,
        EXIT_INPUT
    );
    assert_eq!(modk(&["color"]).0, EXIT_INPUT);
    assert_eq!(modk(&["frobnicate"]).0, EXIT_INPUT);
    let ok = write(dir.path(), "ok.g", "0 1\n");
    assert_eq!(modk(&["color", s(&ok), "--k", "0"]).0, EXIT_INPUT);
    assert_eq!(
        modk(&["color", s(&ok), "--k", "2", "--peel", "maybe"]).0,
        EXIT_INPUT
    );
    assert_eq!(modk(&["gen", "gnm", "3", "4"]).0, EXIT_INPUT);
    assert_eq!(modk(&["afk", "--k", "6", "--n-max", "3"]).0, EXIT_INPUT);
}

#[test]
fn divisible_and_peel() {
    let dir = TempDir::new().unwrap();
    let c4 = write(dir.path(), "c4.g", "0 1\n1 2\n2 3\n0 3\n");
    let (code, out, _) = modk(&["divisible", s(&c4), "--k", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("found 4\n"));
    let tree = write(dir.path(), "t.g", "0 1\n1 2\n");
    assert_eq!(modk(&["divisible", s(&tree), "--k", "3"]).1, "none\n");

    let k3 = write(dir.path(), "k3.g", "0 1\n0 2\n1 2\n");
    let (code, out, _) = modk(&["peel", s(&k3), "--k", "2", "--mode", "exact"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "maximality exact\naugmentations 0\nh_edges 1\n0 1\nh_vertices 0 1\nremainder\nn 3\n0 2\n1 2\n"
    );
}

#[test]
fn ordering_file_and_explain() {
    let dir = TempDir::new().unwrap();
    let (_, text, _) = modk(&["gen", "star", "10"]);
    let g = write(dir.path(), "s.g", &text);
    let ord = write(dir.path(), "ord.txt", "0 1 2 3 4 5 6 7 8 9 10\n");
    let (code, out, err) = modk(&[
        "color",
        s(&g),
        "--k",
        "3",
        "--peel",
        "none",
        "--ordering",
        s(&ord),
        "--explain",
    ]);
    assert_eq!(code, EXIT_OK);
    let doc = ColoringDocument::parse(&out).unwrap();
    assert_eq!(doc.num_colors, 4);
    assert!(err.contains("4d + 2k - 2 = 8"), "{err}");
    assert!(err.contains("198k - 101 = 493"));
    let bad = write(dir.path(), "bad.txt", "0 1 x\n");
    assert_eq!(
        modk(&["color", s(&g), "--k", "3", "--ordering", s(&bad)]).0,
        EXIT_INPUT
    );
}

#[test]
fn scan_and_afk() {
    let (code, out, _) = modk(&["scan", "--k", "2", "--max-n", "5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("max_excess 2\n"));
    assert_eq!(
        modk(&["scan", "--k", "2", "--max-n", "5", "--max-excess", "1"]).0,
        EXIT_INVALID
    );
    let (code, out, _) = modk(&["afk", "--k", "2", "--n-max", "5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("counterexamples 0"));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = modk(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("color"));
}
