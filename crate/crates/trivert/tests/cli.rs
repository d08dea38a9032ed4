//! End-to-end tests of the command-line tool: outputs, exit codes, and the
//! machine-readable round trip.

use std::process::Command;

fn trivert(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_trivert"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn six_tuple_table() {
    let (stdout, _, code) = trivert(&["six-tuple", "--builtin", "a:+:4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("L(9,4)"));
    assert!(stdout.contains("S1xS2"));
    assert!(stdout.contains("L(2,1)"));
    assert!(stdout.contains("L(4,3)"));
}

#[test]
fn decompose_standard_template() {
    let (stdout, _, code) = trivert(&["decompose", "--builtin", "a:+:3", "--template", "ac"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("normal form: L(3,2)"));
    let (stdout, _, code) = trivert(&["decompose", "--builtin", "a:+:3", "--template", "chord"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("normal form: S3"));
    let (stdout, _, code) =
        trivert(&["decompose", "--builtin", "a:+:4", "--template", "composite:1:1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("normal form: L(9,4) # L(2,1)"));
}

#[test]
fn homology_and_double() {
    let (stdout, _, code) = trivert(&["homology", "--r1", "3", "--r2", "3", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "Z/5");
    let (stdout, _, code) = trivert(&["double", "--f1", "0", "--f2", "0", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "#2 S2xS2");
    let (stdout, _, code) = trivert(&["double", "--f1", "1", "--f2", "0", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "#2 CP2 #2 CP2bar");
}

#[test]
fn enumerate_counts() {
    let (stdout, _, code) = trivert(&["enumerate", "--case", "b"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("8 rows"));
    let (stdout, _, code) = trivert(&["enumerate", "--case", "id"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("1 rows"));
    // two signs, q in [-6, 6] minus the one degenerate value per sign,
    // plus the two sporadic rows per sign
    let (stdout, _, code) = trivert(&["enumerate", "--case", "a", "--q", "-6..6"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("28 rows"));
}

#[test]
fn exit_codes() {
    // usage error
    let (_, _, code) = trivert(&["enumerate", "--case", "z"]);
    assert_eq!(code, 2);
    let (_, _, code) = trivert(&["decompose", "--builtin", "a:+:3"]);
    assert_eq!(code, 2);
    // invalid data
    let dir = std::env::temp_dir().join("trivert-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad_data = dir.join("bad_data.txt");
    std::fs::write(&bad_data, "a2 = 1 0\nb2 = 0 1\nc2p = -2 3\nd = -1 1\nmu = twist +1\n")
        .unwrap();
    let (_, stderr, code) = trivert(&[
        "decompose",
        "--data",
        bad_data.to_str().unwrap(),
        "--template",
        "ac",
    ]);
    assert_eq!(code, 4, "{stderr}");
    assert!(stderr.contains("cusp transversality"));
    // degenerate arc: a segment along the branch cut
    let bad_arc = dir.join("bad_arc.txt");
    std::fs::write(&bad_arc, "4 0\n3/2 0\n0 4\n").unwrap();
    let (_, stderr, code) = trivert(&[
        "decompose",
        "--builtin",
        "a:+:3",
        "--arc",
        bad_arc.to_str().unwrap(),
    ]);
    assert_eq!(code, 3, "{stderr}");
}

#[test]
fn machine_readable_round_trip() {
    let (stdout, _, code) = trivert(&[
        "decompose",
        "--builtin",
        "a:+:4",
        "--template",
        "cb",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    let reprinted = serde_json::to_string_pretty(&value).unwrap();
    assert_eq!(stdout.trim_end(), reprinted, "round trip is byte-identical");
    assert_eq!(value["normal_form"]["text"], "L(2,1)");
}

#[test]
fn render_writes_svg() {
    let dir = std::env::temp_dir().join("trivert-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("model.svg");
    let (_, _, code) = trivert(&["render", "--template", "cc", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg"));
}
