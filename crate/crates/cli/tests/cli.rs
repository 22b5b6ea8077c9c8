use std::io::Write;
use std::process::{Command, Output, Stdio};

use extremal_core::{build_backbone, from_graph6};

fn extremal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extremal"))
        .args(args)
        .output()
        .unwrap()
}

fn extremal_with_stdin(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_extremal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn formula_modes() {
    let o = extremal(&["formula", "--n", "4", "--k", "1", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5\n");
    let o = extremal(&[
        "formula",
        "--n",
        "4",
        "--k",
        "1",
        "--d",
        "2",
        "--mode",
        "paper-literal",
    ]);
    assert_eq!(stdout(&o), "11\n");
    let o = extremal(&["formula", "--n", "8", "--k", "3", "--d", "2"]);
    assert_eq!(stdout(&o), "27\n");
}

#[test]
fn backbone_formats() {
    let o = extremal(&["backbone", "--k", "2", "--d", "3", "--format", "graph6"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let g = from_graph6(text.trim_end().as_bytes()).unwrap();
    assert_eq!(g, build_backbone(2, 3).unwrap().0);

    let o = extremal(&["backbone", "--k", "1", "--d", "2", "--format", "edgelist"]);
    assert_eq!(stdout(&o), "0 1\n1 2\n");

    let o = extremal(&["backbone", "--k", "1", "--d", "2", "--format", "dot"]);
    assert_eq!(
        stdout(&o),
        "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n"
    );
}

#[test]
fn family_feeds_check() {
    for (n, k, d) in [
        ("7", "1", "5"),
        ("8", "2", "3"),
        ("9", "1", "4"),
        ("6", "2", "2"),
    ] {
        let family = extremal(&["family", "--n", n, "--k", k, "--d", d]);
        assert_eq!(family.status.code(), Some(0));
        let lines = stdout(&family);
        assert!(!lines.trim().is_empty());
        let check = extremal_with_stdin(&["check", "--k", k, "--input", "-"], lines.as_bytes());
        assert_eq!(check.status.code(), Some(0));
        let table = stdout(&check);
        let mut rows = table.lines();
        assert_eq!(
            rows.next().unwrap(),
            "graph6\torder\tsize\tdiameter\tkappa\textremal\tverdict"
        );
        let body: Vec<&str> = rows.collect();
        assert_eq!(body.len(), lines.lines().count());
        for row in body {
            let cols: Vec<&str> = row.split('\t').collect();
            assert_eq!(cols[1], n);
            assert_eq!(cols[3], d);
            assert_eq!(cols[5], "true", "{row}");
        }
    }
}

#[test]
fn check_reports_non_extremal_graphs() {
    let dir = tempfile_path("cycle");
    // C4 then P4
    std::fs::write(&dir, "Cr\nCh\n").unwrap();
    let o = extremal(&["check", "--k", "1", "--input", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let table = stdout(&o);
    let rows: Vec<&str> = table.lines().skip(1).collect();
    assert!(rows[0].starts_with("Cr\t4\t4\t2\t2\tfalse\t"));
    assert!(rows[1].starts_with("Ch\t4\t3\t3\t1\ttrue\t"));
    std::fs::remove_file(dir).unwrap();

    let o = extremal_with_stdin(&["check", "--k", "1"], b"B\n");
    assert_eq!(o.status.code(), Some(2));
}

fn tempfile_path(tag: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("extremal-cli-{tag}-{}.g6", std::process::id()))
}

#[test]
fn verify_json() {
    let o = extremal(&["verify", "--n", "4", "--k", "1", "--d", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["max_size"], 5);
    assert_eq!(doc["corrected_match"], true);
    assert_eq!(doc["paper_literal_match"], false);
    assert_eq!(doc["family_match"], true);
    assert_eq!(doc["extremal"], serde_json::json!(["C^"]));
}

#[test]
fn verify_is_deterministic() {
    let run = || {
        let o = extremal(&["verify", "--n", "7", "--k", "2", "--d", "3", "--json"]);
        let mut doc: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
        doc["elapsed_ms"] = serde_json::json!(0);
        doc
    };
    assert_eq!(run(), run());
}

#[test]
fn oracle_output() {
    let o = extremal(&[
        "oracle",
        "--n",
        "6",
        "--k",
        "2",
        "--d",
        "3",
        "--emit-extremal",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "10");
    assert_eq!(lines.len(), 2);
    let g = from_graph6(lines[1].as_bytes()).unwrap();
    assert_eq!((g.order(), g.size()), (6, 10));

    let o = extremal(&["oracle", "--n", "5", "--k", "1", "--d", "4", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(doc["max_size"], 4);
    assert_eq!(doc["classes"], 1);
    assert!(doc.get("extremal").is_none());
}

#[test]
fn sweep_lines() {
    let o = extremal(&[
        "sweep", "--n-max", "5", "--k-max", "1", "--d-max", "3", "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let params: Vec<(u64, u64, u64)> = text
        .lines()
        .map(|l| {
            let doc: serde_json::Value = serde_json::from_str(l).unwrap();
            assert_eq!(doc["corrected_match"], true);
            let p = &doc["params"];
            (
                p["n"].as_u64().unwrap(),
                p["k"].as_u64().unwrap(),
                p["d"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        params,
        vec![(3, 1, 2), (4, 1, 2), (4, 1, 3), (5, 1, 2), (5, 1, 3)]
    );

    let o = extremal(&["sweep", "--n-max", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.contains("family_match=true")));
}

#[test]
fn exit_codes() {
    assert_eq!(
        extremal(&["formula", "--n", "4", "--k", "1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        extremal(&["formula", "--n", "4", "--k", "1", "--d", "2", "--x"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(extremal(&["nonsense"]).status.code(), Some(1));
    assert_eq!(extremal(&["--help"]).status.code(), Some(0));
    assert_eq!(
        extremal(&["formula", "--n", "3", "--k", "2", "--d", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        extremal(&["backbone", "--k", "1", "--d", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(extremal(&["check", "--k", "0"]).status.code(), Some(2));
    assert_eq!(
        extremal(&["oracle", "--n", "9", "--k", "1", "--d", "2"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        extremal(&["family", "--n", "11", "--k", "1", "--d", "2"])
            .status
            .code(),
        Some(4)
    );
    let o = extremal(&[
        "verify", "--n", "7", "--k", "1", "--d", "5", "--budget", "50",
    ]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}
