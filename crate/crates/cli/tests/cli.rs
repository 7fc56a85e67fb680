use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const K4: &str = "c tetrahedron\np tw 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const OCTAHEDRON: &str = "p tw 6 12\n1 2\n1 3\n1 4\n1 5\n2 3\n3 4\n4 5\n5 2\n6 2\n6 3\n6 4\n6 5\n";
const C4: &str = "p tw 4 4\n1 2\n2 3\n3 4\n4 1\n";
const K33: &str = "p tw 6 9\n1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n";

fn plantw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plantw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn file(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn tw_on_k4_writes_a_valid_decomposition() {
    let dir = TempDir::new().unwrap();
    let gr = file(&dir, "k4.gr", K4);
    let td = dir.path().join("k4.td");
    let o = plantw(&["tw", "--input", &gr, "--output", td.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "3\n");
    assert!(fs::read_to_string(&td).unwrap().starts_with("s td 1 4 4\n"));
    let c = plantw(&["check-td", "--input", &gr, "--td", td.to_str().unwrap()]);
    assert!(c.status.success());
    assert_eq!(stdout(&c), "valid width 3\n");
}

#[test]
fn check_td_rejects_a_corrupted_decomposition() {
    let dir = TempDir::new().unwrap();
    let gr = file(&dir, "c4.gr", C4);
    let td = file(&dir, "bad.td", "s td 2 3 4\nb 1 1 2 3\nb 2 3 4\n1 2\n");
    let o = plantw(&["check-td", "-i", &gr, "--td", &td]);
    assert_eq!(o.status.code(), Some(4));
    let garbled = file(&dir, "garbled.td", "s td 1 3 4\nb 7 1 2 3\n");
    assert_eq!(plantw(&["check-td", "-i", &gr, "--td", &garbled]).status.code(), Some(2));
}

#[test]
fn pmcs_match_the_oracle() {
    let dir = TempDir::new().unwrap();
    let gr = file(&dir, "oct.gr", OCTAHEDRON);
    let mut fast: Vec<String> = stdout(&plantw(&["pmcs", "-i", &gr])).lines().map(str::to_owned).collect();
    let slow: Vec<String> = stdout(&plantw(&["oracle", "pmcs", "-i", &gr])).lines().map(str::to_owned).collect();
    fast.sort();
    let mut slow_sorted = slow.clone();
    slow_sorted.sort();
    assert_eq!(fast, slow_sorted);
    assert_eq!(fast.len(), 6);
}

#[test]
fn pmcs_stats_and_max_count() {
    let dir = TempDir::new().unwrap();
    let gr = file(&dir, "oct.gr", OCTAHEDRON);
    let o = plantw(&["pmcs", "-i", &gr, "--stats", "--max-count", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("emitted 2"));
    assert!(err.contains("max_delay "));
    assert!(!err.contains("seconds"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let gr = file(&dir, "oct.gr", OCTAHEDRON);
    for cmd in ["pmcs", "minseps", "latching", "chordless-cycles", "tw"] {
        let a = plantw(&[cmd, "-i", &gr]);
        let b = plantw(&[cmd, "-i", &gr]);
        assert!(a.status.success(), "{cmd}");
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.gr", C4);
    let k33 = file(&dir, "k33.gr", K33);
    let bad = file(&dir, "bad.gr", "p tw 3\n");
    assert_eq!(plantw(&["pmcs", "-i", &c4]).status.code(), Some(3));
    assert_eq!(plantw(&["tw", "-i", &k33]).status.code(), Some(3));
    assert_eq!(plantw(&["tw", "-i", &bad]).status.code(), Some(2));
    assert_eq!(plantw(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(plantw(&["tw", "--max-count", "many"]).status.code(), Some(1));
    assert!(plantw(&["--help"]).status.success());
}

#[test]
fn embedding_sidecar() {
    let dir = TempDir::new().unwrap();
    let gr = file(&dir, "k4.gr", K4);
    let good = file(&dir, "good.rot", "1: 2 3 4\n2: 1 4 3\n3: 1 2 4\n4: 1 3 2\n");
    let o = plantw(&["latching", "-i", &gr, "--embedding", &good]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 6);
    let short = file(&dir, "short.rot", "1: 2 3\n2: 1 4 3\n3: 1 2 4\n4: 1 3 2\n");
    assert_eq!(plantw(&["pmcs", "-i", &gr, "--embedding", &short]).status.code(), Some(2));
    let twisted = file(&dir, "twisted.rot", "1: 2 3 4\n2: 1 3 4\n3: 1 2 4\n4: 1 2 3\n");
    assert_eq!(plantw(&["pmcs", "-i", &gr, "--embedding", &twisted]).status.code(), Some(2));
}

#[test]
fn chordless_paths_and_minseps() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.gr", C4);
    let o = plantw(&["chordless-paths", "-i", &c4, "--from", "1", "--to", "3"]);
    let mut lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    lines.sort();
    assert_eq!(lines, ["1 2 3", "1 4 3"]);
    let oct = file(&dir, "oct.gr", OCTAHEDRON);
    let mut fast: Vec<String> = stdout(&plantw(&["minseps", "-i", &oct])).lines().map(str::to_owned).collect();
    let slow: Vec<String> = stdout(&plantw(&["oracle", "minseps", "-i", &oct])).lines().map(str::to_owned).collect();
    fast.sort();
    assert_eq!(fast, slow);
}

#[test]
fn corpus_dump_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("corpus");
    let o = plantw(&["corpus", "--max-n", "8", "--seed", "7", "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    let again = plantw(&["corpus", "--max-n", "8", "--seed", "7"]);
    assert_eq!(o.stdout, again.stdout);
    assert!(Path::new(&out.join("cube.gr")).exists());
    let cube = out.join("cube.gr");
    let tw = plantw(&["tw", "-i", cube.to_str().unwrap()]);
    assert_eq!(stdout(&tw), "3\n");
}
