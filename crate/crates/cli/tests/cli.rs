use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_graphzeta"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ihara_lines() {
    let o = run(&["invariants", "--ihara"], "Bw\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ihara\t1,0,0,-2,0,0,1\n");
    // a tree
    let o = run(&["invariants", "--ihara"], "Cs\n");
    assert_eq!(stdout(&o), "ihara\t1\n");
}

#[test]
fn phi_adj_agrees_on_the_nine_vertex_pair() {
    let a = run(&["invariants", "--phi-adj"], "HheadXZ\n");
    let b = run(&["invariants", "--phi-adj"], "Hhf@eS|\n");
    assert!(stdout(&a).starts_with("phi_adj\t"));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn bad_graph6_exits_2() {
    let o = run(&["invariants"], "B\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn census_rows_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = run(
        &["--threads", "2", "census", "-n", "6", "--methods", "Z,ZZbar,T,TTbar", "--outdir", out],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let t1 = std::fs::read_to_string(dir.path().join("table1.tsv")).unwrap();
    assert_eq!(t1.lines().nth(1), Some("6\t156\t94\t22\t75\t0"));
    let m = std::fs::read_to_string(dir.path().join("manifest.txt")).unwrap();
    assert!(m.contains("source_sha256\t"));
    assert!(dir.path().join("classes-n6-Z.tsv").exists());

    let o = run(&["census", "-n", "5", "--methods", "A"], "");
    assert!(stdout(&o).contains("5\tA\t34\t2\t2:1\n"));
    let o = run(&["census", "-n", "4", "--methods", "PhiADJ"], "");
    assert!(stdout(&o).contains("4\tPhiADJ\t11\t0\t"));
    let o = run(&["census", "-n", "4", "--methods", "Nope"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn census_catalog_with_duplicates_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("cat.g6");
    std::fs::write(&cat, "Bg\nBW\n").unwrap();
    let o = run(
        &["census", "-n", "3", "--methods", "Z", "--catalog", cat.to_str().unwrap()],
        "",
    );
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn switching_modes() {
    let o = run(&["switch", "find-gm-star", "J?BD?oX[F[?", "--k-max", "2"], "");
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 1);
    let f: Vec<&str> = s.trim_end().split('\t').collect();
    assert_eq!(f.len(), 4);
    assert_eq!(f[2], "3gm*");
    let o = run(&["switch", "find-gm-star", "J?BD?oX[F[?"], "");
    assert_eq!(stdout(&o), "");
    let o = run(&["switch", "apply", "D~{", "--blocks", "0,1,9"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["switch", "apply", "D~{", "--blocks", "0,x"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "bass-hashimoto", "-n", "6"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("bass-hashimoto\tPASS"));
    let o = run(&["verify", "paper-examples"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "oracle", "-n", "5"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = run(&["verify", "nonsense"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn generate_counts() {
    let o = run(&["generate", "-n", "5"], "");
    assert_eq!(stdout(&o).lines().count(), 34);
    let o = run(&["generate", "-n", "6", "--filter", "md2"], "");
    assert_eq!(stdout(&o).lines().count(), 62);
}
