use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    run_env(args, stdin, &[])
}

fn run_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rid-lab"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn gen_t4k() {
    let o = run(&["gen", "--family", "T4k", "--params", "k=2"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let sc: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(sc["predicted_rid"], 6);
    assert_eq!(sc["graph6"], lines[0]);
    assert_eq!(sc["n"], 9);
}

#[test]
fn gen_round_trips_through_solve() {
    for (family, params) in [
        ("J.T2", ""),
        ("T4", ""),
        ("realize", "a=4,b=6"),
        ("omega", "x=2,y=3"),
        ("psi", "k=3"),
        ("theta", "k=2"),
        ("terminal_n", "n=5"),
    ] {
        let mut args = vec!["gen", "--family", family];
        if !params.is_empty() {
            args.extend(["--params", params]);
        }
        let o = run(&args, "");
        assert_eq!(o.status.code(), Some(0), "{family}");
        let text = stdout(&o);
        let lines: Vec<&str> = text.lines().collect();
        for pair in lines.chunks(2) {
            let sc: serde_json::Value = serde_json::from_str(pair[1]).unwrap();
            let solved = run(&["solve", "--format", "json"], pair[0]);
            let r = &json_lines(&solved)[0];
            assert_eq!(r["gamma_rI"], sc["predicted_rid"], "{family} {}", pair[0]);
        }
    }
}

#[test]
fn gen_sidecar_file_and_gadget() {
    let path = std::env::temp_dir().join(format!("rid-lab-sidecar-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let o = run(
        &["gen", "--family", "GADGET", "--base", "Bw", "--sidecar", p],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
    let sc: serde_json::Value =
        serde_json::from_str(std::fs::read_to_string(&path).unwrap().trim()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(sc["name"], "GADGET");
    assert_eq!(sc["n"], 24);
    assert_eq!(sc["predicted_rid"], 16);
}

#[test]
fn solve_p4_and_flags() {
    let o = run(
        &[
            "solve",
            "--in",
            "-",
            "--format",
            "json",
            "--gamma",
            "--gamma-r",
            "--gamma-rr",
        ],
        "Ch\n",
    );
    assert_eq!(o.status.code(), Some(0));
    let r = &json_lines(&o)[0];
    assert_eq!(r["n"], 4);
    assert_eq!(r["gamma_rI"], 4);
    assert_eq!(r["gamma"], 2);
    assert_eq!(r["gamma_r"], 2);
    assert!(r["witness"].as_str().unwrap().len() == 4);
    let text = stdout(&run(&["solve", "--tree-dp"], "Ch\n"));
    assert!(text.contains("gamma_rI=4"), "{text}");
}

#[test]
fn solve_reads_files_and_skips_blank_lines() {
    let path = std::env::temp_dir().join(format!("rid-lab-input-{}.g6", std::process::id()));
    std::fs::write(&path, ">>graph6<<A_\n\nBg\n").unwrap();
    let o = run(
        &["solve", "--in", path.to_str().unwrap(), "--format", "json"],
        "",
    );
    std::fs::remove_file(&path).unwrap();
    let rs = json_lines(&o);
    assert_eq!(rs.len(), 2);
    assert_eq!(rs[0]["gamma_rI"], 2);
    assert_eq!(rs[1]["gamma_rI"], 3);
}

#[test]
fn bad_input_exits_two() {
    let o = run(&["solve"], "Ch\nD?\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(
        run(&["solve", "--tree-dp"], "Bw\nCr\n").status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["solve", "--in", "/nonexistent/file"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["check", "--theorem", "nope", "--max-n", "3"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["check", "--theorem", "sandwich", "--max-n", "40"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["gen", "--family", "T4k"], "").status.code(), Some(2));
    assert_eq!(
        run(&["gen", "--family", "T4k", "--params", "k=x"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["gen", "--family", "T4k", "--params", "q=2"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["gen", "--family", "realize", "--params", "a=2,b=3"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["gen", "--family", "nope"], "").status.code(), Some(2));
    assert_eq!(
        run(&["enumerate", "--class", "trees", "--n", "0"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn check_passes_and_reports_json() {
    let o = run(&["check", "--theorem", "gadget", "--max-n", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["schema"], "rid-lab/1");
    assert_eq!(r["pass"], true);
    assert_eq!(r["instances_checked"], 4);
}

#[test]
fn check_with_counterexamples_exits_one() {
    let o = run_env(
        &[
            "check",
            "--theorem",
            "rid-eq-3",
            "--max-n",
            "5",
            "--format",
            "json",
        ],
        "",
        &[("RID_LAB_JOBS", "3")],
    );
    assert_eq!(o.status.code(), Some(1));
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["pass"], false);
    assert_eq!(r["counterexample_count"], 2);
    let seq = run(
        &[
            "check",
            "--theorem",
            "rid-eq-3",
            "--max-n",
            "5",
            "--jobs",
            "1",
        ],
        "",
    );
    let s: serde_json::Value = serde_json::from_str(&stdout(&seq)).unwrap();
    assert_eq!(s["counterexamples"], r["counterexamples"]);
}

#[test]
fn reduce_with_verify() {
    let o = run(&["reduce", "--verify"], "A_\nBw\nC~\n");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    let check: serde_json::Value = serde_json::from_str(lines[3]).unwrap();
    assert_eq!(check["claimed"], 16);
    assert_eq!(check["method"], "direct");
    assert_eq!(check["holds"], true);
    let last: serde_json::Value = serde_json::from_str(lines[5]).unwrap();
    assert_eq!(last["method"], "certificate");
    assert_eq!(last["holds"], true);
    let plain = stdout(&run(&["reduce"], "A_\n"));
    assert_eq!(plain.lines().count(), 1);
    assert!(plain.starts_with('O'), "16 vertices encode as 'O': {plain}");
}

#[test]
fn enumerate_counts() {
    let trees = stdout(&run(&["enumerate", "--class", "trees", "--n", "10"], ""));
    assert_eq!(trees.lines().count(), 106);
    let conn = stdout(&run(&["enumerate", "--class", "connected", "--n", "5"], ""));
    assert_eq!(conn.lines().count(), 21);
}
