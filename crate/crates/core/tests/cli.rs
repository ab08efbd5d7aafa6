use std::path::PathBuf;
use std::process::{Command, Output};

fn seqconv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seqconv"))
        .args(args)
        .env_remove("SEQCONV_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("seqconv-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn eval_prints_exact_values() {
    let o = seqconv(&["eval", "--sequence", "jacobsthal", "--index", "-1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1/2\n");
    assert_eq!(
        stdout(&seqconv(&["eval", "--sequence", "lucas_balancing", "--index", "2"])),
        "17\n"
    );
    let custom = seqconv(&["eval", "--params", "3,-7,2,5", "--index", "1", "--binet"]);
    assert_eq!(stdout(&custom), "-7\n");
}

#[test]
fn eval_rejects_bad_input() {
    let degenerate = seqconv(&["eval", "--params", "1,1,2,1", "--index", "3", "--binet"]);
    assert_eq!(degenerate.status.code(), Some(2));
    assert!(stderr(&degenerate).starts_with("error:"));
    assert_eq!(
        seqconv(&["eval", "--params", "0,1,1,0", "--index", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        seqconv(&["eval", "--sequence", "tribonacci", "--index", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn cheb_prints_coefficients_and_values() {
    assert_eq!(
        stdout(&seqconv(&["cheb", "--kind", "t", "--degree", "3"])),
        "[0, -3, 0, 4]\n"
    );
    assert_eq!(stdout(&seqconv(&["cheb", "--kind", "u", "--degree", "-1"])), "[]\n");
    assert_eq!(
        stdout(&seqconv(&["cheb", "--kind", "u", "--degree", "2", "--at", "1/2"])),
        "0\n"
    );
}

#[test]
fn conv_plain_and_weighted() {
    assert_eq!(
        stdout(&seqconv(&["conv", "--x", "P", "--y", "Q", "--r", "1", "--n", "2"])),
        "6\n"
    );
    let w = seqconv(&[
        "conv", "--x", "F", "--y", "L", "--r", "1", "--n", "2", "--weight", "cheb_tt",
    ]);
    assert!(w.status.success(), "{}", stderr(&w));
    assert!(stdout(&w).starts_with('['));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        seqconv(&["verify", "--tag", "classical", "--n", "0..10"]).status.code(),
        Some(0)
    );
    let printed = seqconv(&["verify", "--tag", "as-printed", "--no-header"]);
    assert_eq!(printed.status.code(), Some(1));
    assert!(stdout(&printed).contains("counterexample fib_pell_printed: r = 1, n = 2, lhs = -2, rhs = -1"));
    assert_eq!(seqconv(&["verify"]).status.code(), Some(2));
    assert_eq!(seqconv(&["verify", "--all", "--n", "5..1"]).status.code(), Some(2));
    assert_eq!(seqconv(&["verify", "--all", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(seqconv(&["--help"]).status.code(), Some(0));
}

#[test]
fn fail_fast_stops_at_first_failure() {
    let o = seqconv(&[
        "verify",
        "--id",
        "fib_pell_r2",
        "--r",
        "2",
        "--fail-fast",
        "--no-header",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert!(lines.last().unwrap().contains("\"status\":\"fail\""));
    assert!(stderr(&o).contains("stopped"));
}

#[test]
fn json_report_lines() {
    let o = seqconv(&[
        "verify",
        "--id",
        "classic_lucas_fib",
        "--r",
        "1",
        "--n",
        "0..2",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0]["header"]["identities"], 1);
    assert_eq!(lines[3]["identity"], "classic_lucas_fib");
    assert_eq!(lines[3]["n"], 2);
    assert_eq!(lines[3]["status"], "pass");
    assert_eq!(lines[3]["lhs"], "3");
    assert!(stderr(&o).starts_with("summary: 1 identities, 3 cells: 3 pass"));
}

#[test]
fn csv_report_has_header_row() {
    let o = seqconv(&[
        "verify",
        "--id",
        "cheb_tu",
        "--r",
        "1",
        "--n",
        "1",
        "--format",
        "csv",
        "--no-header",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("identity,r,n,status,lhs,rhs,reason"));
    assert!(rows.next().unwrap().starts_with("cheb_tu,1,1,pass,"));
}

#[test]
fn workers_from_environment() {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_seqconv"))
            .args(["verify", "--tag", "horadam", "--no-header"])
            .env("SEQCONV_WORKERS", workers)
            .output()
            .unwrap()
    };
    let (one, four) = (run("1"), run("4"));
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(run("many").status.code(), Some(2));
}

#[test]
fn config_file_supplies_defaults() {
    let cfg = scratch(
        "ok.toml",
        "ids = [\"classic_pell_fib\"]\nr = \"1\"\nn = \"0..3\"\nformat = \"csv\"\nno_header = true\n",
    );
    let o = seqconv(&["verify", "--config", cfg.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 5);
    // Flags override the file.
    let o = seqconv(&[
        "verify",
        "--config",
        cfg.to_str().unwrap(),
        "--n",
        "0",
        "--format",
        "json",
    ]);
    assert_eq!(stdout(&o).lines().count(), 1);

    let bad = scratch("bad.toml", "colour = \"blue\"\n");
    let o = seqconv(&["verify", "--all", "--config", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let _ = std::fs::remove_file(cfg);
    let _ = std::fs::remove_file(bad);
}

#[test]
fn list_shows_catalog() {
    let o = seqconv(&["list", "--tag", "classical", "--format", "json"]);
    assert!(o.status.success());
    let ids: Vec<String> = stdout(&o)
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["id"]
                .as_str()
                .unwrap()
                .to_owned()
        })
        .collect();
    assert_eq!(ids.len(), 7);
    assert!(ids.iter().all(|id| id.starts_with("classic_")));
}
