use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topobelief"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const SIERPINSKI: &str =
    r#"{"opens":[[],[0],[0,1]],"type":"subset","valuation":{"p":[0]},"worlds":2}"#;
const PIN: &str = r#"{"rel":[[0,1],[1,1]],"type":"relational","valuation":{"p":[1]},"worlds":2}"#;

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn eval_reports_truth_through_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(&dir, "sierp.json", SIERPINSKI);
    let o = bin(&[
        "eval",
        "--model",
        &model,
        "--scenario",
        "x=1;U=0,1",
        "--semantics",
        "strong",
        "--formula",
        "B p & !p",
    ]);
    assert_eq!(stdout(&o), "true\n");
    assert_eq!(o.status.code(), Some(0));
    let o = bin(&[
        "eval",
        "--model",
        &model,
        "--scenario",
        "x=1;U=0,1",
        "--formula",
        "K p",
    ]);
    assert_eq!(stdout(&o), "false\n");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_two_and_name_the_flag() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(&dir, "sierp.json", SIERPINSKI);
    let o = bin(&[
        "eval",
        "--model",
        &model,
        "--scenario",
        "x=1;U=0,1",
        "--formula",
        "p &",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--formula"));

    let o = bin(&[
        "valid",
        "--model",
        &model,
        "--formula",
        "p",
        "--semantics",
        "strong",
        "--class",
        "dense",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--class"));

    let o = bin(&[
        "eval",
        "--model",
        &model,
        "--scenario",
        "x=1;U=0,1;V=0",
        "--formula",
        "p",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--scenario"));

    assert_eq!(bin(&["suite", "--name", "stal_t"]).status.code(), Some(2));
    assert_eq!(bin(&["enumerate", "--max-n", "5"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bin(&["eval", "--formula", "p"]).status.code(), Some(2));
}

#[test]
fn valid_prints_witness() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(&dir, "sierp.json", SIERPINSKI);
    let o = bin(&["valid", "--model", &model, "--formula", "B p -> p"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid\nscenario: x=1;U=0,1\n"));
    let o = bin(&[
        "valid",
        "--model",
        &model,
        "--formula",
        "B p <-> K dia box p",
    ]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "valid\n"));
}

#[test]
fn countermodel_round_trips_through_eval() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("witness.json");
    let out_s = out.to_string_lossy().into_owned();
    let o = bin(&[
        "countermodel",
        "--formula",
        "!box p -> box !box p",
        "--semantics",
        "strong",
        "--exhaustive",
        "3",
        "--out",
        &out_s,
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let scenario = text
        .lines()
        .find_map(|l| l.strip_prefix("scenario: "))
        .unwrap();
    let o = bin(&[
        "eval",
        "--model",
        &out_s,
        "--scenario",
        scenario,
        "--formula",
        "!(!box p -> box !box p)",
    ]);
    assert_eq!(stdout(&o), "true\n");

    let o = bin(&["countermodel", "--formula", "K p -> p", "--exhaustive", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("no countermodel"));
}

#[test]
fn suite_runs_are_byte_identical() {
    let a = bin(&[
        "suite",
        "--name",
        "kd45_b",
        "--exhaustive",
        "2",
        "--models",
        "5",
        "--seed",
        "9",
        "--json",
    ]);
    let b = bin(&[
        "suite",
        "--name",
        "kd45_b",
        "--exhaustive",
        "2",
        "--models",
        "5",
        "--seed",
        "9",
        "--json",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suite"], "KD45_B");
    assert_eq!(v["semantics"], "strong");

    let o = bin(&[
        "suite",
        "--name",
        "el_kboxb_d",
        "--class",
        "all",
        "--exhaustive",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("D_B"));
}

#[test]
fn convert_decompose_enumerate() {
    let dir = tempfile::tempdir().unwrap();
    let pin = write(&dir, "pin.json", PIN);
    let o = bin(&["convert", "--model", &pin]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"opens\":[[],[1],[0,1]],\"type\":\"subset\",\"valuation\":{\"p\":[1]},\"worlds\":2}\n"
    );

    let o = bin(&["decompose", "--model", &pin]);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(0), "cell {0,1} final cluster {1}\n")
    );

    let o = bin(&["enumerate", "--max-n", "4"]);
    assert_eq!(
        stdout(&o),
        "n=1: 1 topologies\nn=2: 4 topologies\nn=3: 29 topologies\nn=4: 355 topologies\n"
    );

    let sierp = write(&dir, "sierp.json", SIERPINSKI);
    assert_eq!(
        bin(&["decompose", "--model", &sierp]).status.code(),
        Some(2)
    );
}
