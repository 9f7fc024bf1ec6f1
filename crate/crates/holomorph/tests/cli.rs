use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holomorph"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn aut_of_d8() {
    let o = run(&["aut", "D8"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("order: 32\n"));
}

#[test]
fn identify_self_match() {
    let o = run(&["identify", "Z8 : Z2 [r^5]"]);
    assert_eq!(stdout(&o).trim(), "Z8 : Z2 [r^5]");
    assert_eq!(stdout(&run(&["identify", "Hol5"])).trim(), "Z5 : Z4 [r^2]");
}

#[test]
fn iso_exit_codes() {
    assert_eq!(run(&["iso", "Z6", "Z2 x Z3"]).status.code(), Some(0));
    assert_eq!(run(&["iso", "Z4", "Z2 x Z2"]).status.code(), Some(1));
}

#[test]
fn error_exit_codes() {
    let o = run(&["info", "Z8 x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 4"));
    assert_eq!(run(&["info", "Z8 : Z2 [r^2]"]).status.code(), Some(2));
    assert_eq!(run(&["aut", "Z2 x Z2 x Z2 x Z2"]).status.code(), Some(3));
    assert_eq!(run(&["table", "Z5000"]).status.code(), Some(3));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn info_and_homs() {
    let o = stdout(&run(&["info", "D4"]));
    assert_eq!(
        o,
        "order: 8\nabelian: false\ncenter: 2\nspectrum: 1:1 2:5 4:2\n"
    );
    let o = stdout(&run(&["homs", "Z4", "Z5", "--actions"]));
    assert!(o.contains("actions: 4 in 3 classes"));
    assert!(o.contains("class 1 (size 2): #1 #2"));
}

#[test]
fn table_json_reimports() {
    let o = run(&["table", "D3", "--json"]);
    let text = stdout(&o);
    let dir = std::env::temp_dir().join(format!("holomorph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d3.json");
    std::fs::write(&path, text).unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(stdout(&run(&["identify", &arg])).trim(), "D3");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_exit_status_tracks_failures() {
    let o = run(&["verify-paper", "--max-n", "6", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert!(rows.iter().all(|r| r["status"] != "fail"));
    for key in ["claim", "status", "expected", "actual", "ms"] {
        assert!(rows[0].get(key).is_some());
    }
    let o = run(&[
        "verify-paper",
        "--max-n",
        "6",
        "--json",
        "--inject-fault",
        "wrong-formula",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().any(|r| r["status"] == "fail"));
}
