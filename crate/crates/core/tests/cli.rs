use std::fs;
use std::process::{Command, Output};

fn synchro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_synchro"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("synchro-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn sync_reports_json() {
    let out = synchro(&["sync", "catalog:shift2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["synchronizing"], true);
    assert_eq!(v["level"], 1);
    assert_eq!(v["core_states"], serde_json::json!(["a1", "a2"]));
    for key in ["core_dist", "bisync_level", "one_way"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn growth_csv() {
    let out = synchro(&["growth", "catalog:g_h3", "--max-power", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,core_size,min_core_size,sync_level,core_dist,conjecture_ok"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|r| r.ends_with(",true")));

    let out = synchro(&["growth", "catalog:shift2", "--max-power", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["records"][4]["min_core_size"], 32);
    assert_eq!(v["classification"]["class"], "exponential");
}

#[test]
fn catalog_prefix_matches_exported_file() {
    let path = tmp("g.tdx");
    let out = synchro(&["catalog", "get", "g_h3", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for cmd in [&["info"][..], &["min-core"], &["power", "-m", "3"], &["sync"]] {
        let mut a: Vec<&str> = cmd.to_vec();
        a.push("catalog:g_h3");
        let mut b: Vec<&str> = cmd.to_vec();
        b.push(path.to_str().unwrap());
        assert_eq!(synchro(&a).stdout, synchro(&b).stdout, "{cmd:?}");
    }
}

#[test]
fn machine_commands_round_trip() {
    let inv = synchro(&["invert", "catalog:oneway2"]);
    let path = tmp("inv.tdx");
    fs::write(&path, &inv.stdout).unwrap();
    let back = synchro(&["invert", path.to_str().unwrap()]);
    assert_eq!(stdout(&back), stdout(&synchro(&["catalog", "get", "oneway2"])));

    let sq = synchro(&["compose", "catalog:shift2", "catalog:shift2"]);
    assert!(stdout(&sq).contains("states a1.a1 a1.a2 a2.a1 a2.a2"));
    let raw = synchro(&["power", "catalog:shift2", "-m", "3", "--raw"]);
    assert!(stdout(&raw).lines().nth(1).unwrap().split_whitespace().count() == 9);
    assert_eq!(synchro(&["dual", "catalog:g_h3"]).status.code(), Some(0));
    assert_eq!(synchro(&["minimize", "catalog:dummy"]).status.code(), Some(0));
    let core = synchro(&["core", "catalog:shift2", "--tdx"]);
    assert!(stdout(&core).starts_with("alphabet 2\n"));
    assert_eq!(synchro(&["conjugate", "catalog:g_h3", "catalog:family_1"]).status.code(), Some(0));
}

#[test]
fn maps_and_numbers() {
    let v: serde_json::Value =
        serde_json::from_slice(&synchro(&["level-map", "catalog:g_h3", "-k", "1"]).stdout).unwrap();
    assert_eq!(v["mapping"], serde_json::json!({"0": "0", "1": "2", "2": "1"}));
    let v: serde_json::Value =
        serde_json::from_slice(&synchro(&["act", "catalog:shift2", "--cycle", "01"]).stdout).unwrap();
    assert_eq!(v["image"], "(10)");
    assert_eq!(stdout(&synchro(&["sigma", "1", "3"])), "6\n");
    assert_eq!(stdout(&synchro(&["sigma", "30", "30"])), "114449595062769120\n");
    assert_eq!(stdout(&synchro(&["solve-prefix", "0"])), "1\n");
    let out = synchro(&["dummy", "verify", "--max-i", "6", "--k", "6"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn exit_codes() {
    assert_eq!(synchro(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(synchro(&["sync"]).status.code(), Some(2));
    assert_eq!(synchro(&["sync", "/no/such/file.tdx"]).status.code(), Some(2));
    assert_eq!(synchro(&["sync", "catalog:nope"]).status.code(), Some(2));
    let bad = tmp("bad.tdx");
    fs::write(&bad, "alphabet 2\nstates a\na 0 0 a\n").unwrap();
    let out = synchro(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    // Operation failures on valid input exit with 1.
    assert_eq!(synchro(&["invert", "catalog:shift2"]).status.code(), Some(1));
    assert_eq!(synchro(&["min-core", "catalog:dummy"]).status.code(), Some(1));
    // The identity never reaches |min Core| >= m.
    let id = tmp("id.tdx");
    fs::write(&id, "alphabet 2\nstates e\ne 0 0 e\ne 1 1 e\n").unwrap();
    assert_eq!(synchro(&["growth", id.to_str().unwrap(), "--max-power", "4"]).status.code(), Some(1));
}

#[test]
fn raw_power_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_synchro"))
        .args(["power", "catalog:shift2", "-m", "6", "--raw"])
        .env("SYNCHRO_MAX_STATES", "32")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("64"));
}

#[test]
fn catalog_listing_and_family() {
    let list = stdout(&synchro(&["catalog", "list"]));
    for name in ["shift2", "oneway2", "h4exp", "g_h3", "dummy"] {
        assert!(list.contains(name), "{name}");
    }
    let fam = stdout(&synchro(&["catalog", "family", "-i", "3"]));
    assert!(fam.contains("states a0 a1 a2 a3"));
}

#[test]
fn verify_single_experiment() {
    let out = synchro(&["verify", "--suite", "sigma-identities", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("PASS  7 sigma-identities"));
    let json_start = text.find('[').unwrap();
    let reports: serde_json::Value = serde_json::from_str(&text[json_start..]).unwrap();
    assert_eq!(reports[0]["passed"], true);
    assert_eq!(synchro(&["verify", "--suite", "nope"]).status.code(), Some(2));
}
