use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const GAL_RING: &str = r#"{"p":2,"n":2,"r":2,"k":2,"t":1,"g_tail":[1,0],"f":[1,1,1]}"#;
const EIS_RING: &str = r#"{"p":2,"n":2,"r":1,"k":2,"t":1,"g_tail":[1,0]}"#;

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("chain-codes-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

fn gal_code() -> String {
    format!(r#"{{"family":"galois","ring":{GAL_RING},"N":3,"e":[[0,2],[1,3]]}}"#)
}

fn eis_code() -> String {
    format!(r#"{{"family":"eisenstein","ring":{EIS_RING},"N":3,"a":[[1,1,0],[0,1,0]]}}"#)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chain-codes")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn ring_info_reports_tower() {
    let ring = scratch("gal_ring.json", GAL_RING);
    let out = run(&["ring", "info", "--ring", path(&ring)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["m"], 3);
    assert_eq!(v["log_p_size"], 6);
    let degrees: Vec<&str> = v["tower"].as_array().unwrap().iter().map(|e| e["degree"].as_str().unwrap()).collect();
    assert_eq!(degrees, ["2", "3/2", "3/2", "2"]);

    let z4 = scratch("z4.json", r#"{"p":2,"n":2,"r":1,"k":1,"t":1,"g_tail":[1]}"#);
    let v = json(&run(&["ring", "info", "--ring", path(&z4)]));
    assert_eq!((v["m"].as_u64(), v["log_p_size"].as_u64()), (Some(2), Some(2)));
    assert_eq!(v["chain_lengths"]["Z"], 2);

    let eis = scratch("eis_ring.json", EIS_RING);
    let v = json(&run(&["ring", "info", "--ring", path(&eis)]));
    assert_eq!(v["log_p_size"], 3);
}

#[test]
fn cosets_and_idempotents() {
    let ring = scratch("gal_ring2.json", GAL_RING);
    let v = json(&run(&["cosets", "--ring", path(&ring), "--N", "3"]));
    assert_eq!(v["leaders"], serde_json::json!([0, 1]));
    let v = json(&run(&["idempotents", "--ring", path(&ring), "--N", "3"]));
    assert_eq!(v["eps"][0]["text"], "3X^2 + 3X + 3");
    assert_eq!(v["eps_split"]["1,0"]["text"], "3wX^2 + (1 + w)X + 3");
    assert_eq!(v["m_polys"]["1,1"]["text"], "X + (1 + w)");
    assert_eq!(v["mu_perm"], serde_json::json!([0, 1]));
}

#[test]
fn code_commands_on_the_worked_examples() {
    let gal = scratch("gal_code.json", &gal_code());
    let eis = scratch("eis_code.json", &eis_code());
    let v = json(&run(&["code", "build", "--code", path(&gal)]));
    assert_eq!(v["log_p_card"], 8);
    let v = json(&run(&["code", "build", "--code", path(&eis)]));
    assert_eq!(v["log_p_card"], 5);

    let out = run(&["code", "dual", "--code", path(&gal)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["dual_log_p_card"].as_u64(), v["counting_identity"].as_bool()), (Some(10), Some(true)));
    assert_eq!(v["self_dual"], false);
    // the dual spec is itself a valid input
    let dual_spec = scratch("gal_dual.json", &v["dual_spec"].to_string());
    let back = json(&run(&["code", "dual", "--code", path(&dual_spec)]));
    assert_eq!(back["dual_spec"], v["spec"]);

    let v = json(&run(&["code", "dual", "--code", path(&eis)]));
    assert_eq!(v["dual_log_p_card"], 4);

    let v = json(&run(&["code", "weights", "--code", path(&eis)]));
    let total: u64 = v["weights"].as_object().unwrap().values().map(|c| c.as_u64().unwrap()).sum();
    assert_eq!(total, 32);
}

#[test]
fn verify_exit_codes() {
    let gal = scratch("gal_code_v.json", &gal_code());
    let eis = scratch("eis_code_v.json", &eis_code());
    for code in [&gal, &eis] {
        let out = run(&["verify", "--code", path(code)]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json(&out)["verdict"], "pass");
    }
    let even = scratch("even.json", &format!(r#"{{"family":"eisenstein","ring":{EIS_RING},"N":2,"a":[[1,0,0]]}}"#));
    let out = run(&["verify", "--code", path(&even)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd"));
    let out = run(&["verify", "--code", path(&gal), "--cap", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_with_two() {
    let bad = scratch("bad.json", r#"{"family":"galois","ring":{"p":4}}"#);
    let out = run(&["code", "build", "--code", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let shape = scratch("shape.json", &format!(r#"{{"family":"galois","ring":{GAL_RING},"N":3,"e":[[0,2]]}}"#));
    assert_eq!(run(&["code", "build", "--code", path(&shape)]).status.code(), Some(2));
    let not_prime = scratch("np.json", r#"{"p":4,"n":2,"r":1,"k":1,"t":1,"g_tail":[1]}"#);
    assert_eq!(run(&["ring", "info", "--ring", path(&not_prime)]).status.code(), Some(2));
    let rank_two =
        scratch("rank2.json", &format!(r#"{{"family":"eisenstein","ring":{GAL_RING},"N":3,"a":[[1,0,0],[0,0,0]]}}"#));
    assert_eq!(run(&["code", "build", "--code", path(&rank_two)]).status.code(), Some(2));
    assert_eq!(run(&["cosets"]).status.code(), Some(2));
}

#[test]
fn chars_and_out_flag() {
    let eis = scratch("eis_ring_c.json", EIS_RING);
    let target = eis.with_file_name("chars_out.json");
    let out = run(&["chars", "--ring", path(&eis), "--out", path(&target)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(v["table"].as_array().unwrap().len(), 8);
    assert_eq!(v["modulus"], 4);
}

#[test]
fn output_is_deterministic() {
    let gal = scratch("gal_code_d.json", &gal_code());
    let a = run(&["code", "build", "--code", path(&gal)]);
    let b = run(&["code", "build", "--code", path(&gal)]);
    assert_eq!(a.stdout, b.stdout);
}
