use std::process::{Command, Output};

fn naqft(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_naqft")).args(args).env_remove("NAQFT_TOLERANCE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_bt_passes() {
    let o = naqft(&["verify", "--group", "bt", "--arch", "mixed"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["group"], "BT");
    assert_eq!(v["block_sizes"].as_array().unwrap().len(), 7);
}

#[test]
fn synthesize_then_verify_round_trip() {
    let dir = std::env::temp_dir().join(format!("naqft-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.json");
    let p = path.to_str().unwrap();
    let o = naqft(&["synthesize", "--group", "d27", "--arch", "qubit", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let first = std::fs::read_to_string(&path).unwrap();
    let c = circuit_ir::json::from_json(&first).unwrap();
    assert_eq!(circuit_ir::json::to_json(&c), first);
    assert_eq!(naqft(&["verify", "--in", p]).status.code(), Some(0));
    let again = naqft(&["synthesize", "--group", "d27", "--arch", "qubit"]);
    assert_eq!(stdout(&again), first);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn simcost_row() {
    let o = naqft(&["simcost", "--group", "bt", "--impl", "fft", "--d", "3", "--epsilon", "1e-10"]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 18150.6).abs() < 0.5);
    let o = naqft(&["simcost", "--group", "d27", "--impl", "fft", "--d", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_csv() {
    let o = naqft(&["oracle", "--group", "z2"]);
    assert_eq!(
        stdout(&o),
        "0.707106781186548+0.000000000000000j,0.707106781186548+0.000000000000000j\n\
         0.707106781186548+0.000000000000000j,-0.707106781186548+0.000000000000000j\n"
    );
    let o = naqft(&["oracle", "--group", "q8", "--format", "text"]);
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(naqft(&["verify", "--group", "bt", "--bogus"]).status.code(), Some(2));
    assert_eq!(naqft(&["verify", "--group", "e8"]).status.code(), Some(2));
    assert_eq!(naqft(&["verify"]).status.code(), Some(2));
    assert_eq!(naqft(&["verify", "--in", "/nonexistent/c.json"]).status.code(), Some(2));
    assert_eq!(naqft(&["simcost", "--group", "bt", "--impl", "fft", "--d", "3", "--epsilon", "2"]).status.code(), Some(2));
}

#[test]
fn tolerance_from_environment() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_naqft"));
        c.args(["verify", "--group", "q8"]).args(extra);
        match env {
            Some(v) => c.env("NAQFT_TOLERANCE", v),
            None => c.env_remove("NAQFT_TOLERANCE"),
        };
        c.output().unwrap().status.code()
    };
    assert_eq!(run(None, &[]), Some(0));
    assert_eq!(run(Some("1e-300"), &[]), Some(1));
    assert_eq!(run(Some("1e-300"), &["--tolerance", "1e-9"]), Some(0));
}

#[test]
fn resources_table() {
    let o = naqft(&["resources", "--group", "d27", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().next().unwrap(), "group,impl,source,a,b,width,ancilla,T(eps)");
    assert!(s.contains("D27,FFT,paper,168,80.5,4,2,2842.2"));
    assert!(s.contains("D27,FFT,ours,"));
}

#[test]
fn chain_report_passes() {
    let o = naqft(&["chain-report"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 10);
    let order: Vec<&str> = s.lines().skip(1).map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(order, ["Z2", "Z4", "Q8", "BT", "BO", "Z3xZ3", "D27", "D54", "S36x3"]);
}
