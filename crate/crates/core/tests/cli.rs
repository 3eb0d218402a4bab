use std::process::{Command, Output};

fn qtm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtm"))
        .args(args)
        .env_remove("QTM_CONSTANTS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn table2_prints_boundaries() {
    let o = qtm(&["table2", "--theta-sq", "5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for v in ["0.447214", "1.000000", "2.236068"] {
        assert!(text.contains(v), "{text}");
    }
    let o = qtm(&["table2", "--theta-sq", "5", "--rounded"]);
    let text = stdout(&o);
    assert!(text.contains("0.45") && text.contains("2.24"), "{text}");
}

#[test]
fn efficiency_of_engine() {
    let o = qtm(&["efficiency", "--design", "QEN", "--alpha-sq", "2", "--theta-sq", "5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("efficiency: 0.5"), "{text}");
    assert!(text.contains("carnot_efficiency: 0.8"), "{text}");
}

#[test]
fn classify_engine_exchange() {
    let o = qtm(&["classify", "--e-high", "2", "--e-low", "-1", "--theta-sq", "5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("region: OutTransfers"), "{text}");
    assert!(text.contains("designs: QEN,QLL"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(qtm(&["table2", "--theta-sq", "0.5"]).status.code(), Some(1));
    assert_eq!(qtm(&["classify", "--e-high", "1", "--e-low", "1", "--theta-sq", "5"]).status.code(), Some(1));
    assert_eq!(qtm(&["bogus"]).status.code(), Some(1));
    assert_eq!(qtm(&["sweep", "--config", "/nonexistent/cfg.json"]).status.code(), Some(2));
}

#[test]
fn sweep_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"rho_points": 50}"#).unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = qtm(&["sweep", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        std::fs::read_to_string(out).unwrap()
    };
    let a = run("a.csv");
    let b = run("b.csv");
    assert_eq!(a, b);
    // header plus 50 grid points plus 3 injected boundaries
    assert_eq!(a.lines().count(), 54);
    assert!(dir.path().join("a_curves.csv").exists());

    let bad = dir.path().join("missing-dir").join("out.csv");
    let o = qtm(&["sweep", "--config", cfg.to_str().unwrap(), "--out", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
