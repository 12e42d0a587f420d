use std::process::{Command, Output};

use certifier::Report;

fn hill(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hill")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn single_row() {
    let o = hill(&["verify", "figures", "--only", "fig2"]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::parse(&stdout(&o)).unwrap();
    assert_eq!(r.entries.len(), 1);
    assert!(r.recheck());
}

#[test]
fn coarse_step_fails_and_is_marked() {
    let o = hill(&["verify", "figures", "--eps", "1e-2"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("# non-certifying"));
    assert!(!Report::parse(&text).unwrap().all_pass());
}

#[test]
fn configuration_errors() {
    assert_eq!(hill(&["verify", "figures", "--only", "fig99"]).status.code(), Some(2));
    assert_eq!(hill(&["verify", "figures", "--bogus"]).status.code(), Some(2));
    assert_eq!(hill(&["verify", "figures", "--eps", "1e-6,1e-6"]).status.code(), Some(2));
    assert_eq!(hill(&["emit", "nowhere"]).status.code(), Some(2));
    assert_eq!(hill(&["emit", "fiber", "--c", "2.0"]).status.code(), Some(2));
    assert_eq!(hill(&["emit", "graph:f3"]).status.code(), Some(2));
}

#[test]
fn reports_are_reproducible() {
    let a = hill(&["verify", "figures"]);
    let b = hill(&["verify", "figures"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let a = hill(&["oracle", "--trials", "10", "--seed", "5"]);
    let b = hill(&["oracle", "--trials", "10", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("check disk-vs-arc samples = 10"));
}

#[test]
fn stripes_do_not_change_the_sweep() {
    let pick = |o: &Output| {
        stdout(o)
            .lines()
            .filter(|l| l.starts_with("M =") || l.starts_with("witness_"))
            .map(String::from)
            .collect::<Vec<_>>()
    };
    let a = hill(&["verify", "final", "--eps", "1e-3,1e-3", "--stripes", "16"]);
    let b = hill(&["verify", "final", "--eps", "1e-3,1e-3", "--stripes", "3"]);
    assert_eq!(a.status.code(), Some(1));
    assert_eq!(pick(&a).len(), 3);
    assert_eq!(pick(&a), pick(&b));
    assert!(stdout(&a).contains("# stage sweep = fail"));
}

#[test]
fn steps_report_each_step() {
    let o = hill(&["verify", "steps", "--eps", "1e-4"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    for step in ["step1", "step2", "step3"] {
        assert!(text.lines().any(|l| l.starts_with(&format!("# {step} = "))), "{step}");
    }
    assert!(text.contains("# step3 = fail"));
    assert!(text.contains("# corner zero k = 6.6666666666666663e-1"));
    assert!(Report::parse(&text).unwrap().entries.len() >= 17);
}

#[test]
fn emit_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert_eq!(hill(&["emit", "graph:f2", "--n", "5000", "--out", out]).status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("graph_f2.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "x,value");
    assert_eq!(lines.len(), 5002);
    assert!(lines[1].starts_with("1e-2,"));
    assert!(lines[5001].starts_with("5.4e-1,"));

    assert_eq!(hill(&["emit", "hill-region", "--out", out]).status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("hill_region.csv")).unwrap();
    assert_eq!(csv.lines().count(), 2001);

    assert_eq!(hill(&["emit", "fiber", "--p", "0,0", "--c", "2.5", "--out", out]).status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("fiber.csv")).unwrap();
    assert!(csv.starts_with("theta,q1,q2,residual\n"));

    assert_eq!(hill(&["emit", "flow", "--steps", "100", "--out", out]).status.code(), Some(0));
    assert!(std::fs::read_to_string(dir.path().join("flow.csv")).unwrap().starts_with("t,q1,q2,p1,p2,Kc\n"));

    assert_eq!(hill(&["emit", "disk", "--n", "10", "--out", out]).status.code(), Some(0));
    assert!(std::fs::read_to_string(dir.path().join("disk.csv")).unwrap().starts_with("s1,s2,value\n"));

    assert_eq!(hill(&["emit", "graph:L3m", "--n", "10", "--out", out]).status.code(), Some(0));
    assert_eq!(hill(&["emit", "graph:l_plus", "--n", "10", "--out", out]).status.code(), Some(0));
}

#[test]
fn reports_are_written_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let o = hill(&["verify", "figures", "--only", "fig5", "--out", dir.path().to_str().unwrap()]);
    let file = std::fs::read(dir.path().join("figures.report")).unwrap();
    assert_eq!(file, o.stdout);
}
