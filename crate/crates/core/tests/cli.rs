use std::fs;
use std::process::{Command, Output};

use isoratio::arith::rational::ratio;
use isoratio::cli::{exit_code, parse_curve_line, CurveRecord};
use isoratio::curve::WeierstrassModel;
use isoratio::Error;

const X0_11: &str = "X0_11: 0 -1 1 -10 -20";
const X0_19: &str = "X0_19: 0 1 1 -9 -15";

fn isoratio(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isoratio")).args(args).env_remove("ISORATIO_PRECISION_CAP").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ratio_on_level_eleven() {
    let o = isoratio(&["ratio", "--curve", X0_11, "-p", "5", "--select", "rational"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("breakdown {5: 0, 11: -1, inf: -1}"), "{text}");
    assert!(text.contains("c(phi) = 5^-2"), "{text}");
    let o = isoratio(&["ratio", "--curve", X0_11, "-p", "5", "--select", "rational", "--dual"]);
    assert!(stdout(&o).contains("c(phi) = 5^2"));
}

#[test]
fn input_errors_exit_four() {
    let o = isoratio(&["ratio", "--curve", "oops: 1 2 three", "-p", "5"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error (position 11)"));
    let o = isoratio(&["ratio", "--curve", "bad: 0 0 0 0 0", "-p", "5"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("singular model"));
    for args in [
        &["ratio", "-p", "5"][..],
        &["ratio", "--curve", X0_11, "-p", "4"],
        &["twist-ratio", "--curve", X0_19, "-p", "3", "-d", "9"],
        &["no-such-command"],
    ] {
        assert_eq!(isoratio(args).status.code(), Some(4), "{args:?}");
    }
    assert_eq!(isoratio(&["--help"]).status.code(), Some(0));
}

#[test]
fn exit_codes_by_error_kind() {
    assert_eq!(exit_code(&Error::OracleMismatch { place: "11".into(), formula: -1, oracle: 0 }), 3);
    assert_eq!(exit_code(&Error::InconclusiveSampling { place: "11".into(), fraction: 0.6 }), 3);
    assert_eq!(exit_code(&Error::CompositionMismatch { place: "5".into() }), 2);
    assert_eq!(exit_code(&Error::Invariant("x".into())), 2);
    assert_eq!(exit_code(&Error::SingularModel), 4);
    assert_eq!(exit_code(&Error::Input("x".into())), 4);
}

#[test]
fn precision_cap_precedence() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_isoratio"));
        c.args(["ratio", "--curve", X0_11, "-p", "5"]).env_remove("ISORATIO_PRECISION_CAP");
        if let Some(v) = env {
            c.env("ISORATIO_PRECISION_CAP", v);
        }
        if let Some(v) = flag {
            c.args(["--precision-cap", v]);
        }
        c.output().unwrap().status.code()
    };
    assert_eq!(run(None, None), Some(0));
    assert_eq!(run(Some("0"), None), Some(4));
    assert_eq!(run(Some("0"), Some("64")), Some(0));
    assert_eq!(run(Some("64"), Some("9999")), Some(4));
}

#[test]
fn records_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("o{i}.txt"));
        let o = isoratio(&[
            "oracle",
            "--curve",
            X0_19,
            "-p",
            "3",
            "--select",
            "0",
            "--workers",
            "3",
            "--seed",
            "5",
            "-o",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        outputs.push((stdout(&o), fs::read(&path).unwrap()));
    }
    assert_eq!(outputs[0], outputs[1]);
    let records = String::from_utf8(outputs[0].1.clone()).unwrap();
    assert!(records.lines().all(|l| l.starts_with("kind=oracle ")));
    assert!(records.ends_with('\n') && !records.contains('\r'));
}

#[test]
fn census_resume_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let d = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let base = ["census", "--curve", X0_19, "-p", "3", "--select", "0", "--dual", "-x", "200000", "--workers", "2"];
    let run = |extra: &[&str]| {
        let mut args = base.to_vec();
        args.extend_from_slice(extra);
        let o = isoratio(&args);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        stdout(&o)
    };
    let (ck_full, ck_part, out_full, out_part) = (d("full.ckpt"), d("part.ckpt"), d("full.rec"), d("part.rec"));
    let whole = run(&["--checkpoint", &ck_full, "-o", &out_full]);
    let first = run(&["--checkpoint", &ck_part, "--halt-after", "100000", "-o", &out_part]);
    assert!(first.contains("complete = false"));
    let resumed = run(&["--checkpoint", &ck_part, "-o", &out_part]);
    assert_eq!(resumed, whole);
    assert_eq!(fs::read(&ck_part).unwrap(), fs::read(&ck_full).unwrap());
    assert_eq!(fs::read(&out_part).unwrap(), fs::read(&out_full).unwrap());
}

#[test]
fn curve_lines_round_trip() {
    let models = [
        WeierstrassModel::from_ints([0, -1, 1, -10, -20]).unwrap(),
        WeierstrassModel::new(ratio(1, 2), ratio(-3, 7), ratio(0, 1), ratio(5, 4), ratio(-11, 3)).unwrap(),
    ];
    for model in models {
        let rec = CurveRecord { label: "E".into(), model, modular_quotient: None };
        let back = parse_curve_line(&rec.to_line()).unwrap();
        assert_eq!(back.model, rec.model);
        assert_eq!(back.label, rec.label);
    }
    let rec = parse_curve_line("X0_11: 0 -1 1 -10 -20 ; modular-quotient=true").unwrap();
    assert_eq!(rec.modular_quotient, Some(true));
    assert_eq!(parse_curve_line(&rec.to_line()).unwrap().modular_quotient, Some(true));
}

#[test]
fn curve_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curves.txt");
    fs::write(&path, format!("{X0_11}\n\n{X0_19}\n")).unwrap();
    let o = isoratio(&["local-data", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("11     I5       5  split"), "{text}");
    assert!(text.contains("19     I3       3  split"), "{text}");
}
