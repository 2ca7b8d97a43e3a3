use std::process::Command;

use degloci::cli::OutputRecord;

fn degloci(args: &str) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_degloci"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn class_example_text() {
    let (code, out, _) = degloci("class --family wedge --n 3 --r 1 --kind csm --route interp --basis chern");
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 + 2c1 + c1^2 + c2");
}

#[test]
fn json_round_trips() {
    for args in [
        "class --family sym --n 2 --r 1 --basis schur --format json",
        "phi --family sym --n 2 --r 2 --trunc 4 --format json",
        "table --family sym --n 3 --format json",
        "euler --format json",
        "ktheory --n 2 --r 2 --format json",
    ] {
        let (code, out, _) = degloci(args);
        assert_eq!(code, 0, "{args}");
        let rec: OutputRecord = serde_json::from_str(&out).unwrap();
        let again = serde_json::to_string_pretty(&rec).unwrap();
        assert_eq!(again.trim(), out.trim(), "{args}");
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(value.get("warnings").is_some());
        assert!(value.get("trunc").is_some());
    }
}

#[test]
fn table_matches_listing() {
    let (_, out, _) = degloci("table --family sym --n 3 --format json");
    let rec: OutputRecord = serde_json::from_str(&out).unwrap();
    let rows: Vec<Vec<String>> = rec.rows.unwrap().into_iter().map(|r| r.values).collect();
    let expect = [
        ["0", "1", "-1", "3", "-1", "1"],
        ["3", "2", "1", "0", "3", "0"],
        ["3", "2", "4", "0", "0", "0"],
    ];
    assert_eq!(rows, expect.map(|r| r.map(String::from).to_vec()).to_vec());
}

#[test]
fn routes_give_identical_documents() {
    for (kind, trunc) in [("csm", ""), ("ssm", "--trunc 5")] {
        for (f, n, r) in [("wedge", 3, 1), ("wedge", 4, 0), ("sym", 2, 1), ("sym", 3, 3)] {
            let q = |route: &str| {
                degloci(&format!(
                    "class --family {f} --n {n} --r {r} --kind {kind} {trunc} --route {route} --format json"
                ))
            };
            let (a, b) = (q("interp"), q("sieve"));
            assert_eq!(a.0, 0);
            assert_eq!(a, b, "{kind} {f} {n} {r}");
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(degloci("class --family wedge --n 4 --r 1").0, 1);
    let (code, _, err) = degloci("class --family wedge --n 9 --r 1");
    assert_eq!(code, 1);
    assert!(err.contains("n = 9"), "{err}");
    let (code, _, err) = degloci("class --family hermitian --n 3 --r 1");
    assert_eq!(code, 1);
    assert!(err.contains("--family"), "{err}");
    assert_eq!(degloci("verify --suite cross --max-n 4").0, 0);
    assert_eq!(degloci("--version").0, 0);
}

#[test]
fn latex_uses_subscripts() {
    let (_, out, _) = degloci("class --family wedge --n 3 --r 3 --basis schur --format latex");
    assert!(out.contains("s_{"), "{out}");
}

#[test]
fn discrepancies_surface_as_warnings() {
    let (_, _, err) = degloci("euler");
    assert!(err.contains("-50521") && err.contains("-50512"), "{err}");
    let (_, _, err) = degloci("class --family sym --n 3 --r 2");
    assert!(err.contains("2^r"), "{err}");
}
