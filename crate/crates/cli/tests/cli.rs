use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contrakernel"))
        .args(args)
        .env("CONTRAKERNEL_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn column(v: &Value, row: usize, name: &str) -> f64 {
    let cols = v["columns"].as_array().unwrap();
    let k = cols.iter().position(|c| c == name).unwrap();
    v["rows"][row][k].as_f64().unwrap()
}

#[test]
fn exterior_scalar_contragenic_value() {
    let v = json(&[
        "eval", "--kind", "Z", "--domain", "exterior", "--n", "-2", "--m", "3", "--parity", "plus",
        "--point", "1,1,1",
    ]);
    let expected = 3f64.powf(-1.5);
    assert!((column(&v, 0, "a0").abs() - expected).abs() < 1e-15);
    assert_eq!(column(&v, 0, "a1"), 0.0);
    assert_eq!(column(&v, 0, "a2"), 0.0);
}

#[test]
fn constant_monogenic_is_one() {
    let v = json(&[
        "eval",
        "--kind",
        "X",
        "--n",
        "0",
        "--m",
        "0",
        "--point",
        "0.1,0.2,0.3",
    ]);
    assert_eq!(column(&v, 0, "a0"), 1.0);
    assert_eq!(column(&v, 0, "a1"), 0.0);
    assert_eq!(column(&v, 0, "a2"), 0.0);
    assert!((column(&v, 0, "rho") - 0.14f64.sqrt()).abs() < 1e-15);
}

#[test]
fn negative_coordinates_and_inferred_exterior() {
    let v = json(&[
        "eval",
        "--kind",
        "X",
        "--n",
        "-3",
        "--m",
        "1",
        "--point",
        "-1,-2,0.5",
    ]);
    assert_eq!(column(&v, 0, "x0"), -1.0);
    assert!(column(&v, 0, "rho") > 1.0);
}

#[test]
fn excluded_index_exits_two() {
    let o = run(&[
        "eval",
        "--kind",
        "U",
        "--n",
        "0",
        "--m",
        "0",
        "--parity",
        "minus",
        "--point",
        "0.1,0.2,0.3",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn point_outside_domain_exits_three() {
    let o = run(&[
        "eval", "--kind", "U", "--n", "1", "--m", "0", "--point", "1,1,1",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn exponential_values() {
    let v = json(&["exp", "--point", "0,0,0"]);
    assert_eq!(column(&v, 0, "a0"), 1.0);
    let v = json(&["exp", "--point", "1,0,0"]);
    assert!((column(&v, 0, "a0") - std::f64::consts::E).abs() < 1e-15);
    let v = json(&["exp", "--variant", "Estar", "--point", "1,0,0"]);
    assert!((column(&v, 0, "a0") - (-1f64).exp()).abs() < 1e-15);
}

#[test]
fn exponential_grid_has_one_row_per_node() {
    let v = json(&[
        "exp",
        "--grid",
        "0.5",
        "--theta-count",
        "3",
        "--phi-count",
        "4",
    ]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 12);
    for r in 0..rows.len() {
        assert!((column(&v, r, "rho") - 0.5).abs() < 1e-15);
    }
}

#[test]
fn norms_pass_at_default_tolerance() {
    let o = run(&[
        "norms",
        "--domain",
        "interior",
        "--max-degree",
        "4",
        "--tol",
        "1e-8",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn tolerance_breach_exits_four_and_still_reports() {
    let o = run(&[
        "norms",
        "--domain",
        "interior",
        "--max-degree",
        "1",
        "--tol",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).starts_with("element,closed,quadrature,relative_deviation\n"));
}

#[test]
fn duality_residual_is_tiny() {
    let v = json(&["duality", "--max-degree", "4"]);
    assert!(v["summary"]["max_deviation"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn mixed_gram_reports_nonzero_diagonal() {
    let v = json(&[
        "gram",
        "--family",
        "mixed",
        "--domain",
        "exterior",
        "--max-degree",
        "3",
    ]);
    let rows = v["rows"].as_array().unwrap();
    let diag: Vec<&Value> = rows
        .iter()
        .filter(|r| r[0].as_str().unwrap().trim_start_matches("conj ") == r[1].as_str().unwrap())
        .collect();
    assert!(!diag.is_empty());
    assert!(diag.iter().any(|r| r[2].as_f64().unwrap() != 0.0));
    for r in diag {
        let (closed, q) = (r[2].as_f64().unwrap(), r[3].as_f64().unwrap());
        assert!((closed - q).abs() <= 1e-8 * closed.abs().max(1.0));
    }
}

#[test]
fn exterior_table_warns_and_out_of_domain_radius_fails() {
    let o = run(&[
        "bergman-table",
        "--domain",
        "exterior",
        "--ns",
        "2",
        "--rhos",
        "1.5",
    ]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    let o = run(&["bergman-table", "--rhos", "1.5"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn table_csv_round_trips_through_json() {
    let args = [
        "bergman-table",
        "--ns",
        "3,4",
        "--rhos",
        "0.3,0.7",
        "--theta-count",
        "6",
        "--phi-count",
        "8",
    ];
    let default = stdout(&run(&args));
    let lines: Vec<&str> = default.lines().collect();
    assert_eq!(lines[0], "rho,N=3,N=4");
    assert!(lines[1].starts_with("0.3,"));
    let cell = lines[1].split(',').nth(1).unwrap();
    assert_eq!(
        cell.split('e').next().unwrap().len(),
        4,
        "three significant digits: {cell}"
    );

    let mut full_args = args.to_vec();
    full_args.push("--full");
    let csv = stdout(&run(&full_args));
    let v = json(&args);
    for (i, line) in csv.lines().skip(1).enumerate() {
        for (k, cell) in line.split(',').enumerate().skip(1) {
            let parsed: f64 = cell.parse().unwrap();
            assert_eq!(
                parsed.to_bits(),
                v["rows"][i][k].as_f64().unwrap().to_bits()
            );
        }
    }
}

#[test]
fn output_file_is_written() {
    let dir = std::env::temp_dir().join(format!("contrakernel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("x.csv");
    let o = run(&[
        "eval",
        "--kind",
        "U",
        "--n",
        "2",
        "--m",
        "1",
        "--point",
        "0.1,0.2,0.3",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("x0,x1,x2,rho,theta,phi,a0,a1,a2\n"));
    std::fs::remove_dir_all(dir).unwrap();
}
