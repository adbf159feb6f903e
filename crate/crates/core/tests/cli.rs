use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drinfeld-factor")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn factor_lines(o: &Output) -> Vec<String> {
    stdout(o).lines().filter(|l| !l.starts_with('#')).map(str::to_string).collect()
}

#[test]
fn factors_fixture() {
    let o = run(&["--p", "5", "--algo", "drinfeld-random", "--seed", "1", "x^4+x^3+3*x^2+2*x+2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(factor_lines(&o), ["x^2+2", "x^2+x+1"]);
    let trailer = stdout(&o).lines().last().unwrap().to_string();
    assert!(trailer.starts_with("# seed=1 algo=drinfeld-random time_ms="), "{trailer}");
}

#[test]
fn explicit_subcommand_and_coefficient_list() {
    let o = run(&["factor", "--p", "5", "2,2,3,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(factor_lines(&o), ["x^2+2", "x^2+x+1"]);
}

#[test]
fn irreducible_input() {
    let o = run(&["--p", "5", "x^2+2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(factor_lines(&o), ["x^2+2"]);
}

#[test]
fn multiplicities_and_cz() {
    let o = run(&["--p", "5", "--algo", "cz", "x^4+2*x^3+3*x^2+4*x+2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(factor_lines(&o), ["(x+1)^2", "x^2+2"]);
}

#[test]
fn extension_field_input() {
    let o = run(&["--p", "3", "--ext-degree", "2", "x^2+1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(factor_lines(&o).len(), 2);
}

#[test]
fn degree_bound_reports_unfactored() {
    let o = run(&["--p", "5", "--m", "1", "x^4+x^3+3*x^2+2*x+2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# unfactored x^4+x^3+3*x^2+2*x+2"));
}

#[test]
fn usage_errors_exit_2() {
    let o = run(&["--p", "4", "x^2+1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("characteristic must be odd prime"));
    assert_eq!(run(&["--p", "5", "x^^2"]).status.code(), Some(2));
    assert_eq!(run(&["--p", "5", "--algo", "drinfeld-edf", "x^4+x^3+3*x^2+2*x+2"]).status.code(), Some(2));
    assert_eq!(run(&["--p", "5", "--algo", "drinfeld-edf", "--k", "2", "x^3+x+1"]).status.code(), Some(2));
    assert_eq!(run(&["stats", "stopping-time", "--p", "11", "--d", "1"]).status.code(), Some(2));
    assert_eq!(run(&["stats", "density", "--p", "10007", "--pairs", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn deterministic_output_is_byte_identical() {
    let args = ["--p", "11", "--algo", "drinfeld-edf", "--k", "2", "x^4+x^3+5*x^2+x+4"];
    let strip = |o: &Output| factor_lines(o).join("\n");
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(factor_lines(&first), ["x^2+1", "x^2+x+4"]);
    for _ in 0..3 {
        assert_eq!(strip(&run(&args)), strip(&first));
    }
}

#[test]
fn stopping_time_example() {
    let o = run(&["stats", "stopping-time", "--p", "11", "--p1", "x^2+1", "--p2", "x^2+x+4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("q,d,pairs,unsplit,max_index,mean_index,bound,within_bound"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&row[..5], ["11", "2", "1", "0", "2"]);
    assert_eq!(row[7], "true");
}

#[test]
fn density_rows_in_range() {
    let o = run(&["stats", "density", "--p", "101", "--pairs", "5", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    for row in rows {
        let cols: Vec<&str> = row.split(',').collect();
        let n: u64 = cols[4].parse().unwrap();
        assert!((30..=71).contains(&n), "{row}");
        assert_eq!(cols[7], "true");
    }
}

#[test]
fn bench_trivial_size() {
    let o = run(&["bench", "--p", "101", "--sizes", "2", "--trials", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "algo,q,n,trials,median_s,min_s,max_s");
    assert_eq!(rows.len(), 3);
    for row in &rows[1..] {
        let median: f64 = row.split(',').nth(4).unwrap().parse().unwrap();
        assert!(median < 1e-3, "{row}");
    }
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("ok ")));
}
