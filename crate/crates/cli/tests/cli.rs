use std::path::Path;
use std::process::{Command, Output};

fn netga(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netga"))
        .args(args)
        .arg("--out")
        .arg(out)
        .env_remove("NETGA_SEED")
        .output()
        .expect("spawn netga")
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn data_rows(csv: &str) -> usize {
    csv.lines().count() - 1
}

#[test]
fn run_writes_trace_and_is_repeatable() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    let args = ["run", "--function", "sphere", "--topology", "complete", "--seed", "42"];
    for out in [&a, &b] {
        let output = netga(&args, out);
        assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stderr));
        assert!(String::from_utf8_lossy(&output.stdout).contains("seed: 42"));
    }
    let trace = read(&a.join("trace.csv"));
    assert_eq!(trace.lines().next(), Some("t,mean_fitness,best_fitness"));
    assert_eq!(data_rows(&trace), 101);
    assert_eq!(trace, read(&b.join("trace.csv")));
}

#[test]
fn manifest_replays_the_run() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first");
    let output = netga(&["run", "--function", "ackley", "--topology", "er:0.1", "--tau", "30", "--seed", "9"], &first);
    assert!(output.status.success());
    let manifest = first.join("manifest.txt");
    let replay = dir.path().join("replay");
    let output = netga(&["run", "--config", manifest.to_str().unwrap()], &replay);
    assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stderr));
    assert_eq!(read(&first.join("trace.csv")), read(&replay.join("trace.csv")));
    assert_eq!(data_rows(&read(&replay.join("trace.csv"))), 31);
}

#[test]
fn generated_seed_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let output = netga(&["run", "--tau", "2"], dir.path());
    assert!(output.status.success());
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.lines().any(|l| l.starts_with("seed: ") && l.ends_with("(generated)")), "{stdout}");
}

#[test]
fn invalid_input_exits_with_usage_code() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["run", "--topology", "ba:50", "--seed", "1"],
        vec!["run", "--n", "7", "--seed", "1"],
        vec!["run", "--function", "griewank", "--seed", "1"],
        vec!["sweep", "--axis", "q", "--seed", "1"],
        vec!["sweep", "--seed", "1"],
    ] {
        let out = dir.path().join("never");
        let output = netga(&args, &out);
        assert_eq!(output.status.code(), Some(2), "{args:?}");
        assert!(!out.join("trace.csv").exists());
    }
}

#[test]
fn sweep_row_counts() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p");
    let output = netga(&["sweep", "--axis", "p", "--function", "sphere", "--seed", "3", "--snapshots", "5,10"], &p);
    assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stderr));
    let csv = read(&p.join("sweep.csv"));
    assert_eq!(data_rows(&csv), 1010);
    assert!(csv.starts_with("function,axis,value,repetition,seed,t5,t10,"));
    assert_eq!(data_rows(&read(&p.join("fits.csv"))), 2);

    let m = dir.path().join("m");
    let output = netga(&["sweep", "--axis", "m", "--function", "sphere", "--seed", "3", "--tau", "10", "--snapshots", "10"], &m);
    assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stderr));
    assert_eq!(data_rows(&read(&m.join("sweep.csv"))), 490);
}

#[test]
fn worker_count_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for workers in ["1", "8"] {
        let out = dir.path().join(workers);
        let args = ["sweep", "--axis", "m", "--function", "rastrigin", "--seed", "5", "--tau", "20", "--snapshots", "20", "--reps", "2", "--workers", workers];
        let output = netga(&args, &out);
        assert!(output.status.success());
        files.push((read(&out.join("sweep.csv")), read(&out.join("fits.csv"))));
    }
    assert_eq!(files[0], files[1]);
}

#[test]
fn netstats_rows_and_columns() {
    let dir = tempfile::tempdir().unwrap();
    let output = netga(&["netstats", "--axis", "p", "--seed", "4", "--reps", "3"], dir.path());
    assert!(output.status.success());
    let csv = read(&dir.path().join("netstats.csv"));
    assert_eq!(csv.lines().next(), Some("axis,value,repetition,seed,edges,density,connected,avg_path"));
    assert_eq!(data_rows(&csv), 303);
    // p = 0 gives an empty graph with no defined path length
    let first: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    assert_eq!((first[4], first[6], first[7]), ("0", "false", "NA"));
    // p = 1 gives the complete graph
    let last: Vec<&str> = csv.lines().last().unwrap().split(',').collect();
    assert_eq!((last[4], last[5], last[6]), ("1225", "1", "true"));
}

#[test]
fn panel_and_compare_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let panel = dir.path().join("panel");
    let output = netga(&["panel", "--function", "ackley", "--tau", "5", "--reps", "2", "--seed", "1", "--topologies", "empty,star"], &panel);
    assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stderr));
    assert_eq!(data_rows(&read(&panel.join("panel.csv"))), 2 * 6);

    let cmp = dir.path().join("compare");
    let output = netga(&["compare", "--function", "sphere", "--tau", "20", "--snapshots", "10,20", "--reps", "1", "--seed", "1"], &cmp);
    assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stderr));
    for name in ["comparison.csv", "comparison.txt", "sweep_sphere_p.csv", "sweep_sphere_m.csv", "manifest.txt"] {
        assert!(cmp.join(name).exists(), "{name}");
    }
    assert_eq!(data_rows(&read(&cmp.join("comparison.csv"))), 1);
}
