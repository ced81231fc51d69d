//! Every shipped input is run twice; both runs must match the stored report
//! byte for byte. `UPDATE_GOLDEN=1 cargo test -p trace-char-cli --test golden`
//! rewrites the stored reports.

mod common;

use std::path::Path;

use common::{golden_path, run, CASES};

#[test]
fn reports_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    for &(name, args, status) in CASES {
        let (first, code) = run(args);
        let (second, _) = run(args);
        assert_eq!(first, second, "{name}: two runs differ");
        assert_eq!(code, status, "{name}: exit status\n{}", String::from_utf8_lossy(&first));
        let path = golden_path(name);
        if update {
            std::fs::write(&path, &first).unwrap();
        } else if std::fs::read(&path).ok().as_deref() != Some(&first[..]) {
            bad.push(name);
        }
    }
    assert!(bad.is_empty(), "reports differ from golden files: {bad:?}");
}

#[test]
fn output_flag_writes_the_same_report() {
    let dir = std::env::temp_dir().join(format!("tracechar-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("out.json");
    let args = ["tracepoly", "--input", "tests/inputs/tracepoly.json", "--output", target.to_str().unwrap()];
    let (stdout, code) = run(&args);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let (direct, _) = run(&args[..3]);
    assert_eq!(std::fs::read(&target).unwrap(), direct);
    std::fs::remove_dir_all(Path::new(&dir)).ok();
}

#[test]
fn identities_report_does_not_depend_on_jobs() {
    let one = run(&["--seed", "3", "--jobs", "1", "identities", "--samples", "25"]).0;
    let four = run(&["--seed", "3", "--jobs", "4", "identities", "--samples", "25"]).0;
    assert_eq!(one, four);
}
