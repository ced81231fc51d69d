#![allow(dead_code)]

//! Shipped CLI example invocations, shared by the golden and acceptance tests.

use std::path::PathBuf;
use std::process::Command;

/// (golden name, arguments, expected exit status)
pub const CASES: &[(&str, &[&str], i32)] = &[
    ("realize", &["realize", "--input", "tests/inputs/realize.json"], 0),
    ("realize_generic", &["realize", "--input", "tests/inputs/realize_generic.json"], 0),
    ("realize_f7", &["--field", "fp:7", "realize", "--input", "tests/inputs/realize_generic.json"], 0),
    ("tracepoly", &["tracepoly", "--input", "tests/inputs/tracepoly.json"], 0),
    ("variety", &["variety", "--input", "tests/inputs/variety.json"], 0),
    ("variety_off", &["variety", "--input", "tests/inputs/variety_off.json"], 1),
    ("propagate_torus", &["propagate", "--input", "tests/inputs/propagate_torus.json"], 0),
    ("propagate_sphere", &["propagate", "--input", "tests/inputs/propagate_sphere.json"], 0),
    ("check05_character", &["check05", "--input", "tests/inputs/check05_character.json"], 0),
    ("check05_exceptional", &["check05", "--input", "tests/inputs/check05_exceptional.json"], 0),
    ("check05_invalid", &["check05", "--input", "tests/inputs/check05_invalid.json"], 1),
    ("glue05", &["glue05", "--input", "tests/inputs/glue05.json"], 0),
    ("glue05_exceptional", &["glue05", "--input", "tests/inputs/check05_exceptional.json"], 0),
    ("exceptional_5", &["--jobs", "2", "exceptional", "--n", "5", "--orbits"], 0),
    ("exceptional_char2", &["--field", "fp:2", "exceptional", "--n", "5"], 1),
    ("identities", &["--seed", "7", "--jobs", "3", "identities", "--samples", "30"], 0),
    ("malformed", &["variety", "--input", "{\"point\": [1, 2]}"], 2),
];

pub fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn run(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_tracechar")).args(args).current_dir(manifest()).output().expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest().join("tests/golden").join(format!("{name}.json"))
}
