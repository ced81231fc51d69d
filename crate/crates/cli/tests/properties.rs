mod common;

use proptest::prelude::*;
use serde_json::{json, Value};

fn report(args: &[&str]) -> (Value, i32) {
    let (out, code) = common::run(args);
    (serde_json::from_slice(&out).expect("reports are JSON"), code)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn realize_always_verifies(t in prop::array::uniform6(-5i64..=5), field in prop_oneof![Just("q"), Just("fp:5"), Just("fp:2")]) {
        let input = json!({ "traces": t }).to_string();
        let (r, code) = report(&["--field", field, "realize", "--input", &input]);
        prop_assert_eq!(code, 0, "{}", r);
        prop_assert_eq!(&r["verified"], &json!(true));
        prop_assert_eq!(&r["input"], &json!({ "traces": t }));
        prop_assert_eq!(&r["schema"], &json!("1"));
    }

    #[test]
    fn variety_exit_status_follows_residual(p in prop::array::uniform7(-4i64..=4)) {
        let input = json!({ "point": p }).to_string();
        let (r, code) = report(&["variety", "--input", &input]);
        let on = r["on_variety"].as_bool().unwrap();
        prop_assert_eq!(code, if on { 0 } else { 1 });
        prop_assert_eq!(on, r["residual"] == json!("0"));
    }

    #[test]
    fn same_seed_same_bytes(seed in any::<u64>()) {
        let s = seed.to_string();
        let args = ["--seed", &s, "identities", "--samples", "4"];
        prop_assert_eq!(common::run(&args), common::run(&args));
    }
}

#[test]
fn malformed_input_exits_two() {
    for bad in ["{\"traces\": [1, 2]}", "{\"traces\": [\"x\", 2, 2, 2, 2, 2]}", "not json"] {
        assert_eq!(common::run(&["realize", "--input", bad]).1, 2, "{bad}");
    }
    assert_eq!(common::run(&["--field", "fp:4", "realize", "--input", "{}"]).1, 2);
}
