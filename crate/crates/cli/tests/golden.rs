//! Byte-for-byte comparison of every command's output against `tests/golden/`.
//!
//! Set `DCT_BLESS=1` to rewrite the expected files.

mod common;

use std::fs;
use std::path::PathBuf;

use common::{dct, CASES};

#[test]
fn outputs_match_golden_files() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden");
    let bless = std::env::var_os("DCT_BLESS").is_some();
    let mut mismatched = Vec::new();
    for &(name, ws, args, code) in CASES {
        let run = dct(ws, args, 1);
        assert_eq!(run.code, code, "{name}: exit code\n{}", run.stdout);
        let path = dir.join(format!("{name}.json"));
        if bless {
            fs::write(&path, &run.stdout).unwrap();
            continue;
        }
        let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if expected != run.stdout {
            println!("--- {name} expected\n{expected}--- actual\n{}", run.stdout);
            mismatched.push(name);
        }
    }
    assert!(mismatched.is_empty(), "golden mismatches: {mismatched:?}");
}

#[test]
fn stdout_is_json_for_every_case() {
    for &(name, ws, args, _) in CASES {
        let run = dct(ws, args, 2);
        let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap_or_else(|e| panic!("{name}: {e}"));
        if run.code == 2 {
            assert!(v["error"]["code"].is_string(), "{name}");
        }
    }
}

#[test]
fn usage_errors_are_json() {
    let run = dct("a3rad2", &["no-such-command"], 1);
    assert_eq!(run.code, 2);
    let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["error"]["code"], "usage");
}

#[test]
fn dot_flag_writes_the_diagram() {
    let path = std::env::temp_dir().join(format!("dct-golden-{}.dot", std::process::id()));
    let run = dct("a3rad2", &["dass", "--category", "M", "--target", "S1", "--dot", path.to_str().unwrap()], 1);
    assert_eq!(run.code, 0);
    let text = fs::read_to_string(&path).unwrap();
    fs::remove_file(&path).ok();
    assert_eq!(text.matches(" -> ").count(), 3);
    assert_eq!(text.matches("[label=\"").count(), 7);
}
