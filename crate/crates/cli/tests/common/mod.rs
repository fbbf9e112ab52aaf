#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.extend(["fixtures", &format!("{name}.json")]);
    p.to_string_lossy().into_owned()
}

pub struct Run {
    pub stdout: String,
    pub code: i32,
}

/// Runs the `dct` binary on a fixture with `DCT_THREADS` set.
pub fn dct(workspace: &str, args: &[&str], threads: usize) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_dct"))
        .arg("--workspace")
        .arg(fixture(workspace))
        .args(args)
        .env("DCT_THREADS", threads.to_string())
        .output()
        .expect("dct runs");
    Run { stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"), code: out.status.code().unwrap_or(-1) }
}

/// `(golden name, fixture, arguments, expected exit code)` covering every command.
pub const CASES: &[(&str, &str, &[&str], i32)] = &[
    ("check_algebra_a3rad2", "a3rad2", &["check-algebra"], 0),
    ("check_algebra_semisimple", "semisimple", &["check-algebra"], 0),
    ("check_algebra_loop", "loop", &["check-algebra"], 2),
    ("hom_p2_p1", "a3rad2", &["hom", "--source", "P2", "--target", "P1"], 0),
    ("ext_s2_s3", "a3rad2", &["ext", "--source", "S2", "--target", "S3"], 0),
    ("resolve_s1", "a3rad2", &["resolve", "--module", "S1"], 0),
    ("tau_d_s1", "a3rad2", &["tau-d", "--module", "S1"], 0),
    ("tau_s1_ka2", "ka2", &["tau-d", "--module", "S1"], 0),
    ("decompose_i2", "a3rad2", &["decompose", "--module", "I2"], 0),
    ("enumerate_a3rad2", "a3rad2", &["enumerate", "--bound", "2"], 0),
    ("d_rigid_m", "a3rad2", &["d-rigid", "--category", "M"], 0),
    ("ct_check_m", "a3rad2", &["ct-check", "--category", "M", "--bound", "2"], 0),
    ("build_d_exact_s1", "a3rad2", &["build-d-exact", "--category", "M", "--target", "S1"], 0),
    ("defect_dass_s1", "a3rad2", &["defect", "--sequence", "dass_s1", "--module", "S1"], 0),
    ("defect_formula_a3rad2", "a3rad2", &["verify-defect-formula", "--category", "M"], 0),
    ("defect_formula_contractible", "contractible", &["verify-defect-formula", "--category", "M"], 0),
    ("ar_duality_m", "a3rad2", &["verify-ar-duality", "--category", "M"], 0),
    ("determined_p1_s1", "a3rad2", &["determined", "--category", "M", "--source", "P1", "--target", "S1", "--all"], 0),
    ("dass_s1", "a3rad2", &["dass", "--category", "M", "--target", "S1"], 0),
    ("dass_ka2", "ka2", &["dass", "--category", "M", "--target", "S1"], 0),
    ("dass_projective", "a3rad2", &["dass", "--category", "M", "--target", "P1"], 2),
    ("gldim_end_a3rad2", "a3rad2", &["gldim-end", "--category", "M"], 0),
    ("gldim_end_ka2", "ka2", &["gldim-end", "--category", "M"], 0),
    ("emit_dot_dass", "a3rad2", &["emit-dot", "--category", "M", "--target", "S1"], 0),
    ("emit_dot_category", "a3rad2", &["emit-dot", "--category", "M"], 0),
    ("unknown_module", "a3rad2", &["hom", "--source", "Q", "--target", "P1"], 2),
];
