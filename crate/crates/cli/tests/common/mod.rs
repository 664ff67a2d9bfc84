use std::path::PathBuf;
use std::process::{Command, Output};

/// `(arguments, golden file)` pairs compared byte-for-byte.
pub const GOLDEN: &[(&[&str], &str)] = &[
    (&["compute", "--family", "bell-number", "--n", "5"], "compute_bell_number_n5.txt"),
    (&["compute", "--family", "bell-euler", "--alpha", "0", "--n", "1", "--format", "pretty"], "compute_bell_euler_a0_n1.txt"),
    (&["compute", "--family", "bell-euler", "--alpha", "1", "--n", "2", "--format", "json"], "compute_bell_euler_a1_n2.json"),
    (&["table", "--family", "stirling2", "--n-max", "4"], "table_stirling2_nmax4.csv"),
    (&["table", "--family", "euler", "--alpha", "1", "--n-max", "2"], "table_euler_a1_nmax2.csv"),
    (&["table", "--family", "bell-number", "--n-max", "0"], "table_bell_number_nmax0.csv"),
    (&["expand", "--mu", "1", "x"], "expand_mu1_x.json"),
    (&["expand", "--mu", "1", "1"], "expand_mu1_one.json"),
    (&["expand", "--mu", "2", "x^3 - 2/3"], "expand_mu2_cubic.json"),
    (&["verify", "--id", "T4_4_literal", "--no-timings"], "verify_t4_4_literal.json"),
    (&["verify", "--all", "--n-max", "6", "--no-timings"], "verify_all_nmax6.json"),
];

pub fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bell-euler"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn golden(name: &str) -> Vec<u8> {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Golden files whose output differs from the stored bytes.
pub fn golden_mismatches() -> Vec<String> {
    GOLDEN
        .iter()
        .filter(|(args, name)| bin(args).stdout != golden(name))
        .map(|(args, name)| format!("{name} ({})", args.join(" ")))
        .collect()
}
