//! End-to-end runs of the installed binary. Every report is checked as
//! rendered text so these double as output-stability tests.

use std::path::PathBuf;
use std::process::{Command, Output};

fn artin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("artin-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn info_reports_order_and_symmetries() {
    let out = artin(&["info", "--type", "A", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order: 24"), "{text}");
    assert!(text.contains("half_twist_height: 6"), "{text}");
    assert!(text.contains("diagram_symmetries: 2"), "{text}");
    assert!(text.contains("symmetries: id | (1 3)"), "{text}");
}

#[test]
fn normal_form_is_byte_stable_across_runs_and_modes() {
    let args = ["normal-form", "s2^-1.s1.D^2.s3", "--type", "A", "3"];
    let first = stdout(&artin(&args));
    let second = stdout(&artin(&args));
    assert_eq!(first, second);

    let seq = stdout(&artin(&[
        "normal-form",
        "s2^-1.s1.D^2.s3",
        "--type",
        "A",
        "3",
        "--mode",
        "sequential",
    ]));
    let par = stdout(&artin(&[
        "normal-form",
        "s2^-1.s1.D^2.s3",
        "--type",
        "A",
        "3",
        "--mode",
        "parallel",
    ]));
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with("mode:"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&seq), strip(&par));
}

#[test]
fn lattice_reports_ball_stats_and_joins_the_two_atoms_at_the_half_twist() {
    let dot = temp_path("a2.dot");
    let out = artin(&[
        "lattice",
        "s1",
        "s2",
        "--type",
        "A",
        "2",
        "--height",
        "4",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ball_size: 26"), "{text}");
    assert!(text.contains("level_counts: 1 2 4 7 12"), "{text}");
    assert!(text.contains("meet: e"), "{text}");
    assert!(text.contains("join: D^1"), "{text}");
    assert!(text.contains("left_divides_right: false"), "{text}");
    let dot_text = std::fs::read_to_string(&dot).expect("dot file written");
    assert!(dot_text.starts_with("digraph"));
    std::fs::remove_file(&dot).ok();
}

#[test]
fn lattice_without_words_reports_only_the_ball() {
    let out = artin(&["lattice", "--type", "B", "3", "--height", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ball_size:"), "{text}");
    assert!(!text.contains("meet:"), "{text}");
}

#[test]
fn rigidity_passes_for_a_crystallographic_type() {
    let out = artin(&["rigidity", "--type", "B", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("primal: PASS"), "{text}");
    assert!(text.contains("dual: PASS"), "{text}");
}

#[test]
fn automorphism_count_matches_the_diagram() {
    let out = artin(&["automorphisms", "--type", "D", "4", "--height", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("automorphisms: 6"), "{text}");
    assert!(!text.contains("not-a-symmetry"), "{text}");
}

#[test]
fn catalog_lists_eleven_rows_for_the_branched_rank_four_type() {
    let out = artin(&["brace", "catalog", "--type", "D", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("rows: 11"), "{text}");
    assert!(text.contains("row.11:"), "{text}");
}

#[test]
fn catalog_of_the_rank_two_chain_carries_the_boundary_note() {
    let text = stdout(&artin(&["brace", "catalog", "--type", "A", "2"]));
    assert!(text.contains("rows: 1"), "{text}");
    assert!(text.contains("note: "), "{text}");
}

#[test]
fn validate_accepts_the_flip_and_rejects_a_half_constant_assignment() {
    let good = artin(&["brace", "validate", "type I 4 / alpha 1:(1 2) 2:(1 2)"]);
    assert_eq!(good.status.code(), Some(0));
    assert!(stdout(&good).contains("valid: true"));

    let bad = artin(&["brace", "validate", "type I 4 / alpha 1:(1 2) 2:id"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("valid: false"));
}

#[test]
fn enumeration_agrees_with_the_catalog() {
    let out = artin(&["brace", "enumerate", "--type", "A", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("found: 1"), "{text}");
    assert!(text.contains("matches_catalog: true"), "{text}");
}

#[test]
fn sampled_verification_passes_and_is_seed_stable() {
    let args = [
        "brace", "verify", "--type", "I", "4", "--samples", "50", "--seed", "7",
    ];
    let first = artin(&args);
    assert!(first.status.success());
    let text = stdout(&first);
    assert!(text.contains("result: PASS"), "{text}");
    assert_eq!(text, stdout(&artin(&args)));
}

#[test]
fn torus_chains_agree_at_the_edge_label_and_not_before() {
    let out = artin(&["brace", "torus", "--type", "I", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("sigma1^o6 == sigma2^o6: true"), "{text}");
    assert!(text.contains("half_twist_at_m: true"), "{text}");
    assert!(text.contains("early_collision: none"), "{text}");
}

#[test]
fn central_power_is_two_for_an_odd_label() {
    let out = artin(&["brace", "center", "--type", "I", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("central_power: 2"), "{text}");
    assert!(text.contains("circ_violations: 0"), "{text}");
}

#[test]
fn holomorph_enumeration_on_a_cyclic_table() {
    let table = temp_path("z4.txt");
    std::fs::write(&table, "# Z/4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n").unwrap();
    let out = artin(&["holomorph", table.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("braces: 2"), "{text}");
    assert!(text.contains("result: PASS"), "{text}");
    std::fs::remove_file(&table).ok();
}

#[test]
fn matrix_file_selection_matches_the_named_type() {
    let matrix = temp_path("b3.txt");
    std::fs::write(&matrix, "type B 3\n").unwrap();
    let by_file = stdout(&artin(&["info", "--matrix", matrix.to_str().unwrap()]));
    let by_name = stdout(&artin(&["info", "--type", "B", "3"]));
    assert_eq!(by_file, by_name);
    std::fs::remove_file(&matrix).ok();
}

#[test]
fn json_object_mirrors_the_text_report() {
    let out = artin(&["info", "--type", "F", "4", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let obj = v.as_object().unwrap();
    assert_eq!(obj["command"], "info");
    assert_eq!(obj["order"], "1152");
}

#[test]
fn usage_errors_exit_with_code_two() {
    // no group selected
    let none = artin(&["info"]);
    assert_eq!(none.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&none.stderr).contains("error:"));

    // unknown subcommand is rejected by the argument parser
    let unknown = artin(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));

    // unreadable matrix file
    let missing = artin(&["info", "--matrix", "/nonexistent/m.txt"]);
    assert_eq!(missing.status.code(), Some(2));

    // one lattice word is not a valid request
    let lone = artin(&["lattice", "s1", "--type", "A", "2"]);
    assert_eq!(lone.status.code(), Some(2));
}
