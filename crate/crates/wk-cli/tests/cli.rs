//! End-to-end tests of the `wk` binary against the bundled files.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn machines_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../machines")
}

fn fixture(name: &str) -> String {
    machines_dir().join(name).to_string_lossy().into_owned()
}

fn wk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn check_accepts_and_rejects() {
    let out = wk(&["check", &fixture("l1_anbm.wk"), "aabbb"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "ACCEPT\n");

    let out = wk(&["check", &fixture("l1_anbm.wk"), "ba"]);
    assert_eq!(exit_code(&out), 1);
    assert_eq!(stdout(&out), "REJECT\n");
}

#[test]
fn check_empty_word_spelled_underscore() {
    let out = wk(&["check", &fixture("l1_anbm.wk"), "_"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "ACCEPT\n");
}

#[test]
fn check_trace_prints_configurations() {
    let out = wk(&["check", &fixture("l1_anbm.wk"), "ab", "--trace"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "q0 [0,2)\nq0 [1,2) via (a,_)\nq0 [1,1) via (_,b)\nACCEPT\n"
    );
}

#[test]
fn check_uses_gated_semantics_on_legacy_machines() {
    let out = wk(&["check", &fixture("legacy_gate.wk"), "a"]);
    assert_eq!(exit_code(&out), 1);
    let out = wk(&["check", &fixture("legacy_gate.wk"), "_"]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn check_foreign_symbol_is_an_input_error() {
    let out = wk(&["check", &fixture("l1_anbm.wk"), "abz"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn missing_and_malformed_files_exit_3() {
    let out = wk(&["check", "no_such_file.wk", "a"]);
    assert_eq!(exit_code(&out), 3);

    // A grammar file is not a machine file.
    let out = wk(&["check", &fixture("grammars/anbn.lg"), "a"]);
    assert_eq!(exit_code(&out), 3);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    let out = wk(&[]);
    assert_eq!(exit_code(&out), 2);
    let out = wk(&["check", &fixture("l1_anbm.wk")]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn enumerate_lists_words_length_lex() {
    let out = wk(&["enumerate", &fixture("l1_anbm.wk"), "--max-len", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "_\na\nb\n");
}

#[test]
fn enumerate_empty_language_prints_nothing() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        "wk-automaton\nalphabet: a\nstates: q0\ninitial: q0\nfinal:\n"
    )
    .unwrap();
    let out = wk(&["enumerate", file.path().to_str().unwrap(), "--max-len", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "");
}

#[test]
fn enumerate_respects_distance_gates() {
    let out = wk(&["enumerate", &fixture("legacy_gate.wk"), "--max-len", "4"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "_\n");
}

#[test]
fn classify_prints_flags_and_class() {
    for (file, expected) in [
        ("l1_anbm.wk", "N F S 1 (N1)\n"),
        ("l2_a3nb2m.wk", "N F S (NS)\n"),
        ("l3_a2npm_b2mpn.wk", "N F\n"),
        ("l5_anbm_step.wk", "F S 1 (F1)\n"),
        ("l8_ancbnc.wk", "WK\n"),
    ] {
        let out = wk(&["classify", &fixture(file)]);
        assert_eq!(exit_code(&out), 0, "{file}");
        assert_eq!(stdout(&out), expected, "{file}");
    }
}

#[test]
fn convert_grammar_to_machine() {
    let out = wk(&[
        "convert",
        "--to-automaton",
        &fixture("grammars/asb_normal.lg"),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "wk-automaton\n\
         alphabet: a b\n\
         states: S T qf\n\
         initial: S\n\
         final: qf\n\
         trans: S a _ T\n\
         trans: T _ b S\n\
         trans: S a _ qf\n"
    );
}

#[test]
fn convert_normalizes_first() {
    let out = wk(&["convert", "--to-automaton", &fixture("grammars/anbn.lg")]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "wk-automaton\n\
         alphabet: a b\n\
         states: S T U qf\n\
         initial: S\n\
         final: qf\n\
         trans: S a _ T\n\
         trans: T _ b S\n\
         trans: S a _ U\n\
         trans: U b _ qf\n"
    );
}

#[test]
fn convert_machine_to_grammar() {
    let out = wk(&["convert", "--to-grammar", &fixture("l8_ancbnc.wk")]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("linear-grammar\nstart: Q0\n"), "{text}");
    assert!(text.contains("prod: Q0 -> a Q1 c"), "{text}");
    assert!(text.contains("prod: Q1 -> cb"), "{text}");
}

#[test]
fn convert_contract_violations_exit_4() {
    let mut machine = tempfile::NamedTempFile::new().unwrap();
    write!(
        machine,
        "wk-automaton\nalphabet: a\nstates: q0\ninitial: q0\nfinal: q0\ntrans: q0 _ _ q0\n"
    )
    .unwrap();
    let out = wk(&["convert", "--to-grammar", machine.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 4);

    let mut grammar = tempfile::NamedTempFile::new().unwrap();
    write!(grammar, "linear-grammar\nstart: S\nprod: S -> _\n").unwrap();
    let out = wk(&[
        "convert",
        "--to-automaton",
        grammar.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 4);
}

#[test]
fn convert_round_trip_preserves_bounded_language() {
    // machine -> grammar -> (machine via compare): the emitted grammar
    // must stay equivalent to the original machine up to length 8.
    let grammar_text = stdout(&wk(&[
        "convert",
        "--to-grammar",
        &fixture("l4_palindromes.wk"),
    ]));
    let mut grammar = tempfile::NamedTempFile::new().unwrap();
    grammar.write_all(grammar_text.as_bytes()).unwrap();
    let out = wk(&[
        "compare",
        &fixture("l4_palindromes.wk"),
        grammar.path().to_str().unwrap(),
        "--max-len",
        "8",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "EQUIV<=8\n");
}

#[test]
fn compare_machine_with_oracles() {
    let out = wk(&[
        "compare",
        &fixture("l1_anbm.wk"),
        "oracle:L1",
        "--max-len",
        "10",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "EQUIV<=10\n");

    let out = wk(&[
        "compare",
        &fixture("l1_anbm.wk"),
        "oracle:L2",
        "--max-len",
        "10",
    ]);
    assert_eq!(exit_code(&out), 1);
    assert_eq!(stdout(&out), "DIFFER a\n");
}

#[test]
fn compare_is_reflexive() {
    let path = fixture("l6_aabb_step.wk");
    let out = wk(&["compare", &path, &path, "--max-len", "7"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "EQUIV<=7\n");
}

#[test]
fn compare_unknown_oracle_exits_3() {
    let out = wk(&["compare", "oracle:L99", "oracle:L1"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn suite_passes_and_reports() {
    let out = wk(&["suite", "--max-len", "6"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(
        text.contains("cell=L1/oracle status=pass witness=-"),
        "{text}"
    );
    assert!(
        text.contains("cell=L8/F status=documented witness=-"),
        "{text}"
    );
    assert!(text.ends_with("result: pass\n"), "{text}");
}

#[test]
fn bundled_machines_match_the_corpus() {
    let entries = wk_automata::corpus();
    let files = [
        "l1_anbm.wk",
        "l2_a3nb2m.wk",
        "l3_a2npm_b2mpn.wk",
        "l4_palindromes.wk",
        "l5_anbm_step.wk",
        "l6_aabb_step.wk",
        "l7_centered_c4.wk",
        "l8_ancbnc.wk",
    ];
    assert_eq!(entries.len(), files.len());
    for (entry, file) in entries.iter().zip(files) {
        let text = std::fs::read_to_string(machines_dir().join(file)).unwrap();
        let parsed = wk_automata::format::parse_machine(&text).unwrap();
        assert_eq!(parsed, entry.machine, "{file}");
    }

    let text = std::fs::read_to_string(machines_dir().join("legacy_gate.wk")).unwrap();
    let parsed = wk_automata::format::parse_machine(&text).unwrap();
    assert_eq!(parsed, wk_automata::legacy_gate_witness());
}

#[test]
fn bundled_files_round_trip() {
    for entry in std::fs::read_dir(machines_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "wk") {
            let text = std::fs::read_to_string(&path).unwrap();
            let machine = wk_automata::format::parse_machine(&text).unwrap();
            let reparsed =
                wk_automata::format::parse_machine(&wk_automata::format::machine_to_text(&machine))
                    .unwrap();
            assert_eq!(machine, reparsed, "{}", path.display());
        }
    }
    for entry in std::fs::read_dir(machines_dir().join("grammars")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let grammar = wk_automata::format::parse_grammar(&text).unwrap();
        let reparsed =
            wk_automata::format::parse_grammar(&wk_automata::format::grammar_to_text(&grammar))
                .unwrap();
        assert_eq!(grammar, reparsed, "{}", path.display());
    }
}
