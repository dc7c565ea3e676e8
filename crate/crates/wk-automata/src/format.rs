//! Text file formats for machines and grammars.
//!
//! Machine files:
//!
//! ```text
//! wk-automaton
//! alphabet: a b
//! states: q0 q1
//! initial: q0
//! final: q0 q1
//! trans: q0 a _ q1
//! trans: q1 _ b q0 @inf
//! ```
//!
//! `_` stands for the empty word. A `@<d|inf>` label on any transition
//! makes the machine a legacy machine, and then every transition must
//! carry one. Grammar files:
//!
//! ```text
//! linear-grammar
//! start: S
//! prod: S -> a S b
//! prod: S -> ab
//! ```
//!
//! Production bodies are whitespace-separated tokens: lowercase runs are
//! terminals, an uppercase-initial identifier is the (at most one)
//! nonterminal, and a body of just `_` is the empty word. Blank lines and
//! `#` comments are ignored everywhere. Serialization emits the canonical
//! layout above; parse-serialize-parse is the identity on parsed values.

use std::fmt;

use thiserror::Error;

use crate::automaton::{DistanceLabel, WkAutomaton};
use crate::grammar::{Body, LinearGrammar, Production};

pub const MACHINE_HEADER: &str = "wk-automaton";
pub const GRAMMAR_HEADER: &str = "linear-grammar";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Either kind of input file, distinguished by its header line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FileKind {
    Machine(WkAutomaton),
    Grammar(LinearGrammar),
}

/// Numbered content lines with blanks and `#` comments dropped.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

/// `_` in a word position denotes the empty word.
pub fn word_from_text(token: &str) -> &str {
    if token == "_" {
        ""
    } else {
        token
    }
}

/// Render a word with `_` for the empty word.
pub fn word_to_text(word: &str) -> String {
    if word.is_empty() {
        "_".to_string()
    } else {
        word.to_string()
    }
}

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.items.get(self.pos).copied();
        self.pos += 1;
        item
    }

    fn expect_keyed(&mut self, key: &str) -> Result<(usize, &'a str), ParseError> {
        let last_line = self.items.last().map_or(1, |(n, _)| *n);
        match self.next() {
            Some((n, l)) => match l.strip_prefix(key) {
                Some(rest) => Ok((n, rest.trim())),
                None => err(n, format!("expected `{key}` line")),
            },
            None => err(last_line, format!("missing `{key}` line")),
        }
    }
}

pub fn parse_machine(text: &str) -> Result<WkAutomaton, ParseError> {
    let mut lines = Lines {
        items: content_lines(text),
        pos: 0,
    };
    match lines.next() {
        Some((_, l)) if l == MACHINE_HEADER => {}
        Some((n, l)) => {
            return err(
                n,
                format!("expected header `{MACHINE_HEADER}`, found `{l}`"),
            )
        }
        None => return err(1, "empty file"),
    }

    let (alpha_line, alpha) = lines.expect_keyed("alphabet:")?;
    let mut alphabet = String::new();
    for token in alpha.split_whitespace() {
        let mut chars = token.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) if c.is_ascii_lowercase() => alphabet.push(c),
            _ => {
                return err(
                    alpha_line,
                    format!("`{token}` is not a single lowercase letter"),
                )
            }
        }
    }

    let (_, states_text) = lines.expect_keyed("states:")?;
    let states: Vec<&str> = states_text.split_whitespace().collect();

    let (_, initial) = lines.expect_keyed("initial:")?;
    let (_, finals_text) = lines.expect_keyed("final:")?;
    let finals: Vec<&str> = finals_text.split_whitespace().collect();

    let mut builder = WkAutomaton::builder()
        .alphabet(&alphabet)
        .states(&states)
        .initial(initial)
        .finals(&finals);

    let mut transition_lines = Vec::new();
    while let Some((n, l)) = lines.next() {
        match l.strip_prefix("trans:") {
            Some(rest) => transition_lines.push((n, rest.trim())),
            None => return err(n, format!("expected `trans:` line, found `{l}`")),
        }
    }

    for (n, text) in transition_lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let (core, label) = match tokens.as_slice() {
            [a, b, c, d] => ([*a, *b, *c, *d], None),
            [a, b, c, d, l] if l.starts_with('@') => ([*a, *b, *c, *d], Some(&l[1..])),
            _ => return err(n, "expected `trans: <from> <u> <v> <to> [@<d|inf>]`"),
        };
        let [from, u, v, to] = core;
        let (u, v) = (word_from_text(u), word_from_text(v));
        builder = match label {
            None => builder.transition(from, u, v, to),
            Some("inf") => builder.legacy_transition(from, u, v, to, DistanceLabel::Infinite),
            Some(d) => match d.parse::<usize>() {
                Ok(d) => builder.legacy_transition(from, u, v, to, DistanceLabel::Finite(d)),
                Err(_) => return err(n, format!("bad distance label `@{d}`")),
            },
        };
    }

    builder.build().map_err(|e| ParseError {
        line: 1,
        message: e.to_string(),
    })
}

pub fn machine_to_text(m: &WkAutomaton) -> String {
    let mut out = String::new();
    out.push_str(MACHINE_HEADER);
    out.push('\n');
    let alphabet: Vec<String> = m.alphabet().iter().map(|c| c.to_string()).collect();
    out.push_str(&format!("alphabet: {}\n", alphabet.join(" ")));
    out.push_str(&format!("states: {}\n", m.state_names().join(" ")));
    out.push_str(&format!("initial: {}\n", m.state_name(m.initial())));
    let finals: Vec<&str> = m
        .state_names()
        .iter()
        .enumerate()
        .filter(|(i, _)| m.is_final(crate::automaton::StateId(*i)))
        .map(|(_, n)| n.as_str())
        .collect();
    out.push_str(&format!("final: {}\n", finals.join(" ")));
    for t in m.transitions() {
        let label = match t.distance {
            Some(d) => format!(" @{d}"),
            None => String::new(),
        };
        out.push_str(&format!(
            "trans: {} {} {} {}{}\n",
            m.state_name(t.from),
            word_to_text(&t.u),
            word_to_text(&t.v),
            m.state_name(t.to),
            label
        ));
    }
    out
}

pub fn parse_grammar(text: &str) -> Result<LinearGrammar, ParseError> {
    let mut lines = Lines {
        items: content_lines(text),
        pos: 0,
    };
    match lines.next() {
        Some((_, l)) if l == GRAMMAR_HEADER => {}
        Some((n, l)) => {
            return err(
                n,
                format!("expected header `{GRAMMAR_HEADER}`, found `{l}`"),
            )
        }
        None => return err(1, "empty file"),
    }
    let (_, start) = lines.expect_keyed("start:")?;

    let mut productions = Vec::new();
    while let Some((n, l)) = lines.next() {
        let rest = match l.strip_prefix("prod:") {
            Some(rest) => rest.trim(),
            None => return err(n, format!("expected `prod:` line, found `{l}`")),
        };
        let (head, body_text) = match rest.split_once("->") {
            Some((h, b)) => (h.trim(), b.trim()),
            None => return err(n, "expected `prod: <NT> -> <body>`"),
        };
        if !head.chars().next().is_some_and(|c| c.is_ascii_uppercase()) {
            return err(
                n,
                format!("nonterminal `{head}` must start with an uppercase letter"),
            );
        }
        let tokens: Vec<&str> = body_text.split_whitespace().collect();

        if tokens == ["_"] {
            productions.push(Production::terminal(head, ""));
            continue;
        }
        let mut left = String::new();
        let mut right = String::new();
        let mut nonterminal: Option<&str> = None;
        for token in &tokens {
            let first = token.chars().next().unwrap();
            if first.is_ascii_uppercase() {
                if nonterminal.is_some() {
                    return err(n, "linear bodies contain at most one nonterminal");
                }
                nonterminal = Some(token);
            } else if token.chars().all(|c| c.is_ascii_lowercase()) {
                if nonterminal.is_none() {
                    left.push_str(token);
                } else {
                    right.push_str(token);
                }
            } else {
                return err(n, format!("bad body token `{token}`"));
            }
        }
        productions.push(match nonterminal {
            Some(nt) => Production::linear(head, &left, nt, &right),
            None if tokens.is_empty() => return err(n, "empty body; use `_` for lambda"),
            None => Production::terminal(head, &left),
        });
    }

    LinearGrammar::new(start, productions).map_err(|e| ParseError {
        line: 1,
        message: e.to_string(),
    })
}

pub fn grammar_to_text(g: &LinearGrammar) -> String {
    let mut out = String::new();
    out.push_str(GRAMMAR_HEADER);
    out.push('\n');
    out.push_str(&format!("start: {}\n", g.start()));
    for p in g.productions() {
        let body = match &p.body {
            Body::Terminal(w) => word_to_text(w),
            Body::Linear {
                left,
                nonterminal,
                right,
            } => {
                let mut parts = Vec::new();
                if !left.is_empty() {
                    parts.push(left.clone());
                }
                parts.push(nonterminal.clone());
                if !right.is_empty() {
                    parts.push(right.clone());
                }
                parts.join(" ")
            }
        };
        out.push_str(&format!("prod: {} -> {}\n", p.head, body));
    }
    out
}

/// Parse either file kind, deciding by the header line.
pub fn parse_any(text: &str) -> Result<FileKind, ParseError> {
    let header = content_lines(text).first().map(|(_, l)| *l);
    match header {
        Some(MACHINE_HEADER) => parse_machine(text).map(FileKind::Machine),
        Some(GRAMMAR_HEADER) => parse_grammar(text).map(FileKind::Grammar),
        Some(other) => err(1, format!("unknown header `{other}`")),
        None => err(1, "empty file"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A_THEN_B: &str = "\
wk-automaton
alphabet: a b
states: q0
initial: q0
final: q0
trans: q0 a _ q0
trans: q0 _ b q0
";

    #[test]
    fn parse_and_serialize_machine() {
        let m = parse_machine(A_THEN_B).unwrap();
        assert!(m.accepts("aabb").unwrap());
        assert_eq!(machine_to_text(&m), A_THEN_B);
        assert_eq!(parse_machine(&machine_to_text(&m)).unwrap(), m);
    }

    #[test]
    fn parse_machine_with_labels() {
        let text = "\
wk-automaton
alphabet: a
states: q0
initial: q0
final: q0
trans: q0 a _ q0 @inf
trans: q0 a _ q0 @1
";
        let m = parse_machine(text).unwrap();
        assert_eq!(m.model(), crate::Model::Legacy);
        assert!(m.legacy_accepts("aa").unwrap());
        assert_eq!(parse_machine(&machine_to_text(&m)).unwrap(), m);
    }

    #[test]
    fn mixed_labels_rejected() {
        let text = "\
wk-automaton
alphabet: a
states: q0
initial: q0
final: q0
trans: q0 a _ q0 @inf
trans: q0 _ a q0
";
        let e = parse_machine(text).unwrap_err();
        assert!(e.message.contains("distance label"), "{e}");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = parse_machine("wk-automaton\nalphabet: ab\n").unwrap_err();
        assert_eq!(e.line, 2);

        let text = "\
wk-automaton
alphabet: a
states: q0
initial: q0
final: q0
trans: q0 a q0
";
        let e = parse_machine(text).unwrap_err();
        assert_eq!(e.line, 6);
        assert!(e.to_string().starts_with("line 6:"), "{e}");

        let e = parse_machine("nonsense\n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "\
# a machine
wk-automaton

alphabet: a
states: q0
initial: q0
# everything is final
final: q0
trans: q0 a _ q0
";
        let m = parse_machine(text).unwrap();
        assert!(m.accepts("aaa").unwrap());
    }

    #[test]
    fn duplicate_transitions_dedupe_on_load() {
        let text = "\
wk-automaton
alphabet: a
states: q0
initial: q0
final: q0
trans: q0 a _ q0
trans: q0 a _ q0
";
        let m = parse_machine(text).unwrap();
        assert_eq!(m.transitions().len(), 1);
    }

    const ASB: &str = "\
linear-grammar
start: S
prod: S -> a T
prod: T -> S b
prod: S -> a
";

    #[test]
    fn parse_and_serialize_grammar() {
        let g = parse_grammar(ASB).unwrap();
        assert!(g.derives("aab"));
        assert_eq!(grammar_to_text(&g), ASB);
        assert_eq!(parse_grammar(&grammar_to_text(&g)).unwrap(), g);
    }

    #[test]
    fn grammar_lambda_and_multi_terminal_bodies() {
        let text = "\
linear-grammar
start: S
prod: S -> ab S ba
prod: S -> _
";
        let g = parse_grammar(text).unwrap();
        assert!(g.derives(""));
        assert!(g.derives("abba"));
        assert!(!g.derives("ab"));
        assert_eq!(parse_grammar(&grammar_to_text(&g)).unwrap(), g);
    }

    #[test]
    fn grammar_rejects_two_nonterminals() {
        let text = "\
linear-grammar
start: S
prod: S -> A B
";
        let e = parse_grammar(text).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("at most one nonterminal"));
    }

    #[test]
    fn parse_any_dispatches_on_header() {
        assert!(matches!(parse_any(A_THEN_B), Ok(FileKind::Machine(_))));
        assert!(matches!(parse_any(ASB), Ok(FileKind::Grammar(_))));
        assert!(parse_any("who knows\n").is_err());
    }
}
