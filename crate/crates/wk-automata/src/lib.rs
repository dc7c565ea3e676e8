//! Two-head finite automata that read one input word from both ends.
//!
//! A *Watson-Crick (WK) automaton* here is a finite-state machine with two
//! read-only heads on a single word: the left head starts at the first
//! letter and moves right, the right head starts at the last letter and
//! moves left. A transition `(q, u, v) -> q'` consumes the prefix `u` and
//! the suffix `v` of the still-unread infix, which must be long enough to
//! hold both reads side by side. The word is accepted when the heads meet
//! (nothing is left unread) in a final state.
//!
//! The crate implements two acceptance semantics:
//!
//! * the plain model ([`Model::New`]), where the meeting of the heads is
//!   enforced purely by the configuration (the unread infix can never be
//!   read twice), and
//! * the distance-gated model ([`Model::Legacy`]), where every transition
//!   carries a [`DistanceLabel`] from `{0, 1, …, r, inf}` and fires only
//!   when the label matches the sensed head distance (see [`legacy`]).
//!
//! On top of the machine model the crate provides:
//!
//! * [`variants`] — classification into the restricted machine types
//!   (stateless `N`, all-final `F`, simple `S`, 1-limited `1` and their
//!   combinations such as `N1` or `FS`),
//! * [`grammar`] — linear context-free grammars with constructive
//!   conversions in both directions (grammar to 1-limited automaton and
//!   automaton to grammar), plus an independent derivability oracle,
//! * [`bounded`] — bounded-language enumeration and equivalence testing,
//! * [`oracles`] and [`corpus`] — decidable predicates for a family of
//!   witness languages together with reference machines accepting them,
//! * [`suite`] — a pass/fail report over the whole corpus, including the
//!   length-set obstructions that separate the machine classes,
//! * [`format`] — the text file formats used by the `wk` command-line
//!   tool.
//!
//! ```
//! use wk_automata::WkAutomaton;
//!
//! // One final state, the left head eats `a`s, the right head eats `b`s:
//! // the machine accepts { a^n b^m | n, m >= 0 }.
//! let m = WkAutomaton::builder()
//!     .alphabet("ab")
//!     .states(&["q0"])
//!     .initial("q0")
//!     .finals(&["q0"])
//!     .transition("q0", "a", "", "q0")
//!     .transition("q0", "", "b", "q0")
//!     .build()
//!     .unwrap();
//!
//! assert!(m.accepts("aabbb").unwrap());
//! assert!(m.accepts("").unwrap());
//! assert!(!m.accepts("ba").unwrap());
//! ```

pub mod automaton;
pub mod bounded;
pub mod corpus;
pub mod format;
pub mod grammar;
pub mod legacy;
pub mod oracles;
pub mod suite;
pub mod variants;

pub use automaton::{
    AutomatonError, Configuration, DistanceLabel, Model, StateId, Trace, TraceStep, Transition,
    WkAutomaton,
};
pub use bounded::{
    accepted_lengths, enumerate_language, equivalent_up_to, lengths_downward_closed,
    shortest_word_necessary_condition, words_up_to, LanguageRef,
};
pub use corpus::{corpus, legacy_gate_witness, CellKind, ColumnClass, CorpusEntry};
pub use grammar::{Body, GrammarError, LinearGrammar, Production};
pub use legacy::sensed_distance;
pub use oracles::{builtin_oracles, oracle_by_name, LanguageOracle};
pub use suite::{run_suite, run_suite_on, CellReport, CellStatus, SuiteReport};
pub use variants::{validate_declared, VariantFlag, VariantFlags, Violation};
