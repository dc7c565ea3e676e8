//! Reference machines for the built-in witness languages.
//!
//! Each entry pairs a [`LanguageOracle`] with a machine reconstructed to
//! accept exactly that language in a declared variant class, plus the
//! claims made about the other classes. Machine correctness is judged
//! purely by bounded equivalence against the oracle; the per-class claims
//! come in three kinds (see [`CellKind`]).

use crate::automaton::WkAutomaton;
use crate::oracles::{oracle_by_name, LanguageOracle};
use crate::variants::VariantFlags;

/// One machine class column: `N1`, `NS`, `N`, `F1`, `FS`, `F`, or the
/// unrestricted class `WK`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnClass {
    N1,
    Ns,
    N,
    F1,
    Fs,
    F,
    Wk,
}

impl ColumnClass {
    pub const ALL: [ColumnClass; 7] = [
        ColumnClass::N1,
        ColumnClass::Ns,
        ColumnClass::N,
        ColumnClass::F1,
        ColumnClass::Fs,
        ColumnClass::F,
        ColumnClass::Wk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ColumnClass::N1 => "N1",
            ColumnClass::Ns => "NS",
            ColumnClass::N => "N",
            ColumnClass::F1 => "F1",
            ColumnClass::Fs => "FS",
            ColumnClass::F => "F",
            ColumnClass::Wk => "WK",
        }
    }

    /// The flags a machine must have to belong to the class.
    pub fn required_flags(self) -> VariantFlags {
        match self {
            ColumnClass::N1 => VariantFlags::new(true, false, false, true),
            ColumnClass::Ns => VariantFlags::new(true, false, true, false),
            ColumnClass::N => VariantFlags::new(true, false, false, false),
            ColumnClass::F1 => VariantFlags::new(false, true, false, true),
            ColumnClass::Fs => VariantFlags::new(false, true, true, false),
            ColumnClass::F => VariantFlags::new(false, true, false, false),
            ColumnClass::Wk => VariantFlags::NONE,
        }
    }
}

/// What the corpus claims about one (language, class) cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellKind {
    /// The entry's machine itself belongs to the class, witnessing
    /// membership of the language.
    Positive,
    /// The language is not in the class, and mechanically checkably so:
    /// its shortest nonempty word has length >= 2, which the downward
    /// closure of length sets forbids for all-final 1-limited machines.
    ExcludedByShortestWord,
    /// The language is not in the class, but the argument is
    /// model-theoretic and out of reach of bounded testing; the claim is
    /// recorded, never silently dropped.
    Documented,
}

/// A witness language, a machine for it, the machine's declared class,
/// and the per-class claims.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub oracle: LanguageOracle,
    pub machine: WkAutomaton,
    pub declared: VariantFlags,
    pub cells: Vec<(ColumnClass, CellKind)>,
}

fn must(builder: crate::automaton::Builder) -> WkAutomaton {
    builder.build().expect("corpus machine is valid")
}

/// N1 machine for L1: the left head eats `a`s, the right head eats `b`s.
fn machine_l1() -> WkAutomaton {
    must(
        WkAutomaton::builder()
            .alphabet("ab")
            .states(&["q0"])
            .initial("q0")
            .finals(&["q0"])
            .transition("q0", "a", "", "q0")
            .transition("q0", "", "b", "q0"),
    )
}

/// NS machine for L2: `a`s in threes on the left, `b`s in pairs on the
/// right.
fn machine_l2() -> WkAutomaton {
    must(
        WkAutomaton::builder()
            .alphabet("ab")
            .states(&["q0"])
            .initial("q0")
            .finals(&["q0"])
            .transition("q0", "aaa", "", "q0")
            .transition("q0", "", "bb", "q0"),
    )
}

/// N machine for L3: each loop adds (2,1) or (1,2) to the `a`/`b` counts.
fn machine_l3() -> WkAutomaton {
    must(
        WkAutomaton::builder()
            .alphabet("ab")
            .states(&["q0"])
            .initial("q0")
            .finals(&["q0"])
            .transition("q0", "aa", "b", "q0")
            .transition("q0", "a", "bb", "q0"),
    )
}

/// N machine for L4: both heads read the same letter, so the right half
/// mirrors the left half.
fn machine_l4() -> WkAutomaton {
    must(
        WkAutomaton::builder()
            .alphabet("ab")
            .states(&["q0"])
            .initial("q0")
            .finals(&["q0"])
            .transition("q0", "a", "a", "q0")
            .transition("q0", "b", "b", "q0"),
    )
}

/// F1 machine for L5: a two-state all-final cycle alternating one `a` on
/// the left with one `b` on the right; stopping after the `a` gives the
/// n = m + 1 words.
fn machine_l5() -> WkAutomaton {
    must(
        WkAutomaton::builder()
            .alphabet("ab")
            .states(&["p", "q"])
            .initial("p")
            .finals(&["p", "q"])
            .transition("p", "a", "", "q")
            .transition("q", "", "b", "p"),
    )
}

/// FS machine for L6: the same cycle reading `aa` and `bb` blocks.
fn machine_l6() -> WkAutomaton {
    must(
        WkAutomaton::builder()
            .alphabet("ab")
            .states(&["p", "q"])
            .initial("p")
            .finals(&["p", "q"])
            .transition("p", "aa", "", "q")
            .transition("q", "", "bb", "p"),
    )
}

/// F machine for L7: the L3-style loops build the `a`/`b` blocks, and an
/// optional final step reads `cc` with both heads, planting `cccc` in the
/// middle.
fn machine_l7() -> WkAutomaton {
    must(
        WkAutomaton::builder()
            .alphabet("abc")
            .states(&["p", "r"])
            .initial("p")
            .finals(&["p", "r"])
            .transition("p", "aa", "b", "p")
            .transition("p", "a", "bb", "p")
            .transition("p", "cc", "cc", "r"),
    )
}

/// Unrestricted machine for L8: the first step pairs an `a` with the
/// closing `c`, the loop matches `a`s with `b`s, and the exit pairs the
/// middle `c` with the last `b`.
fn machine_l8() -> WkAutomaton {
    must(
        WkAutomaton::builder()
            .alphabet("abc")
            .states(&["q0", "q1", "q2"])
            .initial("q0")
            .finals(&["q2"])
            .transition("q0", "a", "c", "q1")
            .transition("q1", "a", "b", "q1")
            .transition("q1", "c", "b", "q2"),
    )
}

/// A legacy machine whose gated language ({ lambda }) is a proper subset
/// of its label-stripped language (a*): the only loop is labeled `inf`,
/// so the final letter can never be consumed.
pub fn legacy_gate_witness() -> WkAutomaton {
    must(
        WkAutomaton::builder()
            .alphabet("a")
            .states(&["q0"])
            .initial("q0")
            .finals(&["q0"])
            .legacy_transition(
                "q0",
                "a",
                "",
                "q0",
                crate::automaton::DistanceLabel::Infinite,
            ),
    )
}

use CellKind::{Documented as Doc, ExcludedByShortestWord as Short, Positive as Pos};
use ColumnClass::*;

/// The full corpus, one entry per built-in oracle, in oracle order.
pub fn corpus() -> Vec<CorpusEntry> {
    let entry = |name: &str,
                 machine: WkAutomaton,
                 declared: VariantFlags,
                 cells: Vec<(ColumnClass, CellKind)>| CorpusEntry {
        oracle: oracle_by_name(name).expect("built-in oracle"),
        machine,
        declared,
        cells,
    };

    vec![
        entry(
            "L1",
            machine_l1(),
            VariantFlags::new(true, true, true, true),
            vec![
                (N1, Pos),
                (Ns, Pos),
                (N, Pos),
                (F1, Pos),
                (Fs, Pos),
                (F, Pos),
                (Wk, Pos),
            ],
        ),
        entry(
            "L2",
            machine_l2(),
            VariantFlags::new(true, true, true, false),
            vec![
                (N1, Short),
                (Ns, Pos),
                (N, Pos),
                (F1, Short),
                (Fs, Pos),
                (F, Pos),
                (Wk, Pos),
            ],
        ),
        entry(
            "L3",
            machine_l3(),
            VariantFlags::new(true, true, false, false),
            // No claim is made about L3 and the FS class.
            vec![
                (N1, Short),
                (Ns, Doc),
                (N, Pos),
                (F1, Short),
                (F, Pos),
                (Wk, Pos),
            ],
        ),
        entry(
            "L4",
            machine_l4(),
            VariantFlags::new(true, true, false, false),
            vec![
                (N1, Doc),
                (Ns, Doc),
                (N, Pos),
                (F1, Doc),
                (Fs, Doc),
                (F, Pos),
                (Wk, Pos),
            ],
        ),
        entry(
            "L5",
            machine_l5(),
            VariantFlags::new(false, true, true, true),
            vec![
                (N1, Doc),
                (Ns, Doc),
                (N, Doc),
                (F1, Pos),
                (Fs, Pos),
                (F, Pos),
                (Wk, Pos),
            ],
        ),
        entry(
            "L6",
            machine_l6(),
            VariantFlags::new(false, true, true, false),
            vec![
                (N1, Doc),
                (Ns, Doc),
                (N, Doc),
                (F1, Short),
                (Fs, Pos),
                (F, Pos),
                (Wk, Pos),
            ],
        ),
        entry(
            "L7",
            machine_l7(),
            VariantFlags::new(false, true, false, false),
            vec![
                (N1, Doc),
                (Ns, Doc),
                (N, Doc),
                (F1, Doc),
                (Fs, Doc),
                (F, Pos),
                (Wk, Pos),
            ],
        ),
        entry(
            "L8",
            machine_l8(),
            VariantFlags::NONE,
            vec![
                (N1, Doc),
                (Ns, Doc),
                (N, Doc),
                (F1, Doc),
                (Fs, Doc),
                (F, Doc),
                (Wk, Pos),
            ],
        ),
    ]
}
