//! Corpus-wide pass/fail report.
//!
//! For every corpus entry the suite checks, in a fixed order:
//!
//! 1. `<lang>/variant` — the machine really has its declared flags;
//! 2. `<lang>/oracle` — machine and oracle agree on every word up to the
//!    length bound;
//! 3. `<lang>/<class>` — one cell per class claim: positive cells check
//!    the machine's membership in the class, shortest-word cells check the
//!    mechanical exclusion argument, documented cells record claims that
//!    bounded testing cannot decide;
//! 4. `<lang>/lengths` — for all-final 1-limited machines, the accepted
//!    length set is downward closed.
//!
//! The report renders both as an aligned table and as stable
//! `cell=<id> status=<status> witness=<word|->` lines; both forms are
//! byte-deterministic for a given corpus and bound.

use std::fmt;

use crate::bounded::{
    equivalent_up_to, lengths_downward_closed, shortest_word_necessary_condition, words_up_to,
    LanguageRef,
};
use crate::corpus::{corpus, CellKind, CorpusEntry};
use crate::variants::validate_declared;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellStatus {
    Pass,
    Fail,
    Documented,
}

impl fmt::Display for CellStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CellStatus::Pass => "pass",
            CellStatus::Fail => "fail",
            CellStatus::Documented => "documented",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    pub id: String,
    pub status: CellStatus,
    /// First disagreeing word for failed comparisons, `None` otherwise.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub max_len: usize,
    pub cells: Vec<CellReport>,
}

impl SuiteReport {
    /// True iff no non-documented cell failed.
    pub fn passed(&self) -> bool {
        self.cells.iter().all(|c| c.status != CellStatus::Fail)
    }

    pub fn count(&self, status: CellStatus) -> usize {
        self.cells.iter().filter(|c| c.status == status).count()
    }

    fn witness_text(cell: &CellReport) -> String {
        match &cell.witness {
            None => "-".to_string(),
            Some(w) if w.is_empty() => "_".to_string(),
            Some(w) => w.clone(),
        }
    }

    /// Aligned human-readable table.
    pub fn to_table(&self) -> String {
        let width = self
            .cells
            .iter()
            .map(|c| c.id.len())
            .max()
            .unwrap_or(4)
            .max("cell".len());
        let mut out = String::new();
        out.push_str(&format!("{:<width$}  {:<10}  witness\n", "cell", "status"));
        for cell in &self.cells {
            out.push_str(&format!(
                "{:<width$}  {:<10}  {}\n",
                cell.id,
                cell.status.to_string(),
                Self::witness_text(cell),
            ));
        }
        out
    }

    /// Stable machine-readable line format.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for cell in &self.cells {
            out.push_str(&format!(
                "cell={} status={} witness={}\n",
                cell.id,
                cell.status,
                Self::witness_text(cell),
            ));
        }
        out
    }

    pub fn summary(&self) -> String {
        format!(
            "{} cells: {} pass, {} fail, {} documented (max_len={})",
            self.cells.len(),
            self.count(CellStatus::Pass),
            self.count(CellStatus::Fail),
            self.count(CellStatus::Documented),
            self.max_len
        )
    }
}

/// Run the checks over a custom corpus. Cells are independent and
/// aggregated in corpus order.
pub fn run_suite_on(entries: &[CorpusEntry], max_len: usize) -> SuiteReport {
    let mut cells = Vec::new();
    for entry in entries {
        let lang = entry.oracle.name();

        let violations = validate_declared(&entry.machine, entry.declared);
        cells.push(CellReport {
            id: format!("{lang}/variant"),
            status: if violations.is_empty() {
                CellStatus::Pass
            } else {
                CellStatus::Fail
            },
            witness: None,
        });

        let disagreement = equivalent_up_to(
            &LanguageRef::Machine(&entry.machine),
            &LanguageRef::Oracle(&entry.oracle),
            max_len,
        );
        cells.push(CellReport {
            id: format!("{lang}/oracle"),
            status: if disagreement.is_none() {
                CellStatus::Pass
            } else {
                CellStatus::Fail
            },
            witness: disagreement,
        });

        let flags = entry.machine.classify();
        for (column, kind) in &entry.cells {
            let id = format!("{lang}/{}", column.name());
            let report = match kind {
                CellKind::Positive => CellReport {
                    id,
                    status: if flags.satisfies(column.required_flags()) {
                        CellStatus::Pass
                    } else {
                        CellStatus::Fail
                    },
                    witness: None,
                },
                CellKind::ExcludedByShortestWord => {
                    // Confirmed when the shortest nonempty word within the
                    // bound has length >= 2; vacuously confirmed when the
                    // bound shows no nonempty word at all. A length-1 word
                    // refutes the exclusion argument.
                    let shortest = shortest_word_necessary_condition(&entry.oracle, max_len);
                    let refuted = shortest == 1;
                    let witness = if refuted {
                        words_up_to(&entry.oracle.alphabet(), 1)
                            .into_iter()
                            .find(|w| !w.is_empty() && entry.oracle.contains(w))
                    } else {
                        None
                    };
                    CellReport {
                        id,
                        status: if refuted {
                            CellStatus::Fail
                        } else {
                            CellStatus::Pass
                        },
                        witness,
                    }
                }
                CellKind::Documented => CellReport {
                    id,
                    status: CellStatus::Documented,
                    witness: None,
                },
            };
            cells.push(report);
        }

        if flags.all_final && flags.one_limited {
            let closed =
                lengths_downward_closed(&entry.machine, max_len).expect("flags checked above");
            cells.push(CellReport {
                id: format!("{lang}/lengths"),
                status: if closed {
                    CellStatus::Pass
                } else {
                    CellStatus::Fail
                },
                witness: None,
            });
        }
    }
    SuiteReport { max_len, cells }
}

/// Run the checks over the built-in corpus.
pub fn run_suite(max_len: usize) -> SuiteReport {
    run_suite_on(&corpus(), max_len)
}
