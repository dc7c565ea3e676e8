//! Restricted machine types: stateless (`N`), all-final (`F`), simple
//! (`S`, at most one head moves per step) and 1-limited (`1`, exactly one
//! letter per step), plus their combinations.

use std::fmt;

use crate::automaton::WkAutomaton;

/// Which of the four restrictions a machine satisfies.
///
/// By definition `stateless` implies `all_final` (the single state is both
/// initial and final) and `one_limited` implies `simple`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VariantFlags {
    pub stateless: bool,
    pub all_final: bool,
    pub simple: bool,
    pub one_limited: bool,
}

impl VariantFlags {
    pub const NONE: VariantFlags = VariantFlags {
        stateless: false,
        all_final: false,
        simple: false,
        one_limited: false,
    };

    pub const fn new(stateless: bool, all_final: bool, simple: bool, one_limited: bool) -> Self {
        VariantFlags {
            stateless,
            all_final,
            simple,
            one_limited,
        }
    }

    /// True iff every restriction required by `other` also holds here.
    pub fn satisfies(&self, other: VariantFlags) -> bool {
        (!other.stateless || self.stateless)
            && (!other.all_final || self.all_final)
            && (!other.simple || self.simple)
            && (!other.one_limited || self.one_limited)
    }

    /// The flags that hold, as the conventional letters `N F S 1`.
    pub fn letters(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.stateless {
            out.push("N");
        }
        if self.all_final {
            out.push("F");
        }
        if self.simple {
            out.push("S");
        }
        if self.one_limited {
            out.push("1");
        }
        out
    }

    /// Canonical name of the most restricted class the flags witness:
    /// `N1`, `NS`, `N`, `F1`, `FS`, `F`, `1`, `S`, or `WK` for an
    /// unrestricted machine.
    pub fn class_name(&self) -> &'static str {
        if self.stateless {
            if self.one_limited {
                "N1"
            } else if self.simple {
                "NS"
            } else {
                "N"
            }
        } else if self.all_final {
            if self.one_limited {
                "F1"
            } else if self.simple {
                "FS"
            } else {
                "F"
            }
        } else if self.one_limited {
            "1"
        } else if self.simple {
            "S"
        } else {
            "WK"
        }
    }
}

impl fmt::Display for VariantFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.letters();
        if letters.is_empty() {
            return write!(f, "WK");
        }
        write!(f, "{}", letters.join(" "))?;
        let name = self.class_name();
        if name.len() > 1 {
            write!(f, " ({name})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantFlag {
    Stateless,
    AllFinal,
    Simple,
    OneLimited,
}

impl fmt::Display for VariantFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VariantFlag::Stateless => "N",
            VariantFlag::AllFinal => "F",
            VariantFlag::Simple => "S",
            VariantFlag::OneLimited => "1",
        };
        write!(f, "{s}")
    }
}

/// A declared restriction the machine does not actually satisfy, with the
/// offending state or transition spelled out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub flag: VariantFlag,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.flag, self.detail)
    }
}

impl WkAutomaton {
    /// Compute which restrictions the machine satisfies. A machine with no
    /// transitions is vacuously simple and 1-limited.
    pub fn classify(&self) -> VariantFlags {
        let all_final = self.finals().len() == self.state_count();
        let stateless = self.state_count() == 1 && all_final;
        let simple = self
            .transitions()
            .iter()
            .all(|t| t.u.is_empty() || t.v.is_empty());
        let one_limited = self
            .transitions()
            .iter()
            .all(|t| t.u.len() + t.v.len() == 1);
        VariantFlags {
            stateless,
            all_final,
            simple,
            one_limited,
        }
    }
}

/// Check a declared classification against the machine, returning one
/// violation per failed flag.
pub fn validate_declared(m: &WkAutomaton, declared: VariantFlags) -> Vec<Violation> {
    let actual = m.classify();
    let mut out = Vec::new();

    if declared.stateless && !actual.stateless {
        let detail = if m.state_count() != 1 {
            format!("machine has {} states", m.state_count())
        } else {
            format!("single state `{}` is not final", m.state_names()[0])
        };
        out.push(Violation {
            flag: VariantFlag::Stateless,
            detail,
        });
    }
    if declared.all_final && !actual.all_final {
        let non_final = (0..m.state_count())
            .map(crate::automaton::StateId)
            .find(|id| !m.is_final(*id))
            .expect("some state is not final");
        out.push(Violation {
            flag: VariantFlag::AllFinal,
            detail: format!("state `{}` is not final", m.state_name(non_final)),
        });
    }
    if declared.simple && !actual.simple {
        let (i, _) = m
            .transitions()
            .iter()
            .enumerate()
            .find(|(_, t)| !t.u.is_empty() && !t.v.is_empty())
            .expect("some transition moves both heads");
        out.push(Violation {
            flag: VariantFlag::Simple,
            detail: format!("transition {} moves both heads", m.describe_transition(i)),
        });
    }
    if declared.one_limited && !actual.one_limited {
        let (i, t) = m
            .transitions()
            .iter()
            .enumerate()
            .find(|(_, t)| t.u.len() + t.v.len() != 1)
            .expect("some transition does not read exactly one letter");
        out.push(Violation {
            flag: VariantFlag::OneLimited,
            detail: format!(
                "transition {} reads {} letters",
                m.describe_transition(i),
                t.u.len() + t.v.len()
            ),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::WkAutomaton;

    fn a_then_b() -> WkAutomaton {
        WkAutomaton::builder()
            .alphabet("ab")
            .states(&["q0"])
            .initial("q0")
            .finals(&["q0"])
            .transition("q0", "a", "", "q0")
            .transition("q0", "", "b", "q0")
            .build()
            .unwrap()
    }

    fn triple_a_double_b() -> WkAutomaton {
        WkAutomaton::builder()
            .alphabet("ab")
            .states(&["q0"])
            .initial("q0")
            .finals(&["q0"])
            .transition("q0", "aaa", "", "q0")
            .transition("q0", "", "bb", "q0")
            .build()
            .unwrap()
    }

    #[test]
    fn classify_n1() {
        let flags = a_then_b().classify();
        assert_eq!(flags, VariantFlags::new(true, true, true, true));
        assert_eq!(flags.class_name(), "N1");
        assert_eq!(flags.to_string(), "N F S 1 (N1)");
    }

    #[test]
    fn classify_ns() {
        let flags = triple_a_double_b().classify();
        assert_eq!(flags, VariantFlags::new(true, true, true, false));
        assert_eq!(flags.class_name(), "NS");
        assert_eq!(flags.to_string(), "N F S (NS)");
    }

    #[test]
    fn classify_two_state_both_heads() {
        let m = WkAutomaton::builder()
            .alphabet("ab")
            .states(&["q0", "q1"])
            .initial("q0")
            .finals(&["q0", "q1"])
            .transition("q0", "a", "b", "q1")
            .build()
            .unwrap();
        let flags = m.classify();
        assert_eq!(flags, VariantFlags::new(false, true, false, false));
        assert_eq!(flags.class_name(), "F");
        assert_eq!(flags.to_string(), "F");
    }

    #[test]
    fn classify_no_transitions_is_vacuously_n1() {
        let m = WkAutomaton::builder()
            .alphabet("a")
            .states(&["q0"])
            .initial("q0")
            .finals(&["q0"])
            .build()
            .unwrap();
        assert_eq!(m.classify().class_name(), "N1");
    }

    #[test]
    fn classify_respects_implications() {
        for m in [a_then_b(), triple_a_double_b()] {
            let f = m.classify();
            assert!(!f.stateless || f.all_final);
            assert!(!f.one_limited || f.simple);
        }
    }

    #[test]
    fn validate_ok() {
        let violations = validate_declared(&a_then_b(), VariantFlags::new(true, true, true, true));
        assert!(violations.is_empty());
    }

    #[test]
    fn validate_reports_offending_transition() {
        let violations = validate_declared(
            &triple_a_double_b(),
            VariantFlags::new(false, false, false, true),
        );
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].flag, VariantFlag::OneLimited);
        assert!(violations[0].detail.contains("reads 3 letters"));
        assert!(violations[0].detail.contains("aaa"));
    }

    #[test]
    fn validate_nothing_declared() {
        let violations = validate_declared(&triple_a_double_b(), VariantFlags::NONE);
        assert!(violations.is_empty());
    }

    #[test]
    fn validate_non_final_state_named() {
        let m = WkAutomaton::builder()
            .alphabet("a")
            .states(&["q0", "q1"])
            .initial("q0")
            .finals(&["q0"])
            .transition("q0", "a", "", "q1")
            .build()
            .unwrap();
        let violations = validate_declared(&m, VariantFlags::new(false, true, false, false));
        assert_eq!(violations.len(), 1);
        assert!(violations[0].detail.contains("q1"));
    }
}
