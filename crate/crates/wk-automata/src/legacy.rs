//! The distance-gated acceptance semantics.
//!
//! A legacy machine labels every transition with a [`DistanceLabel`] from
//! `{0, 1, …, r, inf}` where `r` is the machine radius. Before each step
//! the machine senses the distance between its heads — here equal to the
//! length of the unread infix, because the heads read strictly inward from
//! the two ends — and a transition fires only when its label matches the
//! sensed value. The gate can only remove computations, so the gated
//! language is always a subset of the label-stripped machine's language,
//! and the subset can be proper: see [`crate::corpus::legacy_gate_witness`].

use crate::automaton::{DistanceLabel, Model, WkAutomaton};

/// Distance as the machine senses it: exact while the unread part fits
/// within the radius, `inf` beyond it.
pub fn sensed_distance(unread_len: usize, radius: usize) -> DistanceLabel {
    if unread_len <= radius {
        DistanceLabel::Finite(unread_len)
    } else {
        DistanceLabel::Infinite
    }
}

impl WkAutomaton {
    /// Membership under the distance-gated semantics. Errors on new-model
    /// machines and on words with symbols outside the alphabet.
    pub fn legacy_accepts(&self, word: &str) -> Result<bool, crate::AutomatonError> {
        if self.model() != Model::Legacy {
            return Err(crate::AutomatonError::WrongModel {
                expected: Model::Legacy,
                actual: self.model(),
            });
        }
        self.recognizes(word)
    }

    /// Embed a new-model machine into the legacy model: every transition
    /// is copied once per label in `{0, …, radius, inf}`, so the gate
    /// never blocks anything and the language is unchanged.
    pub fn lift_to_legacy(&self) -> Result<WkAutomaton, crate::AutomatonError> {
        if self.model() != Model::New {
            return Err(crate::AutomatonError::WrongModel {
                expected: Model::New,
                actual: self.model(),
            });
        }
        let radius = self.radius();
        let mut transitions = Vec::new();
        for t in self.transitions() {
            for d in 0..=radius {
                let mut copy = t.clone();
                copy.distance = Some(DistanceLabel::Finite(d));
                transitions.push(copy);
            }
            let mut copy = t.clone();
            copy.distance = Some(DistanceLabel::Infinite);
            transitions.push(copy);
        }
        Ok(WkAutomaton::from_parts(
            self.alphabet().clone(),
            self.state_names().to_vec(),
            self.initial(),
            self.finals().clone(),
            transitions,
            Model::Legacy,
        ))
    }

    /// Drop all distance labels, deduplicating transitions that differed
    /// only in their label. The result is a new-model machine whose
    /// language contains the gated language.
    pub fn strip_labels(&self) -> WkAutomaton {
        let mut transitions = Vec::new();
        for t in self.transitions() {
            let mut copy = t.clone();
            copy.distance = None;
            if !transitions.contains(&copy) {
                transitions.push(copy);
            }
        }
        WkAutomaton::from_parts(
            self.alphabet().clone(),
            self.state_names().to_vec(),
            self.initial(),
            self.finals().clone(),
            transitions,
            Model::New,
        )
    }
}
