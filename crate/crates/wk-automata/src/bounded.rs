//! Bounded-language enumeration and equivalence testing.
//!
//! Everything here works on finite slices `L ∩ Σ^{<=k}` of a language.
//! [`enumerate_language`] generates a machine's slice by forward search
//! over `(state, left-read, right-read)` triples, which is a different
//! route through the semantics than the per-word configuration search in
//! [`WkAutomaton::accepts`]; the two are checked against each other in the
//! test suite.

use std::collections::{BTreeSet, HashSet, VecDeque};

use thiserror::Error;

use crate::automaton::{Model, WkAutomaton};
use crate::grammar::LinearGrammar;
use crate::oracles::LanguageOracle;

/// All words over `alphabet` of length at most `max_len`, in
/// length-then-lexicographic order (the empty word first).
pub fn words_up_to(alphabet: &BTreeSet<char>, max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        if alphabet.is_empty() {
            break;
        }
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for c in alphabet {
                let mut ext = w.clone();
                ext.push(*c);
                next.push(ext);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn sort_length_lex(mut words: Vec<String>) -> Vec<String> {
    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    words
}

/// All words of length at most `max_len` the machine accepts, in
/// length-then-lexicographic order.
///
/// For a new-model machine this searches forward over triples
/// `(state, u, v)` where `u` is everything read so far by the left head
/// and `v` by the right head: each transition extends `u` on the right and
/// `v` on the left, and a final state yields the accepted word `u·v`. For
/// a legacy machine the sensed distance depends on the concrete word, so
/// enumeration falls back to testing every word with the gated semantics.
pub fn enumerate_language(m: &WkAutomaton, max_len: usize) -> Vec<String> {
    match m.model() {
        Model::Legacy => {
            let words = words_up_to(m.alphabet(), max_len)
                .into_iter()
                .filter(|w| m.legacy_accepts(w).unwrap_or(false))
                .collect();
            sort_length_lex(words)
        }
        Model::New => {
            let mut accepted: HashSet<String> = HashSet::new();
            let mut seen: HashSet<(usize, String, String)> = HashSet::new();
            let mut queue: VecDeque<(usize, String, String)> = VecDeque::new();
            let start = (m.initial().index(), String::new(), String::new());
            seen.insert(start.clone());
            queue.push_back(start);
            while let Some((state, u, v)) = queue.pop_front() {
                if m.is_final(crate::automaton::StateId(state)) {
                    accepted.insert(format!("{u}{v}"));
                }
                for t in m.transitions() {
                    if t.from.index() != state {
                        continue;
                    }
                    if u.len() + t.u.len() + t.v.len() + v.len() > max_len {
                        continue;
                    }
                    let item = (t.to.index(), format!("{u}{}", t.u), format!("{}{v}", t.v));
                    if seen.insert(item.clone()) {
                        queue.push_back(item);
                    }
                }
            }
            sort_length_lex(accepted.into_iter().collect())
        }
    }
}

/// A language given as a machine, a grammar, or an oracle, for bounded
/// comparisons.
#[derive(Debug, Clone, Copy)]
pub enum LanguageRef<'a> {
    Machine(&'a WkAutomaton),
    Grammar(&'a LinearGrammar),
    Oracle(&'a LanguageOracle),
}

impl LanguageRef<'_> {
    pub fn alphabet(&self) -> BTreeSet<char> {
        match self {
            LanguageRef::Machine(m) => m.alphabet().clone(),
            LanguageRef::Grammar(g) => g.terminals().clone(),
            LanguageRef::Oracle(o) => o.alphabet(),
        }
    }

    /// Membership test valid for words up to `max_len`; words with
    /// symbols outside the alphabet are rejected.
    fn membership(&self, max_len: usize) -> Box<dyn Fn(&str) -> bool + '_> {
        match self {
            LanguageRef::Machine(m) => {
                let set: HashSet<String> = enumerate_language(m, max_len).into_iter().collect();
                Box::new(move |w| set.contains(w))
            }
            LanguageRef::Grammar(g) => {
                let set: HashSet<String> = g.generate(max_len).into_iter().collect();
                Box::new(move |w| set.contains(w))
            }
            LanguageRef::Oracle(o) => Box::new(move |w| o.contains(w)),
        }
    }
}

/// Compare two languages on every word of length at most `max_len` over
/// the union of their alphabets. `None` when they agree; otherwise the
/// length-lexicographically first disagreeing word.
pub fn equivalent_up_to(x: &LanguageRef, y: &LanguageRef, max_len: usize) -> Option<String> {
    let alphabet: BTreeSet<char> = x.alphabet().union(&y.alphabet()).copied().collect();
    let in_x = x.membership(max_len);
    let in_y = y.membership(max_len);
    words_up_to(&alphabet, max_len)
        .into_iter()
        .find(|w| in_x(w) != in_y(w))
}

/// The set of lengths of accepted words up to `max_len`.
pub fn accepted_lengths(m: &WkAutomaton, max_len: usize) -> BTreeSet<usize> {
    enumerate_language(m, max_len)
        .into_iter()
        .map(|w| w.len())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "the length-set property only applies to all-final 1-limited machines; this one is {class}"
)]
pub struct NotAllFinalOneLimited {
    pub class: String,
}

/// Downward closure of the accepted length set: an all-final 1-limited
/// machine reads one letter per step through final states only, so the
/// first `l` steps of a `k`-step accepting run accept a word of length
/// `l`. Returns whether the machine's length set up to `max_len` is
/// downward closed; errs on machines outside the all-final 1-limited
/// class, where the property is not guaranteed.
pub fn lengths_downward_closed(
    m: &WkAutomaton,
    max_len: usize,
) -> Result<bool, NotAllFinalOneLimited> {
    let flags = m.classify();
    if !(flags.all_final && flags.one_limited) {
        return Err(NotAllFinalOneLimited {
            class: flags.class_name().to_string(),
        });
    }
    let lengths = accepted_lengths(m, max_len);
    Ok(match lengths.iter().next_back() {
        None => true,
        Some(&max) => (0..=max).all(|l| lengths.contains(&l)),
    })
}

/// Length of the shortest nonempty word of the oracle's language, looking
/// no further than `max_len`; 0 when none exists within the bound.
///
/// A length of 2 or more rules out all-final 1-limited machines for the
/// language: by downward closure they would also have to accept a
/// one-letter word.
pub fn shortest_word_necessary_condition(oracle: &LanguageOracle, max_len: usize) -> usize {
    words_up_to(&oracle.alphabet(), max_len)
        .into_iter()
        .find(|w| !w.is_empty() && oracle.contains(w))
        .map(|w| w.len())
        .unwrap_or(0)
}
