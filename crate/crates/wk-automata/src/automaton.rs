//! Machine definition, configurations, and the search-based acceptance test.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::legacy::sensed_distance;

/// Index of a state inside its machine's state table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub(crate) usize);

impl StateId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Sensed head distance attached to a transition of a legacy machine.
///
/// Finite values range over `0..=radius`; everything farther reads as
/// [`DistanceLabel::Infinite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DistanceLabel {
    Finite(usize),
    Infinite,
}

impl fmt::Display for DistanceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceLabel::Finite(d) => write!(f, "{d}"),
            DistanceLabel::Infinite => write!(f, "inf"),
        }
    }
}

/// Which acceptance semantics a machine uses.
///
/// `New` machines carry no distance labels; `Legacy` machines carry one on
/// every transition and gate each step on the sensed head distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    New,
    Legacy,
}

/// One transition: in state `from`, read `u` with the left head and `v`
/// with the right head, then enter `to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub from: StateId,
    pub u: String,
    pub v: String,
    pub to: StateId,
    /// Present exactly on legacy machines.
    pub distance: Option<DistanceLabel>,
}

/// Current state plus the unread infix `w[lo..hi)` of a fixed input word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Configuration {
    pub state: StateId,
    pub lo: usize,
    pub hi: usize,
}

impl Configuration {
    pub fn new(state: StateId, lo: usize, hi: usize) -> Self {
        Configuration { state, lo, hi }
    }

    /// Length of the unread infix.
    pub fn unread_len(&self) -> usize {
        self.hi - self.lo
    }
}

/// One step of an accepting run: the transition applied (as an index into
/// [`WkAutomaton::transitions`]) and the configuration reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceStep {
    pub transition: usize,
    pub config: Configuration,
}

/// An accepting run from the initial configuration to a final state with
/// the whole input consumed. A zero-step trace witnesses acceptance of
/// the empty word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    start: Configuration,
    steps: Vec<TraceStep>,
}

impl Trace {
    pub fn start(&self) -> Configuration {
        self.start
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Final configuration of the run.
    pub fn end(&self) -> Configuration {
        self.steps.last().map_or(self.start, |s| s.config)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("state `{0}` is not declared")]
    UnknownState(String),
    #[error("state `{0}` is declared twice")]
    DuplicateState(String),
    #[error("state name `{0}` is not an ASCII identifier")]
    InvalidStateName(String),
    #[error("no initial state declared")]
    MissingInitial,
    #[error("symbol `{0}` is not in the alphabet")]
    SymbolNotInAlphabet(char),
    #[error("alphabet symbol `{0}` is not a lowercase ASCII letter")]
    InvalidSymbol(char),
    #[error("legacy machines need a distance label on every transition")]
    MissingDistanceLabel,
    #[error("distance label {label} exceeds the machine radius {radius}")]
    LabelExceedsRadius { label: usize, radius: usize },
    #[error("operation requires a {expected:?}-model machine, this one is {actual:?}")]
    WrongModel { expected: Model, actual: Model },
}

/// A two-head finite automaton over a lowercase alphabet.
///
/// Values are immutable after [`Builder::build`]; all queries are pure, so
/// a machine can be shared freely between threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WkAutomaton {
    alphabet: BTreeSet<char>,
    state_names: Vec<String>,
    initial: StateId,
    finals: BTreeSet<StateId>,
    transitions: Vec<Transition>,
    model: Model,
}

impl WkAutomaton {
    pub fn builder() -> Builder {
        Builder::default()
    }

    pub(crate) fn from_parts(
        alphabet: BTreeSet<char>,
        state_names: Vec<String>,
        initial: StateId,
        finals: BTreeSet<StateId>,
        transitions: Vec<Transition>,
        model: Model,
    ) -> Self {
        WkAutomaton {
            alphabet,
            state_names,
            initial,
            finals,
            transitions,
            model,
        }
    }

    pub fn alphabet(&self) -> &BTreeSet<char> {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_names.len()
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn state_name(&self, id: StateId) -> &str {
        &self.state_names[id.0]
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.state_names.iter().position(|n| n == name).map(StateId)
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn is_final(&self, id: StateId) -> bool {
        self.finals.contains(&id)
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn model(&self) -> Model {
        self.model
    }

    /// Human-readable rendering of a transition, for error reports.
    pub fn describe_transition(&self, index: usize) -> String {
        let t = &self.transitions[index];
        let lam = |s: &str| {
            if s.is_empty() {
                "_".to_string()
            } else {
                s.to_string()
            }
        };
        let label = match t.distance {
            Some(d) => format!(" @{d}"),
            None => String::new(),
        };
        format!(
            "{} -({},{})-> {}{}",
            self.state_name(t.from),
            lam(&t.u),
            lam(&t.v),
            self.state_name(t.to),
            label
        )
    }

    /// Maximum number of letters a single head may read in one transition.
    pub fn radius(&self) -> usize {
        self.transitions
            .iter()
            .map(|t| t.u.len().max(t.v.len()))
            .max()
            .unwrap_or(0)
    }

    /// True iff some transition moves neither head.
    pub fn has_lambda_moves(&self) -> bool {
        self.transitions
            .iter()
            .any(|t| t.u.is_empty() && t.v.is_empty())
    }

    fn require_model(&self, expected: Model) -> Result<(), AutomatonError> {
        if self.model != expected {
            return Err(AutomatonError::WrongModel {
                expected,
                actual: self.model,
            });
        }
        Ok(())
    }

    fn encode_word<'w>(&self, word: &'w str) -> Result<&'w [u8], AutomatonError> {
        for c in word.chars() {
            if !self.alphabet.contains(&c) {
                return Err(AutomatonError::SymbolNotInAlphabet(c));
            }
        }
        Ok(word.as_bytes())
    }

    /// Every transition applicable in `c`, paired with the configuration it
    /// leads to, in declaration order. Honors the distance gate on legacy
    /// machines.
    fn applicable(&self, w: &[u8], c: Configuration, radius: usize) -> Vec<(usize, Configuration)> {
        let unread = &w[c.lo..c.hi];
        let sensed = sensed_distance(unread.len(), radius);
        let mut out = Vec::new();
        for (i, t) in self.transitions.iter().enumerate() {
            if t.from != c.state {
                continue;
            }
            // The two reads must fit disjointly inside the unread infix.
            if t.u.len() + t.v.len() > unread.len() {
                continue;
            }
            if !unread.starts_with(t.u.as_bytes()) || !unread.ends_with(t.v.as_bytes()) {
                continue;
            }
            if self.model == Model::Legacy && t.distance != Some(sensed) {
                continue;
            }
            out.push((
                i,
                Configuration {
                    state: t.to,
                    lo: c.lo + t.u.len(),
                    hi: c.hi - t.v.len(),
                },
            ));
        }
        out
    }

    fn is_accepting(&self, c: Configuration) -> bool {
        c.lo == c.hi && self.finals.contains(&c.state)
    }

    /// Successor configurations of `c` on input `word` under the plain
    /// (label-free) semantics, deduplicated, in transition declaration
    /// order.
    ///
    /// Panics if `c` is out of bounds for `word` or the machine is a
    /// legacy machine; use [`WkAutomaton::trace`] or the membership tests
    /// for label-gated stepping.
    pub fn step_targets(&self, word: &str, c: Configuration) -> Vec<Configuration> {
        assert_eq!(
            self.model,
            Model::New,
            "step_targets is a new-model operation"
        );
        assert!(
            c.lo <= c.hi && c.hi <= word.len() && c.state.0 < self.state_names.len(),
            "configuration out of bounds"
        );
        let mut seen = HashSet::new();
        self.applicable(word.as_bytes(), c, 0)
            .into_iter()
            .map(|(_, next)| next)
            .filter(|next| seen.insert(*next))
            .collect()
    }

    fn initial_configuration(&self, w: &[u8]) -> Configuration {
        Configuration {
            state: self.initial,
            lo: 0,
            hi: w.len(),
        }
    }

    fn reachable_accepting(&self, w: &[u8]) -> bool {
        let radius = self.radius();
        let start = self.initial_configuration(w);
        let mut seen: HashSet<Configuration> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start);
        queue.push_back(start);
        while let Some(c) = queue.pop_front() {
            if self.is_accepting(c) {
                return true;
            }
            for (_, next) in self.applicable(w, c, radius) {
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        false
    }

    fn shortest_trace(&self, w: &[u8]) -> Option<Trace> {
        let radius = self.radius();
        let start = self.initial_configuration(w);
        if self.is_accepting(start) {
            return Some(Trace {
                start,
                steps: Vec::new(),
            });
        }
        // Breadth-first search with successors expanded in declaration
        // order, so the reconstructed run is the shortest one and ties go
        // to earlier-declared transitions.
        let mut parent: HashMap<Configuration, (Configuration, usize)> = HashMap::new();
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(c) = queue.pop_front() {
            for (t, next) in self.applicable(w, c, radius) {
                if next == start || parent.contains_key(&next) {
                    continue;
                }
                parent.insert(next, (c, t));
                if self.is_accepting(next) {
                    let mut steps = Vec::new();
                    let mut cur = next;
                    while cur != start {
                        let (prev, transition) = parent[&cur];
                        steps.push(TraceStep {
                            transition,
                            config: cur,
                        });
                        cur = prev;
                    }
                    steps.reverse();
                    return Some(Trace { start, steps });
                }
                queue.push_back(next);
            }
        }
        None
    }

    /// Membership under the plain semantics. Errors on legacy machines
    /// and on words with symbols outside the alphabet.
    pub fn accepts(&self, word: &str) -> Result<bool, AutomatonError> {
        self.require_model(Model::New)?;
        let w = self.encode_word(word)?;
        Ok(self.reachable_accepting(w))
    }

    /// Membership under the machine's own semantics (dispatches on
    /// [`Model`]).
    pub fn recognizes(&self, word: &str) -> Result<bool, AutomatonError> {
        let w = self.encode_word(word)?;
        Ok(self.reachable_accepting(w))
    }

    /// Membership that treats words with foreign symbols as rejected
    /// instead of erroring. Convenient for language comparisons over a
    /// shared alphabet.
    pub fn recognizes_lenient(&self, word: &str) -> bool {
        self.recognizes(word).unwrap_or(false)
    }

    /// One accepting run if the word is accepted: the fewest-step run,
    /// ties broken by transition declaration order. Uses the machine's
    /// own semantics.
    pub fn trace(&self, word: &str) -> Result<Option<Trace>, AutomatonError> {
        let w = self.encode_word(word)?;
        Ok(self.shortest_trace(w))
    }
}

#[derive(Debug, Clone)]
struct RawTransition {
    from: String,
    u: String,
    v: String,
    to: String,
    distance: Option<DistanceLabel>,
}

/// Step-by-step construction of a [`WkAutomaton`] with full validation in
/// [`Builder::build`].
#[derive(Debug, Clone, Default)]
pub struct Builder {
    alphabet: Vec<char>,
    states: Vec<String>,
    initial: Option<String>,
    finals: Vec<String>,
    transitions: Vec<RawTransition>,
    force_legacy: bool,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Builder {
    /// Declare the alphabet from a string of symbols.
    pub fn alphabet(mut self, symbols: &str) -> Self {
        self.alphabet.extend(symbols.chars());
        self
    }

    pub fn states(mut self, names: &[&str]) -> Self {
        self.states.extend(names.iter().map(|s| s.to_string()));
        self
    }

    pub fn initial(mut self, name: &str) -> Self {
        self.initial = Some(name.to_string());
        self
    }

    pub fn finals(mut self, names: &[&str]) -> Self {
        self.finals.extend(names.iter().map(|s| s.to_string()));
        self
    }

    /// Add an unlabeled transition (`""` is the empty read).
    pub fn transition(mut self, from: &str, u: &str, v: &str, to: &str) -> Self {
        self.transitions.push(RawTransition {
            from: from.to_string(),
            u: u.to_string(),
            v: v.to_string(),
            to: to.to_string(),
            distance: None,
        });
        self
    }

    /// Add a distance-labeled transition; any labeled transition makes the
    /// machine a legacy machine.
    pub fn legacy_transition(
        mut self,
        from: &str,
        u: &str,
        v: &str,
        to: &str,
        distance: DistanceLabel,
    ) -> Self {
        self.transitions.push(RawTransition {
            from: from.to_string(),
            u: u.to_string(),
            v: v.to_string(),
            to: to.to_string(),
            distance: Some(distance),
        });
        self
    }

    /// Force the legacy model even without transitions.
    pub fn legacy(mut self) -> Self {
        self.force_legacy = true;
        self
    }

    pub fn build(self) -> Result<WkAutomaton, AutomatonError> {
        let mut alphabet = BTreeSet::new();
        for c in self.alphabet {
            if !c.is_ascii_lowercase() {
                return Err(AutomatonError::InvalidSymbol(c));
            }
            alphabet.insert(c);
        }

        let mut state_names: Vec<String> = Vec::new();
        for name in self.states {
            if !is_identifier(&name) {
                return Err(AutomatonError::InvalidStateName(name));
            }
            if state_names.contains(&name) {
                return Err(AutomatonError::DuplicateState(name));
            }
            state_names.push(name);
        }
        let lookup = |name: &str| -> Result<StateId, AutomatonError> {
            state_names
                .iter()
                .position(|n| n == name)
                .map(StateId)
                .ok_or_else(|| AutomatonError::UnknownState(name.to_string()))
        };

        let initial = match &self.initial {
            Some(name) => lookup(name)?,
            None => return Err(AutomatonError::MissingInitial),
        };
        let mut finals = BTreeSet::new();
        for name in &self.finals {
            finals.insert(lookup(name)?);
        }

        let mut transitions: Vec<Transition> = Vec::new();
        let mut labeled = 0usize;
        for raw in &self.transitions {
            for c in raw.u.chars().chain(raw.v.chars()) {
                if !alphabet.contains(&c) {
                    return Err(AutomatonError::SymbolNotInAlphabet(c));
                }
            }
            if raw.distance.is_some() {
                labeled += 1;
            }
            let t = Transition {
                from: lookup(&raw.from)?,
                u: raw.u.clone(),
                v: raw.v.clone(),
                to: lookup(&raw.to)?,
                distance: raw.distance,
            };
            // Duplicates in the declaration are meaningless for a
            // set-valued transition relation: keep the first occurrence.
            if !transitions.contains(&t) {
                transitions.push(t);
            }
        }

        let model = if labeled > 0 || self.force_legacy {
            Model::Legacy
        } else {
            Model::New
        };
        if model == Model::Legacy && labeled != self.transitions.len() {
            return Err(AutomatonError::MissingDistanceLabel);
        }

        let machine = WkAutomaton {
            alphabet,
            state_names,
            initial,
            finals,
            transitions,
            model,
        };
        if model == Model::Legacy {
            let radius = machine.radius();
            for t in &machine.transitions {
                if let Some(DistanceLabel::Finite(d)) = t.distance {
                    if d > radius {
                        return Err(AutomatonError::LabelExceedsRadius { label: d, radius });
                    }
                }
            }
        }
        Ok(machine)
    }
}
