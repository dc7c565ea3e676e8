//! Linear context-free grammars and the constructive conversions between
//! them and two-head automata.
//!
//! The two conversions are inverse hand-in-hand constructions:
//!
//! * a grammar in normal form (`A -> aB | Ba | a`) becomes a 1-limited
//!   machine whose states are the nonterminals plus one fresh final state;
//! * a machine without lambda-moves becomes a grammar whose nonterminals
//!   are the states, with `p -> u q v` per transition and an extra
//!   terminal production `p -> uv` whenever the target state is final.
//!
//! Derivations of the grammar and accepting runs of the machine consume
//! the word in exactly the same prefix/suffix pattern, which is what makes
//! both directions preserve the language.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::automaton::{Model, StateId, WkAutomaton};

/// Body of a linear production: at most one nonterminal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Body {
    /// `u B v`; `u` and `v` may be empty, so `B` alone is a unit body.
    Linear {
        left: String,
        nonterminal: String,
        right: String,
    },
    /// A terminal word; empty means a lambda production.
    Terminal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Production {
    pub head: String,
    pub body: Body,
}

impl Production {
    pub fn linear(head: &str, left: &str, nonterminal: &str, right: &str) -> Self {
        Production {
            head: head.to_string(),
            body: Body::Linear {
                left: left.to_string(),
                nonterminal: nonterminal.to_string(),
                right: right.to_string(),
            },
        }
    }

    pub fn terminal(head: &str, word: &str) -> Self {
        Production {
            head: head.to_string(),
            body: Body::Terminal(word.to_string()),
        }
    }
}

impl fmt::Display for Body {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
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
                write!(f, "{}", parts.join(" "))
            }
            Body::Terminal(w) => {
                if w.is_empty() {
                    write!(f, "_")
                } else {
                    write!(f, "{w}")
                }
            }
        }
    }
}

impl fmt::Display for Production {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.head, self.body)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrammarError {
    #[error("nonterminal `{0}` must be an identifier starting with an uppercase ASCII letter")]
    InvalidNonterminal(String),
    #[error("terminal `{0}` must be a lowercase ASCII letter")]
    InvalidTerminal(char),
    #[error("production `{0}` derives lambda; a lambda-free grammar is required")]
    LambdaProduction(String),
    #[error("production `{0}` is not in normal form (A -> aB | Ba | a)")]
    NotNormalForm(String),
    #[error("machine has a lambda-move (neither head reads); eliminate it before converting")]
    LambdaMove(String),
    #[error("conversion is defined for new-model machines only")]
    LegacyMachine,
}

/// A context-free grammar whose production bodies contain at most one
/// nonterminal. Nonterminal and terminal sets are inferred from the
/// productions (plus the start symbol) on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearGrammar {
    nonterminals: Vec<String>,
    terminals: BTreeSet<char>,
    start: String,
    productions: Vec<Production>,
}

fn valid_nonterminal(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_uppercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl LinearGrammar {
    pub fn new(start: &str, productions: Vec<Production>) -> Result<Self, GrammarError> {
        if !valid_nonterminal(start) {
            return Err(GrammarError::InvalidNonterminal(start.to_string()));
        }
        let mut nonterminals = vec![start.to_string()];
        let mut terminals = BTreeSet::new();
        let note_nt = |name: &str, nts: &mut Vec<String>| -> Result<(), GrammarError> {
            if !valid_nonterminal(name) {
                return Err(GrammarError::InvalidNonterminal(name.to_string()));
            }
            if !nts.iter().any(|n| n == name) {
                nts.push(name.to_string());
            }
            Ok(())
        };
        for p in &productions {
            note_nt(&p.head, &mut nonterminals)?;
            let words: Vec<&str> = match &p.body {
                Body::Linear {
                    left,
                    nonterminal,
                    right,
                } => {
                    note_nt(nonterminal, &mut nonterminals)?;
                    vec![left, right]
                }
                Body::Terminal(w) => vec![w],
            };
            for w in words {
                for c in w.chars() {
                    if !c.is_ascii_lowercase() {
                        return Err(GrammarError::InvalidTerminal(c));
                    }
                    terminals.insert(c);
                }
            }
        }
        Ok(LinearGrammar {
            nonterminals,
            terminals,
            start: start.to_string(),
            productions,
        })
    }

    pub fn start(&self) -> &str {
        &self.start
    }

    pub fn nonterminals(&self) -> &[String] {
        &self.nonterminals
    }

    pub fn terminals(&self) -> &BTreeSet<char> {
        &self.terminals
    }

    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    /// True iff every production is `A -> aB`, `A -> Ba` or `A -> a`.
    pub fn is_normal_form(&self) -> bool {
        self.productions.iter().all(|p| match &p.body {
            Body::Linear { left, right, .. } => left.len() + right.len() == 1,
            Body::Terminal(w) => w.len() == 1,
        })
    }

    /// Rewrite into normal form: long bodies are split one terminal at a
    /// time (left letters first, then right), unit productions `A -> B`
    /// are replaced by the non-unit bodies of everything reachable from
    /// `B` through unit steps. Fresh nonterminals are named `T, U, V, …`
    /// in first-use order, skipping names already taken.
    ///
    /// Fails on grammars with lambda productions.
    pub fn normalize(&self) -> Result<LinearGrammar, GrammarError> {
        let mut used: BTreeSet<String> = self.nonterminals.iter().cloned().collect();
        let mut fresh_counter = 0usize;
        let mut fresh = |used: &mut BTreeSet<String>| -> String {
            loop {
                let letter = (b'T' + (fresh_counter % 7) as u8) as char;
                let round = fresh_counter / 7;
                let candidate = if round == 0 {
                    letter.to_string()
                } else {
                    format!("{letter}{round}")
                };
                fresh_counter += 1;
                if used.insert(candidate.clone()) {
                    return candidate;
                }
            }
        };

        let mut base: Vec<Production> = Vec::new();
        let mut units: Vec<(String, String)> = Vec::new();
        for p in &self.productions {
            match &p.body {
                Body::Terminal(w) => {
                    if w.is_empty() {
                        return Err(GrammarError::LambdaProduction(p.to_string()));
                    }
                    let mut head = p.head.clone();
                    let mut rest = w.as_str();
                    while rest.len() > 1 {
                        let next = fresh(&mut used);
                        base.push(Production::terminal_split(&head, &rest[..1], &next));
                        head = next;
                        rest = &rest[1..];
                    }
                    base.push(Production::terminal(&head, rest));
                }
                Body::Linear {
                    left,
                    nonterminal,
                    right,
                } => {
                    if left.is_empty() && right.is_empty() {
                        units.push((p.head.clone(), nonterminal.clone()));
                        continue;
                    }
                    let mut head = p.head.clone();
                    let mut left = left.as_str();
                    let mut right = right.as_str();
                    while left.len() + right.len() > 1 {
                        let next = fresh(&mut used);
                        if !left.is_empty() {
                            base.push(Production::linear(&head, &left[..1], &next, ""));
                            left = &left[1..];
                        } else {
                            base.push(Production::linear(
                                &head,
                                "",
                                &next,
                                &right[right.len() - 1..],
                            ));
                            right = &right[..right.len() - 1];
                        }
                        head = next;
                    }
                    base.push(Production::linear(&head, left, nonterminal, right));
                }
            }
        }

        // Unit closure: A -> B -> ... -> C contributes every non-unit
        // production of C to A.
        let mut edges: HashMap<&str, Vec<&str>> = HashMap::new();
        for (a, b) in &units {
            edges.entry(a.as_str()).or_default().push(b.as_str());
        }
        let mut result = base.clone();
        let mut seen: HashSet<Production> = result.iter().cloned().collect();
        let mut heads: Vec<String> = Vec::new();
        for (a, _) in &units {
            if !heads.contains(a) {
                heads.push(a.clone());
            }
        }
        for head in heads {
            let mut reach: Vec<&str> = Vec::new();
            let mut queue: VecDeque<&str> = VecDeque::new();
            queue.push_back(head.as_str());
            let mut visited: HashSet<&str> = HashSet::new();
            visited.insert(head.as_str());
            while let Some(cur) = queue.pop_front() {
                if let Some(nexts) = edges.get(cur) {
                    for next in nexts {
                        if visited.insert(next) {
                            reach.push(next);
                            queue.push_back(next);
                        }
                    }
                }
            }
            for target in reach {
                for p in &base {
                    if p.head == target {
                        let candidate = Production {
                            head: head.clone(),
                            body: p.body.clone(),
                        };
                        if seen.insert(candidate.clone()) {
                            result.push(candidate);
                        }
                    }
                }
            }
        }

        LinearGrammar::new(&self.start, result)
    }

    /// Build the 1-limited machine of a normal-form grammar: states are
    /// the nonterminals plus a fresh final state, `A -> aB` reads `a` on
    /// the left head, `A -> Ba` on the right head, `A -> a` jumps to the
    /// final state.
    pub fn to_automaton(&self) -> Result<WkAutomaton, GrammarError> {
        for p in &self.productions {
            let ok = match &p.body {
                Body::Linear { left, right, .. } => left.len() + right.len() == 1,
                Body::Terminal(w) => w.len() == 1,
            };
            if !ok {
                return Err(GrammarError::NotNormalForm(p.to_string()));
            }
        }

        // Nonterminals start uppercase, so `qf` can never collide.
        let final_name = "qf".to_string();

        let mut builder = WkAutomaton::builder()
            .alphabet(&self.terminals.iter().collect::<String>())
            .initial(&self.start)
            .finals(&[final_name.as_str()]);
        for nt in &self.nonterminals {
            builder = builder.states(&[nt.as_str()]);
        }
        builder = builder.states(&[final_name.as_str()]);
        for p in &self.productions {
            builder = match &p.body {
                Body::Linear {
                    left,
                    nonterminal,
                    right,
                } => builder.transition(&p.head, left, right, nonterminal),
                Body::Terminal(w) => builder.transition(&p.head, w, "", &final_name),
            };
        }
        // The grammar was validated on construction, so this cannot fail.
        Ok(builder
            .build()
            .expect("conversion produces a valid machine"))
    }

    /// Decide membership by dynamic programming over items `(A, i, j)`
    /// meaning `A` derives `w[i..j)`. Independent of the machine
    /// conversion, so it can serve as an oracle for it.
    pub fn derives(&self, word: &str) -> bool {
        let w = word.as_bytes();
        let n = w.len();
        let nt_index: HashMap<&str, usize> = self
            .nonterminals
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();

        // Productions grouped by the nonterminal in their body.
        let mut by_body_nt: Vec<Vec<(usize, &str, &str)>> =
            vec![Vec::new(); self.nonterminals.len()];
        for p in &self.productions {
            if let Body::Linear {
                left,
                nonterminal,
                right,
            } = &p.body
            {
                by_body_nt[nt_index[nonterminal.as_str()]].push((
                    nt_index[p.head.as_str()],
                    left,
                    right,
                ));
            }
        }

        let mut known: HashSet<(usize, usize, usize)> = HashSet::new();
        let mut queue: VecDeque<(usize, usize, usize)> = VecDeque::new();
        let push = |item: (usize, usize, usize),
                    known: &mut HashSet<(usize, usize, usize)>,
                    queue: &mut VecDeque<(usize, usize, usize)>| {
            if known.insert(item) {
                queue.push_back(item);
            }
        };

        for p in &self.productions {
            if let Body::Terminal(t) = &p.body {
                if t.len() > n {
                    continue;
                }
                let a = nt_index[p.head.as_str()];
                for i in 0..=n - t.len() {
                    if &w[i..i + t.len()] == t.as_bytes() {
                        push((a, i, i + t.len()), &mut known, &mut queue);
                    }
                }
            }
        }

        while let Some((b, i, j)) = queue.pop_front() {
            for &(a, left, right) in &by_body_nt[b] {
                if left.len() > i || j + right.len() > n {
                    continue;
                }
                let i2 = i - left.len();
                let j2 = j + right.len();
                if &w[i2..i] == left.as_bytes() && &w[j..j2] == right.as_bytes() {
                    push((a, i2, j2), &mut known, &mut queue);
                }
            }
        }

        known.contains(&(nt_index[self.start.as_str()], 0, n))
    }

    /// All derivable words of length at most `max_len`, in length-then-
    /// lexicographic order. Breadth-first search over sentential forms
    /// `u B v` whose terminal part never exceeds the bound.
    pub fn generate(&self, max_len: usize) -> Vec<String> {
        let mut by_head: HashMap<&str, Vec<&Production>> = HashMap::new();
        for p in &self.productions {
            by_head.entry(p.head.as_str()).or_default().push(p);
        }

        let mut words: BTreeSet<String> = BTreeSet::new();
        let mut seen: HashSet<(String, String, String)> = HashSet::new();
        let mut queue: VecDeque<(String, String, String)> = VecDeque::new();
        let start = (String::new(), self.start.clone(), String::new());
        seen.insert(start.clone());
        queue.push_back(start);

        while let Some((u, nt, v)) = queue.pop_front() {
            let Some(prods) = by_head.get(nt.as_str()) else {
                continue;
            };
            for p in prods {
                match &p.body {
                    Body::Terminal(t) => {
                        if u.len() + t.len() + v.len() <= max_len {
                            words.insert(format!("{u}{t}{v}"));
                        }
                    }
                    Body::Linear {
                        left,
                        nonterminal,
                        right,
                    } => {
                        if u.len() + left.len() + right.len() + v.len() > max_len {
                            continue;
                        }
                        let form = (
                            format!("{u}{left}"),
                            nonterminal.clone(),
                            format!("{right}{v}"),
                        );
                        if seen.insert(form.clone()) {
                            queue.push_back(form);
                        }
                    }
                }
            }
        }

        let mut out: Vec<String> = words.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
}

impl Production {
    /// Helper for [`LinearGrammar::normalize`]: peel `letter` off a long
    /// terminal body, continuing in `rest_head`.
    fn terminal_split(head: &str, letter: &str, rest_head: &str) -> Production {
        Production::linear(head, letter, rest_head, "")
    }
}

impl WkAutomaton {
    /// Convert a lambda-move-free machine into a linear grammar with one
    /// nonterminal per state. State names are capitalized so the grammar's
    /// lexical convention (uppercase-initial nonterminals) holds; when the
    /// initial state is final, a fresh start symbol with a lambda
    /// production is added so the rest of the grammar stays lambda-free.
    pub fn to_linear_grammar(&self) -> Result<LinearGrammar, GrammarError> {
        if self.model() != Model::New {
            return Err(GrammarError::LegacyMachine);
        }
        if let Some((i, _)) = self
            .transitions()
            .iter()
            .enumerate()
            .find(|(_, t)| t.u.is_empty() && t.v.is_empty())
        {
            return Err(GrammarError::LambdaMove(self.describe_transition(i)));
        }

        let mut names: Vec<String> = Vec::new();
        let mut used: HashSet<String> = HashSet::new();
        for state in self.state_names() {
            let mut base: String = {
                let mut cs = state.chars();
                match cs.next() {
                    Some(c) if c.is_ascii_lowercase() => {
                        c.to_ascii_uppercase().to_string() + cs.as_str()
                    }
                    Some(c) if c.is_ascii_uppercase() => state.clone(),
                    _ => format!("N{state}"),
                }
            };
            if !used.insert(base.clone()) {
                let mut k = 2usize;
                loop {
                    let candidate = format!("{base}_{k}");
                    if used.insert(candidate.clone()) {
                        base = candidate;
                        break;
                    }
                    k += 1;
                }
            }
            names.push(base);
        }
        let nt = |id: StateId| names[id.index()].clone();

        let mut productions: Vec<Production> = Vec::new();
        for t in self.transitions() {
            productions.push(Production::linear(&nt(t.from), &t.u, &nt(t.to), &t.v));
            if self.is_final(t.to) {
                productions.push(Production::terminal(
                    &nt(t.from),
                    &format!("{}{}", t.u, t.v),
                ));
            }
        }

        let mut start = nt(self.initial());
        if self.is_final(self.initial()) {
            // Fresh start symbol: derives lambda, plus everything the old
            // start derives in one step.
            let mut fresh = "S".to_string();
            let mut k = 0usize;
            while names.contains(&fresh) {
                fresh = format!("S{k}");
                k += 1;
            }
            let mut prefix = vec![Production::terminal(&fresh, "")];
            for p in &productions {
                if p.head == start {
                    prefix.push(Production {
                        head: fresh.clone(),
                        body: p.body.clone(),
                    });
                }
            }
            prefix.extend(productions);
            productions = prefix;
            start = fresh;
        }

        LinearGrammar::new(&start, productions)
    }
}
