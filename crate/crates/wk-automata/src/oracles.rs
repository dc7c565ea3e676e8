//! Decidable predicates for the witness languages used by the corpus and
//! the suite. Each oracle is a plain function on words, written straight
//! from the language definition so it stays independent of the machines
//! that are checked against it.

use std::collections::BTreeSet;

/// A named decidable language: an alphabet and a total membership
/// predicate on words over it.
#[derive(Clone)]
pub struct LanguageOracle {
    name: &'static str,
    description: &'static str,
    alphabet: &'static str,
    predicate: fn(&str) -> bool,
}

impl LanguageOracle {
    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn description(&self) -> &'static str {
        self.description
    }

    pub fn alphabet(&self) -> BTreeSet<char> {
        self.alphabet.chars().collect()
    }

    /// Membership; words using symbols outside the alphabet are rejected.
    pub fn contains(&self, word: &str) -> bool {
        word.chars().all(|c| self.alphabet.contains(c)) && (self.predicate)(word)
    }
}

impl std::fmt::Debug for LanguageOracle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LanguageOracle")
            .field("name", &self.name)
            .field("description", &self.description)
            .finish()
    }
}

/// Split `a^i b^j` words into `(i, j)`; `None` for anything else.
fn ab_blocks(word: &str) -> Option<(usize, usize)> {
    let bytes = word.as_bytes();
    let i = bytes.iter().take_while(|&&c| c == b'a').count();
    let j = bytes[i..].iter().take_while(|&&c| c == b'b').count();
    if i + j == bytes.len() {
        Some((i, j))
    } else {
        None
    }
}

/// { a^n b^m | n, m >= 0 }
fn l1(word: &str) -> bool {
    ab_blocks(word).is_some()
}

/// { a^3n b^2m | n, m >= 0 }
fn l2(word: &str) -> bool {
    matches!(ab_blocks(word), Some((i, j)) if i % 3 == 0 && j % 2 == 0)
}

/// { a^(2n+m) b^(2m+n) | n, m >= 0 }
fn l3(word: &str) -> bool {
    match ab_blocks(word) {
        Some((i, j)) => (0..=i / 2).any(|n| 2 * (i - 2 * n) + n == j),
        None => false,
    }
}

/// { w w^R | w in {a,b}* } — the even-length palindromes.
fn l4(word: &str) -> bool {
    let b = word.as_bytes();
    b.len().is_multiple_of(2)
        && b.iter().all(|&c| c == b'a' || c == b'b')
        && b.iter().eq(b.iter().rev())
}

/// { a^n b^m | n = m or n = m + 1 }
fn l5(word: &str) -> bool {
    matches!(ab_blocks(word), Some((i, j)) if i == j || i == j + 1)
}

/// { (aa)^n (bb)^m | m <= n <= m + 1, m >= 0 }
fn l6(word: &str) -> bool {
    match ab_blocks(word) {
        Some((i, j)) if i % 2 == 0 && j % 2 == 0 => {
            let (n, m) = (i / 2, j / 2);
            m <= n && n <= m + 1
        }
        _ => false,
    }
}

/// { a^(2n+q) c^4m b^(2q+n) | n, q >= 0, m in {0, 1} }
fn l7(word: &str) -> bool {
    let bytes = word.as_bytes();
    let i = bytes.iter().take_while(|&&c| c == b'a').count();
    let k = bytes[i..].iter().take_while(|&&c| c == b'c').count();
    let j = bytes[i + k..].iter().take_while(|&&c| c == b'b').count();
    if i + k + j != bytes.len() || (k != 0 && k != 4) {
        return false;
    }
    (0..=i / 2).any(|n| 2 * (i - 2 * n) + n == j)
}

/// { a^n c b^n c | n >= 1 }
fn l8(word: &str) -> bool {
    let bytes = word.as_bytes();
    let n = bytes.iter().take_while(|&&c| c == b'a').count();
    if n == 0 || bytes.len() != 2 * n + 2 {
        return false;
    }
    bytes[n] == b'c'
        && bytes[n + 1..2 * n + 1].iter().all(|&c| c == b'b')
        && bytes[2 * n + 1] == b'c'
}

/// The eight built-in witness languages, L1 through L8.
pub fn builtin_oracles() -> Vec<LanguageOracle> {
    vec![
        LanguageOracle {
            name: "L1",
            description: "{ a^n b^m | n,m >= 0 }",
            alphabet: "ab",
            predicate: l1,
        },
        LanguageOracle {
            name: "L2",
            description: "{ a^3n b^2m | n,m >= 0 }",
            alphabet: "ab",
            predicate: l2,
        },
        LanguageOracle {
            name: "L3",
            description: "{ a^(2n+m) b^(2m+n) | n,m >= 0 }",
            alphabet: "ab",
            predicate: l3,
        },
        LanguageOracle {
            name: "L4",
            description: "{ w w^R | w in {a,b}* }",
            alphabet: "ab",
            predicate: l4,
        },
        LanguageOracle {
            name: "L5",
            description: "{ a^n b^m | n = m or n = m+1 }",
            alphabet: "ab",
            predicate: l5,
        },
        LanguageOracle {
            name: "L6",
            description: "{ (aa)^n (bb)^m | m <= n <= m+1, m >= 0 }",
            alphabet: "ab",
            predicate: l6,
        },
        LanguageOracle {
            name: "L7",
            description: "{ a^(2n+q) c^4m b^(2q+n) | n,q >= 0, m in {0,1} }",
            alphabet: "abc",
            predicate: l7,
        },
        LanguageOracle {
            name: "L8",
            description: "{ a^n c b^n c | n >= 1 }",
            alphabet: "abc",
            predicate: l8,
        },
    ]
}

pub fn oracle_by_name(name: &str) -> Option<LanguageOracle> {
    builtin_oracles().into_iter().find(|o| o.name == name)
}
