//! Complete deterministic automata, semiautomata and ε-free nondeterministic
//! automata over an ordered alphabet of string labels.
//!
//! Alphabet order matters: every breadth-first traversal in this crate
//! (trimming, subset construction, semigroup closure) visits letters in the
//! order they appear in the alphabet, which makes state numberings and
//! witness words reproducible.

mod dot;
mod json;
mod ops;

pub use dot::to_dot;
pub use json::{dfa_from_json, dfa_from_json_value, dfa_to_json, dfa_to_json_value};
pub use ops::{
    complement, determinize, equivalent, left_ideal_closure, minimize, nerode_classes,
    reachable_trim, reverse, right_ideal_closure,
};

use crate::error::{Error, Result};
use crate::transform::Transformation;

fn check_alphabet(alphabet: &[String]) -> Result<()> {
    if alphabet.is_empty() {
        return Err(Error::InvalidAutomaton("alphabet is empty".into()));
    }
    for (i, a) in alphabet.iter().enumerate() {
        if alphabet[..i].contains(a) {
            return Err(Error::InvalidAutomaton(format!("duplicate letter {a:?}")));
        }
    }
    Ok(())
}

/// A deterministic semiautomaton: states, alphabet and one transformation per letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semiautomaton {
    n: usize,
    alphabet: Vec<String>,
    delta: Vec<Transformation>,
}

impl Semiautomaton {
    pub fn new(n: usize, alphabet: Vec<String>, delta: Vec<Transformation>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAutomaton("no states".into()));
        }
        check_alphabet(&alphabet)?;
        if delta.len() != alphabet.len() {
            return Err(Error::InvalidAutomaton(format!(
                "{} letters but {} transition rows",
                alphabet.len(),
                delta.len()
            )));
        }
        for t in &delta {
            if t.n() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: t.n(),
                });
            }
        }
        Ok(Self { n, alphabet, delta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn delta(&self) -> &[Transformation] {
        &self.delta
    }

    /// Attaches an initial state and final set.
    pub fn with_initial_and_finals<I>(self, initial: usize, finals: I) -> Result<Dfa>
    where
        I: IntoIterator<Item = usize>,
    {
        Dfa::new(self.n, self.alphabet, self.delta, initial, finals)
    }
}

/// A complete deterministic finite automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    n: usize,
    alphabet: Vec<String>,
    delta: Vec<Transformation>,
    initial: usize,
    finals: Vec<bool>,
}

impl Dfa {
    pub fn new<I>(
        n: usize,
        alphabet: Vec<String>,
        delta: Vec<Transformation>,
        initial: usize,
        finals: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let semi = Semiautomaton::new(n, alphabet, delta)?;
        if initial >= n {
            return Err(Error::StateOutOfRange { state: initial, n });
        }
        let mut mask = vec![false; n];
        for f in finals {
            if f >= n {
                return Err(Error::StateOutOfRange { state: f, n });
            }
            mask[f] = true;
        }
        Ok(Self {
            n,
            alphabet: semi.alphabet,
            delta: semi.delta,
            initial,
            finals: mask,
        })
    }

    /// Convenience constructor from letter labels and raw image lists.
    pub fn from_images<S: AsRef<str>>(
        letters: &[(S, Vec<usize>)],
        initial: usize,
        finals: &[usize],
    ) -> Result<Self> {
        let n = letters.first().map_or(0, |(_, v)| v.len());
        let mut alphabet = Vec::with_capacity(letters.len());
        let mut delta = Vec::with_capacity(letters.len());
        for (label, images) in letters {
            alphabet.push(label.as_ref().to_string());
            delta.push(Transformation::new(images.iter().copied())?);
        }
        Self::new(n, alphabet, delta, initial, finals.iter().copied())
    }

    pub(crate) fn from_parts(
        alphabet: Vec<String>,
        delta: Vec<Transformation>,
        initial: usize,
        finals: Vec<bool>,
    ) -> Self {
        Self {
            n: finals.len(),
            alphabet,
            delta,
            initial,
            finals,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn delta(&self) -> &[Transformation] {
        &self.delta
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn final_mask(&self) -> &[bool] {
        &self.finals
    }

    pub fn finals(&self) -> Vec<usize> {
        (0..self.n).filter(|&q| self.finals[q]).collect()
    }

    pub fn letter_index(&self, label: &str) -> Option<usize> {
        self.alphabet.iter().position(|a| a == label)
    }

    #[inline]
    pub fn step(&self, state: usize, letter: usize) -> usize {
        self.delta[letter].apply(state)
    }

    /// State reached from `from` by a word given as letter indices.
    pub fn run_from(&self, from: usize, word: &[usize]) -> usize {
        word.iter().fold(from, |q, &a| self.step(q, a))
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.finals[self.run_from(self.initial, word)]
    }

    /// Splits a word into letters: by character when every label is a single
    /// character, otherwise by whitespace.
    pub fn parse_word(&self, word: &str) -> Result<Vec<usize>> {
        let single = self.alphabet.iter().all(|a| a.chars().count() == 1);
        let pieces: Vec<String> = if single {
            word.chars().filter(|c| !c.is_whitespace()).map(String::from).collect()
        } else {
            word.split_whitespace().map(String::from).collect()
        };
        pieces
            .iter()
            .map(|p| {
                self.letter_index(p)
                    .ok_or_else(|| Error::AlphabetMismatch(format!("unknown letter {p:?}")))
            })
            .collect()
    }

    /// Renders a word of letter indices; single-character labels are concatenated.
    pub fn format_word(&self, word: &[usize]) -> String {
        let single = self.alphabet.iter().all(|a| a.chars().count() == 1);
        let labels = word.iter().map(|&a| self.alphabet[a].as_str());
        if single {
            labels.collect()
        } else {
            labels.collect::<Vec<_>>().join(" ")
        }
    }

    pub fn semiautomaton(&self) -> Semiautomaton {
        Semiautomaton {
            n: self.n,
            alphabet: self.alphabet.clone(),
            delta: self.delta.clone(),
        }
    }

    /// Same transitions and initial state, new final set.
    pub fn with_finals<I: IntoIterator<Item = usize>>(&self, finals: I) -> Result<Dfa> {
        Dfa::new(
            self.n,
            self.alphabet.clone(),
            self.delta.clone(),
            self.initial,
            finals,
        )
    }

    /// Keeps only the letters whose labels are listed, in alphabet order.
    pub fn restrict(&self, labels: &[&str]) -> Result<Dfa> {
        let mut alphabet = Vec::new();
        let mut delta = Vec::new();
        for label in labels {
            if self.letter_index(label).is_none() {
                return Err(Error::AlphabetMismatch(format!("unknown letter {label:?}")));
            }
        }
        for (a, t) in self.alphabet.iter().zip(&self.delta) {
            if labels.contains(&a.as_str()) {
                alphabet.push(a.clone());
                delta.push(t.clone());
            }
        }
        Dfa::new(self.n, alphabet, delta, self.initial, self.finals())
    }

    /// Number of transitions `(p, a)` with `δ(p, a) = q`.
    pub fn in_degree(&self, q: usize) -> usize {
        self.delta
            .iter()
            .map(|t| t.images().iter().filter(|&&i| i as usize == q).count())
            .sum()
    }

    /// A sink maps to itself under every letter.
    pub fn is_sink(&self, q: usize) -> bool {
        self.delta.iter().all(|t| t.apply(q) == q)
    }
}

/// An ε-free nondeterministic automaton with a set of initial states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    n: usize,
    alphabet: Vec<String>,
    // eta[letter][state] = sorted successor list
    eta: Vec<Vec<Vec<usize>>>,
    initials: Vec<usize>,
    finals: Vec<bool>,
}

impl Nfa {
    pub fn new(
        n: usize,
        alphabet: Vec<String>,
        eta: Vec<Vec<Vec<usize>>>,
        initials: Vec<usize>,
        finals: Vec<usize>,
    ) -> Result<Self> {
        check_alphabet(&alphabet)?;
        if eta.len() != alphabet.len() {
            return Err(Error::InvalidAutomaton("one successor table per letter required".into()));
        }
        let mut eta = eta;
        for row in &mut eta {
            if row.len() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for succ in row.iter_mut() {
                if let Some(&q) = succ.iter().find(|&&q| q >= n) {
                    return Err(Error::StateOutOfRange { state: q, n });
                }
                succ.sort_unstable();
                succ.dedup();
            }
        }
        let mut initials = initials;
        if let Some(&q) = initials.iter().find(|&&q| q >= n) {
            return Err(Error::StateOutOfRange { state: q, n });
        }
        initials.sort_unstable();
        initials.dedup();
        let mut mask = vec![false; n];
        for f in finals {
            if f >= n {
                return Err(Error::StateOutOfRange { state: f, n });
            }
            mask[f] = true;
        }
        Ok(Self {
            n,
            alphabet,
            eta,
            initials,
            finals: mask,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn successors(&self, state: usize, letter: usize) -> &[usize] {
        &self.eta[letter][state]
    }

    pub fn initials(&self) -> &[usize] {
        &self.initials
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn finals(&self) -> Vec<usize> {
        (0..self.n).filter(|&q| self.finals[q]).collect()
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        let mut current = vec![false; self.n];
        for &q in &self.initials {
            current[q] = true;
        }
        for &a in word {
            let mut next = vec![false; self.n];
            for q in (0..self.n).filter(|&q| current[q]) {
                for &p in &self.eta[a][q] {
                    next[p] = true;
                }
            }
            current = next;
        }
        (0..self.n).any(|q| current[q] && self.finals[q])
    }
}
