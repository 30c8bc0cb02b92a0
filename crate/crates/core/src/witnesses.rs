//! Extremal automata for right, left and two-sided ideals, and the small
//! hand-listed cases that meet the tight bounds for few states or letters.
//!
//! Letters are labelled `a`, `b`, ... and a restriction is given as a string
//! of labels, e.g. `"acd"`. When two letters of a family act identically for
//! a small `n` (right and left at `n = 3`, two-sided at `n = 4`, where `a`
//! and `b` coincide) both labels are kept.

use serde::{Deserialize, Serialize};

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::transform::Transformation;

pub use crate::bounds::{closed_form_bound, Family};

/// Full alphabet of a family's witness.
pub fn full_letters(family: Family) -> &'static str {
    match family {
        Family::Right => "abcd",
        Family::Left => "abcde",
        Family::TwoSided => "abcdef",
    }
}

/// Letters of the restriction whose reverse has maximal quotient complexity.
pub fn reversal_letters(family: Family) -> &'static str {
    match family {
        Family::Right => "ad",
        Family::Left => "acde",
        Family::TwoSided => "adef",
    }
}

/// Smallest `n` accepted by the family's general construction.
pub fn min_states(family: Family) -> usize {
    match family {
        Family::Right | Family::Left => 3,
        Family::TwoSided => 4,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSpec {
    pub family: Family,
    pub n: usize,
    pub letters: String,
    /// Final states for the left family; any nonempty subset of `Q \ {0}`.
    pub finals_override: Option<Vec<usize>>,
}

impl WitnessSpec {
    pub fn full(family: Family, n: usize) -> Self {
        Self {
            family,
            n,
            letters: full_letters(family).to_string(),
            finals_override: None,
        }
    }

    pub fn build(&self) -> Result<Dfa> {
        if self.finals_override.is_some() && self.family != Family::Left {
            return Err(Error::InvalidWitness(
                "only the left family accepts a final-state override".into(),
            ));
        }
        match self.family {
            Family::Right => right_ideal_witness(self.n, &self.letters),
            Family::Left => left_ideal_witness(self.n, &self.letters, self.finals_override.as_deref()),
            Family::TwoSided => two_sided_witness(self.n, &self.letters),
        }
    }
}

/// Picks the requested labels out of `(label, transformation)` pairs,
/// keeping family order.
fn select(
    family: Family,
    all: Vec<(char, Transformation)>,
    letters: &str,
) -> Result<(Vec<String>, Vec<Transformation>)> {
    if letters.is_empty() {
        return Err(Error::InvalidWitness("empty letter set".into()));
    }
    let mut wanted: Vec<char> = Vec::new();
    for c in letters.chars() {
        if !full_letters(family).contains(c) {
            return Err(Error::InvalidWitness(format!(
                "letter {c:?} is not in the {family} family alphabet {:?}",
                full_letters(family)
            )));
        }
        if wanted.contains(&c) {
            return Err(Error::InvalidWitness(format!("letter {c:?} listed twice")));
        }
        wanted.push(c);
    }
    Ok(all
        .into_iter()
        .filter(|(c, _)| wanted.contains(c))
        .map(|(c, t)| (c.to_string(), t))
        .unzip())
}

/// The right-ideal automaton on `{0..n-1}`: initial 0, final sink `n-1`,
/// `a = (0,..,n-2)`, `b = (0,1)`, `c = (n-2 → 0)`, `d = (n-2 → n-1)`.
pub fn right_ideal_witness(n: usize, letters: &str) -> Result<Dfa> {
    if n < min_states(Family::Right) {
        return Err(Error::InvalidWitness(format!(
            "right-ideal family needs n >= 3 (got {n}); use small_witness"
        )));
    }
    let all = vec![
        ('a', Transformation::cycle(n, 0, n - 2)?),
        ('b', Transformation::transposition(n, 0, 1)?),
        ('c', Transformation::singular(n, n - 2, 0)?),
        ('d', Transformation::singular(n, n - 2, n - 1)?),
    ];
    let (alphabet, delta) = select(Family::Right, all, letters)?;
    Dfa::new(n, alphabet, delta, 0, [n - 1])
}

/// The left-ideal semiautomaton with initial state 0:
/// `a = (1,..,n-1)`, `b = (1,2)`, `c = (n-1 → 1)`, `d = (n-1 → 0)`, `e = (Q → 1)`.
/// Final states default to `{n-1}`.
pub fn left_ideal_witness(n: usize, letters: &str, finals_override: Option<&[usize]>) -> Result<Dfa> {
    if n < min_states(Family::Left) {
        return Err(Error::InvalidWitness(format!(
            "left-ideal family needs n >= 3 (got {n}); use small_witness"
        )));
    }
    let finals = match finals_override {
        None => vec![n - 1],
        Some([]) => return Err(Error::InvalidWitness("final set must be nonempty".into())),
        Some(f) => {
            if let Some(&bad) = f.iter().find(|&&q| q == 0 || q >= n) {
                return Err(Error::InvalidWitness(format!(
                    "final state {bad} must lie in 1..{}",
                    n - 1
                )));
            }
            f.to_vec()
        }
    };
    let all = vec![
        ('a', Transformation::cycle(n, 1, n - 1)?),
        ('b', Transformation::transposition(n, 1, 2)?),
        ('c', Transformation::singular(n, n - 1, 1)?),
        ('d', Transformation::singular(n, n - 1, 0)?),
        ('e', Transformation::constant(n, 1)?),
    ];
    let (alphabet, delta) = select(Family::Left, all, letters)?;
    Dfa::new(n, alphabet, delta, 0, finals)
}

/// The two-sided-ideal automaton: initial 0, final sink `n-1`,
/// `a = (1,..,n-2)`, `b = (1,2)`, `c = (n-2 → 1)`, `d = (n-2 → 0)`,
/// `e` sends `0..n-2` to 1 and fixes `n-1`, `f = (1 → n-1)`.
pub fn two_sided_witness(n: usize, letters: &str) -> Result<Dfa> {
    if n < min_states(Family::TwoSided) {
        return Err(Error::InvalidWitness(format!(
            "two-sided family needs n >= 4 (got {n}); use small_witness"
        )));
    }
    let e = Transformation::new((0..n).map(|q| if q == n - 1 { q } else { 1 }))?;
    let all = vec![
        ('a', Transformation::cycle(n, 1, n - 2)?),
        ('b', Transformation::transposition(n, 1, 2)?),
        ('c', Transformation::singular(n, n - 2, 1)?),
        ('d', Transformation::singular(n, n - 2, 0)?),
        ('e', e),
        ('f', Transformation::singular(n, 1, n - 1)?),
    ];
    let (alphabet, delta) = select(Family::TwoSided, all, letters)?;
    Dfa::new(n, alphabet, delta, 0, [n - 1])
}

/// `a^(n-1) a*` over `{a}`: the unary language with `n` quotients, an ideal
/// of every kind.
pub fn unary_threshold(n: usize) -> Result<Dfa> {
    if n == 0 {
        return Err(Error::InvalidWitness("n must be positive".into()));
    }
    Dfa::from_images(&[("a", (0..n).map(|q| (q + 1).min(n - 1)).collect())], 0, &[n - 1])
}

/// `Σ* a^(n-1) Σ*` over `{a, b}`.
pub fn two_sided_binary(n: usize) -> Result<Dfa> {
    if n < 2 {
        return Err(Error::InvalidWitness("needs n >= 2".into()));
    }
    let a = (0..n).map(|q| (q + 1).min(n - 1)).collect();
    let b = (0..n).map(|q| if q == n - 1 { q } else { 0 }).collect();
    Dfa::from_images(&[("a", a), ("b", b)], 0, &[n - 1])
}

fn images(letters: &[&[usize]], finals: &[usize]) -> Result<Dfa> {
    let labelled: Vec<(String, Vec<usize>)> = letters
        .iter()
        .enumerate()
        .map(|(i, v)| (((b'a' + i as u8) as char).to_string(), v.to_vec()))
        .collect();
    Dfa::from_images(&labelled, 0, finals)
}

/// Every listed small witness for `(family, n, k)`: the binary and ternary
/// generator tuples from the exhaustive small cases, plus the unary and
/// two-state constructions. The first entry is the canonical one.
pub fn small_witnesses(family: Family, n: usize, k: usize) -> Result<Vec<Dfa>> {
    use Family::*;
    let list = match (family, n, k) {
        (_, _, 1) if n >= 1 => vec![unary_threshold(n)?],
        // b*a(a+b)* is also Σ*aΣ*
        (Right | TwoSided, 2, 2) => vec![images(&[&[1, 1], &[0, 1]], &[1])?],
        (Right, 4, 2) => vec![images(&[&[1, 2, 0, 3], &[1, 0, 3, 3]], &[3])?],
        (Right, 5, 2) => vec![
            images(&[&[0, 1, 0, 2, 4], &[1, 3, 2, 4, 4]], &[4])?,
            // second listed tuple; its `b` is printed with a typo and read as [2,3,0,4,4]
            images(&[&[0, 0, 1, 2, 4], &[2, 3, 0, 4, 4]], &[4])?,
        ],
        (Right, 5, 3) => vec![images(
            &[&[0, 0, 1, 3, 4], &[2, 0, 3, 1, 4], &[3, 1, 2, 4, 4]],
            &[4],
        )?],
        // Σ*a
        (Left, 2, 2) => vec![images(&[&[1, 1], &[0, 0]], &[1])?],
        // Σ*a(a+b)*
        (Left, 2, 3) => vec![images(&[&[1, 1], &[0, 1], &[0, 0]], &[1])?],
        (Left, 3, 2) => vec![images(&[&[0, 0, 1], &[1, 2, 2]], &[2])?],
        (Left, 4, 2) => vec![images(&[&[1, 2, 3, 3], &[0, 0, 1, 2]], &[3])?],
        (Left, 5, 2) => vec![images(&[&[1, 2, 3, 4, 4], &[0, 0, 1, 2, 3]], &[4])?],
        (TwoSided, 3, 3) => vec![images(&[&[1, 2, 2], &[0, 0, 2], &[0, 1, 2]], &[2])?],
        (TwoSided, _, 2) if n >= 3 => vec![two_sided_binary(n)?],
        _ => {
            return Err(Error::InvalidWitness(format!(
                "no listed small witness for ({family}, n={n}, k={k})"
            )))
        }
    };
    Ok(list)
}

pub fn small_witness(family: Family, n: usize, k: usize) -> Result<Dfa> {
    small_witnesses(family, n, k).map(|mut v| v.swap_remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_family_generators() {
        let d = right_ideal_witness(4, "abcd").unwrap();
        let shown: Vec<String> = d.delta().iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, ["[1,2,0,3]", "[1,0,2,3]", "[0,1,0,3]", "[0,1,3,3]"]);
        assert_eq!(d.finals(), vec![3]);
        // a and b coincide at n = 3
        let d3 = right_ideal_witness(3, "ab").unwrap();
        assert_eq!(d3.delta()[0], d3.delta()[1]);
    }

    #[test]
    fn left_family_generators() {
        let d = left_ideal_witness(3, "bcde", None).unwrap();
        let shown: Vec<String> = d.delta().iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, ["[0,2,1]", "[0,1,1]", "[0,1,0]", "[1,1,1]"]);
    }

    #[test]
    fn two_sided_family_generators() {
        let d = two_sided_witness(5, "abcdef").unwrap();
        let shown: Vec<String> = d.delta().iter().map(|t| t.to_string()).collect();
        assert_eq!(
            shown,
            ["[0,2,3,1,4]", "[0,2,1,3,4]", "[0,1,2,1,4]", "[0,1,2,0,4]", "[1,1,1,1,4]", "[0,4,2,3,4]"]
        );
    }

    #[test]
    fn invalid_requests() {
        assert!(right_ideal_witness(2, "ab").is_err());
        assert!(right_ideal_witness(4, "ae").is_err());
        assert!(right_ideal_witness(4, "aa").is_err());
        assert!(right_ideal_witness(4, "").is_err());
        assert!(left_ideal_witness(4, "abc", Some(&[])).is_err());
        assert!(left_ideal_witness(4, "abc", Some(&[0, 2])).is_err());
        assert!(left_ideal_witness(4, "abc", Some(&[4])).is_err());
        assert!(two_sided_witness(3, "a").is_err());
        assert!(small_witness(Family::Right, 7, 2).is_err());
        let spec = WitnessSpec {
            family: Family::Right,
            n: 4,
            letters: "abcd".into(),
            finals_override: Some(vec![1]),
        };
        assert!(spec.build().is_err());
    }

    #[test]
    fn restriction_order_follows_family_order() {
        let d = two_sided_witness(5, "fea").unwrap();
        assert_eq!(d.alphabet(), ["a", "e", "f"]);
    }
}
