//! Transition semigroups by breadth-first closure.
//!
//! Starting from the letter transformations, every discovered element is
//! right-multiplied by each letter (in alphabet order) until no new
//! transformation appears. Because discovery is breadth-first and parents are
//! processed in discovery order, the first word recorded for an element is
//! its shortest witness, ties broken lexicographically by letter order.
//!
//! Run on a minimal DFA, the result is the syntactic semigroup of its language.

use rustc_hash::FxHashMap;

use crate::automata::{minimize, Dfa};
use crate::error::{Error, Result};
use crate::transform::Transformation;

const NO_PARENT: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
pub struct ClosureOptions {
    /// Maximum number of elements before the closure gives up. `None` means
    /// `n^n` (saturating), which a transformation semigroup can never exceed.
    pub cap: Option<usize>,
    /// Record a shortest witness word for every element.
    pub track_words: bool,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        Self {
            cap: None,
            track_words: true,
        }
    }
}

/// `n^n`, saturating at `usize::MAX`.
pub fn full_monoid_size(n: usize) -> usize {
    (0..n).try_fold(1usize, |acc, _| acc.checked_mul(n)).unwrap_or(usize::MAX)
}

#[derive(Debug, Clone)]
pub struct SemigroupResult {
    n: usize,
    elements: Vec<Transformation>,
    index: FxHashMap<Transformation, usize>,
    // (parent element, last letter); parent is NO_PARENT for single letters
    parent: Vec<(u32, u32)>,
    depth: Vec<u32>,
    identity_from_nonempty_word: bool,
}

impl SemigroupResult {
    /// Number of states the elements act on.
    pub fn n(&self) -> usize {
        self.n
    }

    /// σ: the number of distinct transformations of nonempty words.
    pub fn sigma(&self) -> usize {
        self.elements.len()
    }

    /// μ: σ, plus one when the identity is not performed by any nonempty word.
    pub fn mu(&self) -> usize {
        self.sigma() + usize::from(!self.identity_from_nonempty_word)
    }

    pub fn contains_identity_as_nonempty_word(&self) -> bool {
        self.identity_from_nonempty_word
    }

    /// Elements in discovery order (shortlex order of their witness words).
    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        self.index.contains_key(t)
    }

    pub fn words_tracked(&self) -> bool {
        !self.parent.is_empty() || self.elements.is_empty()
    }

    /// The shortest, lexicographically least word (letter indices) performing `t`.
    pub fn witness_word(&self, t: &Transformation) -> Result<Vec<usize>> {
        let &i = self.index.get(t).ok_or(Error::NotInSemigroup)?;
        if !self.words_tracked() {
            return Err(Error::InvalidAutomaton(
                "witness words were not recorded for this closure".into(),
            ));
        }
        let mut word = Vec::new();
        let mut cur = i as u32;
        while cur != NO_PARENT {
            let (p, a) = self.parent[cur as usize];
            word.push(a as usize);
            cur = p;
        }
        word.reverse();
        Ok(word)
    }

    /// Length of the shortest word performing each element, if tracked.
    pub fn word_length(&self, t: &Transformation) -> Option<usize> {
        let &i = self.index.get(t)?;
        self.depth.get(i).map(|&d| d as usize)
    }

    /// Number of elements whose shortest word has length `ℓ`, for `ℓ = 1, 2, ..`.
    pub fn length_histogram(&self) -> Vec<usize> {
        let mut hist = Vec::new();
        for &d in &self.depth {
            let d = d as usize;
            if hist.len() < d {
                hist.resize(d, 0);
            }
            hist[d - 1] += 1;
        }
        hist
    }
}

/// Closure of `generators` under composition.
pub fn closure(generators: &[Transformation], opts: ClosureOptions) -> Result<SemigroupResult> {
    let n = generators.first().map_or(0, Transformation::n);
    if let Some(bad) = generators.iter().find(|t| t.n() != n) {
        return Err(Error::SizeMismatch {
            expected: n,
            found: bad.n(),
        });
    }
    let cap = opts.cap.unwrap_or_else(|| full_monoid_size(n));
    let mut res = SemigroupResult {
        n,
        elements: Vec::new(),
        index: FxHashMap::default(),
        parent: Vec::new(),
        depth: Vec::new(),
        identity_from_nonempty_word: false,
    };

    let push = |res: &mut SemigroupResult, t: Transformation, parent: u32, letter: u32, depth: u32| {
        if res.index.contains_key(&t) {
            return Ok(());
        }
        if res.elements.len() >= cap {
            return Err(Error::CapExceeded {
                cap,
                partial: res.elements.len() + 1,
            });
        }
        if t.is_identity() {
            res.identity_from_nonempty_word = true;
        }
        res.index.insert(t.clone(), res.elements.len());
        res.elements.push(t);
        if opts.track_words {
            res.parent.push((parent, letter));
            res.depth.push(depth);
        }
        Ok(())
    };

    for (a, g) in generators.iter().enumerate() {
        push(&mut res, g.clone(), NO_PARENT, a as u32, 1)?;
    }
    let mut head = 0;
    while head < res.elements.len() {
        let current = res.elements[head].clone();
        let depth = res.depth.get(head).map_or(0, |d| d + 1);
        for (a, g) in generators.iter().enumerate() {
            push(&mut res, current.then_unchecked(g), head as u32, a as u32, depth)?;
        }
        head += 1;
    }
    Ok(res)
}

/// The transition semigroup of `d` as given (not minimized).
pub fn transition_semigroup(d: &Dfa, cap: Option<usize>) -> Result<SemigroupResult> {
    closure(
        d.delta(),
        ClosureOptions {
            cap,
            track_words: true,
        },
    )
}

/// σ(L(d)): the transition semigroup size of the minimal DFA.
pub fn sigma_of_language(d: &Dfa) -> Result<usize> {
    let m = minimize(d);
    closure(
        m.delta(),
        ClosureOptions {
            cap: None,
            track_words: false,
        },
    )
    .map(|r| r.sigma())
}

/// Shortest witness word for `t`, rendered with the DFA's labels.
pub fn witness_words(d: &Dfa, result: &SemigroupResult, t: &Transformation) -> Result<String> {
    result.witness_word(t).map(|w| d.format_word(&w))
}

/// Closure over transformations packed four bits per state (`n <= 16`).
/// Used by the exhaustive search, where millions of tiny semigroups are built.
pub(crate) mod packed {
    use rustc_hash::FxHashSet;

    pub const MAX_N: usize = 16;

    pub fn pack(images: &[u32]) -> u64 {
        images
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &i)| acc | (i as u64) << (4 * k))
    }

    #[inline]
    pub fn image(t: u64, k: usize) -> usize {
        (t >> (4 * k) & 0xf) as usize
    }

    #[inline]
    pub fn then(first: u64, second: &[u8; MAX_N], n: usize) -> u64 {
        let mut out = 0u64;
        for k in 0..n {
            out |= (second[image(first, k)] as u64) << (4 * k);
        }
        out
    }

    pub fn unpack(t: u64, n: usize) -> [u8; MAX_N] {
        let mut out = [0u8; MAX_N];
        for (k, slot) in out.iter_mut().enumerate().take(n) {
            *slot = image(t, k) as u8;
        }
        out
    }

    /// Size of the semigroup generated by `letters`.
    pub fn sigma(letters: &[u64], n: usize, scratch: &mut FxHashSet<u64>, queue: &mut Vec<u64>) -> usize {
        debug_assert!(n <= MAX_N);
        let tables: Vec<[u8; MAX_N]> = letters.iter().map(|&t| unpack(t, n)).collect();
        scratch.clear();
        queue.clear();
        for &t in letters {
            if scratch.insert(t) {
                queue.push(t);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let cur = queue[head];
            head += 1;
            for table in &tables {
                let next = then(cur, table, n);
                if scratch.insert(next) {
                    queue.push(next);
                }
            }
        }
        queue.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[usize]) -> Transformation {
        Transformation::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn unary_threshold_has_n_minus_one_elements() {
        let d = Dfa::from_images(&[("a", vec![1, 2, 3, 4, 4])], 0, &[4]).unwrap();
        let r = transition_semigroup(&d, None).unwrap();
        assert_eq!(r.sigma(), 4);
        assert_eq!(r.mu(), 5);
        assert_eq!(r.length_histogram(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn universal_language_has_sigma_one() {
        let d = Dfa::from_images(&[("a", vec![0]), ("b", vec![0])], 0, &[0]).unwrap();
        assert_eq!(sigma_of_language(&d).unwrap(), 1);
    }

    #[test]
    fn two_state_right_ideal() {
        // b*a(a+b)*
        let d = Dfa::from_images(&[("a", vec![1, 1]), ("b", vec![0, 1])], 0, &[1]).unwrap();
        let r = transition_semigroup(&d, None).unwrap();
        assert_eq!(r.sigma(), 2);
        assert!(r.contains_identity_as_nonempty_word());
        assert_eq!(r.mu(), 2);
    }

    #[test]
    fn binary_right_ideal_with_31_elements() {
        let d = Dfa::from_images(&[("a", vec![1, 2, 0, 3]), ("b", vec![1, 0, 3, 3])], 0, &[3])
            .unwrap();
        assert_eq!(sigma_of_language(&d).unwrap(), 31);
    }

    #[test]
    fn identity_letter_witness() {
        let d = Dfa::from_images(&[("a", vec![0, 1]), ("b", vec![1, 1])], 0, &[1]).unwrap();
        let r = transition_semigroup(&d, None).unwrap();
        assert_eq!(witness_words(&d, &r, &t(&[0, 1])).unwrap(), "a");
        assert_eq!(witness_words(&d, &r, &t(&[1, 1])).unwrap(), "b");
        assert_eq!(r.witness_word(&t(&[1, 0])), Err(Error::NotInSemigroup));
    }

    #[test]
    fn cap_overflow_reports_partial_count() {
        let gens = [
            Transformation::cycle(4, 0, 3).unwrap(),
            Transformation::transposition(4, 0, 1).unwrap(),
        ];
        let err = closure(&gens, ClosureOptions { cap: Some(10), track_words: false }).unwrap_err();
        assert_eq!(err, Error::CapExceeded { cap: 10, partial: 11 });
    }

    #[test]
    fn witness_words_are_shortlex_least() {
        let d = Dfa::from_images(&[("a", vec![1, 2, 0]), ("b", vec![1, 0, 2])], 0, &[0]).unwrap();
        let r = transition_semigroup(&d, None).unwrap();
        assert_eq!(r.sigma(), 6);
        // every element's witness evaluates to it and no shorter/lex-smaller word does
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        for len in 1..=4 {
            let mut next = Vec::new();
            for w in words.iter().filter(|w| w.len() == len - 1) {
                for a in 0..2 {
                    let mut v = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
            words.extend(next);
        }
        words.retain(|w| !w.is_empty());
        words.sort_by(|x, y| x.len().cmp(&y.len()).then(x.cmp(y)));
        for e in r.elements() {
            let first = words
                .iter()
                .find(|w| {
                    let images: Vec<usize> = (0..3).map(|q| d.run_from(q, w)).collect();
                    images == e.images().iter().map(|&i| i as usize).collect::<Vec<_>>()
                })
                .unwrap();
            assert_eq!(&r.witness_word(e).unwrap(), first);
        }
    }

    #[test]
    fn packed_closure_agrees_with_general_closure() {
        let gens = [t(&[1, 2, 0, 3]), t(&[1, 0, 3, 3])];
        let packed: Vec<u64> = gens.iter().map(|g| packed::pack(g.images())).collect();
        let mut set = Default::default();
        let mut queue = Vec::new();
        let general = closure(&gens, ClosureOptions::default()).unwrap();
        assert_eq!(packed::sigma(&packed, 4, &mut set, &mut queue), general.sigma());
    }
}
