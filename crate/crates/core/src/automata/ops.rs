use std::collections::{HashMap, VecDeque};

use super::{Dfa, Nfa};
use crate::error::{Error, Result};
use crate::transform::Transformation;

/// Restricts `d` to the states reachable from its initial state, renumbered
/// in breadth-first discovery order (letters in alphabet order).
pub fn reachable_trim(d: &Dfa) -> Dfa {
    let n = d.n();
    let mut order = Vec::with_capacity(n);
    let mut index = vec![usize::MAX; n];
    index[d.initial()] = 0;
    order.push(d.initial());
    let mut head = 0;
    while head < order.len() {
        let q = order[head];
        head += 1;
        for a in 0..d.alphabet().len() {
            let p = d.step(q, a);
            if index[p] == usize::MAX {
                index[p] = order.len();
                order.push(p);
            }
        }
    }
    let delta = d
        .delta()
        .iter()
        .map(|t| Transformation::from_unchecked(order.iter().map(|&q| index[t.apply(q)] as u32)))
        .collect();
    let finals = order.iter().map(|&q| d.is_final(q)).collect();
    Dfa::from_parts(d.alphabet().to_vec(), delta, 0, finals)
}

/// Nerode classes of the states of `d` (Moore refinement). Class ids are
/// assigned in order of first occurrence, so state 0 is always in class 0.
pub fn nerode_classes(d: &Dfa) -> Vec<usize> {
    let n = d.n();
    let k = d.alphabet().len();
    let mut class: Vec<usize> = {
        let first = d.is_final(0);
        (0..n).map(|q| usize::from(d.is_final(q) != first)).collect()
    };
    let mut count = if class.contains(&1) { 2 } else { 1 };
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::with_capacity(n);
        let mut next = vec![0; n];
        let mut signature = Vec::with_capacity(k + 1);
        for q in 0..n {
            signature.clear();
            signature.push(class[q]);
            signature.extend((0..k).map(|a| class[d.step(q, a)]));
            let fresh = ids.len();
            next[q] = *ids.entry(signature.clone()).or_insert(fresh);
        }
        let refined = ids.len();
        class = next;
        if refined == count {
            return class;
        }
        count = refined;
    }
}

/// The minimal complete DFA of `L(d)`, canonically numbered by
/// [`reachable_trim`].
pub fn minimize(d: &Dfa) -> Dfa {
    let trimmed = reachable_trim(d);
    let class = nerode_classes(&trimmed);
    let m = class.iter().max().map_or(0, |&c| c + 1);
    let mut rep = vec![usize::MAX; m];
    for (q, &c) in class.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = q;
        }
    }
    let delta = trimmed
        .delta()
        .iter()
        .map(|t| Transformation::from_unchecked(rep.iter().map(|&q| class[t.apply(q)] as u32)))
        .collect();
    let finals = rep.iter().map(|&q| trimmed.is_final(q)).collect();
    let quotient = Dfa::from_parts(trimmed.alphabet().to_vec(), delta, class[0], finals);
    reachable_trim(&quotient)
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Subset(Vec<u64>);

impl Subset {
    fn empty(n: usize) -> Self {
        Subset(vec![0; n.div_ceil(64).max(1)])
    }

    fn insert(&mut self, q: usize) {
        self.0[q / 64] |= 1 << (q % 64);
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

/// Accessible subset construction. Subsets are numbered in breadth-first
/// discovery order; the empty subset, if reached, is a non-final sink.
pub fn determinize(m: &Nfa) -> Dfa {
    let n = m.n();
    let k = m.alphabet().len();
    let mut start = Subset::empty(n);
    for &q in m.initials() {
        start.insert(q);
    }
    let mut ids: HashMap<Subset, usize> = HashMap::new();
    let mut subsets = vec![start.clone()];
    ids.insert(start, 0);
    let mut table: Vec<Vec<u32>> = vec![Vec::new(); k];
    let mut head = 0;
    while head < subsets.len() {
        let current = subsets[head].clone();
        head += 1;
        for (a, row) in table.iter_mut().enumerate() {
            let mut next = Subset::empty(n);
            for q in current.iter() {
                for &p in m.successors(q, a) {
                    next.insert(p);
                }
            }
            let id = match ids.get(&next) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    ids.insert(next.clone(), id);
                    subsets.push(next);
                    id
                }
            };
            row.push(id as u32);
        }
    }
    let delta = table.into_iter().map(Transformation::from_unchecked).collect();
    let finals = subsets
        .iter()
        .map(|s| s.iter().any(|q| m.is_final(q)))
        .collect();
    Dfa::from_parts(m.alphabet().to_vec(), delta, 0, finals)
}

/// Reverses every edge and swaps the roles of initial and final states.
pub fn reverse(d: &Dfa) -> Nfa {
    let n = d.n();
    let eta = d
        .delta()
        .iter()
        .map(|t| {
            let mut back = vec![Vec::new(); n];
            for q in 0..n {
                back[t.apply(q)].push(q);
            }
            back
        })
        .collect();
    Nfa::new(n, d.alphabet().to_vec(), eta, d.finals(), vec![d.initial()])
        .expect("reversal of a valid DFA is valid")
}

pub fn complement(d: &Dfa) -> Dfa {
    let finals = d.final_mask().iter().map(|f| !f).collect();
    Dfa::from_parts(d.alphabet().to_vec(), d.delta().to_vec(), d.initial(), finals)
}

/// Decides `L(d1) = L(d2)`. Letters are matched by label, so the two
/// alphabets may list the same labels in different orders.
pub fn equivalent(d1: &Dfa, d2: &Dfa) -> Result<bool> {
    if d1.alphabet().len() != d2.alphabet().len() {
        return Err(Error::AlphabetMismatch(format!(
            "{:?} vs {:?}",
            d1.alphabet(),
            d2.alphabet()
        )));
    }
    let mapping = d1
        .alphabet()
        .iter()
        .map(|a| {
            d2.letter_index(a).ok_or_else(|| {
                Error::AlphabetMismatch(format!("letter {a:?} missing from second automaton"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let n2 = d2.n();
    let mut seen = vec![false; d1.n() * n2];
    let mut queue = VecDeque::new();
    let start = (d1.initial(), d2.initial());
    seen[start.0 * n2 + start.1] = true;
    queue.push_back(start);
    while let Some((p, q)) = queue.pop_front() {
        if d1.is_final(p) != d2.is_final(q) {
            return Ok(false);
        }
        for (a, &b) in mapping.iter().enumerate() {
            let next = (d1.step(p, a), d2.step(q, b));
            let slot = next.0 * n2 + next.1;
            if !seen[slot] {
                seen[slot] = true;
                queue.push_back(next);
            }
        }
    }
    Ok(true)
}

/// The minimal DFA of `Σ*L(d)`.
///
/// A fresh initial state simulates the `Σ*` prefix: on each letter it moves
/// both to itself and to `δ(q0, a)`, and it is final iff `q0` is.
pub fn left_ideal_closure(d: &Dfa) -> Dfa {
    let n = d.n();
    let fresh = n;
    let eta = d
        .delta()
        .iter()
        .map(|t| {
            let mut row: Vec<Vec<usize>> = (0..n).map(|q| vec![t.apply(q)]).collect();
            row.push(vec![fresh, t.apply(d.initial())]);
            row
        })
        .collect();
    let mut finals = d.finals();
    if d.is_final(d.initial()) {
        finals.push(fresh);
    }
    let nfa = Nfa::new(n + 1, d.alphabet().to_vec(), eta, vec![fresh], finals)
        .expect("closure automaton is valid");
    minimize(&determinize(&nfa))
}

/// The minimal DFA of `L(d)Σ*`: every final state is redirected to a new
/// accepting sink.
pub fn right_ideal_closure(d: &Dfa) -> Dfa {
    let n = d.n();
    let sink = n as u32;
    let delta = d
        .delta()
        .iter()
        .map(|t| {
            Transformation::from_unchecked(
                (0..n)
                    .map(|q| if d.is_final(q) { sink } else { t.apply(q) as u32 })
                    .chain(std::iter::once(sink)),
            )
        })
        .collect();
    let mut finals = d.final_mask().to_vec();
    finals.push(true);
    minimize(&Dfa::from_parts(d.alphabet().to_vec(), delta, d.initial(), finals))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dfa(letters: &[(&str, Vec<usize>)], initial: usize, finals: &[usize]) -> Dfa {
        Dfa::from_images(letters, initial, finals).unwrap()
    }

    /// `a^{n-1} a*` over a unary alphabet with `n` states.
    fn unary_threshold(n: usize) -> Dfa {
        let images = (0..n).map(|q| (q + 1).min(n - 1)).collect();
        dfa(&[("a", images)], 0, &[n - 1])
    }

    #[test]
    fn trim_drops_unreachable_states() {
        let d = dfa(&[("a", vec![1, 1, 0]), ("b", vec![0, 0, 2])], 0, &[1, 2]);
        let t = reachable_trim(&d);
        assert_eq!(t.n(), 2);
        assert!(equivalent(&d, &t).unwrap());
        let again = reachable_trim(&t);
        assert_eq!(again, t);
    }

    #[test]
    fn minimize_keeps_unary_threshold_automaton() {
        let d = unary_threshold(5);
        let m = minimize(&d);
        assert_eq!(m.n(), 5);
        assert_eq!(m, d);
    }

    #[test]
    fn equivalent_final_sinks_merge() {
        let d = dfa(&[("a", vec![1, 1, 2]), ("b", vec![2, 1, 2])], 0, &[1, 2]);
        assert_eq!(minimize(&d).n(), 2);
    }

    #[test]
    fn empty_language_minimizes_to_one_state() {
        let d = dfa(&[("a", vec![1, 2, 0]), ("b", vec![0, 0, 1])], 0, &[]);
        let m = minimize(&d);
        assert_eq!(m.n(), 1);
        assert!(!m.is_final(0));
    }

    #[test]
    fn determinize_deterministic_nfa_is_isomorphic() {
        let d = dfa(&[("a", vec![1, 2, 0]), ("b", vec![0, 2, 2])], 0, &[2]);
        let eta = d
            .delta()
            .iter()
            .map(|t| (0..3).map(|q| vec![t.apply(q)]).collect())
            .collect();
        let nfa = Nfa::new(3, d.alphabet().to_vec(), eta, vec![0], vec![2]).unwrap();
        assert_eq!(determinize(&nfa), d);
    }

    #[test]
    fn empty_subset_becomes_rejecting_sink() {
        let nfa = Nfa::new(
            2,
            vec!["a".into(), "b".into()],
            vec![vec![vec![1], vec![]], vec![vec![], vec![]]],
            vec![0],
            vec![1],
        )
        .unwrap();
        let d = determinize(&nfa);
        assert_eq!(d.n(), 3);
        let sink = d.step(0, 1);
        assert!(d.is_sink(sink) && !d.is_final(sink));
    }

    #[test]
    fn reversal_of_universal_language() {
        let d = dfa(&[("a", vec![0]), ("b", vec![0])], 0, &[0]);
        let r = reverse(&d);
        assert_eq!(r.n(), 1);
        assert!(r.accepts(&[]) && r.accepts(&[0, 1, 1]));
    }

    #[test]
    fn double_reversal_preserves_language() {
        let d = dfa(&[("a", vec![1, 2, 0, 0]), ("b", vec![3, 1, 3, 2])], 0, &[2]);
        let once = minimize(&determinize(&reverse(&d)));
        let twice = minimize(&determinize(&reverse(&once)));
        assert!(equivalent(&twice, &d).unwrap());
        assert_eq!(twice, minimize(&d));
    }

    #[test]
    fn complement_is_an_involution() {
        let d = dfa(&[("a", vec![1, 2, 0]), ("b", vec![0, 2, 1])], 0, &[1]);
        assert!(equivalent(&complement(&complement(&d)), &d).unwrap());
        assert!(!equivalent(&complement(&d), &d).unwrap());
        assert_eq!(minimize(&complement(&d)).n(), minimize(&d).n());
    }

    #[test]
    fn equivalence_matches_letters_by_label() {
        let d1 = dfa(&[("a", vec![1, 1]), ("b", vec![0, 1])], 0, &[1]);
        let d2 = dfa(&[("b", vec![0, 1]), ("a", vec![1, 1])], 0, &[1]);
        assert!(equivalent(&d1, &d2).unwrap());
        let d3 = dfa(&[("a", vec![1, 1]), ("c", vec![0, 1])], 0, &[1]);
        assert!(matches!(equivalent(&d1, &d3), Err(Error::AlphabetMismatch(_))));
    }

    #[test]
    fn left_closure_of_b_or_ends_in_a() {
        // L = b ∪ Σ*a
        let d = dfa(&[("a", vec![1, 1, 1]), ("b", vec![1, 2, 2])], 0, &[1]);
        let closed = left_ideal_closure(&d);
        assert!(!equivalent(&closed, &minimize(&d)).unwrap());
        // ab is in Σ*L but not in L.
        assert!(closed.accepts(&[0, 1]) && !d.accepts(&[0, 1]));
    }

    #[test]
    fn left_closure_of_empty_language_is_empty() {
        let d = dfa(&[("a", vec![1, 0])], 0, &[]);
        let closed = left_ideal_closure(&d);
        assert!(equivalent(&closed, &d).unwrap());
    }

    #[test]
    fn right_closure_adds_suffixes() {
        // L = a
        let d = dfa(&[("a", vec![1, 2, 2]), ("b", vec![2, 2, 2])], 0, &[1]);
        let closed = right_ideal_closure(&d);
        assert!(closed.accepts(&[0, 1, 0]) && !d.accepts(&[0, 1, 0]));
        assert_eq!(closed.n(), 3);
    }
}
