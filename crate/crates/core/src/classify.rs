//! Ideal/closed class membership, special quotients, unique reachability,
//! word behaviors, and the pair-graph test for uniform minimality.

use std::collections::VecDeque;

use num_bigint::BigUint;
use serde::Serialize;

use crate::automata::{
    complement, equivalent, left_ideal_closure, minimize, right_ideal_closure, Dfa, Semiautomaton,
};
use crate::bounds::{special_quotient_candidates, BoundCandidate, SpecialQuotients};
use crate::error::{Error, Result};
use crate::semigroup::transition_semigroup;
use crate::transform::Transformation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub is_right_ideal: bool,
    pub is_left_ideal: bool,
    pub is_two_sided_ideal: bool,
    pub is_prefix_closed: bool,
    pub is_suffix_closed: bool,
    pub is_factor_closed: bool,
    pub has_empty_q: bool,
    pub has_sigma_star_q: bool,
    pub has_epsilon_q: bool,
    pub has_sigma_plus_q: bool,
    pub l_uniquely_reachable: bool,
    pub some_la_uniquely_reachable: bool,
    #[serde(serialize_with = "crate::serialize_big")]
    pub bound: BigUint,
    pub sigma: usize,
}

impl ClassReport {
    pub fn special_quotients(&self) -> SpecialQuotients {
        SpecialQuotients {
            empty: self.has_empty_q,
            sigma_star: self.has_sigma_star_q,
            epsilon: self.has_epsilon_q,
            sigma_plus: self.has_sigma_plus_q,
        }
    }

    /// Flag names and values in declaration order.
    pub fn flags(&self) -> [(&'static str, bool); 12] {
        [
            ("is_right_ideal", self.is_right_ideal),
            ("is_left_ideal", self.is_left_ideal),
            ("is_two_sided_ideal", self.is_two_sided_ideal),
            ("is_prefix_closed", self.is_prefix_closed),
            ("is_suffix_closed", self.is_suffix_closed),
            ("is_factor_closed", self.is_factor_closed),
            ("has_empty_q", self.has_empty_q),
            ("has_sigma_star_q", self.has_sigma_star_q),
            ("has_epsilon_q", self.has_epsilon_q),
            ("has_sigma_plus_q", self.has_sigma_plus_q),
            ("l_uniquely_reachable", self.l_uniquely_reachable),
            ("some_la_uniquely_reachable", self.some_la_uniquely_reachable),
        ]
    }
}

fn is_nonempty(min: &Dfa) -> bool {
    (0..min.n()).any(|q| min.is_final(q))
}

fn is_universal(min: &Dfa) -> bool {
    min.n() == 1 && min.is_final(0)
}

/// Right ideal test on a minimal DFA: exactly one final state, and it is a sink.
pub fn is_right_ideal_structural(min: &Dfa) -> bool {
    let finals = min.finals();
    finals.len() == 1 && min.is_sink(finals[0])
}

/// Right ideal test by definition: `L` nonempty and `L = LΣ*`.
pub fn is_right_ideal_semantic(d: &Dfa) -> bool {
    let min = minimize(d);
    is_nonempty(&min) && equivalent(&min, &right_ideal_closure(&min)).expect("same alphabet")
}

/// Left ideal test by definition: `L` nonempty and `L = Σ*L`.
pub fn is_left_ideal_semantic(d: &Dfa) -> bool {
    let min = minimize(d);
    is_nonempty(&min) && equivalent(&min, &left_ideal_closure(&min)).expect("same alphabet")
}

/// Left ideal test by quotient inclusion: `L = Σ*L` iff `L ⊆ L_w` for every
/// word `w`, i.e. no pair `(q0, q)` of reachable states reaches a pair
/// (final, non-final).
pub fn is_left_ideal_by_inclusion(d: &Dfa) -> bool {
    let n = d.n();
    let k = d.alphabet().len();
    if !(0..n).any(|q| d.is_final(q)) {
        return false;
    }
    let mut reachable = vec![false; n];
    reachable[d.initial()] = true;
    let mut stack = vec![d.initial()];
    while let Some(q) = stack.pop() {
        for a in 0..k {
            let p = d.step(q, a);
            if !std::mem::replace(&mut reachable[p], true) {
                stack.push(p);
            }
        }
    }
    let mut seen = vec![false; n * n];
    let mut queue: VecDeque<(usize, usize)> = (0..n)
        .filter(|&q| reachable[q])
        .map(|q| (d.initial(), q))
        .collect();
    for &(p, q) in &queue {
        seen[p * n + q] = true;
    }
    while let Some((p, q)) = queue.pop_front() {
        if d.is_final(p) && !d.is_final(q) {
            return false;
        }
        for a in 0..k {
            let next = (d.step(p, a), d.step(q, a));
            if !std::mem::replace(&mut seen[next.0 * n + next.1], true) {
                queue.push_back(next);
            }
        }
    }
    true
}

/// Special quotients of a minimal DFA.
pub fn special_quotients(min: &Dfa) -> SpecialQuotients {
    let n = min.n();
    let empty_sink = (0..n).find(|&q| !min.is_final(q) && min.is_sink(q));
    let full_sink = (0..n).find(|&q| min.is_final(q) && min.is_sink(q));
    let all_into = |q: usize, target: usize| min.delta().iter().all(|t| t.apply(q) == target);
    SpecialQuotients {
        empty: empty_sink.is_some(),
        sigma_star: full_sink.is_some(),
        epsilon: empty_sink.is_some_and(|s| (0..n).any(|q| min.is_final(q) && all_into(q, s))),
        sigma_plus: full_sink.is_some_and(|s| (0..n).any(|q| !min.is_final(q) && all_into(q, s))),
    }
}

/// `(L is ur, some L_a is ur)` for a minimal DFA.
pub fn unique_reachability(min: &Dfa) -> (bool, bool) {
    let q0 = min.initial();
    let l_ur = min.in_degree(q0) == 0;
    let la_ur = l_ur && min.delta().iter().any(|t| min.in_degree(t.apply(q0)) == 1);
    (l_ur, la_ur)
}

/// All applicable upper bounds on σ for the language of a minimal DFA.
pub fn bound_candidates(min: &Dfa) -> Vec<BoundCandidate<BigUint>> {
    let (l_ur, la_ur) = unique_reachability(min);
    special_quotient_candidates(min.n(), special_quotients(min), l_ur, la_ur)
}

/// Classifies `L(d)`; `d` is minimized first.
pub fn classify(d: &Dfa) -> Result<ClassReport> {
    let min = minimize(d);
    let sigma = transition_semigroup(&min, None)?.sigma();

    let right = is_nonempty(&min) && is_right_ideal_structural(&min);
    debug_assert_eq!(right, is_right_ideal_semantic(&min));
    let left = is_left_ideal_semantic(&min);
    debug_assert_eq!(left, is_left_ideal_by_inclusion(&min));

    let co = complement(&min);
    let universal = is_universal(&min);
    let co_right = is_nonempty(&co) && is_right_ideal_structural(&co);
    let co_left = is_left_ideal_semantic(&co);

    let q = special_quotients(&min);
    let (l_ur, la_ur) = unique_reachability(&min);
    let bound = special_quotient_candidates::<BigUint>(min.n(), q, l_ur, la_ur)
        .into_iter()
        .filter(|c| c.certified)
        .map(|c| c.value)
        .min()
        .expect("n^n is always a candidate");

    Ok(ClassReport {
        is_right_ideal: right,
        is_left_ideal: left,
        is_two_sided_ideal: right && left,
        is_prefix_closed: universal || co_right,
        is_suffix_closed: universal || co_left,
        is_factor_closed: universal || (co_right && co_left),
        has_empty_q: q.empty,
        has_sigma_star_q: q.sigma_star,
        has_epsilon_q: q.epsilon,
        has_sigma_plus_q: q.sigma_plus,
        l_uniquely_reachable: l_ur,
        some_la_uniquely_reachable: la_ur,
        bound,
        sigma,
    })
}

/// The orbit `p_0 = q0, p_1, .., p_{j-1}` of the initial state under powers
/// of a transformation, with `p_j = p_{loop_entry}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Behavior {
    pub orbit: Vec<usize>,
    pub loop_entry: usize,
}

impl Behavior {
    pub fn period(&self) -> usize {
        self.orbit.len() - self.loop_entry
    }

    pub fn is_aperiodic(&self) -> bool {
        self.period() == 1
    }
}

/// Behavior of `t` started from `start`.
pub fn behavior_from(start: usize, t: &Transformation) -> Behavior {
    let mut position = vec![usize::MAX; t.n()];
    let mut orbit = Vec::new();
    let mut p = start;
    while position[p] == usize::MAX {
        position[p] = orbit.len();
        orbit.push(p);
        p = t.apply(p);
    }
    Behavior {
        orbit,
        loop_entry: position[p],
    }
}

pub fn behavior_of(d: &Dfa, t: &Transformation) -> Result<Behavior> {
    if t.n() != d.n() {
        return Err(Error::SizeMismatch {
            expected: d.n(),
            found: t.n(),
        });
    }
    Ok(behavior_from(d.initial(), t))
}

/// True iff every element of the transition semigroup of `d` has an
/// aperiodic behavior from the initial state.
pub fn all_behaviors_aperiodic(d: &Dfa) -> Result<bool> {
    let semigroup = transition_semigroup(d, None)?;
    Ok(semigroup
        .elements()
        .iter()
        .all(|t| behavior_from(d.initial(), t).is_aperiodic()))
}

/// Counts, by enumerating all `n^n` transformations, those whose behavior
/// from state 0 has period at least 2.
pub fn ruled_out_count_brute(n: usize) -> Result<u64> {
    if n > 8 {
        return Err(Error::TooLarge(n));
    }
    Ok(all_transformations(n)
        .filter(|t| !behavior_from(0, t).is_aperiodic())
        .count() as u64)
}

/// Every transformation of `{0..n-1}`, in lexicographic order of images.
pub fn all_transformations(n: usize) -> impl Iterator<Item = Transformation> {
    let mut digits = vec![0u32; n];
    let mut done = n == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = Transformation::from_unchecked(digits.iter().copied());
        done = true;
        for k in (0..n).rev() {
            if (digits[k] as usize) + 1 < n {
                digits[k] += 1;
                done = false;
                break;
            }
            digits[k] = 0;
        }
        Some(out)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UniformMinimality {
    /// Every pair of distinct states reaches a pair containing the sink.
    pub uniformly_minimal: bool,
    /// The non-sink states are strongly connected.
    pub strongly_connected: bool,
}

/// Pair-graph test for uniform minimality of a semiautomaton with an
/// absorbing `sink`. A letter that maps a pair onto a single state gives no
/// edge.
pub fn uniformly_minimal(s: &Semiautomaton, sink: usize) -> Result<UniformMinimality> {
    let n = s.n();
    if sink >= n {
        return Err(Error::StateOutOfRange { state: sink, n });
    }
    if s.delta().iter().any(|t| t.apply(sink) != sink) {
        return Err(Error::NotASink(sink));
    }
    let id = |p: usize, q: usize| p.min(q) * n + p.max(q);
    let mut good = vec![false; n * n];
    for q in (0..n).filter(|&q| q != sink) {
        good[id(sink, q)] = true;
    }
    loop {
        let mut changed = false;
        for p in 0..n {
            for q in p + 1..n {
                if good[id(p, q)] {
                    continue;
                }
                let reaches = s.delta().iter().any(|t| {
                    let (x, y) = (t.apply(p), t.apply(q));
                    x != y && good[id(x, y)]
                });
                if reaches {
                    good[id(p, q)] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let uniformly_minimal = (0..n).all(|p| (p + 1..n).all(|q| good[id(p, q)]));

    let others: Vec<usize> = (0..n).filter(|&q| q != sink).collect();
    let strongly_connected = others.iter().all(|&start| {
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(q) = stack.pop() {
            for t in s.delta() {
                let p = t.apply(q);
                if p != sink && !std::mem::replace(&mut seen[p], true) {
                    stack.push(p);
                }
            }
        }
        others.iter().all(|&q| seen[q])
    });

    Ok(UniformMinimality {
        uniformly_minimal,
        strongly_connected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[usize]) -> Transformation {
        Transformation::new(v.iter().copied()).unwrap()
    }

    /// Quotient automaton of L = b ∪ Σ*a with finals {1}; finals {2} gives Σ*Σb.
    fn b_or_ends_in_a(finals: &[usize]) -> Dfa {
        Dfa::from_images(&[("a", vec![1, 1, 1]), ("b", vec![1, 2, 2])], 0, finals).unwrap()
    }

    #[test]
    fn b_or_ends_in_a_is_not_a_left_ideal() {
        let d = b_or_ends_in_a(&[1]);
        let r = classify(&d).unwrap();
        assert!(!r.is_left_ideal);
        assert!(all_behaviors_aperiodic(&d).unwrap());
        assert!(!r.has_empty_q);
    }

    #[test]
    fn moving_the_final_state_makes_a_left_ideal() {
        // L' = Σ*Σb
        let d = b_or_ends_in_a(&[2]);
        let r = classify(&d).unwrap();
        assert!(r.is_left_ideal);
        assert_eq!(minimize(&d).n(), 3);
        let other = classify(&b_or_ends_in_a(&[1])).unwrap();
        assert_eq!(r.sigma, other.sigma);
    }

    #[test]
    fn behaviors() {
        let d = Dfa::from_images(&[("a", vec![1, 0])], 0, &[1]).unwrap();
        let id = behavior_of(&d, &Transformation::identity(2)).unwrap();
        assert_eq!((id.orbit.clone(), id.period()), (vec![0], 1));
        let swap = behavior_of(&d, &t(&[1, 0])).unwrap();
        assert_eq!((swap.orbit.clone(), swap.loop_entry, swap.period()), (vec![0, 1], 0, 2));
        let fix = behavior_of(&d, &t(&[1, 1])).unwrap();
        assert_eq!((fix.orbit.clone(), fix.loop_entry, fix.period()), (vec![0, 1], 1, 1));
        assert!(behavior_of(&d, &t(&[0, 1, 2])).is_err());
        assert!(!all_behaviors_aperiodic(&d).unwrap());
    }

    #[test]
    fn constant_letters_are_aperiodic() {
        let d = Dfa::from_images(&[("a", vec![2, 2, 2]), ("b", vec![1, 1, 1])], 0, &[1]).unwrap();
        assert!(all_behaviors_aperiodic(&d).unwrap());
    }

    #[test]
    fn brute_ruled_out_counts() {
        let v: Vec<u64> = (2..=5).map(|n| ruled_out_count_brute(n).unwrap()).collect();
        assert_eq!(v, vec![1, 10, 114, 1556]);
        assert_eq!(ruled_out_count_brute(9), Err(Error::TooLarge(9)));
    }

    #[test]
    fn enumerates_all_transformations() {
        assert_eq!(all_transformations(3).count(), 27);
        assert_eq!(all_transformations(1).collect::<Vec<_>>(), vec![t(&[0])]);
    }

    #[test]
    fn identity_letters_are_not_uniformly_minimal() {
        let s = Semiautomaton::new(3, vec!["a".into()], vec![Transformation::identity(3)]).unwrap();
        let r = uniformly_minimal(&s, 0).unwrap();
        assert!(!r.uniformly_minimal);
        assert!(!r.strongly_connected);
    }

    #[test]
    fn collapsing_letters_give_no_edges() {
        // one letter sending everything to the sink
        let two = Semiautomaton::new(2, vec!["a".into()], vec![t(&[0, 0])]).unwrap();
        assert!(uniformly_minimal(&two, 0).unwrap().uniformly_minimal);
        let three = Semiautomaton::new(3, vec!["a".into()], vec![t(&[0, 0, 0])]).unwrap();
        assert!(!uniformly_minimal(&three, 0).unwrap().uniformly_minimal);
    }

    #[test]
    fn non_absorbing_sink_is_rejected() {
        let s = Semiautomaton::new(2, vec!["a".into()], vec![t(&[1, 0])]).unwrap();
        assert_eq!(uniformly_minimal(&s, 0), Err(Error::NotASink(0)));
    }

    #[test]
    fn special_quotients_of_single_letter_language() {
        // L = a over {a, b}: states L, ε, ∅
        let d = Dfa::from_images(&[("a", vec![1, 2, 2]), ("b", vec![2, 2, 2])], 0, &[1]).unwrap();
        let q = special_quotients(&minimize(&d));
        assert!(q.empty && q.epsilon && !q.sigma_star && !q.sigma_plus);
        assert_eq!(unique_reachability(&minimize(&d)), (true, true));
    }

    #[test]
    fn closed_classes_follow_complements() {
        // prefix-closed: a*  (complement a*b(a+b)* is a right ideal)
        let d = Dfa::from_images(&[("a", vec![0, 1]), ("b", vec![1, 1])], 0, &[0]).unwrap();
        let r = classify(&d).unwrap();
        assert!(r.is_prefix_closed && !r.is_right_ideal);
        let universal = Dfa::from_images(&[("a", vec![0])], 0, &[0]).unwrap();
        let u = classify(&universal).unwrap();
        assert!(u.is_prefix_closed && u.is_suffix_closed && u.is_factor_closed);
        assert!(u.is_right_ideal && u.is_left_ideal && u.is_two_sided_ideal);
        let empty = Dfa::from_images(&[("a", vec![0])], 0, &[]).unwrap();
        let e = classify(&empty).unwrap();
        assert!(!e.is_right_ideal && !e.is_left_ideal && e.is_prefix_closed);
    }

    #[test]
    fn uncertified_table_cells_do_not_bound() {
        // aaa over {a}: flags {∅, ε}, both ur flags; the printed L_a-ur cell is 2
        let d = Dfa::from_images(&[("a", vec![1, 2, 3, 4, 4])], 0, &[3]).unwrap();
        let min = minimize(&d);
        let cell = bound_candidates(&min)
            .into_iter()
            .find(|c| c.source == "table row, L_a ur")
            .unwrap();
        assert_eq!((cell.value, cell.certified), (BigUint::from(2u32), false));
        let r = classify(&d).unwrap();
        assert_eq!(r.sigma, 4);
        assert_eq!(r.bound, BigUint::from(64u32));
    }
}
