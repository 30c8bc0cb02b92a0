//! Brute-force cross-checks that share no code with the closure engine or the
//! behavior analysis. They are slow and only meant for small inputs.

use std::collections::HashSet;

use crate::automata::{minimize, Dfa};
use crate::error::{Error, Result};

/// σ by plain word enumeration: run every word of length 1, 2, ... through
/// the minimal DFA state by state, and keep extending only the words whose
/// state map is new. Stops at the first length that adds nothing.
pub fn word_bfs_sigma(d: &Dfa) -> Result<usize> {
    let m = minimize(d);
    let n = m.n();
    if n > 8 {
        return Err(Error::TooLarge(n));
    }
    let k = m.alphabet().len();
    let run = |word: &[usize]| -> Vec<usize> { (0..n).map(|q| m.run_from(q, word)).collect() };

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    loop {
        let mut next = Vec::new();
        for w in &frontier {
            for a in 0..k {
                let mut longer = w.clone();
                longer.push(a);
                if seen.insert(run(&longer)) {
                    next.push(longer);
                }
            }
        }
        if next.is_empty() {
            return Ok(seen.len());
        }
        frontier = next;
    }
}

/// Counts maps of `{0..n-1}` whose orbit from 0 ends in a cycle of length at
/// least 2, by listing all `n^n` maps as base-`n` numbers.
pub fn periodic_orbit_count(n: usize) -> Result<u64> {
    if n > 8 {
        return Err(Error::TooLarge(n));
    }
    if n == 0 {
        return Ok(0);
    }
    let total = (n as u64).pow(n as u32);
    let mut count = 0;
    let mut map = vec![0usize; n];
    let mut first_seen = vec![usize::MAX; n];
    for code in 0..total {
        let mut c = code;
        for slot in map.iter_mut() {
            *slot = (c % n as u64) as usize;
            c /= n as u64;
        }
        first_seen.fill(usize::MAX);
        let (mut q, mut step) = (0, 0);
        while first_seen[q] == usize::MAX {
            first_seen[q] = step;
            q = map[q];
            step += 1;
        }
        if step - first_seen[q] >= 2 {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let v: Vec<u64> = (1..=4).map(|n| periodic_orbit_count(n).unwrap()).collect();
        assert_eq!(v, vec![0, 1, 10, 114]);
    }

    #[test]
    fn word_bfs_on_two_state_ideal() {
        let d = Dfa::from_images(&[("a", vec![1, 1]), ("b", vec![0, 1])], 0, &[1]).unwrap();
        assert_eq!(word_bfs_sigma(&d).unwrap(), 2);
    }
}
