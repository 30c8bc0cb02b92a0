//! Exhaustive search for the largest syntactic complexity within an ideal
//! class, plus two fixed reconstructions: the three-state left-ideal pairing
//! argument and the reversal sweeps.
//!
//! Candidates are tuples of letter transformations together with a final
//! set, initial state 0. Right and two-sided ideals are searched in the
//! normal form where state `n-1` is the only final state and a sink, so each
//! letter fixes `n-1`. Left ideals range over every nonempty final set.
//!
//! Letter transformations are indexed by their image lists read as base-`n`
//! numbers (state 0 most significant), so enumeration order is lexicographic
//! on image lists and the reported witnesses are the lexicographically least.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::automata::{determinize, minimize, reverse, Dfa};
use crate::bounds::Family;
use crate::classify::behavior_from;
use crate::error::{Error, Result};
use crate::semigroup::packed::{self, MAX_N};
use crate::transform::Transformation;
use crate::witnesses;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;
/// Largest `n` the harness will enumerate.
pub const MAX_SEARCH_N: usize = 7;
const MAX_K: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchFamily {
    Right,
    Left,
    TwoSided,
    /// No class filter: every minimal DFA.
    All,
}

impl SearchFamily {
    pub fn name(self) -> &'static str {
        match self {
            SearchFamily::Right => "right",
            SearchFamily::Left => "left",
            SearchFamily::TwoSided => "two-sided",
            SearchFamily::All => "all",
        }
    }

    fn sink_pinned(self) -> bool {
        matches!(self, SearchFamily::Right | SearchFamily::TwoSided)
    }

    fn left_check(self) -> bool {
        matches!(self, SearchFamily::Left | SearchFamily::TwoSided)
    }
}

impl From<Family> for SearchFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::Right => SearchFamily::Right,
            Family::Left => SearchFamily::Left,
            Family::TwoSided => SearchFamily::TwoSided,
        }
    }
}

impl std::str::FromStr for SearchFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(SearchFamily::All);
        }
        s.parse::<Family>().map(Into::into)
    }
}

impl std::fmt::Display for SearchFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PruneFlags {
    /// Reject left-ideal candidates with a periodic letter behavior or an
    /// empty quotient before the inclusion test.
    pub lemma8_filter: bool,
    /// Keep only candidates already in breadth-first canonical numbering.
    pub canonical_first_letter: bool,
    /// Keep one representative per letter permutation.
    pub dedupe_letter_multisets: bool,
}

impl Default for PruneFlags {
    fn default() -> Self {
        Self {
            lemma8_filter: true,
            canonical_first_letter: true,
            dedupe_letter_multisets: true,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchTask {
    pub family: SearchFamily,
    pub n: usize,
    pub k: usize,
    pub prune: PruneFlags,
    /// Maximum number of candidates; `None` means [`DEFAULT_BUDGET`].
    pub budget: Option<u64>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// How many extremal witnesses to keep.
    pub max_witnesses: usize,
}

impl SearchTask {
    pub fn new(family: SearchFamily, n: usize, k: usize) -> Self {
        Self {
            family,
            n,
            k,
            prune: PruneFlags::default(),
            budget: None,
            jobs: None,
            max_witnesses: 8,
        }
    }

    /// Total number of candidates without pruning, saturating.
    pub fn space(&self) -> u64 {
        let d = domain_size(self.family, self.n) as u64;
        let letters = (0..self.k).try_fold(1u64, |acc, _| acc.checked_mul(d));
        letters
            .and_then(|l| l.checked_mul(final_sets(self.family, self.n).len() as u64))
            .unwrap_or(u64::MAX)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SearchWitness {
    pub letters: Vec<Vec<usize>>,
    pub finals: Vec<usize>,
}

impl SearchWitness {
    /// The witness as a DFA with letters `a`, `b`, ... and initial state 0.
    pub fn to_dfa(&self) -> Result<Dfa> {
        let labelled: Vec<(String, Vec<usize>)> = self
            .letters
            .iter()
            .enumerate()
            .map(|(i, v)| (letter_label(i), v.clone()))
            .collect();
        Dfa::from_images(&labelled, 0, &self.finals)
    }
}

impl std::fmt::Display for SearchWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.letters.iter().enumerate() {
            let shown: Vec<String> = v.iter().map(|q| q.to_string()).collect();
            write!(f, "{}:[{}] ", letter_label(i), shown.join(","))?;
        }
        let finals: Vec<String> = self.finals.iter().map(|q| q.to_string()).collect();
        write!(f, "F={{{}}}", finals.join(","))
    }
}

fn letter_label(i: usize) -> String {
    ((b'a' + i as u8) as char).to_string()
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub family: SearchFamily,
    pub n: usize,
    pub k: usize,
    pub max_sigma: u64,
    /// Lexicographically least extremal representatives, at most
    /// `max_witnesses` of them.
    pub witnesses: Vec<SearchWitness>,
    /// Number of representatives reaching `max_sigma`.
    pub witness_count: u64,
    pub candidates_examined: u64,
    pub candidates_pruned: u64,
    /// Candidates that passed every filter and had σ computed.
    pub candidates_accepted: u64,
    pub exhaustive: bool,
}

fn domain_size(family: SearchFamily, n: usize) -> usize {
    let free = if family.sink_pinned() { n - 1 } else { n };
    n.pow(free as u32)
}

fn final_sets(family: SearchFamily, n: usize) -> Vec<u32> {
    let full = 1u32 << n;
    match family {
        SearchFamily::Right | SearchFamily::TwoSided => vec![1 << (n - 1)],
        SearchFamily::Left => (1..full).collect(),
        SearchFamily::All => (0..full).collect(),
    }
}

/// Image table of the `code`-th letter transformation of the domain.
fn decode(family: SearchFamily, n: usize, mut code: usize) -> [u8; MAX_N] {
    let mut out = [0u8; MAX_N];
    let free = if family.sink_pinned() {
        out[n - 1] = (n - 1) as u8;
        n - 1
    } else {
        n
    };
    for q in (0..free).rev() {
        out[q] = (code % n) as u8;
        code /= n;
    }
    out
}

fn encode(family: SearchFamily, n: usize, t: &[u8; MAX_N]) -> usize {
    let free = if family.sink_pinned() { n - 1 } else { n };
    t[..free].iter().fold(0, |acc, &x| acc * n + x as usize)
}

/// Breadth-first numbering from state 0 visiting letters in `order`. With a
/// pinned sink, state `n-1` keeps its number and is skipped. `None` if some
/// state is unreachable.
fn bfs_numbering(
    tables: &[[u8; MAX_N]],
    order: &[usize],
    n: usize,
    pinned: bool,
) -> Option<[u8; MAX_N]> {
    const UNSEEN: u8 = u8::MAX;
    let mut number = [UNSEEN; MAX_N];
    let mut queue = [0u8; MAX_N];
    let limit = if pinned { n - 1 } else { n };
    let mut sink_seen = !pinned || n == 1;
    if pinned {
        number[n - 1] = (n - 1) as u8;
    }
    let mut len = 0;
    if limit > 0 {
        number[0] = 0;
        queue[0] = 0;
        len = 1;
    }
    let mut head = 0;
    while head < len {
        let q = queue[head] as usize;
        head += 1;
        for &a in order {
            let r = tables[a][q] as usize;
            if pinned && r == n - 1 {
                sink_seen = true;
                continue;
            }
            if number[r] == UNSEEN {
                number[r] = len as u8;
                queue[len] = r as u8;
                len += 1;
            }
        }
    }
    (len == limit && sink_seen).then_some(number)
}

fn is_identity_numbering(number: &[u8; MAX_N], n: usize) -> bool {
    (0..n).all(|q| number[q] as usize == q)
}

/// True iff `(codes, finals)` is the least member of its orbit under letter
/// permutations followed by canonical renumbering. `codes` must already be
/// canonical for the identity order.
fn is_orbit_minimum(
    family: SearchFamily,
    n: usize,
    tables: &[[u8; MAX_N]],
    codes: &[usize],
    finals: u32,
) -> bool {
    let k = tables.len();
    let mut order: Vec<usize> = (0..k).collect();
    let mut permuted = vec![0usize; k];
    let mut better = false;
    permutations(&mut order, 0, &mut |order| {
        if better {
            return;
        }
        let Some(number) = bfs_numbering(tables, order, n, family.sink_pinned()) else {
            return;
        };
        let mut inverse = [0u8; MAX_N];
        for q in 0..n {
            inverse[number[q] as usize] = q as u8;
        }
        for (slot, &a) in permuted.iter_mut().zip(order.iter()) {
            let mut relabelled = [0u8; MAX_N];
            for (new_q, out) in relabelled.iter_mut().enumerate().take(n) {
                *out = number[tables[a][inverse[new_q] as usize] as usize];
            }
            *slot = encode(family, n, &relabelled);
        }
        let mut new_finals = 0u32;
        for (q, &to) in number.iter().enumerate().take(n) {
            if finals >> q & 1 == 1 {
                new_finals |= 1 << to;
            }
        }
        if (permuted.as_slice(), new_finals) < (codes, finals) {
            better = true;
        }
    });
    !better
}

fn permutations(v: &mut [usize], start: usize, f: &mut impl FnMut(&[usize])) {
    if start == v.len() {
        f(v);
        return;
    }
    for i in start..v.len() {
        v.swap(start, i);
        permutations(v, start + 1, f);
        v.swap(start, i);
    }
}

fn all_reachable(tables: &[[u8; MAX_N]], n: usize) -> bool {
    let order: Vec<usize> = (0..tables.len()).collect();
    bfs_numbering(tables, &order, n, false).is_some()
}

/// Moore refinement on the raw tables; true iff no two states merge.
fn is_reduced(tables: &[[u8; MAX_N]], n: usize, finals: u32) -> bool {
    let mut class = [0u8; MAX_N];
    for (q, c) in class.iter_mut().enumerate().take(n) {
        *c = (finals >> q & 1) as u8;
    }
    let mut count = if finals == 0 || finals.count_ones() as usize == n { 1 } else { 2 };
    loop {
        let mut signatures: Vec<Vec<u8>> = Vec::with_capacity(n);
        let mut next = [0u8; MAX_N];
        for q in 0..n {
            let mut sig = Vec::with_capacity(tables.len() + 1);
            sig.push(class[q]);
            sig.extend(tables.iter().map(|t| class[t[q] as usize]));
            next[q] = match signatures.iter().position(|s| *s == sig) {
                Some(i) => i as u8,
                None => {
                    signatures.push(sig);
                    (signatures.len() - 1) as u8
                }
            };
        }
        if signatures.len() == n {
            return true;
        }
        if signatures.len() == count {
            return false;
        }
        count = signatures.len();
        class = next;
    }
}

/// Every letter's behavior from 0 is aperiodic.
fn letters_aperiodic(tables: &[[u8; MAX_N]], n: usize) -> bool {
    tables.iter().all(|t| {
        let mut x = 0usize;
        for _ in 0..n {
            x = t[x] as usize;
        }
        t[x] as usize == x
    })
}

/// Every state reaches a final state.
fn no_empty_quotient(tables: &[[u8; MAX_N]], n: usize, finals: u32) -> bool {
    let mut good = finals;
    loop {
        let mut next = good;
        for q in 0..n {
            if tables.iter().any(|t| good >> t[q] & 1 == 1) {
                next |= 1 << q;
            }
        }
        if next == good {
            return good.count_ones() as usize == n;
        }
        good = next;
    }
}

/// `L(0) ⊆ L(q)` for every state `q`, which for a reachable DFA is
/// equivalent to `Σ*L = L`.
fn left_inclusion(tables: &[[u8; MAX_N]], n: usize, finals: u32) -> bool {
    let mut seen = vec![false; n * n];
    let mut stack: Vec<(u8, u8)> = Vec::with_capacity(n * n);
    for (q, s) in seen.iter_mut().enumerate().take(n) {
        *s = true;
        stack.push((0, q as u8));
    }
    while let Some((p, r)) = stack.pop() {
        if finals >> p & 1 == 1 && finals >> r & 1 == 0 {
            return false;
        }
        for t in tables {
            let (p2, r2) = (t[p as usize], t[r as usize]);
            let id = p2 as usize * n + r2 as usize;
            if !seen[id] {
                seen[id] = true;
                stack.push((p2, r2));
            }
        }
    }
    true
}

#[derive(Default)]
struct ShardResult {
    max_sigma: u64,
    witnesses: Vec<SearchWitness>,
    witness_count: u64,
    examined: u64,
    pruned: u64,
    accepted: u64,
}

impl ShardResult {
    fn offer(&mut self, sigma: u64, make: impl FnOnce() -> SearchWitness, cap: usize) {
        if sigma > self.max_sigma {
            self.max_sigma = sigma;
            self.witnesses.clear();
            self.witness_count = 0;
        }
        if sigma == self.max_sigma {
            self.witness_count += 1;
            if self.witnesses.len() < cap {
                self.witnesses.push(make());
            }
        }
    }

    /// Merge `later`, whose candidates all come after ours in enumeration
    /// order.
    fn merge(mut self, later: ShardResult, cap: usize) -> ShardResult {
        self.examined += later.examined;
        self.pruned += later.pruned;
        self.accepted += later.accepted;
        if later.max_sigma > self.max_sigma {
            self.max_sigma = later.max_sigma;
            self.witnesses = later.witnesses;
            self.witness_count = later.witness_count;
        } else if later.max_sigma == self.max_sigma {
            self.witness_count += later.witness_count;
            let room = cap.saturating_sub(self.witnesses.len());
            self.witnesses.extend(later.witnesses.into_iter().take(room));
        }
        self
    }
}

struct Scratch {
    set: FxHashSet<u64>,
    queue: Vec<u64>,
}

fn run_shard(task: &SearchTask, domain: &[[u8; MAX_N]], finals_list: &[u32], first: usize) -> ShardResult {
    let k = task.k;
    let mut out = ShardResult::default();
    let mut scratch = Scratch {
        set: FxHashSet::default(),
        queue: Vec::new(),
    };
    let mut codes = vec![0usize; k];
    codes[0] = first;
    let mut tables = vec![domain[first]; k];
    loop {
        for (i, &c) in codes.iter().enumerate().skip(1) {
            tables[i] = domain[c];
        }
        evaluate(task, &tables, &codes, finals_list, &mut out, &mut scratch);

        // advance letters 1..k as a mixed-radix counter
        let mut i = k;
        loop {
            if i == 1 {
                return out;
            }
            i -= 1;
            codes[i] += 1;
            if codes[i] < domain.len() {
                break;
            }
            codes[i] = 0;
        }
    }
}

fn evaluate(
    task: &SearchTask,
    tables: &[[u8; MAX_N]],
    codes: &[usize],
    finals_list: &[u32],
    out: &mut ShardResult,
    scratch: &mut Scratch,
) {
    let (n, family, prune) = (task.n, task.family, task.prune);
    let per_tuple = finals_list.len() as u64;
    out.examined += per_tuple;

    if prune.canonical_first_letter {
        let order: Vec<usize> = (0..tables.len()).collect();
        match bfs_numbering(tables, &order, n, family.sink_pinned()) {
            Some(number) if is_identity_numbering(&number, n) => {}
            Some(_) => {
                out.pruned += per_tuple;
                return;
            }
            // unreachable states: never minimal, not a prune
            None => return,
        }
    } else {
        if prune.dedupe_letter_multisets && codes.windows(2).any(|w| w[0] > w[1]) {
            out.pruned += per_tuple;
            return;
        }
        if !all_reachable(tables, n) {
            return;
        }
    }
    let aperiodic = !family.left_check() || !prune.lemma8_filter || letters_aperiodic(tables, n);

    let mut sigma = None;
    for &finals in finals_list {
        if family.left_check()
            && prune.lemma8_filter
            && (!aperiodic || !no_empty_quotient(tables, n, finals))
        {
            out.pruned += 1;
            continue;
        }
        if !is_reduced(tables, n, finals) {
            continue;
        }
        if family.left_check() && !left_inclusion(tables, n, finals) {
            continue;
        }
        if prune.canonical_first_letter
            && prune.dedupe_letter_multisets
            && !is_orbit_minimum(family, n, tables, codes, finals)
        {
            out.pruned += 1;
            continue;
        }
        out.accepted += 1;
        // σ does not depend on the final set
        let s = *sigma.get_or_insert_with(|| {
            let packed: Vec<u64> = tables
                .iter()
                .map(|t| packed::pack(&t[..n].iter().map(|&x| x as u32).collect::<Vec<_>>()))
                .collect();
            packed::sigma(&packed, n, &mut scratch.set, &mut scratch.queue) as u64
        });
        out.offer(
            s,
            || SearchWitness {
                letters: tables
                    .iter()
                    .map(|t| t[..n].iter().map(|&x| x as usize).collect())
                    .collect(),
                finals: (0..n).filter(|q| finals >> q & 1 == 1).collect(),
            },
            task.max_witnesses,
        );
    }
}

/// Largest σ over the minimal `n`-state, `k`-letter DFAs of the task's class.
///
/// The outermost letter's transformation index is split across workers;
/// shards are taken in order while the running candidate count stays within
/// the budget, and the result is marked non-exhaustive if any were left out.
pub fn search_max_sigma(task: &SearchTask) -> Result<SearchResult> {
    let (n, k) = (task.n, task.k);
    if n == 0 || k == 0 {
        return Err(Error::InvalidWitness("search needs n >= 1 and k >= 1".into()));
    }
    if n > MAX_SEARCH_N {
        return Err(Error::TooLarge(n));
    }
    if k > MAX_K {
        return Err(Error::InvalidWitness(format!("at most {MAX_K} letters")));
    }
    let domain: Vec<[u8; MAX_N]> = (0..domain_size(task.family, n))
        .map(|c| decode(task.family, n, c))
        .collect();
    let finals_list = final_sets(task.family, n);
    let budget = task.budget.unwrap_or(DEFAULT_BUDGET);
    let shard_size = task.space() / domain.len() as u64;
    let shards = budget
        .checked_div(shard_size)
        .map_or(0, |s| s.min(domain.len() as u64) as usize);

    let cap = task.max_witnesses;
    let work = || {
        (0..shards)
            .into_par_iter()
            .map(|first| run_shard(task, &domain, &finals_list, first))
            .collect::<Vec<_>>()
    };
    let results = match task.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidWitness(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };
    let merged = results
        .into_iter()
        .fold(ShardResult::default(), |acc, r| acc.merge(r, cap));
    Ok(SearchResult {
        family: task.family,
        n,
        k,
        max_sigma: merged.max_sigma,
        witnesses: merged.witnesses,
        witness_count: merged.witness_count,
        candidates_examined: merged.examined,
        candidates_pruned: merged.pruned,
        candidates_accepted: merged.accepted,
        exhaustive: shards == domain.len(),
    })
}

/// One of the six remaining three-state transformations, its named partner
/// word and their product.
#[derive(Debug, Clone, Serialize)]
pub struct PairingStep {
    pub t: String,
    pub partner_word: String,
    pub partner: String,
    pub product: String,
    pub product_ruled_out: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairingReport {
    /// Transformations whose behavior from 0 is periodic.
    pub ruled_out: Vec<String>,
    /// Elements of the three-state left-ideal witness over `b, c, d, e`.
    pub realized: Vec<String>,
    /// Everything else.
    pub remaining: Vec<String>,
    pub steps: Vec<PairingStep>,
    pub partners_distinct: bool,
    /// The three sets are disjoint and cover all 27 transformations.
    pub partition_ok: bool,
}

impl PairingReport {
    pub fn ok(&self) -> bool {
        self.partition_ok
            && self.partners_distinct
            && self.ruled_out.len() == 10
            && self.realized.len() == 11
            && self.remaining.len() == 6
            && self.steps.len() == 6
            && self.steps.iter().all(|s| s.product_ruled_out)
    }
}

/// Partner words for the six remaining transformations, in lexicographic
/// order of the transformations.
const PARTNER_WORDS: [&str; 6] = ["cb", "db", "d", "c", "bdb", "bd"];

/// Rebuilds the three-state left-ideal argument: the 27 transformations split
/// into those with a periodic behavior, those realized by the witness, and six
/// more, each of which is excluded because composing it with a realized
/// partner gives a periodic one.
pub fn verify_theorem9_pairing() -> Result<PairingReport> {
    let n = 3;
    let witness = witnesses::left_ideal_witness(n, "bcde", None)?;
    let semigroup = crate::semigroup::transition_semigroup(&witness, None)?;
    let all: Vec<Transformation> = crate::classify::all_transformations(n).collect();
    let periodic = |t: &Transformation| !behavior_from(0, t).is_aperiodic();

    let ruled_out: Vec<&Transformation> = all.iter().filter(|t| periodic(t)).collect();
    let realized: Vec<&Transformation> = all.iter().filter(|t| semigroup.contains(t)).collect();
    let remaining: Vec<&Transformation> = all
        .iter()
        .filter(|t| !periodic(t) && !semigroup.contains(t))
        .collect();
    let partition_ok = ruled_out.len() + realized.len() + remaining.len() == all.len()
        && realized.iter().all(|t| !periodic(t));

    let mut steps = Vec::new();
    let mut partners = Vec::new();
    for (t, word) in remaining.iter().zip(PARTNER_WORDS) {
        let letters = witness.parse_word(word)?;
        let partner = letters
            .iter()
            .map(|&a| witness.delta()[a].clone())
            .reduce(|acc, x| acc.then_unchecked(&x))
            .expect("partner words are nonempty");
        let product = t.then(&partner)?;
        steps.push(PairingStep {
            t: t.to_string(),
            partner_word: word.to_string(),
            partner: partner.to_string(),
            product_ruled_out: periodic(&product),
            product: product.to_string(),
        });
        partners.push(partner);
    }
    let mut distinct = partners.clone();
    distinct.sort();
    distinct.dedup();
    let show = |v: Vec<&Transformation>| v.into_iter().map(|t| t.to_string()).collect();
    Ok(PairingReport {
        ruled_out: show(ruled_out),
        realized: show(realized),
        remaining: show(remaining),
        steps,
        partners_distinct: distinct.len() == partners.len(),
        partition_ok,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ReversalRow {
    pub n: usize,
    pub nfa_states: usize,
    pub subset_states: usize,
    pub measured: usize,
    pub expected: u64,
}

/// Expected quotient complexity of the reverse of the family's designated
/// restriction: `2^(n-1)` right, `2^(n-1)+1` left, `2^(n-2)+1` two-sided.
pub fn reversal_expected(family: Family, n: usize) -> u64 {
    match family {
        Family::Right => 1 << (n - 1),
        Family::Left => (1 << (n - 1)) + 1,
        Family::TwoSided => (1 << (n - 2)) + 1,
    }
}

/// Quotient complexity of the reverse of `d`, with the sizes along the way.
pub fn reversal_sizes(d: &Dfa) -> (usize, usize, usize) {
    let nfa = reverse(d);
    let subset = determinize(&nfa);
    let min = minimize(&subset);
    (nfa.n(), subset.n(), min.n())
}

pub fn reversal_sweep(family: Family, ns: RangeInclusive<usize>) -> Result<Vec<ReversalRow>> {
    let letters = witnesses::reversal_letters(family);
    ns.map(|n| {
        let d = match family {
            Family::Right => witnesses::right_ideal_witness(n, letters)?,
            Family::Left => witnesses::left_ideal_witness(n, letters, None)?,
            Family::TwoSided => witnesses::two_sided_witness(n, letters)?,
        };
        let (nfa_states, subset_states, measured) = reversal_sizes(&d);
        Ok(ReversalRow {
            n,
            nfa_states,
            subset_states,
            measured,
            expected: reversal_expected(family, n),
        })
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_encode_round_trip() {
        for family in [SearchFamily::Right, SearchFamily::Left] {
            for c in 0..domain_size(family, 3) {
                assert_eq!(encode(family, 3, &decode(family, 3, c)), c);
            }
        }
        assert_eq!(&decode(SearchFamily::Left, 3, 5)[..3], &[0, 1, 2]);
        assert_eq!(&decode(SearchFamily::Right, 3, 5)[..3], &[1, 2, 2]);
    }

    #[test]
    fn canonical_numbering_pins_the_sink() {
        // a:[1,2,2], b:[0,0,2]
        let mut a = [0u8; MAX_N];
        a[..3].copy_from_slice(&[1, 2, 2]);
        let mut b = [0u8; MAX_N];
        b[..3].copy_from_slice(&[0, 0, 2]);
        let number = bfs_numbering(&[a, b], &[0, 1], 3, true).unwrap();
        assert!(is_identity_numbering(&number, 3));
    }

    #[test]
    fn small_cells() {
        let r = search_max_sigma(&SearchTask::new(SearchFamily::Right, 3, 2)).unwrap();
        assert_eq!(r.max_sigma, 7);
        assert!(r.exhaustive);
        let l = search_max_sigma(&SearchTask::new(SearchFamily::Left, 2, 2)).unwrap();
        assert_eq!(l.max_sigma, 2);
    }

    #[test]
    fn tiny_budget_is_partial() {
        let mut task = SearchTask::new(SearchFamily::Right, 3, 2);
        task.budget = Some(81);
        assert!(search_max_sigma(&task).unwrap().exhaustive);
        task.budget = Some(80);
        let r = search_max_sigma(&task).unwrap();
        assert!(!r.exhaustive);
        assert_eq!(r.candidates_examined, 72);
    }

    #[test]
    fn reversal_examples() {
        let rows = reversal_sweep(Family::Right, 6..=6).unwrap();
        assert_eq!(rows[0].measured, 32);
        let rows = reversal_sweep(Family::Left, 4..=4).unwrap();
        assert_eq!(rows[0].measured, 9);
        let rows = reversal_sweep(Family::TwoSided, 6..=6).unwrap();
        assert_eq!(rows[0].measured, 17);
    }
}
