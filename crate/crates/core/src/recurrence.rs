//! Self-referential sequences: the rooted-tree height sum W_n, the
//! sequence whose differences are its complement, Golomb's self-describing
//! sequence, the primeth recurrence, both divide-or-multiply walks, the
//! two nested recursions with slow 1/2-limit behaviour, and the clock
//! stroke groups.

use crate::bignum::PrimeSieve;
use crate::{Error, Int, Result};
use num_traits::{One, Zero};

/// Sum of the heights of all nodes over rooted labeled trees on n nodes,
/// divided by n: W_n = (n-1)! * sum_{k=0}^{n-2} n^k / k!, with W_1 = 0.
pub fn tree_height_sum_w(n: u64) -> Int {
    if n == 1 {
        return Int::zero();
    }
    let base = Int::from(n);
    // descending k: f = (n-1)!/k!, p = n^k
    let mut f = Int::from(n - 1);
    let mut p = base.pow(n as u32 - 2);
    let mut total = Int::zero();
    for k in (0..=n - 2).rev() {
        total += &f * &p;
        if k > 0 {
            f *= k;
            p /= &base;
        }
    }
    total
}

/// The same total by brute force: decode every label sequence on n nodes
/// into a tree, root it at each node, and sum the node depths. There are
/// n^(n-1) rooted trees, so this is an oracle for small n only.
pub fn tree_height_sum_by_enumeration(n: usize) -> Int {
    assert!((1..=8).contains(&n), "enumeration oracle needs 1 <= n <= 8");
    if n == 1 {
        return Int::zero();
    }
    let mut total = 0u64;
    let mut seq = vec![0usize; n - 2];
    let count = (n as u64).pow(n as u32 - 2);
    for code in 0..count {
        let mut c = code;
        for s in seq.iter_mut() {
            *s = (c % n as u64) as usize;
            c /= n as u64;
        }
        let edges = tree_from_label_sequence(&seq, n);
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for root in 0..n {
            let mut depth = vec![usize::MAX; n];
            depth[root] = 0;
            let mut queue = vec![root];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for &v in &adj[u] {
                    if depth[v] == usize::MAX {
                        depth[v] = depth[u] + 1;
                        queue.push(v);
                    }
                }
            }
            total += depth.iter().map(|&d| d as u64).sum::<u64>();
        }
    }
    Int::from(total / n as u64)
}

/// Decode a label sequence (the n-2 values that index which node each
/// removed leaf attached to) back into its tree's edge list.
fn tree_from_label_sequence(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1u32; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &s in seq {
        let leaf = (0..n).find(|&j| degree[j] == 1 && !used[j]).unwrap();
        used[leaf] = true;
        degree[s] -= 1;
        edges.push((leaf, s));
    }
    let rest: Vec<usize> = (0..n).filter(|&j| !used[j]).collect();
    debug_assert_eq!(rest.len(), 2);
    edges.push((rest[0], rest[1]));
    edges
}

/// Growing bit set over nonnegative integers.
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new() -> Self {
        BitSet { words: Vec::new() }
    }

    fn insert(&mut self, v: u64) -> bool {
        let w = (v / 64) as usize;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let mask = 1u64 << (v % 64);
        let fresh = self.words[w] & mask == 0;
        self.words[w] |= mask;
        fresh
    }

    fn contains(&self, v: u64) -> bool {
        let w = (v / 64) as usize;
        w < self.words.len() && self.words[w] & (1 << (v % 64)) != 0
    }
}

/// The increasing sequence that starts at 1 and whose difference sequence
/// is exactly its complement in the positive integers. Returns `count`
/// terms and the `count - 1` differences alongside.
pub fn hofstadter_complement(count: usize) -> (Vec<Int>, Vec<Int>) {
    let (seq, diffs) = hofstadter_complement_u64(count);
    (
        seq.into_iter().map(Int::from).collect(),
        diffs.into_iter().map(Int::from).collect(),
    )
}

pub(crate) fn hofstadter_complement_u64(count: usize) -> (Vec<u64>, Vec<u64>) {
    let mut seq = Vec::with_capacity(count);
    let mut diffs = Vec::with_capacity(count.saturating_sub(1));
    if count == 0 {
        return (seq, diffs);
    }
    let mut used = BitSet::new();
    seq.push(1u64);
    used.insert(1);
    let mut next_diff = 2u64;
    while seq.len() < count {
        while used.contains(next_diff) {
            next_diff += 1;
        }
        used.insert(next_diff);
        diffs.push(next_diff);
        let term = seq.last().unwrap() + next_diff;
        used.insert(term);
        seq.push(term);
    }
    (seq, diffs)
}

/// Golomb's sequence: the n-th term is the number of times n appears.
pub fn golomb(count: usize) -> Vec<Int> {
    golomb_u32(count).into_iter().map(Int::from).collect()
}

pub(crate) fn golomb_u32(count: usize) -> Vec<u32> {
    let mut a: Vec<u32> = vec![1, 2, 2];
    let mut v = 3u32;
    while a.len() < count {
        let reps = a[v as usize - 1];
        for _ in 0..reps {
            a.push(v);
        }
        v += 1;
    }
    a.truncate(count);
    a
}

/// The primeth recurrence: each term is the (previous term)-th prime.
/// Stops with a capacity error when the chain outruns the sieve.
pub fn wilson_primeth(sieve: &PrimeSieve, max_terms: usize) -> Result<Vec<Int>> {
    let mut out = Vec::with_capacity(max_terms);
    let mut cur = 1u64;
    for _ in 0..max_terms {
        out.push(Int::from(cur));
        if out.len() == max_terms {
            break;
        }
        cur = sieve.nth_prime(cur)?;
    }
    Ok(out)
}

/// Subtract-when-possible walk: from a_1 = 1, step n takes a_{n-1} - n when
/// that is positive and unseen, otherwise a_{n-1} + n.
pub fn recaman_subtract_first(count: usize) -> Vec<Int> {
    recaman_subtract_first_u64(count)
        .into_iter()
        .map(Int::from)
        .collect()
}

pub(crate) fn recaman_subtract_first_u64(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    let mut seen = BitSet::new();
    let mut cur = 1u64;
    out.push(cur);
    seen.insert(cur);
    for n in 2..=count as u64 {
        cur = if cur > n && !seen.contains(cur - n) {
            cur - n
        } else {
            cur + n
        };
        seen.insert(cur);
        out.push(cur);
    }
    out
}

/// Empirical growth summary for the subtract-first walk.
#[derive(Clone, Copy, Debug)]
pub struct WalkReport {
    pub steps: usize,
    pub max_term: u64,
    /// how many of 1..=steps were visited
    pub hits_up_to_steps: u64,
    pub smallest_missing: u64,
}

pub fn recaman_growth_report(steps: usize) -> WalkReport {
    let vals = recaman_subtract_first_u64(steps);
    let mut seen = BitSet::new();
    let mut max_term = 0;
    for &v in &vals {
        seen.insert(v);
        max_term = max_term.max(v);
    }
    let hits = (1..=steps as u64).filter(|&v| seen.contains(v)).count() as u64;
    let mut smallest = 1u64;
    while seen.contains(smallest) {
        smallest += 1;
    }
    WalkReport {
        steps,
        max_term,
        hits_up_to_steps: hits,
        smallest_missing: smallest,
    }
}

/// Divide-when-possible walk: from a_1 = 1, a_{n+1} = a_n / n when n
/// divides a_n, otherwise n * a_n.
pub fn recaman_divide(count: usize) -> Vec<Int> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    let mut cur = Int::one();
    out.push(cur.clone());
    for n in 1..count as u64 {
        let n_big = Int::from(n);
        cur = if (&cur % &n_big).is_zero() {
            cur / n_big
        } else {
            cur * n_big
        };
        out.push(cur.clone());
    }
    out
}

/// a(n+1) = a(a(n)) + a(n+1-a(n)) from a(1) = a(2) = 1; values stay in
/// 1..=n so u32 storage suffices far past 10^6 terms.
pub(crate) fn conway_values(count: usize) -> Vec<u32> {
    let mut a = Vec::with_capacity(count + 1);
    a.push(0u32); // unused slot so a[n] is term n
    if count >= 1 {
        a.push(1);
    }
    if count >= 2 {
        a.push(1);
    }
    for n in 2..count {
        let an = a[n] as usize;
        let next = a[an] + a[n + 1 - an];
        debug_assert!(next as usize <= n + 1);
        a.push(next);
    }
    a
}

pub fn conway_10000(count: usize) -> Vec<Int> {
    conway_values(count)[1..]
        .iter()
        .map(|&v| Int::from(v))
        .collect()
}

/// Largest n <= bound where |a(n)/n - 1/2| > 1/20, scanning the whole
/// range; exact integer comparison |20 a(n) - 10 n| > n.
pub fn conway_threshold(bound: usize) -> u64 {
    let a = conway_values(bound);
    let mut last = 0u64;
    for n in 1..=bound {
        let lhs = (20 * a[n] as i64 - 10 * n as i64).unsigned_abs();
        if lhs > n as u64 {
            last = n as u64;
        }
    }
    last
}

/// The offset-two variant: a(n) = a(a(n-2)) + a(n-a(n-2)) from a(1) = a(2) = 1.
pub fn conway_variant(count: usize) -> Vec<Int> {
    let mut a: Vec<u32> = Vec::with_capacity(count + 1);
    a.push(0);
    if count >= 1 {
        a.push(1);
    }
    if count >= 2 {
        a.push(1);
    }
    for n in 3..=count {
        let t = a[n - 2] as usize;
        let next = a[t] + a[n - t];
        a.push(next);
    }
    a[1..].iter().map(|&v| Int::from(v)).collect()
}

/// Stroke groups of the astronomical clock: the stream 1,2,3,4,3,2 repeats
/// forever and is cut greedily into consecutive groups whose n-th group
/// sums to n; each group is emitted as its concatenated decimal digits.
/// The grouping works out exactly and repeats with period 24.
pub fn prague_clock(count_groups: usize) -> Result<Vec<Int>> {
    const STREAM: [u64; 6] = [1, 2, 3, 4, 3, 2];
    let mut out = Vec::with_capacity(count_groups);
    let mut pos = 0usize;
    for n in 1..=count_groups as u64 {
        let target = 1 + (n - 1) % 24;
        let mut sum = 0u64;
        let mut digits = Int::zero();
        while sum < target {
            let s = STREAM[pos % 6];
            pos += 1;
            sum += s;
            digits = digits * Int::from(10) + Int::from(s);
        }
        if sum != target {
            return Err(Error::Invalid(format!(
                "stroke stream cannot be cut to sum {} at group {}",
                target, n
            )));
        }
        out.push(digits);
    }
    Ok(out)
}
