//! The sequence abstraction and the array plumbing around it: lazily
//! memoized generators, triangle and square readers, Nim addition, the
//! Gilbreath difference array, and the elementary transforms used by the
//! identifier pipeline.
//!
//! Triangles are read by rows. Squares are read by antidiagonals, each
//! antidiagonal from bottom-left to top-right: (0,0), (1,0), (0,1),
//! (2,0), (1,1), (0,2), ...

use crate::bignum::{binomial, PrimeSieve};
use crate::{Error, Int, Result};
use num_traits::Zero;
use std::sync::Mutex;

/// Where a sequence's terms come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Terms come from a generator and can be extended on demand.
    Generated,
    /// Terms are a fixed stored list.
    Stored,
}

type Generator = Box<dyn Fn(usize) -> Result<Vec<Int>> + Send + Sync>;

/// A sequence with an identifier, an index offset, and lazily extendable
/// terms. Extension is synchronized; regeneration is deterministic.
pub struct Sequence {
    id: String,
    name: String,
    offset: i64,
    provenance: Provenance,
    /// Hard ceiling on how many terms the generator can produce, if any.
    cap: Option<usize>,
    gen: Generator,
    memo: Mutex<Vec<Int>>,
}

impl Sequence {
    pub fn generated(
        id: &str,
        name: &str,
        offset: i64,
        cap: Option<usize>,
        gen: impl Fn(usize) -> Result<Vec<Int>> + Send + Sync + 'static,
    ) -> Self {
        Sequence {
            id: id.to_string(),
            name: name.to_string(),
            offset,
            provenance: Provenance::Generated,
            cap,
            gen: Box::new(gen),
            memo: Mutex::new(Vec::new()),
        }
    }

    pub fn stored(id: &str, name: &str, offset: i64, terms: Vec<Int>) -> Self {
        let len = terms.len();
        let stored = terms.clone();
        Sequence {
            id: id.to_string(),
            name: name.to_string(),
            offset,
            provenance: Provenance::Stored,
            cap: Some(len),
            gen: Box::new(move |_| Ok(stored.clone())),
            memo: Mutex::new(terms),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    /// First `count` terms; errors when `count` exceeds what the generator
    /// can produce.
    pub fn terms(&self, count: usize) -> Result<Vec<Int>> {
        if let Some(cap) = self.cap {
            if count > cap {
                return Err(Error::Budget(format!(
                    "{} provides at most {} terms, {} requested",
                    self.id, cap, count
                )));
            }
        }
        let mut memo = self.memo.lock().unwrap();
        if memo.len() < count {
            let fresh = (self.gen)(count)?;
            debug_assert!(fresh.len() >= count);
            debug_assert!(fresh[..memo.len()] == memo[..]);
            *memo = fresh;
        }
        Ok(memo[..count].to_vec())
    }

    /// As many terms as available up to `count`, clamping at the cap
    /// instead of erroring.
    pub fn terms_clamped(&self, count: usize) -> Result<Vec<Int>> {
        let want = match self.cap {
            Some(cap) => count.min(cap),
            None => count,
        };
        self.terms(want)
    }
}

/// Ragged array whose row n has n+1 entries.
pub struct NumberTriangle {
    row: Box<dyn Fn(usize) -> Vec<Int> + Send + Sync>,
}

impl NumberTriangle {
    pub fn new(row: impl Fn(usize) -> Vec<Int> + Send + Sync + 'static) -> Self {
        NumberTriangle { row: Box::new(row) }
    }

    /// Pascal's triangle of binomial coefficients.
    pub fn pascal() -> Self {
        NumberTriangle::new(|n| (0..=n).map(|k| binomial(n as u64, k as i64)).collect())
    }

    pub fn row(&self, n: usize) -> Vec<Int> {
        let r = (self.row)(n);
        assert_eq!(r.len(), n + 1, "triangle row {} must have {} entries", n, n + 1);
        r
    }
}

/// Infinite square array with entries defined for all (row, col) >= (0,0).
pub struct NumberSquare {
    entry: Box<dyn Fn(usize, usize) -> Int + Send + Sync>,
}

impl NumberSquare {
    pub fn new(entry: impl Fn(usize, usize) -> Int + Send + Sync + 'static) -> Self {
        NumberSquare {
            entry: Box::new(entry),
        }
    }

    /// The Nim-addition table.
    pub fn nim() -> Self {
        NumberSquare::new(|i, j| Int::from(nim_add(i as u64, j as u64)))
    }

    pub fn entry(&self, row: usize, col: usize) -> Int {
        (self.entry)(row, col)
    }
}

/// Concatenation of triangle rows 0,1,2,..., truncated to `count` terms.
pub fn read_triangle_by_rows(t: &NumberTriangle, count: usize) -> Vec<Int> {
    let mut out = Vec::with_capacity(count);
    let mut n = 0;
    while out.len() < count {
        for v in t.row(n) {
            if out.len() == count {
                break;
            }
            out.push(v);
        }
        n += 1;
    }
    out
}

/// Square read in the order (0,0); (1,0), (0,1); (2,0), (1,1), (0,2); ...
pub fn read_square_by_antidiagonals(s: &NumberSquare, count: usize) -> Vec<Int> {
    let mut out = Vec::with_capacity(count);
    let mut d = 0;
    while out.len() < count {
        for i in 0..=d {
            if out.len() == count {
                break;
            }
            out.push(s.entry(d - i, i));
        }
        d += 1;
    }
    out
}

/// Position of sequence index t under the antidiagonal reading order.
pub fn antidiagonal_position(t: usize) -> (usize, usize) {
    let mut d = 0usize;
    let mut base = 0usize;
    while base + d + 1 <= t {
        base += d + 1;
        d += 1;
    }
    let i = t - base;
    (d - i, i)
}

/// Nim sum: bitwise XOR.
pub fn nim_add(a: u64, b: u64) -> u64 {
    a ^ b
}

/// Difference array over the primes: row 0 is the primes, row k+1 holds the
/// absolute differences of row k. Materialized to a fixed width.
pub struct GilbreathArray {
    rows: Vec<Vec<u64>>,
}

impl GilbreathArray {
    /// Build `num_rows + 1` rows (including row 0) from the given primes.
    pub fn new(primes: &[u64], num_rows: usize) -> Result<Self> {
        if primes.len() < num_rows + 1 {
            return Err(Error::Invalid(format!(
                "{} rows need at least {} leading primes, got {}",
                num_rows,
                num_rows + 1,
                primes.len()
            )));
        }
        let mut rows = Vec::with_capacity(num_rows + 1);
        rows.push(primes.to_vec());
        for k in 0..num_rows {
            let prev = &rows[k];
            let next: Vec<u64> = prev.windows(2).map(|w| w[0].abs_diff(w[1])).collect();
            rows.push(next);
        }
        Ok(GilbreathArray { rows })
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }
}

/// Leading entries of difference rows 1..=num_rows.
pub fn gilbreath_row_leaders(num_rows: usize, primes: &[u64]) -> Result<Vec<Int>> {
    let arr = GilbreathArray::new(primes, num_rows)?;
    Ok(arr.rows[1..].iter().map(|r| Int::from(r[0])).collect())
}

/// Scan every difference row derivable from the given primes and report the
/// index of the first row whose leader is not 1, if any. Runs in place: the
/// full array over n primes touches n(n-1)/2 entries but only one row is
/// ever held.
pub fn gilbreath_first_violation(primes: &[u64]) -> Option<usize> {
    let mut row: Vec<u64> = primes.to_vec();
    for k in 1..primes.len() {
        let len = row.len() - 1;
        for i in 0..len {
            row[i] = row[i].abs_diff(row[i + 1]);
        }
        row.truncate(len);
        if row[0] != 1 {
            return Some(k);
        }
    }
    None
}

/// The difference array read by upward antidiagonals: (0,0); (1,0), (0,1);
/// (2,0), (1,1), (0,2); ... where (k, j) is column j of difference row k.
/// This order reproduces the printed prefix 2,1,3,1,2,5,1,0,2,7,...
pub fn gilbreath_sequence(count: usize) -> Result<Vec<Int>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    // antidiagonal d contributes d+1 terms; find how many we need
    let mut d_max = 0usize;
    let mut total = 1usize;
    while total < count {
        d_max += 1;
        total += d_max + 1;
    }
    let width = d_max + 1;
    let mut sieve = PrimeSieve::new(1 << 12);
    while (sieve.prime_count(sieve.limit())? as usize) < width {
        let next = sieve.limit() * 2;
        sieve.extend_to(next);
    }
    let primes: Vec<u64> = (1..=width as u64)
        .map(|i| sieve.nth_prime(i))
        .collect::<Result<_>>()?;
    let arr = GilbreathArray::new(&primes, d_max)?;
    let mut out = Vec::with_capacity(count);
    'outer: for d in 0..=d_max {
        for i in 0..=d {
            if out.len() == count {
                break 'outer;
            }
            out.push(Int::from(arr.rows[d - i][i]));
        }
    }
    Ok(out)
}

/// The elementary sequence transforms understood by the identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformKind {
    /// b_n = a_{n+1} - a_n (one term shorter).
    Differences,
    /// b_n = a_0 + ... + a_n.
    PartialSums,
    /// b_n = sum_k C(n,k) a_k.
    Binomial,
    /// b_n = sum_k (-1)^(n-k) C(n,k) a_k.
    InverseBinomial,
    /// b_n = sum_{d|n} a_d with the input read as a_1, a_2, ...
    InverseMoebius,
}

/// Apply one transform to an exact term list.
pub fn transform(a: &[Int], kind: TransformKind) -> Vec<Int> {
    match kind {
        TransformKind::Differences => a.windows(2).map(|w| &w[1] - &w[0]).collect(),
        TransformKind::PartialSums => {
            let mut acc = Int::zero();
            a.iter()
                .map(|v| {
                    acc += v;
                    acc.clone()
                })
                .collect()
        }
        TransformKind::Binomial => (0..a.len())
            .map(|n| {
                (0..=n)
                    .map(|k| binomial(n as u64, k as i64) * &a[k])
                    .sum::<Int>()
            })
            .collect(),
        TransformKind::InverseBinomial => (0..a.len())
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        let term = binomial(n as u64, k as i64) * &a[k];
                        if (n - k) % 2 == 0 {
                            term
                        } else {
                            -term
                        }
                    })
                    .sum::<Int>()
            })
            .collect(),
        TransformKind::InverseMoebius => (1..=a.len())
            .map(|n| {
                (1..=n)
                    .filter(|d| n % d == 0)
                    .map(|d| a[d - 1].clone())
                    .sum::<Int>()
            })
            .collect(),
    }
}
