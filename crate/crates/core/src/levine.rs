//! The self-describing run-length array and the sequence of its row tails.
//!
//! If a row reads a_1 <= a_2 <= ... <= a_k, the next row consists of a_k
//! ones, a_{k-1} twos, a_{k-2} threes, and so on. Starting from 1,1 the
//! last entries of successive rows grow doubly exponentially; the n-th
//! last entry L_n obeys, with s(n,i) the sum of the first i entries of
//! row n:
//!
//!   (i)   L_n = sum of row n-2
//!   (ii)  L_n = length of row n-1
//!   (iii) L_n = last entry of row n
//!   (iv)  L_n = number of 1's in row n+1
//!   (v)   L_{n+2} = s(n, L_{n+1})
//!   (vi)  L_{n+3} = sum_{i=1}^{L_{n+1}} s(n, i)
//!   (vii) L_{n+4} = sum_{i=1}^{L_{n+1}} C(s(n,i)+1, 2)
//!
//! Rows are held as groups (multiplicity, count): `count` consecutive
//! values sharing one per-value multiplicity. Row n+1 then has exactly
//! L_n groups, so everything through row 12 fits in memory and L_14, L_15
//! follow from (vi)/(vii) streamed over row 11 without materializing the
//! 10^8-element rows.

use crate::{Error, Int, Result};
use num_traits::Zero;

/// Maximum number of groups `next_row` will materialize.
pub const DEFAULT_ROW_CAP: usize = 10_000_000;

/// One row of the array in grouped run-length form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunLengthRow {
    index: usize,
    /// (per-value multiplicity, number of consecutive values covered);
    /// values are implicit: group boundaries partition 1..=last()
    groups: Vec<(u64, u64)>,
}

impl RunLengthRow {
    /// Row 1, the pair 1,1.
    pub fn first() -> Self {
        RunLengthRow {
            index: 1,
            groups: vec![(2, 1)],
        }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn groups(&self) -> &[(u64, u64)] {
        &self.groups
    }

    /// Number of entries.
    pub fn len(&self) -> u64 {
        self.groups.iter().map(|&(m, c)| m * c).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Largest entry, i.e. how many distinct values the row holds.
    pub fn last(&self) -> u64 {
        self.groups.iter().map(|&(_, c)| c).sum()
    }

    /// Multiplicity of the entry 1.
    pub fn ones(&self) -> u64 {
        self.groups[0].0
    }

    /// Sum of all entries.
    pub fn sum(&self) -> Int {
        let mut total = Int::zero();
        let mut v = 1u64;
        for &(m, c) in &self.groups {
            // values v .. v+c-1, each m times
            let series = Int::from(c) * Int::from(v + v + c - 1); // 2 * sum of values
            total += Int::from(m) * series / 2;
            v += c;
        }
        total
    }

    /// (value, multiplicity) pairs in value order.
    pub fn value_runs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let mut v = 1u64;
        self.groups.iter().flat_map(move |&(m, c)| {
            let start = v;
            v += c;
            (start..start + c).map(move |val| (val, m))
        })
    }

    /// Fully expanded entries; only sensible for small rows.
    pub fn expand(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.len() as usize);
        for (v, m) in self.value_runs() {
            for _ in 0..m {
                out.push(v);
            }
        }
        out
    }

    /// The following row. Its group count equals this row's largest entry,
    /// so the cap bounds memory, not work per group.
    pub fn next_row(&self, cap: usize) -> Result<RunLengthRow> {
        let out_groups = self.last();
        if out_groups as usize > cap {
            return Err(Error::Budget(format!(
                "row {} needs {} groups, cap is {}",
                self.index + 1,
                out_groups,
                cap
            )));
        }
        // the new row gives value v of this row the multiplicity slot
        // mirrored from the top: walk our values downward
        let mut groups = Vec::with_capacity(out_groups as usize);
        let mut v_hi = self.last();
        for &(m, c) in self.groups.iter().rev() {
            for _ in 0..c {
                groups.push((v_hi, m));
                v_hi -= 1;
            }
        }
        Ok(RunLengthRow {
            index: self.index + 1,
            groups,
        })
    }
}

/// s(row, i): sum of the first i entries.
pub fn prefix_sum_at(row: &RunLengthRow, i: u64) -> Int {
    let mut remaining = i;
    let mut acc = Int::zero();
    for (v, m) in row.value_runs() {
        let take = remaining.min(m);
        acc += Int::from(v) * Int::from(take);
        remaining -= take;
        if remaining == 0 {
            break;
        }
    }
    assert_eq!(remaining, 0, "prefix index beyond row length");
    acc
}

/// Sum of s(row, i) over every prefix i = 1..=len.
pub fn sum_of_prefix_sums(row: &RunLengthRow) -> Int {
    let mut total = Int::zero();
    let mut s = Int::zero(); // sum before the current run
    for (v, m) in row.value_runs() {
        // within the run, prefix sums are s + v, s + 2v, ..., s + mv
        let m_int = Int::from(m);
        total += &s * &m_int + Int::from(v) * &m_int * Int::from(m + 1) / 2;
        s += Int::from(v) * m_int;
    }
    total
}

/// Sum of C(s(row, i) + 1, 2) over every prefix i = 1..=len.
pub fn sum_of_prefix_sum_pairs(row: &RunLengthRow) -> Int {
    let mut total = Int::zero();
    let mut s = Int::zero();
    for (v, m) in row.value_runs() {
        // sum over p = 1..=m of (s + vp)(s + vp + 1) / 2
        let v_int = Int::from(v);
        let sum_p = Int::from(m) * Int::from(m + 1) / 2;
        let sum_p2 = Int::from(m) * Int::from(m + 1) * Int::from(2 * m + 1) / 6;
        let quad = &s * &s * Int::from(m)
            + Int::from(2) * &s * &v_int * &sum_p
            + &v_int * &v_int * sum_p2;
        let lin = &s * Int::from(m) + &v_int * &sum_p;
        total += (quad + lin) / 2;
        s += v_int * Int::from(m);
    }
    total
}

/// L_1..L_max, the last entry of each row. Rows past 12 are never built:
/// L_13 comes from identity (i) and L_14, L_15 from (vi)/(vii) streamed
/// over row 11.
pub fn levine_terms(max_index: usize) -> Result<Vec<Int>> {
    if max_index > 15 {
        return Err(Error::Budget(format!(
            "terms beyond L_15 need rows of more than 10^8 groups (L_{} requested)",
            max_index
        )));
    }
    let mut rows = Vec::new();
    rows.push(RunLengthRow::first());
    while rows.len() < max_index.min(12) {
        let next = rows.last().unwrap().next_row(DEFAULT_ROW_CAP)?;
        rows.push(next);
    }
    let mut l: Vec<Int> = rows.iter().map(|r| Int::from(r.last())).collect();
    l.truncate(max_index);
    if max_index >= 13 {
        let row11 = &rows[10];
        l.push(row11.sum());
        if max_index >= 14 {
            l.push(sum_of_prefix_sums(row11));
        }
        if max_index >= 15 {
            l.push(sum_of_prefix_sum_pairs(row11));
        }
    }
    Ok(l)
}

/// Outcome of checking identities (i)-(vii) at one row index; a check is
/// None when the rows or terms it needs are out of reach.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: usize,
    pub sum_of_row_two_back: Option<bool>,
    pub length_of_previous_row: Option<bool>,
    pub last_of_row: Option<bool>,
    pub ones_in_next_row: Option<bool>,
    pub prefix_sum_identity: Option<bool>,
    pub summed_prefix_identity: Option<bool>,
    pub binomial_prefix_identity: Option<bool>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        [
            self.sum_of_row_two_back,
            self.length_of_previous_row,
            self.last_of_row,
            self.ones_in_next_row,
            self.prefix_sum_identity,
            self.summed_prefix_identity,
            self.binomial_prefix_identity,
        ]
        .iter()
        .all(|c| *c != Some(false))
    }
}

/// Check identities (i)-(vii) at row index n against the term list.
pub fn verify_identities(n: usize) -> Result<IdentityReport> {
    assert!(n >= 1);
    let l = levine_terms(15)?;
    let term = |k: usize| -> Option<&Int> {
        if (1..=15).contains(&k) {
            Some(&l[k - 1])
        } else {
            None
        }
    };
    let mut rows = vec![RunLengthRow::first()];
    while rows.len() < 12.min(n + 1) {
        let next = rows.last().unwrap().next_row(DEFAULT_ROW_CAP)?;
        rows.push(next);
    }
    let row = |k: usize| -> Option<&RunLengthRow> {
        if k >= 1 && k <= rows.len() {
            Some(&rows[k - 1])
        } else {
            None
        }
    };
    let ln = term(n);
    Ok(IdentityReport {
        n,
        sum_of_row_two_back: match (ln, n.checked_sub(2).and_then(|k| if k >= 1 { row(k) } else { None })) {
            (Some(t), Some(r)) => Some(&r.sum() == t),
            _ => None,
        },
        length_of_previous_row: match (ln, n.checked_sub(1).and_then(|k| if k >= 1 { row(k) } else { None })) {
            (Some(t), Some(r)) => Some(&Int::from(r.len()) == t),
            _ => None,
        },
        last_of_row: match (ln, row(n)) {
            (Some(t), Some(r)) => Some(&Int::from(r.last()) == t),
            _ => None,
        },
        ones_in_next_row: match (ln, row(n + 1)) {
            (Some(t), Some(r)) => Some(&Int::from(r.ones()) == t),
            _ => None,
        },
        prefix_sum_identity: match (term(n + 2), term(n + 1), row(n)) {
            (Some(t2), Some(t1), Some(r)) => {
                // L_{n+1} = row length by (ii), so the prefix index is valid
                let i = u64::try_from(t1.clone()).expect("prefix index fits u64");
                Some(&prefix_sum_at(r, i) == t2)
            }
            _ => None,
        },
        summed_prefix_identity: match (term(n + 3), row(n)) {
            (Some(t), Some(r)) => Some(&sum_of_prefix_sums(r) == t),
            _ => None,
        },
        binomial_prefix_identity: match (term(n + 4), row(n)) {
            (Some(t), Some(r)) => Some(&sum_of_prefix_sum_pairs(r) == t),
            _ => None,
        },
    })
}

/// Least-squares fit of ln L_n = c2 * tau^n - ln c1 over consecutive
/// terms starting at index start_n. Diagnostic only.
#[derive(Clone, Debug)]
pub struct GrowthFit {
    pub c1: f64,
    pub c2: f64,
    pub residuals: Vec<f64>,
}

pub fn growth_estimate(terms: &[Int], start_n: usize) -> GrowthFit {
    assert!(terms.len() >= 2);
    let tau = (1.0 + 5f64.sqrt()) / 2.0;
    let xs: Vec<f64> = (0..terms.len())
        .map(|i| tau.powi((start_n + i) as i32))
        .collect();
    let ys: Vec<f64> = terms.iter().map(crate::bignum::big_ln).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let c2 = sxy / sxx;
    let intercept = my - c2 * mx;
    let residuals = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| y - (intercept + c2 * x))
        .collect();
    GrowthFit {
        c1: (-intercept).exp(),
        c2,
        residuals,
    }
}
