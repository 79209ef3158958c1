//! The sequence store: a registry tying every generator in the crate to
//! its catalogue id, a stripped-format file database with contiguous
//! subsequence lookup, and a transform-chain identifier for queries the
//! plain lookup misses.

use crate::bignum::{arith_functions, binomial, catalan, factorize_u64, mod5_representable, PrimeSieve};
use crate::boustrophedon::{
    boustrophedon_transform, eigen_shift_solver, entringer, secant_tangent_numbers,
};
use crate::enumerate::{
    closed_meander_count, dedekind_variant, hadamard_maxdet01, latin_squares_reduced,
    meander_count, pancake_f, stamp_foldings, stored_hard_data,
};
use crate::extremal::{extremal_leading_coeffs, extremal_theta, extremal_weight_enumerator};
use crate::levine::levine_terms;
use crate::recurrence::{
    conway_10000, conway_variant, golomb, hofstadter_complement, prague_clock, recaman_divide,
    recaman_subtract_first, tree_height_sum_w, wilson_primeth,
};
use crate::seq::{
    gilbreath_sequence, read_square_by_antidiagonals, read_triangle_by_rows, transform,
    NumberSquare, NumberTriangle, Sequence, TransformKind,
};
use crate::series::{e8_theta, leech_theta, ramanujan_tau};
use crate::tchoukaillon::{i_sequence, t_from_game, winning_positions};
use crate::wythoff::{
    fib_successor, lower_wythoff, para_fibonacci_horizontal, para_fibonacci_vertical,
    wythoff_entry,
};
use crate::{Error, Int, Result};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

/// a(n) = sum over k of C(2n-2k, n-k)^2 C(2k, k)^2, by direct summation.
/// Every term is checked against the recurrence
///   n^3 a(n) = 16 (n - 1/2)(2n^2 - 2n + 1) a(n-1) - 256 (n-1)^3 a(n-2),
/// multiplied through by 2 to stay in integers; a violation means the
/// implementation is broken, not the input.
pub fn binomial_square_sum(count: usize) -> Result<Vec<Int>> {
    let mut out: Vec<Int> = Vec::with_capacity(count);
    for n in 0..count as u64 {
        let direct: Int = (0..=n)
            .map(|k| {
                let l = binomial(2 * (n - k), (n - k) as i64);
                let r = binomial(2 * k, k as i64);
                &l * &l * &r * &r
            })
            .sum();
        if n >= 1 {
            let lhs = Int::from(2 * n * n * n) * &direct;
            if lhs != doubled_recurrence_rhs(n, &out) {
                return Err(Error::Invalid(format!(
                    "binomial square sum fails its recurrence at n={n}"
                )));
            }
        }
        out.push(direct);
    }
    Ok(out)
}

/// The same terms from the recurrence alone. Exact division by 2n^3 is
/// part of the contract; a nonzero remainder is reported, not rounded.
pub fn binomial_square_sum_by_recurrence(count: usize) -> Result<Vec<Int>> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    out.push(Int::one());
    for n in 1..count as u64 {
        let rhs = doubled_recurrence_rhs(n, &out);
        let den = Int::from(2 * n * n * n);
        let (q, r) = num_integer::Integer::div_rem(&rhs, &den);
        if !r.is_zero() {
            return Err(Error::NonIntegral(format!(
                "recurrence step not integral at n={n}"
            )));
        }
        out.push(q);
    }
    Ok(out)
}

// 2 n^3 a(n) = 16 (2n-1)(2n^2-2n+1) a(n-1) - 512 (n-1)^3 a(n-2)
fn doubled_recurrence_rhs(n: u64, prior: &[Int]) -> Int {
    let first =
        Int::from(16 * (2 * n - 1)) * Int::from(2 * n * n - 2 * n + 1) * &prior[n as usize - 1];
    if n >= 2 {
        let m = n - 1;
        first - Int::from(512 * m * m * m) * &prior[n as usize - 2]
    } else {
        first
    }
}

/// sigma(n) - d(n) - phi(n) for n = 1..=count. Negative only at n = 1;
/// the scan asserts that as it goes.
pub fn divisor_totient_gap(count: usize) -> Vec<Int> {
    (1..=count as u64)
        .map(|n| {
            let (sigma, d, phi, _) = arith_functions(n);
            let v = sigma - Int::from(d) - phi;
            assert!(
                n < 2 || !v.is_negative(),
                "divisor-totient gap negative at n={n}"
            );
            v
        })
        .collect()
}

/// All c <= limit whose prime factors congruent to 2 or 3 mod 5 occur to
/// even powers.
pub fn mod5_square_indices(limit: u64) -> Vec<u64> {
    (1..=limit).filter(|&c| mod5_representable(c)).collect()
}

fn mod5_terms(count: usize) -> Vec<Int> {
    let mut out = Vec::with_capacity(count);
    let mut c = 0u64;
    while out.len() < count {
        c += 1;
        if mod5_representable(c) {
            out.push(Int::from(c));
        }
    }
    out
}

/// Whether n = a^2 + ab + b^2 for some integers a, b >= 0, by direct
/// search over a: b solves a quadratic, so it only has to be tested for
/// integrality.
pub fn loeschian_test(n: u64) -> bool {
    let mut a = 0u64;
    while a * a <= n {
        let disc = 4 * n - 3 * a * a;
        let s = disc.isqrt();
        if s * s == disc && s >= a && (s - a) % 2 == 0 {
            return true;
        }
        a += 1;
    }
    false
}

/// The same membership by factorization: primes congruent to 2 mod 3
/// must occur to even powers.
pub fn loeschian_by_factorization(n: u64) -> bool {
    if n == 0 {
        return true;
    }
    factorize_u64(n)
        .into_iter()
        .all(|(p, e)| p % 3 != 2 || e % 2 == 0)
}

// a(1) = 1, a(n+1) = sum of a(d) over divisors d of n; the sequence
// shifts one place left under b_n = sum of a(d) over d | n.
fn divisor_shift_terms(count: usize) -> Vec<Int> {
    let mut a: Vec<Int> = Vec::with_capacity(count);
    if count == 0 {
        return a;
    }
    a.push(Int::one());
    for n in 1..count {
        let mut s = Int::zero();
        for d in 1..=n {
            if n % d == 0 {
                s += &a[d - 1];
            }
        }
        a.push(s);
    }
    a
}

fn ints(strs: &[&str]) -> Vec<Int> {
    strs.iter().map(|s| Int::from_str(s).unwrap()).collect()
}

fn sieve_limit_env() -> u64 {
    std::env::var("SEQLAB_SIEVE_LIMIT")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(10_000_000)
}

/// A registry row: a sequence plus how many of its terms the bundled
/// store file carries.
pub struct Registered {
    pub seq: Sequence,
    pub file_terms: usize,
}

fn reg(seq: Sequence, file_terms: usize) -> Registered {
    Registered { seq, file_terms }
}

/// Every sequence the crate can produce, in the order the bundled store
/// lists them. Ids are the catalogue ids the lookup tools answer with;
/// names are stable CLI aliases.
pub fn registry() -> Vec<Registered> {
    let hard: HashMap<&str, Vec<Int>> = stored_hard_data().into_iter().collect();
    let mut out = Vec::with_capacity(52);

    // self-referential recurrences and walks
    out.push(reg(
        Sequence::generated("A5228", "sum-diff-partition", 1, None, |c| {
            Ok(hofstadter_complement(c).0)
        }),
        60,
    ));
    out.push(reg(
        Sequence::generated("A30124", "sum-diff-complement", 1, None, |c| {
            Ok(hofstadter_complement(c + 1).1)
        }),
        60,
    ));
    out.push(reg(
        Sequence::generated("A1462", "self-counting", 1, None, |c| Ok(golomb(c))),
        100,
    ));
    {
        let limit = sieve_limit_env();
        let cap = if limit >= 174_440_042 { 13 } else { 12 };
        out.push(reg(
            Sequence::generated("A7097", "primeth-recurrence", 1, Some(cap), move |c| {
                let sieve = PrimeSieve::new(limit);
                wilson_primeth(&sieve, c)
            }),
            12,
        ));
    }
    out.push(reg(
        Sequence::generated("A5132", "subtract-first-walk", 1, None, |c| {
            Ok(recaman_subtract_first(c))
        }),
        70,
    ));
    out.push(reg(
        Sequence::generated("A8336", "divide-or-multiply", 1, None, |c| {
            Ok(recaman_divide(c))
        }),
        30,
    ));
    out.push(reg(
        Sequence::generated("A4001", "nested-recursion", 1, None, |c| Ok(conway_10000(c))),
        80,
    ));
    out.push(reg(
        Sequence::generated("A5229", "mixed-nested-recursion", 1, None, |c| {
            Ok(conway_variant(c))
        }),
        50,
    ));
    out.push(reg(
        Sequence::generated("A28354", "chime-groups", 1, None, prague_clock),
        24,
    ));
    out.push(reg(
        Sequence::generated("A3238", "divisor-shift", 1, None, |c| {
            Ok(divisor_shift_terms(c))
        }),
        50,
    ));

    // hard enumerations, live where the search is quick and stored past it
    out.push(reg(
        Sequence::generated("A58986", "pancake-sorting", 1, Some(13), |c| {
            let mut v: Vec<Int> = Vec::with_capacity(c.min(13));
            for n in 1..=c.min(8) as u32 {
                v.push(Int::from(pancake_f(n)?));
            }
            if c > 8 {
                v.extend(ints(&["10", "11", "13", "14", "15"]));
            }
            Ok(v)
        }),
        13,
    ));
    out.push(reg(
        Sequence::generated("A315", "reduced-latin-squares", 1, Some(10), |c| {
            let mut v = Vec::with_capacity(c.min(10));
            for n in 1..=c.min(6) as u32 {
                v.push(latin_squares_reduced(n)?);
            }
            if c > 6 {
                v.extend(ints(&[
                    "16942080",
                    "535281401856",
                    "377597570964258816",
                    "7580721483160132811489280",
                ]));
            }
            Ok(v)
        }),
        10,
    ));
    out.push(reg(
        Sequence::generated("A7153", "monotone-functions", 1, Some(8), |c| {
            let mut v = Vec::with_capacity(c.min(8));
            for n in 1..=c.min(6) as u32 {
                v.push(dedekind_variant(n)?);
            }
            if c > 6 {
                v.extend(ints(&["2414682040996", "56130437228687557907786"]));
            }
            Ok(v)
        }),
        8,
    ));
    out.push(reg(
        Sequence::generated("A3432", "maxdet-zero-one", 1, Some(13), |c| {
            let mut v = Vec::with_capacity(c.min(13));
            for n in 1..=c.min(5) as u32 {
                v.push(hadamard_maxdet01(n)?);
            }
            if c > 5 {
                v.extend(ints(&["9", "32", "56", "144", "320", "1458", "3645", "9477"]));
            }
            Ok(v)
        }),
        13,
    ));
    out.push(reg(
        Sequence::generated("A5316", "open-meanders", 1, Some(12), |c| {
            (1..=c as u32).map(meander_count).collect()
        }),
        11,
    ));
    out.push(reg(
        Sequence::generated("A5315", "closed-meanders", 1, Some(8), |c| {
            (1..=c as u32).map(closed_meander_count).collect()
        }),
        6,
    ));
    out.push(reg(
        Sequence::generated("A1011", "stamp-foldings", 1, Some(10), |c| {
            (1..=c as u32).map(stamp_foldings).collect()
        }),
        10,
    ));
    out.push(reg(
        Sequence::stored("A1231", "projective-planes", 2, hard["A1231"].clone()),
        9,
    ));
    out.push(reg(
        Sequence::stored("A1676", "sphere-structures", 1, hard["A1676"].clone()),
        16,
    ));
    out.push(reg(
        Sequence::stored("A7299", "hadamard-matrices", 1, hard["A7299"].clone()),
        7,
    ));
    out.push(reg(
        Sequence::stored("A1116", "lattice-kissing", 1, hard["A1116"].clone()),
        9,
    ));

    // weight enumerators and theta series
    out.push(reg(
        Sequence::generated("A18236", "weight-counts-72", 1, Some(13), |_| {
            let w = extremal_weight_enumerator(72)?;
            Ok(w.nonzero_weights().into_iter().map(|(_, v)| v).collect())
        }),
        13,
    ));
    out.push(reg(
        Sequence::generated("A34414", "minimal-weight-words", 0, Some(1001), |c| {
            (0..c as u32).map(|m| Ok(extremal_leading_coeffs(m)?.0)).collect()
        }),
        9,
    ));
    out.push(reg(
        Sequence::generated("A34415", "next-weight-words", 0, Some(1001), |c| {
            (0..c as u32).map(|m| Ok(extremal_leading_coeffs(m)?.1)).collect()
        }),
        9,
    ));
    out.push(reg(
        Sequence::generated("A4009", "e8-theta", 0, None, |c| {
            Ok(e8_theta(c.saturating_sub(1)).coeffs().to_vec())
        }),
        15,
    ));
    out.push(reg(
        Sequence::generated("A8408", "leech-theta", 0, None, |c| {
            Ok(leech_theta(c.saturating_sub(1)).coeffs().to_vec())
        }),
        10,
    ));
    out.push(reg(
        Sequence::generated("A594", "ramanujan-tau", 1, None, |c| Ok(ramanujan_tau(c))),
        24,
    ));
    out.push(reg(
        Sequence::generated("A34597", "minimal-vector-counts", 0, Some(30), |c| {
            let mut v = Vec::with_capacity(c);
            for m in 0..c as u32 {
                if m == 0 {
                    v.push(Int::one());
                } else {
                    let t = extremal_theta(24 * m, m as usize + 2)?;
                    v.push(t.coeff(m as usize + 1).clone());
                }
            }
            Ok(v)
        }),
        6,
    ));

    // rows, arrays, and their linearizations
    out.push(reg(
        Sequence::generated("A11784", "levine", 1, Some(15), levine_terms),
        12,
    ));
    out.push(reg(
        Sequence::generated("A108", "catalan", 0, None, |c| {
            Ok((0..c as u64).map(catalan).collect())
        }),
        25,
    ));
    out.push(reg(
        Sequence::generated("A1405", "central-binomials", 0, None, |c| {
            Ok((0..c as u64).map(|n| binomial(n, (n / 2) as i64)).collect())
        }),
        30,
    ));
    out.push(reg(
        Sequence::generated("A7318", "pascal", 0, None, |c| {
            Ok(read_triangle_by_rows(&NumberTriangle::pascal(), c))
        }),
        55,
    ));
    out.push(reg(
        Sequence::generated("A3987", "nim-table", 0, None, |c| {
            Ok(read_square_by_antidiagonals(&NumberSquare::nim(), c))
        }),
        45,
    ));
    out.push(reg(
        Sequence::generated("A36262", "prime-differences-array", 1, None, gilbreath_sequence),
        45,
    ));
    out.push(reg(
        Sequence::generated("A435", "tree-total-height", 1, None, |c| {
            Ok((1..=c as u64).map(tree_height_sum_w).collect())
        }),
        12,
    ));

    // the square array of shifted Fibonacci rows, down and across
    out.push(reg(
        Sequence::generated("A35513", "fibonacci-row-array", 0, None, |c| {
            let mut v = Vec::with_capacity(c);
            let mut d = 0usize;
            while v.len() < c {
                for i in 0..=d {
                    if v.len() == c {
                        break;
                    }
                    v.push(wythoff_entry(i as u64, (d - i) as u32));
                }
                d += 1;
            }
            Ok(v)
        }),
        45,
    ));
    out.push(reg(
        Sequence::generated("A201", "lower-wythoff", 1, None, |c| {
            Ok((0..c as u64).map(|n| Int::from(lower_wythoff(n))).collect())
        }),
        100,
    ));
    out.push(reg(
        Sequence::generated("A22342", "fibonacci-successors", 1, None, |c| {
            Ok((1..=c as u64).map(|n| Int::from(fib_successor(n))).collect())
        }),
        100,
    ));
    out.push(reg(
        Sequence::generated("A7067", "fibonacci-row-heads", 0, None, |c| {
            Ok((0..c as u64).map(|n| wythoff_entry(n, 0)).collect())
        }),
        60,
    ));
    out.push(reg(
        Sequence::generated("A19586", "vertical-para-fibonacci", 1, None, |c| {
            Ok(para_fibonacci_vertical(c))
        }),
        60,
    ));
    out.push(reg(
        Sequence::generated("A35612", "horizontal-para-fibonacci", 1, None, |c| {
            Ok(para_fibonacci_horizontal(c))
        }),
        60,
    ));

    // alternating-sum triangle and its relatives
    out.push(reg(
        Sequence::generated("A111", "zigzag", 0, None, |c| Ok(entringer(c))),
        14,
    ));
    out.push(reg(
        Sequence::generated("A364", "secant-numbers", 0, None, |c| {
            Ok(secant_tangent_numbers(c).0)
        }),
        10,
    ));
    out.push(reg(
        Sequence::generated("A182", "tangent-numbers", 1, None, |c| {
            Ok(secant_tangent_numbers(c).1)
        }),
        10,
    ));
    out.push(reg(
        Sequence::generated("A667", "boustrophedon-of-ones", 0, None, |c| {
            Ok(boustrophedon_transform(&vec![Int::one(); c]))
        }),
        14,
    ));
    out.push(reg(
        Sequence::generated("A661", "double-shift-eigensequence", 0, None, |c| {
            eigen_shift_solver(2, c)
        }),
        14,
    ));

    // the sowing game
    out.push(reg(
        Sequence::generated("A28932", "winning-boards", 0, Some(34), |c| {
            winning_positions(c.saturating_sub(1) as u64)
                .iter()
                .map(|p| {
                    let digits = p.digits();
                    if digits.iter().any(|&d| d >= 10) {
                        return Err(Error::Capacity(format!(
                            "board for {} stones has a hole past 9 and no numeral",
                            p.stones()
                        )));
                    }
                    Ok(Int::from_str(&p.to_string()).unwrap())
                })
                .collect()
        }),
        14,
    ));
    out.push(reg(
        Sequence::generated("A28920", "sowing-positions", 1, None, |c| {
            Ok(i_sequence(c).into_iter().map(Int::from).collect())
        }),
        100,
    ));
    out.push(reg(
        Sequence::generated("A2491", "hole-first-use", 1, None, |c| {
            Ok(t_from_game(c as u64).into_iter().map(Int::from).collect())
        }),
        60,
    ));

    // identification workflows
    out.push(reg(
        Sequence::generated("A31363", "mod5-representables", 1, None, |c| Ok(mod5_terms(c))),
        50,
    ));
    out.push(reg(
        Sequence::generated("A36917", "binomial-square-sum", 0, None, binomial_square_sum),
        20,
    ));
    out.push(reg(
        Sequence::generated("A46520", "divisor-totient-gap", 1, None, |c| {
            Ok(divisor_totient_gap(c))
        }),
        100,
    ));

    out
}

/// Find a registry row by id or name, case-insensitively.
pub fn find_registered<'a>(rows: &'a [Registered], key: &str) -> Option<&'a Registered> {
    let k = key.to_ascii_lowercase();
    rows.iter()
        .find(|r| r.seq.id().to_ascii_lowercase() == k || r.seq.name() == k)
}

/// One stored line: an id and its terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DbEntry {
    pub id: String,
    pub terms: Vec<Int>,
}

/// An immutable id-to-terms store in the stripped file format.
pub struct SeqDatabase {
    entries: Vec<DbEntry>,
    by_id: HashMap<String, usize>,
}

/// A plain lookup hit: the entry and where in it the query begins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LookupMatch {
    pub id: String,
    pub position: usize,
}

impl SeqDatabase {
    pub fn from_entries(entries: Vec<DbEntry>) -> Result<SeqDatabase> {
        let mut by_id = HashMap::with_capacity(entries.len());
        for (i, e) in entries.iter().enumerate() {
            if by_id.insert(e.id.clone(), i).is_some() {
                return Err(Error::DuplicateId(e.id.clone()));
            }
        }
        Ok(SeqDatabase { entries, by_id })
    }

    /// Parse the stripped format: one `<id> <t1>,<t2>,...` per line,
    /// `#` comments and blank lines allowed, ASCII only.
    pub fn parse(text: &str) -> Result<SeqDatabase> {
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if !line.is_ascii() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "non-ASCII content".into(),
                });
            }
            let (id, rest) = line.split_once(char::is_whitespace).ok_or(Error::Parse {
                line: line_no,
                msg: "expected an id followed by terms".into(),
            })?;
            let mut terms = Vec::new();
            for tok in rest.trim().split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "empty term".into(),
                    });
                }
                let t = Int::from_str(tok).map_err(|e| Error::Parse {
                    line: line_no,
                    msg: format!("bad term {tok:?}: {e}"),
                })?;
                terms.push(t);
            }
            entries.push(DbEntry {
                id: id.to_string(),
                terms,
            });
        }
        SeqDatabase::from_entries(entries)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<SeqDatabase> {
        SeqDatabase::parse(&std::fs::read_to_string(path)?)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&DbEntry> {
        self.by_id.get(id).map(|&i| &self.entries[i])
    }

    pub fn entries(&self) -> &[DbEntry] {
        &self.entries
    }

    /// Render back to the stripped format, entries in stored order.
    pub fn to_stripped(&self) -> String {
        let mut s = String::new();
        s.push_str("# seqlab sequence store\n");
        s.push_str("# format: <id> <t1>,<t2>,...\n");
        for e in &self.entries {
            s.push_str(&e.id);
            s.push(' ');
            let parts: Vec<String> = e.terms.iter().map(Int::to_string).collect();
            s.push_str(&parts.join(","));
            s.push('\n');
        }
        s
    }

    /// Entries containing the query as a contiguous run, sign-sensitive,
    /// one hit per entry at its first position. Exact position-0 matches
    /// sort first.
    pub fn lookup(&self, query: &[Int]) -> Vec<LookupMatch> {
        if query.is_empty() {
            return Vec::new();
        }
        let mut hits: Vec<LookupMatch> = self
            .entries
            .iter()
            .filter_map(|e| {
                first_occurrence(&e.terms, query).map(|position| LookupMatch {
                    id: e.id.clone(),
                    position,
                })
            })
            .collect();
        hits.sort_by(|a, b| a.position.cmp(&b.position).then_with(|| a.id.cmp(&b.id)));
        hits
    }

    /// Transform-chain identification: tries every chain of at most two
    /// steps, in a fixed order, and reports each entry the transformed
    /// query lands in, allowing a constant displacement.
    pub fn superseek(&self, query: &[Int]) -> Vec<SuperseekerResult> {
        let mut results = Vec::new();
        for chain in chains() {
            let Some(t) = apply_chain(&chain, query) else {
                continue;
            };
            if t.len() < MIN_TRANSFORMED {
                continue;
            }
            for e in &self.entries {
                if let Some((position, addend)) = first_displaced_occurrence(&e.terms, &t) {
                    results.push(SuperseekerResult {
                        id: e.id.clone(),
                        chain: chain.clone(),
                        offset: position,
                        addend,
                    });
                }
            }
        }
        results.sort_by(|a, b| {
            a.chain
                .len()
                .cmp(&b.chain.len())
                .then_with(|| (!a.addend.is_zero()).cmp(&(!b.addend.is_zero())))
                .then_with(|| a.offset.cmp(&b.offset))
                .then_with(|| a.id.cmp(&b.id))
        });
        results
    }

    /// Replays a superseek result against the query; true when the chain
    /// plus displacement really lands in the recorded entry segment.
    pub fn verify_superseek(&self, query: &[Int], r: &SuperseekerResult) -> bool {
        let Some(entry) = self.get(&r.id) else {
            return false;
        };
        let Some(t) = apply_chain(&r.chain, query) else {
            return false;
        };
        if r.offset + t.len() > entry.terms.len() {
            return false;
        }
        t.iter()
            .zip(&entry.terms[r.offset..])
            .all(|(v, w)| &(v + &r.addend) == w)
    }
}

fn first_occurrence(haystack: &[Int], needle: &[Int]) -> Option<usize> {
    if needle.len() > haystack.len() {
        return None;
    }
    (0..=haystack.len() - needle.len()).find(|&p| haystack[p..p + needle.len()] == *needle)
}

// First position where needle + c equals a run of haystack for some
// constant c; c is pinned by the first term.
fn first_displaced_occurrence(haystack: &[Int], needle: &[Int]) -> Option<(usize, Int)> {
    if needle.is_empty() || needle.len() > haystack.len() {
        return None;
    }
    for p in 0..=haystack.len() - needle.len() {
        let c = &haystack[p] - &needle[0];
        if needle
            .iter()
            .zip(&haystack[p..])
            .all(|(v, w)| &(v + &c) == w)
        {
            return Some((p, c));
        }
    }
    None
}

const MIN_TRANSFORMED: usize = 4;

/// One identification transform step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Differences,
    PartialSums,
    Binomial,
    InverseBinomial,
    InverseMoebius,
    Boustrophedon,
    /// Multiply every term by a small constant.
    Scale(u32),
    /// Drop the first term.
    Shift,
}

impl Step {
    fn all() -> Vec<Step> {
        let mut v = vec![
            Step::Differences,
            Step::PartialSums,
            Step::Binomial,
            Step::InverseBinomial,
            Step::InverseMoebius,
            Step::Boustrophedon,
        ];
        v.extend((2..=6).map(Step::Scale));
        v.push(Step::Shift);
        v
    }

    pub fn apply(self, a: &[Int]) -> Vec<Int> {
        match self {
            Step::Differences => transform(a, TransformKind::Differences),
            Step::PartialSums => transform(a, TransformKind::PartialSums),
            Step::Binomial => transform(a, TransformKind::Binomial),
            Step::InverseBinomial => transform(a, TransformKind::InverseBinomial),
            Step::InverseMoebius => transform(a, TransformKind::InverseMoebius),
            Step::Boustrophedon => boustrophedon_transform(a),
            Step::Scale(k) => a.iter().map(|t| t * k).collect(),
            Step::Shift => a[1..].to_vec(),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Differences => write!(f, "differences"),
            Step::PartialSums => write!(f, "partial_sums"),
            Step::Binomial => write!(f, "binomial"),
            Step::InverseBinomial => write!(f, "inverse_binomial"),
            Step::InverseMoebius => write!(f, "inverse_moebius"),
            Step::Boustrophedon => write!(f, "boustrophedon"),
            Step::Scale(k) => write!(f, "scale_{k}"),
            Step::Shift => write!(f, "shift"),
        }
    }
}

// Empty chain first, then single steps, then ordered pairs.
fn chains() -> Vec<Vec<Step>> {
    let steps = Step::all();
    let mut out = vec![Vec::new()];
    for &s in &steps {
        out.push(vec![s]);
    }
    for &s in &steps {
        for &t in &steps {
            out.push(vec![s, t]);
        }
    }
    out
}

fn apply_chain(chain: &[Step], query: &[Int]) -> Option<Vec<Int>> {
    let mut cur = query.to_vec();
    for &s in chain {
        if cur.is_empty() {
            return None;
        }
        cur = s.apply(&cur);
    }
    Some(cur)
}

/// A lookup hit reached through a transform chain: applying `chain` to
/// the query and adding `addend` to every term reproduces the entry's
/// terms starting at `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperseekerResult {
    pub id: String,
    pub chain: Vec<Step>,
    pub offset: usize,
    pub addend: Int,
}

impl fmt::Display for SuperseekerResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id)?;
        if self.chain.is_empty() {
            write!(f, " (direct")?;
        } else {
            let parts: Vec<String> = self.chain.iter().map(Step::to_string).collect();
            write!(f, " (via {}", parts.join(" then "))?;
        }
        if !self.addend.is_zero() {
            write!(f, ", plus {}", self.addend)?;
        }
        if self.offset != 0 {
            write!(f, ", at offset {}", self.offset)?;
        }
        write!(f, ")")
    }
}

/// The registry rendered to a database: each sequence contributes the
/// prefix the bundled store carries.
pub fn default_database() -> Result<SeqDatabase> {
    let entries = registry()
        .into_iter()
        .map(|r| {
            let terms = r.seq.terms(r.file_terms)?;
            Ok(DbEntry {
                id: r.seq.id().to_string(),
                terms,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SeqDatabase::from_entries(entries)
}

/// The store file embedded at build time.
pub fn bundled_database() -> Result<SeqDatabase> {
    SeqDatabase::parse(include_str!("../../../data/stripped.txt"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;
    use std::sync::OnceLock;

    fn test_db() -> &'static SeqDatabase {
        static DB: OnceLock<SeqDatabase> = OnceLock::new();
        DB.get_or_init(|| default_database().expect("registry generates"))
    }

    fn q(s: &str) -> Vec<Int> {
        s.split(',').map(|t| Int::from_str(t.trim()).unwrap()).collect()
    }

    #[test]
    fn parse_rejects_malformed_lines() {
        assert!(matches!(
            SeqDatabase::parse("A1 1,,2"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            SeqDatabase::parse("# ok\nA1 1,2\nA1 3"),
            Err(Error::DuplicateId(id)) if id == "A1"
        ));
        assert!(matches!(
            SeqDatabase::parse("A1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            SeqDatabase::parse("A1 1,2\nA2 1,x"),
            Err(Error::Parse { line: 2, .. })
        ));
        let db = SeqDatabase::parse("# comment\n\nA9 5,-7,12\n").unwrap();
        assert_eq!(db.len(), 1);
        assert_eq!(db.get("A9").unwrap().terms, q("5,-7,12"));
    }

    #[test]
    fn stripped_round_trip() {
        let db = test_db();
        let again = SeqDatabase::parse(&db.to_stripped()).unwrap();
        assert_eq!(again.entries(), db.entries());
    }

    #[test]
    fn lookup_ranks_exact_matches_first() {
        let db = test_db();
        let hits = db.lookup(&q("1,1,2,3,6,10,20,35,70"));
        assert_eq!(hits[0].id, "A1405");
        assert_eq!(hits[0].position, 0);
        let hits = db.lookup(&q("1,8,88,1088,14296"));
        assert!(hits.iter().any(|h| h.id == "A36917" && h.position == 0));
        // the self-counting entry holds runs of five equal terms, never ten
        assert!(!db.lookup(&q("9,9,9")).is_empty());
        assert!(db.lookup(&q("9,9,9,9,9,9,9,9,9,9")).is_empty());
        assert!(db.lookup(&[]).is_empty());
    }

    #[test]
    fn lookup_is_sign_sensitive() {
        let db = test_db();
        assert!(db.lookup(&q("1,-24,252,-1472")).iter().any(|h| h.id == "A594"));
        assert!(db.lookup(&q("1,24,252,1472")).is_empty());
    }

    #[test]
    fn superseek_explains_the_complement_pair() {
        let db = test_db();
        let results = db.superseek(&q("2,4,5,6,8,9"));
        assert!(!results.is_empty());
        // the direct hit outranks every chain
        assert_eq!(results[0].id, "A30124");
        assert!(results[0].chain.is_empty());
        assert!(results[0].addend.is_zero());
        let partial = results
            .iter()
            .find(|r| r.id == "A5228" && r.chain == [Step::PartialSums])
            .expect("partial sums lead back to the parent sequence");
        assert_eq!(partial.offset, 1);
        assert_eq!(partial.addend, Int::one());
        for r in &results {
            assert!(db.verify_superseek(&q("2,4,5,6,8,9"), r));
        }
    }

    #[test]
    fn superseek_sees_the_zigzag_shift() {
        // past the leading term, the zigzag numbers shift one place left
        // under the triangle transform; the chain shift-then-boustrophedon
        // lands the query back in its own entry two places along
        let db = test_db();
        let query = entringer(8);
        let results = db.superseek(&query);
        let hit = results
            .iter()
            .find(|r| r.id == "A111" && r.chain == [Step::Shift, Step::Boustrophedon])
            .expect("zigzag query should re-find itself through the transform");
        assert_eq!(hit.offset, 2);
        assert!(hit.addend.is_zero());
        for r in &results {
            assert!(db.verify_superseek(&query, r));
        }
    }

    #[test]
    fn superseek_rejects_noise() {
        let db = test_db();
        assert!(db.superseek(&q("9,9,9,9,9,7")).is_empty());
    }

    #[test]
    fn superseek_order_is_deterministic() {
        let db = test_db();
        let a = db.superseek(&q("2,4,5,6,8,9"));
        let b = db.superseek(&q("2,4,5,6,8,9"));
        assert_eq!(a, b);
    }

    #[test]
    fn binomial_square_sum_prefix_and_dual_path() {
        let direct = binomial_square_sum(6).unwrap();
        assert_eq!(direct, q("1,8,88,1088,14296,195008"));
        assert_eq!(
            binomial_square_sum(40).unwrap(),
            binomial_square_sum_by_recurrence(40).unwrap()
        );
    }

    #[test]
    fn divisor_totient_gap_prefix() {
        assert_eq!(
            divisor_totient_gap(15),
            q("-1,0,0,2,0,6,0,7,4,10,0,18,0,14,12")
        );
    }

    #[test]
    fn mod5_prefix_and_limit_form_agree() {
        let by_count = test_db().get("A31363").unwrap();
        assert_eq!(by_count.terms[..12], q("1,4,5,9,11,16,19,20,25,29,31,36")[..]);
        let by_limit: Vec<Int> = mod5_square_indices(36).into_iter().map(Int::from).collect();
        assert_eq!(by_limit, by_count.terms[..12]);
    }

    #[test]
    fn loeschian_search_matches_factorization() {
        assert!(loeschian_test(7));
        assert!(loeschian_test(0));
        assert!(!loeschian_test(2));
        for n in 0..=2000 {
            assert_eq!(
                loeschian_test(n),
                loeschian_by_factorization(n),
                "norm-form tests disagree at {n}"
            );
        }
    }

    #[test]
    fn divisor_shift_prefix_and_eigen_property() {
        let a = divisor_shift_terms(21);
        assert_eq!(a[..11], q("1,1,2,3,5,6,10,11,16,19,26")[..]);
        // shifts one place left under b_n = sum of a(d) over d | n
        let b = transform(&a[..20], TransformKind::InverseMoebius);
        assert_eq!(b[..], a[1..21]);
    }

    #[test]
    fn registry_ids_and_names_are_unique_and_findable() {
        let rows = registry();
        let mut ids = HashSet::new();
        let mut names = HashSet::new();
        for r in &rows {
            assert!(ids.insert(r.seq.id().to_string()), "dup id {}", r.seq.id());
            assert!(
                names.insert(r.seq.name().to_string()),
                "dup name {}",
                r.seq.name()
            );
            assert!(r.seq.name().chars().all(|c| c.is_ascii_lowercase()
                || c.is_ascii_digit()
                || c == '-'));
            if let Some(cap) = r.seq.cap() {
                assert!(r.file_terms <= cap, "{} stores past its cap", r.seq.id());
            }
        }
        let by_id = find_registered(&rows, "a5228").unwrap();
        assert_eq!(by_id.seq.id(), "A5228");
        let by_name = find_registered(&rows, "pascal").unwrap();
        assert_eq!(by_name.seq.id(), "A7318");
        assert!(find_registered(&rows, "nope").is_none());
    }

    #[test]
    fn winning_board_numerals() {
        let terms = &test_db().get("A28932").unwrap().terms;
        assert_eq!(
            terms[..],
            q("0,1,20,21,310,311,4200,4201,4220,4221,53110,53111,642000,642001")[..]
        );
    }

    #[test]
    fn bundled_store_parses() {
        assert!(bundled_database().is_ok());
    }
}
