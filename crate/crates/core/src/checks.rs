//! The runnable verification suite. Each check regenerates one slice of
//! the crate's output and compares it against frozen reference values:
//! catalogued prefixes, fixed reference tables, closed forms, and
//! cross-method identities. `seqlab check` prints one line per report;
//! the acceptance test fails on any report that is neither passed nor a
//! recorded discrepancy in the published listings.

use std::time::Instant;

use num_traits::{One, Zero};

use crate::bignum::{arith_functions, big_ln, PrimeSieve};
use crate::boustrophedon::{
    boustrophedon_by_convolution, boustrophedon_transform, eigen_shift_solver, entringer,
    secant_tangent_numbers, BoustroTriangle,
};
use crate::db::{self, Step};
use crate::enumerate::{
    closed_meander_count, dedekind_variant, hadamard_maxdet01, latin_squares_reduced,
    meander_count, pancake_f, stamp_foldings,
};
use crate::extremal::{
    extremal_leading_coeffs, extremal_theta, extremal_weight_enumerator,
    find_negative_next_coeff, leading_coeff_closed_form,
};
use crate::levine::{growth_estimate, levine_terms, verify_identities};
use crate::recurrence::{
    conway_threshold, tree_height_sum_by_enumeration, tree_height_sum_w, wilson_primeth,
};
use crate::seq::{gilbreath_first_violation, gilbreath_sequence};
use crate::series::{e8_theta, leech_theta};
use crate::tchoukaillon::{
    i_sequence, pi_asymptotic_check, t_by_rounding, t_by_sieve, t_from_game,
    unique_winning_position, winning_positions,
};
use crate::wythoff::{array_position, para_fibonacci, wythoff_entry, wythoff_window, Construction};
use crate::Int;

/// Outcome of one check group.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    /// True when the only failures are recorded discrepancies in the
    /// published source values (the check still runs and reports the
    /// numbers, but the stated target is not attainable as written).
    pub documented_failure: bool,
    pub detail: String,
    pub seconds: f64,
    /// Wall-clock allowance for this group at the current settings.
    pub budget_seconds: f64,
}

impl CheckReport {
    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }

    /// One-line rendering used by both the CLI and the acceptance test.
    pub fn line(&self) -> String {
        format!(
            "{:<4} {:<22} {:>8.2}s  {}",
            self.status(),
            self.name,
            self.seconds,
            self.detail
        )
    }
}

/// Collects problems for one named group and turns them into a report.
struct Group {
    name: &'static str,
    budget_seconds: f64,
    problems: Vec<String>,
    documented: Vec<String>,
    notes: Vec<String>,
    started: Instant,
}

impl Group {
    fn new(name: &'static str, budget_seconds: f64) -> Self {
        Group {
            name,
            budget_seconds,
            problems: Vec::new(),
            documented: Vec::new(),
            notes: Vec::new(),
            started: Instant::now(),
        }
    }

    fn check(&mut self, cond: bool, label: impl FnOnce() -> String) {
        if !cond {
            self.problems.push(label());
        }
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, label: &str, got: T, want: T) {
        if got != want {
            self.problems
                .push(format!("{label}: got {got}, want {want}"));
        }
    }

    fn eq_seq(&mut self, label: &str, got: &[Int], want: &[Int]) {
        if got.len() != want.len() {
            self.problems.push(format!(
                "{label}: got {} terms, want {}",
                got.len(),
                want.len()
            ));
            return;
        }
        if let Some(i) = (0..got.len()).find(|&i| got[i] != want[i]) {
            self.problems.push(format!(
                "{label}: term {i} is {}, want {}",
                got[i], want[i]
            ));
        }
    }

    /// Record a failure that is understood and expected, with its story.
    fn documented(&mut self, text: String) {
        self.documented.push(text);
    }

    fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    fn finish(self) -> CheckReport {
        let passed = self.problems.is_empty() && self.documented.is_empty();
        let documented_failure = self.problems.is_empty() && !self.documented.is_empty();
        let detail = if !self.problems.is_empty() {
            self.problems.join("; ")
        } else if !self.documented.is_empty() {
            format!("known limitation: {}", self.documented.join("; "))
        } else {
            self.notes.join("; ")
        };
        CheckReport {
            name: self.name,
            passed,
            documented_failure,
            detail,
            seconds: self.started.elapsed().as_secs_f64(),
            budget_seconds: self.budget_seconds,
        }
    }
}

fn csv(s: &str) -> Vec<Int> {
    s.split(',')
        .map(|t| t.trim().parse::<Int>().expect("reference literal"))
        .collect()
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

/// Run every check group. `extended` adds the long searches: the 13th
/// primeth term, rows 14 and 15 of Levine's triangle, the first negative
/// enumerator coefficient, and the largest exhaustive enumerations.
pub fn run_all(extended: bool) -> Vec<CheckReport> {
    vec![
        printed_prefixes(),
        tree_height(),
        threshold_scan(),
        primeth_chain(extended),
        levine_rows(extended),
        wythoff_array(),
        boustrophedon(),
        weight_enumerators(extended),
        theta_series(),
        hard_enumerations(extended),
        sowing_game(),
        prime_differences(),
        store_lookup(),
    ]
}

/// Catalogued prefix for every sequence the store carries, keyed by id.
/// The mixed nested recursion is handled separately: its published listing
/// disagrees with its own defining recurrence at one position.
const PRINTED: &[(&str, &str)] = &[
    ("A5228", "1,3,7,12,18,26,35,45,56,69,83,98,114"),
    ("A30124", "2,4,5,6,8,9,10,11,13,14,15,16,17,19"),
    ("A1462", "1,2,2,3,3,4,4,4,5,5,5,6,6,6,6,7,7,7,7,8"),
    ("A7097", "1,2,3,5,11,31,127,709,5381,52711,648391,9737333"),
    ("A5132", "1,3,6,2,7,13,20,12,21,11,22,10,23,9"),
    ("A8336", "1,1,2,6,24,120,20,140,1120,10080"),
    ("A4001", "1,1,2,2,3,4,4,4,5,6,7,7,8,8,8,8,9"),
    ("A28354", "1,2,3,4,32,123,43,2123"),
    ("A3238", "1,1,2,3,5,6,10,11,16,19,26"),
    ("A435", "0,1,8,78,944,13800,237432"),
    ("A11784", "1,2,2,3,4,7,14,42,213,2837,175450,139759600"),
    ("A108", "1,1,2,5,14,42,132,429,1430,4862"),
    ("A1405", "1,1,2,3,6,10,20,35,70,126"),
    ("A7318", "1,1,1,1,2,1,1,3,3,1,1,4,6,4,1"),
    ("A3987", "0,1,1,2,0,2,3,3,3,3,4,2,0,2,4"),
    ("A36262", "2,1,3,1,2,5,1,0,2,7,1,2,2,4,11,1"),
    ("A35513", "1,2,4,3,7,6,5,11,10,9,8,18,16,15,12"),
    ("A201", "1,3,4,6,8"),
    ("A22342", "2,3,5,7,8,10,11"),
    ("A7067", "1,4,6,9,12"),
    ("A19586", "0,0,0,1,0,2,1,0,3,2,1,4,0,5,3,2,6,1,7,4,0,8,5"),
    ("A35612", "1,2,3,1,4,1,2,5,1,2,3,1,6,1,2,3,1,4,1,2,7,1,2"),
    ("A111", "1,1,1,2,5,16,61,272,1385,7936"),
    ("A364", "1,1,5,61,1385,50521,2702765"),
    ("A182", "1,2,16,272,7936,353792,22368256"),
    ("A667", "1,2,4,9,24,77,294,1309"),
    ("A661", "1,0,1,1,2,6,17,62,259,1230,6592"),
    ("A594", "1,-24,252,-1472,4830,-6048"),
    ("A4009", "1,240,2160,6720,17520"),
    ("A8408", "1,0,196560,16773120,398034000"),
    (
        "A18236",
        "1,249849,18106704,462962955,4397342400,16602715899,25756721120,\
         16602715899,4397342400,462962955,18106704,249849,1",
    ),
    (
        "A34414",
        "1,759,17296,249849,3217056,39703755,481008528,5776211364,69065734464",
    ),
    (
        "A34415",
        "1,2576,535095,18106704,369844880,6101289120,90184804281,\
         1251098739072,16681003659936",
    ),
    (
        "A34597",
        "1,196560,52416000,6218175600,565866362880,45792819072000",
    ),
    ("A58986", "0,1,3,4,5,7,8,9,10,11,13,14,15"),
    (
        "A315",
        "1,1,1,4,56,9408,16942080,535281401856,377597570964258816,\
         7580721483160132811489280",
    ),
    (
        "A7153",
        "1,4,18,166,7579,7828352,2414682040996,56130437228687557907786",
    ),
    ("A3432", "1,1,2,3,5,9,32,56,144,320,1458,3645,9477"),
    ("A5316", "1,1,2,3,8,14,42,81,262,538,1828"),
    ("A5315", "1,2,8,42,262,1828"),
    ("A1011", "1,1,2,5,14,38,120,353,1148,3527"),
    ("A1231", "1,1,1,1,0,1,1,4,0"),
    ("A1676", "1,1,1,1,1,1,28,2,8,6,992,1,3,2,16256,2"),
    ("A7299", "1,1,1,5,3,60,487"),
    ("A1116", "2,6,12,24,40,72,126,240,272"),
    (
        "A28932",
        "0,1,20,21,310,311,4200,4201,4220,4221,53110,53111,642000,642001",
    ),
    ("A28920", "1,2,1,3,1,4,1,2,1,5,1,6,1,2"),
    ("A2491", "1,2,4,6,10,12,18,22,30,34,42"),
    ("A31363", "1,4,5,9,11,16,19,20,25,29,31,36"),
    ("A36917", "1,8,88,1088,14296,195008"),
    ("A46520", "-1,0,0,2,0,6,0,7,4,10,0,18,0,14,12"),
];

/// Every registered generator reproduces its catalogued prefix exactly.
fn printed_prefixes() -> CheckReport {
    let mut g = Group::new("printed-prefixes", 120.0);
    let rows = db::registry();
    let mut exact = 0usize;

    for &(id, listing) in PRINTED {
        let want = csv(listing);
        match db::find_registered(&rows, id) {
            None => g.problems.push(format!("{id} is not registered")),
            Some(r) => match r.seq.terms(want.len()) {
                Err(e) => g.problems.push(format!("{id}: {e}")),
                Ok(got) => {
                    let before = g.problems.len();
                    g.eq_seq(id, &got, &want);
                    if g.problems.len() == before {
                        exact += 1;
                    }
                }
            },
        }
    }

    // The mixed nested recursion a(n) = a(a(n-2)) + a(n - a(n-2)). Its
    // published listing repeats 10 at position 16 where the recurrence
    // itself gives 11; from there on the listing trails the recurrence by
    // one place. The generator follows the recurrence, so this one prefix
    // cannot match as printed.
    let listing = csv("1,1,2,3,3,4,5,6,6,7,7,8,9,10,10,10,11,12,12");
    match db::find_registered(&rows, "A5229").map(|r| r.seq.terms(listing.len())) {
        Some(Ok(got)) => {
            if got == listing {
                g.problems
                    .push("A5229 reproduced the published misprint".into());
            } else if got[..15] == listing[..15]
                && got[15] == Int::from(11)
                && listing[15] == Int::from(10)
                && got[15..18] == listing[16..19]
            {
                g.documented(format!(
                    "{exact} of {} prefixes exact; A5229 follows its defining \
                     recurrence, which gives 11 at position 16 where the \
                     published listing repeats 10 (the listing's later terms \
                     match the recurrence shifted one place)",
                    PRINTED.len() + 1
                ));
            } else {
                g.problems
                    .push("A5229 diverges from its listing in an unrecorded way".into());
            }
        }
        Some(Err(e)) => g.problems.push(format!("A5229: {e}")),
        None => g.problems.push("A5229 is not registered".into()),
    }

    // the table above plus the special case must cover the registry
    for r in &rows {
        let id = r.seq.id();
        if id != "A5229" && PRINTED.iter().all(|&(p, _)| p != id) {
            g.problems.push(format!("{id} has no reference prefix"));
        }
    }
    g.eq("reference table size", PRINTED.len() + 1, rows.len());

    g.finish()
}

/// Total height of rooted labeled trees: closed form, brute-force
/// enumeration, catalogued values, and the growth constant.
fn tree_height() -> CheckReport {
    let mut g = Group::new("tree-height", 120.0);

    let want = ints(&[0, 1, 8, 78, 944, 13800, 237432]);
    let got: Vec<Int> = (1..=7).map(tree_height_sum_w).collect();
    g.eq_seq("W(1..7)", &got, &want);

    for n in 1..=7usize {
        g.check(
            tree_height_sum_by_enumeration(n) == tree_height_sum_w(n as u64),
            || format!("enumeration oracle disagrees with the closed form at n={n}"),
        );
    }

    // W_n * n^-n * sqrt(n / 2 pi) should tend to the published constant 1;
    // the series itself converges to 1/2, and slowly
    let ratio = |n: u64| {
        let w = tree_height_sum_w(n);
        (big_ln(&w) - n as f64 * (n as f64).ln()
            + 0.5 * (n as f64 / (2.0 * std::f64::consts::PI)).ln())
        .exp()
    };
    let r50 = ratio(50);
    let r1000 = ratio(1000);
    g.check((r50 - 0.425575).abs() < 1e-4, || {
        format!("normalized ratio at n=50 moved: {r50}")
    });
    g.check(r50 < r1000 && r1000 < 0.5, || {
        format!("ratio is not climbing toward 1/2: r50={r50}, r1000={r1000}")
    });
    g.check((0.9..=1.1).contains(&(2.0 * r1000)), || {
        format!("doubled ratio at n=1000 is {}, want within 10% of 1", 2.0 * r1000)
    });
    g.documented(format!(
        "exact values, oracle, and monotone approach all hold, but the \
         Stirling-normalized ratio at n=50 is {r50:.4} against the published \
         constant 1 (and {:.4} against the corrected constant 1/2), outside \
         10% either way; the corrected constant is reached within 10% only \
         near n=1000 (doubled ratio {:.4})",
        2.0 * r50,
        2.0 * r1000
    ));

    g.finish()
}

/// The nested recursion a(n) = a(a(n-1)) + a(n - a(n-1)) stays within
/// n/20 of n/2 for every n past 1489, scanned through one million.
fn threshold_scan() -> CheckReport {
    let mut g = Group::new("threshold-scan", 10.0);
    let last = conway_threshold(1_000_000);
    g.eq("last n with |a(n)/n - 1/2| > 1/20", last, 1489);
    g.note("scanned n <= 1000000".into());
    g.finish()
}

/// The primeth recurrence a(n+1) = a(n)-th prime, grown off one sieve.
fn primeth_chain(extended: bool) -> CheckReport {
    let mut g = Group::new("primeth-chain", if extended { 3600.0 } else { 30.0 });
    let sieve = PrimeSieve::new(10_000_000);
    match wilson_primeth(&sieve, 12) {
        Err(e) => g.problems.push(format!("chain failed: {e}")),
        Ok(got) => g.eq_seq(
            "first 12 terms",
            &got,
            &csv("1,2,3,5,11,31,127,709,5381,52711,648391,9737333"),
        ),
    }
    if extended {
        let big = PrimeSieve::new(175_000_000);
        match wilson_primeth(&big, 13) {
            Err(e) => g.problems.push(format!("13-term chain failed: {e}")),
            Ok(got) => g.eq("term 13", got[12].clone(), Int::from(174_440_041u64)),
        }
        g.note("13 terms from a sieve to 1.75e8".into());
    } else {
        g.note("12 terms from a sieve to 1e7".into());
    }
    g.finish()
}

/// Levine's triangle: the term list, the seven cross-row identities, and
/// the double-exponential growth fit.
fn levine_rows(extended: bool) -> CheckReport {
    let mut g = Group::new("levine-rows", if extended { 3600.0 } else { 300.0 });
    match levine_terms(13) {
        Err(e) => g.problems.push(format!("terms failed: {e}")),
        Ok(l) => {
            g.eq_seq(
                "terms 1..12",
                &l[..12],
                &csv("1,2,2,3,4,7,14,42,213,2837,175450,139759600"),
            );
            g.eq("term 13", l[12].clone(), Int::from(6_837_625_106_787u64));
            let fit = growth_estimate(&l[5..13], 6);
            g.check((0.050..=0.058).contains(&fit.c2), || {
                format!("growth exponent c2 = {} outside [0.050, 0.058]", fit.c2)
            });
            g.check((0.2..=0.36).contains(&fit.c1), || {
                format!("growth scale c1 = {} outside [0.2, 0.36]", fit.c1)
            });
            g.note(format!("fit c1 = {:.3}, c2 = {:.4}", fit.c1, fit.c2));
        }
    }
    for n in 1..=11usize {
        match verify_identities(n) {
            Err(e) => g.problems.push(format!("identities at n={n}: {e}")),
            Ok(report) => g.check(report.all_hold(), || {
                format!("an identity fails at n={n}: {report:?}")
            }),
        }
    }
    if extended {
        match levine_terms(15) {
            Err(e) => g.problems.push(format!("extended terms failed: {e}")),
            Ok(l) => {
                g.eq(
                    "term 14",
                    l[13].clone(),
                    "266437144916648607844".parse().unwrap(),
                );
                g.eq(
                    "term 15",
                    l[14].clone(),
                    "508009471379488821444261986503540".parse().unwrap(),
                );
            }
        }
        g.note("rows through 15".into());
    }
    g.finish()
}

/// The Wythoff array: four constructions agree, the displayed window is
/// exact, and the paraphrased Fibonacci sequences behave as catalogued.
fn wythoff_array() -> CheckReport {
    let mut g = Group::new("wythoff-array", 30.0);

    let reference = wythoff_window(49, 29, Construction::ClosedForm);
    for c in [
        Construction::BeattyFill,
        Construction::SuccessorOrbit,
        Construction::FreshHeads,
    ] {
        g.check(wythoff_window(49, 29, c) == reference, || {
            format!("{c:?} disagrees with the closed form on 50 rows x 30 columns")
        });
    }

    let expected_pre = [
        (0u64, 1u64),
        (1, 3),
        (2, 4),
        (3, 6),
        (4, 8),
        (5, 9),
        (6, 11),
        (7, 12),
    ];
    let expected_rows: [&[u64]; 8] = [
        &[1, 2, 3, 5, 8, 13, 21, 34, 55],
        &[4, 7, 11, 18, 29, 47, 76],
        &[6, 10, 16, 26, 42, 68],
        &[9, 15, 24, 39, 63],
        &[12, 20, 32, 52],
        &[14, 23, 37, 60],
        &[17, 28, 45, 73],
        &[19, 31, 50, 81],
    ];
    let w = wythoff_window(7, 8, Construction::ClosedForm);
    g.check(w.pre() == expected_pre, || {
        "window columns n, b do not match the displayed table".into()
    });
    for (n, exp) in expected_rows.iter().enumerate() {
        g.check(&w.rows()[n][..exp.len()] == *exp, || {
            format!("window row {n} does not match the displayed table")
        });
    }
    g.eq("corner entry (7,3)", wythoff_entry(7, 3), Int::from(81));

    let (vertical, horizontal) = para_fibonacci(30_000);
    for x in 1..=10_000u64 {
        let n = vertical[x as usize];
        if n == u64::MAX {
            g.problems.push(format!("{x} never appears in the array"));
            break;
        }
        let k = horizontal[x as usize] - 1;
        let pos_ok = matches!(array_position(x), Ok(p) if p == (n, k + 1));
        if wythoff_entry(n, k as u32) != Int::from(x) || !pos_ok {
            g.problems
                .push(format!("position round trip broke at {x}"));
            break;
        }
    }

    // deleting the first occurrence of each value fixes the vertical one
    let seq: Vec<u64> = (1..=30_000).map(|x| vertical[x]).collect();
    let mut seen = std::collections::HashSet::new();
    let survivors: Vec<u64> = seq.iter().copied().filter(|&v| !seen.insert(v)).collect();
    g.check(
        survivors.len() >= 10_000 && survivors[..10_000] == seq[..10_000],
        || "delete-first-occurrence is not a fixed point over 10000 terms".into(),
    );

    g.note("four constructions, window, coverage and both self-similarity laws".into());
    g.finish()
}

/// Boustrophedon: triangle vs convolution on random inputs, the displayed
/// zigzag triangle, and the catalogued transforms.
fn boustrophedon() -> CheckReport {
    let mut g = Group::new("boustrophedon", 10.0);

    // splitmix-style generator, fixed seed
    let mut state = 0x6c62_272e_07bb_0142u64;
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        state >> 33
    };
    for trial in 0..200 {
        let len = (next() % 24 + 1) as usize;
        let a: Vec<Int> = (0..len).map(|_| Int::from(next() % 101) - 50).collect();
        if boustrophedon_transform(&a) != boustrophedon_by_convolution(&a) {
            g.problems
                .push(format!("triangle and convolution split on trial {trial}"));
            break;
        }
    }

    let mut delta = vec![Int::zero(); 8];
    delta[0] = Int::one();
    let t = BoustroTriangle::from_input(&delta);
    let expected: Vec<Vec<Int>> = [
        vec![1i64],
        vec![0, 1],
        vec![1, 1, 0],
        vec![0, 1, 2, 2],
        vec![5, 5, 4, 2, 0],
        vec![0, 5, 10, 14, 16, 16],
        vec![61, 61, 56, 46, 32, 16, 0],
        vec![0, 61, 122, 178, 224, 256, 272, 272],
    ]
    .iter()
    .map(|r| ints(r))
    .collect();
    g.check(t.display_rows() == expected, || {
        "zigzag-seeded triangle does not print as displayed".into()
    });

    g.eq_seq("zigzag numbers", &entringer(10), &csv("1,1,1,2,5,16,61,272,1385,7936"));
    let (sec, tan) = secant_tangent_numbers(7);
    g.eq_seq("secant numbers", &sec, &csv("1,1,5,61,1385,50521,2702765"));
    g.eq_seq("tangent numbers", &tan, &csv("1,2,16,272,7936,353792,22368256"));

    let ones = vec![Int::one(); 8];
    g.eq_seq(
        "transform of all ones",
        &boustrophedon_transform(&ones),
        &csv("1,2,4,9,24,77,294,1309"),
    );
    g.eq_seq(
        "ones-triangle row ends",
        &BoustroTriangle::from_input(&ones).ends(),
        &csv("1,2,4,9,24,77,294,1309"),
    );
    match eigen_shift_solver(2, 11) {
        Err(e) => g.problems.push(format!("double-shift eigenvector: {e}")),
        Ok(a) => g.eq_seq(
            "double-shift eigenvector",
            &a,
            &csv("1,0,1,1,2,6,17,62,259,1230,6592"),
        ),
    }

    g.note("200 random dual-path inputs plus the displayed tables".into());
    g.finish()
}

/// Extremal weight enumerators: leading coefficients three ways, full
/// rows through length 192, and the length-72 opening.
fn weight_enumerators(extended: bool) -> CheckReport {
    let mut g = Group::new("weight-enumerators", if extended { 3600.0 } else { 120.0 });
    let first = csv("1,759,17296,249849,3217056,39703755,481008528,5776211364,69065734464");
    let second = csv(
        "1,2576,535095,18106704,369844880,6101289120,90184804281,\
         1251098739072,16681003659936",
    );

    for m in 0..=8u32 {
        match extremal_leading_coeffs(m) {
            Err(e) => g.problems.push(format!("leading coefficients at m={m}: {e}")),
            Ok((a, b)) => {
                g.check(a == first[m as usize], || {
                    format!("minimal-weight count at m={m}: got {a}")
                });
                g.check(b == second[m as usize], || {
                    format!("next-weight count at m={m}: got {b}")
                });
            }
        }
        if m >= 1 {
            g.check(
                leading_coeff_closed_form(m as u64) == first[m as usize],
                || format!("closed form splits from the recurrence at m={m}"),
            );
        }
    }

    // full enumerator rows: integral by construction, minimal weight
    // 4m + 4, and the two leading counts agree with the budgeted path
    for m in 1..=8u32 {
        let n = 24 * m;
        match extremal_weight_enumerator(n) {
            Err(e) => g.problems.push(format!("enumerator at n={n}: {e}")),
            Ok(we) => {
                let nz = we.nonzero_weights();
                g.check(nz.first().map(|(w, _)| *w) == Some(0), || {
                    format!("n={n}: missing the empty word")
                });
                g.check(nz.get(1).map(|(w, _)| *w) == Some((4 * m + 4) as usize), || {
                    format!("n={n}: minimal weight is not {}", 4 * m + 4)
                });
                g.check(we.weight_count((4 * m + 4) as usize) == &first[m as usize], || {
                    format!("n={n}: minimal-weight count disagrees with the budgeted path")
                });
                g.check(we.weight_count((4 * m + 8) as usize) == &second[m as usize], || {
                    format!("n={n}: next-weight count disagrees with the budgeted path")
                });
            }
        }
    }

    match extremal_weight_enumerator(72) {
        Err(e) => g.problems.push(format!("enumerator at n=72: {e}")),
        Ok(we) => {
            for w in [4usize, 8, 12] {
                g.check(we.weight_count(w).is_zero(), || {
                    format!("n=72 should have no words of weight {w}")
                });
            }
            g.eq("n=72 weight 16", we.weight_count(16).clone(), Int::from(249_849));
            g.eq(
                "n=72 weight 20",
                we.weight_count(20).clone(),
                Int::from(18_106_704),
            );
            g.eq(
                "n=72 weight 24",
                we.weight_count(24).clone(),
                Int::from(462_962_955),
            );
        }
    }

    if extended {
        let ms: Vec<u32> = (1..=160).collect();
        match find_negative_next_coeff(&ms) {
            Err(e) => g.problems.push(format!("negativity search: {e}")),
            Ok(found) => g.eq(
                "first length with a negative next-weight count",
                found.map_or_else(|| "none".to_string(), |n| n.to_string()),
                "3696".to_string(),
            ),
        }
        g.note("nine rows, closed form, n=72 opening, negativity at 3696".into());
    } else {
        g.note("nine rows, closed form, and the n=72 opening".into());
    }
    g.finish()
}

/// Theta series of extremal even unimodular lattices, with the root
/// lattice and Leech prefixes pinned.
fn theta_series() -> CheckReport {
    let mut g = Group::new("theta-series", 60.0);
    let minimal = csv("1,196560,52416000,6218175600,565866362880,45792819072000");
    for m in 1..=5u32 {
        match extremal_theta(24 * m, m as usize + 2) {
            Err(e) => g.problems.push(format!("theta at n={}: {e}", 24 * m)),
            Ok(f) => {
                g.check(f.coeff(0).is_one(), || {
                    format!("n={}: constant term is not 1", 24 * m)
                });
                for j in 1..=m as usize {
                    g.check(f.coeff(j).is_zero(), || {
                        format!("n={}: coefficient {j} should vanish", 24 * m)
                    });
                }
                g.check(f.coeff(m as usize + 1) == &minimal[m as usize], || {
                    format!(
                        "n={}: minimal vector count {} want {}",
                        24 * m,
                        f.coeff(m as usize + 1),
                        minimal[m as usize]
                    )
                });
            }
        }
    }

    let e8 = e8_theta(3);
    for (j, want) in [1i64, 240, 2160, 6720].into_iter().enumerate() {
        g.check(e8.coeff(j) == &Int::from(want), || {
            format!("root-lattice theta coefficient {j}")
        });
    }
    let leech = leech_theta(4);
    for (j, want) in [1i64, 0, 196_560, 16_773_120, 398_034_000]
        .into_iter()
        .enumerate()
    {
        g.check(leech.coeff(j) == &Int::from(want), || {
            format!("Leech theta coefficient {j}")
        });
    }

    g.note("extremal theta for n = 24..120 plus both fixed lattices".into());
    g.finish()
}

/// The exhaustive enumerations: pancake diameters, reduced Latin squares,
/// monotone Boolean functions, maximal determinants, meanders, foldings.
fn hard_enumerations(extended: bool) -> CheckReport {
    let mut g = Group::new("hard-enumerations", if extended { 3600.0 } else { 600.0 });

    let pancake_want = [0u32, 1, 3, 4, 5, 7, 8, 9, 10];
    for (i, want) in pancake_want.iter().enumerate() {
        let n = i as u32 + 1;
        match pancake_f(n) {
            Err(e) => g.problems.push(format!("pancake at n={n}: {e}")),
            Ok(f) => g.check(f == *want, || format!("pancake f({n}) = {f}, want {want}")),
        }
    }

    let latin_want = ints(&[1, 1, 1, 4, 56, 9408]);
    for n in 1..=6u32 {
        match latin_squares_reduced(n) {
            Err(e) => g.problems.push(format!("latin squares at n={n}: {e}")),
            Ok(q) => g.check(q == latin_want[n as usize - 1], || {
                format!("reduced latin squares at n={n}: got {q}")
            }),
        }
    }

    let dedekind_want = ints(&[1, 4, 18, 166]);
    for n in 1..=4u32 {
        match dedekind_variant(n) {
            Err(e) => g.problems.push(format!("monotone functions at n={n}: {e}")),
            Ok(d) => g.check(d == dedekind_want[n as usize - 1], || {
                format!("monotone function count at n={n}: got {d}")
            }),
        }
    }

    let maxdet_want = ints(&[1, 1, 2, 3, 5]);
    for n in 1..=5u32 {
        match hadamard_maxdet01(n) {
            Err(e) => g.problems.push(format!("maximal determinant at n={n}: {e}")),
            Ok(d) => g.check(d == maxdet_want[n as usize - 1], || {
                format!("maximal determinant at n={n}: got {d}")
            }),
        }
    }

    let meander_want = ints(&[1, 1, 2, 3, 8, 14, 42, 81, 262, 538, 1828]);
    for n in 1..=11u32 {
        match meander_count(n) {
            Err(e) => g.problems.push(format!("meanders at n={n}: {e}")),
            Ok(c) => g.check(c == meander_want[n as usize - 1], || {
                format!("meander count at n={n}: got {c}")
            }),
        }
    }
    let closed_want = ints(&[1, 2, 8, 42, 262, 1828]);
    for m in 1..=6u32 {
        match closed_meander_count(m) {
            Err(e) => g.problems.push(format!("closed meanders at m={m}: {e}")),
            Ok(c) => g.check(c == closed_want[m as usize - 1], || {
                format!("closed meander count at m={m}: got {c}")
            }),
        }
    }

    let folding_want = ints(&[1, 1, 2, 5, 14, 38, 120, 353, 1148, 3527]);
    for n in 1..=10u32 {
        match stamp_foldings(n) {
            Err(e) => g.problems.push(format!("stamp foldings at n={n}: {e}")),
            Ok(c) => g.check(c == folding_want[n as usize - 1], || {
                format!("stamp foldings at n={n}: got {c}")
            }),
        }
    }

    if extended {
        match pancake_f(10) {
            Err(e) => g.problems.push(format!("pancake at n=10: {e}")),
            Ok(f) => g.eq("pancake f(10)", f, 11),
        }
        match latin_squares_reduced(7) {
            Err(e) => g.problems.push(format!("latin squares at n=7: {e}")),
            Ok(q) => g.eq("reduced latin squares at n=7", q, Int::from(16_942_080)),
        }
        match dedekind_variant(5) {
            Err(e) => g.problems.push(format!("monotone functions at n=5: {e}")),
            Ok(d) => g.eq("monotone function count at n=5", d, Int::from(7579)),
        }
        match dedekind_variant(6) {
            Err(e) => g.problems.push(format!("monotone functions at n=6: {e}")),
            Ok(d) => g.eq("monotone function count at n=6", d, Int::from(7_828_352)),
        }
        match hadamard_maxdet01(6) {
            Err(e) => g.problems.push(format!("maximal determinant at n=6: {e}")),
            Ok(d) => g.eq("maximal determinant at n=6", d, Int::from(9)),
        }
        match hadamard_maxdet01(7) {
            Err(e) => g.problems.push(format!("maximal determinant at n=7: {e}")),
            Ok(d) => g.eq("maximal determinant at n=7", d, Int::from(32)),
        }
        g.note("six families, extended sizes included".into());
    } else {
        g.note("six families at their standard sizes".into());
    }
    g.finish()
}

/// Tchoukaillon solitaire: the winning-position table, both derived
/// sequences, three routes to t(k), uniqueness, and the pi limit.
fn sowing_game() -> CheckReport {
    let mut g = Group::new("sowing-game", 60.0);

    let table = [
        "0", "1", "20", "21", "310", "311", "4200", "4201", "4220", "4221", "53110", "53111",
        "642000", "642001",
    ];
    let positions = winning_positions(13);
    g.eq("table rows", positions.len(), table.len());
    for (n, (pos, want)) in positions.iter().zip(table.iter()).enumerate() {
        g.check(pos.to_string() == *want, || {
            format!("winning position at n={n}: {pos} want {want}")
        });
    }

    let i_vals: Vec<Int> = i_sequence(14).into_iter().map(Int::from).collect();
    g.eq_seq("index sequence", &i_vals, &csv("1,2,1,3,1,4,1,2,1,5,1,6,1,2"));
    let t_vals: Vec<Int> = t_from_game(11).into_iter().map(Int::from).collect();
    g.eq_seq("first-use sequence", &t_vals, &csv("1,2,4,6,10,12,18,22,30,34,42"));

    let game = t_from_game(300);
    match t_by_sieve(300) {
        Err(e) => g.problems.push(format!("sieve route: {e}")),
        Ok(by_sieve) => g.check(by_sieve == game, || {
            "sieve route disagrees with the played games".into()
        }),
    }
    for (i, &t) in game.iter().enumerate() {
        match t_by_rounding(i as u64 + 1) {
            Err(e) => {
                g.problems.push(format!("rounding route at k={}: {e}", i + 1));
                break;
            }
            Ok(r) => {
                if r != Int::from(t) {
                    g.problems
                        .push(format!("rounding route splits at k={}", i + 1));
                    break;
                }
            }
        }
    }

    for n in 0..=12u64 {
        match unique_winning_position(n) {
            Err(e) => g.problems.push(format!("uniqueness at n={n}: {e}")),
            Ok(found) => g.check(found.to_string() == table[n as usize], || {
                format!("exhaustive search at n={n} found {found}")
            }),
        }
    }

    match pi_asymptotic_check(10_000) {
        Err(e) => g.problems.push(format!("pi ratio: {e}")),
        Ok(r) => g.check((0.99..=1.01).contains(&r), || {
            format!("t(10^4) * pi / 10^8 = {r}, want within 1% of 1")
        }),
    }

    g.note("table, derived sequences, three constructions to k=300, uniqueness to n=12".into());
    g.finish()
}

/// Every iterated absolute-difference row of the primes below one million
/// starts with 1, and the array reads out as catalogued.
fn prime_differences() -> CheckReport {
    let mut g = Group::new("prime-differences", 30.0);
    let sieve = PrimeSieve::new(1_000_000);
    let primes = sieve.primes();
    match gilbreath_first_violation(primes) {
        None => g.note(format!("all {} rows lead with 1", primes.len() - 1)),
        Some(k) => g.problems.push(format!("row {k} does not lead with 1")),
    }
    match gilbreath_sequence(16) {
        Err(e) => g.problems.push(format!("antidiagonal read: {e}")),
        Ok(got) => g.eq_seq(
            "antidiagonal read",
            &got,
            &csv("2,1,3,1,2,5,1,0,2,7,1,2,2,4,11,1"),
        ),
    }
    g.finish()
}

/// The sequence store: every entry identifies itself, the transform
/// chains explain the worked examples, and the two spot-check identities
/// hold at scale.
fn store_lookup() -> CheckReport {
    let mut g = Group::new("store-lookup", 60.0);

    match db::default_database() {
        Err(e) => g.problems.push(format!("store failed to build: {e}")),
        Ok(store) => {
            for entry in store.entries() {
                let probe = &entry.terms[..entry.terms.len().min(10)];
                let hits = store.lookup(probe);
                match hits.first() {
                    Some(hit) if hit.id == entry.id && hit.position == 0 => {}
                    _ => g
                        .problems
                        .push(format!("{} does not identify itself", entry.id)),
                }
            }

            let query = csv("2,4,5,6,8,9");
            let results = store.superseek(&query);
            g.check(
                results
                    .first()
                    .map(|r| r.id == "A30124" && r.chain.is_empty() && r.addend.is_zero())
                    .unwrap_or(false),
                || "complement query: the direct hit should rank first".into(),
            );
            match results
                .iter()
                .find(|r| r.id == "A5228" && r.chain == [Step::PartialSums])
            {
                None => g
                    .problems
                    .push("complement query: partial sums never reach the parent".into()),
                Some(r) => {
                    g.eq("partial-sums match offset", r.offset, 1);
                    g.eq("partial-sums match addend", r.addend.clone(), Int::one());
                }
            }
            g.check(
                results.iter().all(|r| store.verify_superseek(&query, r)),
                || "a reported chain fails replay".into(),
            );

            let zig = entringer(8);
            let zig_results = store.superseek(&zig);
            g.check(
                zig_results
                    .iter()
                    .any(|r| r.id == "A111" && r.chain == [Step::Shift, Step::Boustrophedon]),
                || "zigzag query: shifted transform of itself not found".into(),
            );
        }
    }

    match db::binomial_square_sum(40) {
        Err(e) => g.problems.push(format!("binomial square sums: {e}")),
        Ok(direct) => match db::binomial_square_sum_by_recurrence(40) {
            Err(e) => g.problems.push(format!("three-term recurrence: {e}")),
            Ok(by_rec) => g.check(direct == by_rec, || {
                "sum and recurrence split within 40 terms".into()
            }),
        },
    }

    // sigma(n) - d(n) - phi(n) >= 0 for all 2 <= n <= 10^6, off a
    // smallest-prime-factor table, spot-checked against the direct path
    let limit = 1_000_000usize;
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            for j in (i..=limit).step_by(i) {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
            }
        }
    }
    let mut bad = None;
    for n in 2..=limit {
        let (mut m, mut sigma, mut d, mut phi) = (n as u64, 1u64, 1u64, 1u64);
        while m > 1 {
            let p = spf[m as usize] as u64;
            let (mut pk, mut e) = (1u64, 0u32);
            while m % p == 0 {
                m /= p;
                pk *= p;
                e += 1;
            }
            sigma *= (pk * p - 1) / (p - 1);
            d *= e as u64 + 1;
            phi *= pk - pk / p;
        }
        if sigma < d + phi {
            bad = Some(n);
            break;
        }
        if n % 9973 == 0 {
            let (s_big, d_ref, phi_big, _) = arith_functions(n as u64);
            if s_big != Int::from(sigma) || d_ref != d || phi_big != Int::from(phi) {
                g.problems
                    .push(format!("divisor-function routes disagree at n={n}"));
                break;
            }
        }
    }
    g.check(bad.is_none(), || {
        format!("sigma < d + phi at n={}", bad.unwrap())
    });

    g.note("store round trip, both worked queries, both identities to 10^6".into());
    g.finish()
}
