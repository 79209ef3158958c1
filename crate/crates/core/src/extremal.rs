//! Extremal weight enumerators and extremal theta series.
//!
//! Both live in a ring with two generators: the degree-8 enumerator
//! f = x^8 + 14 x^4 y^4 + y^8 with the degree-24 Golay enumerator on the
//! code side, and the E8 theta series with the Leech theta series on the
//! lattice side. "Extremal" pins the unique combination with constant
//! term 1 and as many following coefficients as possible forced to zero.
//!
//! Instead of solving for the g-basis coefficients directly, the solver
//! swaps g for the valuation-1 element D with f^3 - g = c * D (D is
//! u(1-u)^4 for codes, q^2 eta^24 for lattices). In the basis
//! f^{N-3i} D^i the constraint matrix is unit lower triangular, so the
//! whole computation stays in integers; a rational Gaussian elimination
//! over the original basis cross-checks it in the tests.

use crate::bignum::binomial;
use crate::error::{Error, Result};
use crate::series::{e8_theta, eta24, ramanujan_tau, BivariatePoly, QSeries};
use crate::Int;
use num_traits::{One, Signed, Zero};

/// Weight enumerator of the length-8 Hamming code: x^8 + 14 x^4 y^4 + y^8.
pub fn gleason_f() -> BivariatePoly<Int> {
    let mut c = vec![Int::zero(); 9];
    c[0] = Int::one();
    c[4] = Int::from(14);
    c[8] = Int::one();
    BivariatePoly::from_coeffs(c)
}

/// Weight enumerator of the length-24 Golay code.
pub fn golay_g() -> BivariatePoly<Int> {
    let mut c = vec![Int::zero(); 25];
    c[0] = Int::one();
    c[8] = Int::from(759);
    c[12] = Int::from(2576);
    c[16] = Int::from(759);
    c[24] = Int::one();
    BivariatePoly::from_coeffs(c)
}

/// f in the u-coordinate (u stands for y^4/x^4): 1 + 14u + u^2.
fn f_u(cap: usize) -> QSeries<Int> {
    QSeries::from_coeffs(vec![Int::one(), Int::from(14), Int::one()], cap)
}

/// g in the u-coordinate: 1 + 759u^2 + 2576u^3 + 759u^4 + u^6.
#[cfg(test)]
fn g_u(cap: usize) -> QSeries<Int> {
    QSeries::from_coeffs(
        vec![
            Int::one(),
            Int::zero(),
            Int::from(759),
            Int::from(2576),
            Int::from(759),
            Int::zero(),
            Int::one(),
        ],
        cap,
    )
}

/// D = u(1-u)^4 = (f^3 - g)/42 in the u-coordinate.
fn dip_u(cap: usize) -> QSeries<Int> {
    QSeries::from_coeffs(
        vec![
            Int::zero(),
            Int::one(),
            Int::from(-4),
            Int::from(6),
            Int::from(-4),
            Int::one(),
        ],
        cap,
    )
}

/// Shared triangular solve: the unique S = sum_i b_i f^{N-3i} D^i with
/// constant term 1 and coefficients 1..=j zero, truncated at f.trunc().
/// D must have valuation exactly 1 with unit leading coefficient.
fn extremal_series(f: &QSeries<Int>, dip: &QSeries<Int>, n_over_8: u64, j: usize) -> QSeries<Int> {
    let inv_f3 = f.pow(3).inverse().expect("f has constant term 1");
    let mut p = f.pow(n_over_8);
    let mut s = p.clone();
    for i in 1..=j {
        p = &(&p * &inv_f3) * dip;
        debug_assert!(p.coeffs()[..i].iter().all(|c| c.is_zero()));
        debug_assert!(p.coeff(i).is_one());
        let b = -s.coeff(i).clone();
        s = &s + &p.scale(&b);
    }
    debug_assert!(s.coeff(0).is_one());
    s
}

/// Extremal enumerator in the u-coordinate, truncated at `cap`.
fn extremal_u(n: u32, cap: usize) -> Result<QSeries<Int>> {
    if n % 8 != 0 || n == 0 {
        return Err(Error::Invalid(format!(
            "enumerator length must be a positive multiple of 8, got {n}"
        )));
    }
    let j = (n / 24) as usize;
    Ok(extremal_series(&f_u(cap), &dip_u(cap), (n / 8) as u64, j))
}

/// A homogeneous weight enumerator with y-exponents in multiples of 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    poly: BivariatePoly<Int>,
}

impl WeightEnumerator {
    pub fn poly(&self) -> &BivariatePoly<Int> {
        &self.poly
    }

    /// Code length n (the homogeneous degree).
    pub fn length(&self) -> usize {
        self.poly.degree()
    }

    /// Number of codewords of weight w (coefficient of x^{n-w} y^w).
    pub fn weight_count(&self, w: usize) -> &Int {
        self.poly.coeff(w)
    }

    /// (weight, count) pairs for the nonzero counts, ascending.
    pub fn nonzero_weights(&self) -> Vec<(usize, Int)> {
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w, c.clone()))
            .collect()
    }
}

/// The extremal weight enumerator of length n (n a positive multiple
/// of 8): constant term 1, weights 4..=4*floor(n/24) all absent.
pub fn extremal_weight_enumerator(n: u32) -> Result<WeightEnumerator> {
    let cap = (n / 4) as usize;
    let w_u = extremal_u(n, cap)?;
    let j = (n / 24) as usize;
    assert!(
        w_u.coeffs()[1..=j].iter().all(|c| c.is_zero()),
        "forced zeros violated at n={n}"
    );
    let mut c = vec![Int::zero(); n as usize + 1];
    for (t, v) in w_u.coeffs().iter().enumerate() {
        c[4 * t] = v.clone();
    }
    Ok(WeightEnumerator {
        poly: BivariatePoly::from_coeffs(c),
    })
}

const LEADING_COEFF_BUDGET: u32 = 1000;

/// Counts of minimal-weight (4m+4) and next-to-minimal-weight (4m+8)
/// words in the extremal enumerator of length 24m. The degenerate m=0
/// row is 1, 1 as printed (the single empty codeword).
pub fn extremal_leading_coeffs(m: u32) -> Result<(Int, Int)> {
    if m == 0 {
        return Ok((Int::one(), Int::one()));
    }
    if m > LEADING_COEFF_BUDGET {
        return Err(Error::Budget(format!(
            "length {} exceeds the leading-coefficient budget",
            24 * m
        )));
    }
    let cap = m as usize + 2;
    let w_u = extremal_u(24 * m, cap)?;
    Ok((
        w_u.coeff(m as usize + 1).clone(),
        w_u.coeff(m as usize + 2).clone(),
    ))
}

/// The minimal-weight count in closed form: C(24m,5) C(5m-2,m-1) / C(4m+4,5).
/// The division is exact; anything else is an arithmetic bug.
pub fn leading_coeff_closed_form(m: u64) -> Int {
    assert!(m >= 1, "closed form needs m >= 1");
    let num = binomial(24 * m, 5) * binomial(5 * m - 2, m as i64 - 1);
    let den = binomial(4 * m + 4, 5);
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "closed form not integral at m={m}");
    q
}

/// Scans the given m values in order and returns the first length 24m
/// whose next-to-minimal coefficient is negative.
pub fn find_negative_next_coeff(ms: &[u32]) -> Result<Option<u32>> {
    for &m in ms {
        let (_, next) = extremal_leading_coeffs(m)?;
        if next.is_negative() {
            return Ok(Some(24 * m));
        }
    }
    Ok(None)
}

/// The extremal theta series of dimension n (a positive multiple of 8),
/// truncated at q^{2*trunc}: constant term 1 and q^2..q^{2 floor(n/24)}
/// forced to zero. The coefficient of q^{2(floor(n/24)+1)} counts the
/// shortest vectors.
pub fn extremal_theta(n: u32, trunc: usize) -> Result<QSeries<Int>> {
    if n % 8 != 0 || n == 0 {
        return Err(Error::Invalid(format!(
            "dimension must be a positive multiple of 8, got {n}"
        )));
    }
    let j = (n / 24) as usize;
    if trunc < j + 2 {
        return Err(Error::Invalid(format!(
            "truncation {trunc} too small to show the leading term of dimension {n}"
        )));
    }
    let f = e8_theta(trunc);
    let dip = eta24(trunc).shift_up(1);
    Ok(extremal_series(&f, &dip, (n / 8) as u64, j))
}

/// Coefficients of q^2, q^4, ... in q^2 prod (1-q^{2m})^24.
pub fn ramanujan_numbers(count: usize) -> Vec<Int> {
    ramanujan_tau(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{leech_theta, solve_linear};
    use crate::Rat;

    /// Image of a homogeneous p under (x,y) -> (x+y, x-y), divided by
    /// 2^{deg/2}; for the generators this must be p itself.
    fn macwilliams_image(p: &BivariatePoly<Int>) -> BivariatePoly<Int> {
        let n = p.degree();
        let mut c = vec![Int::zero(); n + 1];
        for (j, coeff) in p.coeffs().iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            // (x+y)^{n-j} (x-y)^j contributes to y^t the sum over b of
            // C(n-j, t-b) C(j, b) (-1)^b
            for (t, slot) in c.iter_mut().enumerate() {
                let mut inner = Int::zero();
                for b in 0..=j.min(t) {
                    let term = binomial((n - j) as u64, (t - b) as i64)
                        * binomial(j as u64, b as i64);
                    if b % 2 == 0 {
                        inner += term;
                    } else {
                        inner -= term;
                    }
                }
                *slot += coeff * inner;
            }
        }
        let scale = Int::from(2).pow(n as u32 / 2);
        for v in &mut c {
            let (q, r) = num_integer::Integer::div_rem(&*v, &scale);
            assert!(r.is_zero(), "transform image not divisible by 2^(n/2)");
            *v = q;
        }
        BivariatePoly::from_coeffs(c)
    }

    #[test]
    fn generators_are_transform_fixed() {
        let f = gleason_f();
        let g = golay_g();
        assert_eq!(macwilliams_image(&f), f);
        assert_eq!(macwilliams_image(&g), g);
        // Golay weight distribution sums to 2^12 codewords
        let total: Int = g.coeffs().iter().sum();
        assert_eq!(total, Int::from(4096));
    }

    #[test]
    fn smallest_lengths_reproduce_the_generators() {
        let f = gleason_f();
        assert_eq!(extremal_weight_enumerator(8).unwrap().poly(), &f);
        assert_eq!(extremal_weight_enumerator(16).unwrap().poly(), &(&f * &f));
        assert_eq!(extremal_weight_enumerator(24).unwrap().poly(), &golay_g());
        assert!(extremal_weight_enumerator(12).is_err());
        assert!(extremal_weight_enumerator(0).is_err());
    }

    #[test]
    fn length_72_distribution() {
        let w = extremal_weight_enumerator(72).unwrap();
        assert_eq!(w.length(), 72);
        assert!(w.weight_count(0).is_one());
        for weight in [4usize, 8, 12] {
            assert!(w.weight_count(weight).is_zero());
        }
        assert_eq!(w.weight_count(16), &Int::from(249849));
        assert_eq!(w.weight_count(20), &Int::from(18106704));
        assert_eq!(w.weight_count(24), &Int::from(462962955));
        // every count nonnegative, weights only multiples of 4
        for (weight, count) in w.nonzero_weights() {
            assert_eq!(weight % 4, 0);
            assert!(!count.is_negative());
        }
    }

    #[test]
    fn gaussian_solve_confirms_triangular_solve() {
        for n in (8..=192u32).step_by(8) {
            let cap = (n / 4) as usize;
            let j = (n / 24) as usize;
            // basis f^{(n-24i)/8} g^i in the u-coordinate, as rationals
            let f = f_u(cap);
            let g = g_u(cap);
            let basis: Vec<QSeries<Int>> = (0..=j as u64)
                .map(|i| &f.pow((n as u64 - 24 * i) / 8) * &g.pow(i))
                .collect();
            let rat = |x: &Int| Rat::from_integer(x.clone());
            let matrix: Vec<Vec<Rat>> = (0..=j)
                .map(|row| basis.iter().map(|b| rat(b.coeff(row))).collect())
                .collect();
            let mut rhs = vec![Rat::zero(); j + 1];
            rhs[0] = Rat::one();
            let a = solve_linear(matrix, rhs).expect("extremal system is nonsingular");
            let mut w_rat = QSeries::<Rat>::zero(cap);
            for (ai, b) in a.iter().zip(&basis) {
                w_rat = &w_rat + &b.map(rat).scale(ai);
            }
            let w_int = extremal_u(n, cap).unwrap();
            assert_eq!(w_int.map(rat), w_rat, "bases disagree at n={n}");
            // combination weights sum to 1, so the enumerator counts
            // exactly 2^{n/2} codewords
            let total: Int = w_int.coeffs().iter().sum();
            assert_eq!(total, Int::from(2).pow(n / 2), "n={n}");
            // symmetry in x <-> y
            for t in 0..=cap {
                assert_eq!(w_int.coeff(t), w_int.coeff(cap - t), "n={n} t={t}");
            }
            // minimal-weight count is strictly positive
            assert!(w_int.coeff(j + 1).is_positive(), "n={n}");
        }
    }

    #[test]
    fn minimal_and_next_counts_match_printed_tables() {
        let lead = [
            759u64,
            17296,
            249849,
            3217056,
            39703755,
            481008528,
            5776211364,
            69065734464,
        ];
        let next = [
            2576u64,
            535095,
            18106704,
            369844880,
            6101289120,
            90184804281,
            1251098739072,
            16681003659936,
        ];
        assert_eq!(extremal_leading_coeffs(0).unwrap(), (Int::one(), Int::one()));
        for m in 1..=8u32 {
            let (a, b) = extremal_leading_coeffs(m).unwrap();
            assert_eq!(a, Int::from(lead[m as usize - 1]), "lead m={m}");
            assert_eq!(b, Int::from(next[m as usize - 1]), "next m={m}");
            assert_eq!(leading_coeff_closed_form(m as u64), a, "closed form m={m}");
        }
        assert!(extremal_leading_coeffs(1001).is_err());
    }

    #[test]
    fn closed_form_is_integral_far_out() {
        assert_eq!(leading_coeff_closed_form(1), Int::from(759));
        assert_eq!(leading_coeff_closed_form(3), Int::from(249849));
        assert_eq!(leading_coeff_closed_form(7), Int::from(5776211364u64));
        for m in 1..=40u64 {
            // the assert inside would fire on any non-integral value
            let v = leading_coeff_closed_form(m);
            assert!(v.is_positive());
        }
    }

    #[test]
    fn next_coefficient_goes_negative_at_3696() {
        let small: Vec<u32> = (1..=8).collect();
        assert_eq!(find_negative_next_coeff(&small).unwrap(), None);
        assert_eq!(find_negative_next_coeff(&[153]).unwrap(), None);
        assert_eq!(find_negative_next_coeff(&[153, 154]).unwrap(), Some(3696));
        let (lead, next) = extremal_leading_coeffs(154).unwrap();
        assert!(lead.is_positive());
        assert!(next.is_negative());
    }

    #[test]
    fn theta_reference_counts() {
        // dimension 24 is the Leech lattice exactly
        let theta24 = extremal_theta(24, 8).unwrap();
        assert_eq!(theta24, leech_theta(8));
        let shortest = [
            (24u32, 196560u64),
            (48, 52416000),
            (72, 6218175600),
            (96, 565866362880),
            (120, 45792819072000),
        ];
        for (n, count) in shortest {
            let j = (n / 24) as usize;
            let theta = extremal_theta(n, j + 2).unwrap();
            assert!(theta.coeff(0).is_one());
            assert!(theta.coeffs()[1..=j].iter().all(|c| c.is_zero()));
            assert_eq!(theta.coeff(j + 1), &Int::from(count), "n={n}");
        }
        assert!(extremal_theta(24, 2).is_err());
        assert!(extremal_theta(20, 8).is_err());
    }

    #[test]
    fn ramanujan_prefix_and_leech_reconstruction() {
        let tau = ramanujan_numbers(5);
        let expected: Vec<Int> = [1i64, -24, 252, -1472, 4830]
            .iter()
            .map(|&x| Int::from(x))
            .collect();
        assert_eq!(tau, expected);
        // f^3 - 720 q^2 prod(1-q^{2m})^24 has 196560 at q^4
        let f3 = e8_theta(6).pow(3);
        let correction = eta24(6).shift_up(1).scale(&Int::from(720));
        let leech = &f3 - &correction;
        assert_eq!(leech.coeff(2), &Int::from(196560));
        assert_eq!(leech, leech_theta(6));
    }
}
