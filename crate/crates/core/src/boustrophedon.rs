//! The ox-plowing (boustrophedon) transform and its eigen-sequences.
//!
//! A triangle is seeded down one side with the input sequence and filled
//! in alternating directions; the opposite ends form the output. The same
//! map is a binomial convolution against the zigzag numbers, and both
//! computations live here so each can check the other.

use crate::bignum::binomial;
use crate::error::{Error, Result};
use crate::Int;
use num_traits::Zero;

/// The filled triangle. Row n is kept in filling order: entry 0 is the
/// input term a_n, and entry i = entry i-1 + (row n-1's entry n-i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoustroTriangle {
    rows: Vec<Vec<Int>>,
}

impl BoustroTriangle {
    pub fn from_input(a: &[Int]) -> Self {
        let mut rows: Vec<Vec<Int>> = Vec::with_capacity(a.len());
        for (n, seed) in a.iter().enumerate() {
            let mut row = Vec::with_capacity(n + 1);
            row.push(seed.clone());
            for i in 1..=n {
                let above = &rows[n - 1][n - i];
                let prev = &row[i - 1];
                row.push(prev + above);
            }
            rows.push(row);
        }
        BoustroTriangle { rows }
    }

    /// Rows in filling order.
    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    /// Rows as printed: odd rows run left to right in filling order,
    /// even rows are written right to left, so their display is reversed.
    pub fn display_rows(&self) -> Vec<Vec<Int>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(n, row)| {
                if n % 2 == 0 {
                    row.iter().rev().cloned().collect()
                } else {
                    row.clone()
                }
            })
            .collect()
    }

    /// The output sequence: the last-filled entry of each row.
    pub fn ends(&self) -> Vec<Int> {
        self.rows
            .iter()
            .map(|row| row.last().cloned().expect("rows are nonempty"))
            .collect()
    }
}

/// Output of the transform, via the triangle.
pub fn boustrophedon_transform(a: &[Int]) -> Vec<Int> {
    BoustroTriangle::from_input(a).ends()
}

/// The zigzag numbers 1, 1, 1, 2, 5, 16, 61, ...: the transform of
/// 1, 0, 0, ... and the EGF coefficients of sec x + tan x.
pub fn entringer(count: usize) -> Vec<Int> {
    let mut delta = vec![Int::zero(); count];
    if count > 0 {
        delta[0] = Int::from(1);
    }
    boustrophedon_transform(&delta)
}

/// Output of the transform, via b_n = sum_k C(n,k) a_k E_{n-k}.
/// Must agree with the triangle everywhere.
pub fn boustrophedon_by_convolution(a: &[Int]) -> Vec<Int> {
    let e = entringer(a.len());
    (0..a.len())
        .map(|n| {
            (0..=n)
                .map(|k| binomial(n as u64, k as i64) * &a[k] * &e[n - k])
                .sum()
        })
        .collect()
}

/// Secant numbers (even-row ends) and tangent numbers (odd-row ends) of
/// the triangle seeded with 1, 0, 0, ...
pub fn secant_tangent_numbers(count: usize) -> (Vec<Int>, Vec<Int>) {
    let e = entringer(2 * count);
    let sec = e.iter().step_by(2).cloned().collect();
    let tan = e.iter().skip(1).step_by(2).cloned().collect();
    (sec, tan)
}

/// The lexicographically earliest sequence with a nonzero first term
/// whose transform, shifted `shift` places left, reproduces it: the
/// first `shift` terms are free (minimized), every later term is forced
/// by a_{n+shift} = b_n.
pub fn eigen_shift_solver(shift: u8, count: usize) -> Result<Vec<Int>> {
    if !(1..=2).contains(&shift) {
        return Err(Error::Invalid(format!("shift must be 1 or 2, got {shift}")));
    }
    let e = entringer(count);
    let mut a: Vec<Int> = Vec::with_capacity(count);
    a.push(Int::from(1));
    if shift == 2 && count > 1 {
        a.push(Int::zero());
    }
    while a.len() < count {
        let n = a.len() - shift as usize;
        let next: Int = (0..=n)
            .map(|k| binomial(n as u64, k as i64) * &a[k] * &e[n - k])
            .sum();
        a.push(next);
    }
    a.truncate(count);
    Ok(a)
}

/// True iff the 1-indexed sequence shifts one place left under the
/// divisor-sum map, i.e. a_{n+1} = sum over d | n of a_d for every n
/// with both sides in range.
pub fn moebius_eigen_check(a: &[Int]) -> bool {
    for n in 1..a.len() {
        let sum: Int = (1..=n).filter(|d| n % d == 0).map(|d| a[d - 1].clone()).sum();
        if sum != a[n] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn zigzag_triangle_prints_exactly() {
        let mut delta = vec![Int::zero(); 8];
        delta[0] = Int::from(1);
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
        assert_eq!(t.display_rows(), expected);
        assert_eq!(
            entringer(10),
            ints(&[1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936])
        );
    }

    #[test]
    fn all_ones_triangle_prints_exactly() {
        let ones = vec![Int::from(1); 8];
        let t = BoustroTriangle::from_input(&ones);
        let expected: Vec<Vec<Int>> = [
            vec![1i64],
            vec![1, 2],
            vec![4, 3, 1],
            vec![1, 5, 8, 9],
            vec![24, 23, 18, 10, 1],
            vec![1, 25, 48, 66, 76, 77],
        ]
        .iter()
        .map(|r| ints(r))
        .collect();
        assert_eq!(&t.display_rows()[..6], &expected[..]);
        assert_eq!(t.ends(), ints(&[1, 2, 4, 9, 24, 77, 294, 1309]));
    }

    #[test]
    fn zero_input_stays_zero() {
        let zeros = vec![Int::zero(); 12];
        assert!(boustrophedon_transform(&zeros).iter().all(|b| b.is_zero()));
        assert!(boustrophedon_transform(&[]).is_empty());
    }

    #[test]
    fn transform_is_linear() {
        let mut state = 0x6c078965u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 41) as i64 - 20
        };
        for _ in 0..20 {
            let a: Vec<Int> = (0..30).map(|_| Int::from(next())).collect();
            let b: Vec<Int> = (0..30).map(|_| Int::from(next())).collect();
            let (alpha, beta) = (Int::from(next()), Int::from(next()));
            let mixed: Vec<Int> = a
                .iter()
                .zip(&b)
                .map(|(x, y)| &alpha * x + &beta * y)
                .collect();
            let ta = boustrophedon_transform(&a);
            let tb = boustrophedon_transform(&b);
            let lhs = boustrophedon_transform(&mixed);
            let rhs: Vec<Int> = ta
                .iter()
                .zip(&tb)
                .map(|(x, y)| &alpha * x + &beta * y)
                .collect();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn triangle_and_convolution_agree() {
        let mut state = 0xdeadbeefcafef00du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 2001) as i64 - 1000
        };
        for _ in 0..200 {
            let a: Vec<Int> = (0..25).map(|_| Int::from(next())).collect();
            assert_eq!(boustrophedon_transform(&a), boustrophedon_by_convolution(&a));
        }
    }

    #[test]
    fn secant_and_tangent_prefixes() {
        let (sec, tan) = secant_tangent_numbers(7);
        assert_eq!(sec, ints(&[1, 1, 5, 61, 1385, 50521, 2702765]));
        assert_eq!(tan, ints(&[1, 2, 16, 272, 7936, 353792, 22368256]));
        // tangent numbers sit at the odd EGF slots of the zigzag list,
        // matching the displayed Taylor prefix of tan x
        let e = entringer(8);
        assert_eq!(e[1], Int::from(1));
        assert_eq!(e[3], Int::from(2));
        assert_eq!(e[5], Int::from(16));
        assert_eq!(e[7], Int::from(272));
    }

    /// Permutations of 1..=n that alternately fall and rise, counted by
    /// brute force, pin the zigzag numbers for small n.
    #[test]
    fn alternating_permutations_count_zigzags() {
        fn count_alternating(n: usize) -> u64 {
            if n == 0 {
                return 1;
            }
            let mut perm: Vec<usize> = (1..=n).collect();
            let mut count = 0u64;
            loop {
                let ok = perm
                    .windows(2)
                    .enumerate()
                    .all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] });
                if ok {
                    count += 1;
                }
                // next_permutation in lexicographic order
                let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
                    break;
                };
                let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
                perm.swap(i, j);
                perm[i + 1..].reverse();
            }
            count
        }
        let e = entringer(9);
        for n in 0..=8 {
            assert_eq!(Int::from(count_alternating(n)), e[n], "n={n}");
        }
        assert_eq!(count_alternating(4), 5);
    }

    #[test]
    fn shift_eigen_sequences() {
        let one = eigen_shift_solver(1, 12).unwrap();
        assert_eq!(
            one,
            ints(&[1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765])
        );
        // defining property: the transform is the sequence moved one left
        let t = boustrophedon_transform(&one);
        assert_eq!(&t[..11], &one[1..]);
        // prepending the dropped 1 recovers the zigzag list itself
        let mut with_one = vec![Int::from(1)];
        with_one.extend_from_slice(&one[..9]);
        assert_eq!(with_one, entringer(10));

        let two = eigen_shift_solver(2, 11).unwrap();
        assert_eq!(two, ints(&[1, 0, 1, 1, 2, 6, 17, 62, 259, 1230, 6592]));
        let t2 = boustrophedon_transform(&two);
        assert_eq!(&t2[..9], &two[2..]);
        assert_eq!(eigen_shift_solver(2, 3).unwrap(), ints(&[1, 0, 1]));

        assert!(eigen_shift_solver(0, 5).is_err());
        assert!(eigen_shift_solver(3, 5).is_err());
    }

    #[test]
    fn divisor_sum_shift_checker() {
        let achiral = ints(&[1, 1, 2, 3, 5, 6, 10, 11, 16, 19, 26]);
        assert!(moebius_eigen_check(&achiral));
        assert!(!moebius_eigen_check(&ints(&[1, 1, 1, 1])));
        assert!(moebius_eigen_check(&ints(&[1])));
        // breaking one term is detected
        let mut bent = achiral.clone();
        bent[7] += 1;
        assert!(!moebius_eigen_check(&bent));
    }
}
