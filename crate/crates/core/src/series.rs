//! Exact truncated power series and homogeneous bivariate polynomials.
//!
//! [`QSeries`] is a series in q²: index m holds the coefficient of q^{2m}.
//! Every displayed lattice series has even exponents only, so stepping by q²
//! halves storage and makes the index equal to half the exponent.
//!
//! [`BivariatePoly`] is homogeneous of a fixed total degree n; entry j holds
//! the coefficient of x^{n−j} y^j.
//!
//! Both are generic over the coefficient ring; the crate instantiates them
//! with [`crate::Int`] and [`crate::Rat`].

use crate::bignum::sigma3;
use crate::{Error, Int, Result};
use num_traits::{One, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Coefficient ring bound: exact, clonable, with 0/1/negation.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

/// Truncated power series in q²; index m is the coefficient of q^{2m}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries<T> {
    trunc: usize,
    c: Vec<T>,
}

impl<T: Coeff> QSeries<T> {
    pub fn zero(trunc: usize) -> Self {
        QSeries {
            trunc,
            c: vec![T::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.c[0] = T::one();
        s
    }

    /// Build from explicit coefficients, padding with zeros up to trunc.
    pub fn from_coeffs(coeffs: Vec<T>, trunc: usize) -> Self {
        let mut c = coeffs;
        c.truncate(trunc + 1);
        c.resize(trunc + 1, T::zero());
        QSeries { trunc, c }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Coefficient of q^{2m}.
    pub fn coeff(&self, m: usize) -> &T {
        &self.c[m]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        QSeries::from_coeffs(self.c[..=trunc.min(self.trunc)].to_vec(), trunc)
    }

    /// Multiply by q^{2k} (drop coefficients past the truncation order).
    pub fn shift_up(&self, k: usize) -> Self {
        let mut c = vec![T::zero(); self.trunc + 1];
        for m in k..=self.trunc {
            c[m] = self.c[m - k].clone();
        }
        QSeries { trunc: self.trunc, c }
    }

    pub fn scale(&self, f: &T) -> Self {
        QSeries {
            trunc: self.trunc,
            c: self.c.iter().map(|x| x.clone() * f.clone()).collect(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.trunc);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse; requires constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        if !self.c[0].is_one() {
            return Err(Error::Invalid(
                "series inverse requires constant term 1".into(),
            ));
        }
        let mut b = vec![T::zero(); self.trunc + 1];
        b[0] = T::one();
        for m in 1..=self.trunc {
            let mut acc = T::zero();
            for i in 1..=m {
                if !self.c[i].is_zero() {
                    acc = acc + self.c[i].clone() * b[m - i].clone();
                }
            }
            b[m] = -acc;
        }
        Ok(QSeries {
            trunc: self.trunc,
            c: b,
        })
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> QSeries<U> {
        QSeries {
            trunc: self.trunc,
            c: self.c.iter().map(f).collect(),
        }
    }
}

impl<T: Coeff> Add for &QSeries<T> {
    type Output = QSeries<T>;
    fn add(self, rhs: Self) -> QSeries<T> {
        let trunc = self.trunc.min(rhs.trunc);
        QSeries {
            trunc,
            c: (0..=trunc)
                .map(|m| self.c[m].clone() + rhs.c[m].clone())
                .collect(),
        }
    }
}

impl<T: Coeff> Sub for &QSeries<T> {
    type Output = QSeries<T>;
    fn sub(self, rhs: Self) -> QSeries<T> {
        let trunc = self.trunc.min(rhs.trunc);
        QSeries {
            trunc,
            c: (0..=trunc)
                .map(|m| self.c[m].clone() - rhs.c[m].clone())
                .collect(),
        }
    }
}

impl<T: Coeff> Mul for &QSeries<T> {
    type Output = QSeries<T>;
    fn mul(self, rhs: Self) -> QSeries<T> {
        let trunc = self.trunc.min(rhs.trunc);
        let mut c = vec![T::zero(); trunc + 1];
        for i in 0..=trunc {
            if i > self.trunc || self.c[i].is_zero() {
                continue;
            }
            for j in 0..=(trunc - i).min(rhs.trunc) {
                if rhs.c[j].is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].clone() + self.c[i].clone() * rhs.c[j].clone();
            }
        }
        QSeries { trunc, c }
    }
}

/// The 24th power of the Euler product: prod_{m>=1} (1 - q^{2m})^24,
/// truncated at q^{2·trunc}.
pub fn eta24(trunc: usize) -> QSeries<Int> {
    let mut euler = QSeries::<Int>::one(trunc);
    // in-place sparse multiply by (1 - u^m) for each m
    for m in 1..=trunc {
        for j in (m..=trunc).rev() {
            let v = euler.c[j].clone() - euler.c[j - m].clone();
            euler.c[j] = v;
        }
    }
    let e2 = &euler * &euler;
    let e4 = &e2 * &e2;
    let e8 = &e4 * &e4;
    let e16 = &e8 * &e8;
    &e16 * &e8
}

/// Ramanujan numbers: coefficients of q²·eta24, 1-indexed (tau(1) = 1).
pub fn ramanujan_tau(count: usize) -> Vec<Int> {
    let e = eta24(count.saturating_sub(1));
    (0..count).map(|m| e.coeff(m).clone()).collect()
}

/// Theta series of the 8-dimensional even unimodular lattice:
/// 1 + 240 sum sigma3(m) q^{2m}.
pub fn e8_theta(trunc: usize) -> QSeries<Int> {
    let mut c = vec![Int::zero(); trunc + 1];
    c[0] = Int::one();
    for (m, slot) in c.iter_mut().enumerate().skip(1) {
        *slot = sigma3(m as u64) * 240;
    }
    QSeries { trunc, c }
}

/// Theta series of the Leech lattice: f³ − 720·q²·eta24 with f the
/// 8-dimensional theta series.
pub fn leech_theta(trunc: usize) -> QSeries<Int> {
    let f3 = e8_theta(trunc).pow(3);
    let disc = eta24(trunc).shift_up(1).scale(&Int::from(720));
    &f3 - &disc
}

/// Homogeneous bivariate polynomial of total degree n;
/// entry j is the coefficient of x^{n−j} y^j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePoly<T> {
    c: Vec<T>,
}

impl<T: Coeff> BivariatePoly<T> {
    pub fn zero(degree: usize) -> Self {
        BivariatePoly {
            c: vec![T::zero(); degree + 1],
        }
    }

    /// Build from coefficients c[j] of x^{n−j}y^j; degree is len−1.
    pub fn from_coeffs(c: Vec<T>) -> Self {
        assert!(!c.is_empty(), "a homogeneous polynomial needs degree >= 0");
        BivariatePoly { c }
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    /// Coefficient of x^{n−j} y^j.
    pub fn coeff(&self, j: usize) -> &T {
        &self.c[j]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn scale(&self, f: &T) -> Self {
        BivariatePoly {
            c: self.c.iter().map(|x| x.clone() * f.clone()).collect(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = BivariatePoly::from_coeffs(vec![T::one()]);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> BivariatePoly<U> {
        BivariatePoly {
            c: self.c.iter().map(f).collect(),
        }
    }
}

impl<T: Coeff> Add for &BivariatePoly<T> {
    type Output = BivariatePoly<T>;
    fn add(self, rhs: Self) -> BivariatePoly<T> {
        assert_eq!(
            self.degree(),
            rhs.degree(),
            "sum of homogeneous polynomials needs equal degrees"
        );
        BivariatePoly {
            c: self
                .c
                .iter()
                .zip(&rhs.c)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Coeff> Sub for &BivariatePoly<T> {
    type Output = BivariatePoly<T>;
    fn sub(self, rhs: Self) -> BivariatePoly<T> {
        assert_eq!(self.degree(), rhs.degree());
        BivariatePoly {
            c: self
                .c
                .iter()
                .zip(&rhs.c)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Coeff> Mul for &BivariatePoly<T> {
    type Output = BivariatePoly<T>;
    fn mul(self, rhs: Self) -> BivariatePoly<T> {
        let deg = self.degree() + rhs.degree();
        let mut c = vec![T::zero(); deg + 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        BivariatePoly { c }
    }
}

/// Exact Gaussian elimination over a field; returns the unique solution of
/// a·x = b or an error when the matrix is singular.
pub fn solve_linear<T>(mut a: Vec<Vec<T>>, mut b: Vec<T>) -> Result<Vec<T>>
where
    T: Coeff + Div<Output = T>,
{
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|row| row.len() == n));
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::Singular)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / a[col][col].clone();
            for k in col..n {
                let v = a[r][k].clone() - factor.clone() * a[col][k].clone();
                a[r][k] = v;
            }
            let v = b[r].clone() - factor * b[col].clone();
            b[r] = v;
        }
    }
    let mut x = vec![T::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for k in (row + 1)..n {
            acc = acc - a[row][k].clone() * x[k].clone();
        }
        x[row] = acc / a[row][row].clone();
    }
    Ok(x)
}
