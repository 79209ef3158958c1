//! Exact arithmetic substrate: binomials, a prime sieve with segmented
//! extension, deterministic factorization, and the classical divisor
//! functions sigma, d, phi, sigma_3.
//!
//! All routines are deterministic. Primality below 2^64 uses a fixed
//! Miller-Rabin witness set that is known to be exact on that range, so no
//! probabilistic answer is ever returned.

use crate::{Error, Int, Result};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact binomial coefficient C(n, k); 0 when k < 0 or k > n.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for i in 1..=k {
        acc = acc * Int::from(n - k + i) / Int::from(i);
    }
    acc
}

/// Exact n!.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Catalan number C(2n, n) / (n+1).
pub fn catalan(n: u64) -> Int {
    binomial(2 * n, n as i64) / Int::from(n + 1)
}

/// Central binomial coefficient C(n, floor(n/2)).
pub fn central_binomial(n: u64) -> Int {
    binomial(n, (n / 2) as i64)
}

/// Bit-packed sieve of Eratosthenes over 0..=limit with segmented extension.
///
/// Built once, then shared read-only; `extend_to` grows the tables in place
/// when a caller needs more primes than the current capacity holds.
pub struct PrimeSieve {
    limit: u64,
    bits: Vec<u64>,
    primes: Vec<u64>,
}

impl PrimeSieve {
    /// Default capacity used by the command-line tool when nothing else is
    /// configured.
    pub const DEFAULT_LIMIT: u64 = 100_000_000;

    pub fn new(limit: u64) -> Self {
        let limit = limit.max(2);
        let words = (limit as usize / 64) + 1;
        let mut bits = vec![u64::MAX; words];
        clear_bit(&mut bits, 0);
        clear_bit(&mut bits, 1);
        // mask tail bits beyond limit
        let tail_bit = limit as usize % 64;
        if tail_bit < 63 {
            bits[words - 1] &= (1u64 << (tail_bit + 1)) - 1;
        }
        let mut p = 2u64;
        while p * p <= limit {
            if get_bit(&bits, p) {
                let mut m = p * p;
                while m <= limit {
                    clear_bit(&mut bits, m);
                    m += p;
                }
            }
            p += 1;
        }
        let mut primes = Vec::new();
        for n in 2..=limit {
            if get_bit(&bits, n) {
                primes.push(n);
            }
        }
        PrimeSieve { limit, bits, primes }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Grow the sieve to cover 0..=new_limit, re-sieving only the new range.
    pub fn extend_to(&mut self, new_limit: u64) {
        if new_limit <= self.limit {
            return;
        }
        // Base primes must cover sqrt(new_limit).
        let root = num_integer::Roots::sqrt(&new_limit);
        if root > self.limit {
            self.extend_to(root);
        }
        let old_limit = self.limit;
        let words = (new_limit as usize / 64) + 1;
        self.bits.resize(words, 0);
        for n in (old_limit + 1)..=new_limit {
            set_bit(&mut self.bits, n);
        }
        let mut i = 0;
        while i < self.primes.len() {
            let p = self.primes[i];
            if p * p > new_limit {
                break;
            }
            let mut m = (old_limit / p + 1) * p;
            if m < p * p {
                m = p * p;
            }
            while m <= new_limit {
                clear_bit(&mut self.bits, m);
                m += p;
            }
            i += 1;
        }
        for n in (old_limit + 1)..=new_limit {
            if get_bit(&self.bits, n) {
                self.primes.push(n);
            }
        }
        self.limit = new_limit;
    }

    /// Primality of n within capacity.
    pub fn is_prime(&self, n: u64) -> Result<bool> {
        if n > self.limit {
            return Err(Error::Capacity(format!(
                "{n} exceeds sieve limit {}",
                self.limit
            )));
        }
        Ok(get_bit(&self.bits, n))
    }

    /// The n-th prime, 1-indexed (p1 = 2).
    pub fn nth_prime(&self, n: u64) -> Result<u64> {
        if n == 0 {
            return Err(Error::Invalid("nth_prime is 1-indexed".into()));
        }
        self.primes.get(n as usize - 1).copied().ok_or_else(|| {
            Error::Capacity(format!(
                "prime #{n} is beyond sieve limit {} ({} primes held)",
                self.limit,
                self.primes.len()
            ))
        })
    }

    /// pi(x): number of primes not exceeding x.
    pub fn prime_count(&self, x: u64) -> Result<u64> {
        if x > self.limit {
            return Err(Error::Capacity(format!(
                "{x} exceeds sieve limit {}",
                self.limit
            )));
        }
        Ok(self.primes.partition_point(|&p| p <= x) as u64)
    }
}

fn get_bit(bits: &[u64], n: u64) -> bool {
    bits[(n / 64) as usize] >> (n % 64) & 1 == 1
}

fn set_bit(bits: &mut [u64], n: u64) {
    bits[(n / 64) as usize] |= 1 << (n % 64);
}

fn clear_bit(bits: &mut [u64], n: u64) {
    bits[(n / 64) as usize] &= !(1 << (n % 64));
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for any u64.
///
/// The witness set {2,3,...,37} is exact for n < 3.3·10^24, which covers the
/// full u64 range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Deterministic factorization of a positive u64 by trial division, with a
/// primality early-exit on the remaining cofactor.
///
/// Worst case (a semiprime with two ~2^32 factors) walks the 30-wheel to
/// sqrt(n); every input this crate actually factors is far smaller.
pub fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
    let mut d = 7u64;
    let mut w = 0usize;
    while n > 1 {
        if is_prime_u64(n) {
            out.push((n, 1));
            break;
        }
        while d.saturating_mul(d) <= n && n % d != 0 {
            d += WHEEL[w];
            w = (w + 1) % 8;
        }
        if d.saturating_mul(d) > n {
            // composite per the primality test yet no divisor up to sqrt:
            // impossible; defend against it anyway
            out.push((n, 1));
            break;
        }
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        out.push((d, e));
    }
    out.sort_unstable();
    out
}

/// Factorization of a positive integer; inputs beyond u64 are rejected.
pub fn factorize(n: &Int) -> Result<Vec<(u64, u32)>> {
    if !n.is_positive() {
        return Err(Error::Invalid(format!("factorize requires n >= 1, got {n}")));
    }
    let small = n
        .to_u64()
        .ok_or_else(|| Error::FactorRange(n.to_string()))?;
    Ok(factorize_u64(small))
}

/// (sigma(n), d(n), phi(n), sigma3(n)) computed from the factorization of n.
pub fn arith_functions(n: u64) -> (Int, u64, Int, Int) {
    let mut sigma = Int::one();
    let mut d = 1u64;
    let mut phi = Int::one();
    let mut sigma3 = Int::one();
    for (p, e) in factorize_u64(n) {
        let p = Int::from(p);
        let pe = p.pow(e);
        let p3 = p.pow(3);
        sigma *= (&pe * &p - 1) / (&p - 1);
        d *= (e + 1) as u64;
        phi *= &pe / &p * (&p - 1);
        sigma3 *= (pe.pow(3) * &p3 - 1) / (&p3 - 1);
    }
    (sigma, d, phi, sigma3)
}

/// sigma(n) + ... convenience for the one divisor power the theta series
/// needs: the sum of cubes of divisors.
pub fn sigma3(n: u64) -> Int {
    arith_functions(n).3
}

/// Whether every prime factor congruent to 2 or 3 modulo 5 appears to an
/// even power.
pub fn mod5_representable(n: u64) -> bool {
    factorize_u64(n)
        .into_iter()
        .all(|(p, e)| !matches!(p % 5, 2 | 3) || e % 2 == 0)
}

/// Natural log of a positive big integer, accurate enough for asymptotic
/// ratio checks (top 64 bits plus exponent).
pub fn big_ln(x: &Int) -> f64 {
    assert!(x.is_positive(), "big_ln requires x > 0");
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 53;
    let top: Int = x >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), Int::from(6));
        assert_eq!(binomial(24, 5), Int::from(42504));
        for n in 0..40u64 {
            assert_eq!(binomial(n, 0), Int::one());
        }
        assert_eq!(binomial(5, -1), Int::zero());
        assert_eq!(binomial(5, 6), Int::zero());
    }

    #[test]
    fn binomial_matches_repeated_multiplication_oracle() {
        // C(n,k) = n·(n−1)···(n−k+1) / k! computed the slow way.
        let naive = |n: u64, k: u64| -> Int {
            let mut num = Int::one();
            for i in 0..k {
                num *= Int::from(n - i);
            }
            num / factorial(k)
        };
        assert_eq!(binomial(24, 5), naive(24, 5));
        assert_eq!(binomial(60, 17), naive(60, 17));
    }

    #[test]
    fn binomial_pascal_recurrence() {
        for n in 1..=60u64 {
            for k in 0..=n as i64 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k)
                );
            }
        }
    }

    #[test]
    fn sieve_basics() {
        let sieve = PrimeSieve::new(1000);
        assert_eq!(sieve.nth_prime(1).unwrap(), 2);
        assert_eq!(sieve.prime_count(10).unwrap(), 4);
        assert_eq!(sieve.prime_count(2).unwrap(), 1);
        assert!(sieve.is_prime(997).unwrap());
        assert!(!sieve.is_prime(999).unwrap());
        assert!(sieve.nth_prime(0).is_err());
        assert!(sieve.prime_count(1001).is_err());
    }

    #[test]
    fn sieve_against_independent_oracle() {
        // Odd-only trial division oracle.
        let sieve = PrimeSieve::new(100_000);
        let mut count = 0;
        for n in 0..=100_000u64 {
            let mut prime = n >= 2;
            let mut d = 2;
            while d * d <= n {
                if n % d == 0 {
                    prime = false;
                    break;
                }
                d += 1;
            }
            assert_eq!(sieve.is_prime(n).unwrap(), prime, "disagree at {n}");
            if prime {
                count += 1;
            }
        }
        assert_eq!(sieve.prime_count(100_000).unwrap(), count);
    }

    #[test]
    fn sieve_extension_matches_fresh_sieve() {
        let mut grown = PrimeSieve::new(100);
        grown.extend_to(50_000);
        let fresh = PrimeSieve::new(50_000);
        assert_eq!(grown.primes(), fresh.primes());
        assert_eq!(grown.limit(), 50_000);
    }

    #[test]
    fn pi_of_one_million() {
        let sieve = PrimeSieve::new(1_000_000);
        assert_eq!(sieve.prime_count(1_000_000).unwrap(), 78_498);
    }

    #[test]
    fn nth_prime_prime_count_inverse() {
        let sieve = PrimeSieve::new(1_300_003);
        for n in (1..=100_000u64).step_by(997) {
            let p = sieve.nth_prime(n).unwrap();
            assert_eq!(sieve.prime_count(p).unwrap(), n);
        }
        let p = sieve.nth_prime(100_000).unwrap();
        assert_eq!(sieve.prime_count(p).unwrap(), 100_000);
    }

    #[test]
    fn miller_rabin_agrees_with_sieve() {
        let sieve = PrimeSieve::new(100_000);
        for n in 0..=100_000u64 {
            assert_eq!(is_prime_u64(n), sieve.is_prime(n).unwrap(), "at {n}");
        }
        assert!(is_prime_u64(9_737_333));
        assert!(is_prime_u64(2_586_559_730_396_077));
        assert!(!is_prime_u64(2_586_559_730_396_079));
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize_u64(1).is_empty());
        assert_eq!(factorize_u64(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize_u64(9_737_333), vec![(9_737_333, 1)]);
        // trial-division oracle for the primality of 9737333
        let n = 9_737_333u64;
        let mut d = 2;
        while d * d <= n {
            assert_ne!(n % d, 0);
            d += 1;
        }
    }

    #[test]
    fn factorize_reconstructs() {
        for n in 1..=100_000u64 {
            let prod: u64 = factorize_u64(n)
                .into_iter()
                .map(|(p, e)| p.pow(e))
                .product();
            assert_eq!(prod, n);
        }
    }

    #[test]
    fn arith_function_examples() {
        let one = arith_functions(1);
        assert_eq!(one, (Int::one(), 1, Int::one(), Int::one()));
        let six = arith_functions(6);
        assert_eq!(six, (Int::from(12), 4, Int::from(2), Int::from(252)));
        // sigma - d - phi at n = 4
        let (s, d, phi, _) = arith_functions(4);
        assert_eq!(s - Int::from(d) - phi, Int::from(2));
    }

    #[test]
    fn arith_functions_match_divisor_loop_oracle() {
        for n in 1..=2000u64 {
            let mut sigma = Int::zero();
            let mut d = 0u64;
            let mut sigma3 = Int::zero();
            let mut phi = Int::zero();
            for k in 1..=n {
                if n % k == 0 {
                    sigma += Int::from(k);
                    sigma3 += Int::from(k).pow(3);
                    d += 1;
                }
                if num_integer::gcd(n, k) == 1 {
                    phi += Int::one();
                }
            }
            assert_eq!(arith_functions(n), (sigma, d, phi, sigma3), "at {n}");
        }
    }

    #[test]
    fn divisor_functions_are_multiplicative() {
        // 10^4 deterministic pseudo-random coprime pairs.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut checked = 0;
        while checked < 10_000 {
            let m = next() % 3_000 + 1;
            let n = next() % 3_000 + 1;
            if num_integer::gcd(m, n) != 1 {
                continue;
            }
            let (sm, dm, pm, s3m) = arith_functions(m);
            let (sn, dn, pn, s3n) = arith_functions(n);
            let (smn, dmn, pmn, s3mn) = arith_functions(m * n);
            assert_eq!(smn, sm * sn);
            assert_eq!(dmn, dm * dn);
            assert_eq!(pmn, pm * pn);
            assert_eq!(s3mn, s3m * s3n);
            checked += 1;
        }
    }

    #[test]
    fn mod5_prefix() {
        let want = [1u64, 4, 5, 9, 11, 16, 19, 20, 25, 29, 31, 36];
        let got: Vec<u64> = (1..=36).filter(|&n| mod5_representable(n)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn big_ln_accuracy() {
        let x = factorial(100);
        // Stirling: ln(100!) ≈ 363.73937...
        assert!((big_ln(&x) - 363.7393755555635).abs() < 1e-9);
        let y = Int::from(12345u64);
        assert!((big_ln(&y) - (12345f64).ln()).abs() < 1e-12);
    }

    #[test]
    fn catalan_and_central_binomial() {
        let cat: Vec<u64> = (0..10).map(|n| catalan(n).to_u64().unwrap()).collect();
        assert_eq!(cat, [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
        let central: Vec<u64> = (0..11)
            .map(|n| central_binomial(n).to_u64().unwrap())
            .collect();
        assert_eq!(central, [1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252]);
    }
}
