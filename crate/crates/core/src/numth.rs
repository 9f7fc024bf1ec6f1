//! Integer arithmetic behind the counting formulas: gcd/lcm, trial-division
//! factorization, Euler's totient and totatives.

use alloc::vec::Vec;

use crate::{Error, Result};

/// Greatest common divisor. `gcd(0, b) = b`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Err(Error::Zero);
    }
    (a / gcd(a, b)).checked_mul(b).ok_or(Error::Overflow("lcm"))
}

/// `n` together with its prime factorization, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    pub fn value(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs with distinct ascending primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Multiplies the prime powers back together.
    pub fn reconstruct(&self) -> Result<u64> {
        self.factors.iter().try_fold(1u64, |acc, &(p, k)| {
            p.checked_pow(k)
                .and_then(|q| acc.checked_mul(q))
                .ok_or(Error::Overflow("prime power product"))
        })
    }
}

pub fn factorize(n: u64) -> Result<FactoredInteger> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut k = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                k += 1;
            }
            factors.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(FactoredInteger { n, factors })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && matches!(factorize(n), Ok(f) if f.factors == [(n, 1)])
}

/// Euler's totient via `prod (p^k - p^(k-1))`.
pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.factors
        .iter()
        .map(|&(p, k)| p.pow(k - 1) * (p - 1))
        .product())
}

/// All `x` in `[1, n]` coprime to `n`, ascending.
pub fn totatives(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Zero);
    }
    Ok((1..=n).filter(|&x| gcd(x, n) == 1).collect())
}

/// Multiplicative order of `a` modulo `m`; `None` unless `gcd(a, m) = 1`.
/// Modulo 1 every unit has order 1.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 0 || gcd(a % m, m) != 1 && m != 1 {
        return None;
    }
    if m == 1 {
        return Some(1);
    }
    let a = a % m;
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = ((x as u128 * a as u128) % m as u128) as u64;
        k += 1;
    }
    Some(k)
}

/// `p^k - p^(k-1)`, the number of generators of a cyclic group of order `p^k`.
pub fn prime_power_aut_order(p: u64, k: u32) -> Result<u64> {
    if p == 0 || k == 0 {
        return Err(Error::Zero);
    }
    let top = p.checked_pow(k).ok_or(Error::Overflow("p^k"))?;
    Ok(top - top / p)
}

/// `prod_{x=0}^{m-1} (p^m - p^x)`, the number of automorphisms of `(Z_p)^m`.
pub fn elementary_abelian_aut_order(p: u64, m: u32) -> Result<u64> {
    if p == 0 {
        return Err(Error::Zero);
    }
    let pm = p.checked_pow(m).ok_or(Error::Overflow("p^m"))?;
    let mut acc = 1u64;
    let mut px = 1u64;
    for _ in 0..m {
        acc = acc
            .checked_mul(pm - px)
            .ok_or(Error::Overflow("prod (p^m - p^x)"))?;
        px *= p;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn phi_by_scan(n: u64) -> u64 {
        (1..=n).filter(|&x| gcd(x, n) == 1).count() as u64
    }

    #[test]
    fn gcd_lcm_examples() {
        assert_eq!(gcd(1, 1), 1);
        assert_eq!(gcd(8, 12), 4);
        assert_eq!(gcd(7, 8), 1);
        assert_eq!(lcm(1, 9).unwrap(), 9);
        assert_eq!(lcm(4, 6).unwrap(), 12);
        assert_eq!(lcm(2, 3).unwrap(), 6);
        assert_eq!(lcm(u64::MAX, u64::MAX - 1), Err(Error::Overflow("lcm")));
        assert_eq!(lcm(0, 3), Err(Error::Zero));
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(8).unwrap().factors(), &[(2, 3)]);
        assert_eq!(factorize(0), Err(Error::Zero));
        assert_eq!(factorize(999_983).unwrap().factors(), &[(999_983, 1)]);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(8).unwrap(), 4);
        assert_eq!(euler_phi(9).unwrap(), 6);
        assert_eq!(euler_phi(0), Err(Error::Zero));
    }

    #[test]
    fn totative_examples() {
        assert_eq!(totatives(1).unwrap(), vec![1]);
        assert_eq!(totatives(8).unwrap(), vec![1, 3, 5, 7]);
        assert_eq!(totatives(12).unwrap(), vec![1, 5, 7, 11]);
        assert!(totatives(0).is_err());
    }

    #[test]
    fn phi_matches_scan() {
        for n in 1..=500 {
            let phi = euler_phi(n).unwrap();
            assert_eq!(phi, phi_by_scan(n), "n = {n}");
            assert_eq!(phi as usize, totatives(n).unwrap().len());
            assert_eq!(factorize(n).unwrap().reconstruct().unwrap(), n);
        }
    }

    #[test]
    fn phi_odd_doubling_and_multiplicativity() {
        for n in (1..400).step_by(2) {
            assert_eq!(euler_phi(n).unwrap(), euler_phi(2 * n).unwrap());
        }
        for m in 1..40 {
            for n in 1..40 {
                if gcd(m, n) == 1 {
                    assert_eq!(
                        euler_phi(m * n).unwrap(),
                        euler_phi(m).unwrap() * euler_phi(n).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn counting_formulas() {
        assert_eq!(prime_power_aut_order(3, 2).unwrap(), 6);
        assert_eq!(prime_power_aut_order(2, 1).unwrap(), 1);
        assert_eq!(prime_power_aut_order(5, 2).unwrap(), 20);
        assert_eq!(elementary_abelian_aut_order(2, 2).unwrap(), 6);
        assert_eq!(elementary_abelian_aut_order(2, 3).unwrap(), 168);
        assert_eq!(elementary_abelian_aut_order(3, 2).unwrap(), 48);
        assert_eq!(elementary_abelian_aut_order(2, 4).unwrap(), 20160);
        assert!(matches!(
            elementary_abelian_aut_order(2, 40),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn multiplicative_orders() {
        assert_eq!(multiplicative_order(2, 9), Some(6));
        assert_eq!(multiplicative_order(3, 8), Some(2));
        assert_eq!(multiplicative_order(2, 8), None);
        assert_eq!(multiplicative_order(5, 1), Some(1));
        assert!(is_prime(7) && !is_prime(1) && !is_prime(9));
    }
}
