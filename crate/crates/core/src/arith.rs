//! Integer helpers: gcd, primality, prime-power factorizations.

use std::collections::BTreeMap;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime → exponent map of a positive integer.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PrimePowerFactorization(BTreeMap<u64, u32>);

impl PrimePowerFactorization {
    pub fn of(mut n: u64) -> Self {
        assert!(n > 0, "factorization of zero");
        let mut map = BTreeMap::new();
        let mut d = 2;
        while d * d <= n {
            while n.is_multiple_of(d) {
                *map.entry(d).or_insert(0) += 1;
                n /= d;
            }
            d += 1;
        }
        if n > 1 {
            *map.entry(n).or_insert(0) += 1;
        }
        PrimePowerFactorization(map)
    }

    pub fn primes(&self) -> Vec<u64> {
        self.0.keys().copied().collect()
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.0.get(&p).copied().unwrap_or(0)
    }

    /// Largest power of `p` dividing the factored integer.
    pub fn part(&self, p: u64) -> u64 {
        p.pow(self.exponent(p))
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.0.iter().map(|(&p, &e)| (p, e))
    }

    pub fn value(&self) -> u64 {
        self.iter().map(|(p, e)| p.pow(e)).product()
    }

    pub fn is_square_free(&self) -> bool {
        self.0.values().all(|&e| e == 1)
    }

    pub fn is_prime_power(&self) -> bool {
        self.0.len() <= 1
    }
}
