use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn mobius(mut n: u32) -> i32 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The cyclotomic value `Φ_e(q)`.
pub fn cyclotomic_value(q: u64, e: u32) -> BigUint {
    assert!(e >= 1);
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for d in divisors(e) {
        let f = q.pow(d) - 1u32;
        match mobius(e / d) {
            1 => num *= f,
            -1 => den *= f,
            _ => {}
        }
    }
    num / den
}

/// `Φ_e(q)` with every prime factor of `e` removed. Its prime factors are
/// exactly the Zsigmondy primes for `(q, e)`.
pub fn primitive_part(q: u64, e: u32) -> BigUint {
    let mut n = cyclotomic_value(q, e);
    for l in prime_divisors(e) {
        let l = BigUint::from(l);
        loop {
            let (quot, rem) = n.div_rem(&l);
            if !rem.is_zero() {
                break;
            }
            n = quot;
        }
    }
    n
}

pub fn has_zsigmondy_prime(q: u64, e: u32) -> bool {
    primitive_part(q, e) > BigUint::one()
}

/// Zsigmondy's exceptions for `e ≥ 2`: `(q, e) = (2, 6)`, or `e = 2` with
/// `q + 1` a power of two. For `e = 1` there is also `q = 2`, since `2 - 1 = 1`.
pub fn is_zsigmondy_exception(q: u64, e: u32) -> bool {
    (e == 6 && q == 2) || (e == 2 && (q + 1).is_power_of_two()) || (e == 1 && q == 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZsigmondyPrimes {
    pub q: u64,
    pub e: u32,
    #[serde(serialize_with = "ser_big_set")]
    pub primes: BTreeSet<BigUint>,
    /// Composite cofactors the factorizer gave up on; each is a product of
    /// Zsigmondy primes. Empty in practice for the ranges used here.
    #[serde(serialize_with = "ser_big_vec")]
    pub unfactored: Vec<BigUint>,
}

fn ser_big_set<S: serde::Serializer>(v: &BTreeSet<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn ser_big_vec<S: serde::Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl ZsigmondyPrimes {
    pub fn is_empty(&self) -> bool {
        self.primes.is_empty() && self.unfactored.is_empty()
    }

    pub fn smallest(&self) -> Option<&BigUint> {
        self.primes.iter().next()
    }
}

/// Primes `r` dividing `q^e - 1` but no `q^f - 1` with `f < e`.
pub fn zsigmondy_primes(q: u64, e: u32) -> ZsigmondyPrimes {
    let n = primitive_part(q, e);
    let (primes, unfactored) = if n == BigUint::one() {
        (BTreeSet::new(), Vec::new())
    } else {
        let mut config = num_prime::FactorizationConfig::default();
        config.rho_trials = 200;
        let (found, rest) = num_prime::nt_funcs::factors(n, Some(config));
        (found.into_keys().collect(), rest.unwrap_or_default())
    };
    ZsigmondyPrimes { q, e, primes, unfactored }
}

/// Multiplicative order of `q` modulo `r`, for `r ∤ q`.
pub fn multiplicative_order(q: u64, r: &BigUint) -> u64 {
    let q = BigUint::from(q) % r;
    let mut x = q.clone();
    let mut k = 1;
    while x != BigUint::one() {
        x = (x * &q) % r;
        k += 1;
    }
    k
}

pub fn is_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut m = q;
    let mut k = 0;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> BTreeSet<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn named_cases() {
        assert!(zsigmondy_primes(2, 6).is_empty());
        assert_eq!(zsigmondy_primes(2, 3).primes, set(&[7]));
        assert_eq!(zsigmondy_primes(2, 10).primes, set(&[11]));
        assert!(zsigmondy_primes(7, 2).is_empty());
        assert_eq!(zsigmondy_primes(2, 30).primes, set(&[331]));
        assert_eq!(zsigmondy_primes(2, 12).primes, set(&[13]));
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic_value(2, 6), BigUint::from(3u32));
        assert_eq!(cyclotomic_value(3, 4), BigUint::from(10u32));
        assert_eq!(cyclotomic_value(2, 1), BigUint::from(1u32));
    }

    /// Brute force over primes dividing q^e - 1 for small values.
    fn brute(q: u64, e: u32) -> BTreeSet<BigUint> {
        let n = q.pow(e) - 1;
        let mut out = BTreeSet::new();
        let mut m = n;
        let mut r = 2;
        while m > 1 {
            if m % r == 0 {
                while m % r == 0 {
                    m /= r;
                }
                if (1..e).all(|f| (q.pow(f) - 1) % r != 0) {
                    out.insert(BigUint::from(r));
                }
            }
            r += 1;
            if r * r > m && m > 1 {
                if (1..e).all(|f| (q.pow(f) - 1) % m != 0) {
                    out.insert(BigUint::from(m));
                }
                break;
            }
        }
        out
    }

    #[test]
    fn agrees_with_brute_force() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for e in 1..=10 {
                assert_eq!(zsigmondy_primes(q, e).primes, brute(q, e), "q={q} e={e}");
            }
        }
    }

    #[test]
    fn existence_matches_exception_list() {
        for q in (2..=128).filter(|&q| is_prime_power(q).is_some()) {
            for e in 1..=30 {
                assert_eq!(has_zsigmondy_prime(q, e), !is_zsigmondy_exception(q, e), "q={q} e={e}");
            }
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(is_prime_power(8), Some((2, 3)));
        assert_eq!(is_prime_power(12), None);
        assert_eq!(is_prime_power(1), None);
    }
}
