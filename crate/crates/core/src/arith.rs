//! Small number-theory helpers: gcd/lcm, trial-division factorization,
//! radicals, and an incremental prime source for divisor labelings.
//!
//! Element orders stay below 10^9 throughout, so deterministic trial
//! division is plenty.

/// Largest order any operation accepts; trial division stays fast below this.
pub const MAX_ORDER: u64 = 1_000_000_000;

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple; panics on overflow (orders are capped well below that).
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Distinct prime divisors in ascending order.
pub fn prime_divisors(m: u64) -> Vec<u64> {
    factorize(m).into_iter().map(|(p, _)| p).collect()
}

/// Product of the distinct prime divisors of `m`; `radical(1) == 1`.
pub fn radical(m: u64) -> u64 {
    prime_divisors(m).into_iter().product::<u64>().max(1)
}

pub fn is_prime(m: u64) -> bool {
    m >= 2 && factorize(m).len() == 1 && factorize(m)[0].1 == 1
}

/// True when `m` is a power of a single prime. 1 is not a prime power.
pub fn is_prime_power(m: u64) -> bool {
    factorize(m).len() == 1
}

/// All divisors of `m`, ascending.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(m) {
        let prev = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    let mut out = m;
    for (p, _) in factorize(m) {
        out = out / p * (p - 1);
    }
    out
}

/// The first `count` primes, ascending. Used to assign one prime per vertex
/// when constructing divisor labelings.
pub fn first_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = 2u64;
    while out.len() < count {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radical_examples() {
        assert_eq!(radical(12), 6);
        assert_eq!(radical(7), 7);
        assert_eq!(radical(1), 1);
        assert_eq!(radical(360), 30);
    }

    #[test]
    fn radical_is_idempotent_and_multiplicative_on_coprimes() {
        for m in 1..500u64 {
            assert_eq!(radical(radical(m)), radical(m));
        }
        for a in 1..60u64 {
            for b in 1..60u64 {
                if gcd(a, b) == 1 {
                    assert_eq!(radical(a * b), radical(a) * radical(b));
                }
            }
        }
    }

    #[test]
    fn divisors_of_12() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn phi_matches_brute_force() {
        for n in 1..200u64 {
            let brute = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n), brute, "phi({n})");
        }
    }

    #[test]
    fn prime_power_check() {
        assert!(is_prime_power(8));
        assert!(is_prime_power(5));
        assert!(!is_prime_power(6));
        assert!(!is_prime_power(1));
    }

    #[test]
    fn first_primes_prefix() {
        assert_eq!(first_primes(6), vec![2, 3, 5, 7, 11, 13]);
    }
}
