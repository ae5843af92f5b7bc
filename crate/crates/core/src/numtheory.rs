//! Divisor-sum functions and the derived counts that every closed formula
//! in this crate is built from.
//!
//! All functions are total on positive integers and use checked 64-bit
//! arithmetic; an overflow aborts loudly instead of wrapping.

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors: n must be positive");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Number of positive divisors of `n`.
pub fn sigma0(n: u64) -> u64 {
    divisors(n).len() as u64
}

/// Sum of the positive divisors of `n`.
pub fn sigma1(n: u64) -> u64 {
    divisors(n)
        .into_iter()
        .try_fold(0u64, u64::checked_add)
        .expect("sigma1 overflow")
}

/// Iterated divisor sum: sum of `sigma1(k)` over the divisors `k` of `n`.
pub fn sigma2(n: u64) -> u64 {
    divisors(n)
        .into_iter()
        .map(sigma1)
        .try_fold(0u64, u64::checked_add)
        .expect("sigma2 overflow")
}

/// Sum of `k * sigma1(k)` over the divisors `k` of `n`; counts the
/// index-`n` sublattices of Z^3.
pub fn omega(n: u64) -> u64 {
    divisors(n)
        .into_iter()
        .map(|k| k.checked_mul(sigma1(k)).expect("omega overflow"))
        .try_fold(0u64, u64::checked_add)
        .expect("omega overflow")
}

/// Number of ordered pairs `(s, t)` with `s > 0`, `t >= 0` and
/// `s^2 + t^2 = n`.
pub fn tau(n: u64) -> u64 {
    assert!(n >= 1, "tau: n must be positive");
    let mut count = 0;
    let mut s = 1u64;
    while s * s <= n {
        let rest = n - s * s;
        let t = rest.isqrt();
        if t * t == rest {
            count += 1;
        }
        s += 1;
    }
    count
}

/// Evaluates `f(n / k)` with the convention that the value is 0 whenever
/// `k` does not divide `n`.
pub fn at_ratio<F: Fn(u64) -> u64>(f: F, n: u64, k: u64) -> u64 {
    if k > 0 && n % k == 0 {
        f(n / k)
    } else {
        0
    }
}

/// A frozen cache of one arithmetic function on `1..=N`, filled by a
/// divisor sieve.
#[derive(Debug, Clone)]
pub struct NatFunctionTable {
    values: Vec<u64>,
}

impl NatFunctionTable {
    fn from_values(values: Vec<u64>) -> Self {
        debug_assert!(values.len() >= 2 && values[1] == 1);
        NatFunctionTable { values }
    }

    /// Largest argument stored.
    pub fn len(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn is_empty(&self) -> bool {
        self.values.len() <= 1
    }

    pub fn get(&self, n: u64) -> u64 {
        self.values[n as usize]
    }

    /// `f(n / k)` under the vanishing convention.
    pub fn at_ratio(&self, n: u64, k: u64) -> u64 {
        if k > 0 && n % k == 0 {
            self.get(n / k)
        } else {
            0
        }
    }
}

/// Sieve `sigma0` on `1..=nmax`.
pub fn sigma0_table(nmax: u64) -> NatFunctionTable {
    NatFunctionTable::from_values(divisor_sieve(nmax, |_| 1))
}

/// Sieve `sigma1` on `1..=nmax`.
pub fn sigma1_table(nmax: u64) -> NatFunctionTable {
    NatFunctionTable::from_values(divisor_sieve(nmax, |d| d))
}

/// Sieve `sigma2` on `1..=nmax`.
pub fn sigma2_table(nmax: u64) -> NatFunctionTable {
    let s1 = sigma1_table(nmax);
    NatFunctionTable::from_values(divisor_sieve(nmax, |d| s1.get(d)))
}

/// Sieve `omega` on `1..=nmax`.
pub fn omega_table(nmax: u64) -> NatFunctionTable {
    let s1 = sigma1_table(nmax);
    NatFunctionTable::from_values(divisor_sieve(nmax, |d| {
        d.checked_mul(s1.get(d)).expect("omega sieve overflow")
    }))
}

/// Sieve `tau` on `1..=nmax` via `tau = 1 * chi` where `chi` is the
/// non-principal character mod 4.
pub fn tau_table(nmax: u64) -> NatFunctionTable {
    let n = nmax as usize;
    let mut values = vec![0i64; n + 1];
    let mut d = 1usize;
    while d <= n {
        let chi = if d % 4 == 1 { 1i64 } else { -1i64 };
        let mut m = d;
        while m <= n {
            values[m] += chi;
            m += d;
        }
        d += 2;
    }
    let values = values
        .into_iter()
        .map(|v| u64::try_from(v).expect("tau sieve produced a negative value"))
        .collect();
    NatFunctionTable::from_values(values)
}

fn divisor_sieve<F: Fn(u64) -> u64>(nmax: u64, weight: F) -> Vec<u64> {
    assert!(nmax >= 1);
    let n = nmax as usize;
    let mut values = vec![0u64; n + 1];
    for d in 1..=n {
        let w = weight(d as u64);
        let mut m = d;
        while m <= n {
            values[m] = values[m].checked_add(w).expect("divisor sieve overflow");
            m += d;
        }
    }
    values
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma0_examples() {
        assert_eq!(sigma0(1), 1);
        assert_eq!(sigma0(6), 4);
        assert_eq!(sigma0(16), 5);
    }

    #[test]
    fn sigma1_examples() {
        assert_eq!(sigma1(1), 1);
        assert_eq!(sigma1(2), 3);
        assert_eq!(sigma1(6), 12);
    }

    #[test]
    fn sigma2_examples() {
        assert_eq!(sigma2(1), 1);
        assert_eq!(sigma2(2), 4);
        assert_eq!(sigma2(4), 11);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(2), 7);
        assert_eq!(omega(3), 13);
        assert_eq!(omega(4), 35);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(1), 1);
        assert_eq!(tau(3), 0);
        assert_eq!(tau(5), 2);
        assert_eq!(tau(25), 3);
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(7), vec![1, 7]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn ratio_convention() {
        assert_eq!(at_ratio(omega, 6, 2), omega(3));
        assert_eq!(at_ratio(omega, 6, 4), 0);
        assert_eq!(at_ratio(sigma2, 1, 2), 0);
    }

    #[test]
    fn tables_match_direct_evaluation() {
        let n = 300;
        let s0 = sigma0_table(n);
        let s1 = sigma1_table(n);
        let s2 = sigma2_table(n);
        let om = omega_table(n);
        let tt = tau_table(n);
        for k in 1..=n {
            assert_eq!(s0.get(k), sigma0(k));
            assert_eq!(s1.get(k), sigma1(k));
            assert_eq!(s2.get(k), sigma2(k));
            assert_eq!(om.get(k), omega(k));
            assert_eq!(tt.get(k), tau(k), "tau sieve disagrees at {k}");
        }
    }

    #[test]
    fn multiplicativity() {
        for k in 1..=100u64 {
            for l in 1..=100u64 {
                if gcd(k, l) != 1 {
                    continue;
                }
                assert_eq!(sigma0(k * l), sigma0(k) * sigma0(l));
                assert_eq!(sigma1(k * l), sigma1(k) * sigma1(l));
                assert_eq!(omega(k * l), omega(k) * omega(l));
                assert_eq!(tau(k * l), tau(k) * tau(l));
            }
        }
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
}
