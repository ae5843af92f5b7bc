//! Truncated Dirichlet-series algebra: coefficient sequences under
//! Dirichlet convolution, enough to evaluate every generating-function
//! identity for the covering counts coefficientwise.
//!
//! Expressions like `1 - 2^{-s}` are finite-support series, so every
//! identity reduces to convolve / scale / add; there is no symbolic
//! engine.

use crate::closed_forms::{is_legal_pair, AmbientManifold, CountError, CountKind};
use crate::plets::IsoType;

/// Coefficients `f(1..=N)` of a truncated Dirichlet series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletSeries {
    coeffs: Vec<i64>,
}

impl DirichletSeries {
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty());
        DirichletSeries { coeffs }
    }

    pub fn from_fn<F: Fn(u64) -> i64>(n: u64, f: F) -> Self {
        assert!(n >= 1);
        DirichletSeries {
            coeffs: (1..=n).map(f).collect(),
        }
    }

    /// The multiplicative unit: `f(1) = 1`, zero elsewhere.
    pub fn unit(n: u64) -> Self {
        Self::from_fn(n, |k| i64::from(k == 1))
    }

    /// A finite-support series from `(argument, coefficient)` pairs, e.g.
    /// `1 - 2^{-s}` as `[(1, 1), (2, -1)]`.
    pub fn sparse(n: u64, terms: &[(u64, i64)]) -> Self {
        let mut s = Self::from_fn(n, |_| 0);
        for &(k, v) in terms {
            if k <= n {
                s.coeffs[k as usize - 1] += v;
            }
        }
        s
    }

    pub fn truncation(&self) -> u64 {
        self.coeffs.len() as u64
    }

    pub fn get(&self, n: u64) -> i64 {
        self.coeffs[n as usize - 1]
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn check_len(&self, other: &DirichletSeries) {
        assert_eq!(
            self.truncation(),
            other.truncation(),
            "mismatched truncation lengths"
        );
    }

    /// Dirichlet convolution `h(n) = sum over d | n of f(d) g(n/d)`.
    pub fn convolve(&self, other: &DirichletSeries) -> DirichletSeries {
        self.check_len(other);
        let n = self.coeffs.len();
        let mut out = vec![0i64; n];
        for d in 1..=n {
            let fd = self.coeffs[d - 1];
            if fd == 0 {
                continue;
            }
            let mut m = d;
            let mut q = 1;
            while m <= n {
                out[m - 1] = out[m - 1]
                    .checked_add(fd.checked_mul(other.coeffs[q - 1]).expect("overflow"))
                    .expect("overflow");
                m += d;
                q += 1;
            }
        }
        DirichletSeries { coeffs: out }
    }

    pub fn add(&self, other: &DirichletSeries) -> DirichletSeries {
        self.check_len(other);
        DirichletSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.checked_add(*b).expect("overflow"))
                .collect(),
        }
    }

    pub fn sub(&self, other: &DirichletSeries) -> DirichletSeries {
        self.check_len(other);
        DirichletSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.checked_sub(*b).expect("overflow"))
                .collect(),
        }
    }

    pub fn scale(&self, factor: i64) -> DirichletSeries {
        DirichletSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| a.checked_mul(factor).expect("overflow"))
                .collect(),
        }
    }

    /// Multiplication by `m^{-s}`: `h(n) = f(n/m)` when `m | n`, else 0.
    pub fn scale_shift(&self, m: u64) -> DirichletSeries {
        assert!(m >= 1);
        let n = self.coeffs.len() as u64;
        DirichletSeries::from_fn(n, |k| {
            if k % m == 0 {
                self.get(k / m)
            } else {
                0
            }
        })
    }

    /// Exact division of every coefficient; a remainder is an internal
    /// consistency failure and aborts.
    pub fn exact_div(&self, divisor: i64) -> DirichletSeries {
        DirichletSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    assert!(a % divisor == 0, "non-integer coefficient {a} / {divisor}");
                    a / divisor
                })
                .collect(),
        }
    }
}

/// `zeta(s - k)`: coefficients `n^k`, for `k` in `0..=2`.
pub fn zeta_shift(k: u32, n: u64) -> DirichletSeries {
    assert!(k <= 2, "only shifts by 0, 1, 2 are used");
    DirichletSeries::from_fn(n, |m| {
        (m as i64).checked_pow(k).expect("overflow")
    })
}

/// The non-principal character mod 4.
pub fn chi(n: u64) -> i64 {
    match n % 4 {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

/// The L-series of `chi`.
pub fn eta_series(n: u64) -> DirichletSeries {
    DirichletSeries::from_fn(n, chi)
}

/// `eta(s - 1)`: coefficients `n * chi(n)`.
pub fn eta_shift1(n: u64) -> DirichletSeries {
    DirichletSeries::from_fn(n, |m| m as i64 * chi(m))
}

/// The Euler product for the two-squares count: geometric factor at 2,
/// squared geometric factors at primes 1 mod 4, even-power factors at
/// primes 3 mod 4.
pub fn euler_product_tau(n: u64) -> DirichletSeries {
    let mut acc = DirichletSeries::unit(n);
    for p in primes_up_to(n) {
        let local = DirichletSeries::from_fn(n, |m| {
            // Coefficient of the local factor at m = p^k, 0 elsewhere.
            let (k, rest) = split_power(m, p);
            if rest != 1 {
                return 0;
            }
            match p % 4 {
                1 => k as i64 + 1,
                3 => i64::from(k % 2 == 0),
                _ => 1, // p = 2
            }
        });
        acc = acc.convolve(&local);
    }
    acc
}

fn split_power(mut m: u64, p: u64) -> (u32, u64) {
    let mut k = 0;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (k, m)
}

fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if sieve[p] {
            out.push(p as u64);
            let mut m = p * p;
            while m <= n {
                sieve[m] = false;
                m += p;
            }
        }
    }
    out
}

/// The generating-function expression for one (subgroup type, ambient,
/// kind) cell, expanded to `n` coefficients.
pub fn table2_entry(
    subgroup_type: IsoType,
    ambient: AmbientManifold,
    kind: CountKind,
    n: u64,
) -> Result<DirichletSeries, CountError> {
    if ambient == AmbientManifold::G1 || !is_legal_pair(ambient, subgroup_type) {
        return Err(CountError::NoSuchSubgroupType {
            ambient,
            subgroup_type,
        });
    }
    let z = zeta_shift(0, n);
    let z1 = zeta_shift(1, n);
    let z2 = zeta_shift(2, n);
    let eta = eta_series(n);
    let one_minus_half = DirichletSeries::sparse(n, &[(1, 1), (2, -1)]);
    let one_plus_3half = DirichletSeries::sparse(n, &[(1, 1), (2, 3)]);
    let one_plus_half = DirichletSeries::sparse(n, &[(1, 1), (2, 1)]);
    let zzz = z.convolve(&z1).convolve(&z2);

    let series = match (subgroup_type, ambient, kind) {
        (IsoType::Z3, AmbientManifold::G2, CountKind::Subgroups) => zzz.scale_shift(2),
        (IsoType::Z3, AmbientManifold::G2, CountKind::Classes) => {
            // 2^{-s-1} zeta zeta(s-1) (zeta(s-2) + (1 + 3*2^{-s}) zeta)
            let inner = z2.add(&one_plus_3half.convolve(&z));
            z.convolve(&z1).convolve(&inner).scale_shift(2).exact_div(2)
        }
        (IsoType::G2, AmbientManifold::G2, CountKind::Subgroups) => one_minus_half.convolve(&zzz),
        (IsoType::G2, AmbientManifold::G2, CountKind::Classes) => one_minus_half
            .convolve(&one_plus_3half)
            .convolve(&z)
            .convolve(&z)
            .convolve(&z1),
        (IsoType::Z3, AmbientManifold::G4, CountKind::Subgroups) => zzz.scale_shift(4),
        (IsoType::Z3, AmbientManifold::G4, CountKind::Classes) => {
            // 2^{-2s-2} zeta (zeta(s-1)zeta(s-2)
            //   + (1 + 3*2^{-s}) zeta zeta(s-1) + 2 (1 + 2^{-s}) zeta eta)
            let inner = z1
                .convolve(&z2)
                .add(&one_plus_3half.convolve(&z).convolve(&z1))
                .add(&one_plus_half.convolve(&z).convolve(&eta).scale(2));
            z.convolve(&inner).scale_shift(4).exact_div(4)
        }
        (IsoType::G2, AmbientManifold::G4, CountKind::Subgroups) => {
            one_minus_half.convolve(&zzz).scale_shift(2)
        }
        (IsoType::G2, AmbientManifold::G4, CountKind::Classes) => {
            // 2^{-s-1} (1 - 2^{-s}) zeta^2 ((1 + 3*2^{-s}) zeta(s-1)
            //   + (1 + 2^{-s}) eta)
            let inner = one_plus_3half
                .convolve(&z1)
                .add(&one_plus_half.convolve(&eta));
            one_minus_half
                .convolve(&z)
                .convolve(&z)
                .convolve(&inner)
                .scale_shift(2)
                .exact_div(2)
        }
        (IsoType::G4, AmbientManifold::G4, CountKind::Subgroups) => {
            one_minus_half.convolve(&z).convolve(&z1).convolve(&eta_shift1(n))
        }
        (IsoType::G4, AmbientManifold::G4, CountKind::Classes) => one_minus_half
            .convolve(&one_plus_half)
            .convolve(&z)
            .convolve(&z)
            .convolve(&eta),
        _ => unreachable!("pair checked above"),
    };
    for (i, &c) in series.coeffs().iter().enumerate() {
        assert!(c >= 0, "negative count coefficient at n = {}", i + 1);
    }
    Ok(series)
}
