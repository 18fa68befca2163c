//! Exact integer number theory on `i64`.
//!
//! Everything here is a pure function. Moduli are positive `i64` values;
//! functions without an error channel panic on a non-positive modulus, the
//! same way integer division panics on zero.
//!
//! Quadratic residuosity follows the "any square" convention: `x` is a
//! residue modulo `m` when some `y` satisfies `y² ≡ x (mod m)`, including
//! `x ≡ 0` and non-units.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Non-negative greatest common divisor, `gcd(0, 0) = 0`.
pub fn gcd(x: i64, y: i64) -> i64 {
    x.gcd(&y)
}

/// `y` in `[0, m)` with `x·y ≡ 1 (mod m)`. For `m = 1` the answer is `0`.
pub fn mod_inverse(x: i64, m: i64) -> Result<i64> {
    if m < 1 {
        return Err(Error::InvalidModulus(m));
    }
    let ext = i128::from(x).extended_gcd(&i128::from(m));
    if ext.gcd != 1 {
        return Err(Error::NotInvertible { x, modulus: m });
    }
    // |ext.x| < m, so the reduced value fits back into i64.
    Ok(ext.x.rem_euclid(i128::from(m)) as i64)
}

/// Prime factorization with primes in strictly increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(i64, u32)>,
}

impl Factorization {
    /// Trial division up to `√m`.
    pub fn of(m: i64) -> Self {
        assert!(m >= 1, "cannot factor {m}");
        let mut rest = m;
        let mut factors = Vec::new();
        let mut push = |p: i64, rest: &mut i64| {
            let mut exp = 0;
            while *rest % p == 0 {
                *rest /= p;
                exp += 1;
            }
            if exp > 0 {
                factors.push((p, exp));
            }
        };
        push(2, &mut rest);
        let mut p = 3;
        while p <= rest / p {
            push(p, &mut rest);
            p += 2;
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Factorization { factors }
    }

    pub fn factors(&self) -> &[(i64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = i64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Reconstructs the factored integer.
    pub fn value(&self) -> i64 {
        self.factors.iter().map(|&(p, k)| p.pow(k)).product()
    }

    pub fn euler_phi(&self) -> i64 {
        self.factors
            .iter()
            .map(|&(p, k)| (p - 1) * p.pow(k - 1))
            .product()
    }

    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }
}

/// Euler's totient.
pub fn euler_phi(m: i64) -> i64 {
    Factorization::of(m).euler_phi()
}

/// Number of distinct primes dividing `m`; `rho(1) = 0`.
pub fn rho(m: i64) -> usize {
    Factorization::of(m).distinct_primes()
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
fn jacobi(a: i64, n: i64) -> i32 {
    debug_assert!(n > 0 && n % 2 == 1);
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut sign = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Whether `x` is a square modulo `p^k`.
fn is_square_mod_prime_power(x: i64, p: i64, k: u32) -> bool {
    let pk = p.pow(k);
    let mut u = x.rem_euclid(pk);
    if u == 0 {
        return true;
    }
    let mut v = 0;
    while u % p == 0 {
        u /= p;
        v += 1;
    }
    if v % 2 == 1 {
        return false;
    }
    // u is a unit; it must be a square modulo p^(k - v).
    let r = k - v;
    if p == 2 {
        match r {
            1 => true,
            2 => u % 4 == 1,
            _ => u % 8 == 1,
        }
    } else {
        jacobi(u, p) == 1
    }
}

/// Whether some `y` satisfies `y² ≡ x (mod m)`.
///
/// Decided prime power by prime power (Hensel lifting plus the Chinese
/// remainder theorem), using the Jacobi symbol for the odd-prime unit case.
pub fn is_quadratic_residue(x: i64, m: i64) -> bool {
    assert!(m >= 1, "modulus must be positive, got {m}");
    Factorization::of(m)
        .factors()
        .iter()
        .all(|&(p, k)| is_square_mod_prime_power(x, p, k))
}

/// Whether `num/den` is a quadratic residue modulo `m`.
///
/// Fails with [`Error::NotInvertible`] when `den` is not a unit mod `m`.
pub fn qr_of_ratio(num: i64, den: i64, m: i64) -> Result<bool> {
    let inv = mod_inverse(den, m)?;
    let reduced = (i128::from(num) * i128::from(inv)).rem_euclid(i128::from(m)) as i64;
    Ok(is_quadratic_residue(reduced, m))
}

/// For `t = p^a` with `p` prime and `a ≥ 1`, returns `(p, a)`.
pub fn prime_power(t: i64) -> Option<(i64, u32)> {
    if t < 2 {
        return None;
    }
    match Factorization::of(t).factors() {
        [(p, a)] => Some((*p, *a)),
        _ => None,
    }
}

/// `p`-adic valuation of a non-zero integer.
pub fn valuation(x: i64, p: i64) -> u32 {
    assert!(x != 0 && p >= 2);
    let mut x = x;
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}
