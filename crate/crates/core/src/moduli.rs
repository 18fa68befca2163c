//! Non-emptiness, connected components, witnesses and positivity thresholds
//! for the moduli spaces `Σ^n_{d,t}` (K3^[n]-type) and `Υ^n_{d,t}`
//! (Kum^n-type) of polarizations of square `2d` and divisibility `t`.
//!
//! Queries are always written `(family, n, d, t)`. Some of the literature
//! writes `Σ^t_{d,n}` for the same space; only the order of the indices
//! differs.
//!
//! Throughout, `h = n − 1` for K3^[n]-type and `h = n + 1` for Kum^n-type, so
//! that `q(δ) = −2h`.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, gcd, prime_power, qr_of_ratio, rho, valuation, Factorization};
use crate::error::{Error, Result};
use crate::lattice::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModuliQuery {
    pub family: Family,
    pub n: i64,
    pub d: i64,
    pub t: i64,
}

impl ModuliQuery {
    pub fn new(family: Family, n: i64, d: i64, t: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidQuery(format!("n must be at least 2, got {n}")));
        }
        if d < 1 {
            return Err(Error::InvalidQuery(format!("d must be at least 1, got {d}")));
        }
        if t < 1 {
            return Err(Error::InvalidQuery(format!("t must be at least 1, got {t}")));
        }
        Ok(ModuliQuery { family, n, d, t })
    }

    /// `n − 1` or `n + 1`.
    pub fn h(&self) -> i64 {
        self.family.delta_half(self.n)
    }

    /// `gcd(2d, 2h)`.
    pub fn gcd_2d_2h(&self) -> Result<i64> {
        let two_d = self.d.checked_mul(2).ok_or(Error::Overflow("2d"))?;
        Ok(gcd(two_d, 2 * self.h()))
    }

    /// Every divisor of `2h`, i.e. every divisibility that can occur.
    pub fn admissible_divisibilities(family: Family, n: i64) -> Vec<i64> {
        let m = 2 * family.delta_half(n);
        (1..=m).filter(|t| m % t == 0).collect()
    }
}

impl fmt::Display for ModuliQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}, d={}, t={})", self.family, self.n, self.d, self.t)
    }
}

/// The auxiliary integers of the component-count theorems. For Kum^n-type
/// `d_tilde` and `n_tilde` are the quantities usually written `d₁` and `n₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub d_tilde: i64,
    pub n_tilde: i64,
    pub g: i64,
    pub w: i64,
    pub g1: i64,
    pub t1: i64,
    pub w_plus: i64,
    pub w_minus: i64,
}

pub fn decompose(q: &ModuliQuery) -> Result<Decomposition> {
    let big_gcd = q.gcd_2d_2h()?;
    if big_gcd % q.t != 0 {
        return Err(Error::DivisibilityViolation { t: q.t, modulus: big_gcd });
    }
    let d_tilde = 2 * q.d / big_gcd;
    let n_tilde = 2 * q.h() / big_gcd;
    let g = big_gcd / q.t;
    let w = gcd(g, q.t);
    let g1 = g / w;
    let t1 = q.t / w;
    // w₊ collects the full prime powers of w at primes shared with t₁.
    let w_plus = Factorization::of(w)
        .factors()
        .iter()
        .filter(|&&(p, _)| t1 % p == 0)
        .map(|&(p, k)| p.pow(k))
        .product::<i64>();
    Ok(Decomposition { d_tilde, n_tilde, g, w, g1, t1, w_plus, w_minus: w / w_plus })
}

/// Which case of the component-count theorem produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CountBranch {
    /// `t > 2`, condition set (i), (ii) or (iii).
    LargeI,
    LargeII,
    LargeIII,
    /// `t > 2`, `g₁` odd and `t₁` even.
    LargeEvenT1,
    /// `t ≤ 2`, condition set (i)–(iv).
    SmallI,
    SmallII,
    SmallIII,
    SmallIV,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCount {
    pub count: i64,
    pub branch: Option<CountBranch>,
    /// Set when `t ∤ gcd(2d, 2h)`.
    pub decomposition: Option<Decomposition>,
    pub diagnostics: Vec<String>,
}

/// The five condition sets appearing in the two theorems.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Conditions {
    i: bool,
    ii: bool,
    iii: bool,
    even_t1: bool,
    /// The fourth `t ≤ 2` set for Kum^n-type exactly as printed
    /// ("g₁ odd, d₁ even"). Kept only to document why it is not used.
    kummer_iv_as_printed: bool,
}

fn odd(x: i64) -> bool {
    x % 2 != 0
}

fn conditions(dec: &Decomposition) -> Result<Conditions> {
    let Decomposition { d_tilde: dt, n_tilde: nt, g1, t1, w, .. } = *dec;
    let coprime_dt = gcd(dt, t1) == 1;
    // Parity and gcd requirements are tested first; the quadratic residue
    // test only runs once they hold, so its denominator is a unit.
    let i = !odd(g1) && coprime_dt && gcd(nt, t1) == 1 && qr_of_ratio(-dt, nt, t1)?;
    let unit_2t1 = coprime_dt && gcd(nt, 2 * t1) == 1;
    let ii = odd(g1) && odd(t1) && odd(dt) && unit_2t1 && qr_of_ratio(-dt, nt, 2 * t1)?;
    let iii = odd(g1) && odd(t1) && odd(w) && !odd(dt) && unit_2t1 && qr_of_ratio(-dt, 4 * nt, t1)?;
    let even_t1 = odd(g1) && !odd(t1) && unit_2t1 && qr_of_ratio(-dt, nt, 2 * t1)?;
    let kummer_iv_as_printed = odd(g1) && !odd(dt) && unit_2t1 && qr_of_ratio(-dt, nt, 2 * t1)?;
    Ok(Conditions { i, ii, iii, even_t1, kummer_iv_as_printed })
}

/// `base · 2^exponent` for `exponent ≥ −1`. A negative exponent only arises
/// for `t₁ = 1` (or `t₁/2 = 1`), where `base` is even and the halving is
/// exact; an odd base would fall back to `2^0`, which is recorded.
fn times_power_of_two(base: i64, exponent: i64, diagnostics: &mut Vec<String>) -> Result<i64> {
    if exponent >= 0 {
        let factor = 1i64.checked_shl(exponent as u32).ok_or(Error::Overflow("component count"))?;
        return base.checked_mul(factor).ok_or(Error::Overflow("component count"));
    }
    diagnostics.push(format!("exponent {exponent} in the power of two; halving {base}"));
    if base % 2 == 0 {
        Ok(base / 2)
    } else {
        diagnostics.push(format!("non-integral count {base}/2, using 2^0 instead"));
        Ok(base)
    }
}

/// Number of connected components of the moduli space.
pub fn component_count(q: &ModuliQuery) -> Result<ComponentCount> {
    let dec = match decompose(q) {
        Ok(dec) => dec,
        Err(Error::DivisibilityViolation { .. }) => {
            return Ok(ComponentCount { count: 0, branch: None, decomposition: None, diagnostics: vec![] });
        }
        Err(e) => return Err(e),
    };
    let c = conditions(&dec)?;
    let mut diagnostics = Vec::new();
    if q.family == Family::Kummer && q.t <= 2 && c.kummer_iv_as_printed != c.even_t1 {
        diagnostics.push(format!(
            "fourth t ≤ 2 case: `g1 odd, d1 even` reads {}, `g1 odd, t1 even` reads {}; using the latter",
            c.kummer_iv_as_printed, c.even_t1
        ));
    }

    let (count, branch) = if q.t > 2 {
        let unit_part = dec
            .w_plus
            .checked_mul(euler_phi(dec.w_minus))
            .ok_or(Error::Overflow("component count"))?;
        let first = [(c.i, CountBranch::LargeI), (c.ii, CountBranch::LargeII), (c.iii, CountBranch::LargeIII)]
            .into_iter()
            .find(|(hit, _)| *hit);
        debug_assert!(first.is_none() || !c.even_t1, "overlapping t > 2 cases for {q}");
        if let Some((_, branch)) = first {
            let exp = rho(dec.t1) as i64 - 1;
            (times_power_of_two(unit_part, exp, &mut diagnostics)?, Some(branch))
        } else if c.even_t1 {
            let exp = rho(dec.t1 / 2) as i64 - 1;
            (times_power_of_two(unit_part, exp, &mut diagnostics)?, Some(CountBranch::LargeEvenT1))
        } else {
            (0, None)
        }
    } else {
        let branch = [
            (c.i, CountBranch::SmallI),
            (c.ii, CountBranch::SmallII),
            (c.iii, CountBranch::SmallIII),
            (c.even_t1, CountBranch::SmallIV),
        ]
        .into_iter()
        .find(|(hit, _)| *hit)
        .map(|(_, b)| b);
        (i64::from(branch.is_some()), branch)
    };
    Ok(ComponentCount { count, branch, decomposition: Some(dec), diagnostics })
}

/// The count the Kum^n-type theorem gives when its fourth `t ≤ 2` condition
/// is read exactly as printed. Exposed for auditing; [`component_count`] does
/// not use it.
pub fn kummer_count_as_printed(q: &ModuliQuery) -> Result<i64> {
    if q.family != Family::Kummer || q.t > 2 {
        return component_count(q).map(|c| c.count);
    }
    let Ok(dec) = decompose(q) else { return Ok(0) };
    let c = conditions(&dec)?;
    Ok(i64::from(c.i || c.ii || c.iii || c.kummer_iv_as_printed))
}

/// Smallest `b ∈ [1, t²]` with `gcd(b, t) = 1` and `d ≡ −b²h (mod t²)`,
/// provided `t | 2h`. `None` means the moduli space is empty.
pub fn nonempty_residue(q: &ModuliQuery) -> Option<i64> {
    if (2 * q.h()) % q.t != 0 {
        return None;
    }
    let t2 = i128::from(q.t) * i128::from(q.t);
    let d = i128::from(q.d);
    let h = i128::from(q.h()) % t2;
    (1..=t2)
        .filter(|&b| gcd(b as i64, q.t) == 1)
        .find(|&b| (d + (b * b % t2) * h) % t2 == 0)
        .map(|b| b as i64)
}

pub fn is_nonempty(q: &ModuliQuery) -> bool {
    nonempty_residue(q).is_some()
}

/// A class `a·L + b·δ` with `q(L) = 2e` realizing a polarization type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 3]", into = "[i64; 3]")]
pub struct Witness {
    pub a: i64,
    pub b: i64,
    pub e: i64,
}

impl From<[i64; 3]> for Witness {
    fn from([a, b, e]: [i64; 3]) -> Self {
        Witness { a, b, e }
    }
}

impl From<Witness> for [i64; 3] {
    fn from(w: Witness) -> Self {
        [w.a, w.b, w.e]
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.e)
    }
}

/// `t·L + b·δ` with `e = (d + b²h)/t²`, for the residue `b` of
/// [`nonempty_residue`].
pub fn witness(q: &ModuliQuery) -> Result<Option<Witness>> {
    let Some(b) = nonempty_residue(q) else { return Ok(None) };
    let t2 = i128::from(q.t) * i128::from(q.t);
    let num = i128::from(q.d) + i128::from(b) * i128::from(b) * i128::from(q.h());
    if num % t2 != 0 {
        // The congruence guarantees integrality.
        unreachable!("residue {b} does not give an integral e for {q}");
    }
    let e = i64::try_from(num / t2).map_err(|_| Error::Overflow("witness e"))?;
    Ok(Some(Witness { a: q.t, b, e }))
}

/// `d ≥ bound` inequalities for base point freeness and very ampleness of the
/// polarization on a general member of some component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thresholds {
    /// `t²/(2(t−1))`, absent for `t = 1`.
    pub tau: Option<Ratio<i128>>,
    pub bpf_bound: Ratio<i128>,
    pub va_bound: Ratio<i128>,
    pub bpf: bool,
    pub va: bool,
    pub fujita_power: i64,
    pub notes: Vec<String>,
}

/// Smallest integer `d ≥ 1` with `d ≥ bound`.
pub fn minimal_d(bound: &Ratio<i128>) -> i64 {
    let ceil = bound.ceil().to_integer();
    ceil.max(1) as i64
}

/// Bound as the reduced fraction `((τ−1)n + c·τ + k)` = `((t²−2s)n + c·t² + 2ks)/(2s)`
/// with `s = t − 1`.
fn tau_bound(t: i64, n: i64, c: i128, k: i128) -> Result<Ratio<i128>> {
    let (t, n) = (i128::from(t), i128::from(n));
    let s2 = 2 * (t - 1);
    let t2 = t * t;
    let num = (t2 - s2)
        .checked_mul(n)
        .and_then(|x| x.checked_add(c * t2))
        .and_then(|x| x.checked_add(k * s2))
        .ok_or(Error::Overflow("threshold"))?;
    Ok(Ratio::new(num, s2))
}

pub fn thresholds(q: &ModuliQuery) -> Result<Thresholds> {
    let n = q.n;
    let (tau, bpf_bound, va_bound, bpf_text, va_text) = if q.t == 1 {
        let (bpf, va) = match q.family {
            Family::K3Hilb => (1, i128::from(n) + 1),
            Family::Kummer => (3, i128::from(n) + 4),
        };
        let bpf_text = match q.family {
            Family::K3Hilb => "always".to_string(),
            Family::Kummer => "d ≥ 3".to_string(),
        };
        let va_text = match q.family {
            Family::K3Hilb => "d ≥ n + 1".to_string(),
            Family::Kummer => "d ≥ n + 4".to_string(),
        };
        (None, Ratio::from_integer(bpf), Ratio::from_integer(va), bpf_text, va_text)
    } else {
        let tau = Ratio::new(i128::from(q.t) * i128::from(q.t), 2 * (i128::from(q.t) - 1));
        let (bpf, va, bpf_text, va_text) = match q.family {
            Family::K3Hilb => (
                tau_bound(q.t, n, 1, 1)?,
                tau_bound(q.t, n, 2, 1)?,
                "d ≥ (τ−1)n + τ + 1",
                "d ≥ (τ−1)n + 2τ + 1",
            ),
            Family::Kummer => (
                tau_bound(q.t, n, 2, -1)?,
                tau_bound(q.t, n, 3, -1)?,
                "d ≥ (τ−1)n + 2τ − 1",
                "d ≥ (τ−1)n + 3τ − 1",
            ),
        };
        (Some(tau), bpf, va, bpf_text.to_string(), va_text.to_string())
    };
    let d = Ratio::from_integer(i128::from(q.d));
    let bpf = d >= bpf_bound;
    let va = d >= va_bound;
    let fujita_power = n + 2;

    let tau_text = tau.map(|t| format!(" with τ = {t}")).unwrap_or_default();
    let yes_no = |b: bool| if b { "holds" } else { "fails" };
    let mut notes = vec![
        format!("bpf: {bpf_text}{tau_text}, bound {bpf_bound}, d = {}: {}", q.d, yes_no(bpf)),
        format!("very ample: {va_text}{tau_text}, bound {va_bound}, d = {}: {}", q.d, yes_no(va)),
    ];
    if bpf {
        notes.push(format!("H^{fujita_power} is very ample wherever H is ample and base point free"));
    }
    Ok(Thresholds { tau, bpf_bound, va_bound, bpf, va, fujita_power, notes })
}

/// `t = 2`, or `t = p^a` for an odd prime `p` with `p^(a+1) ∤ gcd(2d, 2h)`:
/// a sufficient condition for the moduli space to have at most one
/// component.
pub fn prime_power_connected(q: &ModuliQuery) -> Result<bool> {
    if q.t == 2 {
        return Ok(true);
    }
    match prime_power(q.t) {
        Some((p, _)) if p > 2 => {
            let m = q.gcd_2d_2h()?;
            // p^(a+1) | m iff v_p(m) > a, and v_p(t) = a.
            Ok(valuation(m, p) <= valuation(q.t, p))
        }
        _ => Ok(false),
    }
}

/// Everything known about one moduli space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliReport {
    pub family: Family,
    pub n: i64,
    pub d: i64,
    pub t: i64,
    pub non_empty: bool,
    pub components: i64,
    pub witness: Option<Witness>,
    /// Inequality satisfied and the space non-empty.
    pub bpf_some_component: bool,
    pub va_some_component: bool,
    pub fujita_power: i64,
    pub applies_to_all_components: bool,
    pub prime_power_connected: bool,
    pub bpf_bound: String,
    pub d_min_bpf: i64,
    pub va_bound: String,
    pub d_min_va: i64,
    pub threshold_notes: Vec<String>,
    pub diagnostics: Vec<String>,
}

pub fn report(q: &ModuliQuery) -> Result<ModuliReport> {
    let non_empty = is_nonempty(q);
    let count = component_count(q)?;
    if non_empty != (count.count >= 1) {
        return Err(Error::InternalInconsistency { query: *q, non_empty, components: count.count });
    }
    let th = thresholds(q)?;
    Ok(ModuliReport {
        family: q.family,
        n: q.n,
        d: q.d,
        t: q.t,
        non_empty,
        components: count.count,
        witness: witness(q)?,
        bpf_some_component: non_empty && th.bpf,
        va_some_component: non_empty && th.va,
        fujita_power: th.fujita_power,
        applies_to_all_components: count.count == 1,
        prime_power_connected: prime_power_connected(q)?,
        bpf_bound: th.bpf_bound.to_string(),
        d_min_bpf: minimal_d(&th.bpf_bound),
        va_bound: th.va_bound.to_string(),
        d_min_va: minimal_d(&th.va_bound),
        threshold_notes: th.notes,
        diagnostics: count.diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(family: Family, n: i64, d: i64, t: i64) -> ModuliQuery {
        ModuliQuery::new(family, n, d, t).unwrap()
    }

    use Family::{K3Hilb, Kummer};

    #[test]
    fn query_validation() {
        assert!(ModuliQuery::new(K3Hilb, 1, 1, 1).is_err());
        assert!(ModuliQuery::new(K3Hilb, 2, 0, 1).is_err());
        assert!(ModuliQuery::new(K3Hilb, 2, 1, 0).is_err());
        assert_eq!(ModuliQuery::admissible_divisibilities(Kummer, 2), vec![1, 2, 3, 6]);
    }

    #[test]
    fn decompose_examples() {
        let dec = decompose(&q(K3Hilb, 2, 3, 2)).unwrap();
        assert_eq!(
            dec,
            Decomposition { d_tilde: 3, n_tilde: 1, g: 1, w: 1, g1: 1, t1: 2, w_plus: 1, w_minus: 1 }
        );
        let dec = decompose(&q(K3Hilb, 2, 1, 1)).unwrap();
        assert_eq!((dec.d_tilde, dec.n_tilde, dec.g, dec.w, dec.g1, dec.t1), (1, 1, 2, 1, 2, 1));
        let dec = decompose(&q(Kummer, 3, 5, 2)).unwrap();
        assert_eq!((dec.d_tilde, dec.n_tilde, dec.g, dec.w, dec.g1, dec.t1), (5, 4, 1, 1, 1, 2));
        assert_eq!(
            decompose(&q(K3Hilb, 2, 2, 4)),
            Err(Error::DivisibilityViolation { t: 4, modulus: 2 })
        );
    }

    #[test]
    fn w_plus_takes_whole_prime_powers() {
        // n = 37: 2n − 2 = 72; d = 36: gcd(72, 72) = 72; t = 6 gives g = 12,
        // w = 6, t1 = 1, so no prime of w divides t1.
        let dec = decompose(&q(K3Hilb, 37, 36, 6)).unwrap();
        assert_eq!((dec.g, dec.w, dec.t1, dec.w_plus, dec.w_minus), (12, 6, 1, 1, 6));
        // t = 12: g = 6, w = 6, t1 = 2, so w₊ = 2 and w₋ = 3.
        let dec = decompose(&q(K3Hilb, 37, 36, 12)).unwrap();
        assert_eq!((dec.g, dec.w, dec.t1, dec.w_plus, dec.w_minus), (6, 6, 2, 2, 3));
        // t = 24: g = 3, w = 3, t1 = 8: no shared prime.
        let dec = decompose(&q(K3Hilb, 37, 36, 24)).unwrap();
        assert_eq!((dec.w, dec.t1, dec.w_plus, dec.w_minus), (3, 8, 1, 3));
    }

    #[test]
    fn nonempty_examples() {
        assert_eq!(nonempty_residue(&q(K3Hilb, 2, 3, 2)), Some(1));
        assert_eq!(nonempty_residue(&q(K3Hilb, 2, 2, 2)), None);
        for d in 1..50 {
            assert!(!is_nonempty(&q(Kummer, 2, d, 5)));
        }
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness(&q(K3Hilb, 2, 3, 2)), Ok(Some(Witness { a: 2, b: 1, e: 1 })));
        for n in 2..8 {
            for d in 1..20 {
                assert_eq!(witness(&q(K3Hilb, n, d, 1)), Ok(Some(Witness { a: 1, b: 1, e: d + n - 1 })));
            }
        }
        // 3 ≡ −3b² (mod 9) forces b² ≡ 2 (mod 3): no solution.
        assert_eq!(witness(&q(Kummer, 2, 3, 3)), Ok(None));
    }

    #[test]
    fn count_examples() {
        for d in 1..=50 {
            let c = component_count(&q(K3Hilb, 2, d, 1)).unwrap();
            assert_eq!(c.count, 1);
            assert_eq!(c.branch, Some(CountBranch::SmallI));
        }
        assert_eq!(component_count(&q(K3Hilb, 2, 2, 4)).unwrap().count, 0);
        // gcd(54, 18) = 18, d̃ = 3, ñ = 1, g = 6, w = 3, g1 = 2, t1 = 1:
        // case (i), w₊ = 1, φ(w₋) = φ(3) = 2 and 2^(ρ(1) − 1) = 1/2.
        let c = component_count(&q(K3Hilb, 10, 27, 3)).unwrap();
        assert_eq!(c.count, 1);
        assert_eq!(c.branch, Some(CountBranch::LargeI));
        assert!(!c.diagnostics.is_empty());
    }

    #[test]
    fn printed_kummer_fourth_case_contradicts_nonemptiness() {
        // Υ²_{1,2}: 1 ≡ −3·1 (mod 4), so the space is non-empty.
        let query = q(Kummer, 2, 1, 2);
        assert!(is_nonempty(&query));
        assert_eq!(kummer_count_as_printed(&query), Ok(0));
        let c = component_count(&query).unwrap();
        assert_eq!((c.count, c.branch), (1, Some(CountBranch::SmallIV)));
        assert_eq!(c.diagnostics.len(), 1);
    }

    #[test]
    fn threshold_examples() {
        for n in 2..10 {
            let th = thresholds(&q(K3Hilb, n, 1, 2)).unwrap();
            assert_eq!(th.tau, Some(Ratio::from_integer(2)));
            assert_eq!(minimal_d(&th.bpf_bound), n + 3);
        }
        let th = thresholds(&q(Kummer, 2, 3, 1)).unwrap();
        assert!(th.bpf && !th.va);
        let th = thresholds(&q(K3Hilb, 2, 5, 3)).unwrap();
        assert_eq!(th.tau, Some(Ratio::new(9, 4)));
        assert_eq!(th.bpf_bound, Ratio::new(23, 4));
        assert!(!th.bpf);
        assert!(thresholds(&q(K3Hilb, 2, 6, 3)).unwrap().bpf);
        assert_eq!(th.fujita_power, 4);
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(prime_power_connected(&q(K3Hilb, 10, 27, 3)), Ok(false));
        assert_eq!(prime_power_connected(&q(K3Hilb, 4, 5, 3)), Ok(true));
        assert_eq!(prime_power_connected(&q(Kummer, 7, 11, 2)), Ok(true));
        assert_eq!(prime_power_connected(&q(K3Hilb, 7, 1, 6)), Ok(false));
        assert_eq!(prime_power_connected(&q(K3Hilb, 7, 1, 4)), Ok(false));
    }

    #[test]
    fn report_examples() {
        let r = report(&q(K3Hilb, 2, 3, 2)).unwrap();
        assert!(r.non_empty);
        assert_eq!(r.components, 1);
        assert_eq!(r.witness, Some(Witness { a: 2, b: 1, e: 1 }));
        assert!(!r.bpf_some_component && !r.va_some_component);
        assert!(r.applies_to_all_components);

        let r = report(&q(K3Hilb, 2, 2, 2)).unwrap();
        assert!(!r.non_empty);
        assert_eq!((r.components, r.witness), (0, None));
        assert!(!r.applies_to_all_components);

        let r = report(&q(Kummer, 2, 1, 1)).unwrap();
        assert!(r.non_empty && !r.bpf_some_component);
        assert_eq!(r.components, 1);
    }
}
