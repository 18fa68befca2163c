//! Brute-force search for polarization classes, independent of the
//! congruence criterion.
//!
//! A moduli space `Σ^n_{d,t}` / `Υ^n_{d,t}` is non-empty exactly when some
//! primitive class `a·L + b·δ` has square `2d` and divisibility `t`. The
//! search below scans `(a, b)` boxes and, for each pair, finds `e` by
//! bisection on the square (strictly increasing in `e` once `a ≠ 0`), using
//! only [`LatticeClass`] evaluations.
//!
//! With `max_a = t`, `max_b = t²` and `max_e = d + t⁴(n+1)` the search is
//! complete: any class with the right invariants has `t | a`, and replacing
//! `a` by `t` and `b` by its residue in `[1, t²]` keeps both invariants, so a
//! class with `a = t` and `1 ≤ b ≤ t²` exists whenever any class does. Its
//! `e = (d + b²h)/t²` is then at most `d + t²h ≤ d + t⁴(n+1)`.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{is_primitive, LatticeClass};
use crate::moduli::{ModuliQuery, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_a: i64,
    pub max_b: i64,
    pub max_e: i64,
}

impl SearchBounds {
    pub fn new(max_a: i64, max_b: i64, max_e: i64) -> Result<Self> {
        if max_a < 1 || max_b < 1 || max_e < 1 {
            return Err(Error::InvalidQuery(format!(
                "search bounds must be positive, got {max_a}/{max_b}/{max_e}"
            )));
        }
        Ok(SearchBounds { max_a, max_b, max_e })
    }

    /// `a ≤ t`, `|b| ≤ t²`, `e ≤ d + t⁴(n+1)`.
    pub fn for_query(q: &ModuliQuery) -> Result<Self> {
        let t2 = q.t.checked_mul(q.t).ok_or(Error::Overflow("search bounds"))?;
        let max_e = t2
            .checked_mul(t2)
            .and_then(|x| x.checked_mul(q.n + 1))
            .and_then(|x| x.checked_add(q.d))
            .ok_or(Error::Overflow("search bounds"))?;
        Self::new(q.t, t2, max_e)
    }

    /// Componentwise maximum.
    pub fn widen(self, other: SearchBounds) -> Self {
        SearchBounds {
            max_a: self.max_a.max(other.max_a),
            max_b: self.max_b.max(other.max_b),
            max_e: self.max_e.max(other.max_e),
        }
    }
}

/// Parses `A,B,E` (also accepts `/` as separator).
impl FromStr for SearchBounds {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<_> = s.split([',', '/']).map(str::trim).collect();
        let bad = || Error::InvalidQuery(format!("expected max_a,max_b,max_e, got {s:?}"));
        let [a, b, e] = parts.as_slice() else { return Err(bad()) };
        let parse = |x: &str| x.parse::<i64>().map_err(|_| bad());
        Self::new(parse(a)?, parse(b)?, parse(e)?)
    }
}

/// Smallest `e ∈ [1, max_e]` with `q(a·L + b·δ) = target`, if any.
fn solve_for_e(q: &ModuliQuery, a: i64, b: i64, max_e: i64, target: i64) -> Result<Option<i64>> {
    let square = |e: i64| LatticeClass::new(q.family, q.n, a, b, e)?.bbf_square();
    let (mut lo, mut hi) = (1, max_e);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if square(mid)? < target {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    Ok((square(lo)? == target).then_some(lo))
}

/// Every primitive class in the box with square `2d` and divisibility `t`,
/// sorted.
pub fn enumerate_witnesses(q: &ModuliQuery, bounds: SearchBounds) -> Result<Vec<Witness>> {
    let target = q.d.checked_mul(2).ok_or(Error::Overflow("2d"))?;
    let mut found = Vec::new();
    for a in 1..=bounds.max_a {
        for b in -bounds.max_b..=bounds.max_b {
            if !is_primitive(a, b) {
                continue;
            }
            let Some(e) = solve_for_e(q, a, b, bounds.max_e, target)? else { continue };
            if LatticeClass::new(q.family, q.n, a, b, e)?.divisibility()? == q.t {
                found.push(Witness { a, b, e });
            }
        }
    }
    found.sort();
    Ok(found)
}

/// Re-checks square, divisibility, primitivity and `e ≥ 1`.
pub fn verify_witness(w: &Witness, q: &ModuliQuery) -> bool {
    let Ok(class) = LatticeClass::new(q.family, q.n, w.a, w.b, w.e) else { return false };
    class.is_primitive()
        && class.bbf_square().ok() == q.d.checked_mul(2)
        && class.divisibility().ok() == Some(q.t)
}
