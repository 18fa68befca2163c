//! Beauville–Bogomolov–Fujiki squares and divisibilities of classes
//! `a·L + b·δ`.
//!
//! For a manifold of K3^[n]-type the second cohomology splits orthogonally as
//! `Λ_K3 ⊕ Zδ` with `q(δ) = −2(n−1)`; for Kum^n-type it is `H²(T, Z) ⊕ Zδ`
//! with `q(δ) = −2(n+1)`. In both cases the surface part is unimodular, so for
//! a primitive `L` with `q(L) = 2e` the pairing of `α = a·L + b·δ` with the
//! lattice generates `gcd(a, 2b(n∓1))·Z`.
//!
//! [`GramLattice`] computes divisibility straight from the definition (gcd of
//! the entries of `G·v`) and serves as the independent check. The rank-3
//! model `U ⊕ ⟨−2(n∓1)⟩` with `L = f + e·g` is enough for that check: the
//! remaining summands (two more copies of `U` and `E8(−1)²` for K3, two more
//! copies of `U` for abelian surfaces) are unimodular and orthogonal to both
//! `L` and `δ`, so including them adds only entries that are multiples of
//! entries already present. The full-rank lattices are available through
//! [`GramLattice::full_rank`] for spot checks.

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Deformations of Hilbert schemes of points on a K3 surface.
    #[serde(rename = "k3n")]
    K3Hilb,
    /// Deformations of generalized Kummer varieties.
    #[serde(rename = "kum")]
    Kummer,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::K3Hilb, Family::Kummer];

    /// `n − 1` for K3^[n]-type, `n + 1` for Kum^n-type, so that
    /// `q(δ) = −2·delta_half(n)`.
    pub fn delta_half(self, n: i64) -> i64 {
        match self {
            Family::K3Hilb => n - 1,
            Family::Kummer => n + 1,
        }
    }

    pub fn delta_square(self, n: i64) -> i64 {
        -2 * self.delta_half(n)
    }

    pub fn flag(self) -> &'static str {
        match self {
            Family::K3Hilb => "k3n",
            Family::Kummer => "kum",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.flag())
    }
}

/// The class `a·L + b·δ` with `L` primitive on the surface part and
/// `q(L) = 2e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeClass {
    pub family: Family,
    pub n: i64,
    pub a: i64,
    pub b: i64,
    pub e: i64,
}

impl LatticeClass {
    pub fn new(family: Family, n: i64, a: i64, b: i64, e: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidQuery(format!("n must be at least 2, got {n}")));
        }
        if e < 1 {
            return Err(Error::InvalidQuery(format!("e must be at least 1, got {e}")));
        }
        if a == 0 && b == 0 {
            return Err(Error::InvalidQuery("the zero class has no divisibility".into()));
        }
        Ok(LatticeClass { family, n, a, b, e })
    }

    /// `q(α) = 2a²e − 2b²(n∓1)`.
    pub fn bbf_square(&self) -> Result<i64> {
        let a2e = self.a.checked_mul(self.a).and_then(|x| x.checked_mul(self.e));
        let b2h = self
            .b
            .checked_mul(self.b)
            .and_then(|x| x.checked_mul(self.family.delta_half(self.n)));
        a2e.zip(b2h)
            .and_then(|(x, y)| x.checked_sub(y))
            .and_then(|x| x.checked_mul(2))
            .ok_or(Error::Overflow("bbf square"))
    }

    /// `gcd(a, 2b(n∓1))`.
    pub fn divisibility(&self) -> Result<i64> {
        let pairing = self
            .b
            .checked_mul(2 * self.family.delta_half(self.n))
            .ok_or(Error::Overflow("divisibility"))?;
        Ok(gcd(self.a, pairing))
    }

    pub fn is_primitive(&self) -> bool {
        is_primitive(self.a, self.b)
    }

    /// Coordinates `(a, a·e, b)` of the class in the rank-3 model with basis
    /// `f, g, δ`.
    pub fn model_vector(&self) -> Result<Vec<i64>> {
        let ae = self.a.checked_mul(self.e).ok_or(Error::Overflow("model vector"))?;
        Ok(vec![self.a, ae, self.b])
    }
}

/// `a·L + b·δ` is primitive iff `gcd(a, b) = 1` (with `L` primitive).
pub fn is_primitive(a: i64, b: i64) -> bool {
    gcd(a, b) == 1
}

/// A lattice given by its symmetric integral Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramLattice {
    gram: Vec<Vec<i64>>,
}

/// Cartan matrix of `E8`; its negative is the Gram matrix of `E8(−1)`.
const E8_CARTAN: [[i64; 8]; 8] = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, -1],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, -1, 0, 0, 0, 0, 2],
];

impl GramLattice {
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let rank = gram.len();
        if gram.iter().any(|row| row.len() != rank) {
            return Err(Error::NotSymmetric);
        }
        if (0..rank).any(|i| (0..i).any(|j| gram[i][j] != gram[j][i])) {
            return Err(Error::NotSymmetric);
        }
        Ok(GramLattice { gram })
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(blocks: &[GramLattice]) -> Self {
        let rank = blocks.iter().map(GramLattice::rank).sum();
        let mut gram = vec![vec![0; rank]; rank];
        let mut offset = 0;
        for block in blocks {
            for (i, row) in block.gram.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    gram[offset + i][offset + j] = x;
                }
            }
            offset += block.rank();
        }
        GramLattice { gram }
    }

    /// The hyperbolic plane `U`.
    pub fn hyperbolic_plane() -> Self {
        GramLattice { gram: vec![vec![0, 1], vec![1, 0]] }
    }

    /// `E8(−1)`.
    pub fn e8_negative() -> Self {
        let gram = E8_CARTAN.iter().map(|row| row.iter().map(|x| -x).collect()).collect();
        GramLattice { gram }
    }

    pub fn rank_one(square: i64) -> Self {
        GramLattice { gram: vec![vec![square]] }
    }

    /// `U ⊕ ⟨−2(n∓1)⟩`, basis `f, g, δ`.
    pub fn rank3_model(family: Family, n: i64) -> Self {
        Self::direct_sum(&[Self::hyperbolic_plane(), Self::rank_one(family.delta_square(n))])
    }

    /// `U³ ⊕ E8(−1)² ⊕ ⟨−2(n−1)⟩` (rank 23) for K3^[n]-type and
    /// `U³ ⊕ ⟨−2(n+1)⟩` (rank 7) for Kum^n-type. The first two basis vectors
    /// are the same `f, g` as in [`GramLattice::rank3_model`] and `δ` is last.
    pub fn full_rank(family: Family, n: i64) -> Self {
        let u = Self::hyperbolic_plane();
        let delta = Self::rank_one(family.delta_square(n));
        match family {
            Family::K3Hilb => Self::direct_sum(&[
                u.clone(),
                u.clone(),
                u,
                Self::e8_negative(),
                Self::e8_negative(),
                delta,
            ]),
            Family::Kummer => Self::direct_sum(&[u.clone(), u.clone(), u, delta]),
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// `(v, w)` for the bilinear form.
    pub fn pairing(&self, v: &[i64], w: &[i64]) -> Result<i64> {
        let gv = self.apply(v)?;
        self.check_len(w)?;
        gv.iter()
            .zip(w)
            .try_fold(0i64, |acc, (&x, &y)| x.checked_mul(y).and_then(|p| acc.checked_add(p)))
            .ok_or(Error::Overflow("pairing"))
    }

    fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: v.len() });
        }
        Ok(())
    }

    fn apply(&self, v: &[i64]) -> Result<Vec<i64>> {
        self.check_len(v)?;
        self.gram
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .try_fold(0i64, |acc, (&g, &x)| g.checked_mul(x).and_then(|p| acc.checked_add(p)))
                    .ok_or(Error::Overflow("Gram product"))
            })
            .collect()
    }

    /// Positive generator of `{(w, v) : w ∈ Λ}`, i.e. the gcd of the entries
    /// of `G·v`.
    pub fn divisibility(&self, v: &[i64]) -> Result<i64> {
        let gv = self.apply(v)?;
        let div = gv.into_iter().fold(0, gcd);
        if div == 0 {
            // Only a kernel vector pairs to zero with everything; none of the
            // lattices here are degenerate, so this means v = 0.
            return Err(Error::InvalidQuery("divisibility of a vector in the radical".into()));
        }
        Ok(div)
    }
}
