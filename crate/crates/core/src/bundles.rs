//! k-very ampleness of `L^⊗a` on K3 and abelian surfaces of Picard rank one
//! with `L² = 2e`, and the induced positivity of `a·Lₙ − δ` on `S^[n]` and of
//! `a·L_{n+1} − δ` on `Kum^n(T)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceKind {
    #[serde(rename = "k3")]
    K3Surface,
    #[serde(rename = "abelian")]
    AbelianSurface,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BundleSpec {
    pub surface: SurfaceKind,
    /// Tensor power.
    pub a: i64,
    /// Half of `L²`.
    pub e: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleStatus {
    pub bpf: bool,
    pub very_ample: bool,
}

impl BundleSpec {
    pub fn new(surface: SurfaceKind, a: i64, e: i64) -> Result<Self> {
        if a < 1 || e < 1 {
            return Err(Error::InvalidQuery(format!("need a ≥ 1 and e ≥ 1, got a={a}, e={e}")));
        }
        Ok(BundleSpec { surface, a, e })
    }

    /// Largest `k` with `L^⊗a` k-very ample. A negative value means the
    /// bundle is not even base point free.
    pub fn max_k_very_ample(&self) -> Result<i64> {
        match (self.surface, self.a) {
            (SurfaceKind::K3Surface, 1) => Ok(self.e.div_euclid(2)),
            (SurfaceKind::AbelianSurface, 1) => Ok((self.e - 3).div_euclid(2)),
            _ => self.high_power_bound(2),
        }
    }

    /// `2(a−1)e − shift`, the a ≥ 2 bound shared by both surfaces.
    fn high_power_bound(&self, shift: i64) -> Result<i64> {
        (self.a - 1)
            .checked_mul(self.e)
            .and_then(|x| x.checked_mul(2))
            .map(|x| x - shift)
            .ok_or(Error::Overflow("k-very ampleness bound"))
    }

    /// Base point freeness and very ampleness of the induced bundle on the
    /// Hilbert scheme (K3) or generalized Kummer (abelian) of parameter `n`.
    ///
    /// The inequalities are evaluated as stated:
    ///
    /// | surface | a | bpf | very ample |
    /// |---|---|---|---|
    /// | K3 | 1 | n ≤ e/2 + 1 | n ≤ e/2 |
    /// | K3 | ≥ 2 | n ≤ 2(a−1)e − 1 | n ≤ 2(a−1)e − 2 |
    /// | abelian | 1 | n ≤ ⌊(e−3)/2⌋ | n ≤ ⌊(e−3)/2⌋ − 1 |
    /// | abelian | ≥ 2 | n ≤ 2(a−1)e − 2 | n ≤ 2(a−1)e − 3 |
    pub fn induced_status(&self, n: i64) -> Result<BundleStatus> {
        if n < 2 {
            return Err(Error::InvalidQuery(format!("n must be at least 2, got {n}")));
        }
        let status = match (self.surface, self.a) {
            // n ≤ e/2 + 1 and n ≤ e/2, compared without division.
            (SurfaceKind::K3Surface, 1) => BundleStatus {
                bpf: 2 * n <= self.e + 2,
                very_ample: 2 * n <= self.e,
            },
            (SurfaceKind::K3Surface, _) => BundleStatus {
                bpf: n <= self.high_power_bound(1)?,
                very_ample: n <= self.high_power_bound(2)?,
            },
            (SurfaceKind::AbelianSurface, 1) => {
                let k = (self.e - 3).div_euclid(2);
                BundleStatus { bpf: n <= k, very_ample: n < k }
            }
            (SurfaceKind::AbelianSurface, _) => BundleStatus {
                bpf: n <= self.high_power_bound(2)?,
                very_ample: n <= self.high_power_bound(3)?,
            },
        };
        Ok(status)
    }
}
