//! Parameter context and the combinatorics of the weight set Λ_n.
//!
//! Everything downstream is driven by three integers: the family (ordinary or
//! dilute), the number of strands `n`, and the order `ℓ` of the root of unity
//! (the smallest positive integer with q^{2ℓ} = 1). The deformation parameter
//! q itself is never materialised; orbit membership is decided by the exact
//! congruence k'+1 ≡ ±(k+1) (mod 2ℓ), which is equivalent to equality of the
//! central-element eigenvalues δ_k = q^{k+1} + q^{-k-1} for primitive roots.
//!
//! An integer k is *critical* when k ≡ ℓ−1 (mod ℓ). Reflections through the
//! critical integers partition the non-critical part of Λ_n into *orbits*
//! k_L < … < k⁻ < k < k⁺ < … < k_R, with exactly one member between each pair
//! of consecutive mirrors. Reflection chains are allowed to leave Λ_n; such
//! *virtual* neighbours are first-class integers here and higher layers treat
//! any module labelled outside Λ_n as zero.

use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Ordinary Temperley-Lieb algebra TL_n(β).
    Tl,
    /// Dilute Temperley-Lieb algebra dTL_n(β).
    Dtl,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Tl => "tl",
            Family::Dtl => "dtl",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Which algebra we are working over: family, size and root-of-unity order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgebraCtx {
    pub family: Family,
    pub n: i64,
    pub ell: i64,
}

impl AlgebraCtx {
    /// Requires n ≥ 1 and ℓ ≥ 2 (q = ±1 would make the algebra semisimple,
    /// which is out of scope).
    pub fn new(family: Family, n: i64, ell: i64) -> Result<Self> {
        if n < 1 {
            return Err(domain(format!("n must be at least 1, got {n}")));
        }
        if ell < 2 {
            return Err(domain(format!("ell must be at least 2, got {ell}")));
        }
        Ok(AlgebraCtx { family, n, ell })
    }

    /// β = 0 degeneracy: TL with n even at ℓ = 2, where Irr_0 vanishes.
    pub fn degenerate(&self) -> bool {
        self.family == Family::Tl && self.n % 2 == 0 && self.ell == 2
    }

    /// k ≡ ℓ−1 (mod ℓ). Accepts any integer, including virtual ones.
    pub fn is_critical(&self, k: i64) -> bool {
        (k + 1).rem_euclid(self.ell) == 0
    }

    /// The weight set Λ_n: all of 0..=n for dTL, the part of parity n for TL.
    pub fn lambda_set(&self) -> Vec<i64> {
        (0..=self.n)
            .filter(|k| self.family == Family::Dtl || (self.n - k) % 2 == 0)
            .collect()
    }

    /// Λ_{n,0}: the labels of the non-zero irreducibles. Drops 0 exactly in
    /// the degenerate case.
    pub fn lambda0_set(&self) -> Vec<i64> {
        self.lambda_set()
            .into_iter()
            .filter(|&k| !(k == 0 && self.degenerate()))
            .collect()
    }

    pub fn in_lambda(&self, k: i64) -> bool {
        (0..=self.n).contains(&k) && (self.family == Family::Dtl || (self.n - k) % 2 == 0)
    }

    pub fn in_lambda0(&self, k: i64) -> bool {
        self.in_lambda(k) && !(k == 0 && self.degenerate())
    }

    /// The critical integer immediately above the non-critical k.
    fn mirror_above(&self, k: i64) -> i64 {
        k + (self.ell - 1 - k.rem_euclid(self.ell))
    }

    /// The j-th orbit neighbour k^j of a non-critical k, as a virtual integer.
    /// Positive j reflects through the mirror above, negative through the one
    /// below, alternating so that k < k⁺ < k⁺⁺ < … and … < k⁻⁻ < k⁻ < k.
    pub fn neighbor(&self, k: i64, j: i64) -> Result<i64> {
        if self.is_critical(k) {
            return Err(domain(format!("neighbor of critical index {k}")));
        }
        let mut cur = k;
        for _ in 0..j.abs() {
            let up = self.mirror_above(cur);
            let mirror = if j > 0 { up } else { up - self.ell };
            cur = 2 * mirror - cur;
        }
        Ok(cur)
    }

    /// Orbit equivalence of two members of Λ_n: identical criticals, or the
    /// same parity together with k'+1 ≡ ±(k+1) (mod 2ℓ).
    pub fn orbit_equivalent(&self, k: i64, k2: i64) -> bool {
        if !self.in_lambda(k) || !self.in_lambda(k2) {
            return false;
        }
        match (self.is_critical(k), self.is_critical(k2)) {
            (true, true) => k == k2,
            (false, false) => {
                let m = 2 * self.ell;
                (k - k2) % 2 == 0
                    && ((k2 + 1 - (k + 1)).rem_euclid(m) == 0
                        || (k2 + 1 + (k + 1)).rem_euclid(m) == 0)
            }
            _ => false,
        }
    }

    /// Parity grading of the dilute algebra: the parity of n − k.
    pub fn parity(&self, k: i64) -> Result<u8> {
        if self.family != Family::Dtl {
            return Err(domain("parity is defined for the dilute family only"));
        }
        if !self.in_lambda(k) {
            return Err(domain(format!("{k} is not in the weight set")));
        }
        Ok(((self.n - k).rem_euclid(2)) as u8)
    }

    /// The reflection class of k inside Λ_n.
    pub fn orbit_of(&self, k: i64) -> Result<OrbitView> {
        if !self.in_lambda(k) {
            return Err(domain(format!("{k} is not in the weight set")));
        }
        let parity = match self.family {
            Family::Dtl => Some(((self.n - k).rem_euclid(2)) as u8),
            Family::Tl => None,
        };
        if self.is_critical(k) {
            return Ok(OrbitView {
                kind: OrbitKind::CriticalSingleton(k),
                parity,
            });
        }
        let mut members = vec![k];
        let mut cur = k;
        loop {
            cur = self.neighbor(cur, -1)?;
            if cur < 0 {
                break;
            }
            members.insert(0, cur);
        }
        cur = k;
        loop {
            cur = self.neighbor(cur, 1)?;
            if cur > self.n {
                break;
            }
            members.push(cur);
        }
        Ok(OrbitView {
            kind: OrbitKind::NonCritical(members),
            parity,
        })
    }

    /// Leftmost member k_L of the orbit of a non-critical k (within Λ_n).
    pub fn orbit_left(&self, k: i64) -> Result<i64> {
        let mut cur = k;
        loop {
            let next = self.neighbor(cur, -1)?;
            if next < 0 {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Rightmost member k_R of the orbit of a non-critical k (within Λ_n).
    pub fn orbit_right(&self, k: i64) -> Result<i64> {
        let mut cur = k;
        loop {
            let next = self.neighbor(cur, 1)?;
            if next > self.n {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Position of a label within its orbit, counting k_L as 0.
    pub fn orbit_position(&self, k: i64) -> Result<i64> {
        let left = self.orbit_left(k)?;
        let mut cur = left;
        let mut pos = 0;
        while cur != k {
            cur = self.neighbor(cur, 1)?;
            pos += 1;
        }
        Ok(pos)
    }

    /// Every orbit of Λ_n, criticals included, ordered by smallest member.
    pub fn all_orbits(&self) -> Vec<OrbitView> {
        let mut seen: Vec<i64> = Vec::new();
        let mut orbits = Vec::new();
        for k in self.lambda_set() {
            if seen.contains(&k) {
                continue;
            }
            let orbit = self.orbit_of(k).expect("k ranges over the weight set");
            seen.extend_from_slice(orbit.members());
            orbits.push(orbit);
        }
        orbits
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitKind {
    CriticalSingleton(i64),
    /// Strictly increasing members of a non-critical orbit, all inside Λ_n.
    NonCritical(Vec<i64>),
}

/// One class of the reflection partition of Λ_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitView {
    pub kind: OrbitKind,
    /// Parity of n − k, constant on the orbit; dilute family only.
    pub parity: Option<u8>,
}

impl OrbitView {
    pub fn members(&self) -> &[i64] {
        match &self.kind {
            OrbitKind::CriticalSingleton(k) => std::slice::from_ref(k),
            OrbitKind::NonCritical(m) => m,
        }
    }

    pub fn is_critical(&self) -> bool {
        matches!(self.kind, OrbitKind::CriticalSingleton(_))
    }
}
