use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("tower [{0}, {1}] has its bottom above its top")]
    Inverted(i64, i64),
    #[error("tower [{bottom}, {top}] starts below the infinite tower at {base}")]
    BelowBase { bottom: i64, top: i64, base: i64 },
    #[error("tower [{0}, {1}] reaches positive weight, where the module has rank 1")]
    PositiveTop(i64, i64),
}

/// A graded `ℤ[U]`-module `T^∞_{2b} ⊕ ⨁_k T^{2n_k}_{2m_k}`, recorded in
/// weight units (half the cohomological degree).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TowerModule {
    base: i64,
    towers: Vec<(i64, i64)>,
}

impl TowerModule {
    /// Validates and canonicalizes (towers sorted by `(m_k, n_k)`).
    pub fn new(base: i64, mut towers: Vec<(i64, i64)>) -> Result<Self, ModuleError> {
        for &(m, n) in &towers {
            if m > n {
                return Err(ModuleError::Inverted(m, n));
            }
            if m < base {
                return Err(ModuleError::BelowBase {
                    bottom: m,
                    top: n,
                    base,
                });
            }
            if n > 0 {
                return Err(ModuleError::PositiveTop(m, n));
            }
        }
        towers.sort_unstable();
        Ok(Self { base, towers })
    }

    /// `T^∞_0`, the module of a smooth germ.
    pub fn trivial() -> Self {
        Self {
            base: 0,
            towers: Vec::new(),
        }
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn towers(&self) -> &[(i64, i64)] {
        &self.towers
    }

    pub fn is_trivial(&self) -> bool {
        self.base == 0 && self.towers.is_empty()
    }

    /// `rank_ℤ ℍ_{2n}`.
    pub fn rank(&self, n: i64) -> u64 {
        u64::from(n >= self.base)
            + self
                .towers
                .iter()
                .filter(|&&(m, t)| m <= n && n <= t)
                .count() as u64
    }

    /// `rank_ℤ ker(U : ℍ_{2n} → ℍ_{2n−2})`.
    pub fn kernel_rank(&self, n: i64) -> u64 {
        u64::from(n == self.base) + self.towers.iter().filter(|&&(m, _)| m == n).count() as u64
    }

    /// `(rank, kernel_rank)` for every weight from the base up to 1.
    pub fn rank_profile(&self) -> BTreeMap<i64, (u64, u64)> {
        (self.base..=self.base.max(1))
            .map(|n| (n, (self.rank(n), self.kernel_rank(n))))
            .collect()
    }

    /// `Σ_{n ≤ 0} rank ℍ_{2n}`.
    pub fn nonpositive_rank(&self) -> u64 {
        (self.base..=0).map(|n| self.rank(n)).sum()
    }

    /// Euler characteristic `−b + Σ_k (n_k − m_k + 1)`.
    pub fn euler_characteristic(&self) -> i64 {
        -self.base + self.towers.iter().map(|&(m, n)| n - m + 1).sum::<i64>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_pair_module() -> TowerModule {
        // T^∞_{−4} ⊕ T^{−2}_{−4} ⊕ T_{−4} ⊕ T_{−4} in weight units.
        TowerModule::new(-2, vec![(-2, -2), (-2, -1), (-2, -2)]).unwrap()
    }

    #[test]
    fn ranks_of_example_pair_module() {
        let m = example_pair_module();
        assert_eq!(m.towers(), &[(-2, -2), (-2, -2), (-2, -1)]);
        // Read off both pictured roots: four leaves at −2, two vertices at −1.
        assert_eq!(m.rank(-2), 4);
        assert_eq!(m.kernel_rank(-2), 4);
        assert_eq!(m.rank(-1), 2);
        assert_eq!(m.kernel_rank(-1), 0);
        assert_eq!(m.rank(0), 1);
        assert_eq!(m.rank(-3), 0);
    }

    #[test]
    fn trivial_module_profile() {
        let m = TowerModule::trivial();
        let profile = m.rank_profile();
        assert_eq!(profile[&0], (1, 1));
        assert_eq!(profile[&1], (1, 0));
        assert_eq!(m.rank(17), 1);
        assert_eq!(m.kernel_rank(17), 0);
        assert_eq!(m.euler_characteristic(), 0);
    }

    #[test]
    fn validation() {
        assert_eq!(
            TowerModule::new(0, vec![(0, -1)]),
            Err(ModuleError::Inverted(0, -1))
        );
        assert!(matches!(
            TowerModule::new(0, vec![(-1, 0)]),
            Err(ModuleError::BelowBase { .. })
        ));
        assert_eq!(
            TowerModule::new(-1, vec![(0, 1)]),
            Err(ModuleError::PositiveTop(0, 1))
        );
    }
}
