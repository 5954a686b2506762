//! Recovering the value semigroup of a plane branch from its lattice
//! cohomology module alone.
//!
//! The module determines the level `e` below which the trimmed root stops
//! being a single path, the initial segment `ℰ = S ∩ [0, s_e + 2k_e]` read off
//! level by level, the multiplicity and `δ`. All generators but possibly the
//! last lie in `ℰ`; the last one follows from `c = 2δ` and the partial
//! conductor recursion.

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::graded::{module_from_root, GradedRoot, TowerModule};
use crate::semigroup::{GcdChain, NumericalSemigroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReconstructError {
    #[error("inconsistent module: {0}")]
    InconsistentModule(String),
    #[error("not a branch module: {0}")]
    NotBranchModule(String),
    #[error("non-integral β_g: ({numerator})/({denominator}) is not an integer")]
    NonIntegral { numerator: i64, denominator: i64 },
    #[error("validation failed: {0}")]
    ValidationFailed(String),
}

/// One step of the level descent from 0 down to `e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelStep {
    pub n: i64,
    pub rank: u64,
    pub s: u64,
    pub k: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InitialPart {
    pub e: i64,
    pub elements: Vec<u64>,
    pub levels: Vec<LevelStep>,
    pub delta: u64,
    pub min_w0: i64,
}

/// `e = min{n ≥ b : every finite tower reaching weight ≥ n has length one}`.
pub fn compute_e(module: &TowerModule) -> i64 {
    module
        .towers()
        .iter()
        .filter(|&&(m, n)| m < n)
        .map(|&(_, n)| n + 1)
        .fold(module.base(), i64::max)
}

/// `δ = Σ_{n≤0} rank ℍ_{2n} − 1`.
pub fn delta_from_module(module: &TowerModule) -> Result<u64, ReconstructError> {
    module
        .nonpositive_rank()
        .checked_sub(1)
        .ok_or_else(|| ReconstructError::NotBranchModule("no rank at nonpositive weights".into()))
}

/// Level descent: `s₀ = 0`, the members of weight `n` are `s_n + 2j` for
/// `j < k_n = ⌊rank/2⌋` (and `j = k_e` too at an odd bottom level), and
/// `s_{n−1} = s_n + rank(n)`.
pub fn initial_part(module: &TowerModule) -> Result<InitialPart, ReconstructError> {
    let b = module.base();
    let e = compute_e(module);
    if e > 0 {
        return Err(ReconstructError::InconsistentModule(format!(
            "e = {e} lies above 0"
        )));
    }
    let delta = delta_from_module(module)?;
    let mut s = 0u64;
    let mut elements = Vec::new();
    let mut levels = Vec::new();
    for n in (e..=0).rev() {
        let rank = module.rank(n);
        if rank == 0 {
            return Err(ReconstructError::InconsistentModule(format!(
                "rank vanishes at weight {n}"
            )));
        }
        let k = rank / 2;
        let count = if n == b && rank % 2 == 1 { k + 1 } else { k };
        for j in 0..count {
            let x = s + 2 * j;
            if x > delta {
                return Err(ReconstructError::InconsistentModule(format!(
                    "element {x} at weight {n} exceeds δ = {delta}"
                )));
            }
            elements.push(x);
        }
        levels.push(LevelStep { n, rank, s, k });
        s += rank;
    }
    Ok(InitialPart {
        e,
        elements,
        levels,
        delta,
        min_w0: b,
    })
}

/// `e` read from the root: the least level from which the trimmed root has
/// a single leaf.
pub fn e_from_root(root: &GradedRoot) -> i64 {
    let vs = root.vertices();
    let trimmed: Vec<bool> = (0..vs.len())
        .map(|i| !root.children_of(i).is_empty())
        .collect();
    let min_chi = root.min_chi();
    let leaves_from = |n: i64| {
        (0..vs.len())
            .filter(|&i| trimmed[i] && vs[i].chi >= n)
            .filter(|&i| vs[i].chi == n || root.children_of(i).iter().all(|&c| !trimmed[c]))
            .count()
    };
    let mut e = root.truncation_level();
    while e > min_chi && leaves_from(e - 1) <= 1 {
        e -= 1;
    }
    e
}

/// The same initial segment read off the root: drop all edges of
/// `R_{≥e}`, remove half of each level (rounded up, but rounded down at the
/// bottom level), list the rest by descending χ and output `2i − χ(v_i)`.
pub fn initial_part_from_root(root: &GradedRoot) -> Result<Vec<u64>, ReconstructError> {
    let e = e_from_root(root);
    let min_chi = root.min_chi();
    let mut chis = Vec::new();
    for n in (e..=root.truncation_level()).rev() {
        let count = root.level_size(n);
        let keep = if n == min_chi {
            count.div_ceil(2)
        } else {
            count / 2
        };
        chis.extend(std::iter::repeat_n(n, keep));
    }
    chis.iter()
        .enumerate()
        .map(|(i, &chi)| {
            let a = 2 * i as i64 - chi;
            u64::try_from(a)
                .map_err(|_| ReconstructError::InconsistentModule(format!("negative element {a}")))
        })
        .collect()
}

/// `m = 1` or `2` when the module starts at weight 0 (by `rank ℍ₀`),
/// otherwise `2 − max{n < 0 : ker U ≠ 0 at n}`.
pub fn multiplicity_from_module(module: &TowerModule) -> Result<u64, ReconstructError> {
    let b = module.base();
    match b.cmp(&0) {
        std::cmp::Ordering::Greater => Err(ReconstructError::NotBranchModule(format!(
            "module starts at positive weight {b}"
        ))),
        std::cmp::Ordering::Equal => Ok(if module.rank(0) == 1 { 1 } else { 2 }),
        std::cmp::Ordering::Less => {
            let top = (b..0)
                .rev()
                .find(|&n| module.kernel_rank(n) != 0)
                .ok_or_else(|| {
                    ReconstructError::NotBranchModule("no U-kernel below weight 0".into())
                })?;
            Ok((2 - top) as u64)
        }
    }
}

/// Full result of running the inverse algorithm on a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    pub semigroup: NumericalSemigroup,
    pub initial: Option<InitialPart>,
    pub multiplicity: u64,
    pub delta: u64,
    /// Primitive elements of `ℰ∖{0}`, i.e. the generators found inside `ℰ`.
    pub primitives: Vec<u64>,
}

impl Reconstruction {
    pub fn generators(&self) -> &[u64] {
        self.semigroup.min_gens()
    }

    pub fn chain(&self) -> GcdChain {
        GcdChain::new(self.semigroup.min_gens())
    }
}

/// Reconstructs the semigroup and checks that it reproduces `module`.
pub fn reconstruct(module: &TowerModule) -> Result<Reconstruction, ReconstructError> {
    if module.is_trivial() {
        return Ok(Reconstruction {
            semigroup: NumericalSemigroup::naturals(),
            initial: None,
            multiplicity: 1,
            delta: 0,
            primitives: Vec::new(),
        });
    }
    let initial = initial_part(module)?;
    let delta = initial.delta;
    let multiplicity = multiplicity_from_module(module)?;
    let starred: Vec<u64> = initial
        .elements
        .iter()
        .copied()
        .filter(|&x| x > 0)
        .collect();
    let primitives: Vec<u64> = starred
        .iter()
        .copied()
        .filter(|&x| !starred.iter().any(|&a| a < x && starred.contains(&(x - a))))
        .collect();

    let gens = if primitives.is_empty() {
        if multiplicity < 2 {
            return Err(ReconstructError::NotBranchModule(
                "nontrivial module of multiplicity 1".into(),
            ));
        }
        let beta1 = last_generator(0, multiplicity, delta)?;
        vec![multiplicity, beta1]
    } else {
        let l = primitives.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if l == 1 {
            primitives.clone()
        } else {
            let c_prev = GcdChain::new(&primitives).conductor();
            let mut gens = primitives.clone();
            gens.push(last_generator(c_prev, l, delta)?);
            gens
        }
    };

    let semigroup = NumericalSemigroup::from_generators(&gens)
        .map_err(|err| ReconstructError::ValidationFailed(format!("generators {gens:?}: {err}")))?;
    if !semigroup.is_plane_branch() {
        return Err(ReconstructError::ValidationFailed(format!(
            "{gens:?} is not a plane-branch semigroup"
        )));
    }
    let recomputed = crate::graded::module_of_set(semigroup.as_set());
    if &recomputed != module {
        return Err(ReconstructError::ValidationFailed(format!(
            "semigroup {:?} has a different module",
            semigroup.min_gens()
        )));
    }
    Ok(Reconstruction {
        semigroup,
        initial: Some(initial),
        multiplicity,
        delta,
        primitives,
    })
}

/// Solves `2δ = c_{g−1} + (l_{g−1} − 1)(β_g − 1)` for `β_g`.
fn last_generator(c_prev: u64, l_prev: u64, delta: u64) -> Result<u64, ReconstructError> {
    let numerator = 2 * delta as i64 - c_prev as i64;
    let denominator = l_prev as i64 - 1;
    if numerator <= 0 || numerator % denominator != 0 {
        return Err(ReconstructError::NonIntegral {
            numerator,
            denominator,
        });
    }
    Ok((numerator / denominator + 1) as u64)
}

/// Semigroup only; see [`reconstruct`].
pub fn reconstruct_semigroup(module: &TowerModule) -> Result<NumericalSemigroup, ReconstructError> {
    reconstruct(module).map(|r| r.semigroup)
}

/// Whether `l_{g−1} = 2`, read from the module: `min w₀` is even and the
/// rank is 1 at every odd weight above it.
pub fn detect_lg1_equals_2(module: &TowerModule) -> bool {
    if module.is_trivial() {
        return false;
    }
    let b = module.base();
    b % 2 == 0
        && (b..=1)
            .filter(|n| n.rem_euclid(2) == 1)
            .all(|n| module.rank(n) == 1)
}

/// Ground truth for [`detect_lg1_equals_2`] from generators.
pub fn lg1_equals_2_from_generators(gens: &[u64]) -> bool {
    GcdChain::new(gens).l_penultimate() == Some(2)
}

/// The equivalent numerical test: `β_g > δ` and multiplicity other than 3.
pub fn lg1_equals_2_by_last_generator(s: &NumericalSemigroup) -> bool {
    !s.is_smooth() && *s.min_gens().last().unwrap() > s.delta() && s.multiplicity() != 3
}

/// Convenience for callers holding a root.
pub fn reconstruct_from_root(root: &GradedRoot) -> Result<Reconstruction, ReconstructError> {
    reconstruct(&module_from_root(root))
}
