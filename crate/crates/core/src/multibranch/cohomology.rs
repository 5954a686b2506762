use serde::Serialize;

use super::cubical::CubicalComplex;
use super::field::Arithmetic;
use super::grid::WeightGrid;
use super::homology::{integral_cohomology, CohomologyGroup};
use super::persistence::{barcode, betti, restriction_rank, Bar};
use crate::graded::{module_from_root, GradedRoot, TowerModule};

/// `H^q(S_n, ℤ)` for `q = 0..=r` and the ranks of `U`, the restriction
/// from level `n + 1`.
#[derive(Clone, Debug, Serialize)]
pub struct LevelCohomology {
    pub n: i64,
    pub groups: Vec<CohomologyGroup>,
    pub u_ranks: Vec<u64>,
}

/// Decomposition of `ℍ^q` for `q ≥ 1`. Barcodes are computed over ℚ, so
/// they are reported as towers only when no torsion shows up in degree `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "decomposition", rename_all = "kebab-case")]
pub enum HigherModule {
    RationalBarcode { q: usize, towers: Vec<(i64, i64)> },
    RankOnly { q: usize },
}

#[derive(Clone, Debug)]
pub struct LatticeCohomology {
    pub r: usize,
    pub min_w0: i64,
    pub levels: Vec<LevelCohomology>,
    pub bars: Vec<Bar>,
    pub arithmetic: Arithmetic,
    pub h0: TowerModule,
    pub higher: Vec<HigherModule>,
    pub root: GradedRoot,
}

impl LatticeCohomology {
    pub fn rank(&self, q: usize, n: i64) -> u64 {
        if n < self.min_w0 {
            return 0;
        }
        match self.levels.iter().find(|l| l.n == n) {
            Some(l) => l.groups[q].rank,
            None => u64::from(q == 0),
        }
    }

    pub fn has_torsion(&self) -> bool {
        self.levels
            .iter()
            .any(|l| l.groups.iter().any(|g| !g.torsion.is_empty()))
    }

    /// `(level, rank H⁰, rank H¹, …)` rows, the rank profile of `ℍ*`.
    pub fn rank_profile(&self) -> Vec<(i64, Vec<u64>)> {
        self.levels
            .iter()
            .map(|l| (l.n, l.groups.iter().map(|g| g.rank).collect()))
            .collect()
    }
}

/// Every level from `min w₀` up to 1, where `S_n` has become contractible.
pub fn lattice_cohomology(grid: &WeightGrid) -> LatticeCohomology {
    let full = CubicalComplex::full_box(grid);
    let r = grid.r();
    let min_w0 = grid.min_w0();
    let (bars, arithmetic) = barcode(&full);
    let top = min_w0.max(1);
    let levels: Vec<LevelCohomology> = (min_w0..=top)
        .map(|n| LevelCohomology {
            n,
            groups: integral_cohomology(&full.sublevel(n)),
            u_ranks: (0..=r).map(|q| restriction_rank(&bars, q, n)).collect(),
        })
        .collect();

    let root = graded_root_of_grid(grid);
    let h0 = module_from_root(&root);
    let higher = (1..r)
        .map(|q| {
            let torsion = levels.iter().any(|l| !l.groups[q].torsion.is_empty());
            if torsion {
                HigherModule::RankOnly { q }
            } else {
                let mut towers: Vec<(i64, i64)> = bars
                    .iter()
                    .filter(|b| b.dim == q)
                    .map(|b| (b.birth, b.death.expect("S_n is contractible for n ≥ 1") - 1))
                    .collect();
                towers.sort_unstable();
                HigherModule::RationalBarcode { q, towers }
            }
        })
        .collect();
    LatticeCohomology {
        r,
        min_w0,
        levels,
        bars,
        arithmetic,
        h0,
        higher,
        root,
    }
}

/// `ℍ⁰` read off the barcode: the infinite bar is the base tower, a bar
/// `[b, d)` is the tower `(b, d − 1)`.
pub fn h0_module_from_bars(bars: &[Bar]) -> TowerModule {
    let base = bars
        .iter()
        .find(|b| b.dim == 0 && b.death.is_none())
        .expect("one infinite bar")
        .birth;
    let towers = bars
        .iter()
        .filter(|b| b.dim == 0)
        .filter_map(|b| b.death.map(|d| (b.birth, d - 1)))
        .collect();
    TowerModule::new(base, towers).expect("bars end by level 1")
}

/// Graded root whose level-`n` vertices are the components of `S_n`, for
/// `min w₀ ≤ n ≤ 1`. Components are ordered by their least vertex index.
pub fn graded_root_of_grid(grid: &WeightGrid) -> GradedRoot {
    let full = CubicalComplex::full_box(grid);
    let cells = full.cells();
    let weights = full.weights();
    let vertex_count = cells.iter().take_while(|c| c.dim() == 0).count();
    let mut uf = UnionFind::new(vertex_count);
    let lo = grid.min_w0();
    let hi = lo.max(1);
    let mut level_reps: Vec<Vec<usize>> = Vec::new();
    let mut level_parents: Vec<Vec<usize>> = Vec::new();
    for n in lo..=hi {
        for (i, c) in cells.iter().enumerate() {
            if c.dim() == 1 && weights[i] == n {
                let [(a, _), (b, _)] = full.boundary(i)[..] else {
                    unreachable!()
                };
                uf.union(a, b);
            }
        }
        // Components present at level n, each named by its least vertex.
        let mut reps: Vec<usize> = (0..vertex_count)
            .filter(|&v| weights[v] <= n && uf.find(v) == v)
            .collect();
        let mut least = vec![usize::MAX; vertex_count];
        for v in (0..vertex_count).filter(|&v| weights[v] <= n) {
            let root = uf.find(v);
            least[root] = least[root].min(v);
        }
        reps.sort_by_key(|&r| least[r]);
        if let Some(prev) = level_reps.last() {
            let parents = prev
                .iter()
                .map(|&p| reps.iter().position(|&r| r == uf.find(p)).unwrap())
                .collect();
            level_parents.push(parents);
        }
        level_reps.push(reps);
    }
    let sizes: Vec<usize> = level_reps.iter().map(Vec::len).collect();
    GradedRoot::from_levels(lo, &sizes, &level_parents)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Keeps the smaller index as the representative.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerCheck {
    pub eu: i64,
    pub delta: i64,
    pub holds: bool,
}

/// `eu(ℍ*) = −min w₀ + Σ_q (−1)^q rank ℍ^q_red` against `δ = |c| − h(c)`.
pub fn euler_delta_check(grid: &WeightGrid, coh: &LatticeCohomology) -> EulerCheck {
    let b = coh.min_w0;
    let mut eu = -b;
    for level in &coh.levels {
        for (q, g) in level.groups.iter().enumerate() {
            let reduced = if q == 0 {
                g.rank as i64 - i64::from(level.n >= b)
            } else {
                g.rank as i64
            };
            eu += if q % 2 == 0 { reduced } else { -reduced };
        }
    }
    let delta = grid.delta() as i64;
    EulerCheck {
        eu,
        delta,
        holds: eu == delta,
    }
}

/// Cross-check of the integral ranks against the rational barcode.
pub fn ranks_match_barcode(coh: &LatticeCohomology) -> bool {
    coh.levels.iter().all(|l| {
        l.groups
            .iter()
            .enumerate()
            .all(|(q, g)| g.rank == betti(&coh.bars, q, l.n))
    })
}
