use std::collections::HashMap;

use thiserror::Error;

use super::tower::TowerModule;
use crate::weight1d::WeightSequence;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("graded root has no vertices")]
    Empty,
    #[error("duplicate vertex id {0}")]
    DuplicateId(usize),
    #[error("edge refers to unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("edge {0}-{1} does not join adjacent levels")]
    BadEdgeGrading(usize, usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} has more than one upward neighbor")]
    TwoUpwardNeighbors(usize),
    #[error("edges do not form a tree")]
    NotATree,
    #[error("truncation level {0} must hold exactly one vertex and bound all levels from above")]
    Truncation(i64),
    #[error(
        "S_{level} has {components} components; sublevel sets must be connected from level 1 up"
    )]
    DisconnectedAboveZero { level: i64, components: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub id: usize,
    pub chi: i64,
}

/// A graded root cut off at `truncation_level`; the single vertex there
/// stands for the infinite chain above it.
#[derive(Clone, Debug)]
pub struct GradedRoot {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    truncation_level: i64,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    top: usize,
}

/// Which of two equally old branches keeps its tower at a merge.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// Close the tower whose leaf has the larger id.
    #[default]
    CloseLargerId,
    CloseSmallerId,
}

impl GradedRoot {
    pub fn new(
        vertices: Vec<Vertex>,
        edges: Vec<(usize, usize)>,
        truncation_level: i64,
    ) -> Result<Self, RootError> {
        if vertices.is_empty() {
            return Err(RootError::Empty);
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id, i).is_some() {
                return Err(RootError::DuplicateId(v.id));
            }
        }
        let mut parent = vec![None; vertices.len()];
        let mut children = vec![Vec::new(); vertices.len()];
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &edges {
            let ia = *index.get(&a).ok_or(RootError::UnknownVertex(a))?;
            let ib = *index.get(&b).ok_or(RootError::UnknownVertex(b))?;
            let (lo, hi) = match vertices[ib].chi - vertices[ia].chi {
                1 => (ia, ib),
                -1 => (ib, ia),
                _ => return Err(RootError::BadEdgeGrading(a, b)),
            };
            if !seen.insert((lo, hi)) {
                return Err(RootError::DuplicateEdge(a, b));
            }
            if parent[lo].replace(hi).is_some() {
                return Err(RootError::TwoUpwardNeighbors(vertices[lo].id));
            }
            children[hi].push(lo);
        }
        let at_top: Vec<usize> = (0..vertices.len())
            .filter(|&i| vertices[i].chi == truncation_level)
            .collect();
        if at_top.len() != 1 || vertices.iter().any(|v| v.chi > truncation_level) {
            return Err(RootError::Truncation(truncation_level));
        }
        let top = at_top[0];
        // Every vertex except the top has one upward edge, so the edge count
        // is right; following parents must reach the top.
        if edges.len() != vertices.len() - 1 {
            return Err(RootError::NotATree);
        }
        for start in 0..vertices.len() {
            let mut v = start;
            while let Some(p) = parent[v] {
                v = p;
            }
            if v != top {
                return Err(RootError::NotATree);
            }
        }
        for ch in &mut children {
            ch.sort_by_key(|&c| (vertices[c].chi, vertices[c].id));
        }
        Ok(Self {
            vertices,
            edges,
            truncation_level,
            parent,
            children,
            top,
        })
    }

    /// Builds a root from per-level component data: `parents[k][j]` is the
    /// index (within level `min_level + k + 1`) of the component containing
    /// component `j` of level `min_level + k`. The last level must have a
    /// single component. Ids are assigned level by level in the given order.
    pub fn from_levels(min_level: i64, level_sizes: &[usize], parents: &[Vec<usize>]) -> Self {
        assert_eq!(parents.len() + 1, level_sizes.len());
        assert_eq!(*level_sizes.last().unwrap(), 1);
        let mut offsets = Vec::with_capacity(level_sizes.len());
        let mut vertices = Vec::new();
        for (k, &size) in level_sizes.iter().enumerate() {
            offsets.push(vertices.len());
            for _ in 0..size {
                vertices.push(Vertex {
                    id: vertices.len(),
                    chi: min_level + k as i64,
                });
            }
        }
        let mut edges = Vec::new();
        for (k, ps) in parents.iter().enumerate() {
            for (j, &p) in ps.iter().enumerate() {
                edges.push((offsets[k] + j, offsets[k + 1] + p));
            }
        }
        let top_level = min_level + level_sizes.len() as i64 - 1;
        Self::new(vertices, edges, top_level).expect("component data forms a graded root")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn truncation_level(&self) -> i64 {
        self.truncation_level
    }

    pub fn min_chi(&self) -> i64 {
        self.vertices.iter().map(|v| v.chi).min().unwrap()
    }

    pub fn top_index(&self) -> usize {
        self.top
    }

    pub fn children_of(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    pub fn parent_of(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    /// Number of vertices at level `n` (1 above the truncation level).
    pub fn level_size(&self, n: i64) -> usize {
        if n > self.truncation_level {
            return 1;
        }
        self.vertices.iter().filter(|v| v.chi == n).count()
    }

    /// Leaves (local minimum points) at level `n`.
    pub fn leaf_count(&self, n: i64) -> usize {
        (0..self.vertices.len())
            .filter(|&i| self.vertices[i].chi == n && self.children[i].is_empty())
            .count()
    }

    /// Tower decomposition of `ℍ(R, χ)` by merging branches bottom-up: each
    /// leaf opens a tower, and where branches meet at level `n` all but the
    /// oldest close at `n − 1`.
    pub fn tower_module(&self, tie: TieBreak) -> TowerModule {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by_key(|&i| (self.vertices[i].chi, self.vertices[i].id));
        // (birth level, leaf id) of the tower each vertex carries upward.
        let mut carried: Vec<(i64, usize)> = vec![(0, 0); self.vertices.len()];
        let mut towers = Vec::new();
        for &v in &order {
            let kids = &self.children[v];
            if kids.is_empty() {
                carried[v] = (self.vertices[v].chi, self.vertices[v].id);
                continue;
            }
            let mut incoming: Vec<(i64, usize)> = kids.iter().map(|&c| carried[c]).collect();
            incoming.sort_by(|a, b| match tie {
                TieBreak::CloseLargerId => a.cmp(b),
                TieBreak::CloseSmallerId => a.0.cmp(&b.0).then(b.1.cmp(&a.1)),
            });
            carried[v] = incoming[0];
            for &(birth, _) in &incoming[1..] {
                towers.push((birth, self.vertices[v].chi - 1));
            }
        }
        let base = carried[self.top].0;
        TowerModule::new(base, towers).expect("merge towers are nested in the root")
    }
}

/// Graded root of a one-variable weight function: vertices are components of
/// `S_n` for `min w₀ ≤ n ≤ 1`, joined when one contains the other.
///
/// # Panics
///
/// If `S_1` is disconnected, which never happens for a semigroup; see
/// [`try_root_from_weight`] for arbitrary cofinite sets.
pub fn root_from_weight(w: &WeightSequence) -> GradedRoot {
    try_root_from_weight(w).expect("S_1 is connected")
}

/// [`root_from_weight`] for any cofinite set, failing when some `S_n` with
/// `n ≥ 1` is disconnected.
pub fn try_root_from_weight(w: &WeightSequence) -> Result<GradedRoot, RootError> {
    let top = *w.values().iter().max().unwrap();
    for level in 1..top {
        let components = w.sublevel_components(level).len();
        if components > 1 {
            return Err(RootError::DisconnectedAboveZero { level, components });
        }
    }
    let lo = w.min();
    let hi = 1.max(lo);
    let levels: Vec<_> = (lo..=hi).map(|n| w.sublevel_components(n)).collect();
    let sizes: Vec<usize> = levels.iter().map(Vec::len).collect();
    let parents: Vec<Vec<usize>> = levels
        .windows(2)
        .map(|pair| {
            pair[0]
                .iter()
                .map(|comp| {
                    pair[1]
                        .iter()
                        .position(|up| up.contains(comp))
                        .expect("sublevel sets are nested")
                })
                .collect()
        })
        .collect();
    Ok(GradedRoot::from_levels(lo, &sizes, &parents))
}

/// Module of a cofinite set through its one-variable weight function.
pub fn module_of_set(set: &crate::semigroup::CofiniteSet) -> TowerModule {
    module_from_root(&root_from_weight(&crate::weight1d::weight_sequence(set)))
}

/// `ℍ(R, χ)` with the default tie policy.
pub fn module_from_root(root: &GradedRoot) -> TowerModule {
    root.tower_module(TieBreak::default())
}
