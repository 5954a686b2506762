use std::collections::HashMap;

use super::grid::WeightGrid;

/// A cube of the unit lattice: the vertex `base` (linear index in the box)
/// spanning unit steps along the axes set in `axes`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub base: usize,
    pub axes: u32,
}

impl Cell {
    pub fn dim(&self) -> usize {
        self.axes.count_ones() as usize
    }
}

/// Cubes of the box `[0, c]` with their weights (vertex maxima), possibly
/// restricted to a sublevel set. Cells are sorted by `(dim, base, axes)`.
#[derive(Clone, Debug)]
pub struct CubicalComplex {
    sides: Vec<usize>,
    strides: Vec<usize>,
    cells: Vec<Cell>,
    weights: Vec<i64>,
    index: HashMap<Cell, usize>,
}

impl CubicalComplex {
    /// Every cube of `[0, c]`.
    pub fn full_box(grid: &WeightGrid) -> Self {
        let sides: Vec<usize> = grid.conductor().iter().map(|&c| c as usize + 1).collect();
        let r = sides.len();
        let mut strides = vec![1usize; r];
        for a in (0..r.saturating_sub(1)).rev() {
            strides[a] = strides[a + 1] * sides[a + 1];
        }
        let vertex_count = strides[0] * sides[0];
        let coords = |v: usize| -> Vec<u64> {
            (0..r)
                .map(|a| ((v / strides[a]) % sides[a]) as u64)
                .collect()
        };
        let vertex_weight: Vec<i64> = (0..vertex_count).map(|v| grid.w0(&coords(v))).collect();

        let mut cells = Vec::new();
        for v in 0..vertex_count {
            let p = coords(v);
            let open: u32 = (0..r)
                .filter(|&a| (p[a] as usize) + 1 < sides[a])
                .fold(0, |m, a| m | (1 << a));
            // Every subset of the open directions.
            let mut axes = open;
            loop {
                cells.push(Cell { base: v, axes });
                if axes == 0 {
                    break;
                }
                axes = (axes - 1) & open;
            }
        }
        cells.sort_by_key(|c| (c.dim(), c.base, c.axes));
        let weights = cells
            .iter()
            .map(|c| {
                let mut best = i64::MIN;
                let mut sub = c.axes;
                loop {
                    let offset: usize = (0..r)
                        .filter(|&a| sub & (1 << a) != 0)
                        .map(|a| strides[a])
                        .sum();
                    best = best.max(vertex_weight[c.base + offset]);
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & c.axes;
                }
                best
            })
            .collect();
        Self::assemble(sides, strides, cells, weights)
    }

    fn assemble(
        sides: Vec<usize>,
        strides: Vec<usize>,
        cells: Vec<Cell>,
        weights: Vec<i64>,
    ) -> Self {
        let index = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        Self {
            sides,
            strides,
            cells,
            weights,
            index,
        }
    }

    /// Cells of weight at most `n`; closed under faces because a face's
    /// vertices are among the cube's.
    pub fn sublevel(&self, n: i64) -> Self {
        let (cells, weights) = self
            .cells
            .iter()
            .zip(&self.weights)
            .filter(|(_, &w)| w <= n)
            .map(|(c, w)| (*c, *w))
            .unzip();
        Self::assemble(self.sides.clone(), self.strides.clone(), cells, weights)
    }

    pub fn r(&self) -> usize {
        self.sides.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn count_of_dim(&self, q: usize) -> usize {
        self.cells.iter().filter(|c| c.dim() == q).count()
    }

    pub fn index_of(&self, cell: &Cell) -> Option<usize> {
        self.index.get(cell).copied()
    }

    /// Faces of cell `i` with orientation signs: for the `p`-th axis `a` of
    /// the cube, the face moved by `e_a` has sign `(−1)^p` and the face at
    /// the base has the opposite sign.
    pub fn boundary(&self, i: usize) -> Vec<(usize, i64)> {
        let c = self.cells[i];
        let mut out = Vec::with_capacity(2 * c.dim());
        let mut p = 0;
        for a in 0..self.r() {
            if c.axes & (1 << a) == 0 {
                continue;
            }
            let sign = if p % 2 == 0 { 1 } else { -1 };
            let axes = c.axes & !(1 << a);
            let upper = Cell {
                base: c.base + self.strides[a],
                axes,
            };
            let lower = Cell { base: c.base, axes };
            out.push((self.index[&upper], sign));
            out.push((self.index[&lower], -sign));
            p += 1;
        }
        out
    }

    /// Lattice point of a vertex index.
    pub fn vertex_point(&self, v: usize) -> Vec<u64> {
        (0..self.r())
            .map(|a| ((v / self.strides[a]) % self.sides[a]) as u64)
            .collect()
    }
}

/// `S_n` as a cubical complex on `[0, c]`. Past the conductor `w₀` grows
/// along each axis, so pushing coordinates back to `c` retracts the full
/// sublevel set onto this one.
pub fn sublevel_complex(grid: &WeightGrid, n: i64) -> CubicalComplex {
    CubicalComplex::full_box(grid).sublevel(n)
}
