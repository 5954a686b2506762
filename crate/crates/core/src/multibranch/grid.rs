use std::fmt::Write as _;

use thiserror::Error;

use crate::semigroup::CofiniteSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("grid has {found} values, expected {expected}")]
    Shape { expected: usize, found: usize },
    #[error("h(0) must be 0")]
    NonzeroOrigin,
    #[error("h jumps by more than one (or decreases) at {point:?} along axis {axis}")]
    BadStep { point: Vec<u64>, axis: usize },
    #[error("h does not grow along axis {axis} beyond the conductor at {point:?}")]
    Unstable { point: Vec<u64>, axis: usize },
}

/// Values of the Hilbert function `h` on the box `[0, extent]`, where the
/// extent is either the conductor `c` or `c + 1` on every axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightGrid {
    conductor: Vec<u64>,
    extent: Vec<u64>,
    h: Vec<u64>,
}

impl WeightGrid {
    /// `h` on `[0, c + 1]`, axis 0 varying slowest.
    pub fn from_hilbert(conductor: Vec<u64>, h: Vec<u64>) -> Result<Self, GridError> {
        let extent = conductor.iter().map(|c| c + 1).collect();
        Self::checked(conductor, extent, h)
    }

    /// `h` on `[0, c]` only; extend with [`weight_grid_extend`].
    pub fn from_conductor_box(conductor: Vec<u64>, h: Vec<u64>) -> Result<Self, GridError> {
        let extent = conductor.clone();
        Self::checked(conductor, extent, h)
    }

    fn checked(conductor: Vec<u64>, extent: Vec<u64>, h: Vec<u64>) -> Result<Self, GridError> {
        let expected = extent.iter().map(|&e| e as usize + 1).product();
        if h.len() != expected {
            return Err(GridError::Shape {
                expected,
                found: h.len(),
            });
        }
        let grid = Self {
            conductor,
            extent,
            h,
        };
        if grid.h[0] != 0 {
            return Err(GridError::NonzeroOrigin);
        }
        for idx in 0..grid.h.len() {
            let p = grid.point(idx);
            for axis in 0..grid.r() {
                if p[axis] == grid.extent[axis] {
                    continue;
                }
                let step = grid.h[idx + grid.stride(axis)] as i64 - grid.h[idx] as i64;
                if !(0..=1).contains(&step) {
                    return Err(GridError::BadStep { point: p, axis });
                }
                if p[axis] >= grid.conductor[axis] && step != 1 {
                    return Err(GridError::Unstable { point: p, axis });
                }
            }
        }
        Ok(grid)
    }

    /// `h(ℓ) = #([0, ℓ) ∩ S)` on `[0, c + 1]`.
    pub fn from_semigroup(set: &CofiniteSet) -> Self {
        let c = set.conductor();
        let mut h = Vec::with_capacity(c as usize + 2);
        let mut count = 0;
        for l in 0..=c + 1 {
            h.push(count);
            count += u64::from(set.contains(l));
        }
        Self {
            conductor: vec![c],
            extent: vec![c + 1],
            h,
        }
    }

    pub fn r(&self) -> usize {
        self.conductor.len()
    }

    pub fn conductor(&self) -> &[u64] {
        &self.conductor
    }

    pub fn extent(&self) -> &[u64] {
        &self.extent
    }

    pub fn is_extended(&self) -> bool {
        self.extent
            .iter()
            .zip(&self.conductor)
            .all(|(e, c)| *e == c + 1)
    }

    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    pub fn stride(&self, axis: usize) -> usize {
        self.extent[axis + 1..]
            .iter()
            .map(|&e| e as usize + 1)
            .product()
    }

    pub fn index(&self, point: &[u64]) -> usize {
        point
            .iter()
            .enumerate()
            .map(|(a, &x)| x as usize * self.stride(a))
            .sum()
    }

    pub fn point(&self, mut index: usize) -> Vec<u64> {
        let mut p = vec![0; self.r()];
        for a in (0..self.r()).rev() {
            let side = self.extent[a] as usize + 1;
            p[a] = (index % side) as u64;
            index /= side;
        }
        p
    }

    pub fn h_values(&self) -> &[u64] {
        &self.h
    }

    pub fn h(&self, point: &[u64]) -> u64 {
        self.h[self.index(point)]
    }

    /// `w₀(ℓ) = 2h(ℓ) − |ℓ|`.
    pub fn w0(&self, point: &[u64]) -> i64 {
        2 * self.h(point) as i64 - point.iter().sum::<u64>() as i64
    }

    pub fn w0_at_index(&self, index: usize) -> i64 {
        2 * self.h[index] as i64 - self.point(index).iter().sum::<u64>() as i64
    }

    /// Minimum of `w₀`; it is attained inside `[0, c]`.
    pub fn min_w0(&self) -> i64 {
        (0..self.len())
            .filter(|&i| {
                self.point(i)
                    .iter()
                    .zip(&self.conductor)
                    .all(|(x, c)| x <= c)
            })
            .map(|i| self.w0_at_index(i))
            .min()
            .unwrap()
    }

    /// `δ = |c| − h(c)`.
    pub fn delta(&self) -> u64 {
        self.conductor.iter().sum::<u64>() - self.h(&self.conductor)
    }

    /// The same grid cut down to `[0, c]`.
    pub fn restrict_to_conductor_box(&self) -> Self {
        let mut h = Vec::new();
        for i in 0..self.len() {
            if self
                .point(i)
                .iter()
                .zip(&self.conductor)
                .all(|(x, c)| x <= c)
            {
                h.push(self.h[i]);
            }
        }
        Self {
            conductor: self.conductor.clone(),
            extent: self.conductor.clone(),
            h,
        }
    }

    /// The value set of a single branch, read off the jumps of `h`.
    pub fn value_set(&self) -> Option<CofiniteSet> {
        if self.r() != 1 {
            return None;
        }
        let c = self.conductor[0];
        let members: Vec<u64> = (0..c)
            .filter(|&l| self.h[l as usize + 1] > self.h[l as usize])
            .collect();
        CofiniteSet::new(&members, c).ok()
    }

    /// `w₀` as text. Two branches give a matrix with `ℓ₁` down the rows and
    /// `ℓ₂` across; otherwise one `point h w0` row per lattice point.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        if self.r() == 2 {
            out.push_str("l1\\l2");
            for j in 0..=self.extent[1] {
                write!(out, "\t{j}").unwrap();
            }
            out.push('\n');
            for i in 0..=self.extent[0] {
                write!(out, "{i}").unwrap();
                for j in 0..=self.extent[1] {
                    write!(out, "\t{}", self.w0(&[i, j])).unwrap();
                }
                out.push('\n');
            }
        } else {
            out.push_str("point\th\tw0\n");
            for i in 0..self.len() {
                let p: Vec<String> = self.point(i).iter().map(u64::to_string).collect();
                writeln!(
                    out,
                    "{}\t{}\t{}",
                    p.join(","),
                    self.h[i],
                    self.w0_at_index(i)
                )
                .unwrap();
            }
        }
        out
    }
}

/// Extends a grid on `[0, c]` to `[0, c + 1]` with the stabilization rule
/// `h(ℓ + eᵢ) = h(ℓ) + 1` for `ℓᵢ ≥ cᵢ`. Extended grids come back unchanged.
pub fn weight_grid_extend(grid: &WeightGrid) -> WeightGrid {
    if grid.is_extended() {
        return grid.clone();
    }
    let conductor = grid.conductor.clone();
    let extent: Vec<u64> = conductor.iter().map(|c| c + 1).collect();
    let mut out = WeightGrid {
        conductor: conductor.clone(),
        extent,
        h: Vec::new(),
    };
    let total: usize = out.extent.iter().map(|&e| e as usize + 1).product();
    out.h = (0..total)
        .map(|i| {
            let p = out.point(i);
            let clamped: Vec<u64> = p.iter().zip(&conductor).map(|(&x, &c)| x.min(c)).collect();
            let over: u64 = p.iter().zip(&clamped).map(|(x, y)| x - y).sum();
            grid.h(&clamped) + over
        })
        .collect();
    out
}
