//! The Hilbert function `h(ℓ) = dim 𝒪/ℱ(ℓ)` of a parametrized germ.
//!
//! Everything happens in `V_L = ⊕ᵢ ℚ[tᵢ]/tᵢ^{Lᵢ}`. The image `A_L` of the
//! local ring there is the span of all monomials in the coordinates. Its
//! piece supported on branch `i` alone gives a candidate conductor `cᵢ`.
//! When `Lᵢ ≥ cᵢ + mᵢ` on every branch (`mᵢ` the branch multiplicity), the
//! candidate is the true conductor: with `X = ⊕ tᵢ^{cᵢ}ℚ[[tᵢ]]` we get
//! `X ⊆ 𝒪 + t^L·N ⊆ 𝒪 + g·X` for a generic `g` in the maximal ideal, hence
//! `X ⊆ 𝒪 + gᵏX` for all `k`, so `X ⊆ 𝒪`. Then `t^L·N ⊆ 𝒪` and every
//! `h(ℓ)` with `ℓ ≤ L` is read off `A_L` exactly.

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use super::field::{with_fallback, Arithmetic, Fallible, Overflow, Scalar, SmallRational};
use super::grid::{GridError, WeightGrid};
use super::param::BranchParametrization;

/// Largest per-branch truncation tried automatically.
pub const MAX_BOUND: usize = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HilbertError {
    #[error("truncation not stabilized: bound {bound} does not certify the conductor")]
    NotStabilized { bound: usize },
    #[error("conductor {given:?} was given but the parametrization has conductor {found:?}")]
    ConductorMismatch { given: Vec<u64>, found: Vec<u64> },
    #[error("conductor has {found} entries for {expected} branches")]
    ConductorLength { expected: usize, found: usize },
    #[error(transparent)]
    Grid(#[from] GridError),
}

#[derive(Clone, Debug, Default)]
pub struct HilbertOptions {
    /// Fixed per-branch truncation; fails unless it certifies the conductor.
    pub bound: Option<usize>,
    /// Expected conductor; the truncation is sized from it and it is checked.
    pub conductor: Option<Vec<u64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertReport {
    pub bounds: Vec<usize>,
    pub conductor: Vec<u64>,
    pub multiplicities: Vec<u64>,
    pub algebra_dim: usize,
    pub arithmetic: Arithmetic,
}

#[derive(Clone, Debug)]
pub struct HilbertData {
    pub grid: WeightGrid,
    pub report: HilbertReport,
}

pub fn hilbert_from_parametrization(
    p: &BranchParametrization,
    opts: &HilbertOptions,
) -> Result<HilbertData, HilbertError> {
    let ((grid, bounds, dim), arithmetic) = with_fallback(
        || run::<SmallRational>(p, opts),
        || run::<BigRational>(p, opts),
    )?;
    let report = HilbertReport {
        bounds,
        conductor: grid.conductor().to_vec(),
        multiplicities: p
            .branches()
            .iter()
            .map(|b| b.multiplicity() as u64)
            .collect(),
        algebra_dim: dim,
        arithmetic,
    };
    Ok(HilbertData { grid, report })
}

type Run = (WeightGrid, Vec<usize>, usize);

fn run<F: Scalar>(
    p: &BranchParametrization,
    opts: &HilbertOptions,
) -> Result<Run, Fallible<HilbertError>> {
    let mult: Vec<usize> = p
        .branches()
        .iter()
        .map(|b| b.multiplicity() as usize)
        .collect();
    if let Some(given) = &opts.conductor {
        if given.len() != p.r() {
            return Err(Fallible::Failed(HilbertError::ConductorLength {
                expected: p.r(),
                found: given.len(),
            }));
        }
        let bounds: Vec<usize> = given
            .iter()
            .zip(&mult)
            .map(|(&c, &m)| c as usize + m)
            .collect();
        let t = Truncation::<F>::new(p, bounds.clone())?;
        let found = t.conductor()?;
        if !t.certifies(&found) || found != *given {
            return Err(Fallible::Failed(HilbertError::ConductorMismatch {
                given: given.clone(),
                found,
            }));
        }
        return finish(t, found);
    }
    if let Some(bound) = opts.bound {
        let t = Truncation::<F>::new(p, vec![bound; p.r()])?;
        let found = t.conductor()?;
        if !t.certifies(&found) {
            return Err(Fallible::Failed(HilbertError::NotStabilized { bound }));
        }
        return finish(t, found);
    }
    let mut bounds: Vec<usize> = p
        .branches()
        .iter()
        .zip(&mult)
        .map(|(b, &m)| (4 * b.order_sum() as usize).max(m + 1))
        .collect();
    loop {
        let t = Truncation::<F>::new(p, bounds.clone())?;
        let found = t.conductor()?;
        if t.certifies(&found) {
            return finish(t, found);
        }
        for (i, b) in bounds.iter_mut().enumerate() {
            if (*b as u64) < found[i] + mult[i] as u64 {
                *b *= 2;
            }
        }
        if bounds.iter().any(|&b| b > MAX_BOUND) {
            return Err(Fallible::Failed(HilbertError::NotStabilized {
                bound: MAX_BOUND,
            }));
        }
    }
}

fn finish<F: Scalar>(t: Truncation<F>, conductor: Vec<u64>) -> Result<Run, Fallible<HilbertError>> {
    let extents: Vec<usize> = conductor.iter().map(|&c| c as usize + 1).collect();
    let d = t.dimension_table(&extents)?;
    let dim = t.basis.len() as u64;
    let h = d.into_iter().map(|x| dim - x).collect();
    let grid = WeightGrid::from_hilbert(conductor, h).map_err(|e| Fallible::Failed(e.into()))?;
    Ok((grid, t.bounds, t.basis.len()))
}

/// `A_L` with a basis of dense vectors over the concatenated branch columns.
struct Truncation<F> {
    bounds: Vec<usize>,
    offsets: Vec<usize>,
    multiplicities: Vec<usize>,
    basis: Vec<Vec<F>>,
}

impl<F: Scalar> Truncation<F> {
    fn new(p: &BranchParametrization, bounds: Vec<usize>) -> Result<Self, Overflow> {
        let mut offsets = Vec::with_capacity(bounds.len());
        let mut total = 0;
        for &b in &bounds {
            offsets.push(total);
            total += b;
        }
        // Each coordinate as (column shift, column range, coefficient) pieces.
        let coords: Vec<Vec<(usize, usize, usize, F)>> = (0..p.coordinate_count())
            .map(|j| {
                let mut pieces = Vec::new();
                for (i, branch) in p.branches().iter().enumerate() {
                    for t in &branch.coords[j].terms {
                        let e = t.exp as usize;
                        if e < bounds[i] {
                            pieces.push((
                                e,
                                offsets[i],
                                offsets[i] + bounds[i] - e,
                                F::from_fraction(t.num, t.den),
                            ));
                        }
                    }
                }
                pieces
            })
            .collect();

        let mut one = vec![F::zero(); total];
        for (i, &b) in bounds.iter().enumerate() {
            if b > 0 {
                one[offsets[i]] = F::one();
            }
        }
        let mut reducer = Reducer::new(total);
        let mut basis = Vec::new();
        if let Some(v) = reducer.insert(one)? {
            basis.push(v);
        }
        let mut next = 0;
        while next < basis.len() {
            for pieces in &coords {
                let mut w = vec![F::zero(); total];
                for (shift, lo, hi, a) in pieces {
                    for k in *lo..*hi {
                        if !basis[next][k].is_zero() {
                            w[k + shift] = w[k + shift].add(&a.mul(&basis[next][k])?)?;
                        }
                    }
                }
                if let Some(v) = reducer.insert(w)? {
                    basis.push(v);
                }
            }
            next += 1;
        }
        let multiplicities = p
            .branches()
            .iter()
            .map(|b| b.multiplicity() as usize)
            .collect();
        Ok(Self {
            bounds,
            offsets,
            multiplicities,
            basis,
        })
    }

    fn branch_columns(&self, i: usize) -> std::ops::Range<usize> {
        self.offsets[i]..self.offsets[i] + self.bounds[i]
    }

    /// Smallest `k` such that `A_L` holds `tᵢʲ eᵢ` for every `k ≤ j < Lᵢ`.
    fn conductor(&self) -> Result<Vec<u64>, Overflow> {
        (0..self.bounds.len())
            .map(|i| {
                let own = self.branch_columns(i);
                let order: Vec<usize> = (0..self.offsets.last().unwrap()
                    + self.bounds.last().unwrap())
                    .filter(|c| !own.contains(c))
                    .chain(own.clone())
                    .collect();
                let split = order.len() - self.bounds[i];
                let ech = echelon(&self.basis, &order)?;
                let mut has = vec![false; self.bounds[i]];
                for (pos, _) in ech.pivoted {
                    if pos >= split {
                        has[pos - split] = true;
                    }
                }
                let mut k = self.bounds[i];
                while k > 0 && has[k - 1] {
                    k -= 1;
                }
                Ok(k as u64)
            })
            .collect()
    }

    fn certifies(&self, conductor: &[u64]) -> bool {
        (0..self.bounds.len())
            .all(|i| self.bounds[i] as u64 >= conductor[i] + self.multiplicities[i] as u64)
    }

    /// `D(ℓ) = dim(A_L ∩ ℱ(ℓ))` on the box `ℓᵢ ≤ extentsᵢ`, axis 0 slowest.
    fn dimension_table(&self, extents: &[usize]) -> Result<Vec<u64>, Overflow> {
        let r = extents.len();
        let mut strides = vec![1usize; r];
        for a in (0..r.saturating_sub(1)).rev() {
            strides[a] = strides[a + 1] * (extents[a + 1] + 1);
        }
        let mut out = vec![0u64; strides[0] * (extents[0] + 1)];
        let ctx = TableContext {
            t: self,
            extents,
            strides: &strides,
        };
        if r == 1 {
            let ech = echelon(&self.basis, &self.branch_columns(0).collect::<Vec<_>>())?;
            let mut pivots = vec![false; self.bounds[0]];
            for (pos, _) in &ech.pivoted {
                pivots[*pos] = true;
            }
            ctx.write_last_axis(&mut out, 0, ech.free.len() as u64, &pivots);
        } else {
            ctx.fill(&self.basis, 0, 0, &mut out)?;
        }
        Ok(out)
    }
}

struct TableContext<'a, F> {
    t: &'a Truncation<F>,
    extents: &'a [usize],
    strides: &'a [usize],
}

impl<F: Scalar> TableContext<'_, F> {
    /// `D(prefix, ℓ_r) = κ + #{pivots ≥ ℓ_r}` for every `ℓ_r`.
    fn write_last_axis(&self, out: &mut [u64], base: usize, kappa: u64, pivots: &[bool]) {
        let last = self.extents.len() - 1;
        let mut suffix = 0u64;
        let mut counts = vec![0u64; pivots.len() + 1];
        for l in (0..pivots.len()).rev() {
            suffix += u64::from(pivots[l]);
            counts[l] = suffix;
        }
        for l in 0..=self.extents[last] {
            out[base + l] = kappa + counts[l.min(pivots.len())];
        }
    }

    fn fill(
        &self,
        subspace: &[Vec<F>],
        axis: usize,
        base: usize,
        out: &mut [u64],
    ) -> Result<(), Overflow> {
        let r = self.extents.len();
        let ech = echelon(subspace, &self.t.branch_columns(axis).collect::<Vec<_>>())?;
        let ext = self.extents[axis];
        if axis + 2 == r {
            // Grow W(ℓ_axis) as ℓ_axis descends, projecting onto the last branch.
            let last = self.t.branch_columns(r - 1);
            let mut proj = Reducer::new(last.len());
            let mut pivots = vec![false; last.len()];
            let mut kappa = 0u64;
            let mut add =
                |v: &Vec<F>, pivots: &mut Vec<bool>, kappa: &mut u64| -> Result<(), Overflow> {
                    match proj.insert(v[last.clone()].to_vec())? {
                        Some(row) => pivots[row.iter().position(|x| !x.is_zero()).unwrap()] = true,
                        None => *kappa += 1,
                    }
                    Ok(())
                };
            for v in &ech.free {
                add(v, &mut pivots, &mut kappa)?;
            }
            let mut rows = ech.pivoted;
            rows.sort_by(|a, b| b.0.cmp(&a.0));
            let mut it = rows.iter().peekable();
            while let Some((_, v)) = it.next_if(|(pos, _)| *pos > ext) {
                add(v, &mut pivots, &mut kappa)?;
            }
            for l in (0..=ext).rev() {
                while let Some((_, v)) = it.next_if(|(pos, _)| *pos == l) {
                    add(v, &mut pivots, &mut kappa)?;
                }
                self.write_last_axis(out, base + l * self.strides[axis], kappa, &pivots);
            }
        } else {
            for l in 0..=ext {
                let sub: Vec<Vec<F>> = ech
                    .free
                    .iter()
                    .cloned()
                    .chain(
                        ech.pivoted
                            .iter()
                            .filter(|(pos, _)| *pos >= l)
                            .map(|(_, v)| v.clone()),
                    )
                    .collect();
                self.fill(&sub, axis + 1, base + l * self.strides[axis], out)?;
            }
        }
        Ok(())
    }
}

/// Incremental row reduction keyed by leading column.
struct Reducer<F> {
    rows: Vec<Option<Vec<F>>>,
}

impl<F: Scalar> Reducer<F> {
    fn new(width: usize) -> Self {
        Self {
            rows: vec![None; width],
        }
    }

    /// Reduces `v` against the stored rows; stores and returns it (scaled
    /// to a leading 1) if something is left.
    fn insert(&mut self, mut v: Vec<F>) -> Result<Option<Vec<F>>, Overflow> {
        for col in 0..v.len() {
            if v[col].is_zero() {
                continue;
            }
            match &self.rows[col] {
                Some(row) => {
                    let f = v[col].clone();
                    for k in col..v.len() {
                        if !row[k].is_zero() {
                            v[k] = v[k].sub_mul(&f, &row[k])?;
                        }
                    }
                }
                None => {
                    let lead = v[col].clone();
                    for x in v[col..].iter_mut() {
                        if !x.is_zero() {
                            *x = x.div(&lead)?;
                        }
                    }
                    self.rows[col] = Some(v.clone());
                    return Ok(Some(v));
                }
            }
        }
        Ok(None)
    }
}

struct Echelon<F> {
    /// Rows with their leading position in the column order.
    pivoted: Vec<(usize, Vec<F>)>,
    /// Rows vanishing on every listed column.
    free: Vec<Vec<F>>,
}

/// Echelon form of linearly independent `vectors` with respect to the
/// listed columns, taken in order.
fn echelon<F: Scalar>(vectors: &[Vec<F>], order: &[usize]) -> Result<Echelon<F>, Overflow> {
    let mut at: Vec<Option<usize>> = vec![None; order.len()];
    let mut pivoted: Vec<(usize, Vec<F>)> = Vec::new();
    let mut free = Vec::new();
    'vectors: for v in vectors {
        let mut v = v.clone();
        for (pos, &col) in order.iter().enumerate() {
            if v[col].is_zero() {
                continue;
            }
            match at[pos] {
                Some(r) => {
                    let f = v[col].clone();
                    let row = &pivoted[r].1;
                    for c in 0..v.len() {
                        if !row[c].is_zero() {
                            v[c] = v[c].sub_mul(&f, &row[c])?;
                        }
                    }
                }
                None => {
                    let lead = v[col].clone();
                    for x in v.iter_mut() {
                        if !x.is_zero() {
                            *x = x.div(&lead)?;
                        }
                    }
                    at[pos] = Some(pivoted.len());
                    pivoted.push((pos, v));
                    continue 'vectors;
                }
            }
        }
        free.push(v);
    }
    Ok(Echelon { pivoted, free })
}
