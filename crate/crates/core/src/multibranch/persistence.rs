//! Persistence of the sublevel filtration over ℚ. Bars give the ranks of
//! the restriction maps `H^q(S_{n+1}) → H^q(S_n)` and a decomposition into
//! towers.

use num_rational::BigRational;
use serde::Serialize;

use super::cubical::CubicalComplex;
use super::field::{with_fallback, Arithmetic, Fallible, Scalar, SmallRational};

/// A class of `H_q` born at weight `birth` and dying at `death`; alive on
/// `birth ≤ n < death`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Bar {
    pub dim: usize,
    pub birth: i64,
    pub death: Option<i64>,
}

impl Bar {
    pub fn alive_at(&self, n: i64) -> bool {
        self.birth <= n && self.death.is_none_or(|d| n < d)
    }
}

/// Bars of positive length, sorted.
pub fn barcode(k: &CubicalComplex) -> (Vec<Bar>, Arithmetic) {
    let never: Result<_, ()> =
        with_fallback(|| reduce::<SmallRational>(k), || reduce::<BigRational>(k));
    never.expect("reduction has no failure mode")
}

fn reduce<F: Scalar>(k: &CubicalComplex) -> Result<Vec<Bar>, Fallible<()>> {
    let n = k.len();
    let w = k.weights();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (w[i], k.cells()[i].dim(), i));
    let mut rank_of = vec![0usize; n];
    for (pos, &i) in order.iter().enumerate() {
        rank_of[i] = pos;
    }
    let max_dim = k.r();
    let mut columns: Vec<Vec<(usize, F)>> = order
        .iter()
        .map(|&i| {
            let mut col: Vec<(usize, F)> = k
                .boundary(i)
                .into_iter()
                .map(|(f, s)| (rank_of[f], F::from_fraction(s, 1)))
                .collect();
            col.sort_by_key(|e| e.0);
            col
        })
        .collect();
    let dim_at: Vec<usize> = order.iter().map(|&i| k.cells()[i].dim()).collect();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut cleared = vec![false; n];
    // Highest dimension first, so that paired births can be skipped.
    for d in (1..=max_dim).rev() {
        for j in 0..n {
            if dim_at[j] != d || cleared[j] {
                continue;
            }
            while let Some(&(low, _)) = columns[j].last() {
                match owner[low] {
                    Some(o) => {
                        let factor = columns[j]
                            .last()
                            .unwrap()
                            .1
                            .div(&columns[o].last().unwrap().1)?;
                        let merged = axpy(&columns[j], &factor, &columns[o])?;
                        columns[j] = merged;
                    }
                    None => {
                        owner[low] = Some(j);
                        cleared[low] = true;
                        break;
                    }
                }
            }
        }
    }
    let mut bars = Vec::new();
    for pos in 0..n {
        let i = order[pos];
        if !columns[pos].is_empty() && !cleared[pos] {
            continue; // a death
        }
        let birth = w[i];
        let death = owner[pos].map(|j| w[order[j]]);
        if death != Some(birth) {
            bars.push(Bar {
                dim: k.cells()[i].dim(),
                birth,
                death,
            });
        }
    }
    bars.sort();
    Ok(bars)
}

/// `x − f·y` for sparse columns sorted by row.
fn axpy<F: Scalar>(
    x: &[(usize, F)],
    f: &F,
    y: &[(usize, F)],
) -> Result<Vec<(usize, F)>, Fallible<()>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, F::zero().sub_mul(f, &y[j].1)?));
            j += 1;
        } else {
            let v = x[i].1.sub_mul(f, &y[j].1)?;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

/// Ranks of `H^q(S_{n+1}) → H^q(S_n)`: bars alive at both levels.
pub fn restriction_rank(bars: &[Bar], q: usize, n: i64) -> u64 {
    bars.iter()
        .filter(|b| b.dim == q && b.alive_at(n) && b.alive_at(n + 1))
        .count() as u64
}

/// Betti number of `S_n` in degree `q`.
pub fn betti(bars: &[Bar], q: usize, n: i64) -> u64 {
    bars.iter().filter(|b| b.dim == q && b.alive_at(n)).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multibranch::grid::WeightGrid;

    #[test]
    fn node_bars() {
        let g = WeightGrid::from_hilbert(vec![1, 1], vec![0, 1, 2, 1, 1, 2, 2, 2, 3]).unwrap();
        let (bars, arith) = barcode(&CubicalComplex::full_box(&g));
        assert_eq!(arith, Arithmetic::I128);
        // Two points of weight 0 join at weight 1.
        assert_eq!(
            bars,
            vec![
                Bar {
                    dim: 0,
                    birth: 0,
                    death: None
                },
                Bar {
                    dim: 0,
                    birth: 0,
                    death: Some(1)
                }
            ]
        );
    }
}
