//! Integral cohomology of cubical complexes: elementary collapses shrink the
//! complex without changing its homotopy type, then the Smith normal form of
//! the remaining boundary matrices gives ranks and torsion.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::cubical::CubicalComplex;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CohomologyGroup {
    pub rank: u64,
    /// Invariant factors greater than one, as decimal strings.
    pub torsion: Vec<String>,
}

impl CohomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// A complex as per-cell dimensions plus signed boundary lists.
struct Reduced {
    dims: Vec<usize>,
    boundary: Vec<Vec<(usize, i64)>>,
}

/// Removes free-face pairs `(σ, τ)` until none is left.
fn collapse(k: &CubicalComplex) -> Reduced {
    let n = k.len();
    let boundary: Vec<Vec<(usize, i64)>> = (0..n).map(|i| k.boundary(i)).collect();
    let mut cofaces: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (t, faces) in boundary.iter().enumerate() {
        for &(s, _) in faces {
            cofaces[s].push(t);
        }
    }
    let mut alive = vec![true; n];
    let mut count: Vec<usize> = cofaces.iter().map(Vec::len).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&s| count[s] == 1).collect();
    while let Some(s) = queue.pop_front() {
        if !alive[s] || count[s] != 1 {
            continue;
        }
        let t = *cofaces[s].iter().find(|&&t| alive[t]).unwrap();
        alive[s] = false;
        alive[t] = false;
        for &(f, _) in boundary[t].iter().chain(&boundary[s]) {
            if alive[f] {
                count[f] -= 1;
                if count[f] == 1 {
                    queue.push_back(f);
                }
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
    let mut new_index = vec![usize::MAX; n];
    for (j, &i) in keep.iter().enumerate() {
        new_index[i] = j;
    }
    Reduced {
        dims: keep.iter().map(|&i| k.cells()[i].dim()).collect(),
        boundary: keep
            .iter()
            .map(|&i| {
                boundary[i]
                    .iter()
                    .filter(|(f, _)| alive[*f])
                    .map(|&(f, s)| (new_index[f], s))
                    .collect()
            })
            .collect(),
    }
}

/// `H^q` for `q = 0..=r` of a cubical complex.
pub fn integral_cohomology(k: &CubicalComplex) -> Vec<CohomologyGroup> {
    let r = k.r();
    let red = collapse(k);
    let mut position = vec![0usize; red.dims.len()];
    let mut counts = vec![0usize; r + 1];
    for (i, &d) in red.dims.iter().enumerate() {
        position[i] = counts[d];
        counts[d] += 1;
    }
    // Divisors of ∂_q : C_q → C_{q−1} for q = 1..=r.
    let mut divisors: Vec<Vec<BigInt>> = vec![Vec::new(); r + 2];
    for q in 1..=r {
        let mut m = vec![vec![BigInt::zero(); counts[q]]; counts[q - 1]];
        for (i, &d) in red.dims.iter().enumerate() {
            if d == q {
                for &(f, s) in &red.boundary[i] {
                    m[position[f]][position[i]] += s;
                }
            }
        }
        divisors[q] = elementary_divisors(m);
    }
    (0..=r)
        .map(|q| {
            let rank_in = divisors[q + 1].len() as u64;
            let rank_out = divisors[q].len() as u64;
            CohomologyGroup {
                rank: counts[q] as u64 - rank_in - rank_out,
                torsion: divisors[q]
                    .iter()
                    .filter(|d| !d.is_one())
                    .map(|d| d.to_string())
                    .collect(),
            }
        })
        .collect()
}

/// Nonzero invariant factors of an integer matrix, in order.
pub fn elementary_divisors(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_entry(&a, t) else {
                return out;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let v = &q * &a[i][t];
                    a[i][j] -= v;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // The pivot must divide the rest; otherwise fold a row in.
            let bad =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    out
}

fn min_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}
