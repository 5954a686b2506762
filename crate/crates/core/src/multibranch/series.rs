use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::grid::{weight_grid_extend, WeightGrid};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("nonzero tail: P has coefficient {coeff} at {point:?}, on the conductor face")]
    NonzeroTail { point: Vec<u64>, coeff: i64 },
}

/// `P(t) = −H(t)·∏(1 − 1/tᵢ)`, i.e. `P(ℓ) = Σ_I (−1)^{|I|+1} h(ℓ + e_I)`.
/// For one branch `P` is the indicator of the value set, so the part from
/// the conductor on is kept as a tail `t^c/(1 − t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareSeries {
    pub r: usize,
    pub terms: Vec<(Vec<u64>, i64)>,
    pub tail_from: Option<u64>,
}

pub fn poincare_series(grid: &WeightGrid) -> Result<PoincareSeries, SeriesError> {
    let grid = weight_grid_extend(grid);
    let r = grid.r();
    let c = grid.conductor().to_vec();
    let mut terms = Vec::new();
    let box_points: usize = c.iter().map(|&x| x as usize + 1).product();
    for k in 0..box_points {
        let mut point = vec![0u64; r];
        let mut rest = k;
        for a in (0..r).rev() {
            let side = c[a] as usize + 1;
            point[a] = (rest % side) as u64;
            rest /= side;
        }
        let mut coeff = 0i64;
        for subset in 0u32..(1 << r) {
            let shifted: Vec<u64> = point
                .iter()
                .enumerate()
                .map(|(a, &x)| x + u64::from(subset & (1 << a) != 0))
                .collect();
            let sign = if subset.count_ones() % 2 == 0 { -1 } else { 1 };
            coeff += sign * grid.h(&shifted) as i64;
        }
        let on_face = point.iter().zip(&c).any(|(x, ci)| x == ci);
        if r == 1 && on_face {
            continue;
        }
        if coeff != 0 {
            if on_face {
                return Err(SeriesError::NonzeroTail { point, coeff });
            }
            terms.push((point, coeff));
        }
    }
    Ok(PoincareSeries {
        r,
        terms,
        tail_from: (r == 1).then(|| c[0]),
    })
}

impl PoincareSeries {
    /// For one branch, the polynomial `(1 − t)·P(t)`; it is 1 exactly for a
    /// smooth branch.
    pub fn branch_polynomial(&self) -> Option<Vec<(u64, i64)>> {
        let c = self.tail_from?;
        let mut coeffs = vec![0i64; c as usize + 1];
        for (p, a) in &self.terms {
            coeffs[p[0] as usize] += a;
            coeffs[p[0] as usize + 1] -= a;
        }
        coeffs[c as usize] += 1;
        Some(
            coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, a)| *a != 0)
                .map(|(e, a)| (e as u64, a))
                .collect(),
        )
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monomial = |p: &[u64]| -> String {
            let factors: Vec<String> = p
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(a, &e)| {
                    let var = if self.r == 1 {
                        "t".to_string()
                    } else {
                        format!("t{}", a + 1)
                    };
                    if e == 1 {
                        var
                    } else {
                        format!("{var}^{e}")
                    }
                })
                .collect();
            factors.join("*")
        };
        let mut parts = Vec::new();
        for (p, coeff) in &self.terms {
            let m = monomial(p);
            parts.push(match (m.is_empty(), *coeff) {
                (true, c) => c.to_string(),
                (false, 1) => m,
                (false, -1) => format!("-{m}"),
                (false, c) => format!("{c}*{m}"),
            });
        }
        if let Some(c) = self.tail_from {
            parts.push(if c == 0 {
                "1/(1 - t)".to_string()
            } else {
                format!("{}/(1 - t)", monomial(&[c]))
            });
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}
