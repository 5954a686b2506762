use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("parametrization has no branches")]
    NoBranches,
    #[error("branch {0} has no coordinates")]
    NoCoordinates(usize),
    #[error("branch {branch} has {found} coordinates, expected {expected}")]
    CoordinateCount {
        branch: usize,
        expected: usize,
        found: usize,
    },
    #[error("zero denominator in branch {branch}, coordinate {coord}")]
    ZeroDenominator { branch: usize, coord: usize },
    #[error("zero coefficient in branch {branch}, coordinate {coord}")]
    ZeroCoefficient { branch: usize, coord: usize },
    #[error(
        "exponents must be positive and strictly increasing (branch {branch}, coordinate {coord})"
    )]
    BadExponents { branch: usize, coord: usize },
    #[error("zero branch: every coordinate of branch {0} vanishes")]
    ZeroBranch(usize),
}

/// `num/den · t^exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub num: i64,
    pub den: i64,
    pub exp: u32,
}

impl Term {
    pub fn new(num: i64, exp: u32) -> Self {
        Self { num, den: 1, exp }
    }
}

/// A finite power series in one branch variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Series {
    pub terms: Vec<Term>,
}

impl Series {
    pub fn monomial(coeff: i64, exp: u32) -> Self {
        Self {
            terms: vec![Term::new(coeff, exp)],
        }
    }

    pub fn order(&self) -> Option<u32> {
        self.terms.first().map(|t| t.exp)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub coords: Vec<Series>,
}

impl Branch {
    /// Branch whose coordinates are single monomials `coeff · t^exp`.
    pub fn monomials(coords: &[(i64, u32)]) -> Self {
        Self {
            coords: coords
                .iter()
                .map(|&(c, e)| Series::monomial(c, e))
                .collect(),
        }
    }

    /// Least order of a nonzero coordinate, the branch multiplicity.
    pub fn multiplicity(&self) -> u32 {
        self.coords
            .iter()
            .filter_map(Series::order)
            .min()
            .expect("validated branch")
    }

    pub fn order_sum(&self) -> u32 {
        self.coords.iter().filter_map(Series::order).sum()
    }
}

/// A germ `(C, o) ⊂ (ℂ^N, 0)` given by one parametrization per branch,
/// with the same `N` coordinates on every branch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchParametrization {
    branches: Vec<Branch>,
}

impl BranchParametrization {
    pub fn new(branches: Vec<Branch>) -> Result<Self, ParamError> {
        let first = branches.first().ok_or(ParamError::NoBranches)?;
        let expected = first.coords.len();
        for (b, branch) in branches.iter().enumerate() {
            if branch.coords.is_empty() {
                return Err(ParamError::NoCoordinates(b));
            }
            if branch.coords.len() != expected {
                return Err(ParamError::CoordinateCount {
                    branch: b,
                    expected,
                    found: branch.coords.len(),
                });
            }
            for (c, series) in branch.coords.iter().enumerate() {
                for t in &series.terms {
                    if t.den == 0 {
                        return Err(ParamError::ZeroDenominator {
                            branch: b,
                            coord: c,
                        });
                    }
                    if t.num == 0 {
                        return Err(ParamError::ZeroCoefficient {
                            branch: b,
                            coord: c,
                        });
                    }
                }
                let increasing = series.terms.windows(2).all(|w| w[0].exp < w[1].exp);
                if !increasing || series.terms.first().is_some_and(|t| t.exp == 0) {
                    return Err(ParamError::BadExponents {
                        branch: b,
                        coord: c,
                    });
                }
            }
            if branch.coords.iter().all(|s| s.terms.is_empty()) {
                return Err(ParamError::ZeroBranch(b));
            }
        }
        Ok(Self { branches })
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn r(&self) -> usize {
        self.branches.len()
    }

    pub fn coordinate_count(&self) -> usize {
        self.branches[0].coords.len()
    }
}

/// The branch of `x^p + y^q = 0` (coprime `p, q`) as `(α t^q, β t^p)`:
/// `α = −1, β = 1` when `p` is odd, otherwise `α = 1, β = −1`.
pub fn binomial_branch(p: u32, q: u32) -> Branch {
    let (alpha, beta) = if p % 2 == 1 { (-1, 1) } else { (1, -1) };
    Branch::monomials(&[(alpha, q), (beta, p)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert_eq!(
            BranchParametrization::new(vec![]),
            Err(ParamError::NoBranches)
        );
        let zero = Branch {
            coords: vec![Series::default(), Series::default()],
        };
        assert_eq!(
            BranchParametrization::new(vec![zero]),
            Err(ParamError::ZeroBranch(0))
        );
        let constant = Branch::monomials(&[(1, 0), (1, 2)]);
        assert!(matches!(
            BranchParametrization::new(vec![constant]),
            Err(ParamError::BadExponents { .. })
        ));
        let a = Branch::monomials(&[(1, 2), (1, 3)]);
        let b = Branch::monomials(&[(1, 1)]);
        assert!(matches!(
            BranchParametrization::new(vec![a, b]),
            Err(ParamError::CoordinateCount { .. })
        ));
    }

    #[test]
    fn binomial_branches_satisfy_their_equation() {
        for (p, q) in [(2u32, 3u32), (3, 2), (4, 5), (5, 4), (1, 2), (7, 6)] {
            let b = binomial_branch(p, q);
            let x = b.coords[0].terms[0];
            let y = b.coords[1].terms[0];
            assert_eq!(x.exp * p, y.exp * q);
            assert_eq!(x.num.pow(p) + y.num.pow(q), 0, "({p},{q})");
        }
    }
}
