//! Worked examples used by tests, the acceptance suite and the CLI.

use crate::graded::{GradedRoot, Vertex};
use crate::multibranch::{binomial_branch, Branch, BranchParametrization, Series, Term};
use crate::semigroup::CofiniteSet;

/// Two non-isomorphic graded roots with the same module: a chain through
/// levels 2, 1, 0, two vertices at −1 and four leaves at −2, split 3+1 on
/// the left and 2+2 on the right.
pub fn example_root_pair() -> (GradedRoot, GradedRoot) {
    let chis = [2, 1, 0, -1, -1, -2, -2, -2, -2];
    let vertices: Vec<Vertex> = chis
        .iter()
        .enumerate()
        .map(|(id, &chi)| Vertex { id, chi })
        .collect();
    let spine = [(0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (3, 6)];
    let mut left = spine.to_vec();
    left.extend([(3, 7), (4, 8)]);
    let mut right = spine.to_vec();
    right.extend([(4, 7), (4, 8)]);
    (
        GradedRoot::new(vertices.clone(), left, 2).expect("left example root"),
        GradedRoot::new(vertices, right, 2).expect("right example root"),
    )
}

/// A symmetric cofinite set that is not additively closed (`4 + 4 = 8` is
/// missing), with conductor 30 and fifteen gaps.
pub fn symmetric_non_semigroup() -> CofiniteSet {
    CofiniteSet::new(
        &[0, 4, 9, 10, 12, 15, 16, 18, 21, 22, 23, 24, 26, 27, 28],
        30,
    )
    .expect("valid cofinite set")
}

/// `t ↦ (t⁶, t¹⁵ + t¹⁶)`, a branch with semigroup ⟨6, 15, 31⟩.
pub fn six_fifteen_sixteen() -> BranchParametrization {
    let y = Series {
        terms: vec![Term::new(1, 15), Term::new(1, 16)],
    };
    BranchParametrization::new(vec![Branch {
        coords: vec![Series::monomial(1, 6), y],
    }])
    .expect("valid branch")
}

/// The two space curves with equal Poincaré series but different `ℍ*`.
pub fn space_curve_pair() -> (BranchParametrization, BranchParametrization) {
    let c = BranchParametrization::new(vec![
        Branch::monomials(&[(1, 2), (1, 3), (1, 2), (1, 4), (1, 5)]),
        Branch::monomials(&[(1, 2), (1, 3), (1, 2), (1, 4), (1, 6)]),
    ])
    .expect("valid curve");
    let c_prime = BranchParametrization::new(vec![
        Branch::monomials(&[(1, 3), (1, 4), (1, 5), (1, 4), (1, 5), (1, 6)]),
        Branch::monomials(&[(1, 3), (1, 4), (1, 5), (1, 5), (1, 6), (1, 7)]),
    ])
    .expect("valid curve");
    (c, c_prime)
}

/// Printed `w₀` tables of [`space_curve_pair`] on `[0,4]²`, as
/// `table[ℓ₁][ℓ₂]`.
pub fn space_curve_tables() -> ([[i64; 5]; 5], [[i64; 5]; 5]) {
    // Rows as printed run from ℓ₂ = 4 down to ℓ₂ = 0 with ℓ₁ across.
    let printed_c = [
        [2, 1, 0, 1, 0],
        [1, 0, -1, 0, 1],
        [0, -1, -2, -1, 0],
        [1, 0, -1, 0, 1],
        [0, 1, 0, 1, 2],
    ];
    let printed_c_prime = [
        [0, -1, -2, -3, -4],
        [-1, -2, -3, -4, -3],
        [0, -1, -2, -3, -2],
        [1, 0, -1, -2, -1],
        [0, 1, 0, -1, 0],
    ];
    let reorient = |t: [[i64; 5]; 5]| {
        let mut out = [[0; 5]; 5];
        for (l1, row) in out.iter_mut().enumerate() {
            for (l2, x) in row.iter_mut().enumerate() {
                *x = t[4 - l2][l1];
            }
        }
        out
    };
    (reorient(printed_c), reorient(printed_c_prime))
}

/// `(xⁿ + yⁿ⁺¹)(xⁿ⁺¹ + yⁿ)` and `(xⁿ⁻¹ + yⁿ)(xⁿ⁺² + yⁿ⁺¹)`, `n ≥ 2`.
pub fn binomial_family_pair(n: u32) -> (BranchParametrization, BranchParametrization) {
    let c = BranchParametrization::new(vec![binomial_branch(n, n + 1), binomial_branch(n + 1, n)]);
    let c_prime = BranchParametrization::new(vec![
        binomial_branch(n - 1, n),
        binomial_branch(n + 2, n + 1),
    ]);
    (c.expect("valid curve"), c_prime.expect("valid curve"))
}
