//! Germs with several branches: the Hilbert function of a parametrized
//! local ring, the cubical weight complex and its lattice cohomology.

pub mod cohomology;
pub mod cubical;
pub mod field;
pub mod grid;
pub mod hilbert;
pub mod homology;
pub mod param;
pub mod persistence;
pub mod series;

pub use cohomology::{
    euler_delta_check, graded_root_of_grid, h0_module_from_bars, lattice_cohomology, EulerCheck,
    HigherModule, LatticeCohomology, LevelCohomology,
};
pub use cubical::{sublevel_complex, Cell, CubicalComplex};
pub use field::Arithmetic;
pub use grid::{weight_grid_extend, GridError, WeightGrid};
pub use hilbert::{
    hilbert_from_parametrization, HilbertData, HilbertError, HilbertOptions, HilbertReport,
};
pub use homology::{integral_cohomology, CohomologyGroup};
pub use param::{binomial_branch, Branch, BranchParametrization, ParamError, Series, Term};
pub use persistence::{barcode, Bar};
pub use series::{poincare_series, PoincareSeries, SeriesError};
