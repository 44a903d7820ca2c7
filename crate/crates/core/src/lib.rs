//! Steady-state optical response of a three-level Λ atom driven by a coupling
//! field, a weak probe, and an incoherent pump acting on the probe transition.
//!
//! All rates, Rabi frequencies and detunings are dimensionless, measured in
//! units of the excited-state decay rate γ.
//!
//! The crate is `no_std` and only needs `alloc` for sweep and grid results.
//! IO, CSV and the command line live in the `lambda-optics` crate.

#![no_std]
// `!(x > 0.0)` is used on purpose so NaN is rejected too; the small fixed-size
// matrix loops read better with explicit indices.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analytic;
pub mod density;
pub mod error;
pub mod evolve;
pub mod linalg;
pub mod liouvillian;
pub mod params;
pub mod regionmap;
pub mod response;
pub mod steady;

pub use analytic::{CriticalParams, DressedState, PumpRoots};
pub use density::{DensityMatrix, Diagnostics};
pub use error::Error;
pub use evolve::{evolve, evolve_converged, DEFAULT_DT};
pub use liouvillian::{assemble_liouvillian, Liouvillian};
pub use params::SystemParams;
pub use regionmap::{boundary_curve, classify_grid, GridSpec, Method, RegionGrid};
pub use response::{
    classify_propagation, dispersion_slope, evaluate_point, group_index, susceptibility,
    PointSolution, ProbeResponse, Propagation, BOUNDARY_BAND, DEFAULT_STEP,
};
pub use steady::steady_state;

pub use num_complex::Complex64;

pub type Result<T> = core::result::Result<T, Error>;
