//! The spectral core: quadratic-pencil eigenvalues, σ evaluation, descent,
//! and enclosure intervals.
//!
//! Everything here is a pure function of the moment matrices; grid scans and
//! per-window sweeps can run concurrently without sharing state.

mod enclosure;
mod sigma;
mod spectrum;

pub use enclosure::{enclosures, Enclosure};
pub use sigma::{sigma, sigma_descent, sigma_grid, DescentOptions, GridRect, SigmaGrid};
pub use spectrum::{second_order_spectrum, SecondOrderSpectrum, CONJUGATE_PAIR_TOL};
