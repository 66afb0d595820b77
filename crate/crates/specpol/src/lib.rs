//! Second-order relative spectra of self-adjoint operators.
//!
//! The classical way to approximate the spectrum of a self-adjoint operator
//! M — diagonalize the compression A = (⟨Mφₖ, φⱼ⟩) on a finite basis —
//! suffers from spectral pollution: truncation eigenvalues pile up inside
//! gaps of the essential spectrum where M has no spectrum at all. This crate
//! implements the quadratic alternative: a point z belongs to the
//! second-order spectrum relative to the trial subspace when the compression
//! of (M − z)² is singular, i.e. when det(z²I − 2zA + B) = 0 with
//! B = (⟨M²φₖ, φⱼ⟩). Each such z certifies that the interval
//! [Re z − |Im z|, Re z + |Im z|] meets Spec M, so the method cannot
//! pollute, and isolated eigenvalues are recovered in the limit.
//!
//! The built-in model family: multiplication by a real piecewise-constant
//! symbol on L²(−π, π) in the Fourier basis (moment matrices are Toeplitz,
//! assembled in closed form), optionally perturbed by a rank-one term whose
//! discrete eigenvalues are known from a secular equation — which makes
//! every approximation claim checkable against exact reference values.
//!
//! Modules:
//! - [`operators`]: interval sets, piecewise symbols, rank-one terms, exact
//!   moment-matrix assembly, reference eigenvalues/eigenfunctions.
//! - [`engine`]: companion-linearization eigensolve, σ (smallest singular
//!   value of the pencil), compass descent, enclosure intervals, σ-grids.
//! - [`analysis`]: Galerkin-pollution reports, convergence tables, Szegő
//!   clustering statistics, limiting-set scans, compression residuals.
//! - [`config`] / [`report`]: the TOML experiment schema and deterministic
//!   CSV/JSON rendering used by the `specpol` binary.

// `!(x > 0.0)` is used for validation throughout: unlike `x <= 0.0` it also
// rejects NaN inputs.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod config;
pub mod engine;
pub mod error;
pub mod operators;
pub mod report;

pub use error::{Error, Result};
pub use num_complex::Complex64;
