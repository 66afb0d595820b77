//! Model operators and their exact moment matrices.
//!
//! The model acts on L²(−π, π): multiplication by a real piecewise-constant
//! symbol m, optionally perturbed by a rank-one term Kf = a⟨f, ψ⟩ψ. In the
//! orthonormal Fourier basis φⱼ = e^{ijx}/√(2π) the compressions of M and M²
//! to Span{φ₋ₙ, …, φₙ} have closed-form entries (Toeplitz plus low-rank), so
//! the moment matrices carry no quadrature error.

mod interval;
mod moments;
mod rank_one;
mod symbol;

pub use interval::IntervalSet;
pub use moments::{assemble_multiplication, assemble_rank_one, MomentMatrices};
pub use rank_one::{
    discrete_eigenvalues_rank_one, eigenfunction_rank_one, PsiSpec, RankOneTerm,
};
pub use symbol::{fourier_coefficient, PiecewiseSymbol};
