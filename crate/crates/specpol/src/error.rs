use thiserror::Error;

/// Errors produced by the operator, engine, and analysis layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid construction input or violated precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Rank-one perturbation coefficients extend beyond the truncation
    /// window, so the moment matrices cannot be assembled exactly.
    #[error(
        "psi coefficients reach index ±{support} but the truncation window is ±{window}; \
         exact assembly is not possible"
    )]
    PsiSupportExceedsWindow { support: i64, window: i64 },

    /// The dense eigensolver did not converge.
    #[error("eigensolver failed for operator `{label}` (dimension {dim})")]
    EigenSolver { label: String, dim: usize },

    /// The computed second-order spectrum is not closed under conjugation
    /// within tolerance, which indicates an inaccurate solve.
    #[error(
        "conjugate pairing failed for operator `{label}`: worst residual {residual:.3e} \
         exceeds tolerance {tol:.3e}"
    )]
    ConjugatePairing {
        label: String,
        residual: f64,
        tol: f64,
    },

    /// Local descent exhausted its iteration budget without finding a zero.
    #[error(
        "descent found no zero after {iters} iterations: stopped at z = {re}+{im}i \
         with sigma = {sigma:.3e}"
    )]
    NoZeroFound {
        re: f64,
        im: f64,
        sigma: f64,
        iters: usize,
    },

    /// Resolvent evaluated at a point of the essential spectrum.
    #[error("lambda = {0} coincides with an essential-spectrum endpoint (±1); resolvent is singular")]
    SingularResolvent(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
