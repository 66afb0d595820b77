use faer::{Mat, Side};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operators::rank_one::RankOneTerm;
use crate::operators::symbol::{fourier_coefficient, PiecewiseSymbol};

/// Moment matrices of an operator M on the truncation window:
/// A = (⟨Mφₖ, φⱼ⟩) and B = (⟨M²φₖ, φⱼ⟩) in the orthonormal basis
/// φⱼ = e^{ijx}/√(2π), j = −n..n, so d = 2n+1.
///
/// Both matrices are Hermitian, B ⪰ 0, and B − A² ⪰ 0 (operator
/// Cauchy–Schwarz for compressions).
#[derive(Debug, Clone)]
pub struct MomentMatrices {
    label: String,
    trunc: Option<usize>,
    a: Mat<Complex64>,
    b: Mat<Complex64>,
}

impl MomentMatrices {
    /// Wraps raw (A, B): square, same dimension. `trunc` records the Fourier
    /// window half-width when the matrices come from a truncation.
    pub fn from_parts(
        label: impl Into<String>,
        trunc: Option<usize>,
        a: Mat<Complex64>,
        b: Mat<Complex64>,
    ) -> Result<Self> {
        if a.nrows() != a.ncols() || b.nrows() != b.ncols() || a.nrows() != b.nrows() {
            return Err(Error::InvalidInput(format!(
                "moment matrices must be square and of equal size, got {}x{} and {}x{}",
                a.nrows(),
                a.ncols(),
                b.nrows(),
                b.ncols()
            )));
        }
        if a.nrows() == 0 {
            return Err(Error::InvalidInput("moment matrices must be nonempty".into()));
        }
        Ok(Self { label: label.into(), trunc, a, b })
    }

    pub fn dim(&self) -> usize {
        self.a.nrows()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Fourier window half-width n (d = 2n+1), when applicable.
    pub fn truncation(&self) -> Option<usize> {
        self.trunc
    }

    pub fn a(&self) -> &Mat<Complex64> {
        &self.a
    }

    pub fn b(&self) -> &Mat<Complex64> {
        &self.b
    }

    /// Spectral norm of A (exact Hermitian eigenvalue range).
    pub fn a_norm(&self) -> f64 {
        hermitian_spectral_norm(&self.a)
    }

    /// Spectral norm of B.
    pub fn b_norm(&self) -> f64 {
        hermitian_spectral_norm(&self.b)
    }

    /// Checks the type invariants: Hermiticity of A and B (1e-12 relative),
    /// B ⪰ 0 and B − A² ⪰ 0 (smallest eigenvalue ≥ −1e-10·‖B‖).
    pub fn validate(&self) -> Result<()> {
        let herm_defect = |m: &Mat<Complex64>| {
            let mut worst = 0.0f64;
            let mut scale = 0.0f64;
            for j in 0..m.nrows() {
                for k in 0..m.ncols() {
                    worst = worst.max((m[(j, k)] - m[(k, j)].conj()).norm());
                    scale = scale.max(m[(j, k)].norm());
                }
            }
            (worst, scale)
        };
        for (name, m) in [("A", &self.a), ("B", &self.b)] {
            let (worst, scale) = herm_defect(m);
            if worst > 1e-12 * scale.max(f64::MIN_POSITIVE) {
                return Err(Error::InvalidInput(format!(
                    "{name} is not Hermitian for `{}`: defect {worst:.3e} vs scale {scale:.3e}",
                    self.label
                )));
            }
        }
        let b_norm = self.b_norm();
        let b_min = hermitian_min_eigenvalue(&self.b);
        if b_min < -1e-10 * b_norm {
            return Err(Error::InvalidInput(format!(
                "B is not positive semidefinite for `{}`: min eigenvalue {b_min:.3e}",
                self.label
            )));
        }
        let mut gap = &self.b - &self.a * &self.a;
        // symmetrize rounding fuzz before the eigensolve
        for j in 0..gap.nrows() {
            for k in 0..j {
                let avg = 0.5 * (gap[(j, k)] + gap[(k, j)].conj());
                gap[(j, k)] = avg;
                gap[(k, j)] = avg.conj();
            }
            let dj = gap[(j, j)].re;
            gap[(j, j)] = Complex64::new(dj, 0.0);
        }
        let gap_min = hermitian_min_eigenvalue(&gap);
        if gap_min < -1e-10 * b_norm {
            return Err(Error::InvalidInput(format!(
                "B - A^2 is not positive semidefinite for `{}`: min eigenvalue {gap_min:.3e}",
                self.label
            )));
        }
        Ok(())
    }
}

fn hermitian_eigen_range(m: &Mat<Complex64>) -> (f64, f64) {
    let evs = m
        .self_adjoint_eigenvalues(Side::Lower)
        .expect("Hermitian eigensolver failed");
    (evs[0], evs[evs.len() - 1])
}

pub(crate) fn hermitian_spectral_norm(m: &Mat<Complex64>) -> f64 {
    let (lo, hi) = hermitian_eigen_range(m);
    lo.abs().max(hi.abs())
}

pub(crate) fn hermitian_min_eigenvalue(m: &Mat<Complex64>) -> f64 {
    hermitian_eigen_range(m).0
}

/// Moment matrices of the multiplication operator Mf = m·f on the window
/// j = −n..n: A is the Toeplitz matrix of m̂ and B the Toeplitz matrix of
/// the coefficients of m².
pub fn assemble_multiplication(
    symbol: &PiecewiseSymbol,
    n: usize,
    label: impl Into<String>,
) -> MomentMatrices {
    MomentMatrices {
        label: label.into(),
        trunc: Some(n),
        a: toeplitz_of(symbol, n),
        b: toeplitz_of(&symbol.squared(), n),
    }
}

fn toeplitz_of(symbol: &PiecewiseSymbol, n: usize) -> Mat<Complex64> {
    let d = 2 * n + 1;
    // coefficients for offsets 0..d-1; negative offsets by conjugate symmetry
    let coeffs: Vec<Complex64> = (0..d as i64)
        .map(|k| fourier_coefficient(symbol, k))
        .collect();
    let get = |offset: i64| -> Complex64 {
        if offset >= 0 {
            coeffs[offset as usize]
        } else {
            coeffs[(-offset) as usize].conj()
        }
    };
    Mat::from_fn(d, d, |j, k| get(j as i64 - k as i64))
}

/// Moment matrices of M + K where Mf = m·f and Kf = a⟨f, ψ⟩ψ:
/// A' = A + a·v v*, B' = B + a(w v* + v w*) + a²·v v*, with
/// vⱼ = ⟨ψ, φⱼ⟩ and wⱼ = ⟨Mψ, φⱼ⟩ evaluated in closed form.
///
/// A ψ coefficient list reaching beyond the window is rejected: the stored
/// list is read as the restriction of ψ to −n..n, so a longer list would be
/// silently truncated and the assembly would no longer be exact.
pub fn assemble_rank_one(
    symbol: &PiecewiseSymbol,
    pert: &RankOneTerm,
    n: usize,
    label: impl Into<String>,
) -> Result<MomentMatrices> {
    let nn = n as i64;
    let q = pert.half_width();
    if q > nn {
        return Err(Error::PsiSupportExceedsWindow { support: q, window: nn });
    }
    let base = assemble_multiplication(symbol, n, "");
    let d = 2 * n + 1;
    let a_coupling = pert.coupling();

    let v: Vec<Complex64> = (-nn..=nn).map(|j| pert.psi_coefficient(j)).collect();
    // w_j = <M psi, phi_j> = sum_k m-hat(j-k) c_k, exact for band-limited psi
    let w: Vec<Complex64> = (-nn..=nn)
        .map(|j| {
            (-q..=q)
                .map(|k| fourier_coefficient(symbol, j - k) * pert.psi_coefficient(k))
                .sum()
        })
        .collect();

    let mut a = base.a;
    let mut b = base.b;
    for p in 0..d {
        for r in 0..d {
            let vv = v[p] * v[r].conj();
            a[(p, r)] += a_coupling * vv;
            b[(p, r)] += a_coupling * (w[p] * v[r].conj() + v[p] * w[r].conj())
                + a_coupling * a_coupling * vv;
        }
    }
    Ok(MomentMatrices {
        label: label.into(),
        trunc: Some(n),
        a,
        b,
    })
}
