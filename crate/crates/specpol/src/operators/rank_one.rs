use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operators::interval::IntervalSet;
use crate::operators::symbol::{fourier_coefficient, PiecewiseSymbol};

/// Tolerance below which a candidate eigenvalue is treated as hitting an
/// essential-spectrum endpoint ±1 (where the resolvent formula degenerates).
const ENDPOINT_TOL: f64 = 1e-9;

/// Shape of the perturbing vector ψ.
///
/// `Constant` is ψ ≡ (2π)^(−1/2), the unit-norm constant; in the normalized
/// exponential basis φⱼ = e^{ijx}/√(2π) its only nonzero coefficient is
/// ⟨ψ, φ₀⟩ = 1. `Coefficients` holds an odd-length, centered list of
/// ⟨ψ, φⱼ⟩ for j = −p..p, which must have unit ℓ² norm.
#[derive(Debug, Clone, PartialEq)]
pub enum PsiSpec {
    Constant,
    Coefficients(Vec<Complex64>),
}

/// The rank-one perturbation K f = a ⟨f, ψ⟩ ψ with coupling a > 0 and
/// ‖ψ‖ = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct RankOneTerm {
    coupling: f64,
    psi: PsiSpec,
}

impl RankOneTerm {
    /// Constant unit-norm ψ with the given coupling.
    pub fn constant(coupling: f64) -> Result<Self> {
        if !(coupling > 0.0) {
            return Err(Error::InvalidInput(format!(
                "rank-one coupling must be positive, got {coupling}"
            )));
        }
        Ok(Self { coupling, psi: PsiSpec::Constant })
    }

    /// Band-limited ψ given by centered Fourier coefficients (length 2p+1).
    pub fn with_coefficients(coupling: f64, coeffs: Vec<Complex64>) -> Result<Self> {
        if !(coupling > 0.0) {
            return Err(Error::InvalidInput(format!(
                "rank-one coupling must be positive, got {coupling}"
            )));
        }
        if coeffs.is_empty() || coeffs.len().is_multiple_of(2) {
            return Err(Error::InvalidInput(
                "psi coefficient list must be odd-length (centered on index 0)".into(),
            ));
        }
        let norm_sq: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidInput(format!(
                "psi must have unit norm; got ||psi||^2 = {norm_sq}"
            )));
        }
        Ok(Self { coupling, psi: PsiSpec::Coefficients(coeffs) })
    }

    pub fn coupling(&self) -> f64 {
        self.coupling
    }

    pub fn psi(&self) -> &PsiSpec {
        &self.psi
    }

    pub fn is_constant(&self) -> bool {
        matches!(self.psi, PsiSpec::Constant)
    }

    /// Largest |j| with a stored coefficient (0 for constant ψ).
    pub fn half_width(&self) -> i64 {
        match &self.psi {
            PsiSpec::Constant => 0,
            PsiSpec::Coefficients(c) => (c.len() as i64 - 1) / 2,
        }
    }

    /// ⟨ψ, φⱼ⟩ in the normalized exponential basis.
    pub fn psi_coefficient(&self, j: i64) -> Complex64 {
        match &self.psi {
            PsiSpec::Constant => {
                if j == 0 {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
            PsiSpec::Coefficients(c) => {
                let p = (c.len() as i64 - 1) / 2;
                if j.abs() <= p {
                    c[(j + p) as usize]
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
        }
    }

    /// Spectral measure weight μ_ψ(E) = ⟨1_E ψ, ψ⟩.
    ///
    /// For constant ψ this is |E|/(2π); for band-limited ψ it is the Toeplitz
    /// quadratic form of the indicator symbol of E.
    pub fn mu(&self, e: &IntervalSet) -> f64 {
        match &self.psi {
            PsiSpec::Constant => e.measure_fraction(),
            PsiSpec::Coefficients(_) => {
                self.symbol_quadratic_form(&PiecewiseSymbol::indicator(e))
            }
        }
    }

    /// ⟨g ψ, ψ⟩ for a piecewise-constant g, via ⟨g φ_j, φ_k⟩ = ĝ(k−j).
    pub fn symbol_quadratic_form(&self, g: &PiecewiseSymbol) -> f64 {
        match &self.psi {
            PsiSpec::Constant => fourier_coefficient(g, 0).re,
            PsiSpec::Coefficients(c) => {
                let p = (c.len() as i64 - 1) / 2;
                let mut acc = Complex64::new(0.0, 0.0);
                for j in -p..=p {
                    for k in -p..=p {
                        acc += self.psi_coefficient(j)
                            * self.psi_coefficient(k).conj()
                            * fourier_coefficient(g, k - j);
                    }
                }
                acc.re
            }
        }
    }
}

/// Discrete eigenvalues of M + K for the ±1 symbol on E, from the secular
/// equation μ_ψ(E)/(λ−1) + μ_ψ(Eᶜ)/(λ+1) = a⁻¹.
///
/// Clearing denominators gives λ² − a(μ_E+μ_Ec)λ − (1 + a(μ_E−μ_Ec)) = 0;
/// real roots away from ±1 are returned sorted. Roots landing on ±1 are
/// spurious artifacts of the clearing and are dropped, and an empty list is
/// a legitimate outcome (no discrete spectrum).
pub fn discrete_eigenvalues_rank_one(e: &IntervalSet, pert: &RankOneTerm) -> Vec<f64> {
    let a = pert.coupling();
    let mu_e = pert.mu(e);
    let mu_ec = pert.mu(&e.complement());
    let s = mu_e + mu_ec;
    let d = mu_e - mu_ec;
    // lambda^2 - a*s*lambda - (1 + a*d) = 0
    let disc = a * a * s * s + 4.0 * (1.0 + a * d);
    if disc < 0.0 {
        return Vec::new();
    }
    let sq = disc.sqrt();
    let mut roots = vec![(a * s - sq) / 2.0, (a * s + sq) / 2.0];
    roots.retain(|l| (l - 1.0).abs() > ENDPOINT_TOL && (l + 1.0).abs() > ENDPOINT_TOL);
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots.dedup_by(|x, y| (*x - *y).abs() < 1e-14);
    roots
}

/// The eigenfunction profile g(x) = 1_E/(λ−1) + 1_Ec/(λ+1) as a symbol.
fn resolvent_profile(e: &IntervalSet, lambda: f64) -> PiecewiseSymbol {
    PiecewiseSymbol::two_valued(e, 1.0 / (lambda - 1.0), 1.0 / (lambda + 1.0))
}

/// Fourier coefficients (indices −n..n) of the normalized eigenfunction
/// φ = ψ · [1_E/(λ−1) + 1_Eᶜ/(λ+1)] of M + K at the eigenvalue λ.
///
/// For constant ψ the coefficients are exactly the Fourier coefficients of
/// the piecewise-constant profile g; for band-limited ψ they are the
/// convolution of ĝ with the ψ coefficients. The true L² norm is computed in
/// closed form (not from the truncated window), so the returned window is a
/// truncation of a globally unit-norm function.
pub fn eigenfunction_rank_one(
    e: &IntervalSet,
    pert: &RankOneTerm,
    lambda: f64,
    n: usize,
) -> Result<Vec<Complex64>> {
    if (lambda - 1.0).abs() <= ENDPOINT_TOL || (lambda + 1.0).abs() <= ENDPOINT_TOL {
        return Err(Error::SingularResolvent(lambda));
    }
    let g = resolvent_profile(e, lambda);
    let nn = n as i64;
    let unnormalized: Vec<Complex64> = match pert.psi() {
        PsiSpec::Constant => (-nn..=nn).map(|j| fourier_coefficient(&g, j)).collect(),
        PsiSpec::Coefficients(c) => {
            let p = (c.len() as i64 - 1) / 2;
            (-nn..=nn)
                .map(|j| {
                    (-p..=p)
                        .map(|k| fourier_coefficient(&g, j - k) * pert.psi_coefficient(k))
                        .sum()
                })
                .collect()
        }
    };
    // ||psi * g||^2 = <g^2 psi, psi>, exact for piecewise g and band-limited psi
    let norm_sq = pert.symbol_quadratic_form(&g.squared());
    if !(norm_sq > 0.0) {
        return Err(Error::InvalidInput(format!(
            "eigenfunction has non-positive norm ({norm_sq}); lambda = {lambda} is not \
             an eigenvalue for this perturbation"
        )));
    }
    let inv = 1.0 / norm_sq.sqrt();
    Ok(unnormalized.into_iter().map(|c| c * inv).collect())
}
