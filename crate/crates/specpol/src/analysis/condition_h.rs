use faer::Mat;
use num_complex::Complex64;

use crate::analysis::galerkin::check_ascending;
use crate::engine::sigma;
use crate::error::{Error, Result};
use crate::operators::{
    assemble_rank_one, eigenfunction_rank_one, PiecewiseSymbol, RankOneTerm,
};

/// Reference window = this factor × max(n_list). The eigenfunction
/// coefficients decay like 1/|j| (the profile is piecewise smooth), so the
/// reference-window truncation error is dominated by the per-n residuals.
const REFERENCE_FACTOR: usize = 4;

/// Compression residuals of the eigenpair (λ, ψ) at window n:
/// r1 = ‖PₙMPₙψ − λψ‖ and r2 = ‖PₙM²Pₙψ − λ²ψ‖, with ψ represented by its
/// coefficients on a reference window much wider than n. Both must decay as
/// n grows for the truncation scheme to see the eigenvalue; σₙ(λ) is
/// recorded alongside since it is squeezed by the residuals.
#[derive(Debug, Clone, Copy)]
pub struct HResidualRow {
    pub n: usize,
    pub r1: f64,
    pub r2: f64,
    pub sigma_at_lambda: f64,
}

/// Computes the compression residuals of (λ, eigenfunction) per window.
pub fn condition_h_residuals(
    symbol: &PiecewiseSymbol,
    pert: &RankOneTerm,
    lambda: f64,
    n_list: &[usize],
) -> Result<Vec<HResidualRow>> {
    check_ascending(n_list)?;
    if !symbol.is_plus_minus_one() {
        return Err(Error::InvalidInput(
            "compression residuals assume the ±1 symbol model".into(),
        ));
    }
    let n_max = *n_list.last().expect("n_list nonempty");
    let n_ref = REFERENCE_FACTOR * n_max.max(1);
    let e = symbol.max_region();
    let psi = eigenfunction_rank_one(&e, pert, lambda, n_ref)?;
    let nn_ref = n_ref as i64;

    let coeff = |j: i64| -> Complex64 { psi[(j + nn_ref) as usize] };

    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let m = assemble_rank_one(symbol, pert, n, "condition-h")?;
        let nn = n as i64;
        let window: Vec<Complex64> = (-nn..=nn).map(coeff).collect();
        let tail_sq: f64 = (nn + 1..=nn_ref)
            .map(|j| coeff(j).norm_sqr() + coeff(-j).norm_sqr())
            .sum();
        let r1 = residual(m.a(), &window, lambda, tail_sq);
        let r2 = residual(m.b(), &window, lambda * lambda, tail_sq);
        let sigma_at_lambda = sigma(&m, Complex64::new(lambda, 0.0));
        rows.push(HResidualRow { n, r1, r2, sigma_at_lambda });
    }
    Ok(rows)
}

/// ‖M·c − μ·c‖ on the window plus the μ-weighted tail mass beyond it:
/// the compressed action is zero outside the window while μψ is not.
fn residual(m: &Mat<Complex64>, c: &[Complex64], mu: f64, tail_sq: f64) -> f64 {
    let d = c.len();
    let mut acc = 0.0;
    for j in 0..d {
        let mut row = Complex64::new(0.0, 0.0);
        for k in 0..d {
            row += m[(j, k)] * c[k];
        }
        acc += (row - mu * c[j]).norm_sqr();
    }
    (acc + mu * mu * tail_sq).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{discrete_eigenvalues_rank_one, IntervalSet};

    #[test]
    fn residuals_vanish_when_psi_is_in_the_window() {
        // E = (-pi, pi]: M = I, eigenfunction = phi_0 lives in every window
        let sym = PiecewiseSymbol::plus_minus_one(&IntervalSet::full());
        let pert = RankOneTerm::constant(1.0).unwrap();
        let rows = condition_h_residuals(&sym, &pert, 2.0, &[0, 1, 3]).unwrap();
        for row in &rows {
            assert!(row.r1 < 1e-12, "n = {}: r1 = {:.3e}", row.n, row.r1);
            assert!(row.r2 < 1e-12, "n = {}: r2 = {:.3e}", row.n, row.r2);
        }
    }

    #[test]
    fn residuals_decay_for_the_half_interval_model() {
        let e = IntervalSet::from_pi_fractions(&[((0, 1), (1, 1))]).unwrap();
        let sym = PiecewiseSymbol::plus_minus_one(&e);
        let pert = RankOneTerm::constant(1.0).unwrap();
        let lambda = discrete_eigenvalues_rank_one(&e, &pert)[1];
        let rows = condition_h_residuals(&sym, &pert, lambda, &[20, 80]).unwrap();
        assert!(rows[1].r1 < rows[0].r1, "{:?}", rows);
        assert!(rows[1].r2 < rows[0].r2, "{:?}", rows);
        assert!(rows[1].sigma_at_lambda < rows[0].sigma_at_lambda, "{:?}", rows);
    }

    #[test]
    fn rejects_endpoint_lambda() {
        let e = IntervalSet::from_pi_fractions(&[((0, 1), (1, 1))]).unwrap();
        let sym = PiecewiseSymbol::plus_minus_one(&e);
        let pert = RankOneTerm::constant(1.0).unwrap();
        assert!(condition_h_residuals(&sym, &pert, 1.0, &[5, 10]).is_err());
    }
}
