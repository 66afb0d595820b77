use num_complex::Complex64;

use crate::engine::second_order_spectrum;
use crate::error::{Error, Result};
use crate::operators::{assemble_multiplication, PiecewiseSymbol};

/// Clustering statistics of the second-order spectrum of a pure ±1 symbol:
/// the Joukowski images w = (z + z⁻¹)/2 of the points cluster at ±1 with
/// asymptotic fractions |Eᶜ|/(2π) and |E|/(2π).
#[derive(Debug, Clone, Copy)]
pub struct ClusterStats {
    pub n: usize,
    pub epsilon: f64,
    /// Fraction of Joukowski images in [−1, −1+ε].
    pub frac_near_minus1: f64,
    /// Fraction of Joukowski images in [1−ε, 1].
    pub frac_near_plus1: f64,
    /// Limit of frac_near_minus1: |Eᶜ|/(2π).
    pub expected_minus: f64,
    /// Limit of frac_near_plus1: |E|/(2π).
    pub expected_plus: f64,
    /// Mean of all 2d spectrum points; equals m̂(0) = (|E|−|Eᶜ|)/(2π)
    /// exactly (trace identity), up to eigensolver rounding.
    pub mean: f64,
}

/// Computes Joukowski clustering fractions and the spectrum mean at window n.
///
/// Each conjugate pair contributes one Joukowski image; points on the real
/// axis count with weight 1/2, which keeps the total image count at d.
pub fn szego_stats(symbol: &PiecewiseSymbol, n: usize, epsilon: f64) -> Result<ClusterStats> {
    if !symbol.is_plus_minus_one() {
        return Err(Error::InvalidInput(
            "Joukowski clustering statistics require the ±1 symbol".into(),
        ));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidInput(format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    let m = assemble_multiplication(symbol, n, "szego");
    let s = second_order_spectrum(&m)?;
    let d = m.dim() as f64;

    let mut weight_minus = 0.0;
    let mut weight_plus = 0.0;
    for z in s.points() {
        if z.norm() < 1e-12 {
            return Err(Error::InvalidInput(
                "spectrum point at the origin: Joukowski map undefined".into(),
            ));
        }
        let weight = if z.im > 0.0 {
            1.0
        } else if z.im < 0.0 {
            continue;
        } else {
            0.5
        };
        let w = joukowski(*z);
        if w >= -1.0 - epsilon && w <= -1.0 + epsilon {
            weight_minus += weight;
        }
        if w >= 1.0 - epsilon && w <= 1.0 + epsilon {
            weight_plus += weight;
        }
    }

    let e = symbol.max_region();
    Ok(ClusterStats {
        n,
        epsilon,
        frac_near_minus1: weight_minus / d,
        frac_near_plus1: weight_plus / d,
        expected_minus: e.complement_measure() / (2.0 * std::f64::consts::PI),
        expected_plus: e.measure_fraction(),
        mean: s.mean().re,
    })
}

pub(crate) fn joukowski(z: Complex64) -> f64 {
    (0.5 * (z + z.inv())).re
}
