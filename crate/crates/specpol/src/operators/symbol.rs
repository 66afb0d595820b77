use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operators::interval::IntervalSet;

/// A real piecewise-constant function on (−π, π], stored as a partition
/// into half-open pieces (lo, hi] with one value per piece.
///
/// This is the symbol m of a multiplication operator; squaring it gives the
/// symbol of M².
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseSymbol {
    pieces: Vec<(f64, f64, f64)>,
}

impl PiecewiseSymbol {
    /// Builds the symbol taking `inside` on E and `outside` on the complement.
    pub fn two_valued(e: &IntervalSet, inside: f64, outside: f64) -> Self {
        let mut pieces = Vec::new();
        let mut cursor = -PI;
        for &(a, b) in e.intervals() {
            if a > cursor {
                pieces.push((cursor, a, outside));
            }
            pieces.push((a, b, inside));
            cursor = b;
        }
        if cursor < PI {
            pieces.push((cursor, PI, outside));
        }
        Self { pieces }
    }

    /// The standard ±1 symbol: +1 on E, −1 elsewhere.
    pub fn plus_minus_one(e: &IntervalSet) -> Self {
        Self::two_valued(e, 1.0, -1.0)
    }

    /// The indicator of E (1 on E, 0 elsewhere).
    pub fn indicator(e: &IntervalSet) -> Self {
        Self::two_valued(e, 1.0, 0.0)
    }

    /// Builds a symbol from raw pieces, checking they partition (−π, π].
    pub fn from_pieces(pieces: Vec<(f64, f64, f64)>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidInput("symbol needs at least one piece".into()));
        }
        if pieces[0].0 != -PI || pieces[pieces.len() - 1].1 != PI {
            return Err(Error::InvalidInput(
                "symbol pieces must cover (-pi, pi] exactly".into(),
            ));
        }
        for w in pieces.windows(2) {
            if w[0].1 != w[1].0 {
                return Err(Error::InvalidInput(format!(
                    "gap or overlap between pieces at {} vs {}",
                    w[0].1, w[1].0
                )));
            }
        }
        for &(a, b, _) in &pieces {
            if !(a < b) {
                return Err(Error::InvalidInput(format!("empty piece ({a}, {b}]")));
            }
        }
        Ok(Self { pieces })
    }

    pub fn pieces(&self) -> &[(f64, f64, f64)] {
        &self.pieces
    }

    /// Pointwise square; still piecewise constant on the same partition.
    pub fn squared(&self) -> Self {
        Self {
            pieces: self.pieces.iter().map(|&(a, b, v)| (a, b, v * v)).collect(),
        }
    }

    /// Value at x, using the half-open (lo, hi] convention.
    pub fn value_at(&self, x: f64) -> f64 {
        for &(a, b, v) in &self.pieces {
            if x > a && x <= b {
                return v;
            }
        }
        // x <= -pi falls into the first piece by periodic convention
        self.pieces[0].2
    }

    pub fn min_value(&self) -> f64 {
        self.pieces.iter().map(|p| p.2).fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.pieces.iter().map(|p| p.2).fold(f64::NEG_INFINITY, f64::max)
    }

    /// True when every piece value is exactly +1 or −1.
    pub fn is_plus_minus_one(&self) -> bool {
        self.pieces.iter().all(|p| p.2 == 1.0 || p.2 == -1.0)
    }

    /// The distinct values taken by the symbol, sorted.
    pub fn distinct_values(&self) -> Vec<f64> {
        let mut vals: Vec<f64> = self.pieces.iter().map(|p| p.2).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vals.dedup();
        vals
    }

    /// The region where the symbol takes its maximal value, as an interval set.
    ///
    /// For a ±1 symbol this recovers E.
    pub fn max_region(&self) -> IntervalSet {
        let vmax = self.max_value();
        let intervals = self
            .pieces
            .iter()
            .filter(|p| p.2 == vmax)
            .map(|&(a, b, _)| (a, b))
            .collect();
        IntervalSet::new(intervals).expect("pieces of a valid symbol are sorted and disjoint")
    }

    /// Pointwise product with another symbol; partitions are merged.
    pub fn product(&self, other: &PiecewiseSymbol) -> PiecewiseSymbol {
        let mut cuts: Vec<f64> = self
            .pieces
            .iter()
            .chain(other.pieces.iter())
            .flat_map(|&(a, b, _)| [a, b])
            .collect();
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        cuts.dedup();
        let mut pieces = Vec::with_capacity(cuts.len() - 1);
        for w in cuts.windows(2) {
            let mid = 0.5 * (w[0] + w[1]);
            pieces.push((w[0], w[1], self.value_at(mid) * other.value_at(mid)));
        }
        PiecewiseSymbol { pieces }
    }

    /// Scales every value by `c` (affine maps of two-point spectra reduce to
    /// this plus a shift of the pencil).
    pub fn scaled(&self, c: f64) -> PiecewiseSymbol {
        PiecewiseSymbol {
            pieces: self.pieces.iter().map(|&(a, b, v)| (a, b, c * v)).collect(),
        }
    }
}

/// k-th Fourier coefficient of a piecewise-constant symbol:
/// m̂(k) = (2π)⁻¹ ∫ m(x) e^{−ikx} dx, by exact antiderivative on each piece.
///
/// Satisfies m̂(−k) = conj(m̂(k)) since the symbol is real.
pub fn fourier_coefficient(symbol: &PiecewiseSymbol, k: i64) -> Complex64 {
    if k == 0 {
        let sum: f64 = symbol.pieces.iter().map(|&(a, b, v)| v * (b - a)).sum();
        return Complex64::new(sum / (2.0 * PI), 0.0);
    }
    let kf = k as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for &(a, b, v) in &symbol.pieces {
        if v == 0.0 {
            continue;
        }
        // ∫_a^b e^{-ikx} dx = (e^{-ika} − e^{-ikb}) / (ik)
        let ea = Complex64::new(0.0, -kf * a).exp();
        let eb = Complex64::new(0.0, -kf * b).exp();
        acc += v * (ea - eb) / Complex64::new(0.0, kf);
    }
    acc / (2.0 * PI)
}
