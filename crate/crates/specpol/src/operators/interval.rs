use std::f64::consts::PI;

use crate::error::{Error, Result};

/// A rational multiple of π, written as (numerator, denominator).
pub type PiFraction = (i64, i64);

/// A finite union of half-open intervals (a, b] inside (−π, π].
///
/// Intervals are kept sorted by left endpoint and pairwise disjoint. This is
/// the set E on which a two-valued symbol takes its "inside" value.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalSet {
    intervals: Vec<(f64, f64)>,
}

impl IntervalSet {
    /// Builds an interval set from endpoint pairs in radians.
    ///
    /// Each pair (a, b) must satisfy −π ≤ a < b ≤ π; pairs must be sorted by
    /// left endpoint and non-overlapping (touching endpoints are fine since
    /// the intervals are half-open).
    pub fn new(intervals: Vec<(f64, f64)>) -> Result<Self> {
        for &(a, b) in &intervals {
            if !(a >= -PI && a < b && b <= PI) {
                return Err(Error::InvalidInput(format!(
                    "interval ({a}, {b}] must satisfy -pi <= a < b <= pi"
                )));
            }
        }
        for w in intervals.windows(2) {
            if w[1].0 < w[0].1 {
                return Err(Error::InvalidInput(format!(
                    "intervals ({}, {}] and ({}, {}] overlap or are out of order",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
        }
        Ok(Self { intervals })
    }

    /// Builds an interval set from endpoints given as rational multiples of π.
    ///
    /// Endpoints like 15π/16 stay exact up to one rounding this way, instead
    /// of accumulating decimal-entry error.
    pub fn from_pi_fractions(fractions: &[(PiFraction, PiFraction)]) -> Result<Self> {
        let mut intervals = Vec::with_capacity(fractions.len());
        for &((an, ad), (bn, bd)) in fractions {
            if ad == 0 || bd == 0 {
                return Err(Error::InvalidInput("zero denominator in pi fraction".into()));
            }
            intervals.push((
                an as f64 / ad as f64 * PI,
                bn as f64 / bd as f64 * PI,
            ));
        }
        Self::new(intervals)
    }

    /// The empty set (the symbol is then its outside value everywhere).
    pub fn empty() -> Self {
        Self { intervals: Vec::new() }
    }

    /// The full circle (−π, π].
    pub fn full() -> Self {
        Self { intervals: vec![(-PI, PI)] }
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Lebesgue measure |E|.
    pub fn measure(&self) -> f64 {
        self.intervals.iter().map(|(a, b)| b - a).sum()
    }

    /// Measure of the complement, 2π − |E|.
    pub fn complement_measure(&self) -> f64 {
        (2.0 * PI - self.measure()).max(0.0)
    }

    /// |E| / (2π).
    pub fn measure_fraction(&self) -> f64 {
        self.measure() / (2.0 * PI)
    }

    /// The complement (−π, π] \ E as an interval set.
    pub fn complement(&self) -> IntervalSet {
        let mut out = Vec::new();
        let mut cursor = -PI;
        for &(a, b) in &self.intervals {
            if a > cursor {
                out.push((cursor, a));
            }
            cursor = b;
        }
        if cursor < PI {
            out.push((cursor, PI));
        }
        IntervalSet { intervals: out }
    }
}
