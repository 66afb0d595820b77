use num_complex::Complex64;

use crate::engine::spectrum::SecondOrderSpectrum;

/// The certified interval [Re z − |Im z|, Re z + |Im z|] attached to a
/// second-order spectrum point z: it intersects the spectrum of the full
/// operator, no matter where the truncation put z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    pub lo: f64,
    pub hi: f64,
    pub source: Complex64,
}

impl Enclosure {
    pub fn from_point(z: Complex64) -> Self {
        Self { lo: z.re - z.im.abs(), hi: z.re + z.im.abs(), source: z }
    }

    pub fn half_width(&self) -> f64 {
        0.5 * (self.hi - self.lo)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Distance from the interval to a point (0 when contained).
    pub fn gap_to(&self, x: f64) -> f64 {
        if x < self.lo {
            self.lo - x
        } else if x > self.hi {
            x - self.hi
        } else {
            0.0
        }
    }
}

/// One enclosure per upper-half-plane point (conjugates deduplicated),
/// optionally filtered to half-width ≤ `max_half_width`, sorted by lo.
pub fn enclosures(s: &SecondOrderSpectrum, max_half_width: Option<f64>) -> Vec<Enclosure> {
    let mut out: Vec<Enclosure> = s.upper_half().map(Enclosure::from_point).collect();
    if let Some(cap) = max_half_width {
        out.retain(|e| e.half_width() <= cap);
    }
    out.sort_by(|x, y| {
        (x.lo, x.hi)
            .partial_cmp(&(y.lo, y.hi))
            .expect("enclosure endpoints are finite")
    });
    out
}
