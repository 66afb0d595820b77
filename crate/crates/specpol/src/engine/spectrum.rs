use faer::Mat;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operators::MomentMatrices;

/// Default relative tolerance for the conjugate-pairing invariant.
///
/// Conjugate partners inside tightly clustered groups are computed
/// independently by the dense eigensolver and scatter by roughly
/// √(machine ε · ‖C‖); residuals up to ~1e-7 occur for the Toeplitz models
/// at large windows, so the check uses 1e-6. Any genuine asymmetry bug
/// (wrong conjugation, transposed blocks) produces O(1) residuals and still
/// fails loudly.
pub const CONJUGATE_PAIR_TOL: f64 = 1e-6;

/// The multiset of 2d roots of det(z²I − 2zA + B), i.e. the points where
/// the compression of (M − z)² to the trial subspace is singular.
#[derive(Debug, Clone)]
pub struct SecondOrderSpectrum {
    points: Vec<Complex64>,
    trunc: Option<usize>,
    label: String,
}

impl SecondOrderSpectrum {
    /// Points sorted by (re, im); size is exactly 2d counting multiplicity.
    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Fourier window half-width of the generating truncation, when known.
    pub fn truncation(&self) -> Option<usize> {
        self.trunc
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Points in the closed upper half-plane (one representative per
    /// conjugate pair, with real points passing through unchanged).
    pub fn upper_half(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.points.iter().copied().filter(|z| z.im >= 0.0)
    }

    /// The upper-half-plane point closest to a real target.
    pub fn closest_to(&self, lambda: f64) -> Option<Complex64> {
        let target = Complex64::new(lambda, 0.0);
        self.upper_half().min_by(|x, y| {
            (x - target)
                .norm()
                .partial_cmp(&(y - target).norm())
                .expect("spectrum points are finite")
        })
    }

    /// Distance from a real target to the whole multiset.
    pub fn distance_to(&self, lambda: f64) -> f64 {
        let target = Complex64::new(lambda, 0.0);
        self.points
            .iter()
            .map(|z| (z - target).norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// Arithmetic mean of all 2d points.
    pub fn mean(&self) -> Complex64 {
        self.points.iter().sum::<Complex64>() / self.points.len() as f64
    }

    /// Worst relative residual of a greedy bijective pairing z ↔ conj(z).
    pub fn conjugate_pairing_residual(&self) -> f64 {
        conjugate_pairing_residual(&self.points)
    }
}

fn conjugate_pairing_residual(points: &[Complex64]) -> f64 {
    let mut pool: Vec<Complex64> = points.to_vec();
    let mut worst = 0.0f64;
    while let Some(z) = pool.pop() {
        let scale = z.norm().max(1.0);
        let self_residual = 2.0 * z.im.abs();
        if pool.is_empty() {
            worst = worst.max(self_residual / scale);
            continue;
        }
        let target = z.conj();
        let (idx, dist) = pool
            .iter()
            .enumerate()
            .map(|(i, w)| (i, (w - target).norm()))
            .min_by(|x, y| x.1.partial_cmp(&y.1).expect("finite"))
            .expect("pool is nonempty");
        if self_residual <= dist {
            worst = worst.max(self_residual / scale);
        } else {
            worst = worst.max(dist / scale);
            pool.swap_remove(idx);
        }
    }
    worst
}

/// Power-iteration estimate of the spectral norm of a Hermitian matrix.
/// Deterministic start vector; an estimate is all the pencil scaling needs.
fn spectral_norm_estimate(m: &Mat<Complex64>) -> f64 {
    let d = m.nrows();
    let mut v = vec![Complex64::new(1.0 / (d as f64).sqrt(), 0.0); d];
    let mut norm = 0.0f64;
    for _ in 0..30 {
        let mut w = vec![Complex64::new(0.0, 0.0); d];
        for j in 0..d {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..d {
                acc += m[(j, k)] * v[k];
            }
            w[j] = acc;
        }
        norm = w.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        let inv = 1.0 / norm;
        for (vj, wj) in v.iter_mut().zip(&w) {
            *vj = wj * inv;
        }
    }
    norm
}

/// All 2d roots of the monic quadratic pencil Q(z) = z²I − 2zA + B, via the
/// companion linearization [[2A, −B], [I, 0]].
///
/// The pencil is rescaled by s = √‖B‖ (z = sζ) before the solve, the
/// standard balancing for quadratic pencils; this keeps the companion blocks
/// of comparable size so that clustered roots split as little as backward
/// stability allows. The result is checked for conjugate closure and
/// returned sorted by (re, im).
pub fn second_order_spectrum(m: &MomentMatrices) -> Result<SecondOrderSpectrum> {
    let d = m.dim();
    let s = {
        let est = spectral_norm_estimate(m.b()).sqrt();
        if est.is_finite() && est > 1e-100 {
            est
        } else {
            1.0
        }
    };
    let si = 1.0 / s;
    let mut companion = Mat::<Complex64>::zeros(2 * d, 2 * d);
    for j in 0..d {
        for k in 0..d {
            companion[(j, k)] = 2.0 * si * m.a()[(j, k)];
            companion[(j, d + k)] = -si * si * m.b()[(j, k)];
        }
        companion[(d + j, j)] = Complex64::new(1.0, 0.0);
    }
    let eigenvalues = companion.eigenvalues().map_err(|_| Error::EigenSolver {
        label: m.label().to_string(),
        dim: 2 * d,
    })?;
    let mut points: Vec<Complex64> = eigenvalues.into_iter().map(|z| z * s).collect();
    points.sort_by(|x, y| {
        (x.re, x.im)
            .partial_cmp(&(y.re, y.im))
            .expect("eigenvalues are finite")
    });

    let residual = conjugate_pairing_residual(&points);
    if residual > CONJUGATE_PAIR_TOL {
        return Err(Error::ConjugatePairing {
            label: m.label().to_string(),
            residual,
            tol: CONJUGATE_PAIR_TOL,
        });
    }
    Ok(SecondOrderSpectrum {
        points,
        trunc: m.truncation(),
        label: m.label().to_string(),
    })
}
