use faer::Mat;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operators::MomentMatrices;

/// Q(z) = z²I − 2zA + B, the compression of (M − z)² to the trial subspace.
pub(crate) fn pencil_at(m: &MomentMatrices, z: Complex64) -> Mat<Complex64> {
    let d = m.dim();
    let z2 = z * z;
    let mut q = Mat::<Complex64>::zeros(d, d);
    for j in 0..d {
        for k in 0..d {
            q[(j, k)] = m.b()[(j, k)] - 2.0 * z * m.a()[(j, k)];
        }
        q[(j, j)] += z2;
    }
    q
}

/// σₙ(z): the smallest singular value of Q(z). Vanishes exactly on the
/// second-order spectrum and equals 1/‖Q(z)⁻¹‖ elsewhere.
pub fn sigma(m: &MomentMatrices, z: Complex64) -> f64 {
    let q = pencil_at(m, z);
    let sv = q
        .singular_values()
        .expect("SVD of the pencil did not converge");
    // singular values are sorted nonincreasing
    *sv.last().expect("pencil has positive dimension")
}

/// Options for the compass-descent zero finder.
#[derive(Debug, Clone, Copy)]
pub struct DescentOptions {
    /// Initial step length.
    pub step0: f64,
    /// Multiplicative step shrink applied when no neighbor improves.
    pub shrink: f64,
    /// Accept z once sigma(z) <= tol.
    pub tol: f64,
    /// Iteration budget (each iteration evaluates 8 neighbors or shrinks).
    pub max_iter: usize,
}

impl Default for DescentOptions {
    fn default() -> Self {
        Self { step0: 0.1, shrink: 0.5, tol: 1e-10, max_iter: 10_000 }
    }
}

impl DescentOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.step0 > 0.0) || !(self.tol > 0.0) {
            return Err(Error::InvalidInput(
                "descent step0 and tol must be positive".into(),
            ));
        }
        if !(self.shrink > 0.0 && self.shrink < 1.0) {
            return Err(Error::InvalidInput(
                "descent shrink must lie in (0, 1)".into(),
            ));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidInput("descent max_iter must be positive".into()));
        }
        Ok(())
    }
}

const COMPASS: [(f64, f64); 8] = [
    (1.0, 0.0),
    (-1.0, 0.0),
    (0.0, 1.0),
    (0.0, -1.0),
    (1.0, 1.0),
    (1.0, -1.0),
    (-1.0, 1.0),
    (-1.0, -1.0),
];

/// Local descent on σ: move to the best of the 8 compass neighbors at the
/// current step, shrink the step when none improves.
///
/// σ has no spurious local minima (its only local minima are its zeros), so
/// any monotone local search reaches a zero of the pencil if the budget
/// allows. Returns the located zero, or an error carrying the last iterate.
pub fn sigma_descent(
    m: &MomentMatrices,
    z0: Complex64,
    opts: &DescentOptions,
) -> Result<Complex64> {
    opts.validate()?;
    let mut z = z0;
    let mut current = sigma(m, z);
    let mut step = opts.step0;
    for _iter in 0..opts.max_iter {
        if current <= opts.tol {
            return Ok(z);
        }
        let mut best = current;
        let mut best_z = z;
        for (dx, dy) in COMPASS {
            let w = z + Complex64::new(step * dx, step * dy);
            let sw = sigma(m, w);
            if sw < best {
                best = sw;
                best_z = w;
            }
        }
        if best < current {
            z = best_z;
            current = best;
        } else {
            step *= opts.shrink;
        }
    }
    if current <= opts.tol {
        return Ok(z);
    }
    Err(Error::NoZeroFound {
        re: z.re,
        im: z.im,
        sigma: current,
        iters: opts.max_iter,
    })
}

/// Rectangle in the complex plane for σ-grid scans.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRect {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

/// σ sampled on a regular grid. Values are stored row-major with the real
/// coordinate varying fastest: `values[iy * nx + ix]` is σ at
/// (re_min + ix·Δre, im_min + iy·Δim).
#[derive(Debug, Clone)]
pub struct SigmaGrid {
    pub rect: GridRect,
    pub nx: usize,
    pub ny: usize,
    values: Vec<f64>,
}

impl SigmaGrid {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn node(&self, ix: usize, iy: usize) -> Complex64 {
        let re = self.rect.re_min
            + (self.rect.re_max - self.rect.re_min) * ix as f64 / (self.nx - 1) as f64;
        let im = self.rect.im_min
            + (self.rect.im_max - self.rect.im_min) * iy as f64 / (self.ny - 1) as f64;
        Complex64::new(re, im)
    }

    pub fn value(&self, ix: usize, iy: usize) -> f64 {
        self.values[iy * self.nx + ix]
    }

    /// Grid node with the smallest σ.
    pub fn argmin(&self) -> (Complex64, f64) {
        let (idx, &val) = self
            .values
            .iter()
            .enumerate()
            .min_by(|x, y| x.1.partial_cmp(y.1).expect("sigma values are finite"))
            .expect("grid is nonempty");
        (self.node(idx % self.nx, idx / self.nx), val)
    }
}

/// Evaluates σ on a regular nx × ny grid over the rectangle.
pub fn sigma_grid(m: &MomentMatrices, rect: GridRect, nx: usize, ny: usize) -> Result<SigmaGrid> {
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidInput(format!(
            "grid resolution must be at least 2x2, got {nx}x{ny}"
        )));
    }
    if !(rect.re_min < rect.re_max) || !(rect.im_min < rect.im_max) {
        return Err(Error::InvalidInput(
            "grid rectangle must have positive extent".into(),
        ));
    }
    let mut grid = SigmaGrid { rect, nx, ny, values: vec![0.0; nx * ny] };
    for iy in 0..ny {
        for ix in 0..nx {
            let z = grid.node(ix, iy);
            grid.values[iy * nx + ix] = sigma(m, z);
        }
    }
    Ok(grid)
}
