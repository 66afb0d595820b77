use num_complex::Complex64;

use crate::analysis::galerkin::{assemble, check_ascending};
use crate::engine::second_order_spectrum;
use crate::error::{Error, Result};
use crate::operators::{discrete_eigenvalues_rank_one, PiecewiseSymbol, RankOneTerm};

/// Points further than this from the real axis participate in the
/// perturbed-vs-pure off-axis comparison.
const OFF_AXIS_BAND: f64 = 0.1;

/// Number of uniform samples of the target circle for the directed
/// Hausdorff diagnostic; well below the observed point spacing at the
/// window sizes this library targets.
const CIRCLE_SAMPLES: usize = 720;

/// The circle that carries the limiting set of a two-valued symbol with
/// values {a, b}: center (a+b)/2, radius (b−a)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleTarget {
    pub center: f64,
    pub radius: f64,
}

/// Accumulated second-order spectrum clouds across a list of windows, with
/// limiting-set diagnostics.
#[derive(Debug, Clone)]
pub struct LimitingSetSample {
    /// Per-window point clouds, in n_list order.
    pub per_n: Vec<(usize, Vec<Complex64>)>,
    /// Union of the per-window clouds.
    pub accumulated: Vec<Complex64>,
    /// Target circle (present for symbols taking at most two values).
    pub target: Option<CircleTarget>,
    /// Directed Hausdorff distance from a uniform sample of the target
    /// circle to the cloud accumulated up to each window.
    pub circle_distances: Vec<(usize, f64)>,
    /// Per discrete eigenvalue λ: dist(λ, Spec₂(n)) for each window.
    pub eigenvalue_distances: Vec<(f64, Vec<(usize, f64)>)>,
    /// When perturbed: symmetric Hausdorff distance between the perturbed
    /// and unperturbed clouds restricted to |Im z| > 0.1, per window —
    /// compact perturbations leave the off-axis limiting behavior intact.
    pub off_axis_comparison: Option<Vec<(usize, f64)>>,
}

fn min_distance(point: Complex64, cloud: &[Complex64]) -> f64 {
    cloud
        .iter()
        .map(|z| (z - point).norm())
        .fold(f64::INFINITY, f64::min)
}

fn directed_hausdorff(from: &[Complex64], to: &[Complex64]) -> f64 {
    from.iter()
        .map(|p| min_distance(*p, to))
        .fold(0.0f64, f64::max)
}

fn symmetric_hausdorff(a: &[Complex64], b: &[Complex64]) -> f64 {
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}

fn circle_samples(target: &CircleTarget) -> Vec<Complex64> {
    (0..CIRCLE_SAMPLES)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / CIRCLE_SAMPLES as f64;
            Complex64::new(
                target.center + target.radius * theta.cos(),
                target.radius * theta.sin(),
            )
        })
        .collect()
}

/// Runs Spec₂ over a list of windows and accumulates limiting-set
/// diagnostics: circle coverage for the pure model and per-eigenvalue
/// approach distances for the perturbed one.
pub fn limiting_set_scan(
    symbol: &PiecewiseSymbol,
    pert: Option<&RankOneTerm>,
    n_list: &[usize],
) -> Result<LimitingSetSample> {
    check_ascending(n_list)?;
    if n_list.len() < 2 {
        return Err(Error::InvalidInput(
            "limiting-set scans need at least two windows".into(),
        ));
    }
    if pert.is_some() && !symbol.is_plus_minus_one() {
        return Err(Error::InvalidInput(
            "perturbed limiting-set scans assume the ±1 symbol".into(),
        ));
    }

    let values = symbol.distinct_values();
    let target = if values.len() <= 2 {
        let lo = values[0];
        let hi = *values.last().expect("symbol has at least one value");
        Some(CircleTarget { center: 0.5 * (lo + hi), radius: 0.5 * (hi - lo) })
    } else {
        None
    };
    let samples = target.as_ref().map(circle_samples);

    let lambdas = match pert {
        Some(p) => discrete_eigenvalues_rank_one(&symbol.max_region(), p),
        None => Vec::new(),
    };

    let mut per_n = Vec::with_capacity(n_list.len());
    let mut accumulated: Vec<Complex64> = Vec::new();
    let mut circle_distances = Vec::new();
    let mut eigenvalue_distances: Vec<(f64, Vec<(usize, f64)>)> =
        lambdas.iter().map(|l| (*l, Vec::new())).collect();
    let mut off_axis = Vec::new();

    for &n in n_list {
        let m = assemble(symbol, pert, n, "limits")?;
        let cloud = second_order_spectrum(&m)?.points().to_vec();
        accumulated.extend_from_slice(&cloud);
        if let Some(samples) = &samples {
            circle_distances.push((n, directed_hausdorff(samples, &accumulated)));
        }
        for (lambda, dists) in eigenvalue_distances.iter_mut() {
            dists.push((n, min_distance(Complex64::new(*lambda, 0.0), &cloud)));
        }
        if pert.is_some() {
            let pure = second_order_spectrum(&assemble(symbol, None, n, "limits-pure")?)?;
            let off_pert: Vec<Complex64> = cloud
                .iter()
                .copied()
                .filter(|z| z.im.abs() > OFF_AXIS_BAND)
                .collect();
            let off_pure: Vec<Complex64> = pure
                .points()
                .iter()
                .copied()
                .filter(|z| z.im.abs() > OFF_AXIS_BAND)
                .collect();
            if !off_pert.is_empty() && !off_pure.is_empty() {
                off_axis.push((n, symmetric_hausdorff(&off_pert, &off_pure)));
            }
        }
        per_n.push((n, cloud));
    }

    Ok(LimitingSetSample {
        per_n,
        accumulated,
        target,
        circle_distances,
        eigenvalue_distances,
        off_axis_comparison: if pert.is_some() { Some(off_axis) } else { None },
    })
}
