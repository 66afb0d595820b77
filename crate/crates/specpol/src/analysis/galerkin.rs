use faer::Side;

use crate::engine::{enclosures, second_order_spectrum, Enclosure};
use crate::error::{Error, Result};
use crate::operators::{
    assemble_multiplication, assemble_rank_one, discrete_eigenvalues_rank_one, MomentMatrices,
    PiecewiseSymbol, RankOneTerm,
};

/// Sorted real eigenvalues of the compression A — the classical linear
/// (Galerkin) approximation of Spec M, the one that pollutes in gaps.
pub fn galerkin_spectrum(m: &MomentMatrices) -> Result<Vec<f64>> {
    m.a()
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|_| Error::EigenSolver { label: m.label().to_string(), dim: m.dim() })
}

/// Options for pollution counting.
#[derive(Debug, Clone, Copy)]
pub struct PollutionOptions {
    /// Margin delta: the gap window is (−1+delta, 1−delta).
    pub gap_delta: f64,
    /// A Galerkin eigenvalue within this distance of a true discrete
    /// eigenvalue counts as approximation, not pollution.
    pub match_tol: f64,
}

impl Default for PollutionOptions {
    fn default() -> Self {
        Self { gap_delta: 0.05, match_tol: 1e-3 }
    }
}

#[derive(Debug, Clone)]
pub struct PollutionRow {
    pub n: usize,
    /// Galerkin eigenvalues inside the gap window.
    pub galerkin_in_gap: Vec<f64>,
    /// The subset of those not matching any true discrete eigenvalue.
    pub polluting: Vec<f64>,
    /// Second-order enclosures whose interval intersects the gap window
    /// (no width cap; callers filter on half-width).
    pub enclosures_in_gap: Vec<Enclosure>,
}

#[derive(Debug, Clone)]
pub struct PollutionReport {
    /// The gap window (−1+delta, 1−delta).
    pub gap: (f64, f64),
    /// Discrete eigenvalues of the perturbed operator (empty when pure).
    pub true_eigenvalues: Vec<f64>,
    pub rows: Vec<PollutionRow>,
}

pub(crate) fn check_ascending(n_list: &[usize]) -> Result<()> {
    if n_list.is_empty() {
        return Err(Error::InvalidInput("n_list must be nonempty".into()));
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput("n_list must be strictly ascending".into()));
    }
    Ok(())
}

pub(crate) fn assemble(
    symbol: &PiecewiseSymbol,
    pert: Option<&RankOneTerm>,
    n: usize,
    label: &str,
) -> Result<MomentMatrices> {
    match pert {
        None => Ok(assemble_multiplication(symbol, n, label)),
        Some(p) => assemble_rank_one(symbol, p, n, label),
    }
}

/// Per window n: Galerkin eigenvalues in the essential gap that do not match
/// a true discrete eigenvalue (the polluting set), alongside second-order
/// enclosures covering the same window.
pub fn pollution_report(
    symbol: &PiecewiseSymbol,
    pert: Option<&RankOneTerm>,
    n_list: &[usize],
    opts: &PollutionOptions,
) -> Result<PollutionReport> {
    check_ascending(n_list)?;
    if !symbol.is_plus_minus_one() {
        return Err(Error::InvalidInput(
            "pollution counting assumes the ±1 symbol (essential spectrum {−1, 1})".into(),
        ));
    }
    if !(opts.gap_delta > 0.0 && opts.gap_delta < 1.0) {
        return Err(Error::InvalidInput("gap_delta must lie in (0, 1)".into()));
    }
    let gap = (-1.0 + opts.gap_delta, 1.0 - opts.gap_delta);
    let true_eigenvalues = match pert {
        Some(p) => discrete_eigenvalues_rank_one(&symbol.max_region(), p),
        None => Vec::new(),
    };
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let m = assemble(symbol, pert, n, "pollution")?;
        let galerkin = galerkin_spectrum(&m)?;
        let galerkin_in_gap: Vec<f64> = galerkin
            .into_iter()
            .filter(|w| *w > gap.0 && *w < gap.1)
            .collect();
        let polluting: Vec<f64> = galerkin_in_gap
            .iter()
            .copied()
            .filter(|w| {
                true_eigenvalues
                    .iter()
                    .all(|t| (w - t).abs() > opts.match_tol)
            })
            .collect();
        let spectrum = second_order_spectrum(&m)?;
        let enclosures_in_gap: Vec<Enclosure> = enclosures(&spectrum, None)
            .into_iter()
            .filter(|e| e.hi > gap.0 && e.lo < gap.1)
            .collect();
        rows.push(PollutionRow { n, galerkin_in_gap, polluting, enclosures_in_gap });
    }
    Ok(PollutionReport { gap, true_eigenvalues, rows })
}
