//! Experiment configuration: a TOML file with interval endpoints written as
//! exact rational multiples of π (e.g. `"-15/16 pi"`), converted to radians
//! once at parse time.

use num_complex::Complex64;
use serde::Deserialize;

use crate::engine::{DescentOptions, GridRect};
use crate::error::{Error, Result};
use crate::operators::{IntervalSet, PiecewiseSymbol, RankOneTerm};

/// Parses strings like `"0"`, `"1 pi"`, `"-15/16 pi"`, `"1/2pi"` into
/// radians. Nonzero endpoints must carry the `pi` suffix so that a bare
/// decimal is never read in the wrong unit.
pub fn parse_pi_fraction(s: &str) -> Result<f64> {
    let t = s.trim();
    let (frac, has_pi) = match t.strip_suffix("pi") {
        Some(rest) => (rest.trim(), true),
        None => (t, false),
    };
    let (num_str, den_str) = match frac.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (frac, "1"),
    };
    let num: i64 = num_str
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad pi fraction `{s}`: numerator")))?;
    let den: i64 = den_str
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad pi fraction `{s}`: denominator")))?;
    if den == 0 {
        return Err(Error::InvalidInput(format!("bad pi fraction `{s}`: zero denominator")));
    }
    if !has_pi && num != 0 {
        return Err(Error::InvalidInput(format!(
            "endpoint `{s}` must be a multiple of pi, e.g. \"{num_str}/{den_str} pi\""
        )));
    }
    Ok(num as f64 / den as f64 * std::f64::consts::PI)
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default = "default_label")]
    pub label: String,
    pub operator: OperatorConfig,
    pub n_list: Vec<usize>,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    #[serde(default = "default_gap_delta")]
    pub gap_delta: f64,
    /// Galerkin eigenvalues within this distance of a true discrete
    /// eigenvalue are counted as approximation, not pollution.
    #[serde(default = "default_match_tol")]
    pub match_tol: f64,
    /// Optional half-width cap for the `enclose` subcommand.
    #[serde(default)]
    pub max_half_width: Option<f64>,
    #[serde(default)]
    pub descent: DescentConfig,
    #[serde(default)]
    pub grid: Option<GridConfig>,
    #[serde(default)]
    pub output: OutputConfig,
}

fn default_label() -> String {
    "experiment".into()
}
fn default_epsilon() -> f64 {
    0.1
}
fn default_gap_delta() -> f64 {
    0.05
}
fn default_match_tol() -> f64 {
    1e-3
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorConfig {
    /// E as a list of [lo, hi] endpoint pairs, each a pi-fraction string.
    pub intervals: Vec<(String, String)>,
    #[serde(default = "default_inside")]
    pub inside_value: f64,
    #[serde(default = "default_outside")]
    pub outside_value: f64,
    #[serde(default)]
    pub rank_one: Option<RankOneConfig>,
}

fn default_inside() -> f64 {
    1.0
}
fn default_outside() -> f64 {
    -1.0
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankOneConfig {
    pub coupling: f64,
    #[serde(default)]
    pub psi: PsiConfig,
}

/// ψ is either the constant unit-norm function or a centered list of
/// [re, im] Fourier coefficients.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum PsiConfig {
    Named(String),
    Coefficients(Vec<(f64, f64)>),
}

impl Default for PsiConfig {
    fn default() -> Self {
        PsiConfig::Named("constant".into())
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescentConfig {
    #[serde(default = "default_step0")]
    pub step0: f64,
    #[serde(default = "default_shrink")]
    pub shrink: f64,
    #[serde(default = "default_desc_tol")]
    pub tol: f64,
    #[serde(default = "default_max_iter")]
    pub max_iter: usize,
}

fn default_step0() -> f64 {
    0.1
}
fn default_shrink() -> f64 {
    0.5
}
fn default_desc_tol() -> f64 {
    1e-10
}
fn default_max_iter() -> usize {
    10_000
}

impl Default for DescentConfig {
    fn default() -> Self {
        Self {
            step0: default_step0(),
            shrink: default_shrink(),
            tol: default_desc_tol(),
            max_iter: default_max_iter(),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub nx: usize,
    pub ny: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default = "default_format")]
    pub format: OutputFormat,
    #[serde(default = "default_precision")]
    pub precision: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

fn default_format() -> OutputFormat {
    OutputFormat::Csv
}
fn default_precision() -> usize {
    8
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self { format: default_format(), precision: default_precision() }
    }
}

impl ExperimentConfig {
    /// Parses and validates a TOML config. Parse errors carry the line and
    /// column of the offending field.
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig =
            toml::from_str(text).map_err(|e| Error::InvalidInput(format!("config parse: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_list.is_empty() {
            return Err(Error::InvalidInput("n_list must be nonempty".into()));
        }
        if self.n_list.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput("n_list must be strictly ascending".into()));
        }
        if !(6..=17).contains(&self.output.precision) {
            return Err(Error::InvalidInput(format!(
                "output.precision must lie in [6, 17], got {}",
                self.output.precision
            )));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(Error::InvalidInput("epsilon must lie in (0, 1)".into()));
        }
        if !(self.gap_delta > 0.0 && self.gap_delta < 1.0) {
            return Err(Error::InvalidInput("gap_delta must lie in (0, 1)".into()));
        }
        if !(self.match_tol > 0.0) {
            return Err(Error::InvalidInput("match_tol must be positive".into()));
        }
        self.descent_options().validate()?;
        self.interval_set()?;
        self.rank_one_term()?;
        if let Some(g) = &self.grid {
            if g.nx < 2 || g.ny < 2 {
                return Err(Error::InvalidInput("grid resolution must be at least 2x2".into()));
            }
            if !(g.re_min < g.re_max && g.im_min < g.im_max) {
                return Err(Error::InvalidInput("grid rectangle must have positive extent".into()));
            }
        }
        Ok(())
    }

    pub fn interval_set(&self) -> Result<IntervalSet> {
        let mut pairs = Vec::with_capacity(self.operator.intervals.len());
        for (lo, hi) in &self.operator.intervals {
            pairs.push((parse_pi_fraction(lo)?, parse_pi_fraction(hi)?));
        }
        IntervalSet::new(pairs)
    }

    pub fn symbol(&self) -> Result<PiecewiseSymbol> {
        Ok(PiecewiseSymbol::two_valued(
            &self.interval_set()?,
            self.operator.inside_value,
            self.operator.outside_value,
        ))
    }

    pub fn rank_one_term(&self) -> Result<Option<RankOneTerm>> {
        match &self.operator.rank_one {
            None => Ok(None),
            Some(r) => {
                let term = match &r.psi {
                    PsiConfig::Named(name) if name == "constant" => {
                        RankOneTerm::constant(r.coupling)?
                    }
                    PsiConfig::Named(other) => {
                        return Err(Error::InvalidInput(format!(
                            "unknown psi `{other}`; use \"constant\" or a coefficient list"
                        )))
                    }
                    PsiConfig::Coefficients(cs) => RankOneTerm::with_coefficients(
                        r.coupling,
                        cs.iter().map(|(re, im)| Complex64::new(*re, *im)).collect(),
                    )?,
                };
                Ok(Some(term))
            }
        }
    }

    pub fn descent_options(&self) -> DescentOptions {
        DescentOptions {
            step0: self.descent.step0,
            shrink: self.descent.shrink,
            tol: self.descent.tol,
            max_iter: self.descent.max_iter,
        }
    }

    pub fn grid_rect(&self) -> Result<(GridRect, usize, usize)> {
        let g = self
            .grid
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("this subcommand needs a [grid] section".into()))?;
        Ok((
            GridRect {
                re_min: g.re_min,
                re_max: g.re_max,
                im_min: g.im_min,
                im_max: g.im_max,
            },
            g.nx,
            g.ny,
        ))
    }
}
