//! Experiment layer: Galerkin comparison, convergence tables, Szegő
//! clustering, limiting-set scans, and compression-residual diagnostics.

mod condition_h;
mod convergence;
mod galerkin;
mod limits;
mod szego;

pub use condition_h::{condition_h_residuals, HResidualRow};
pub use convergence::{
    convergence_table, convergence_table_multi, ConvergenceRow, TABLE_WINDOW_FACTOR,
};
pub use galerkin::{
    galerkin_spectrum, pollution_report, PollutionOptions, PollutionReport, PollutionRow,
};
pub use limits::{limiting_set_scan, CircleTarget, LimitingSetSample};
pub use szego::{szego_stats, ClusterStats};
