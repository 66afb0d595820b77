//! Deterministic CSV/JSON rendering: fixed-point decimals at a configured
//! precision, LF line endings, fully ordered rows, no header lines.
//! Identical inputs render byte-identically.

use serde_json::{json, Value};

use crate::analysis::{ClusterStats, ConvergenceRow, HResidualRow, LimitingSetSample, PollutionReport};
use crate::engine::{Enclosure, SecondOrderSpectrum, SigmaGrid};

/// Fixed-point formatter. Non-finite values are never emitted by the
/// pipelines; negative zero is normalized so equal values render equally.
#[derive(Debug, Clone, Copy)]
pub struct Formatter {
    pub precision: usize,
}

impl Formatter {
    pub fn new(precision: usize) -> Self {
        Self { precision }
    }

    pub fn f(&self, x: f64) -> String {
        let s = format!("{:.*}", self.precision, x);
        if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
            s[1..].to_string()
        } else {
            s
        }
    }
}

/// `spec2`: one `re,im` line per point; blocks ordered by window.
pub fn spec2_csv(blocks: &[(usize, SecondOrderSpectrum)], fmt: Formatter) -> String {
    let mut out = String::new();
    for (_, s) in blocks {
        for z in s.points() {
            out.push_str(&fmt.f(z.re));
            out.push(',');
            out.push_str(&fmt.f(z.im));
            out.push('\n');
        }
    }
    out
}

pub fn spec2_json(blocks: &[(usize, SecondOrderSpectrum)]) -> Value {
    json!(blocks
        .iter()
        .map(|(n, s)| {
            json!({
                "n": n,
                "label": s.label(),
                "points": s.points().iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>(),
            })
        })
        .collect::<Vec<_>>())
}

/// `enclose`: `lo,hi,re,im` lines sorted by lo within each window block.
pub fn enclose_csv(blocks: &[(usize, Vec<Enclosure>)], fmt: Formatter) -> String {
    let mut out = String::new();
    for (_, list) in blocks {
        for e in list {
            out.push_str(&format!(
                "{},{},{},{}\n",
                fmt.f(e.lo),
                fmt.f(e.hi),
                fmt.f(e.source.re),
                fmt.f(e.source.im)
            ));
        }
    }
    out
}

pub fn enclose_json(blocks: &[(usize, Vec<Enclosure>)]) -> Value {
    json!(blocks
        .iter()
        .map(|(n, list)| {
            json!({
                "n": n,
                "enclosures": list
                    .iter()
                    .map(|e| json!({
                        "lo": e.lo,
                        "hi": e.hi,
                        "source": [e.source.re, e.source.im],
                    }))
                    .collect::<Vec<_>>(),
            })
        })
        .collect::<Vec<_>>())
}

/// `table`: `n,lo,hi,re_minus_lambda` rows, grouped per target eigenvalue.
pub fn table_csv(groups: &[(f64, Vec<ConvergenceRow>)], fmt: Formatter) -> String {
    let mut out = String::new();
    for (_, rows) in groups {
        for r in rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.n,
                fmt.f(r.lo),
                fmt.f(r.hi),
                fmt.f(r.re_minus_lambda)
            ));
        }
    }
    out
}

pub fn table_json(groups: &[(f64, Vec<ConvergenceRow>)]) -> Value {
    json!(groups
        .iter()
        .map(|(lambda, rows)| {
            json!({
                "lambda": lambda,
                "rows": rows
                    .iter()
                    .map(|r| json!({
                        "n": r.n,
                        "lo": r.lo,
                        "hi": r.hi,
                        "re_minus_lambda": r.re_minus_lambda,
                        "im_abs": r.im_abs,
                    }))
                    .collect::<Vec<_>>(),
            })
        })
        .collect::<Vec<_>>())
}

/// `szego`: `n,epsilon,frac_near_minus1,frac_near_plus1,expected_minus,expected_plus,mean`.
pub fn szego_csv(stats: &[ClusterStats], fmt: Formatter) -> String {
    let mut out = String::new();
    for s in stats {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            s.n,
            fmt.f(s.epsilon),
            fmt.f(s.frac_near_minus1),
            fmt.f(s.frac_near_plus1),
            fmt.f(s.expected_minus),
            fmt.f(s.expected_plus),
            fmt.f(s.mean)
        ));
    }
    out
}

pub fn szego_json(stats: &[ClusterStats]) -> Value {
    json!(stats
        .iter()
        .map(|s| json!({
            "n": s.n,
            "epsilon": s.epsilon,
            "frac_near_minus1": s.frac_near_minus1,
            "frac_near_plus1": s.frac_near_plus1,
            "expected_minus": s.expected_minus,
            "expected_plus": s.expected_plus,
            "mean": s.mean,
        }))
        .collect::<Vec<_>>())
}

/// `galerkin`: `n,eigenvalue,in_gap,polluting` lines.
pub fn galerkin_csv(
    per_n: &[(usize, Vec<f64>)],
    report: &PollutionReport,
    fmt: Formatter,
) -> String {
    let mut out = String::new();
    for ((n, eigenvalues), row) in per_n.iter().zip(&report.rows) {
        for w in eigenvalues {
            let in_gap = *w > report.gap.0 && *w < report.gap.1;
            let polluting = row.polluting.iter().any(|p| p == w);
            out.push_str(&format!(
                "{},{},{},{}\n",
                n,
                fmt.f(*w),
                in_gap as u8,
                polluting as u8
            ));
        }
    }
    out
}

pub fn galerkin_json(per_n: &[(usize, Vec<f64>)], report: &PollutionReport) -> Value {
    json!({
        "gap": [report.gap.0, report.gap.1],
        "true_eigenvalues": report.true_eigenvalues,
        "per_n": per_n
            .iter()
            .zip(&report.rows)
            .map(|((n, eigenvalues), row)| json!({
                "n": n,
                "eigenvalues": eigenvalues,
                "polluting": row.polluting,
                "enclosures_in_gap": row.enclosures_in_gap
                    .iter()
                    .map(|e| json!({"lo": e.lo, "hi": e.hi, "half_width": e.half_width()}))
                    .collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>(),
    })
}

/// `sigma-grid`: `re,im,sigma` lines, row-major with re varying fastest.
pub fn grid_csv(grid: &SigmaGrid, fmt: Formatter) -> String {
    let mut out = String::new();
    for iy in 0..grid.ny {
        for ix in 0..grid.nx {
            let z = grid.node(ix, iy);
            out.push_str(&format!(
                "{},{},{}\n",
                fmt.f(z.re),
                fmt.f(z.im),
                fmt.f(grid.value(ix, iy))
            ));
        }
    }
    out
}

pub fn grid_json(grid: &SigmaGrid) -> Value {
    json!({
        "rect": {
            "re_min": grid.rect.re_min,
            "re_max": grid.rect.re_max,
            "im_min": grid.rect.im_min,
            "im_max": grid.rect.im_max,
        },
        "nx": grid.nx,
        "ny": grid.ny,
        "layout": "row-major, re varies fastest",
        "values": grid.values(),
    })
}

/// `limits`: one line per window:
/// `n,circle_distance[,dist_lambda_i...][,off_axis]`; column count is fixed
/// by the configuration (number of discrete eigenvalues, perturbed or not).
pub fn limits_csv(sample: &LimitingSetSample, fmt: Formatter) -> String {
    let mut out = String::new();
    for (idx, (n, _)) in sample.per_n.iter().enumerate() {
        let mut fields = vec![n.to_string()];
        if let Some((_, d)) = sample.circle_distances.get(idx) {
            fields.push(fmt.f(*d));
        }
        for (_, dists) in &sample.eigenvalue_distances {
            fields.push(fmt.f(dists[idx].1));
        }
        if let Some(off) = &sample.off_axis_comparison {
            if let Some((_, d)) = off.iter().find(|(m, _)| m == n) {
                fields.push(fmt.f(*d));
            }
        }
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn limits_json(sample: &LimitingSetSample) -> Value {
    json!({
        "target": sample.target.map(|t| json!({"center": t.center, "radius": t.radius})),
        "circle_distances": sample.circle_distances,
        "eigenvalue_distances": sample.eigenvalue_distances
            .iter()
            .map(|(lambda, dists)| json!({"lambda": lambda, "distances": dists}))
            .collect::<Vec<_>>(),
        "off_axis_comparison": sample.off_axis_comparison,
        "per_n": sample.per_n
            .iter()
            .map(|(n, cloud)| json!({
                "n": n,
                "points": cloud.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>(),
    })
}

/// `check-h`: `lambda,n,r1,r2,sigma` lines grouped per eigenvalue.
pub fn check_h_csv(groups: &[(f64, Vec<HResidualRow>)], fmt: Formatter) -> String {
    let mut out = String::new();
    for (lambda, rows) in groups {
        for r in rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                fmt.f(*lambda),
                r.n,
                fmt.f(r.r1),
                fmt.f(r.r2),
                fmt.f(r.sigma_at_lambda)
            ));
        }
    }
    out
}

pub fn check_h_json(groups: &[(f64, Vec<HResidualRow>)]) -> Value {
    json!(groups
        .iter()
        .map(|(lambda, rows)| json!({
            "lambda": lambda,
            "rows": rows
                .iter()
                .map(|r| json!({
                    "n": r.n,
                    "r1": r.r1,
                    "r2": r.r2,
                    "sigma": r.sigma_at_lambda,
                }))
                .collect::<Vec<_>>(),
        }))
        .collect::<Vec<_>>())
}

/// Pretty JSON with a trailing newline (UTF-8, LF).
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json rendering cannot fail");
    s.push('\n');
    s
}
