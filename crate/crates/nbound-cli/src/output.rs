//! Deterministic rendering of sweep rows and single evaluations.
//!
//! Floats are printed with 12 significant digits in scientific notation
//! so that identical invocations produce byte-identical output.

use serde::Serialize;

use nbound::Error;

use crate::sweep::{Row, SweepSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// 12 significant digits, scientific notation.
pub fn format_float(x: f64) -> String {
    format!("{x:.11e}")
}

fn format_opt(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

pub const CSV_HEADER: &str = "N,coupling_mode,coupling,kind,value,valid,margin,mu_star,reason";

pub fn render_csv(rows: &[Row]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.mode.code(),
            format_float(r.coupling),
            r.kind.code(),
            format_opt(r.value),
            r.valid,
            format_float(r.margin),
            format_opt(r.mu_star),
            r.reason.as_deref().unwrap_or(""),
        ));
    }
    out
}

#[derive(Serialize)]
struct JsonRow<'a> {
    n: usize,
    coupling_mode: &'static str,
    coupling: f64,
    kind: &'static str,
    value: Option<f64>,
    valid: bool,
    margin: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu_star: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonGrid {
    start: f64,
    stop: f64,
    steps: usize,
}

#[derive(Serialize)]
struct JsonMeta<'a> {
    tool: &'static str,
    version: &'static str,
    n_list: &'a [usize],
    mass: f64,
    coupling_mode: &'static str,
    grid: JsonGrid,
    kinds: Vec<&'static str>,
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    metadata: JsonMeta<'a>,
    rows: Vec<JsonRow<'a>>,
}

pub fn render_json(spec: &SweepSpec, rows: &[Row]) -> String {
    let doc = JsonDocument {
        metadata: JsonMeta {
            tool: "nbound",
            version: env!("CARGO_PKG_VERSION"),
            n_list: &spec.n_list,
            mass: spec.mass,
            coupling_mode: spec.mode.code(),
            grid: JsonGrid {
                start: spec.grid.0,
                stop: spec.grid.1,
                steps: spec.grid.2,
            },
            kinds: spec.kinds.iter().map(|k| k.code()).collect(),
        },
        rows: rows
            .iter()
            .map(|r| JsonRow {
                n: r.n,
                coupling_mode: r.mode.code(),
                coupling: r.coupling,
                kind: r.kind.code(),
                value: r.value,
                valid: r.valid,
                margin: r.margin,
                mu_star: r.mu_star,
                reason: r.reason.as_deref(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable document");
    text.push('\n');
    text
}

/// Single-point evaluation result, printed as one JSON object.
#[derive(Serialize)]
pub struct EvalReport {
    pub kind: &'static str,
    pub value: f64,
    pub valid: bool,
    pub margin: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_star: Option<f64>,
}

impl EvalReport {
    pub fn from_bound(b: &nbound::bounds::BoundValue) -> Self {
        EvalReport {
            kind: b.kind.code(),
            value: b.value,
            valid: b.valid,
            margin: b.constraint_margin,
            mu_star: None,
        }
    }

    pub fn with_mu_star(mut self, mu: f64) -> Self {
        self.mu_star = Some(mu);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable report")
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    #[serde(rename = "type")]
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    constraint: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    margin: Option<f64>,
    message: String,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: ErrorBody<'a>,
}

/// Structured error rendering for exit-status-1 paths.
pub fn render_error(e: &Error) -> String {
    let body = match e {
        Error::Domain(d) => ErrorBody {
            kind: "domain",
            constraint: Some(d.constraint.name()),
            margin: Some(d.margin),
            message: e.to_string(),
        },
        _ => ErrorBody {
            kind: "compute",
            constraint: None,
            margin: None,
            message: e.to_string(),
        },
    };
    serde_json::to_string(&ErrorReport { error: body }).expect("serializable error")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweep::CouplingMode;
    use nbound::bounds::BoundKind;

    #[test]
    fn float_formatting_is_stable() {
        assert_eq!(format_float(0.25), "2.50000000000e-1");
        assert_eq!(format_float(1.0), "1.00000000000e0");
        assert_eq!(format_float(0.0), "0.00000000000e0");
        assert_eq!(format_float(-0.08), "-8.00000000000e-2");
    }

    #[test]
    fn csv_rendering_includes_nulls() {
        let rows = vec![Row {
            n: 5,
            mode: CouplingMode::Raw,
            coupling: 0.5,
            kind: BoundKind::ImprovedLower,
            value: None,
            valid: false,
            margin: -1.5,
            mu_star: None,
            reason: Some("gamma v^2 < 1".into()),
        }];
        let text = render_csv(&rows);
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER);
        assert_eq!(
            lines.next().unwrap(),
            "5,raw,5.00000000000e-1,l,,false,-1.50000000000e0,,gamma v^2 < 1"
        );
    }
}
