//! Coupling-sweep evaluation: grid construction, kind parsing, and
//! row-by-row bound evaluation with the null-with-reason policy for
//! out-of-domain points.

use rayon::prelude::*;

use nbound::bounds::{
    gaussian_upper, improved_lower, simple_lower, BoundKind, Coupling, SystemParams,
};
use nbound::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingMode {
    Raw,
    Rescaled,
}

impl CouplingMode {
    pub fn code(self) -> &'static str {
        match self {
            CouplingMode::Raw => "raw",
            CouplingMode::Rescaled => "rescaled",
        }
    }
}

/// A resolved sweep request.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub n_list: Vec<usize>,
    pub mass: f64,
    pub mode: CouplingMode,
    /// (start, stop, steps) with inclusive endpoints.
    pub grid: (f64, f64, usize),
    pub kinds: Vec<BoundKind>,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec::figure1()
    }
}

impl SweepSpec {
    /// N = 5, m = 1, raw v on [0, 0.63] in steps of 0.01, all three
    /// bounds. 0.63 sits just inside the Gaussian domain edge
    /// v < 2/sqrt(10); the simple and improved bounds null out earlier
    /// with explicit reasons.
    pub fn figure1() -> Self {
        SweepSpec {
            n_list: vec![5],
            mass: 1.0,
            mode: CouplingMode::Raw,
            grid: (0.0, 0.63, 64),
            kinds: vec![
                BoundKind::SimpleLower,
                BoundKind::ImprovedLower,
                BoundKind::GaussianUpper,
            ],
        }
    }

    /// N = 2..6, m = 1, rescaled c on [0, 1.4] in steps of 0.025, all
    /// three bounds. The improved lower bound stays valid through c = 1.4
    /// (< sqrt(2)); the simple one nulls out at c >= 1.
    pub fn figure2() -> Self {
        SweepSpec {
            n_list: vec![2, 3, 4, 5, 6],
            mass: 1.0,
            mode: CouplingMode::Rescaled,
            grid: (0.0, 1.4, 57),
            kinds: vec![
                BoundKind::SimpleLower,
                BoundKind::ImprovedLower,
                BoundKind::GaussianUpper,
            ],
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.n_list.is_empty() {
            return Err("n-list must not be empty".into());
        }
        if let Some(n) = self.n_list.iter().find(|&&n| n < 2) {
            return Err(format!("particle number {n} below 2"));
        }
        if !(self.mass > 0.0) {
            return Err(format!("mass must be positive, got {}", self.mass));
        }
        let (start, stop, steps) = self.grid;
        if !(start >= 0.0) {
            return Err(format!("grid start must be >= 0, got {start}"));
        }
        if !(stop > start) {
            return Err(format!("grid stop {stop} must exceed start {start}"));
        }
        if steps < 2 {
            return Err(format!("grid needs at least 2 steps, got {steps}"));
        }
        if self.kinds.is_empty() {
            return Err("kinds must not be empty".into());
        }
        Ok(())
    }

    fn grid_values(&self) -> Vec<f64> {
        let (start, stop, steps) = self.grid;
        (0..steps)
            .map(|i| start + (stop - start) * i as f64 / (steps - 1) as f64)
            .collect()
    }
}

/// Parses "start:stop:steps".
pub fn parse_grid(text: &str) -> Result<(f64, f64, usize), String> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid must be start:stop:steps, got '{text}'"));
    }
    let start: f64 = parts[0]
        .parse()
        .map_err(|_| format!("bad grid start '{}'", parts[0]))?;
    let stop: f64 = parts[1]
        .parse()
        .map_err(|_| format!("bad grid stop '{}'", parts[1]))?;
    let steps: usize = parts[2]
        .parse()
        .map_err(|_| format!("bad grid steps '{}'", parts[2]))?;
    Ok((start, stop, steps))
}

pub fn parse_kind(code: &str) -> Result<BoundKind, String> {
    match code.trim() {
        "sl" => Ok(BoundKind::SimpleLower),
        "l" => Ok(BoundKind::ImprovedLower),
        "u" => Ok(BoundKind::GaussianUpper),
        other => Err(format!("unknown bound kind '{other}' (expected sl, l, or u)")),
    }
}

/// Parses kind codes into the canonical emission order sl, l, u.
pub fn parse_kinds(codes: &[String]) -> Result<Vec<BoundKind>, String> {
    let mut requested = Vec::new();
    for code in codes {
        for piece in code.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            requested.push(parse_kind(piece)?);
        }
    }
    let canonical = [
        BoundKind::SimpleLower,
        BoundKind::ImprovedLower,
        BoundKind::GaussianUpper,
    ];
    let kinds: Vec<BoundKind> = canonical
        .into_iter()
        .filter(|k| requested.contains(k))
        .collect();
    if kinds.is_empty() {
        return Err("kinds must not be empty".into());
    }
    Ok(kinds)
}

/// One output record. Out-of-domain points keep their row with
/// `value = None` and the violated constraint in `reason`; they are never
/// dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub n: usize,
    pub mode: CouplingMode,
    pub coupling: f64,
    pub kind: BoundKind,
    pub value: Option<f64>,
    pub valid: bool,
    pub margin: f64,
    pub mu_star: Option<f64>,
    pub reason: Option<String>,
}

fn evaluate(n: usize, mass: f64, mode: CouplingMode, coupling: f64, kind: BoundKind) -> Row {
    let null_row = |margin: f64, reason: String| Row {
        n,
        mode,
        coupling,
        kind,
        value: None,
        valid: false,
        margin,
        mu_star: None,
        reason: Some(reason),
    };

    let c = match mode {
        CouplingMode::Raw => Coupling::Raw(coupling),
        CouplingMode::Rescaled => Coupling::Rescaled(coupling),
    };
    let params = match SystemParams::new(n, mass, c) {
        Ok(p) => p,
        Err(Error::Domain(d)) => return null_row(d.margin, d.constraint.name().to_string()),
        Err(e) => return null_row(f64::NAN, e.to_string()),
    };

    let result = match kind {
        BoundKind::SimpleLower => simple_lower(&params).map(|b| (b, None)),
        BoundKind::ImprovedLower => improved_lower(&params).map(|b| (b, None)),
        BoundKind::GaussianUpper => {
            gaussian_upper(&params).map(|g| (g.bound, Some(g.mu_star())))
        }
        _ => unreachable!("sweeps emit only sl, l, u"),
    };
    match result {
        Ok((bound, mu_star)) => Row {
            n,
            mode,
            coupling,
            kind,
            value: Some(bound.value),
            valid: bound.valid,
            margin: bound.constraint_margin,
            mu_star,
            reason: None,
        },
        Err(Error::Domain(d)) => null_row(d.margin, d.constraint.name().to_string()),
        Err(e) => null_row(f64::NAN, e.to_string()),
    }
}

/// Evaluates the sweep. Grid points run concurrently; the output order is
/// the deterministic input order (N outer, coupling next, kind inner).
pub fn run(spec: &SweepSpec) -> Vec<Row> {
    let couplings = spec.grid_values();
    let jobs: Vec<(usize, f64)> = spec
        .n_list
        .iter()
        .flat_map(|&n| couplings.iter().map(move |&c| (n, c)))
        .collect();
    jobs.par_iter()
        .flat_map_iter(|&(n, coupling)| {
            spec.kinds
                .iter()
                .map(move |&kind| evaluate(n, spec.mass, spec.mode, coupling, kind))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("0:0.5:6").unwrap(), (0.0, 0.5, 6));
        assert!(parse_grid("0:0.5").is_err());
        assert!(parse_grid("a:b:c").is_err());
    }

    #[test]
    fn kinds_canonical_order_and_dedup() {
        let kinds = parse_kinds(&["u".into(), "sl".into(), "u".into()]).unwrap();
        assert_eq!(kinds, vec![BoundKind::SimpleLower, BoundKind::GaussianUpper]);
        assert!(parse_kinds(&["x".into()]).is_err());
        assert!(parse_kinds(&[]).is_err());
    }

    #[test]
    fn out_of_domain_rows_carry_reasons() {
        let spec = SweepSpec {
            n_list: vec![5],
            mass: 1.0,
            mode: CouplingMode::Raw,
            grid: (0.0, 0.5, 3),
            kinds: vec![BoundKind::SimpleLower],
        };
        let rows = run(&spec);
        assert_eq!(rows.len(), 3);
        // v = 0: coupling must be positive
        assert!(!rows[0].valid);
        assert_eq!(rows[0].reason.as_deref(), Some("coupling > 0"));
        // v = 0.25: at the (N-1)v = 1 boundary
        assert!(!rows[1].valid || rows[1].value.is_some());
        // v = 0.5: outside
        assert!(!rows[2].valid);
        assert_eq!(rows[2].reason.as_deref(), Some("(N-1)v < 1"));
        assert!(rows[2].margin <= 0.0);
    }

    #[test]
    fn deterministic_and_ordered() {
        let spec = SweepSpec::figure2();
        let a = run(&spec);
        let b = run(&spec);
        assert_eq!(a, b);
        // order: N outer, coupling next, kinds inner
        assert_eq!(a[0].n, 2);
        assert_eq!(a[0].kind, BoundKind::SimpleLower);
        assert_eq!(a[1].kind, BoundKind::ImprovedLower);
        assert_eq!(a[2].kind, BoundKind::GaussianUpper);
        assert_eq!(a.len(), 5 * 57 * 3);
        assert_eq!(a.last().unwrap().n, 6);
    }
}
