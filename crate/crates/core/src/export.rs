//! Serialization of bases, operator matrices, spectra and reports.
//!
//! Matrix exports print floats with 17 significant digits; reports use the
//! shortest representation that round-trips.

use std::fmt::Write as _;

use serde::Serialize;

use crate::oscillator::{build_observables, ObservableSet, OscillatorParams, SpectrumReport};
use crate::repcore::{FockBasis, Symbol};
use crate::superlin::{GradedOperator, SparseComplexMatrix};
use crate::verify::{Bound, VerificationReport};
use crate::{Error, Result};

pub const MATRIX_SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Plain,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "plain" => Ok(OutputFormat::Plain),
            _ => Err(Error::Config(format!("unknown format `{s}`"))),
        }
    }
}

/// Names accepted by [`named_operator`].
pub const OPERATOR_NAMES: [&str; 17] = [
    "c1+", "c1-", "c2+", "c2-", "h1", "h2", "H", "M1", "M2", "M3", "r1", "r2", "r3", "p1", "p2", "p3", "M3c1",
];

/// Resolves an exportable operator by name. `M1..M3` are the `{r, p}`
/// bilinear components, `M3c1` is `½[c1-, c1+]`.
pub fn named_operator(name: &str, params: OscillatorParams) -> Result<GradedOperator> {
    if let Ok(sym) = name.parse::<Symbol>() {
        return Ok(GradedOperator::symbol(sym));
    }
    let obs: ObservableSet = build_observables(params);
    let component = |prefix: char| -> Option<usize> {
        let rest = name.strip_prefix(prefix)?;
        match rest {
            "1" => Some(0),
            "2" => Some(1),
            "3" => Some(2),
            _ => None,
        }
    };
    let op = if name == "H" {
        obs.hamiltonian
    } else if name == "M3c1" {
        obs.angular_c1_form[2].clone()
    } else if let Some(k) = component('M') {
        obs.angular[k].clone()
    } else if let Some(k) = component('r') {
        obs.position[k].clone()
    } else if let Some(k) = component('p') {
        obs.momentum[k].clone()
    } else {
        return Err(Error::UnknownSymbol(name.to_string()));
    };
    Ok(op)
}

/// 17 significant digits, valid as a JSON number.
pub fn fmt17(x: f64) -> String {
    if x == 0.0 {
        // drop the sign of negative zero
        return format!("{:.16e}", 0.0);
    }
    format!("{x:.16e}")
}

/// `{ "schema", "p", "cutoff", "basis", "entries", "boundary_rows" }`.
pub fn matrix_json(matrix: &SparseComplexMatrix, basis: &FockBasis) -> String {
    let mut s = String::new();
    let _ = write!(s, "{{\"schema\": {MATRIX_SCHEMA}, \"p\": {}, \"cutoff\": {}, \"basis\": [", basis.p(), basis.cutoff());
    for (i, l) in basis.labels().iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "[{}, {}, {}]", l.mu12, l.mu22, l.mu11);
    }
    s.push_str("], \"entries\": [");
    for (i, (r, c, v)) in matrix.entries().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "[{r}, {c}, {}, {}]", fmt17(v.re), fmt17(v.im));
    }
    s.push_str("], \"boundary_rows\": [");
    let rows: Vec<String> = matrix.boundary_rows().iter().map(|r| r.to_string()).collect();
    s.push_str(&rows.join(", "));
    s.push_str("]}\n");
    s
}

#[derive(Serialize)]
struct BasisRow {
    mu12: u32,
    mu22: u32,
    mu11: u32,
    theta: i64,
    n: i64,
    energy: f64,
}

fn basis_rows(basis: &FockBasis, params: &OscillatorParams) -> Vec<BasisRow> {
    let quantum = params.hbar * params.omega;
    basis
        .labels()
        .iter()
        .map(|l| BasisRow {
            mu12: l.mu12,
            mu22: l.mu22,
            mu11: l.mu11,
            theta: l.theta(),
            n: l.level(),
            energy: quantum * (l.level() as f64 + basis.p() as f64 / 2.0),
        })
        .collect()
}

/// Basis listing with `(mu12, mu22, mu11, theta, n, E_n)` per row.
pub fn basis_listing(basis: &FockBasis, params: &OscillatorParams, format: OutputFormat) -> String {
    let rows = basis_rows(basis, params);
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("plain data serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("mu12,mu22,mu11,theta,n,energy\n");
            for r in rows {
                let _ = writeln!(s, "{},{},{},{},{},{}", r.mu12, r.mu22, r.mu11, r.theta, r.n, r.energy);
            }
            s
        }
        OutputFormat::Plain => {
            let mut s = format!("{:>5} {:>5} {:>5} {:>5} {:>4} {:>10}\n", "mu12", "mu22", "mu11", "theta", "n", "E_n");
            for r in rows {
                let _ = writeln!(s, "{:>5} {:>5} {:>5} {:>5} {:>4} {:>10}", r.mu12, r.mu22, r.mu11, r.theta, r.n, r.energy);
            }
            s
        }
    }
}

/// Spectrum table; CSV header is `n,energy,multiplicity`.
pub fn spectrum_table(report: &SpectrumReport, format: OutputFormat, tol: f64) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("plain data serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,energy,multiplicity\n");
            for l in &report.levels {
                let _ = writeln!(s, "{},{},{}", l.n, l.energy, l.diagonalized_multiplicity);
            }
            s
        }
        OutputFormat::Plain => {
            let q = report.params.hbar * report.params.omega;
            let mut s = format!("{:>4} {:>14} {:>6}  check E_n = hbar*omega*(n + p/2)\n", "n", "E_n", "mult");
            for l in &report.levels {
                let expected = q * (l.n as f64 + report.p as f64 / 2.0);
                let ok = (l.energy - expected).abs() <= tol * expected.max(1.0) && l.max_deviation <= tol;
                let _ = writeln!(
                    s,
                    "{:>4} {:>14} {:>6}  {}",
                    l.n,
                    l.energy,
                    l.diagonalized_multiplicity,
                    if ok { "ok" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(s, "max |closed form - diagonalization| = {:e}", report.max_deviation);
            s
        }
    }
}

/// Report in the requested format.
pub fn render_report(report: &VerificationReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("plain data serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("kind,id,realization,probe_size,value,bound,threshold,pass\n");
            for c in &report.checks {
                let bound = if c.bound == Bound::Max { "max" } else { "min" };
                let _ = writeln!(
                    s,
                    "check,\"{}\",{},{},{},{},{},{}",
                    c.id.replace('"', "\"\""),
                    c.realization.replace(',', ";"),
                    c.probe_size,
                    c.residual,
                    bound,
                    c.threshold,
                    c.pass
                );
            }
            for a in &report.audits {
                let _ = writeln!(
                    s,
                    "audit,\"{}\",{},,{},,,",
                    a.id.replace('"', "\"\""),
                    a.realization.replace(',', ";"),
                    a.value
                );
            }
            s
        }
        OutputFormat::Plain => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "suite {} (p={}, cutoff={}, tol={})",
                report.suite, report.config.p, report.config.cutoff, report.config.tolerance
            );
            for c in &report.checks {
                let op = if c.bound == Bound::Max { "<=" } else { ">=" };
                let _ = writeln!(
                    s,
                    "{} {:<55} {:<28} {:e} {op} {:e}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.id,
                    c.realization,
                    c.residual,
                    c.threshold
                );
            }
            for a in &report.audits {
                let _ = writeln!(s, "NOTE {:<55} {:<28} {:e}  {}", a.id, a.realization, a.value, a.note);
            }
            if let Some(m3) = &report.m3_table {
                let _ = writeln!(s, "M3 per label (c1 form | bilinear | printed p/2-2mu12):");
                for r in &m3.rows {
                    let _ = writeln!(s, "  {}  {} | {} | {}", r.label, r.c1_form, r.bilinear, r.printed_formula);
                }
            }
            let _ = writeln!(
                s,
                "{}: {} checks, max residual {:e}",
                if report.overall_pass { "PASS" } else { "FAIL" },
                report.checks.len(),
                report.max_residual
            );
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::FockSpace;
    use crate::superlin::matrix_of;

    #[test]
    fn fmt17_is_json_and_exact() {
        for x in [0.0, -0.0, 1.0, -0.5, std::f64::consts::SQRT_2, 1e-300, 12345.678] {
            let s = fmt17(x);
            assert!(serde_json::from_str::<f64>(&s).is_ok());
            assert_eq!(s.parse::<f64>().unwrap(), x);
            let digits: String = s.split('e').next().unwrap().chars().filter(|c| c.is_ascii_digit()).collect();
            assert_eq!(digits.len(), 17, "{s}");
        }
    }

    #[test]
    fn h1_export() {
        let space = FockSpace::new(2).unwrap();
        let basis = space.basis(1);
        let m = matrix_of(&named_operator("h1", OscillatorParams::default()).unwrap(), &space, &basis).unwrap();
        let json: serde_json::Value = serde_json::from_str(&matrix_json(&m, &basis)).unwrap();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["p"], 2);
        assert_eq!(json["cutoff"], 1);
        assert_eq!(json["basis"].as_array().unwrap().len(), basis.len());
        for e in json["entries"].as_array().unwrap() {
            let (r, c) = (e[0].as_u64().unwrap(), e[1].as_u64().unwrap());
            assert_eq!(r, c);
            let mu11 = json["basis"][r as usize][2].as_f64().unwrap();
            assert_eq!(e[2].as_f64().unwrap(), -1.0 + mu11);
        }
        assert!(json["boundary_rows"].as_array().unwrap().is_empty());
    }

    #[test]
    fn operator_names_resolve() {
        for n in OPERATOR_NAMES {
            assert!(named_operator(n, OscillatorParams::default()).is_ok(), "{n}");
        }
        assert!(named_operator("M4", OscillatorParams::default()).is_err());
        assert!(named_operator("x", OscillatorParams::default()).is_err());
    }

    #[test]
    fn spectrum_csv_header() {
        let space = FockSpace::new(1).unwrap();
        let rep = crate::oscillator::spectrum(OscillatorParams::default(), &space, 3).unwrap();
        let csv = spectrum_table(&rep, OutputFormat::Csv, 1e-10);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("n,energy,multiplicity"));
        assert_eq!(lines.next(), Some("0,0.5,2"));
    }
}
