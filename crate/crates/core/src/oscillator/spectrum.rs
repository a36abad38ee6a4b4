use std::collections::BTreeMap;

use serde::Serialize;

use super::{build_observables, OscillatorParams};
use crate::repcore::{BasisLabel, FockSpace};
use crate::superlin::matrix_of;
use crate::Result;

/// One energy level as seen by both routes.
#[derive(Debug, Clone, Serialize)]
pub struct EnergyLevel {
    pub n: u32,
    /// `ħω(n + p/2)`.
    pub energy: f64,
    /// Labels at this level whose closed-form energy `(ħω/2)(p + 2mu22 + 2θ)` matches.
    pub multiplicity: usize,
    /// Eigenvalues of the dense interior block assigned to this level.
    pub diagonalized_multiplicity: usize,
    /// Largest distance of an assigned eigenvalue from `energy`.
    pub max_deviation: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub p: u32,
    pub cutoff: u32,
    pub params: OscillatorParams,
    pub levels: Vec<EnergyLevel>,
    /// Largest `|closed form - eigenvalue|` after sorting both lists.
    pub max_deviation: f64,
    /// Largest imbalance of `H` off the diagonal on the interior block.
    pub max_off_diagonal: f64,
}

impl SpectrumReport {
    /// `(eigenvalue, multiplicity)` pairs from the diagonalization.
    pub fn eigenvalues(&self) -> Vec<(f64, usize)> {
        self.levels.iter().map(|l| (l.energy, l.diagonalized_multiplicity)).collect()
    }

    pub fn consistent(&self, tol: f64) -> bool {
        self.max_deviation <= tol && self.levels.iter().all(|l| l.multiplicity == l.diagonalized_multiplicity)
    }
}

/// Closed-form energy of a label.
fn closed_form(params: &OscillatorParams, p: u32, label: &BasisLabel) -> f64 {
    0.5 * params.hbar * params.omega * (p as f64 + 2.0 * label.mu22 as f64 + 2.0 * label.theta() as f64)
}

/// Energies of `H` below the cutoff, by the diagonal closed form and by
/// dense Hermitian diagonalization of the interior block of its matrix.
pub fn spectrum(params: OscillatorParams, space: &FockSpace, cutoff: u32) -> Result<SpectrumReport> {
    let p = space.p();
    let basis = space.basis(cutoff);
    let obs = build_observables(params);
    let h = matrix_of(&obs.hamiltonian, space, &basis)?;
    let interior = basis.interior_indices();
    let block = h.dense_block(&interior);

    let mut max_off_diagonal = 0.0f64;
    for r in 0..block.nrows() {
        for c in 0..block.ncols() {
            if r != c {
                max_off_diagonal = max_off_diagonal.max(block[(r, c)].norm());
            }
        }
    }

    let mut eig: Vec<f64> = block.symmetric_eigen().eigenvalues.iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    let mut closed: Vec<(f64, u32)> = interior
        .iter()
        .map(|&i| (closed_form(&params, p, &basis.label(i)), basis.level(i)))
        .collect();
    closed.sort_by(|a, b| a.0.total_cmp(&b.0));

    let quantum = params.hbar * params.omega;
    let mut levels: BTreeMap<u32, EnergyLevel> = BTreeMap::new();
    for &(e, n) in &closed {
        let energy = quantum * (n as f64 + p as f64 / 2.0);
        let entry = levels.entry(n).or_insert(EnergyLevel {
            n,
            energy,
            multiplicity: 0,
            diagonalized_multiplicity: 0,
            max_deviation: 0.0,
        });
        if (e - energy).abs() <= 1e-12 * energy.abs().max(1.0) {
            entry.multiplicity += 1;
        }
    }
    for &ev in &eig {
        let n = (ev / quantum - p as f64 / 2.0).round();
        if n < 0.0 {
            continue;
        }
        if let Some(level) = levels.get_mut(&(n as u32)) {
            level.diagonalized_multiplicity += 1;
            level.max_deviation = level.max_deviation.max((ev - level.energy).abs());
        }
    }
    let max_deviation = closed.iter().zip(&eig).map(|(c, e)| (c.0 - e).abs()).fold(0.0, f64::max);

    Ok(SpectrumReport { p, cutoff, params, levels: levels.into_values().collect(), max_deviation, max_off_diagonal })
}

/// One row of the `M3` audit.
#[derive(Debug, Clone, Serialize)]
pub struct M3Row {
    pub label: BasisLabel,
    /// Diagonal entry of `½[c1-, c1+]`, read off its matrix.
    pub c1_form: f64,
    /// Diagonal entry of the `{r, p}`-bilinear `M3`.
    pub bilinear: f64,
    /// `p/2 - 2 mu12`, the closed form printed alongside the model.
    pub printed_formula: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct M3Audit {
    pub p: u32,
    pub cutoff: u32,
    pub rows: Vec<M3Row>,
    /// Largest off-diagonal entry of either `M3` matrix.
    pub max_off_diagonal: f64,
    /// Distinct realized eigenvalues of the c1 form, ascending.
    pub eigenvalues: Vec<f64>,
    /// Whether `eigenvalues` is exactly `{-p/2, -p/2+1, ..., p/2}`.
    pub spin_multiplet: bool,
    /// Rows where the printed formula disagrees with the realized value.
    pub printed_mismatches: usize,
}

pub fn m3_eigenvalue_table(space: &FockSpace, cutoff: u32) -> Result<M3Audit> {
    let p = space.p();
    let basis = space.basis(cutoff);
    let obs = build_observables(OscillatorParams::default());
    let c1 = matrix_of(&obs.angular_c1_form[2], space, &basis)?;
    let bil = matrix_of(&obs.angular[2], space, &basis)?;

    let mut max_off_diagonal = 0.0f64;
    for m in [&c1, &bil] {
        for (r, c, v) in m.entries() {
            if r != c {
                max_off_diagonal = max_off_diagonal.max(v.norm());
            }
        }
    }

    let rows: Vec<M3Row> = basis
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| M3Row {
            label: *l,
            c1_form: c1.get(i, i).re,
            bilinear: bil.get(i, i).re,
            printed_formula: p as f64 / 2.0 - 2.0 * l.mu12 as f64,
        })
        .collect();

    let mut eigenvalues: Vec<f64> = Vec::new();
    for r in &rows {
        // eigenvalues are half-integers; snap to the grid before deduplication
        let v = (r.c1_form * 2.0).round() / 2.0;
        if !eigenvalues.contains(&v) {
            eigenvalues.push(v);
        }
    }
    eigenvalues.sort_by(f64::total_cmp);
    let expected: Vec<f64> = (0..=p).map(|k| -(p as f64) / 2.0 + k as f64).collect();
    let spin_multiplet = eigenvalues == expected
        && rows.iter().all(|r| (r.c1_form - (r.c1_form * 2.0).round() / 2.0).abs() < 1e-12);
    let printed_mismatches = rows.iter().filter(|r| (r.c1_form - r.printed_formula).abs() > 1e-9).count();

    Ok(M3Audit { p, cutoff, rows, max_off_diagonal, eigenvalues, spin_multiplet, printed_mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p1_is_canonical_ladder() {
        let space = FockSpace::new(1).unwrap();
        let s = spectrum(OscillatorParams::default(), &space, 6).unwrap();
        assert!(s.consistent(1e-10));
        for (n, level) in s.levels.iter().enumerate() {
            assert_eq!(level.n as usize, n);
            assert!((level.energy - (n as f64 + 0.5)).abs() < 1e-12);
        }
    }

    #[test]
    fn multiplicities() {
        for p in 1..=4u32 {
            let space = FockSpace::new(p).unwrap();
            let s = spectrum(OscillatorParams::default(), &space, 5).unwrap();
            assert_eq!(s.levels.len(), 5);
            assert_eq!(s.levels[0].multiplicity, p as usize + 1);
            for l in &s.levels[1..] {
                assert_eq!(l.multiplicity, 2 * p as usize);
            }
            assert!(s.consistent(1e-10));
        }
        let s = spectrum(OscillatorParams::default(), &FockSpace::new(4).unwrap(), 3).unwrap();
        assert_eq!(s.levels[0].energy, 2.0);
        assert_eq!(s.levels[0].multiplicity, 5);
    }

    #[test]
    fn closed_form_example() {
        let e = closed_form(&OscillatorParams::default(), 3, &BasisLabel::new(2, 1, 1));
        assert_eq!(e, 3.5);
    }

    #[test]
    fn m3_table_p2() {
        let audit = m3_eigenvalue_table(&FockSpace::new(2).unwrap(), 3).unwrap();
        assert_eq!(audit.eigenvalues, vec![-1.0, 0.0, 1.0]);
        assert!(audit.spin_multiplet);
        assert!(audit.max_off_diagonal < 1e-12);
        assert!((audit.rows[0].c1_form - 1.0).abs() < 1e-12);
        assert!((audit.rows[0].bilinear + 1.0).abs() < 1e-12);
        assert!(audit.printed_mismatches > 0);
    }
}
