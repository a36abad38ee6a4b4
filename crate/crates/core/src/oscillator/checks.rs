use num_complex::Complex64 as C64;
use serde::Serialize;

use super::{levi_civita, Ladder, ObservableSet};
use crate::repcore::{BasisLabel, FockBasis, FockSpace, Pair, Sign, StateVector};
use crate::superlin::{interior_adjoint_residual, matrix_of, GradedOperator};
use crate::Result;

fn probe_residual(op: &GradedOperator, space: &FockSpace, probe: &[BasisLabel]) -> Result<f64> {
    let mut worst = 0.0f64;
    for l in probe {
        worst = worst.max(op.apply(space, &StateVector::basis(*l))?.max_abs());
    }
    Ok(worst)
}

/// Max interior entry of the exact matrix of `op`.
pub fn interior_norm(op: &GradedOperator, space: &FockSpace, basis: &FockBasis) -> Result<f64> {
    Ok(matrix_of(op, space, basis)?.max_abs_where(|i| basis.is_interior(i)))
}

/// Interior residual of `op - op^†`.
pub fn hermiticity_residual(op: &GradedOperator, space: &FockSpace, basis: &FockBasis) -> Result<f64> {
    let m = matrix_of(op, space, basis)?;
    interior_adjoint_residual(&m, &m, basis)
}

/// `Σ_i [{a_i^+, a_i^-}, a_k^±] ∓ 2 a_k^±` on every probe label (`k` 0-based).
pub fn compatibility_residual(
    space: &FockSpace,
    ladder: &Ladder,
    k: usize,
    sign: Sign,
    probe: &[BasisLabel],
) -> Result<f64> {
    let target = ladder.get(k, sign);
    let mut terms: Vec<GradedOperator> = (0..3)
        .map(|i| {
            let n = GradedOperator::anticommutator(&ladder.plus[i], &ladder.minus[i]);
            GradedOperator::commutator(&n, target)
        })
        .collect();
    terms.push(target.scale_re(-2.0 * sign.value() as f64));
    probe_residual(&GradedOperator::sum(&terms)?, space, probe)
}

/// `Σ_k {a_k^+, a_k^-} - {c2^+, c2^-}` on every probe label.
pub fn number_sum_residual(space: &FockSpace, ladder: &Ladder, probe: &[BasisLabel]) -> Result<f64> {
    let mut terms: Vec<GradedOperator> =
        (0..3).map(|k| GradedOperator::anticommutator(&ladder.plus[k], &ladder.minus[k])).collect();
    let c2 = GradedOperator::anticommutator(
        &GradedOperator::ladder(Pair::Paraboson, Sign::Plus),
        &GradedOperator::ladder(Pair::Paraboson, Sign::Minus),
    );
    terms.push(c2.scale_re(-1.0));
    probe_residual(&GradedOperator::sum(&terms)?, space, probe)
}

/// Hamilton versus Heisenberg on the interior block:
/// `max_k |(i/ħ)[H, r_k] - p_k/m|` and `max_k |(i/ħ)[H, p_k] + m ω² r_k|`.
pub fn heisenberg_residuals(obs: &ObservableSet, space: &FockSpace, basis: &FockBasis) -> Result<(f64, f64)> {
    let prm = obs.params;
    let ih = C64::new(0.0, 1.0 / prm.hbar);
    let (mut pos, mut mom) = (0.0f64, 0.0f64);
    for k in 0..3 {
        let rdot = GradedOperator::commutator(&obs.hamiltonian, &obs.position[k]).scale(ih);
        pos = pos.max(interior_norm(&rdot.sub(&obs.momentum[k].scale_re(1.0 / prm.mass))?, space, basis)?);
        let pdot = GradedOperator::commutator(&obs.hamiltonian, &obs.momentum[k]).scale(ih);
        let force = obs.position[k].scale_re(prm.mass * prm.omega * prm.omega);
        mom = mom.max(interior_norm(&pdot.add(&force)?, space, basis)?);
    }
    Ok((pos, mom))
}

/// `max_k |[H, M_k]|` on the interior block.
pub fn energy_conservation_residual(obs: &ObservableSet, space: &FockSpace, basis: &FockBasis) -> Result<f64> {
    let mut worst = 0.0f64;
    for m in &obs.angular {
        worst = worst.max(interior_norm(&GradedOperator::commutator(&obs.hamiltonian, m), space, basis)?);
    }
    Ok(worst)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VectorKind {
    Angular,
    Position,
    Momentum,
}

impl VectorKind {
    pub const ALL: [VectorKind; 3] = [VectorKind::Angular, VectorKind::Position, VectorKind::Momentum];

    pub fn symbol(self) -> &'static str {
        match self {
            VectorKind::Angular => "M",
            VectorKind::Position => "r",
            VectorKind::Momentum => "p",
        }
    }

    fn components(self, obs: &ObservableSet) -> &[GradedOperator; 3] {
        match self {
            VectorKind::Angular => &obs.angular,
            VectorKind::Position => &obs.position,
            VectorKind::Momentum => &obs.momentum,
        }
    }
}

fn so3_defect(m: &[GradedOperator; 3], x: &[GradedOperator; 3], j: usize, k: usize) -> Result<GradedOperator> {
    let mut terms = vec![GradedOperator::commutator(&m[j], &x[k])];
    for l in 0..3 {
        let e = levi_civita(j, k, l);
        if e != 0.0 {
            terms.push(x[l].scale(C64::new(0.0, -e)));
        }
    }
    GradedOperator::sum(&terms)
}

/// `max_{j,k} |[M_j, X_k] - i Σ_l ε_jkl X_l|` on the interior block.
pub fn vector_transform_residual(
    obs: &ObservableSet,
    kind: VectorKind,
    space: &FockSpace,
    basis: &FockBasis,
) -> Result<f64> {
    let x = kind.components(obs);
    let mut worst = 0.0f64;
    for j in 0..3 {
        for k in 0..3 {
            worst = worst.max(interior_norm(&so3_defect(&obs.angular, x, j, k)?, space, basis)?);
        }
    }
    Ok(worst)
}

/// The same so(3) test for the c1-linear angular momentum.
pub fn c1_form_so3_residual(obs: &ObservableSet, space: &FockSpace, basis: &FockBasis) -> Result<f64> {
    let m = &obs.angular_c1_form;
    let mut worst = 0.0f64;
    for j in 0..3 {
        for k in 0..3 {
            worst = worst.max(interior_norm(&so3_defect(m, m, j, k)?, space, basis)?);
        }
    }
    Ok(worst)
}

/// Interior norm of `M_k(bilinear) - M_k(c1 form)` for each `k`.
pub fn angular_form_difference(obs: &ObservableSet, space: &FockSpace, basis: &FockBasis) -> Result<[f64; 3]> {
    let mut out = [0.0; 3];
    for k in 0..3 {
        out[k] = interior_norm(&obs.angular[k].sub(&obs.angular_c1_form[k])?, space, basis)?;
    }
    Ok(out)
}

/// Interior norms for one pair `i < j` (1-based in the report).
#[derive(Debug, Clone, Serialize)]
pub struct PairNorms {
    pub i: usize,
    pub j: usize,
    pub anticommutator_r: f64,
    pub anticommutator_p: f64,
    pub commutator_r: f64,
    pub commutator_p: f64,
    pub commutator_m: f64,
    /// `|[M_i, M_j] - i ε_ijk M_k|`.
    pub so3_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct NoncommutativityReport {
    pub pairs: Vec<PairNorms>,
    pub max_anticommutator: f64,
    pub min_commutator_r: f64,
    pub min_commutator_p: f64,
    pub min_commutator_m: f64,
    pub max_so3_residual: f64,
}

pub fn noncommutativity_report(
    obs: &ObservableSet,
    space: &FockSpace,
    basis: &FockBasis,
) -> Result<NoncommutativityReport> {
    let norm = |op: GradedOperator| interior_norm(&op, space, basis);
    let mut pairs = Vec::new();
    for i in 0..3 {
        for j in (i + 1)..3 {
            let (r, p, m) = (&obs.position, &obs.momentum, &obs.angular);
            pairs.push(PairNorms {
                i: i + 1,
                j: j + 1,
                anticommutator_r: norm(GradedOperator::anticommutator(&r[i], &r[j]))?,
                anticommutator_p: norm(GradedOperator::anticommutator(&p[i], &p[j]))?,
                commutator_r: norm(GradedOperator::commutator(&r[i], &r[j]))?,
                commutator_p: norm(GradedOperator::commutator(&p[i], &p[j]))?,
                commutator_m: norm(GradedOperator::commutator(&m[i], &m[j]))?,
                so3_residual: norm(so3_defect(m, m, i, j)?)?,
            });
        }
    }
    let max = |f: fn(&PairNorms) -> f64| pairs.iter().map(f).fold(0.0, f64::max);
    let min = |f: fn(&PairNorms) -> f64| pairs.iter().map(f).fold(f64::INFINITY, f64::min);
    Ok(NoncommutativityReport {
        max_anticommutator: max(|p| p.anticommutator_r.max(p.anticommutator_p)),
        min_commutator_r: min(|p| p.commutator_r),
        min_commutator_p: min(|p| p.commutator_p),
        min_commutator_m: min(|p| p.commutator_m),
        max_so3_residual: max(|p| p.so3_residual),
        pairs,
    })
}
