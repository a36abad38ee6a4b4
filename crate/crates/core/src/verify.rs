//! Named verification suites and their machine-readable reports.

use serde::Serialize;

use crate::oscillator::{
    angular_form_difference, build_observables, c1_form_so3_residual, compatibility_residual,
    energy_conservation_residual, heisenberg_residuals, hermiticity_residual, m3_eigenvalue_table,
    noncommutativity_report, number_sum_residual, p1_oracle_equivalence, spectrum, vector_transform_residual,
    M3Audit, OscillatorParams, VectorKind,
};
use crate::repcore::{BasisLabel, CoefficientScheme, FockSpace, Pair, Sign, StateVector, Symbol};
use crate::superlin::{
    interior_adjoint_residual, matrix_of, triple_relation_residual, DefiningRealization,
    GradedOperator, Realization, TripleInstance,
};
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Bound for identities that hold exactly up to rounding of `√2` products.
pub const EXACT_TOL: f64 = 1e-12;

/// Matrix-element agreement required between `V(1)` and the fermion ⊗ boson model.
pub const ORACLE_TOL: f64 = 1e-9;

/// Lower bound witnessing that two observables fail to commute.
pub const NONZERO_FLOOR: f64 = 1e-3;

/// Everything a verification run depends on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RunConfig {
    pub p: u32,
    pub cutoff: u32,
    pub tolerance: f64,
    pub params: OscillatorParams,
    pub scheme: CoefficientScheme,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            p: 1,
            cutoff: 8,
            tolerance: 1e-10,
            params: OscillatorParams::default(),
            scheme: CoefficientScheme::Corrected,
        }
    }
}

impl RunConfig {
    /// Checks shared by every command.
    pub fn validate(&self) -> Result<()> {
        if self.p == 0 {
            return Err(Error::ZeroOrder);
        }
        if !(self.tolerance > 0.0 && self.tolerance < 1.0) {
            return Err(Error::Config(format!("tolerance must lie in (0, 1), got {}", self.tolerance)));
        }
        OscillatorParams::new(self.params.mass, self.params.omega, self.params.hbar)?;
        Ok(())
    }

    /// Verification needs at least three levels of headroom below the cutoff.
    pub fn validate_for_verification(&self) -> Result<()> {
        self.validate()?;
        if self.cutoff < 3 {
            return Err(Error::Config(format!("verification needs cutoff >= 3, got {}", self.cutoff)));
        }
        Ok(())
    }

    pub fn space(&self) -> Result<FockSpace> {
        FockSpace::with_scheme(self.p, self.scheme)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    /// Passes when the value is at most the threshold.
    Max,
    /// Passes when the value is at least the threshold.
    Min,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub realization: String,
    pub probe_size: usize,
    pub residual: f64,
    pub bound: Bound,
    pub threshold: f64,
    pub pass: bool,
}

/// Measured quantity that documents behavior without gating the run.
#[derive(Debug, Clone, Serialize)]
pub struct AuditRecord {
    pub id: String,
    pub realization: String,
    pub value: f64,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub config: RunConfig,
    pub checks: Vec<CheckRecord>,
    pub audits: Vec<AuditRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m3_table: Option<M3Audit>,
    pub max_residual: f64,
    pub overall_pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Defining,
    Triple,
    Adjoint,
    Wqs,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Defining => "defining",
            Suite::Triple => "triple",
            Suite::Adjoint => "adjoint",
            Suite::Wqs => "wqs",
            Suite::All => "all",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "defining" => Ok(Suite::Defining),
            "triple" => Ok(Suite::Triple),
            "adjoint" => Ok(Suite::Adjoint),
            "wqs" => Ok(Suite::Wqs),
            "all" => Ok(Suite::All),
            _ => Err(Error::Config(format!("unknown suite `{s}`"))),
        }
    }
}

struct Recorder {
    checks: Vec<CheckRecord>,
    audits: Vec<AuditRecord>,
    m3_table: Option<M3Audit>,
}

impl Recorder {
    fn new() -> Self {
        Self { checks: Vec::new(), audits: Vec::new(), m3_table: None }
    }

    fn max(&mut self, id: impl Into<String>, realization: &str, probe: usize, residual: f64, threshold: f64) {
        self.checks.push(CheckRecord {
            id: id.into(),
            realization: realization.to_string(),
            probe_size: probe,
            residual,
            bound: Bound::Max,
            threshold,
            pass: residual <= threshold,
        });
    }

    fn min(&mut self, id: impl Into<String>, realization: &str, probe: usize, value: f64, threshold: f64) {
        self.checks.push(CheckRecord {
            id: id.into(),
            realization: realization.to_string(),
            probe_size: probe,
            residual: value,
            bound: Bound::Min,
            threshold,
            pass: value >= threshold,
        });
    }

    fn audit(&mut self, id: impl Into<String>, realization: &str, value: f64, note: impl Into<String>) {
        self.audits.push(AuditRecord {
            id: id.into(),
            realization: realization.to_string(),
            value,
            note: note.into(),
        });
    }

    fn finish(self, suite: Suite, config: RunConfig) -> VerificationReport {
        let overall_pass = self.checks.iter().all(|c| c.pass);
        let max_residual =
            self.checks.iter().filter(|c| c.bound == Bound::Max).map(|c| c.residual).fold(0.0, f64::max);
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.name().to_string(),
            config,
            checks: self.checks,
            audits: self.audits,
            m3_table: self.m3_table,
            max_residual,
            overall_pass,
        }
    }
}

fn fock_tag(space: &FockSpace, cutoff: u32) -> String {
    let scheme = match space.scheme() {
        CoefficientScheme::Corrected => "corrected",
        CoefficientScheme::AsPrinted => "as-printed",
    };
    format!("fock(p={},N={},{scheme})", space.p(), cutoff)
}

/// Runs a suite and collects its report.
pub fn run_suite(suite: Suite, config: &RunConfig) -> Result<VerificationReport> {
    config.validate_for_verification()?;
    let mut rec = Recorder::new();
    match suite {
        Suite::Defining => defining_checks(&mut rec)?,
        Suite::Triple => triple_checks(&mut rec, config)?,
        Suite::Adjoint => adjoint_checks(&mut rec, config)?,
        Suite::Wqs => wqs_checks(&mut rec, config)?,
        Suite::All => {
            defining_checks(&mut rec)?;
            triple_checks(&mut rec, config)?;
            adjoint_checks(&mut rec, config)?;
            wqs_checks(&mut rec, config)?;
        }
    }
    Ok(rec.finish(suite, *config))
}

fn max_abs5(m: &crate::superlin::Matrix5c) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// The 64 triple relations, both Cartan brackets and the block pattern.
fn defining_checks(rec: &mut Recorder) -> Result<()> {
    let rep = DefiningRealization::new();
    let tag = "defining(5x5)";
    for inst in TripleInstance::all() {
        let r = triple_relation_residual(&inst, &Realization::Defining(&rep))?;
        rec.max(format!("triple {inst}"), tag, 25, r, EXACT_TOL);
    }
    let c = |pair, sign| GradedOperator::ladder(pair, sign);
    let b1 = GradedOperator::super_bracket(&c(Pair::Parafermion, Sign::Minus), &c(Pair::Parafermion, Sign::Plus));
    let b1 = b1.add(&GradedOperator::cartan(Pair::Parafermion).scale_re(2.0))?;
    rec.max("cartan [c1-,c1+] = -2 h1", tag, 25, max_abs5(&b1.defining_matrix(&rep)?), EXACT_TOL);
    let b2 = GradedOperator::super_bracket(&c(Pair::Paraboson, Sign::Minus), &c(Pair::Paraboson, Sign::Plus));
    let b2 = b2.sub(&GradedOperator::cartan(Pair::Paraboson).scale_re(2.0))?;
    rec.max("cartan {c2-,c2+} = 2 h2", tag, 25, max_abs5(&b2.defining_matrix(&rep)?), EXACT_TOL);
    rec.max("even/odd block structure", tag, 6, rep.block_structure_residual(), 0.0);
    Ok(())
}

fn probe_max(op: &GradedOperator, space: &FockSpace, probe: &[BasisLabel]) -> Result<f64> {
    let mut worst = 0.0f64;
    for l in probe {
        worst = worst.max(op.apply(space, &StateVector::basis(*l))?.max_abs());
    }
    Ok(worst)
}

/// Fock-space defining conditions on the vacuum, the Cartan brackets on
/// every probe label, and all 64 triple relations vector-wise.
fn triple_checks(rec: &mut Recorder, config: &RunConfig) -> Result<()> {
    let space = config.space()?;
    let basis = space.basis(config.cutoff);
    let probe = basis.labels();
    let tag = fock_tag(&space, config.cutoff);
    let tol = config.tolerance;
    let exact = tol.min(EXACT_TOL);
    let vac = StateVector::vacuum();
    let p = space.p() as f64;

    for j in Pair::ALL {
        let r = space.apply_generator(j, Sign::Minus, &vac)?.max_abs();
        rec.max(format!("vacuum c{}-|0> = 0", j.index()), &tag, 1, r, exact);
    }
    for j in Pair::ALL {
        for k in Pair::ALL {
            let br = GradedOperator::super_bracket(&GradedOperator::ladder(j, Sign::Minus), &GradedOperator::ladder(k, Sign::Plus));
            let mut v = br.apply(&space, &vac)?;
            if j == k {
                v.axpy(num_complex::Complex64::new(-p, 0.0), &vac);
            }
            rec.max(
                format!("vacuum [[c{}-,c{}+]]|0> = p d_jk |0>", j.index(), k.index()),
                &tag,
                1,
                v.max_abs(),
                exact,
            );
        }
    }

    let c = |pair, sign| GradedOperator::ladder(pair, sign);
    let b1 = GradedOperator::super_bracket(&c(Pair::Parafermion, Sign::Minus), &c(Pair::Parafermion, Sign::Plus))
        .add(&GradedOperator::cartan(Pair::Parafermion).scale_re(2.0))?;
    rec.max("cartan [c1-,c1+] = -2 h1", &tag, probe.len(), probe_max(&b1, &space, probe)?, tol);
    let b2 = GradedOperator::super_bracket(&c(Pair::Paraboson, Sign::Minus), &c(Pair::Paraboson, Sign::Plus))
        .sub(&GradedOperator::cartan(Pair::Paraboson).scale_re(2.0))?;
    rec.max("cartan {c2-,c2+} = 2 h2", &tag, probe.len(), probe_max(&b2, &space, probe)?, tol);

    for inst in TripleInstance::all() {
        let r = triple_relation_residual(&inst, &Realization::Fock { space: &space, probe })?;
        rec.max(format!("triple {inst}"), &tag, probe.len(), r, tol);
    }

    if space.scheme() == CoefficientScheme::Corrected {
        let printed = FockSpace::with_scheme(space.p(), CoefficientScheme::AsPrinted)?;
        let ptag = fock_tag(&printed, config.cutoff);
        let mut failing = 0;
        for inst in TripleInstance::all() {
            let r = triple_relation_residual(&inst, &Realization::Fock { space: &printed, probe })?;
            if r > tol {
                failing += 1;
            }
            rec.audit(format!("triple {inst}"), &ptag, r, "literal c1 coefficients");
        }
        let r = probe_max(&b1, &printed, probe)?;
        rec.audit("cartan [c1-,c1+] = -2 h1", &ptag, r, "literal c1 coefficients");
        rec.audit(
            "triple instances failing",
            &ptag,
            failing as f64,
            "count of the 64 instances above tolerance with literal c1 coefficients",
        );
    }
    Ok(())
}

/// `(c_j^-)† = c_j^+` on the interior block, and `h_k` self-adjoint.
fn adjoint_checks(rec: &mut Recorder, config: &RunConfig) -> Result<()> {
    let space = config.space()?;
    let basis = space.basis(config.cutoff);
    let tag = fock_tag(&space, config.cutoff);
    let interior = basis.interior_indices().len();
    for pair in Pair::ALL {
        let lower = matrix_of(&GradedOperator::ladder(pair, Sign::Minus), &space, &basis)?;
        let raise = matrix_of(&GradedOperator::ladder(pair, Sign::Plus), &space, &basis)?;
        let r = interior_adjoint_residual(&lower, &raise, &basis)?;
        rec.max(format!("adjoint c{}- = (c{}+)^dagger", pair.index(), pair.index()), &tag, interior, r, config.tolerance);
    }
    for pair in Pair::ALL {
        let r = hermiticity_residual(&GradedOperator::symbol(Symbol::Cartan(pair)), &space, &basis)?;
        rec.max(format!("adjoint h{} self-adjoint", pair.index()), &tag, interior, r, config.tolerance);
    }
    Ok(())
}

/// Wigner conditions, spectrum, (non)commutativity and the M3 audit.
fn wqs_checks(rec: &mut Recorder, config: &RunConfig) -> Result<()> {
    let space = config.space()?;
    let basis = space.basis(config.cutoff);
    let probe = basis.labels();
    let tag = fock_tag(&space, config.cutoff);
    let interior = basis.interior_indices().len();
    let tol = config.tolerance;
    let obs = build_observables(config.params);

    for k in 0..3 {
        for sign in Sign::ALL {
            let r = compatibility_residual(&space, &obs.ladder, k, sign, probe)?;
            let g = if sign == Sign::Plus { '+' } else { '-' };
            rec.max(format!("compatibility sum_i [{{a_i+,a_i-}},a_{}{g}] = {g}2 a_{}{g}", k + 1, k + 1), &tag, probe.len(), r, tol);
        }
    }
    let r = number_sum_residual(&space, &obs.ladder, probe)?;
    rec.max("sum_k {a_k+,a_k-} = {c2+,c2-}", &tag, probe.len(), r, tol);

    let hermitian = obs.position.iter().chain(&obs.momentum).chain(&obs.angular).chain([&obs.hamiltonian]);
    for op in hermitian {
        let r = hermiticity_residual(op, &space, &basis)?;
        rec.max(format!("hermitian {}", op.name()), &tag, interior, r, tol);
    }

    let (pos, mom) = heisenberg_residuals(&obs, &space, &basis)?;
    rec.max("heisenberg (i/hbar)[H,r_k] = p_k/m", &tag, interior, pos, tol);
    rec.max("heisenberg (i/hbar)[H,p_k] = -m omega^2 r_k", &tag, interior, mom, tol);

    let nc = noncommutativity_report(&obs, &space, &basis)?;
    for pr in &nc.pairs {
        let (i, j) = (pr.i, pr.j);
        rec.max(format!("anticommute {{r{i},r{j}}} = 0"), &tag, interior, pr.anticommutator_r, tol);
        rec.max(format!("anticommute {{p{i},p{j}}} = 0"), &tag, interior, pr.anticommutator_p, tol);
        rec.min(format!("noncommutative [r{i},r{j}] != 0"), &tag, interior, pr.commutator_r, NONZERO_FLOOR);
        rec.min(format!("noncommutative [p{i},p{j}] != 0"), &tag, interior, pr.commutator_p, NONZERO_FLOOR);
        rec.min(format!("noncommutative [M{i},M{j}] != 0"), &tag, interior, pr.commutator_m, NONZERO_FLOOR);
        rec.max(format!("so(3) [M{i},M{j}] = i eps M"), &tag, interior, pr.so3_residual, tol);
    }
    for kind in VectorKind::ALL {
        let r = vector_transform_residual(&obs, kind, &space, &basis)?;
        rec.max(format!("vector [M_j,{0}_k] = i eps_jkl {0}_l", kind.symbol()), &tag, interior, r, tol);
    }
    rec.max("conserved [H,M_k] = 0", &tag, interior, energy_conservation_residual(&obs, &space, &basis)?, tol);

    let levels_report = spectrum(config.params, &space, config.cutoff)?;
    rec.max("spectrum closed form vs diagonalization", &tag, interior, levels_report.max_deviation, tol);
    rec.max("spectrum H diagonal", &tag, interior, levels_report.max_off_diagonal, tol);
    let p = space.p() as usize;
    let bad_mult = levels_report
        .levels
        .iter()
        .filter(|l| {
            let expect = if l.n == 0 { p + 1 } else { 2 * p };
            l.multiplicity != expect || l.diagonalized_multiplicity != expect
        })
        .count();
    rec.max("spectrum multiplicities p+1, 2p, 2p, ...", &tag, levels_report.levels.len(), bad_mult as f64, 0.0);

    let diff = angular_form_difference(&obs, &space, &basis)?;
    for (k, d) in diff.iter().enumerate() {
        rec.audit(format!("angular M{} bilinear - c1 form", k + 1), &tag, *d, "interior max-norm");
    }
    rec.audit(
        "angular c1 form [M1,M2] = i eps M",
        &tag,
        c1_form_so3_residual(&obs, &space, &basis)?,
        "so(3) residual of M3 = 1/2[c1-,c1+]; nonzero because that M3 carries the opposite sign",
    );

    let audit = m3_eigenvalue_table(&space, config.cutoff)?;
    rec.max("m3 diagonal", &tag, audit.rows.len(), audit.max_off_diagonal, EXACT_TOL.max(tol));
    rec.max(
        "m3 eigenvalues {-p/2,...,p/2}",
        &tag,
        audit.rows.len(),
        if audit.spin_multiplet { 0.0 } else { 1.0 },
        0.0,
    );
    rec.audit(
        "m3 printed p/2 - 2 mu12 mismatches",
        &tag,
        audit.printed_mismatches as f64,
        "labels where the realized c1-form eigenvalue p/2 - mu11 differs from p/2 - 2 mu12",
    );
    rec.m3_table = Some(audit);

    if space.p() == 1 && space.scheme() == CoefficientScheme::Corrected {
        let oracle = p1_oracle_equivalence(config.cutoff)?;
        rec.max("p=1 oracle model triple relations", "fermion x boson", oracle.fock_level_dims.iter().sum(), oracle.model_triple_residual, EXACT_TOL);
        rec.max(
            "p=1 oracle intertwiner",
            "fermion x boson",
            oracle.fock_level_dims.iter().sum(),
            oracle.intertwiner_residual,
            ORACLE_TOL,
        );
    }
    Ok(())
}
