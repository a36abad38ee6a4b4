use std::fmt;

use serde::Serialize;

use super::{DefiningRealization, GradedOperator};
use crate::repcore::{BasisLabel, FockSpace, Pair, Sign, StateVector};
use crate::Result;

/// One instance `⟦⟦c_j^ξ, c_k^η⟧, c_l^ε⟧` of the relative parafermion
/// relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TripleInstance {
    pub j: Pair,
    pub k: Pair,
    pub l: Pair,
    pub xi: Sign,
    pub eta: Sign,
    pub eps: Sign,
}

impl TripleInstance {
    /// All 2³ index choices times 2³ sign choices.
    pub fn all() -> Vec<TripleInstance> {
        let mut out = Vec::with_capacity(64);
        for j in Pair::ALL {
            for k in Pair::ALL {
                for l in Pair::ALL {
                    for xi in Sign::ALL {
                        for eta in Sign::ALL {
                            for eps in Sign::ALL {
                                out.push(TripleInstance { j, k, l, xi, eta, eps });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn lhs(&self) -> GradedOperator {
        let cj = GradedOperator::ladder(self.j, self.xi);
        let ck = GradedOperator::ladder(self.k, self.eta);
        let cl = GradedOperator::ladder(self.l, self.eps);
        GradedOperator::super_bracket(&GradedOperator::super_bracket(&cj, &ck), &cl)
    }

    /// `-2 δ_jl δ_{ε,-ξ} ε^<l> (-1)^{<k><l>} c_k^η + 2 ε^<l> δ_kl δ_{ε,-η} c_j^ξ`
    /// with `ε^<l>` read as 1 for an even index and `ε` for an odd one.
    pub fn rhs(&self) -> GradedOperator {
        let grade = (self.j.grade() + self.k.grade() + self.l.grade()) % 2;
        let eps_l = if self.l.grade() == 1 { self.eps.value() as f64 } else { 1.0 };
        let mut terms = Vec::new();
        if self.j == self.l && self.eps == self.xi.flip() {
            let kl = if self.k.grade() * self.l.grade() == 1 { -1.0 } else { 1.0 };
            terms.push(GradedOperator::ladder(self.k, self.eta).scale_re(-2.0 * eps_l * kl));
        }
        if self.k == self.l && self.eps == self.eta.flip() {
            terms.push(GradedOperator::ladder(self.j, self.xi).scale_re(2.0 * eps_l));
        }
        if terms.is_empty() {
            return GradedOperator::zero(grade);
        }
        GradedOperator::sum(&terms).expect("rhs terms share the lhs grade")
    }

    /// `lhs - rhs`.
    pub fn defect(&self) -> GradedOperator {
        self.lhs().sub(&self.rhs()).expect("both sides have the same grade")
    }
}

impl fmt::Display for TripleInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = |s: Sign| if s == Sign::Plus { '+' } else { '-' };
        write!(
            f,
            "[[c{}{},c{}{}],c{}{}]",
            self.j.index(),
            g(self.xi),
            self.k.index(),
            g(self.eta),
            self.l.index(),
            g(self.eps)
        )
    }
}

/// Where a triple relation is evaluated.
#[derive(Debug, Clone)]
pub enum Realization<'a> {
    Defining(&'a DefiningRealization),
    /// Vector-wise on every probe label, with the exact lazy action.
    Fock { space: &'a FockSpace, probe: &'a [BasisLabel] },
}

/// Max deviation between both sides: entrywise for 5×5 matrices,
/// per amplitude over the probe labels for the Fock space.
pub fn triple_relation_residual(instance: &TripleInstance, realization: &Realization<'_>) -> Result<f64> {
    let defect = instance.defect();
    match realization {
        Realization::Defining(rep) => {
            let m = defect.defining_matrix(rep)?;
            Ok(m.iter().map(|z| z.norm()).fold(0.0, f64::max))
        }
        Realization::Fock { space, probe } => {
            let mut worst = 0.0f64;
            for label in probe.iter() {
                let v = defect.apply(space, &StateVector::basis(*label))?;
                worst = worst.max(v.max_abs());
            }
            Ok(worst)
        }
    }
}

/// Residuals of all 64 instances in one realization.
#[derive(Debug, Clone, Serialize)]
pub struct TripleReport {
    pub residuals: Vec<(String, f64)>,
    pub max_residual: f64,
}

impl TripleReport {
    pub fn run(realization: &Realization<'_>) -> Result<TripleReport> {
        let mut residuals = Vec::with_capacity(64);
        for inst in TripleInstance::all() {
            residuals.push((inst.to_string(), triple_relation_residual(&inst, realization)?));
        }
        let max_residual = residuals.iter().map(|r| r.1).fold(0.0, f64::max);
        Ok(TripleReport { residuals, max_residual })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::CoefficientScheme;

    fn inst(j: u8, k: u8, l: u8, xi: Sign, eta: Sign, eps: Sign) -> TripleInstance {
        let pr = |x| Pair::from_index(x).unwrap();
        TripleInstance { j: pr(j), k: pr(k), l: pr(l), xi, eta, eps }
    }

    fn half(x: i32) -> f64 {
        0.5 * (x * x) as f64
    }

    #[test]
    fn parafermion_specialization() {
        // with j=k=l=1 the rhs must read ½(ε-η)² c^ξ - ½(ε-ξ)² c^η
        for t in TripleInstance::all().into_iter().filter(|t| t.j == Pair::Parafermion && t.k == t.j && t.l == t.j) {
            let rep = DefiningRealization::new();
            let (x, e, n) = (t.xi.value(), t.eps.value(), t.eta.value());
            let cj = GradedOperator::ladder(t.j, t.xi).defining_matrix(&rep).unwrap();
            let ck = GradedOperator::ladder(t.k, t.eta).defining_matrix(&rep).unwrap();
            let expected = cj * num_complex::Complex64::new(half(e - n), 0.0)
                - ck * num_complex::Complex64::new(half(e - x), 0.0);
            let got = t.rhs().defining_matrix(&rep).unwrap();
            assert!((got - expected).iter().all(|z| z.norm() < 1e-15), "{t}");
        }
    }

    #[test]
    fn paraboson_specialization() {
        // with j=k=l=2 the rhs must read (ε-ξ) c^η + (ε-η) c^ξ
        for t in TripleInstance::all().into_iter().filter(|t| t.j == Pair::Paraboson && t.k == t.j && t.l == t.j) {
            let rep = DefiningRealization::new();
            let (x, e, n) = (t.xi.value(), t.eps.value(), t.eta.value());
            let cj = GradedOperator::ladder(t.j, t.xi).defining_matrix(&rep).unwrap();
            let ck = GradedOperator::ladder(t.k, t.eta).defining_matrix(&rep).unwrap();
            let expected = ck * num_complex::Complex64::new((e - x) as f64, 0.0)
                + cj * num_complex::Complex64::new((e - n) as f64, 0.0);
            let got = t.rhs().defining_matrix(&rep).unwrap();
            assert!((got - expected).iter().all(|z| z.norm() < 1e-15), "{t}");
        }
    }

    #[test]
    fn all_instances_hold_in_defining_realization() {
        let rep = DefiningRealization::new();
        let report = TripleReport::run(&Realization::Defining(&rep)).unwrap();
        assert_eq!(report.residuals.len(), 64);
        assert!(report.max_residual <= 1e-12, "{}", report.max_residual);
    }

    #[test]
    fn paraboson_instance_on_fock_space() {
        let space = FockSpace::new(2).unwrap();
        let probe = space.basis(10).labels().to_vec();
        let t = inst(2, 2, 2, Sign::Plus, Sign::Plus, Sign::Minus);
        let r = triple_relation_residual(&t, &Realization::Fock { space: &space, probe: &probe }).unwrap();
        assert!(r < 1e-10, "{r}");
    }

    #[test]
    fn as_printed_fails_somewhere() {
        let space = FockSpace::with_scheme(2, CoefficientScheme::AsPrinted).unwrap();
        let probe = space.basis(4).labels().to_vec();
        let report = TripleReport::run(&Realization::Fock { space: &space, probe: &probe }).unwrap();
        assert!(report.max_residual > 0.1);
    }
}
