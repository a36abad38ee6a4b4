use num_complex::Complex64 as C64;

use super::OscillatorParams;
use crate::repcore::{Pair, Sign};
use crate::superlin::GradedOperator;

/// `ε_ijk` for indices in `0..3`.
pub fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// The oscillator ladder operators `a_k^±`, `k = 1, 2, 3` (stored 0-based).
#[derive(Debug, Clone)]
pub struct Ladder {
    pub plus: [GradedOperator; 3],
    pub minus: [GradedOperator; 3],
}

impl Ladder {
    pub fn get(&self, k: usize, sign: Sign) -> &GradedOperator {
        match sign {
            Sign::Plus => &self.plus[k],
            Sign::Minus => &self.minus[k],
        }
    }
}

/// `a1^± = [c1- - c1+, c2^±]/(2√3)`, `a2^± = i[c1- + c1+, c2^±]/(2√3)`,
/// `a3^± = c2^±/√3`.
pub fn build_ladder() -> Ladder {
    let c1p = GradedOperator::ladder(Pair::Parafermion, Sign::Plus);
    let c1m = GradedOperator::ladder(Pair::Parafermion, Sign::Minus);
    let diff = c1m.sub(&c1p).expect("even");
    let sum = c1m.add(&c1p).expect("even");
    let s3 = 3f64.sqrt();
    let build = |sign: Sign| -> [GradedOperator; 3] {
        let c2 = GradedOperator::ladder(Pair::Paraboson, sign);
        let tag = if sign == Sign::Plus { '+' } else { '-' };
        [
            GradedOperator::commutator(&diff, &c2).scale_re(1.0 / (2.0 * s3)).renamed(format!("a1{tag}")),
            GradedOperator::commutator(&sum, &c2).scale(C64::new(0.0, 1.0 / (2.0 * s3))).renamed(format!("a2{tag}")),
            c2.scale_re(1.0 / s3).renamed(format!("a3{tag}")),
        ]
    };
    Ladder { plus: build(Sign::Plus), minus: build(Sign::Minus) }
}

/// Everything observable about the oscillator, each with an exact action.
#[derive(Debug, Clone)]
pub struct ObservableSet {
    pub params: OscillatorParams,
    pub ladder: Ladder,
    pub position: [GradedOperator; 3],
    pub momentum: [GradedOperator; 3],
    pub hamiltonian: GradedOperator,
    /// `M_i = -(3/4ħ) Σ ε_ijk {r_j, p_k}`.
    pub angular: [GradedOperator; 3],
    /// `M1 = ½(c1+ + c1-)`, `M2 = -(i/2)(c1+ - c1-)`, `M3 = ½[c1-, c1+]`,
    /// kept exactly as the alternative closed form reads. Its third
    /// component has the opposite sign to `angular[2]`.
    pub angular_c1_form: [GradedOperator; 3],
}

pub fn build_observables(params: OscillatorParams) -> ObservableSet {
    let ladder = build_ladder();
    let rs = params.position_scale();
    let ps = params.momentum_scale();
    let position: [GradedOperator; 3] = std::array::from_fn(|k| {
        ladder.plus[k].add(&ladder.minus[k]).expect("odd").scale_re(rs).renamed(format!("r{}", k + 1))
    });
    let momentum: [GradedOperator; 3] = std::array::from_fn(|k| {
        ladder.plus[k].sub(&ladder.minus[k]).expect("odd").scale(C64::new(0.0, ps)).renamed(format!("p{}", k + 1))
    });
    let number: Vec<GradedOperator> =
        (0..3).map(|k| GradedOperator::anticommutator(&ladder.plus[k], &ladder.minus[k])).collect();
    let hamiltonian = GradedOperator::sum(&number).expect("even").scale_re(params.omega * params.hbar / 2.0).renamed("H");

    let angular: [GradedOperator; 3] = std::array::from_fn(|i| {
        let mut terms = Vec::new();
        for j in 0..3 {
            for k in 0..3 {
                let e = levi_civita(i, j, k);
                if e != 0.0 {
                    terms.push(GradedOperator::anticommutator(&position[j], &momentum[k]).scale_re(e));
                }
            }
        }
        GradedOperator::sum(&terms).expect("even").scale_re(-3.0 / (4.0 * params.hbar)).renamed(format!("M{}", i + 1))
    });

    let c1p = GradedOperator::ladder(Pair::Parafermion, Sign::Plus);
    let c1m = GradedOperator::ladder(Pair::Parafermion, Sign::Minus);
    let angular_c1_form = [
        c1p.add(&c1m).expect("even").scale_re(0.5).renamed("M1[c1]"),
        c1p.sub(&c1m).expect("even").scale(C64::new(0.0, -0.5)).renamed("M2[c1]"),
        GradedOperator::commutator(&c1m, &c1p).scale_re(0.5).renamed("M3[c1]"),
    ];

    ObservableSet { params, ladder, position, momentum, hamiltonian, angular, angular_c1_form }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::{BasisLabel, FockSpace, StateVector};

    #[test]
    fn grades() {
        let obs = build_observables(OscillatorParams::default());
        for k in 0..3 {
            assert_eq!(obs.ladder.plus[k].grade(), 1);
            assert_eq!(obs.ladder.minus[k].grade(), 1);
            assert_eq!(obs.position[k].grade(), 1);
            assert_eq!(obs.momentum[k].grade(), 1);
            assert_eq!(obs.angular[k].grade(), 0);
            assert_eq!(obs.angular_c1_form[k].grade(), 0);
        }
        assert_eq!(obs.hamiltonian.grade(), 0);
    }

    #[test]
    fn a3_minus_kills_vacuum() {
        let space = FockSpace::new(2).unwrap();
        let l = build_ladder();
        assert!(l.minus[2].apply(&space, &StateVector::vacuum()).unwrap().is_zero());
    }

    #[test]
    fn a1_plus_on_vacuum() {
        // frozen from an independent dense-matrix evaluation: a1+|0) = sqrt(p/3) |1,1;1)
        let l = build_ladder();
        for p in 1..=4u32 {
            let space = FockSpace::new(p).unwrap();
            let v = l.plus[0].apply(&space, &StateVector::vacuum()).unwrap();
            assert_eq!(v.len(), 1);
            let amp = v.amplitude(&BasisLabel::new(1, 1, 1));
            assert!((amp.re - (p as f64 / 3.0).sqrt()).abs() < 1e-12, "p={p}: {amp}");
            assert!(v.labels().all(|l| l.level() == 1));
        }
        let space = FockSpace::new(1).unwrap();
        let v = l.plus[0].apply(&space, &StateVector::vacuum()).unwrap();
        assert!((v.norm_sqr() - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn hamiltonian_on_vacuum() {
        let params = OscillatorParams::new(2.0, 3.0, 0.5).unwrap();
        let obs = build_observables(params);
        for p in 1..=4u32 {
            let space = FockSpace::new(p).unwrap();
            let v = obs.hamiltonian.apply(&space, &StateVector::vacuum()).unwrap();
            let e0 = params.hbar * params.omega * p as f64 / 2.0;
            assert!((&v - &StateVector::vacuum().scale(C64::new(e0, 0.0))).max_abs() < 1e-12);
        }
    }

    #[test]
    fn c1_form_m3_is_minus_h1() {
        let obs = build_observables(OscillatorParams::default());
        let space = FockSpace::new(3).unwrap();
        for l in space.basis(4).labels() {
            let v = obs.angular_c1_form[2].apply(&space, &StateVector::basis(*l)).unwrap();
            let expected = 1.5 - l.mu11 as f64;
            assert!((&v - &StateVector::basis(*l).scale(C64::new(expected, 0.0))).max_abs() < 1e-12);
        }
    }
}
