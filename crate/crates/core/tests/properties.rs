use osp32::oscillator::{build_observables, OscillatorParams};
use osp32::repcore::{enumerate_basis, BasisLabel, FockSpace, Pair, Sign, StateVector, Symbol};
use osp32::superlin::{matrix_of, GradedOperator, SparseComplexMatrix};
use osp32::C64;
use proptest::prelude::*;

fn label_in(p: u32, cutoff: u32) -> impl Strategy<Value = (u32, BasisLabel)> {
    let labels = enumerate_basis(p, cutoff).unwrap().labels().to_vec();
    (0..labels.len()).prop_map(move |i| (p, labels[i]))
}

fn any_label() -> impl Strategy<Value = (u32, BasisLabel)> {
    (1u32..=6).prop_flat_map(|p| label_in(p, 9))
}

fn scaled_diff(a: &SparseComplexMatrix, b: &SparseComplexMatrix, factor: f64) -> f64 {
    a.sub(&b.scale(C64::new(factor, 0.0))).unwrap().max_abs()
}

proptest! {
    #[test]
    fn basis_size_and_order(p in 1u32..=8, cutoff in 0u32..=14) {
        let basis = enumerate_basis(p, cutoff).unwrap();
        prop_assert_eq!(basis.len(), (p as usize + 1) + 2 * p as usize * cutoff as usize);
        let labels = basis.labels();
        prop_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(labels.iter().all(|l| l.is_valid(p) && l.level() <= cutoff as i64));
    }

    // c_j^± shifts the weight (2h1, 2h2) by ±2 in slot j only.
    #[test]
    fn ladder_images_are_admissible_weight_vectors((p, label) in any_label(), j in 0usize..2, s in 0usize..2) {
        let space = FockSpace::new(p).unwrap();
        let pair = Pair::ALL[j];
        let sign = Sign::ALL[s];
        let before = [space.cartan_eigenvalue_x2(Pair::Parafermion, &label), space.cartan_eigenvalue_x2(Pair::Paraboson, &label)];
        for (target, coeff) in space.ladder_terms(pair, sign, &label).unwrap() {
            prop_assert!(target.is_valid(p), "{} -> {}", label, target);
            prop_assert!(coeff.is_finite() && coeff != 0.0);
            let after = [space.cartan_eigenvalue_x2(Pair::Parafermion, &target), space.cartan_eigenvalue_x2(Pair::Paraboson, &target)];
            for slot in 0..2 {
                let shift = if slot == j { 2 * sign.value() as i64 } else { 0 };
                prop_assert_eq!(after[slot] - before[slot], shift);
            }
            let dn = target.level() - label.level();
            prop_assert_eq!(dn, if pair == Pair::Paraboson { sign.value() as i64 } else { 0 });
        }
    }

    // ⟦a, b⟧ = -(-1)^{|a||b|} ⟦b, a⟧ on basis states.
    #[test]
    fn super_bracket_graded_antisymmetry((p, label) in any_label(), a in 0usize..6, b in 0usize..6) {
        let space = FockSpace::new(p).unwrap();
        let (a, b) = (GradedOperator::symbol(Symbol::ALL[a]), GradedOperator::symbol(Symbol::ALL[b]));
        let sign = if a.grade() * b.grade() == 1 { 1.0 } else { -1.0 };
        let ab = GradedOperator::super_bracket(&a, &b).apply(&space, &StateVector::basis(label)).unwrap();
        let ba = GradedOperator::super_bracket(&b, &a).apply(&space, &StateVector::basis(label)).unwrap();
        prop_assert!((&ab - &ba.scale(C64::new(sign, 0.0))).max_abs() < 1e-12);
    }

    #[test]
    fn observables_scale_with_units(mass in 0.1f64..10.0, omega in 0.1f64..10.0, hbar in 0.1f64..10.0, p in 1u32..=3) {
        let space = FockSpace::new(p).unwrap();
        let basis = space.basis(3);
        let unit = build_observables(OscillatorParams::default());
        let obs = build_observables(OscillatorParams::new(mass, omega, hbar).unwrap());
        let m = |op: &GradedOperator| matrix_of(op, &space, &basis).unwrap();
        let tol = 1e-12 * (1.0 + hbar * omega + (hbar / (mass * omega)).sqrt() + (mass * omega * hbar).sqrt());
        prop_assert!(scaled_diff(&m(&obs.hamiltonian), &m(&unit.hamiltonian), hbar * omega) < 30.0 * tol);
        for k in 0..3 {
            prop_assert!(scaled_diff(&m(&obs.position[k]), &m(&unit.position[k]), (hbar / (mass * omega)).sqrt()) < 10.0 * tol);
            prop_assert!(scaled_diff(&m(&obs.momentum[k]), &m(&unit.momentum[k]), (mass * omega * hbar).sqrt()) < 10.0 * tol);
            prop_assert!(scaled_diff(&m(&obs.angular[k]), &m(&unit.angular[k]), 1.0) < 1e-10);
        }
    }
}
