use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64 as C64;

use super::BasisLabel;

/// Finite combination of basis labels. Exact zeros are never stored.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct StateVector {
    terms: BTreeMap<BasisLabel, C64>,
}

impl StateVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(label: BasisLabel) -> Self {
        Self::from_terms([(label, C64::new(1.0, 0.0))])
    }

    pub fn vacuum() -> Self {
        Self::basis(BasisLabel::VACUUM)
    }

    pub fn from_terms<I: IntoIterator<Item = (BasisLabel, C64)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (label, amp) in terms {
            out.add_term(label, amp);
        }
        out
    }

    pub fn add_term(&mut self, label: BasisLabel, amp: C64) {
        if amp == C64::new(0.0, 0.0) {
            return;
        }
        let slot = self.terms.entry(label).or_insert(C64::new(0.0, 0.0));
        *slot += amp;
        if *slot == C64::new(0.0, 0.0) {
            self.terms.remove(&label);
        }
    }

    pub fn amplitude(&self, label: &BasisLabel) -> C64 {
        self.terms.get(label).copied().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisLabel, &C64)> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &BasisLabel> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, a)| (*l, a * factor)))
    }

    pub fn axpy(&mut self, factor: C64, other: &StateVector) {
        for (l, a) in &other.terms {
            self.add_term(*l, a * factor);
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.terms.values().map(|a| a.norm_sqr()).sum()
    }

    /// Largest amplitude modulus, 0 for the zero vector.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|a| a.norm()).fold(0.0, f64::max)
    }
}

impl<'a> Add<&'a StateVector> for &'a StateVector {
    type Output = StateVector;
    fn add(self, rhs: &'a StateVector) -> StateVector {
        let mut out = self.clone();
        out.axpy(C64::new(1.0, 0.0), rhs);
        out
    }
}

impl<'a> Sub<&'a StateVector> for &'a StateVector {
    type Output = StateVector;
    fn sub(self, rhs: &'a StateVector) -> StateVector {
        let mut out = self.clone();
        out.axpy(C64::new(-1.0, 0.0), rhs);
        out
    }
}

impl Neg for StateVector {
    type Output = StateVector;
    fn neg(self) -> StateVector {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul<C64> for &StateVector {
    type Output = StateVector;
    fn mul(self, rhs: C64) -> StateVector {
        self.scale(rhs)
    }
}

/// `<a|b> = Σ conj(a_μ) b_μ` over the orthonormal label basis.
pub fn inner_product(a: &StateVector, b: &StateVector) -> C64 {
    let (small, large, flip) = if a.len() <= b.len() { (a, b, false) } else { (b, a, true) };
    let mut acc = C64::new(0.0, 0.0);
    for (l, x) in small.iter() {
        let y = large.amplitude(l);
        acc += if flip { y.conj() * x } else { x.conj() * y };
    }
    acc
}
