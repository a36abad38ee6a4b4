use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use super::defining::{DefiningRealization, Matrix5c};
use crate::repcore::{FockSpace, Pair, Sign, StateVector, Symbol};
use crate::{Error, Result};

/// Z2 degree: 0 even, 1 odd.
pub type Grade = u8;

#[derive(Debug)]
enum Expr {
    Identity,
    Zero,
    Symbol(Symbol),
    Scaled(C64, Arc<Expr>),
    Sum(Vec<Arc<Expr>>),
    /// Written left to right, applied right to left.
    Product(Vec<Arc<Expr>>),
}

/// A named homogeneous linear operator built from the generators.
#[derive(Clone)]
pub struct GradedOperator {
    name: String,
    grade: Grade,
    expr: Arc<Expr>,
}

impl fmt::Debug for GradedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedOperator").field("name", &self.name).field("grade", &self.grade).finish()
    }
}

impl GradedOperator {
    pub fn symbol(symbol: Symbol) -> Self {
        Self { name: symbol.to_string(), grade: symbol.grade(), expr: Arc::new(Expr::Symbol(symbol)) }
    }

    pub fn ladder(pair: Pair, sign: Sign) -> Self {
        Self::symbol(Symbol::Ladder(pair, sign))
    }

    pub fn cartan(pair: Pair) -> Self {
        Self::symbol(Symbol::Cartan(pair))
    }

    pub fn identity() -> Self {
        Self { name: "1".into(), grade: 0, expr: Arc::new(Expr::Identity) }
    }

    /// The zero operator; it may be added to operators of the given grade.
    pub fn zero(grade: Grade) -> Self {
        Self { name: "0".into(), grade, expr: Arc::new(Expr::Zero) }
    }

    /// Composition of a word, applied right to left.
    pub fn word(symbols: &[Symbol]) -> Self {
        symbols.iter().fold(Self::identity(), |acc, s| acc.mul(&Self::symbol(*s)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn grade(&self) -> Grade {
        self.grade
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            name: format!("({factor})·{}", self.name),
            grade: self.grade,
            expr: Arc::new(Expr::Scaled(factor, self.expr.clone())),
        }
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(C64::new(factor, 0.0))
    }

    /// Sum of homogeneous operators of one grade.
    pub fn sum(terms: &[GradedOperator]) -> Result<Self> {
        let Some(first) = terms.first() else {
            return Ok(Self::zero(0));
        };
        for t in terms {
            if t.grade != first.grade {
                return Err(Error::MixedGrades(first.grade, t.grade));
            }
        }
        let name = terms.iter().map(|t| t.name.as_str()).collect::<Vec<_>>().join(" + ");
        Ok(Self {
            name,
            grade: first.grade,
            expr: Arc::new(Expr::Sum(terms.iter().map(|t| t.expr.clone()).collect())),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::sum(&[self.clone(), other.clone()])
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Self::sum(&[self.clone(), other.scale_re(-1.0)])
    }

    /// Composition `self ∘ other`.
    pub fn mul(&self, other: &Self) -> Self {
        Self {
            name: format!("{} {}", self.name, other.name),
            grade: (self.grade + other.grade) % 2,
            expr: Arc::new(Expr::Product(vec![self.expr.clone(), other.expr.clone()])),
        }
    }

    /// `⟦a, b⟧ = ab - (-1)^{deg a · deg b} ba`.
    pub fn super_bracket(a: &Self, b: &Self) -> Self {
        let sign = if a.grade * b.grade == 1 { 1.0 } else { -1.0 };
        let body = Self::sum(&[a.mul(b), b.mul(a).scale_re(sign)]).expect("ab and ba share a grade");
        body.renamed(format!("⟦{}, {}⟧", a.name, b.name))
    }

    /// Plain commutator `ab - ba`, whatever the grades.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        let body = Self::sum(&[a.mul(b), b.mul(a).scale_re(-1.0)]).expect("ab and ba share a grade");
        body.renamed(format!("[{}, {}]", a.name, b.name))
    }

    /// Plain anticommutator `ab + ba`, whatever the grades.
    pub fn anticommutator(a: &Self, b: &Self) -> Self {
        let body = Self::sum(&[a.mul(b), b.mul(a)]).expect("ab and ba share a grade");
        body.renamed(format!("{{{}, {}}}", a.name, b.name))
    }

    /// Exact action on a Fock state.
    pub fn apply(&self, space: &FockSpace, state: &StateVector) -> Result<StateVector> {
        eval_state(&self.expr, space, state)
    }

    /// The operator as a 5×5 matrix of the defining realization.
    pub fn defining_matrix(&self, rep: &DefiningRealization) -> Result<Matrix5c> {
        eval_matrix(&self.expr, rep)
    }

    /// The operator in any finite matrix realization given by the images of
    /// the six generators.
    pub fn dense_matrix(&self, dim: usize, generator: &dyn Fn(Symbol) -> DMatrix<C64>) -> DMatrix<C64> {
        eval_dense(&self.expr, dim, generator)
    }
}

fn eval_dense(expr: &Expr, dim: usize, generator: &dyn Fn(Symbol) -> DMatrix<C64>) -> DMatrix<C64> {
    match expr {
        Expr::Identity => DMatrix::identity(dim, dim),
        Expr::Zero => DMatrix::zeros(dim, dim),
        Expr::Symbol(s) => generator(*s),
        Expr::Scaled(c, inner) => eval_dense(inner, dim, generator) * *c,
        Expr::Sum(terms) => terms.iter().fold(DMatrix::zeros(dim, dim), |acc, t| acc + eval_dense(t, dim, generator)),
        Expr::Product(factors) => {
            factors.iter().fold(DMatrix::identity(dim, dim), |acc, f| acc * eval_dense(f, dim, generator))
        }
    }
}

fn eval_state(expr: &Expr, space: &FockSpace, state: &StateVector) -> Result<StateVector> {
    match expr {
        Expr::Identity => Ok(state.clone()),
        Expr::Zero => Ok(StateVector::zero()),
        Expr::Symbol(s) => space.apply_symbol(*s, state),
        Expr::Scaled(c, inner) => Ok(eval_state(inner, space, state)?.scale(*c)),
        Expr::Sum(terms) => {
            let mut out = StateVector::zero();
            for t in terms {
                out.axpy(C64::new(1.0, 0.0), &eval_state(t, space, state)?);
            }
            Ok(out)
        }
        Expr::Product(factors) => {
            let mut acc = state.clone();
            for f in factors.iter().rev() {
                if acc.is_zero() {
                    break;
                }
                acc = eval_state(f, space, &acc)?;
            }
            Ok(acc)
        }
    }
}

fn eval_matrix(expr: &Expr, rep: &DefiningRealization) -> Result<Matrix5c> {
    match expr {
        Expr::Identity => Ok(Matrix5c::identity()),
        Expr::Zero => Ok(Matrix5c::zeros()),
        Expr::Symbol(s) => Ok(rep.symbol(*s)),
        Expr::Scaled(c, inner) => Ok(eval_matrix(inner, rep)? * *c),
        Expr::Sum(terms) => terms.iter().try_fold(Matrix5c::zeros(), |acc, t| Ok(acc + eval_matrix(t, rep)?)),
        Expr::Product(factors) => {
            factors.iter().try_fold(Matrix5c::identity(), |acc, f| Ok(acc * eval_matrix(f, rep)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(j: u8, s: Sign) -> GradedOperator {
        GradedOperator::ladder(Pair::from_index(j).unwrap(), s)
    }

    #[test]
    fn grades() {
        assert_eq!(c(1, Sign::Plus).grade(), 0);
        assert_eq!(c(1, Sign::Minus).grade(), 0);
        assert_eq!(c(2, Sign::Plus).grade(), 1);
        assert_eq!(GradedOperator::cartan(Pair::Paraboson).grade(), 0);
        let gens: Vec<_> = Symbol::ALL.iter().map(|s| GradedOperator::symbol(*s)).collect();
        for a in &gens {
            for b in &gens {
                let br = GradedOperator::super_bracket(a, b);
                assert_eq!(br.grade(), (a.grade() + b.grade()) % 2);
                for d in &gens {
                    let nested = GradedOperator::super_bracket(&br, d);
                    assert_eq!(nested.grade(), (a.grade() ^ b.grade()) ^ d.grade());
                }
            }
        }
    }

    #[test]
    fn mixed_sum_rejected() {
        let err = c(1, Sign::Plus).add(&c(2, Sign::Plus)).unwrap_err();
        assert_eq!(err, Error::MixedGrades(0, 1));
        assert!(c(1, Sign::Plus).add(&GradedOperator::zero(0)).is_ok());
    }

    #[test]
    fn odd_odd_bracket_is_anticommutator() {
        let rep = DefiningRealization::new();
        let (a, b) = (c(2, Sign::Minus), c(2, Sign::Plus));
        let sb = GradedOperator::super_bracket(&a, &b).defining_matrix(&rep).unwrap();
        let ac = GradedOperator::anticommutator(&a, &b).defining_matrix(&rep).unwrap();
        assert_eq!(sb, ac);
        let (x, y) = (c(1, Sign::Minus), c(2, Sign::Plus));
        let sb = GradedOperator::super_bracket(&x, &y).defining_matrix(&rep).unwrap();
        let cm = GradedOperator::commutator(&x, &y).defining_matrix(&rep).unwrap();
        assert_eq!(sb, cm);
    }

    #[test]
    fn cartan_brackets_in_defining_realization() {
        let rep = DefiningRealization::new();
        let b1 = GradedOperator::super_bracket(&c(1, Sign::Minus), &c(1, Sign::Plus)).defining_matrix(&rep).unwrap();
        let h1 = rep.symbol(Symbol::Cartan(Pair::Parafermion));
        assert!((b1 - h1 * C64::new(-2.0, 0.0)).iter().all(|z| z.norm() <= 1e-12));
        let b2 = GradedOperator::super_bracket(&c(2, Sign::Minus), &c(2, Sign::Plus)).defining_matrix(&rep).unwrap();
        let h2 = rep.symbol(Symbol::Cartan(Pair::Paraboson));
        assert!((b2 - h2 * C64::new(2.0, 0.0)).iter().all(|z| z.norm() <= 1e-12));
    }

    #[test]
    fn word_matches_apply_word() {
        let space = FockSpace::new(3).unwrap();
        let w: Vec<Symbol> = ["c1+", "c2-", "h2", "c2+", "c2+"].iter().map(|s| s.parse().unwrap()).collect();
        let v = StateVector::basis(crate::repcore::BasisLabel::new(1, 2, 0));
        let a = GradedOperator::word(&w).apply(&space, &v).unwrap();
        let b = space.apply_word(&w, &v).unwrap();
        assert!((&a - &b).max_abs() < 1e-12);
    }
}
