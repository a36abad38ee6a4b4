use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{coeff_g1, coeff_g2, enumerate_basis, BasisLabel, FockBasis, StateVector};
use crate::{Error, Result};

/// Which generator pair: index 1 is the parafermion (even), index 2 the
/// paraboson (odd).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Pair {
    Parafermion,
    Paraboson,
}

impl Pair {
    pub const ALL: [Pair; 2] = [Pair::Parafermion, Pair::Paraboson];

    pub fn index(self) -> u8 {
        match self {
            Pair::Parafermion => 1,
            Pair::Paraboson => 2,
        }
    }

    pub fn from_index(j: u8) -> Option<Pair> {
        match j {
            1 => Some(Pair::Parafermion),
            2 => Some(Pair::Paraboson),
            _ => None,
        }
    }

    /// Z2 degree `<j>`.
    pub fn grade(self) -> u8 {
        match self {
            Pair::Parafermion => 0,
            Pair::Paraboson => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const ALL: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn glyph(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Letters of the operator words accepted by [`FockSpace::apply_word`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Ladder(Pair, Sign),
    Cartan(Pair),
}

impl Symbol {
    pub const ALL: [Symbol; 6] = [
        Symbol::Ladder(Pair::Parafermion, Sign::Plus),
        Symbol::Ladder(Pair::Parafermion, Sign::Minus),
        Symbol::Ladder(Pair::Paraboson, Sign::Plus),
        Symbol::Ladder(Pair::Paraboson, Sign::Minus),
        Symbol::Cartan(Pair::Parafermion),
        Symbol::Cartan(Pair::Paraboson),
    ];

    pub fn grade(self) -> u8 {
        match self {
            Symbol::Ladder(pair, _) => pair.grade(),
            Symbol::Cartan(_) => 0,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Ladder(pair, sign) => write!(f, "c{}{}", pair.index(), sign.glyph()),
            Symbol::Cartan(pair) => write!(f, "h{}", pair.index()),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace('\u{2212}', "-");
        let sym = match norm.as_str() {
            "c1+" => Symbol::Ladder(Pair::Parafermion, Sign::Plus),
            "c1-" => Symbol::Ladder(Pair::Parafermion, Sign::Minus),
            "c2+" => Symbol::Ladder(Pair::Paraboson, Sign::Plus),
            "c2-" => Symbol::Ladder(Pair::Paraboson, Sign::Minus),
            "h1" => Symbol::Cartan(Pair::Parafermion),
            "h2" => Symbol::Cartan(Pair::Paraboson),
            _ => return Err(Error::UnknownSymbol(s.to_string())),
        };
        Ok(sym)
    }
}

/// Coefficient variant for the `c_1^±` actions.
///
/// `AsPrinted` transcribes the published formulas literally; its
/// second-term prefactors `1/(mu12+mu22+1)` (raising) and `1/(mu12+mu22)`
/// (lowering) carry no square root, which breaks `[c1-, c1+] = -2 h1` on
/// every label with a second term. `Corrected` takes the square root of both
/// and is the variant under which every defining relation holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoefficientScheme {
    AsPrinted,
    #[default]
    Corrected,
}

impl CoefficientScheme {
    fn c1_second_term(self, denom: f64) -> f64 {
        match self {
            CoefficientScheme::AsPrinted => 1.0 / denom,
            CoefficientScheme::Corrected => (1.0 / denom).sqrt(),
        }
    }
}

/// The Fock space `V(p)` together with the exact action of its generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockSpace {
    p: u32,
    scheme: CoefficientScheme,
}

impl FockSpace {
    pub fn new(p: u32) -> Result<Self> {
        Self::with_scheme(p, CoefficientScheme::default())
    }

    pub fn with_scheme(p: u32, scheme: CoefficientScheme) -> Result<Self> {
        if p == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Self { p, scheme })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn scheme(&self) -> CoefficientScheme {
        self.scheme
    }

    pub fn basis(&self, cutoff: u32) -> FockBasis {
        enumerate_basis(self.p, cutoff).expect("p >= 1 checked at construction")
    }

    /// Twice the eigenvalue of `h_k` on `label`, as an exact integer.
    pub fn cartan_eigenvalue_x2(&self, pair: Pair, label: &BasisLabel) -> i64 {
        let p = self.p as i64;
        let (mu12, mu22, mu11) = (label.mu12 as i64, label.mu22 as i64, label.mu11 as i64);
        match pair {
            Pair::Parafermion => -p + 2 * mu11,
            Pair::Paraboson => p + 2 * (mu12 + mu22 - mu11),
        }
    }

    /// Diagonal action of `h_1` or `h_2`.
    pub fn apply_h(&self, pair: Pair, state: &StateVector) -> StateVector {
        StateVector::from_terms(state.iter().map(|(l, a)| {
            let ev = self.cartan_eigenvalue_x2(pair, l) as f64 / 2.0;
            (*l, a * ev)
        }))
    }

    /// Terms `(target, coefficient)` of `c_j^±` applied to one label.
    /// Inadmissible targets are dropped before anything is evaluated.
    pub fn ladder_terms(&self, pair: Pair, sign: Sign, src: &BasisLabel) -> Result<Vec<(BasisLabel, f64)>> {
        let p = self.p;
        let (m12, m22, m11) = (src.mu12 as i64, src.mu22 as i64, src.mu11 as i64);
        let theta = src.theta();
        let (a, b, c) = (m12 as f64, m22 as f64, m11 as f64);
        let t = theta as f64;
        let mut out = Vec::with_capacity(2);
        let target = |d12: i64, d22: i64, d11: i64| {
            BasisLabel::from_signed(m12 + d12, m22 + d22, m11 + d11).filter(|l| l.is_valid(p))
        };
        let alternating = if theta == 0 { 1.0 } else { -1.0 };

        match (pair, sign) {
            (Pair::Parafermion, Sign::Plus) => {
                if let Some(tg) = target(1, 0, 1) {
                    let pre = if theta == 0 { 1.0 } else { ((a + b) / (a + b + 1.0)).sqrt() };
                    out.push((tg, pre * coeff_g1(p, m12, m22)?));
                }
                if theta == 1 {
                    if let Some(tg) = target(0, 1, 1) {
                        let pre = self.scheme.c1_second_term(a + b + 1.0);
                        out.push((tg, -pre * coeff_g2(p, m12, m22)?));
                    }
                }
            }
            (Pair::Paraboson, Sign::Plus) => {
                if theta == 0 {
                    if let Some(tg) = target(1, 0, 0) {
                        let pre = (1.0 / (a + b + 1.0)).sqrt();
                        out.push((tg, pre * coeff_g1(p, m12, m22)?));
                    }
                }
                if let Some(tg) = target(0, 1, 0) {
                    let pre = ((a + b) / (c + b + 1.0)).sqrt();
                    out.push((tg, alternating * pre * coeff_g2(p, m12, m22)?));
                }
            }
            (Pair::Parafermion, Sign::Minus) => {
                if let Some(tg) = target(-1, 0, -1) {
                    let pre = if theta == 0 { 1.0 } else { ((a + b - 1.0) / (a + b)).sqrt() };
                    out.push((tg, pre * coeff_g1(p, m12 - 1, m22)?));
                }
                if theta == 0 {
                    if let Some(tg) = target(0, -1, -1) {
                        let pre = self.scheme.c1_second_term(a + b);
                        out.push((tg, -pre * coeff_g2(p, m12, m22 - 1)?));
                    }
                }
            }
            (Pair::Paraboson, Sign::Minus) => {
                if theta == 1 {
                    if let Some(tg) = target(-1, 0, 0) {
                        let pre = (t / (a + b)).sqrt();
                        out.push((tg, pre * coeff_g1(p, m12 - 1, m22)?));
                    }
                }
                if let Some(tg) = target(0, -1, 0) {
                    let pre = ((a + b - 1.0) / (c + b)).sqrt();
                    out.push((tg, alternating * pre * coeff_g2(p, m12, m22 - 1)?));
                }
            }
        }
        out.retain(|(_, x)| *x != 0.0);
        Ok(out)
    }

    /// Exact action of `c_j^±`, term by term.
    pub fn apply_generator(&self, pair: Pair, sign: Sign, state: &StateVector) -> Result<StateVector> {
        let mut out = StateVector::zero();
        for (label, amp) in state.iter() {
            for (tg, coeff) in self.ladder_terms(pair, sign, label)? {
                out.add_term(tg, amp * coeff);
            }
        }
        Ok(out)
    }

    pub fn apply_symbol(&self, symbol: Symbol, state: &StateVector) -> Result<StateVector> {
        match symbol {
            Symbol::Ladder(pair, sign) => self.apply_generator(pair, sign, state),
            Symbol::Cartan(pair) => Ok(self.apply_h(pair, state)),
        }
    }

    /// Applies `word` right to left, so `[A, B]` acts as `A(B(state))`.
    pub fn apply_word(&self, word: &[Symbol], state: &StateVector) -> Result<StateVector> {
        word.iter().rev().try_fold(state.clone(), |acc, sym| self.apply_symbol(*sym, &acc))
    }
}
