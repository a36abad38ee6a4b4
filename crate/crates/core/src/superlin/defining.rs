use nalgebra::{DMatrix, Matrix5};
use num_complex::Complex64 as C64;

use crate::repcore::{Pair, Sign, Symbol};

pub type Matrix5c = Matrix5<C64>;

/// `e_ij`: 1 at row `i`, column `j` (1-based), zero elsewhere.
pub fn elementary(i: usize, j: usize) -> Matrix5c {
    assert!((1..=5).contains(&i) && (1..=5).contains(&j), "e_{i}{j} out of range");
    let mut m = Matrix5c::zeros();
    m[(i - 1, j - 1)] = C64::new(1.0, 0.0);
    m
}

/// `⟦a, b⟧` on 5×5 matrices with explicit grades.
pub fn super_bracket5(a: &Matrix5c, grade_a: u8, b: &Matrix5c, grade_b: u8) -> Matrix5c {
    let sign = if grade_a * grade_b == 1 { -1.0 } else { 1.0 };
    a * b - b * a * C64::new(sign, 0.0)
}

fn max_abs(m: &Matrix5c) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// The 5×5 matrices of osp(3|2). Rows and columns 1..=3 are even, 4..=5 odd.
#[derive(Debug, Clone, PartialEq)]
pub struct DefiningRealization {
    pub c1_plus: Matrix5c,
    pub c1_minus: Matrix5c,
    pub c2_plus: Matrix5c,
    pub c2_minus: Matrix5c,
    pub h1: Matrix5c,
    pub h2: Matrix5c,
}

impl Default for DefiningRealization {
    fn default() -> Self {
        Self::new()
    }
}

impl DefiningRealization {
    pub fn new() -> Self {
        let e = elementary;
        let s = C64::new(std::f64::consts::SQRT_2, 0.0);
        Self {
            c1_plus: (e(1, 3) - e(3, 2)) * s,
            c1_minus: (e(3, 1) - e(2, 3)) * s,
            c2_plus: (e(3, 5) + e(4, 3)) * s,
            c2_minus: (e(3, 4) - e(5, 3)) * s,
            h1: e(1, 1) - e(2, 2),
            h2: e(4, 4) - e(5, 5),
        }
    }

    pub fn symbol(&self, symbol: Symbol) -> Matrix5c {
        match symbol {
            Symbol::Ladder(Pair::Parafermion, Sign::Plus) => self.c1_plus,
            Symbol::Ladder(Pair::Parafermion, Sign::Minus) => self.c1_minus,
            Symbol::Ladder(Pair::Paraboson, Sign::Plus) => self.c2_plus,
            Symbol::Ladder(Pair::Paraboson, Sign::Minus) => self.c2_minus,
            Symbol::Cartan(Pair::Parafermion) => self.h1,
            Symbol::Cartan(Pair::Paraboson) => self.h2,
        }
    }

    /// Largest entry that breaks the even/odd block pattern: even elements
    /// must vanish on the 3×2 and 2×3 blocks, odd ones on the 3×3 and 2×2.
    pub fn block_structure_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for sym in Symbol::ALL {
            let m = self.symbol(sym);
            for r in 0..5 {
                for c in 0..5 {
                    let diagonal_block = (r < 3) == (c < 3);
                    let must_vanish = if sym.grade() == 0 { !diagonal_block } else { diagonal_block };
                    if must_vanish {
                        worst = worst.max(m[(r, c)].norm());
                    }
                }
            }
        }
        worst
    }

    /// Max residual of the super-Jacobi identity
    /// `⟦⟦A,B⟧,C⟧ = ⟦A,⟦B,C⟧⟧ - (-1)^{deg A deg B} ⟦B,⟦A,C⟧⟧` over all
    /// ordered triples of generators.
    pub fn super_jacobi_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in Symbol::ALL {
            for b in Symbol::ALL {
                for c in Symbol::ALL {
                    let (ga, gb, gc) = (a.grade(), b.grade(), c.grade());
                    let (ma, mb, mc) = (self.symbol(a), self.symbol(b), self.symbol(c));
                    let lhs = super_bracket5(&super_bracket5(&ma, ga, &mb, gb), (ga + gb) % 2, &mc, gc);
                    let sign = if ga * gb == 1 { -1.0 } else { 1.0 };
                    let rhs = super_bracket5(&ma, ga, &super_bracket5(&mb, gb, &mc, gc), (gb + gc) % 2)
                        - super_bracket5(&mb, gb, &super_bracket5(&ma, ga, &mc, gc), (ga + gc) % 2)
                            * C64::new(sign, 0.0);
                    worst = worst.max(max_abs(&(lhs - rhs)));
                }
            }
        }
        worst
    }

    /// Dimension of the span of the ladder generators and all their iterated
    /// super-brackets.
    pub fn generated_dimension(&self) -> usize {
        let gens = [Symbol::ALL[0], Symbol::ALL[1], Symbol::ALL[2], Symbol::ALL[3]];
        let mut elems: Vec<(Matrix5c, u8)> = gens.iter().map(|s| (self.symbol(*s), s.grade())).collect();
        let mut dim = rank(&elems);
        loop {
            let mut next = elems.clone();
            for (a, ga) in &elems {
                for (g, gg) in gens.iter().map(|s| (self.symbol(*s), s.grade())) {
                    let br = super_bracket5(a, *ga, &g, gg);
                    let mut trial = next.clone();
                    trial.push((br, (ga + gg) % 2));
                    if rank(&trial) > rank(&next) {
                        next = trial;
                    }
                }
            }
            let new_dim = rank(&next);
            if new_dim == dim {
                return dim;
            }
            dim = new_dim;
            elems = next;
        }
    }
}

/// Rank of the real span of flattened complex matrices.
fn rank(elems: &[(Matrix5c, u8)]) -> usize {
    let mut flat = DMatrix::<f64>::zeros(50, elems.len());
    for (col, (m, _)) in elems.iter().enumerate() {
        for (k, z) in m.iter().enumerate() {
            flat[(k, col)] = z.re;
            flat[(25 + k, col)] = z.im;
        }
    }
    flat.rank(1e-9)
}
