use std::collections::{BTreeMap, BTreeSet};

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use super::GradedOperator;
use crate::repcore::{FockBasis, FockSpace, Pair, Sign, StateVector};
use crate::{Error, Result};

/// Coordinate-format complex matrix over a truncated basis.
///
/// `boundary_rows` lists basis indices whose exact image under the operator
/// leaves the truncated basis; those columns are incomplete.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseComplexMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), C64>,
    boundary_rows: BTreeSet<usize>,
}

impl SparseComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: BTreeMap::new(), boundary_rows: BTreeSet::new() }
    }

    /// Builds from triplets; duplicates are summed and exact zeros dropped.
    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, C64)>>(rows: usize, cols: usize, triplets: I) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            m.add_entry(r, c, v);
        }
        m
    }

    fn add_entry(&mut self, r: usize, c: usize, v: C64) {
        assert!(r < self.rows && c < self.cols, "({r}, {c}) outside {}x{}", self.rows, self.cols);
        let slot = self.entries.entry((r, c)).or_default();
        *slot += v;
        if *slot == C64::new(0.0, 0.0) {
            self.entries.remove(&(r, c));
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.entries.get(&(r, c)).copied().unwrap_or_default()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    pub fn boundary_rows(&self) -> &BTreeSet<usize> {
        &self.boundary_rows
    }

    pub fn adjoint(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(r, c), v)| ((c, r), v.conj())).collect(),
            boundary_rows: BTreeSet::new(),
        }
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self::from_triplets(self.rows, self.cols, self.entries().map(|(r, c, v)| (r, c, v * factor)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_entry(r, c, v);
        }
        out.boundary_rows.extend(other.boundary_rows.iter().copied());
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { left: self.shape(), right: other.shape() });
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, C64)>> = BTreeMap::new();
        for (r, c, v) in other.entries() {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (r, k, a) in self.entries() {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    out.add_entry(r, c, a * b);
                }
            }
        }
        Ok(out)
    }

    /// `AB - (-1)^{ga·gb} BA`.
    pub fn super_bracket(a: &Self, grade_a: u8, b: &Self, grade_b: u8) -> Result<Self> {
        let sign = if grade_a * grade_b == 1 { -1.0 } else { 1.0 };
        a.matmul(b)?.sub(&b.matmul(a)?.scale(C64::new(sign, 0.0)))
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch { left: self.shape(), right: other.shape() });
        }
        Ok(())
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.values().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Max modulus over entries whose row and column both pass `keep`.
    pub fn max_abs_where(&self, keep: impl Fn(usize) -> bool) -> f64 {
        self.entries().filter(|&(r, c, _)| keep(r) && keep(c)).map(|(_, _, v)| v.norm()).fold(0.0, f64::max)
    }

    /// Dense principal submatrix on `indices`.
    pub fn dense_block(&self, indices: &[usize]) -> DMatrix<C64> {
        let pos: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let mut out = DMatrix::zeros(indices.len(), indices.len());
        for (r, c, v) in self.entries() {
            if let (Some(&i), Some(&j)) = (pos.get(&r), pos.get(&c)) {
                out[(i, j)] = v;
            }
        }
        out
    }

    pub fn to_dense(&self) -> DMatrix<C64> {
        let mut out = DMatrix::zeros(self.rows, self.cols);
        for (r, c, v) in self.entries() {
            out[(r, c)] = v;
        }
        out
    }
}

/// Matrix of `op` over `basis`: column `c` holds the exact image of label `c`
/// restricted to the basis. Labels whose image escapes the truncation are
/// recorded in `boundary_rows`.
pub fn matrix_of(op: &GradedOperator, space: &FockSpace, basis: &FockBasis) -> Result<SparseComplexMatrix> {
    let n = basis.len();
    let mut m = SparseComplexMatrix::zeros(n, n);
    for (c, label) in basis.labels().iter().enumerate() {
        let image = op.apply(space, &StateVector::basis(*label))?;
        for (tg, amp) in image.iter() {
            match basis.index_of(tg) {
                Some(r) => m.add_entry(r, c, *amp),
                None => {
                    m.boundary_rows.insert(c);
                }
            }
        }
    }
    Ok(m)
}

/// `max |A[r,c] - conj(B[c,r])|` over the interior block, i.e. how far `A`
/// is from `B^†` away from the truncation.
pub fn interior_adjoint_residual(a: &SparseComplexMatrix, b: &SparseComplexMatrix, basis: &FockBasis) -> Result<f64> {
    let diff = a.sub(&b.adjoint())?;
    Ok(diff.max_abs_where(|i| basis.is_interior(i)))
}

/// Max over `j` of the interior residual between `M(c_j^-)` and `M(c_j^+)^†`.
pub fn adjointness_residual(space: &FockSpace, basis: &FockBasis) -> Result<f64> {
    let mut worst = 0.0f64;
    for pair in Pair::ALL {
        let lower = matrix_of(&GradedOperator::ladder(pair, Sign::Minus), space, basis)?;
        let raise = matrix_of(&GradedOperator::ladder(pair, Sign::Plus), space, basis)?;
        worst = worst.max(interior_adjoint_residual(&lower, &raise, basis)?);
    }
    Ok(worst)
}
