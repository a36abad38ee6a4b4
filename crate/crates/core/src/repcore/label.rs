use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// One orthonormal basis vector of `V(p)`, written `(mu12, mu22; mu11)`.
///
/// Labels order canonically by `(level, mu22, mu12)`, which groups energy
/// levels contiguously.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BasisLabel {
    pub mu12: u32,
    pub mu22: u32,
    pub mu11: u32,
}

impl BasisLabel {
    pub const VACUUM: BasisLabel = BasisLabel { mu12: 0, mu22: 0, mu11: 0 };

    pub const fn new(mu12: u32, mu22: u32, mu11: u32) -> Self {
        Self { mu12, mu22, mu11 }
    }

    /// Builds a label from signed components, `None` if any is negative.
    pub fn from_signed(mu12: i64, mu22: i64, mu11: i64) -> Option<Self> {
        Some(Self {
            mu12: u32::try_from(mu12).ok()?,
            mu22: u32::try_from(mu22).ok()?,
            mu11: u32::try_from(mu11).ok()?,
        })
    }

    /// `mu12 - mu11`; in `{0, 1}` for admissible labels.
    pub fn theta(&self) -> i64 {
        self.mu12 as i64 - self.mu11 as i64
    }

    /// Excitation level `mu22 + theta`.
    pub fn level(&self) -> i64 {
        self.mu22 as i64 + self.theta()
    }

    pub fn is_valid(&self, p: u32) -> bool {
        validate_label(p, self.mu12, self.mu22, self.mu11).valid
    }

    fn sort_key(&self) -> (i64, u32, u32, u32) {
        (self.level(), self.mu22, self.mu12, self.mu11)
    }
}

impl Ord for BasisLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for BasisLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{};{})", self.mu12, self.mu22, self.mu11)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelCheck {
    pub valid: bool,
    /// `mu12 - mu11`, meaningful only when `valid`.
    pub theta: i64,
}

/// Admissibility test for `(mu12, mu22; mu11)` in `V(p)`.
///
/// `mu12 ∈ 0..=p` on the ground row `mu22 = 0`, `mu12 ∈ 1..=p` above it,
/// and `theta = mu12 - mu11 ∈ {0, 1}` with `theta = 0` forced when
/// `mu12 = 0`.
pub fn validate_label(p: u32, mu12: u32, mu22: u32, mu11: u32) -> LabelCheck {
    let theta = mu12 as i64 - mu11 as i64;
    let row_ok = if mu22 == 0 {
        mu12 <= p
    } else {
        (1..=p).contains(&mu12)
    };
    let valid = p >= 1 && row_ok && (theta == 0 || theta == 1) && !(mu12 == 0 && theta != 0);
    LabelCheck { valid, theta }
}

/// All admissible labels with level at most `cutoff`, in canonical order.
#[derive(Debug, Clone)]
pub struct FockBasis {
    p: u32,
    cutoff: u32,
    labels: Vec<BasisLabel>,
    index: HashMap<BasisLabel, usize>,
}

impl FockBasis {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn label(&self, idx: usize) -> BasisLabel {
        self.labels[idx]
    }

    /// Level of the label at `idx`.
    pub fn level(&self, idx: usize) -> u32 {
        self.labels[idx].level() as u32
    }

    /// Whether `idx` lies strictly below the cutoff.
    pub fn is_interior(&self, idx: usize) -> bool {
        self.level(idx) < self.cutoff
    }

    /// Indices strictly below the cutoff.
    pub fn interior_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_interior(i)).collect()
    }

    /// Closed-form size `(p + 1) + 2 p N`.
    pub fn expected_len(p: u32, cutoff: u32) -> usize {
        (p as usize + 1) + 2 * p as usize * cutoff as usize
    }
}

/// Enumerates the truncated basis. The vacuum always comes first.
pub fn enumerate_basis(p: u32, cutoff: u32) -> Result<FockBasis> {
    if p == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut labels = Vec::with_capacity(FockBasis::expected_len(p, cutoff));
    for mu22 in 0..=cutoff {
        for mu12 in 0..=p {
            for theta in 0..=1u32 {
                if theta > mu12 {
                    continue;
                }
                let label = BasisLabel::new(mu12, mu22, mu12 - theta);
                if label.is_valid(p) && label.level() <= cutoff as i64 {
                    labels.push(label);
                }
            }
        }
    }
    labels.sort();
    let index = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    Ok(FockBasis { p, cutoff, labels, index })
}
