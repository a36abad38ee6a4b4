use std::collections::{BTreeMap, VecDeque};

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::repcore::{FockSpace, Pair, Sign, Symbol};
use crate::superlin::{matrix_of, GradedOperator, TripleInstance};
use crate::{Error, Result};

/// Outcome of comparing `V(1)` with an ordinary fermion ⊗ boson model.
#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub cutoff: u32,
    /// Max residual of the 64 triple relations in the model, on states at
    /// least three boson quanta below its truncation.
    pub model_triple_residual: f64,
    /// Number of states per level `0..=cutoff` in `V(1)`.
    pub fock_level_dims: Vec<usize>,
    /// Number of states per level `0..=cutoff` in the model.
    pub model_level_dims: Vec<usize>,
    /// Max matrix-element mismatch of the six generators after relabeling
    /// and rephasing.
    pub intertwiner_residual: f64,
}

/// One fermion mode and one boson mode truncated at `bosons` quanta. The
/// boson ladder is twisted by the fermion parity so the two pairs
/// anticommute. State `(nf, nb)` sits at index `nf * (bosons + 1) + nb`.
struct FermionBosonModel {
    bosons: usize,
    c1_plus: DMatrix<C64>,
    c1_minus: DMatrix<C64>,
    c2_plus: DMatrix<C64>,
    c2_minus: DMatrix<C64>,
    h1: DMatrix<C64>,
    h2: DMatrix<C64>,
}

impl FermionBosonModel {
    fn new(bosons: usize) -> Self {
        let nb = bosons + 1;
        let one = C64::new(1.0, 0.0);
        let mut f_plus = DMatrix::<C64>::zeros(2, 2);
        f_plus[(1, 0)] = one;
        let parity = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![one, -one]));
        let mut b_plus = DMatrix::<C64>::zeros(nb, nb);
        for n in 0..bosons {
            b_plus[(n + 1, n)] = C64::new(((n + 1) as f64).sqrt(), 0.0);
        }
        let id_b = DMatrix::<C64>::identity(nb, nb);
        let c1_plus = f_plus.kronecker(&id_b);
        let c1_minus = c1_plus.adjoint();
        let c2_plus = parity.kronecker(&b_plus);
        let c2_minus = c2_plus.adjoint();
        // Cartan elements from the brackets, not from the occupation numbers
        let h1 = (&c1_minus * &c1_plus - &c1_plus * &c1_minus) * C64::new(-0.5, 0.0);
        let h2 = (&c2_minus * &c2_plus + &c2_plus * &c2_minus) * C64::new(0.5, 0.0);
        Self { bosons, c1_plus, c1_minus, c2_plus, c2_minus, h1, h2 }
    }

    fn dim(&self) -> usize {
        2 * (self.bosons + 1)
    }

    fn boson_number(&self, idx: usize) -> usize {
        idx % (self.bosons + 1)
    }

    fn symbol(&self, s: Symbol) -> DMatrix<C64> {
        match s {
            Symbol::Ladder(Pair::Parafermion, Sign::Plus) => self.c1_plus.clone(),
            Symbol::Ladder(Pair::Parafermion, Sign::Minus) => self.c1_minus.clone(),
            Symbol::Ladder(Pair::Paraboson, Sign::Plus) => self.c2_plus.clone(),
            Symbol::Ladder(Pair::Paraboson, Sign::Minus) => self.c2_minus.clone(),
            Symbol::Cartan(Pair::Parafermion) => self.h1.clone(),
            Symbol::Cartan(Pair::Paraboson) => self.h2.clone(),
        }
    }
}

fn weight_key(h1: f64, h2: f64) -> (i64, i64) {
    ((2.0 * h1).round() as i64, (2.0 * h2).round() as i64)
}

/// Builds the independent `p = 1` model, checks the triple relations in it,
/// then relabels `V(1)` onto it by Cartan weight, fixes phases along the
/// ladder graph and reports the largest generator matrix-element mismatch
/// through level `cutoff`.
pub fn p1_oracle_equivalence(cutoff: u32) -> Result<OracleReport> {
    let n_max = cutoff as usize;
    let model = FermionBosonModel::new(n_max + 3);
    let dim = model.dim();
    let gen = |s: Symbol| model.symbol(s);

    let mut model_triple_residual = 0.0f64;
    for inst in TripleInstance::all() {
        let defect = inst.defect().dense_matrix(dim, &gen);
        for c in (0..dim).filter(|&c| model.boson_number(c) <= n_max) {
            for r in 0..dim {
                model_triple_residual = model_triple_residual.max(defect[(r, c)].norm());
            }
        }
    }

    let space = FockSpace::new(1)?;
    let basis = space.basis(cutoff);
    let fock: BTreeMap<Symbol, DMatrix<C64>> = Symbol::ALL
        .iter()
        .map(|s| Ok((*s, matrix_of(&GradedOperator::symbol(*s), &space, &basis)?.to_dense())))
        .collect::<Result<_>>()?;

    // model level = boson number, since h2 = nb + 1/2 = p/2 + n
    let mut model_by_weight: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
    let mut model_level_dims = vec![0usize; n_max + 1];
    for idx in (0..dim).filter(|&i| model.boson_number(i) <= n_max) {
        let key = weight_key(model.h1[(idx, idx)].re, model.h2[(idx, idx)].re);
        let level = (key.1 - 1) / 2;
        if level != model.boson_number(idx) as i64 {
            return Err(Error::NoIntertwiner(format!("model state {idx} has inconsistent h2")));
        }
        model_level_dims[level as usize] += 1;
        model_by_weight.entry(key).or_default().push(idx);
    }
    let mut fock_level_dims = vec![0usize; n_max + 1];
    let mut image = vec![0usize; basis.len()];
    for (i, label) in basis.labels().iter().enumerate() {
        fock_level_dims[label.level() as usize] += 1;
        let h1 = fock[&Symbol::Cartan(Pair::Parafermion)][(i, i)].re;
        let h2 = fock[&Symbol::Cartan(Pair::Paraboson)][(i, i)].re;
        match model_by_weight.get(&weight_key(h1, h2)).map(Vec::as_slice) {
            Some([single]) if model.boson_number(*single) == label.level() as usize => image[i] = *single,
            other => {
                return Err(Error::NoIntertwiner(format!("weight of {label} matches model states {other:?}")));
            }
        }
    }
    if fock_level_dims != model_level_dims {
        return Err(Error::NoIntertwiner(format!("level sizes {fock_level_dims:?} vs {model_level_dims:?}")));
    }

    // phases: U|i) = phase[i] |image[i]>, propagated outward from the vacuum
    let mut phase: Vec<Option<C64>> = vec![None; basis.len()];
    phase[0] = Some(C64::new(1.0, 0.0));
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let pu = phase[u].expect("queued states are phased");
        for s in Symbol::ALL {
            let (fm, mm) = (&fock[&s], model.symbol(s));
            for v in 0..basis.len() {
                let x = fm[(v, u)];
                if phase[v].is_some() || x.norm() < 1e-12 {
                    continue;
                }
                let y = mm[(image[v], image[u])];
                if y.norm() < 1e-12 {
                    return Err(Error::NoIntertwiner(format!("{s} links {u}->{v} in V(1) but not in the model")));
                }
                let ratio = y * pu / x;
                phase[v] = Some(ratio / ratio.norm());
                queue.push_back(v);
            }
        }
    }
    let phase: Vec<C64> = phase
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| Error::NoIntertwiner(format!("state {i} unreachable from the vacuum"))))
        .collect::<Result<_>>()?;

    let mut intertwiner_residual = 0.0f64;
    for s in Symbol::ALL {
        let (fm, mm) = (&fock[&s], model.symbol(s));
        for u in 0..basis.len() {
            for v in 0..basis.len() {
                let pulled = phase[v].conj() * mm[(image[v], image[u])] * phase[u];
                intertwiner_residual = intertwiner_residual.max((pulled - fm[(v, u)]).norm());
            }
        }
    }

    Ok(OracleReport { cutoff, model_triple_residual, fock_level_dims, model_level_dims, intertwiner_residual })
}
