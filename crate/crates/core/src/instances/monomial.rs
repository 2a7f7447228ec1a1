//! `𝓥_k`: the finite model of unitary matrices whose morphisms are monomial
//! matrices with `k`-th roots of unity as entries. A root `ω^e` is stored as
//! the exponent `e mod k`; no floating point is involved.
//!
//! `⊗` is the Kronecker product with the first factor major, and the
//! anti-involution `ζ̄` is complex conjugation (negating exponents) with
//! `μ = c_⊗`.

use serde::{Deserialize, Serialize};

use crate::category::Bimonoidal;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::rig::{Pi0Rig, RigElem};

/// Column `j` has its single nonzero entry `ω^{exps[j]}` in row `perm(j)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MonomialMatrix {
    pub perm: Perm,
    pub exps: Vec<u32>,
}

/// A dense matrix over `{0} ∪ μ_k`: `None` is zero, `Some(e)` is `ω^e`.
pub type DenseMatrix = Vec<Vec<Option<u32>>>;

impl MonomialMatrix {
    pub fn permutation(perm: Perm) -> Self {
        MonomialMatrix { exps: vec![0; perm.len()], perm }
    }

    pub fn diagonal(exps: Vec<u32>) -> Self {
        MonomialMatrix { perm: Perm::identity(exps.len()), exps }
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.size();
        let mut m = vec![vec![None; n]; n];
        for j in 0..n {
            m[self.perm.apply(j)][j] = Some(self.exps[j]);
        }
        m
    }

    /// Reads a dense matrix back, rejecting anything that is not monomial.
    pub fn from_dense(m: &DenseMatrix, k: u32) -> Result<Self> {
        let n = m.len();
        let mut images = vec![usize::MAX; n];
        let mut exps = vec![0; n];
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Size("matrix is not square".into()));
            }
            for (j, entry) in row.iter().enumerate() {
                if let Some(e) = entry {
                    if images[j] != usize::MAX {
                        return Err(Error::Invalid(format!("column {} has two nonzero entries", j)));
                    }
                    images[j] = i;
                    exps[j] = e % k;
                }
            }
        }
        if images.contains(&usize::MAX) {
            return Err(Error::Invalid("a column is zero".into()));
        }
        Ok(MonomialMatrix { perm: Perm::from_images(images)?, exps })
    }
}

/// Product of dense matrices over `{0} ∪ μ_k`. Rows and columns of monomial
/// factors meet in at most one nonzero term, so sums never need to add two
/// roots of unity; a second term is reported as an error.
pub fn dense_mul(a: &DenseMatrix, b: &DenseMatrix, k: u32) -> Result<DenseMatrix> {
    let n = a.len();
    let inner = b.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![None; m]; n];
    for i in 0..n {
        for j in 0..m {
            for l in 0..inner {
                if let (Some(x), Some(y)) = (a[i][l], b[l][j]) {
                    if out[i][j].is_some() {
                        return Err(Error::Invalid("sum of two roots of unity in a monomial product".into()));
                    }
                    out[i][j] = Some((x + y) % k);
                }
            }
        }
    }
    Ok(out)
}

pub fn dense_kron(a: &DenseMatrix, b: &DenseMatrix, k: u32) -> DenseMatrix {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![None; n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            for p in 0..m {
                for r in 0..m {
                    if let (Some(x), Some(y)) = (a[i][j], b[p][r]) {
                        out[i * m + p][j * m + r] = Some((x + y) % k);
                    }
                }
            }
        }
    }
    out
}

pub fn dense_block_diag(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![None; n + m]; n + m];
    for i in 0..n {
        out[i][..n].copy_from_slice(&a[i]);
    }
    for i in 0..m {
        out[n + i][n..].copy_from_slice(&b[i]);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub k: u32,
}

impl Monomial {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Invalid("roots of unity need a positive order".into()));
        }
        Ok(Monomial { k })
    }

    /// Complex conjugation: `ω^e ↦ ω^{-e}`.
    pub fn conjugate(&self, f: &MonomialMatrix) -> MonomialMatrix {
        MonomialMatrix { perm: f.perm.clone(), exps: f.exps.iter().map(|&e| (self.k - e) % self.k).collect() }
    }

}

impl Bimonoidal for Monomial {
    type Obj = usize;
    type Mor = MonomialMatrix;

    fn name(&self) -> String {
        format!("monomial:{}", self.k)
    }

    fn dom(&self, f: &MonomialMatrix) -> usize {
        f.size()
    }

    fn cod(&self, f: &MonomialMatrix) -> usize {
        f.size()
    }

    fn id(&self, a: &usize) -> MonomialMatrix {
        MonomialMatrix::permutation(Perm::identity(*a))
    }

    fn compose(&self, g: &MonomialMatrix, f: &MonomialMatrix) -> Result<MonomialMatrix> {
        if g.size() != f.size() {
            return Err(Error::mismatch(format!("cannot compose {:?} after {:?}", g, f)));
        }
        let exps = (0..f.size()).map(|j| (f.exps[j] + g.exps[f.perm.apply(j)]) % self.k).collect();
        Ok(MonomialMatrix { perm: g.perm.compose(&f.perm), exps })
    }

    fn inverse(&self, f: &MonomialMatrix) -> Option<MonomialMatrix> {
        // unitary: the inverse is the conjugate transpose
        let inv = f.perm.inverse();
        let exps = (0..f.size()).map(|i| (self.k - f.exps[inv.apply(i)]) % self.k).collect();
        Some(MonomialMatrix { perm: inv, exps })
    }

    fn zero(&self) -> usize {
        0
    }

    fn one(&self) -> usize {
        1
    }

    fn oplus(&self, a: &usize, b: &usize) -> usize {
        a + b
    }

    fn oplus_mor(&self, f: &MonomialMatrix, g: &MonomialMatrix) -> MonomialMatrix {
        MonomialMatrix { perm: f.perm.block_sum(&g.perm), exps: [f.exps.as_slice(), g.exps.as_slice()].concat() }
    }

    fn otimes(&self, a: &usize, b: &usize) -> usize {
        a * b
    }

    fn otimes_mor(&self, f: &MonomialMatrix, g: &MonomialMatrix) -> MonomialMatrix {
        let exps = f.exps.iter().flat_map(|x| g.exps.iter().map(move |y| (x + y) % self.k)).collect();
        MonomialMatrix { perm: f.perm.grid_product(&g.perm), exps }
    }

    fn c_oplus(&self, a: &usize, b: &usize) -> MonomialMatrix {
        MonomialMatrix::permutation(Perm::block_swap(*a, *b))
    }

    fn d_r(&self, a: &usize, b: &usize, c: &usize) -> MonomialMatrix {
        MonomialMatrix::permutation(Perm::right_distributor(*a, *b, *c))
    }

    fn zeta(&self, a: &usize) -> Option<usize> {
        Some(*a)
    }

    fn zeta_mor(&self, f: &MonomialMatrix) -> Option<MonomialMatrix> {
        Some(self.conjugate(f))
    }

    fn mu(&self, a: &usize, b: &usize) -> Option<MonomialMatrix> {
        Some(MonomialMatrix::permutation(Perm::grid_transpose(*a, *b)))
    }

    fn beta(&self, a: &usize, b: &usize) -> Option<MonomialMatrix> {
        Some(MonomialMatrix::permutation(Perm::grid_transpose(*a, *b)))
    }

    fn component(&self, a: &usize) -> Option<RigElem> {
        Some(RigElem::int(*a as i64))
    }

    fn component_rig(&self) -> Option<Pi0Rig> {
        Some(Pi0Rig::Naturals)
    }

    fn is_bipermutative(&self) -> bool {
        true
    }

    fn objects_upto(&self, size: usize) -> Vec<usize> {
        (0..=size).collect()
    }

    fn morphisms_from(&self, a: &usize) -> Vec<MonomialMatrix> {
        let n = *a;
        let total = (self.k as usize).pow(n as u32);
        let exp_words: Vec<Vec<u32>> = (0..total)
            .map(|mut code| {
                let mut v = vec![0; n];
                for slot in v.iter_mut().rev() {
                    *slot = (code % self.k as usize) as u32;
                    code /= self.k as usize;
                }
                v
            })
            .collect();
        Perm::all(n)
            .into_iter()
            .flat_map(|p| exp_words.iter().map(move |e| MonomialMatrix { perm: p.clone(), exps: e.clone() }))
            .collect()
    }

    fn parse_obj(&self, v: &serde_json::Value) -> Result<usize> {
        crate::category::from_json(v)
    }

    fn parse_mor(&self, v: &serde_json::Value) -> Result<MonomialMatrix> {
        crate::category::from_json(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_negates_exponents() {
        let v = Monomial::new(4).unwrap();
        let f = MonomialMatrix::diagonal(vec![1]);
        assert_eq!(v.zeta_mor(&f).unwrap(), MonomialMatrix::diagonal(vec![3]));
    }

    #[test]
    fn permutation_matrix_moves_diagonal() {
        // E_σ · diag(w₁, w₂) = diag(w₂, w₁) · E_σ for σ = (1 2)
        let v = Monomial::new(8).unwrap();
        let e = MonomialMatrix::permutation(Perm::from_one_line(&[2, 1]).unwrap());
        let w = MonomialMatrix::diagonal(vec![3, 5]);
        let w_swapped = MonomialMatrix::diagonal(vec![5, 3]);
        assert_eq!(v.compose(&e, &w).unwrap(), v.compose(&w_swapped, &e).unwrap());
    }

    #[test]
    fn dense_round_trip_and_rejections() {
        let f = MonomialMatrix { perm: Perm::from_one_line(&[3, 1, 2]).unwrap(), exps: vec![1, 0, 2] };
        assert_eq!(MonomialMatrix::from_dense(&f.to_dense(), 4).unwrap(), f);
        let not_monomial = vec![vec![Some(0), Some(0)], vec![None, None]];
        assert!(MonomialMatrix::from_dense(&not_monomial, 4).is_err());
    }

    #[test]
    fn inverse_is_conjugate_transpose() {
        let v = Monomial::new(4).unwrap();
        for f in v.morphisms_from(&2) {
            assert_eq!(v.compose(&v.inverse(&f).unwrap(), &f).unwrap(), v.id(&2));
        }
    }

    #[test]
    fn direct_operations_match_dense_matrices() {
        let v = Monomial::new(4).unwrap();
        let homs: Vec<MonomialMatrix> = v.morphisms_from(&2).into_iter().chain(v.morphisms_from(&1)).collect();
        for f in &homs {
            for g in &homs {
                let (a, b) = (f.to_dense(), g.to_dense());
                assert_eq!(v.oplus_mor(f, g).to_dense(), dense_block_diag(&a, &b));
                assert_eq!(v.otimes_mor(f, g).to_dense(), dense_kron(&a, &b, 4));
                if f.size() == g.size() {
                    assert_eq!(v.compose(g, f).unwrap().to_dense(), dense_mul(&b, &a, 4).unwrap());
                }
            }
        }
    }
}
