//! `bichar:k:q`: `ℤ/k`-graded lines with the bicharacter braiding.
//!
//! An object is a word of degrees in `ℤ/k`, standing for a direct sum of
//! one-dimensional graded spaces. A morphism is a degree-preserving
//! bijection of the summands scaled by `k`-th roots of unity, stored as
//! exponents at target positions. `⊗` forms the lexicographic grid with
//! degrees added, and the braiding `β_{A,B}` moves summand `(i, j)` of `A⊗B`
//! to `(j, i)` of `B⊗A` with the scalar `ω^{q·a_i·b_j}`. The braiding is
//! symmetric exactly when `k` divides `2q`.

use serde::{Deserialize, Serialize};

use crate::category::Bimonoidal;
use crate::error::{Error, Result};
use crate::instances::wedge::{permute_word, words_upto};
use crate::perm::Perm;
use crate::rig::{FiniteAbelianGroup, GroupElem, GroupRingElem, Pi0Rig, RigElem};

pub type DegreeWord = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BicharMor {
    pub dom: DegreeWord,
    pub perm: Perm,
    /// Exponent of the scalar at each target position.
    pub labels: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bichar {
    pub k: u32,
    pub q: u32,
}

impl Bichar {
    pub fn new(k: u32, q: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Invalid("the grading group needs a positive order".into()));
        }
        Ok(Bichar { k, q: q % k })
    }

    pub fn is_symmetric(&self) -> bool {
        (2 * self.q) % self.k == 0
    }

    fn plain(&self, dom: DegreeWord, perm: Perm) -> BicharMor {
        BicharMor { labels: vec![0; dom.len()], dom, perm }
    }
}

impl Bimonoidal for Bichar {
    type Obj = DegreeWord;
    type Mor = BicharMor;

    fn name(&self) -> String {
        format!("bichar:{}:{}", self.k, self.q)
    }

    fn is_bipermutative(&self) -> bool {
        self.is_symmetric()
    }

    fn dom(&self, f: &BicharMor) -> DegreeWord {
        f.dom.clone()
    }

    fn cod(&self, f: &BicharMor) -> DegreeWord {
        permute_word(&f.dom, &f.perm)
    }

    fn id(&self, a: &DegreeWord) -> BicharMor {
        self.plain(a.clone(), Perm::identity(a.len()))
    }

    fn compose(&self, g: &BicharMor, f: &BicharMor) -> Result<BicharMor> {
        if self.cod(f) != g.dom {
            return Err(Error::mismatch(format!("cannot compose {:?} after {:?}", g, f)));
        }
        let g_inv = g.perm.inverse();
        let labels = (0..g.labels.len()).map(|p| (g.labels[p] + f.labels[g_inv.apply(p)]) % self.k).collect();
        Ok(BicharMor { dom: f.dom.clone(), perm: g.perm.compose(&f.perm), labels })
    }

    fn inverse(&self, f: &BicharMor) -> Option<BicharMor> {
        let labels = (0..f.labels.len()).map(|i| (self.k - f.labels[f.perm.apply(i)]) % self.k).collect();
        Some(BicharMor { dom: self.cod(f), perm: f.perm.inverse(), labels })
    }

    fn zero(&self) -> DegreeWord {
        Vec::new()
    }

    fn one(&self) -> DegreeWord {
        vec![0]
    }

    fn oplus(&self, a: &DegreeWord, b: &DegreeWord) -> DegreeWord {
        [a.as_slice(), b.as_slice()].concat()
    }

    fn oplus_mor(&self, f: &BicharMor, g: &BicharMor) -> BicharMor {
        BicharMor {
            dom: self.oplus(&f.dom, &g.dom),
            perm: f.perm.block_sum(&g.perm),
            labels: [f.labels.as_slice(), g.labels.as_slice()].concat(),
        }
    }

    fn otimes(&self, a: &DegreeWord, b: &DegreeWord) -> DegreeWord {
        a.iter().flat_map(|x| b.iter().map(move |y| (x + y) % self.k)).collect()
    }

    fn otimes_mor(&self, f: &BicharMor, g: &BicharMor) -> BicharMor {
        BicharMor {
            dom: self.otimes(&f.dom, &g.dom),
            perm: f.perm.grid_product(&g.perm),
            labels: f.labels.iter().flat_map(|x| g.labels.iter().map(move |y| (x + y) % self.k)).collect(),
        }
    }

    fn c_oplus(&self, a: &DegreeWord, b: &DegreeWord) -> BicharMor {
        self.plain(self.oplus(a, b), Perm::block_swap(a.len(), b.len()))
    }

    fn d_r(&self, a: &DegreeWord, b: &DegreeWord, c: &DegreeWord) -> BicharMor {
        let dom = self.oplus(&self.otimes(a, b), &self.otimes(a, c));
        self.plain(dom, Perm::right_distributor(a.len(), b.len(), c.len()))
    }

    fn beta(&self, a: &DegreeWord, b: &DegreeWord) -> Option<BicharMor> {
        let (n, m) = (a.len(), b.len());
        let mut labels = vec![0; n * m];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                labels[j * n + i] = ((self.q as u64 * *x as u64 * *y as u64) % self.k as u64) as u32;
            }
        }
        Some(BicharMor { dom: self.otimes(a, b), perm: Perm::grid_transpose(n, m), labels })
    }

    fn component(&self, a: &DegreeWord) -> Option<RigElem> {
        Some(RigElem::Group(GroupRingElem::from_terms(a.iter().map(|&d| (GroupElem(vec![d]), 1.into())))))
    }

    fn component_rig(&self) -> Option<Pi0Rig> {
        Some(Pi0Rig::GroupRig(FiniteAbelianGroup::cyclic(self.k)))
    }

    fn objects_upto(&self, size: usize) -> Vec<DegreeWord> {
        words_upto(&(0..self.k).collect::<Vec<_>>(), size)
    }

    fn morphisms_from(&self, a: &DegreeWord) -> Vec<BicharMor> {
        let n = a.len();
        let label_words = words_upto(&(0..self.k).collect::<Vec<_>>(), n);
        let label_words: Vec<Vec<u32>> = label_words.into_iter().filter(|w| w.len() == n).collect();
        Perm::all(n)
            .into_iter()
            .flat_map(|p| {
                label_words.iter().map(move |z| BicharMor { dom: a.clone(), perm: p.clone(), labels: z.clone() })
            })
            .collect()
    }

    fn parse_obj(&self, v: &serde_json::Value) -> Result<DegreeWord> {
        crate::category::from_json(v)
    }

    fn parse_mor(&self, v: &serde_json::Value) -> Result<BicharMor> {
        crate::category::from_json(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braiding_scalar_is_bicharacter() {
        let b = Bichar::new(3, 1).unwrap();
        let beta = b.beta(&vec![1], &vec![2]).unwrap();
        assert_eq!(beta.labels, vec![2]);
        let back = b.beta(&vec![2], &vec![1]).unwrap();
        let twice = b.compose(&back, &beta).unwrap();
        assert_eq!(twice.labels, vec![1]);
        assert!(!b.is_symmetric());
        assert!(Bichar::new(2, 1).unwrap().is_symmetric());
        assert!(Bichar::new(4, 2).unwrap().is_symmetric());
    }
}
