//! `∨_G𝓔`: finite sets whose points carry labels in a finite abelian group
//! `G`, with label-preserving bijections.
//!
//! An object is a word of labels; `𝐧_g` is the constant word of length `n`.
//! `⊕` concatenates, `⊗` forms the lexicographic grid with labels multiplied,
//! `ζ` inverts every label and `μ` is the grid transpose. Path components
//! are the multisets of labels, i.e. `ℕ₀[G]`.
//!
//! [`WedgeLiteral`] keeps only the constant words and sends the sum of
//! differently labelled objects to `0`; its `⊕` is not associative, and the
//! law suites report that.

use serde::{Deserialize, Serialize};

use crate::category::Bimonoidal;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::rig::{FiniteAbelianGroup, GroupElem, GroupRingElem, Pi0Rig, RigElem};

pub type LabelWord = Vec<GroupElem>;

/// A bijection out of a labelled set; the codomain carries the permuted
/// labels, `cod[σ(i)] = dom[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct WedgeMor {
    pub dom: LabelWord,
    pub perm: Perm,
}

pub fn permute_word<T: Clone>(word: &[T], perm: &Perm) -> Vec<T> {
    let mut out = word.to_vec();
    for (i, x) in word.iter().enumerate() {
        out[perm.apply(i)] = x.clone();
    }
    out
}

pub(crate) fn words_upto<T: Clone>(alphabet: &[T], size: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..size {
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |x| {
                    let mut v = w.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wedge {
    pub group: FiniteAbelianGroup,
}

impl Wedge {
    pub fn new(group: FiniteAbelianGroup) -> Self {
        Wedge { group }
    }

    /// `𝐧_g`.
    pub fn constant(&self, n: usize, g: &GroupElem) -> LabelWord {
        vec![g.clone(); n]
    }

    fn tensor_word(&self, a: &[GroupElem], b: &[GroupElem]) -> LabelWord {
        a.iter().flat_map(|x| b.iter().map(move |y| self.group.op(x, y))).collect()
    }

    fn plain(&self, dom: LabelWord, perm: Perm) -> WedgeMor {
        WedgeMor { dom, perm }
    }
}

impl Bimonoidal for Wedge {
    type Obj = LabelWord;
    type Mor = WedgeMor;

    fn name(&self) -> String {
        format!("wedge:{}", self.group.key())
    }

    fn dom(&self, f: &WedgeMor) -> LabelWord {
        f.dom.clone()
    }

    fn cod(&self, f: &WedgeMor) -> LabelWord {
        permute_word(&f.dom, &f.perm)
    }

    fn id(&self, a: &LabelWord) -> WedgeMor {
        self.plain(a.clone(), Perm::identity(a.len()))
    }

    fn compose(&self, g: &WedgeMor, f: &WedgeMor) -> Result<WedgeMor> {
        if self.cod(f) != g.dom {
            return Err(Error::mismatch(format!("cannot compose {:?} after {:?}", g, f)));
        }
        Ok(self.plain(f.dom.clone(), g.perm.compose(&f.perm)))
    }

    fn inverse(&self, f: &WedgeMor) -> Option<WedgeMor> {
        Some(self.plain(self.cod(f), f.perm.inverse()))
    }

    fn zero(&self) -> LabelWord {
        Vec::new()
    }

    fn one(&self) -> LabelWord {
        vec![self.group.identity()]
    }

    fn oplus(&self, a: &LabelWord, b: &LabelWord) -> LabelWord {
        [a.as_slice(), b.as_slice()].concat()
    }

    fn oplus_mor(&self, f: &WedgeMor, g: &WedgeMor) -> WedgeMor {
        self.plain(self.oplus(&f.dom, &g.dom), f.perm.block_sum(&g.perm))
    }

    fn otimes(&self, a: &LabelWord, b: &LabelWord) -> LabelWord {
        self.tensor_word(a, b)
    }

    fn otimes_mor(&self, f: &WedgeMor, g: &WedgeMor) -> WedgeMor {
        self.plain(self.tensor_word(&f.dom, &g.dom), f.perm.grid_product(&g.perm))
    }

    fn c_oplus(&self, a: &LabelWord, b: &LabelWord) -> WedgeMor {
        self.plain(self.oplus(a, b), Perm::block_swap(a.len(), b.len()))
    }

    fn d_r(&self, a: &LabelWord, b: &LabelWord, c: &LabelWord) -> WedgeMor {
        let dom = self.oplus(&self.otimes(a, b), &self.otimes(a, c));
        self.plain(dom, Perm::right_distributor(a.len(), b.len(), c.len()))
    }

    fn zeta(&self, a: &LabelWord) -> Option<LabelWord> {
        Some(a.iter().map(|g| self.group.inv(g)).collect())
    }

    fn zeta_mor(&self, f: &WedgeMor) -> Option<WedgeMor> {
        Some(self.plain(self.zeta(&f.dom)?, f.perm.clone()))
    }

    fn mu(&self, a: &LabelWord, b: &LabelWord) -> Option<WedgeMor> {
        Some(self.plain(self.zeta(&self.otimes(a, b))?, Perm::grid_transpose(a.len(), b.len())))
    }

    fn beta(&self, a: &LabelWord, b: &LabelWord) -> Option<WedgeMor> {
        Some(self.plain(self.otimes(a, b), Perm::grid_transpose(a.len(), b.len())))
    }

    fn component(&self, a: &LabelWord) -> Option<RigElem> {
        Some(RigElem::Group(GroupRingElem::from_terms(a.iter().map(|g| (g.clone(), 1.into())))))
    }

    fn component_rig(&self) -> Option<Pi0Rig> {
        Some(Pi0Rig::GroupRig(self.group.clone()))
    }

    fn is_bipermutative(&self) -> bool {
        true
    }

    fn objects_upto(&self, size: usize) -> Vec<LabelWord> {
        words_upto(&self.group.elements(), size)
    }

    fn morphisms_from(&self, a: &LabelWord) -> Vec<WedgeMor> {
        Perm::all(a.len()).into_iter().map(|p| self.plain(a.clone(), p)).collect()
    }

    fn parse_obj(&self, v: &serde_json::Value) -> Result<LabelWord> {
        crate::category::from_json(v)
    }

    fn parse_mor(&self, v: &serde_json::Value) -> Result<WedgeMor> {
        crate::category::from_json(v)
    }
}

/// An object of [`WedgeLiteral`]: `0` or `𝐧_g` with `n ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LiteralObj {
    Zero,
    Labelled { n: usize, g: GroupElem },
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct LiteralMor {
    pub obj: LiteralObj,
    pub perm: Perm,
}

/// Constant-label objects only, with `𝐧_g ⊕ 𝐦_h = 0` for `g ≠ h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeLiteral {
    pub group: FiniteAbelianGroup,
}

impl WedgeLiteral {
    pub fn new(group: FiniteAbelianGroup) -> Self {
        WedgeLiteral { group }
    }

    fn size(a: &LiteralObj) -> usize {
        match a {
            LiteralObj::Zero => 0,
            LiteralObj::Labelled { n, .. } => *n,
        }
    }

    fn labelled(n: usize, g: GroupElem) -> LiteralObj {
        if n == 0 {
            LiteralObj::Zero
        } else {
            LiteralObj::Labelled { n, g }
        }
    }

    fn mor(obj: LiteralObj, perm: Perm) -> LiteralMor {
        LiteralMor { obj, perm }
    }
}

impl Bimonoidal for WedgeLiteral {
    type Obj = LiteralObj;
    type Mor = LiteralMor;

    fn name(&self) -> String {
        format!("wedge-literal:{}", self.group.key())
    }

    fn dom(&self, f: &LiteralMor) -> LiteralObj {
        f.obj.clone()
    }

    fn cod(&self, f: &LiteralMor) -> LiteralObj {
        f.obj.clone()
    }

    fn id(&self, a: &LiteralObj) -> LiteralMor {
        Self::mor(a.clone(), Perm::identity(Self::size(a)))
    }

    fn compose(&self, g: &LiteralMor, f: &LiteralMor) -> Result<LiteralMor> {
        if g.obj != f.obj {
            return Err(Error::mismatch(format!("cannot compose {:?} after {:?}", g, f)));
        }
        Ok(Self::mor(f.obj.clone(), g.perm.compose(&f.perm)))
    }

    fn inverse(&self, f: &LiteralMor) -> Option<LiteralMor> {
        Some(Self::mor(f.obj.clone(), f.perm.inverse()))
    }

    fn zero(&self) -> LiteralObj {
        LiteralObj::Zero
    }

    fn one(&self) -> LiteralObj {
        LiteralObj::Labelled { n: 1, g: self.group.identity() }
    }

    fn oplus(&self, a: &LiteralObj, b: &LiteralObj) -> LiteralObj {
        match (a, b) {
            (LiteralObj::Zero, x) | (x, LiteralObj::Zero) => x.clone(),
            (LiteralObj::Labelled { n, g }, LiteralObj::Labelled { n: m, g: h }) if g == h => {
                Self::labelled(n + m, g.clone())
            }
            _ => LiteralObj::Zero,
        }
    }

    fn oplus_mor(&self, f: &LiteralMor, g: &LiteralMor) -> LiteralMor {
        let obj = self.oplus(&f.obj, &g.obj);
        if Self::size(&obj) == f.perm.len() + g.perm.len() {
            Self::mor(obj, f.perm.block_sum(&g.perm))
        } else {
            self.id(&obj)
        }
    }

    fn otimes(&self, a: &LiteralObj, b: &LiteralObj) -> LiteralObj {
        match (a, b) {
            (LiteralObj::Labelled { n, g }, LiteralObj::Labelled { n: m, g: h }) => {
                Self::labelled(n * m, self.group.op(g, h))
            }
            _ => LiteralObj::Zero,
        }
    }

    fn otimes_mor(&self, f: &LiteralMor, g: &LiteralMor) -> LiteralMor {
        Self::mor(self.otimes(&f.obj, &g.obj), f.perm.grid_product(&g.perm))
    }

    fn c_oplus(&self, a: &LiteralObj, b: &LiteralObj) -> LiteralMor {
        let obj = self.oplus(a, b);
        if Self::size(&obj) == Self::size(a) + Self::size(b) {
            Self::mor(obj, Perm::block_swap(Self::size(a), Self::size(b)))
        } else {
            self.id(&obj)
        }
    }

    fn d_r(&self, a: &LiteralObj, b: &LiteralObj, c: &LiteralObj) -> LiteralMor {
        let dom = self.oplus(&self.otimes(a, b), &self.otimes(a, c));
        let (na, nb, nc) = (Self::size(a), Self::size(b), Self::size(c));
        if Self::size(&dom) == na * (nb + nc) {
            Self::mor(dom, Perm::right_distributor(na, nb, nc))
        } else {
            self.id(&dom)
        }
    }

    fn zeta(&self, a: &LiteralObj) -> Option<LiteralObj> {
        Some(match a {
            LiteralObj::Zero => LiteralObj::Zero,
            LiteralObj::Labelled { n, g } => LiteralObj::Labelled { n: *n, g: self.group.inv(g) },
        })
    }

    fn zeta_mor(&self, f: &LiteralMor) -> Option<LiteralMor> {
        Some(Self::mor(self.zeta(&f.obj)?, f.perm.clone()))
    }

    fn mu(&self, a: &LiteralObj, b: &LiteralObj) -> Option<LiteralMor> {
        Some(Self::mor(self.zeta(&self.otimes(a, b))?, Perm::grid_transpose(Self::size(a), Self::size(b))))
    }

    fn component(&self, a: &LiteralObj) -> Option<RigElem> {
        Some(RigElem::Group(match a {
            LiteralObj::Zero => GroupRingElem::zero(),
            LiteralObj::Labelled { n, g } => GroupRingElem::term(g.clone(), (*n).into()),
        }))
    }

    fn component_rig(&self) -> Option<Pi0Rig> {
        Some(Pi0Rig::GroupRig(self.group.clone()))
    }

    fn objects_upto(&self, size: usize) -> Vec<LiteralObj> {
        let mut out = vec![LiteralObj::Zero];
        for g in self.group.elements() {
            out.extend((1..=size).map(|n| LiteralObj::Labelled { n, g: g.clone() }));
        }
        out
    }

    fn morphisms_from(&self, a: &LiteralObj) -> Vec<LiteralMor> {
        Perm::all(Self::size(a)).into_iter().map(|p| Self::mor(a.clone(), p)).collect()
    }

    fn parse_obj(&self, v: &serde_json::Value) -> Result<LiteralObj> {
        crate::category::from_json(v)
    }

    fn parse_mor(&self, v: &serde_json::Value) -> Result<LiteralMor> {
        crate::category::from_json(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_words_multiply_labels() {
        let w = Wedge::new(FiniteAbelianGroup::cyclic(3));
        let (g1, g2) = (GroupElem(vec![1]), GroupElem(vec![2]));
        assert_eq!(w.otimes(&w.constant(2, &g1), &w.constant(3, &g1)), w.constant(6, &g2));
        assert_eq!(w.zeta(&w.constant(2, &g1)).unwrap(), w.constant(2, &g2));
        let label = w.component(&w.oplus(&w.constant(2, &g1), &w.constant(1, &g2))).unwrap();
        assert_eq!(
            label,
            RigElem::Group(GroupRingElem::from_terms([(g1, 2.into()), (g2, 1.into())]))
        );
    }

    #[test]
    fn literal_sum_of_different_labels_is_zero() {
        let w = WedgeLiteral::new(FiniteAbelianGroup::cyclic(3));
        let a = LiteralObj::Labelled { n: 2, g: GroupElem(vec![1]) };
        let b = LiteralObj::Labelled { n: 1, g: GroupElem(vec![2]) };
        assert_eq!(w.oplus(&a, &b), LiteralObj::Zero);
        // and hence ⊕ is not associative
        let c = LiteralObj::Labelled { n: 1, g: GroupElem(vec![2]) };
        assert_ne!(w.oplus(&w.oplus(&a, &b), &c), w.oplus(&a, &w.oplus(&b, &c)));
    }

    #[test]
    fn codomain_carries_permuted_labels() {
        let w = Wedge::new(FiniteAbelianGroup::cyclic(2));
        let word = vec![GroupElem(vec![0]), GroupElem(vec![1])];
        let swap = w.c_oplus(&word[..1].to_vec(), &word[1..].to_vec());
        assert_eq!(w.cod(&swap), vec![GroupElem(vec![1]), GroupElem(vec![0])]);
    }
}
