//! The category `𝓔G` of finite sets with morphisms in the wreath products
//! `G ≀ Σ_n`, for a finite abelian group `G`.
//!
//! A morphism `(z; σ)` sends point `i` to `σ(i)` and carries the label `z_p`
//! at target point `p`. Composition twists labels by the permutation:
//! `(z; σ) ∘ (w; τ) = (z_p · w_{σ⁻¹(p)}; στ)`.

use serde::{Deserialize, Serialize};

use crate::category::Bimonoidal;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::rig::{FiniteAbelianGroup, GroupElem, Pi0Rig, RigElem};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct WreathMor {
    pub labels: Vec<GroupElem>,
    pub perm: Perm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wreath {
    pub group: FiniteAbelianGroup,
}

impl Wreath {
    pub fn new(group: FiniteAbelianGroup) -> Self {
        Wreath { group }
    }

    pub fn plain(&self, perm: Perm) -> WreathMor {
        WreathMor { labels: vec![self.group.identity(); perm.len()], perm }
    }

    pub fn validate(&self, f: &WreathMor) -> Result<()> {
        if f.labels.len() != f.perm.len() {
            return Err(Error::Size(format!("{} labels for a permutation of {} points", f.labels.len(), f.perm.len())));
        }
        f.labels.iter().try_for_each(|g| self.group.validate(g))
    }
}

impl Bimonoidal for Wreath {
    type Obj = usize;
    type Mor = WreathMor;

    fn name(&self) -> String {
        format!("wreath:{}", self.group.key())
    }

    fn dom(&self, f: &WreathMor) -> usize {
        f.perm.len()
    }

    fn cod(&self, f: &WreathMor) -> usize {
        f.perm.len()
    }

    fn id(&self, a: &usize) -> WreathMor {
        self.plain(Perm::identity(*a))
    }

    fn compose(&self, g: &WreathMor, f: &WreathMor) -> Result<WreathMor> {
        if g.perm.len() != f.perm.len() {
            return Err(Error::mismatch(format!("cannot compose {:?} after {:?}", g, f)));
        }
        let g_inv = g.perm.inverse();
        let labels = (0..g.labels.len())
            .map(|p| self.group.op(&g.labels[p], &f.labels[g_inv.apply(p)]))
            .collect();
        Ok(WreathMor { labels, perm: g.perm.compose(&f.perm) })
    }

    fn inverse(&self, f: &WreathMor) -> Option<WreathMor> {
        // (z; σ)⁻¹ = (z⁻¹_{σ(i)}; σ⁻¹)
        let labels = (0..f.labels.len()).map(|i| self.group.inv(&f.labels[f.perm.apply(i)])).collect();
        Some(WreathMor { labels, perm: f.perm.inverse() })
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

    fn oplus_mor(&self, f: &WreathMor, g: &WreathMor) -> WreathMor {
        let mut labels = f.labels.clone();
        labels.extend(g.labels.iter().cloned());
        WreathMor { labels, perm: f.perm.block_sum(&g.perm) }
    }

    fn otimes(&self, a: &usize, b: &usize) -> usize {
        a * b
    }

    fn otimes_mor(&self, f: &WreathMor, g: &WreathMor) -> WreathMor {
        let labels = f.labels.iter().flat_map(|x| g.labels.iter().map(move |y| self.group.op(x, y))).collect();
        WreathMor { labels, perm: f.perm.grid_product(&g.perm) }
    }

    fn c_oplus(&self, a: &usize, b: &usize) -> WreathMor {
        self.plain(Perm::block_swap(*a, *b))
    }

    fn d_r(&self, a: &usize, b: &usize, c: &usize) -> WreathMor {
        self.plain(Perm::right_distributor(*a, *b, *c))
    }

    fn zeta(&self, a: &usize) -> Option<usize> {
        Some(*a)
    }

    fn zeta_mor(&self, f: &WreathMor) -> Option<WreathMor> {
        Some(WreathMor { labels: f.labels.iter().map(|g| self.group.inv(g)).collect(), perm: f.perm.clone() })
    }

    fn mu(&self, a: &usize, b: &usize) -> Option<WreathMor> {
        Some(self.plain(Perm::grid_transpose(*a, *b)))
    }

    fn beta(&self, a: &usize, b: &usize) -> Option<WreathMor> {
        Some(self.plain(Perm::grid_transpose(*a, *b)))
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

    fn morphisms_from(&self, a: &usize) -> Vec<WreathMor> {
        let elements = self.group.elements();
        let mut label_words: Vec<Vec<GroupElem>> = vec![Vec::new()];
        for _ in 0..*a {
            label_words = label_words
                .into_iter()
                .flat_map(|w| {
                    elements.iter().map(move |g| {
                        let mut v = w.clone();
                        v.push(g.clone());
                        v
                    })
                })
                .collect();
        }
        Perm::all(*a)
            .into_iter()
            .flat_map(|p| label_words.iter().map(move |z| WreathMor { labels: z.clone(), perm: p.clone() }))
            .collect()
    }

    fn parse_obj(&self, v: &serde_json::Value) -> Result<usize> {
        crate::category::from_json(v)
    }

    fn parse_mor(&self, v: &serde_json::Value) -> Result<WreathMor> {
        crate::category::from_json(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(r: u32) -> GroupElem {
        GroupElem(vec![r])
    }

    #[test]
    fn tensor_of_singletons_multiplies_labels() {
        let w = Wreath::new(FiniteAbelianGroup::cyclic(2));
        let f = WreathMor { labels: vec![g(1)], perm: Perm::identity(1) };
        let h = WreathMor { labels: vec![g(1)], perm: Perm::identity(1) };
        assert_eq!(w.otimes_mor(&f, &h), WreathMor { labels: vec![g(0)], perm: Perm::identity(1) });
    }

    #[test]
    fn hom_sizes_match_wreath_order() {
        for k in [2u32, 3] {
            let w = Wreath::new(FiniteAbelianGroup::cyclic(k));
            for n in 0..4usize {
                let expected = (k as usize).pow(n as u32) * (1..=n).product::<usize>();
                assert_eq!(w.morphisms_from(&n).len(), expected);
            }
        }
    }

    #[test]
    fn inverse_composes_to_identity() {
        let w = Wreath::new(FiniteAbelianGroup::cyclic(3));
        for f in w.morphisms_from(&3) {
            let inv = w.inverse(&f).unwrap();
            assert_eq!(w.compose(&inv, &f).unwrap(), w.id(&3));
            assert_eq!(w.compose(&f, &inv).unwrap(), w.id(&3));
        }
    }
}
