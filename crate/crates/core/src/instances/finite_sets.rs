//! The bipermutative category of finite sets `𝐧 = {1..n}` and permutations.

use crate::category::Bimonoidal;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::rig::{Pi0Rig, RigElem};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FiniteSets;

impl Bimonoidal for FiniteSets {
    type Obj = usize;
    type Mor = Perm;

    fn name(&self) -> String {
        "finite-sets".into()
    }

    fn dom(&self, f: &Perm) -> usize {
        f.len()
    }

    fn cod(&self, f: &Perm) -> usize {
        f.len()
    }

    fn id(&self, a: &usize) -> Perm {
        Perm::identity(*a)
    }

    fn compose(&self, g: &Perm, f: &Perm) -> Result<Perm> {
        if g.len() != f.len() {
            return Err(Error::mismatch(format!("cannot compose {:?} after {:?}", g, f)));
        }
        Ok(g.compose(f))
    }

    fn inverse(&self, f: &Perm) -> Option<Perm> {
        Some(f.inverse())
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

    fn oplus_mor(&self, f: &Perm, g: &Perm) -> Perm {
        f.block_sum(g)
    }

    fn otimes(&self, a: &usize, b: &usize) -> usize {
        a * b
    }

    fn otimes_mor(&self, f: &Perm, g: &Perm) -> Perm {
        f.grid_product(g)
    }

    fn c_oplus(&self, a: &usize, b: &usize) -> Perm {
        Perm::block_swap(*a, *b)
    }

    fn d_r(&self, a: &usize, b: &usize, c: &usize) -> Perm {
        Perm::right_distributor(*a, *b, *c)
    }

    fn zeta(&self, a: &usize) -> Option<usize> {
        Some(*a)
    }

    fn zeta_mor(&self, f: &Perm) -> Option<Perm> {
        Some(f.clone())
    }

    fn mu(&self, a: &usize, b: &usize) -> Option<Perm> {
        Some(Perm::grid_transpose(*a, *b))
    }

    fn beta(&self, a: &usize, b: &usize) -> Option<Perm> {
        Some(Perm::grid_transpose(*a, *b))
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

    fn morphisms_from(&self, a: &usize) -> Vec<Perm> {
        Perm::all(*a)
    }

    fn parse_obj(&self, v: &serde_json::Value) -> Result<usize> {
        crate::category::from_json(v)
    }

    fn parse_mor(&self, v: &serde_json::Value) -> Result<Perm> {
        crate::category::from_json(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Relabels the grid `{0..n} × {0..m}` by hand: `(i, j)` sits at `i·m + j`
    /// in `n ⊗ m` and at `j·n + i` in `m ⊗ n`.
    fn grid_relabel(n: usize, m: usize) -> Vec<usize> {
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
        let target: Vec<(usize, usize)> = (0..m).flat_map(|j| (0..n).map(move |i| (i, j))).collect();
        cells.iter().map(|c| target.iter().position(|t| t == c).unwrap()).collect()
    }

    #[test]
    fn c_otimes_is_grid_transpose() {
        let e = FiniteSets;
        assert_eq!(e.mu(&2, &2).unwrap().one_line(), vec![1, 3, 2, 4]);
        for n in 0..4 {
            for m in 0..4 {
                assert_eq!(e.beta(&n, &m).unwrap().images(), grid_relabel(n, m).as_slice());
            }
        }
    }

    #[test]
    fn components_are_sizes() {
        assert_eq!(FiniteSets.component(&3), Some(RigElem::int(3)));
    }
}
