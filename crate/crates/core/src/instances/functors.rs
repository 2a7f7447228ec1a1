//! Functors and group actions between the bundled instances.
//!
//! `F_k : 𝓔(ℤ/k) → 𝓥_k` sends `(z; σ)` to `diag(z)·E_σ`; the projection
//! `π : 𝓥_k → 𝓡_ℤ` forgets morphisms; `ℤ/2` acts on `𝓥_k` by complex
//! conjugation and on `𝓡_{ℤ[G]}` by `g ↦ g⁻¹`.

use crate::category::Bimonoidal;
use crate::error::{Error, Result};
use crate::instances::{Discrete, Monomial, MonomialMatrix, Wreath, WreathMor};
use crate::involution::{BimonoidalFunctor, GroupAction};
use crate::rig::{FiniteAbelianGroup, GroupElem, Pi0Rig, RigElem};

/// `F_k`: a wreath morphism `(z; σ)` over `ℤ/k` goes to `diag(z)·E_σ`.
pub struct WreathToMonomial {
    source: Wreath,
    target: Monomial,
}

pub fn functor_f(k: u32) -> Result<WreathToMonomial> {
    if k < 2 {
        return Err(Error::Invalid("F_k needs k ≥ 2".into()));
    }
    Ok(WreathToMonomial { source: Wreath::new(FiniteAbelianGroup::cyclic(k)), target: Monomial::new(k)? })
}

impl BimonoidalFunctor for WreathToMonomial {
    type Source = Wreath;
    type Target = Monomial;

    fn name(&self) -> String {
        format!("F:{}→{}", self.source.name(), self.target.name())
    }
    fn source(&self) -> &Wreath {
        &self.source
    }
    fn target(&self) -> &Monomial {
        &self.target
    }
    fn on_obj(&self, a: &usize) -> usize {
        *a
    }
    fn on_mor(&self, f: &WreathMor) -> MonomialMatrix {
        // column j carries the label of its target point σ(j)
        let exps = (0..f.perm.len()).map(|j| f.labels[f.perm.apply(j)].0[0]).collect();
        MonomialMatrix { perm: f.perm.clone(), exps }
    }
}

/// `π`: objects `𝐧 ↦ n`, every morphism collapses to an identity.
pub struct Projection {
    source: Monomial,
    target: Discrete,
}

pub fn projection_pi(k: u32) -> Result<Projection> {
    Ok(Projection { source: Monomial::new(k)?, target: Discrete::integers() })
}

impl BimonoidalFunctor for Projection {
    type Source = Monomial;
    type Target = Discrete;

    fn name(&self) -> String {
        format!("π:{}→{}", self.source.name(), self.target.name())
    }
    fn source(&self) -> &Monomial {
        &self.source
    }
    fn target(&self) -> &Discrete {
        &self.target
    }
    fn on_obj(&self, a: &usize) -> RigElem {
        RigElem::int(*a as i64)
    }
    fn on_mor(&self, f: &MonomialMatrix) -> RigElem {
        RigElem::int(f.size() as i64)
    }
}

/// Any group acting by identities.
#[derive(Clone, Debug)]
pub struct TrivialAction {
    pub group: FiniteAbelianGroup,
}

impl<C: Bimonoidal> GroupAction<C> for TrivialAction {
    fn name(&self) -> String {
        format!("trivial[{}]", self.group.key())
    }
    fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }
    fn act_obj(&self, _: &C, _: &GroupElem, a: &C::Obj) -> C::Obj {
        a.clone()
    }
    fn act_mor(&self, _: &C, _: &GroupElem, f: &C::Mor) -> C::Mor {
        f.clone()
    }
}

/// `ℤ/2` acting on `𝓥_k` by complex conjugation of entries.
#[derive(Clone, Debug)]
pub struct ConjugationAction {
    group: FiniteAbelianGroup,
}

pub fn conjugation_action() -> ConjugationAction {
    ConjugationAction { group: FiniteAbelianGroup::cyclic(2) }
}

impl GroupAction<Monomial> for ConjugationAction {
    fn name(&self) -> String {
        "conjugation".into()
    }
    fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }
    fn act_obj(&self, _: &Monomial, _: &GroupElem, a: &usize) -> usize {
        *a
    }
    fn act_mor(&self, cat: &Monomial, g: &GroupElem, f: &MonomialMatrix) -> MonomialMatrix {
        if g.0[0] == 0 {
            f.clone()
        } else {
            cat.conjugate(f)
        }
    }
}

/// `ℤ/2` acting on `𝓡_{ℤ[G]}` by the ring automorphism `g ↦ g⁻¹`.
#[derive(Clone, Debug)]
pub struct InversionAction {
    group: FiniteAbelianGroup,
    labels: FiniteAbelianGroup,
}

pub fn inversion_action(ring: &Discrete) -> Result<InversionAction> {
    match &ring.rig {
        Pi0Rig::GroupRing(g) => Ok(InversionAction { group: FiniteAbelianGroup::cyclic(2), labels: g.clone() }),
        other => Err(Error::capability(format!("g ↦ g⁻¹ needs a group ring, not {}", other.kind_name()))),
    }
}

impl GroupAction<Discrete> for InversionAction {
    fn name(&self) -> String {
        "inversion".into()
    }
    fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }
    fn act_obj(&self, _: &Discrete, g: &GroupElem, a: &RigElem) -> RigElem {
        match a {
            RigElem::Group(x) if g.0[0] == 1 => RigElem::Group(x.invert_group(&self.labels)),
            _ => a.clone(),
        }
    }
    fn act_mor(&self, cat: &Discrete, g: &GroupElem, f: &RigElem) -> RigElem {
        self.act_obj(cat, g, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::BimonoidalExt;
    use crate::check::CheckConfig;
    use crate::involution::{check_antiinv_morphism, check_closure, check_group_action, fixed_category};
    use crate::perm::Perm;
    use crate::sample::SampleSpec;

    #[test]
    fn f_sends_labels_to_diagonal_matrices() {
        let f = functor_f(4).unwrap();
        let m = f.on_mor(&WreathMor { labels: vec![GroupElem(vec![3])], perm: Perm::identity(1) });
        assert_eq!(m, MonomialMatrix::diagonal(vec![3]));
    }

    #[test]
    fn f_is_injective_and_functorial_on_small_homs() {
        let f = functor_f(2).unwrap();
        let (s, t) = (f.source(), f.target());
        let homs = s.morphisms_from(&2);
        assert_eq!(homs.len(), 8);
        let images: std::collections::HashSet<_> = homs.iter().map(|x| f.on_mor(x)).collect();
        assert_eq!(images.len(), 8);
        for x in &homs {
            for y in &homs {
                assert_eq!(f.on_mor(&s.compose(y, x).unwrap()), t.compose(&f.on_mor(y), &f.on_mor(x)).unwrap());
            }
        }
    }

    #[test]
    fn f_and_pi_are_morphisms_of_anti_involutions() {
        let cfg = CheckConfig::new(SampleSpec::new(3, 2, 150, 11));
        for k in [2, 4] {
            let report = check_antiinv_morphism(&functor_f(k).unwrap(), &cfg);
            assert!(report.passed(), "{:#?}", report.failing().collect::<Vec<_>>());
            let report = check_antiinv_morphism(&projection_pi(k).unwrap(), &cfg);
            assert!(report.passed(), "{:#?}", report.failing().collect::<Vec<_>>());
        }
    }

    #[test]
    fn conjugation_fixes_signed_permutations() {
        let cfg = CheckConfig::new(SampleSpec::new(3, 2, 150, 11));
        let v = Monomial::new(4).unwrap();
        let act = conjugation_action();
        let report = check_group_action(&act, &v, &cfg);
        assert!(report.passed(), "{:#?}", report.failing().collect::<Vec<_>>());
        let fixed = fixed_category(act, v.clone());
        for n in 0..=2 {
            let kept: Vec<_> = fixed.morphisms_from(&n);
            let signed: Vec<_> = v.morphisms_from(&n).into_iter().filter(|m| m.exps.iter().all(|&e| e % 2 == 0)).collect();
            assert_eq!(kept, signed);
        }
        let closure = check_closure(&fixed, &cfg);
        assert!(closure.passed(), "{:#?}", closure.failing().collect::<Vec<_>>());
        assert!(fixed.has_anti_involution());
    }

    #[test]
    fn inversion_fixes_the_symmetric_elements() {
        let cfg = CheckConfig::new(SampleSpec::new(2, 2, 150, 11));
        let ring = Discrete::group_ring(FiniteAbelianGroup::cyclic(3));
        let act = inversion_action(&ring).unwrap();
        let report = check_group_action(&act, &ring, &cfg);
        assert!(report.passed(), "{:#?}", report.failing().collect::<Vec<_>>());
        let fixed = fixed_category(act, ring);
        for x in fixed.objects_upto(2) {
            let RigElem::Group(e) = &x else { panic!() };
            assert_eq!(e.coeff(&GroupElem(vec![1])), e.coeff(&GroupElem(vec![2])));
        }
        assert!(inversion_action(&Discrete::integers()).is_err());
    }
}
