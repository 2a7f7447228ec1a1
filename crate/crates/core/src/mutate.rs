//! Single-point mutations of structure maps, each paired with the suite that
//! must reject it. A suite that still passes on its mutant is vacuous.

use serde::Serialize;

use crate::bar::{build_from_chain, validate_simplex, Simplex};
use crate::braided::check_braided_laws;
use crate::category::{Bimonoidal, Overlay};
use crate::check::{CheckConfig, CheckReport, Witness};
use crate::error::{Error, Result};
use crate::instances::{Discrete, FiniteSets, Wedge};
use crate::involution::{check_anti_involution, check_group_action, GroupAction};
use crate::laws::check_bimonoidal_laws;
use crate::matrices::{check_matrix_lemmas, mat_cod, mat_compose, mat_id, Matrix};
use crate::perm::Perm;
use crate::rig::{FiniteAbelianGroup, GroupElem, GroupRingElem, Pi0Rig, RigElem};

/// `𝓔` with `c_⊕(𝟏, 𝟏)` replaced by the identity of `𝟐`.
pub fn c_oplus_identity_on_units() -> Overlay<FiniteSets> {
    Overlay::new(FiniteSets, "finite-sets[c_⊕(1,1) := id]")
        .with_c_oplus(|c, a, b| Some(if (*a, *b) == (1, 1) { c.id(&2) } else { c.c_oplus(a, b) }))
}

/// Any instance with every `μ_{A,B}` replaced by `id_{ζ(A⊗B)}`.
pub fn mu_identity<C: Bimonoidal + 'static>(cat: C) -> Overlay<C> {
    let label = format!("{}[μ := id]", cat.name());
    Overlay::new(cat, label).with_mu(|c, a, b| c.zeta(&c.otimes(a, b)).map(|z| c.id(&z)))
}

/// `𝓔` with the braiding `β_{𝟐,𝟏}` replaced by the swap of `𝟐`.
pub fn beta_swapped_on_2_1() -> Overlay<FiniteSets> {
    Overlay::new(FiniteSets, "finite-sets[β(2,1) := swap]").with_beta(|c, a, b| {
        if (*a, *b) == (2, 1) {
            Perm::from_images(vec![1, 0]).ok()
        } else {
            c.beta(a, b)
        }
    })
}

/// Replaces `φ^{ijk}` by `u ∘ φ^{ijk}` for a non-identity automorphism `u`
/// of one entry of `A^{ik}`.
pub fn perturb_phi<C: Bimonoidal>(cat: &C, s: &Simplex<C>, (i, j, k): (usize, usize, usize)) -> Result<Simplex<C>> {
    let mut out = s.clone();
    let cell = out
        .phi
        .iter_mut()
        .find(|c| (c.i, c.j, c.k) == (i, j, k))
        .ok_or_else(|| Error::Invalid(format!("no φ^{{{},{},{}}}", i, j, k)))?;
    let target = mat_cod(cat, &cell.matrix);
    let mut auto = mat_id(cat, &target);
    let n = target.n();
    let found = (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).find_map(|(r, c)| {
        let x = target.get(r, c);
        let id = cat.id(x);
        cat.morphisms_from(x).into_iter().find(|f| cat.cod(f) == *x && *f != id).map(|f| (r, c, f))
    });
    let (r, c, f) = found.ok_or_else(|| Error::Invalid("A^{ik} has no non-identity automorphism".into()))?;
    auto.0[r][c] = f;
    cell.matrix = mat_compose(cat, &auto, &cell.matrix)?;
    Ok(out)
}

/// `ℤ/2` acting on `𝓡_{ℤ[G]}` by exchanging the coefficients of `e` and a
/// fixed `g`. Additive and involutive, but not multiplicative.
pub struct CoefficientSwap {
    group: FiniteAbelianGroup,
    labels: FiniteAbelianGroup,
    moved: GroupElem,
}

pub fn coefficient_swap(ring: &Discrete) -> Result<CoefficientSwap> {
    match &ring.rig {
        Pi0Rig::GroupRing(g) if g.order() > 1 => {
            let moved = g.elements().into_iter().find(|x| *x != g.identity()).expect("order > 1");
            Ok(CoefficientSwap { group: FiniteAbelianGroup::cyclic(2), labels: g.clone(), moved })
        }
        other => Err(Error::capability(format!("coefficient swap needs a nontrivial group ring, not {}", other.kind_name()))),
    }
}

impl GroupAction<Discrete> for CoefficientSwap {
    fn name(&self) -> String {
        "coefficient-swap".into()
    }
    fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }
    fn act_obj(&self, _: &Discrete, g: &GroupElem, a: &RigElem) -> RigElem {
        match a {
            RigElem::Group(x) if g.0[0] == 1 => {
                let e = self.labels.identity();
                RigElem::Group(GroupRingElem::from_terms(x.terms().map(|(h, c)| {
                    let h = if *h == e {
                        self.moved.clone()
                    } else if *h == self.moved {
                        e.clone()
                    } else {
                        h.clone()
                    };
                    (h, c.clone())
                })))
            }
            _ => a.clone(),
        }
    }
    fn act_mor(&self, cat: &Discrete, g: &GroupElem, f: &RigElem) -> RigElem {
        self.act_obj(cat, g, f)
    }
}

/// Outcome of running one mutant through its guarding suite.
#[derive(Clone, Debug, Serialize)]
pub struct MutationOutcome {
    pub mutation: String,
    pub suite: String,
    pub detected: bool,
    /// The first law that failed.
    pub law: Option<String>,
    pub witness: Option<Witness>,
}

fn outcome(mutation: &str, report: CheckReport) -> MutationOutcome {
    let first = report.failing().next();
    MutationOutcome {
        mutation: mutation.to_string(),
        suite: report.suite.clone(),
        detected: first.is_some(),
        law: first.map(|l| l.law.clone()),
        witness: first.and_then(|l| l.witness.clone()),
    }
}

/// Runs every documented mutation against the suite that guards it.
pub fn run_mutations(cfg: &CheckConfig) -> Vec<MutationOutcome> {
    let mut out = Vec::new();
    out.push(outcome("c_⊕(1,1) := id on finite-sets", check_bimonoidal_laws(&c_oplus_identity_on_units(), cfg)));
    let wedge = Wedge::new(FiniteAbelianGroup::cyclic(2));
    out.push(outcome("μ := id on wedge:2", check_anti_involution(&mu_identity(wedge), cfg)));
    out.push(outcome("μ := id on finite-sets (matrix level)", check_matrix_lemmas(&mu_identity(FiniteSets), cfg)));
    out.push(outcome("β(2,1) := swap on finite-sets", check_braided_laws(&beta_swapped_on_2_1(), cfg)));
    let ring = Discrete::group_ring(FiniteAbelianGroup::cyclic(3));
    let action = coefficient_swap(&ring).expect("group ring");
    out.push(outcome("φ_g not preserving ⊗ on discrete:Z[3]", check_group_action(&action, &ring, cfg)));
    out.push(phi_mutation());
    out
}

fn phi_mutation() -> MutationOutcome {
    let name = "φ^{013} composed with an automorphism on a chain simplex";
    let m = |rows: [[usize; 2]; 2]| Matrix(rows.iter().map(|r| r.to_vec()).collect());
    let chain = [m([[1, 1], [0, 1]]), m([[1, 0], [1, 1]]), m([[1, 1], [0, 1]])];
    let mutated = build_from_chain(&FiniteSets, &chain).and_then(|s| perturb_phi(&FiniteSets, &s, (0, 1, 3)));
    match mutated {
        Ok(s) => outcome(name, validate_simplex(&FiniteSets, &s)),
        Err(e) => MutationOutcome {
            mutation: name.to_string(),
            suite: "bar-simplex".into(),
            detected: false,
            law: None,
            witness: Some(Witness { inputs: serde_json::Value::Null, lhs: None, rhs: None, error: Some(e.to_string()) }),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::SampleSpec;

    #[test]
    fn every_mutation_is_detected() {
        let cfg = CheckConfig::new(SampleSpec::new(2, 2, 100, 42));
        let outcomes = run_mutations(&cfg);
        assert_eq!(outcomes.len(), 6);
        for o in &outcomes {
            assert!(o.detected, "{:?}", o);
            assert!(o.witness.is_some());
        }
        let c = &outcomes[0];
        assert!(c.law.as_deref().unwrap().starts_with("c_oplus"), "{:?}", c.law);
        let braided = check_braided_laws(&beta_swapped_on_2_1(), &cfg);
        assert!(!braided.law("beta.hexagon.right").unwrap().passed);
    }

    #[test]
    fn unmutated_counterparts_pass() {
        let cfg = CheckConfig::new(SampleSpec::new(2, 2, 100, 42));
        assert!(check_bimonoidal_laws(&FiniteSets, &cfg).passed());
        assert!(check_braided_laws(&FiniteSets, &cfg).passed());
        let ring = Discrete::group_ring(FiniteAbelianGroup::cyclic(3));
        let inv = crate::instances::functors::inversion_action(&ring).unwrap();
        assert!(check_group_action(&inv, &ring, &cfg).passed());
    }
}
