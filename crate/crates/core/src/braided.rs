//! Braided bimonoidal structure: the braiding axioms, the compatibility of
//! `d_r` with `β`, the derived diagram for `d_r ⊗ id`, the Yang–Baxter
//! identity and the anti-involution `ζ = id`, `μ = β`.

use serde::Serialize;

use crate::category::{Bimonoidal, BimonoidalExt, Overlay};
use crate::check::{CheckConfig, CheckReport, Verdict};
use crate::error::Result;
use crate::laws::{invertible, same, typed};
use crate::sample::Sampler;

pub fn check_braided_laws<C: Bimonoidal>(cat: &C, cfg: &CheckConfig) -> CheckReport {
    let mut report = CheckReport::new("braided", cat.name());
    let sampler = |law: &str| Sampler::new(cat, &cfg.spec, law);
    let b = |x: &C::Obj, y: &C::Obj| cat.beta_req(x, y);

    let pairs = sampler("beta.typed").object_tuples(2);
    report.push(cfg.law("beta.typed", "β_{A,B} : A ⊗ B → B ⊗ A, invertible", &pairs, |t| {
        let (x, y) = (&t[0], &t[1]);
        let beta = b(x, y)?;
        let shape = typed(cat, &beta, &cat.otimes(x, y), &cat.otimes(y, x));
        if !shape.passed() {
            return Ok(shape);
        }
        invertible(cat, &beta)
    }));
    let objs = sampler("beta.unit").object_tuples(1);
    let (zero, one) = (cat.zero(), cat.one());
    report.push(cfg.law("beta.unit", "β_{1,A} = id = β_{A,1} and β_{0,A} = id_0", &objs, |t| {
        let a = &t[0];
        Ok(Verdict::equal(
            &(b(&one, a)?, b(a, &one)?, b(&zero, a)?),
            &(cat.id(a), cat.id(a), cat.id(&zero)),
        ))
    }));
    let mors = sampler("beta.natural").morphism_tuples(2);
    report.push(cfg.law("beta.natural", "β_{A',B'} ∘ (f ⊗ g) = (g ⊗ f) ∘ β_{A,B}", &mors, |m| {
        let (f, g) = (&m[0], &m[1]);
        same(
            cat.compose(&b(&cat.cod(f), &cat.cod(g))?, &cat.otimes_mor(f, g)),
            cat.compose(&cat.otimes_mor(g, f), &b(&cat.dom(f), &cat.dom(g))?),
        )
    }));
    let triples = sampler("beta.hexagon.left").object_tuples(3);
    report.push(cfg.law(
        "beta.hexagon.left",
        "β_{A⊗B,C} = (β_{A,C} ⊗ id_B) ∘ (id_A ⊗ β_{B,C})",
        &triples,
        |t| {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            same(
                b(&cat.otimes(x, y), z),
                cat.compose(&cat.otimes_mor(&b(x, z)?, &cat.id(y)), &cat.otimes_mor(&cat.id(x), &b(y, z)?)),
            )
        },
    ));
    let triples = sampler("beta.hexagon.right").object_tuples(3);
    report.push(cfg.law(
        "beta.hexagon.right",
        "β_{A,B⊗C} = (id_B ⊗ β_{A,C}) ∘ (β_{A,B} ⊗ id_C)",
        &triples,
        |t| {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            same(
                b(x, &cat.otimes(y, z)),
                cat.compose(&cat.otimes_mor(&cat.id(y), &b(x, z)?), &cat.otimes_mor(&b(x, y)?, &cat.id(z))),
            )
        },
    ));
    let triples = sampler("beta.distrib.top").object_tuples(3);
    report.push(cfg.law("beta.distrib.top", "β_{A,B⊕C} ∘ d_r(A,B,C) = β_{A,B} ⊕ β_{A,C}", &triples, |t| {
        let (x, y, z) = (&t[0], &t[1], &t[2]);
        same(cat.compose(&b(x, &cat.oplus(y, z))?, &cat.d_r(x, y, z)), Ok(cat.oplus_mor(&b(x, y)?, &b(x, z)?)))
    }));
    let triples = sampler("beta.distrib.bottom").object_tuples(3);
    report.push(cfg.law("beta.distrib.bottom", "d_r(A,B,C) ∘ (β_{B,A} ⊕ β_{C,A}) = β_{B⊕C,A}", &triples, |t| {
        let (x, y, z) = (&t[0], &t[1], &t[2]);
        same(cat.compose(&cat.d_r(x, y, z), &cat.oplus_mor(&b(y, x)?, &b(z, x)?)), b(&cat.oplus(y, z), x))
    }));
    let triples = sampler("beta.distrib.double").object_tuples(3);
    report.push(cfg.law(
        "beta.distrib.double",
        "β_{A,B⊕C} ∘ β_{B⊕C,A} = (β_{A,B} ⊕ β_{A,C}) ∘ (β_{B,A} ⊕ β_{C,A})",
        &triples,
        |t| {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            let yz = cat.oplus(y, z);
            same(
                cat.compose(&b(x, &yz)?, &b(&yz, x)?),
                cat.compose(&cat.oplus_mor(&b(x, y)?, &b(x, z)?), &cat.oplus_mor(&b(y, x)?, &b(z, x)?)),
            )
        },
    ));
    report
}

/// Evaluates both composites of the square
/// `A⊗B⊗C ⊕ A⊗B'⊗C → A⊗(B⊕B')⊗C`: `d_r(A,B,B') ⊗ id_C` after `d_ℓ`, and
/// `id_A ⊗ d_ℓ` after `d_r(A, B⊗C, B'⊗C)`. Both `d_ℓ` are identities.
pub fn check_eq_e<C: Bimonoidal>(cat: &C, cfg: &CheckConfig) -> CheckReport {
    let mut report = CheckReport::new("d_r-tensor", cat.name());
    let quads = Sampler::new(cat, &cfg.spec, "d_r.tensor_square").object_tuples(4);
    report.push(cfg.law(
        "d_r.tensor_square",
        "(d_r(A,B,B') ⊗ id_C) ∘ d_ℓ = (id_A ⊗ d_ℓ) ∘ d_r(A, B⊗C, B'⊗C)",
        &quads,
        |t| {
            let (a, b, b2, c) = (&t[0], &t[1], &t[2], &t[3]);
            Ok(Verdict::equal(
                &cat.otimes_mor(&cat.d_r(a, b, b2), &cat.id(c)),
                &cat.d_r(a, &cat.otimes(b, c), &cat.otimes(b2, c)),
            ))
        },
    ));
    report
}

fn ybe_sides<C: Bimonoidal>(cat: &C, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<(C::Mor, C::Mor)> {
    let lhs = cat.compose(&cat.otimes_mor(&cat.id(c), &cat.beta_req(a, b)?), &cat.beta_req(&cat.otimes(a, b), c)?)?;
    let rhs = cat.compose(&cat.otimes_mor(&cat.beta_req(b, c)?, &cat.id(a)), &cat.beta_req(a, &cat.otimes(b, c))?)?;
    Ok((lhs, rhs))
}

/// `(id ⊗ β_{A,B}) ∘ β_{A⊗B,C} = (β_{B,C} ⊗ id) ∘ β_{A,B⊗C}` on sampled triples.
pub fn check_yang_baxter<C: Bimonoidal>(cat: &C, cfg: &CheckConfig) -> CheckReport {
    let mut report = CheckReport::new("yang-baxter", cat.name());
    let triples = Sampler::new(cat, &cfg.spec, "ybe.sampled").object_tuples(3);
    report.push(cfg.law("ybe.sampled", YBE, &triples, |t| {
        let (l, r) = ybe_sides(cat, &t[0], &t[1], &t[2])?;
        Ok(Verdict::equal(&l, &r))
    }));
    report
}

const YBE: &str = "(id ⊗ β_{A,B}) ∘ β_{A⊗B,C} = (β_{B,C} ⊗ id) ∘ β_{A,B⊗C}";

fn cube<T: Clone>(xs: &[T]) -> Vec<[T; 3]> {
    let mut out = Vec::with_capacity(xs.len().pow(3));
    for a in xs {
        for b in xs {
            for c in xs {
                out.push([a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    out
}

#[derive(Serialize)]
struct Decorated<O, M> {
    objects: [O; 3],
    pre: [M; 3],
    post: [M; 3],
}

/// The identity on every object triple up to `size`, and on the largest
/// size with both sides decorated: `(h'⊗g'⊗f') ∘ side ∘ (f⊗g⊗h)` for all
/// endomorphisms `f, g, h` before and `f', g', h'` after. In `𝓔` at size 2
/// this is `8 × 8 = 64` equations in `Σ₈`.
pub fn check_yang_baxter_exhaustive<C: Bimonoidal>(cat: &C, size: usize, cfg: &CheckConfig) -> CheckReport {
    let mut report = CheckReport::new("yang-baxter-exhaustive", cat.name());
    let objects = cat.objects_upto(size);
    let triples = cube(&objects);
    report.push(cfg.law("ybe.all_triples", YBE, &triples, |[a, b, c]| {
        let (l, r) = ybe_sides(cat, a, b, c)?;
        Ok(Verdict::equal(&l, &r))
    }));
    let smaller = if size == 0 { Vec::new() } else { cat.objects_upto(size - 1) };
    let top: Vec<C::Obj> = objects.iter().filter(|a| !smaller.contains(a)).cloned().collect();
    let mut decorated = Vec::new();
    for a in &top {
        let ends: Vec<C::Mor> = cat.morphisms_from(a).into_iter().filter(|f| cat.cod(f) == *a).collect();
        let dec = cube(&ends);
        for pre in &dec {
            for post in &dec {
                decorated.push(Decorated { objects: [a.clone(), a.clone(), a.clone()], pre: pre.clone(), post: post.clone() });
            }
        }
    }
    report.push(cfg.law("ybe.decorated", YBE, &decorated, |d| {
        let [a, b, c] = &d.objects;
        let (l, r) = ybe_sides(cat, a, b, c)?;
        let pre = cat.otimes_mor(&cat.otimes_mor(&d.pre[0], &d.pre[1]), &d.pre[2]);
        let post = cat.otimes_mor(&cat.otimes_mor(&d.post[2], &d.post[1]), &d.post[0]);
        let wrap = |side: &C::Mor| cat.compose(&post, &cat.compose(side, &pre)?);
        same(wrap(&l), wrap(&r))
    }));
    report
}

/// The anti-involution `ζ = id`, `μ = β` of a braided instance. Refuses,
/// returning the failing report, when the braided laws do not hold.
pub fn induced_anti_involution<C>(cat: C, cfg: &CheckConfig) -> std::result::Result<Overlay<C>, Box<CheckReport>>
where
    C: Bimonoidal + Clone + 'static,
{
    let report = check_braided_laws(&cat, cfg);
    if !report.passed() {
        return Err(Box::new(report));
    }
    let symmetric = cat.is_bipermutative();
    let label = format!("{}+ζ=id,μ=β", cat.name());
    Ok(Overlay::new(cat, label)
        .with_zeta(|_, a| Some(a.clone()), |_, f| Some(f.clone()))
        .with_mu(|c, a, b| c.beta(a, b))
        .with_bipermutative(symmetric))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{Bichar, Discrete, FiniteSets};
    use crate::involution::check_anti_involution;
    use crate::sample::SampleSpec;

    #[test]
    fn finite_sets_yang_baxter_has_64_decorated_equations() {
        let cfg = CheckConfig::new(SampleSpec::new(2, 2, 500, 42));
        let report = check_yang_baxter_exhaustive(&FiniteSets, 2, &cfg);
        assert!(report.passed());
        assert_eq!(report.law("ybe.decorated").unwrap().samples, 64);
        assert_eq!(report.law("ybe.all_triples").unwrap().samples, 27);
    }

    #[test]
    fn bichar_is_braided_and_induces_an_anti_involution() {
        let cfg = CheckConfig::new(SampleSpec::new(2, 2, 200, 4));
        for (k, q) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)] {
            let cat = Bichar::new(k, q).unwrap();
            for report in [check_braided_laws(&cat, &cfg), check_eq_e(&cat, &cfg), check_yang_baxter(&cat, &cfg)] {
                assert!(report.passed(), "{:#?}", report.failing().collect::<Vec<_>>());
            }
            let induced = induced_anti_involution(cat, &cfg).unwrap();
            let report = check_anti_involution(&induced, &cfg);
            assert!(report.passed(), "{:#?}", report.failing().collect::<Vec<_>>());
        }
    }

    #[test]
    fn discrete_integers_induce_identities() {
        let cfg = CheckConfig::new(SampleSpec::new(2, 2, 50, 4));
        let induced = induced_anti_involution(Discrete::integers(), &cfg).unwrap();
        let a = crate::rig::RigElem::int(2);
        assert_eq!(induced.mu(&a, &a), Some(crate::rig::RigElem::int(4)));
    }
}
