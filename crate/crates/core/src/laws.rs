//! The axioms of a strict bimonoidal category with `d_ℓ = id`, evaluated on
//! sampled objects and morphisms.

use serde::Serialize;

use crate::category::{Bimonoidal, BimonoidalExt};
use crate::check::{CheckConfig, CheckReport, Verdict};
use crate::error::Result;
use crate::sample::Sampler;

/// Compares two evaluated morphisms, propagating evaluation errors.
pub fn same<M: Serialize + PartialEq>(lhs: Result<M>, rhs: Result<M>) -> Result<Verdict> {
    Ok(Verdict::equal(&lhs?, &rhs?))
}

/// Checks that `f` runs from `dom` to `cod`.
pub fn typed<C: Bimonoidal + ?Sized>(cat: &C, f: &C::Mor, dom: &C::Obj, cod: &C::Obj) -> Verdict {
    Verdict::equal(&(cat.dom(f), cat.cod(f)), &(dom.clone(), cod.clone()))
}

/// `f⁻¹ ∘ f = id` and `f ∘ f⁻¹ = id`.
pub fn invertible<C: Bimonoidal + ?Sized>(cat: &C, f: &C::Mor) -> Result<Verdict> {
    let inv = cat.inverse_req(f)?;
    let there = cat.compose(&inv, f)?;
    let back = cat.compose(f, &inv)?;
    Ok(Verdict::equal(&(there, back), &(cat.id(&cat.dom(f)), cat.id(&cat.cod(f)))))
}

/// Pairs of composable paths of length two, `(f, g)` and `(f', g')`.
fn path_pairs<C: Bimonoidal>(s: &mut Sampler<'_, C>) -> Vec<(Vec<C::Mor>, Vec<C::Mor>)> {
    (0..s.count()).map(|_| (s.path(2), s.path(2))).collect()
}

pub fn check_bimonoidal_laws<C: Bimonoidal>(cat: &C, cfg: &CheckConfig) -> CheckReport {
    let spec = &cfg.spec;
    let mut report = CheckReport::new("bimonoidal", cat.name());
    let sampler = |law: &str| Sampler::new(cat, spec, law);

    // category
    let paths = sampler("compose.assoc").paths(3);
    report.push(cfg.law("compose.assoc", "(h ∘ g) ∘ f = h ∘ (g ∘ f)", &paths, |p| {
        let (f, g, h) = (&p[0], &p[1], &p[2]);
        same(cat.compose(&cat.compose(h, g)?, f), cat.compose(h, &cat.compose(g, f)?))
    }));
    let mors = sampler("compose.identity").morphism_tuples(1);
    report.push(cfg.law("compose.identity", "id ∘ f = f = f ∘ id", &mors, |m| {
        let f = &m[0];
        let left = cat.compose(&cat.id(&cat.cod(f)), f)?;
        let right = cat.compose(f, &cat.id(&cat.dom(f)))?;
        Ok(Verdict::equal(&(left, right), &(f.clone(), f.clone())))
    }));

    // ⊕ and ⊗ as strict monoidal structures
    for (tag, unit, op, op_mor) in [
        ("oplus", cat.zero(), C::oplus as fn(&C, &C::Obj, &C::Obj) -> C::Obj, C::oplus_mor as fn(&C, &C::Mor, &C::Mor) -> C::Mor),
        ("otimes", cat.one(), C::otimes, C::otimes_mor),
    ] {
        let sym = if tag == "oplus" { "⊕" } else { "⊗" };
        let objs = sampler(&format!("{}.unit.obj", tag)).object_tuples(1);
        report.push(cfg.law(&format!("{}.unit.obj", tag), &format!("U {} A = A = A {} U", sym, sym), &objs, |t| {
            let a = &t[0];
            Ok(Verdict::equal(&(op(cat, &unit, a), op(cat, a, &unit)), &(a.clone(), a.clone())))
        }));
        let triples = sampler(&format!("{}.assoc.obj", tag)).object_tuples(3);
        report.push(cfg.law(&format!("{}.assoc.obj", tag), &format!("(A {s} B) {s} C = A {s} (B {s} C)", s = sym), &triples, |t| {
            Ok(Verdict::equal(&op(cat, &op(cat, &t[0], &t[1]), &t[2]), &op(cat, &t[0], &op(cat, &t[1], &t[2]))))
        }));
        let mors = sampler(&format!("{}.unit.mor", tag)).morphism_tuples(1);
        let id_unit = cat.id(&unit);
        report.push(cfg.law(&format!("{}.unit.mor", tag), &format!("id_U {} f = f = f {} id_U", sym, sym), &mors, |m| {
            let f = &m[0];
            Ok(Verdict::equal(&(op_mor(cat, &id_unit, f), op_mor(cat, f, &id_unit)), &(f.clone(), f.clone())))
        }));
        let mors = sampler(&format!("{}.assoc.mor", tag)).morphism_tuples(3);
        report.push(cfg.law(&format!("{}.assoc.mor", tag), &format!("(f {s} g) {s} h = f {s} (g {s} h)", s = sym), &mors, |m| {
            Ok(Verdict::equal(
                &op_mor(cat, &op_mor(cat, &m[0], &m[1]), &m[2]),
                &op_mor(cat, &m[0], &op_mor(cat, &m[1], &m[2])),
            ))
        }));
        let mors = sampler(&format!("{}.typed", tag)).morphism_tuples(2);
        report.push(cfg.law(&format!("{}.typed", tag), &format!("f {s} g : dom f {s} dom g → cod f {s} cod g", s = sym), &mors, |m| {
            let (f, g) = (&m[0], &m[1]);
            let h = op_mor(cat, f, g);
            Ok(typed(cat, &h, &op(cat, &cat.dom(f), &cat.dom(g)), &op(cat, &cat.cod(f), &cat.cod(g))))
        }));
        let pairs = path_pairs(&mut sampler(&format!("{}.functor", tag)));
        report.push(cfg.law(
            &format!("{}.functor", tag),
            &format!("(g ∘ f) {s} (g' ∘ f') = (g {s} g') ∘ (f {s} f'); id {s} id = id", s = sym),
            &pairs,
            |(p, q)| {
                let lhs = op_mor(cat, &cat.compose(&p[1], &p[0])?, &cat.compose(&q[1], &q[0])?);
                let rhs = cat.compose(&op_mor(cat, &p[1], &q[1]), &op_mor(cat, &p[0], &q[0]))?;
                let (a, b) = (cat.dom(&p[0]), cat.dom(&q[0]));
                let ids = op_mor(cat, &cat.id(&a), &cat.id(&b));
                Ok(Verdict::equal(&(lhs, ids), &(rhs, cat.id(&op(cat, &a, &b)))))
            },
        ));
    }

    let zero = cat.zero();
    let objs = sampler("zero.absorbs.obj").object_tuples(1);
    report.push(cfg.law("zero.absorbs.obj", "0 ⊗ A = 0 = A ⊗ 0", &objs, |t| {
        Ok(Verdict::equal(&(cat.otimes(&zero, &t[0]), cat.otimes(&t[0], &zero)), &(zero.clone(), zero.clone())))
    }));
    let mors = sampler("zero.absorbs.mor").morphism_tuples(1);
    let id_zero = cat.id(&zero);
    report.push(cfg.law("zero.absorbs.mor", "id_0 ⊗ f = id_0 = f ⊗ id_0", &mors, |m| {
        Ok(Verdict::equal(
            &(cat.otimes_mor(&id_zero, &m[0]), cat.otimes_mor(&m[0], &id_zero)),
            &(id_zero.clone(), id_zero.clone()),
        ))
    }));

    // additive symmetry
    let pairs = sampler("c_oplus.typed").object_tuples(2);
    report.push(cfg.law("c_oplus.typed", "c_⊕^{A,B} : A ⊕ B → B ⊕ A", &pairs, |t| {
        let (a, b) = (&t[0], &t[1]);
        Ok(typed(cat, &cat.c_oplus(a, b), &cat.oplus(a, b), &cat.oplus(b, a)))
    }));
    let pairs = sampler("c_oplus.symmetry").object_tuples(2);
    report.push(cfg.law("c_oplus.symmetry", "c_⊕^{B,A} ∘ c_⊕^{A,B} = id", &pairs, |t| {
        let (a, b) = (&t[0], &t[1]);
        same(cat.compose(&cat.c_oplus(b, a), &cat.c_oplus(a, b)), Ok(cat.id(&cat.oplus(a, b))))
    }));
    let mors = sampler("c_oplus.natural").morphism_tuples(2);
    report.push(cfg.law("c_oplus.natural", "c_⊕ ∘ (f ⊕ g) = (g ⊕ f) ∘ c_⊕", &mors, |m| {
        let (f, g) = (&m[0], &m[1]);
        same(
            cat.compose(&cat.c_oplus(&cat.cod(f), &cat.cod(g)), &cat.oplus_mor(f, g)),
            cat.compose(&cat.oplus_mor(g, f), &cat.c_oplus(&cat.dom(f), &cat.dom(g))),
        )
    }));
    let objs = sampler("c_oplus.unit").object_tuples(1);
    report.push(cfg.law("c_oplus.unit", "c_⊕^{A,0} = id_A = c_⊕^{0,A}", &objs, |t| {
        let a = &t[0];
        Ok(Verdict::equal(&(cat.c_oplus(a, &zero), cat.c_oplus(&zero, a)), &(cat.id(a), cat.id(a))))
    }));
    let triples = sampler("c_oplus.hexagon").object_tuples(3);
    report.push(cfg.law("c_oplus.hexagon", "c_⊕^{A,B⊕C} = (id_B ⊕ c_⊕^{A,C}) ∘ (c_⊕^{A,B} ⊕ id_C)", &triples, |t| {
        let (a, b, c) = (&t[0], &t[1], &t[2]);
        same(
            Ok(cat.c_oplus(a, &cat.oplus(b, c))),
            cat.compose(
                &cat.oplus_mor(&cat.id(b), &cat.c_oplus(a, c)),
                &cat.oplus_mor(&cat.c_oplus(a, b), &cat.id(c)),
            ),
        )
    }));
    let triples = sampler("c_oplus.tensor_right").object_tuples(3);
    report.push(cfg.law("c_oplus.tensor_right", "c_⊕^{A⊗C,B⊗C} = c_⊕^{A,B} ⊗ id_C", &triples, |t| {
        let (a, b, c) = (&t[0], &t[1], &t[2]);
        Ok(Verdict::equal(
            &cat.c_oplus(&cat.otimes(a, c), &cat.otimes(b, c)),
            &cat.otimes_mor(&cat.c_oplus(a, b), &cat.id(c)),
        ))
    }));

    // left distributivity is the identity
    let triples = sampler("d_l.identity.obj").object_tuples(3);
    report.push(cfg.law("d_l.identity.obj", "A⊗B ⊕ A'⊗B = (A ⊕ A')⊗B", &triples, |t| {
        let (a, a2, b) = (&t[0], &t[1], &t[2]);
        Ok(Verdict::equal(&cat.oplus(&cat.otimes(a, b), &cat.otimes(a2, b)), &cat.otimes(&cat.oplus(a, a2), b)))
    }));
    let mors = sampler("d_l.identity.mor").morphism_tuples(3);
    report.push(cfg.law("d_l.identity.mor", "f⊗g ⊕ f'⊗g = (f ⊕ f')⊗g", &mors, |m| {
        let (f, f2, g) = (&m[0], &m[1], &m[2]);
        Ok(Verdict::equal(
            &cat.oplus_mor(&cat.otimes_mor(f, g), &cat.otimes_mor(f2, g)),
            &cat.otimes_mor(&cat.oplus_mor(f, f2), g),
        ))
    }));

    // right distributivity
    let triples = sampler("d_r.typed").object_tuples(3);
    report.push(cfg.law("d_r.typed", "d_r : A⊗B ⊕ A⊗C → A⊗(B ⊕ C)", &triples, |t| {
        let (a, b, c) = (&t[0], &t[1], &t[2]);
        Ok(typed(
            cat,
            &cat.d_r(a, b, c),
            &cat.oplus(&cat.otimes(a, b), &cat.otimes(a, c)),
            &cat.otimes(a, &cat.oplus(b, c)),
        ))
    }));
    let triples = sampler("d_r.invertible").object_tuples(3);
    report.push(cfg.law("d_r.invertible", "d_r⁻¹ ∘ d_r = id and d_r ∘ d_r⁻¹ = id", &triples, |t| {
        invertible(cat, &cat.d_r(&t[0], &t[1], &t[2]))
    }));
    let mors = sampler("d_r.natural").morphism_tuples(3);
    report.push(cfg.law("d_r.natural", "d_r ∘ (f⊗g ⊕ f⊗h) = (f⊗(g ⊕ h)) ∘ d_r", &mors, |m| {
        let (f, g, h) = (&m[0], &m[1], &m[2]);
        let before = cat.oplus_mor(&cat.otimes_mor(f, g), &cat.otimes_mor(f, h));
        let after = cat.otimes_mor(f, &cat.oplus_mor(g, h));
        same(
            cat.compose(&cat.d_r(&cat.cod(f), &cat.cod(g), &cat.cod(h)), &before),
            cat.compose(&after, &cat.d_r(&cat.dom(f), &cat.dom(g), &cat.dom(h))),
        )
    }));
    let one = cat.one();
    let pairs = sampler("d_r.units").object_tuples(2);
    report.push(cfg.law("d_r.units", "d_r(A, B, 0), d_r(A, 0, B), d_r(0, A, B), d_r(1, A, B) are identities", &pairs, |t| {
        let (a, b) = (&t[0], &t[1]);
        let got = [cat.d_r(a, b, &zero), cat.d_r(a, &zero, b), cat.d_r(&zero, a, b), cat.d_r(&one, a, b)];
        let want = [
            cat.id(&cat.otimes(a, b)),
            cat.id(&cat.otimes(a, b)),
            cat.id(&zero),
            cat.id(&cat.oplus(a, b)),
        ];
        Ok(Verdict::equal(&got.to_vec(), &want.to_vec()))
    }));
    let quads = sampler("d_r.oplus_assoc").object_tuples(4);
    report.push(cfg.law(
        "d_r.oplus_assoc",
        "d_r(A, B⊕C, D) ∘ (d_r(A, B, C) ⊕ id) = d_r(A, B, C⊕D) ∘ (id ⊕ d_r(A, C, D))",
        &quads,
        |t| {
            let (a, b, c, d) = (&t[0], &t[1], &t[2], &t[3]);
            same(
                cat.compose(
                    &cat.d_r(a, &cat.oplus(b, c), d),
                    &cat.oplus_mor(&cat.d_r(a, b, c), &cat.id(&cat.otimes(a, d))),
                ),
                cat.compose(
                    &cat.d_r(a, b, &cat.oplus(c, d)),
                    &cat.oplus_mor(&cat.id(&cat.otimes(a, b)), &cat.d_r(a, c, d)),
                ),
            )
        },
    ));
    let quads = sampler("d_r.otimes_assoc").object_tuples(4);
    report.push(cfg.law(
        "d_r.otimes_assoc",
        "d_r(A⊗A', B, C) = (id_A ⊗ d_r(A', B, C)) ∘ d_r(A, A'⊗B, A'⊗C)",
        &quads,
        |t| {
            let (a, a2, b, c) = (&t[0], &t[1], &t[2], &t[3]);
            same(
                Ok(cat.d_r(&cat.otimes(a, a2), b, c)),
                cat.compose(
                    &cat.otimes_mor(&cat.id(a), &cat.d_r(a2, b, c)),
                    &cat.d_r(a, &cat.otimes(a2, b), &cat.otimes(a2, c)),
                ),
            )
        },
    ));
    let quads = sampler("d_r.tensor_right").object_tuples(4);
    report.push(cfg.law("d_r.tensor_right", "d_r(A, B, B') ⊗ id_C = d_r(A, B⊗C, B'⊗C)", &quads, |t| {
        let (a, b, b2, c) = (&t[0], &t[1], &t[2], &t[3]);
        Ok(Verdict::equal(
            &cat.otimes_mor(&cat.d_r(a, b, b2), &cat.id(c)),
            &cat.d_r(a, &cat.otimes(b, c), &cat.otimes(b2, c)),
        ))
    }));
    let triples = sampler("d_r.c_oplus").object_tuples(3);
    report.push(cfg.law("d_r.c_oplus", "d_r(A, C, B) ∘ c_⊕^{A⊗B,A⊗C} = (id_A ⊗ c_⊕^{B,C}) ∘ d_r(A, B, C)", &triples, |t| {
        let (a, b, c) = (&t[0], &t[1], &t[2]);
        same(
            cat.compose(&cat.d_r(a, c, b), &cat.c_oplus(&cat.otimes(a, b), &cat.otimes(a, c))),
            cat.compose(&cat.otimes_mor(&cat.id(a), &cat.c_oplus(b, c)), &cat.d_r(a, b, c)),
        )
    }));
    let quads = sampler("d_r.left_sum").object_tuples(4);
    report.push(cfg.law(
        "d_r.left_sum",
        "d_r(A⊕A', B, C) = (d_r(A, B, C) ⊕ d_r(A', B, C)) ∘ (id ⊕ c_⊕^{A'⊗B,A⊗C} ⊕ id)",
        &quads,
        |t| {
            let (a, a2, b, c) = (&t[0], &t[1], &t[2], &t[3]);
            let middle = cat.oplus_mor(
                &cat.oplus_mor(&cat.id(&cat.otimes(a, b)), &cat.c_oplus(&cat.otimes(a2, b), &cat.otimes(a, c))),
                &cat.id(&cat.otimes(a2, c)),
            );
            same(
                Ok(cat.d_r(&cat.oplus(a, a2), b, c)),
                cat.compose(&cat.oplus_mor(&cat.d_r(a, b, c), &cat.d_r(a2, b, c)), &middle),
            )
        },
    ));

    // π₀ labels
    if let Some(rig) = cat.component_rig() {
        let pairs = sampler("component.homomorphism").object_tuples(2);
        report.push(cfg.law(
            "component.homomorphism",
            "[A ⊕ B] = [A] + [B] and [A ⊗ B] = [A]·[B]",
            &pairs,
            |t| {
                let (a, b) = (&t[0], &t[1]);
                let (ca, cb) = (cat.component_req(a)?, cat.component_req(b)?);
                Ok(Verdict::equal(
                    &(cat.component_req(&cat.oplus(a, b))?, cat.component_req(&cat.otimes(a, b))?),
                    &(rig.add(&ca, &cb)?, rig.mul(&ca, &cb)?),
                ))
            },
        ));
        let units = [(cat.zero(), rig.zero()), (cat.one(), rig.one())];
        report.push(cfg.law("component.units", "[0] = 0 and [1] = 1", &units, |(obj, want)| {
            Ok(Verdict::equal(&cat.component_req(obj)?, want))
        }));
        let mors = sampler("component.constant").morphism_tuples(1);
        report.push(cfg.law("component.constant", "[dom f] = [cod f]", &mors, |m| {
            Ok(Verdict::equal(&cat.component_req(&cat.dom(&m[0]))?, &cat.component_req(&cat.cod(&m[0]))?))
        }));
    }
    report
}
