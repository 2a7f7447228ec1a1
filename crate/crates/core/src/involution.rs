//! Anti-involutions `(ζ, μ)`, morphisms between categories carrying them,
//! and strict group actions with their fixed subcategories.

use serde::Serialize;

use crate::category::{Bimonoidal, BimonoidalExt, Overlay};
use crate::check::{CheckConfig, CheckReport, Verdict};
use crate::error::Result;
use crate::laws::{invertible, same, typed};
use crate::matrices::Matrix;
use crate::rig::{FiniteAbelianGroup, GroupElem};
use crate::sample::Sampler;

/// Runs the anti-involution axioms: `ζ² = id`, strict additivity of `ζ`,
/// the unit conditions, naturality and associativity of `μ` and both
/// distributivity squares.
pub fn check_anti_involution<C: Bimonoidal>(cat: &C, cfg: &CheckConfig) -> CheckReport {
    let spec = &cfg.spec;
    let mut report = CheckReport::new("anti-involution", cat.name());
    let sampler = |law: &str| Sampler::new(cat, spec, law);
    let z = |a: &C::Obj| cat.zeta_req(a);
    let zm = |f: &C::Mor| cat.zeta_mor_req(f);

    let objs = sampler("zeta.involutive.obj").object_tuples(1);
    report.push(cfg.law("zeta.involutive.obj", "ζ(ζ(A)) = A", &objs, |t| {
        Ok(Verdict::equal(&z(&z(&t[0])?)?, &t[0]))
    }));
    let mors = sampler("zeta.involutive.mor").morphism_tuples(1);
    report.push(cfg.law("zeta.involutive.mor", "ζ(ζ(f)) = f", &mors, |m| {
        Ok(Verdict::equal(&zm(&zm(&m[0])?)?, &m[0]))
    }));
    let mors = sampler("zeta.typed").morphism_tuples(1);
    report.push(cfg.law("zeta.typed", "ζ(f) : ζ(dom f) → ζ(cod f)", &mors, |m| {
        Ok(typed(cat, &zm(&m[0])?, &z(&cat.dom(&m[0]))?, &z(&cat.cod(&m[0]))?))
    }));
    let paths = sampler("zeta.functor").paths(2);
    report.push(cfg.law("zeta.functor", "ζ(g ∘ f) = ζ(g) ∘ ζ(f) and ζ(id_A) = id_ζA", &paths, |p| {
        let (f, g) = (&p[0], &p[1]);
        let a = cat.dom(f);
        Ok(Verdict::equal(
            &(zm(&cat.compose(g, f)?)?, zm(&cat.id(&a))?),
            &(cat.compose(&zm(g)?, &zm(f)?)?, cat.id(&z(&a)?)),
        ))
    }));
    let zero = cat.zero();
    let pairs = sampler("zeta.oplus.obj").object_tuples(2);
    report.push(cfg.law("zeta.oplus.obj", "ζ(A ⊕ B) = ζA ⊕ ζB and ζ(0) = 0", &pairs, |t| {
        Ok(Verdict::equal(
            &(z(&cat.oplus(&t[0], &t[1]))?, z(&zero)?),
            &(cat.oplus(&z(&t[0])?, &z(&t[1])?), zero.clone()),
        ))
    }));
    let mors = sampler("zeta.oplus.mor").morphism_tuples(2);
    report.push(cfg.law("zeta.oplus.mor", "ζ(f ⊕ g) = ζf ⊕ ζg", &mors, |m| {
        same(zm(&cat.oplus_mor(&m[0], &m[1])), Ok(cat.oplus_mor(&zm(&m[0])?, &zm(&m[1])?)))
    }));
    let pairs = sampler("zeta.c_oplus").object_tuples(2);
    report.push(cfg.law("zeta.c_oplus", "ζ(c_⊕^{A,B}) = c_⊕^{ζA,ζB}", &pairs, |t| {
        same(zm(&cat.c_oplus(&t[0], &t[1])), Ok(cat.c_oplus(&z(&t[0])?, &z(&t[1])?)))
    }));
    let one = cat.one();
    let objs = sampler("zeta.unit").object_tuples(1);
    report.push(cfg.law("zeta.unit", "ζ(1) = 1 and μ_{1,A} = id = μ_{A,1}", &objs, |t| {
        let a = &t[0];
        let za = z(a)?;
        Ok(Verdict::equal(
            &(z(&one)?, cat.mu_req(&one, a)?, cat.mu_req(a, &one)?),
            &(one.clone(), cat.id(&za), cat.id(&za)),
        ))
    }));
    let pairs = sampler("mu.typed").object_tuples(2);
    report.push(cfg.law("mu.typed", "μ_{A,B} : ζ(A ⊗ B) → ζB ⊗ ζA", &pairs, |t| {
        let (a, b) = (&t[0], &t[1]);
        Ok(typed(cat, &cat.mu_req(a, b)?, &z(&cat.otimes(a, b))?, &cat.otimes(&z(b)?, &z(a)?)))
    }));
    let pairs = sampler("mu.invertible").object_tuples(2);
    report.push(cfg.law("mu.invertible", "μ_{A,B} is an isomorphism", &pairs, |t| invertible(cat, &cat.mu_req(&t[0], &t[1])?)));
    let mors = sampler("mu.natural").morphism_tuples(2);
    report.push(cfg.law("mu.natural", "(ζg ⊗ ζf) ∘ μ_{A,B} = μ_{A',B'} ∘ ζ(f ⊗ g)", &mors, |m| {
        let (f, g) = (&m[0], &m[1]);
        same(
            cat.compose(&cat.otimes_mor(&zm(g)?, &zm(f)?), &cat.mu_req(&cat.dom(f), &cat.dom(g))?),
            cat.compose(&cat.mu_req(&cat.cod(f), &cat.cod(g))?, &zm(&cat.otimes_mor(f, g))?),
        )
    }));
    let triples = sampler("mu.assoc").object_tuples(3);
    report.push(cfg.law(
        "mu.assoc",
        "(id_ζC ⊗ μ_{A,B}) ∘ μ_{A⊗B,C} = (μ_{B,C} ⊗ id_ζA) ∘ μ_{A,B⊗C}",
        &triples,
        |t| {
            let (a, b, c) = (&t[0], &t[1], &t[2]);
            same(
                cat.compose(&cat.otimes_mor(&cat.id(&z(c)?), &cat.mu_req(a, b)?), &cat.mu_req(&cat.otimes(a, b), c)?),
                cat.compose(&cat.otimes_mor(&cat.mu_req(b, c)?, &cat.id(&z(a)?)), &cat.mu_req(a, &cat.otimes(b, c))?),
            )
        },
    ));
    let triples = sampler("mu.distrib.sum_right").object_tuples(3);
    report.push(cfg.law(
        "mu.distrib.sum_right",
        "μ_{A,B⊕C} ∘ ζ(d_r(A,B,C)) = μ_{A,B} ⊕ μ_{A,C}",
        &triples,
        |t| {
            let (a, b, c) = (&t[0], &t[1], &t[2]);
            same(
                cat.compose(&cat.mu_req(a, &cat.oplus(b, c))?, &zm(&cat.d_r(a, b, c))?),
                Ok(cat.oplus_mor(&cat.mu_req(a, b)?, &cat.mu_req(a, c)?)),
            )
        },
    ));
    let triples = sampler("mu.distrib.sum_left").object_tuples(3);
    report.push(cfg.law(
        "mu.distrib.sum_left",
        "μ_{A⊕B,C} = d_r(ζC,ζA,ζB) ∘ (μ_{A,C} ⊕ μ_{B,C})",
        &triples,
        |t| {
            let (a, b, c) = (&t[0], &t[1], &t[2]);
            same(
                cat.mu_req(&cat.oplus(a, b), c),
                cat.compose(
                    &cat.d_r(&z(c)?, &z(a)?, &z(b)?),
                    &cat.oplus_mor(&cat.mu_req(a, c)?, &cat.mu_req(b, c)?),
                ),
            )
        },
    ));
    if let Some(rig) = cat.component_rig() {
        let pairs = sampler("zeta.component").object_tuples(2);
        report.push(cfg.law(
            "zeta.component",
            "[ζ(A⊕B)] = [ζA] + [ζB] and [ζ(A⊗B)] = [ζB][ζA]",
            &pairs,
            |t| {
                let (a, b) = (&t[0], &t[1]);
                let (za, zb) = (cat.component_req(&z(a)?)?, cat.component_req(&z(b)?)?);
                Ok(Verdict::equal(
                    &(cat.component_req(&z(&cat.oplus(a, b))?)?, cat.component_req(&z(&cat.otimes(a, b))?)?),
                    &(rig.add(&za, &zb)?, rig.mul(&zb, &za)?),
                ))
            },
        ));
    }
    report
}

/// `ζ(μ_{A,B}) = μ⁻¹_{ζB,ζA}`. Not an axiom; it decides whether `τ² = id`
/// holds on the morphism data of bar simplices.
pub fn check_mu_self_inverse<C: Bimonoidal>(cat: &C, cfg: &CheckConfig) -> CheckReport {
    let mut report = CheckReport::new("mu-self-inverse", cat.name());
    let pairs = Sampler::new(cat, &cfg.spec, "mu.self_inverse").object_tuples(2);
    report.push(cfg.law("mu.self_inverse", "μ_{ζB,ζA} ∘ ζ(μ_{A,B}) = id", &pairs, |t| {
        let (a, b) = (&t[0], &t[1]);
        let (za, zb) = (cat.zeta_req(a)?, cat.zeta_req(b)?);
        same(
            cat.compose(&cat.mu_req(&zb, &za)?, &cat.zeta_mor_req(&cat.mu_req(a, b)?)?),
            Ok(cat.id(&cat.otimes(a, b))),
        )
    }));
    report
}

/// Applies `ζ` entrywise to a matrix of objects.
pub fn zeta_matrix<C: Bimonoidal>(cat: &C, m: &Matrix<C::Obj>) -> Result<Matrix<C::Obj>> {
    m.try_map(|a| cat.zeta_req(a))
}

/// Applies `ζ` entrywise to a matrix of morphisms.
pub fn zeta_matrix_mor<C: Bimonoidal>(cat: &C, m: &Matrix<C::Mor>) -> Result<Matrix<C::Mor>> {
    m.try_map(|f| cat.zeta_mor_req(f))
}

/// A lax bimonoidal functor, strict for `⊕`. `λ^{A,B} : F(A) ⊗ F(B) → F(A ⊗ B)`
/// defaults to the identity, which is the case for every shipped functor.
pub trait BimonoidalFunctor: Send + Sync {
    type Source: Bimonoidal;
    type Target: Bimonoidal;

    fn name(&self) -> String;
    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn on_obj(&self, a: &SObj<Self>) -> TObj<Self>;
    fn on_mor(&self, f: &SMor<Self>) -> TMor<Self>;

    fn lambda(&self, a: &SObj<Self>, b: &SObj<Self>) -> TMor<Self> {
        let t = self.target();
        t.id(&t.otimes(&self.on_obj(a), &self.on_obj(b)))
    }
}

pub type SObj<F> = <<F as BimonoidalFunctor>::Source as Bimonoidal>::Obj;
pub type SMor<F> = <<F as BimonoidalFunctor>::Source as Bimonoidal>::Mor;
pub type TObj<F> = <<F as BimonoidalFunctor>::Target as Bimonoidal>::Obj;
pub type TMor<F> = <<F as BimonoidalFunctor>::Target as Bimonoidal>::Mor;

/// Functoriality, strict additivity and the lax multiplicative structure.
pub fn check_functor<F: BimonoidalFunctor>(fun: &F, cfg: &CheckConfig) -> CheckReport {
    let (s, t) = (fun.source(), fun.target());
    let mut report = CheckReport::new("functor", fun.name());
    let sampler = |law: &str| Sampler::new(s, &cfg.spec, law);
    let fo = |a: &SObj<F>| fun.on_obj(a);
    let fm = |f: &SMor<F>| fun.on_mor(f);

    let mors = sampler("functor.typed").morphism_tuples(1);
    report.push(cfg.law("functor.typed", "F(f) : F(dom f) → F(cod f)", &mors, |m| {
        Ok(typed(t, &fm(&m[0]), &fo(&s.dom(&m[0])), &fo(&s.cod(&m[0]))))
    }));
    let paths = sampler("functor.compose").paths(2);
    report.push(cfg.law("functor.compose", "F(g ∘ f) = F(g) ∘ F(f) and F(id) = id", &paths, |p| {
        let a = s.dom(&p[0]);
        Ok(Verdict::equal(
            &(fm(&s.compose(&p[1], &p[0])?), fm(&s.id(&a))),
            &(t.compose(&fm(&p[1]), &fm(&p[0]))?, t.id(&fo(&a))),
        ))
    }));
    let pairs = sampler("functor.oplus.obj").object_tuples(2);
    report.push(cfg.law("functor.oplus.obj", "F(A ⊕ B) = FA ⊕ FB and F(0) = 0", &pairs, |o| {
        Ok(Verdict::equal(
            &(fo(&s.oplus(&o[0], &o[1])), fo(&s.zero())),
            &(t.oplus(&fo(&o[0]), &fo(&o[1])), t.zero()),
        ))
    }));
    let mors = sampler("functor.oplus.mor").morphism_tuples(2);
    report.push(cfg.law("functor.oplus.mor", "F(f ⊕ g) = Ff ⊕ Fg", &mors, |m| {
        Ok(Verdict::equal(&fm(&s.oplus_mor(&m[0], &m[1])), &t.oplus_mor(&fm(&m[0]), &fm(&m[1]))))
    }));
    let pairs = sampler("functor.c_oplus").object_tuples(2);
    report.push(cfg.law("functor.c_oplus", "F(c_⊕^{A,B}) = c_⊕^{FA,FB}", &pairs, |o| {
        Ok(Verdict::equal(&fm(&s.c_oplus(&o[0], &o[1])), &t.c_oplus(&fo(&o[0]), &fo(&o[1]))))
    }));
    let pairs = sampler("functor.lambda.typed").object_tuples(2);
    report.push(cfg.law("functor.lambda.typed", "λ^{A,B} : FA ⊗ FB → F(A ⊗ B), invertible; F(1) = 1", &pairs, |o| {
        let (a, b) = (&o[0], &o[1]);
        let l = fun.lambda(a, b);
        let shape = typed(t, &l, &t.otimes(&fo(a), &fo(b)), &fo(&s.otimes(a, b)));
        if !shape.passed() {
            return Ok(shape);
        }
        let inv = invertible(t, &l)?;
        if !inv.passed() {
            return Ok(inv);
        }
        Ok(Verdict::equal(&fo(&s.one()), &t.one()))
    }));
    let mors = sampler("functor.lambda.natural").morphism_tuples(2);
    report.push(cfg.law("functor.lambda.natural", "F(f ⊗ g) ∘ λ = λ ∘ (Ff ⊗ Fg)", &mors, |m| {
        let (f, g) = (&m[0], &m[1]);
        same(
            t.compose(&fm(&s.otimes_mor(f, g)), &fun.lambda(&s.dom(f), &s.dom(g))),
            t.compose(&fun.lambda(&s.cod(f), &s.cod(g)), &t.otimes_mor(&fm(f), &fm(g))),
        )
    }));
    let triples = sampler("functor.lambda.assoc").object_tuples(3);
    report.push(cfg.law(
        "functor.lambda.assoc",
        "λ^{A⊗B,C} ∘ (λ^{A,B} ⊗ id) = λ^{A,B⊗C} ∘ (id ⊗ λ^{B,C})",
        &triples,
        |o| {
            let (a, b, c) = (&o[0], &o[1], &o[2]);
            same(
                t.compose(&fun.lambda(&s.otimes(a, b), c), &t.otimes_mor(&fun.lambda(a, b), &t.id(&fo(c)))),
                t.compose(&fun.lambda(a, &s.otimes(b, c)), &t.otimes_mor(&t.id(&fo(a)), &fun.lambda(b, c))),
            )
        },
    ));
    let triples = sampler("functor.d_r").object_tuples(3);
    report.push(cfg.law(
        "functor.d_r",
        "F(d_r(A,B,C)) ∘ (λ ⊕ λ) = λ ∘ d_r(FA,FB,FC)",
        &triples,
        |o| {
            let (a, b, c) = (&o[0], &o[1], &o[2]);
            same(
                t.compose(&fm(&s.d_r(a, b, c)), &t.oplus_mor(&fun.lambda(a, b), &fun.lambda(a, c))),
                t.compose(&fun.lambda(a, &s.oplus(b, c)), &t.d_r(&fo(a), &fo(b), &fo(c))),
            )
        },
    ));
    report
}

/// Functor laws plus `F ∘ ζ = ζ' ∘ F` and the compatibility of `λ` with `μ`:
/// `λ^{ζA,ζB} ∘ μ'_{FB,FA} = F(μ_{B,A}) ∘ ζ'(λ^{B,A})`.
pub fn check_antiinv_morphism<F: BimonoidalFunctor>(fun: &F, cfg: &CheckConfig) -> CheckReport {
    let (s, t) = (fun.source(), fun.target());
    let mut report = check_functor(fun, cfg);
    report.suite = "anti-involution-morphism".into();
    let sampler = |law: &str| Sampler::new(s, &cfg.spec, law);

    let objs = sampler("functor.zeta.obj").object_tuples(1);
    report.push(cfg.law("functor.zeta.obj", "F(ζA) = ζ'(FA)", &objs, |o| {
        Ok(Verdict::equal(&fun.on_obj(&s.zeta_req(&o[0])?), &t.zeta_req(&fun.on_obj(&o[0]))?))
    }));
    let mors = sampler("functor.zeta.mor").morphism_tuples(1);
    report.push(cfg.law("functor.zeta.mor", "F(ζf) = ζ'(Ff)", &mors, |m| {
        Ok(Verdict::equal(&fun.on_mor(&s.zeta_mor_req(&m[0])?), &t.zeta_mor_req(&fun.on_mor(&m[0]))?))
    }));
    let pairs = sampler("functor.mu").object_tuples(2);
    report.push(cfg.law(
        "functor.mu",
        "λ^{ζA,ζB} ∘ μ'_{FB,FA} = F(μ_{B,A}) ∘ ζ'(λ^{B,A})",
        &pairs,
        |o| {
            let (a, b) = (&o[0], &o[1]);
            let (za, zb) = (s.zeta_req(a)?, s.zeta_req(b)?);
            same(
                t.compose(&fun.lambda(&za, &zb), &t.mu_req(&fun.on_obj(b), &fun.on_obj(a))?),
                t.compose(&fun.on_mor(&s.mu_req(b, a)?), &t.zeta_mor_req(&fun.lambda(b, a))?),
            )
        },
    ));
    report
}

/// The identity functor of an instance.
pub struct IdentityFunctor<'a, C>(pub &'a C);

impl<C: Bimonoidal> BimonoidalFunctor for IdentityFunctor<'_, C> {
    type Source = C;
    type Target = C;

    fn name(&self) -> String {
        format!("id:{}", self.0.name())
    }
    fn source(&self) -> &C {
        self.0
    }
    fn target(&self) -> &C {
        self.0
    }
    fn on_obj(&self, a: &C::Obj) -> C::Obj {
        a.clone()
    }
    fn on_mor(&self, f: &C::Mor) -> C::Mor {
        f.clone()
    }
}

/// An action of a finite abelian group by strict bimonoidal endofunctors.
pub trait GroupAction<C: Bimonoidal>: Send + Sync {
    fn name(&self) -> String;
    fn group(&self) -> &FiniteAbelianGroup;
    fn act_obj(&self, cat: &C, g: &GroupElem, a: &C::Obj) -> C::Obj;
    fn act_mor(&self, cat: &C, g: &GroupElem, f: &C::Mor) -> C::Mor;
}

#[derive(Serialize)]
struct ActionSample<T> {
    g: GroupElem,
    h: GroupElem,
    items: Vec<T>,
}

fn with_elements<T: Clone>(group: &FiniteAbelianGroup, items: Vec<Vec<T>>) -> Vec<ActionSample<T>> {
    let els = group.elements();
    let n = els.len();
    items
        .into_iter()
        .enumerate()
        .map(|(i, items)| ActionSample { g: els[i % n].clone(), h: els[(i / n) % n].clone(), items })
        .collect()
}

/// Unit and composition laws of the action, strict bimonoidality of each
/// `φ_g` and, when the instance carries `ζ` and `μ`, that each `φ_g` is a
/// morphism of anti-involutions.
pub fn check_group_action<C: Bimonoidal, A: GroupAction<C>>(action: &A, cat: &C, cfg: &CheckConfig) -> CheckReport {
    let mut report = CheckReport::new("group-action", format!("{} on {}", action.name(), cat.name()));
    let group = action.group();
    let e = group.identity();
    let sampler = |law: &str| Sampler::new(cat, &cfg.spec, law);
    let po = |g: &GroupElem, a: &C::Obj| action.act_obj(cat, g, a);
    let pm = |g: &GroupElem, f: &C::Mor| action.act_mor(cat, g, f);

    let mors = with_elements(group, sampler("action.unit").morphism_tuples(1));
    report.push(cfg.law("action.unit", "φ_1 = id", &mors, |s| {
        let f = &s.items[0];
        Ok(Verdict::equal(&(pm(&e, f), po(&e, &cat.dom(f))), &(f.clone(), cat.dom(f))))
    }));
    let mors = with_elements(group, sampler("action.compose").morphism_tuples(1));
    report.push(cfg.law("action.compose", "φ_g ∘ φ_h = φ_{gh}", &mors, |s| {
        let f = &s.items[0];
        let gh = group.op(&s.g, &s.h);
        Ok(Verdict::equal(
            &(pm(&s.g, &pm(&s.h, f)), po(&s.g, &po(&s.h, &cat.dom(f)))),
            &(pm(&gh, f), po(&gh, &cat.dom(f))),
        ))
    }));
    let paths = with_elements(group, sampler("action.functor").paths(2));
    report.push(cfg.law("action.functor", "φ_g(f' ∘ f) = φ_g(f') ∘ φ_g(f) and φ_g : dom → cod", &paths, |s| {
        let (f, f2, g) = (&s.items[0], &s.items[1], &s.g);
        let shape = typed(cat, &pm(g, f), &po(g, &cat.dom(f)), &po(g, &cat.cod(f)));
        if !shape.passed() {
            return Ok(shape);
        }
        same(Ok(pm(g, &cat.compose(f2, f)?)), cat.compose(&pm(g, f2), &pm(g, f)))
    }));
    let mors = with_elements(group, sampler("action.strict.mor").morphism_tuples(2));
    report.push(cfg.law("action.strict.mor", "φ_g(f ⊕ f') = φ_g f ⊕ φ_g f' and φ_g(f ⊗ f') = φ_g f ⊗ φ_g f'", &mors, |s| {
        let (f, f2, g) = (&s.items[0], &s.items[1], &s.g);
        Ok(Verdict::equal(
            &(pm(g, &cat.oplus_mor(f, f2)), pm(g, &cat.otimes_mor(f, f2))),
            &(cat.oplus_mor(&pm(g, f), &pm(g, f2)), cat.otimes_mor(&pm(g, f), &pm(g, f2))),
        ))
    }));
    let objs = with_elements(group, sampler("action.strict.structure").object_tuples(3));
    report.push(cfg.law(
        "action.strict.structure",
        "φ_g fixes 0 and 1 and preserves ⊕, ⊗, c_⊕ and d_r",
        &objs,
        |s| {
            let (a, b, c, g) = (&s.items[0], &s.items[1], &s.items[2], &s.g);
            Ok(Verdict::equal(
                &(
                    po(g, &cat.zero()),
                    po(g, &cat.one()),
                    po(g, &cat.oplus(a, b)),
                    po(g, &cat.otimes(a, b)),
                    pm(g, &cat.c_oplus(a, b)),
                    pm(g, &cat.d_r(a, b, c)),
                ),
                &(
                    cat.zero(),
                    cat.one(),
                    cat.oplus(&po(g, a), &po(g, b)),
                    cat.otimes(&po(g, a), &po(g, b)),
                    cat.c_oplus(&po(g, a), &po(g, b)),
                    cat.d_r(&po(g, a), &po(g, b), &po(g, c)),
                ),
            ))
        },
    ));
    if cat.has_anti_involution() {
        let mors = with_elements(group, sampler("action.zeta").morphism_tuples(1));
        report.push(cfg.law("action.zeta", "φ_g ∘ ζ = ζ ∘ φ_g", &mors, |s| {
            let (f, g) = (&s.items[0], &s.g);
            let a = cat.dom(f);
            Ok(Verdict::equal(
                &(pm(g, &cat.zeta_mor_req(f)?), po(g, &cat.zeta_req(&a)?)),
                &(cat.zeta_mor_req(&pm(g, f))?, cat.zeta_req(&po(g, &a))?),
            ))
        }));
        let objs = with_elements(group, sampler("action.mu").object_tuples(2));
        report.push(cfg.law("action.mu", "φ_g(μ_{A,B}) = μ_{φ_g A, φ_g B}", &objs, |s| {
            let (a, b, g) = (&s.items[0], &s.items[1], &s.g);
            same(Ok(pm(g, &cat.mu_req(a, b)?)), cat.mu_req(&po(g, a), &po(g, b)))
        }));
    }
    report
}

/// The subcategory of objects and morphisms fixed by every `φ_g`, as a
/// membership-filtered view of the ambient instance.
pub fn fixed_category<C, A>(action: A, cat: C) -> Overlay<C>
where
    C: Bimonoidal + Clone + 'static,
    A: GroupAction<C> + Clone + 'static,
{
    let label = format!("{}^{}", cat.name(), action.name());
    let els = action.group().elements();
    let (act_o, els_o) = (action.clone(), els.clone());
    Overlay::new(cat, label).restricted(
        move |c, a| els_o.iter().all(|g| act_o.act_obj(c, g, a) == *a),
        move |c, f| els.iter().all(|g| action.act_mor(c, g, f) == *f),
    )
}

/// Closure of a filtered view under the structure: every sampled composite,
/// sum, product, `c_⊕`, `d_r`, `ζ` and `μ` stays inside it.
pub fn check_closure<C: Bimonoidal>(view: &Overlay<C>, cfg: &CheckConfig) -> CheckReport {
    let mut report = CheckReport::new("closure", view.name());
    let sampler = |law: &str| Sampler::new(view, &cfg.spec, law);
    let units = [view.zero(), view.one()];
    report.push(cfg.law("closure.units", "0 and 1 lie in the subcategory", &units, |a| {
        Ok(Verdict::holds(view.contains_obj(a), a, "a member"))
    }));
    let mors = sampler("closure.mor").morphism_tuples(2);
    report.push(cfg.law("closure.mor", "f ⊕ g, f ⊗ g and ζf lie in the subcategory", &mors, |m| {
        let (f, g) = (&m[0], &m[1]);
        let mut out = vec![view.oplus_mor(f, g), view.otimes_mor(f, g)];
        if view.has_anti_involution() {
            out.push(view.zeta_mor_req(f)?);
        }
        Ok(Verdict::holds(out.iter().all(|h| view.contains_mor(h)), &out, "members"))
    }));
    let paths = sampler("closure.compose").paths(2);
    report.push(cfg.law("closure.compose", "g ∘ f lies in the subcategory", &paths, |p| {
        let h = view.compose(&p[1], &p[0])?;
        Ok(Verdict::holds(view.contains_mor(&h), &h, "a member"))
    }));
    let objs = sampler("closure.structure").object_tuples(3);
    report.push(cfg.law("closure.structure", "c_⊕, d_r and μ lie in the subcategory", &objs, |o| {
        let (a, b, c) = (&o[0], &o[1], &o[2]);
        let mut out = vec![view.c_oplus(a, b), view.d_r(a, b, c)];
        if view.has_anti_involution() {
            out.push(view.mu_req(a, b)?);
        }
        Ok(Verdict::holds(out.iter().all(|h| view.contains_mor(h)), &out, "members"))
    }));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{make_instance, FiniteSets, BUNDLED};
    use crate::sample::SampleSpec;

    #[test]
    fn bundled_instances_carry_anti_involutions() {
        let cfg = CheckConfig::new(SampleSpec::new(3, 2, 120, 3));
        for key in BUNDLED {
            let inst = make_instance(key).unwrap();
            let report = crate::with_instance!(&inst, c => check_anti_involution(c, &cfg));
            assert!(report.passed(), "{}: {:#?}", key, report.failing().collect::<Vec<_>>());
        }
    }

    #[test]
    fn missing_structure_is_reported_per_law() {
        let cat = crate::instances::Bichar::new(3, 1).unwrap();
        let cfg = CheckConfig::new(SampleSpec::new(2, 2, 10, 3));
        let report = check_anti_involution(&cat, &cfg);
        let law = report.law("zeta.involutive.obj").unwrap();
        assert!(!law.passed);
        assert!(law.witness.as_ref().unwrap().error.as_ref().unwrap().contains("capability"));
    }

    #[test]
    fn identity_functor_is_a_morphism() {
        let cfg = CheckConfig::new(SampleSpec::new(3, 2, 100, 3));
        let report = check_antiinv_morphism(&IdentityFunctor(&FiniteSets), &cfg);
        assert!(report.passed(), "{:#?}", report.failing().collect::<Vec<_>>());
    }
}
