//! The computable-category interface shared by every instance, law suite and
//! construction, plus an overlay wrapper for replacing individual structure
//! maps.

use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::rig::{Pi0Rig, RigElem};

/// A strict bimonoidal category with computable operations.
///
/// The left distributivity `A⊗B ⊕ A'⊗B → (A⊕A')⊗B` is the identity, so only
/// the right distributivity `d_r(A, B, C): A⊗B ⊕ A⊗C → A⊗(B⊕C)` is stored.
/// Optional structure (anti-involution, braiding, π₀ labels) is reported as
/// `None` when absent.
pub trait Bimonoidal: Send + Sync {
    type Obj: Clone + Eq + Hash + Debug + Serialize + Send + Sync;
    type Mor: Clone + Eq + Debug + Serialize + Send + Sync;

    fn name(&self) -> String;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn id(&self, a: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`; fails unless `cod f = dom g`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor>;

    fn zero(&self) -> Self::Obj;
    fn one(&self) -> Self::Obj;
    fn oplus(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn oplus_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn otimes(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn otimes_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    /// `A ⊕ B → B ⊕ A`.
    fn c_oplus(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    /// `A⊗B ⊕ A⊗C → A⊗(B⊕C)`.
    fn d_r(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor;

    fn zeta(&self, _a: &Self::Obj) -> Option<Self::Obj> {
        None
    }
    fn zeta_mor(&self, _f: &Self::Mor) -> Option<Self::Mor> {
        None
    }
    /// `ζ(A⊗B) → ζ(B)⊗ζ(A)`.
    fn mu(&self, _a: &Self::Obj, _b: &Self::Obj) -> Option<Self::Mor> {
        None
    }
    /// `A⊗B → B⊗A`.
    fn beta(&self, _a: &Self::Obj, _b: &Self::Obj) -> Option<Self::Mor> {
        None
    }
    fn component(&self, _a: &Self::Obj) -> Option<RigElem> {
        None
    }
    fn component_rig(&self) -> Option<Pi0Rig> {
        None
    }
    /// Symmetric ⊗ with ζ = id and μ = c_⊗, so that `ζ(μ)` inverts `μ`.
    fn is_bipermutative(&self) -> bool {
        false
    }
    /// Every morphism is an identity.
    fn is_discrete(&self) -> bool {
        false
    }

    /// Objects of size at most `size`, in a fixed order; exhaustive whenever
    /// that set is finite.
    fn objects_upto(&self, size: usize) -> Vec<Self::Obj>;
    /// Every morphism with domain `a`, in a fixed order.
    fn morphisms_from(&self, a: &Self::Obj) -> Vec<Self::Mor>;

    /// Reads an object from its JSON form, as printed in reports.
    fn parse_obj(&self, v: &Value) -> Result<Self::Obj>;
    fn parse_mor(&self, v: &Value) -> Result<Self::Mor>;
}

/// Deserializes a JSON value, reporting failures as parse errors.
pub fn from_json<T: DeserializeOwned>(v: &Value) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Parse(format!("{}: {}", v, e)))
}

/// Convenience wrappers turning missing optional structure into capability
/// errors and folding lists.
pub trait BimonoidalExt: Bimonoidal {
    fn zeta_req(&self, a: &Self::Obj) -> Result<Self::Obj> {
        self.zeta(a).ok_or_else(|| Error::capability(format!("{} has no anti-involution", self.name())))
    }

    fn zeta_mor_req(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.zeta_mor(f).ok_or_else(|| Error::capability(format!("{} has no anti-involution", self.name())))
    }

    fn mu_req(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor> {
        self.mu(a, b).ok_or_else(|| Error::capability(format!("{} has no μ", self.name())))
    }

    fn beta_req(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor> {
        self.beta(a, b).ok_or_else(|| Error::capability(format!("{} has no braiding", self.name())))
    }

    fn component_req(&self, a: &Self::Obj) -> Result<RigElem> {
        self.component(a).ok_or_else(|| Error::capability(format!("{} declares no π₀ labels", self.name())))
    }

    fn component_rig_req(&self) -> Result<Pi0Rig> {
        self.component_rig().ok_or_else(|| Error::capability(format!("{} declares no π₀ rig", self.name())))
    }

    fn has_anti_involution(&self) -> bool {
        let one = self.one();
        self.zeta(&one).is_some() && self.mu(&one, &one).is_some()
    }

    fn has_braiding(&self) -> bool {
        let one = self.one();
        self.beta(&one, &one).is_some()
    }

    fn inverse_req(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.inverse(f).ok_or_else(|| Error::Invalid(format!("{:?} is not invertible", f)))
    }

    /// Composes a path given in application order: `path[0]` first.
    fn compose_path(&self, path: &[Self::Mor]) -> Result<Self::Mor> {
        let (first, rest) = path.split_first().ok_or_else(|| Error::Invalid("empty composite".into()))?;
        rest.iter().try_fold(first.clone(), |acc, g| self.compose(g, &acc))
    }

    fn oplus_all(&self, objs: &[Self::Obj]) -> Self::Obj {
        objs.iter().fold(self.zero(), |acc, a| self.oplus(&acc, a))
    }

    /// Left-nested ⊕ of morphisms; the empty sum is `id_0`.
    fn oplus_mor_all(&self, mors: &[Self::Mor]) -> Self::Mor {
        match mors.split_first() {
            None => self.id(&self.zero()),
            Some((first, rest)) => rest.iter().fold(first.clone(), |acc, f| self.oplus_mor(&acc, f)),
        }
    }
}

impl<C: Bimonoidal + ?Sized> BimonoidalExt for C {}

type ObjHook<C> = Arc<dyn Fn(&C, &<C as Bimonoidal>::Obj) -> Option<<C as Bimonoidal>::Obj> + Send + Sync>;
type MorHook<C> = Arc<dyn Fn(&C, &<C as Bimonoidal>::Mor) -> Option<<C as Bimonoidal>::Mor> + Send + Sync>;
type PairHook<C> = Arc<
    dyn Fn(&C, &<C as Bimonoidal>::Obj, &<C as Bimonoidal>::Obj) -> Option<<C as Bimonoidal>::Mor> + Send + Sync,
>;
type TripleHook<C> = Arc<
    dyn Fn(&C, &<C as Bimonoidal>::Obj, &<C as Bimonoidal>::Obj, &<C as Bimonoidal>::Obj) -> <C as Bimonoidal>::Mor
        + Send
        + Sync,
>;
type ObjFilter<C> = Arc<dyn Fn(&C, &<C as Bimonoidal>::Obj) -> bool + Send + Sync>;
type MorFilter<C> = Arc<dyn Fn(&C, &<C as Bimonoidal>::Mor) -> bool + Send + Sync>;

/// An instance with selected structure maps replaced, or its object and
/// morphism sets restricted by membership predicates. Used for the induced
/// anti-involution of a braided category, for fixed subcategories and for
/// single-point mutations.
#[derive(Clone)]
pub struct Overlay<C: Bimonoidal> {
    pub inner: C,
    pub label: String,
    pub zeta: Option<ObjHook<C>>,
    pub zeta_mor: Option<MorHook<C>>,
    pub mu: Option<PairHook<C>>,
    pub beta: Option<PairHook<C>>,
    pub c_oplus: Option<PairHook<C>>,
    pub d_r: Option<TripleHook<C>>,
    pub keep_obj: Option<ObjFilter<C>>,
    pub keep_mor: Option<MorFilter<C>>,
    pub bipermutative: Option<bool>,
}

impl<C: Bimonoidal> Overlay<C> {
    pub fn new(inner: C, label: impl Into<String>) -> Self {
        Overlay {
            inner,
            label: label.into(),
            zeta: None,
            zeta_mor: None,
            mu: None,
            beta: None,
            c_oplus: None,
            d_r: None,
            keep_obj: None,
            keep_mor: None,
            bipermutative: None,
        }
    }

    pub fn with_zeta(
        mut self,
        obj: impl Fn(&C, &C::Obj) -> Option<C::Obj> + Send + Sync + 'static,
        mor: impl Fn(&C, &C::Mor) -> Option<C::Mor> + Send + Sync + 'static,
    ) -> Self {
        self.zeta = Some(Arc::new(obj));
        self.zeta_mor = Some(Arc::new(mor));
        self
    }

    pub fn with_mu(mut self, f: impl Fn(&C, &C::Obj, &C::Obj) -> Option<C::Mor> + Send + Sync + 'static) -> Self {
        self.mu = Some(Arc::new(f));
        self
    }

    pub fn with_beta(mut self, f: impl Fn(&C, &C::Obj, &C::Obj) -> Option<C::Mor> + Send + Sync + 'static) -> Self {
        self.beta = Some(Arc::new(f));
        self
    }

    pub fn with_c_oplus(
        mut self,
        f: impl Fn(&C, &C::Obj, &C::Obj) -> Option<C::Mor> + Send + Sync + 'static,
    ) -> Self {
        self.c_oplus = Some(Arc::new(f));
        self
    }

    pub fn with_d_r(
        mut self,
        f: impl Fn(&C, &C::Obj, &C::Obj, &C::Obj) -> C::Mor + Send + Sync + 'static,
    ) -> Self {
        self.d_r = Some(Arc::new(f));
        self
    }

    pub fn restricted(
        mut self,
        obj: impl Fn(&C, &C::Obj) -> bool + Send + Sync + 'static,
        mor: impl Fn(&C, &C::Mor) -> bool + Send + Sync + 'static,
    ) -> Self {
        self.keep_obj = Some(Arc::new(obj));
        self.keep_mor = Some(Arc::new(mor));
        self
    }

    pub fn with_bipermutative(mut self, flag: bool) -> Self {
        self.bipermutative = Some(flag);
        self
    }

    pub fn contains_obj(&self, a: &C::Obj) -> bool {
        self.keep_obj.as_ref().is_none_or(|k| k(&self.inner, a))
    }

    pub fn contains_mor(&self, f: &C::Mor) -> bool {
        self.keep_mor.as_ref().is_none_or(|k| k(&self.inner, f))
    }
}

impl<C: Bimonoidal> Bimonoidal for Overlay<C> {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn name(&self) -> String {
        self.label.clone()
    }
    fn dom(&self, f: &C::Mor) -> C::Obj {
        self.inner.dom(f)
    }
    fn cod(&self, f: &C::Mor) -> C::Obj {
        self.inner.cod(f)
    }
    fn id(&self, a: &C::Obj) -> C::Mor {
        self.inner.id(a)
    }
    fn compose(&self, g: &C::Mor, f: &C::Mor) -> Result<C::Mor> {
        self.inner.compose(g, f)
    }
    fn inverse(&self, f: &C::Mor) -> Option<C::Mor> {
        self.inner.inverse(f)
    }
    fn zero(&self) -> C::Obj {
        self.inner.zero()
    }
    fn one(&self) -> C::Obj {
        self.inner.one()
    }
    fn oplus(&self, a: &C::Obj, b: &C::Obj) -> C::Obj {
        self.inner.oplus(a, b)
    }
    fn oplus_mor(&self, f: &C::Mor, g: &C::Mor) -> C::Mor {
        self.inner.oplus_mor(f, g)
    }
    fn otimes(&self, a: &C::Obj, b: &C::Obj) -> C::Obj {
        self.inner.otimes(a, b)
    }
    fn otimes_mor(&self, f: &C::Mor, g: &C::Mor) -> C::Mor {
        self.inner.otimes_mor(f, g)
    }
    fn c_oplus(&self, a: &C::Obj, b: &C::Obj) -> C::Mor {
        match &self.c_oplus {
            Some(h) => h(&self.inner, a, b).unwrap_or_else(|| self.inner.c_oplus(a, b)),
            None => self.inner.c_oplus(a, b),
        }
    }
    fn d_r(&self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> C::Mor {
        match &self.d_r {
            Some(h) => h(&self.inner, a, b, c),
            None => self.inner.d_r(a, b, c),
        }
    }
    fn zeta(&self, a: &C::Obj) -> Option<C::Obj> {
        match &self.zeta {
            Some(h) => h(&self.inner, a),
            None => self.inner.zeta(a),
        }
    }
    fn zeta_mor(&self, f: &C::Mor) -> Option<C::Mor> {
        match &self.zeta_mor {
            Some(h) => h(&self.inner, f),
            None => self.inner.zeta_mor(f),
        }
    }
    fn mu(&self, a: &C::Obj, b: &C::Obj) -> Option<C::Mor> {
        match &self.mu {
            Some(h) => h(&self.inner, a, b),
            None => self.inner.mu(a, b),
        }
    }
    fn beta(&self, a: &C::Obj, b: &C::Obj) -> Option<C::Mor> {
        match &self.beta {
            Some(h) => h(&self.inner, a, b),
            None => self.inner.beta(a, b),
        }
    }
    fn component(&self, a: &C::Obj) -> Option<RigElem> {
        self.inner.component(a)
    }
    fn component_rig(&self) -> Option<Pi0Rig> {
        self.inner.component_rig()
    }
    fn is_bipermutative(&self) -> bool {
        self.bipermutative.unwrap_or_else(|| {
            self.inner.is_bipermutative() && self.mu.is_none() && self.zeta.is_none() && self.beta.is_none()
        })
    }
    fn is_discrete(&self) -> bool {
        self.inner.is_discrete()
    }
    fn objects_upto(&self, size: usize) -> Vec<C::Obj> {
        let mut objs = self.inner.objects_upto(size);
        objs.retain(|a| self.contains_obj(a));
        objs
    }
    fn morphisms_from(&self, a: &C::Obj) -> Vec<C::Mor> {
        let mut mors = self.inner.morphisms_from(a);
        mors.retain(|f| self.contains_mor(f));
        mors
    }
    fn parse_obj(&self, v: &Value) -> Result<C::Obj> {
        self.inner.parse_obj(v)
    }
    fn parse_mor(&self, v: &Value) -> Result<C::Mor> {
        self.inner.parse_mor(v)
    }
}
