//! Deterministic sampling of objects, morphisms and tuples of them.
//!
//! Each law draws from its own stream, seeded from the sampling seed and the law
//! id, so adding or reordering laws never shifts another law's samples.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::category::Bimonoidal;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub max_object_size: usize,
    pub max_arity_n: usize,
    pub sample_count: usize,
    pub seed: u64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec { max_object_size: 3, max_arity_n: 2, sample_count: 500, seed: 42 }
    }
}

impl SampleSpec {
    pub fn new(max_object_size: usize, max_arity_n: usize, sample_count: usize, seed: u64) -> Self {
        SampleSpec { max_object_size, max_arity_n, sample_count, seed }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("max_object_size", self.max_object_size),
            ("max_arity_n", self.max_arity_n),
            ("sample_count", self.sample_count),
        ] {
            if v == 0 {
                return Err(Error::Invalid(format!("{} must be positive", name)));
            }
        }
        Ok(())
    }

    pub fn with_samples(&self, sample_count: usize) -> Self {
        SampleSpec { sample_count, ..self.clone() }
    }

    pub fn with_size(&self, max_object_size: usize) -> Self {
        SampleSpec { max_object_size, ..self.clone() }
    }

    /// A generator for the named stream.
    pub fn rng(&self, stream: &str) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ stream_hash(stream))
    }
}

/// 64-bit FNV-1a; stable across platforms and releases, unlike `DefaultHasher`.
fn stream_hash(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Draws objects, morphisms and tuples for one law.
pub struct Sampler<'a, C: Bimonoidal> {
    cat: &'a C,
    count: usize,
    objects: Vec<C::Obj>,
    homs: HashMap<C::Obj, Vec<C::Mor>>,
    rng: ChaCha8Rng,
}

impl<'a, C: Bimonoidal> Sampler<'a, C> {
    pub fn new(cat: &'a C, spec: &SampleSpec, stream: &str) -> Self {
        Sampler::with_objects(cat, spec, stream, cat.objects_upto(spec.max_object_size))
    }

    pub fn with_objects(cat: &'a C, spec: &SampleSpec, stream: &str, objects: Vec<C::Obj>) -> Self {
        Sampler { cat, count: spec.sample_count, objects, homs: HashMap::new(), rng: spec.rng(stream) }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn objects(&self) -> &[C::Obj] {
        &self.objects
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn object(&mut self) -> C::Obj {
        self.objects.choose(&mut self.rng).expect("sampler has objects").clone()
    }

    pub fn homs(&mut self, a: &C::Obj) -> &[C::Mor] {
        let cat = self.cat;
        self.homs.entry(a.clone()).or_insert_with(|| cat.morphisms_from(a))
    }

    pub fn morphism_from(&mut self, a: &C::Obj) -> C::Mor {
        let n = self.homs(a).len();
        let i = self.rng.gen_range(0..n.max(1));
        self.homs(a).get(i).cloned().unwrap_or_else(|| self.cat.id(a))
    }

    pub fn morphism(&mut self) -> C::Mor {
        let a = self.object();
        self.morphism_from(&a)
    }

    /// A composable path `f_0, f_1, ...` with `cod f_i = dom f_{i+1}`.
    pub fn path(&mut self, len: usize) -> Vec<C::Mor> {
        let mut a = self.object();
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            let f = self.morphism_from(&a);
            a = self.cat.cod(&f);
            out.push(f);
        }
        out
    }

    /// All `k`-tuples of objects when there are at most `count` of them, else
    /// `count` pseudo-random tuples.
    pub fn object_tuples(&mut self, k: usize) -> Vec<Vec<C::Obj>> {
        let pool = self.objects.clone();
        self.tuples_from(&pool, k)
    }

    /// As [`Sampler::object_tuples`] for morphisms with arbitrary domains.
    pub fn morphism_tuples(&mut self, k: usize) -> Vec<Vec<C::Mor>> {
        let total: usize = self.objects.clone().iter().map(|a| self.homs(a).len()).sum();
        if total.checked_pow(k as u32).is_some_and(|t| t <= self.count) {
            let pool: Vec<C::Mor> =
                self.objects.clone().iter().flat_map(|a| self.homs(a).to_vec()).collect();
            self.tuples_from(&pool, k)
        } else {
            (0..self.count).map(|_| (0..k).map(|_| self.morphism()).collect()).collect()
        }
    }

    pub fn paths(&mut self, len: usize) -> Vec<Vec<C::Mor>> {
        (0..self.count).map(|_| self.path(len)).collect()
    }

    pub fn tuples_from<T: Clone>(&mut self, pool: &[T], k: usize) -> Vec<Vec<T>> {
        let n = pool.len();
        if n == 0 {
            return Vec::new();
        }
        match n.checked_pow(k as u32) {
            Some(total) if total <= self.count => (0..total)
                .map(|mut code| {
                    let mut t = Vec::with_capacity(k);
                    for _ in 0..k {
                        t.push(pool[code % n].clone());
                        code /= n;
                    }
                    t.reverse();
                    t
                })
                .collect(),
            _ => (0..self.count)
                .map(|_| (0..k).map(|_| pool[self.rng.gen_range(0..n)].clone()).collect())
                .collect(),
        }
    }
}

/// The sample universe of an instance at a given spec: every object up to the
/// size bound and every morphism out of them, the latter thinned to
/// `sample_count` pseudo-random picks when there are more.
pub struct SampleStream<C: Bimonoidal> {
    pub objects: Vec<C::Obj>,
    pub morphisms: Vec<C::Mor>,
}

pub fn enumerate_sample<C: Bimonoidal>(cat: &C, spec: &SampleSpec) -> SampleStream<C> {
    let objects = cat.objects_upto(spec.max_object_size);
    let mut morphisms: Vec<C::Mor> = objects.iter().flat_map(|a| cat.morphisms_from(a)).collect();
    if morphisms.len() > spec.sample_count {
        let mut rng = spec.rng("enumerate");
        let mut picked = rand::seq::index::sample(&mut rng, morphisms.len(), spec.sample_count).into_vec();
        picked.sort_unstable();
        morphisms = picked.into_iter().map(|i| morphisms[i].clone()).collect();
    }
    SampleStream { objects, morphisms }
}

/// Connected components of the morphism graph on `objects`, by union-find.
/// Entry `i` is the least index of an object connected to `objects[i]`.
pub fn pi0_classes<C: Bimonoidal>(cat: &C, objects: &[C::Obj]) -> Vec<usize> {
    let index: HashMap<&C::Obj, usize> = objects.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let mut parent: Vec<usize> = (0..objects.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, a) in objects.iter().enumerate() {
        for f in cat.morphisms_from(a) {
            if let Some(&j) = index.get(&cat.cod(&f)) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
                parent[hi] = lo;
            }
        }
    }
    (0..objects.len()).map(|i| find(&mut parent, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_independent_and_stable() {
        let spec = SampleSpec::default();
        let a: Vec<u32> = (0..5).map(|_| spec.rng("x").gen()).collect();
        let b: Vec<u32> = (0..5).map(|_| spec.rng("x").gen()).collect();
        assert_eq!(a, b);
        assert_ne!(spec.rng("x").gen::<u64>(), spec.rng("y").gen::<u64>());
        assert_eq!(stream_hash(""), 0xcbf2_9ce4_8422_2325);
    }

    #[test]
    fn zero_bounds_are_rejected() {
        assert!(SampleSpec::new(0, 2, 10, 1).validate().is_err());
        assert!(SampleSpec::default().validate().is_ok());
    }
}
