//! The discrete category `𝓡_R` of a rig `R`: objects are the elements, the
//! only morphisms are identities, `⊕ = +` and `⊗ = ·`. A rig anti-involution
//! gives `ζ`, with every `μ` an identity.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::category::Bimonoidal;
use crate::error::{Error, Result};
use crate::rig::{ExplicitFiniteRig, FiniteAbelianGroup, GroupElem, GroupRingElem, Pi0Rig, RigElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrete {
    pub rig: Pi0Rig,
    key: String,
}

impl Discrete {
    pub fn new(rig: Pi0Rig, key: impl Into<String>) -> Self {
        Discrete { rig, key: key.into() }
    }

    pub fn integers() -> Self {
        Discrete::new(Pi0Rig::Integers, "Z")
    }

    pub fn naturals() -> Self {
        Discrete::new(Pi0Rig::Naturals, "N")
    }

    pub fn modular(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::Invalid("modulus must be positive".into()));
        }
        Ok(Discrete::new(Pi0Rig::Modular(k), format!("Z/{}", k)))
    }

    pub fn group_ring(group: FiniteAbelianGroup) -> Self {
        let key = format!("Z[{}]", group.key());
        Discrete::new(Pi0Rig::GroupRing(group), key)
    }

    /// 2×2 matrices over 𝔽₂ with the transpose.
    pub fn m2f2() -> Self {
        Discrete::new(Pi0Rig::Finite(Arc::new(m2f2_rig())), "M2F2")
    }

    pub fn is_commutative(&self) -> bool {
        match &self.rig {
            Pi0Rig::Finite(r) => (0..r.size()).all(|a| (0..r.size()).all(|b| r.mul(a, b) == r.mul(b, a))),
            _ => true,
        }
    }
}

/// Element index `8a + 4b + 2c + d` encodes `[[a, b], [c, d]]`.
pub fn m2f2_rig() -> ExplicitFiniteRig {
    let decode = |x: usize| [[(x >> 3) & 1, (x >> 2) & 1], [(x >> 1) & 1, x & 1]];
    let encode = |m: [[usize; 2]; 2]| (m[0][0] << 3) | (m[0][1] << 2) | (m[1][0] << 1) | m[1][1];
    let mul = |x: usize, y: usize| {
        let (a, b) = (decode(x), decode(y));
        let mut c = [[0; 2]; 2];
        for (i, row) in c.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 2;
            }
        }
        encode(c)
    };
    let transpose = |x: usize| {
        let a = decode(x);
        encode([[a[0][0], a[1][0]], [a[0][1], a[1][1]]])
    };
    ExplicitFiniteRig {
        names: (0..16)
            .map(|x| {
                let m = decode(x);
                format!("[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
            })
            .collect(),
        add: (0..16).map(|x| (0..16).map(|y| x ^ y).collect()).collect(),
        mul: (0..16).map(|x| (0..16).map(|y| mul(x, y)).collect()).collect(),
        zero: 0,
        one: 0b1001,
        involution: Some((0..16).map(transpose).collect()),
    }
}

/// Integer vectors with `Σ|c_i| ≤ bound`, optionally nonnegative.
fn bounded_vectors(len: usize, bound: i64, nonneg: bool) -> Vec<Vec<i64>> {
    let mut out = vec![(Vec::new(), 0i64)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|(v, used)| {
                let low = if nonneg { 0 } else { -(bound - used) };
                (low..=bound - used).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    (w, used + c.abs())
                })
            })
            .collect();
    }
    out.into_iter().map(|(v, _)| v).collect()
}

impl Bimonoidal for Discrete {
    type Obj = RigElem;
    type Mor = RigElem;

    fn name(&self) -> String {
        format!("discrete:{}", self.key)
    }

    fn dom(&self, f: &RigElem) -> RigElem {
        f.clone()
    }

    fn cod(&self, f: &RigElem) -> RigElem {
        f.clone()
    }

    fn id(&self, a: &RigElem) -> RigElem {
        a.clone()
    }

    fn compose(&self, g: &RigElem, f: &RigElem) -> Result<RigElem> {
        if g != f {
            return Err(Error::mismatch(format!("cannot compose id_{:?} after id_{:?}", g, f)));
        }
        Ok(f.clone())
    }

    fn inverse(&self, f: &RigElem) -> Option<RigElem> {
        Some(f.clone())
    }

    fn zero(&self) -> RigElem {
        self.rig.zero()
    }

    fn one(&self) -> RigElem {
        self.rig.one()
    }

    fn oplus(&self, a: &RigElem, b: &RigElem) -> RigElem {
        self.rig.add(a, b).expect("objects lie in the rig")
    }

    fn oplus_mor(&self, f: &RigElem, g: &RigElem) -> RigElem {
        self.oplus(f, g)
    }

    fn otimes(&self, a: &RigElem, b: &RigElem) -> RigElem {
        self.rig.mul(a, b).expect("objects lie in the rig")
    }

    fn otimes_mor(&self, f: &RigElem, g: &RigElem) -> RigElem {
        self.otimes(f, g)
    }

    fn c_oplus(&self, a: &RigElem, b: &RigElem) -> RigElem {
        self.oplus(a, b)
    }

    fn d_r(&self, a: &RigElem, b: &RigElem, c: &RigElem) -> RigElem {
        self.otimes(a, &self.oplus(b, c))
    }

    fn zeta(&self, a: &RigElem) -> Option<RigElem> {
        self.rig.involution(a)
    }

    fn zeta_mor(&self, f: &RigElem) -> Option<RigElem> {
        self.rig.involution(f)
    }

    fn mu(&self, a: &RigElem, b: &RigElem) -> Option<RigElem> {
        self.rig.involution(&self.otimes(a, b))
    }

    fn beta(&self, a: &RigElem, b: &RigElem) -> Option<RigElem> {
        self.is_commutative().then(|| self.otimes(a, b))
    }

    fn component(&self, a: &RigElem) -> Option<RigElem> {
        Some(a.clone())
    }

    fn component_rig(&self) -> Option<Pi0Rig> {
        Some(self.rig.clone())
    }

    fn is_bipermutative(&self) -> bool {
        self.is_commutative()
    }

    fn is_discrete(&self) -> bool {
        true
    }

    fn objects_upto(&self, size: usize) -> Vec<RigElem> {
        let s = size as i64;
        match &self.rig {
            Pi0Rig::Naturals => (0..=s).map(RigElem::int).collect(),
            Pi0Rig::Integers => (-s..=s).map(RigElem::int).collect(),
            Pi0Rig::Modular(k) => (0..*k).map(RigElem::Mod).collect(),
            Pi0Rig::GroupRig(g) | Pi0Rig::GroupRing(g) => {
                let els: Vec<GroupElem> = g.elements();
                bounded_vectors(els.len(), s, matches!(self.rig, Pi0Rig::GroupRig(_)))
                    .into_iter()
                    .map(|v| {
                        RigElem::Group(GroupRingElem::from_terms(
                            els.iter().cloned().zip(v.into_iter().map(BigInt::from)),
                        ))
                    })
                    .collect()
            }
            Pi0Rig::Finite(r) => (0..r.size()).map(RigElem::Finite).collect(),
        }
    }

    fn morphisms_from(&self, a: &RigElem) -> Vec<RigElem> {
        vec![a.clone()]
    }

    fn parse_obj(&self, v: &serde_json::Value) -> Result<RigElem> {
        let bad = || Error::Parse(format!("{} is not an element of {}", v, self.rig.kind_name()));
        let x = match (&self.rig, v) {
            (Pi0Rig::Naturals | Pi0Rig::Integers, serde_json::Value::Number(n)) => {
                RigElem::Int(n.to_string().parse::<BigInt>().map_err(|_| bad())?)
            }
            (Pi0Rig::Naturals | Pi0Rig::Integers, serde_json::Value::String(s)) => {
                RigElem::Int(s.parse::<BigInt>().map_err(|_| bad())?)
            }
            (Pi0Rig::Modular(k), serde_json::Value::Number(n)) => RigElem::Mod(n.as_u64().ok_or_else(bad)? % k),
            (Pi0Rig::GroupRig(g) | Pi0Rig::GroupRing(g), serde_json::Value::Number(n)) => {
                let c = n.to_string().parse::<BigInt>().map_err(|_| bad())?;
                RigElem::Group(GroupRingElem::term(g.identity(), c))
            }
            (Pi0Rig::GroupRig(_) | Pi0Rig::GroupRing(_), _) => RigElem::Group(crate::category::from_json(v)?),
            (Pi0Rig::Finite(_), serde_json::Value::Number(n)) => RigElem::Finite(n.as_u64().ok_or_else(bad)? as usize),
            (Pi0Rig::Finite(r), serde_json::Value::String(s)) => {
                RigElem::Finite(r.names.iter().position(|x| x == s).ok_or_else(bad)?)
            }
            _ => return Err(bad()),
        };
        if !self.rig.contains(&x) {
            return Err(bad());
        }
        Ok(x)
    }

    fn parse_mor(&self, v: &serde_json::Value) -> Result<RigElem> {
        self.parse_obj(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m2f2_transpose_reverses_products() {
        let r = m2f2_rig();
        r.validate().unwrap();
        let t = r.involution.clone().unwrap();
        for a in 0..16 {
            assert_eq!(t[t[a]], a);
            for b in 0..16 {
                assert_eq!(t[r.mul(a, b)], r.mul(t[b], t[a]));
            }
        }
        // not commutative: e12·e21 = e11 but e21·e12 = e22
        assert_ne!(r.mul(0b0100, 0b0010), r.mul(0b0010, 0b0100));
        assert!(!Discrete::m2f2().is_commutative());
    }

    #[test]
    fn bounded_vector_counts() {
        assert_eq!(bounded_vectors(1, 3, false).len(), 7);
        assert_eq!(bounded_vectors(2, 1, false).len(), 5);
        assert_eq!(bounded_vectors(3, 2, true).len(), 10);
    }
}
