//! Rigs of path components, their group completions, and invertibility of
//! matrices over them.

pub mod finite;
pub mod group;
pub mod linalg;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::Serialize;

pub use finite::ExplicitFiniteRig;
pub use group::{FiniteAbelianGroup, GroupElem, GroupRingElem};
pub use linalg::{determinant, is_unimodular, regular_representation};

use crate::error::{Error, Result};

/// Serde helper: integers travel as JSON numbers when they fit in `i64`,
/// as decimal strings otherwise.
pub mod int_serde {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match x.to_i64() {
            Some(v) => v.serialize(s),
            None => x.to_string().serialize(s),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(BigInt::from(v)),
            Repr::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// An element of a π₀ rig or of its group completion.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum RigElem {
    Int(#[serde(with = "int_serde")] BigInt),
    Mod(u64),
    Group(GroupRingElem),
    Finite(usize),
}

impl RigElem {
    pub fn int(v: i64) -> RigElem {
        RigElem::Int(BigInt::from(v))
    }
}

impl fmt::Debug for RigElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RigElem::Int(v) => write!(f, "{}", v),
            RigElem::Mod(v) => write!(f, "{}̄", v),
            RigElem::Group(g) => write!(f, "{:?}", g),
            RigElem::Finite(i) => write!(f, "#{}", i),
        }
    }
}

/// The supported π₀ rigs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pi0Rig {
    Naturals,
    Integers,
    Modular(u64),
    /// ℕ₀[G]
    GroupRig(FiniteAbelianGroup),
    /// ℤ[G]
    GroupRing(FiniteAbelianGroup),
    Finite(Arc<ExplicitFiniteRig>),
}

impl Pi0Rig {
    pub fn kind_name(&self) -> String {
        match self {
            Pi0Rig::Naturals => "N0".into(),
            Pi0Rig::Integers => "Z".into(),
            Pi0Rig::Modular(k) => format!("Z/{}", k),
            Pi0Rig::GroupRig(g) => format!("N0[{}]", g.key()),
            Pi0Rig::GroupRing(g) => format!("Z[{}]", g.key()),
            Pi0Rig::Finite(r) => format!("finite({})", r.size()),
        }
    }

    pub fn zero(&self) -> RigElem {
        match self {
            Pi0Rig::Naturals | Pi0Rig::Integers => RigElem::Int(BigInt::zero()),
            Pi0Rig::Modular(_) => RigElem::Mod(0),
            Pi0Rig::GroupRig(_) | Pi0Rig::GroupRing(_) => RigElem::Group(GroupRingElem::zero()),
            Pi0Rig::Finite(r) => RigElem::Finite(r.zero),
        }
    }

    pub fn one(&self) -> RigElem {
        match self {
            Pi0Rig::Naturals | Pi0Rig::Integers => RigElem::Int(BigInt::one()),
            Pi0Rig::Modular(k) => RigElem::Mod(1 % k),
            Pi0Rig::GroupRig(g) | Pi0Rig::GroupRing(g) => RigElem::Group(GroupRingElem::one(g)),
            Pi0Rig::Finite(r) => RigElem::Finite(r.one),
        }
    }

    fn mismatch(&self, a: &RigElem) -> Error {
        Error::mismatch(format!("{:?} is not an element of {}", a, self.kind_name()))
    }

    pub fn contains(&self, a: &RigElem) -> bool {
        match (self, a) {
            (Pi0Rig::Naturals, RigElem::Int(v)) => !v.is_negative(),
            (Pi0Rig::Integers, RigElem::Int(_)) => true,
            (Pi0Rig::Modular(k), RigElem::Mod(v)) => v < k,
            (Pi0Rig::GroupRig(g), RigElem::Group(x)) => {
                x.is_nonnegative() && x.terms().all(|(h, _)| g.contains(h))
            }
            (Pi0Rig::GroupRing(g), RigElem::Group(x)) => x.terms().all(|(h, _)| g.contains(h)),
            (Pi0Rig::Finite(r), RigElem::Finite(i)) => *i < r.size(),
            _ => false,
        }
    }

    pub fn add(&self, a: &RigElem, b: &RigElem) -> Result<RigElem> {
        Ok(match (self, a, b) {
            (Pi0Rig::Naturals | Pi0Rig::Integers, RigElem::Int(x), RigElem::Int(y)) => RigElem::Int(x + y),
            (Pi0Rig::Modular(k), RigElem::Mod(x), RigElem::Mod(y)) => RigElem::Mod((x + y) % k),
            (Pi0Rig::GroupRig(_) | Pi0Rig::GroupRing(_), RigElem::Group(x), RigElem::Group(y)) => {
                RigElem::Group(x.add(y))
            }
            (Pi0Rig::Finite(r), RigElem::Finite(x), RigElem::Finite(y)) => RigElem::Finite(r.add(*x, *y)),
            _ => return Err(self.mismatch(if self.contains(a) { b } else { a })),
        })
    }

    pub fn mul(&self, a: &RigElem, b: &RigElem) -> Result<RigElem> {
        Ok(match (self, a, b) {
            (Pi0Rig::Naturals | Pi0Rig::Integers, RigElem::Int(x), RigElem::Int(y)) => RigElem::Int(x * y),
            (Pi0Rig::Modular(k), RigElem::Mod(x), RigElem::Mod(y)) => RigElem::Mod((x * y) % k),
            (Pi0Rig::GroupRig(g) | Pi0Rig::GroupRing(g), RigElem::Group(x), RigElem::Group(y)) => {
                RigElem::Group(x.mul(y, g))
            }
            (Pi0Rig::Finite(r), RigElem::Finite(x), RigElem::Finite(y)) => RigElem::Finite(r.mul(*x, *y)),
            _ => return Err(self.mismatch(if self.contains(a) { b } else { a })),
        })
    }

    /// The ring `Gr(self)`.
    pub fn group_completion(&self) -> Result<Pi0Rig> {
        match self {
            Pi0Rig::Naturals | Pi0Rig::Integers => Ok(Pi0Rig::Integers),
            Pi0Rig::Modular(k) => Ok(Pi0Rig::Modular(*k)),
            Pi0Rig::GroupRig(g) | Pi0Rig::GroupRing(g) => Ok(Pi0Rig::GroupRing(g.clone())),
            Pi0Rig::Finite(r) if r.is_ring() => Ok(self.clone()),
            Pi0Rig::Finite(_) => Err(Error::capability(
                "group completion of an explicit finite rig without additive inverses",
            )),
        }
    }

    /// The anti-involution the rig inherits, when it has one.
    pub fn involution(&self, a: &RigElem) -> Option<RigElem> {
        match (self, a) {
            (Pi0Rig::Naturals | Pi0Rig::Integers | Pi0Rig::Modular(_), x) => Some(x.clone()),
            (Pi0Rig::GroupRig(g) | Pi0Rig::GroupRing(g), RigElem::Group(x)) => {
                Some(RigElem::Group(x.invert_group(g)))
            }
            (Pi0Rig::Finite(r), RigElem::Finite(i)) => r.involution.as_ref().map(|t| RigElem::Finite(t[*i])),
            _ => None,
        }
    }

    /// A pseudo-random element with coefficients bounded by `bound`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> RigElem {
        match self {
            Pi0Rig::Naturals => RigElem::int(rng.gen_range(0..=bound)),
            Pi0Rig::Integers => RigElem::int(rng.gen_range(-bound..=bound)),
            Pi0Rig::Modular(k) => RigElem::Mod(rng.gen_range(0..*k)),
            Pi0Rig::GroupRig(g) | Pi0Rig::GroupRing(g) => {
                let low = if matches!(self, Pi0Rig::GroupRig(_)) { 0 } else { -bound };
                RigElem::Group(GroupRingElem::from_terms(
                    g.elements().into_iter().map(|h| (h, BigInt::from(rng.gen_range(low..=bound)))),
                ))
            }
            Pi0Rig::Finite(r) => RigElem::Finite(rng.gen_range(0..r.size())),
        }
    }
}

/// The canonical representative of the formal difference `x − y` in the
/// group completion of `rig`.
pub fn gr_canonicalize(x: &RigElem, y: &RigElem, rig: &Pi0Rig) -> Result<RigElem> {
    let gr = rig.group_completion()?;
    for e in [x, y] {
        if !gr.contains(e) {
            return Err(gr.mismatch(e));
        }
    }
    Ok(match (&gr, x, y) {
        (Pi0Rig::Integers, RigElem::Int(a), RigElem::Int(b)) => RigElem::Int(a - b),
        (Pi0Rig::Modular(k), RigElem::Mod(a), RigElem::Mod(b)) => RigElem::Mod((a + k - b) % k),
        (Pi0Rig::GroupRing(_), RigElem::Group(a), RigElem::Group(b)) => RigElem::Group(a.sub(b)),
        (Pi0Rig::Finite(r), RigElem::Finite(a), RigElem::Finite(b)) => {
            RigElem::Finite(r.add(*a, r.neg(*b).expect("group completion is a ring")))
        }
        _ => unreachable!("membership checked above"),
    })
}

/// Decides whether a square matrix over `Gr(rig)` is invertible.
pub fn is_invertible_matrix(m: &[Vec<RigElem>], rig: &Pi0Rig) -> Result<bool> {
    let n = m.len();
    if let Some(i) = m.iter().position(|r| r.len() != n) {
        return Err(Error::Size(format!("row {} has length {}, expected {}", i, m[i].len(), n)));
    }
    let gr = rig.group_completion()?;
    for e in m.iter().flatten() {
        if !gr.contains(e) {
            return Err(gr.mismatch(e));
        }
    }
    match &gr {
        Pi0Rig::Integers => {
            let ints: Vec<Vec<BigInt>> = m
                .iter()
                .map(|r| r.iter().map(|e| match e { RigElem::Int(v) => v.clone(), _ => unreachable!() }).collect())
                .collect();
            is_unimodular(&ints)
        }
        Pi0Rig::Modular(k) => {
            let ints: Vec<Vec<BigInt>> = m
                .iter()
                .map(|r| r.iter().map(|e| match e { RigElem::Mod(v) => BigInt::from(*v), _ => unreachable!() }).collect())
                .collect();
            let det = determinant(&ints)?.mod_floor(&BigInt::from(*k));
            Ok(det.gcd(&BigInt::from(*k)).is_one())
        }
        Pi0Rig::GroupRing(g) => {
            let elems: Vec<Vec<GroupRingElem>> = m
                .iter()
                .map(|r| r.iter().map(|e| match e { RigElem::Group(x) => x.clone(), _ => unreachable!() }).collect())
                .collect();
            is_unimodular(&regular_representation(&elems, g)?)
        }
        Pi0Rig::Finite(r) => {
            let idx: Vec<Vec<usize>> = m
                .iter()
                .map(|row| row.iter().map(|e| match e { RigElem::Finite(i) => *i, _ => unreachable!() }).collect())
                .collect();
            r.invertible_matrix(&idx)
        }
        Pi0Rig::Naturals | Pi0Rig::GroupRig(_) => unreachable!("group completion is a ring"),
    }
}

/// The determinant of an integer-valued matrix, for diagnostics.
pub fn integer_determinant(m: &[Vec<RigElem>]) -> Option<BigInt> {
    let ints: Option<Vec<Vec<BigInt>>> = m
        .iter()
        .map(|r| r.iter().map(|e| match e { RigElem::Int(v) => Some(v.clone()), _ => None }).collect())
        .collect();
    ints.and_then(|m| determinant(&m).ok())
}

pub fn rig_elem_to_i64(e: &RigElem) -> Option<i64> {
    match e {
        RigElem::Int(v) => v.to_i64(),
        RigElem::Mod(v) => i64::try_from(*v).ok(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn gre(terms: &[(u32, i64)]) -> RigElem {
        RigElem::Group(GroupRingElem::from_terms(
            terms.iter().map(|&(g, c)| (GroupElem(vec![g]), BigInt::from(c))),
        ))
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(gr_canonicalize(&RigElem::int(3), &RigElem::int(1), &Pi0Rig::Naturals).unwrap(), RigElem::int(2));
        let g2 = FiniteAbelianGroup::cyclic(2);
        let rig = Pi0Rig::GroupRig(g2);
        let x = gre(&[(0, 2), (1, 1)]);
        assert_eq!(gr_canonicalize(&x, &gre(&[(1, 1)]), &rig).unwrap(), gre(&[(0, 2)]));
        assert_eq!(gr_canonicalize(&x, &x, &rig).unwrap(), gre(&[]));
    }

    #[test]
    fn canonicalize_is_idempotent_and_cancels() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let rigs = [
            Pi0Rig::Naturals,
            Pi0Rig::Modular(6),
            Pi0Rig::GroupRig(FiniteAbelianGroup::new(vec![2, 2]).unwrap()),
        ];
        for rig in &rigs {
            let gr = rig.group_completion().unwrap();
            for _ in 0..100 {
                let (x, y, z) = (rig.random(&mut rng, 4), rig.random(&mut rng, 4), rig.random(&mut rng, 4));
                let c = gr_canonicalize(&x, &y, rig).unwrap();
                assert_eq!(gr_canonicalize(&c, &gr.zero(), &gr).unwrap(), c);
                let shifted = gr_canonicalize(&rig.add(&x, &z).unwrap(), &rig.add(&y, &z).unwrap(), rig).unwrap();
                assert_eq!(shifted, c);
            }
        }
    }

    #[test]
    fn unsupported_completion_is_a_capability_error() {
        // the Boolean rig {0, 1} with 1 + 1 = 1 has no additive inverses
        let boolean = ExplicitFiniteRig {
            names: vec!["0".into(), "1".into()],
            add: vec![vec![0, 1], vec![1, 1]],
            mul: vec![vec![0, 0], vec![0, 1]],
            zero: 0,
            one: 1,
            involution: None,
        };
        let rig = Pi0Rig::Finite(Arc::new(boolean));
        let err = gr_canonicalize(&RigElem::Finite(1), &RigElem::Finite(0), &rig).unwrap_err();
        assert!(matches!(err, Error::Capability(_)));
        assert!(matches!(is_invertible_matrix(&[vec![RigElem::Finite(1)]], &rig), Err(Error::Capability(_))));
    }

    #[test]
    fn invertibility_examples() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<RigElem>> {
            rows.iter().map(|r| r.iter().map(|&x| RigElem::int(x)).collect()).collect()
        };
        assert!(is_invertible_matrix(&m(&[&[1, 1], &[0, 1]]), &Pi0Rig::Integers).unwrap());
        assert!(!is_invertible_matrix(&m(&[&[1, 1], &[1, 1]]), &Pi0Rig::Integers).unwrap());
        let z2 = Pi0Rig::GroupRing(FiniteAbelianGroup::cyclic(2));
        assert!(is_invertible_matrix(&[vec![gre(&[(1, 1)])]], &z2).unwrap());
        assert!(!is_invertible_matrix(&[vec![gre(&[(0, 1), (1, 1)])]], &z2).unwrap());
        assert!(is_invertible_matrix(&[vec![RigElem::Mod(5)]], &Pi0Rig::Modular(6)).unwrap());
        assert!(!is_invertible_matrix(&[vec![RigElem::Mod(4)]], &Pi0Rig::Modular(6)).unwrap());
    }

    #[test]
    fn rig_axioms_on_samples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let rigs = [
            Pi0Rig::Naturals,
            Pi0Rig::Integers,
            Pi0Rig::Modular(12),
            Pi0Rig::GroupRig(FiniteAbelianGroup::cyclic(3)),
            Pi0Rig::GroupRing(FiniteAbelianGroup::new(vec![2, 2]).unwrap()),
        ];
        for rig in &rigs {
            for _ in 0..200 {
                let (a, b, c) = (rig.random(&mut rng, 3), rig.random(&mut rng, 3), rig.random(&mut rng, 3));
                let add = |x: &RigElem, y: &RigElem| rig.add(x, y).unwrap();
                let mul = |x: &RigElem, y: &RigElem| rig.mul(x, y).unwrap();
                assert_eq!(add(&a, &rig.zero()), a);
                assert_eq!(mul(&a, &rig.one()), a);
                assert_eq!(mul(&rig.one(), &a), a);
                assert_eq!(add(&a, &b), add(&b, &a));
                assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
                assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
                assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
                assert_eq!(mul(&add(&a, &b), &c), add(&mul(&a, &c), &mul(&b, &c)));
                assert_eq!(mul(&rig.zero(), &a), rig.zero());
            }
        }
    }
}
