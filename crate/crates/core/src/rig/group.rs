//! Finite abelian groups as products of cyclic groups, and their group
//! rings with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rig::int_serde;

/// An element of a product of cyclic groups: one residue per factor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem(pub Vec<u32>);

impl GroupElem {
    pub fn residues(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Debug for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{:?}", self.0)
    }
}

impl Serialize for GroupElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Accepts a residue list, or a bare integer for single-factor groups.
impl<'de> Deserialize<'de> for GroupElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<GroupElem, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            One(u32),
            Many(Vec<u32>),
        }
        Ok(match Repr::deserialize(d)? {
            Repr::One(r) => GroupElem(vec![r]),
            Repr::Many(v) => GroupElem(v),
        })
    }
}

/// `ℤ/m₁ × … × ℤ/m_r`; the empty product is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u32>,
}

impl FiniteAbelianGroup {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if moduli.iter().any(|&m| m == 0) {
            return Err(Error::Invalid(format!("group moduli must be positive: {:?}", moduli)));
        }
        Ok(FiniteAbelianGroup { moduli })
    }

    pub fn cyclic(k: u32) -> Self {
        FiniteAbelianGroup::new(vec![k]).expect("positive modulus")
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { moduli: Vec::new() }
    }

    /// Parses a comma list of moduli, e.g. `2,2`.
    pub fn parse(text: &str) -> Result<Self> {
        let moduli = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad group modulus `{}` in `{}`", t, text)))
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteAbelianGroup::new(moduli)
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    /// The comma-list spelling accepted by [`FiniteAbelianGroup::parse`].
    pub fn key(&self) -> String {
        self.moduli.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().map(|&m| m as usize).product()
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem(vec![0; self.moduli.len()])
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        g.0.len() == self.moduli.len() && g.0.iter().zip(&self.moduli).all(|(&r, &m)| r < m)
    }

    pub fn op(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        GroupElem(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.moduli)
                .map(|((&x, &y), &m)| ((x as u64 + y as u64) % m as u64) as u32)
                .collect(),
        )
    }

    pub fn inv(&self, a: &GroupElem) -> GroupElem {
        GroupElem(a.0.iter().zip(&self.moduli).map(|(&x, &m)| (m - x) % m).collect())
    }

    /// All elements, lexicographic in the residue vectors.
    pub fn elements(&self) -> Vec<GroupElem> {
        let mut out = vec![GroupElem(Vec::new())];
        for &m in &self.moduli {
            out = out
                .into_iter()
                .flat_map(|g| {
                    (0..m).map(move |r| {
                        let mut v = g.0.clone();
                        v.push(r);
                        GroupElem(v)
                    })
                })
                .collect();
        }
        out
    }

    /// Position of `g` in [`FiniteAbelianGroup::elements`].
    pub fn index_of(&self, g: &GroupElem) -> usize {
        g.0.iter().zip(&self.moduli).fold(0usize, |acc, (&r, &m)| acc * m as usize + r as usize)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> GroupElem {
        GroupElem(self.moduli.iter().map(|&m| rng.gen_range(0..m)).collect())
    }

    pub fn validate(&self, g: &GroupElem) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::Invalid(format!("{:?} is not an element of Z/{:?}", g, self.moduli)))
        }
    }
}

/// A finitely supported integer combination of group elements, stored
/// sparsely with no zero coefficients and keys in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GroupRingElem {
    coeffs: BTreeMap<GroupElem, BigInt>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        GroupRingElem::default()
    }

    pub fn basis(g: GroupElem) -> Self {
        GroupRingElem::term(g, BigInt::one())
    }

    pub fn term(g: GroupElem, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(g, c);
        }
        GroupRingElem { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GroupElem, BigInt)>) -> Self {
        let mut out = GroupRingElem::zero();
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    pub fn one(group: &FiniteAbelianGroup) -> Self {
        GroupRingElem::basis(group.identity())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, g: &GroupElem) -> BigInt {
        self.coeffs.get(g).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElem, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Sum of coefficients (the augmentation).
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    fn add_term(&mut self, g: GroupElem, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(g).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.coeffs {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElem { coeffs: self.coeffs.iter().map(|(g, c)| (g.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self, group: &FiniteAbelianGroup) -> Self {
        let mut out = GroupRingElem::zero();
        for (g, a) in &self.coeffs {
            for (h, b) in &other.coeffs {
                out.add_term(group.op(g, h), a * b);
            }
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GroupRingElem::from_terms(self.coeffs.iter().map(|(g, c)| (g.clone(), c * k)))
    }

    /// The involution induced by `g ↦ g⁻¹`.
    pub fn invert_group(&self, group: &FiniteAbelianGroup) -> Self {
        GroupRingElem::from_terms(self.coeffs.iter().map(|(g, c)| (group.inv(g), c.clone())))
    }
}

impl fmt::Debug for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.coeffs.iter().map(|(g, c)| format!("{}·{:?}", c, g.0)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    g: GroupElem,
    #[serde(with = "int_serde")]
    c: BigInt,
}

/// Serialized as a list of `{"g": residues, "c": coefficient}` terms.
impl Serialize for GroupRingElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for (g, c) in &self.coeffs {
            seq.serialize_element(&Term { g: g.clone(), c: c.clone() })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for GroupRingElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        let mut keys = std::collections::BTreeSet::new();
        for t in &terms {
            if !keys.insert(t.g.clone()) {
                return Err(D::Error::custom(format!("repeated group element {:?}", t.g)));
            }
        }
        Ok(GroupRingElem::from_terms(terms.into_iter().map(|t| (t.g, t.c))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(r: u32) -> GroupElem {
        GroupElem(vec![r])
    }

    #[test]
    fn group_laws_on_product() {
        let grp = FiniteAbelianGroup::new(vec![2, 3]).unwrap();
        let els = grp.elements();
        assert_eq!(els.len(), 6);
        for (i, a) in els.iter().enumerate() {
            assert_eq!(grp.index_of(a), i);
            assert_eq!(grp.op(a, &grp.inv(a)), grp.identity());
            assert_eq!(grp.op(a, &grp.identity()), *a);
            for b in &els {
                assert_eq!(grp.op(a, b), grp.op(b, a));
            }
        }
    }

    #[test]
    fn canonical_form_drops_zero_coefficients() {
        let a = GroupRingElem::from_terms([(g(0), BigInt::from(2)), (g(1), BigInt::from(1))]);
        let b = GroupRingElem::basis(g(1));
        let d = a.sub(&b);
        assert_eq!(d, GroupRingElem::term(g(0), BigInt::from(2)));
        assert_eq!(d.terms().count(), 1);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn multiplication_uses_group_law() {
        let grp = FiniteAbelianGroup::cyclic(2);
        let x = GroupRingElem::basis(g(1));
        assert_eq!(x.mul(&x, &grp), GroupRingElem::one(&grp));
    }

    #[test]
    fn serde_round_trip() {
        let a = GroupRingElem::from_terms([(g(0), BigInt::from(-3)), (g(2), BigInt::from(5))]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"[{"g":[0],"c":-3},{"g":[2],"c":5}]"#);
        assert_eq!(serde_json::from_str::<GroupRingElem>(&json).unwrap(), a);
        assert!(serde_json::from_str::<GroupRingElem>(r#"[{"g":1,"c":1},{"g":[1],"c":2}]"#).is_err());
    }
}
