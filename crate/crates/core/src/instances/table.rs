//! Finite instances given by explicit tables, loaded from JSON.
//!
//! Objects and morphisms are referred to by index. Every structure map is a
//! table of morphism indices; optional tables supply `ζ`, `μ` and `β`. The
//! π₀ rig is computed from the morphism graph by union-find.

use std::sync::Arc;

use serde::Deserialize;

use crate::category::Bimonoidal;
use crate::error::{Error, Result};
use crate::rig::{ExplicitFiniteRig, Pi0Rig, RigElem};
use crate::sample::pi0_classes;

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismEntry {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableSpec {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismEntry>,
    /// `identity[a]` is the identity morphism of object `a`.
    pub identity: Vec<usize>,
    /// `compose[g][f] = g ∘ f`, `null` when not composable.
    pub compose: Vec<Vec<Option<usize>>>,
    pub zero: usize,
    pub one: usize,
    pub oplus: Vec<Vec<usize>>,
    pub otimes: Vec<Vec<usize>>,
    pub oplus_mor: Vec<Vec<usize>>,
    pub otimes_mor: Vec<Vec<usize>>,
    pub c_oplus: Vec<Vec<usize>>,
    pub d_r: Vec<Vec<Vec<usize>>>,
    #[serde(default)]
    pub zeta: Option<Vec<usize>>,
    #[serde(default)]
    pub zeta_mor: Option<Vec<usize>>,
    #[serde(default)]
    pub mu: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub beta: Option<Vec<Vec<usize>>>,
}

fn check_index(path: &str, x: usize, bound: usize, what: &str) -> Result<()> {
    if x >= bound {
        return Err(Error::schema(path, format!("{} index {} out of range ({} {}s)", what, x, bound, what)));
    }
    Ok(())
}

fn check_square(path: &str, table: &[Vec<usize>], n: usize, bound: usize, what: &str) -> Result<()> {
    if table.len() != n {
        return Err(Error::schema(path, format!("expected {} rows, found {}", n, table.len())));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::schema(format!("{}[{}]", path, i), format!("expected {} entries, found {}", n, row.len())));
        }
        for (j, &x) in row.iter().enumerate() {
            check_index(&format!("{}[{}][{}]", path, i, j), x, bound, what)?;
        }
    }
    Ok(())
}

impl TableSpec {
    /// Shape, range and typing checks; the bimonoidal laws are left to the
    /// law suites.
    pub fn validate(&self) -> Result<()> {
        let no = self.objects.len();
        let nm = self.morphisms.len();
        if no == 0 {
            return Err(Error::schema("objects", "at least one object is required"));
        }
        for (i, m) in self.morphisms.iter().enumerate() {
            check_index(&format!("morphisms[{}].dom", i), m.dom, no, "object")?;
            check_index(&format!("morphisms[{}].cod", i), m.cod, no, "object")?;
        }
        if self.identity.len() != no {
            return Err(Error::schema("identity", format!("expected {} entries", no)));
        }
        for (a, &f) in self.identity.iter().enumerate() {
            let path = format!("identity[{}]", a);
            check_index(&path, f, nm, "morphism")?;
            let m = &self.morphisms[f];
            if m.dom != a || m.cod != a {
                return Err(Error::schema(path, format!("morphism {} is not an endomorphism of object {}", f, a)));
            }
        }
        if self.compose.len() != nm {
            return Err(Error::schema("compose", format!("expected {} rows", nm)));
        }
        for (g, row) in self.compose.iter().enumerate() {
            if row.len() != nm {
                return Err(Error::schema(format!("compose[{}]", g), format!("expected {} entries", nm)));
            }
            for (f, entry) in row.iter().enumerate() {
                let path = format!("compose[{}][{}]", g, f);
                let composable = self.morphisms[f].cod == self.morphisms[g].dom;
                match entry {
                    None if composable => return Err(Error::schema(path, "composable pair has no composite")),
                    Some(_) if !composable => return Err(Error::schema(path, "composite of a non-composable pair")),
                    Some(h) => {
                        check_index(&path, *h, nm, "morphism")?;
                        let hm = &self.morphisms[*h];
                        if hm.dom != self.morphisms[f].dom || hm.cod != self.morphisms[g].cod {
                            return Err(Error::schema(path, "composite has the wrong domain or codomain"));
                        }
                    }
                    None => {}
                }
            }
        }
        check_index("zero", self.zero, no, "object")?;
        check_index("one", self.one, no, "object")?;
        check_square("oplus", &self.oplus, no, no, "object")?;
        check_square("otimes", &self.otimes, no, no, "object")?;
        check_square("oplus_mor", &self.oplus_mor, nm, nm, "morphism")?;
        check_square("otimes_mor", &self.otimes_mor, nm, nm, "morphism")?;
        check_square("c_oplus", &self.c_oplus, no, no, "morphism")?;
        if self.d_r.len() != no {
            return Err(Error::schema("d_r", format!("expected {} blocks", no)));
        }
        for (a, block) in self.d_r.iter().enumerate() {
            check_square(&format!("d_r[{}]", a), block, no, nm, "morphism")?;
        }
        if let Some(z) = &self.zeta {
            if z.len() != no {
                return Err(Error::schema("zeta", format!("expected {} entries", no)));
            }
            for (i, &x) in z.iter().enumerate() {
                check_index(&format!("zeta[{}]", i), x, no, "object")?;
            }
        }
        if let Some(z) = &self.zeta_mor {
            if z.len() != nm {
                return Err(Error::schema("zeta_mor", format!("expected {} entries", nm)));
            }
            for (i, &x) in z.iter().enumerate() {
                check_index(&format!("zeta_mor[{}]", i), x, nm, "morphism")?;
            }
        }
        if self.zeta.is_some() != self.zeta_mor.is_some() || self.zeta.is_some() != self.mu.is_some() {
            return Err(Error::schema("zeta", "zeta, zeta_mor and mu must be given together"));
        }
        if let Some(mu) = &self.mu {
            check_square("mu", mu, no, nm, "morphism")?;
        }
        if let Some(beta) = &self.beta {
            check_square("beta", beta, no, nm, "morphism")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct TableCat {
    pub spec: Arc<TableSpec>,
    inverses: Vec<Option<usize>>,
    classes: Vec<usize>,
    pi0: Arc<ExplicitFiniteRig>,
}

impl TableCat {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: TableSpec = serde_json::from_str(text).map_err(|e| Error::schema("$", e.to_string()))?;
        TableCat::new(spec)
    }

    pub fn new(spec: TableSpec) -> Result<Self> {
        spec.validate()?;
        let nm = spec.morphisms.len();
        let inverses = (0..nm)
            .map(|f| {
                let m = &spec.morphisms[f];
                (0..nm).find(|&g| {
                    spec.compose[g][f] == Some(spec.identity[m.dom]) && spec.compose[f][g] == Some(spec.identity[m.cod])
                })
            })
            .collect();
        let mut cat = TableCat {
            spec: Arc::new(spec),
            inverses,
            classes: Vec::new(),
            pi0: Arc::new(ExplicitFiniteRig {
                names: vec![],
                add: vec![],
                mul: vec![],
                zero: 0,
                one: 0,
                involution: None,
            }),
        };
        let objects: Vec<usize> = (0..cat.spec.objects.len()).collect();
        let roots = pi0_classes(&cat, &objects);
        let mut reps: Vec<usize> = roots.clone();
        reps.sort_unstable();
        reps.dedup();
        let class_of = |a: usize| reps.binary_search(&roots[a]).expect("root is a representative");
        let s = &cat.spec;
        let rig = ExplicitFiniteRig {
            names: reps.iter().map(|&r| format!("[{}]", s.objects[r])).collect(),
            add: reps.iter().map(|&x| reps.iter().map(|&y| class_of(s.oplus[x][y])).collect()).collect(),
            mul: reps.iter().map(|&x| reps.iter().map(|&y| class_of(s.otimes[x][y])).collect()).collect(),
            zero: class_of(s.zero),
            one: class_of(s.one),
            involution: s.zeta.as_ref().map(|z| reps.iter().map(|&x| class_of(z[x])).collect()),
        };
        cat.classes = objects.iter().map(|&a| class_of(a)).collect();
        cat.pi0 = Arc::new(rig);
        Ok(cat)
    }

    pub fn pi0_rig(&self) -> &ExplicitFiniteRig {
        &self.pi0
    }
}

impl Bimonoidal for TableCat {
    type Obj = usize;
    type Mor = usize;

    fn name(&self) -> String {
        format!("table:{}", self.spec.name)
    }

    fn dom(&self, f: &usize) -> usize {
        self.spec.morphisms[*f].dom
    }

    fn cod(&self, f: &usize) -> usize {
        self.spec.morphisms[*f].cod
    }

    fn id(&self, a: &usize) -> usize {
        self.spec.identity[*a]
    }

    fn compose(&self, g: &usize, f: &usize) -> Result<usize> {
        self.spec.compose[*g][*f].ok_or_else(|| {
            Error::mismatch(format!("{} cannot follow {}", self.spec.morphisms[*g].name, self.spec.morphisms[*f].name))
        })
    }

    fn inverse(&self, f: &usize) -> Option<usize> {
        self.inverses[*f]
    }

    fn zero(&self) -> usize {
        self.spec.zero
    }

    fn one(&self) -> usize {
        self.spec.one
    }

    fn oplus(&self, a: &usize, b: &usize) -> usize {
        self.spec.oplus[*a][*b]
    }

    fn oplus_mor(&self, f: &usize, g: &usize) -> usize {
        self.spec.oplus_mor[*f][*g]
    }

    fn otimes(&self, a: &usize, b: &usize) -> usize {
        self.spec.otimes[*a][*b]
    }

    fn otimes_mor(&self, f: &usize, g: &usize) -> usize {
        self.spec.otimes_mor[*f][*g]
    }

    fn c_oplus(&self, a: &usize, b: &usize) -> usize {
        self.spec.c_oplus[*a][*b]
    }

    fn d_r(&self, a: &usize, b: &usize, c: &usize) -> usize {
        self.spec.d_r[*a][*b][*c]
    }

    fn zeta(&self, a: &usize) -> Option<usize> {
        self.spec.zeta.as_ref().map(|z| z[*a])
    }

    fn zeta_mor(&self, f: &usize) -> Option<usize> {
        self.spec.zeta_mor.as_ref().map(|z| z[*f])
    }

    fn mu(&self, a: &usize, b: &usize) -> Option<usize> {
        self.spec.mu.as_ref().map(|m| m[*a][*b])
    }

    fn beta(&self, a: &usize, b: &usize) -> Option<usize> {
        self.spec.beta.as_ref().map(|m| m[*a][*b])
    }

    fn component(&self, a: &usize) -> Option<RigElem> {
        self.classes.get(*a).map(|&c| RigElem::Finite(c))
    }

    fn component_rig(&self) -> Option<Pi0Rig> {
        Some(Pi0Rig::Finite(self.pi0.clone()))
    }

    fn is_discrete(&self) -> bool {
        self.spec.morphisms.len() == self.spec.objects.len()
    }

    fn objects_upto(&self, _size: usize) -> Vec<usize> {
        (0..self.spec.objects.len()).collect()
    }

    fn morphisms_from(&self, a: &usize) -> Vec<usize> {
        (0..self.spec.morphisms.len()).filter(|&f| self.spec.morphisms[f].dom == *a).collect()
    }

    fn parse_obj(&self, v: &serde_json::Value) -> Result<usize> {
        crate::category::from_json(v)
    }

    fn parse_mor(&self, v: &serde_json::Value) -> Result<usize> {
        crate::category::from_json(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: &str = include_str!("../../data/discrete_f2.json");

    #[test]
    fn bundled_table_loads_with_pi0() {
        let t = TableCat::from_json(F2).unwrap();
        assert_eq!(t.pi0_rig().size(), 2);
        assert!(t.pi0_rig().is_ring());
        assert_eq!(t.oplus(&1, &1), 0);
        assert!(t.is_discrete());
    }

    #[test]
    fn schema_errors_name_the_position() {
        let mut v: serde_json::Value = serde_json::from_str(F2).unwrap();
        v["otimes"][1][0] = serde_json::json!(7);
        let err = TableCat::from_json(&v.to_string()).unwrap_err();
        assert_eq!(err, Error::schema("otimes[1][0]", "object index 7 out of range (2 objects)"));
        let mut v: serde_json::Value = serde_json::from_str(F2).unwrap();
        v["compose"][0][1] = serde_json::json!(0);
        let err = TableCat::from_json(&v.to_string()).unwrap_err();
        assert!(matches!(err, Error::Schema { ref path, .. } if path == "compose[0][1]"));
        let mut v: serde_json::Value = serde_json::from_str(F2).unwrap();
        v["surprise"] = serde_json::json!(1);
        assert!(matches!(TableCat::from_json(&v.to_string()), Err(Error::Schema { .. })));
    }
}
