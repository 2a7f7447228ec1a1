//! Finite rigs given by explicit operation tables over element indices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitFiniteRig {
    pub names: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
    #[serde(default)]
    pub involution: Option<Vec<usize>>,
}

/// Bound on the candidate count of an exhaustive inverse search.
const SEARCH_LIMIT: usize = 1 << 22;

impl ExplicitFiniteRig {
    /// Checks table shapes and index ranges; the rig axioms themselves are
    /// sampled by the law checker, not assumed here.
    pub fn validate(&self) -> Result<()> {
        let n = self.names.len();
        if n == 0 {
            return Err(Error::schema("names", "a rig has at least one element"));
        }
        for (label, table) in [("add", &self.add), ("mul", &self.mul)] {
            if table.len() != n {
                return Err(Error::schema(label, format!("expected {} rows, found {}", n, table.len())));
            }
            for (i, row) in table.iter().enumerate() {
                if row.len() != n {
                    return Err(Error::schema(
                        format!("{}[{}]", label, i),
                        format!("expected {} columns, found {}", n, row.len()),
                    ));
                }
                if let Some((j, &x)) = row.iter().enumerate().find(|&(_, &x)| x >= n) {
                    return Err(Error::schema(
                        format!("{}[{}][{}]", label, i, j),
                        format!("element index {} out of range ({} elements)", x, n),
                    ));
                }
            }
        }
        for (label, x) in [("zero", self.zero), ("one", self.one)] {
            if x >= n {
                return Err(Error::schema(label, format!("element index {} out of range", x)));
            }
        }
        if let Some(inv) = &self.involution {
            if inv.len() != n {
                return Err(Error::schema("involution", format!("expected {} entries", n)));
            }
            if let Some((i, &x)) = inv.iter().enumerate().find(|&(_, &x)| x >= n) {
                return Err(Error::schema(format!("involution[{}]", i), format!("index {} out of range", x)));
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn neg(&self, a: usize) -> Option<usize> {
        (0..self.size()).find(|&b| self.add[a][b] == self.zero)
    }

    /// Whether every element has an additive inverse, i.e. the rig is its own
    /// group completion.
    pub fn is_ring(&self) -> bool {
        (0..self.size()).all(|a| self.neg(a).is_some())
    }

    fn matmul(&self, a: &[Vec<usize>], b: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(self.zero, |acc, k| self.add(acc, self.mul(a[i][k], b[k][j]))))
                    .collect()
            })
            .collect()
    }

    fn is_identity(&self, m: &[Vec<usize>]) -> bool {
        m.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, &x)| x == if i == j { self.one } else { self.zero })
        })
    }

    /// Exhaustive search for a two-sided inverse. Candidate columns solving
    /// `M x = e_j` are enumerated over all of `Rⁿ`, then combined and tested
    /// for `X M = I`.
    pub fn invertible_matrix(&self, m: &[Vec<usize>]) -> Result<bool> {
        let n = m.len();
        if m.iter().any(|r| r.len() != n) {
            return Err(Error::Size("matrix is not square".into()));
        }
        if n == 0 {
            return Ok(true);
        }
        let size = self.size();
        let total = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(size)).filter(|&t| t <= SEARCH_LIMIT);
        let Some(total) = total else {
            return Err(Error::capability(format!(
                "exhaustive inverse search over {} elements at size {} exceeds the search limit",
                size, n
            )));
        };
        let mut columns: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
        let mut x = vec![0usize; n];
        for code in 0..total {
            let mut c = code;
            for slot in x.iter_mut() {
                *slot = c % size;
                c /= size;
            }
            let image: Vec<usize> = (0..n)
                .map(|i| (0..n).fold(self.zero, |acc, k| self.add(acc, self.mul(m[i][k], x[k]))))
                .collect();
            for (j, col) in columns.iter_mut().enumerate() {
                let hit = image
                    .iter()
                    .enumerate()
                    .all(|(i, &v)| v == if i == j { self.one } else { self.zero });
                if hit {
                    col.push(x.clone());
                }
            }
        }
        if columns.iter().any(|c| c.is_empty()) {
            return Ok(false);
        }
        // every combination is a right inverse; look for one that is two-sided
        let mut choice = vec![0usize; n];
        loop {
            let inv: Vec<Vec<usize>> =
                (0..n).map(|i| (0..n).map(|j| columns[j][choice[j]][i]).collect()).collect();
            if self.is_identity(&self.matmul(&inv, m)) {
                return Ok(true);
            }
            let mut k = 0;
            loop {
                if k == n {
                    return Ok(false);
                }
                choice[k] += 1;
                if choice[k] < columns[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn z_mod(k: usize) -> ExplicitFiniteRig {
        ExplicitFiniteRig {
            names: (0..k).map(|i| i.to_string()).collect(),
            add: (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect(),
            mul: (0..k).map(|a| (0..k).map(|b| (a * b) % k).collect()).collect(),
            zero: 0,
            one: 1 % k,
            involution: None,
        }
    }

    #[test]
    fn inverse_search_over_z4() {
        let r = z_mod(4);
        r.validate().unwrap();
        assert!(r.is_ring());
        assert!(r.invertible_matrix(&[vec![3]]).unwrap());
        assert!(!r.invertible_matrix(&[vec![2]]).unwrap());
        assert!(r.invertible_matrix(&[vec![1, 2], vec![0, 1]]).unwrap());
        assert!(!r.invertible_matrix(&[vec![2, 1], vec![0, 2]]).unwrap());
    }

    #[test]
    fn schema_errors_are_positional() {
        let mut r = z_mod(3);
        r.mul[1][2] = 9;
        let err = r.validate().unwrap_err();
        assert_eq!(err, Error::schema("mul[1][2]", "element index 9 out of range (3 elements)"));
    }
}
