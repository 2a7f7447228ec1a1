//! Permutations in one-line notation and the block/grid operations that
//! make the symmetric groups a bipermutative family.
//!
//! Internally a permutation stores images of `0..n`; on the wire it is the
//! usual one-line notation over `1..=n`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}`, `images[i]` being the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n).collect() }
    }

    /// Builds a permutation from 0-based images, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Invalid(format!("not a permutation: {:?}", images)));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// One-line notation over `1..=n`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Perm> {
        if one_line.iter().any(|&x| x == 0) {
            return Err(Error::Invalid(format!(
                "one-line notation is 1-based: {:?}",
                one_line
            )));
        }
        Perm::from_images(one_line.iter().map(|&x| x - 1).collect())
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Perm { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    /// Block sum: `self` on the first `n` points, `other` shifted on the rest.
    pub fn block_sum(&self, other: &Perm) -> Perm {
        let n = self.len();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + n));
        Perm { images }
    }

    /// Product on the `n × m` grid enumerated row-major (first factor major).
    pub fn grid_product(&self, other: &Perm) -> Perm {
        let m = other.len();
        let mut images = Vec::with_capacity(self.len() * m);
        for i in 0..self.len() {
            for j in 0..m {
                images.push(self.images[i] * m + other.images[j]);
            }
        }
        Perm { images }
    }

    /// Moves the first block of `n` points behind the second block of `m`.
    pub fn block_swap(n: usize, m: usize) -> Perm {
        let mut images = Vec::with_capacity(n + m);
        images.extend((0..n).map(|i| m + i));
        images.extend(0..m);
        Perm { images }
    }

    /// Transposes the `n × m` grid: `(i, j) ↦ (j, i)`.
    pub fn grid_transpose(n: usize, m: usize) -> Perm {
        let mut images = vec![0; n * m];
        for i in 0..n {
            for j in 0..m {
                images[i * m + j] = j * n + i;
            }
        }
        Perm { images }
    }

    /// The right distributor `a·b + a·c → a·(b + c)` on grid positions.
    pub fn right_distributor(a: usize, b: usize, c: usize) -> Perm {
        let w = b + c;
        let mut images = Vec::with_capacity(a * w);
        for i in 0..a {
            for j in 0..b {
                images.push(i * w + j);
            }
        }
        for i in 0..a {
            for j in 0..c {
                images.push(i * w + b + j);
            }
        }
        Perm { images }
    }

    /// Lehmer code: entry `i` counts later positions with smaller image.
    pub fn lehmer_code(&self) -> Vec<usize> {
        (0..self.len())
            .map(|i| (i + 1..self.len()).filter(|&j| self.images[j] < self.images[i]).count())
            .collect()
    }

    /// A reduced word in the adjacent transpositions `s_j = (j j+1)`, listed in
    /// the order they are applied. Each step moves the item destined for the
    /// next output slot leftwards past the items still waiting.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.len();
        // arrangement[p] = original position currently sitting in slot p
        let mut arrangement: Vec<usize> = (0..n).collect();
        let inv = self.inverse();
        let mut word = Vec::new();
        for slot in 0..n {
            let wanted = inv.images[slot];
            let mut pos = arrangement.iter().position(|&x| x == wanted).expect("bijection");
            while pos > slot {
                arrangement.swap(pos - 1, pos);
                word.push(pos - 1);
                pos -= 1;
            }
        }
        word
    }

    pub fn inversions(&self) -> usize {
        self.lehmer_code().iter().sum()
    }

    /// All permutations of `n` points in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm { images: current.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("pivot");
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.one_line())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Perm, D::Error> {
        let one_line = Vec::<usize>::deserialize(d)?;
        Perm::from_one_line(&one_line).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_transpose_two_by_two_is_middle_swap() {
        // positions (0,0) (0,1) (1,0) (1,1): only the middle two move
        assert_eq!(Perm::grid_transpose(2, 2).one_line(), vec![1, 3, 2, 4]);
    }

    #[test]
    fn block_swap_and_inverse() {
        let c = Perm::block_swap(2, 1);
        assert_eq!(c.one_line(), vec![2, 3, 1]);
        assert!(Perm::block_swap(1, 2).compose(&c).is_identity());
    }

    #[test]
    fn right_distributor_degenerate_cases_are_identities() {
        assert!(Perm::right_distributor(1, 2, 3).is_identity());
        assert!(Perm::right_distributor(3, 0, 2).is_identity());
        assert!(Perm::right_distributor(3, 2, 0).is_identity());
        assert!(!Perm::right_distributor(2, 1, 1).is_identity());
    }

    #[test]
    fn reduced_word_realizes_permutation() {
        for n in 0..5 {
            for p in Perm::all(n) {
                let word = p.reduced_word();
                assert_eq!(word.len(), p.inversions());
                // arrangement after applying the swaps: slot -> original index
                let mut arrangement: Vec<usize> = (0..n).collect();
                for &j in &word {
                    arrangement.swap(j, j + 1);
                }
                for (slot, &orig) in arrangement.iter().enumerate() {
                    assert_eq!(p.apply(orig), slot);
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Perm::all(0).len(), 1);
        assert_eq!(Perm::all(4).len(), 24);
    }

    #[test]
    fn one_line_round_trip_rejects_bad_input() {
        assert!(Perm::from_one_line(&[1, 1]).is_err());
        assert!(Perm::from_one_line(&[0, 1]).is_err());
        let p = Perm::from_one_line(&[3, 1, 2]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[3,1,2]");
        assert_eq!(serde_json::from_str::<Perm>(&json).unwrap(), p);
    }
}
