//! Exact integer linear algebra: fraction-free determinants and the
//! regular representation of group-ring matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rig::group::{FiniteAbelianGroup, GroupRingElem};

pub type IntMatrix = Vec<Vec<BigInt>>;

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Size(format!("row {} has length {}, expected {}", i, row.len(), n)));
        }
    }
    Ok(n)
}

/// Bareiss elimination; every division is exact.
pub fn determinant(m: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: IntMatrix = m.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// True iff the determinant is `±1`.
pub fn is_unimodular(m: &[Vec<BigInt>]) -> Result<bool> {
    let det = determinant(m)?;
    Ok(det == BigInt::one() || det == -BigInt::one())
}

/// Replaces each entry `a` by the `|G| × |G|` matrix of `x ↦ a·x` in the
/// basis of group elements (ordered as [`FiniteAbelianGroup::elements`]).
pub fn regular_representation(
    m: &[Vec<GroupRingElem>],
    group: &FiniteAbelianGroup,
) -> Result<IntMatrix> {
    let n = check_square(m)?;
    let els = group.elements();
    let order = els.len();
    let mut out = vec![vec![BigInt::zero(); n * order]; n * order];
    for (bi, row) in m.iter().enumerate() {
        for (bj, entry) in row.iter().enumerate() {
            for (g, c) in entry.terms() {
                group.validate(g)?;
                for (col, h) in els.iter().enumerate() {
                    let r = group.index_of(&group.op(g, h));
                    out[bi * order + r][bj * order + col] += c;
                }
            }
        }
    }
    Ok(out)
}

pub fn int_matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..inner).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}
