//! Matrix categories `M_n(𝓡)`: square grids of objects and entrywise
//! morphisms, multiplied by `(A·B)_{ij} = ⊕_k A_{ik} ⊗ B_{kj}`. The
//! associator `α` and the matrix-level `μ` are built from the structure maps
//! of the underlying instance.

use serde::{Deserialize, Serialize};

use crate::category::{Bimonoidal, BimonoidalExt};
use crate::check::{CheckConfig, CheckReport, Verdict};
use crate::error::{Error, Result};
use crate::involution::{zeta_matrix, zeta_matrix_mor};
use crate::perm::Perm;
use crate::rig::{integer_determinant, is_invertible_matrix, RigElem};
use crate::sample::Sampler;

/// A square grid, serialized as a JSON list of rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matrix<T>(pub Vec<Vec<T>>);

impl<T: Clone> Matrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        Matrix((0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect())
    }

    pub fn try_from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Result<T>) -> Result<Self> {
        Ok(Matrix((0..n).map(|i| (0..n).map(|j| f(i, j)).collect::<Result<_>>()).collect::<Result<_>>()?))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.0[i][j]
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix(self.0.iter().map(|r| r.iter().map(&mut f).collect()).collect())
    }

    pub fn try_map<U: Clone>(&self, mut f: impl FnMut(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix(self.0.iter().map(|r| r.iter().map(&mut f).collect::<Result<_>>()).collect::<Result<_>>()?))
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.n(), |i, j| self.0[j][i].clone())
    }

    pub fn check_square(&self) -> Result<()> {
        let n = self.n();
        match self.0.iter().position(|r| r.len() != n) {
            Some(i) => Err(Error::Size(format!("row {} has length {}, expected {}", i, self.0[i].len(), n))),
            None => Ok(()),
        }
    }
}

fn same_size<A: Clone, B: Clone>(a: &Matrix<A>, b: &Matrix<B>) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::Size(format!("{}×{} against {}×{}", a.n(), a.n(), b.n(), b.n())));
    }
    Ok(())
}

/// `E_n`: `1` on the diagonal, `0` elsewhere.
pub fn unit_matrix<C: Bimonoidal>(cat: &C, n: usize) -> Matrix<C::Obj> {
    Matrix::from_fn(n, |i, j| if i == j { cat.one() } else { cat.zero() })
}

pub fn mat_mul_obj<C: Bimonoidal>(cat: &C, a: &Matrix<C::Obj>, b: &Matrix<C::Obj>) -> Result<Matrix<C::Obj>> {
    same_size(a, b)?;
    let n = a.n();
    Ok(Matrix::from_fn(n, |i, j| {
        let terms: Vec<C::Obj> = (0..n).map(|k| cat.otimes(a.get(i, k), b.get(k, j))).collect();
        cat.oplus_all(&terms)
    }))
}

pub fn mat_mul_mor<C: Bimonoidal>(cat: &C, f: &Matrix<C::Mor>, g: &Matrix<C::Mor>) -> Result<Matrix<C::Mor>> {
    same_size(f, g)?;
    let n = f.n();
    Ok(Matrix::from_fn(n, |i, j| {
        let terms: Vec<C::Mor> = (0..n).map(|k| cat.otimes_mor(f.get(i, k), g.get(k, j))).collect();
        if terms.is_empty() {
            cat.id(&cat.zero())
        } else {
            cat.oplus_mor_all(&terms)
        }
    }))
}

pub fn mat_dom<C: Bimonoidal>(cat: &C, f: &Matrix<C::Mor>) -> Matrix<C::Obj> {
    f.map(|x| cat.dom(x))
}

pub fn mat_cod<C: Bimonoidal>(cat: &C, f: &Matrix<C::Mor>) -> Matrix<C::Obj> {
    f.map(|x| cat.cod(x))
}

pub fn mat_id<C: Bimonoidal>(cat: &C, a: &Matrix<C::Obj>) -> Matrix<C::Mor> {
    a.map(|x| cat.id(x))
}

pub fn mat_compose<C: Bimonoidal>(cat: &C, g: &Matrix<C::Mor>, f: &Matrix<C::Mor>) -> Result<Matrix<C::Mor>> {
    same_size(g, f)?;
    Matrix::try_from_fn(f.n(), |i, j| cat.compose(g.get(i, j), f.get(i, j)))
}

pub fn mat_inverse<C: Bimonoidal>(cat: &C, f: &Matrix<C::Mor>) -> Result<Matrix<C::Mor>> {
    f.try_map(|x| cat.inverse_req(x))
}

/// `μ_{A,B} : ζ(A·B)^t → ζ(B)^t · ζ(A)^t` with entry `(i, j)` equal to
/// `⊕_k μ_{A_{jk}, B_{ki}}`.
pub fn mu_matrix<C: Bimonoidal>(cat: &C, a: &Matrix<C::Obj>, b: &Matrix<C::Obj>) -> Result<Matrix<C::Mor>> {
    same_size(a, b)?;
    let n = a.n();
    Matrix::try_from_fn(n, |i, j| {
        let terms = (0..n).map(|k| cat.mu_req(a.get(j, k), b.get(k, i))).collect::<Result<Vec<_>>>()?;
        Ok(cat.oplus_mor_all(&terms))
    })
}

/// `d_r^{(n)}(A; X_1, …, X_n) : ⊕_l A⊗X_l → A⊗(⊕_l X_l)`, right-nested:
/// `d_r(A, X_1, X_2⊕…⊕X_n) ∘ (id ⊕ d_r^{(n-1)}(A; X_2, …, X_n))`.
pub fn iterated_d_r<C: Bimonoidal>(cat: &C, a: &C::Obj, xs: &[C::Obj]) -> Result<C::Mor> {
    match xs {
        [] => Ok(cat.id(&cat.zero())),
        [x] => Ok(cat.id(&cat.otimes(a, x))),
        [x, rest @ ..] => {
            let inner = iterated_d_r(cat, a, rest)?;
            let step = cat.d_r(a, x, &cat.oplus_all(rest));
            cat.compose(&step, &cat.oplus_mor(&cat.id(&cat.otimes(a, x)), &inner))
        }
    }
}

/// The morphism of `⊕_i layout[i]` that moves the summand at position `i` to
/// position `perm(i)`, as a composite of adjacent `c_⊕` swaps following the
/// reduced word of `perm`.
pub fn block_perm_morphism<C: Bimonoidal>(cat: &C, layout: &[C::Obj], perm: &Perm) -> Result<C::Mor> {
    if perm.len() != layout.len() {
        return Err(Error::Size(format!("permutation of {} points on {} summands", perm.len(), layout.len())));
    }
    let mut current = layout.to_vec();
    let mut acc = cat.id(&cat.oplus_all(&current));
    for j in perm.reduced_word() {
        let prefix = cat.oplus_all(&current[..j]);
        let suffix = cat.oplus_all(&current[j + 2..]);
        let swap = cat.oplus_mor(
            &cat.oplus_mor(&cat.id(&prefix), &cat.c_oplus(&current[j], &current[j + 1])),
            &cat.id(&suffix),
        );
        acc = cat.compose(&swap, &acc)?;
        current.swap(j, j + 1);
    }
    Ok(acc)
}

/// `σ` on an `n × n` grid of summands: position `k·n + l` goes to `l·n + k`.
fn priority_swap(n: usize) -> Perm {
    Perm::grid_transpose(n, n)
}

/// The associator `α_{A,B,C} : A·(B·C) → (A·B)·C`. Entry `(i, j)` inverts
/// the iterated `d_r` in every `k` summand and then exchanges the summation
/// order with `σ`.
pub fn alpha_assoc<C: Bimonoidal>(
    cat: &C,
    a: &Matrix<C::Obj>,
    b: &Matrix<C::Obj>,
    c: &Matrix<C::Obj>,
) -> Result<Matrix<C::Mor>> {
    same_size(a, b)?;
    same_size(b, c)?;
    let n = a.n();
    Matrix::try_from_fn(n, |i, j| {
        let mut undo = Vec::with_capacity(n);
        let mut layout = Vec::with_capacity(n * n);
        for k in 0..n {
            let xs: Vec<C::Obj> = (0..n).map(|l| cat.otimes(b.get(k, l), c.get(l, j))).collect();
            undo.push(cat.inverse_req(&iterated_d_r(cat, a.get(i, k), &xs)?)?);
            layout.extend(xs.iter().map(|x| cat.otimes(a.get(i, k), x)));
        }
        let sigma = block_perm_morphism(cat, &layout, &priority_swap(n))?;
        cat.compose(&sigma, &cat.oplus_mor_all(&undo))
    })
}

pub fn alpha_inverse<C: Bimonoidal>(
    cat: &C,
    a: &Matrix<C::Obj>,
    b: &Matrix<C::Obj>,
    c: &Matrix<C::Obj>,
) -> Result<Matrix<C::Mor>> {
    mat_inverse(cat, &alpha_assoc(cat, a, b, c)?)
}

/// The π₀ image of a matrix of objects.
pub fn pi0_matrix<C: Bimonoidal>(cat: &C, a: &Matrix<C::Obj>) -> Result<Matrix<RigElem>> {
    a.try_map(|x| cat.component_req(x))
}

/// Whether `[A]` is invertible over the group completion of `π₀`.
pub fn gl_member<C: Bimonoidal>(cat: &C, a: &Matrix<C::Obj>) -> Result<bool> {
    a.check_square()?;
    let rig = cat.component_rig_req()?;
    is_invertible_matrix(&pi0_matrix(cat, a)?.0, &rig)
}

/// Explains a failed membership test: the π₀ matrix and, over `ℤ`, its
/// determinant.
pub fn gl_diagnostic<C: Bimonoidal>(cat: &C, a: &Matrix<C::Obj>) -> Result<serde_json::Value> {
    let m = pi0_matrix(cat, a)?;
    let det = integer_determinant(&m.0).map(|d| d.to_string());
    Ok(serde_json::json!({ "pi0": m, "determinant": det }))
}

pub fn random_matrix<C: Bimonoidal>(s: &mut Sampler<'_, C>, n: usize) -> Matrix<C::Obj> {
    Matrix((0..n).map(|_| (0..n).map(|_| s.object()).collect()).collect())
}

/// A random entrywise morphism out of `a`.
pub fn random_matrix_mor<C: Bimonoidal>(s: &mut Sampler<'_, C>, a: &Matrix<C::Obj>) -> Matrix<C::Mor> {
    Matrix(a.0.iter().map(|r| r.iter().map(|x| s.morphism_from(x)).collect()).collect())
}

/// A random member of `GL_n`. Rejection sampling first; if that keeps
/// failing, a product `P·D·U` of a permutation pattern, a diagonal of unit
/// objects and an upper unitriangular matrix.
pub fn sample_gl<C: Bimonoidal>(cat: &C, s: &mut Sampler<'_, C>, n: usize) -> Result<Matrix<C::Obj>> {
    const ATTEMPTS: usize = 16;
    for _ in 0..ATTEMPTS {
        let m = random_matrix(s, n);
        if gl_member(cat, &m)? {
            return Ok(m);
        }
    }
    let units: Vec<C::Obj> = s
        .objects()
        .to_vec()
        .into_iter()
        .filter(|x| gl_member(cat, &Matrix(vec![vec![x.clone()]])).unwrap_or(false))
        .collect();
    let units = if units.is_empty() { vec![cat.one()] } else { units };
    use rand::seq::SliceRandom;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(s.rng());
    let p = Matrix::from_fn(n, |i, j| if order[i] == j { cat.one() } else { cat.zero() });
    let d_entries: Vec<C::Obj> = (0..n).map(|_| units.choose(s.rng()).expect("nonempty").clone()).collect();
    let d = Matrix::from_fn(n, |i, j| if i == j { d_entries[i].clone() } else { cat.zero() });
    let mut u = unit_matrix(cat, n);
    for i in 0..n {
        for j in i + 1..n {
            u.0[i][j] = s.object();
        }
    }
    let m = mat_mul_obj(cat, &mat_mul_obj(cat, &p, &d)?, &u)?;
    if !gl_member(cat, &m)? {
        return Err(Error::Invalid("constructed matrix is not invertible over π₀".into()));
    }
    Ok(m)
}

#[derive(Serialize)]
struct MorSample<M> {
    f: Matrix<M>,
    g: Matrix<M>,
}

#[derive(Serialize)]
struct PathSample<M> {
    f: Matrix<M>,
    f2: Matrix<M>,
    g: Matrix<M>,
    g2: Matrix<M>,
}

/// Unit, bifunctoriality, transpose, `μ`-naturality and the `α`/`μ`
/// compatibility on sampled `n × n` matrices.
pub fn check_matrix_lemmas<C: Bimonoidal>(cat: &C, cfg: &CheckConfig) -> CheckReport {
    let n = cfg.spec.max_arity_n;
    let count = cfg.spec.sample_count;
    let mut report = CheckReport::new("matrices", cat.name());
    let sampler = |law: &str| Sampler::new(cat, &cfg.spec, law);

    let mut s = sampler("matrix.unit");
    let mats: Vec<_> = (0..count).map(|_| random_matrix(&mut s, n)).collect();
    let e = unit_matrix(cat, n);
    report.push(cfg.law("matrix.unit", "E_n · A = A = A · E_n", &mats, |a| {
        Ok(Verdict::equal(&(mat_mul_obj(cat, &e, a)?, mat_mul_obj(cat, a, &e)?), &(a.clone(), a.clone())))
    }));

    let mut s = sampler("matrix.bifunctor");
    let paths: Vec<_> = (0..count)
        .map(|_| {
            let (a, b) = (random_matrix(&mut s, n), random_matrix(&mut s, n));
            let (f, g) = (random_matrix_mor(&mut s, &a), random_matrix_mor(&mut s, &b));
            let f2 = random_matrix_mor(&mut s, &mat_cod(cat, &f));
            let g2 = random_matrix_mor(&mut s, &mat_cod(cat, &g));
            PathSample { f, f2, g, g2 }
        })
        .collect();
    report.push(cfg.law("matrix.bifunctor", "(φ' ∘ φ)·(ψ' ∘ ψ) = (φ'·ψ') ∘ (φ·ψ)", &paths, |p| {
        same_sides(
            mat_mul_mor(cat, &mat_compose(cat, &p.f2, &p.f)?, &mat_compose(cat, &p.g2, &p.g)?),
            mat_compose(cat, &mat_mul_mor(cat, &p.f2, &p.g2)?, &mat_mul_mor(cat, &p.f, &p.g)?),
        )
    }));
    report.push(cfg.law("matrix.transpose", "(φ^t)^t = φ and (φ' ∘ φ)^t = φ'^t ∘ φ^t", &paths, |p| {
        Ok(Verdict::equal(
            &(p.f.transpose().transpose(), mat_compose(cat, &p.f2, &p.f)?.transpose()),
            &(p.f.clone(), mat_compose(cat, &p.f2.transpose(), &p.f.transpose())?),
        ))
    }));

    let mut s = sampler("matrix.mu.typed");
    let pairs: Vec<_> = (0..count).map(|_| [random_matrix(&mut s, n), random_matrix(&mut s, n)]).collect();
    report.push(cfg.law("matrix.mu.typed", "μ_{A,B} : ζ(A·B)^t → ζ(B)^t · ζ(A)^t", &pairs, |[a, b]| {
        let mu = mu_matrix(cat, a, b)?;
        let dom = zeta_matrix(cat, &mat_mul_obj(cat, a, b)?)?.transpose();
        let cod = mat_mul_obj(cat, &zeta_matrix(cat, b)?.transpose(), &zeta_matrix(cat, a)?.transpose())?;
        Ok(Verdict::equal(&(mat_dom(cat, &mu), mat_cod(cat, &mu)), &(dom, cod)))
    }));

    let mut s = sampler("matrix.mu.natural");
    let mors: Vec<_> = (0..count)
        .map(|_| {
            let (a, b) = (random_matrix(&mut s, n), random_matrix(&mut s, n));
            MorSample { f: random_matrix_mor(&mut s, &a), g: random_matrix_mor(&mut s, &b) }
        })
        .collect();
    report.push(cfg.law(
        "matrix.mu.natural",
        "μ_{A',B'} ∘ ζ(φ·ψ)^t = (ζ(ψ)^t · ζ(φ)^t) ∘ μ_{A,B}",
        &mors,
        |m| {
            let (f, g) = (&m.f, &m.g);
            let lhs = mat_compose(
                cat,
                &mu_matrix(cat, &mat_cod(cat, f), &mat_cod(cat, g))?,
                &zeta_matrix_mor(cat, &mat_mul_mor(cat, f, g)?)?.transpose(),
            );
            let rhs = mat_compose(
                cat,
                &mat_mul_mor(cat, &zeta_matrix_mor(cat, g)?.transpose(), &zeta_matrix_mor(cat, f)?.transpose())?,
                &mu_matrix(cat, &mat_dom(cat, f), &mat_dom(cat, g))?,
            );
            same_sides(lhs, rhs)
        },
    ));

    let mut s = sampler("matrix.alpha.mu");
    let triples: Vec<_> = (0..count).map(|_| [(); 3].map(|_| random_matrix(&mut s, n))).collect();
    report.push(cfg.law(
        "matrix.alpha.mu",
        "(id · μ_{A,B}) ∘ μ_{A·B,C} ∘ ζ(α_{A,B,C})^t = α⁻¹_{ζC^t,ζB^t,ζA^t} ∘ (μ_{B,C} · id) ∘ μ_{A,B·C}",
        &triples,
        |[a, b, c]| {
            let zt = |m: &Matrix<C::Obj>| zeta_matrix(cat, m).map(|z| z.transpose());
            let (za, zb, zc) = (zt(a)?, zt(b)?, zt(c)?);
            let ab = mat_mul_obj(cat, a, b)?;
            let bc = mat_mul_obj(cat, b, c)?;
            let lhs = mat_compose(
                cat,
                &mat_mul_mor(cat, &mat_id(cat, &zc), &mu_matrix(cat, a, b)?)?,
                &mat_compose(
                    cat,
                    &mu_matrix(cat, &ab, c)?,
                    &zeta_matrix_mor(cat, &alpha_assoc(cat, a, b, c)?)?.transpose(),
                )?,
            );
            let rhs = mat_compose(
                cat,
                &alpha_inverse(cat, &zc, &zb, &za)?,
                &mat_compose(cat, &mat_mul_mor(cat, &mu_matrix(cat, b, c)?, &mat_id(cat, &za))?, &mu_matrix(cat, a, &bc)?)?,
            );
            same_sides(lhs, rhs)
        },
    ));

    let mut s = sampler("matrix.alpha.natural");
    let triples: Vec<_> = (0..count)
        .map(|_| [(); 3].map(|_| {
            let a = random_matrix(&mut s, n);
            random_matrix_mor(&mut s, &a)
        }))
        .collect();
    report.push(cfg.law(
        "matrix.alpha.natural",
        "((φ·ψ)·χ) ∘ α = α ∘ (φ·(ψ·χ)), α typed and invertible",
        &triples,
        |[f, g, h]| {
            let dom = |m: &Matrix<C::Mor>| mat_dom(cat, m);
            let cod = |m: &Matrix<C::Mor>| mat_cod(cat, m);
            let alpha = alpha_assoc(cat, &dom(f), &dom(g), &dom(h))?;
            let left_obj = mat_mul_obj(cat, &dom(f), &mat_mul_obj(cat, &dom(g), &dom(h))?)?;
            let right_obj = mat_mul_obj(cat, &mat_mul_obj(cat, &dom(f), &dom(g))?, &dom(h))?;
            let shape = Verdict::equal(&(dom(&alpha), cod(&alpha)), &(left_obj.clone(), right_obj.clone()));
            if !shape.passed() {
                return Ok(shape);
            }
            let inv = mat_inverse(cat, &alpha)?;
            let round = Verdict::equal(
                &(mat_compose(cat, &inv, &alpha)?, mat_compose(cat, &alpha, &inv)?),
                &(mat_id(cat, &left_obj), mat_id(cat, &right_obj)),
            );
            if !round.passed() {
                return Ok(round);
            }
            same_sides(
                mat_compose(cat, &mat_mul_mor(cat, &mat_mul_mor(cat, f, g)?, h)?, &alpha),
                mat_compose(
                    cat,
                    &alpha_assoc(cat, &cod(f), &cod(g), &cod(h))?,
                    &mat_mul_mor(cat, f, &mat_mul_mor(cat, g, h)?)?,
                ),
            )
        },
    ));

    if cat.component_rig().and_then(|r| r.group_completion().ok()).is_some() {
        let mut s = sampler("matrix.gl.closure");
        let members: Vec<_> = (0..count)
            .filter_map(|_| Some([sample_gl(cat, &mut s, n).ok()?, sample_gl(cat, &mut s, n).ok()?]))
            .collect();
        report.push(cfg.law("matrix.gl.closure", "A, B ∈ GL ⇒ A·B ∈ GL and ζ(A)^t ∈ GL", &members, |[a, b]| {
            let mut out = vec![gl_member(cat, &mat_mul_obj(cat, a, b)?)?];
            if cat.has_anti_involution() {
                out.push(gl_member(cat, &zeta_matrix(cat, a)?.transpose())?);
            }
            Ok(Verdict::holds(out.iter().all(|&x| x), &out, "all true"))
        }));
    }
    report
}

fn same_sides<M: Serialize + PartialEq>(lhs: Result<M>, rhs: Result<M>) -> Result<Verdict> {
    Ok(Verdict::equal(&lhs?, &rhs?))
}

/// MacLane's pentagon for `α` on sampled quadruples.
pub fn check_pentagon<C: Bimonoidal>(cat: &C, cfg: &CheckConfig) -> CheckReport {
    let n = cfg.spec.max_arity_n;
    let mut report = CheckReport::new("pentagon", cat.name());
    let mut s = Sampler::new(cat, &cfg.spec, "matrix.pentagon");
    let quads: Vec<_> = (0..cfg.spec.sample_count).map(|_| [(); 4].map(|_| random_matrix(&mut s, n))).collect();
    report.push(cfg.law(
        "matrix.pentagon",
        "α_{A·B,C,D} ∘ α_{A,B,C·D} = (α_{A,B,C} · id) ∘ α_{A,B·C,D} ∘ (id · α_{B,C,D})",
        &quads,
        |[a, b, c, d]| {
            let ab = mat_mul_obj(cat, a, b)?;
            let bc = mat_mul_obj(cat, b, c)?;
            let cd = mat_mul_obj(cat, c, d)?;
            let lhs = mat_compose(cat, &alpha_assoc(cat, &ab, c, d)?, &alpha_assoc(cat, a, b, &cd)?);
            let rhs = mat_compose(
                cat,
                &mat_mul_mor(cat, &alpha_assoc(cat, a, b, c)?, &mat_id(cat, d))?,
                &mat_compose(
                    cat,
                    &alpha_assoc(cat, a, &bc, d)?,
                    &mat_mul_mor(cat, &mat_id(cat, a), &alpha_assoc(cat, b, c, d)?)?,
                )?,
            );
            same_sides(lhs, rhs)
        },
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{Discrete, FiniteSets, Wedge};
    use crate::rig::FiniteAbelianGroup;
    use crate::sample::SampleSpec;

    fn m(rows: &[&[usize]]) -> Matrix<usize> {
        Matrix(rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn products_match_integer_matrices() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let b = m(&[&[1, 0], &[1, 1]]);
        assert_eq!(mat_mul_obj(&FiniteSets, &a, &b).unwrap(), m(&[&[2, 1], &[1, 1]]));
        assert_eq!(mat_mul_obj(&FiniteSets, &m(&[&[2]]), &m(&[&[3]])).unwrap(), m(&[&[6]]));
    }

    #[test]
    fn one_by_one_mu_is_the_twist() {
        let mu = mu_matrix(&FiniteSets, &m(&[&[2]]), &m(&[&[3]])).unwrap();
        assert_eq!(mu.get(0, 0), &Perm::grid_transpose(2, 3));
    }

    #[test]
    fn block_perm_realizes_the_permutation() {
        // labelled summands of sizes 1, 2, 3: track where each point lands
        let layout = [1, 2, 3];
        let cycle = Perm::from_one_line(&[2, 3, 1]).unwrap();
        let f = block_perm_morphism(&FiniteSets, &layout, &cycle).unwrap();
        let offsets = |sizes: &[usize]| sizes.iter().scan(0, |acc, s| Some(std::mem::replace(acc, *acc + s))).collect::<Vec<_>>();
        let before = offsets(&layout);
        let after_layout = [3, 1, 2];
        let after = offsets(&after_layout);
        for (i, &size) in layout.iter().enumerate() {
            for p in 0..size {
                assert_eq!(f.apply(before[i] + p), after[cycle.apply(i)] + p);
            }
        }
        let swap = block_perm_morphism(&FiniteSets, &[1, 2], &Perm::from_one_line(&[2, 1]).unwrap()).unwrap();
        assert_eq!(swap, FiniteSets.c_oplus(&1, &2));
    }

    #[test]
    fn alpha_is_trivial_on_one_by_one_and_discrete() {
        let a = m(&[&[2]]);
        let alpha = alpha_assoc(&FiniteSets, &a, &m(&[&[3]]), &m(&[&[1]])).unwrap();
        assert!(alpha.get(0, 0).is_identity());
        let z = Discrete::integers();
        let e = |v: i64| RigElem::int(v);
        let x = Matrix(vec![vec![e(1), e(-2)], vec![e(3), e(0)]]);
        let alpha = alpha_assoc(&z, &x, &x, &x).unwrap();
        assert_eq!(alpha, mat_id(&z, &mat_mul_obj(&z, &x, &mat_mul_obj(&z, &x, &x).unwrap()).unwrap()));
    }

    #[test]
    fn gl_membership_examples() {
        assert!(gl_member(&FiniteSets, &m(&[&[1, 1], &[0, 1]])).unwrap());
        assert!(!gl_member(&FiniteSets, &m(&[&[2]])).unwrap());
        let w = Wedge::new(FiniteAbelianGroup::cyclic(3));
        let g = crate::rig::GroupElem(vec![1]);
        assert!(gl_member(&w, &Matrix(vec![vec![w.constant(1, &g)]])).unwrap());
    }

    #[test]
    fn lemmas_hold_on_finite_sets() {
        let cfg = CheckConfig::new(SampleSpec::new(2, 2, 40, 9));
        let report = check_matrix_lemmas(&FiniteSets, &cfg);
        assert!(report.passed(), "{:#?}", report.failing().collect::<Vec<_>>());
        let report = check_pentagon(&FiniteSets, &cfg.with_spec(SampleSpec::new(2, 2, 10, 9)));
        assert!(report.passed(), "{:#?}", report.failing().collect::<Vec<_>>());
    }

    #[test]
    fn lemmas_hold_on_bundled_instances() {
        let cfg = CheckConfig::new(SampleSpec::new(3, 2, 30, 5));
        for key in crate::instances::BUNDLED {
            let inst = crate::instances::make_instance(key).unwrap();
            let (lemmas, pentagon) = crate::with_instance!(&inst, c => (
                check_matrix_lemmas(c, &cfg),
                check_pentagon(c, &cfg.with_spec(SampleSpec::new(3, 2, 8, 5))),
            ));
            assert!(lemmas.passed(), "{}: {:#?}", key, lemmas.failing().collect::<Vec<_>>());
            assert!(pentagon.passed(), "{}: {:#?}", key, pentagon.failing().collect::<Vec<_>>());
        }
    }
}
