//! The bar construction `B_q GL_n(𝓡)` as explicit data: a q-simplex is a
//! triangle of matrices `A^{ij}` (`i < j`, with `A^{ii} = E_n`) and
//! isomorphisms `φ^{ijk} : A^{ij}·A^{jk} → A^{ik}`, coherent with `α`.
//! Faces and degeneracies act by precomposition with monotone maps; `τ`
//! reflects the indices, applies `ζ` entrywise, transposes and corrects the
//! `φ`s by `μ⁻¹`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::category::{Bimonoidal, BimonoidalExt};
use crate::check::{CheckConfig, CheckReport, Verdict};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::instances::Discrete;
use crate::involution::{zeta_matrix, zeta_matrix_mor};
use crate::matrices::{
    alpha_assoc, alpha_inverse, gl_member, mat_compose, mat_cod, mat_dom, mat_id, mat_inverse, mat_mul_mor,
    mat_mul_obj, mu_matrix, pi0_matrix, sample_gl, unit_matrix, Matrix,
};
use crate::rig::RigElem;
use crate::sample::{SampleSpec, Sampler};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ObjCell<O> {
    pub i: usize,
    pub j: usize,
    pub matrix: Matrix<O>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiCell<M> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub matrix: Matrix<M>,
}

/// A q-simplex of `n × n` matrices. `objects` lists every `i < j` and `phi`
/// every `i < j < k`, both in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarSimplex<O, M> {
    pub q: usize,
    pub n: usize,
    pub objects: Vec<ObjCell<O>>,
    pub phi: Vec<PhiCell<M>>,
}

pub type Simplex<C> = BarSimplex<<C as Bimonoidal>::Obj, <C as Bimonoidal>::Mor>;

fn pairs(q: usize) -> Vec<(usize, usize)> {
    (0..=q).flat_map(|i| (i + 1..=q).map(move |j| (i, j))).collect()
}

fn triples(q: usize) -> Vec<(usize, usize, usize)> {
    pairs(q).into_iter().flat_map(|(i, j)| (j + 1..=q).map(move |k| (i, j, k))).collect()
}

fn quadruples(q: usize) -> Vec<[usize; 4]> {
    triples(q).into_iter().flat_map(|(i, j, k)| (k + 1..=q).map(move |l| [i, j, k, l])).collect()
}

impl<O: Clone, M: Clone> BarSimplex<O, M> {
    /// Builds the cells from functions of the indices.
    pub fn try_from_fns(
        q: usize,
        n: usize,
        mut obj: impl FnMut(usize, usize) -> Result<Matrix<O>>,
        mut phi: impl FnMut(usize, usize, usize) -> Result<Matrix<M>>,
    ) -> Result<Self> {
        let objects = pairs(q).into_iter().map(|(i, j)| Ok(ObjCell { i, j, matrix: obj(i, j)? })).collect::<Result<_>>()?;
        let phi = triples(q)
            .into_iter()
            .map(|(i, j, k)| Ok(PhiCell { i, j, k, matrix: phi(i, j, k)? }))
            .collect::<Result<_>>()?;
        Ok(BarSimplex { q, n, objects, phi })
    }

    /// The stored `A^{ij}` for `i < j`.
    pub fn cell(&self, i: usize, j: usize) -> Result<&Matrix<O>> {
        self.objects
            .iter()
            .find(|c| c.i == i && c.j == j)
            .map(|c| &c.matrix)
            .ok_or_else(|| Error::Invalid(format!("simplex has no object A^{{{},{}}}", i, j)))
    }

    /// The stored `φ^{ijk}` for `i < j < k`.
    pub fn phi_cell(&self, i: usize, j: usize, k: usize) -> Result<&Matrix<M>> {
        self.phi
            .iter()
            .find(|c| c.i == i && c.j == j && c.k == k)
            .map(|c| &c.matrix)
            .ok_or_else(|| Error::Invalid(format!("simplex has no φ^{{{},{},{}}}", i, j, k)))
    }

    /// The diagonal `A^{01}, A^{12}, …`.
    pub fn chain(&self) -> Result<Vec<Matrix<O>>> {
        (0..self.q).map(|i| self.cell(i, i + 1).cloned()).collect()
    }

    /// Checks that the cells are exactly the index triangle, in order, with
    /// `n × n` matrices.
    pub fn check_shape(&self) -> Result<()> {
        let obj_idx: Vec<_> = self.objects.iter().map(|c| (c.i, c.j)).collect();
        let phi_idx: Vec<_> = self.phi.iter().map(|c| (c.i, c.j, c.k)).collect();
        if obj_idx != pairs(self.q) || phi_idx != triples(self.q) {
            return Err(Error::Invalid(format!("cells do not form the index triangle of a {}-simplex", self.q)));
        }
        let sizes_ok = self.objects.iter().all(|c| c.matrix.n() == self.n && c.matrix.check_square().is_ok())
            && self.phi.iter().all(|c| c.matrix.n() == self.n && c.matrix.check_square().is_ok());
        if !sizes_ok {
            return Err(Error::Size(format!("cell matrices are not all {} × {}", self.n, self.n)));
        }
        Ok(())
    }
}

/// `A^{ij}`, with `A^{ii} = E_n`.
pub fn obj_at<C: Bimonoidal>(cat: &C, s: &Simplex<C>, i: usize, j: usize) -> Result<Matrix<C::Obj>> {
    match i.cmp(&j) {
        std::cmp::Ordering::Equal => Ok(unit_matrix(cat, s.n)),
        std::cmp::Ordering::Less => s.cell(i, j).cloned(),
        std::cmp::Ordering::Greater => Err(Error::Invalid(format!("A^{{{},{}}} with decreasing indices", i, j))),
    }
}

/// `φ^{ijk}` for `i ≤ j ≤ k`; identities when two indices agree.
pub fn phi_at<C: Bimonoidal>(cat: &C, s: &Simplex<C>, i: usize, j: usize, k: usize) -> Result<Matrix<C::Mor>> {
    if i == j {
        Ok(mat_id(cat, &obj_at(cat, s, j, k)?))
    } else if j == k {
        Ok(mat_id(cat, &obj_at(cat, s, i, j)?))
    } else {
        s.phi_cell(i, j, k).cloned()
    }
}

/// The 0-simplex of size `n`.
pub fn point<C: Bimonoidal>(n: usize) -> Simplex<C> {
    BarSimplex { q: 0, n, objects: Vec::new(), phi: Vec::new() }
}

/// A monotone map `[q] → [p]` given by its values, acting on simplices
/// contravariantly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaOpMap {
    pub values: Vec<usize>,
    pub target: usize,
}

impl DeltaOpMap {
    pub fn new(values: Vec<usize>, target: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid("a map out of [q] has at least one value".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invalid(format!("{:?} is not monotone", values)));
        }
        if values.iter().any(|&v| v > target) {
            return Err(Error::Invalid(format!("{:?} leaves [{}]", values, target)));
        }
        Ok(DeltaOpMap { values, target })
    }

    pub fn identity(q: usize) -> Self {
        DeltaOpMap { values: (0..=q).collect(), target: q }
    }

    /// `δ_i : [p−1] → [p]`, skipping `i`.
    pub fn face(p: usize, i: usize) -> Result<Self> {
        if p == 0 || i > p {
            return Err(Error::Invalid(format!("no coface δ_{} into [{}]", i, p)));
        }
        Ok(DeltaOpMap { values: (0..=p).filter(|&v| v != i).collect(), target: p })
    }

    /// `σ_i : [p+1] → [p]`, hitting `i` twice.
    pub fn degeneracy(p: usize, i: usize) -> Result<Self> {
        if i > p {
            return Err(Error::Invalid(format!("no codegeneracy σ_{} onto [{}]", i, p)));
        }
        Ok(DeltaOpMap { values: (0..=p + 1).map(|v| if v <= i { v } else { v - 1 }).collect(), target: p })
    }

    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn apply(&self, v: usize) -> usize {
        self.values[v]
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &DeltaOpMap) -> Result<DeltaOpMap> {
        if other.target != self.source() {
            return Err(Error::mismatch(format!("[{}] → [{}] after a map into [{}]", self.source(), self.target, other.target)));
        }
        Ok(DeltaOpMap { values: other.values.iter().map(|&v| self.values[v]).collect(), target: self.target })
    }
}

/// The orientation reversal `r(g)(i) = p − g(q − i)`.
pub fn r_map(g: &DeltaOpMap) -> DeltaOpMap {
    let q = g.source();
    DeltaOpMap { values: (0..=q).map(|i| g.target - g.values[q - i]).collect(), target: g.target }
}

/// `g^* s`: entry `(k, l)` is `A^{g(k), g(l)}`, and likewise for `φ`.
pub fn pullback<C: Bimonoidal>(cat: &C, s: &Simplex<C>, g: &DeltaOpMap) -> Result<Simplex<C>> {
    if g.target != s.q {
        return Err(Error::mismatch(format!("map into [{}] applied to a {}-simplex", g.target, s.q)));
    }
    BarSimplex::try_from_fns(
        g.source(),
        s.n,
        |k, l| obj_at(cat, s, g.apply(k), g.apply(l)),
        |k, l, m| phi_at(cat, s, g.apply(k), g.apply(l), g.apply(m)),
    )
}

pub fn face<C: Bimonoidal>(cat: &C, s: &Simplex<C>, i: usize) -> Result<Simplex<C>> {
    pullback(cat, s, &DeltaOpMap::face(s.q, i)?)
}

pub fn degeneracy<C: Bimonoidal>(cat: &C, s: &Simplex<C>, i: usize) -> Result<Simplex<C>> {
    pullback(cat, s, &DeltaOpMap::degeneracy(s.q, i)?)
}

/// `B^{ij} = ζ(A^{q−j,q−i})^t` and
/// `τ(φ)^{ijk} = ζ(φ^{q−k,q−j,q−i})^t ∘ μ⁻¹_{A^{q−k,q−j},A^{q−j,q−i}}`.
pub fn tau<C: Bimonoidal>(cat: &C, s: &Simplex<C>) -> Result<Simplex<C>> {
    if !cat.has_anti_involution() {
        return Err(Error::capability(format!("{} has no anti-involution", cat.name())));
    }
    let q = s.q;
    let zt = |m: &Matrix<C::Obj>| zeta_matrix(cat, m).map(|z| z.transpose());
    BarSimplex::try_from_fns(
        q,
        s.n,
        |i, j| zt(s.cell(q - j, q - i)?),
        |i, j, k| {
            let x = s.cell(q - k, q - j)?;
            let y = s.cell(q - j, q - i)?;
            let mu_inv = mat_inverse(cat, &mu_matrix(cat, x, y)?)?;
            let zphi = zeta_matrix_mor(cat, s.phi_cell(q - k, q - j, q - i)?)?.transpose();
            mat_compose(cat, &zphi, &mu_inv)
        },
    )
}

fn block_diag<T: Clone>(a: &Matrix<T>, b: &Matrix<T>, fill: &T) -> Matrix<T> {
    let (n, m) = (a.n(), b.n());
    Matrix::from_fn(n + m, |i, j| match (i < n, j < n) {
        (true, true) => a.get(i, j).clone(),
        (false, false) => b.get(i - n, j - n).clone(),
        _ => fill.clone(),
    })
}

/// Blockwise diagonal sum `s ⊕ t` of two simplices of the same degree.
pub fn block_sum<C: Bimonoidal>(cat: &C, s: &Simplex<C>, t: &Simplex<C>) -> Result<Simplex<C>> {
    if s.q != t.q {
        return Err(Error::mismatch(format!("block sum of a {}-simplex and a {}-simplex", s.q, t.q)));
    }
    let zero = cat.zero();
    let id_zero = cat.id(&zero);
    BarSimplex::try_from_fns(
        s.q,
        s.n + t.n,
        |i, j| Ok(block_diag(s.cell(i, j)?, t.cell(i, j)?, &zero)),
        |i, j, k| Ok(block_diag(s.phi_cell(i, j, k)?, t.phi_cell(i, j, k)?, &id_zero)),
    )
}

/// The simplex with diagonal `B_0, …, B_{q−1}`, right-nested products
/// `A^{ij} = B_i·A^{i+1,j}` and `φ^{ijk} = (id·φ^{i+1,j,k}) ∘ α⁻¹` for
/// `j > i+1` (identities when `j = i+1`). No GL check.
pub fn chain_simplex<C: Bimonoidal>(cat: &C, chain: &[Matrix<C::Obj>]) -> Result<Simplex<C>> {
    let q = chain.len();
    let n = chain.first().map(|b| b.n()).ok_or_else(|| Error::Invalid("empty chain".into()))?;
    for b in chain {
        b.check_square()?;
        if b.n() != n {
            return Err(Error::Size(format!("chain mixes {0} × {0} and {1} × {1} matrices", n, b.n())));
        }
    }
    // objs[i][j] = A^{ij}, filled from the right
    let mut objs: Vec<Vec<Option<Matrix<C::Obj>>>> = vec![vec![None; q + 1]; q + 1];
    for i in (0..q).rev() {
        objs[i][i + 1] = Some(chain[i].clone());
        for j in i + 2..=q {
            let rest = objs[i + 1][j].clone().expect("filled");
            objs[i][j] = Some(mat_mul_obj(cat, &chain[i], &rest)?);
        }
    }
    let get = |i: usize, j: usize| objs[i][j].clone().expect("filled");
    let mut phis: std::collections::HashMap<(usize, usize, usize), Matrix<C::Mor>> = Default::default();
    for i in (0..q).rev() {
        for j in i + 1..=q {
            for k in j + 1..=q {
                let phi = if j == i + 1 {
                    mat_id(cat, &get(i, k))
                } else {
                    let inner = &phis[&(i + 1, j, k)];
                    let step = mat_mul_mor(cat, &mat_id(cat, &chain[i]), inner)?;
                    mat_compose(cat, &step, &alpha_inverse(cat, &chain[i], &get(i + 1, j), &get(j, k))?)?
                };
                phis.insert((i, j, k), phi);
            }
        }
    }
    BarSimplex::try_from_fns(q, n, |i, j| Ok(get(i, j)), |i, j, k| Ok(phis[&(i, j, k)].clone()))
}

/// [`chain_simplex`] after checking that every `B_i` lies in `GL_n`.
pub fn build_from_chain<C: Bimonoidal>(cat: &C, chain: &[Matrix<C::Obj>]) -> Result<Simplex<C>> {
    for (i, b) in chain.iter().enumerate() {
        if !gl_member(cat, b)? {
            return Err(Error::Invalid(format!("chain entry {} is not in GL: {:?}", i, b)));
        }
    }
    chain_simplex(cat, chain)
}

#[derive(Serialize)]
struct CellIndex<'a, S> {
    simplex: &'a S,
    index: Vec<usize>,
}

/// Shape, GL membership, typing and invertibility of every `φ`, and the
/// coherence square for every `i < j < k < l`:
/// `φ^{ikl} ∘ (φ^{ijk}·id) ∘ α = φ^{ijl} ∘ (id·φ^{jkl})`.
pub fn validate_simplex<C: Bimonoidal>(cat: &C, s: &Simplex<C>) -> CheckReport {
    let cfg = CheckConfig { exec: Exec::Sequential, ..CheckConfig::default() };
    let mut report = CheckReport::new("bar-simplex", cat.name());
    report.push(cfg.law("bar.shape", "cells indexed by i < j and i < j < k, all n × n", &[s], |s| {
        s.check_shape().map(|_| Verdict::Pass)
    }));
    if !report.passed() {
        return report;
    }
    let cells = |idx: Vec<Vec<usize>>| -> Vec<CellIndex<'_, Simplex<C>>> {
        idx.into_iter().map(|index| CellIndex { simplex: s, index }).collect()
    };
    let at_pairs = cells(pairs(s.q).into_iter().map(|(i, j)| vec![i, j]).collect());
    report.push(cfg.law("bar.gl", "A^{ij} ∈ GL_n(π₀)", &at_pairs, |c| {
        let a = s.cell(c.index[0], c.index[1])?;
        Ok(Verdict::holds(gl_member(cat, a)?, &c.index, "invertible over the group completion of π₀"))
    }));
    let at_triples = cells(triples(s.q).into_iter().map(|(i, j, k)| vec![i, j, k]).collect());
    report.push(cfg.law("bar.phi.typed", "φ^{ijk} : A^{ij}·A^{jk} → A^{ik}, invertible", &at_triples, |c| {
        let (i, j, k) = (c.index[0], c.index[1], c.index[2]);
        let phi = s.phi_cell(i, j, k)?;
        let shape = Verdict::equal(
            &(mat_dom(cat, phi), mat_cod(cat, phi)),
            &(mat_mul_obj(cat, s.cell(i, j)?, s.cell(j, k)?)?, s.cell(i, k)?.clone()),
        );
        if !shape.passed() {
            return Ok(shape);
        }
        mat_inverse(cat, phi).map(|_| Verdict::Pass)
    }));
    let at_quads = cells(quadruples(s.q).into_iter().map(|q| q.to_vec()).collect());
    report.push(cfg.law(
        "bar.coherence",
        "φ^{ikl} ∘ (φ^{ijk}·id) ∘ α = φ^{ijl} ∘ (id·φ^{jkl})",
        &at_quads,
        |c| {
            let [i, j, k, l] = [c.index[0], c.index[1], c.index[2], c.index[3]];
            let (aij, ajk, akl) = (s.cell(i, j)?, s.cell(j, k)?, s.cell(k, l)?);
            let lhs = mat_compose(
                cat,
                s.phi_cell(i, k, l)?,
                &mat_compose(
                    cat,
                    &mat_mul_mor(cat, s.phi_cell(i, j, k)?, &mat_id(cat, akl))?,
                    &alpha_assoc(cat, aij, ajk, akl)?,
                )?,
            )?;
            let rhs = mat_compose(cat, s.phi_cell(i, j, l)?, &mat_mul_mor(cat, &mat_id(cat, aij), s.phi_cell(j, k, l)?)?)?;
            Ok(Verdict::equal(&lhs, &rhs))
        },
    ));
    report
}

/// Entrywise π₀ labels into the discrete category of `π₀`; every `φ`
/// becomes an identity.
pub fn project_pi0<C: Bimonoidal>(cat: &C, s: &Simplex<C>) -> Result<(Discrete, BarSimplex<RigElem, RigElem>)> {
    let rig = cat.component_rig_req()?;
    let target = Discrete::new(rig.clone(), rig.kind_name());
    let projected = BarSimplex::try_from_fns(
        s.q,
        s.n,
        |i, j| pi0_matrix(cat, s.cell(i, j)?),
        |i, _, k| pi0_matrix(cat, s.cell(i, k)?),
    )?;
    Ok((target, projected))
}

/// Applies `τ` to the chain simplex of `chain` over a discrete instance and
/// compares its diagonal with `ζ(B_{q−1})^t, …, ζ(B_0)^t`.
pub fn compare_classical_involution<C: Bimonoidal>(cat: &C, chain: &[Matrix<C::Obj>]) -> Result<CheckReport> {
    if !cat.is_discrete() {
        return Err(Error::capability(format!("{} is not a discrete rig category", cat.name())));
    }
    if !cat.has_anti_involution() {
        return Err(Error::capability(format!("{} has no anti-involution", cat.name())));
    }
    let cfg = CheckConfig { exec: Exec::Sequential, ..CheckConfig::default() };
    let mut report = CheckReport::new("classical-involution", cat.name());
    report.push(cfg.law("bar.classical", "diagonal of τ(B_0, …, B_{q−1}) = (ζ(B_{q−1})^t, …, ζ(B_0)^t)", &[chain], |c| {
        classical_verdict(cat, c)
    }));
    Ok(report)
}

fn classical_verdict<C: Bimonoidal>(cat: &C, chain: &[Matrix<C::Obj>]) -> Result<Verdict> {
    let got = tau(cat, &build_from_chain(cat, chain)?)?.chain()?;
    let expected = chain.iter().rev().map(|b| zeta_matrix(cat, b).map(|z| z.transpose())).collect::<Result<Vec<_>>>()?;
    Ok(Verdict::equal(&got, &expected))
}

/// Random GL chains of length `1..=max_q` with matrix size `1..=max_arity_n`.
pub fn sample_chains<C: Bimonoidal>(
    cat: &C,
    spec: &SampleSpec,
    stream: &str,
    count: usize,
    max_q: usize,
) -> Result<Vec<Vec<Matrix<C::Obj>>>> {
    let mut s = Sampler::new(cat, spec, stream);
    let max_n = spec.max_arity_n.max(1);
    (0..count)
        .map(|_| {
            let q = s.rng().gen_range(1..=max_q.max(1));
            let n = s.rng().gen_range(1..=max_n);
            (0..q).map(|_| sample_gl(cat, &mut s, n)).collect()
        })
        .collect()
}

/// Chain-built simplices for the corpus checks.
pub fn sample_simplices<C: Bimonoidal>(cat: &C, cfg: &CheckConfig, stream: &str, count: usize) -> Result<Vec<Simplex<C>>> {
    let chains = sample_chains(cat, &cfg.spec, stream, count, MAX_Q)?;
    cfg.exec.map(&chains, |c| build_from_chain(cat, c)).into_iter().collect()
}

/// Simplices in the corpus checks have degree at most this.
pub const MAX_Q: usize = 3;

#[derive(Serialize)]
struct AtIndex<S> {
    simplex: S,
    i: usize,
}

#[derive(Serialize)]
struct AtPair<S> {
    simplex: S,
    i: usize,
    j: usize,
}

fn with_index<S: Clone, R: Rng>(rng: &mut R, items: &[S], bound: impl Fn(&S) -> Option<usize>) -> Vec<AtIndex<S>> {
    items
        .iter()
        .filter_map(|s| bound(s).map(|b| AtIndex { simplex: s.clone(), i: rng.gen_range(0..=b) }))
        .collect()
}

fn corpus_or_report<C: Bimonoidal>(
    cat: &C,
    cfg: &CheckConfig,
    stream: &str,
    report: &mut CheckReport,
) -> Option<Vec<Simplex<C>>> {
    match sample_simplices(cat, cfg, stream, cfg.spec.sample_count) {
        Ok(v) => Some(v),
        Err(e) => {
            report.push(cfg.law("bar.corpus", "random GL chains build into simplices", &[stream], |_| {
                Err(Error::Invalid(e.to_string()))
            }));
            None
        }
    }
}

/// `τ ∘ d_i = d_{q−i} ∘ τ` and `τ ∘ s_i = s_{q−i} ∘ τ` on a q-simplex, the
/// reindexing given by `r`.
pub fn check_tau_simplicial<C: Bimonoidal>(cat: &C, cfg: &CheckConfig) -> CheckReport {
    let mut report = CheckReport::new("tau-simplicial", cat.name());
    let Some(corpus) = corpus_or_report(cat, cfg, "tau.simplicial", &mut report) else {
        return report;
    };
    let mut rng = cfg.spec.rng("tau.simplicial.index");
    let faces = with_index(&mut rng, &corpus, |s| (s.q > 0).then_some(s.q));
    report.push(cfg.law("tau.face", "τ(d_i s) = d_{q−i}(τ s)", &faces, |x| {
        let (s, i) = (&x.simplex, x.i);
        same(tau(cat, &face(cat, s, i)?), face(cat, &tau(cat, s)?, s.q - i))
    }));
    let degens = with_index(&mut rng, &corpus, |s| Some(s.q));
    report.push(cfg.law("tau.degeneracy", "τ(s_i s) = s_{q−i}(τ s)", &degens, |x| {
        let (s, i) = (&x.simplex, x.i);
        same(tau(cat, &degeneracy(cat, s, i)?), degeneracy(cat, &tau(cat, s)?, s.q - i))
    }));
    report
}

fn same<T: Serialize + PartialEq>(lhs: Result<T>, rhs: Result<T>) -> Result<Verdict> {
    Ok(Verdict::equal(&lhs?, &rhs?))
}

fn valid<C: Bimonoidal>(cat: &C, s: &Simplex<C>) -> Verdict {
    let report = validate_simplex(cat, s);
    let verdict = match report.failing().next() {
        None => Verdict::Pass,
        Some(l) => Verdict::holds(false, l, "a valid simplex"),
    };
    verdict
}

/// The simplicial identities on chain-built simplices.
pub fn check_simplicial_identities<C: Bimonoidal>(cat: &C, cfg: &CheckConfig) -> CheckReport {
    let mut report = CheckReport::new("simplicial", cat.name());
    let Some(corpus) = corpus_or_report(cat, cfg, "bar.simplicial", &mut report) else {
        return report;
    };
    let mut rng = cfg.spec.rng("bar.simplicial.index");
    let draw = |rng: &mut rand_chacha::ChaCha8Rng, lo: usize, hi: usize| rng.gen_range(lo..=hi);
    // d_i d_j = d_{j−1} d_i for i < j ≤ q
    let dd: Vec<_> = corpus
        .iter()
        .filter(|s| s.q >= 2)
        .map(|s| {
            let j = draw(&mut rng, 1, s.q);
            AtPair { simplex: s.clone(), i: draw(&mut rng, 0, j - 1), j }
        })
        .collect();
    report.push(cfg.law("bar.identity.dd", "d_i d_j = d_{j−1} d_i (i < j)", &dd, |x| {
        let s = &x.simplex;
        same(face(cat, &face(cat, s, x.j)?, x.i), face(cat, &face(cat, s, x.i)?, x.j - 1))
    }));
    // s_i s_j = s_{j+1} s_i for i ≤ j ≤ q
    let ss: Vec<_> = corpus
        .iter()
        .map(|s| {
            let j = draw(&mut rng, 0, s.q);
            AtPair { simplex: s.clone(), i: draw(&mut rng, 0, j), j }
        })
        .collect();
    report.push(cfg.law("bar.identity.ss", "s_i s_j = s_{j+1} s_i (i ≤ j)", &ss, |x| {
        let s = &x.simplex;
        same(degeneracy(cat, &degeneracy(cat, s, x.j)?, x.i), degeneracy(cat, &degeneracy(cat, s, x.i)?, x.j + 1))
    }));
    // d_i s_j = s_{j−1} d_i for i < j
    let lower: Vec<_> = corpus
        .iter()
        .filter(|s| s.q >= 1)
        .map(|s| {
            let j = draw(&mut rng, 1, s.q);
            AtPair { simplex: s.clone(), i: draw(&mut rng, 0, j - 1), j }
        })
        .collect();
    report.push(cfg.law("bar.identity.ds_lower", "d_i s_j = s_{j−1} d_i (i < j)", &lower, |x| {
        let s = &x.simplex;
        same(face(cat, &degeneracy(cat, s, x.j)?, x.i), degeneracy(cat, &face(cat, s, x.i)?, x.j - 1))
    }));
    // d_j s_j = d_{j+1} s_j = id
    let ident = with_index(&mut rng, &corpus, |s| Some(s.q));
    report.push(cfg.law("bar.identity.ds_id", "d_j s_j = id = d_{j+1} s_j", &ident, |x| {
        let (s, j) = (&x.simplex, x.i);
        let up = degeneracy(cat, s, j)?;
        Ok(Verdict::equal(&(face(cat, &up, j)?, face(cat, &up, j + 1)?), &(s.clone(), s.clone())))
    }));
    // d_i s_j = s_j d_{i−1} for i > j + 1
    let upper: Vec<_> = corpus
        .iter()
        .filter(|s| s.q >= 1)
        .map(|s| {
            let j = draw(&mut rng, 0, s.q - 1);
            AtPair { simplex: s.clone(), i: draw(&mut rng, j + 2, s.q + 1), j }
        })
        .collect();
    report.push(cfg.law("bar.identity.ds_upper", "d_i s_j = s_j d_{i−1} (i > j+1)", &upper, |x| {
        let s = &x.simplex;
        same(face(cat, &degeneracy(cat, s, x.j)?, x.i), degeneracy(cat, &face(cat, s, x.i - 1)?, x.j))
    }));
    report
}

#[derive(Serialize)]
struct SimplexPair<S> {
    s: S,
    t: S,
}

/// The full bar/τ corpus check: validity of chain simplices and their
/// images under `τ`, degeneracies, the simplicial identities, compatibility
/// of `τ` with faces and degeneracies, `τ² = id` and block sums.
pub fn check_bar_suite<C: Bimonoidal>(cat: &C, cfg: &CheckConfig) -> CheckReport {
    let mut report = CheckReport::new("bar", cat.name());
    let Some(corpus) = corpus_or_report(cat, cfg, "bar.corpus", &mut report) else {
        return report;
    };
    report.push(cfg.law("bar.chain.valid", "chain-built simplices validate", &corpus, |s| Ok(valid(cat, s))));
    report.push(cfg.law("bar.degeneracy.valid", "s_i of a chain simplex validates", &corpus, |s| {
        for i in 0..=s.q {
            let v = valid(cat, &degeneracy(cat, s, i)?);
            if !v.passed() {
                return Ok(v);
            }
        }
        Ok(Verdict::Pass)
    }));
    report.extend(check_simplicial_identities(cat, cfg));
    if !cat.has_anti_involution() {
        return report;
    }
    report.push(cfg.law("bar.tau.valid", "τ(s) validates", &corpus, |s| Ok(valid(cat, &tau(cat, s)?))));
    report.extend(check_tau_simplicial(cat, cfg));
    report.push(cfg.law("bar.tau.involutive.objects", "τ(τ(s)) and s have the same A^{ij}", &corpus, |s| {
        Ok(Verdict::equal(&tau(cat, &tau(cat, s)?)?.objects, &s.objects))
    }));
    if cat.is_bipermutative() || cat.is_discrete() {
        report.push(cfg.law("bar.tau.involutive.full", "τ(τ(s)) = s", &corpus, |s| {
            Ok(Verdict::equal(&tau(cat, &tau(cat, s)?)?, s))
        }));
    }
    let pair_count = cfg.spec.sample_count.min(100);
    let others = match sample_simplices(cat, cfg, "bar.block_sum", pair_count) {
        Ok(v) => v,
        Err(_) => return report,
    };
    // pair each sample with a corpus simplex of the same degree
    let pairs: Vec<_> = others
        .into_iter()
        .filter_map(|t| corpus.iter().find(|s| s.q == t.q).map(|s| SimplexPair { s: s.clone(), t }))
        .collect();
    report.push(cfg.law("bar.block_sum.tau", "τ(s ⊕ t) = τ(s) ⊕ τ(t)", &pairs, |p| {
        same(tau(cat, &block_sum(cat, &p.s, &p.t)?), block_sum(cat, &tau(cat, &p.s)?, &tau(cat, &p.t)?))
    }));
    report.push(cfg.law("bar.block_sum.monoid", "(s ⊕ t) ⊕ s = s ⊕ (t ⊕ s), s ⊕ 0 = s = 0 ⊕ s", &pairs, |p| {
        let (s, t) = (&p.s, &p.t);
        let empty = empty_like(cat, s)?;
        let assoc = Verdict::equal(
            &block_sum(cat, &block_sum(cat, s, t)?, s)?,
            &block_sum(cat, s, &block_sum(cat, t, s)?)?,
        );
        if !assoc.passed() {
            return Ok(assoc);
        }
        Ok(Verdict::equal(&(block_sum(cat, s, &empty)?, block_sum(cat, &empty, s)?), &(s.clone(), s.clone())))
    }));
    report.push(cfg.law("bar.block_sum.valid", "s ⊕ t validates", &pairs, |p| Ok(valid(cat, &block_sum(cat, &p.s, &p.t)?))));
    report
}

/// The 0 × 0 simplex of the same degree, the unit for [`block_sum`].
pub fn empty_like<C: Bimonoidal>(cat: &C, s: &Simplex<C>) -> Result<Simplex<C>> {
    let _ = cat;
    BarSimplex::try_from_fns(s.q, 0, |_, _| Ok(Matrix(Vec::new())), |_, _, _| Ok(Matrix(Vec::new())))
}

/// `project_pi0 ∘ τ = τ ∘ project_pi0` on chain-built simplices.
pub fn check_pi0_naturality<C: Bimonoidal>(cat: &C, cfg: &CheckConfig) -> CheckReport {
    let mut report = CheckReport::new("pi0-naturality", cat.name());
    let Some(corpus) = corpus_or_report(cat, cfg, "bar.pi0", &mut report) else {
        return report;
    };
    report.push(cfg.law("bar.pi0.tau", "π₀(τ s) = τ(π₀ s)", &corpus, |s| {
        let (target, projected) = project_pi0(cat, s)?;
        let (_, lhs) = project_pi0(cat, &tau(cat, s)?)?;
        Ok(Verdict::equal(&lhs, &tau(&target, &projected)?))
    }));
    report
}

/// [`compare_classical_involution`] on random chains.
pub fn check_classical_involution<C: Bimonoidal>(cat: &C, cfg: &CheckConfig) -> CheckReport {
    let mut report = CheckReport::new("classical-involution", cat.name());
    let chains = match sample_chains(cat, &cfg.spec, "bar.classical", cfg.spec.sample_count, MAX_Q) {
        Ok(c) => c,
        Err(e) => {
            report.push(cfg.law("bar.corpus", "random GL chains", &[()], |_| Err(Error::Invalid(e.to_string()))));
            return report;
        }
    };
    report.push(cfg.law(
        "bar.classical",
        "diagonal of τ(B_0, …, B_{q−1}) = (ζ(B_{q−1})^t, …, ζ(B_0)^t)",
        &chains,
        |c| {
            if !cat.is_discrete() {
                return Err(Error::capability(format!("{} is not a discrete rig category", cat.name())));
            }
            classical_verdict(cat, c)
        },
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{FiniteSets, Wedge};
    use crate::rig::FiniteAbelianGroup;

    fn m(rows: &[&[usize]]) -> Matrix<usize> {
        Matrix(rows.iter().map(|r| r.to_vec()).collect())
    }

    fn zi(rows: &[&[i64]]) -> Matrix<RigElem> {
        Matrix(rows.iter().map(|r| r.iter().map(|&x| RigElem::int(x)).collect()).collect())
    }

    #[test]
    fn r_reverses_orientation() {
        let d0 = DeltaOpMap::face(2, 0).unwrap();
        assert_eq!(r_map(&d0), DeltaOpMap::face(2, 2).unwrap());
        assert_eq!(r_map(&DeltaOpMap::identity(3)), DeltaOpMap::identity(3));
        let s0 = DeltaOpMap::degeneracy(1, 0).unwrap();
        assert_eq!(r_map(&s0), DeltaOpMap::degeneracy(1, 1).unwrap());
        for p in 1..5 {
            for i in 0..=p {
                let d = DeltaOpMap::face(p, i).unwrap();
                assert_eq!(r_map(&d), DeltaOpMap::face(p, p - i).unwrap());
                assert_eq!(r_map(&r_map(&d)), d);
            }
        }
        assert!(DeltaOpMap::new(vec![1, 0], 2).is_err());
    }

    #[test]
    fn r_is_functorial() {
        let f = DeltaOpMap::face(3, 1).unwrap();
        let g = DeltaOpMap::degeneracy(2, 0).unwrap();
        let fg = f.after(&g).unwrap();
        assert_eq!(r_map(&fg), r_map(&f).after(&r_map(&g)).unwrap());
    }

    #[test]
    fn faces_and_degeneracies_of_small_simplices() {
        let cat = FiniteSets;
        let one = build_from_chain(&cat, &[m(&[&[1, 1], &[0, 1]])]).unwrap();
        let d0 = face(&cat, &one, 0).unwrap();
        assert_eq!((d0.q, d0.objects.len()), (0, 0));
        let tri = build_from_chain(&cat, &[m(&[&[1, 1], &[0, 1]]), m(&[&[0, 1], &[1, 0]])]).unwrap();
        let d1 = face(&cat, &tri, 1).unwrap();
        assert_eq!(d1.chain().unwrap(), vec![tri.cell(0, 2).unwrap().clone()]);
        let s0 = degeneracy(&cat, &point::<FiniteSets>(2), 0).unwrap();
        assert_eq!(s0.chain().unwrap(), vec![unit_matrix(&cat, 2)]);
        assert!(face(&cat, &tri, 3).is_err());
    }

    #[test]
    fn integer_chain_and_classical_involution() {
        let z = Discrete::integers();
        let (u, v) = (zi(&[&[0, 1], &[1, 0]]), zi(&[&[1, 1], &[0, 1]]));
        let s = build_from_chain(&z, &[u.clone(), v.clone()]).unwrap();
        assert_eq!(s.cell(0, 2).unwrap(), &zi(&[&[0, 1], &[1, 1]]));
        assert_eq!(s.phi_cell(0, 1, 2).unwrap(), &zi(&[&[0, 1], &[1, 1]]));
        let t = tau(&z, &s).unwrap();
        assert_eq!(t.chain().unwrap(), vec![v.transpose(), u.transpose()]);
        assert!(compare_classical_involution(&z, &[u, v]).unwrap().passed());
        assert!(compare_classical_involution(&FiniteSets, &[m(&[&[1]])]).is_err());
        assert!(build_from_chain(&z, &[zi(&[&[2]])]).is_err());
    }

    #[test]
    fn tau_on_a_1x1_triangle_over_naturals() {
        let n = Discrete::naturals();
        let s = chain_simplex(&n, &[zi(&[&[2]]), zi(&[&[3]])]).unwrap();
        assert_eq!(s.cell(0, 2).unwrap(), &zi(&[&[6]]));
        let t = tau(&n, &s).unwrap();
        assert_eq!(t.chain().unwrap(), vec![zi(&[&[3]]), zi(&[&[2]])]);
        assert_eq!(t.cell(0, 2).unwrap(), &zi(&[&[6]]));
    }

    #[test]
    fn tau_inverts_wedge_labels() {
        let w = Wedge::new(FiniteAbelianGroup::cyclic(3));
        let g = crate::rig::GroupElem(vec![1]);
        let x = w.constant(2, &g);
        let s = chain_simplex(&w, &[Matrix(vec![vec![x]])]).unwrap();
        let t = tau(&w, &s).unwrap();
        assert_eq!(t.chain().unwrap(), vec![Matrix(vec![vec![w.constant(2, &crate::rig::GroupElem(vec![2]))]])]);
    }

    #[test]
    fn literal_face_index_does_not_commute_with_tau() {
        let cat = FiniteSets;
        let s = build_from_chain(&cat, &[m(&[&[1, 1], &[0, 1]]), m(&[&[0, 1], &[1, 0]])]).unwrap();
        let q = s.q;
        let lhs = tau(&cat, &face(&cat, &s, 0).unwrap()).unwrap();
        assert_eq!(lhs, face(&cat, &tau(&cat, &s).unwrap(), q).unwrap());
        assert_ne!(lhs, face(&cat, &tau(&cat, &s).unwrap(), q - 1).unwrap());
        // at q = 0 the literal degeneracy index is negative
        assert!(q.checked_sub(1).and_then(|x| x.checked_sub(q)).is_none());
    }

    #[test]
    fn json_round_trip() {
        let cat = FiniteSets;
        let s = build_from_chain(&cat, &[m(&[&[1, 1], &[0, 1]]), m(&[&[1, 0], &[2, 1]]), m(&[&[0, 1], &[1, 0]])]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        let back: Simplex<FiniteSets> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn mutated_phi_is_rejected() {
        let cat = FiniteSets;
        let mut s = build_from_chain(&cat, &[m(&[&[1, 1], &[0, 1]]), m(&[&[1, 0], &[1, 1]]), m(&[&[1, 1], &[0, 1]])]).unwrap();
        assert!(validate_simplex(&cat, &s).passed());
        let cell = s.phi.iter_mut().find(|c| (c.i, c.j, c.k) == (0, 1, 3)).unwrap();
        let target = mat_cod(&cat, &cell.matrix);
        let (r, c) = (0..2).flat_map(|r| (0..2).map(move |c| (r, c))).find(|&(r, c)| *target.get(r, c) >= 2).unwrap();
        let size = *target.get(r, c);
        let swap = crate::perm::Perm::from_images((0..size).map(|x| if x < 2 { 1 - x } else { x }).collect()).unwrap();
        let mut auto = mat_id(&cat, &target);
        auto.0[r][c] = swap;
        cell.matrix = mat_compose(&cat, &auto, &cell.matrix).unwrap();
        let report = validate_simplex(&cat, &s);
        assert!(!report.law("bar.coherence").unwrap().passed);
    }

    #[test]
    fn corpus_suites_pass_on_finite_sets() {
        let cfg = CheckConfig::new(SampleSpec::new(2, 2, 40, 3));
        for report in [check_bar_suite(&FiniteSets, &cfg), check_pi0_naturality(&FiniteSets, &cfg)] {
            assert!(report.passed(), "{:#?}", report.failing().collect::<Vec<_>>());
        }
        let cfg = CheckConfig::new(SampleSpec::new(2, 2, 30, 3));
        let z = Discrete::integers();
        let report = check_classical_involution(&z, &cfg);
        assert!(report.passed(), "{:#?}", report.failing().collect::<Vec<_>>());
    }
}
