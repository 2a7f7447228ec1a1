//! Acceptance gate: prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use bimon::bar::{check_bar_suite, check_classical_involution, check_pi0_naturality, face, project_pi0, sample_simplices, tau};
use bimon::braided::{check_braided_laws, check_eq_e, check_yang_baxter, check_yang_baxter_exhaustive, induced_anti_involution};
use bimon::category::Bimonoidal;
use bimon::cli::run_command;
use bimon::instances::functors::{conjugation_action, functor_f};
use bimon::instances::{make_instance, Bichar, FiniteSets, Monomial, MonomialMatrix, Wedge, BUNDLED};
use bimon::involution::{check_anti_involution, check_antiinv_morphism, check_functor, check_group_action, fixed_category, BimonoidalFunctor};
use bimon::laws::check_bimonoidal_laws;
use bimon::matrices::{check_matrix_lemmas, check_pentagon};
use bimon::mutate::run_mutations;
use bimon::perm::Perm;
use bimon::rig::{is_invertible_matrix, FiniteAbelianGroup, GroupElem, GroupRingElem, Pi0Rig, RigElem};
use bimon::{CheckConfig, CheckReport, Exec, SampleSpec};

struct Line {
    ok: bool,
    detail: String,
}

fn line(ok: bool, detail: impl Into<String>) -> Line {
    Line { ok, detail: detail.into() }
}

fn first_failure(reports: &[CheckReport]) -> Option<String> {
    reports.iter().find(|r| !r.passed()).map(|r| {
        let law = r.failing().next().map(|l| l.law.clone()).unwrap_or_default();
        format!("{} / {} / {}", r.instance, r.suite, law)
    })
}

fn verdict(reports: &[CheckReport], extra: String) -> Line {
    match first_failure(reports) {
        None => line(true, extra),
        Some(f) => line(false, format!("{}; first failure {}", extra, f)),
    }
}

fn cfg(size: usize, n: usize, samples: usize) -> CheckConfig {
    CheckConfig::new(SampleSpec::new(size, n, samples, 42))
}

fn axioms() -> Line {
    let cfg = cfg(3, 2, 500);
    let start = Instant::now();
    let mut reports = Vec::new();
    for key in BUNDLED {
        let inst = make_instance(key).expect("bundled key");
        bimon::with_instance!(&inst, c => {
            reports.push(check_bimonoidal_laws(c, &cfg));
            reports.push(check_anti_involution(c, &cfg));
        });
    }
    let took = start.elapsed();
    let mut out = verdict(&reports, format!("{} instances, {:.1}s", BUNDLED.len(), took.as_secs_f64()));
    if took > Duration::from_secs(120) {
        out.ok = false;
        out.detail.push_str("; over the 120s budget");
    }
    out
}

fn matrix_lemmas() -> Line {
    let lemmas = cfg(3, 2, 200);
    let pent = cfg(3, 2, 50);
    let mut reports = Vec::new();
    for key in BUNDLED {
        let inst = make_instance(key).expect("bundled key");
        bimon::with_instance!(&inst, c => {
            reports.push(check_matrix_lemmas(c, &lemmas));
            reports.push(check_pentagon(c, &pent));
        });
    }
    verdict(&reports, "200 lemma samples and 50 pentagons per instance".into())
}

/// `τ ∘ d_i = d_{q−1−i} ∘ τ` as literally stated, on one simplex.
fn literal_face_reindex_holds() -> bool {
    let cfg = cfg(3, 2, 20);
    let simplices = sample_simplices(&FiniteSets, &cfg, "acceptance.literal", 20).expect("chains");
    simplices.iter().filter(|s| s.q >= 2).all(|s| {
        (0..s.q).all(|i| {
            let lhs = tau(&FiniteSets, &face(&FiniteSets, s, i).unwrap()).unwrap();
            let rhs = face(&FiniteSets, &tau(&FiniteSets, s).unwrap(), s.q - 1 - i).unwrap();
            lhs == rhs
        })
    })
}

fn bar_suite() -> Line {
    let cfg = cfg(3, 2, 200);
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut full_tau = 0;
    for key in BUNDLED {
        let inst = make_instance(key).expect("bundled key");
        bimon::with_instance!(&inst, c => {
            let r = check_bar_suite(c, &cfg);
            full_tau += usize::from(r.law("bar.tau.involutive.full").is_some());
            reports.push(r);
        });
    }
    let took = start.elapsed();
    let literal = literal_face_reindex_holds();
    let mut out = verdict(
        &reports,
        format!(
            "200 simplices per instance, {:.1}s; faces reindexed by q−i (literal q−1−i {}); full τ² on {} instances",
            took.as_secs_f64(),
            if literal { "also holds" } else { "refuted" },
            full_tau
        ),
    );
    if took > Duration::from_secs(180) {
        out.ok = false;
        out.detail.push_str("; over the 180s budget");
    }
    out
}

fn classical() -> Line {
    let cfg = cfg(3, 2, 100);
    let mut reports = Vec::new();
    for key in ["discrete:Z", "discrete:M2F2"] {
        let inst = make_instance(key).expect("key");
        bimon::with_instance!(&inst, c => reports.push(check_classical_involution(c, &cfg)));
    }
    verdict(&reports, "100 chains each over Z and M2(F2)".into())
}

fn pi0_naturality() -> Line {
    let cfg = cfg(3, 2, 100);
    let wedge = Wedge::new(FiniteAbelianGroup::cyclic(2));
    let reports = vec![check_pi0_naturality(&FiniteSets, &cfg), check_pi0_naturality(&wedge, &cfg)];
    let s = &sample_simplices(&wedge, &cfg, "acceptance.labels", 1).expect("chain")[0];
    let (target, _) = project_pi0(&wedge, s).expect("projection");
    let labels_ok = target.rig == Pi0Rig::GroupRig(FiniteAbelianGroup::cyclic(2));
    let mut out = verdict(&reports, format!("100 simplices each; wedge labels in {}", target.rig.kind_name()));
    out.ok &= labels_ok;
    out
}

fn induced<C: Bimonoidal + Clone + 'static>(cat: C, cfg: &CheckConfig) -> CheckReport {
    match induced_anti_involution(cat, cfg) {
        Ok(view) => check_anti_involution(&view, cfg),
        Err(rep) => *rep,
    }
}

fn braided() -> Line {
    let mut reports = Vec::new();
    let ex = check_yang_baxter_exhaustive(&FiniteSets, 2, &cfg(2, 2, 500));
    let decorated = ex.law("ybe.decorated").map(|l| l.samples).unwrap_or(0);
    reports.push(ex);
    let big = cfg(3, 2, 500);
    reports.push(check_yang_baxter(&FiniteSets, &big));
    reports.push(check_braided_laws(&FiniteSets, &big));
    reports.push(check_eq_e(&FiniteSets, &big));
    reports.push(induced(FiniteSets, &big));
    for (k, q) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2)] {
        let b = Bichar::new(k, q).expect("k > 0");
        reports.push(check_braided_laws(&b, &big));
        reports.push(check_eq_e(&b, &big));
        reports.push(induced(b, &big));
    }
    let mut out = verdict(&reports, format!("{} decorated equations at size 2", decorated));
    out.ok &= decorated == 64;
    out
}

/// Searches for `B` with `A·B = I` column by column, entries drawn from
/// `pool`. Over a commutative ring this decides invertibility when every
/// inverse has entries in the pool.
fn bounded_inverse_search(a: &[Vec<RigElem>], rig: &Pi0Rig, pool: &[RigElem]) -> bool {
    let n = a.len();
    let dot = |col: &[RigElem], row: usize| {
        (0..n).try_fold(rig.zero(), |acc, k| rig.add(&acc, &rig.mul(&a[row][k], &col[k])?)).unwrap()
    };
    (0..n).all(|j| {
        let target: Vec<RigElem> = (0..n).map(|i| if i == j { rig.one() } else { rig.zero() }).collect();
        let mut idx = vec![0usize; n];
        loop {
            let col: Vec<RigElem> = idx.iter().map(|&p| pool[p].clone()).collect();
            if (0..n).all(|i| dot(&col, i) == target[i]) {
                return true;
            }
            let mut d = 0;
            while d < n {
                idx[d] += 1;
                if idx[d] < pool.len() {
                    break;
                }
                idx[d] = 0;
                d += 1;
            }
            if d == n {
                return false;
            }
        }
    })
}

fn gl_oracle() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut checked = 0;
    let mut disagreements = Vec::new();
    let mut run = |rig: &Pi0Rig, entries: &[RigElem], pool: &[RigElem], rng: &mut ChaCha8Rng| {
        let mut mats: Vec<Vec<Vec<RigElem>>> = entries.iter().map(|e| vec![vec![e.clone()]]).collect();
        for _ in 0..200 {
            mats.push((0..2).map(|_| (0..2).map(|_| entries[rng.gen_range(0..entries.len())].clone()).collect()).collect());
        }
        for m in mats {
            checked += 1;
            let fast = is_invertible_matrix(&m, rig).expect("well-formed");
            if fast != bounded_inverse_search(&m, rig, pool) {
                disagreements.push(format!("{:?}", m));
            }
        }
    };
    // inverses of these 2×2 matrices are ±adjugates (times ±g over Z[Z/2]),
    // so the pools below are exhaustive
    let ints: Vec<RigElem> = (0..=3).map(RigElem::int).collect();
    let int_pool: Vec<RigElem> = (-3..=3).map(RigElem::int).collect();
    run(&Pi0Rig::Integers, &ints, &int_pool, &mut rng);
    let g = FiniteAbelianGroup::cyclic(2);
    let elem = |a: i64, b: i64| {
        RigElem::Group(GroupRingElem::from_terms([(GroupElem(vec![0]), BigInt::from(a)), (GroupElem(vec![1]), BigInt::from(b))]))
    };
    let ring_entries: Vec<RigElem> = (0..=2).flat_map(|a| (0..=2).map(move |b| elem(a, b))).collect();
    let ring_pool: Vec<RigElem> = (-2..=2).flat_map(|a| (-2..=2).map(move |b| elem(a, b))).collect();
    run(&Pi0Rig::GroupRing(g), &ring_entries, &ring_pool, &mut rng);
    match disagreements.first() {
        None => line(true, format!("{} matrices over Z and Z[Z/2], exact agreement", checked)),
        Some(d) => line(false, format!("{} disagreements, first {}", disagreements.len(), d)),
    }
}

fn signed_monomials(k: u32, n: usize) -> BTreeSet<String> {
    let signs = [0, k / 2];
    let mut out = BTreeSet::new();
    for p in Perm::all(n) {
        for code in 0..(1usize << n) {
            let exps = (0..n).map(|i| signs[(code >> i) & 1]).collect();
            out.insert(format!("{:?}", MonomialMatrix { perm: p.clone(), exps }));
        }
    }
    out
}

fn functors() -> Line {
    let samples = cfg(2, 2, 200);
    let mut reports = Vec::new();
    let mut exhaustive = 0;
    let mut broken = Vec::new();
    for k in [2, 4] {
        let f = functor_f(k).expect("k ≥ 2");
        let (s, t) = (f.source(), f.target());
        for n in 0..=2 {
            let homs = s.morphisms_from(&n);
            if f.on_mor(&s.id(&n)) != t.id(&f.on_obj(&n)) {
                broken.push(format!("F_{} on id_{}", k, n));
            }
            for a in &homs {
                for b in &homs {
                    exhaustive += 1;
                    let lhs = f.on_mor(&s.compose(b, a).expect("endomorphisms compose"));
                    let rhs = t.compose(&f.on_mor(b), &f.on_mor(a)).expect("endomorphisms compose");
                    if lhs != rhs {
                        broken.push(format!("F_{} on {:?} after {:?}", k, b, a));
                    }
                }
            }
        }
        reports.push(check_functor(&f, &samples));
        reports.push(check_antiinv_morphism(&f, &samples));
    }
    let cat = Monomial::new(4).expect("k = 4");
    let act = conjugation_action();
    reports.push(check_group_action(&act, &cat, &samples));
    let fixed = fixed_category(act, cat.clone());
    let mut fixed_ok = true;
    for n in 0..=2 {
        let got: BTreeSet<String> = fixed.morphisms_from(&n).iter().map(|m| format!("{:?}", m)).collect();
        fixed_ok &= got == signed_monomials(4, n);
    }
    let mut out = verdict(&reports, format!("{} composable pairs checked exhaustively", exhaustive));
    if !broken.is_empty() {
        out.ok = false;
        out.detail.push_str(&format!("; functoriality fails at {}", broken[0]));
    }
    if !fixed_ok {
        out.ok = false;
        out.detail.push_str("; fixed category differs from signed permutations");
    }
    out
}

fn mutations() -> Line {
    let outcomes = run_mutations(&cfg(2, 2, 100));
    let missed: Vec<_> = outcomes.iter().filter(|o| !o.detected || o.witness.is_none()).map(|o| o.mutation.clone()).collect();
    if missed.is_empty() {
        line(true, format!("{} mutations, each rejected with a witness", outcomes.len()))
    } else {
        line(false, format!("undetected: {}", missed.join("; ")))
    }
}

fn strip_command(text: &str) -> Value {
    let mut v: Value = serde_json::from_str(text).expect("JSON output");
    v.as_object_mut().expect("object").remove("command");
    v
}

fn determinism() -> Line {
    let argv = ["check", "all", "--category", "wedge:2", "--samples", "100", "--seed", "7"];
    let a = run_command(argv);
    let b = run_command(argv);
    let same_bytes = a == b;
    let seq = run_command(argv.iter().copied().chain(["--sequential"]));
    let same_exec = strip_command(&a.stdout) == strip_command(&seq.stdout);
    let cfg = cfg(3, 2, 200);
    let par = check_bar_suite(&FiniteSets, &CheckConfig { exec: Exec::Parallel, ..cfg.clone() });
    let ser = check_bar_suite(&FiniteSets, &CheckConfig { exec: Exec::Sequential, ..cfg });
    let same_suite = serde_json::to_string(&par).unwrap() == serde_json::to_string(&ser).unwrap();
    line(
        same_bytes && same_exec && same_suite && a.code == 0,
        format!(
            "repeat run identical: {}; sequential vs parallel identical: {}",
            same_bytes,
            same_exec && same_suite
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Line); 10] = [
        ("axiom suites", axioms),
        ("matrix lemmas", matrix_lemmas),
        ("bar and τ suite", bar_suite),
        ("classical agreement", classical),
        ("π₀ naturality", pi0_naturality),
        ("braided suite", braided),
        ("GL oracle", gl_oracle),
        ("functor suite", functors),
        ("mutation sensitivity", mutations),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let l = run();
        failed += usize::from(!l.ok);
        println!("criterion {:>2} {}: {} ({})", i + 1, name, if l.ok { "PASS" } else { "FAIL" }, l.detail);
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
