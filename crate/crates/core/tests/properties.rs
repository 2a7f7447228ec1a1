use proptest::prelude::*;

use bimon::bar::{block_sum, build_from_chain, sample_chains, tau, validate_simplex, BarSimplex};
use bimon::instances::{FiniteSets, Wedge};
use bimon::matrices::{gl_member, mat_mul_obj, Matrix};
use bimon::perm::Perm;
use bimon::rig::{integer_determinant, is_invertible_matrix, FiniteAbelianGroup, Pi0Rig, RigElem};
use bimon::{Exec, SampleSpec};

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

fn perm_triple() -> impl Strategy<Value = (Perm, Perm, Perm)> {
    (0usize..6).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
}

fn nat_matrix(n: usize) -> impl Strategy<Value = Matrix<usize>> {
    prop::collection::vec(prop::collection::vec(0usize..4, n), n).prop_map(Matrix)
}

proptest! {
    #[test]
    fn perm_composition_is_a_group((a, b, c) in perm_triple()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert_eq!(a.compose(&a.inverse()), Perm::identity(a.len()));
        prop_assert_eq!(a.inverse().compose(&a), Perm::identity(a.len()));
    }

    #[test]
    fn block_sum_and_grid_product_are_homomorphisms(
        (a, b) in (0usize..4).prop_flat_map(|n| (perm(n), perm(n))),
        (c, d) in (0usize..4).prop_flat_map(|n| (perm(n), perm(n))),
    ) {
        prop_assert_eq!(a.compose(&b).block_sum(&c.compose(&d)), a.block_sum(&c).compose(&b.block_sum(&d)));
        prop_assert_eq!(a.compose(&b).grid_product(&c.compose(&d)), a.grid_product(&c).compose(&b.grid_product(&d)));
    }

    #[test]
    fn object_matrix_product_is_associative(a in nat_matrix(2), b in nat_matrix(2), c in nat_matrix(2)) {
        let cat = FiniteSets;
        let left = mat_mul_obj(&cat, &mat_mul_obj(&cat, &a, &b).unwrap(), &c).unwrap();
        let right = mat_mul_obj(&cat, &a, &mat_mul_obj(&cat, &b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn gl_over_naturals_is_unimodularity(m in nat_matrix(2)) {
        let ints: Vec<Vec<RigElem>> = m.0.iter().map(|r| r.iter().map(|&x| RigElem::int(x as i64)).collect()).collect();
        let det = integer_determinant(&ints).unwrap();
        let unit = det == 1.into() || det == (-1).into();
        prop_assert_eq!(is_invertible_matrix(&ints, &Pi0Rig::Integers).unwrap(), unit);
        prop_assert_eq!(gl_member(&FiniteSets, &m).unwrap(), unit);
    }

    #[test]
    fn tau_is_an_involution_on_chain_simplices(seed in any::<u64>()) {
        let spec = SampleSpec::new(2, 2, 1, seed);
        let chain = &sample_chains(&FiniteSets, &spec, "prop.tau", 1, 3).unwrap()[0];
        let s = build_from_chain(&FiniteSets, chain).unwrap();
        let t = tau(&FiniteSets, &s).unwrap();
        prop_assert!(validate_simplex(&FiniteSets, &t).passed());
        prop_assert_eq!(tau(&FiniteSets, &t).unwrap(), s);
    }

    #[test]
    fn tau_commutes_with_block_sum_on_wedges(seed in any::<u64>()) {
        let cat = Wedge::new(FiniteAbelianGroup::cyclic(3));
        let spec = SampleSpec::new(2, 2, 1, seed);
        let chains = sample_chains(&cat, &spec, "prop.sum", 8, 2).unwrap();
        let q = chains[0].len();
        if let Some(other) = chains[1..].iter().find(|c| c.len() == q) {
            let s = build_from_chain(&cat, &chains[0]).unwrap();
            let t = build_from_chain(&cat, other).unwrap();
            let lhs = tau(&cat, &block_sum(&cat, &s, &t).unwrap()).unwrap();
            let rhs = block_sum(&cat, &tau(&cat, &s).unwrap(), &tau(&cat, &t).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn simplices_survive_a_json_round_trip(seed in any::<u64>()) {
        let spec = SampleSpec::new(2, 2, 1, seed);
        let chain = &sample_chains(&FiniteSets, &spec, "prop.json", 1, 3).unwrap()[0];
        let s = build_from_chain(&FiniteSets, chain).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        let back: BarSimplex<usize, Perm> = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn parallel_map_preserves_order(items in prop::collection::vec(any::<u32>(), 0..300)) {
        let f = |x: &u32| x.wrapping_mul(2654435761);
        prop_assert_eq!(Exec::Parallel.map(&items, f), Exec::Sequential.map(&items, f));
    }

    #[test]
    fn finite_set_laws_hold_for_any_seed(seed in 0u64..1000) {
        let cfg = bimon::CheckConfig::new(SampleSpec::new(2, 2, 20, seed));
        prop_assert!(bimon::laws::check_bimonoidal_laws(&FiniteSets, &cfg).passed());
    }
}
