use partial_actions::block::{
    wreath_apply, wreath_compose, Block, BlockAlgebra, BlockIdeal, FormalSum, Payload, WreathMap,
};
use partial_actions::group::{
    coset_factorize, cyclic_group, direct_product, left_transversal, subgroup_closure,
    symmetric_group, FiniteGroup,
};
use partial_actions::set_action::{globalize_set, restrict_global, GlobalSetAction};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn groups() -> Vec<FiniteGroup> {
    let z2 = cyclic_group(2).unwrap();
    vec![
        cyclic_group(1).unwrap(),
        cyclic_group(4).unwrap(),
        cyclic_group(6).unwrap(),
        direct_product(&z2, &z2).unwrap(),
        symmetric_group(3).unwrap(),
        symmetric_group(4).unwrap(),
    ]
}

fn group_and_generators() -> impl Strategy<Value = (FiniteGroup, Vec<usize>)> {
    (0..groups().len()).prop_flat_map(|i| {
        let g = groups().swap_remove(i);
        let elements: Vec<usize> = g.elements().collect();
        (Just(g), subsequence(elements.clone(), 0..=3.min(elements.len())))
    })
}

fn m3(n: usize) -> BlockAlgebra {
    BlockAlgebra::power(&Block::new("M", cyclic_group(3).unwrap()), n).unwrap()
}

fn wreath_on(n: usize) -> impl Strategy<Value = WreathMap> {
    (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(0..3usize, n)).prop_map(
        move |(perm, twists)| {
            let full = BlockIdeal::full(&m3(n));
            let entries: Vec<_> = (0..n).map(|i| (i, perm[i], twists[i])).collect();
            WreathMap::new(full.clone(), full, &entries).unwrap()
        },
    )
}

fn tokens(n: usize) -> FormalSum {
    (0..n)
        .map(|p| (p, Payload { token: format!("x{p}"), twist: 0 }))
        .collect()
}

proptest! {
    #[test]
    fn factorization_rows_multiply_back((g, gens) in group_and_generators()) {
        let h = subgroup_closure(&g, &gens);
        let t = left_transversal(&h);
        let cf = coset_factorize(&t).unwrap();
        prop_assert_eq!(cf.rows().len(), g.order() * t.len());
        for row in cf.rows() {
            prop_assert!(h.contains(row.h));
            let lhs = g.mul(row.g, t.reps()[row.rep_index]);
            prop_assert_eq!(lhs, g.mul(t.reps()[row.j_index], row.h));
        }
        prop_assert!(cf.check_cocycles().holds());
    }

    #[test]
    fn wreath_inverse_cancels(w in wreath_on(4)) {
        prop_assert!(wreath_compose(&w.inverse(), &w).unwrap().is_identity());
        prop_assert!(wreath_compose(&w, &w.inverse()).unwrap().is_identity());
    }

    #[test]
    fn wreath_compose_agrees_with_application((a, b) in (wreath_on(4), wreath_on(4))) {
        let x = tokens(4);
        let composed = wreath_apply(&wreath_compose(&b, &a).unwrap(), &x).unwrap();
        let stepwise = wreath_apply(&b, &wreath_apply(&a, &x).unwrap()).unwrap();
        prop_assert_eq!(composed, stepwise);
    }

    #[test]
    fn restricted_regular_action_globalizes(
        (g, subset) in (0..groups().len() - 1).prop_flat_map(|i| {
            let g = groups().swap_remove(i);
            let all: Vec<usize> = g.elements().collect();
            let n = all.len();
            (Just(g), subsequence(all, 1..=n))
        })
    ) {
        let regular = GlobalSetAction::regular(&g);
        let spa = restrict_global(&regular, &subset).unwrap();
        prop_assert!(spa.verify().all_pass());
        let env = globalize_set(&spa).unwrap();
        prop_assert!(env.verify(&spa).all_pass());
        // The envelope of a restriction of a transitive action is that action.
        prop_assert_eq!(env.size(), g.order());
    }
}
