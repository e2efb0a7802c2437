//! Cross-checks of the oracle against independent computations.

use proptest::prelude::*;
use qip_core::{evaluate_game, Assignment, ExtValue, QipInstance, Quantifier};
use qip_oracle::{minimax, optimal_strategy, principal_variation};

fn instance_with_prefix(
    n: usize,
    quantifiers: Vec<Quantifier>,
) -> impl Strategy<Value = QipInstance> {
    let row = proptest::collection::vec(-4i64..=4, n);
    (
        proptest::collection::vec(row, 0..=5),
        proptest::collection::vec(-4i64..=4, n),
    )
        .prop_map(move |(a, c)| {
            let b = vec![2i64; a.len()];
            QipInstance::from_ints(a, b, c, quantifiers.clone()).unwrap()
        })
}

fn any_small_instance() -> impl Strategy<Value = QipInstance> {
    (1usize..=8).prop_flat_map(|n| {
        proptest::collection::vec(prop::bool::ANY, n).prop_flat_map(move |univ| {
            let q: Vec<Quantifier> = univ
                .iter()
                .map(|&u| {
                    if u {
                        Quantifier::Universal
                    } else {
                        Quantifier::Existential
                    }
                })
                .collect();
            instance_with_prefix(n, q)
        })
    })
}

/// Independent semantics for universal-block-first instances: the adversary
/// commits a scenario, then the existential player picks the best response.
fn scenario_enumeration(inst: &QipInstance, num_universal: usize) -> ExtValue {
    let n = inst.num_vars();
    let e = n - num_universal;
    let mut worst = None::<ExtValue>;
    for u_mask in 0u32..(1 << num_universal) {
        let mut best = ExtValue::PlusInfinity;
        for e_mask in 0u32..(1 << e) {
            let mut bits = Vec::with_capacity(n);
            for j in 0..num_universal {
                bits.push(((u_mask >> j) & 1) as u8);
            }
            for j in 0..e {
                bits.push(((e_mask >> j) & 1) as u8);
            }
            let v = evaluate_game(inst, &Assignment::total(&bits).unwrap()).unwrap();
            best = best.min(v);
        }
        worst = Some(match worst {
            None => best,
            Some(w) => w.max(best),
        });
    }
    worst.unwrap_or(ExtValue::PlusInfinity)
}

/// Instance whose prefix is A^k E^(n-k) for some 1 <= k < n.
fn universal_first_instance() -> impl Strategy<Value = (QipInstance, usize)> {
    (2usize..=8, 1usize..=4).prop_flat_map(|(n, k)| {
        let k = k.min(n - 1);
        let mut q = vec![Quantifier::Universal; k];
        q.extend(vec![Quantifier::Existential; n - k]);
        instance_with_prefix(n, q).prop_map(move |inst| (inst, k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// On prefixes of the form A^k E^(n-k) the minimax value equals the
    /// max-over-scenarios of best existential responses.
    #[test]
    fn matches_scenario_enumeration((inst, k) in universal_first_instance()) {
        prop_assert_eq!(
            minimax(&inst, &Assignment::empty(inst.num_vars())),
            scenario_enumeration(&inst, k)
        );
    }

    /// Recursion property: at every prefix the node value is the min (max)
    /// of its two extensions, by player kind.
    #[test]
    fn node_values_fold_over_children(inst in any_small_instance()) {
        let n = inst.num_vars();
        for depth in 0..n {
            for mask in 0u32..(1 << depth) {
                let bits: Vec<u8> = (0..depth).map(|j| ((mask >> j) & 1) as u8).collect();
                let p = Assignment::prefix(n, &bits).unwrap();
                let v = minimax(&inst, &p);
                let v0 = minimax(&inst, &p.extended(0).unwrap());
                let v1 = minimax(&inst, &p.extended(1).unwrap());
                let expected = match inst.quantifier(depth) {
                    Quantifier::Existential => v0.min(v1),
                    Quantifier::Universal => v0.max(v1),
                };
                prop_assert_eq!(v, expected);
            }
        }
    }

    /// Every leaf of a winning strategy satisfies the constraint system,
    /// and the PV leaf value equals the root value.
    #[test]
    fn winning_strategies_have_feasible_leaves(inst in any_small_instance()) {
        let root = minimax(&inst, &Assignment::empty(inst.num_vars()));
        match optimal_strategy(&inst) {
            None => prop_assert_eq!(root, ExtValue::PlusInfinity),
            Some(tree) => {
                prop_assert_eq!(tree.value(), root.clone());
                for (leaf, value) in tree.leaves() {
                    prop_assert!(value.is_finite());
                    prop_assert_eq!(evaluate_game(&inst, leaf).unwrap(), value.clone());
                }
                let pv = principal_variation(&inst).unwrap();
                prop_assert_eq!(evaluate_game(&inst, &pv).unwrap(), root);
            }
        }
    }
}
