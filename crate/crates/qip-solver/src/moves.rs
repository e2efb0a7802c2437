use num_traits::Zero;
use qip_core::{MonotoneStatus, QipInstance, Quantifier, Rational};

use crate::options::MoveOrdering;

/// Value forced by a monotone variable, if any.
///
/// By the single-sign dominance of leaf values, the minimizer takes the
/// dominated-below branch and the maximizer the dominated-above one:
/// existential NonNegative -> 0, NonPositive -> 1; universal NonNegative
/// -> 1, NonPositive -> 0. A fully zero variable (Both) is fixed to 0 for
/// determinism; either value is optimal.
pub fn prune_monotone(status: MonotoneStatus, quantifier: Quantifier) -> Option<u8> {
    match (status, quantifier) {
        (MonotoneStatus::Both, _) => Some(0),
        (MonotoneStatus::NonNegative, Quantifier::Existential) => Some(0),
        (MonotoneStatus::NonNegative, Quantifier::Universal) => Some(1),
        (MonotoneStatus::NonPositive, Quantifier::Existential) => Some(1),
        (MonotoneStatus::NonPositive, Quantifier::Universal) => Some(0),
        (MonotoneStatus::Mixed, _) => None,
    }
}

/// Ordered branch values for variable `k`.
///
/// With a monotone status supplied (monotone exploitation on) a forced
/// variable generates its single value. Otherwise the default ordering
/// scores the assignment 1 by its objective term `c_k` and, as a
/// tiebreaker, by the positive row-slack it consumes `sum_i max(0, A[i,k])`:
/// universal nodes take the larger (more threatening) score first,
/// existential nodes the smaller one, and exact ties prefer 0.
pub fn order_moves(
    instance: &QipInstance,
    k: usize,
    ordering: MoveOrdering,
    mono: Option<MonotoneStatus>,
) -> Vec<u8> {
    if let Some(status) = mono {
        if let Some(forced) = prune_monotone(status, instance.quantifier(k)) {
            return vec![forced];
        }
    }
    match ordering {
        MoveOrdering::Naive => vec![0, 1],
        MoveOrdering::Default => {
            let zero = Rational::zero();
            let obj = instance.objective(k);
            let mut slack = Rational::zero();
            for &i in instance.column_rows(k) {
                let v = instance.coeff(i, k);
                if v > &zero {
                    slack += v;
                }
            }
            // Lexicographic score of playing 1: (c_k, slack consumed);
            // playing 0 scores (0, 0).
            let one_first = match instance.quantifier(k) {
                Quantifier::Universal => obj > &zero || (obj == &zero && slack > zero),
                Quantifier::Existential => obj < &zero,
            };
            if one_first {
                vec![1, 0]
            } else {
                vec![0, 1]
            }
        }
    }
}
