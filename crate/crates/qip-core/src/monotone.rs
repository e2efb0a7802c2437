use num_traits::Zero;

use crate::instance::QipInstance;
use crate::value::Rational;

/// Sign classification of a variable's matrix column together with its
/// objective coefficient. A single-signed variable can be fixed a priori
/// (flipping it moves every leaf value and every row in one direction).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneStatus {
    /// `c_j >= 0` and every `A[i,j] >= 0`, not all zero.
    NonNegative,
    /// `c_j <= 0` and every `A[i,j] <= 0`, not all zero.
    NonPositive,
    /// Column and objective coefficient are all zero.
    Both,
    /// Signs differ; no monotone pruning applies.
    Mixed,
}

/// Per-variable monotonicity; a pure function of `A` and `c`.
pub fn detect_monotone(instance: &QipInstance) -> Vec<MonotoneStatus> {
    (0..instance.num_vars())
        .map(|j| classify(instance, j))
        .collect()
}

fn classify(instance: &QipInstance, var: usize) -> MonotoneStatus {
    let zero = Rational::zero();
    let mut any_pos = instance.objective(var) > &zero;
    let mut any_neg = instance.objective(var) < &zero;
    for &i in instance.column_rows(var) {
        let v = instance.coeff(i, var);
        if v > &zero {
            any_pos = true;
        } else if v < &zero {
            any_neg = true;
        }
    }
    match (any_pos, any_neg) {
        (false, false) => MonotoneStatus::Both,
        (true, false) => MonotoneStatus::NonNegative,
        (false, true) => MonotoneStatus::NonPositive,
        (true, true) => MonotoneStatus::Mixed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Quantifier::{Existential as E, Universal as A};

    fn example2() -> QipInstance {
        QipInstance::from_ints(
            vec![vec![1, -1, 1, 3, -1], vec![3, 2, 3, 1, -2]],
            vec![2, 1],
            vec![2, 3, -2, -2, 1],
            vec![E, A, E, A, E],
        )
        .unwrap()
    }

    #[test]
    fn example2_x1_is_non_negative() {
        let status = detect_monotone(&example2());
        assert_eq!(status[0], MonotoneStatus::NonNegative);
    }

    #[test]
    fn zero_column_with_zero_objective_is_both() {
        let inst = QipInstance::from_ints(
            vec![vec![1, 0], vec![-1, 0]],
            vec![1, 0],
            vec![1, 0],
            vec![E, E],
        )
        .unwrap();
        assert_eq!(detect_monotone(&inst)[1], MonotoneStatus::Both);
    }

    #[test]
    fn example1_x3_is_mixed() {
        // c3 = -3 with column (1,1,1,-1).
        let inst = QipInstance::from_ints(
            vec![
                vec![1, 1, 1, 0],
                vec![-1, 0, 1, -1],
                vec![0, -1, 1, -1],
                vec![-1, 1, -1, 1],
            ],
            vec![2, 0, 0, 1],
            vec![2, -2, -3, -2],
            vec![E, A, E, A],
        )
        .unwrap();
        assert_eq!(detect_monotone(&inst)[2], MonotoneStatus::Mixed);
    }

    #[test]
    fn non_positive_detection() {
        let inst = QipInstance::from_ints(
            vec![vec![-2, 1], vec![0, 1]],
            vec![0, 1],
            vec![-1, 0],
            vec![E, E],
        )
        .unwrap();
        assert_eq!(detect_monotone(&inst)[0], MonotoneStatus::NonPositive);
    }
}
