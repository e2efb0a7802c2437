use num_traits::Zero;
use thiserror::Error;

use crate::assignment::Assignment;
use crate::instance::QipInstance;
use crate::value::{ExtValue, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("assignment fixes {fixed} of {n} variables; a total assignment is required")]
    NotTotal { fixed: usize, n: usize },
    #[error("assignment covers {got} variables, instance has {n}")]
    WrongLength { got: usize, n: usize },
}

/// Value of a finished game: `c^T x` when `Ax <= b` holds component-wise
/// under exact rational comparison, `+inf` otherwise (the existential
/// player loses).
pub fn evaluate_game(instance: &QipInstance, x: &Assignment) -> Result<ExtValue, EvalError> {
    if x.num_vars() != instance.num_vars() {
        return Err(EvalError::WrongLength {
            got: x.num_vars(),
            n: instance.num_vars(),
        });
    }
    if !x.is_total() {
        return Err(EvalError::NotTotal {
            fixed: x.prefix_len(),
            n: x.num_vars(),
        });
    }
    Ok(evaluate_total_bits(instance, x.values()))
}

/// `evaluate_game` over a raw 0/1 slice; used by the hot paths.
pub(crate) fn evaluate_total_bits(instance: &QipInstance, bits: &[u8]) -> ExtValue {
    for i in 0..instance.num_rows() {
        let mut lhs = Rational::zero();
        for (j, &v) in bits.iter().enumerate() {
            if v == 1 {
                lhs += instance.coeff(i, j);
            }
        }
        if &lhs > instance.rhs(i) {
            return ExtValue::PlusInfinity;
        }
    }
    let mut obj = Rational::zero();
    for (j, &v) in bits.iter().enumerate() {
        if v == 1 {
            obj += instance.objective(j);
        }
    }
    ExtValue::Finite(obj)
}
