use std::cmp::Ordering;
use std::fmt;

/// Exact rational scalar used for all matrix, objective and value arithmetic.
///
/// Arbitrary-precision numerator/denominator: feasibility and the pruning
/// conditions are strict inequalities over Q, so no floating tolerance is
/// acceptable anywhere in the solver.
pub type Rational = num_rational::BigRational;

/// Extended objective value: an exact rational or `+inf`.
///
/// `+inf` marks the absence of a winning strategy (a lost game). It only
/// ever appears as a comparison/sentinel value; no arithmetic is defined
/// on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtValue {
    Finite(Rational),
    PlusInfinity,
}

impl ExtValue {
    pub fn finite(value: impl Into<Rational>) -> Self {
        ExtValue::Finite(value.into())
    }

    /// Finite value from an integer, mostly for tests and examples.
    pub fn from_int(value: i64) -> Self {
        ExtValue::Finite(Rational::from_integer(value.into()))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtValue::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtValue::Finite(r) => Some(r),
            ExtValue::PlusInfinity => None,
        }
    }
}

impl From<Rational> for ExtValue {
    fn from(r: Rational) -> Self {
        ExtValue::Finite(r)
    }
}

impl PartialOrd for ExtValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => a.cmp(b),
            (ExtValue::Finite(_), ExtValue::PlusInfinity) => Ordering::Less,
            (ExtValue::PlusInfinity, ExtValue::Finite(_)) => Ordering::Greater,
            (ExtValue::PlusInfinity, ExtValue::PlusInfinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::Finite(r) => write!(f, "{}", r),
            ExtValue::PlusInfinity => write!(f, "+inf"),
        }
    }
}
