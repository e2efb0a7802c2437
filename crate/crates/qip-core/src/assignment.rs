use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AssignmentError {
    #[error("value {value} is not binary")]
    NonBinary { value: u8 },
    #[error("prefix of length {len} exceeds variable count {n}")]
    TooLong { len: usize, n: usize },
}

/// Partial or total 0/1 vector over the variables, fixed in index order.
///
/// Variables `0..prefix_len()` carry a value; the rest are unset. A total
/// assignment has `prefix_len() == n`. Game-tree nodes are identified with
/// assignment prefixes, so this is also the search's node coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    n: usize,
    fixed: Vec<u8>,
}

impl Assignment {
    /// Empty prefix over `n` variables (the root node).
    pub fn empty(n: usize) -> Self {
        Assignment { n, fixed: Vec::new() }
    }

    /// Prefix fixing the first `values.len()` variables.
    pub fn prefix(n: usize, values: &[u8]) -> Result<Self, AssignmentError> {
        if values.len() > n {
            return Err(AssignmentError::TooLong {
                len: values.len(),
                n,
            });
        }
        for &v in values {
            if v > 1 {
                return Err(AssignmentError::NonBinary { value: v });
            }
        }
        Ok(Assignment {
            n,
            fixed: values.to_vec(),
        })
    }

    /// Total assignment over all `values.len()` variables.
    pub fn total(values: &[u8]) -> Result<Self, AssignmentError> {
        Assignment::prefix(values.len(), values)
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn prefix_len(&self) -> usize {
        self.fixed.len()
    }

    pub fn is_total(&self) -> bool {
        self.fixed.len() == self.n
    }

    /// Value of variable `var`, or `None` when unset.
    pub fn value(&self, var: usize) -> Option<u8> {
        self.fixed.get(var).copied()
    }

    /// The fixed prefix values.
    pub fn values(&self) -> &[u8] {
        &self.fixed
    }

    /// Extends the prefix by one variable.
    pub fn push(&mut self, value: u8) -> Result<(), AssignmentError> {
        if value > 1 {
            return Err(AssignmentError::NonBinary { value });
        }
        if self.fixed.len() == self.n {
            return Err(AssignmentError::TooLong {
                len: self.fixed.len() + 1,
                n: self.n,
            });
        }
        self.fixed.push(value);
        Ok(())
    }

    /// New assignment with one more fixed variable.
    pub fn extended(&self, value: u8) -> Result<Self, AssignmentError> {
        let mut next = self.clone();
        next.push(value)?;
        Ok(next)
    }
}
