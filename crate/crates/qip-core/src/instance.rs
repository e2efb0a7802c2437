use std::fmt;
use std::ops::Range;

use num_traits::Zero;
use thiserror::Error;

use crate::value::Rational;

/// Quantifier of a single variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantifier {
    /// Set by the minimizing (existential) player.
    Existential,
    /// Set by the maximizing (universal) player.
    Universal,
}

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantifier::Existential => write!(f, "E"),
            Quantifier::Universal => write!(f, "A"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ValidationError {
    #[error("instance has no variables")]
    EmptyVariables,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed column index for variable {var}: {detail}")]
    MalformedColumnIndex { var: usize, detail: String },
}

/// Immutable binary QIP: rational matrix `A`, right-hand side `b`,
/// objective `c` and the quantifier vector `Q`.
///
/// All variable domains are {0,1}. Rows are stored densely; a per-column
/// index of the rows with a nonzero entry supports the sparse column loops
/// of the pruning machinery in `O(m_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QipInstance {
    n: usize,
    m: usize,
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    c: Vec<Rational>,
    quantifiers: Vec<Quantifier>,
    name: Option<String>,
    /// cols[j] lists the rows i with a[i][j] != 0, ascending.
    cols: Vec<Vec<usize>>,
}

impl QipInstance {
    /// Builds and validates an instance. `a` is row-major, `m = a.len()`.
    pub fn new(
        a: Vec<Vec<Rational>>,
        b: Vec<Rational>,
        c: Vec<Rational>,
        quantifiers: Vec<Quantifier>,
        name: Option<String>,
    ) -> Result<Self, ValidationError> {
        let n = quantifiers.len();
        let m = a.len();
        let cols = build_column_index(&a, n);
        let inst = QipInstance {
            n,
            m,
            a,
            b,
            c,
            quantifiers,
            name,
            cols,
        };
        inst.validate()?;
        Ok(inst)
    }

    /// Integer-coefficient convenience constructor for tests and examples.
    pub fn from_ints(
        a: Vec<Vec<i64>>,
        b: Vec<i64>,
        c: Vec<i64>,
        quantifiers: Vec<Quantifier>,
    ) -> Result<Self, ValidationError> {
        let conv_row = |row: Vec<i64>| {
            row.into_iter()
                .map(|v| Rational::from_integer(v.into()))
                .collect::<Vec<_>>()
        };
        QipInstance::new(
            a.into_iter().map(conv_row).collect(),
            b.into_iter()
                .map(|v| Rational::from_integer(v.into()))
                .collect(),
            c.into_iter()
                .map(|v| Rational::from_integer(v.into()))
                .collect(),
            quantifiers,
            None,
        )
    }

    /// Checks every structural invariant; deterministic.
    pub fn validate(&self) -> Result<(), ValidationError> {
        if self.n == 0 {
            return Err(ValidationError::EmptyVariables);
        }
        if self.quantifiers.len() != self.n {
            return Err(ValidationError::DimensionMismatch(format!(
                "quantifier vector has length {}, expected {}",
                self.quantifiers.len(),
                self.n
            )));
        }
        if self.a.len() != self.m {
            return Err(ValidationError::DimensionMismatch(format!(
                "matrix has {} rows, expected {}",
                self.a.len(),
                self.m
            )));
        }
        for (i, row) in self.a.iter().enumerate() {
            if row.len() != self.n {
                return Err(ValidationError::DimensionMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    self.n
                )));
            }
        }
        if self.b.len() != self.m {
            return Err(ValidationError::DimensionMismatch(format!(
                "rhs has length {}, expected {}",
                self.b.len(),
                self.m
            )));
        }
        if self.c.len() != self.n {
            return Err(ValidationError::DimensionMismatch(format!(
                "objective has length {}, expected {}",
                self.c.len(),
                self.n
            )));
        }
        if self.cols.len() != self.n {
            return Err(ValidationError::MalformedColumnIndex {
                var: self.cols.len().min(self.n),
                detail: format!("index covers {} columns, expected {}", self.cols.len(), self.n),
            });
        }
        for j in 0..self.n {
            let expected: Vec<usize> = (0..self.m).filter(|&i| !self.a[i][j].is_zero()).collect();
            if self.cols[j] != expected {
                return Err(ValidationError::MalformedColumnIndex {
                    var: j,
                    detail: format!("stored rows {:?}, derived rows {:?}", self.cols[j], expected),
                });
            }
        }
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn num_rows(&self) -> usize {
        self.m
    }

    pub fn coeff(&self, row: usize, var: usize) -> &Rational {
        &self.a[row][var]
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.a[row]
    }

    pub fn rhs(&self, row: usize) -> &Rational {
        &self.b[row]
    }

    pub fn objective(&self, var: usize) -> &Rational {
        &self.c[var]
    }

    pub fn objective_vector(&self) -> &[Rational] {
        &self.c
    }

    pub fn quantifier(&self, var: usize) -> Quantifier {
        self.quantifiers[var]
    }

    pub fn quantifiers(&self) -> &[Quantifier] {
        &self.quantifiers
    }

    pub fn is_universal(&self, var: usize) -> bool {
        self.quantifiers[var] == Quantifier::Universal
    }

    /// Rows with a nonzero coefficient on `var`, ascending.
    pub fn column_rows(&self, var: usize) -> &[usize] {
        &self.cols[var]
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: Option<String>) -> Self {
        self.name = name;
        self
    }

    /// Index of the last universal variable, if any.
    pub fn last_universal(&self) -> Option<usize> {
        (0..self.n).rev().find(|&j| self.is_universal(j))
    }

    /// Universal variable indices, ascending.
    pub fn universal_vars(&self) -> Vec<usize> {
        (0..self.n).filter(|&j| self.is_universal(j)).collect()
    }

    /// Same instance with the objective replaced by zero (feasibility view).
    pub fn with_zero_objective(&self) -> Self {
        let mut copy = self.clone();
        copy.c = vec![Rational::zero(); self.n];
        copy
    }

    /// Test-only backdoor that skips index construction, so validate() can
    /// be exercised against a corrupted column index.
    #[doc(hidden)]
    pub fn from_raw_parts_unchecked(
        a: Vec<Vec<Rational>>,
        b: Vec<Rational>,
        c: Vec<Rational>,
        quantifiers: Vec<Quantifier>,
        cols: Vec<Vec<usize>>,
    ) -> Self {
        let n = quantifiers.len();
        let m = a.len();
        QipInstance {
            n,
            m,
            a,
            b,
            c,
            quantifiers,
            name: None,
            cols,
        }
    }
}

fn build_column_index(a: &[Vec<Rational>], n: usize) -> Vec<Vec<usize>> {
    let mut cols = vec![Vec::new(); n];
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate().take(n) {
            if !v.is_zero() {
                cols[j].push(i);
            }
        }
    }
    cols
}

/// One maximal run of identically quantified consecutive variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub quantifier: Quantifier,
    pub vars: Range<usize>,
}

/// Ordered quantifier blocks of an instance; `beta()` is the block count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    blocks: Vec<Block>,
}

impl BlockStructure {
    /// Maximal-run partition of the quantifier vector.
    pub fn of(instance: &QipInstance) -> Self {
        let q = instance.quantifiers();
        let mut blocks = Vec::new();
        let mut start = 0;
        for j in 1..=q.len() {
            if j == q.len() || q[j] != q[start] {
                blocks.push(Block {
                    quantifier: q[start],
                    vars: start..j,
                });
                start = j;
            }
        }
        BlockStructure { blocks }
    }

    pub fn beta(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn first(&self) -> &Block {
        &self.blocks[0]
    }
}

/// Maximal-run partition of `Q`; `beta - 1` equals the number of
/// quantifier changes.
pub fn block_structure(instance: &QipInstance) -> BlockStructure {
    BlockStructure::of(instance)
}
