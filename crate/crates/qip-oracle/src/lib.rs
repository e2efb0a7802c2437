//! Brute-force reference semantics for binary QIPs.
//!
//! Everything here is exhaustive recursion with no pruning of any kind (not
//! even alpha-beta), so it can serve as an independent correctness baseline
//! for the search engine. Exponential time; intended for n up to ~20.
//!
//! Ties are broken deterministically by preferring the assignment 0 for
//! both players, so strategies and principal variations are reproducible.

use num_traits::Zero;
use qip_core::{Assignment, ExtValue, QipInstance, Quantifier, Rational};

/// Existential strategy tree: existential nodes commit to one child,
/// universal nodes keep both children, leaves carry the finished game.
///
/// Root-to-leaf paths fix variables in index order. In a winning strategy
/// every leaf value is finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrategyTree {
    ExistentialChoice {
        var: usize,
        value: u8,
        child: Box<StrategyTree>,
    },
    UniversalSplit {
        var: usize,
        child0: Box<StrategyTree>,
        child1: Box<StrategyTree>,
    },
    Leaf {
        assignment: Assignment,
        value: ExtValue,
    },
}

impl StrategyTree {
    /// Minimax value of this subtree (max over leaves along universal splits).
    pub fn value(&self) -> ExtValue {
        match self {
            StrategyTree::Leaf { value, .. } => value.clone(),
            StrategyTree::ExistentialChoice { child, .. } => child.value(),
            StrategyTree::UniversalSplit { child0, child1, .. } => {
                child0.value().max(child1.value())
            }
        }
    }

    /// All leaves of the strategy.
    pub fn leaves(&self) -> Vec<(&Assignment, &ExtValue)> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<(&'a Assignment, &'a ExtValue)>) {
        match self {
            StrategyTree::Leaf { assignment, value } => out.push((assignment, value)),
            StrategyTree::ExistentialChoice { child, .. } => child.collect_leaves(out),
            StrategyTree::UniversalSplit { child0, child1, .. } => {
                child0.collect_leaves(out);
                child1.collect_leaves(out);
            }
        }
    }
}

/// Incremental evaluation state shared by the recursions: row activities
/// and the objective accumulator for the current prefix.
struct Walker<'a> {
    inst: &'a QipInstance,
    bits: Vec<u8>,
    row_act: Vec<Rational>,
    obj: Rational,
}

impl<'a> Walker<'a> {
    fn new(inst: &'a QipInstance) -> Self {
        Walker {
            inst,
            bits: Vec::with_capacity(inst.num_vars()),
            row_act: vec![Rational::zero(); inst.num_rows()],
            obj: Rational::zero(),
        }
    }

    fn from_prefix(inst: &'a QipInstance, prefix: &Assignment) -> Self {
        let mut w = Walker::new(inst);
        for &v in prefix.values() {
            w.push(v);
        }
        w
    }

    fn depth(&self) -> usize {
        self.bits.len()
    }

    fn push(&mut self, value: u8) {
        let j = self.bits.len();
        if value == 1 {
            for &i in self.inst.column_rows(j) {
                let coeff = self.inst.coeff(i, j).clone();
                self.row_act[i] += coeff;
            }
            self.obj += self.inst.objective(j);
        }
        self.bits.push(value);
    }

    fn pop(&mut self) {
        let value = self.bits.pop().expect("pop on empty prefix");
        let j = self.bits.len();
        if value == 1 {
            for &i in self.inst.column_rows(j) {
                let coeff = self.inst.coeff(i, j).clone();
                self.row_act[i] -= coeff;
            }
            self.obj -= self.inst.objective(j);
        }
    }

    fn leaf_value(&self) -> ExtValue {
        debug_assert_eq!(self.depth(), self.inst.num_vars());
        for i in 0..self.inst.num_rows() {
            if &self.row_act[i] > self.inst.rhs(i) {
                return ExtValue::PlusInfinity;
            }
        }
        ExtValue::Finite(self.obj.clone())
    }
}

fn minimax_rec(w: &mut Walker<'_>) -> ExtValue {
    let depth = w.depth();
    if depth == w.inst.num_vars() {
        return w.leaf_value();
    }
    w.push(0);
    let v0 = minimax_rec(w);
    w.pop();
    w.push(1);
    let v1 = minimax_rec(w);
    w.pop();
    match w.inst.quantifier(depth) {
        Quantifier::Existential => v0.min(v1),
        Quantifier::Universal => v0.max(v1),
    }
}

/// Minimax value of the node reached by `prefix`: min over children at
/// existential depths, max at universal depths, leaf rule `c^T x` /
/// `+inf` via game evaluation. Exhaustive, exponential in the number of
/// unfixed variables.
pub fn minimax(instance: &QipInstance, prefix: &Assignment) -> ExtValue {
    assert_eq!(
        prefix.num_vars(),
        instance.num_vars(),
        "prefix covers {} variables, instance has {}",
        prefix.num_vars(),
        instance.num_vars()
    );
    let mut w = Walker::from_prefix(instance, prefix);
    minimax_rec(&mut w)
}

fn strategy_rec(w: &mut Walker<'_>) -> StrategyTree {
    let depth = w.depth();
    if depth == w.inst.num_vars() {
        return StrategyTree::Leaf {
            assignment: Assignment::total(&w.bits).expect("binary bits"),
            value: w.leaf_value(),
        };
    }
    match w.inst.quantifier(depth) {
        Quantifier::Existential => {
            // Prefer 0 on ties.
            w.push(0);
            let v0 = minimax_rec(w);
            w.pop();
            w.push(1);
            let v1 = minimax_rec(w);
            w.pop();
            let value = if v0 <= v1 { 0 } else { 1 };
            w.push(value);
            let child = strategy_rec(w);
            w.pop();
            StrategyTree::ExistentialChoice {
                var: depth,
                value,
                child: Box::new(child),
            }
        }
        Quantifier::Universal => {
            w.push(0);
            let child0 = strategy_rec(w);
            w.pop();
            w.push(1);
            let child1 = strategy_rec(w);
            w.pop();
            StrategyTree::UniversalSplit {
                var: depth,
                child0: Box::new(child0),
                child1: Box::new(child1),
            }
        }
    }
}

/// An optimal existential strategy, or `None` when the instance is
/// infeasible (root minimax value `+inf`). The root value of the returned
/// tree equals `minimax(instance, empty)`.
pub fn optimal_strategy(instance: &QipInstance) -> Option<StrategyTree> {
    let root = minimax(instance, &Assignment::empty(instance.num_vars()));
    if !root.is_finite() {
        return None;
    }
    let mut w = Walker::new(instance);
    let tree = strategy_rec(&mut w);
    debug_assert_eq!(tree.value(), root);
    Some(tree)
}

/// The root-to-leaf path of the optimal strategy under optimal play:
/// existential nodes follow the committed child, universal nodes follow a
/// child of maximal value (ties prefer 0). `None` when infeasible.
pub fn principal_variation(instance: &QipInstance) -> Option<Assignment> {
    let tree = optimal_strategy(instance)?;
    let mut node = &tree;
    loop {
        match node {
            StrategyTree::Leaf { assignment, .. } => return Some(assignment.clone()),
            StrategyTree::ExistentialChoice { child, .. } => node = child,
            StrategyTree::UniversalSplit { child0, child1, .. } => {
                node = if child0.value() >= child1.value() {
                    child0
                } else {
                    child1
                };
            }
        }
    }
}
