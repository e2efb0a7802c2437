//! Core domain types for binary quantified integer programs (QIPs).
//!
//! A QIP is a linear constraint system `Ax <= b` over binary variables
//! together with a quantifier prefix (existential / universal per variable)
//! and a minimax objective `c`. The existential player minimizes, the
//! universal player maximizes, and a game whose fixed vector violates the
//! constraint system is worth `+inf` for the existential side.
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals,
//! and all comparisons are exact rational comparisons. This crate holds the
//! problem representation ([`QipInstance`]), quantifier-block bookkeeping,
//! leaf evaluation ([`evaluate_game`]) and monotone-variable detection
//! ([`detect_monotone`]); search lives in higher-level crates.

mod assignment;
mod eval;
mod instance;
mod monotone;
mod value;

pub use assignment::{Assignment, AssignmentError};
pub use eval::{evaluate_game, EvalError};
pub use instance::{Block, BlockStructure, QipInstance, Quantifier, ValidationError};
pub use monotone::{detect_monotone, MonotoneStatus};
pub use value::{ExtValue, Rational};
