//! First-order formulas over the ring language, their text syntax, and a
//! bounded three-valued evaluator.

mod ast;
mod eval;
mod parser;

pub use ast::{Atom, DomainSpec, Formula, Quantifier, Term, WitnessHint};
pub use eval::{
    cross_check_set, eval_formula, eval_term, Binding, CrossCheck, Environment, EvalError, Scope, SearchBound,
    SetDefinition, Verdict,
};
pub use parser::{parse_formula, parse_formula_with_params};
