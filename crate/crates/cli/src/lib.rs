//! Command-line front end: the expression language and the commands.

pub mod commands;
pub mod expr;

pub use expr::{parse_expr, EvalError, ExprAst, ParseError, Value};
