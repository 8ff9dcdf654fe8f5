//! Constant-expression evaluation and the `clausen` command line.

pub mod app;
pub mod eval;
pub mod expr;
pub mod format;

pub use app::{run, EXIT_FAILURES, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE};
pub use eval::{eval_expr, EvalError, EvalErrorKind};
pub use expr::{parse_expr, BinOp, ConstExpr, Func, ParseError};
