use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::numerics::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Status {
    Proven,
    ConjecturalNumeric,
    Erratum,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Proven => "proven",
            Status::ConjecturalNumeric => "conjectural-numeric",
            Status::Erratum => "erratum",
        };
        f.write_str(s)
    }
}

/// A printed form that differs from the checked one, with its own residual.
#[derive(Debug, Clone, PartialEq)]
pub struct PrintedForm {
    pub value: Real,
    pub residual: Real,
}

/// One identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityResult {
    pub id: String,
    /// Equation label in the source numbering.
    pub label: String,
    pub lhs: Real,
    pub rhs: Real,
    /// |lhs − rhs| as computed.
    pub residual: Real,
    pub tol: Real,
    pub status: Status,
    pub elapsed: Duration,
    pub printed: Option<PrintedForm>,
}

impl IdentityResult {
    pub fn new(id: impl Into<String>, label: impl Into<String>, lhs: Real, rhs: Real, tol: Real, status: Status) -> Self {
        let residual = Real::with_val(lhs.prec(), &lhs - &rhs).abs();
        Self {
            id: id.into(),
            label: label.into(),
            lhs,
            rhs,
            residual,
            tol,
            status,
            elapsed: Duration::ZERO,
            printed: None,
        }
    }

    pub fn with_printed(mut self, value: Real) -> Self {
        let residual = Real::with_val(self.lhs.prec(), &self.lhs - &value).abs();
        self.printed = Some(PrintedForm { value, residual });
        self
    }

    pub fn passed(&self) -> bool {
        self.residual < self.tol
    }
}
