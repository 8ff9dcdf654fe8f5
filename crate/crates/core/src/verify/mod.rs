//! The identity catalogue, its runner and report, and the standalone facts.

mod facts;
mod registry;
mod report;
mod result;

pub use facts::{chebyshev_checks, chebyshev_u, clausen_maximum, fixed_point, root_products, ClausenMaximum};
pub use registry::{find_entry, registry, Entry};
pub use report::{EntryFailure, Report};
pub use result::{IdentityResult, PrintedForm, Status};

use std::time::Instant;

use rayon::prelude::*;

use crate::error::Result;
use crate::numerics::PrecisionContext;

/// Runs `f` and stamps the elapsed wall time on its result.
pub(crate) fn timed<F>(f: F) -> Result<IdentityResult>
where
    F: FnOnce() -> Result<IdentityResult>,
{
    let start = Instant::now();
    let mut r = f()?;
    r.elapsed = start.elapsed();
    Ok(r)
}

/// Runs one entry, named by id or by an equation label that has a single entry.
pub fn run_identity(id: &str, ctx: &PrecisionContext) -> Result<IdentityResult> {
    find_entry(id)?.run(ctx)
}

/// Runs every entry matching `filter` (id, label or tag; all entries when
/// None) concurrently. Errors are recorded in the report.
pub fn run_all(ctx: &PrecisionContext, filter: Option<&str>) -> Report {
    let start = Instant::now();
    let selected: Vec<&Entry> = registry().iter().filter(|e| filter.map_or(true, |f| e.matches(f))).collect();
    let outcomes: Vec<(&Entry, Result<IdentityResult>)> = selected.par_iter().map(|e| (*e, e.run(ctx))).collect();
    let mut results = Vec::new();
    let mut errors = Vec::new();
    for (e, out) in outcomes {
        match out {
            Ok(r) => results.push(r),
            Err(error) => errors.push(EntryFailure {
                id: e.id.to_owned(),
                label: e.label.to_owned(),
                status: e.status,
                error,
            }),
        }
    }
    Report { digits: ctx.digits(), results, errors, wall: start.elapsed() }
}
