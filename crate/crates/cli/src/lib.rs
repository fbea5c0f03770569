//! Library side of the `rmcode` command: the report schema, the analysis
//! pipeline and the generators.

pub mod generate;
pub mod pipeline;
pub mod report;
pub mod table;

use rmcode::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CRITERION_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::InternalInconsistency(_)
        | Error::IdentityViolated(_)
        | Error::CertificationFailed => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}
