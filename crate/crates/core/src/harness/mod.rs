//! Corpora, checks, fitting and reports.

pub mod checks;
pub mod corpus;
pub mod fit;
pub mod report;

pub use checks::{Status, Verdict, Witness};
pub use corpus::Instance;
pub use fit::{fit_quasilinear, Fit};
pub use report::{FiltrationReport, Suite, SuiteOptions, SuiteReport};
