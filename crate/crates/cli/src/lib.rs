//! Verification suites, report formats and JSON wire encodings for the
//! punctual Quot scheme toolkit.
//!
//! Every checkable structural claim — the divisor witness, chart dimension,
//! the quadric case, singular loci by two routes, incidence fiber laws, the
//! dual-number non-reducedness dichotomy, and the rank-2 exceptional-divisor
//! geometry — is bound to a [`report::CheckReport`] whose pass flag is
//! recomputable from its evidence payload.

pub mod checks;
pub mod json;
pub mod report;
pub mod suite;

pub use report::CheckReport;
pub use suite::{run_suite, Params, Suite};
