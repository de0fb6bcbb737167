//! Corpus generation and exhaustive theorem verification over finite modules.

pub mod checks;
pub mod corpus;
pub mod error;
pub mod registry;
pub mod report;
pub mod verify;

pub use corpus::{Bounds, Corpus};
pub use error::{HarnessError, Result};
pub use registry::{lookup, TheoremInfo, THEOREMS};
pub use report::{Counterexample, SkipEntry, VerificationReport, Verdict};
pub use verify::{verify, verify_modules, VerifyOptions};
