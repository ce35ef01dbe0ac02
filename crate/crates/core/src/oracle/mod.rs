//! Ground truth at desk scale: the coloring verifier, the exact solver, the
//! `k`-divisible subgraph finder, graph enumeration and the two scanners built
//! on them.

mod afk;
mod divisible;
pub mod enumerate;
mod exact;
mod scan;
mod verify;

pub use afk::{check_afk_threshold, is_prime_power, AfkOptions, AfkReport, AfkRow};
pub use divisible::{
    find_even_subgraph, find_k_divisible, find_k_divisible_exhaustive, is_k_divisible,
};
pub use exact::{exact_chi, BoundExceeded, ExactChi, ExceededReason, SearchLimits};
pub use scan::{scan_conjecture, ScanOptions, ScanReport};
pub use verify::{verify_assignment, verify_coloring, VerificationReport, VerifyError, Violation};
