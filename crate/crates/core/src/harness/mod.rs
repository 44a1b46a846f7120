//! Verification harness: instance generators, exhaustive enumerators, and
//! the theorem-checking suites that compare structural claims against the
//! exact solver.

pub mod enumerate;
pub mod gen;
pub mod suites;

pub use gen::{gen_family, GenSpec};
pub use suites::{
    conjecture_search, verify_lastmove_implications, verify_many_moves, verify_suite, Bounds,
    Suite, SuiteReport, Violation,
};
