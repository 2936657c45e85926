//! Command-line front end for `ratmap-core`: JSON documents, the
//! floating-point oracle and the seeded verification suites.

pub mod commands;
pub mod json;
pub mod numeric;
pub mod suites;
