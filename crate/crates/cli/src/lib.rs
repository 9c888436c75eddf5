//! Command-line surface and file formats for the rank-metric coding
//! laboratory, plus the exhaustive verification suites.

pub mod app;
pub mod format;
pub mod report;
pub mod verify;
