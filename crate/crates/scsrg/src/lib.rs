//! File formats, JSON reports, the verification driver and the reproduction
//! suite behind the `scsrg` command.

pub mod formats;
pub mod report;
pub mod suite;
pub mod verify;
