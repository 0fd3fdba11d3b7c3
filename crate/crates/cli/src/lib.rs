//! Library side of the `knotconc` binary: family files, reports and output
//! formatting.

pub mod family_spec;
pub mod output;
pub mod report;
