//! Censuses of twist families.

pub mod checkpoint;
pub mod family;
pub mod run;

pub use family::{sigma_membership, Sign, TwistFamily};
pub use run::{census, CensusOptions, CensusReport};
