//! Local and global Selmer ratios of `p`-isogenies, their twists, the
//! resulting Sha bounds and the theorem-applicability predicates.

pub mod applicability;
pub mod bound;
pub mod ratio;
pub mod twist;

pub use applicability::{applicability, ApplicabilityReport};
pub use bound::{sha_bound, BoundRecord, Exclusion};
pub use ratio::{
    composition_check, default_badset, global_ratio, infinity_ratio, local_ratio, require_composition, Place,
    PlaceCheck, RatioExponent,
};
pub use twist::{twist_ratio, twisted_isogeny, TwistContext};
