//! Elliptic curves over `Q` in long Weierstrass form.

pub mod isomorphism;
pub mod minimal;
pub mod model;
pub mod modq;
pub mod point;
pub mod torsion;
pub mod twist;

pub use minimal::minimal_model;
pub use model::{Invariants, Transform, WeierstrassModel};
pub use point::CurvePoint;
pub use torsion::two_torsion_order;
pub use twist::quadratic_twist;
