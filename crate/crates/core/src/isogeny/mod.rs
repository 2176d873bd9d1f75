//! Rational isogenies of odd prime degree.

pub mod divpoly;
pub mod dual;
pub mod gamma;
pub mod search;
pub mod velu;

pub use divpoly::division_poly;
pub use dual::dual;
pub use gamma::gamma_p;
pub use search::rational_p_isogenies;
pub use velu::{velu, Isogeny};
