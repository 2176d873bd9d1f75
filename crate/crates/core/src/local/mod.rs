//! Local data of elliptic curves: Tate's algorithm at finite primes and
//! the real place.

pub mod cache;
pub mod real;
pub mod tate;

pub use cache::local_data;
pub use real::{real_data, RealData};
pub use tate::{tate, Kodaira, LocalData, Reduction};
