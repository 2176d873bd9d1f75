//! Exact arithmetic substrate: rationals, dense polynomials over the
//! rationals and the integers, arithmetic modulo small primes, `ℓ`-adic
//! approximations, Sturm sequences, symbols and sieves.

pub mod factor;
pub mod intfactor;
pub mod modp;
pub mod padic;
pub mod poly;
pub mod rational;
pub mod sieve;
pub mod sturm;
pub mod symbols;
pub mod zpoly;

pub use padic::{count_roots_certified, count_roots_in_ql, roots_in_ql, PadicApprox};
pub use poly::PolyQ;
pub use rational::{lvaluation, RationalQ};
pub use sieve::squarefree_range;
pub use sturm::count_real_roots;
pub use symbols::kronecker;
