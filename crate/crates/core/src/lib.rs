//! Local and global Selmer ratios of rational `p`-isogenies of elliptic
//! curves over the rationals, quadratic-twist censuses, and an independent
//! sampling oracle for the local ratios.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: exact integers, rationals, polynomials, `ℓ`-adic root
//!   counting, Sturm sequences, symbols and sieves.
//! * [`curve`]: Weierstrass models, minimal models, twists, points.
//! * [`local`]: Tate's algorithm and archimedean data.
//! * [`isogeny`]: division polynomials, Vélu's formulas, duals.
//! * [`selmer`]: local/global Selmer ratios, twist ratios, Sha bounds.
//! * [`census`]: twist-family enumeration with checkpointing.
//! * [`oracle`]: brute-force sampling estimates of local ratios.
//! * [`cli`]: the `isoratio` command-line front end.

pub mod arith;
pub mod census;
pub mod cli;
pub mod curve;
mod error;
pub mod isogeny;
pub mod local;
pub mod oracle;
pub mod selmer;

pub use error::{Error, Result};
