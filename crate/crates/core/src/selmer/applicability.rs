//! Hypothesis checks for the twist-family theorems.

use crate::curve::model::WeierstrassModel;
use crate::curve::torsion::two_torsion_order;
use crate::isogeny::Isogeny;
use crate::{Error, Result};

use super::ratio::{default_badset, global_ratio};

/// Hypotheses and verdicts; verdicts depend only on the flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApplicabilityReport {
    pub p: u32,
    pub exponent: i64,
    /// `c(φ) ≥ p²`.
    pub ratio_at_least_p2: bool,
    /// `E[2](Q) ≠ Z/2`.
    pub two_torsion_ok: bool,
    /// Supplied by the caller: the domain is an optimal modular quotient.
    pub modular_quotient: bool,
}

impl ApplicabilityReport {
    /// Positive-proportion statement for optimal quotients of `J0(N)`.
    pub fn quotient_theorem(&self) -> bool {
        self.ratio_at_least_p2 && self.modular_quotient
    }

    /// Positive-proportion statement for elliptic curves.
    pub fn elliptic_theorem(&self) -> bool {
        self.ratio_at_least_p2 && self.two_torsion_ok
    }
}

pub fn applicability(e: &WeierstrassModel, phi: &Isogeny, modular_quotient: bool) -> Result<ApplicabilityReport> {
    if &phi.domain != e {
        return Err(Error::Input("isogeny domain differs from the curve".into()));
    }
    let r = global_ratio(phi, &default_badset(phi))?;
    Ok(ApplicabilityReport {
        p: phi.degree,
        exponent: r.exponent,
        ratio_at_least_p2: r.exponent >= 2,
        two_torsion_ok: two_torsion_order(e) != 2,
        modular_quotient,
    })
}
