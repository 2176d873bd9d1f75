//! Lower bounds for `rk + dim Sha[p]` of twists.

use std::fmt;

use super::twist::TwistContext;
use crate::isogeny::Isogeny;
use crate::Result;

/// Why a twist gets no bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exclusion {
    KernelPoint,
    PTorsion,
    DualKernelPoint,
}

impl fmt::Display for Exclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exclusion::KernelPoint => "rational kernel point",
            Exclusion::PTorsion => "rational p-torsion",
            Exclusion::DualKernelPoint => "rational dual-kernel point",
        })
    }
}

/// Meaning of every emitted bound: it bounds `rk + dim Sha[p]` from the
/// Selmer side; separating the rank needs analytic input not computed here.
pub const ASSUMPTION_NOTE: &str =
    "selmer-side bound on rk + dim Sha[p]; rank-0 input (L-value nonvanishing) out of scope";

/// Per-twist outcome. Exactly one of `excluded` and `bound` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRecord {
    pub d: i64,
    pub exponent: i64,
    pub excluded: Option<Exclusion>,
    pub bound: Option<i64>,
    /// Always set: the bound does not separate rank from Sha.
    pub rank_not_separated: bool,
}

impl BoundRecord {
    pub fn new(d: i64, exponent: i64, excluded: Option<Exclusion>) -> Self {
        let bound = excluded.is_none().then_some(exponent.max(0));
        BoundRecord { d, exponent, excluded, bound, rank_not_separated: true }
    }

    /// Negative twists only keep the finite places; the real place may
    /// lower the exponent by one.
    pub fn sign_note(&self) -> Option<&'static str> {
        (self.d < 0).then_some("c(phi_d) >= c(phi)/p")
    }

    /// `d<TAB>exponent<TAB>bound` or `...<TAB>EXCLUDED:reason`.
    pub fn checkpoint_line(&self) -> String {
        match (&self.excluded, self.bound) {
            (Some(r), _) => format!("{}\t{}\tEXCLUDED:{}", self.d, self.exponent, r),
            (None, Some(b)) => format!("{}\t{}\t{}", self.d, self.exponent, b),
            (None, None) => unreachable!("record without bound or exclusion"),
        }
    }
}

impl TwistContext {
    /// The bound record for the twist by `d`.
    pub fn bound(&self, d: i64) -> Result<BoundRecord> {
        let r = self.ratio(d)?;
        Ok(BoundRecord::new(d, r.exponent, self.exclusion(d)))
    }
}

/// [`TwistContext::bound`] for a one-off twist.
pub fn sha_bound(phi: &Isogeny, d: i64) -> Result<BoundRecord> {
    TwistContext::new(phi)?.bound(d)
}
