//! Selmer ratios stored as exponents of `p`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::intfactor::prime_divisors_u64;
use crate::arith::rational::lvaluation;
use crate::arith::sturm::signs_at_real_roots;
use crate::curve::model::WeierstrassModel;
use crate::isogeny::{dual, Isogeny};
use crate::local::local_data;
use crate::{Error, Result};

/// A place of `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(u64),
    Infinity,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(l) => write!(f, "{l}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// `c(φ) = p^exponent`, with the exponent of each stored local factor.
/// Places missing from `breakdown` contribute 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioExponent {
    pub p: u32,
    pub exponent: i64,
    pub breakdown: BTreeMap<Place, i64>,
}

impl RatioExponent {
    pub fn from_breakdown(p: u32, breakdown: BTreeMap<Place, i64>) -> Self {
        let exponent = breakdown.values().sum();
        RatioExponent { p, exponent, breakdown }
    }

    pub fn at(&self, v: Place) -> i64 {
        self.breakdown.get(&v).copied().unwrap_or(0)
    }

    /// The breakdown without zero entries; two ratios agree iff these do.
    pub fn nonzero(&self) -> BTreeMap<Place, i64> {
        self.breakdown.iter().filter(|(_, e)| **e != 0).map(|(v, e)| (*v, *e)).collect()
    }

    /// `{5: 0, 11: -1, inf: -1}`.
    pub fn breakdown_string(&self) -> String {
        let parts: Vec<String> = self.breakdown.iter().map(|(v, e)| format!("{v}: {e}")).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for RatioExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c(phi) = {}^{}", self.p, self.exponent)
    }
}

/// Primes dividing the minimal discriminants of both curves, and `p`.
pub fn default_badset(phi: &Isogeny) -> Vec<u64> {
    let m = phi.minimal();
    badset_of_minimal(&m)
}

pub(crate) fn badset_of_minimal(m: &Isogeny) -> Vec<u64> {
    let da = m.domain.discriminant().to_integer();
    let db = m.codomain.discriminant().to_integer();
    let mut out = prime_divisors_u64(&(da * db));
    out.push(m.degree as u64);
    out.sort_unstable();
    out.dedup();
    out
}

/// Exponent of `c_ℓ(φ)` at a finite prime.
pub fn local_ratio(phi: &Isogeny, l: u64) -> Result<i64> {
    local_ratio_minimal(&phi.minimal(), l)
}

/// [`local_ratio`] for an isogeny whose models are already minimal.
pub(crate) fn local_ratio_minimal(m: &Isogeny, l: u64) -> Result<i64> {
    let p = m.degree as u64;
    let ca = local_data(&m.domain, l).tamagawa;
    let cb = local_data(&m.codomain, l).tamagawa;
    let mut e = tamagawa_exponent(ca, cb, p)?;
    if l == p {
        let v = lvaluation(&m.alpha, p).expect("alpha is nonzero");
        if !(0..=1).contains(&v) {
            return Err(Error::Invariant(format!("v_p(alpha) = {v} outside 0..=1")));
        }
        e += v;
    }
    Ok(e)
}

/// `k` with `cb / ca = p^k`.
fn tamagawa_exponent(ca: u32, cb: u32, p: u64) -> Result<i64> {
    let (hi, lo, sign) = if cb >= ca { (cb, ca, 1) } else { (ca, cb, -1) };
    let err = || Error::NonPPowerTamagawa { p, numerator: cb as u64, denominator: ca as u64 };
    if hi % lo != 0 {
        return Err(err());
    }
    let mut q = (hi / lo) as u64;
    let mut k = 0;
    while q > 1 {
        if !q.is_multiple_of(p) {
            return Err(err());
        }
        q /= p;
        k += 1;
    }
    Ok(sign * k)
}

/// Exponent of `c_∞(φ)`: −1 when the kernel has a nonzero real point.
pub fn infinity_ratio(phi: &Isogeny) -> i64 {
    let b6 = phi.domain.two_division_poly();
    let real = signs_at_real_roots(&phi.kernel_poly, &b6).into_iter().any(|s| s > 0);
    if real {
        -1
    } else {
        0
    }
}

/// `c(φ)` over `badset ∪ {∞}`. `badset` must contain every bad prime of
/// both curves and `p`.
pub fn global_ratio(phi: &Isogeny, badset: &[u64]) -> Result<RatioExponent> {
    let m = phi.minimal();
    let required = badset_of_minimal(&m);
    if let Some(l) = required.iter().find(|l| !badset.contains(l)) {
        return Err(Error::Input(format!("bad set is missing the prime {l}")));
    }
    ratio_on_minimal(&m, badset, infinity_ratio(phi))
}

pub(crate) fn ratio_on_minimal(m: &Isogeny, badset: &[u64], at_infinity: i64) -> Result<RatioExponent> {
    let mut breakdown = BTreeMap::new();
    for &l in badset {
        breakdown.insert(Place::Finite(l), local_ratio_minimal(m, l)?);
    }
    breakdown.insert(Place::Infinity, at_infinity);
    Ok(RatioExponent::from_breakdown(m.degree, breakdown))
}

/// Result of the composition identity at one place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceCheck {
    pub place: Place,
    pub forward: i64,
    pub backward: i64,
    pub expected: i64,
}

impl PlaceCheck {
    pub fn passed(&self) -> bool {
        self.forward + self.backward == self.expected
    }
}

/// Exponent of `c_v([p])` for odd `p`.
fn multiplication_exponent(v: Place, p: u64) -> i64 {
    match v {
        Place::Infinity => -1,
        Place::Finite(l) if l == p => 1,
        Place::Finite(_) => 0,
    }
}

/// Compares `c_v(φ)·c_v(φ̂)` with `c_v([p])` at each place.
pub fn composition_check(phi: &Isogeny, places: &[Place]) -> Result<Vec<PlaceCheck>> {
    let psi = dual(phi)?;
    let (mf, mb) = (phi.minimal(), psi.minimal());
    let p = phi.degree as u64;
    places
        .iter()
        .map(|&place| {
            let (forward, backward) = match place {
                Place::Infinity => (infinity_ratio(phi), infinity_ratio(&psi)),
                Place::Finite(l) => (local_ratio_minimal(&mf, l)?, local_ratio_minimal(&mb, l)?),
            };
            Ok(PlaceCheck { place, forward, backward, expected: multiplication_exponent(place, p) })
        })
        .collect()
}

/// [`composition_check`] turned into an error on the first failing place.
pub fn require_composition(phi: &Isogeny, places: &[Place]) -> Result<Vec<PlaceCheck>> {
    let checks = composition_check(phi, places)?;
    if let Some(bad) = checks.iter().find(|c| !c.passed()) {
        return Err(Error::CompositionMismatch { place: bad.place.to_string() });
    }
    Ok(checks)
}

/// Primes dividing `2pN` for the curve `m`.
pub(crate) fn support_primes(m: &WeierstrassModel, p: u32) -> Vec<u64> {
    let n = crate::curve::minimal::conductor(m);
    let mut out = prime_divisors_u64(&(n * BigInt::from(2u32 * p)));
    out.sort_unstable();
    out.dedup();
    out
}
