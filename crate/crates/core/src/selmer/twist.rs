//! Ratios of quadratic twists of an isogeny.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use super::bound::Exclusion;
use super::ratio::{
    badset_of_minimal, default_badset, global_ratio, infinity_ratio, ratio_on_minimal, support_primes, Place,
    RatioExponent,
};
use crate::arith::intfactor::prime_divisors_u64;
use crate::arith::rational::{from_int, is_rational_square, is_square_in_ql};
use crate::arith::sturm::signs_at_real_roots;
use crate::curve::twist::twisted_short_model;
use crate::isogeny::{division_poly, dual, velu, Isogeny};
use crate::Result;

/// Everything about `φ` that twists share: the untwisted ratio, the
/// support primes of `2pN`, and the abscissas whose twisted points decide
/// the torsion exclusions.
#[derive(Clone, Debug)]
pub struct TwistContext {
    pub phi: Isogeny,
    pub psi: Isogeny,
    pub base: RatioExponent,
    pub support: Vec<u64>,
    /// `B6` of the domain at rational kernel abscissas.
    kernel_values: Vec<BigRational>,
    /// `B6` of the domain at rational `p`-torsion abscissas off the kernel.
    torsion_values: Vec<BigRational>,
    /// `B6` of the codomain at rational abscissas of the dual kernel.
    dual_values: Vec<BigRational>,
    /// Signs of `B6` of the domain at the real kernel abscissas.
    real_kernel_signs: Vec<i32>,
}

impl TwistContext {
    pub fn new(phi: &Isogeny) -> Result<Self> {
        let psi = dual(phi)?;
        let base = global_ratio(phi, &default_badset(phi))?;
        let support = support_primes(&phi.domain, phi.degree);
        let b6a = phi.domain.two_division_poly();
        let b6b = phi.codomain.two_division_poly();
        let kernel_roots = phi.kernel_poly.rational_roots();
        let kernel_values = kernel_roots.iter().map(|x| b6a.eval(x)).collect();
        let torsion_values = division_poly(&phi.domain, phi.degree)
            .rational_roots()
            .iter()
            .filter(|x| !kernel_roots.contains(x))
            .map(|x| b6a.eval(x))
            .collect();
        let dual_values = psi.kernel_poly.rational_roots().iter().map(|x| b6b.eval(x)).collect();
        let real_kernel_signs = signs_at_real_roots(&phi.kernel_poly, &b6a);
        Ok(TwistContext {
            phi: phi.clone(),
            psi,
            base,
            support,
            kernel_values,
            torsion_values,
            dual_values,
            real_kernel_signs,
        })
    }

    pub fn p(&self) -> u32 {
        self.phi.degree
    }

    /// Whether `d` is a square in `Q_ℓ` for every support prime, so that
    /// the twist agrees with `φ` at all those places.
    pub fn fast_applies(&self, d: i64) -> bool {
        let dq = BigRational::from_integer(BigInt::from(d));
        self.support.iter().all(|&l| is_square_in_ql(&dq, l))
    }

    /// The ratio of `φ_d` from the untwisted finite places, when
    /// [`fast_applies`](Self::fast_applies).
    pub fn fast(&self, d: i64) -> Option<RatioExponent> {
        if d == 0 || !self.fast_applies(d) {
            return None;
        }
        let mut breakdown: BTreeMap<Place, i64> = self.base.breakdown.clone();
        for l in prime_divisors_u64(&BigInt::from(d)) {
            breakdown.insert(Place::Finite(l), 0);
        }
        let real = self.real_kernel_signs.iter().any(|s| s * d.signum() as i32 > 0);
        breakdown.insert(Place::Infinity, if real { -1 } else { 0 });
        Some(RatioExponent::from_breakdown(self.p(), breakdown))
    }

    /// The ratio of the explicitly constructed twisted isogeny.
    pub fn slow(&self, d: i64) -> Result<RatioExponent> {
        let twisted = twisted_isogeny(&self.phi, d)?;
        let m = twisted.minimal();
        ratio_on_minimal(&m, &badset_of_minimal(&m), infinity_ratio(&twisted))
    }

    /// Fast path when it applies, explicit construction otherwise.
    pub fn ratio(&self, d: i64) -> Result<RatioExponent> {
        match self.fast(d) {
            Some(r) => Ok(r),
            None => self.slow(d),
        }
    }

    /// Local exponent of `φ_d` at a finite prime without building the
    /// twist, when the shortcut is valid: 0 at primes outside the support,
    /// and the untwisted value at support primes when `d` is a local square.
    pub fn fast_local_exponent(&self, d: i64, l: u64) -> Option<i64> {
        if !self.support.contains(&l) {
            return Some(0);
        }
        let dq = BigRational::from_integer(BigInt::from(d));
        is_square_in_ql(&dq, l).then(|| self.base.at(Place::Finite(l)))
    }

    /// The torsion obstruction of the twist, if any. A point with abscissa
    /// `x` becomes rational on the `d`-twist iff `d·B6(x)` is a nonzero
    /// rational square.
    pub fn exclusion(&self, d: i64) -> Option<Exclusion> {
        let dq = from_int(BigInt::from(d));
        let hit = |vals: &[BigRational]| vals.iter().any(|v| !v.is_zero() && is_rational_square(&(&dq * v)));
        if hit(&self.kernel_values) {
            Some(Exclusion::KernelPoint)
        } else if hit(&self.torsion_values) {
            Some(Exclusion::PTorsion)
        } else if hit(&self.dual_values) {
            Some(Exclusion::DualKernelPoint)
        } else {
            None
        }
    }
}

/// The `d`-twist of `φ`, with domain the twisted short model and codomain
/// minimal. Kernel abscissas `x` move to `4dx`.
pub fn twisted_isogeny(phi: &Isogeny, d: i64) -> Result<Isogeny> {
    let db = BigInt::from(d);
    let domain = twisted_short_model(&phi.domain, &db);
    let c = from_int(db * 4);
    let n = phi.half_kernel_size() as i32;
    let kernel = phi.kernel_poly.substitute_affine(&c.recip(), &BigRational::zero()).scale(&Pow::pow(&c, n));
    velu(&domain, &kernel)
}

/// `c(φ_d)` for a nonzero squarefree `d`.
pub fn twist_ratio(phi: &Isogeny, d: i64) -> Result<RatioExponent> {
    TwistContext::new(phi)?.ratio(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::PolyQ;
    use crate::curve::model::WeierstrassModel;

    fn level_nineteen_dual() -> Isogeny {
        let e = WeierstrassModel::from_ints([0, 1, 1, -9, -15]).unwrap();
        let phi = velu(&e, &PolyQ::from_ints(&[-5, 1])).unwrap();
        dual(&phi).unwrap()
    }

    #[test]
    fn fast_matches_slow_on_family_members() {
        let ctx = TwistContext::new(&level_nineteen_dual()).unwrap();
        assert_eq!(ctx.base.exponent, 2);
        assert_eq!(ctx.support, vec![2, 3, 19]);
        let members: Vec<i64> = (-400..400)
            .filter(|&d| {
                d != 0
                    && ctx.fast_applies(d)
                    && crate::arith::intfactor::factorize(&BigInt::from(d)).iter().all(|(_, e)| *e == 1)
            })
            .collect();
        assert!(members.contains(&73));
        for d in members {
            let fast = ctx.fast(d).unwrap();
            let slow = ctx.slow(d).unwrap();
            assert_eq!(fast.nonzero(), slow.nonzero(), "d = {d}");
            if d > 0 {
                assert_eq!(fast.exponent, 2);
            } else {
                assert!(fast.exponent == 1 || fast.exponent == 3);
            }
        }
    }

    #[test]
    fn only_trivial_twist_is_excluded() {
        let ctx = TwistContext::new(&level_nineteen_dual()).unwrap();
        assert_eq!(ctx.exclusion(1), Some(Exclusion::DualKernelPoint));
        assert_eq!(ctx.exclusion(73), None);
        let fwd = TwistContext::new(&ctx.psi).unwrap();
        assert_eq!(fwd.exclusion(1), Some(Exclusion::KernelPoint));
    }
}
