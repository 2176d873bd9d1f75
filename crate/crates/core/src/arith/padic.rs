//! Bounded-precision `ℓ`-adic root finding.
//!
//! Roots are isolated by a residue-class tree on primitive integer
//! polynomials. A branch is closed only when the reduced polynomial has a
//! simple root mod `ℓ`, so every reported root carries a Hensel
//! certificate. Precision escalates 32, 64, ... up to a cap.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp;
use super::poly::PolyQ;
use super::rational::{is_unit_square, lvaluation, split_valuation};
use super::zpoly::{self, ZPoly};
use crate::{Error, Result};

/// Smallest precision tried by the escalation policy.
pub const INITIAL_PRECISION: u32 = 32;
/// Largest allowed precision cap.
pub const MAX_PRECISION: u32 = 512;

/// Element of `Q_ℓ` known to finitely many digits: `ℓ^valuation · unit`
/// with `unit` known modulo `ℓ^precision`. The approximate zero has
/// `unit = 0` and `valuation` equal to the absolute precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicApprox {
    pub prime: u64,
    pub unit: BigInt,
    pub valuation: i64,
    pub precision: u32,
}

impl PadicApprox {
    /// Builds an approximation from a rational representative and the
    /// absolute precision `abs_prec` (`v(x - value) ≥ abs_prec`).
    pub fn from_rational(value: &BigRational, abs_prec: i64, prime: u64) -> Self {
        match lvaluation(value, prime) {
            Some(v) if v < abs_prec => {
                let (_, un) = split_valuation(value.numer(), prime);
                let (_, ud) = split_valuation(value.denom(), prime);
                let precision = (abs_prec - v) as u32;
                let m = BigInt::from(prime).pow(precision);
                let inv = ud.extended_gcd(&m).x;
                let unit = (un * inv).mod_floor(&m);
                PadicApprox { prime, unit, valuation: v, precision }
            }
            _ => PadicApprox::zero(prime, abs_prec),
        }
    }

    pub fn zero(prime: u64, abs_prec: i64) -> Self {
        PadicApprox { prime, unit: BigInt::zero(), valuation: abs_prec, precision: 1 }
    }

    pub fn is_approx_zero(&self) -> bool {
        self.unit.is_zero()
    }

    /// Absolute precision: the value is known modulo `ℓ^abs_precision`.
    pub fn abs_precision(&self) -> i64 {
        if self.is_approx_zero() {
            self.valuation
        } else {
            self.valuation + self.precision as i64
        }
    }

    /// A rational representative.
    pub fn to_rational(&self) -> BigRational {
        let l = BigRational::from_integer(BigInt::from(self.prime));
        BigRational::from_integer(self.unit.clone()) * num_traits::pow::Pow::pow(&l, self.valuation as i32)
    }

    /// Certified valuation, `None` if the value is indistinguishable from 0.
    pub fn certified_valuation(&self) -> Option<i64> {
        (!self.is_approx_zero()).then_some(self.valuation)
    }

    /// Whether the value is a nonzero square in `Q_ℓ`, or `None` when the
    /// known digits do not decide it.
    pub fn is_square(&self) -> Option<bool> {
        if self.is_approx_zero() {
            return None;
        }
        if self.valuation % 2 != 0 {
            return Some(false);
        }
        let needed = if self.prime == 2 { 3 } else { 1 };
        if self.precision < needed {
            return None;
        }
        Some(is_unit_square(&self.unit, self.prime))
    }

    /// Image under a rational polynomial, with a conservative precision.
    pub fn eval_poly(&self, f: &PolyQ) -> PadicApprox {
        let x = self.to_rational();
        let value = f.eval(&x);
        let p = self.abs_precision();
        let vx = lvaluation(&x, self.prime).unwrap_or(p).min(p);
        let vc = f.coeffs().iter().filter_map(|c| lvaluation(c, self.prime)).min().unwrap_or(0);
        let deg = f.degree().unwrap_or(0) as i64;
        let lost = vc + deg * vx.min(0);
        PadicApprox::from_rational(&value, p + lost, self.prime)
    }
}

/// Result of a root count with the degenerate-input flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootCount {
    pub count: usize,
    /// Set when the input was zero or constant.
    pub degenerate: bool,
}

/// Roots of `f` in `Q_ℓ` at a single working precision. The search depth
/// and the absolute precision of each approximation both equal
/// `precision`. Fails with "precision exhausted" if the roots are not
/// separated within the budget.
pub fn roots_in_ql(f: &PolyQ, l: u64, precision: u32) -> Result<Vec<PadicApprox>> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let exhausted = || Error::PrecisionExhausted { prime: l, cap: precision };
    let g = f.squarefree_part().primitive_integer();
    let prec = precision as i64;
    let mut out = Vec::new();

    let mut integral = Vec::new();
    search(&g, l, prec, &BigInt::zero(), 0, precision, &mut integral).map_err(|_| exhausted())?;
    for (a, k) in integral {
        out.push(PadicApprox::from_rational(&BigRational::from_integer(a), k as i64, l));
    }

    // roots of negative valuation: x = 1/(ℓ y) with y a root of rev(g)(ℓ y)
    let lb = BigInt::from(l);
    let h = zpoly::scale_var(&zpoly::reverse(&g), &lb);
    if h.len() > 1 {
        let mut inv = Vec::new();
        search(&h, l, prec, &BigInt::zero(), 0, 2 * precision + 2, &mut inv).map_err(|_| exhausted())?;
        for (y, k) in inv {
            let (m, _) = split_valuation(&y, l);
            if y.is_zero() || m as i64 + 1 >= prec {
                return Err(exhausted());
            }
            let x = BigRational::new(BigInt::one(), &lb * &y);
            let abs = k as i64 + 1 - 2 * (m as i64 + 1);
            out.push(PadicApprox::from_rational(&x, abs, l));
        }
    }
    Ok(out)
}

/// Certified count of roots in `Q_ℓ` at one precision.
pub fn count_roots_in_ql(f: &PolyQ, l: u64, precision: u32) -> Result<RootCount> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(RootCount { count: 0, degenerate: true });
    }
    Ok(RootCount { count: roots_in_ql(f, l, precision)?.len(), degenerate: false })
}

/// Runs `attempt` at precisions 32, 64, ... up to `cap`, returning the
/// first success. Only "precision exhausted" triggers escalation.
pub fn with_escalation<T>(l: u64, cap: u32, mut attempt: impl FnMut(u32) -> Result<T>) -> Result<T> {
    let cap = cap.clamp(1, MAX_PRECISION);
    let mut prec = INITIAL_PRECISION.min(cap);
    loop {
        match attempt(prec) {
            Err(Error::PrecisionExhausted { .. }) if prec < cap => prec = (prec * 2).min(cap),
            Err(Error::PrecisionExhausted { .. }) => return Err(Error::PrecisionExhausted { prime: l, cap }),
            other => return other,
        }
    }
}

/// Root count in `Q_ℓ` with the escalation policy.
pub fn count_roots_certified(f: &PolyQ, l: u64, cap: u32) -> Result<usize> {
    with_escalation(l, cap, |prec| count_roots_in_ql(f, l, prec).map(|c| c.count))
}

/// Roots of `x = base + ℓ^k x'` where `x'` runs over roots of `g` in `Z_ℓ`.
/// Pushes `(approximation, absolute precision)` pairs.
fn search(
    g: &[BigInt],
    l: u64,
    budget: i64,
    base: &BigInt,
    k: u32,
    target: u32,
    out: &mut Vec<(BigInt, u32)>,
) -> std::result::Result<(), ()> {
    let lb = BigInt::from(l);
    let mut g: ZPoly = g.to_vec();
    zpoly::trim(&mut g);
    if g.is_empty() {
        return Err(());
    }
    let c = zpoly::content(&g);
    let (v, _) = split_valuation(&c, l);
    let budget = budget - v as i64;
    if budget < 0 {
        return Err(());
    }
    if v > 0 {
        let lv = lb.pow(v);
        g = g.iter().map(|a| a / &lv).collect();
    }
    let gbar = zpoly::to_modp(&g, l);
    if gbar.len() <= 1 {
        return Ok(());
    }
    let dbar = modp::derivative(&gbar, l);
    let lk = lb.pow(k);
    for a in modp::roots(&gbar, l) {
        if modp::eval(&dbar, a, l) != 0 {
            let root = newton_lift(&g, l, BigInt::from(a), target);
            out.push((base + &lk * root, k + target));
        } else {
            if budget == 0 {
                return Err(());
            }
            let ab = BigInt::from(a);
            let shifted = zpoly::scale_var(&zpoly::taylor_shift(&g, &ab), &lb);
            search(&shifted, l, budget - 1, &(base + &lk * &ab), k + 1, target, out)?;
        }
    }
    Ok(())
}

/// Lifts a simple root `a` of `g mod ℓ` to a root mod `ℓ^target`.
pub(crate) fn newton_lift(g: &[BigInt], l: u64, a: BigInt, target: u32) -> BigInt {
    let dg = zpoly::derivative(g);
    let lb = BigInt::from(l);
    let mut x = a;
    let mut prec = 1u32;
    while prec < target {
        prec = (2 * prec).min(target);
        let m = lb.pow(prec);
        let fx = zpoly::eval(g, &x).mod_floor(&m);
        let dx = zpoly::eval(&dg, &x).mod_floor(&m);
        let inv = dx.extended_gcd(&m).x;
        x = (x - fx * inv).mod_floor(&m);
    }
    x
}

/// Small helper for callers that need `ℓ` as a `u64` from a big prime.
pub fn prime_to_u64(p: &BigInt) -> u64 {
    p.abs().to_u64().expect("prime exceeds 64 bits")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, ratio};

    fn p(cs: &[i64]) -> PolyQ {
        PolyQ::from_ints(cs)
    }

    #[test]
    fn basic_counts() {
        assert_eq!(count_roots_in_ql(&p(&[-1, 0, 1]), 3, 20).unwrap().count, 2);
        assert_eq!(count_roots_in_ql(&p(&[-2, 0, 1]), 7, 20).unwrap().count, 2);
        assert_eq!(count_roots_in_ql(&p(&[-3, 0, 1]), 7, 20).unwrap().count, 0);
        assert_eq!(count_roots_in_ql(&p(&[-17, 0, 1]), 2, 20).unwrap().count, 2);
        assert_eq!(count_roots_in_ql(&p(&[-5, 0, 1]), 2, 20).unwrap().count, 0);
        let c = count_roots_in_ql(&p(&[4]), 5, 20).unwrap();
        assert!(c.degenerate && c.count == 0);
    }

    #[test]
    fn negative_valuation_roots() {
        // roots 1/3 and -1/3 and 9
        let f = &(&p(&[-1, 3]) * &p(&[1, 3])) * &p(&[-9, 1]);
        let roots = roots_in_ql(&f, 3, 32).unwrap();
        assert_eq!(roots.len(), 3);
        let mut vals: Vec<i64> = roots.iter().map(|r| r.certified_valuation().unwrap()).collect();
        vals.sort();
        assert_eq!(vals, vec![-1, -1, 2]);
        // 1/(7·3) with 3 a nonresidue mod 7 is not a square in Q_7; check the approximation
        let r = roots_in_ql(&p(&[-1, 21]), 7, 32).unwrap();
        assert_eq!(r[0].certified_valuation(), Some(-1));
    }

    #[test]
    fn close_roots_need_escalation() {
        // 1 and 1 + 3^40 agree to 40 digits
        let a = BigInt::from(3).pow(40) + 1;
        let f = &p(&[-1, 1]) * &PolyQ::linear_root(&BigRational::from_integer(a));
        assert!(matches!(count_roots_in_ql(&f, 3, 32), Err(Error::PrecisionExhausted { .. })));
        assert_eq!(count_roots_certified(&f, 3, 512).unwrap(), 2);
        assert!(matches!(count_roots_certified(&f, 3, 32), Err(Error::PrecisionExhausted { cap: 32, .. })));
    }

    #[test]
    fn approximations_decide_squares() {
        // roots ±sqrt(2) in Q_7; image under 1 + x^2 is 3, a nonresidue
        let roots = roots_in_ql(&p(&[-2, 0, 1]), 7, 32).unwrap();
        for r in &roots {
            assert_eq!(r.eval_poly(&p(&[1, 0, 1])).is_square(), Some(false));
            assert_eq!(r.eval_poly(&p(&[2, 0, 1])).is_square(), Some(true));
        }
        let q = PadicApprox::from_rational(&ratio(50, 3), 30, 5);
        assert_eq!(q.valuation, 2);
        assert_eq!(q.to_rational().numer() % 25, BigInt::zero());
        assert_eq!(PadicApprox::from_rational(&rat(0), 10, 5).is_square(), None);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
        #[test]
        fn precision_independent(cs in proptest::collection::vec(-30i64..30, 2..6), idx in 0usize..4) {
            let l = [2u64, 3, 5, 7][idx];
            let f = p(&cs);
            if f.degree().unwrap_or(0) > 0 {
                let a = count_roots_in_ql(&f, l, 64);
                let b = count_roots_in_ql(&f, l, 128);
                if let (Ok(a), Ok(b)) = (a, b) {
                    proptest::prop_assert_eq!(a, b);
                }
            }
        }

        #[test]
        fn rational_roots_are_found(a in -40i64..40, b in 1i64..40, c in -40i64..40, idx in 0usize..4) {
            let l = [2u64, 3, 5, 7][idx];
            let f = &p(&[-a, b]) * &p(&[c, 0, 0, 1]);
            let roots = roots_in_ql(&f, l, 64).unwrap();
            let target = ratio(a, b);
            let hit = roots.iter().any(|r| {
                let diff = &r.to_rational() - &target;
                lvaluation(&diff, l).is_none_or(|v| v >= r.abs_precision())
            });
            proptest::prop_assert!(hit);
        }
    }
}
