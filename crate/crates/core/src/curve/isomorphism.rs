//! Isomorphisms between Weierstrass models over `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::model::{Transform, WeierstrassModel};
use crate::arith::rational::rat;

/// Exact `k`-th root of a nonnegative integer.
fn int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.nth_root(k);
    (r.pow(k) == *n).then_some(r)
}

/// A transform `t` with `e1.transform(t) == e2`, if one exists.
///
/// Since `Δ2 = u⁻¹² Δ1`, the scale is `±` the twelfth root of `Δ1/Δ2`; the
/// remaining parameters are then forced by the `a1, a2, a3` laws.
pub fn find_isomorphism(e1: &WeierstrassModel, e2: &WeierstrassModel) -> Option<Transform> {
    if e1.j_invariant() != e2.j_invariant() {
        return None;
    }
    let ratio = e1.discriminant() / e2.discriminant();
    if ratio.is_negative() {
        return None;
    }
    let num = int_root(ratio.numer(), 12)?;
    let den = int_root(ratio.denom(), 12)?;
    let u0 = BigRational::new(num, den);
    for u in [u0.clone(), -u0] {
        let [a1, a2, a3, _, _] = e1.coeffs();
        let [b1, b2, b3, _, _] = e2.coeffs();
        let s = (&u * b1 - a1) / rat(2);
        let r = (&u * &u * b2 - a2 + &s * a1 + &s * &s) / rat(3);
        let t = (&u * &u * &u * b3 - a3 - &r * a1) / rat(2);
        let tr = Transform::new(u, r, s, t);
        if e1.transform(&tr) == *e2 {
            return Some(tr);
        }
    }
    None
}

pub fn is_isomorphic(e1: &WeierstrassModel, e2: &WeierstrassModel) -> bool {
    find_isomorphism(e1, e2).is_some()
}
