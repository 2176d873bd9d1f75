//! Rational torsion probes.

use num_rational::BigRational;

use super::model::WeierstrassModel;
use super::point::CurvePoint;
use crate::arith::rational::{rat, rational_sqrt};
use crate::isogeny::divpoly::division_poly;

/// `#E[2](Q)`.
pub fn two_torsion_order(m: &WeierstrassModel) -> u32 {
    1 + m.two_division_poly().rational_roots().len() as u32
}

/// Points with abscissa `x`, if rational.
pub fn points_above(m: &WeierstrassModel, x: &BigRational) -> Vec<CurvePoint> {
    // y = (-(a1x + a3) ± sqrt(B6(x))) / 2
    let disc = m.two_division_poly().eval(x);
    let Some(root) = rational_sqrt(&disc) else { return Vec::new() };
    let lin = m.lhs_linear().eval(x);
    let y1 = (-&lin + &root) / rat(2);
    let y2 = (-&lin - &root) / rat(2);
    let mut out = vec![CurvePoint::affine(x.clone(), y1.clone())];
    if y2 != y1 {
        out.push(CurvePoint::affine(x.clone(), y2));
    }
    out
}

/// Rational points of exact order `p` (odd prime).
pub fn rational_p_torsion(m: &WeierstrassModel, p: u32) -> Vec<CurvePoint> {
    division_poly(m, p).rational_roots().iter().flat_map(|x| points_above(m, x)).collect()
}
