//! Rational points and the group law.

use num_rational::BigRational;
use num_traits::Zero;

use super::model::WeierstrassModel;
use crate::arith::rational::rat;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: BigRational, y: BigRational },
}

impl CurvePoint {
    pub fn affine(x: BigRational, y: BigRational) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&BigRational> {
        match self {
            CurvePoint::Affine { x, .. } => Some(x),
            CurvePoint::Infinity => None,
        }
    }
}

impl WeierstrassModel {
    pub fn is_on_curve(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => self.contains(x, y),
        }
    }

    pub fn neg_point(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: x.clone(), y: -y - self.a1() * x - self.a3() },
        }
    }

    pub fn add_points(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let [a1, a2, a3, a4, a6] = self.coeffs();
        let (lambda, nu) = if x1 == x2 {
            if y1 + y2 + a1 * x2 + a3 == BigRational::zero() {
                return CurvePoint::Infinity;
            }
            let denom = rat(2) * y1 + a1 * x1 + a3;
            let l = (rat(3) * x1 * x1 + rat(2) * a2 * x1 + a4 - a1 * y1) / &denom;
            let n = (-x1 * x1 * x1 + a4 * x1 + rat(2) * a6 - a3 * y1) / &denom;
            (l, n)
        } else {
            let l = (y2 - y1) / (x2 - x1);
            let n = (y1 * x2 - y2 * x1) / (x2 - x1);
            (l, n)
        };
        let x3 = &lambda * &lambda + a1 * &lambda - a2 - x1 - x2;
        let y3 = -(&lambda + a1) * &x3 - &nu - a3;
        CurvePoint::Affine { x: x3, y: y3 }
    }

    pub fn mul_point(&self, p: &CurvePoint, n: i64) -> CurvePoint {
        let base = if n < 0 { self.neg_point(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_points(&acc, &b);
            }
            b = self.add_points(&b, &b);
            k >>= 1;
        }
        acc
    }

    /// Order of a torsion point, searching up to `bound`.
    pub fn point_order(&self, p: &CurvePoint, bound: u32) -> Option<u32> {
        let mut q = p.clone();
        for n in 1..=bound {
            if q.is_infinity() {
                return Some(n);
            }
            q = self.add_points(&q, p);
        }
        None
    }
}
