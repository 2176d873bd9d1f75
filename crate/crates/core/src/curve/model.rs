//! Weierstrass models, their invariants and the standard coordinate
//! changes `x = u²x' + r`, `y = u³y' + su²x' + t`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::poly::PolyQ;
use crate::arith::rational::{format_rational, from_int, lvaluation, rat};
use crate::{Error, Result};

/// `y² + a1 xy + a3 y = x³ + a2 x² + a4 x + a6`, nonsingular.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeierstrassModel {
    a: [BigRational; 5],
}

/// Standard invariants of a model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub b2: BigRational,
    pub b4: BigRational,
    pub b6: BigRational,
    pub b8: BigRational,
    pub c4: BigRational,
    pub c6: BigRational,
    pub disc: BigRational,
    pub j: BigRational,
}

impl WeierstrassModel {
    /// Builds a model, rejecting a vanishing discriminant.
    pub fn new(a1: BigRational, a2: BigRational, a3: BigRational, a4: BigRational, a6: BigRational) -> Result<Self> {
        let m = WeierstrassModel { a: [a1, a2, a3, a4, a6] };
        if m.discriminant().is_zero() {
            return Err(Error::SingularModel);
        }
        Ok(m)
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a.map(rat);
        Self::new(a1, a2, a3, a4, a6)
    }

    pub fn from_bigints(a: [BigInt; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a.map(from_int);
        Self::new(a1, a2, a3, a4, a6)
    }

    /// Coefficients `[a1, a2, a3, a4, a6]`.
    pub fn coeffs(&self) -> &[BigRational; 5] {
        &self.a
    }

    pub fn a1(&self) -> &BigRational {
        &self.a[0]
    }
    pub fn a2(&self) -> &BigRational {
        &self.a[1]
    }
    pub fn a3(&self) -> &BigRational {
        &self.a[2]
    }
    pub fn a4(&self) -> &BigRational {
        &self.a[3]
    }
    pub fn a6(&self) -> &BigRational {
        &self.a[4]
    }

    pub fn b_invariants(&self) -> [BigRational; 4] {
        let [a1, a2, a3, a4, a6] = &self.a;
        let b2 = a1 * a1 + rat(4) * a2;
        let b4 = a1 * a3 + rat(2) * a4;
        let b6 = a3 * a3 + rat(4) * a6;
        let b8 = a1 * a1 * a6 + rat(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        [b2, b4, b6, b8]
    }

    pub fn discriminant(&self) -> BigRational {
        let [b2, b4, b6, b8] = self.b_invariants();
        -&b2 * &b2 * &b8 - rat(8) * &b4 * &b4 * &b4 - rat(27) * &b6 * &b6 + rat(9) * &b2 * &b4 * &b6
    }

    pub fn invariants(&self) -> Invariants {
        let [b2, b4, b6, b8] = self.b_invariants();
        let c4 = &b2 * &b2 - rat(24) * &b4;
        let c6 = -&b2 * &b2 * &b2 + rat(36) * &b2 * &b4 - rat(216) * &b6;
        let disc = self.discriminant();
        let j = &c4 * &c4 * &c4 / &disc;
        Invariants { b2, b4, b6, b8, c4, c6, disc, j }
    }

    pub fn j_invariant(&self) -> BigRational {
        self.invariants().j
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.a.iter().all(|c| c.is_integer())
    }

    /// Whether every coefficient is `ℓ`-integral.
    pub fn is_integral_at(&self, l: u64) -> bool {
        self.a.iter().all(|c| lvaluation(c, l).is_none_or(|v| v >= 0))
    }

    /// Integer coefficients; panics on a non-integral model.
    pub fn integer_coeffs(&self) -> [BigInt; 5] {
        self.a.clone().map(|c| {
            assert!(c.is_integer(), "model is not integral");
            c.to_integer()
        })
    }

    /// The model in the coordinates given by `t`.
    pub fn transform(&self, t: &Transform) -> WeierstrassModel {
        let Transform { u, r, s, t } = t;
        let [a1, a2, a3, a4, a6] = &self.a;
        let two = rat(2);
        let three = rat(3);
        let n1 = a1 + &two * s;
        let n2 = a2 - s * a1 + &three * r - s * s;
        let n3 = a3 + r * a1 + &two * t;
        let n4 = a4 - s * a3 + &two * r * a2 - (t + r * s) * a1 + &three * r * r - &two * s * t;
        let n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
        let ui = u.recip();
        let u2 = &ui * &ui;
        let u3 = &u2 * &ui;
        let u4 = &u2 * &u2;
        let u6 = &u3 * &u3;
        WeierstrassModel { a: [n1 * ui, n2 * u2, n3 * u3, n4 * u4, n6 * u6] }
    }

    /// `x³ + a2x² + a4x + a6 + (a1x + a3)²/4` scaled by 4, i.e.
    /// `4x³ + b2x² + 2b4x + b6`; its roots are the `x` of 2-torsion points.
    pub fn two_division_poly(&self) -> PolyQ {
        let [b2, b4, b6, _] = self.b_invariants();
        PolyQ::new(vec![b6, rat(2) * b4, b2, rat(4)])
    }

    /// Right-hand side `x³ + a2x² + a4x + a6`.
    pub fn rhs(&self) -> PolyQ {
        PolyQ::new(vec![self.a[4].clone(), self.a[3].clone(), self.a[1].clone(), BigRational::one()])
    }

    /// `a1 x + a3`.
    pub fn lhs_linear(&self) -> PolyQ {
        PolyQ::new(vec![self.a[2].clone(), self.a[0].clone()])
    }

    /// Whether `(x, y)` satisfies the equation.
    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        let [a1, a2, a3, a4, a6] = &self.a;
        y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6
    }

    /// Renders as `a1 a2 a3 a4 a6`.
    pub fn to_line(&self) -> String {
        self.a.iter().map(format_rational).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.a.iter().map(format_rational).collect::<Vec<_>>().join(","))
    }
}

/// Coordinate change `[u, r, s, t]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transform {
    pub u: BigRational,
    pub r: BigRational,
    pub s: BigRational,
    pub t: BigRational,
}

impl Transform {
    pub fn identity() -> Self {
        Transform::new(BigRational::one(), BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn new(u: BigRational, r: BigRational, s: BigRational, t: BigRational) -> Self {
        assert!(!u.is_zero(), "transform scale must be nonzero");
        Transform { u, r, s, t }
    }

    pub fn from_ints(u: i64, r: i64, s: i64, t: i64) -> Self {
        Transform::new(rat(u), rat(r), rat(s), rat(t))
    }

    pub fn scaling(u: BigRational) -> Self {
        Transform::new(u, BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Transform) -> Transform {
        let u1 = &self.u;
        let u1sq = u1 * u1;
        Transform {
            u: u1 * &next.u,
            r: &self.r + &u1sq * &next.r,
            s: &self.s + u1 * &next.s,
            t: &self.t + &u1sq * &self.s * &next.r + &u1sq * u1 * &next.t,
        }
    }

    pub fn inverse(&self) -> Transform {
        let ui = self.u.recip();
        let u2 = &ui * &ui;
        Transform { u: ui.clone(), r: -&self.r * &u2, s: -&self.s * &ui, t: (&self.r * &self.s - &self.t) * &u2 * &ui }
    }

    /// New coordinates of an affine point.
    pub fn map_point(&self, x: &BigRational, y: &BigRational) -> (BigRational, BigRational) {
        let u2 = &self.u * &self.u;
        let xp = (x - &self.r) / &u2;
        let yp = (y - &self.s * &u2 * &xp - &self.t) / (&u2 * &self.u);
        (xp, yp)
    }

    /// New `x`-coordinate of an old one.
    pub fn map_x(&self, x: &BigRational) -> BigRational {
        (x - &self.r) / (&self.u * &self.u)
    }
}
