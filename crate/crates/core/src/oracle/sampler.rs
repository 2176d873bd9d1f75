//! Haar-distributed abscissas of points of `E(Q_ℓ)` on a minimal model.
//!
//! The group is split into residue discs. Each nonsingular residue point
//! (the identity included) carries `ω`-mass `1/ℓ` and is sampled exactly
//! through a local parameter. Points reducing to the singular point are
//! drawn by importance sampling of the abscissa over depth strata
//! `v(x − c) = j`, weighted by the density `#{y}·ℓ^{v(B6(x))/2}` of `ω`
//! against `dx`.

use num_bigint::{BigInt, RandBigInt};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::arith::modp;
use crate::arith::padic::{newton_lift, roots_in_ql};
use crate::arith::rational::{is_square_in_ql, lvaluation};
use crate::curve::model::WeierstrassModel;
use crate::Result;

/// One draw: an abscissa (`None` for the identity) and its weight.
#[derive(Clone, Debug)]
pub struct Draw {
    pub x: Option<BigRational>,
    pub weight: f64,
}

#[derive(Clone, Debug)]
enum Disc {
    Identity,
    /// Abscissa is a local parameter.
    ByAbscissa(u64),
    /// Ordinate is a local parameter.
    ByOrdinate(u64, u64),
    Singular(u64, u64),
}

#[derive(Clone, Debug)]
pub struct Sampler {
    l: u64,
    a: [BigInt; 5],
    discs: Vec<Disc>,
    digits: u32,
    strata: u32,
}

impl Sampler {
    /// `m` must be integral and minimal at `ℓ`; abscissas are drawn to
    /// `digits` ℓ-adic digits beyond their leading one.
    pub fn new(m: &WeierstrassModel, l: u64, digits: u32) -> Self {
        let a = m.integer_coeffs();
        let r: Vec<u64> = a.iter().map(|c| c.mod_floor(&BigInt::from(l)).to_u64().unwrap()).collect();
        let [a1, a2, a3, a4, a6] = [r[0], r[1], r[2], r[3], r[4]];
        let (add, sub, mul) = (modp::add_mod, modp::sub_mod, modp::mul_mod);
        let mut discs = vec![Disc::Identity];
        let mut singular = None;
        for x in 0..l {
            let x2 = mul(x, x, l);
            let rhs = add(add(add(mul(x2, x, l), mul(a2, x2, l), l), mul(a4, x, l), l), a6, l);
            for y in 0..l {
                let lhs = add(add(mul(y, y, l), mul(mul(a1, x, l), y, l), l), mul(a3, y, l), l);
                if lhs != rhs {
                    continue;
                }
                let fy = add(add(mul(2, y, l), mul(a1, x, l), l), a3, l);
                let fx = sub(mul(a1, y, l), add(add(mul(3, x2, l), mul(mul(2, a2, l), x, l), l), a4, l), l);
                match (fy != 0, fx != 0) {
                    (true, _) => discs.push(Disc::ByAbscissa(x)),
                    (false, true) => discs.push(Disc::ByOrdinate(x, y)),
                    (false, false) => singular = Some(Disc::Singular(x, y)),
                }
            }
        }
        let strata = match &singular {
            Some(_) => {
                let vd = lvaluation(&m.discriminant(), l).unwrap_or(0) as u32;
                (vd + 2).min(digits / 2).max(2)
            }
            None => 0,
        };
        discs.extend(singular);
        Sampler { l, a, discs, digits, strata }
    }

    /// Number of nonsingular residue points, the identity included.
    pub fn nonsingular_points(&self) -> usize {
        self.discs.iter().filter(|d| !matches!(d, Disc::Singular(..))).count()
    }

    pub fn draw<R: Rng>(&self, rng: &mut R) -> Result<Draw> {
        let disc = &self.discs[rng.gen_range(0..self.discs.len())];
        let lb = BigInt::from(self.l);
        let modulus = lb.pow(self.digits);
        let uniform = |rng: &mut R| rng.gen_bigint_range(&BigInt::zero(), &modulus);
        match *disc {
            Disc::Identity => {
                let z = &lb * uniform(rng);
                Ok(Draw { x: self.identity_disc_abscissa(&z), weight: 1.0 })
            }
            Disc::ByAbscissa(x) => {
                let x = BigInt::from(x) + &lb * uniform(rng);
                Ok(Draw { x: Some(BigRational::from_integer(x)), weight: 1.0 })
            }
            Disc::ByOrdinate(x, y) => {
                let y = BigInt::from(y) + &lb * uniform(rng);
                Ok(Draw { x: Some(BigRational::from_integer(self.abscissa_for_ordinate(&y, x))), weight: 1.0 })
            }
            Disc::Singular(c, yc) => self.singular_draw(c, yc, rng),
        }
    }

    /// `x = z/w(z)` on the formal group; `z = 0` is the identity.
    fn identity_disc_abscissa(&self, z: &BigInt) -> Option<BigRational> {
        if z.is_zero() {
            return None;
        }
        let vz = lvaluation(&BigRational::from_integer(z.clone()), self.l).unwrap() as u32;
        let m = BigInt::from(self.l).pow(self.digits + 3 * vz + 2);
        let [a1, a2, a3, a4, a6] = &self.a;
        let z2 = z * z;
        let z3 = &z2 * z;
        let mut w = BigInt::zero();
        // w = z³ + a1 z w + a2 z² w + a3 w² + a4 z w² + a6 w³ contracts by ℓ^v(z)
        loop {
            let w2 = &w * &w;
            let next = (&z3 + a1 * z * &w + a2 * &z2 * &w + a3 * &w2 + a4 * z * &w2 + a6 * &w2 * &w).mod_floor(&m);
            if next == w {
                break;
            }
            w = next;
        }
        Some(BigRational::new(z.clone(), w))
    }

    /// Hensel lift of the abscissa from `F(x, y) = 0` near `x0`.
    fn abscissa_for_ordinate(&self, y: &BigInt, x0: u64) -> BigInt {
        let [a1, a2, a3, a4, a6] = &self.a;
        // -x³ - a2 x² + (a1 y - a4) x + (y² + a3 y - a6)
        let g = vec![y * y + a3 * y - a6, a1 * y - a4, -a2.clone(), BigInt::from(-1)];
        newton_lift(&g, self.l, BigInt::from(x0), self.digits + 1)
    }

    fn singular_draw(&self, c: u64, yc: u64, rng: &mut impl Rng) -> Result<Draw> {
        let l = self.l;
        let lb = BigInt::from(l);
        let lf = l as f64;
        let depth = rng.gen_range(1..=self.strata);
        let modulus = lb.pow(self.digits);
        let u = if depth < self.strata {
            // a unit: nonzero first digit
            let low = BigInt::from(rng.gen_range(1..l));
            low + &lb * rng.gen_bigint_range(&BigInt::zero(), &modulus)
        } else {
            rng.gen_bigint_range(&BigInt::zero(), &(&modulus * &lb))
        };
        let x = BigInt::from(c) + lb.pow(depth) * u;
        let mass =
            if depth < self.strata { (1.0 - 1.0 / lf) * lf.powi(-(depth as i32)) } else { lf.powi(-(depth as i32)) };
        let xq = BigRational::from_integer(x.clone());
        let [a1, a2, a3, a4, a6] = &self.a;
        let lin = a1 * &x + a3;
        let rhs = &x * &x * &x + a2 * &x * &x + a4 * &x + a6;
        let disc = &lin * &lin + BigInt::from(4) * &rhs;
        if disc.is_zero() {
            return Ok(Draw { x: Some(xq), weight: 0.0 });
        }
        let dq = BigRational::from_integer(disc.clone());
        let v = lvaluation(&dq, l).unwrap();
        let ordinates = if l == 2 {
            // keep only ordinates reducing to the singular point
            let quad = crate::arith::poly::PolyQ::from_bigints(&[-rhs, lin, BigInt::one()]);
            roots_in_ql(&quad, l, self.digits)?
                .iter()
                .filter(|y| {
                    let r = if y.is_approx_zero() || y.valuation > 0 {
                        Some(0)
                    } else if y.valuation == 0 {
                        (&y.unit % 2u32).to_u64()
                    } else {
                        None
                    };
                    r == Some(yc % 2)
                })
                .count()
        } else if is_square_in_ql(&dq, l) {
            2
        } else {
            0
        };
        let density = ordinates as f64 * lf.powf(v as f64 / 2.0);
        let weight = lf * self.strata as f64 * mass * density;
        debug_assert!(weight.is_finite() && !weight.is_negative());
        Ok(Draw { x: Some(xq), weight })
    }
}
