//! Reductions modulo primes of good reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::model::WeierstrassModel;
use crate::arith::modp;
use crate::arith::rational::{int_valuation, lvaluation};

/// Residue of an `ℓ`-integral rational modulo `q`.
pub fn reduce_rational(x: &num_rational::BigRational, q: u64) -> u64 {
    let qb = BigInt::from(q);
    let n = x.numer().mod_floor(&qb).to_u64().unwrap();
    let d = x.denom().mod_floor(&qb).to_u64().unwrap();
    modp::mul_mod(n, modp::inv_mod(d, q), q)
}

/// Whether `m` has good reduction at `q` on this model.
pub fn has_good_model_at(m: &WeierstrassModel, q: u64) -> bool {
    m.is_integral_at(q) && lvaluation(&m.discriminant(), q) == Some(0)
}

/// `#E(F_q)` on a model that is integral with unit discriminant at `q`.
pub fn count_points(m: &WeierstrassModel, q: u64) -> u64 {
    assert!(has_good_model_at(m, q), "model is not good at {q}");
    let a: Vec<u64> = m.coeffs().iter().map(|c| reduce_rational(c, q)).collect();
    let (a1, a2, a3, a4, a6) = (a[0], a[1], a[2], a[3], a[4]);
    let mut count = 1u64;
    if q == 2 {
        for x in 0..2 {
            for y in 0..2 {
                let l = (y * y + a1 * x * y + a3 * y) % 2;
                let r = (x * x * x + a2 * x * x + a4 * x + a6) % 2;
                count += (l == r) as u64;
            }
        }
        return count;
    }
    // y-discriminant 4x³ + b2x² + 2b4x + b6
    let b2 = (modp::mul_mod(a1, a1, q) + 4 * a2 % q) % q;
    let b4 = (modp::mul_mod(a1, a3, q) + 2 * a4 % q) % q;
    let b6 = (modp::mul_mod(a3, a3, q) + 4 * a6 % q) % q;
    let f = [b6, 2 * b4 % q, b2, 4 % q];
    for x in 0..q {
        let v = modp::eval(&f, x, q);
        count = (count as i64 + 1 + modp::legendre(v, q) as i64) as u64;
    }
    count
}

/// `a_q = q + 1 - #E(F_q)`.
pub fn trace_of_frobenius(m: &WeierstrassModel, q: u64) -> i64 {
    q as i64 + 1 - count_points(m, q) as i64
}

/// Whether `q` divides the integer `n` at least once.
pub fn divides(q: u64, n: &BigInt) -> bool {
    int_valuation(n, q).is_some_and(|v| v > 0)
}

/// A curve over `F_q` (`q` odd) with explicit points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModCurve {
    pub q: u64,
    pub a: [u64; 5],
}

/// A point of a [`ModCurve`]; `None` is the point at infinity.
pub type ModPoint = Option<(u64, u64)>;

impl ModCurve {
    pub fn reduce(m: &WeierstrassModel, q: u64) -> Self {
        assert!(has_good_model_at(m, q) && q > 2);
        let v: Vec<u64> = m.coeffs().iter().map(|c| reduce_rational(c, q)).collect();
        ModCurve { q, a: [v[0], v[1], v[2], v[3], v[4]] }
    }

    pub fn contains(&self, p: &ModPoint) -> bool {
        let q = self.q;
        let [a1, a2, a3, a4, a6] = self.a;
        match *p {
            None => true,
            Some((x, y)) => {
                let l = modp::mul_mod(y, modp::add_mod(y, modp::add_mod(modp::mul_mod(a1, x, q), a3, q), q), q);
                let r = modp::eval(&[a6, a4, a2, 1], x, q);
                l == r
            }
        }
    }

    pub fn neg(&self, p: &ModPoint) -> ModPoint {
        let q = self.q;
        p.map(|(x, y)| {
            let t = modp::add_mod(modp::add_mod(y, modp::mul_mod(self.a[0], x, q), q), self.a[2], q);
            (x, modp::sub_mod(0, t, q))
        })
    }

    pub fn add(&self, p: &ModPoint, r: &ModPoint) -> ModPoint {
        let q = self.q;
        let [a1, a2, a3, a4, a6] = self.a;
        let ((x1, y1), (x2, y2)) = match (p, r) {
            (None, _) => return *r,
            (_, None) => return *p,
            (Some(a), Some(b)) => (*a, *b),
        };
        if x1 == x2 && self.neg(p) == *r {
            return None;
        }
        let (lambda, nu) = if x1 == x2 {
            let den = modp::add_mod(modp::add_mod(2 * y1 % q, modp::mul_mod(a1, x1, q), q), a3, q);
            let inv = modp::inv_mod(den, q);
            let num = modp::eval(&[a4, 2 * a2 % q, 3 % q], x1, q);
            let num = modp::sub_mod(num, modp::mul_mod(a1, y1, q), q);
            let x3 = modp::mul_mod(modp::mul_mod(x1, x1, q), x1, q);
            let nnum = modp::add_mod(modp::sub_mod(modp::mul_mod(a4, x1, q), x3, q), 2 * a6 % q, q);
            let nnum = modp::sub_mod(nnum, modp::mul_mod(a3, y1, q), q);
            (modp::mul_mod(num, inv, q), modp::mul_mod(nnum, inv, q))
        } else {
            let inv = modp::inv_mod(modp::sub_mod(x2, x1, q), q);
            let l = modp::mul_mod(modp::sub_mod(y2, y1, q), inv, q);
            let n = modp::mul_mod(modp::sub_mod(modp::mul_mod(y1, x2, q), modp::mul_mod(y2, x1, q), q), inv, q);
            (l, n)
        };
        let x3 = modp::sub_mod(
            modp::sub_mod(modp::add_mod(modp::mul_mod(lambda, lambda, q), modp::mul_mod(a1, lambda, q), q), a2, q),
            modp::add_mod(x1, x2, q),
            q,
        );
        let y3 = modp::sub_mod(
            modp::sub_mod(0, modp::add_mod(modp::mul_mod(modp::add_mod(lambda, a1, q), x3, q), nu, q), q),
            a3,
            q,
        );
        Some((x3, y3))
    }

    pub fn mul(&self, p: &ModPoint, n: u64) -> ModPoint {
        let mut acc = None;
        let mut b = *p;
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &b);
            }
            b = self.add(&b, &b);
            k >>= 1;
        }
        acc
    }

    /// Deterministic pseudo-random affine points.
    pub fn sample_points(&self, count: usize, seed: u64) -> Vec<(u64, u64)> {
        use rand::{Rng, SeedableRng};
        let q = self.q;
        let [a1, a2, a3, a4, a6] = self.a;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ q);
        let b2 = (modp::mul_mod(a1, a1, q) + 4 * a2 % q) % q;
        let b4 = (modp::mul_mod(a1, a3, q) + 2 * a4 % q) % q;
        let b6 = (modp::mul_mod(a3, a3, q) + 4 * a6 % q) % q;
        let f = [b6, 2 * b4 % q, b2, 4 % q];
        let inv2 = modp::inv_mod(2, q);
        let mut out = Vec::new();
        let mut tries = 0;
        while out.len() < count && tries < 100 * count + 1000 {
            tries += 1;
            let x = rng.gen_range(0..q);
            let Some(s) = modp::sqrt_mod(modp::eval(&f, x, q), q) else { continue };
            let lin = modp::add_mod(modp::mul_mod(a1, x, q), a3, q);
            let y = modp::mul_mod(modp::sub_mod(s, lin, q), inv2, q);
            debug_assert!(self.contains(&Some((x, y))));
            out.push((x, y));
        }
        out
    }
}
