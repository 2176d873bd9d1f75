//! Tate's algorithm.
//!
//! Each coordinate change is computed by a closed formula for `ℓ ≥ 5`
//! and by a residue search for `ℓ ∈ {2, 3}`; the divisibility conditions
//! it must achieve are asserted either way.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::modp;
use crate::arith::rational::{from_int, int_valuation};
use crate::curve::minimal::integral_model;
use crate::curve::model::{Transform, WeierstrassModel};

/// Kodaira symbol of the special fibre.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kodaira {
    I0,
    I(u32),
    II,
    III,
    IV,
    I0Star,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl Kodaira {
    /// Number of irreducible components of the special fibre.
    pub fn components(&self) -> u32 {
        match *self {
            Kodaira::I0 | Kodaira::II => 1,
            Kodaira::I(n) => n,
            Kodaira::III => 2,
            Kodaira::IV => 3,
            Kodaira::I0Star => 5,
            Kodaira::IStar(n) => n + 5,
            Kodaira::IVStar => 7,
            Kodaira::IIIStar => 8,
            Kodaira::IIStar => 9,
        }
    }
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I0 => write!(f, "I0"),
            Kodaira::I(n) => write!(f, "I{n}"),
            Kodaira::II => write!(f, "II"),
            Kodaira::III => write!(f, "III"),
            Kodaira::IV => write!(f, "IV"),
            Kodaira::I0Star => write!(f, "I0*"),
            Kodaira::IStar(n) => write!(f, "I{n}*"),
            Kodaira::IVStar => write!(f, "IV*"),
            Kodaira::IIIStar => write!(f, "III*"),
            Kodaira::IIStar => write!(f, "II*"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reduction {
    Good,
    SplitMultiplicative,
    NonsplitMultiplicative,
    Additive,
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reduction::Good => "good",
            Reduction::SplitMultiplicative => "split",
            Reduction::NonsplitMultiplicative => "nonsplit",
            Reduction::Additive => "additive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalData {
    pub prime: u64,
    pub kodaira: Kodaira,
    pub tamagawa: u32,
    pub vdisc_min: u32,
    pub reduction: Reduction,
    pub conductor_exponent: u32,
}

impl LocalData {
    /// Checks the Kodaira/Tamagawa compatibility table.
    pub fn is_consistent(&self) -> bool {
        let c = self.tamagawa;
        let type_ok = match (self.kodaira, self.reduction) {
            (Kodaira::I0, Reduction::Good) => c == 1 && self.vdisc_min == 0,
            (Kodaira::I(n), Reduction::SplitMultiplicative) => c == n && self.vdisc_min == n,
            (Kodaira::I(n), Reduction::NonsplitMultiplicative) => {
                c == if n % 2 == 0 { 2 } else { 1 } && self.vdisc_min == n
            }
            (Kodaira::II | Kodaira::IIStar, Reduction::Additive) => c == 1,
            (Kodaira::III | Kodaira::IIIStar, Reduction::Additive) => c == 2,
            (Kodaira::IV | Kodaira::IVStar, Reduction::Additive) => c == 1 || c == 3,
            (Kodaira::I0Star, Reduction::Additive) => (1..=4).contains(&c) && c != 3,
            (Kodaira::IStar(_), Reduction::Additive) => c == 2 || c == 4,
            _ => false,
        };
        let cond_ok = match self.reduction {
            Reduction::Good => self.conductor_exponent == 0,
            Reduction::SplitMultiplicative | Reduction::NonsplitMultiplicative => self.conductor_exponent == 1,
            Reduction::Additive => self.conductor_exponent >= 2,
        };
        type_ok && cond_ok
    }
}

/// Local data at `ℓ`; the model need not be integral or minimal.
pub fn tate(m: &WeierstrassModel, l: u64) -> LocalData {
    tate_with_transform(m, l).0
}

/// Local data at `ℓ` and a transform from `m` to a model that is minimal
/// at `ℓ`. The transform has `u` a power of `ℓ` times the global
/// integralizing factor and integral `r, s, t` after integralization, so
/// it does not change valuations at other primes of an integral model.
pub fn tate_with_transform(m: &WeierstrassModel, l: u64) -> (LocalData, Transform) {
    let (im, tr0) = integral_model(m);
    let mut w = Work::new(&im, l);
    let data = w.run();
    assert!(data.is_consistent(), "inconsistent local data {data:?}");
    (data, tr0.then(&w.tr))
}

struct Work {
    a: [BigInt; 5],
    l: u64,
    lb: BigInt,
    tr: Transform,
}

const INFINITE: u32 = u32::MAX / 4;

impl Work {
    fn new(m: &WeierstrassModel, l: u64) -> Self {
        Work { a: m.integer_coeffs(), l, lb: BigInt::from(l), tr: Transform::identity() }
    }

    fn val(&self, x: &BigInt) -> u32 {
        int_valuation(x, self.l).unwrap_or(INFINITE)
    }

    fn res(&self, x: &BigInt) -> u64 {
        x.mod_floor(&self.lb).to_u64().unwrap()
    }

    fn pw(&self, e: u32) -> BigInt {
        self.lb.pow(e)
    }

    fn divides(&self, e: u32, x: &BigInt) -> bool {
        (x % self.pw(e)).is_zero()
    }

    fn b(&self) -> [BigInt; 4] {
        let [a1, a2, a3, a4, a6] = &self.a;
        [
            a1 * a1 + 4 * a2,
            a1 * a3 + 2 * a4,
            a3 * a3 + 4 * a6,
            a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4,
        ]
    }

    fn disc(&self) -> BigInt {
        let [b2, b4, b6, b8] = self.b();
        -&b2 * &b2 * &b8 - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6 + 9 * &b2 * &b4 * &b6
    }

    fn c4c6(&self) -> (BigInt, BigInt) {
        let [b2, b4, b6, _] = self.b();
        (&b2 * &b2 - 24 * &b4, -&b2 * &b2 * &b2 + 36 * &b2 * &b4 - 216 * &b6)
    }

    fn transformed(&self, r: &BigInt, s: &BigInt, t: &BigInt) -> [BigInt; 5] {
        let [a1, a2, a3, a4, a6] = &self.a;
        [
            a1 + 2 * s,
            a2 - s * a1 + 3 * r - s * s,
            a3 + r * a1 + 2 * t,
            a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
            a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1,
        ]
    }

    fn apply(&mut self, r: BigInt, s: BigInt, t: BigInt) {
        self.a = self.transformed(&r, &s, &t);
        let step = Transform::new(num_rational::BigRational::one(), from_int(r), from_int(s), from_int(t));
        self.tr = self.tr.then(&step);
    }

    /// Divides `a_i` by `ℓ^i`.
    fn rescale(&mut self) {
        for (i, e) in [1u32, 2, 3, 4, 6].into_iter().enumerate() {
            let q = self.pw(e);
            assert!((&self.a[i] % &q).is_zero());
            self.a[i] = &self.a[i] / q;
        }
        let step = Transform::scaling(from_int(self.lb.clone()));
        self.tr = self.tr.then(&step);
    }

    /// Searches residue shifts `(r, s, t)`, each a multiple of the given
    /// scales, until `ok` holds for the transformed coefficients.
    fn search(&self, scale: [Option<BigInt>; 3], ok: impl Fn(&Self, &[BigInt; 5]) -> bool) -> (BigInt, BigInt, BigInt) {
        let l = self.l as i64;
        let range = |sc: &Option<BigInt>| -> Vec<BigInt> {
            match sc {
                None => vec![BigInt::zero()],
                Some(m) => (0..l).map(|k| m * k).collect(),
            }
        };
        for r in range(&scale[0]) {
            for s in range(&scale[1]) {
                for t in range(&scale[2]) {
                    if ok(self, &self.transformed(&r, &s, &t)) {
                        return (r, s, t);
                    }
                }
            }
        }
        panic!("no residue transform found at {}", self.l);
    }

    fn has_root(&self, coeffs: &[&BigInt]) -> bool {
        let f: Vec<u64> = coeffs.iter().map(|c| self.res(c)).collect();
        let mut f = f;
        modp::trim(&mut f);
        !modp::roots(&f, self.l).is_empty()
    }

    fn count_roots(&self, coeffs: &[&BigInt]) -> u32 {
        let mut f: Vec<u64> = coeffs.iter().map(|c| self.res(c)).collect();
        modp::trim(&mut f);
        modp::roots(&f, self.l).len() as u32
    }

    fn run(&mut self) -> LocalData {
        let l = self.l;
        let lb = self.lb.clone();
        let small = l < 5;
        let zero = BigInt::zero;
        loop {
            let disc = self.disc();
            let n = self.val(&disc);
            if n == 0 {
                return self.finish(Kodaira::I0, 1, 0, Reduction::Good);
            }
            // move the singular point to (0, 0)
            let (r, t) = if small {
                let (r, _, t) = self.search([Some(BigInt::one()), None, Some(BigInt::one())], |w, a| {
                    w.divides(1, &a[2]) && w.divides(1, &a[3]) && w.divides(1, &a[4])
                });
                (r, t)
            } else {
                let (c4, c6) = self.c4c6();
                let b2 = self.b()[0].clone();
                let r = if self.divides(1, &c4) {
                    let x = modp::mul_mod(modp::sub_mod(0, self.res(&b2), l), modp::inv_mod(12 % l, l), l);
                    BigInt::from(x)
                } else {
                    let num = self.res(&(&c6 + &b2 * &c4));
                    let den = modp::mul_mod(12 % l, self.res(&c4), l);
                    BigInt::from(modp::mul_mod(modp::sub_mod(0, num, l), modp::inv_mod(den, l), l))
                };
                let half = l.div_ceil(2);
                let v = self.res(&(&self.a[0] * &r + &self.a[2]));
                let t = BigInt::from(modp::mul_mod(modp::sub_mod(0, v, l), half, l));
                (r, t)
            };
            self.apply(r, zero(), t);
            assert!(self.divides(1, &self.a[2]) && self.divides(1, &self.a[3]) && self.divides(1, &self.a[4]));

            let (c4, _) = self.c4c6();
            if !self.divides(1, &c4) {
                // multiplicative
                let [a1, a2, ..] = &self.a;
                let split = self.has_root(&[&-a2, a1, &BigInt::one()]);
                let (c, red) = if split {
                    (n, Reduction::SplitMultiplicative)
                } else {
                    (if n.is_multiple_of(2) { 2 } else { 1 }, Reduction::NonsplitMultiplicative)
                };
                return self.finish(Kodaira::I(n), c, n, red);
            }
            if self.val(&self.a[4]) < 2 {
                return self.finish(Kodaira::II, 1, n, Reduction::Additive);
            }
            let [_, _, b6, b8] = self.b();
            if self.val(&b8) < 3 {
                return self.finish(Kodaira::III, 2, n, Reduction::Additive);
            }
            if self.val(&b6) < 3 {
                let a3t = &self.a[2] / &lb;
                let a6t = &self.a[4] / self.pw(2);
                let c = if self.has_root(&[&-a6t, &a3t, &BigInt::one()]) { 3 } else { 1 };
                return self.finish(Kodaira::IV, c, n, Reduction::Additive);
            }
            // ℓ | a1, a2; ℓ² | a3, a4; ℓ³ | a6
            let cond6 = |w: &Self, a: &[BigInt; 5]| {
                w.divides(1, &a[0])
                    && w.divides(1, &a[1])
                    && w.divides(2, &a[2])
                    && w.divides(2, &a[3])
                    && w.divides(3, &a[4])
            };
            let (s, t) = if small {
                let (_, s, t) = self.search([None, Some(BigInt::one()), Some(lb.clone())], cond6);
                (s, t)
            } else {
                let half = l.div_ceil(2);
                let s = modp::mul_mod(modp::sub_mod(0, self.res(&self.a[0]), l), half, l);
                let a3t = &self.a[2] / &lb;
                let t = modp::mul_mod(modp::sub_mod(0, self.res(&a3t), l), half, l);
                (BigInt::from(s), &lb * t)
            };
            self.apply(zero(), s, t);
            assert!(cond6(self, &self.a));

            let b = &self.a[1] / &lb;
            let c = &self.a[3] / self.pw(2);
            let d = &self.a[4] / self.pw(3);
            let wdisc = 27 * &d * &d - &b * &b * &c * &c + 4 * &b * &b * &b * &d - 18 * &b * &c * &d + 4 * &c * &c * &c;
            let x = 3 * &c - &b * &b;
            if !self.divides(1, &wdisc) {
                let cp = 1 + self.count_roots(&[&d, &c, &b, &BigInt::one()]);
                return self.finish(Kodaira::I0Star, cp, n, Reduction::Additive);
            }
            if !self.divides(1, &x) {
                return self.istar(n);
            }
            // triple root
            let cond_triple =
                |w: &Self, a: &[BigInt; 5]| w.divides(2, &a[1]) && w.divides(3, &a[3]) && w.divides(4, &a[4]);
            let r = if small {
                self.search([Some(lb.clone()), None, None], cond_triple).0
            } else {
                let rr = modp::mul_mod(modp::sub_mod(0, self.res(&b), l), modp::inv_mod(3, l), l);
                &lb * rr
            };
            self.apply(r, zero(), zero());
            assert!(cond_triple(self, &self.a));
            let x3 = &self.a[2] / self.pw(2);
            let x6 = &self.a[4] / self.pw(4);
            if !self.divides(1, &(&x3 * &x3 + 4 * &x6)) {
                let c = if self.has_root(&[&-&x6, &x3, &BigInt::one()]) { 3 } else { 1 };
                return self.finish(Kodaira::IVStar, c, n, Reduction::Additive);
            }
            let cond_t = |w: &Self, a: &[BigInt; 5]| w.divides(3, &a[2]) && w.divides(5, &a[4]);
            let t = if small {
                self.search([None, None, Some(self.pw(2))], cond_t).2
            } else {
                let half = l.div_ceil(2);
                self.pw(2) * modp::mul_mod(modp::sub_mod(0, self.res(&x3), l), half, l)
            };
            self.apply(zero(), zero(), t);
            assert!(cond_t(self, &self.a));
            if self.val(&self.a[3]) < 4 {
                return self.finish(Kodaira::IIIStar, 2, n, Reduction::Additive);
            }
            if self.val(&self.a[4]) < 6 {
                return self.finish(Kodaira::IIStar, 1, n, Reduction::Additive);
            }
            self.rescale();
        }
    }

    /// The `In*` branch, entered with the cubic having a double root.
    fn istar(&mut self, n_disc: u32) -> LocalData {
        let l = self.l;
        let lb = self.lb.clone();
        let small = l < 5;
        let zero = BigInt::zero;
        let b = &self.a[1] / &lb;
        let c = &self.a[3] / self.pw(2);
        let d = &self.a[4] / self.pw(3);
        // move the double root to 0
        let cond = |w: &Self, a: &[BigInt; 5]| w.divides(3, &a[3]) && w.divides(4, &a[4]);
        let r = if small {
            self.search([Some(lb.clone()), None, None], cond).0
        } else {
            let x = 3 * &c - &b * &b;
            let num = self.res(&(&b * &c - 9 * &d));
            let den = modp::mul_mod(2, self.res(&x), l);
            &lb * modp::mul_mod(num, modp::inv_mod(den, l), l)
        };
        self.apply(r, zero(), zero());
        assert!(cond(self, &self.a));

        let mut ix = 3u32;
        let mut iy = 3u32;
        let mut mx = self.pw(2);
        let mut my = self.pw(2);
        let cp;
        loop {
            let a3t = &self.a[2] / &my;
            let a6t = &self.a[4] / (&mx * &my);
            if !self.divides(1, &(&a3t * &a3t + 4 * &a6t)) {
                cp = if self.has_root(&[&-&a6t, &a3t, &BigInt::one()]) { 4 } else { 2 };
                break;
            }
            let cond_y = {
                let (mx, my) = (mx.clone(), my.clone());
                move |w: &Self, a: &[BigInt; 5]| {
                    (&a[2] % (&my * &w.lb)).is_zero() && (&a[4] % (&mx * &my * &w.lb)).is_zero()
                }
            };
            let t = if small {
                self.search([None, None, Some(my.clone())], &cond_y).2
            } else {
                let half = l.div_ceil(2);
                &my * modp::mul_mod(modp::sub_mod(0, self.res(&a3t), l), half, l)
            };
            self.apply(zero(), zero(), t);
            assert!(cond_y(self, &self.a));
            my *= &lb;
            iy += 1;

            let a2t = &self.a[1] / &lb;
            let a4t2 = &self.a[3] / (&lb * &mx);
            let a6t = &self.a[4] / (&mx * &my);
            if !self.divides(1, &(&a4t2 * &a4t2 - 4 * &a6t * &a2t)) {
                cp = if self.has_root(&[&a6t, &a4t2, &a2t]) { 4 } else { 2 };
                break;
            }
            let cond_x = {
                let (mx, my) = (mx.clone(), my.clone());
                move |w: &Self, a: &[BigInt; 5]| {
                    (&a[3] % (&mx * &w.lb * &w.lb)).is_zero() && (&a[4] % (&mx * &my * &w.lb)).is_zero()
                }
            };
            let r = if small {
                self.search([Some(mx.clone()), None, None], &cond_x).0
            } else {
                let num = modp::sub_mod(0, self.res(&a4t2), l);
                let den = modp::mul_mod(2, self.res(&a2t), l);
                &mx * modp::mul_mod(num, modp::inv_mod(den, l), l)
            };
            self.apply(r, zero(), zero());
            assert!(cond_x(self, &self.a));
            mx *= &lb;
            ix += 1;
        }
        let n = ix + iy - 5;
        self.finish(Kodaira::IStar(n), cp, n_disc, Reduction::Additive)
    }

    fn finish(&self, kodaira: Kodaira, tamagawa: u32, vdisc: u32, reduction: Reduction) -> LocalData {
        let conductor_exponent = match reduction {
            Reduction::Good => 0,
            Reduction::SplitMultiplicative | Reduction::NonsplitMultiplicative => 1,
            Reduction::Additive => vdisc + 1 - kodaira.components(),
        };
        LocalData { prime: self.l, kodaira, tamagawa, vdisc_min: vdisc, reduction, conductor_exponent }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(a: [i64; 5], l: u64) -> (Kodaira, u32, Reduction) {
        let d = tate(&WeierstrassModel::from_ints(a).unwrap(), l);
        (d.kodaira, d.tamagawa, d.reduction)
    }

    #[test]
    fn multiplicative_examples() {
        use Reduction::*;
        assert_eq!(data([0, 0, 0, 0, 1], 5), (Kodaira::I0, 1, Good));
        assert_eq!(data([0, -1, 1, -10, -20], 11), (Kodaira::I(5), 5, SplitMultiplicative));
        assert_eq!(data([0, 1, 1, -9, -15], 19), (Kodaira::I(3), 3, SplitMultiplicative));
        assert_eq!(data([0, 0, 1, -1, 0], 37), (Kodaira::I(1), 1, NonsplitMultiplicative));
    }
}
