//! Isogenies from kernel polynomials (Vélu, in Kohel's form).

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::divpoly::division_poly;
use crate::arith::intfactor::is_prime_u64;
use crate::arith::modp;
use crate::arith::poly::PolyQ;
use crate::arith::rational::{lvaluation, rat};
use crate::curve::minimal::minimal_model;
use crate::curve::model::{Transform, WeierstrassModel};
use crate::curve::modq::{has_good_model_at, reduce_rational, ModCurve, ModPoint};
use crate::{Error, Result};

/// A rational isogeny `domain → codomain` of odd prime degree.
///
/// On the stored models `X = x_num / K²` and `Y = (y_coeff·y + y_const) / K³`
/// with `K` the kernel polynomial, and the invariant differentials satisfy
/// `φ*ω_codomain = alpha · ω_domain`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isogeny {
    pub domain: WeierstrassModel,
    pub codomain: WeierstrassModel,
    pub degree: u32,
    pub kernel_poly: PolyQ,
    pub x_num: PolyQ,
    pub y_coeff: PolyQ,
    pub y_const: PolyQ,
    pub alpha: BigRational,
}

/// Builds the isogeny with the given kernel, validates it, and moves the
/// codomain to its global minimal model (updating `alpha`).
pub fn velu(m: &WeierstrassModel, kernel_poly: &PolyQ) -> Result<Isogeny> {
    let raw = velu_raw(m, kernel_poly)?;
    raw.validate()?;
    let (_, t) = minimal_model(&raw.codomain);
    let phi = raw.with_codomain_transform(&t);
    phi.validate_mod_primes(3)?;
    Ok(phi)
}

/// Vélu's construction with `alpha = 1`, without validation.
pub fn velu_raw(m: &WeierstrassModel, kernel_poly: &PolyQ) -> Result<Isogeny> {
    let k = kernel_poly.clone();
    let n = k.degree().ok_or_else(|| Error::NotAKernel("zero polynomial".into()))?;
    if n == 0 || k.leading() != BigRational::one() {
        return Err(Error::NotAKernel("kernel polynomial must be monic of positive degree".into()));
    }
    let p = 2 * n as u32 + 1;
    if !is_prime_u64(p as u64) {
        return Err(Error::NotAKernel(format!("degree {p} is not prime")));
    }
    if !division_poly(m, p).rem(&k).is_zero() {
        return Err(Error::NotAKernel("does not divide the division polynomial".into()));
    }
    let c = |i: usize| if i <= n { k.coeff(n - i) } else { BigRational::zero() };
    let s1 = -c(1);
    let s2 = c(2);
    let s3 = -c(3);
    let [b2, b4, b6, _] = m.b_invariants();
    let nn = rat(n as i64);
    let sum2 = &s1 * &s1 - rat(2) * &s2;
    let t = rat(6) * &sum2 + &b2 * &s1 + &nn * &b4;
    let w = rat(10) * (&s1 * &s1 * &s1 - rat(3) * &s1 * &s2 + rat(3) * &s3)
        + rat(2) * &b2 * &sum2
        + rat(3) * &b4 * &s1
        + &nn * &b6;
    let [a1, a2, a3, a4, a6] = m.coeffs().clone();
    let codomain = WeierstrassModel::new(a1.clone(), a2, a3.clone(), a4 - rat(5) * &t, a6 - &b2 * &t - rat(7) * &w)
        .map_err(|_| Error::NotAKernel("singular codomain".into()))?;

    let dk = k.derivative();
    let ddk = dk.derivative();
    let big_b6 = m.two_division_poly();
    let k2 = &k * &k;
    let lin = PolyQ::new(vec![rat(-2) * &s1, rat(p as i64)]);
    let quad = PolyQ::new(vec![b4.clone(), b2.clone(), rat(6)]);
    let x_num = &(&(&lin * &k2) - &(&(&quad * &dk) * &k)) + &(&big_b6 * &(&(&dk * &dk) - &(&k * &ddk)));

    let dp = x_num.derivative();
    let y_coeff = &(&dp * &k) - (&(&x_num * &dk).scale(&rat(2)));
    let lin_a = m.lhs_linear();
    let y_const = (&(&(&y_coeff * &lin_a) - &(&x_num * &k).scale(&a1)) - &(&k2 * &k).scale(&a3))
        .scale(&BigRational::new(1.into(), 2.into()));
    Ok(Isogeny {
        domain: m.clone(),
        codomain,
        degree: p,
        kernel_poly: k,
        x_num,
        y_coeff,
        y_const,
        alpha: BigRational::one(),
    })
}

impl Isogeny {
    /// Half the number of nonzero kernel points.
    pub fn half_kernel_size(&self) -> usize {
        (self.degree as usize - 1) / 2
    }

    /// Checks that the maps satisfy the codomain equation identically.
    pub fn validate(&self) -> Result<()> {
        let k = &self.kernel_poly;
        let (p, r, s) = (&self.x_num, &self.y_coeff, &self.y_const);
        let f = self.domain.rhs();
        let l = self.domain.lhs_linear();
        let [c1, c2, c3, c4, c6] = self.codomain.coeffs();
        let k2 = k * k;
        let k3 = &k2 * k;
        let k4 = &k2 * &k2;
        let k6 = &k3 * &k3;
        let pk = p * k;
        let y_part = &(&(&(r * s).scale(&rat(2)) - &(&(r * r) * &l)) + &(&pk * r).scale(c1)) + &(&k3 * r).scale(c3);
        let c_part = &(&(&(&(&(r * r) * &f) + &(s * s)) + &(&pk * s).scale(c1)) + &(&k3 * s).scale(c3))
            - &(&(&(&p.pow(3) + &(&(p * p) * &k2).scale(c2)) + &(p * &k4).scale(c4)) + &k6.scale(c6));
        if y_part.is_zero() && c_part.is_zero() {
            Ok(())
        } else {
            Err(Error::NotAKernel("maps do not satisfy the codomain equation".into()))
        }
    }

    /// Checks images of sampled points modulo two good primes.
    pub fn validate_mod_primes(&self, points: usize) -> Result<()> {
        for q in self.good_primes(2, 101) {
            let src = ModCurve::reduce(&self.domain, q);
            let dst = ModCurve::reduce(&self.codomain, q);
            for pt in src.sample_points(points, 0x1505) {
                let img = self.image_mod(q, pt).ok_or_else(|| Error::Invariant("map not defined mod q".into()))?;
                if !dst.contains(&img) {
                    return Err(Error::NotAKernel(format!("sampled image off the codomain mod {q}")));
                }
            }
        }
        Ok(())
    }

    /// Primes `q ≥ start` where both models are good and all map
    /// coefficients are `q`-integral.
    pub fn good_primes(&self, count: usize, start: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut q = start;
        while out.len() < count {
            if is_prime_u64(q)
                && has_good_model_at(&self.domain, q)
                && has_good_model_at(&self.codomain, q)
                && [&self.kernel_poly, &self.x_num, &self.y_coeff, &self.y_const]
                    .iter()
                    .all(|f| f.coeffs().iter().all(|c| lvaluation(c, q).is_none_or(|v| v >= 0)))
                && lvaluation(&self.alpha, q) == Some(0)
            {
                out.push(q);
            }
            q += 1;
        }
        out
    }

    /// Image of an affine point mod `q`; `None` if the maps do not reduce.
    pub fn image_mod(&self, q: u64, (x, y): (u64, u64)) -> Option<ModPoint> {
        let red = |f: &PolyQ| -> Option<Vec<u64>> {
            let mut v = Vec::with_capacity(f.coeffs().len());
            for c in f.coeffs() {
                if lvaluation(c, q).is_some_and(|e| e < 0) {
                    return None;
                }
                v.push(reduce_rational(c, q));
            }
            Some(v)
        };
        let kv = modp::eval(&red(&self.kernel_poly)?, x, q);
        if kv == 0 {
            return Some(None);
        }
        let kinv = modp::inv_mod(kv, q);
        let k2 = modp::mul_mod(kinv, kinv, q);
        let k3 = modp::mul_mod(k2, kinv, q);
        let xx = modp::mul_mod(modp::eval(&red(&self.x_num)?, x, q), k2, q);
        let yn = modp::add_mod(
            modp::mul_mod(modp::eval(&red(&self.y_coeff)?, x, q), y, q),
            modp::eval(&red(&self.y_const)?, x, q),
            q,
        );
        Some(Some((xx, modp::mul_mod(yn, k3, q))))
    }

    /// The same isogeny after changing coordinates on the codomain.
    pub fn with_codomain_transform(&self, t: &Transform) -> Isogeny {
        let k = &self.kernel_poly;
        let k2 = k * k;
        let u2 = &t.u * &t.u;
        let u3 = &u2 * &t.u;
        let shifted = &self.x_num - &k2.scale(&t.r);
        let x_num = shifted.scale(&u2.recip());
        let y_coeff = self.y_coeff.scale(&u3.recip());
        let y_const = (&(&self.y_const - &(&shifted * k).scale(&t.s)) - &(&k2 * k).scale(&t.t)).scale(&u3.recip());
        Isogeny {
            domain: self.domain.clone(),
            codomain: self.codomain.transform(t),
            degree: self.degree,
            kernel_poly: k.clone(),
            x_num,
            y_coeff,
            y_const,
            alpha: &self.alpha * &t.u,
        }
    }

    /// The same isogeny after changing coordinates on the domain.
    pub fn with_domain_transform(&self, t: &Transform) -> Isogeny {
        let n = self.half_kernel_size() as i32;
        let u2 = &t.u * &t.u;
        let sub = |f: &PolyQ| f.substitute_affine(&u2, &t.r);
        let upow = |e: i32| num_traits::pow::Pow::pow(&t.u, e);
        let kernel_poly = sub(&self.kernel_poly).scale(&upow(-2 * n));
        let x_num = sub(&self.x_num).scale(&upow(-4 * n));
        let r_sub = sub(&self.y_coeff);
        let y_coeff = r_sub.scale(&upow(3 - 6 * n));
        let lin = PolyQ::new(vec![t.t.clone(), &t.s * &u2]);
        let y_const = (&(&r_sub * &lin) + &sub(&self.y_const)).scale(&upow(-6 * n));
        Isogeny {
            domain: self.domain.transform(t),
            codomain: self.codomain.clone(),
            degree: self.degree,
            kernel_poly,
            x_num,
            y_coeff,
            y_const,
            alpha: &self.alpha / &t.u,
        }
    }

    /// Both models moved to their global minimal models.
    pub fn minimal(&self) -> Isogeny {
        let (_, ta) = minimal_model(&self.domain);
        let (_, tb) = minimal_model(&self.codomain);
        self.with_domain_transform(&ta).with_codomain_transform(&tb)
    }

    /// Rational roots of the kernel polynomial.
    pub fn rational_kernel_abscissas(&self) -> Vec<BigRational> {
        self.kernel_poly.rational_roots()
    }
}
