//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational::{common_denominator, format_rational};

/// Polynomial with rational coefficients, lowest degree first and no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    coeffs: Vec<BigRational>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(cs: &[BigInt]) -> Self {
        Self::new(cs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `x - a`
    pub fn linear_root(a: &BigRational) -> Self {
        Self::new(vec![-a.clone(), BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(i.into())).collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// `self(g(x))`
    pub fn compose(&self, g: &PolyQ) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * g) + &Self::constant(c.clone()))
    }

    /// `self(a x + b)`
    pub fn substitute_affine(&self, a: &BigRational, b: &BigRational) -> Self {
        self.compose(&Self::new(vec![b.clone(), a.clone()]))
    }

    pub fn divrem(&self, g: &PolyQ) -> (PolyQ, PolyQ) {
        assert!(!g.is_zero(), "division by zero polynomial");
        let dg = g.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dg {
            return (Self::zero(), self.clone());
        }
        let lc = g.leading();
        let mut q = vec![BigRational::zero(); r.len() - dg];
        for d in (dg..r.len()).rev() {
            if r[d].is_zero() {
                continue;
            }
            let c = &r[d] / &lc;
            for (j, b) in g.coeffs.iter().enumerate() {
                r[d - dg + j] -= &c * b;
            }
            q[d - dg] = c;
        }
        r.truncate(dg);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, g: &PolyQ) -> PolyQ {
        self.divrem(g).1
    }

    /// Exact quotient when `g` divides `self`.
    pub fn div_exact(&self, g: &PolyQ) -> Option<PolyQ> {
        let (q, r) = self.divrem(g);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> PolyQ {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        self.scale(&lc.recip())
    }

    pub fn gcd(&self, g: &PolyQ) -> PolyQ {
        let mut a = self.clone();
        let mut b = g.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.to_primitive_q();
        }
        a.monic()
    }

    /// Scales to a primitive integer polynomial with positive leading
    /// coefficient (rescaled but still over `Q`).
    pub fn to_primitive_q(&self) -> PolyQ {
        PolyQ::from_bigints(&self.primitive_integer())
    }

    /// Primitive integer polynomial proportional to `self`, positive
    /// leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = common_denominator(&self.coeffs);
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.iter().map(|c| c / &content * &sign).collect()
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Squarefree part (product of distinct irreducible factors), monic.
    pub fn squarefree_part(&self) -> PolyQ {
        if self.degree().unwrap_or(0) == 0 {
            return Self::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).unwrap().monic()
    }

    /// Distinct rational roots, sorted.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        let mut out: Vec<BigRational> = super::factor::factor_q(self)
            .into_iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .map(|(f, _)| -f.coeff(0) / f.coeff(1))
            .collect();
        out.sort();
        out
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, o: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, o: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, o: &PolyQ) -> PolyQ {
        if self.is_zero() || o.is_zero() {
            return PolyQ::zero();
        }
        let mut r = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                r[i + j] += a * b;
            }
        }
        PolyQ::new(r)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PolyQ {
            type Output = PolyQ;
            fn $m(self, o: PolyQ) -> PolyQ {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&abs))?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, ratio};

    #[test]
    fn arithmetic() {
        let f = PolyQ::from_ints(&[-1, 0, 1]);
        let g = PolyQ::from_ints(&[1, 1]);
        let (q, r) = f.divrem(&g);
        assert_eq!(q, PolyQ::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(f.gcd(&PolyQ::from_ints(&[-1, 1])), PolyQ::from_ints(&[-1, 1]));
        assert_eq!(f.eval(&ratio(1, 2)), ratio(-3, 4));
        assert_eq!(format!("{}", PolyQ::from_ints(&[80, -21, 1])), "x^2 - 21*x + 80");
        assert_eq!(f.compose(&g), PolyQ::from_ints(&[0, 2, 1]));
        assert_eq!(f.substitute_affine(&rat(2), &rat(0)), PolyQ::from_ints(&[-1, 0, 4]));
    }

    #[test]
    fn squarefree_and_roots() {
        let f = &PolyQ::from_ints(&[-1, 1]).pow(3) * &PolyQ::from_ints(&[2, 0, 1]);
        assert_eq!(f.squarefree_part(), PolyQ::from_ints(&[-2, 2, -1, 1]));
        let g = PolyQ::from_ints(&[-6, 1, 1]).scale(&ratio(3, 7));
        assert_eq!(g.rational_roots(), vec![rat(-3), rat(2)]);
    }

    proptest::proptest! {
        #[test]
        fn division_identity(a in proptest::collection::vec(-50i64..50, 1..7), b in proptest::collection::vec(-50i64..50, 1..4)) {
            let f = PolyQ::from_ints(&a);
            let g = PolyQ::from_ints(&b);
            if !g.is_zero() {
                let (q, r) = f.divrem(&g);
                proptest::prop_assert_eq!(&(&q * &g) + &r, f);
                proptest::prop_assert!(r.degree().is_none_or(|d| d < g.degree().unwrap()));
            }
        }
    }
}
