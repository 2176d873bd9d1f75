//! Helpers around [`BigRational`], which serves as the crate's exact
//! rational type.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number with positive denominator in lowest terms.
pub type RationalQ = BigRational;

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_int(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `ℓ`-adic valuation of a nonzero integer.
pub fn int_valuation(n: &BigInt, l: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let l = BigInt::from(l);
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&l);
        if !r.is_zero() {
            return Some(v);
        }
        m = q;
        v += 1;
    }
}

/// Removes every factor `ℓ` from `n`, returning the valuation and the
/// cofactor.
pub fn split_valuation(n: &BigInt, l: u64) -> (u32, BigInt) {
    let lb = BigInt::from(l);
    let mut v = 0;
    let mut m = n.clone();
    if m.is_zero() {
        return (0, m);
    }
    loop {
        let (q, r) = m.div_rem(&lb);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

/// `v_ℓ(q)`, with `None` standing for `+∞` when `q = 0`.
pub fn lvaluation(q: &BigRational, l: u64) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    let vn = int_valuation(q.numer(), l)? as i64;
    let vd = int_valuation(q.denom(), l)? as i64;
    Some(vn - vd)
}

/// Exact square root of a nonnegative integer, when it is a perfect square.
pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    let n = int_sqrt_exact(q.numer())?;
    let d = int_sqrt_exact(q.denom())?;
    Some(BigRational::new(n, d))
}

pub fn is_rational_square(q: &BigRational) -> bool {
    rational_sqrt(q).is_some()
}

/// Whether a nonzero rational is a square in `Q_ℓ`.
pub fn is_square_in_ql(q: &BigRational, l: u64) -> bool {
    if q.is_zero() {
        return true;
    }
    let v = lvaluation(q, l).unwrap();
    if v % 2 != 0 {
        return false;
    }
    let (_, un) = split_valuation(q.numer(), l);
    let (_, ud) = split_valuation(q.denom(), l);
    // the unit part u = un / ud; squareness only depends on u·ud² = un·ud
    let u = un * ud;
    is_unit_square(&u, l)
}

/// Whether an integer prime to `ℓ` is a square in `Z_ℓ`.
pub fn is_unit_square(u: &BigInt, l: u64) -> bool {
    if l == 2 {
        let r = u.mod_floor(&BigInt::from(8)).to_u64().unwrap();
        r == 1
    } else {
        let r = u.mod_floor(&BigInt::from(l)).to_u64().unwrap();
        super::modp::legendre(r, l) == 1
    }
}

/// Floor of a rational.
pub fn floor(q: &BigRational) -> BigInt {
    q.numer().div_floor(q.denom())
}

pub fn sign(q: &BigRational) -> i32 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Parses an integer or a fraction `a/b`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let valid = |t: &str| {
        let t = t.strip_prefix(['-', '+']).unwrap_or(t);
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    match s.split_once('/') {
        Some((n, d)) => {
            if !valid(n) || !d.bytes().all(|b| b.is_ascii_digit()) || d.is_empty() {
                return None;
            }
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            if !valid(s) {
                return None;
            }
            Some(BigRational::from_integer(s.parse().ok()?))
        }
    }
}

/// Renders a rational as `n` or `n/d`.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn pow(q: &BigRational, e: i32) -> BigRational {
    num_traits::pow::Pow::pow(q, e)
}

/// `lcm` of the denominators of a list of rationals.
pub fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
