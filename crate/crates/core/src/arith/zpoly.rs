//! Integer polynomial helpers used by factorization and `ℓ`-adic root
//! counting. Polynomials are `Vec<BigInt>`, lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type ZPoly = Vec<BigInt>;

pub fn trim(f: &mut ZPoly) {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
}

pub fn content(f: &[BigInt]) -> BigInt {
    f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub fn primitive(f: &[BigInt]) -> ZPoly {
    let mut g = f.to_vec();
    trim(&mut g);
    if g.is_empty() {
        return g;
    }
    let mut c = content(&g);
    if g.last().unwrap().is_negative() {
        c = -c;
    }
    g.iter().map(|a| a / &c).collect()
}

pub fn mul(f: &[BigInt], g: &[BigInt]) -> ZPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            r[i + j] += a * b;
        }
    }
    trim(&mut r);
    r
}

pub fn sub(f: &[BigInt], g: &[BigInt]) -> ZPoly {
    let n = f.len().max(g.len());
    let z = BigInt::zero();
    let mut r: ZPoly = (0..n).map(|i| f.get(i).unwrap_or(&z) - g.get(i).unwrap_or(&z)).collect();
    trim(&mut r);
    r
}

pub fn add(f: &[BigInt], g: &[BigInt]) -> ZPoly {
    let n = f.len().max(g.len());
    let z = BigInt::zero();
    let mut r: ZPoly = (0..n).map(|i| f.get(i).unwrap_or(&z) + g.get(i).unwrap_or(&z)).collect();
    trim(&mut r);
    r
}

pub fn scale(f: &[BigInt], c: &BigInt) -> ZPoly {
    let mut r: ZPoly = f.iter().map(|a| a * c).collect();
    trim(&mut r);
    r
}

/// Coefficients reduced into `[0, m)`.
pub fn reduce(f: &[BigInt], m: &BigInt) -> ZPoly {
    let mut r: ZPoly = f.iter().map(|a| a.mod_floor(m)).collect();
    trim(&mut r);
    r
}

/// Coefficients reduced into `(-m/2, m/2]`.
pub fn sym_mod(f: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut r: ZPoly = f
        .iter()
        .map(|a| {
            let b = a.mod_floor(m);
            if b > half {
                b - m
            } else {
                b
            }
        })
        .collect();
    trim(&mut r);
    r
}

pub fn to_modp(f: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut r: Vec<u64> = f.iter().map(|a| a.mod_floor(&pb).to_u64().unwrap()).collect();
    super::modp::trim(&mut r);
    r
}

pub fn from_modp(f: &[u64]) -> ZPoly {
    f.iter().map(|&a| BigInt::from(a)).collect()
}

/// Exact division over `Z`, `None` if `g` does not divide `f` in `Z[x]`.
pub fn div_exact(f: &[BigInt], g: &[BigInt]) -> Option<ZPoly> {
    let mut r = f.to_vec();
    trim(&mut r);
    let dg = g.len().checked_sub(1)?;
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() <= dg {
        return None;
    }
    let lc = &g[dg];
    let mut q = vec![BigInt::zero(); r.len() - dg];
    for d in (dg..r.len()).rev() {
        if r[d].is_zero() {
            continue;
        }
        let (c, rem) = r[d].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for (j, b) in g.iter().enumerate() {
            r[d - dg + j] -= &c * b;
        }
        q[d - dg] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

/// `f(x + a)`
pub fn taylor_shift(f: &[BigInt], a: &BigInt) -> ZPoly {
    let mut r = f.to_vec();
    let n = r.len();
    for i in 0..n {
        for j in (i..n.saturating_sub(1)).rev() {
            let t = &r[j + 1] * a;
            r[j] += t;
        }
    }
    trim(&mut r);
    r
}

/// `f(c x)`
pub fn scale_var(f: &[BigInt], c: &BigInt) -> ZPoly {
    let mut pw = BigInt::one();
    let mut r = Vec::with_capacity(f.len());
    for a in f {
        r.push(a * &pw);
        pw *= c;
    }
    trim(&mut r);
    r
}

pub fn reverse(f: &[BigInt]) -> ZPoly {
    let mut r: ZPoly = f.iter().rev().cloned().collect();
    trim(&mut r);
    r
}

pub fn eval(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

pub fn derivative(f: &[BigInt]) -> ZPoly {
    let mut r: ZPoly = f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    trim(&mut r);
    r
}

/// Ceiling of the Euclidean norm.
pub fn norm2_ceil(f: &[BigInt]) -> BigInt {
    let s: BigInt = f.iter().map(|c| c * c).sum();
    let r = s.sqrt();
    if &r * &r == s {
        r
    } else {
        r + 1
    }
}
