//! Arithmetic in `F_p` and `F_p[x]` for primes below `2^63`.
//!
//! Polynomials are coefficient vectors, lowest degree first, with no
//! trailing zeros.

use rand::Rng;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        (p - b) + a
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Legendre symbol for odd `p`; for `p = 2` every unit counts as a residue.
pub fn legendre(a: u64, p: u64) -> i32 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if p == 2 {
        return 1;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// A square root of `a` mod an odd prime `p` (Tonelli–Shanks).
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if legendre(a, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while legendre(z, p) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

pub type PolyP = Vec<u64>;

pub fn trim(f: &mut PolyP) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

pub fn degree(f: &[u64]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

pub fn add(f: &[u64], g: &[u64], p: u64) -> PolyP {
    let n = f.len().max(g.len());
    let mut r: PolyP = (0..n).map(|i| add_mod(*f.get(i).unwrap_or(&0), *g.get(i).unwrap_or(&0), p)).collect();
    trim(&mut r);
    r
}

pub fn sub(f: &[u64], g: &[u64], p: u64) -> PolyP {
    let n = f.len().max(g.len());
    let mut r: PolyP = (0..n).map(|i| sub_mod(*f.get(i).unwrap_or(&0), *g.get(i).unwrap_or(&0), p)).collect();
    trim(&mut r);
    r
}

pub fn mul(f: &[u64], g: &[u64], p: u64) -> PolyP {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            r[i + j] = add_mod(r[i + j], mul_mod(a, b, p), p);
        }
    }
    trim(&mut r);
    r
}

pub fn scale(f: &[u64], c: u64, p: u64) -> PolyP {
    let mut r: PolyP = f.iter().map(|&a| mul_mod(a, c, p)).collect();
    trim(&mut r);
    r
}

/// Quotient and remainder; `g` must be nonzero.
pub fn divrem(f: &[u64], g: &[u64], p: u64) -> (PolyP, PolyP) {
    let dg = g.len() - 1;
    let mut r = f.to_vec();
    trim(&mut r);
    if r.len() < g.len() {
        return (Vec::new(), r);
    }
    let inv = inv_mod(g[dg], p);
    let mut q = vec![0u64; r.len() - dg];
    while r.len() >= g.len() {
        let d = r.len() - 1;
        let c = mul_mod(r[d], inv, p);
        q[d - dg] = c;
        for (j, &b) in g.iter().enumerate() {
            r[d - dg + j] = sub_mod(r[d - dg + j], mul_mod(c, b, p), p);
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn rem(f: &[u64], g: &[u64], p: u64) -> PolyP {
    divrem(f, g, p).1
}

pub fn monic(f: &[u64], p: u64) -> PolyP {
    match f.last() {
        None => Vec::new(),
        Some(&lc) => scale(f, inv_mod(lc, p), p),
    }
}

pub fn gcd(f: &[u64], g: &[u64], p: u64) -> PolyP {
    let mut a = f.to_vec();
    let mut b = g.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// Extended gcd: returns `(d, s, t)` with `s f + t g = d`, `d` monic.
pub fn xgcd(f: &[u64], g: &[u64], p: u64) -> (PolyP, PolyP, PolyP) {
    let (mut r0, mut r1) = (f.to_vec(), g.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let lc = *r0.last().unwrap();
    let inv = inv_mod(lc, p);
    (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
}

pub fn derivative(f: &[u64], p: u64) -> PolyP {
    let mut r: PolyP = f.iter().enumerate().skip(1).map(|(i, &c)| mul_mod(c, i as u64 % p, p)).collect();
    trim(&mut r);
    r
}

/// `base^e mod m`.
pub fn powmod_poly(base: &[u64], mut e: u128, m: &[u64], p: u64) -> PolyP {
    let mut result = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    result
}

/// Whether `f` is squarefree over `F_p` (assumes `deg f ≥ 1`).
pub fn is_squarefree(f: &[u64], p: u64) -> bool {
    let d = derivative(f, p);
    if d.is_empty() {
        return false;
    }
    gcd(f, &d, p).len() == 1
}

/// Distinct roots of `f` in `F_p`, sorted.
pub fn roots(f: &[u64], p: u64) -> Vec<u64> {
    let mut f = f.to_vec();
    trim(&mut f);
    if f.is_empty() {
        return (0..p.min(1 << 20)).collect();
    }
    if f.len() == 1 {
        return Vec::new();
    }
    if p < 64 {
        return (0..p).filter(|&x| eval(&f, x, p) == 0).collect();
    }
    let xp = powmod_poly(&[0, 1], p as u128, &f, p);
    let g = gcd(&f, &sub(&xp, &[0, 1], p), p);
    let mut out = Vec::new();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(p);
    split_linear(&g, p, &mut rng, &mut out);
    out.sort_unstable();
    out
}

use rand::SeedableRng;

fn split_linear(g: &[u64], p: u64, rng: &mut impl Rng, out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push(sub_mod(0, mul_mod(g[0], inv_mod(g[1], p), p), p)),
        _ => loop {
            let a = rng.gen_range(0..p);
            let h = powmod_poly(&[a, 1], ((p - 1) / 2) as u128, g, p);
            let d = gcd(g, &sub(&h, &[1], p), p);
            if d.len() > 1 && d.len() < g.len() {
                let other = divrem(g, &d, p).0;
                split_linear(&d, p, rng, out);
                split_linear(&monic(&other, p), p, rng, out);
                return;
            }
        },
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs `(d, product of all degree-d irreducible factors)`.
pub fn ddf(f: &[u64], p: u64) -> Vec<(usize, PolyP)> {
    let mut out = Vec::new();
    let mut f = monic(f, p);
    let mut h = vec![0u64, 1];
    let mut d = 0;
    while f.len() > 1 {
        d += 1;
        if 2 * d > f.len() - 1 {
            let deg = f.len() - 1;
            out.push((deg, f));
            break;
        }
        h = powmod_poly(&h, p as u128, &f, p);
        let g = gcd(&f, &sub(&h, &[0, 1], p), p);
        if g.len() > 1 {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((d, g));
        }
    }
    out
}

/// Equal-degree splitting of a monic squarefree product of degree-`d`
/// irreducibles (Cantor–Zassenhaus, odd `p`; trace map for `p = 2`).
pub fn edf(f: &[u64], d: usize, p: u64, rng: &mut impl Rng) -> Vec<PolyP> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.to_vec()];
    }
    loop {
        let deg = rng.gen_range(1..n);
        let mut a: PolyP = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
        trim(&mut a);
        if a.len() < 2 {
            continue;
        }
        let b = if p == 2 {
            let mut acc = a.clone();
            let mut t = a.clone();
            for _ in 1..d {
                t = rem(&mul(&t, &t, p), f, p);
                acc = add(&acc, &t, p);
            }
            acc
        } else {
            let e = (pow_u128(p, d) - 1) / 2;
            sub(&powmod_poly(&a, e, f, p), &[1], p)
        };
        let g = gcd(f, &b, p);
        if g.len() > 1 && g.len() < f.len() {
            let other = monic(&divrem(f, &g, p).0, p);
            let mut out = edf(&g, d, p, rng);
            out.extend(edf(&other, d, p, rng));
            return out;
        }
    }
}

fn pow_u128(p: u64, d: usize) -> u128 {
    (0..d).fold(1u128, |acc, _| acc.saturating_mul(p as u128))
}

/// Complete factorization of a squarefree polynomial into monic irreducibles.
pub fn factor_squarefree(f: &[u64], p: u64, seed: u64) -> Vec<PolyP> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ p.rotate_left(17));
    let mut out = Vec::new();
    for (d, g) in ddf(f, p) {
        out.extend(edf(&g, d, p, &mut rng));
    }
    out
}
