//! Integral and global minimal models.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::model::{Transform, WeierstrassModel};
use crate::arith::intfactor::factorize;
use crate::arith::rational::{common_denominator, floor, from_int, int_valuation, rat};
use crate::local::tate::tate_with_transform;

/// An integral model reached by pure scaling, together with the scaling.
pub fn integral_model(m: &WeierstrassModel) -> (WeierstrassModel, Transform) {
    let den = common_denominator(m.coeffs());
    if den.is_one() {
        return (m.clone(), Transform::identity());
    }
    // smallest D with D^i a_i integral
    let mut scale = BigInt::one();
    for (p, _) in factorize(&den) {
        let pu = p.to_u64().expect("denominator prime exceeds 64 bits");
        let mut e = 0u32;
        for (c, w) in m.coeffs().iter().zip([1u32, 2, 3, 4, 6]) {
            let v = int_valuation(c.denom(), pu).unwrap();
            e = e.max(v.div_ceil(w));
        }
        scale *= p.pow(e);
    }
    let t = Transform::scaling(BigRational::new(BigInt::one(), scale));
    let im = m.transform(&t);
    debug_assert!(im.is_integral());
    (im, t)
}

/// Global minimal model in reduced form (`a1, a3 ∈ {0,1}`,
/// `a2 ∈ {-1,0,1}`) and the transform carrying `m` to it.
pub fn minimal_model(m: &WeierstrassModel) -> (WeierstrassModel, Transform) {
    let (mut cur, mut acc) = integral_model(m);
    let disc = cur.discriminant().to_integer();
    for (p, e) in factorize(&disc) {
        if e < 12 {
            continue;
        }
        let l = p.to_u64().expect("discriminant prime exceeds 64 bits");
        let (_, t) = tate_with_transform(&cur, l);
        cur = cur.transform(&t);
        acc = acc.then(&t);
    }
    let t = reduction_transform(&cur);
    (cur.transform(&t), acc.then(&t))
}

/// The integral `[1, r, s, t]` bringing an integral model to reduced form.
pub fn reduction_transform(m: &WeierstrassModel) -> Transform {
    let [a1, a2, a3, _, _] = m.coeffs();
    let s = -floor(&(a1 / rat(2)));
    let sq = from_int(s.clone());
    let big_a = a2 - &sq * a1 - &sq * &sq;
    let r = -floor(&((big_a + rat(1)) / rat(3)));
    let rq = from_int(r);
    let t = -floor(&((a3 + &rq * a1) / rat(2)));
    Transform::new(rat(1), rq, sq, from_int(t))
}

/// Whether the model is integral, minimal at every prime and reduced.
pub fn is_reduced_minimal(m: &WeierstrassModel) -> bool {
    m.is_integral() && minimal_model(m).0 == *m
}

/// `Δ` of the global minimal model.
pub fn minimal_discriminant(m: &WeierstrassModel) -> BigInt {
    minimal_model(m).0.discriminant().to_integer()
}

/// Conductor from local data at the primes of the minimal discriminant.
pub fn conductor(m: &WeierstrassModel) -> BigInt {
    let (min, _) = minimal_model(m);
    let disc = min.discriminant().to_integer();
    let mut n = BigInt::one();
    for (p, _) in factorize(&disc) {
        let l = p.to_u64().unwrap();
        let f = crate::local::local_data(&min, l).conductor_exponent;
        n *= p.pow(f);
    }
    n.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;

    #[test]
    fn already_minimal_is_fixed() {
        let m = WeierstrassModel::from_ints([0, -1, 1, -10, -20]).unwrap();
        let (mm, t) = minimal_model(&m);
        assert_eq!(mm, m);
        assert!(t.is_identity());
    }

    #[test]
    fn scaled_model_recovers_u() {
        let m = WeierstrassModel::from_ints([1, -1, 1, -3, 3]).unwrap();
        let scaled = m.transform(&Transform::scaling(ratio(1, 2)));
        let (mm, t) = minimal_model(&scaled);
        assert_eq!(mm, m);
        assert_eq!(t.u, rat(2));
        assert_eq!(scaled.discriminant() / mm.discriminant(), rat(4096));
        let fractional = m.transform(&Transform::new(ratio(3, 1), ratio(1, 3), ratio(-1, 2), ratio(7, 5)));
        assert_eq!(minimal_model(&fractional).0, m);
    }

    #[test]
    fn conductors() {
        let cases: [([i64; 5], i64); 4] =
            [([0, -1, 1, -10, -20], 11), ([1, -1, 1, -3, 3], 26), ([0, 0, 0, 0, 1], 36), ([0, 0, 1, 0, -7], 27)];
        for (a, n) in cases {
            assert_eq!(conductor(&WeierstrassModel::from_ints(a).unwrap()), BigInt::from(n), "{a:?}");
        }
    }
}
