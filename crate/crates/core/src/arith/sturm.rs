//! Real root counting and isolation with Sturm sequences over exact
//! rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::PolyQ;
use super::rational::sign;

/// Sturm sequence of `f`.
pub struct Sturm {
    seq: Vec<PolyQ>,
}

impl Sturm {
    pub fn new(f: &PolyQ) -> Self {
        let mut seq = vec![f.clone(), f.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            // positive rescaling keeps the sign pattern
            let r = -&r;
            let scaled = r.primitive_integer();
            let sgn = if r.leading().is_negative() { -1 } else { 1 };
            let mut q = PolyQ::from_bigints(&scaled);
            if sgn < 0 {
                q = -&q;
            }
            seq.push(q);
        }
        Sturm { seq }
    }

    fn variations(&self, signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        self.variations(self.seq.iter().map(|p| sign(&p.eval(x))))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        self.variations(self.seq.iter().map(|p| {
            let s = sign(&p.leading());
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct real roots in the half-open interval `(a, b]`.
    pub fn count_between(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

/// Number of distinct real roots; 0 for zero or constant input.
pub fn count_real_roots(f: &PolyQ) -> usize {
    if f.degree().unwrap_or(0) == 0 {
        return 0;
    }
    Sturm::new(f).count_all()
}

/// A real root isolated in `[lo, hi]`; `lo == hi` for an exact rational root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub lo: BigRational,
    pub hi: BigRational,
}

/// Bound on the absolute value of every root (Cauchy).
fn root_bound(f: &PolyQ) -> BigRational {
    let lc = f.leading().abs();
    let m = f.coeffs().iter().map(|c| c.abs()).max().unwrap();
    BigRational::one() + m / lc
}

/// Isolating intervals for the distinct real roots of `f`, ascending.
pub fn isolate_real_roots(f: &PolyQ) -> Vec<IsolatedRoot> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let f = f.squarefree_part();
    let sturm = Sturm::new(&f);
    let b = root_bound(&f);
    let mut out = Vec::new();
    let two = BigRational::from_integer(BigInt::from(2));
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = sturm.count_between(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(IsolatedRoot { lo, hi });
            continue;
        }
        let mid = (&lo + &hi) / &two;
        if f.eval(&mid).is_zero() {
            out.push(IsolatedRoot { lo: mid.clone(), hi: mid.clone() });
            // step off the exact root so no interval counts it again
            let mut delta = (&hi - &mid) / &two;
            loop {
                let a = &mid - &delta;
                let b = &mid + &delta;
                if sturm.count_between(&a, &b) == 1 && !f.eval(&a).is_zero() && !f.eval(&b).is_zero() {
                    stack.push((lo, a));
                    stack.push((b, hi));
                    break;
                }
                delta /= &two;
            }
            continue;
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    // an interval (lo, hi] with n = 1 may have its root exactly at hi
    for r in &mut out {
        if r.lo != r.hi && f.eval(&r.hi).is_zero() {
            r.lo = r.hi.clone();
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out.dedup();
    out
}

/// Sign of `g` at every real root of `f`, in ascending root order.
pub fn signs_at_real_roots(f: &PolyQ, g: &PolyQ) -> Vec<i32> {
    let f = f.squarefree_part();
    let common = f.gcd(g);
    let sturm_f = Sturm::new(&f);
    let two = BigRational::from_integer(BigInt::from(2));
    isolate_real_roots(&f)
        .into_iter()
        .map(|IsolatedRoot { mut lo, mut hi }| {
            if lo == hi {
                return sign(&g.eval(&lo));
            }
            // roots shared with g give sign 0
            if common.degree().unwrap_or(0) > 0 && Sturm::new(&common).count_between(&lo, &hi) == 1 {
                return 0;
            }
            let sturm_g = if g.degree().unwrap_or(0) > 0 { Some(Sturm::new(&g.squarefree_part())) } else { None };
            loop {
                let clear = match &sturm_g {
                    None => true,
                    Some(s) => s.count_between(&lo, &hi) == 0 && !g.eval(&lo).is_zero(),
                };
                if clear {
                    return sign(&g.eval(&hi));
                }
                let mid = (&lo + &hi) / &two;
                if f.eval(&mid).is_zero() {
                    return sign(&g.eval(&mid));
                }
                if sturm_f.count_between(&lo, &mid) == 1 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    fn p(cs: &[i64]) -> PolyQ {
        PolyQ::from_ints(cs)
    }

    #[test]
    fn counts() {
        assert_eq!(count_real_roots(&p(&[1, 0, 1])), 0);
        assert_eq!(count_real_roots(&p(&[-2, 0, 1])), 2);
        assert_eq!(count_real_roots(&p(&[0, -1, 0, 1])), 3);
        assert_eq!(count_real_roots(&p(&[3])), 0);
        assert_eq!(count_real_roots(&PolyQ::zero()), 0);
    }

    #[test]
    fn isolation_and_signs() {
        let f = p(&[0, -1, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 3);
        for (r, want) in roots.iter().zip([-1, 0, 1]) {
            assert!(r.lo <= rat(want) && rat(want) <= r.hi);
        }
        assert_eq!(roots[1].lo, roots[1].hi);
        // x^2 - 2 at the roots of x^2 - x - 1: phi^2 - 2 > 0, psi^2 - 2 < 0
        let s = signs_at_real_roots(&p(&[-1, -1, 1]), &p(&[-2, 0, 1]));
        assert_eq!(s, vec![-1, 1]);
        // shared root
        let s = signs_at_real_roots(&p(&[-2, 0, 1]), &p(&[-2, 0, 1]));
        assert_eq!(s, vec![0, 0]);
    }

    proptest::proptest! {
        #[test]
        fn parity_and_agreement(cs in proptest::collection::vec(-20i64..20, 2..7)) {
            let f = p(&cs).squarefree_part();
            if let Some(d) = f.degree() {
                let n = count_real_roots(&f);
                proptest::prop_assert_eq!(n % 2, d % 2);
                proptest::prop_assert_eq!(isolate_real_roots(&f).len(), n);
            }
        }
    }
}
