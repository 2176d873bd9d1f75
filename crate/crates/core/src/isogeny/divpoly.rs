//! Division polynomials.

use crate::arith::poly::PolyQ;
use crate::arith::rational::rat;
use crate::curve::model::WeierstrassModel;

/// `f_0, ..., f_n` where `f_k = ψ_k` for odd `k` and `ψ_k / ψ_2` for even `k`.
pub fn reduced_division_polys(m: &WeierstrassModel, n: usize) -> Vec<PolyQ> {
    let [b2, b4, b6, b8] = m.b_invariants();
    let f3 = PolyQ::new(vec![b8.clone(), rat(3) * &b6, rat(3) * &b4, b2.clone(), rat(3)]);
    let f4 = PolyQ::new(vec![
        &b4 * &b8 - &b6 * &b6,
        &b2 * &b8 - &b4 * &b6,
        rat(10) * &b8,
        rat(10) * &b6,
        rat(5) * &b4,
        b2.clone(),
        rat(2),
    ]);
    let big_f = m.two_division_poly();
    let f_sq = &big_f * &big_f;
    let mut f = vec![PolyQ::zero(), PolyQ::one(), PolyQ::one(), f3, f4];
    for k in 5..=n {
        let m = k / 2;
        let next = if k % 2 == 1 {
            let a = &f[m + 2] * &f[m].pow(3);
            let b = &f[m - 1] * &f[m + 1].pow(3);
            if m % 2 == 0 {
                &(&f_sq * &a) - &b
            } else {
                &a - &(&f_sq * &b)
            }
        } else {
            let inner = &(&f[m + 2] * &f[m - 1].pow(2)) - &(&f[m - 2] * &f[m + 1].pow(2));
            &f[m] * &inner
        };
        f.push(next);
    }
    f.truncate(n + 1);
    f
}

/// The `p`-division polynomial `ψ_p` for odd `p`, of degree `(p² − 1)/2`.
pub fn division_poly(m: &WeierstrassModel, p: u32) -> PolyQ {
    assert!(p % 2 == 1, "odd degree expected");
    reduced_division_polys(m, p as usize).swap_remove(p as usize)
}
