//! Enumeration of rational `p`-isogenies.

use crate::arith::factor::factor_q;
use crate::arith::poly::PolyQ;
use crate::curve::model::WeierstrassModel;

use super::divpoly::division_poly;
use super::velu::{velu, Isogeny};

/// Every rational `p`-isogeny out of `m`, one per rational cyclic
/// subgroup of order `p`, sorted by kernel polynomial.
pub fn rational_p_isogenies(m: &WeierstrassModel, p: u32) -> Vec<Isogeny> {
    let n = (p as usize - 1) / 2;
    let factors: Vec<PolyQ> =
        factor_q(&division_poly(m, p)).into_iter().map(|(f, _)| f).filter(|f| f.degree().unwrap() <= n).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    subsets_of_degree(&factors, 0, n, &mut chosen, &mut |sel: &[usize]| {
        let k = sel.iter().fold(PolyQ::one(), |acc, &i| &acc * &factors[i]);
        if let Ok(phi) = velu(m, &k) {
            out.push(phi);
        }
    });
    out.sort_by(|a, b| a.kernel_poly.coeffs().cmp(b.kernel_poly.coeffs()));
    out
}

fn subsets_of_degree(
    factors: &[PolyQ],
    start: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        visit(chosen);
        return;
    }
    for i in start..factors.len() {
        let d = factors[i].degree().unwrap();
        if d <= remaining {
            chosen.push(i);
            subsets_of_degree(factors, i + 1, remaining - d, chosen, visit);
            chosen.pop();
        }
    }
}
