//! Dual isogenies.

use num_traits::Zero;

use super::search::rational_p_isogenies;
use super::velu::Isogeny;
use crate::arith::rational::rat;
use crate::curve::isomorphism::find_isomorphism;
use crate::curve::model::Transform;
use crate::curve::modq::ModCurve;
use crate::{Error, Result};

/// Number of sampled points per prime in the composition check.
const CHECK_POINTS: usize = 10;

/// The isogeny `ψ: codomain → domain` with `ψ ∘ φ = [p]`, landing exactly
/// on the stored domain model of `φ`.
pub fn dual(phi: &Isogeny) -> Result<Isogeny> {
    let p = phi.degree;
    for cand in rational_p_isogenies(&phi.codomain, p) {
        let Some(iso) = find_isomorphism(&cand.codomain, &phi.domain) else { continue };
        let mut psi = cand.with_codomain_transform(&iso);
        // ψ∘φ pulls ω back to α_φ α_ψ ω, which must be p·ω; fix the sign with [-1]
        let prod = &phi.alpha * &psi.alpha;
        if prod == -rat(p as i64) {
            let d = &phi.domain;
            let neg = Transform::new(rat(-1), rat(0), -d.a1().clone(), -d.a3().clone());
            psi = psi.with_codomain_transform(&neg);
        }
        if &phi.alpha * &psi.alpha != rat(p as i64) || psi.codomain != phi.domain {
            continue;
        }
        if composes_to_multiplication(phi, &psi) {
            return Ok(psi);
        }
    }
    Err(Error::DualNotFound)
}

/// Checks `ψ(φ(P)) = [p]P` on sampled points modulo two good primes.
pub fn composes_to_multiplication(phi: &Isogeny, psi: &Isogeny) -> bool {
    let mut primes = phi.good_primes(6, 101);
    primes.retain(|q| psi.good_primes(1, *q).first() == Some(q));
    if primes.len() < 2 {
        return false;
    }
    for &q in &primes[..2] {
        let a = ModCurve::reduce(&phi.domain, q);
        for pt in a.sample_points(CHECK_POINTS, 0xd0a1) {
            let lhs = match phi.image_mod(q, pt) {
                Some(Some(img)) => match psi.image_mod(q, img) {
                    Some(v) => v,
                    None => return false,
                },
                Some(None) => None,
                None => return false,
            };
            if lhs != a.mul(&Some(pt), phi.degree as u64) {
                return false;
            }
        }
    }
    true
}

/// Whether `α_φ · α_ψ = p` exactly.
pub fn alpha_product_is_degree(phi: &Isogeny, psi: &Isogeny) -> bool {
    let prod = &phi.alpha * &psi.alpha;
    !prod.is_zero() && prod == rat(phi.degree as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::PolyQ;
    use crate::curve::isomorphism::is_isomorphic;
    use crate::curve::model::WeierstrassModel;
    use crate::isogeny::velu::velu;

    #[test]
    fn level_eleven_dual() {
        let e = WeierstrassModel::from_ints([0, -1, 1, -10, -20]).unwrap();
        let phi = velu(&e, &PolyQ::from_ints(&[80, -21, 1])).unwrap();
        let psi = dual(&phi).unwrap();
        assert_eq!(psi.codomain, e);
        assert!(alpha_product_is_degree(&phi, &psi));
        assert!(psi.kernel_poly.rational_roots().is_empty());
        let back = dual(&psi).unwrap();
        assert!(is_isomorphic(&back.codomain, &phi.codomain));
        assert_eq!(back.kernel_poly, phi.kernel_poly);
    }
}
