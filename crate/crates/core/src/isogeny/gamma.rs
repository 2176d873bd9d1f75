//! The differential term of the local ratio at `p`.

use crate::arith::rational::lvaluation;
use crate::{Error, Result};

use super::velu::Isogeny;

/// `v_p(α)` with both models globally minimal; it is 0 or 1.
pub fn gamma_p(phi: &Isogeny) -> Result<i64> {
    let m = phi.minimal();
    let v = lvaluation(&m.alpha, phi.degree as u64).expect("alpha is nonzero");
    if !(0..=1).contains(&v) {
        return Err(Error::Invariant(format!("v_p(alpha) = {v} outside 0..=1")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::PolyQ;
    use crate::curve::model::WeierstrassModel;
    use crate::isogeny::{dual, velu};

    #[test]
    fn level_eleven_gammas() {
        let e = WeierstrassModel::from_ints([0, -1, 1, -10, -20]).unwrap();
        let phi = velu(&e, &PolyQ::from_ints(&[80, -21, 1])).unwrap();
        assert_eq!(gamma_p(&phi).unwrap(), 0);
        assert_eq!(gamma_p(&dual(&phi).unwrap()).unwrap(), 1);
    }
}
