//! Quadratic twists through the model `y² = x³ + b2x² + 8b4x + 16b6`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::minimal::minimal_model;
use super::model::{Transform, WeierstrassModel};
use crate::arith::rational::{from_int, rat, ratio};

/// Transform from `m` to `y² = x³ + b2x² + 8b4x + 16b6`; it sends `x` to `4x`.
pub fn short_transform(m: &WeierstrassModel) -> Transform {
    Transform::new(ratio(1, 2), rat(0), -m.a1() / rat(2), -m.a3() / rat(2))
}

/// `y² = x³ + d b2 x² + 8d² b4 x + 16d³ b6`, the `d`-twist of the short model.
/// A point with abscissa `x` on the short model corresponds to abscissa
/// `d x` here.
pub fn twisted_short_model(m: &WeierstrassModel, d: &BigInt) -> WeierstrassModel {
    let [b2, b4, b6, _] = m.b_invariants();
    let d = from_int(d.clone());
    let zero = rat(0);
    WeierstrassModel::new(zero.clone(), &d * b2, zero, rat(8) * &d * &d * b4, rat(16) * &d * &d * &d * b6)
        .expect("twist of a nonsingular model is nonsingular")
}

/// The `d`-th quadratic twist, as a global minimal model.
pub fn quadratic_twist(m: &WeierstrassModel, d: i64) -> WeierstrassModel {
    assert!(d != 0, "twist parameter must be nonzero");
    minimal_model(&twisted_short_model(m, &BigInt::from(d))).0
}

/// Maps an abscissa on `m` to the corresponding abscissa on
/// [`twisted_short_model`]`(m, d)`.
pub fn twist_abscissa(x: &BigRational, d: &BigInt) -> BigRational {
    x * rat(4) * from_int(d.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;
    use crate::curve::isomorphism::is_isomorphic;
    use crate::curve::torsion::two_torsion_order;

    #[test]
    fn twist_basics() {
        let m = WeierstrassModel::from_ints([0, 0, 0, 0, 1]).unwrap();
        assert_eq!(quadratic_twist(&m, 5).j_invariant(), m.j_invariant());
        assert!(is_isomorphic(&quadratic_twist(&m, 1), &m));
        let e = WeierstrassModel::from_ints([0, -1, 1, -10, -20]).unwrap();
        assert!(is_isomorphic(&quadratic_twist(&quadratic_twist(&e, -7), -7), &e));
        assert!(!is_isomorphic(&quadratic_twist(&e, -7), &e));
        // twisting by 2 then 3 is twisting by 6
        assert!(is_isomorphic(&quadratic_twist(&quadratic_twist(&e, 2), 3), &quadratic_twist(&e, 6)));
        assert_eq!(m.transform(&short_transform(&m)), twisted_short_model(&m, &BigInt::from(1)));
        let sd = twisted_short_model(&m, &BigInt::from(5));
        let ratio_disc = sd.discriminant() / m.transform(&short_transform(&m)).discriminant();
        assert_eq!(ratio_disc, rat(15625));
    }

    #[test]
    fn two_torsion_is_twist_invariant() {
        for a in [[0, 0, 0, -1, 0], [0, 0, 0, 0, 1], [0, -1, 1, -10, -20], [1, -1, 1, -3, 3]] {
            let e = WeierstrassModel::from_ints(a).unwrap();
            for d in [-15, -3, -1, 2, 5, 7, 10] {
                assert_eq!(two_torsion_order(&quadratic_twist(&e, d)), two_torsion_order(&e));
            }
        }
    }
}
