//! The real place.

use num_traits::Signed;

use crate::curve::model::WeierstrassModel;

/// Number of connected components of `E(R)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RealData {
    pub components: u32,
}

/// Two components exactly when the discriminant is positive; the sign is
/// the same on every model.
pub fn real_data(m: &WeierstrassModel) -> RealData {
    let components = if m.discriminant().is_positive() { 2 } else { 1 };
    RealData { components }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components() {
        let m = WeierstrassModel::from_ints([0, 0, 0, -1, 0]).unwrap();
        assert_eq!(m.discriminant(), crate::arith::rational::rat(64));
        assert_eq!(real_data(&m).components, 2);
        assert_eq!(real_data(&WeierstrassModel::from_ints([0, 0, 0, 0, 1]).unwrap()).components, 1);
    }
}
