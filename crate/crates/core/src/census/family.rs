//! Families of twists that are squares at every support prime.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::arith::intfactor::factorize;
use crate::arith::symbols::kronecker;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(d: i64) -> Option<Sign> {
        match d.signum() {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn apply(self, n: u64) -> i64 {
        match self {
            Sign::Plus => n as i64,
            Sign::Minus => -(n as i64),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Sign> {
        match s {
            "+" | "plus" | "pos" => Ok(Sign::Plus),
            "-" | "minus" | "neg" => Ok(Sign::Minus),
            _ => Err(Error::Input(format!("sign must be + or -, got {s:?}"))),
        }
    }
}

/// Squarefree `d` of one sign that are squares in `Z_ℓ^×` for every
/// support prime `ℓ` (the primes of `2pN`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistFamily {
    pub p: u32,
    pub support: Vec<u64>,
    pub sign: Sign,
}

impl TwistFamily {
    /// Adds 2 and `p` to the given primes.
    pub fn new(p: u32, primes: &[u64], sign: Sign) -> Self {
        let mut support = primes.to_vec();
        support.extend([2, p as u64]);
        support.sort_unstable();
        support.dedup();
        TwistFamily { p, support, sign }
    }

    /// The local conditions alone: `d ≡ 1 mod 8`, and `(d/ℓ) = 1` at odd
    /// support primes.
    pub fn local_conditions(&self, d: i64) -> bool {
        self.support.iter().all(|&l| if l == 2 { d.rem_euclid(8) == 1 } else { kronecker(d, l as i64) == 1 })
    }

    /// Natural density of members among `1 ≤ |d| ≤ X`:
    /// `6/π² · ∏_S local(ℓ) / (1 − ℓ^-2)` with `local(2) = 1/8` and
    /// `local(ℓ) = (ℓ − 1) / 2ℓ`.
    pub fn predicted_density(&self) -> f64 {
        let mut dens = 6.0 / (PI * PI);
        for &l in &self.support {
            let lf = l as f64;
            let local = if l == 2 { 0.125 } else { (lf - 1.0) / (2.0 * lf) };
            dens *= local / (1.0 - 1.0 / (lf * lf));
        }
        dens
    }
}

/// Whether `d` is a member of the family.
pub fn sigma_membership(d: i64, fam: &TwistFamily) -> bool {
    if Sign::of(d) != Some(fam.sign) || !fam.local_conditions(d) {
        return false;
    }
    factorize(&BigInt::from(d)).iter().all(|(_, e)| *e == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let fam = TwistFamily::new(3, &[19], Sign::Plus);
        assert_eq!(fam.support, vec![2, 3, 19]);
        assert!(sigma_membership(1, &fam));
        assert!(!sigma_membership(-1, &fam));
        assert!(!sigma_membership(57, &fam));
        assert!(!sigma_membership(9 * 73, &fam));
        let first = (2..).find(|&d| sigma_membership(d, &fam)).unwrap();
        assert_eq!(first, 73);
        let neg = TwistFamily::new(3, &[19], Sign::Minus);
        let d = (1..1000).map(|n| -n).find(|&d| sigma_membership(d, &neg)).unwrap();
        assert!(d.rem_euclid(8) == 1 && kronecker(d, 3) == 1 && kronecker(d, 19) == 1);
    }

    #[test]
    fn density_closed_form() {
        let fam = TwistFamily::new(3, &[19], Sign::Plus);
        assert!((fam.predicted_density() - 0.018047835836291413).abs() < 1e-15);
    }
}
