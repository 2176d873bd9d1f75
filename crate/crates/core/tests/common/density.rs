//! Family density from first principles.

pub fn legendre(a: i64, l: i64) -> i64 {
    let mut acc = 1i64;
    let mut base = a.rem_euclid(l);
    let mut e = (l - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % l;
        }
        base = base * base % l;
        e >>= 1;
    }
    if acc == l - 1 {
        -1
    } else {
        acc
    }
}

/// Density of the family from residue counts at the support primes and
/// the Euler product `∏ (1 − q^-2)` over the other primes.
pub fn density_oracle(support: &[i64]) -> f64 {
    let mut dens = 1.0;
    for &l in support {
        // residues mod 8 at 2, mod ℓ² elsewhere
        let (m, good) = if l == 2 {
            (8, (0..8).filter(|r| r % 8 == 1).count())
        } else {
            (l * l, (0..l * l).filter(|&r| legendre(r, l) == 1).count())
        };
        dens *= good as f64 / m as f64;
    }
    let limit = 2_000_000usize;
    let mut composite = vec![false; limit + 1];
    for q in 2..=limit {
        if composite[q] {
            continue;
        }
        for k in (q * q..=limit).step_by(q) {
            composite[k] = true;
        }
        if !support.contains(&(q as i64)) {
            dens *= 1.0 - 1.0 / (q as f64 * q as f64);
        }
    }
    dens
}
