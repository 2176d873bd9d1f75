//! Segmented sieves for primes and squarefree integers.

/// Primes up to and including `n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Squarefree integers in `[lo, hi]`, ascending, sieving by `q²` for the
/// given primes (which must cover every prime up to `√hi`).
pub fn squarefree_block(lo: u64, hi: u64, primes: &[u64]) -> Vec<u64> {
    if hi < lo {
        return Vec::new();
    }
    let len = (hi - lo + 1) as usize;
    let mut free = vec![true; len];
    for &p in primes {
        let q = p * p;
        if q > hi {
            break;
        }
        let mut m = lo.div_ceil(q) * q;
        while m <= hi {
            free[(m - lo) as usize] = false;
            m += q;
        }
    }
    free.iter().enumerate().filter(|(_, &f)| f).map(|(i, _)| lo + i as u64).filter(|&d| d > 0).collect()
}

const BLOCK: u64 = 1 << 16;

/// Squarefree integers in `[1, x]`, ascending, produced block by block.
pub fn squarefree_range(x: u64) -> impl Iterator<Item = u64> {
    let primes = primes_up_to(isqrt(x));
    let blocks = x.div_ceil(BLOCK);
    (0..blocks).flat_map(move |b| {
        let lo = b * BLOCK + 1;
        let hi = ((b + 1) * BLOCK).min(x);
        squarefree_block(lo, hi, &primes)
    })
}

/// Sieving primes sufficient for blocks up to `x`.
pub fn sieving_primes(x: u64) -> Vec<u64> {
    primes_up_to(isqrt(x))
}
