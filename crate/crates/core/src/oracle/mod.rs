//! Sampling estimates of local Selmer ratios, independent of the
//! Tamagawa-number formulas.
//!
//! The kernel of `A(Q_ℓ) → B(Q_ℓ)` is counted exactly. The cokernel
//! index is estimated as the inverse of the Haar measure of the image,
//! found by sampling points of `B(Q_ℓ)` and testing each for membership
//! in `φ(A(Q_ℓ))` through its fibre. This is a consistency check, not a
//! certificate: the estimate is read off as the nearest power of `p`.

pub mod sampler;

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::padic::{roots_in_ql, with_escalation};
use crate::arith::sturm::signs_at_real_roots;
use crate::isogeny::Isogeny;
use crate::selmer::ratio::{infinity_ratio, local_ratio_minimal};
use crate::selmer::Place;
use crate::{Error, Result};

use num_rational::BigRational;
use sampler::Sampler;

/// Largest distance between the divisible fraction and `p^-k` accepted as
/// a reading of the index.
pub const FRACTION_TOLERANCE: f64 = 0.15;
/// Samples per independently seeded chunk.
const CHUNK: usize = 25;
/// ℓ-adic digits of each sampled abscissa.
pub const SAMPLE_DIGITS: u32 = 24;

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub samples: usize,
    pub seed: u64,
    pub workers: usize,
    /// Precision cap for fibre root finding.
    pub cap: u32,
    /// Extra attempts after inconclusive sampling.
    pub retries: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { samples: 200, seed: 1, workers: 1, cap: 256, retries: 2 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleEstimate {
    pub place: Place,
    pub kernel: u64,
    pub cokernel: u64,
    pub samples: usize,
    pub divisible_fraction: f64,
    pub exponent: i64,
    pub seed: u64,
    pub workers: usize,
    /// Attempts used, the successful one included.
    pub attempts: u32,
    pub note: String,
}

impl fmt::Display for OracleEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "place={} kernel={} cokernel={} exponent={} samples={} fraction={:.4} seed={} workers={} attempts={}",
            self.place,
            self.kernel,
            self.cokernel,
            self.exponent,
            self.samples,
            self.divisible_fraction,
            self.seed,
            self.workers,
            self.attempts
        )
    }
}

/// `#A[φ](Q_v)`: nonzero kernel points come in pairs over each abscissa
/// whose ordinate exists in the local field.
pub fn kernel_order_local(phi: &Isogeny, place: Place, cap: u32) -> Result<u64> {
    let b6 = phi.domain.two_division_poly();
    let pairs = match place {
        Place::Infinity => signs_at_real_roots(&phi.kernel_poly, &b6).iter().filter(|s| **s > 0).count(),
        Place::Finite(l) => with_escalation(l, cap, |prec| {
            let mut n = 0;
            for root in roots_in_ql(&phi.kernel_poly, l, prec)? {
                match root.eval_poly(&b6).is_square() {
                    Some(true) => n += 1,
                    Some(false) => {}
                    None => return Err(Error::PrecisionExhausted { prime: l, cap: prec }),
                }
            }
            Ok(n)
        })?,
    };
    let order = 1 + 2 * pairs as u64;
    if order != 1 && order != phi.degree as u64 {
        return Err(Error::Invariant(format!("kernel order {order} at {place} is neither 1 nor p")));
    }
    Ok(order)
}

/// Whether the point of `B(Q_ℓ)` with abscissa `x` lies in `φ(A(Q_ℓ))`:
/// some root of `x_num − x·K²` in `Q_ℓ` must carry an ordinate on `A`.
pub fn is_divisible(phi: &Isogeny, x: &BigRational, l: u64, cap: u32) -> Result<bool> {
    let k2 = &phi.kernel_poly * &phi.kernel_poly;
    let fibre = &phi.x_num - &k2.scale(x);
    let b6 = phi.domain.two_division_poly();
    with_escalation(l, cap, |prec| {
        for root in roots_in_ql(&fibre, l, prec)? {
            let value = root.eval_poly(&b6);
            if value.is_approx_zero() {
                // only a 2-torsion point has B6 = 0; treat as unresolved
                return Err(Error::PrecisionExhausted { prime: l, cap: prec });
            }
            match value.is_square() {
                Some(true) => return Ok(true),
                Some(false) => {}
                None => return Err(Error::PrecisionExhausted { prime: l, cap: prec }),
            }
        }
        Ok(false)
    })
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn chunk_seed(seed: u64, l: u64, attempt: u32, chunk: usize) -> u64 {
    mix(mix(mix(seed ^ 0x6a09e667f3bcc909) ^ l) ^ ((attempt as u64) << 32 | chunk as u64))
}

/// `k` in `0..=2` with `p^-k` log-nearest to `fraction`, if within
/// [`FRACTION_TOLERANCE`].
pub fn nearest_power(fraction: f64, p: u32) -> Option<u32> {
    if fraction <= 0.0 {
        return None;
    }
    let pf = p as f64;
    let k = (0..=2u32)
        .min_by(|&a, &b| {
            let da = (fraction.ln() + a as f64 * pf.ln()).abs();
            let db = (fraction.ln() + b as f64 * pf.ln()).abs();
            da.total_cmp(&db)
        })
        .unwrap();
    ((fraction - pf.powi(-(k as i32))).abs() <= FRACTION_TOLERANCE).then_some(k)
}

/// One sampling run at a finite prime; `phi` must be on minimal models.
fn sample_once(phi: &Isogeny, l: u64, cfg: &OracleConfig, attempt: u32) -> Result<(f64, usize)> {
    let sampler = Sampler::new(&phi.codomain, l, SAMPLE_DIGITS);
    let chunks = cfg.samples.div_ceil(CHUNK);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let parts: Vec<Result<(f64, f64)>> = pool.install(|| {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut rng = ChaCha8Rng::seed_from_u64(chunk_seed(cfg.seed, l, attempt, c));
                let n = CHUNK.min(cfg.samples - c * CHUNK);
                let (mut hit, mut total) = (0.0, 0.0);
                for _ in 0..n {
                    let draw = sampler.draw(&mut rng)?;
                    if draw.weight == 0.0 {
                        continue;
                    }
                    let divisible = match &draw.x {
                        None => true,
                        Some(x) => is_divisible(phi, x, l, cfg.cap)?,
                    };
                    total += draw.weight;
                    if divisible {
                        hit += draw.weight;
                    }
                }
                Ok((hit, total))
            })
            .collect()
    });
    let (mut hit, mut total) = (0.0, 0.0);
    for part in parts {
        let (h, t) = part?;
        hit += h;
        total += t;
    }
    if total == 0.0 {
        return Err(Error::InconclusiveSampling { place: l.to_string(), fraction: 0.0 });
    }
    Ok((hit / total, cfg.samples))
}

/// Estimates `c_v(φ)` by sampling at a finite place (exact at `∞`),
/// retrying inconclusive runs with fresh seeds.
pub fn cokernel_order_sampled(phi: &Isogeny, place: Place, cfg: &OracleConfig) -> Result<OracleEstimate> {
    let m = phi.minimal();
    let p = m.degree;
    let kernel = kernel_order_local(&m, place, cfg.cap)?;
    let kexp = if kernel == 1 { 0 } else { 1 };
    let Place::Finite(l) = place else {
        // the real cokernel is killed by p and by 2
        return Ok(OracleEstimate {
            place,
            kernel,
            cokernel: 1,
            samples: 0,
            divisible_fraction: 1.0,
            exponent: -kexp,
            seed: cfg.seed,
            workers: cfg.workers,
            attempts: 1,
            note: "exact: real cokernel is trivial for odd p".into(),
        });
    };
    if cfg.samples < 100 {
        return Err(Error::Input("the oracle needs at least 100 samples".into()));
    }
    let mut last_fraction = 0.0;
    for attempt in 0..=cfg.retries {
        let (fraction, samples) = sample_once(&m, l, cfg, attempt)?;
        last_fraction = fraction;
        if let Some(k) = nearest_power(fraction, p) {
            return Ok(OracleEstimate {
                place,
                kernel,
                cokernel: (p as u64).pow(k),
                samples,
                divisible_fraction: fraction,
                exponent: k as i64 - kexp,
                seed: cfg.seed,
                workers: cfg.workers,
                attempts: attempt + 1,
                note: format!("nearest power of {p} to the divisible fraction"),
            });
        }
    }
    Err(Error::InconclusiveSampling { place: place.to_string(), fraction: last_fraction })
}

/// The formula exponent at `place`.
pub fn formula_exponent(phi: &Isogeny, place: Place) -> Result<i64> {
    match place {
        Place::Infinity => Ok(infinity_ratio(phi)),
        Place::Finite(l) => local_ratio_minimal(&phi.minimal(), l),
    }
}

/// Runs the oracle and fails with "oracle mismatch" on disagreement.
pub fn compare(phi: &Isogeny, place: Place, cfg: &OracleConfig) -> Result<OracleEstimate> {
    let formula = formula_exponent(phi, place)?;
    let est = cokernel_order_sampled(phi, place, cfg)?;
    if est.exponent != formula {
        return Err(Error::OracleMismatch { place: place.to_string(), formula, oracle: est.exponent });
    }
    Ok(est)
}

/// Bad primes, `p` and the two smallest good primes.
pub fn oracle_places(phi: &Isogeny) -> Vec<Place> {
    let bad = crate::selmer::default_badset(phi);
    let mut places: Vec<Place> = bad.iter().map(|&l| Place::Finite(l)).collect();
    let good = (2u64..).filter(|&q| crate::arith::intfactor::is_prime_u64(q) && !bad.contains(&q)).take(2);
    places.extend(good.map(Place::Finite));
    places.sort();
    places.push(Place::Infinity);
    places
}
