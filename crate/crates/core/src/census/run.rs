//! Parallel, resumable census of a twist family.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::checkpoint::{self, Resumed, Writer};
use super::family::TwistFamily;
use crate::arith::sieve::{sieving_primes, squarefree_block};
use crate::selmer::bound::ASSUMPTION_NOTE;
use crate::selmer::{BoundRecord, Exclusion, TwistContext};
use crate::{Error, Result};

/// Width of a census block; markers fall on multiples of it.
pub const BLOCK: u64 = 1 << 16;

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub workers: usize,
    pub checkpoint: Option<PathBuf>,
    /// Stop after the block containing this `|d|`, as if interrupted.
    pub halt_after: Option<u64>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { workers: 1, checkpoint: None, halt_after: None }
    }
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub x: u64,
    pub family: TwistFamily,
    pub members: u64,
    pub excluded: BTreeMap<Exclusion, u64>,
    pub records: Vec<BoundRecord>,
    pub empirical_density: f64,
    pub predicted_density: f64,
    pub elapsed: Duration,
    /// False when the run stopped early.
    pub complete: bool,
    pub assumption: &'static str,
}

impl CensusReport {
    pub fn excluded_total(&self) -> u64 {
        self.excluded.values().sum()
    }

    /// Relative deviation of the empirical from the predicted density.
    pub fn density_error(&self) -> f64 {
        (self.empirical_density - self.predicted_density).abs() / self.predicted_density
    }
}

/// First line of a checkpoint for this family.
pub fn header(fam: &TwistFamily) -> String {
    let support: Vec<String> = fam.support.iter().map(|l| l.to_string()).collect();
    format!("#census p={} support={} sign={}", fam.p, support.join(","), fam.sign)
}

/// Bound records for every member with `|d| ≤ x`, ordered by `|d|`.
pub fn census(ctx: &TwistContext, fam: &TwistFamily, x: u64, opts: &CensusOptions) -> Result<CensusReport> {
    let start = Instant::now();
    if fam.p != ctx.p() {
        return Err(Error::Input(format!("family prime {} differs from isogeny degree {}", fam.p, ctx.p())));
    }
    if let Some(l) = ctx.support.iter().find(|l| !fam.support.contains(l)) {
        return Err(Error::Input(format!("family support lacks the bad prime {l}")));
    }
    let head = header(fam);
    let resumed = match &opts.checkpoint {
        Some(path) => checkpoint::read(path, &head)?,
        None => None,
    };
    let mut writer = match &opts.checkpoint {
        Some(path) => Some(Writer::open(path, &head, resumed.as_ref())?),
        None => None,
    };
    let Resumed { mut records, last, .. } = resumed.unwrap_or_default();
    records.retain(|r| r.d.unsigned_abs() <= x);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let primes = sieving_primes(x);
    let mut ranges = Vec::new();
    let mut lo = last + 1;
    while lo <= x {
        let hi = ((lo - 1) / BLOCK + 1) * BLOCK;
        ranges.push((lo, hi.min(x)));
        lo = hi + 1;
    }
    let wave = 4 * opts.workers.max(1);
    let mut complete = true;
    'outer: for chunk in ranges.chunks(wave) {
        let results: Vec<Result<Vec<BoundRecord>>> =
            pool.install(|| chunk.par_iter().map(|&(lo, hi)| block(ctx, fam, lo, hi, &primes)).collect());
        for (res, &(_, hi)) in results.into_iter().zip(chunk) {
            let recs = res?;
            if let Some(w) = writer.as_mut() {
                w.commit_block(&recs, hi)?;
            }
            records.extend(recs);
            if opts.halt_after.is_some_and(|h| h <= hi) && hi < x {
                complete = false;
                break 'outer;
            }
        }
    }

    let mut excluded = BTreeMap::new();
    for r in &records {
        if let Some(e) = r.excluded {
            *excluded.entry(e).or_insert(0) += 1;
        }
    }
    let members = records.len() as u64;
    Ok(CensusReport {
        x,
        family: fam.clone(),
        members,
        excluded,
        empirical_density: members as f64 / x as f64,
        predicted_density: fam.predicted_density(),
        records,
        elapsed: start.elapsed(),
        complete,
        assumption: ASSUMPTION_NOTE,
    })
}

fn block(ctx: &TwistContext, fam: &TwistFamily, lo: u64, hi: u64, primes: &[u64]) -> Result<Vec<BoundRecord>> {
    squarefree_block(lo, hi, primes)
        .into_iter()
        .map(|n| fam.sign.apply(n))
        .filter(|&d| fam.local_conditions(d))
        .map(|d| ctx.bound(d))
        .collect()
}
