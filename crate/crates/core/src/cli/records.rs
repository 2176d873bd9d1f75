//! Machine-readable report records: `kind=<ratio|bound|oracle> key=value ...`.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::oracle::OracleEstimate;
use crate::selmer::{BoundRecord, RatioExponent};
use crate::Result;

/// Replaces whitespace so a value stays one token.
pub fn token(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join("_")
}

pub fn ratio_record(curve: &str, isogeny: &str, r: &RatioExponent) -> String {
    let mut s = format!("kind=ratio curve={} isogeny={} p={} exponent={}", token(curve), isogeny, r.p, r.exponent);
    for (v, e) in &r.breakdown {
        s.push_str(&format!(" place.{v}={e}"));
    }
    s
}

pub fn bound_record(curve: &str, isogeny: &str, b: &BoundRecord) -> String {
    let excluded = b.excluded.map(|e| token(&e.to_string().replace(' ', "-"))).unwrap_or_else(|| "-".into());
    let bound = b.bound.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
    let mut s = format!(
        "kind=bound curve={} isogeny={} d={} exponent={} bound={} excluded={} assumption=rank-not-separated",
        token(curve),
        isogeny,
        b.d,
        b.exponent,
        bound,
        excluded
    );
    if b.sign_note().is_some() {
        s.push_str(" note=finite-places-only");
    }
    s
}

pub fn oracle_record(curve: &str, isogeny: &str, formula: i64, e: &OracleEstimate) -> String {
    format!(
        "kind=oracle curve={} isogeny={} place={} formula={} exponent={} kernel={} cokernel={} samples={} fraction={:.6} seed={} workers={} attempts={}",
        token(curve),
        isogeny,
        e.place,
        formula,
        e.exponent,
        e.kernel,
        e.cokernel,
        e.samples,
        e.divisible_fraction,
        e.seed,
        e.workers,
        e.attempts
    )
}

/// Destination of records; discards them when no path is given.
pub struct RecordSink {
    out: Option<BufWriter<File>>,
}

impl RecordSink {
    pub fn open(path: Option<&Path>) -> Result<Self> {
        let out = match path {
            Some(p) => Some(BufWriter::new(File::create(p)?)),
            None => None,
        };
        Ok(RecordSink { out })
    }

    pub fn emit(&mut self, record: &str) -> Result<()> {
        if let Some(w) = self.out.as_mut() {
            w.write_all(record.as_bytes())?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        if let Some(w) = self.out.as_mut() {
            w.flush()?;
        }
        Ok(())
    }
}
