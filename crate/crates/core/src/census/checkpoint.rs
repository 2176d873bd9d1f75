//! Census checkpoint files.
//!
//! A header line, then records `d<TAB>exponent<TAB>bound` or
//! `d<TAB>exponent<TAB>EXCLUDED:reason`, with a marker `#last<TAB>n` after
//! each completed block. Resuming keeps everything up to the final marker.

use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::selmer::{BoundRecord, Exclusion};
use crate::{Error, Result};

pub const MARKER: &str = "#last";

/// Committed state of a checkpoint file.
#[derive(Clone, Debug, Default)]
pub struct Resumed {
    pub records: Vec<BoundRecord>,
    /// Largest `|d|` covered.
    pub last: u64,
    /// Byte length of the committed prefix.
    pub committed_len: u64,
}

pub fn parse_exclusion(s: &str) -> Option<Exclusion> {
    [Exclusion::KernelPoint, Exclusion::PTorsion, Exclusion::DualKernelPoint].into_iter().find(|e| e.to_string() == s)
}

pub fn parse_record(line: &str) -> Result<BoundRecord> {
    let bad = || Error::Input(format!("malformed checkpoint record {line:?}"));
    let mut it = line.split('\t');
    let (Some(d), Some(e), Some(tail), None) = (it.next(), it.next(), it.next(), it.next()) else {
        return Err(bad());
    };
    let d: i64 = d.parse().map_err(|_| bad())?;
    let exponent: i64 = e.parse().map_err(|_| bad())?;
    let rec = match tail.strip_prefix("EXCLUDED:") {
        Some(reason) => BoundRecord::new(d, exponent, Some(parse_exclusion(reason).ok_or_else(bad)?)),
        None => {
            let r = BoundRecord::new(d, exponent, None);
            if tail.parse::<i64>().ok() != r.bound {
                return Err(bad());
            }
            r
        }
    };
    Ok(rec)
}

/// Reads the committed part of a checkpoint. A missing file gives `None`;
/// a header mismatch is an input error.
pub fn read(path: &Path, header: &str) -> Result<Option<Resumed>> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let mut out = Resumed::default();
    let mut pending = Vec::new();
    let mut offset = 0u64;
    for (i, line) in text.split_inclusive('\n').enumerate() {
        offset += line.len() as u64;
        if !line.ends_with('\n') {
            break;
        }
        let line = line.trim_end_matches('\n');
        if i == 0 {
            if line != header {
                return Err(Error::Input(format!("checkpoint header {line:?} does not match {header:?}")));
            }
            out.committed_len = offset;
        } else if let Some(n) = line.strip_prefix(MARKER) {
            out.last = n.trim().parse().map_err(|_| Error::Input(format!("bad marker {line:?}")))?;
            out.records.append(&mut pending);
            out.committed_len = offset;
        } else {
            pending.push(parse_record(line)?);
        }
    }
    Ok(Some(out))
}

/// Append-only writer positioned after the committed prefix.
pub struct Writer {
    out: BufWriter<File>,
}

impl Writer {
    /// Starts a fresh file with `header`, or truncates an existing one to
    /// `resume.committed_len`.
    pub fn open(path: &Path, header: &str, resume: Option<&Resumed>) -> Result<Writer> {
        let file = match resume {
            Some(r) if r.committed_len > 0 => {
                let f = OpenOptions::new().write(true).open(path)?;
                f.set_len(r.committed_len)?;
                OpenOptions::new().append(true).open(path)?
            }
            _ => {
                let mut f = File::create(path)?;
                writeln!(f, "{header}")?;
                f
            }
        };
        Ok(Writer { out: BufWriter::new(file) })
    }

    /// Writes one block of records and its marker, then flushes.
    pub fn commit_block(&mut self, records: &[BoundRecord], last: u64) -> Result<()> {
        for r in records {
            writeln!(self.out, "{}", r.checkpoint_line())?;
        }
        writeln!(self.out, "{MARKER}\t{last}")?;
        self.out.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trip() {
        for r in [
            BoundRecord::new(73, 2, None),
            BoundRecord::new(1, 2, Some(Exclusion::DualKernelPoint)),
            BoundRecord::new(-23, 1, None),
            BoundRecord::new(5, -2, None),
        ] {
            assert_eq!(parse_record(&r.checkpoint_line()).unwrap(), r);
        }
        assert!(parse_record("1\t2").is_err());
        assert!(parse_record("1\t2\t3").is_err());
        assert!(parse_record("1\t2\tEXCLUDED:nope").is_err());
    }

    #[test]
    fn uncommitted_tail_is_dropped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.tsv");
        std::fs::write(&path, "#h\n1\t2\t2\n#last\t10\n73\t2\t2\n").unwrap();
        let r = read(&path, "#h").unwrap().unwrap();
        assert_eq!(r.records.len(), 1);
        assert_eq!(r.last, 10);
        assert!(read(&path, "#other").is_err());
        assert!(read(&dir.path().join("none"), "#h").unwrap().is_none());
    }
}
