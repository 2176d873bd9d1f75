//! The `isoratio` command line.
//!
//! Human-readable tables go to standard output; `key=value` records go
//! to the `--output` path.

pub mod curves;
pub mod records;

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::arith::intfactor::prime_divisors_u64;
use crate::arith::padic::MAX_PRECISION;
use crate::census::{census, CensusOptions, Sign, TwistFamily};
use crate::curve::minimal::{conductor, minimal_model};
use crate::curve::torsion::points_above;
use crate::isogeny::{dual, rational_p_isogenies, Isogeny};
use crate::local::local_data;
use crate::oracle::{compare, formula_exponent, oracle_places, OracleConfig};
use crate::selmer::{applicability, default_badset, global_ratio, require_composition, Place, TwistContext};
use crate::{Error, Result};

pub use curves::{parse_curve_line, read_curve_file, CurveRecord};
use records::{bound_record, oracle_record, ratio_record, RecordSink};

#[derive(Parser, Debug, Clone)]
#[command(name = "isoratio", version, about = "Selmer ratios of rational p-isogenies and their quadratic twists")]
pub struct RunConfig {
    /// Cap on ℓ-adic working precision (digits).
    #[arg(long, env = "ISORATIO_PRECISION_CAP", default_value_t = MAX_PRECISION, global = true)]
    pub precision_cap: u32,
    /// File receiving `kind=... key=value` records.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CurveArgs {
    /// A curve line `label: a1 a2 a3 a4 a6`; repeatable.
    #[arg(long = "curve")]
    pub curves: Vec<String>,
    /// File with one curve line per row.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

/// Which rational isogenies of each curve to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    /// Those whose kernel has a rational point.
    Rational,
    Index(usize),
}

impl FromStr for Selection {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Selection::All),
            "rational" => Ok(Selection::Rational),
            _ => s.parse().map(Selection::Index).map_err(|_| format!("expected all, rational or an index, got {s:?}")),
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct IsogenyArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Odd prime degree.
    #[arg(short, long)]
    pub p: u32,
    /// `all`, `rational` or an index from `isogenies`.
    #[arg(long, default_value = "all")]
    pub select: Selection,
    /// Use the dual of each selected isogeny.
    #[arg(long)]
    pub dual: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Tate's algorithm at the bad primes (and any extra primes).
    LocalData {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long = "prime")]
        primes: Vec<u64>,
    },
    /// Rational p-isogenies with their kernel polynomials.
    Isogenies {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(short, long)]
        p: u32,
    },
    /// Global Selmer ratio with its breakdown over places.
    Ratio(IsogenyArgs),
    /// Selmer ratio and bound for one twist.
    TwistRatio {
        #[command(flatten)]
        iso: IsogenyArgs,
        #[arg(short, long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Bounds for every twist in a family up to X.
    Census {
        #[command(flatten)]
        iso: IsogenyArgs,
        /// Largest |d| swept.
        #[arg(short = 'x', long = "bound")]
        x: u64,
        /// Sign of d: `+` or `-`.
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: Sign,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Resumable record file; an existing one is continued.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Stop after the block containing this |d|.
        #[arg(long, hide = true)]
        halt_after: Option<u64>,
    },
    /// Hypotheses and verdicts of the positive-proportion theorems.
    CheckTheorem {
        #[command(flatten)]
        iso: IsogenyArgs,
        /// Assert the domain is an optimal quotient of J0(N).
        #[arg(long)]
        modular_quotient: bool,
    },
    /// Sampling oracle against the formula at bad places, p and two good places.
    Oracle {
        #[command(flatten)]
        iso: IsogenyArgs,
        /// Samples per finite place.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Fresh-seed attempts after an inconclusive run.
        #[arg(long, default_value_t = 2)]
        retries: u32,
    },
}

/// Process exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::OracleMismatch { .. } | Error::InconclusiveSampling { .. } => 3,
        Error::Parse { .. } | Error::SingularModel | Error::Input(_) | Error::Io(_) => 4,
        _ => 2,
    }
}

fn load_curves(args: &CurveArgs) -> Result<Vec<CurveRecord>> {
    let mut out: Vec<CurveRecord> = args.curves.iter().map(|l| parse_curve_line(l)).collect::<Result<_>>()?;
    if let Some(path) = &args.file {
        out.extend(read_curve_file(path)?);
    }
    if out.is_empty() {
        return Err(Error::Input("no curves given (use --curve or --file)".into()));
    }
    Ok(out)
}

/// Selected isogenies with their display names.
fn select(rec: &CurveRecord, args: &IsogenyArgs) -> Result<Vec<(String, Isogeny)>> {
    if args.p < 3 || !crate::arith::intfactor::is_prime_u64(args.p as u64) {
        return Err(Error::Input(format!("p = {} is not an odd prime", args.p)));
    }
    let all = rational_p_isogenies(&rec.model, args.p);
    let picked: Vec<(usize, Isogeny)> = match args.select {
        Selection::All => all.into_iter().enumerate().collect(),
        Selection::Rational => all.into_iter().enumerate().filter(|(_, f)| has_rational_kernel_point(f)).collect(),
        Selection::Index(i) => match all.into_iter().nth(i) {
            Some(f) => vec![(i, f)],
            None => return Err(Error::Input(format!("{} has no isogeny with index {i}", rec.label))),
        },
    };
    picked
        .into_iter()
        .map(|(i, f)| if args.dual { Ok((format!("{i}-dual"), dual(&f)?)) } else { Ok((i.to_string(), f)) })
        .collect()
}

fn has_rational_kernel_point(f: &Isogeny) -> bool {
    f.rational_kernel_abscissas().iter().any(|x| !points_above(&f.domain, x).is_empty())
}

fn check_cap(cap: u32) -> Result<()> {
    if cap == 0 || cap > MAX_PRECISION {
        return Err(Error::Input(format!("precision cap must be in 1..={MAX_PRECISION}, got {cap}")));
    }
    Ok(())
}

/// Runs one command, writing the human report to `out`.
pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    check_cap(cfg.precision_cap)?;
    let mut sink = RecordSink::open(cfg.output.as_deref())?;
    match &cfg.command {
        Command::LocalData { curve, primes } => {
            for rec in load_curves(curve)? {
                let (min, _) = minimal_model(&rec.model);
                writeln!(out, "{} {} conductor {}", rec.label, min, conductor(&min))?;
                writeln!(out, "  prime  kodaira  c  reduction  f  v(disc)")?;
                let mut ls = prime_divisors_u64(&min.discriminant().to_integer());
                ls.extend(primes);
                ls.sort_unstable();
                ls.dedup();
                for l in ls {
                    let d = local_data(&min, l);
                    writeln!(
                        out,
                        "  {:<5}  {:<7}  {}  {:<9}  {}  {}",
                        l,
                        d.kodaira.to_string(),
                        d.tamagawa,
                        d.reduction.to_string(),
                        d.conductor_exponent,
                        d.vdisc_min
                    )?;
                }
            }
        }
        Command::Isogenies { curve, p } => {
            for rec in load_curves(curve)? {
                let all = rational_p_isogenies(&rec.model, *p);
                writeln!(out, "{} p={}: {} rational isogenies", rec.label, p, all.len())?;
                for (i, f) in all.iter().enumerate() {
                    writeln!(out, "  {i}  kernel {}  codomain {}", f.kernel_poly, f.codomain)?;
                }
            }
        }
        Command::Ratio(args) => {
            for rec in load_curves(&args.curve)? {
                for (name, f) in select(&rec, args)? {
                    let r = global_ratio(&f, &default_badset(&f))?;
                    let places: Vec<Place> = r.breakdown.keys().copied().collect();
                    require_composition(&f, &places)?;
                    writeln!(out, "{} isogeny {} kernel {} -> {}", rec.label, name, f.kernel_poly, f.codomain)?;
                    writeln!(out, "  breakdown {}", r.breakdown_string())?;
                    writeln!(out, "  {r}")?;
                    sink.emit(&ratio_record(&rec.label, &name, &r))?;
                }
            }
        }
        Command::TwistRatio { iso, d } => {
            if *d == 0 || !crate::arith::intfactor::factorize(&(*d).into()).iter().all(|(_, e)| *e == 1) {
                return Err(Error::Input(format!("d = {d} is not a nonzero squarefree integer")));
            }
            for rec in load_curves(&iso.curve)? {
                for (name, f) in select(&rec, iso)? {
                    let ctx = TwistContext::new(&f)?;
                    let slow = ctx.slow(*d)?;
                    if let Some(fast) = ctx.fast(*d) {
                        if fast.nonzero() != slow.nonzero() {
                            return Err(Error::Invariant(format!("fast and explicit twist ratios differ for d = {d}")));
                        }
                    }
                    let b = ctx.bound(*d)?;
                    writeln!(out, "{} isogeny {} twisted by d = {}", rec.label, name, d)?;
                    writeln!(out, "  breakdown {}", slow.breakdown_string())?;
                    writeln!(out, "  {}", slow.to_string().replace("c(phi)", "c(phi_d)"))?;
                    match (&b.excluded, b.bound) {
                        (Some(e), _) => writeln!(out, "  excluded: {e}")?,
                        (None, Some(v)) => writeln!(out, "  rk + dim Sha[p] >= {v}")?,
                        _ => {}
                    }
                    sink.emit(&ratio_record(&rec.label, &name, &slow))?;
                    sink.emit(&bound_record(&rec.label, &name, &b))?;
                }
            }
        }
        Command::Census { iso, x, sign, workers, checkpoint, halt_after } => {
            for rec in load_curves(&iso.curve)? {
                for (name, f) in select(&rec, iso)? {
                    let ctx = TwistContext::new(&f)?;
                    let fam = TwistFamily::new(f.degree, &ctx.support, *sign);
                    let opts =
                        CensusOptions { workers: *workers, checkpoint: checkpoint.clone(), halt_after: *halt_after };
                    let report = census(&ctx, &fam, *x, &opts)?;
                    for b in &report.records {
                        sink.emit(&bound_record(&rec.label, &name, b))?;
                    }
                    let support: Vec<String> = fam.support.iter().map(|l| l.to_string()).collect();
                    writeln!(
                        out,
                        "{} isogeny {} family sign {} support {{{}}}",
                        rec.label,
                        name,
                        sign,
                        support.join(", ")
                    )?;
                    writeln!(out, "  untwisted {}", ctx.base)?;
                    writeln!(out, "  X = {}  members = {}  complete = {}", report.x, report.members, report.complete)?;
                    for (reason, n) in &report.excluded {
                        writeln!(out, "  excluded ({reason}): {n}")?;
                    }
                    let mut hist = std::collections::BTreeMap::new();
                    for b in report.records.iter().filter_map(|b| b.bound) {
                        *hist.entry(b).or_insert(0u64) += 1;
                    }
                    for (b, n) in hist {
                        writeln!(out, "  bound {b}: {n}")?;
                    }
                    writeln!(
                        out,
                        "  density {:.6} predicted {:.6} relative error {:.4}",
                        report.empirical_density,
                        report.predicted_density,
                        report.density_error()
                    )?;
                    if *sign == Sign::Minus {
                        writeln!(out, "  note: finite places only; c(phi_d) >= c(phi)/p")?;
                    }
                    writeln!(out, "  assumption: {}", report.assumption)?;
                    eprintln!("census finished in {:.2?}", report.elapsed);
                }
            }
        }
        Command::CheckTheorem { iso, modular_quotient } => {
            for rec in load_curves(&iso.curve)? {
                let asserted = *modular_quotient || rec.modular_quotient == Some(true);
                for (name, f) in select(&rec, iso)? {
                    let psi = dual(&f)?;
                    for (side, g) in [("isogeny", &f), ("dual", &psi)] {
                        let a = applicability(&g.domain, g, asserted)?;
                        writeln!(
                            out,
                            "{} {} {} domain {}: exponent {}  c>=p^2 {}  E[2]!=Z/2 {}  modular-quotient {}",
                            rec.label,
                            side,
                            name,
                            g.domain,
                            a.exponent,
                            a.ratio_at_least_p2,
                            a.two_torsion_ok,
                            a.modular_quotient
                        )?;
                        writeln!(
                            out,
                            "  elliptic theorem applies: {}  quotient theorem applies: {}",
                            a.elliptic_theorem(),
                            a.quotient_theorem()
                        )?;
                        let r = global_ratio(g, &default_badset(g))?;
                        let label = if side == "dual" { format!("{name}-dual") } else { name.clone() };
                        sink.emit(&ratio_record(&rec.label, &label, &r))?;
                    }
                }
            }
        }
        Command::Oracle { iso, samples, seed, workers, retries } => {
            let ocfg = OracleConfig {
                samples: *samples,
                seed: *seed,
                workers: *workers,
                cap: cfg.precision_cap,
                retries: *retries,
            };
            for rec in load_curves(&iso.curve)? {
                for (name, f) in select(&rec, iso)? {
                    writeln!(out, "{} isogeny {} kernel {}", rec.label, name, f.kernel_poly)?;
                    for place in oracle_places(&f) {
                        let formula = formula_exponent(&f, place)?;
                        let est = compare(&f, place, &ocfg);
                        match &est {
                            Ok(e) => {
                                writeln!(out, "  {place:<4} formula {formula:>2}  oracle {:>2}  {e}", e.exponent)?;
                                sink.emit(&oracle_record(&rec.label, &name, formula, e))?;
                            }
                            Err(e) => writeln!(out, "  {place:<4} formula {formula:>2}  FAILED: {e}")?,
                        }
                        est?;
                    }
                }
            }
        }
    }
    sink.finish()
}
