//! Command-line front end for the permcycle library.
//!
//! Subcommands: `enumerate` (brute-force distributions), `expand`
//! (generating-function coefficients), `verify` (bijection certification),
//! `crosscheck` (oracle vs. series), and `oeis` (b-file comparison).
//!
//! Exit codes are a stable contract: 0 success, 1 verification mismatch,
//! 2 usage error, 3 environment or resource error. Data tables go to
//! stdout; reports and diagnostics go to stderr.

pub mod bfile;
pub mod output;

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use permcycle_core::bijections::{build_multiset_capped, stat_delta, BijectionMap, StatDelta};
use permcycle_core::oracle::{self, distribution_shard, DistributionQuery, DEFAULT_SIZE_CAP};
use permcycle_core::patterns::ClassId;
use permcycle_core::perm::Permutation;
use permcycle_core::series::{builtin_gf, cyclic_sequence, GfName, Marker, MultiPoly};

use output::Table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable overriding the enumeration size cap.
pub const MAX_N_ENV: &str = "PERMCYCLE_MAX_N";

/// Effective enumeration cap: the override if set and parseable, else 11.
pub fn size_cap() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_SIZE_CAP)
}

#[derive(Parser)]
#[command(
    name = "permcycle",
    version,
    about = "Enumerate Av(312,4321) and Av(321,4123) by cycles and other statistics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Scan S_n and print the statistic distribution of a class slice
    Enumerate(EnumerateArgs),
    /// Expand a built-in generating function into coefficient rows
    Expand(ExpandArgs),
    /// Certify a bijection over a size range
    Verify(VerifyArgs),
    /// Compare a generating function against the brute-force oracle
    Crosscheck(CrosscheckArgs),
    /// Compare a computed sequence against an OEIS b-file
    Oeis(OeisArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Markers kept in the output, always in t,u,x,y column order.
#[derive(Clone, Debug)]
pub struct StatSelection(pub Vec<Marker>);

fn parse_stats(s: &str) -> Result<StatSelection, String> {
    if s == "all" {
        return Ok(StatSelection(Marker::ALL.to_vec()));
    }
    let mut keep = [false; 4];
    for name in s.split(',') {
        let idx = Marker::ALL
            .iter()
            .position(|m| m.stat_name() == name.trim())
            .ok_or_else(|| format!("unknown statistic `{name}` (use cyc,fix,exc,inv or all)"))?;
        keep[idx] = true;
    }
    let markers: Vec<Marker> = Marker::ALL
        .into_iter()
        .zip(keep)
        .filter_map(|(m, k)| k.then_some(m))
        .collect();
    if markers.is_empty() {
        return Err("no statistics selected".into());
    }
    Ok(StatSelection(markers))
}

fn parse_class(s: &str) -> Result<ClassId, String> {
    s.parse().map_err(|e: permcycle_core::Error| e.to_string())
}

fn parse_gf(s: &str) -> Result<GfName, String> {
    s.parse().map_err(|e: permcycle_core::Error| e.to_string())
}

fn parse_bijection(s: &str) -> Result<BijectionMap, String> {
    match s {
        "phi" => Ok(BijectionMap::Phi),
        "psi" => Ok(BijectionMap::Psi),
        _ => Err("bijection must be phi or psi".into()),
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once("..").ok_or("range must look like 4..8")?;
    let lo = lo.trim().parse().map_err(|_| "bad range start")?;
    let hi = hi.trim().parse().map_err(|_| "bad range end")?;
    Ok((lo, hi))
}

#[derive(Args)]
pub struct EnumerateArgs {
    /// Pattern class (312,4321 or 321,4123); omit to scan all of S_n
    #[arg(long, value_parser = parse_class)]
    pub class: Option<ClassId>,
    /// Permutation size
    #[arg(long)]
    pub n: usize,
    /// Statistics to keep: comma list from cyc,fix,exc,inv, or `all`
    #[arg(long, default_value = "all", value_parser = parse_stats)]
    pub stats: StatSelection,
    /// Restrict to involutions
    #[arg(long)]
    pub involutions: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Shard the scan across this many threads
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Args)]
pub struct ExpandArgs {
    /// Generating function name: A, B, C, D, F, G, or H
    #[arg(long, value_parser = parse_gf)]
    pub gf: GfName,
    /// Expand coefficients for n = 1..=max-n
    #[arg(long)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Which bijection to certify: phi or psi
    #[arg(long, value_parser = parse_bijection)]
    pub bijection: BijectionMap,
    /// Inclusive size range, e.g. 4..8
    #[arg(long, value_parser = parse_range)]
    pub n: (usize, usize),
}

#[derive(Args)]
pub struct CrosscheckArgs {
    /// Generating function name: A, B, C, D, F, G, or H
    #[arg(long, value_parser = parse_gf)]
    pub gf: GfName,
    /// Pattern class the oracle enumerates
    #[arg(long, value_parser = parse_class)]
    pub class: ClassId,
    /// Compare coefficients for n = 1..=max-n
    #[arg(long)]
    pub max_n: usize,
    /// Shard the scans across this many threads
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum SequenceSource {
    /// Cyclic permutations in Av(312,4321)
    #[value(name = "cyclic-312-4321")]
    Cyclic312_4321,
    /// Cyclic permutations in Av(321,4123)
    #[value(name = "cyclic-321-4123")]
    Cyclic321_4123,
    /// Class sizes |Av_n| (identical for both classes)
    Totals,
    /// Involution counts in Av(312,4321)
    Tribonacci,
}

impl SequenceSource {
    fn label(self) -> &'static str {
        match self {
            SequenceSource::Cyclic312_4321 => "cyclic-312-4321",
            SequenceSource::Cyclic321_4123 => "cyclic-321-4123",
            SequenceSource::Totals => "totals",
            SequenceSource::Tribonacci => "tribonacci",
        }
    }
}

#[derive(Args)]
pub struct OeisArgs {
    /// Path to an OEIS b-file (`index value` lines, `#` comments)
    #[arg(long)]
    pub file: PathBuf,
    /// Which locally computed sequence to compare
    #[arg(long, value_enum)]
    pub source: SequenceSource,
    /// Compare the prefix for n = 1..=max-n
    #[arg(long)]
    pub max_n: usize,
}

/// Parses arguments and dispatches; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match &cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Expand(args) => cmd_expand(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Crosscheck(args) => cmd_crosscheck(args),
        Command::Oeis(args) => cmd_oeis(args),
    }
}

fn fail_resource(e: impl std::fmt::Display) -> i32 {
    eprintln!("error: {e}");
    EXIT_RESOURCE
}

fn emit(table: &Table, format: Format) -> i32 {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let res = match format {
        Format::Csv => table.write_csv(&mut out),
        Format::Json => table.write_json(&mut out),
    };
    match res.and_then(|()| out.flush()) {
        Ok(()) => EXIT_OK,
        Err(e) => fail_resource(e),
    }
}

/// Full distribution, optionally sharded across threads. The merged result
/// is identical whatever the shard count.
pub fn sharded_distribution(
    q: &DistributionQuery,
    threads: usize,
) -> permcycle_core::Result<MultiPoly> {
    let threads = threads.max(1);
    if threads == 1 {
        return oracle::distribution(q);
    }
    let q = *q;
    let shards: Vec<permcycle_core::Result<MultiPoly>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|s| scope.spawn(move || distribution_shard(&q, s, threads)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("shard thread panicked"))
            .collect()
    });
    let mut acc = MultiPoly::zero();
    for shard in shards {
        acc = acc.add(&shard?)?;
    }
    Ok(acc)
}

pub fn cmd_enumerate(args: &EnumerateArgs) -> i32 {
    let q = DistributionQuery {
        class: args.class,
        n: args.n,
        involutions_only: args.involutions,
        size_cap: size_cap(),
    };
    let poly = match sharded_distribution(&q, args.threads) {
        Ok(p) => p,
        Err(e) => return fail_resource(e),
    };
    let erased: Vec<Marker> = Marker::ALL
        .into_iter()
        .filter(|m| !args.stats.0.contains(m))
        .collect();
    let poly = match poly.specialize(&erased) {
        Ok(p) => p,
        Err(e) => return fail_resource(e),
    };
    let mut table = Table::new(&args.stats.0);
    table.push_slice(args.n, &poly);
    emit(&table, args.format)
}

pub fn cmd_expand(args: &ExpandArgs) -> i32 {
    let prefix = match builtin_gf(args.gf).expand(args.max_n) {
        Ok(p) => p,
        Err(e) => return fail_resource(e),
    };
    let mut table = Table::new(args.gf.markers());
    for n in 1..=args.max_n {
        table.push_slice(n, prefix.coeff(n));
    }
    emit(&table, args.format)
}

pub fn cmd_verify(args: &VerifyArgs) -> i32 {
    let (lo, hi) = args.n;
    if lo < 4 {
        eprintln!("error: the bijections are undefined below size 4 (got range start {lo})");
        return EXIT_USAGE;
    }
    if lo > hi {
        eprintln!("error: empty range {lo}..{hi}");
        return EXIT_USAGE;
    }
    let cap = size_cap();
    if hi > cap {
        eprintln!("error: n = {hi} exceeds the enumeration cap {cap}");
        return EXIT_RESOURCE;
    }
    let map = args.bijection;
    let mut failed = false;
    let mut counterexample: Option<String> = None;
    fn note(failed: &mut bool, ce: &mut Option<String>, what: String) {
        *failed = true;
        if ce.is_none() {
            *ce = Some(what);
        }
    }
    for n in lo..=hi {
        let multiset = match build_multiset_capped(map.class(), n, cap) {
            Ok(ms) => ms,
            Err(e) => return fail_resource(e),
        };
        let mut image = BTreeSet::new();
        let mut roundtrip_failures = 0usize;
        let mut delta_violations = 0usize;
        for e in &multiset {
            let out = match map.apply(e) {
                Ok(out) => out,
                Err(_) => {
                    roundtrip_failures += 1;
                    note(&mut failed, &mut counterexample, e.perm.to_string());
                    continue;
                }
            };
            if !image.insert(out.clone()) {
                note(&mut failed, &mut counterexample, out.to_string());
            }
            match map.invert(&out) {
                Ok(back) if back == *e => {}
                _ => {
                    roundtrip_failures += 1;
                    note(&mut failed, &mut counterexample, out.to_string());
                }
            }
            let recomputed = StatDelta::between(e.perm.stats(), out.stats());
            if stat_delta(map, e).ok() != Some(recomputed) {
                delta_violations += 1;
                note(&mut failed, &mut counterexample, e.perm.to_string());
            }
        }
        let class_query = DistributionQuery::class(map.class(), n).with_size_cap(cap);
        let class: BTreeSet<Permutation> = match oracle::enumerate_class(&class_query) {
            Ok(iter) => iter.collect(),
            Err(e) => return fail_resource(e),
        };
        let mut status = "ok";
        if image != class || image.len() != multiset.len() {
            if let Some(stray) = image.symmetric_difference(&class).next() {
                note(&mut failed, &mut counterexample, stray.to_string());
            }
            status = "MISMATCH";
        }
        if roundtrip_failures > 0 || delta_violations > 0 {
            status = "MISMATCH";
        }
        eprintln!(
            "{map} n={n}: multiset={} image={} class={} roundtrip_failures={roundtrip_failures} delta_violations={delta_violations} {status}",
            multiset.len(),
            image.len(),
            class.len(),
        );
    }
    if failed {
        if let Some(ce) = counterexample {
            eprintln!("first counterexample: {ce}");
        }
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

pub fn cmd_crosscheck(args: &CrosscheckArgs) -> i32 {
    let cap = size_cap();
    if args.max_n > cap {
        eprintln!(
            "error: max-n = {} exceeds the enumeration cap {cap}",
            args.max_n
        );
        return EXIT_RESOURCE;
    }
    let prefix = match builtin_gf(args.gf).expand(args.max_n) {
        Ok(p) => p,
        Err(e) => return fail_resource(e),
    };
    for n in 1..=args.max_n {
        let q = DistributionQuery {
            class: Some(args.class),
            n,
            involutions_only: args.gf.involutions_only(),
            size_cap: cap,
        };
        let row = sharded_distribution(&q, args.threads)
            .and_then(|p| p.specialize(&args.gf.erased_markers()));
        let row = match row {
            Ok(r) => r,
            Err(e) => return fail_resource(e),
        };
        let want = prefix.coeff(n);
        if &row != want {
            let diff = match row.sub(want) {
                Ok(d) => d,
                Err(e) => return fail_resource(e),
            };
            let (mono, _) = diff
                .iter()
                .next()
                .expect("unequal polynomials differ somewhere");
            eprintln!(
                "mismatch at n={n}: exponents (k={},m={},l={},j={}): oracle={} gf {}={}",
                mono.t,
                mono.u,
                mono.x,
                mono.y,
                row.coeff(mono),
                args.gf,
                want.coeff(mono),
            );
            return EXIT_MISMATCH;
        }
        eprintln!(
            "{} vs oracle {} n={n}: identical ({} terms)",
            args.gf,
            args.class,
            want.term_count()
        );
    }
    EXIT_OK
}

/// The locally computed prefix for an `oeis` comparison, indexed from n = 1.
pub fn sequence_prefix(source: SequenceSource, max_n: usize) -> permcycle_core::Result<Vec<i128>> {
    fn totals(name: GfName, max_n: usize) -> permcycle_core::Result<Vec<i128>> {
        let prefix = builtin_gf(name).expand(max_n)?;
        (1..=max_n).map(|n| prefix.coeff(n).total()).collect()
    }
    match source {
        SequenceSource::Cyclic312_4321 => cyclic_sequence(ClassId::Av312_4321, max_n),
        SequenceSource::Cyclic321_4123 => cyclic_sequence(ClassId::Av321_4123, max_n),
        SequenceSource::Totals => totals(GfName::A, max_n),
        SequenceSource::Tribonacci => totals(GfName::D, max_n),
    }
}

pub fn cmd_oeis(args: &OeisArgs) -> i32 {
    let text = match std::fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => return fail_resource(format!("cannot read {}: {e}", args.file.display())),
    };
    let entries = match bfile::parse_bfile(&text) {
        Ok(entries) => entries,
        Err(msg) => return fail_resource(format!("{}: {msg}", args.file.display())),
    };
    if entries.is_empty() {
        return fail_resource(format!("{}: b-file has no data lines", args.file.display()));
    }
    let local = match sequence_prefix(args.source, args.max_n) {
        Ok(seq) => seq,
        Err(e) => return fail_resource(e),
    };
    match bfile::find_shift(&local, &entries) {
        Some(shift) => {
            eprintln!(
                "{}: prefix n=1..={} matches the b-file at shift {shift:+}",
                args.source.label(),
                args.max_n
            );
            EXIT_OK
        }
        None => {
            eprintln!(
                "{}: no shift in -3..=3 aligns the computed prefix {:?} with the b-file",
                args.source.label(),
                local
            );
            EXIT_MISMATCH
        }
    }
}
