//! `apart`: exact partition counting over restricted part sets, partition
//! enumeration, maxima of the extended count, splitting-injection checks,
//! and product-inequality scans, thresholds, and certificates.
//!
//! Exit codes: 0 for success (an invalid certificate is data, not failure),
//! 2 for usage and parse errors, 3 for resource limits and inconclusive
//! scans.

use anyhow::{anyhow, bail, Result};
use apart_core::bo::{
    bo_check_pair, certify_bo, conjecture_scan_set, find_threshold, scan_region, BoCertificate,
    BoOutcome, ConjectureSetReport, ExceptionRecord, GapCertification, InductionScheme, Region,
    ThresholdResult,
};
use apart_core::enumerate::{enumerate_partitions_capped, DEFAULT_ENUMERATION_CAP};
use apart_core::families::{gap_validator, max_formula_check, FormulaVerdict, GapVerdict};
use apart_core::inject::{f_apply, g_apply, verify_injection_capped, InjectionReport, Variant};
use apart_core::maxval::{max_value_capped, DEFAULT_WITNESS_CAP};
use apart_core::{CountTable, Error, PartSet, Partition};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt::Write as _;

fn main() {
    let cli = Cli::parse();
    init_threads(cli.threads);
    if let Err(err) = run(&cli) {
        eprintln!("error: {err}");
        let code = err.downcast_ref::<Error>().map_or(2, exit_code);
        std::process::exit(code);
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BoundExceeded { .. }
        | Error::EnumerationOverflow { .. }
        | Error::Inconclusive(_) => 3,
        _ => 2,
    }
}

fn init_threads(flag: Option<usize>) {
    let n = flag.or_else(|| {
        std::env::var("APART_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(n) = n.filter(|&n| n > 0) {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

#[derive(Parser)]
#[command(
    name = "apart",
    version,
    about = "Partition counts, maxima, splitting injections, \
and product-inequality scans and certificates over restricted part sets"
)]
struct Cli {
    /// Output format; csv applies to row-shaped outputs only
    /// (count, enumerate, bo scan, bo thresholds, conjecture scan).
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for scans (fallback: the APART_THREADS variable).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    F,
    G,
}

impl From<MapArg> for Variant {
    fn from(m: MapArg) -> Variant {
        match m {
            MapArg::F => Variant::F,
            MapArg::G => Variant::G,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print p(n) for every 0 <= n <= bound as n,count rows.
    Count(CountArgs),
    /// List every partition of n.
    Enumerate(EnumerateArgs),
    /// Maximize the extended count over all partitions of n.
    Max(MaxArgs),
    /// The product inequality p(w)p(z) > p(w+z).
    #[command(subcommand)]
    Bo(BoCommand),
    /// Splitting maps on partitions without second-member parts.
    #[command(subcommand)]
    Inject(InjectCommand),
    /// Exception evidence for randomly generated gcd-1 sets.
    #[command(subcommand)]
    Conjecture(ConjectureCommand),
}

#[derive(Args)]
struct CountArgs {
    /// Part set, e.g. mary:2, power:3, fib, factorial, all, explicit:1,2,5;
    /// append !exclude=<part> to drop one member.
    #[arg(long)]
    set: PartSet,
    #[arg(long)]
    bound: u64,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    set: PartSet,
    #[arg(long)]
    n: u64,
    /// Only partitions whose largest part is at most this.
    #[arg(long)]
    max_part: Option<u64>,
    /// Abort (exit 3) past this many partitions.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,
}

#[derive(Args)]
struct MaxArgs {
    #[arg(long)]
    set: PartSet,
    #[arg(long)]
    n: u64,
    /// Keep at most this many maximizing partitions.
    #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
    witness_cap: usize,
    /// Compare value and witnesses against the family's closed form.
    #[arg(long)]
    check_formula: bool,
}

#[derive(Subcommand)]
enum BoCommand {
    /// Compare p(w)p(z) with p(w+z) for one pair.
    Pair(PairArgs),
    /// List all non-strict pairs with min-part <= w <= z and w+z <= sum-max.
    Scan(ScanArgs),
    /// Smallest N with no non-strict pair of sum >= N, per radix.
    Thresholds(ThresholdsArgs),
    /// Certify strictness for all w, z above a floor by base-window induction.
    Certify(CertifyArgs),
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    set: PartSet,
    #[arg(long)]
    w: u64,
    #[arg(long)]
    z: u64,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    set: PartSet,
    /// Smallest w (and z) to scan; default: the second usable member.
    #[arg(long)]
    min_part: Option<u64>,
    #[arg(long)]
    sum_max: u64,
}

#[derive(Args)]
struct ThresholdsArgs {
    /// Only `mary` is supported.
    #[arg(long)]
    family: String,
    /// Radix or radix range, e.g. 4 or 2:4.
    #[arg(long)]
    m: String,
    /// Scan this far instead of the default 5m^2 + 4m.
    #[arg(long)]
    scan_bound: Option<u64>,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long)]
    set: PartSet,
    /// Which splitting map backs the induction; default: f where its gap
    /// condition can hold, g otherwise.
    #[arg(long, value_enum)]
    variant: Option<MapArg>,
    /// Certify w, z >= this instead of the variant's default floor.
    #[arg(long)]
    floor: Option<u64>,
    /// Count-table bound; default: window top + 200 (full spot check).
    #[arg(long)]
    table_bound: Option<u64>,
}

#[derive(Subcommand)]
enum InjectCommand {
    /// Apply the map to one partition of w+z without second-member parts.
    Apply(ApplyArgs),
    /// Apply the map to the whole domain and check injectivity.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ApplyArgs {
    #[arg(long)]
    set: PartSet,
    #[arg(long)]
    w: u64,
    #[arg(long)]
    z: u64,
    /// Comma-separated parts, e.g. 10,5,1,1.
    #[arg(long)]
    partition: String,
    #[arg(long, value_enum, default_value = "f")]
    variant: MapArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    set: PartSet,
    #[arg(long)]
    w: u64,
    #[arg(long)]
    z: u64,
    #[arg(long, value_enum, default_value = "f")]
    variant: MapArg,
    /// Abort (exit 3) past this many domain partitions.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum ConjectureCommand {
    /// Generate random explicit sets with gcd 1 and scan each for
    /// non-strict pairs; reports the largest exceptional sum found.
    Scan(ConjectureArgs),
}

#[derive(Args)]
struct ConjectureArgs {
    #[arg(long, default_value_t = 6)]
    sets: usize,
    #[arg(long, default_value_t = 5)]
    max_size: usize,
    #[arg(long, default_value_t = 24)]
    max_element: u64,
    #[arg(long, default_value_t = 80)]
    scan_bound: u64,
    /// Seed for the set generator; fixed default for reproducibility.
    #[arg(long, default_value_t = 2024)]
    seed: u64,
}

fn run(cli: &Cli) -> Result<()> {
    let format = cli.format;
    match &cli.command {
        Command::Count(args) => cmd_count(args, format),
        Command::Enumerate(args) => cmd_enumerate(args, format),
        Command::Max(args) => cmd_max(args, format),
        Command::Bo(BoCommand::Pair(args)) => cmd_pair(args, format),
        Command::Bo(BoCommand::Scan(args)) => cmd_scan(args, format),
        Command::Bo(BoCommand::Thresholds(args)) => cmd_thresholds(args, format),
        Command::Bo(BoCommand::Certify(args)) => cmd_certify(args, format),
        Command::Inject(InjectCommand::Apply(args)) => cmd_apply(args, format),
        Command::Inject(InjectCommand::Verify(args)) => cmd_verify(args, format),
        Command::Conjecture(ConjectureCommand::Scan(args)) => cmd_conjecture(args, format),
    }
}

fn no_csv(format: Format, what: &str) -> Result<()> {
    if format == Format::Csv {
        bail!("csv output is not available for {what}");
    }
    Ok(())
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn cmd_count(args: &CountArgs, format: Format) -> Result<()> {
    let table = CountTable::build(&args.set, args.bound);
    match format {
        Format::Text | Format::Csv => print!("{}", table.to_csv()),
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                n: u64,
                count: String,
            }
            #[derive(Serialize)]
            struct Out {
                set: String,
                bound: u64,
                rows: Vec<Row>,
            }
            let rows = table
                .counts()
                .iter()
                .enumerate()
                .map(|(n, c)| Row {
                    n: n as u64,
                    count: c.to_string(),
                })
                .collect();
            print_json(&Out {
                set: args.set.label(),
                bound: args.bound,
                rows,
            })?;
        }
    }
    Ok(())
}

fn cmd_enumerate(args: &EnumerateArgs, format: Format) -> Result<()> {
    let partitions = enumerate_partitions_capped(&args.set, args.n, args.max_part, args.cap)?;
    match format {
        Format::Text => {
            for p in &partitions {
                println!("{p}");
            }
            println!("total {}", partitions.len());
        }
        Format::Csv => {
            println!("partition");
            for p in &partitions {
                println!("{}", join_parts(p));
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                set: String,
                n: u64,
                max_part: Option<u64>,
                total: usize,
                partitions: &'a [Partition],
            }
            print_json(&Out {
                set: args.set.label(),
                n: args.n,
                max_part: args.max_part,
                total: partitions.len(),
                partitions: &partitions,
            })?;
        }
    }
    Ok(())
}

fn join_parts(p: &Partition) -> String {
    let parts: Vec<String> = p.parts().iter().map(u64::to_string).collect();
    parts.join(" ")
}

fn cmd_max(args: &MaxArgs, format: Format) -> Result<()> {
    no_csv(format, "max")?;
    let result = max_value_capped(&args.set, args.n, args.witness_cap);
    let formula = args
        .check_formula
        .then(|| max_formula_check(&args.set, &result));
    match format {
        Format::Text => {
            println!("set {}", args.set.label());
            println!("n {}", result.n);
            println!("max {}", result.value);
            println!(
                "witnesses {} (cap hit: {})",
                result.witnesses.len(),
                result.witness_cap_hit
            );
            for p in &result.witnesses {
                println!("witness {p}");
            }
            if let Some(verdict) = &formula {
                println!("formula: {}", verdict_line(verdict));
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                set: String,
                n: u64,
                value: String,
                witness_cap_hit: bool,
                witnesses: &'a [Partition],
                #[serde(skip_serializing_if = "Option::is_none")]
                formula: Option<FormulaVerdict>,
            }
            print_json(&Out {
                set: args.set.label(),
                n: result.n,
                value: result.value.to_string(),
                witness_cap_hit: result.witness_cap_hit,
                witnesses: &result.witnesses,
                formula,
            })?;
        }
        Format::Csv => unreachable!(),
    }
    Ok(())
}

fn verdict_line(verdict: &FormulaVerdict) -> String {
    match verdict {
        FormulaVerdict::Pass => "pass".into(),
        FormulaVerdict::NotApplicable => "not applicable (no closed form here)".into(),
        FormulaVerdict::InconclusiveWitnesses { value_matches } => {
            format!("inconclusive: witness list truncated (value matches: {value_matches})")
        }
        FormulaVerdict::Report {
            value_matches,
            witnesses_match,
        } => {
            let w = witnesses_match.map_or("unchecked".to_string(), |b| b.to_string());
            format!("report: value matches {value_matches}, witnesses match {w}")
        }
        FormulaVerdict::Fail { reason } => format!("FAIL: {reason}"),
    }
}

fn cmd_pair(args: &PairArgs, format: Format) -> Result<()> {
    no_csv(format, "bo pair")?;
    let table = CountTable::build(&args.set, args.w + args.z);
    let outcome = bo_check_pair(&table, args.w, args.z)?;
    match format {
        Format::Text => {
            println!("set {}", args.set.label());
            print!("{}", outcome_text(&outcome));
        }
        Format::Json => print_json(&outcome)?,
        Format::Csv => unreachable!(),
    }
    Ok(())
}

fn outcome_text(o: &BoOutcome) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pair ({}, {})", o.w, o.z);
    let _ = writeln!(s, "lhs {}", o.lhs);
    let _ = writeln!(s, "rhs {}", o.rhs);
    let _ = writeln!(s, "relation {}", o.relation);
    s
}

fn exception_row(e: &ExceptionRecord, sep: char) -> String {
    let eq = if e.equality { "=" } else { "" };
    let o = &e.outcome;
    [
        o.w.to_string(),
        o.z.to_string(),
        o.lhs.to_string(),
        o.rhs.to_string(),
        o.relation.to_string(),
        eq.to_string(),
    ]
    .join(&sep.to_string())
}

const EXCEPTION_HEADER: [&str; 6] = ["w", "z", "lhs", "rhs", "relation", "eq"];

fn cmd_scan(args: &ScanArgs, format: Format) -> Result<()> {
    let part_min = match args.min_part {
        Some(p) => p,
        None => *args
            .set
            .parts_up_to(args.sum_max)
            .get(1)
            .ok_or_else(|| anyhow!("set has no second member within the scan bound"))?,
    };
    let table = CountTable::build(&args.set, args.sum_max);
    let exceptions = scan_region(&table, &Region::triangle(part_min, args.sum_max))?;
    match format {
        Format::Text | Format::Csv => {
            let sep = if format == Format::Csv { ',' } else { ' ' };
            println!("{}", EXCEPTION_HEADER.join(&sep.to_string()));
            for e in &exceptions {
                println!("{}", exception_row(e, sep));
            }
            if format == Format::Text {
                println!("exceptions: {}", exceptions.len());
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                set: String,
                part_min: u64,
                sum_max: u64,
                exception_count: usize,
                exceptions: &'a [ExceptionRecord],
            }
            print_json(&Out {
                set: args.set.label(),
                part_min,
                sum_max: args.sum_max,
                exception_count: exceptions.len(),
                exceptions: &exceptions,
            })?;
        }
    }
    Ok(())
}

fn parse_radix_range(spec: &str) -> Result<(u64, u64)> {
    let parse = |s: &str| s.parse::<u64>().map_err(|_| anyhow!("invalid radix {s:?}"));
    let (lo, hi) = match spec.split_once(':') {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let m = parse(spec)?;
            (m, m)
        }
    };
    if lo < 2 || hi < lo {
        bail!("radix range must satisfy 2 <= lo <= hi, got {spec:?}");
    }
    Ok((lo, hi))
}

fn cmd_thresholds(args: &ThresholdsArgs, format: Format) -> Result<()> {
    if args.family != "mary" {
        bail!(
            "unsupported family {:?}; only `mary` has a justified scan bound",
            args.family
        );
    }
    let (lo, hi) = parse_radix_range(&args.m)?;
    let mut results: Vec<(u64, ThresholdResult)> = Vec::new();
    for m in lo..=hi {
        let bound = args.scan_bound.unwrap_or(5 * m * m + 4 * m);
        let set = PartSet::mary(m).expect("radix >= 2 checked");
        let table = CountTable::build(&set, bound);
        results.push((m, find_threshold(&set, m, bound, &table)?));
    }
    match format {
        Format::Text | Format::Csv => {
            let sep = if format == Format::Csv { "," } else { " " };
            println!("{}", ["m", "threshold", "witness_w", "witness_z"].join(sep));
            for (m, r) in &results {
                let (ww, wz) = match &r.tightness_witness {
                    Some(e) => (e.outcome.w.to_string(), e.outcome.z.to_string()),
                    None => (String::new(), String::new()),
                };
                println!(
                    "{}",
                    [m.to_string(), r.threshold.to_string(), ww, wz].join(sep)
                );
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                m: u64,
                scan_bound: u64,
                threshold: u64,
                exception_count: usize,
                tightness_witness: &'a Option<ExceptionRecord>,
            }
            let rows: Vec<Row> = results
                .iter()
                .map(|(m, r)| Row {
                    m: *m,
                    scan_bound: r.scan_bound,
                    threshold: r.threshold,
                    exception_count: r.exceptions.len(),
                    tightness_witness: &r.tightness_witness,
                })
                .collect();
            print_json(&rows)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Meta {
    tool_version: &'static str,
    invocation: String,
}

#[derive(Serialize)]
struct CertificateDocument {
    meta: Meta,
    #[serde(flatten)]
    certificate: BoCertificate,
}

fn cmd_certify(args: &CertifyArgs, format: Format) -> Result<()> {
    no_csv(format, "bo certify")?;
    let variant = match args.variant {
        Some(v) => v.into(),
        None => match gap_validator(&args.set, Variant::F) {
            GapVerdict::CertifiedFail { .. } => Variant::G,
            _ => Variant::F,
        },
    };
    let mut scheme = InductionScheme::default_for(&args.set, variant)?;
    if let Some(floor) = args.floor {
        scheme.floor = floor;
    }
    let bound = args.table_bound.unwrap_or(scheme.window().1 + 200);
    let table = CountTable::build(&args.set, bound);
    let certificate = certify_bo(&args.set, &scheme, &table);
    let doc = CertificateDocument {
        meta: Meta {
            tool_version: env!("CARGO_PKG_VERSION"),
            invocation: std::env::args().collect::<Vec<_>>().join(" "),
        },
        certificate,
    };
    match format {
        Format::Text => print!("{}", certificate_text(&doc)),
        Format::Json => print_json(&doc)?,
        Format::Csv => unreachable!(),
    }
    Ok(())
}

fn certificate_text(doc: &CertificateDocument) -> String {
    let c = &doc.certificate;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "tool {}  ({})",
        doc.meta.tool_version, doc.meta.invocation
    );
    let _ = writeln!(s, "set {}", c.set);
    let (lo, hi) = c.scheme.window();
    let _ = writeln!(
        s,
        "variant {}  floor {}  step {}  window [{lo}, {hi}]",
        c.scheme.variant, c.scheme.floor, c.scheme.step
    );
    for check in &c.checks {
        let state = if check.passed { "ok" } else { "FAIL" };
        let _ = writeln!(s, "check {}: {state} ({})", check.name, check.detail);
    }
    if let Some(h) = &c.hypotheses {
        for check in &h.checks {
            let state = if check.passed { "ok" } else { "FAIL" };
            let _ = writeln!(s, "hypothesis {}: {state} ({})", check.name, check.detail);
        }
        match &h.gap {
            Some(GapCertification::ClosedForm { argument }) => {
                let _ = writeln!(s, "gap certified by closed form: {argument}");
            }
            Some(GapCertification::ScanBounded { bound }) => {
                let _ = writeln!(s, "gap scan-verified up to {bound}");
            }
            None => {}
        }
    }
    if let Some(w) = &c.window {
        let _ = writeln!(
            s,
            "window pairs {} all strict {}",
            w.pairs_checked, w.all_strict
        );
    }
    if let Some(spot) = &c.spot_check {
        let _ = writeln!(
            s,
            "spot pairs {} (sums {}..={}) all strict {}",
            spot.pairs_checked, spot.sum_range.0, spot.sum_range.1, spot.all_strict
        );
    }
    for caveat in &c.caveats {
        let _ = writeln!(s, "caveat: {caveat}");
    }
    let _ = writeln!(s, "conclusion: {}", c.conclusion);
    let _ = writeln!(s, "valid: {}", c.valid);
    s
}

fn parse_partition(spec: &str) -> Result<Partition> {
    let parts: Vec<u64> = spec
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| anyhow!("invalid part {s:?}"))
        })
        .collect::<Result<_>>()?;
    Ok(Partition::from_unsorted(parts)?)
}

fn cmd_apply(args: &ApplyArgs, format: Format) -> Result<()> {
    no_csv(format, "inject apply")?;
    let lam = parse_partition(&args.partition)?;
    let variant: Variant = args.variant.into();
    let image = match variant {
        Variant::F => f_apply(&args.set, &lam, args.w, args.z)?,
        Variant::G => g_apply(&args.set, &lam, args.w, args.z)?,
    };
    match format {
        Format::Text => {
            println!("case {}", image.case);
            println!("left {}", image.left);
            println!("right {}", image.right);
        }
        Format::Json => print_json(&image)?,
        Format::Csv => unreachable!(),
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, format: Format) -> Result<()> {
    no_csv(format, "inject verify")?;
    let report = verify_injection_capped(&args.set, args.w, args.z, args.variant.into(), args.cap)?;
    match format {
        Format::Text => print!("{}", injection_text(&report)),
        Format::Json => print_json(&report)?,
        Format::Csv => unreachable!(),
    }
    Ok(())
}

fn injection_text(r: &InjectionReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "set {}  w {}  z {}  variant {}",
        r.set, r.w, r.z, r.variant
    );
    let _ = writeln!(s, "domain {}", r.domain_size);
    let _ = writeln!(s, "images {}", r.image_size);
    for (case, count) in &r.case_histogram {
        let _ = writeln!(s, "case {case}: {count}");
    }
    let _ = writeln!(s, "collisions {}", r.collisions.len());
    let _ = writeln!(s, "violations {}", r.violations.len());
    for warning in &r.warnings {
        let _ = writeln!(s, "warning: {warning}");
    }
    let _ = writeln!(s, "pass: {}", r.pass);
    s
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn random_unit_gcd_sets(args: &ConjectureArgs) -> Vec<PartSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut sets = Vec::with_capacity(args.sets);
    while sets.len() < args.sets {
        let size = rng.gen_range(2..=args.max_size.max(2));
        let mut elements = BTreeSet::new();
        while elements.len() < size {
            elements.insert(rng.gen_range(1..=args.max_element.max(2)));
        }
        let elements: Vec<u64> = elements.into_iter().collect();
        if elements.iter().copied().fold(0, gcd) != 1 {
            continue;
        }
        sets.push(PartSet::explicit(elements).expect("sorted positive elements"));
    }
    sets
}

fn cmd_conjecture(args: &ConjectureArgs, format: Format) -> Result<()> {
    let reports: Vec<ConjectureSetReport> = random_unit_gcd_sets(args)
        .iter()
        .map(|set| conjecture_scan_set(set, args.scan_bound))
        .collect::<apart_core::Result<_>>()?;
    match format {
        Format::Text | Format::Csv => {
            let csv = format == Format::Csv;
            let sep = if csv { "," } else { " " };
            let header = [
                "set",
                "part_min",
                "pairs",
                "exceptions",
                "equalities",
                "largest_w",
                "largest_z",
            ];
            println!("{}", header.join(sep));
            for r in &reports {
                let set = if csv {
                    format!("\"{}\"", r.set)
                } else {
                    r.set.clone()
                };
                let (lw, lz) = match &r.largest_exception {
                    Some(e) => (e.outcome.w.to_string(), e.outcome.z.to_string()),
                    None => (String::new(), String::new()),
                };
                let row = [
                    set,
                    r.part_min.to_string(),
                    r.pairs_checked.to_string(),
                    r.exception_count.to_string(),
                    r.equality_count.to_string(),
                    lw,
                    lz,
                ];
                println!("{}", row.join(sep));
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                seed: u64,
                scan_bound: u64,
                reports: &'a [ConjectureSetReport],
            }
            print_json(&Out {
                seed: args.seed,
                scan_bound: args.scan_bound,
                reports: &reports,
            })?;
        }
    }
    Ok(())
}
