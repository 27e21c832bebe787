use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use qc15::algebra::{cyclotomic_cosets, ell_m, FieldSpec, RingElement};
use qc15::bounds::{
    delta_prob_bound, delta_star, entropy_inv, goodness_indicator, goodness_records,
};
use qc15::ensemble::{
    count_ideals_by_dim, exact_delta_leq_prob, exact_fullrank_census, exact_fullrank_prob,
    ideal_count_bound, mc_delta_prob, mc_fullrank_prob, EnsembleReport,
};
use qc15::qc15::{construct_code, Qc15Code, DEFAULT_ENUM_LIMIT};
use qc15::Error;
use serde::Serialize;

/// Quasi-cyclic codes of index 1.5 over odd prime fields.
#[derive(Parser)]
#[command(name = "qc15", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build C_{a,a'} and print it as JSON.
    Construct(ConstructArgs),
    /// Minimum distance of C_{a,a'} as JSON.
    Distance(CodeArgs),
    /// Ensemble probabilities over a list of m (and delta), as CSV.
    Sweep(SweepArgs),
    /// Entropy thresholds, bounds and ideal counts as JSON.
    Bounds(BoundsArgs),
}

#[derive(Args)]
struct CodeArgs {
    /// Field size, an odd prime.
    #[arg(long)]
    q: u64,
    #[arg(long)]
    m: usize,
    /// Coefficients of a(X) in R_2m, lowest degree first, e.g. 2,1,2,1.
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Coefficients of a'(X) in R_m.
    #[arg(long = "a-prime", allow_hyphen_values = true)]
    a_prime: String,
    /// Ceiling on the number of codewords any enumeration may visit.
    #[arg(long = "max-enum", default_value_t = DEFAULT_ENUM_LIMIT)]
    max_enum: u64,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Also compute the minimum distance.
    #[arg(long)]
    distance: bool,
    /// Also list every codeword.
    #[arg(long = "list-codewords")]
    list_codewords: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    q: u64,
    /// Comma-separated values of m.
    #[arg(long, value_delimiter = ',', required = true)]
    m: Vec<usize>,
    /// Comma-separated values of delta (ignored with --fullrank).
    #[arg(long, value_delimiter = ',', default_value = "0.1")]
    delta: Vec<f64>,
    /// Sweep the whole ensemble where feasible instead of sampling.
    #[arg(long)]
    exact: bool,
    /// Estimate Pr(dim = m - 1) instead of the distance event.
    #[arg(long)]
    fullrank: bool,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, env = "QC15_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long = "max-enum", default_value_t = DEFAULT_ENUM_LIMIT)]
    max_enum: u64,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    m: Option<usize>,
    /// Evaluate the Pr(Delta <= delta) bound at this delta (needs --m).
    #[arg(long)]
    delta: Option<f64>,
    /// Count ideals of J+_2m by dimension (needs --m).
    #[arg(long)]
    ideals: bool,
    /// Report record-small goodness indicators for m in LO..HI.
    #[arg(long = "scan-m", value_parser = parse_range)]
    scan_m: Option<(usize, usize)>,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let lo = lo.trim().parse().map_err(|e| format!("{lo:?}: {e}"))?;
    let hi = hi.trim().parse().map_err(|e| format!("{hi:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

enum Failure {
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Self::Io(e.into())
    }
}

type CliResult = Result<(), Failure>;

fn build(args: &CodeArgs) -> qc15::Result<(FieldSpec, Qc15Code)> {
    let field = FieldSpec::new(args.q)?;
    let a = RingElement::parse(field, 2 * args.m, &args.a)?;
    let a_prime = RingElement::parse(field, args.m, &args.a_prime)?;
    Ok((field, construct_code(&a, &a_prime)?))
}

fn write_json<T: Serialize>(out: &mut impl Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn construct(args: &ConstructArgs, out: &mut impl Write) -> CliResult {
    let (_, code) = build(&args.code)?;
    let mut report = code.report();
    if args.distance {
        fill_distance(&code, args.code.max_enum, &mut report)?;
    }
    if args.list_codewords {
        let words = code.enumerate_codewords(args.code.max_enum)?;
        report.codewords = Some(words.iter().map(ToString::to_string).collect());
    }
    write_json(out, &report)?;
    Ok(())
}

fn fill_distance(
    code: &Qc15Code,
    limit: u64,
    report: &mut qc15::qc15::CodeReport,
) -> qc15::Result<()> {
    let d = code.min_distance(limit)?;
    report.min_distance = Some(d.d);
    report.relative_distance = Some(d.relative());
    report.witness = Some(d.witness.to_string());
    Ok(())
}

fn distance(args: &CodeArgs, out: &mut impl Write) -> CliResult {
    let (_, code) = build(args)?;
    let mut report = code.report();
    fill_distance(&code, args.max_enum, &mut report)?;
    write_json(out, &report)?;
    Ok(())
}

/// A sweep row. The first eleven columns are fixed; the rest say which event
/// the estimate is for and why a row may differ from what was asked.
#[derive(Serialize)]
struct Row {
    q: u32,
    m: usize,
    delta: Option<f64>,
    mode: &'static str,
    trials: u64,
    hits: u64,
    estimate: f64,
    exact: Option<f64>,
    bound: Option<f64>,
    zero_code_fraction: f64,
    seed: Option<u64>,
    event: &'static str,
    full_rank_fraction: f64,
    exact_fraction: Option<String>,
    note: String,
}

impl Row {
    fn new(r: EnsembleReport, note: String) -> Self {
        use qc15::ensemble::{Event, Mode};
        Self {
            q: r.q,
            m: r.m,
            delta: r.delta,
            mode: match r.mode {
                Mode::Exact => "exact",
                Mode::Montecarlo => "montecarlo",
            },
            trials: r.trials,
            hits: r.hits,
            estimate: r.estimate,
            exact: r.exact,
            bound: r.bound,
            zero_code_fraction: r.zero_code_fraction(),
            seed: r.seed,
            event: match r.event {
                Event::DeltaLeq => "delta_leq",
                Event::DeltaGt => "delta_gt",
                Event::FullRank => "full_rank",
            },
            full_rank_fraction: r.full_rank_fraction(),
            exact_fraction: r.exact_fraction,
            note,
        }
    }
}

fn sweep_row(args: &SweepArgs, field: FieldSpec, m: usize, delta: f64) -> qc15::Result<Row> {
    let exact = if !args.exact {
        None
    } else if args.fullrank {
        Some(exact_fullrank_census(field, m, args.max_enum))
    } else {
        Some(exact_delta_leq_prob(field, m, delta, args.max_enum))
    };
    let note = match exact {
        Some(Ok(r)) => return Ok(Row::new(r, String::new())),
        Some(Err(e @ Error::EnumerationTooLarge { .. })) => {
            format!("exact sweep infeasible ({e}); sampled instead")
        }
        Some(Err(e)) => return Err(e),
        None => String::new(),
    };
    let r = if args.fullrank {
        mc_fullrank_prob(field, m, args.trials, args.seed)?
    } else {
        mc_delta_prob(field, m, delta, args.trials, args.seed, args.max_enum)?
    };
    Ok(Row::new(r, note))
}

fn sweep(args: &SweepArgs, out: &mut impl Write) -> CliResult {
    let field = FieldSpec::new(args.q)?;
    for &m in &args.m {
        qc15::algebra::check_coprime(m, field)?;
    }
    let deltas: &[f64] = if args.fullrank {
        &[f64::NAN]
    } else {
        &args.delta
    };
    // compute everything first so a late failure leaves no partial table
    let mut rows = Vec::new();
    for &m in &args.m {
        for &delta in deltas {
            rows.push(sweep_row(args, field, m, delta)?);
        }
    }
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct IdealRow {
    d: usize,
    count: u64,
    bound: f64,
}

#[derive(Serialize)]
struct BoundsReport {
    q: u32,
    delta_star: f64,
    h_inv_half: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coset_sizes: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ell_m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    goodness_indicator: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact_fullrank_prob: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact_fullrank_fraction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta_prob_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ideals: Option<Vec<IdealRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    scan: Option<Vec<qc15::bounds::GoodnessRecord>>,
}

fn bounds(args: &BoundsArgs, out: &mut impl Write) -> CliResult {
    let field = FieldSpec::new(args.q)?;
    let q = field.p();
    let mut report = BoundsReport {
        q,
        delta_star: delta_star(q)?,
        h_inv_half: entropy_inv(q, 0.5)?,
        m: args.m,
        coset_sizes: None,
        ell_m: None,
        goodness_indicator: None,
        exact_fullrank_prob: None,
        exact_fullrank_fraction: None,
        delta: args.delta,
        delta_prob_bound: None,
        ideals: None,
        scan: None,
    };
    if args.m.is_none() && (args.delta.is_some() || args.ideals) {
        return Err(Error::Domain("--delta and --ideals need --m".into()).into());
    }
    if let Some(m) = args.m {
        let ell = ell_m(m, field)?;
        let fullrank = exact_fullrank_prob(field, m)?;
        report.coset_sizes = Some(cyclotomic_cosets(m, field)?.nonzero_sizes());
        report.ell_m = Some(ell);
        report.goodness_indicator = Some(goodness_indicator(m, field)?);
        report.exact_fullrank_prob = fullrank.to_f64();
        report.exact_fullrank_fraction = Some(fullrank.to_string());
        if let Some(delta) = args.delta {
            report.delta_prob_bound = Some(delta_prob_bound(field, m, delta)?);
        }
        if args.ideals {
            report.ideals = Some(
                count_ideals_by_dim(field, m)?
                    .into_iter()
                    .filter(|&(d, _)| d > 0)
                    .map(|(d, count)| IdealRow {
                        d,
                        count,
                        bound: ideal_count_bound(m, ell, d),
                    })
                    .collect(),
            );
        }
    }
    if let Some((lo, hi)) = args.scan_m {
        report.scan = Some(goodness_records(field, lo, hi));
    }
    write_json(out, &report)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let result = match &cli.command {
        Command::Construct(a) => construct(a, &mut out),
        Command::Distance(a) => distance(a, &mut out),
        Command::Sweep(a) => sweep(a, &mut out),
        Command::Bounds(a) => bounds(a, &mut out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        // a closed pipe (e.g. `| head`) is not worth reporting
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::EnumerationTooLarge { .. } => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}
