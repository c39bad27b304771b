//! Command-line front end: verification campaigns, catalog listing,
//! sequence tables, the self-test suite, and machine-readable reports.
//!
//! Exit codes: 0 when every executed instance is Equal or skipped by its
//! domain predicate; 1 when any instance is Unequal or a predicate-gap
//! surfaced (or on I/O failure); 2 on usage errors.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use touchard::exactnum::{parse_halfint, rat, rat_int, HalfInt, Rat};
use touchard::identities::{
    list_catalog, lookup, verify_range, Counts, IdentityEntry, Instance, Outcome, Overrides,
    Verdict, VerificationReport,
};
use touchard::numeric::{
    parse_decimal_rat, verify_instance_numeric, BigFloat, NumCtx, NumericConfig, NumericInstance,
};
use touchard::sequences::{sequence_table, TABLE_NAMES};

#[derive(Parser)]
#[command(
    name = "touchard",
    about = "Exact verification of Catalan-number identity families",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the identity catalog.
    List,
    /// Verify identities over their parameter grids.
    Verify(VerifyArgs),
    /// Render a named sequence table as CSV.
    Table(TableArgs),
    /// Run the full property suite and the default catalog sweep.
    Selftest,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Exact,
    Numeric,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Human,
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated identity ids, or `all`.
    #[arg(long, value_delimiter = ',', required = true)]
    ids: Vec<String>,
    /// Clamp the primary parameter range to at most this value.
    #[arg(long)]
    n_max: Option<i64>,
    /// Override the `r` grid (comma-separated rationals like `1/2,-3/2,2`).
    #[arg(long, value_delimiter = ',')]
    r_values: Option<Vec<String>>,
    /// Override the `s` grid.
    #[arg(long, value_delimiter = ',')]
    s_values: Option<Vec<String>>,
    #[arg(long, value_enum, default_value = "exact")]
    backend: BackendArg,
    #[arg(long, value_enum, default_value = "human")]
    output: OutputArg,
    /// Write the report here (atomically); a human summary still prints.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Numeric-backend precision in bits (default 256, or TOUCHARD_PRECISION).
    #[arg(long)]
    precision: Option<u32>,
    /// Numeric-backend relative tolerance, e.g. `1e-40`.
    #[arg(long)]
    tol: Option<String>,
}

#[derive(Args)]
struct TableArgs {
    /// One of: catalan, central-binomial, harmonic, odd-harmonic,
    /// half-harmonic.
    #[arg(long)]
    name: String,
    /// Largest index to include.
    #[arg(long, default_value_t = 20)]
    max: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => cmd_list(),
        Command::Verify(args) => cmd_verify(args),
        Command::Table(args) => cmd_table(args),
        Command::Selftest => cmd_selftest(),
    }
}

fn cmd_list() -> ExitCode {
    for entry in list_catalog() {
        let spec = &entry.params;
        let mut params = format!("{} in [{}, {}]", spec.primary_name, spec.n_min, spec.n_max);
        for e in &spec.extras {
            params.push_str(&format!(
                ", {} in {{{}}}",
                e.name,
                e.values
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
        }
        let backend = match entry.backend() {
            touchard::identities::Backend::Both => "exact+numeric",
            _ => "exact",
        };
        println!("{:<28} [{backend}] {params}", entry.id);
        println!("    {}", entry.anchor);
    }
    ExitCode::SUCCESS
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn resolve_ids(ids: &[String]) -> Result<Vec<&'static IdentityEntry>, String> {
    if ids.iter().any(|s| s == "all") {
        if ids.len() != 1 {
            return Err("`all` cannot be combined with explicit ids".to_string());
        }
        return Ok(list_catalog());
    }
    let mut out = Vec::new();
    for id in ids {
        out.push(lookup(id).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn parse_rat_list(values: &[String]) -> Result<Vec<Rat>, String> {
    values
        .iter()
        .map(|s| {
            if let Some((n, d)) = s.split_once('/') {
                let n: i64 = n.trim().parse().map_err(|_| format!("bad rational: {s}"))?;
                let d: i64 = d.trim().parse().map_err(|_| format!("bad rational: {s}"))?;
                if d == 0 {
                    return Err(format!("zero denominator: {s}"));
                }
                Ok(rat(n, d))
            } else {
                parse_decimal_rat(s).ok_or_else(|| format!("bad rational: {s}"))
            }
        })
        .collect()
}

fn parse_lattice_list(values: &[String]) -> Result<Vec<HalfInt>, String> {
    values
        .iter()
        .map(|s| {
            parse_halfint(s).ok_or_else(|| {
                format!("{s} is not a half-integer; the exact backend needs lattice values")
            })
        })
        .collect()
}

fn numeric_config(args: &VerifyArgs) -> Result<NumericConfig, String> {
    let precision = match args.precision {
        Some(p) => p,
        None => match std::env::var("TOUCHARD_PRECISION") {
            Ok(v) => v
                .parse()
                .map_err(|_| format!("bad TOUCHARD_PRECISION: {v}"))?,
            Err(_) => 256,
        },
    };
    match &args.tol {
        Some(t) => {
            let q = parse_decimal_rat(t).ok_or_else(|| format!("bad tolerance: {t}"))?;
            let bf = BigFloat::from_rat(&q, precision.max(64));
            NumericConfig::new(precision, bf)
        }
        None => NumericConfig::with_default_tolerance(precision),
    }
}

fn rat_to_halfint(q: &Rat) -> Option<HalfInt> {
    let doubled = q * rat_int(2);
    if doubled.is_integer() {
        Some(HalfInt::from_doubled(doubled.to_integer()))
    } else {
        None
    }
}

fn render_numeric_params(primary: &str, inst: &NumericInstance) -> Vec<(String, String)> {
    let mut out = vec![(primary.to_string(), inst.n.to_string())];
    for (k, v) in &inst.extras {
        out.push((k.to_string(), v.to_string()));
    }
    out
}

/// Numeric sweep over an entry's grid, with the same deterministic ordering
/// as the exact sweep. Lattice instances honor the exact domain predicate so
/// the skip accounting matches; non-lattice grids get the minimal `s != 0`
/// guard and rely on pole detection for the rest.
fn verify_range_numeric(
    entry: &IdentityEntry,
    overrides: &Overrides,
    numeric_overrides: &[(String, Vec<Rat>)],
    ctx: &NumCtx,
) -> VerificationReport {
    let start = Instant::now();
    let spec = &entry.params;
    let n_max = overrides.n_max.map_or(spec.n_max, |m| m.min(spec.n_max));
    let mut grids: Vec<(&'static str, Vec<Rat>)> = Vec::new();
    for e in &spec.extras {
        let replaced = numeric_overrides
            .iter()
            .find(|(name, _)| name == e.name)
            .map(|(_, vals)| vals.clone());
        grids.push((
            e.name,
            replaced.unwrap_or_else(|| e.values.iter().map(|h| h.to_rat()).collect()),
        ));
    }
    let mut stack: Vec<Vec<(&'static str, Rat)>> = vec![Vec::new()];
    for (name, values) in &grids {
        let mut next = Vec::new();
        for prefix in &stack {
            for v in values {
                let mut p = prefix.clone();
                p.push((*name, v.clone()));
                next.push(p);
            }
        }
        stack = next;
    }
    let mut verdicts = Vec::new();
    for n in spec.n_min..=n_max {
        for extras in &stack {
            let ninst = NumericInstance {
                n,
                extras: extras.clone(),
            };
            let lattice: Option<Vec<(&'static str, HalfInt)>> = extras
                .iter()
                .map(|(k, v)| rat_to_halfint(v).map(|h| (*k, h)))
                .collect();
            if let Some(lattice_extras) = lattice {
                let inst = Instance {
                    n,
                    extras: lattice_extras,
                };
                if let Err(reason) = (spec.predicate)(&inst) {
                    verdicts.push(Verdict {
                        params: render_numeric_params(spec.primary_name, &ninst),
                        outcome: Outcome::Skipped {
                            reason,
                            predicate_gap: false,
                        },
                    });
                    continue;
                }
            } else if extras.iter().any(|(k, v)| *k == "s" && *v == rat_int(0)) {
                verdicts.push(Verdict {
                    params: render_numeric_params(spec.primary_name, &ninst),
                    outcome: Outcome::Skipped {
                        reason: "s = 0 excluded".to_string(),
                        predicate_gap: false,
                    },
                });
                continue;
            }
            verdicts.push(verify_instance_numeric(entry, &ninst, ctx));
        }
    }
    let mut counts = Counts::default();
    for v in &verdicts {
        counts.add(v);
    }
    VerificationReport {
        id: entry.id.to_string(),
        anchor: entry.anchor.to_string(),
        verdicts,
        counts,
        elapsed: start.elapsed(),
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let entries = match resolve_ids(&args.ids) {
        Ok(e) => e,
        Err(msg) => return usage_error(&msg),
    };
    let cfg = match numeric_config(&args) {
        Ok(c) => c,
        Err(msg) => return usage_error(&msg),
    };
    let needs_numeric = args.backend != BackendArg::Exact;

    let mut exact_overrides = Overrides {
        n_max: args.n_max,
        extra_values: Vec::new(),
    };
    if args.backend != BackendArg::Numeric {
        for (name, vals) in [("r", &args.r_values), ("s", &args.s_values)] {
            if let Some(vals) = vals {
                match parse_lattice_list(vals) {
                    Ok(parsed) => exact_overrides
                        .extra_values
                        .push((name.to_string(), parsed)),
                    Err(msg) => return usage_error(&msg),
                }
            }
        }
    }
    let numeric_overrides: Vec<(String, Vec<Rat>)> = if needs_numeric {
        let mut out = Vec::new();
        for (name, vals) in [("r", &args.r_values), ("s", &args.s_values)] {
            if let Some(vals) = vals {
                match parse_rat_list(vals) {
                    Ok(parsed) => out.push((name.to_string(), parsed)),
                    Err(msg) => return usage_error(&msg),
                }
            }
        }
        out
    } else {
        Vec::new()
    };

    let ctx = needs_numeric.then(|| NumCtx::new(cfg.clone()));

    let mut reports: Vec<VerificationReport> = Vec::new();
    match args.backend {
        BackendArg::Exact => {
            for entry in &entries {
                reports.push(verify_range(entry, &exact_overrides));
            }
        }
        BackendArg::Numeric => {
            let ctx = ctx.as_ref().unwrap();
            for entry in entries.iter().filter(|e| e.numeric_sides.is_some()) {
                reports.push(verify_range_numeric(
                    entry,
                    &exact_overrides,
                    &numeric_overrides,
                    ctx,
                ));
            }
            if reports.is_empty() {
                return usage_error("none of the selected identities has a numeric backend");
            }
        }
        BackendArg::Both => {
            for entry in &entries {
                reports.push(verify_range(entry, &exact_overrides));
            }
            let ctx = ctx.as_ref().unwrap();
            for entry in entries.iter().filter(|e| e.numeric_sides.is_some()) {
                let mut r =
                    verify_range_numeric(entry, &exact_overrides, &numeric_overrides, ctx);
                r.id = format!("{} (numeric)", r.id);
                reports.push(r);
            }
        }
    }

    let meta = report::RunMeta {
        timestamp: report::timestamp(),
        backend: match args.backend {
            BackendArg::Exact => "exact",
            BackendArg::Numeric => "numeric",
            BackendArg::Both => "both",
        }
        .to_string(),
        precision: cfg.precision_bits,
        n_max: args.n_max,
        r_values: args.r_values.clone(),
        s_values: args.s_values.clone(),
    };

    let rendered = match args.output {
        OutputArg::Human => report::human_summary(&reports),
        OutputArg::Json => {
            let mut s = serde_json::to_string_pretty(&report::to_json(&meta, &reports)).unwrap();
            s.push('\n');
            s
        }
        OutputArg::Csv => report::to_csv(&reports),
    };

    if let Some(path) = &args.out {
        if let Err(e) = report::write_atomic(path, &rendered) {
            eprintln!("error: failed to write {}: {e}", path.display());
            return ExitCode::from(1);
        }
        print!("{}", report::human_summary(&reports));
        println!("report written to {}", path.display());
    } else {
        print!("{rendered}");
    }

    if reports.iter().any(|r| !r.passed()) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_table(args: TableArgs) -> ExitCode {
    let table = match sequence_table(&args.name, args.max) {
        Some(t) => t,
        None => {
            return usage_error(&format!(
                "unknown table {:?}; available: {}",
                args.name,
                TABLE_NAMES.join(", ")
            ))
        }
    };
    let ctx = NumCtx::default();
    let mut out = String::from("index,exact,decimal\n");
    for (i, v) in table.values.iter().enumerate() {
        let decimal = ctx.eval_constexpr(v).to_decimal(30);
        out.push_str(&format!("{i},{v},{decimal}\n"));
    }
    if let Some(path) = &args.out {
        if let Err(e) = report::write_atomic(path, &out) {
            eprintln!("error: failed to write {}: {e}", path.display());
            return ExitCode::from(1);
        }
        println!("table written to {}", path.display());
    } else {
        print!("{out}");
    }
    ExitCode::SUCCESS
}

fn cmd_selftest() -> ExitCode {
    let start = Instant::now();
    let results = touchard::selftest::run_all();
    let mut failed = 0;
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{status}  {:<38} {}", r.name, r.detail);
        if !r.passed {
            failed += 1;
        }
    }
    println!(
        "{}/{} checks passed in {:.1}s",
        results.len() - failed,
        results.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
