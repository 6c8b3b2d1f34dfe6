//! Command-line front end: reproducible JSON reports on fibre structure,
//! stratum tables, worked-example verification, chart fuzzing and the full
//! verification grid.
//!
//! Exit codes: 0 on success, 1 when an invariant fails, 2 on validation
//! errors. Set `HF_LOG=info` (or `debug`) for progress logging.

use clap::{Args, Parser, Subcommand};
use hitchin_core::divisor::Divisor;
use hitchin_core::parmod::{restriction_kernel, u_infinity, u_mixed, u_zero, SubspaceWire};
use hitchin_core::redfibre::{ConnectivityGraph, StrataContext};
use hitchin_core::spectral::{fibre_report, BaseData, FibreReport, SectionData, SpectralError};
use hitchin_core::sweep;
use serde::{Deserialize, Serialize};
use std::io::Read;
use std::process::ExitCode;

const EXIT_INVARIANT: u8 = 1;
const EXIT_VALIDATION: u8 = 2;

#[derive(Parser)]
#[command(
    name = "hitchin-fibre",
    about = "Exact reports on the structure of rank-2 Hitchin fibres",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one section divisor and print the fibre report as JSON.
    Analyze(AnalyzeArgs),
    /// Enumerate the strata of a reducible-curve fibre.
    Strata(StrataArgs),
    /// Verify the worked parabolic-module overlap at one singularity.
    VerifyExample(VerifyExampleArgs),
    /// Fuzz the chart-level Higgs construction.
    Roundtrip(RoundtripArgs),
    /// Run the entire verification grid and print a pass/fail matrix.
    Sweep,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Genus of the base curve.
    #[arg(long)]
    g: Option<i64>,
    /// Degree of the determinant bundle.
    #[arg(long)]
    d: Option<i64>,
    /// Degree of the twisting bundle; derived from the divisor if omitted.
    #[arg(long)]
    dl: Option<i64>,
    /// Section divisor, e.g. `4p+2q` or a JSON object.
    #[arg(long)]
    ds: Option<String>,
    /// The twisting bundle is the square root cut out by the divisor.
    #[arg(long)]
    reducible: bool,
    /// Read the whole request from a JSON file (`-` for stdin).
    #[arg(long)]
    json: Option<String>,
    /// Embed the stratum table in the report (reducible regime).
    #[arg(long)]
    emit_strata: bool,
    /// Embed the connectivity graph in the report (reducible regime).
    #[arg(long)]
    emit_graph: bool,
}

#[derive(Args)]
struct StrataArgs {
    #[arg(long)]
    g: i64,
    #[arg(long)]
    d: i64,
    /// Square-root divisor, e.g. `2p` or a JSON object.
    #[arg(long)]
    dprime: String,
}

#[derive(Args)]
struct VerifyExampleArgs {
    /// Even singularity multiplicity.
    #[arg(long)]
    m: i64,
    /// Use the mixed-vanishing subspace (multiplicity divisible by 4).
    #[arg(long)]
    case2: bool,
}

#[derive(Args)]
struct RoundtripArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    trials: usize,
}

#[derive(Deserialize)]
struct AnalysisRequest {
    base: BaseRequest,
    section: SectionRequest,
    #[serde(default)]
    options: RequestOptions,
}

#[derive(Deserialize)]
struct BaseRequest {
    g: i64,
    d_l: Option<i64>,
    d: i64,
}

#[derive(Deserialize)]
struct SectionRequest {
    d_s: Divisor,
    #[serde(default)]
    l_is_square_root: bool,
}

#[derive(Deserialize, Default)]
struct RequestOptions {
    #[serde(default)]
    emit_strata: bool,
    #[serde(default)]
    emit_graph: bool,
    /// 0 quiet, 1 info, 2+ debug; HF_LOG takes precedence when set.
    #[serde(default)]
    verbosity: u8,
}

#[derive(Serialize)]
struct ValidationError {
    error: String,
    path: String,
}

#[derive(Serialize)]
struct StratumRow {
    d: Divisor,
    d_compact: String,
    m: i64,
    dim: i64,
    partner_m: i64,
    injectivity: hitchin_core::Injectivity,
    ramification_condition: String,
}

#[derive(Serialize)]
struct StrataOutput {
    context: StrataContext,
    strata: Vec<StratumRow>,
    graph: ConnectivityGraph,
    max_dim: i64,
}

#[derive(Serialize)]
struct AnalyzeOutput {
    report: FibreReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    strata: Option<Vec<StratumRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<ConnectivityGraph>,
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    env_logger::Builder::from_env(env_logger::Env::new().filter("HF_LOG")).init();
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Strata(args) => strata(args),
        Command::VerifyExample(args) => verify_example(args),
        Command::Roundtrip(args) => roundtrip(args),
        Command::Sweep => run_sweep(),
    }
}

fn fail_validation(error: impl ToString, path: &str) -> ExitCode {
    let payload = ValidationError {
        error: error.to_string(),
        path: path.to_string(),
    };
    eprintln!(
        "{}",
        serde_json::to_string(&payload).expect("serialize error")
    );
    ExitCode::from(EXIT_VALIDATION)
}

/// Accept a divisor in compact text (`2p+q`) or JSON object form.
fn parse_divisor(text: &str) -> Result<Divisor, String> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        serde_json::from_str(trimmed).map_err(|e| e.to_string())
    } else {
        trimmed
            .parse()
            .map_err(|e: hitchin_core::divisor::DivisorError| e.to_string())
    }
}

fn spectral_error_path(e: &SpectralError) -> &'static str {
    match e {
        SpectralError::GenusTooSmall(_) => "base.g",
        SpectralError::DegreeNotPositive(_) => "base.d_l",
        SpectralError::SectionNotEffective
        | SpectralError::DegreeMismatch { .. }
        | SpectralError::OddCuspCount => "section.d_s",
        SpectralError::FlagWithoutSquare => "section.l_is_square_root",
        SpectralError::InvariantViolation(_) => "",
    }
}

fn analyze(args: AnalyzeArgs) -> ExitCode {
    let request = match build_request(&args) {
        Ok(r) => r,
        Err(code) => return code,
    };
    if std::env::var_os("HF_LOG").is_none() {
        log::set_max_level(match request.options.verbosity {
            0 => log::LevelFilter::Warn,
            1 => log::LevelFilter::Info,
            _ => log::LevelFilter::Debug,
        });
    }
    log::info!("analyzing divisor {}", request.section.d_s);

    let d_l = match request.base.d_l {
        Some(d_l) => {
            if 2 * d_l != request.section.d_s.degree() {
                return fail_validation(
                    format!(
                        "divisor degree {} is not twice d_l = {d_l}",
                        request.section.d_s.degree()
                    ),
                    "base.d_l",
                );
            }
            d_l
        }
        None => {
            let deg = request.section.d_s.degree();
            if deg % 2 != 0 || deg <= 0 {
                return fail_validation(
                    format!("divisor degree {deg} is not twice a positive integer"),
                    "section.d_s",
                );
            }
            deg / 2
        }
    };

    let base = match BaseData::new(request.base.g, d_l, request.base.d) {
        Ok(b) => b,
        Err(e) => {
            let path = spectral_error_path(&e);
            return fail_validation(e, path);
        }
    };
    let section = match SectionData::new(request.section.d_s, request.section.l_is_square_root) {
        Ok(s) => s,
        Err(e) => {
            let path = spectral_error_path(&e);
            return fail_validation(e, path);
        }
    };

    let report = match fibre_report(&base, &section) {
        Ok(r) => r,
        Err(e @ SpectralError::InvariantViolation(_)) => {
            eprintln!("invariant failure: {e}");
            return ExitCode::from(EXIT_INVARIANT);
        }
        Err(e) => {
            let path = spectral_error_path(&e);
            return fail_validation(e, path);
        }
    };

    let mut output = AnalyzeOutput {
        report,
        strata: None,
        graph: None,
    };
    if matches!(output.report.branch, hitchin_core::Branch::Reducible)
        && (request.options.emit_strata || request.options.emit_graph)
    {
        let sqrt = output
            .report
            .input
            .d_s
            .half()
            .expect("reducible regime implies an even divisor");
        match StrataContext::new(base.g, base.d, sqrt) {
            Ok(ctx) => {
                if request.options.emit_strata {
                    output.strata = Some(stratum_rows(&ctx));
                }
                if request.options.emit_graph {
                    output.graph = Some(ctx.connectivity_graph());
                }
            }
            Err(e) => {
                eprintln!("invariant failure: {e}");
                return ExitCode::from(EXIT_INVARIANT);
            }
        }
    }

    println!(
        "{}",
        serde_json::to_string_pretty(&output).expect("serialize")
    );
    ExitCode::SUCCESS
}

fn build_request(args: &AnalyzeArgs) -> Result<AnalysisRequest, ExitCode> {
    if let Some(path) = &args.json {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| fail_validation(e, ""))?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(|e| fail_validation(e, ""))?
        };
        return serde_json::from_str(&text).map_err(|e| fail_validation(e, ""));
    }
    let (Some(g), Some(d), Some(ds)) = (args.g, args.d, args.ds.as_ref()) else {
        return Err(fail_validation(
            "provide --json or all of --g, --d, --ds",
            "",
        ));
    };
    let d_s = parse_divisor(ds).map_err(|e| fail_validation(e, "section.d_s"))?;
    Ok(AnalysisRequest {
        base: BaseRequest { g, d_l: args.dl, d },
        section: SectionRequest {
            d_s,
            l_is_square_root: args.reducible,
        },
        options: RequestOptions {
            emit_strata: args.emit_strata,
            emit_graph: args.emit_graph,
            verbosity: 0,
        },
    })
}

fn stratum_rows(ctx: &StrataContext) -> Vec<StratumRow> {
    ctx.enumerate_strata()
        .into_iter()
        .map(|(s, info)| StratumRow {
            d_compact: s.d.compact(),
            d: s.d,
            m: s.m,
            dim: info.dim,
            partner_m: info.partner_m,
            injectivity: info.injectivity,
            ramification_condition: info.ramification_condition,
        })
        .collect()
}

fn strata(args: StrataArgs) -> ExitCode {
    if args.g < 2 {
        return fail_validation("genus must be at least 2", "g");
    }
    let sqrt = match parse_divisor(&args.dprime) {
        Ok(d) => d,
        Err(e) => return fail_validation(e, "dprime"),
    };
    let ctx = match StrataContext::new(args.g, args.d, sqrt) {
        Ok(c) => c,
        Err(e) => return fail_validation(e, "dprime"),
    };
    log::info!("enumerating strata for D' = {}", ctx.sqrt_divisor);
    let rows = stratum_rows(&ctx);
    let max_dim = rows.iter().map(|r| r.dim).max().unwrap_or(0);
    let output = StrataOutput {
        graph: ctx.connectivity_graph(),
        context: ctx,
        strata: rows,
        max_dim,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&output).expect("serialize")
    );
    ExitCode::SUCCESS
}

#[derive(Serialize)]
struct VerifyOutput {
    m: i64,
    case2: bool,
    pass: bool,
    vanishing_subspace: SubspaceWire,
    twisted_subspace: SubspaceWire,
    plain_sections: SubspaceWire,
    twisted_sections: SubspaceWire,
}

fn verify_example(args: VerifyExampleArgs) -> ExitCode {
    let m = args.m;
    if m < 2 || m % 2 != 0 || (args.case2 && m % 4 != 0) {
        return fail_validation(
            "multiplicity must be even (and divisible by 4 with --case2)",
            "m",
        );
    }
    if m > 64 {
        return fail_validation("multiplicities above 64 are not supported", "m");
    }
    let n = 2 * m as usize;
    let (pass, partner, shift) = if args.case2 {
        (hitchin_core::parmod::verify_mixed_overlap(m), u_mixed(m), 1)
    } else {
        (
            hitchin_core::parmod::verify_nonfibration(m),
            u_infinity(m),
            m / 2,
        )
    };
    let plain = restriction_kernel(0, &u_zero(m), n)
        .expect("kernel")
        .truncate(n - shift as usize);
    let twisted = restriction_kernel(0, &partner, n)
        .and_then(|s| s.twist(shift))
        .expect("twist");
    let output = VerifyOutput {
        m,
        case2: args.case2,
        pass,
        vanishing_subspace: (&u_zero(m).space).into(),
        twisted_subspace: (&partner.space).into(),
        plain_sections: (&plain.space).into(),
        twisted_sections: (&twisted.space).into(),
    };
    println!("{}", if pass { "PASS" } else { "FAIL" });
    println!(
        "{}",
        serde_json::to_string_pretty(&output).expect("serialize")
    );
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INVARIANT)
    }
}

fn roundtrip(args: RoundtripArgs) -> ExitCode {
    log::info!("fuzzing {} trials with seed {}", args.trials, args.seed);
    let report = sweep::chart_fuzz(args.seed, args.trials);
    let pass = report.failures.is_empty();
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serialize")
    );
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INVARIANT)
    }
}

fn run_sweep() -> ExitCode {
    let results = sweep::run_all();
    let mut all_pass = true;
    for r in &results {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        println!(
            "{verdict}  criterion {}: {} ({})",
            r.index, r.name, r.detail
        );
        all_pass &= r.pass;
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INVARIANT)
    }
}
