//! `lrsw`: exact reports on linearized Reed-Solomon codes.
//!
//! Subcommands: `info`, `distribution`, `hierarchy`, `encode`, `verify`.
//! Exit codes: 0 success, 2 invalid input, 3 verification mismatch.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use lrsw::{
    brute_distribution, build_field, encode, full_distribution, jsonnum, qbinom, weight_hierarchy,
    CodeParams, DistributionReport, FieldCtx, MessageVector, ReportParams, DEFAULT_ENUMERATION_CAP,
    DEFAULT_VERIFY_GRID,
};

#[derive(Parser)]
#[command(
    name = "lrsw",
    version,
    about = "Linearized Reed-Solomon higher weight reports"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Show the derived parameters and the field realization.
    Info {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Emit the closed-form higher weight distribution.
    Distribution {
        #[command(flatten)]
        params: ParamArgs,
        /// Restrict the rows to one subspace dimension.
        #[arg(long)]
        r: Option<u32>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Emit the weight hierarchy d_1..d_k.
    Hierarchy {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Encode a message and print the codeword symbols as element indices.
    Encode {
        #[command(flatten)]
        params: ParamArgs,
        /// The k message symbols, as element indices in [0, p^m).
        #[arg(required = true)]
        message: Vec<u64>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run the brute-force enumeration against the closed form over a
    /// parameter grid and report any discrepancy.
    Verify {
        /// Grid file with one `p m d k` tuple per line; defaults to the
        /// built-in grid.
        #[arg(long)]
        grid: Option<PathBuf>,
        /// Refuse enumerations with more subspaces than this.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct ParamArgs {
    /// Field characteristic (prime).
    #[arg(long)]
    p: u64,
    /// Extension degree of the ambient field F_{p^m}.
    #[arg(long)]
    m: u32,
    /// Frobenius stride; e = gcd(m, d).
    #[arg(long)]
    d: u32,
    /// Code dimension; must satisfy k <= m/e.
    #[arg(long)]
    k: u32,
}

#[derive(Args)]
struct OutArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

struct Invalid(String);

impl From<lrsw::Error> for Invalid {
    fn from(e: lrsw::Error) -> Self {
        Invalid(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Invalid> {
    match cmd {
        Cmd::Info { params, out } => {
            let params = params.validate()?;
            emit(&out, render_info(&params, out.format))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Distribution { params, r, out } => {
            let params = params.validate()?;
            if let Some(r) = r {
                if r == 0 || r > params.k() {
                    return Err(Invalid(format!("r out of range (r={r}, k={})", params.k())));
                }
            }
            let mut report = full_distribution(&params);
            if let Some(r) = r {
                report.rows.retain(|row| row.r == r);
            }
            emit(&out, render_distribution(&report, out.format))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Hierarchy { params, out } => {
            let params = params.validate()?;
            emit(&out, render_hierarchy(&params, out.format))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Encode {
            params,
            message,
            out,
        } => {
            let params = params.validate()?;
            let ctx = build_field(params)?;
            let codeword = encode_message(&ctx, &message)?;
            emit(
                &out,
                render_encode(&params, &message, &codeword, out.format),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { grid, cap, out } => {
            let grid = match grid {
                Some(path) => parse_grid_file(&path)?,
                None => DEFAULT_VERIFY_GRID.to_vec(),
            };
            run_verify(&grid, cap, &out)
        }
    }
}

impl ParamArgs {
    fn validate(&self) -> Result<CodeParams, Invalid> {
        Ok(CodeParams::new(self.p, self.m, self.d, self.k)?)
    }
}

fn emit(out: &OutArgs, body: String) -> Result<(), Invalid> {
    match &out.out {
        Some(path) => fs::write(path, body)
            .map_err(|e| Invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// info
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct FieldInfo {
    modulus: Vec<u64>,
    primitive: u64,
    subfield_basis: Vec<u64>,
}

#[derive(Serialize)]
struct InfoReport {
    params: ReportParams,
    /// Present only when the field fits the table cap.
    field: Option<FieldInfo>,
}

fn render_info(params: &CodeParams, format: Format) -> String {
    let field = build_field(*params).ok().map(|ctx| FieldInfo {
        modulus: ctx.modulus().to_vec(),
        primitive: ctx.primitive().index(),
        subfield_basis: ctx.subfield_basis().iter().map(|b| b.index()).collect(),
    });
    match format {
        Format::Json => {
            let report = InfoReport {
                params: params.into(),
                field,
            };
            to_json_line(&report)
        }
        Format::Csv => {
            let mut s = String::from("p,m,d,e,k,n\n");
            let _ = writeln!(
                s,
                "{},{},{},{},{},{}",
                params.p(),
                params.m(),
                params.d(),
                params.e(),
                params.k(),
                params.code_length()
            );
            s
        }
    }
}

// ---------------------------------------------------------------------------
// distribution / hierarchy
// ---------------------------------------------------------------------------

fn render_distribution(report: &DistributionReport, format: Format) -> String {
    match format {
        Format::Json => to_json_line(report),
        Format::Csv => {
            let p = &report.params;
            let mut s = String::from("p,m,d,e,k,r,i,weight,count\n");
            for row in &report.rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{}",
                    p.p, p.m, p.d, p.e, p.k, row.r, row.i, row.weight, row.count
                );
            }
            s
        }
    }
}

#[derive(Serialize)]
struct HierarchyReport {
    params: ReportParams,
    #[serde(with = "jsonnum::int_seq")]
    hierarchy: Vec<BigInt>,
}

fn render_hierarchy(params: &CodeParams, format: Format) -> String {
    let hierarchy = weight_hierarchy(params);
    match format {
        Format::Json => to_json_line(&HierarchyReport {
            params: params.into(),
            hierarchy,
        }),
        Format::Csv => {
            let mut s = String::from("p,m,d,e,k,r,d_r\n");
            for (idx, d_r) in hierarchy.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    params.p(),
                    params.m(),
                    params.d(),
                    params.e(),
                    params.k(),
                    idx + 1,
                    d_r
                );
            }
            s
        }
    }
}

// ---------------------------------------------------------------------------
// encode
// ---------------------------------------------------------------------------

fn encode_message(ctx: &FieldCtx, message: &[u64]) -> Result<Vec<u64>, Invalid> {
    let k = ctx.params().k() as usize;
    if message.len() != k {
        return Err(Invalid(format!(
            "message has {} symbols, expected k = {k}",
            message.len()
        )));
    }
    let symbols = message
        .iter()
        .map(|&v| {
            ctx.element(v).ok_or_else(|| {
                Invalid(format!(
                    "message symbol {v} out of range [0, {})",
                    ctx.order()
                ))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let codeword = encode(ctx, &MessageVector(symbols));
    Ok(codeword.0.iter().map(|x| x.index()).collect())
}

#[derive(Serialize)]
struct EncodeReport {
    params: ReportParams,
    message: Vec<u64>,
    codeword: Vec<u64>,
}

fn render_encode(params: &CodeParams, message: &[u64], codeword: &[u64], format: Format) -> String {
    match format {
        Format::Json => to_json_line(&EncodeReport {
            params: params.into(),
            message: message.to_vec(),
            codeword: codeword.to_vec(),
        }),
        Format::Csv => {
            let mut s = String::from("t,symbol\n");
            for (t, sym) in codeword.iter().enumerate() {
                let _ = writeln!(s, "{t},{sym}");
            }
            s
        }
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct Mismatch {
    r: u32,
    weight: u64,
    #[serde(with = "jsonnum::count")]
    brute: BigInt,
    #[serde(with = "jsonnum::count")]
    closed: BigInt,
}

#[derive(Serialize)]
struct PointOutcome {
    params: ReportParams,
    pass: bool,
    mismatches: Vec<Mismatch>,
}

#[derive(Serialize)]
struct VerifySummary {
    cap: u64,
    grid: Vec<PointOutcome>,
    all_pass: bool,
}

fn parse_grid_file(path: &PathBuf) -> Result<Vec<(u64, u32, u32, u32)>, Invalid> {
    let text = fs::read_to_string(path)
        .map_err(|e| Invalid(format!("cannot read {}: {e}", path.display())))?;
    let mut grid = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(Invalid(format!(
                "{}:{}: expected 4 whitespace-separated integers `p m d k`",
                path.display(),
                lineno + 1
            )));
        }
        let parse = |s: &str| {
            s.parse::<u64>().map_err(|_| {
                Invalid(format!(
                    "{}:{}: invalid integer {s:?}",
                    path.display(),
                    lineno + 1
                ))
            })
        };
        let small = |v: u64| {
            u32::try_from(v).map_err(|_| {
                Invalid(format!("{}:{}: value {v} out of range", path.display(), lineno + 1))
            })
        };
        grid.push((
            parse(fields[0])?,
            small(parse(fields[1])?)?,
            small(parse(fields[2])?)?,
            small(parse(fields[3])?)?,
        ));
    }
    if grid.is_empty() {
        return Err(Invalid(format!("{}: empty grid", path.display())));
    }
    Ok(grid)
}

fn run_verify(grid: &[(u64, u32, u32, u32)], cap: u64, out: &OutArgs) -> Result<ExitCode, Invalid> {
    // Validate every grid point and its enumeration size before doing any
    // enumeration work.
    let mut points: Vec<(CodeParams, FieldCtx)> = Vec::with_capacity(grid.len());
    for &(p, m, d, k) in grid {
        let params = CodeParams::new(p, m, d, k)
            .map_err(|e| Invalid(format!("grid point p={p} m={m} d={d} k={k}: {e}")))?;
        let ctx = build_field(params)
            .map_err(|e| Invalid(format!("grid point p={p} m={m} d={d} k={k}: {e}")))?;
        let q = BigInt::from(ctx.order());
        for r in 1..=k {
            let count = qbinom::gauss_binomial(k as usize, r as usize, &q);
            if count > BigInt::from(cap) {
                return Err(Invalid(format!(
                    "grid point p={p} m={m} d={d} k={k}: enumeration of {count} subspaces \
                     refused: exceeds cap {cap}"
                )));
            }
        }
        points.push((params, ctx));
    }

    let fault = std::env::var_os("LRSW_VERIFY_FAULT").is_some_and(|v| !v.is_empty());

    let outcomes: Vec<PointOutcome> = points
        .par_iter()
        .enumerate()
        .map(|(idx, (params, ctx))| {
            let report = full_distribution(params);
            let mut mismatches = Vec::new();
            for r in 1..=params.k() {
                let brute = brute_distribution(ctx, r, cap).expect("cap pre-checked");
                let mut closed: Vec<(u64, BigInt)> = report
                    .rows_for(r)
                    .map(|row| {
                        (
                            row.weight.to_u64().expect("table-backed weight"),
                            row.count.clone(),
                        )
                    })
                    .collect();
                // Fault-injection hook for tests: corrupt one closed count.
                if fault && idx == 0 && r == 1 {
                    closed[0].1 += 1;
                }
                let mut weights: Vec<u64> = closed
                    .iter()
                    .map(|(w, _)| *w)
                    .chain(brute.keys().copied())
                    .collect();
                weights.sort_unstable();
                weights.dedup();
                for w in weights {
                    let closed_count = closed
                        .iter()
                        .find(|(cw, _)| *cw == w)
                        .map(|(_, c)| c.clone())
                        .unwrap_or_default();
                    let brute_count = brute.get(&w).cloned().unwrap_or_default();
                    if closed_count != brute_count {
                        mismatches.push(Mismatch {
                            r,
                            weight: w,
                            brute: brute_count,
                            closed: closed_count,
                        });
                    }
                }
            }
            PointOutcome {
                params: params.into(),
                pass: mismatches.is_empty(),
                mismatches,
            }
        })
        .collect();

    for outcome in &outcomes {
        let p = &outcome.params;
        if outcome.pass {
            eprintln!("PASS p={} m={} d={} k={}", p.p, p.m, p.d, p.k);
        } else {
            eprintln!(
                "FAIL p={} m={} d={} k={} ({} mismatched counts)",
                p.p,
                p.m,
                p.d,
                p.k,
                outcome.mismatches.len()
            );
        }
    }

    let all_pass = outcomes.iter().all(|o| o.pass);
    let summary = VerifySummary {
        cap,
        grid: outcomes,
        all_pass,
    };
    let body = match out.format {
        Format::Json => to_json_line(&summary),
        Format::Csv => {
            let mut s = String::from("p,m,d,e,k,status,mismatches\n");
            for o in &summary.grid {
                let p = &o.params;
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    p.p,
                    p.m,
                    p.d,
                    p.e,
                    p.k,
                    if o.pass { "PASS" } else { "FAIL" },
                    o.mismatches.len()
                );
            }
            s
        }
    };
    emit(out, body)?;
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report serialization is infallible");
    s.push('\n');
    s
}
