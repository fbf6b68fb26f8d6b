use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use zrank_core::bounds::{OracleBounds, BOUNDS_ENV};
use zrank_core::cauchy::{nonsingularity_sweep, Shard};
use zrank_core::verify::{inspect_shape, sharded_shapes, verify_shape, ShapeSweepSummary, Status, VerificationRecord};
use zrank_core::SkewShape;

const PASS: u8 = 0;
const FOUND: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "zrank",
    version,
    about = "Rank and zrank of skew shapes, restricted Cauchy matrices"
)]
#[command(
    after_help = "Oracle bounds can be overridden with ZRANK_ORACLE_BOUNDS, e.g. decomp_cells=12,interval_sets=100000.\n\
Exit codes: 0 all checks pass, 1 counterexample or failed check, 2 usage or parse error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the code, snakes, I_0, greedy strips, s(1^t) and y of a shape.
    Inspect {
        /// Shape literal such as 7,6,6,3/3,1.
        shape: SkewShape,
        #[arg(long)]
        json: bool,
    },
    /// Run every cross-check on one shape and print the record as JSON.
    Verify { shape: SkewShape },
    /// Verify every canonical shape up to a size.
    SweepShapes {
        #[arg(long)]
        max_cells: usize,
        /// Take every N-th shape starting at the I-th, as I/N.
        #[arg(long, default_value = "1/1")]
        shard: Shard,
        /// One JSON record per line, then a summary line.
        #[arg(long)]
        json: bool,
    },
    /// Check every restricted Cauchy matrix in bounds for nonsingularity.
    SweepCauchy {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        max_value: i64,
        #[arg(long, default_value = "1/1")]
        shard: Shard,
    },
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a ShapeSweepSummary,
}

fn json_line<T: Serialize>(out: &mut impl Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}

fn record_line(r: &VerificationRecord) -> String {
    let status = match r.status {
        Status::Ok => "ok",
        Status::Counterexample => "COUNTEREXAMPLE",
        Status::Error => "ERROR",
    };
    let mut line = format!(
        "{status} {} rank={} zrank={} y={}",
        r.shape, r.rank, r.zrank, r.y_jacobi_trudi
    );
    for n in &r.notes {
        line.push_str(&format!(" [{n}]"));
    }
    line
}

fn exit_for(ok: bool) -> u8 {
    if ok {
        PASS
    } else {
        FOUND
    }
}

fn run(command: Command, bounds: &OracleBounds) -> io::Result<u8> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match command {
        Command::Inspect { shape, json } => {
            let report = inspect_shape(&shape);
            if json {
                json_line(&mut out, &report)?;
            } else {
                out.write_all(report.render().as_bytes())?;
            }
            PASS
        }
        Command::Verify { shape } => {
            let record = verify_shape(&shape, bounds);
            json_line(&mut out, &record)?;
            exit_for(record.status == Status::Ok)
        }
        Command::SweepShapes { max_cells, shard, json } => {
            let mut summary = ShapeSweepSummary::new(max_cells, shard);
            for shape in sharded_shapes(max_cells, shard) {
                let record = verify_shape(&shape, bounds);
                summary.add(&record);
                if json {
                    json_line(&mut out, &record)?;
                } else {
                    writeln!(out, "{}", record_line(&record))?;
                }
                if summary.total.is_multiple_of(10_000) {
                    eprintln!("{} shapes", summary.total);
                }
            }
            if json {
                json_line(&mut out, &SummaryLine { summary: &summary })?;
            } else {
                writeln!(
                    out,
                    "total={} ok={} counterexamples={} errors={}",
                    summary.total, summary.ok, summary.counterexamples, summary.errors
                )?;
            }
            exit_for(summary.all_ok())
        }
        Command::SweepCauchy {
            max_order,
            max_value,
            shard,
        } => {
            let report = nonsingularity_sweep(max_order, max_value, shard);
            json_line(&mut out, &report)?;
            eprintln!(
                "{} specs, {} singular, {} violations",
                report.total,
                report.singular,
                report.violations.len()
            );
            exit_for(report.ok())
        }
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bounds = match OracleBounds::from_env() {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {BOUNDS_ENV}: {e}");
            return ExitCode::from(USAGE);
        }
    };
    match run(cli.command, &bounds) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::from(PASS),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(FOUND)
        }
    }
}
