//! Command-line front end: build systems, bound and search eigenvectors,
//! certify flows and enumerate completely regular codes.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use stsflow::crc::{check_crc, construction, enumerate_equitable_bipartitions, expected_count, Code, ConstructionKind};
use stsflow::designs::{
    assmuss_mattson, binary_rank, bose, find_resolution, hamming_sts, read_sts, write_sts, SteinerTripleSystem,
    TauAssignment,
};
use stsflow::flows::{am_five_flow, first_eig_nzi, min_flow_search, resolvable_flow, FlowCertificate};
use stsflow::johnson_min::{best_upper, bound_report, brute_min};
use stsflow::json::{envelope, render, to_value, Status};
use stsflow::spectra::{block_graph, block_graph_eigenvalues};
use stsflow::{Error, Result};

#[derive(Parser)]
#[command(name = "stsflow", version, about = "Steiner triple systems, flows and small-norm eigenvectors")]
struct Cli {
    /// Seed for every randomized choice (`--tau random`).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print a compact `{"status", "payload"}` envelope instead of the bare payload.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress the timing line on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    /// Accepted for compatibility; all searches run on one thread.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build or read a Steiner triple system.
    #[command(subcommand)]
    Gen(Gen),
    /// Bounds and witnesses for first eigenvectors of Johnson graphs.
    #[command(subcommand)]
    Johnson(Johnson),
    /// Flow certificates.
    #[command(subcommand)]
    Flow(Flow),
    /// Completely regular codes in block graphs.
    #[command(subcommand)]
    Crc(Crc),
}

#[derive(Args)]
struct Output {
    /// Write the result to this file.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Gen {
    /// Bose construction of order 3m (m odd).
    Bose {
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Projective system of order 2^r − 1.
    Hamming {
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Assmus–Mattson doubling of a base system.
    Am {
        #[arg(long)]
        base: PathBuf,
        /// zero, one, seed:N or random (uses --seed).
        #[arg(long, default_value = "zero")]
        tau: String,
        #[command(flatten)]
        out: Output,
    },
    /// Validate a system file.
    Read {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum Johnson {
    /// Upper and lower bounds for J(n,k).
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Exhaustive minimum with entries bounded by --cap.
    Min {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        /// Bound on |u_i|; defaults to the largest entry of the best explicit vector.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// The best explicit vector with its verified norm.
    Witness {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
}

#[derive(Subcommand)]
enum Flow {
    /// Zero-sum 5-flow on the Assmus–Mattson doubling of --base.
    Am {
        #[arg(long)]
        base: PathBuf,
        #[arg(long, default_value = "zero")]
        tau: String,
        #[command(flatten)]
        out: Output,
    },
    /// Flow from a resolution found by search.
    Resolvable {
        #[arg(long)]
        sts: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Minimum-value flow by exhaustive search.
    Search {
        #[arg(long)]
        sts: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_value: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Nowhere-zero first eigenvector of the block graph.
    Firsteig {
        #[arg(long)]
        sts: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Re-verify a certificate file.
    Verify { cert: PathBuf },
}

#[derive(Subcommand)]
enum Crc {
    /// All equitable bipartitions for an eigenvalue.
    Enumerate {
        #[arg(long)]
        sts: PathBuf,
        /// first, second, or an integer.
        #[arg(long, default_value = "first", allow_hyphen_values = true)]
        eigenvalue: String,
        /// Time budget in seconds.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check a set of block indices (0-based, canonical block order).
    Check {
        #[arg(long)]
        sts: PathBuf,
        #[arg(long, value_delimiter = ',')]
        code: Vec<usize>,
    },
    /// Build a code from one of the five constructions.
    Construct {
        #[arg(long)]
        kind: u8,
        #[arg(long)]
        sts: PathBuf,
        #[arg(long)]
        point: Option<u32>,
        /// λ for construction 4, subsystem order for construction 5.
        #[arg(long)]
        param: Option<u32>,
    },
}

type Outcome = (Status, Value);

fn tau_for(spec: &str, base: &SteinerTripleSystem, seed: u64) -> Result<TauAssignment> {
    if spec == "random" {
        return Ok(TauAssignment::seeded(base.block_count(), seed));
    }
    TauAssignment::parse(spec, base.block_count())
}

fn sts_summary(sts: &SteinerTripleSystem, out: &Output) -> Result<Value> {
    let mut v = json!({
        "n": sts.order(),
        "b": sts.block_count(),
        "binary_rank": binary_rank(sts),
    });
    match &out.output {
        Some(path) => {
            write_sts(sts, path)?;
            v["output"] = json!(path.display().to_string());
        }
        None => v["blocks"] = json!(sts.raw_blocks()),
    }
    Ok(v)
}

fn emit_cert(cert: &FlowCertificate, out: &Output, extra: Option<Value>) -> Result<Value> {
    // re-verify what is about to be written
    let text = cert.to_json();
    FlowCertificate::from_json(&text)?;
    if let Some(path) = &out.output {
        std::fs::write(path, &text)?;
    }
    let mut v = cert.to_json_value();
    if let Some(extra) = extra {
        v["diagnostics"] = extra;
    }
    Ok(v)
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.cmd {
        Command::Gen(g) => match g {
            Gen::Bose { m, out } => Ok((Status::Ok, sts_summary(&bose(*m)?, out)?)),
            Gen::Hamming { r, out } => Ok((Status::Ok, sts_summary(&hamming_sts(*r)?, out)?)),
            Gen::Am { base, tau, out } => {
                let base = read_sts(base)?;
                let tau = tau_for(tau, &base, cli.seed)?;
                Ok((Status::Ok, sts_summary(&assmuss_mattson(&base, &tau)?, out)?))
            }
            Gen::Read { file, out } => Ok((Status::Ok, sts_summary(&read_sts(file)?, out)?)),
        },
        Command::Johnson(j) => match j {
            Johnson::Bounds { n, k } => Ok((Status::Ok, to_value(&bound_report(*n, *k)?)?)),
            Johnson::Min { n, k, cap } => {
                let cap = match cap {
                    Some(c) => *c,
                    None => {
                        let m = best_upper(*n, *k)?.u.norm_inf().ceil().to_integer();
                        u64::try_from(m).unwrap_or(64).clamp(1, 64)
                    }
                };
                let r = brute_min(*n, *k, cap)?;
                let status = if r.min.is_some() { Status::Ok } else { Status::Infeasible };
                Ok((status, to_value(&r)?))
            }
            Johnson::Witness { n, k } => Ok((Status::Ok, to_value(&best_upper(*n, *k)?)?)),
        },
        Command::Flow(f) => match f {
            Flow::Am { base, tau, out } => {
                let base = read_sts(base)?;
                let tau = tau_for(tau, &base, cli.seed)?;
                let r = am_five_flow(&base, &tau)?;
                Ok((Status::Ok, emit_cert(&r.certificate, out, Some(to_value(&r.diagnostics)?))?))
            }
            Flow::Resolvable { sts, out } => {
                let sts = read_sts(sts)?;
                match find_resolution(&sts) {
                    Some(res) => Ok((Status::Ok, emit_cert(&resolvable_flow(&sts, &res)?, out, None)?)),
                    None => Ok((Status::Infeasible, json!({ "order": sts.order(), "resolvable": false }))),
                }
            }
            Flow::Search { sts, max_value, out } => {
                let sts = read_sts(sts)?;
                match min_flow_search(&sts, *max_value)? {
                    Some(cert) => Ok((Status::Ok, emit_cert(&cert, out, None)?)),
                    None => Ok((
                        Status::Infeasible,
                        json!({ "order": sts.order(), "max_value": max_value, "flow": Value::Null }),
                    )),
                }
            }
            Flow::Firsteig { sts, out } => {
                let sts = read_sts(sts)?;
                let r = first_eig_nzi(&sts)?;
                let cert = r.certificate(&sts)?;
                Ok((Status::Ok, emit_cert(&cert, out, Some(json!({ "u": r.u, "norm": r.norm })))?))
            }
            Flow::Verify { cert } => {
                let c = FlowCertificate::from_json(&std::fs::read_to_string(cert)?)?;
                Ok((Status::Ok, json!({ "ok": true, "order": c.sts().order(), "value": c.value(), "kind": c.kind() })))
            }
        },
        Command::Crc(c) => match c {
            Crc::Enumerate { sts, eigenvalue, budget } => {
                let sts = read_sts(sts)?;
                let spec = block_graph_eigenvalues(sts.order())?;
                let theta = match eigenvalue.as_str() {
                    "first" => spec.theta1,
                    "second" => spec.theta2,
                    s => s.parse::<i64>().map_err(|_| Error::Precondition(format!("bad eigenvalue {s:?}")))?,
                };
                let e = enumerate_equitable_bipartitions(&sts, theta, budget.map(Duration::from_secs))?;
                let rank = binary_rank(&sts);
                let mut v = to_value(&e)?;
                v["partition_count"] = json!(e.partitions.len());
                v["code_count"] = json!(e.code_count());
                v["binary_rank"] = json!(rank);
                if theta == spec.theta1 {
                    v["expected_count"] = json!(expected_count(sts.order(), rank as u32)?);
                }
                Ok((Status::Ok, v))
            }
            Crc::Check { sts, code } => {
                let sts = read_sts(sts)?;
                let code = Code::new(code.clone(), sts.block_count())?;
                match check_crc(&block_graph(&sts), &code) {
                    Ok(r) => {
                        let mut v = to_value(&r)?;
                        v["eigenvalue"] = json!(r.eigenvalue());
                        Ok((Status::Ok, v))
                    }
                    Err(Error::NotCompletelyRegular { vertex, layer }) => Ok((
                        Status::Infeasible,
                        json!({ "completely_regular": false, "vertex": vertex, "layer": layer }),
                    )),
                    Err(e) => Err(e),
                }
            }
            Crc::Construct { kind, sts, point, param } => {
                let sts = read_sts(sts)?;
                let kind = ConstructionKind::from_index(*kind)?;
                match construction(&sts, kind, *point, *param) {
                    Ok(c) => Ok((Status::Ok, to_value(&c)?)),
                    Err(Error::SubstructureAbsent(what)) => {
                        Ok((Status::Infeasible, json!({ "kind": kind, "absent": what })))
                    }
                    Err(e) => Err(e),
                }
            }
        },
    }
}

fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (status, payload) = match run(&cli) {
        Ok(x) => x,
        Err(e) => {
            if cli.json {
                emit(&render(&envelope(Status::Error, json!({ "error": e.to_string() })), false));
            }
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if cli.json {
        emit(&render(&envelope(status, payload), false));
    } else {
        emit(&render(&payload, true));
    }
    if !cli.quiet {
        eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    }
    ExitCode::from(status.exit_code() as u8)
}
