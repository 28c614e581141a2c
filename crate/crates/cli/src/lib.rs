//! The `graycode` command line.
//!
//! Exit status: 0 on success (including `answer=no`), 1 on input errors and
//! failed verifications, 2 on usage errors, 3 when a search budget or
//! brute-force bound is exceeded.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use graycode::error::Error;
use graycode::objects::Object;
use graycode::reductions::{reduce_instance_to, ReductionTag};
use graycode::solver::ucycle::{solve_debruijn_subset, solve_shorthand_ucycle};
use graycode::solver::{
    count_hamilton_paths, solve_instance, verify_certificate, verify_cyclic_certificate, SolverConfig,
    DEFAULT_BUDGET,
};
use graycode::{gen, io, verify, FlipFamily, FlipGraph, Instance, Kind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "graycode", version, about = "Gray codes on restricted object lists")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// Instance file.
    #[arg(long = "in")]
    input: PathBuf,
    /// Override the flip family named in the file header.
    #[arg(long)]
    flip: Option<FlipFamily>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Node budget before the search gives up.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the instance has a Gray code (a Hamilton path).
    Solve {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        search: SearchArgs,
        /// Require the code to be cyclic.
        #[arg(long)]
        cyclic: bool,
        /// Certificate file written on a yes answer.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the flip graph as an edge list.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Decide whether the instance has a cyclic Gray code.
    Cycle {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count Gray codes by exhaustive search (small instances only).
    Count {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Map an instance through a reduction.
    Reduce {
        #[arg(long)]
        tag: ReductionTag,
        #[command(flatten)]
        instance: InstanceArgs,
        /// Target instance file.
        #[arg(long)]
        out: PathBuf,
        /// Target flip family, for reductions with several.
        #[arg(long)]
        target_flip: Option<FlipFamily>,
    },
    /// Check a certificate against an instance.
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        cyclic: bool,
    },
    /// Check a reduction's adjacency, injectivity and parsimony properties.
    VerifyReduction {
        #[arg(long)]
        tag: ReductionTag,
        /// Size of the canonical source instance.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Check this source instance instead of the canonical one.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Also check random sub-instances drawn with this seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Universal cycle (or path) for register shifts or shorthand rotations.
    Ucycle {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        cyclic: bool,
        /// Sequence file written on a yes answer.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a named instance: abstract-no, abstract-yes, full-B<n>, full-S<n>, grid-sample.
    Gen {
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        flip: Option<FlipFamily>,
        /// Keep a random subset of this many objects.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let limit = matches!(e, Error::ResourceLimit { .. } | Error::BoundExceeded { .. });
            if limit {
                let _ = writeln!(out, "answer=unknown");
            }
            let _ = writeln!(err, "error: {e}");
            if limit {
                EXIT_LIMIT
            } else {
                EXIT_FAILURE
            }
        }
    }
}

fn load(args: &InstanceArgs) -> graycode::Result<Instance> {
    let text = std::fs::read_to_string(&args.input)?;
    io::parse_instance_with_flip(&text, args.flip)
}

fn emit(out: &mut dyn Write, text: &str) -> graycode::Result<()> {
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn solve(
    instance: &InstanceArgs,
    search: &SearchArgs,
    cyclic: bool,
    cert_out: Option<&PathBuf>,
    out: &mut dyn Write,
) -> graycode::Result<i32> {
    let inst = load(instance)?;
    let config = SolverConfig { budget: search.budget, threads: search.threads };
    let result = solve_instance(&inst, cyclic, &config)?;
    emit(out, &result.to_record())?;
    if let (Some(path), Some(cert)) = (cert_out, &result.certificate) {
        io::write_certificate(path, cert)?;
    }
    Ok(EXIT_OK)
}

fn execute(command: Command, out: &mut dyn Write) -> graycode::Result<i32> {
    match command {
        Command::Solve { instance, search, cyclic, out: cert, graph } => {
            if let Some(path) = graph {
                let g = graycode::build_flip_graph(&load(&instance)?)?;
                std::fs::write(path, g.to_edge_list())?;
            }
            solve(&instance, &search, cyclic, cert.as_ref(), out)
        }
        Command::Cycle { instance, search, out: cert } => solve(&instance, &search, true, cert.as_ref(), out),
        Command::Count { instance } => {
            let graph: FlipGraph = graycode::build_flip_graph(&load(&instance)?)?;
            let count = count_hamilton_paths(&graph)?;
            emit(out, &format!("count={count}\n"))?;
            Ok(EXIT_OK)
        }
        Command::Reduce { tag, instance, out: path, target_flip } => {
            let source = load(&instance)?;
            let flip = target_flip.unwrap_or(tag.target_flip());
            match reduce_instance_to(&source, tag, flip) {
                Ok(target) => {
                    io::write_instance(&path, &target)?;
                    emit(
                        out,
                        &format!(
                            "tag={tag}\nobjects={}\ntarget={}\n",
                            target.len(),
                            io::format_header(&target)
                        ),
                    )?;
                    Ok(EXIT_OK)
                }
                Err(Error::NoInstance { case, gap }) => {
                    emit(out, &format!("tag={tag}\nanswer=no\ncase={case}\ngap={gap}\n"))?;
                    Ok(EXIT_OK)
                }
                Err(e) => Err(e),
            }
        }
        Command::Verify { instance, cert, cyclic } => {
            let inst = load(&instance)?;
            let cert = io::read_certificate(cert)?;
            let valid = if cyclic {
                verify_cyclic_certificate(&inst, &cert)?
            } else {
                verify_certificate(&inst, &cert)?
            };
            emit(out, &format!("valid={valid}\n"))?;
            Ok(if valid { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::VerifyReduction { tag, n, input, seed, samples } => {
            let mut report = match &input {
                Some(path) => verify::check_reduction(tag, &io::read_instance(path)?)?,
                None => verify::verify_reduction(tag, n)?,
            };
            let mut passed = report.passed();
            if let Some(seed) = seed {
                let universe = match &input {
                    Some(path) => io::read_instance(path)?,
                    None => verify::canonical_source(tag, n)?,
                };
                let mut rng = gen::rng(seed);
                let mut sampled_failures = 0;
                for i in 0..samples {
                    let size = 2 + i % (universe.len().clamp(2, 8) - 1);
                    let sub = gen::random_subset(&universe, size.min(universe.len()), &mut rng)?;
                    let r = match verify::check_reduction(tag, &sub) {
                        Ok(r) => r,
                        // A subset of a tuple grid need not be continuous.
                        Err(Error::NotContinuous) => continue,
                        Err(e) => return Err(e),
                    };
                    sampled_failures += usize::from(!r.passed());
                    report.parsimony_samples.extend(r.parsimony_samples);
                }
                passed &= sampled_failures == 0;
                emit(out, &format!("sampled={samples}\nsampled_failures={sampled_failures}\n"))?;
            }
            emit(out, &report.to_record())?;
            Ok(if passed && report.passed() { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Ucycle { input, cyclic, out: path } => {
            let inst = io::read_instance(&input)?;
            let result = match inst.kind() {
                Kind::Bitstring => {
                    let bits: Vec<_> = inst
                        .objects()
                        .iter()
                        .filter_map(|o| match o {
                            Object::Bits(b) => Some(b.clone()),
                            _ => None,
                        })
                        .collect();
                    solve_debruijn_subset(&bits, cyclic)?
                }
                Kind::Permutation => {
                    let perms: Vec<_> = inst
                        .objects()
                        .iter()
                        .filter_map(|o| match o {
                            Object::Perm(p) => Some(p.clone()),
                            _ => None,
                        })
                        .collect();
                    solve_shorthand_ucycle(&perms, cyclic)?
                }
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "ucycle needs bitstrings or permutations, not {other}"
                    )))
                }
            };
            emit(out, &result.to_record())?;
            if let (Some(path), Some(seq)) = (path, result.sequence_text()) {
                std::fs::write(path, format!("{seq}\n"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Gen { name, n, flip, size, seed, out: path } => {
            let mut inst = gen::named_instance(&name, n)?;
            if let Some(flip) = flip {
                inst = inst.with_flip(flip)?;
            }
            if let Some(size) = size {
                inst = gen::random_subset(&inst, size, &mut gen::rng(seed))?;
            }
            match path {
                Some(path) => io::write_instance(path, &inst)?,
                None => emit(out, &io::format_instance(&inst))?,
            }
            Ok(EXIT_OK)
        }
    }
}
