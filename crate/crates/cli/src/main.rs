use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nilcent::construct::{codegree_element_on, counterexample_check, default_battery, generalized_exponents};
use nilcent::repbuild::{build_irrep, load_irrep, Irrep};
use nilcent::rootsys::{Family, RootSystem, Weight};
use nilcent::{Config, Error};

/// Exit statuses.
const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_SIZE_CAP: u8 = 3;
const EXIT_NO_COUNTEREXAMPLE: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "nilcent", version, about = "Exact n-invariants of S(n) from highest weight modules")]
struct Cli {
    /// Directory for cached irreducible modules.
    #[arg(long, global = true, env = "NILCENT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Largest module dimension to build.
    #[arg(long, global = true, default_value_t = 512, value_parser = clap::value_parser!(u64).range(1..))]
    size_cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Allow trace-power invariants of degree above 4 or rank above 3.
    #[arg(long, global = true)]
    expensive_invariants: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
struct TypeArgs {
    /// Cartan type letter (A-G).
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Leading symbol at the codegree of the matrix coefficient of V_nu.
    Construct {
        #[command(flatten)]
        ty: TypeArgs,
        /// Highest weight in fundamental coordinates, or `adjoint`.
        #[arg(long)]
        nu: String,
    },
    /// The naive pairing element for xi + xi* and its failure of invariance.
    Counterexample {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        xi: String,
    },
    /// Generalized exponents of V_lambda.
    Genexp {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        lambda: String,
    },
    /// Positive roots.
    Roots {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Summary of V_lambda.
    Irrep {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        lambda: String,
    },
    /// The default construction battery plus the A2 and B2 counterexamples.
    Battery {
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeCap { .. } => EXIT_SIZE_CAP,
            Error::NoCounterexample { .. } => EXIT_NO_COUNTEREXAMPLE,
            Error::UnknownType { .. }
            | Error::NotDominantIntegral { .. }
            | Error::WrongRank { .. }
            | Error::NotInRootLattice { .. }
            | Error::ZeroWeight
            | Error::Parse(_)
            | Error::Unsupported(_)
            | Error::ExpensiveInvariants(_)
            | Error::HeightBound { .. }
            | Error::DegreeBound { .. }
            | Error::WeylGroupTooLarge { .. }
            | Error::NotSelfDual { .. } => EXIT_USAGE,
            _ => EXIT_CHECK_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn root_system(ty: &TypeArgs) -> Result<RootSystem, Error> {
    let family: Family = ty.family.parse()?;
    RootSystem::new(family, ty.rank)
}

/// Comma-separated fundamental coordinates, or `adjoint`.
fn parse_weight(rs: &RootSystem, s: &str) -> Result<Weight, Error> {
    if s.trim().eq_ignore_ascii_case("adjoint") {
        return Ok(rs.highest_root());
    }
    let coords = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight coordinate {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != rs.rank() {
        return Err(Error::WrongRank {
            got: coords.len(),
            rank: rs.rank(),
        });
    }
    let w = rs.weight(&coords);
    rs.dominant_integral(&w)?;
    Ok(w)
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Text => text(),
        Format::Json => serde_json::to_string_pretty(value).expect("reports serialize") + "\n",
    }
}

struct Ctx {
    cache_dir: Option<PathBuf>,
    cfg: Config,
    format: Format,
}

impl Ctx {
    fn irrep(&self, rs: &RootSystem, w: &Weight) -> Result<Irrep, Error> {
        match &self.cache_dir {
            Some(dir) => {
                let (v, hit) = load_irrep(dir, rs, w, self.cfg.size_cap)?;
                if hit {
                    log::info!("cache hit for {} {}", rs.name(), w);
                } else {
                    log::info!("cache miss for {} {}, stored", rs.name(), w);
                }
                Ok(v)
            }
            None => build_irrep(rs, w, self.cfg.size_cap),
        }
    }
}

fn cmd_construct(ctx: &Ctx, ty: &TypeArgs, nu: &str) -> Outcome {
    let rs = root_system(ty)?;
    let w = parse_weight(&rs, nu)?;
    if w.is_zero() {
        return Err(Error::ZeroWeight.into());
    }
    let v = ctx.irrep(&rs, &w)?;
    let r = codegree_element_on(&rs, v, &ctx.cfg)?;
    let out = render(ctx.format, &r, || r.to_text(&rs));
    Ok((out, if r.ok() { EXIT_OK } else { EXIT_CHECK_FAILED }))
}

fn cmd_counterexample(ctx: &Ctx, ty: &TypeArgs, xi: &str) -> Outcome {
    let rs = root_system(ty)?;
    let w = parse_weight(&rs, xi)?;
    let r = counterexample_check(&rs, &w, &ctx.cfg)?;
    let out = render(ctx.format, &r, || r.to_text(&rs));
    Ok((out, if r.ok() { EXIT_OK } else { EXIT_CHECK_FAILED }))
}

fn cmd_genexp(ctx: &Ctx, ty: &TypeArgs, lambda: &str) -> Outcome {
    let rs = root_system(ty)?;
    let w = parse_weight(&rs, lambda)?;
    let e = generalized_exponents(&rs, &w, &ctx.cfg)?;
    let out = render(ctx.format, &e, || {
        format!(
            "type {}\nlambda {}\nell {}\nexponents {}\nE(q) = {}\n",
            rs.name(),
            w,
            e.total(),
            join(&e.exponents()),
            e.to_text()
        )
    });
    Ok((out, EXIT_OK))
}

#[derive(Serialize)]
struct RootRow {
    index: usize,
    root: Vec<i64>,
    fundamental: Vec<i64>,
    height: usize,
}

#[derive(Serialize)]
struct RootTable {
    root_system: String,
    dim: usize,
    invariant_degrees: Vec<usize>,
    weyl_order: usize,
    positive_roots: Vec<RootRow>,
}

fn cmd_roots(ctx: &Ctx, ty: &TypeArgs) -> Outcome {
    let rs = root_system(ty)?;
    let heights = rs.heights();
    let table = RootTable {
        root_system: rs.name(),
        dim: rs.dim(),
        invariant_degrees: rs.invariant_degrees().to_vec(),
        weyl_order: rs.weyl_group().len(),
        positive_roots: rs
            .positive_roots()
            .iter()
            .zip(rs.positive_roots_fund())
            .enumerate()
            .map(|(i, (r, f))| RootRow {
                index: i,
                root: r.clone(),
                fundamental: f.clone(),
                height: heights[i],
            })
            .collect(),
    };
    let out = render(ctx.format, &table, || {
        let mut s = format!(
            "type {}\ndim {}\ninvariant degrees {}\nWeyl group order {}\npositive roots {}\n",
            table.root_system,
            table.dim,
            join(&table.invariant_degrees),
            table.weyl_order,
            table.positive_roots.len()
        );
        for row in &table.positive_roots {
            s += &format!(
                "{:>3}  root {:<12} fund {:<12} ht {}\n",
                row.index,
                join(&row.root),
                join(&row.fundamental),
                row.height
            );
        }
        s
    });
    Ok((out, EXIT_OK))
}

#[derive(Serialize)]
struct IrrepSummary {
    root_system: String,
    highest: Vec<i64>,
    dim: usize,
    weights: Vec<(Vec<i64>, usize)>,
}

fn cmd_irrep(ctx: &Ctx, ty: &TypeArgs, lambda: &str) -> Outcome {
    let rs = root_system(ty)?;
    let w = parse_weight(&rs, lambda)?;
    let v = ctx.irrep(&rs, &w)?;
    let summary = IrrepSummary {
        root_system: rs.name(),
        highest: v.highest().to_vec(),
        dim: v.dim(),
        weights: v.weight_spaces().iter().map(|(mu, &(_, n))| (mu.clone(), n)).collect(),
    };
    let out = render(ctx.format, &summary, || {
        let mut s = format!(
            "type {}\nhighest {}\ndimension {}\nweights {}\n",
            summary.root_system,
            join(&summary.highest),
            summary.dim,
            summary.weights.len()
        );
        for (mu, n) in &summary.weights {
            s += &format!("  {:<12} {}\n", join(mu), n);
        }
        s
    });
    Ok((out, EXIT_OK))
}

#[derive(Serialize)]
struct BatteryLine {
    job: String,
    ok: bool,
    detail: String,
}

fn cmd_battery(ctx: &Ctx, jobs: usize) -> Outcome {
    let mut cases: Vec<(RootSystem, Weight, bool)> = default_battery()?
        .into_iter()
        .map(|(rs, w)| (rs, w, false))
        .collect();
    for (f, r) in [(Family::A, 2), (Family::B, 2)] {
        let rs = RootSystem::new(f, r)?;
        let theta = rs.highest_root();
        cases.push((rs, theta, true));
    }
    let results: Mutex<Vec<Option<BatteryLine>>> = Mutex::new((0..cases.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..jobs.max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some((rs, w, counter)) = cases.get(i) else { break };
                let line = if *counter {
                    let job = format!("counterexample {} {}", rs.name(), w);
                    match counterexample_check(rs, w, &ctx.cfg) {
                        Ok(r) => BatteryLine {
                            job,
                            ok: r.ok(),
                            detail: format!("d={} degrees {}", r.d, join(&r.degrees_present)),
                        },
                        Err(e) => BatteryLine { job, ok: false, detail: e.to_string() },
                    }
                } else {
                    let job = format!("construct {} {}", rs.name(), w);
                    match ctx.irrep(rs, w).and_then(|v| codegree_element_on(rs, v, &ctx.cfg)) {
                        Ok(r) => BatteryLine {
                            job,
                            ok: r.ok(),
                            detail: format!("k={} terms {}", r.k, r.fk.len()),
                        },
                        Err(e) => BatteryLine { job, ok: false, detail: e.to_string() },
                    }
                };
                results.lock().unwrap()[i] = Some(line);
            });
        }
    });
    let lines: Vec<BatteryLine> = results.into_inner().unwrap().into_iter().map(|l| l.unwrap()).collect();
    let all_ok = lines.iter().all(|l| l.ok);
    let out = render(ctx.format, &lines, || {
        lines
            .iter()
            .map(|l| format!("{} {}: {}\n", if l.ok { "ok  " } else { "FAIL" }, l.job, l.detail))
            .collect()
    });
    Ok((out, if all_ok { EXIT_OK } else { EXIT_CHECK_FAILED }))
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let ctx = Ctx {
        cache_dir: cli.cache_dir,
        cfg: Config {
            size_cap: cli.size_cap as usize,
            expensive_invariants: cli.expensive_invariants,
            ..Config::default()
        },
        format: cli.format,
    };
    let outcome = match &cli.command {
        Command::Construct { ty, nu } => cmd_construct(&ctx, ty, nu),
        Command::Counterexample { ty, xi } => cmd_counterexample(&ctx, ty, xi),
        Command::Genexp { ty, lambda } => cmd_genexp(&ctx, ty, lambda),
        Command::Roots { ty } => cmd_roots(&ctx, ty),
        Command::Irrep { ty, lambda } => cmd_irrep(&ctx, ty, lambda),
        Command::Battery { jobs } => cmd_battery(&ctx, *jobs),
    };
    match outcome {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("nilcent: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
