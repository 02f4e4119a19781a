use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use chromsym::chromatic::{chromatic_poly, csf_cotree, csf_powersum, csf_stable};
use chromsym::cotree::{from_cograph, ConstructExpr, GraphClass};
use chromsym::experiments::{self, all_passed, Claim};
use chromsym::{Basis, SimpleGraph, SymFunc};

#[derive(Parser)]
#[command(name = "chromsym", version, about = "Chromatic symmetric functions of graphs and cographs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for randomized cross-checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic symmetric function of a graph or cotree expression.
    Csf {
        input: String,
        /// Output basis: mt, m, e or p (p uses the edge-subset expansion).
        #[arg(long, default_value = "mt")]
        basis: Basis,
        /// Cross-validate the independent routes.
        #[arg(long)]
        check: bool,
    },
    /// Chromatic polynomial in the falling-factorial and power bases.
    Chrompoly { input: String },
    /// Membership in the threshold, trivially perfect, cograph and claw-free classes.
    Classify { input: String },
    /// Canonical cotree expression of a cograph.
    Canonize { input: String },
    /// Canonical expressions of a class for n = 1..n_max.
    Enumerate {
        #[arg(long)]
        class: GraphClass,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Search a class for pairs of non-isomorphic graphs with equal functions.
    Distinguish {
        #[arg(long)]
        class: GraphClass,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Stanley's pair with equal functions and distinguishable complements.
    StanleyDemo,
    /// The ten-vertex cograph collision and its factorisation.
    CounterexampleDemo,
    /// e-positivity of claw-free cographs.
    Epositive {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

/// Parsed input: graph text starts with `n=`, anything else is a cotree.
enum Input {
    Graph(SimpleGraph),
    Cotree(ConstructExpr),
}

impl Input {
    fn parse(text: &str) -> Result<Input> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.starts_with("n=") {
            Ok(Input::Graph(text.parse().context("invalid graph text")?))
        } else {
            Ok(Input::Cotree(ConstructExpr::parse(text).context("invalid cotree expression")?))
        }
    }

    fn graph(&self) -> Result<SimpleGraph> {
        match self {
            Input::Graph(g) => Ok(g.clone()),
            Input::Cotree(e) => Ok(e.to_graph()?),
        }
    }

    fn csf_mtilde(&self) -> Result<SymFunc> {
        match self {
            Input::Graph(g) => Ok(csf_stable(g)?),
            Input::Cotree(e) => Ok(csf_cotree(&e.canonicalize())?),
        }
    }
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn emit_claims(format: Format, claims: &[Claim]) -> Result<()> {
    for c in claims {
        match format {
            Format::Json => emit(&json!({"claim": c}))?,
            Format::Text => println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail),
        }
    }
    Ok(())
}

fn summarize(title: &str, claims: &[Claim]) -> bool {
    let failed = claims.iter().filter(|c| !c.passed).count();
    let ok = all_passed(claims);
    eprintln!(
        "{title}: {} of {} claims pass{}",
        claims.len() - failed,
        claims.len(),
        if ok { "" } else { " (FAILED)" }
    );
    for c in claims.iter().filter(|c| !c.passed) {
        eprintln!("  failed: {} ({})", c.name, c.detail);
    }
    ok
}

fn run(cli: Cli) -> Result<bool> {
    let format = cli.format;
    match cli.command {
        Command::Csf { input, basis, check } => {
            let input = Input::parse(&input)?;
            let graph = input.graph()?;
            let x = match basis {
                Basis::P => csf_powersum(&graph)?,
                b => input.csf_mtilde()?.to_basis(b),
            };
            match format {
                Format::Text => print!("{}", x.to_text()),
                Format::Json => emit(&json!({"graph": graph.to_string(), "csf": x}))?,
            }
            if check {
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                let mut claims = experiments::cross_check(&graph, &mut rng)?;
                claims.push(Claim::new(
                    "requested basis converts back to the stable-partition result",
                    x.to_basis(Basis::MTilde) == input.csf_mtilde()?,
                    basis.name(),
                ));
                return Ok(summarize("csf check", &claims));
            }
            Ok(true)
        }
        Command::Chrompoly { input } => {
            let graph = Input::parse(&input)?.graph()?;
            let chi = chromatic_poly(&graph)?;
            match format {
                Format::Text => {
                    println!("{chi}");
                    println!("{}", chi.to_poly());
                }
                Format::Json => emit(&json!({
                    "graph": graph.to_string(),
                    "csf_mtilde": csf_stable(&graph)?,
                    "chromatic_poly_falling": chi,
                }))?,
            }
            Ok(true)
        }
        Command::Classify { input } => {
            let graph = Input::parse(&input)?.graph()?;
            let flags = graph.classify();
            match format {
                Format::Text => {
                    println!("threshold: {}", flags.threshold);
                    println!("trivially_perfect: {}", flags.trivially_perfect);
                    println!("cograph: {}", flags.cograph);
                    println!("claw_free: {}", flags.claw_free);
                    println!("triangle_free_complement: {}", flags.triangle_free_complement);
                }
                Format::Json => emit(&json!({"graph": graph.to_string(), "classes": flags}))?,
            }
            Ok(true)
        }
        Command::Canonize { input } => {
            let canonical = match Input::parse(&input)? {
                Input::Cotree(e) => e.canonicalize(),
                Input::Graph(g) => from_cograph(&g)?,
            };
            match format {
                Format::Text => {
                    println!("{canonical}");
                    println!("{}", canonical.to_sugared_string());
                }
                Format::Json => emit(&json!({
                    "canonical": canonical.to_string(),
                    "sugared": canonical.to_sugared_string(),
                    "graph": canonical.to_graph()?.to_string(),
                }))?,
            }
            Ok(true)
        }
        Command::Enumerate { class, n_max } => {
            for level in experiments::enumerate(class, n_max)? {
                for e in &level.expressions {
                    match format {
                        Format::Text => println!("{e}"),
                        Format::Json => emit(&json!({"class": class.name(), "n": level.n, "expr": e}))?,
                    }
                }
                eprintln!("{class} n = {}: {}", level.n, level.count);
            }
            Ok(true)
        }
        Command::Distinguish { class, n_max } => {
            let report = experiments::distinguish(class, n_max)?;
            for level in &report.levels {
                match format {
                    Format::Json => emit(&json!({"level": level}))?,
                    Format::Text => println!(
                        "n = {}: {} graphs, {} distinct functions, {} collisions",
                        level.n, level.graphs, level.distinct_csfs, level.collision_pairs
                    ),
                }
            }
            for c in &report.certificates {
                match format {
                    Format::Json => emit(&json!({"certificate": c}))?,
                    Format::Text => println!("collision on {} vertices: {} vs {}", c.vertices, c.left, c.right),
                }
            }
            emit_claims(format, &report.claims)?;
            eprintln!(
                "{class} up to {n_max} vertices: {} graphs, {} collisions",
                report.total_graphs(),
                report.certificates.len()
            );
            Ok(summarize("distinguish", &report.claims))
        }
        Command::StanleyDemo => {
            let report = experiments::stanley_demo()?;
            match format {
                Format::Json => emit(&report)?,
                Format::Text => {
                    println!("X(G) = {}", report.csf_g);
                    println!("X(H) = {}", report.csf_h);
                    println!("X(complement G) = {}", report.csf_g_complement);
                    println!("X(complement H) = {}", report.csf_h_complement);
                    emit_claims(format, &report.claims)?;
                }
            }
            Ok(summarize("stanley-demo", &report.claims))
        }
        Command::CounterexampleDemo => {
            let report = experiments::counterexample_demo()?;
            match format {
                Format::Json => emit(&report)?,
                Format::Text => {
                    println!("{} and {}", report.left, report.right);
                    println!("X = {}", report.csf_left);
                    emit_claims(format, &report.claims)?;
                }
            }
            Ok(summarize("counterexample-demo", &report.claims))
        }
        Command::Epositive { n_max } => {
            if n_max > experiments::MAX_EPOSITIVE_VERTICES {
                bail!("--n-max must be at most {}", experiments::MAX_EPOSITIVE_VERTICES);
            }
            let report = experiments::epositive(n_max)?;
            match format {
                Format::Json => {
                    for level in &report.levels {
                        emit(&json!({"level": level}))?;
                    }
                    emit(&json!({"contrast": report.contrast, "failures": report.failures}))?;
                    emit_claims(format, &report.claims)?;
                }
                Format::Text => {
                    for l in &report.levels {
                        println!(
                            "n = {}: {} cographs, {} claw-free, {} e-positive",
                            l.n, l.cographs, l.claw_free, l.e_positive
                        );
                    }
                    if let Some(c) = &report.contrast {
                        println!("contrast: {} is not e-positive ({})", c.expr, c.reason);
                    }
                    emit_claims(format, &report.claims)?;
                }
            }
            Ok(summarize("epositive", &report.claims))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
