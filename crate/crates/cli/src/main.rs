//! `garside`: normal forms, acceptors and growth rates of Garside monoids.

mod output;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use garside_core::artin::{acceptor_for, WitnessCatalog};
use garside_core::coxeter::CoxeterType;
use garside_core::experiment::{pd_experiment, sample_rng};
use garside_core::garside::{build_structure, delta_pure, proper_simples, BuildOptions, Garside, DEFAULT_SIMPLES_CAP};
use garside_core::langgraph::{
    build_acceptor, count_rigid_sequence, count_sequence, essential_count, essential_elements,
    essential_transitivity, growth_profile, LangGraph, Sampler,
};
use garside_core::normalform::NormalForm;
use garside_core::penetration::{alpha_beta_report, build_pi, count_pseq};
use serde::Serialize;
use serde_json::json;

use output::{write_json, write_rows, Format};

/// Artin types above this group order need `--heavy`.
const HEAVY_ORDER: u128 = 20_000;

#[derive(Args, Clone)]
struct Common {
    /// Output format (default: json; `verify` defaults to PASS/FAIL lines).
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Refuse structures with more simples than this.
    #[arg(long, default_value_t = DEFAULT_SIMPLES_CAP, global = true)]
    cap: u128,
    /// Allow expensive structures and checks.
    #[arg(long, global = true)]
    heavy: bool,
}

#[derive(Args, Clone)]
struct Target {
    /// Structure descriptor: artin:A3, table:<path>, frame:<desc>:<k>,
    /// prod:<desc>,<desc>, amalgam:<desc>,<desc>.
    #[arg(long, short)]
    structure: String,
}

#[derive(Subcommand)]
enum Command {
    /// Acceptor statistics, essential elements, transitivity, growth rates and Δ-purity.
    Report {
        #[command(flatten)]
        target: Target,
        /// Largest length for exact counts.
        #[arg(long, default_value_t = 8)]
        k: usize,
    },
    /// The acceptor graph (node list and edges).
    Acceptor {
        #[command(flatten)]
        target: Target,
    },
    /// Growth rate, polynomial degree and exact counts of normal forms.
    Growth {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 20)]
        k: usize,
    },
    /// Essential transitivity and the diameter of the essential component.
    Diameter {
        #[command(flatten)]
        target: Target,
    },
    /// Essential simple elements.
    Essential {
        #[command(flatten)]
        target: Target,
    },
    /// Numbers of rigid normal words.
    Rigid {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 10)]
        k: usize,
    },
    /// Numbers of penetration sequences and the rate α.
    Pseq {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 8)]
        k: usize,
    },
    /// Δ_a for every atom and whether they coincide.
    DeltaPure {
        #[command(flatten)]
        target: Target,
    },
    /// Mean and maximum penetration distance of uniform normal words times a uniform atom.
    PdExperiment {
        #[command(flatten)]
        target: Target,
        /// Comma-separated lengths.
        #[arg(long, value_delimiter = ',', default_value = "10,20,40,80")]
        k: Vec<usize>,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Runs the verification suite; exits with status 1 if any claim fails.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
        /// Witness catalog to check instead of the built-in one.
        #[arg(long)]
        witnesses: Option<PathBuf>,
    },
    /// Uniformly random normal words of length k.
    Sample {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Parser)]
#[command(name = "garside", version, about = "Normal forms, acceptors and growth rates of Garside monoids")]
struct Top {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

fn opts(c: &Common) -> BuildOptions {
    BuildOptions { cap: c.cap }
}

impl Common {
    fn fmt(&self) -> Format {
        self.format.unwrap_or(Format::Json)
    }
}

/// Rejects large Artin groups inside any descriptor unless `--heavy`.
fn guard(desc: &str, c: &Common) -> Result<()> {
    if c.heavy {
        return Ok(());
    }
    for part in desc.split([',', '[', ']']) {
        if let Some(t) = part.trim().strip_prefix("artin:") {
            let ty: CoxeterType = t.parse()?;
            if ty.group_order() > HEAVY_ORDER {
                bail!("{ty} has {} simples; rerun with --heavy", ty.group_order());
            }
        }
    }
    Ok(())
}

fn structure(t: &Target, c: &Common) -> Result<Arc<dyn Garside>> {
    guard(&t.structure, c)?;
    build_structure(&t.structure, &opts(c)).with_context(|| format!("building {}", t.structure))
}

fn strings<T: ToString>(v: Vec<T>) -> Vec<String> {
    v.into_iter().map(|x| x.to_string()).collect()
}

fn essential_names(s: &dyn Garside, g: &LangGraph) -> Vec<String> {
    essential_elements(g).into_iter().map(|x| s.display(x)).collect()
}

fn report(t: &Target, c: &Common, k: usize) -> Result<()> {
    let s = structure(t, c)?;
    let g = build_acceptor(s.as_ref())?;
    let tr = essential_transitivity(&g);
    let pi = build_pi(s.as_ref(), c.cap)?;
    let ab = alpha_beta_report(&pi, &g, k.max(2))?;
    let purity = delta_pure(s.as_ref());
    let value = json!({
        "structure": t.structure,
        "simples": s.num_simples(),
        "proper_simples": proper_simples(s.as_ref()).len(),
        "acceptor": {
            "nodes": g.num_nodes(),
            "vertices": g.num_vertices().to_string(),
            "edges": g.num_edges().to_string(),
            "quotient": g.is_quotient(),
        },
        "essential": essential_names(s.as_ref(), &g),
        "essential_count": essential_count(&g).to_string(),
        "transitive": tr.transitive,
        "k": tr.k,
        "nontrivial_components": tr.nontrivial_components,
        "beta": ab.beta,
        "beta_degree": ab.beta_degree,
        "alpha": ab.alpha,
        "alpha_degree": ab.alpha_degree,
        "alpha_lt_beta": ab.alpha_lt_beta,
        "delta_pure": purity.pure,
        "counts": strings(count_sequence(&g, k).split_off(1)),
        "rigid": strings(count_rigid_sequence(&g, k).split_off(1)),
        "pseq": strings(count_pseq(&pi, k).split_off(1)),
    });
    write_json(c.out.as_deref(), &value)
}

#[derive(Serialize)]
struct EdgeRow<'a> {
    source: &'a str,
    target: &'a str,
}

fn acceptor(t: &Target, c: &Common) -> Result<()> {
    guard(&t.structure, c)?;
    let g = acceptor_for(&t.structure, &opts(c))?;
    let mut edges = Vec::new();
    for v in 0..g.num_nodes() {
        for &d in g.successors(v) {
            edges.push(EdgeRow { source: g.name(v), target: g.name(d as usize) });
        }
    }
    match c.fmt() {
        Format::Csv => write_rows(c.fmt(), c.out.as_deref(), &edges),
        Format::Json => {
            let nodes: Vec<_> = (0..g.num_nodes())
                .map(|v| json!({ "name": g.name(v), "size": g.weight(v) }))
                .collect();
            let edges: Vec<_> = edges.iter().map(|e| [e.source, e.target]).collect();
            write_json(
                c.out.as_deref(),
                &json!({ "structure": t.structure, "quotient": g.is_quotient(), "nodes": nodes, "edges": edges }),
            )
        }
    }
}

#[derive(Serialize)]
struct CountRow {
    k: usize,
    count: String,
}

fn growth(t: &Target, c: &Common, k: usize) -> Result<()> {
    guard(&t.structure, c)?;
    let g = acceptor_for(&t.structure, &opts(c))?;
    let p = growth_profile(&g)?;
    let counts = count_sequence(&g, k);
    let rows: Vec<CountRow> = counts
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, x)| CountRow { k, count: x.to_string() })
        .collect();
    match c.fmt() {
        Format::Csv => write_rows(c.fmt(), c.out.as_deref(), &rows),
        Format::Json => write_json(
            c.out.as_deref(),
            &json!({
                "structure": t.structure,
                "rate": p.rate,
                "degree": p.degree,
                "component_rates": p.component_rates,
                "counts": rows.iter().map(|r| r.count.clone()).collect::<Vec<_>>(),
            }),
        ),
    }
}

fn diameter(t: &Target, c: &Common) -> Result<()> {
    guard(&t.structure, c)?;
    let g = acceptor_for(&t.structure, &opts(c))?;
    let tr = essential_transitivity(&g);
    #[derive(Serialize)]
    struct Row<'a> {
        structure: &'a str,
        transitive: bool,
        k: Option<usize>,
        nontrivial_components: usize,
    }
    let row = Row {
        structure: &t.structure,
        transitive: tr.transitive,
        k: tr.k,
        nontrivial_components: tr.nontrivial_components,
    };
    match c.fmt() {
        Format::Csv => write_rows(c.fmt(), c.out.as_deref(), &[row]),
        Format::Json => write_json(c.out.as_deref(), &row),
    }
}

fn essential(t: &Target, c: &Common) -> Result<()> {
    let s = structure(t, c)?;
    let g = build_acceptor(s.as_ref())?;
    let names = essential_names(s.as_ref(), &g);
    match c.fmt() {
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                element: String,
            }
            let rows: Vec<Row> = names.into_iter().map(|element| Row { element }).collect();
            write_rows(c.fmt(), c.out.as_deref(), &rows)
        }
        Format::Json => write_json(
            c.out.as_deref(),
            &json!({ "structure": t.structure, "count": names.len(), "essential": names }),
        ),
    }
}

fn rigid(t: &Target, c: &Common, k: usize) -> Result<()> {
    guard(&t.structure, c)?;
    let g = acceptor_for(&t.structure, &opts(c))?;
    let rows: Vec<CountRow> = count_rigid_sequence(&g, k)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(k, x)| CountRow { k, count: x.to_string() })
        .collect();
    match c.fmt() {
        Format::Csv => write_rows(c.fmt(), c.out.as_deref(), &rows),
        Format::Json => write_json(
            c.out.as_deref(),
            &json!({ "structure": t.structure, "rigid": rows.iter().map(|r| r.count.clone()).collect::<Vec<_>>() }),
        ),
    }
}

fn pseq(t: &Target, c: &Common, k: usize) -> Result<()> {
    let s = structure(t, c)?;
    let pi = build_pi(s.as_ref(), c.cap)?;
    let p = growth_profile(&pi.graph)?;
    let rows: Vec<CountRow> = count_pseq(&pi, k)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(k, x)| CountRow { k, count: x.to_string() })
        .collect();
    match c.fmt() {
        Format::Csv => write_rows(c.fmt(), c.out.as_deref(), &rows),
        Format::Json => write_json(
            c.out.as_deref(),
            &json!({
                "structure": t.structure,
                "states": pi.states.len(),
                "edges": pi.graph.num_edges().to_string(),
                "alpha": p.rate,
                "alpha_degree": p.degree,
                "counts": rows.iter().map(|r| r.count.clone()).collect::<Vec<_>>(),
            }),
        ),
    }
}

fn delta_purity(t: &Target, c: &Common) -> Result<()> {
    let s = structure(t, c)?;
    let d = delta_pure(s.as_ref());
    #[derive(Serialize)]
    struct Row {
        atom: String,
        delta_a: String,
    }
    let rows: Vec<Row> = d
        .witness
        .iter()
        .map(|&(a, da)| Row { atom: s.display(a), delta_a: s.display(da) })
        .collect();
    match c.fmt() {
        Format::Csv => write_rows(c.fmt(), c.out.as_deref(), &rows),
        Format::Json => write_json(
            c.out.as_deref(),
            &json!({ "structure": t.structure, "delta_pure": d.pure, "witness": rows }),
        ),
    }
}

fn experiment(t: &Target, c: &Common, ks: &[usize], samples: usize, seed: u64) -> Result<()> {
    let s = structure(t, c)?;
    let g = build_acceptor(s.as_ref())?;
    let rows = pd_experiment(s.as_ref(), &g, ks, samples, seed)?;
    write_rows(c.fmt(), c.out.as_deref(), &rows)
}

fn sample(t: &Target, c: &Common, k: usize, samples: usize, seed: u64) -> Result<()> {
    let s = structure(t, c)?;
    let g = build_acceptor(s.as_ref())?;
    let sampler = Sampler::new(&g, k)?;
    #[derive(Serialize)]
    struct Row {
        index: usize,
        word: String,
    }
    let rows: Vec<Row> = (0..samples)
        .map(|index| Row {
            index,
            word: NormalForm::from_factors(sampler.sample(&mut sample_rng(seed, k, index as u64)))
                .render(s.as_ref()),
        })
        .collect();
    write_rows(c.fmt(), c.out.as_deref(), &rows)
}

fn run_verify(c: &Common, suite: verify::Suite, witnesses: Option<&PathBuf>) -> Result<bool> {
    let catalog = match witnesses {
        Some(p) => WitnessCatalog::from_json(
            &std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        )?,
        None => WitnessCatalog::builtin(),
    };
    let claims = verify::run(suite, c.heavy, &catalog)?;
    let ok = claims.iter().all(|x| x.pass);
    match c.format {
        None => {
            let mut w = output::sink(c.out.as_deref())?;
            for x in &claims {
                writeln!(w, "{}", x.line())?;
            }
            let failed = claims.iter().filter(|x| !x.pass).count();
            writeln!(w, "{} claims, {failed} failed", claims.len())?;
        }
        Some(Format::Json) => write_json(c.out.as_deref(), &json!({ "pass": ok, "claims": claims }))?,
        Some(Format::Csv) => write_rows(Format::Csv, c.out.as_deref(), &claims)?,
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let top = Top::parse();
    let c = &top.common;
    let result = match &top.command {
        Command::Report { target, k } => report(target, c, *k).map(|_| true),
        Command::Acceptor { target } => acceptor(target, c).map(|_| true),
        Command::Growth { target, k } => growth(target, c, *k).map(|_| true),
        Command::Diameter { target } => diameter(target, c).map(|_| true),
        Command::Essential { target } => essential(target, c).map(|_| true),
        Command::Rigid { target, k } => rigid(target, c, *k).map(|_| true),
        Command::Pseq { target, k } => pseq(target, c, *k).map(|_| true),
        Command::DeltaPure { target } => delta_purity(target, c).map(|_| true),
        Command::PdExperiment { target, k, samples, seed } => {
            experiment(target, c, k, *samples, *seed).map(|_| true)
        }
        Command::Verify { suite, witnesses } => run_verify(c, *suite, witnesses.as_ref()),
        Command::Sample { target, k, samples, seed } => sample(target, c, *k, *samples, *seed).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
