use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kdom::catalog::{example_annotations, Catalog, Theorem};
use kdom::domination::{double_domination, gamma, gamma_k, Variant};
use kdom::enumerate::{connected_graphs_with, Guard, HARD_MAX_N};
use kdom::graph::{self, graph6_decode, graph6_encode, parse_edge_list, Graph};
use kdom::verify::{
    audit_small_theorems, characterize, check_theorem, verify_bound, Census, VerificationReport,
};
use kdom::{build_family, canonical_key, vertex_connectivity};

#[derive(Parser)]
#[command(
    name = "kdom",
    version,
    about = "3-domination, vertex connectivity and extremal-graph checks"
)]
struct Cli {
    /// Hard ceiling on every enumeration size.
    #[arg(long, env = "KDOM_MAX_N", global = true, hide_env_values = true)]
    ceiling: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Domination numbers, connectivity and degrees of one or more graphs.
    Invariants(InvariantsArgs),
    /// Build a graph from a family expression and print it.
    Construct {
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Print the canonical relabeling instead.
        #[arg(long)]
        canonical: bool,
    },
    /// List connected graphs on n vertices, one canonical graph6 per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        allow_large: bool,
    },
    /// Graphs with gamma3 + kappa = 2n - offset.
    Characterize {
        #[arg(long)]
        offset: usize,
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long)]
        json: bool,
    },
    /// Compare a characterization (3.1 to 3.5) with the computed extremal graphs.
    CheckTheorem {
        theorem: String,
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long)]
        json: bool,
        /// Exit 1 when the stated list and the computed set disagree.
        #[arg(long)]
        strict_paper: bool,
    },
    /// Check gamma3 + kappa <= 2n - 1 and collect the equality cases.
    VerifyBound {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        strict_paper: bool,
    },
    /// Check the structural facts about gamma3 on every enumerated graph.
    Audit {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        strict_paper: bool,
    },
    /// Named extremal graphs with their invariants and notes.
    Catalog {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct SizeArgs {
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct InvariantsArgs {
    #[arg(long, conflicts_with_all = ["graph6", "input"])]
    family: Option<String>,
    #[arg(long, conflicts_with = "input")]
    graph6: Option<String>,
    /// File to read, or `-` for stdin.
    #[arg(long)]
    input: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::KDomination)]
    variant: VariantArg,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    KDomination,
    KTuple,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::KDomination => Variant::KDomination,
            VariantArg::KTuple => Variant::KTuple,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ceiling = cli.ceiling.unwrap_or(HARD_MAX_N);
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Invariants(args) => invariants(&mut out, args)?,
        Command::Construct {
            expr,
            format,
            canonical,
        } => {
            let g = build_family(&expr)?;
            let g = if canonical {
                kdom::canonical_form(&g)?.graph(&g)
            } else {
                g
            };
            match format {
                Format::Graph6 => writeln!(out, "{}", graph6_encode(&g))?,
                Format::Edgelist => write!(out, "{}", graph::write_edge_list(&g))?,
            }
        }
        Command::Enumerate { n, allow_large } => {
            check_ceiling(n, ceiling)?;
            let level = connected_graphs_with(n, Guard { allow_large })?;
            for key in level.keys() {
                writeln!(out, "{key}")?;
            }
        }
        Command::Characterize { offset, size, json } => {
            if offset == 0 {
                bail!("offset must be positive");
            }
            let census = census(&size, ceiling)?;
            let levels = characterize(offset, &census);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&levels)?)?;
            } else {
                for l in &levels {
                    let keys: Vec<&str> = l.extremal.iter().map(|e| e.g6.as_str()).collect();
                    writeln!(
                        out,
                        "n={} graphs={} extremal={}: {}",
                        l.n,
                        l.graphs,
                        keys.len(),
                        keys.join(" ")
                    )?;
                }
            }
        }
        Command::CheckTheorem {
            theorem,
            size,
            json,
            strict_paper,
        } => {
            let t = Theorem::parse(&theorem)
                .ok_or_else(|| anyhow!("unknown theorem {theorem:?}; expected 3.1 to 3.5"))?;
            let census = census(&size, ceiling)?;
            let catalog = Catalog::load()?;
            let report = check_theorem(t, &census, &catalog);
            print_report(&mut out, &report, &catalog, json)?;
            if strict_paper && (report.has_discrepancies() || !report.notes.is_empty()) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::VerifyBound {
            size,
            json,
            strict_paper,
        } => {
            let census = census(&size, ceiling)?;
            let catalog = Catalog::load()?;
            let report = verify_bound(&census, &catalog);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                let mut equality: Vec<String> = report.confirmed.clone();
                equality.extend(report.missing.iter().cloned());
                writeln!(
                    out,
                    "{} violations, equality: {}",
                    report.bound_violations.len(),
                    equality.join(", ")
                )?;
                for v in &report.bound_violations {
                    writeln!(out, "violation: {} n={} sum={}", v.g6, v.n, v.sum)?;
                }
            }
            if strict_paper && report.has_discrepancies() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Audit {
            size,
            json,
            strict_paper,
        } => {
            let census = census(&size, ceiling)?;
            let report = audit_small_theorems(&census, 5..=8);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                writeln!(
                    out,
                    "graphs checked: {} (3 <= n <= {})",
                    report.graphs, report.n_max
                )?;
                let lines = [
                    ("gamma3 = n iff max degree <= 2", &report.full_domination),
                    ("3 <= gamma3 <= n", &report.gamma3_range),
                    ("kappa <= min degree", &report.kappa_min_degree),
                    ("gamma + kappa <= n", &report.gamma_kappa),
                ];
                for (what, bad) in lines {
                    writeln!(out, "{what}: {} exceptions{}", bad.len(), list(bad))?;
                }
                for m in &report.complete_minus_matching {
                    writeln!(
                        out,
                        "K{} minus a matching, {} matchings: {} exceptions{}",
                        m.n,
                        m.matchings,
                        m.failures.len(),
                        list(&m.failures)
                    )?;
                }
            }
            if strict_paper && report.failures() > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Catalog { json } => {
            let catalog = Catalog::load()?;
            let rows = catalog.rows();
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
            } else {
                for r in &rows {
                    writeln!(
                        out,
                        "{} {:<14} n={} gamma3={} kappa={} sum={} {} [{}]",
                        r.theorem, r.name, r.n, r.gamma3, r.kappa, r.sum, r.canonical, r.source
                    )?;
                    for note in &r.notes {
                        writeln!(out, "    {note}")?;
                    }
                }
                for a in example_annotations() {
                    writeln!(out, "{a}")?;
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        String::new()
    } else {
        format!(": {}", items.join(" "))
    }
}

fn check_ceiling(n: usize, ceiling: usize) -> Result<()> {
    if n > ceiling {
        bail!("n = {n} is above the KDOM_MAX_N ceiling of {ceiling}");
    }
    Ok(())
}

fn census(size: &SizeArgs, ceiling: usize) -> Result<Census> {
    check_ceiling(size.max_n, ceiling)?;
    let start = Instant::now();
    let c = Census::build(
        size.max_n,
        Guard {
            allow_large: size.allow_large,
        },
    )?;
    eprintln!("enumerated {} graphs in {:.2?}", c.len(), start.elapsed());
    Ok(c)
}

fn print_report(
    out: &mut impl Write,
    r: &VerificationReport,
    catalog: &Catalog,
    json: bool,
) -> Result<()> {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(r)?)?;
        return Ok(());
    }
    writeln!(
        out,
        "theorem {}: gamma3 + kappa = 2n - {}, 3 <= n <= {}",
        r.theorem, r.target_offset, r.n_max
    )?;
    for l in &r.levels {
        let names: Vec<String> = l
            .extremal
            .iter()
            .map(|e| match catalog.name_of(&e.g6, Some(r.theorem)) {
                Some(name) => format!("{name} ({})", e.g6),
                None => e.g6.clone(),
            })
            .collect();
        writeln!(
            out,
            "  n={}: {} of {} graphs{}",
            l.n,
            l.extremal.len(),
            l.graphs,
            list(&names)
        )?;
    }
    writeln!(out, "confirmed: {}", r.confirmed.join(", "))?;
    for e in &r.extra {
        let target = e.target.map_or("undefined".to_string(), |t| t.to_string());
        writeln!(
            out,
            "extra: {} (n={}, computed sum {}, target {target})",
            e.name, e.n, e.computed_sum
        )?;
    }
    for m in &r.missing {
        writeln!(out, "missing: {m}")?;
    }
    for n in &r.notes {
        writeln!(out, "note [{}] {}: {}", n.kind, n.entry, n.detail)?;
    }
    for c in &r.caveats {
        writeln!(out, "caveat: {c}")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct Invariants {
    graph6: String,
    canonical: Option<String>,
    n: usize,
    edges: usize,
    min_degree: usize,
    max_degree: usize,
    gamma: usize,
    gamma_witness: Vec<usize>,
    k: usize,
    variant: Variant,
    gamma_k: Option<usize>,
    gamma_k_witness: Option<Vec<usize>>,
    gamma_k_error: Option<String>,
    double_domination: Option<usize>,
    kappa: usize,
    cut: Vec<usize>,
    separated: Option<(usize, usize)>,
}

fn read_graphs(args: &InvariantsArgs) -> Result<Vec<Graph>> {
    if let Some(expr) = &args.family {
        return Ok(vec![build_family(expr)?]);
    }
    if let Some(s) = &args.graph6 {
        return Ok(vec![graph6_decode(s.trim())?]);
    }
    let Some(path) = &args.input else {
        bail!("one of --family, --graph6 or --input is required");
    };
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    }
    Ok(match args.format {
        Format::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(graph6_decode)
            .collect::<Result<_, _>>()?,
        Format::Edgelist => vec![parse_edge_list(&text)?],
    })
}

fn invariants(out: &mut impl Write, args: InvariantsArgs) -> Result<()> {
    let variant = Variant::from(args.variant);
    let rows: Vec<Invariants> = read_graphs(&args)?
        .iter()
        .map(|g| {
            let gk = gamma_k(g, args.k, variant);
            let g1 = gamma(g);
            let cut = vertex_connectivity(g);
            Invariants {
                graph6: graph6_encode(g),
                canonical: canonical_key(g).ok(),
                n: g.n(),
                edges: g.edge_count(),
                min_degree: g.min_degree(),
                max_degree: g.max_degree(),
                gamma: g1.number,
                gamma_witness: g1.witness.to_vec(),
                k: args.k,
                variant,
                gamma_k: gk.as_ref().ok().map(|r| r.number),
                gamma_k_witness: gk.as_ref().ok().map(|r| r.witness.to_vec()),
                gamma_k_error: gk.as_ref().err().map(|e| e.to_string()),
                double_domination: double_domination(g).ok().map(|r| r.number),
                kappa: cut.kappa,
                cut: cut.cut.to_vec(),
                separated: cut.separated,
            }
        })
        .collect();
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        return Ok(());
    }
    let name = match variant {
        Variant::KDomination => "gamma",
        Variant::KTuple => "gamma_x",
    };
    for r in &rows {
        writeln!(
            out,
            "{}: n={} m={} min_degree={} max_degree={}",
            r.graph6, r.n, r.edges, r.min_degree, r.max_degree
        )?;
        writeln!(out, "  gamma = {} {:?}", r.gamma, r.gamma_witness)?;
        match (&r.gamma_k, &r.gamma_k_witness, &r.gamma_k_error) {
            (Some(x), Some(w), _) => writeln!(out, "  {name}{} = {x} {w:?}", r.k)?,
            (_, _, Some(e)) => writeln!(out, "  {name}{}: {e}", r.k)?,
            _ => {}
        }
        match r.double_domination {
            Some(d) => writeln!(out, "  double domination = {d}")?,
            None => writeln!(out, "  double domination: none (isolated vertex)")?,
        }
        writeln!(out, "  kappa = {} cut {:?}", r.kappa, r.cut)?;
    }
    Ok(())
}
