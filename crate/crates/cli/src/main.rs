use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use genpos::*;
use genpos_cli::catalog::Catalog;
use genpos_cli::checks::{run_checks, Budget, Verdict};
use genpos_cli::explore::{explore, ExploreBudget, Problem};
use genpos_cli::io::{emit_edgelist, emit_graph6, parse_edgelist, parse_graph6};
use genpos_cli::report;

/// Exact computations around general position sets and strong resolving
/// graphs.
#[derive(Parser)]
#[command(name = "genpos", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct GraphInput {
    /// Named family, e.g. petersen, path:5, cycle:7, complete:4,
    /// complete_bipartite:3,2, complete_multipartite:3,2,2
    #[arg(long)]
    family: Option<String>,
    /// Order parameter for single-parameter families (alternative to the
    /// colon form)
    #[arg(long)]
    n: Option<usize>,
    /// Read the graph from standard input
    #[arg(long)]
    stdin: bool,
    /// Read the graph from a file
    #[arg(long)]
    file: Option<String>,
    /// Text format for --stdin/--file input
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        let sources =
            self.family.is_some() as u8 + self.stdin as u8 + self.file.is_some() as u8;
        if sources != 1 {
            bail!("provide exactly one of --family, --stdin, --file");
        }
        if let Some(family) = &self.family {
            return build_family(family, self.n);
        }
        let text = if self.stdin {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        } else {
            std::fs::read_to_string(self.file.as_ref().unwrap())?
        };
        match self.format {
            Format::Graph6 => {
                let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
                Ok(parse_graph6(line.trim())?)
            }
            Format::Edgelist => Ok(parse_edgelist(&text)?),
        }
    }
}

fn build_family(spec: &str, n_flag: Option<usize>) -> Result<Graph> {
    let (name, args) = match spec.split_once(':') {
        Some((name, rest)) => {
            let args: Vec<usize> = rest
                .split(',')
                .map(|t| t.parse().with_context(|| format!("bad family parameter {t:?}")))
                .collect::<Result<_>>()?;
            (name, args)
        }
        None => (spec, n_flag.into_iter().collect()),
    };
    let one = |args: &[usize]| -> Result<usize> {
        args.first()
            .copied()
            .ok_or_else(|| anyhow!("family {name:?} needs a parameter (use name:k or --n k)"))
    };
    let g = match name {
        "path" => families::path(one(&args)?)?,
        "cycle" => families::cycle(one(&args)?)?,
        "complete" => families::complete(one(&args)?)?,
        "edgeless" => families::edgeless(one(&args)?),
        "petersen" => families::petersen(),
        "complete_bipartite" | "kbip" => {
            if args.len() != 2 {
                bail!("complete_bipartite needs two parameters, e.g. complete_bipartite:3,2");
            }
            families::complete_bipartite(args[0], args[1])?
        }
        "complete_multipartite" | "kmulti" => families::complete_multipartite(&args)?,
        other => bail!("unknown family {other:?}"),
    };
    Ok(g)
}

#[derive(Subcommand)]
enum Command {
    /// Exact general position number with the lexicographically least
    /// witness
    Gp {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
        /// Solver size guard override (default 40, or GENPOS_MAX_N)
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Strong resolving graph
    Srg {
        #[command(flatten)]
        input: GraphInput,
        /// Output format for the resulting graph
        #[arg(long, value_enum, default_value = "graph6")]
        emit: Format,
    },
    /// Exact clique number
    Omega {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Exact independence number
    Alpha {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Largest induced complete multipartite subgraph of the complement
    Eta {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Build a graph product of two families and print it
    Product {
        #[arg(long, value_enum)]
        op: ProductOp,
        /// Left factor family spec, e.g. path:3
        #[arg(long)]
        lhs: String,
        /// Right factor (gadget for corona/rooted) family spec
        #[arg(long)]
        rhs: String,
        /// Root vertex in the gadget (rooted product only)
        #[arg(long)]
        root: Option<usize>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Emit family graphs or the whole connected catalog of one order
    Generate {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Emit one representative per isomorphism class of connected
        /// graphs of this order (at most 6)
        #[arg(long)]
        enumerate: Option<usize>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Run the claim verification registry
    Verify {
        /// Claim ids or prefix patterns like thm-3.1-* (default: all)
        #[arg(long = "claims", value_delimiter = ',')]
        claims: Vec<String>,
        #[arg(long)]
        json: bool,
        /// Markdown table output
        #[arg(long)]
        md: bool,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<String>,
        /// Worker threads for check execution (0 = rayon default)
        #[arg(long, default_value = "0")]
        jobs: usize,
        /// Exhaustive catalog order cap (at most 6)
        #[arg(long, default_value = "6")]
        exhaustive_n: usize,
        /// Seed for sampled instances
        #[arg(long, default_value = "2654435769")]
        seed: u64,
        /// Zero out runtimes for byte-identical reports
        #[arg(long)]
        stable: bool,
    },
    /// Empirical sweeps for the two open questions
    Explore {
        /// 1 = direct-product dichotomy, 2 = strong-product equality
        #[arg(long)]
        problem: u8,
        /// Use the builtin catalog of connected graphs up to this order
        #[arg(long, default_value = "4")]
        max_n: usize,
        /// graph6 file overriding the builtin left catalog
        #[arg(long)]
        catalog_g: Option<String>,
        /// graph6 file overriding the builtin right catalog
        #[arg(long)]
        catalog_h: Option<String>,
        /// Stop after this many pairs and report a resume cursor
        #[arg(long)]
        max_pairs: Option<u64>,
        /// Resume cursor from an earlier truncated run
        #[arg(long, default_value = "0")]
        resume: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<String>,
    },
    /// Convert between graph text formats (stdin to stdout)
    Convert {
        #[arg(long, value_enum)]
        from: Format,
        #[arg(long, value_enum)]
        to: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductOp {
    Strong,
    Direct,
    Lexicographic,
    Corona,
    Rooted,
}

fn size_guard(n: usize, flag: Option<usize>) -> Result<()> {
    let guard = flag
        .or_else(|| std::env::var("GENPOS_MAX_N").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(40);
    if n > guard {
        bail!(
            "graph order {n} exceeds the solver size guard {guard}; \
             raise it with --max-n or GENPOS_MAX_N"
        );
    }
    Ok(())
}

fn witness_line(g: &Graph, witness: &VertexSet) -> String {
    let labeled: Vec<String> = witness
        .iter()
        .map(|v| match g.label(v) {
            Some(l) => format!("{v}={l}"),
            None => v.to_string(),
        })
        .collect();
    format!("witness = {{{}}}", labeled.join(", "))
}

fn emit_graph(g: &Graph, format: Format) -> Result<String> {
    Ok(match format {
        Format::Graph6 => {
            let mut s = emit_graph6(g)?;
            s.push('\n');
            s
        }
        Format::Edgelist => emit_edgelist(g),
    })
}

fn clique_style_output(name: &str, r: &CliqueResult, g: &Graph, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::json!({ "value": r.value, "witness": r.witness.members() })
        );
    } else {
        println!("{name} = {}", r.value);
        println!("{}", witness_line(g, &r.witness));
    }
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run() -> Result<()> {
    match Cli::parse().command {
        Command::Gp { input, json, max_n } => {
            let g = input.load()?;
            size_guard(g.n(), max_n)?;
            let r = gp_number(&g)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "value": r.value,
                        "witness": r.witness.members(),
                        "nodes_explored": r.nodes_explored,
                    })
                );
            } else {
                println!("gp = {}", r.value);
                println!("{}", witness_line(&g, &r.witness));
            }
        }
        Command::Srg { input, emit } => {
            let g = input.load()?;
            let sr = strong_resolving_graph(&g)?;
            print!("{}", emit_graph(&sr, emit)?);
        }
        Command::Omega { input, json, max_n } => {
            let g = input.load()?;
            size_guard(g.n(), max_n)?;
            clique_style_output("omega", &clique_number(&g), &g, json);
        }
        Command::Alpha { input, json, max_n } => {
            let g = input.load()?;
            size_guard(g.n(), max_n)?;
            clique_style_output("alpha", &independence_number(&g), &g, json);
        }
        Command::Eta { input, json, max_n } => {
            let g = input.load()?;
            size_guard(g.n(), max_n)?;
            clique_style_output("eta", &eta(&g), &g, json);
        }
        Command::Product { op, lhs, rhs, root, format } => {
            let g = build_family(&lhs, None)?;
            let h = build_family(&rhs, None)?;
            let (prod, _) = match op {
                ProductOp::Strong => strong_product(&g, &h),
                ProductOp::Direct => direct_product(&g, &h),
                ProductOp::Lexicographic => lexicographic_product(&g, &h),
                ProductOp::Corona => corona(&g, &h),
                ProductOp::Rooted => {
                    let root = root.ok_or_else(|| anyhow!("rooted product needs --root"))?;
                    let spec = RootedSpec::new(g, h, root)?;
                    rooted_product(&spec)
                }
            };
            print!("{}", emit_graph(&prod, format)?);
        }
        Command::Generate { family, n, enumerate, format } => {
            if let Some(order) = enumerate {
                for g in enumerate_connected_graphs(order)? {
                    print!("{}", emit_graph(&g, format)?);
                }
            } else if let Some(f) = family {
                let g = build_family(&f, n)?;
                print!("{}", emit_graph(&g, format)?);
            } else {
                bail!("generate needs --family or --enumerate");
            }
        }
        Command::Verify {
            claims,
            json,
            md,
            out,
            jobs,
            exhaustive_n,
            seed,
            stable,
        } => {
            if exhaustive_n > 6 {
                bail!("--exhaustive-n is capped at 6");
            }
            if jobs > 0 {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build_global()
                    .ok();
            }
            let budget = Budget {
                exhaustive_n,
                sample_seed: seed,
                ..Budget::default()
            };
            let reports = run_checks(&claims, &budget, jobs != 1)?;
            let text = if json {
                report::to_json(&reports, stable)
            } else if md {
                report::to_markdown(&reports)
            } else {
                report::to_human(&reports)
            };
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            if reports.iter().any(|r| r.verdict == Verdict::Fail) {
                std::process::exit(3);
            }
        }
        Command::Explore {
            problem,
            max_n,
            catalog_g,
            catalog_h,
            max_pairs,
            resume,
            json,
            out,
        } => {
            let problem = match problem {
                1 => Problem::DirectDichotomy,
                2 => Problem::StrongEquality,
                other => bail!("unknown problem {other}; use 1 or 2"),
            };
            if max_n > 6 {
                bail!("builtin catalogs are capped at order 6");
            }
            let cat_g = match &catalog_g {
                Some(path) => Catalog::from_graph6_file(path)?,
                None => Catalog::builtin_connected(max_n),
            };
            let cat_h = match &catalog_h {
                Some(path) => Catalog::from_graph6_file(path)?,
                None => cat_g.clone(),
            };
            let report = explore(problem, &cat_g, &cat_h, ExploreBudget { max_pairs, resume });
            let text = if json {
                serde_json::to_string_pretty(&report)?
            } else {
                let mut s = format!(
                    "{}: {} pairs examined ({} / {})\n",
                    report.problem, report.pairs_examined, report.source_g, report.source_h
                );
                for (k, v) in &report.tallies {
                    s.push_str(&format!("  {k}: {v}\n"));
                }
                for v in &report.violations {
                    s.push_str(&format!("  violation: {} , {} ({})\n", v.g, v.h, v.note));
                }
                if let Some(cur) = report.resume_cursor {
                    s.push_str(&format!("  budget exhausted, resume with --resume {cur}\n"));
                }
                s
            };
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
        }
        Command::Convert { from, to } => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            let g = match from {
                Format::Graph6 => {
                    let line = buf.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
                    parse_graph6(line.trim())?
                }
                Format::Edgelist => parse_edgelist(&buf)?,
            };
            print!("{}", emit_graph(&g, to)?);
        }
    }
    Ok(())
}
