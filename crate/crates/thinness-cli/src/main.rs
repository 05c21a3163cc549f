//! Command-line front end: generators, layout constructors, the certificate
//! verifier, the exact solver, the cograph calculator, and the coloring
//! tools, all speaking the JSON formats on stdin/stdout.
//!
//! Exit codes: 0 success or positive verdict, 1 well-formed negative
//! verdict, 2 usage or format error.

use clap::{Parser, Subcommand};
use serde_json::json;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;
use thinness::cograph;
use thinness::coloring::{self, MuInstance};
use thinness::crown;
use thinness::exact::{self, ExactOptions, ExactOutcome};
use thinness::graph::{self, Graph};
use thinness::grid;
use thinness::layout::{verify, Layout, VariantSpec};

#[derive(Parser)]
#[command(name = "thinness", version, about = "Graph thinness toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a family graph as JSON.
    Gen {
        #[command(subcommand)]
        family: GenCmd,
    },
    /// Emit a witness layout as JSON.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Check a layout against a variant; exit 1 with the violation on failure.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Layout JSON file; standard input when omitted or "-".
        #[arg(long)]
        layout: Option<PathBuf>,
        #[arg(long)]
        variant: String,
    },
    /// Exact value and optimal layout by brute force (small graphs).
    Exact {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        variant: String,
        /// Wall-clock budget; exceeded runs report the best incumbent.
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Worker count for the first-vertex-partitioned search.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// thin or fp of a cograph from its cotree expression.
    Cograph {
        #[arg(long)]
        expr: String,
        /// "thin" or "fp"
        #[arg(long)]
        param: String,
        /// Also emit a witness layout.
        #[arg(long)]
        witness: bool,
    },
    /// Coloring tools.
    Color {
        #[command(subcommand)]
        what: ColorCmd,
    },
    /// Bounded-coloring reductions.
    Reduce {
        #[command(subcommand)]
        what: ReduceCmd,
    },
    /// Bound formulas.
    Bounds {
        #[command(subcommand)]
        what: BoundsCmd,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    Crown {
        #[arg(long)]
        n: usize,
    },
    Grid {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    CompleteBipartite {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// nK_2, a perfect matching on 2n vertices.
    Matching {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Witness layout for any of the twelve variants on CR_n.
    Crown {
        #[arg(long)]
        variant: String,
        #[arg(long)]
        n: usize,
    },
    /// Consistent layout of GR_{n,m} with ceil((min+1)/2) classes.
    GridThin {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Precedence layout of GR_{2,n} with ceil((n+1)/2) classes.
    GridFp2 {
        #[arg(long)]
        n: usize,
    },
    /// Precedence claw layout of GR_n with ceil((n-1)/2)^2+1 classes.
    GridFpn {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum ColorCmd {
    /// Greedy coloring along an order (a JSON array of vertices).
    Greedy {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        order: PathBuf,
    },
    /// Perfect order from a precedence proper 2-thin certificate.
    PerfectOrder {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        layout: PathBuf,
    },
    /// Decide mu-colorability exactly (small graphs).
    Mu {
        #[arg(long)]
        graph: PathBuf,
        /// Proper interval order of the graph (JSON array).
        #[arg(long)]
        order: PathBuf,
        /// Bounds file: {"mu": [m0, m1, ...]}.
        #[arg(long)]
        mu: PathBuf,
    },
}

#[derive(Subcommand)]
enum ReduceCmd {
    /// G': append a clique, yielding a precedence 2-thin instance.
    Gprime {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        order: PathBuf,
        #[arg(long)]
        mu: PathBuf,
    },
    /// G'': append the proper-interval gadget, yielding a proper 2-thin instance.
    Gpp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        order: PathBuf,
        #[arg(long)]
        mu: PathBuf,
    },
}

#[derive(Subcommand)]
enum BoundsCmd {
    Grid {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// "thin" or "fp"
        #[arg(long)]
        variant: String,
    },
}

enum Verdict {
    Positive,
    Negative,
}

type RunResult = Result<Verdict, Box<dyn std::error::Error>>;

fn read_input(path: &Path) -> Result<String, Box<dyn std::error::Error>> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?)
    }
}

fn read_graph(path: &Path) -> Result<Graph, Box<dyn std::error::Error>> {
    Ok(serde_json::from_str(&read_input(path)?)?)
}

fn read_layout(path: Option<&PathBuf>) -> Result<Layout, Box<dyn std::error::Error>> {
    let text = match path {
        Some(p) => read_input(p)?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    Ok(serde_json::from_str(&text)?)
}

fn read_order(path: &Path) -> Result<Vec<usize>, Box<dyn std::error::Error>> {
    Ok(serde_json::from_str(&read_input(path)?)?)
}

fn read_mu(path: &Path) -> Result<Vec<usize>, Box<dyn std::error::Error>> {
    #[derive(serde::Deserialize)]
    struct MuFile {
        mu: Vec<usize>,
    }
    let parsed: MuFile = serde_json::from_str(&read_input(path)?)?;
    Ok(parsed.mu)
}

fn parse_variant(name: &str) -> Result<VariantSpec, String> {
    VariantSpec::from_name(name).ok_or_else(|| {
        format!(
            "unknown variant '{name}' (expected one of: {})",
            VariantSpec::all().map(|s| s.name()).join(", ")
        )
    })
}

fn emit(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string(value).unwrap());
}

fn run(cli: Cli) -> RunResult {
    match cli.cmd {
        Cmd::Gen { family } => {
            let g = match family {
                GenCmd::Crown { n } => graph::crown(n)?.0,
                GenCmd::Grid { n, m } => graph::grid(n, m)?.0,
                GenCmd::Complete { n } => graph::complete(n),
                GenCmd::CompleteBipartite { p, q } => graph::complete_bipartite(p, q),
                GenCmd::Matching { n } => graph::matching_nk2(n),
                GenCmd::Path { n } => graph::path(n),
            };
            emit(&g);
            Ok(Verdict::Positive)
        }
        Cmd::Construct { what } => {
            let l = match what {
                ConstructCmd::Crown { variant, n } => {
                    let spec = parse_variant(&variant)?;
                    crown::construct(&spec, n)?
                }
                ConstructCmd::GridThin { n, m } => grid::thin_layout(n, m)?,
                ConstructCmd::GridFp2 { n } => grid::fp_gr2_layout(n)?,
                ConstructCmd::GridFpn { n } => grid::fp_grn_layout(n)?,
            };
            emit(&l);
            Ok(Verdict::Positive)
        }
        Cmd::Verify {
            graph,
            layout,
            variant,
        } => {
            let g = read_graph(&graph)?;
            let l = read_layout(layout.as_ref())?;
            let spec = parse_variant(&variant)?;
            match verify(&g, &l, &spec) {
                Ok(()) => {
                    emit(&json!({"ok": true, "width": l.width()}));
                    Ok(Verdict::Positive)
                }
                Err(v) => {
                    emit(&json!({"ok": false, "violation": v}));
                    Ok(Verdict::Negative)
                }
            }
        }
        Cmd::Exact {
            graph,
            variant,
            budget_ms,
            jobs,
        } => {
            let g = read_graph(&graph)?;
            let spec = parse_variant(&variant)?;
            let opts = ExactOptions {
                budget: budget_ms.map(Duration::from_millis),
                jobs,
            };
            match exact::exact_value(&g, &spec, &opts)? {
                ExactOutcome::Solved { value, layout } => {
                    emit(&json!({"value": value, "layout": layout}));
                }
                ExactOutcome::Inconclusive { upper, layout } => {
                    emit(&json!({"inconclusive": true, "upper": upper, "layout": layout}));
                }
            }
            Ok(Verdict::Positive)
        }
        Cmd::Cograph {
            expr,
            param,
            witness,
        } => {
            let e = cograph::parse_cotree(&expr)?;
            let g = e.evaluate();
            let (value, w) = match param.as_str() {
                "thin" => (cograph::thin_cograph(&e), cograph::witness_thin(&e)),
                "fp" => (cograph::fp_cograph(&e), cograph::witness_fp(&e)),
                other => return Err(format!("unknown param '{other}' (expected thin or fp)").into()),
            };
            if witness {
                emit(&json!({"value": value, "graph": g, "witness": w}));
            } else {
                emit(&json!({"value": value, "graph": g}));
            }
            Ok(Verdict::Positive)
        }
        Cmd::Color { what } => match what {
            ColorCmd::Greedy { graph, order } => {
                let g = read_graph(&graph)?;
                let order = read_order(&order)?;
                let coloring = coloring::greedy_color(&g, &order)?;
                emit(&json!({"colors": coloring.colors, "num_colors": coloring.num_colors()}));
                Ok(Verdict::Positive)
            }
            ColorCmd::PerfectOrder { graph, layout } => {
                let g = read_graph(&graph)?;
                let l: Layout = serde_json::from_str(&read_input(&layout)?)?;
                match coloring::build_perfect_order(&g, &l) {
                    Ok(order) => {
                        emit(&order);
                        Ok(Verdict::Positive)
                    }
                    Err(coloring::ColoringError::NotACertificate(v)) => {
                        emit(&json!({"ok": false, "violation": v}));
                        Ok(Verdict::Negative)
                    }
                    Err(e) => Err(e.into()),
                }
            }
            ColorCmd::Mu { graph, order, mu } => {
                let g = read_graph(&graph)?;
                let order = read_order(&order)?;
                let mu = read_mu(&mu)?;
                let inst = MuInstance::new(g, order, mu)?;
                let feasible = exact::is_mu_colorable(inst.graph(), inst.mu())?;
                emit(&json!({"mu_colorable": feasible}));
                Ok(if feasible { Verdict::Positive } else { Verdict::Negative })
            }
        },
        Cmd::Reduce { what } => {
            let (graph, order, mu, prime) = match what {
                ReduceCmd::Gprime { graph, order, mu } => (graph, order, mu, true),
                ReduceCmd::Gpp { graph, order, mu } => (graph, order, mu, false),
            };
            let g = read_graph(&graph)?;
            let order = read_order(&order)?;
            let mu = read_mu(&mu)?;
            let inst = MuInstance::new(g, order, mu)?;
            let (h, l) = if prime {
                coloring::reduce_gprime(&inst)
            } else {
                coloring::reduce_gdoubleprime(&inst)
            };
            emit(&json!({"graph": h, "layout": l}));
            Ok(Verdict::Positive)
        }
        Cmd::Bounds { what } => match what {
            BoundsCmd::Grid { n, m, variant } => {
                let (lower, upper) = match variant.as_str() {
                    "thin" => grid::thin_bounds(n, m)?,
                    "fp" if n == m => grid::fp_grn_bounds(n)?,
                    "fp" if n.min(m) == 2 => {
                        let v = grid::fp_gr2_value(n.max(m));
                        (v, v)
                    }
                    "fp" => {
                        return Err(
                            "fp bounds are available for square grids and two-row grids only".into()
                        )
                    }
                    other => return Err(format!("unknown variant '{other}' (expected thin or fp)").into()),
                };
                emit(&json!({"lower": lower, "upper": upper}));
                Ok(Verdict::Positive)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Positive) => ExitCode::SUCCESS,
        Ok(Verdict::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
