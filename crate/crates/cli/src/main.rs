mod input;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::builder::RangedU64ValueParser;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use degpoly_core::dp::{apply_operation, dp_report, dp_sequence, family_dp_sequence, verify_operation, OpKind};
use degpoly_core::graph::{Family, SimpleGraph};
use degpoly_core::realize::{
    classify_all, necessary_conditions, realize, ConditionReport, RealizabilityReport, RealizeOptions, Verdict,
    DEFAULT_SEARCH_BOUND,
};

use input::{load_graph, load_sequence};

#[derive(Parser)]
#[command(name = "dpoly", version, about = "Degree polynomials of graphs and realizability of their sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for searches.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    workers: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Per-vertex degree polynomials, dp(G) and the sequence of a graph.
    Dp {
        /// Edge-list file, family literal (K4, P3, C5, K3,2, E2) or inline edges "a b; b c".
        graph: String,
    },
    /// Degree polynomial sequence of a standard family.
    Family {
        /// complete, path, cycle or complete_bipartite.
        kind: String,
        #[arg(required = true)]
        params: Vec<usize>,
        /// Use the closed form instead of building the graph.
        #[arg(long)]
        closed_form: bool,
    },
    /// Apply a graph operation, optionally checking the closed forms.
    Op {
        /// join, cartesian, tensor, lexicographic or complement.
        kind: OpKind,
        g1: String,
        g2: Option<String>,
        /// Compare every vertex against its closed form.
        #[arg(long)]
        verify: bool,
        /// Print the result graph as DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Necessary conditions for a degree polynomial sequence.
    Check {
        /// Sequence file or inline list "2x, x^2, x".
        seq: String,
    },
    /// Decide realizability by conditions and exhaustive search.
    Realize {
        seq: String,
        /// Largest length searched exhaustively.
        #[arg(long, env = "DPOLY_MAX_N", default_value_t = DEFAULT_SEARCH_BOUND,
              value_parser = RangedU64ValueParser::<usize>::new().range(1..=16))]
        max_n: usize,
        /// List every isomorphism class found.
        #[arg(long)]
        all: bool,
        /// Print witnesses as DOT instead of edge lists.
        #[arg(long)]
        dot: bool,
        /// Search even if a necessary condition fails.
        #[arg(long)]
        skip_conditions: bool,
    },
    /// All degree polynomial sequences on n vertices with class counts.
    Classify {
        #[arg(long, value_parser = RangedU64ValueParser::<usize>::new().range(1..=8))]
        n: usize,
    },
    /// Check the operation closed forms on random graph pairs.
    Selfcheck {
        #[arg(long, default_value_t = 200)]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6, value_parser = RangedU64ValueParser::<usize>::new().range(1..=12))]
        max_order: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Parse(String),
    Input(String),
}

impl CliError {
    fn line(&self) -> String {
        let (kind, msg) = match self {
            CliError::Usage(m) => ("usage", m),
            CliError::Io(m) => ("io", m),
            CliError::Parse(m) => ("parse", m),
            CliError::Input(m) => ("input", m),
        };
        format!("error[{kind}]: {}", msg.replace('\n', " "))
    }
}

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

/// Text or JSON output plus whether the verdict was negative.
struct Outcome {
    text: String,
    json: Value,
    negative: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            _ => {
                let first = e.render().to_string();
                let first = first.lines().next().unwrap_or("").trim_start_matches("error: ");
                eprintln!("{}", CliError::Usage(first.to_string()).line());
                return ExitCode::from(1);
            }
        },
    };
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            ExitCode::from(if out.negative { 2 } else { 0 })
        }
        Err(e) => {
            eprintln!("{}", e.line());
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let workers = cli.workers as usize;
    match &cli.command {
        Command::Dp { graph } => cmd_dp(&load_graph(graph)?),
        Command::Family { kind, params, closed_form } => cmd_family(kind, params, *closed_form),
        Command::Op { kind, g1, g2, verify, dot } => {
            let g = load_graph(g1)?;
            let h = match (kind.is_binary(), g2) {
                (true, Some(p)) => Some(load_graph(p)?),
                (true, None) => return Err(CliError::Usage(format!("`{kind}` needs two graphs"))),
                (false, Some(_)) => return Err(CliError::Usage(format!("`{kind}` takes one graph"))),
                (false, None) => None,
            };
            cmd_op(*kind, &g, h.as_ref(), *verify, *dot)
        }
        Command::Check { seq } => cmd_check(seq),
        Command::Realize { seq, max_n, all, dot, skip_conditions } => {
            let opts = RealizeOptions {
                max_n: *max_n,
                skip_conditions: *skip_conditions,
                want_all_witnesses: *all,
                workers,
            };
            cmd_realize(seq, &opts, *dot)
        }
        Command::Classify { n } => cmd_classify(*n, workers),
        Command::Selfcheck { pairs, seed, max_order } => Ok(cmd_selfcheck(*pairs, *seed, *max_order)),
    }
}

fn cmd_dp(g: &SimpleGraph) -> Result<Outcome, CliError> {
    let r = dp_report(g);
    let mut text = String::new();
    for v in &r.vertices {
        writeln!(text, "dp({}) = {}", v.label, v.dp).unwrap();
    }
    writeln!(text, "dp(G) = {}", r.graph_dp).unwrap();
    match &r.sequence {
        Some(q) => writeln!(text, "sequence: {q}").unwrap(),
        None => writeln!(text, "sequence: undefined (isolated vertices: {})", r.isolated.join(", ")).unwrap(),
    }
    if let Some(k) = r.regular_r {
        writeln!(text, "regular: {k}").unwrap();
    }
    Ok(Outcome { text, json: json!(r), negative: false })
}

fn cmd_family(kind: &str, params: &[usize], closed_form: bool) -> Result<Outcome, CliError> {
    let fam = Family::from_kind(kind, params).map_err(input_err)?;
    let q = if closed_form {
        family_dp_sequence(fam).map_err(input_err)?
    } else {
        dp_sequence(&fam.graph().map_err(input_err)?).map_err(input_err)?
    };
    Ok(Outcome {
        text: format!("{fam}: {q}\n"),
        json: json!({ "family": fam.to_string(), "closed_form": closed_form, "sequence": q }),
        negative: false,
    })
}

fn cmd_op(op: OpKind, g: &SimpleGraph, h: Option<&SimpleGraph>, verify: bool, dot: bool) -> Result<Outcome, CliError> {
    let result = apply_operation(op, g, h).map_err(input_err)?;
    let rendered = if dot { result.to_dot() } else { result.to_edge_list() };
    if !verify {
        return Ok(Outcome { text: rendered, json: json!({ "op": op, "graph": result.to_record() }), negative: false });
    }
    let check = verify_operation(op, g, h).map_err(input_err)?;
    let mut text = String::new();
    if dot {
        text.push_str(&rendered);
    }
    for v in check.vertices.iter().filter(|v| !v.matches) {
        writeln!(text, "mismatch at {}: direct {} vs formula {}", v.label, v.direct, v.formula).unwrap();
    }
    writeln!(text, "{}/{} vertices match formula", check.matched(), check.checked()).unwrap();
    Ok(Outcome { negative: !check.pass, text, json: json!(check) })
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn condition_lines(c: &ConditionReport, text: &mut String) {
    writeln!(text, "(a) {}  sum of sc = {}", pass(c.cond_a.pass), c.cond_a.sum).unwrap();
    match &c.cond_b.violation {
        None => writeln!(text, "(b) PASS").unwrap(),
        Some(v) => writeln!(
            text,
            "(b) FAIL  entry {} ({}) needs {} neighbors of degree {}, {} available",
            v.entry + 1,
            v.poly,
            v.coefficient,
            v.exponent,
            v.available
        )
        .unwrap(),
    }
    writeln!(
        text,
        "(c) {}  sec totals: odd-sc {}, even-sc {}",
        pass(c.cond_c.pass),
        c.cond_c.odd_sc_sec_sum,
        c.cond_c.even_sc_sec_sum
    )
    .unwrap();
    let proj: Vec<String> = c.projection.values().iter().map(ToString::to_string).collect();
    writeln!(text, "projection: {} ({})", proj.join(", "), if c.projection_graphical { "graphical" } else { "not graphical" })
        .unwrap();
    writeln!(text, "basic facts: {}", pass(c.basic_facts.all())).unwrap();
}

fn cmd_check(seq: &str) -> Result<Outcome, CliError> {
    let (q, reordered) = load_sequence(seq)?;
    let c = necessary_conditions(&q);
    let mut text = format!("sequence: {q}\n");
    if reordered {
        text.push_str("note: input reordered to non-increasing order\n");
    }
    condition_lines(&c, &mut text);
    Ok(Outcome {
        negative: !c.overall_necessary_pass,
        text,
        json: json!({ "sequence": q, "reordered": reordered, "conditions": c }),
    })
}

fn cmd_realize(seq: &str, opts: &RealizeOptions, dot: bool) -> Result<Outcome, CliError> {
    let (q, _) = load_sequence(seq)?;
    let r: RealizabilityReport = realize(&q, opts).map_err(input_err)?;
    let mut text = format!("sequence: {}\n", r.sequence);
    condition_lines(&r.conditions, &mut text);
    match r.verdict {
        Verdict::Undecided => {
            writeln!(text, "undecided: length {} exceeds search bound {}", r.n, r.max_n).unwrap();
        }
        Verdict::Unrealizable { reason } if !r.searched => {
            let reason = serde_json::to_value(reason).expect("serializable");
            writeln!(text, "unrealizable: {}", reason.as_str().unwrap_or("")).unwrap();
        }
        _ => {
            writeln!(text, "{} witnesses (exhaustive)", r.nonisomorphic_count).unwrap();
            for (i, w) in r.witnesses.iter().enumerate() {
                let g = w.form.to_graph();
                writeln!(text, "witness {}{}:", i + 1, if w.verified { "" } else { " (NOT VERIFIED)" }).unwrap();
                text.push_str(&if dot { g.to_dot() } else { g.to_edge_list() });
            }
        }
    }
    Ok(Outcome {
        negative: matches!(r.verdict, Verdict::Unrealizable { .. }),
        text,
        json: json!(r),
    })
}

fn cmd_classify(n: usize, workers: usize) -> Result<Outcome, CliError> {
    let classes = classify_all(n, workers).map_err(input_err)?;
    let mut text = String::new();
    for c in &classes {
        writeln!(text, "{}\t{}", c.count, c.sequence).unwrap();
    }
    let total: usize = classes.iter().map(|c| c.count).sum();
    writeln!(text, "{} sequences, {} graphs", classes.len(), total).unwrap();
    Ok(Outcome { text, json: json!({ "n": n, "classes": classes }), negative: false })
}

fn cmd_selfcheck(pairs: usize, seed: u64, max_order: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut negative = false;
    for op in OpKind::ALL {
        let mut passed = 0;
        for _ in 0..pairs {
            let (n1, n2) = (rng.gen_range(1..=max_order), rng.gen_range(1..=max_order));
            let g = SimpleGraph::random(n1, rng.gen_range(0.1..0.9), &mut rng);
            let h = SimpleGraph::random(n2, rng.gen_range(0.1..0.9), &mut rng);
            if verify_operation(op, &g, op.is_binary().then_some(&h)).is_ok_and(|c| c.pass) {
                passed += 1;
            }
        }
        negative |= passed != pairs;
        writeln!(text, "{op}: {passed}/{pairs} pairs pass").unwrap();
        rows.push(json!({ "op": op, "pairs": pairs, "passed": passed }));
    }
    Outcome { text, json: json!({ "seed": seed, "results": rows }), negative }
}
