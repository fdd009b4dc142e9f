//! Command-line surface over the library: compute, decide, validate,
//! generate, and search, with machine-readable certificates under
//! `--json`. Exit codes: 0 success, 1 negative decision, 2 usage/parse
//! error, 3 guard refusal, 4 internal inconsistency (a bug trap).

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use brambles::bramble::BrambleMode;
use brambles::cert::{
    BrambleJson, CertificateJson, DecompositionJson, GadgetJson, GraphJson, ObstructionRecordJson,
    SbnJson,
};
use brambles::decomp::DecompKind;
use brambles::domino::{
    fan_edge_count, gen_chain, gen_fan, max_edge_bound, recognize_domino,
};
use brambles::error::{Error, Guards};
use brambles::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use brambles::obstructions::{builtin_obstructions, obstruction_search};
use brambles::reduction::{gadget, treewidth_exact};
use brambles::search::decide_width_le_k;
use brambles::{lexicographic_product, sbn_exact, sbn_oracle, Graph};

#[derive(Parser)]
#[command(
    name = "brambles",
    about = "exact strict bramble numbers, lenient tree decompositions and their certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliFormat {
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Chain,
    Fan,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    Strict,
    Touching,
}

#[derive(Args)]
struct CommonOpts {
    /// Input graph: a path, `-` for stdin, or an inline graph6 string.
    /// Repeatable where a command takes two graphs.
    #[arg(long = "in")]
    input: Vec<String>,
    /// Input format; sniffed from extension and content when omitted.
    #[arg(long, value_enum)]
    format: Option<CliFormat>,
    /// Emit a single JSON object instead of the human-readable report.
    #[arg(long)]
    json: bool,
    /// Raise the vertex guards of the exhaustive primitives.
    #[arg(long)]
    guard: Option<usize>,
    /// Worker threads for search commands (output is independent of N).
    #[arg(long)]
    threads: Option<usize>,
}

impl CommonOpts {
    fn guards(&self) -> Guards {
        match self.guard {
            Some(n) => Guards::default().with_vertex_limit(n),
            None => Guards::default(),
        }
    }

    fn one_graph(&self) -> Result<Graph, Error> {
        match self.input.as_slice() {
            [one] => load_graph(one, self.format),
            [] => Err(Error::Domain("expected an input graph via --in".into())),
            _ => Err(Error::Domain("this command takes exactly one --in".into())),
        }
    }

    fn two_graphs(&self) -> Result<(Graph, Graph), Error> {
        match self.input.as_slice() {
            [a, b] => Ok((load_graph(a, self.format)?, load_graph(b, self.format)?)),
            _ => Err(Error::Domain("this command takes exactly two --in".into())),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact strict bramble number with both certificates.
    Sbn {
        #[command(flatten)]
        common: CommonOpts,
        /// Compute the classic (touching) bramble number instead.
        #[arg(long, value_enum, default_value = "strict")]
        mode: CliMode,
    },
    /// Decide whether a width-k lenient decomposition exists (exit 1
    /// with a bramble witness when it does not).
    Decide {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        k: usize,
    },
    /// Validate a certificate (decomposition or bramble JSON) against a
    /// graph; exit 1 with the violated condition when invalid.
    Validate {
        #[command(flatten)]
        common: CommonOpts,
        /// Certificate file (or `-` for stdin).
        #[arg(long)]
        cert: String,
    },
    /// Check the k-domino-tree properties, reporting each verdict.
    RecognizeDomino {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        k: usize,
    },
    /// Generate an extremal k-domino-tree (chain or fan family).
    Gen {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Print the three built-in obstructions for strict bramble number 2.
    Obs2 {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Exhaustive minor-obstruction search up to n vertices.
    SearchObs {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Replace every edge by 2k-1 length-two paths, with provenance.
    Gadget {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        k: usize,
    },
    /// Exact treewidth with a classic tree decomposition witness.
    Tw {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Lexicographic product of two graphs (first adjacency wins).
    Product {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Evaluate the extremal edge-count formulas.
    Formulas {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Guard(_) => ExitCode::from(3),
                Error::Internal(_) => ExitCode::from(4),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Sbn { common, mode } => cmd_sbn(&common, mode),
        Command::Decide { common, k } => cmd_decide(&common, k),
        Command::Validate { common, cert } => cmd_validate(&common, &cert),
        Command::RecognizeDomino { common, k } => cmd_recognize(&common, k),
        Command::Gen { common, kind, n, k } => cmd_gen(&common, kind, n, k),
        Command::Obs2 { common } => cmd_obs2(&common),
        Command::SearchObs { common, k, n } => cmd_search_obs(&common, k, n),
        Command::Gadget { common, k } => cmd_gadget(&common, k),
        Command::Tw { common } => cmd_tw(&common),
        Command::Product { common } => cmd_product(&common),
        Command::Formulas { common, n, k } => cmd_formulas(&common, n, k),
    }
}

fn cmd_sbn(common: &CommonOpts, mode: CliMode) -> Result<ExitCode, Error> {
    let g = common.one_graph()?;
    let guards = common.guards();
    match mode {
        CliMode::Strict => {
            let cert = sbn_exact(&g, &guards)?;
            // re-validate before printing
            cert.bramble
                .validate()?
                .map_err(|v| Error::Internal(format!("witness bramble invalid: {v}")))?;
            cert.decomposition
                .validate(DecompKind::Lenient)?
                .map_err(|v| Error::Internal(format!("witness decomposition invalid: {v}")))?;
            if common.json {
                let out = SbnJson {
                    sbn: cert.value,
                    bramble: BrambleJson::from_bramble(&cert.bramble),
                    decomposition: DecompositionJson::from_decomposition(
                        &cert.decomposition,
                        DecompKind::Lenient,
                    ),
                };
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("sbn = {}", cert.value);
                println!(
                    "bramble witness: {} connected sets, order {}",
                    cert.bramble.sets.len(),
                    cert.value
                );
                println!(
                    "decomposition witness: {} bags of width {}",
                    cert.decomposition.bags.len(),
                    cert.decomposition.width()
                );
            }
        }
        CliMode::Touching => {
            let (value, witness) = sbn_oracle(&g, BrambleMode::Touching, &guards)?;
            witness
                .validate()?
                .map_err(|v| Error::Internal(format!("witness bramble invalid: {v}")))?;
            if common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "bn": value,
                        "bramble": BrambleJson::from_bramble(&witness),
                    }))
                    .unwrap()
                );
            } else {
                println!("bn = {value}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decide(common: &CommonOpts, k: usize) -> Result<ExitCode, Error> {
    let g = common.one_graph()?;
    let guards = common.guards();
    match decide_width_le_k(&g, k, &guards)? {
        Some(d) => {
            d.validate(DecompKind::Lenient)?
                .map_err(|v| Error::Internal(format!("witness invalid: {v}")))?;
            let json = DecompositionJson::from_decomposition(&d, DecompKind::Lenient);
            if common.json {
                println!("{}", serde_json::to_string_pretty(&json).unwrap());
            } else {
                println!("width ≤ {k}: yes, witness of width {}", d.width());
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            // explain the refusal with a bramble when the oracle can run
            let reason = match sbn_oracle(&g, BrambleMode::Strict, &guards) {
                Ok((value, witness)) => {
                    if common.json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&serde_json::json!({
                                "decision": false,
                                "reason": format!("strict bramble of order {value} found"),
                                "bramble": BrambleJson::from_bramble(&witness),
                            }))
                            .unwrap()
                        );
                    }
                    format!("strict bramble of order {value} found")
                }
                Err(_) => "the exhaustive search ruled every bag tree out".to_string(),
            };
            if !common.json {
                println!("width ≤ {k}: no — {reason}");
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_validate(common: &CommonOpts, cert_path: &str) -> Result<ExitCode, Error> {
    let g = common.one_graph()?;
    let text = read_input(cert_path)?;
    let cert: CertificateJson = serde_json::from_str(&text)
        .map_err(|e| Error::parse("certificate", e.to_string()))?;
    let verdict: Result<String, String> = match &cert {
        CertificateJson::Decomposition(dj) => {
            let kind = dj.kind()?;
            let d = dj.to_decomposition(&g)?;
            match d.validate(kind)? {
                Ok(()) => Ok(format!(
                    "{} decomposition of width {}",
                    dj.kind,
                    d.width()
                )),
                Err(v) => Err(v.to_string()),
            }
        }
        CertificateJson::Bramble(bj) => {
            let b = bj.to_bramble(&g)?;
            match b.validate()? {
                Ok(()) => Ok(format!(
                    "{:?} bramble of order {}",
                    b.mode,
                    b.order().0
                )),
                Err(v) => Err(v.to_string()),
            }
        }
    };
    match verdict {
        Ok(desc) => {
            if common.json {
                println!(
                    "{}",
                    serde_json::json!({"valid": true, "certificate": desc})
                );
            } else {
                println!("certificate valid: {desc}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(witness) => {
            if common.json {
                println!(
                    "{}",
                    serde_json::json!({"valid": false, "violation": witness})
                );
            } else {
                println!("certificate invalid: {witness}");
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_recognize(common: &CommonOpts, k: usize) -> Result<ExitCode, Error> {
    let g = common.one_graph()?;
    let report = recognize_domino(&g, k, &common.guards())?;
    if common.json {
        let props: serde_json::Map<String, serde_json::Value> = report
            .properties
            .iter()
            .map(|p| {
                (
                    p.id.to_string(),
                    serde_json::json!({
                        "pass": p.pass,
                        "witness": p.witness,
                    }),
                )
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "k": report.k,
                "verdict": report.verdict,
                "base_case": report.base_case,
                "properties": props,
            }))
            .unwrap()
        );
    } else {
        match report.base_case {
            Some(r) => println!("K_{r} with {r} ≤ {k}: accepted by the base case"),
            None => {
                for p in &report.properties {
                    println!("property {:>4}: {}", p.id, if p.pass { "pass" } else { "fail" });
                }
            }
        }
        println!(
            "verdict: {} a {k}-domino-tree",
            if report.verdict { "is" } else { "is NOT" }
        );
    }
    Ok(if report.verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_gen(common: &CommonOpts, kind: GenKind, n: usize, k: usize) -> Result<ExitCode, Error> {
    let g = match kind {
        GenKind::Chain => gen_chain(n, k)?,
        GenKind::Fan => gen_fan(n, k)?,
    };
    print_graph(common, &g)
}

fn cmd_obs2(common: &CommonOpts) -> Result<ExitCode, Error> {
    let records = builtin_obstructions(&common.guards())?;
    let out: Vec<ObstructionRecordJson> = records
        .iter()
        .map(ObstructionRecordJson::from_record)
        .collect::<Result<_, _>>()?;
    if common.json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        for r in &out {
            println!(
                "{} ({} vertices): order-3 bramble with {} sets, {} one-step minors all ≤ 2",
                r.graph6,
                r.order,
                r.bramble.sets.len(),
                r.minimality_log.len()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_search_obs(common: &CommonOpts, k: usize, n: usize) -> Result<ExitCode, Error> {
    let guards = common.guards();
    let run = || obstruction_search(k, n, &guards);
    let records = match common.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }?;
    let out: Vec<ObstructionRecordJson> = records
        .iter()
        .map(ObstructionRecordJson::from_record)
        .collect::<Result<_, _>>()?;
    if common.json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("{} obstruction(s) for k = {k} up to {n} vertices", out.len());
        for r in &out {
            println!("  {} ({} vertices)", r.graph6, r.order);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gadget(common: &CommonOpts, k: usize) -> Result<ExitCode, Error> {
    let g = common.one_graph()?;
    let gm = gadget(&g, k)?;
    if common.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&GadgetJson::from_gadget(&gm)?).unwrap()
        );
    } else {
        println!(
            "gadget: {} vertices, {} edges ({} per source edge)",
            gm.output.order(),
            gm.output.edge_count(),
            2 * (2 * k - 1)
        );
        println!("{}", write_graph6(&gm.output)?);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tw(common: &CommonOpts) -> Result<ExitCode, Error> {
    let g = common.one_graph()?;
    let (value, witness) = treewidth_exact(&g, &common.guards())?;
    witness
        .validate(DecompKind::Classic)?
        .map_err(|v| Error::Internal(format!("witness invalid: {v}")))?;
    if common.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "treewidth": value,
                "decomposition": DecompositionJson::from_decomposition(&witness, DecompKind::Classic),
            }))
            .unwrap()
        );
    } else {
        println!("tw = {value}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_product(common: &CommonOpts) -> Result<ExitCode, Error> {
    let (a, b) = common.two_graphs()?;
    let p = lexicographic_product(&a, &b)?;
    print_graph(common, &p)
}

fn cmd_formulas(common: &CommonOpts, n: usize, k: usize) -> Result<ExitCode, Error> {
    let max = max_edge_bound(n, k)?;
    let fan = if n >= 3 * k { Some(fan_edge_count(n, k)?) } else { None };
    if common.json {
        println!(
            "{}",
            serde_json::json!({"n": n, "k": k, "max_edges": max, "fan_edges": fan})
        );
    } else {
        match fan {
            Some(f) => println!("max {max}, fan {f}"),
            None => println!("max {max}, fan n/a (needs n ≥ 3k)"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_graph(common: &CommonOpts, g: &Graph) -> Result<ExitCode, Error> {
    if common.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&GraphJson::from_graph(g)?).unwrap()
        );
    } else {
        match common.format {
            Some(CliFormat::EdgeList) => print!("{}", write_edge_list(g)),
            _ => println!("{}", write_graph6(g)?),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read_input(source: &str) -> Result<String, Error> {
    if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::parse("stdin", e.to_string()))?;
        return Ok(buf);
    }
    let path = std::path::Path::new(source);
    if path.exists() {
        return std::fs::read_to_string(path)
            .map_err(|e| Error::parse(source, e.to_string()));
    }
    Err(Error::Domain(format!("no such file: {source}")))
}

/// Loads a graph from a path, stdin, or an inline graph6 string; format
/// comes from the flag, the extension, or a content sniff.
fn load_graph(source: &str, format: Option<CliFormat>) -> Result<Graph, Error> {
    let path = std::path::Path::new(source);
    let text = if source == "-" || path.exists() {
        read_input(source)?
    } else {
        // inline graph6 only; anything else is a missing file
        return match format {
            None | Some(CliFormat::Graph6) => parse_graph6(source.trim()),
            Some(CliFormat::EdgeList) => {
                Err(Error::Domain(format!("no such file: {source}")))
            }
        };
    };
    match format {
        Some(CliFormat::EdgeList) => parse_edge_list(&text),
        Some(CliFormat::Graph6) => parse_graph6(text.trim()),
        None => {
            let by_ext = path
                .extension()
                .and_then(|e| e.to_str())
                .map(|e| e.eq_ignore_ascii_case("g6") || e.eq_ignore_ascii_case("graph6"));
            if by_ext == Some(true) {
                parse_graph6(text.trim())
            } else {
                // content sniff: an integer first line means edge-list
                let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
                if first.trim().parse::<usize>().is_ok() {
                    parse_edge_list(&text)
                } else {
                    parse_graph6(text.trim())
                }
            }
        }
    }
}
