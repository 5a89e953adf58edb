use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gainspec_core::spectral::{
    default_horizon, first_profile_difference, lambda_cospectral_with_horizon, Eigenvalue,
};
use gainspec_core::switching::{switching_isomorphic_with_limit, ISOMORPHISM_VERTEX_LIMIT};
use gainspec_core::{
    count_switching_classes, cover_graph, cycle_classify, is_balanced, pi_cospectral, pi_spectrum,
    read_gain_graph, switching_equivalent, walk_class_profile, Error, GainGraph, Representation,
};
use serde::Serialize;

const EXIT_NO: u8 = 1;
const EXIT_FAILURE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;
const EXIT_GUARD: u8 = 66;

#[derive(Parser, Debug)]
#[command(
    name = "gainspec",
    version,
    about = "Spectra and switching of gain graphs over finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Representation name, e.g. `trivial`, `regular`, `sign`, `cyclic:1`, `s4-standard`
    #[arg(long, global = true)]
    rep: Option<String>,

    /// Relative tolerance for floating-point trace comparisons
    #[arg(long, global = true, default_value_t = 1e-8, value_parser = positive_float)]
    tol: f64,

    /// Walk-length horizon for profile comparisons
    #[arg(long, global = true)]
    hmax: Option<usize>,

    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalues of the represented adjacency matrix
    Spectrum {
        file: PathBuf,
        /// Read the representation from a file instead of `--rep`
        #[arg(long)]
        rep_file: Option<PathBuf>,
    },
    /// Decide cospectrality of two gain graphs
    Cospectral {
        first: PathBuf,
        second: PathBuf,
        /// `g`, `lambda`, or `rep:<NAME>`
        #[arg(long, default_value = "g")]
        mode: String,
    },
    /// Switching equivalence on the same underlying graph
    Sweq { first: PathBuf, second: PathBuf },
    /// Switching isomorphism by exhaustive search
    Swiso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = ISOMORPHISM_VERTEX_LIMIT)]
        max_vertices: usize,
    },
    /// Whether every closed walk has identity gain
    Balance { file: PathBuf },
    /// Number of switching classes on the underlying graph
    Classes { file: PathBuf },
    /// Write the cover graph in gain-graph format
    Cover {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Classify a cycle gain graph, optionally against a second one
    Cycle {
        file: PathBuf,
        other: Option<PathBuf>,
    },
    /// Closed-walk counts per conjugacy class
    Profile { file: PathBuf },
}

fn positive_float(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. }
        | Error::NotAGroup(_)
        | Error::UnknownElement(_)
        | Error::Loop(_)
        | Error::MultiEdge(..)
        | Error::VertexOutOfRange { .. }
        | Error::Representation(_)
        | Error::Io(_) => EXIT_PARSE,
        Error::GuardExceeded { .. } => EXIT_GUARD,
        _ => EXIT_FAILURE,
    }
}

/// Output of one command: text to print and whether a predicate held.
struct Report {
    text: String,
    verdict: Option<bool>,
}

impl Report {
    fn plain(text: String) -> Self {
        Report {
            text,
            verdict: None,
        }
    }

    fn predicate(text: String, verdict: bool) -> Self {
        Report {
            text,
            verdict: Some(verdict),
        }
    }
}

fn load(path: &Path) -> Result<GainGraph, Failure> {
    read_gain_graph(path).map_err(|e| match e {
        Error::Syntax { line, message } => Failure::Lib(Error::Syntax {
            line,
            message: format!("{}: {message}", path.display()),
        }),
        other => Failure::Lib(other),
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct Verdict<'a> {
    relation: &'a str,
    result: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<serde_json::Value>,
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Spectrum { file, rep_file } => {
            let g = load(file)?;
            let rep = match (rep_file, &cli.rep) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    Representation::parse(&text, g.group().clone(), &path.display().to_string())?
                }
                (None, Some(name)) => Representation::from_name(name, g.group())?,
                (None, None) => Representation::regular(g.group().clone()),
            };
            let grouped = pi_spectrum(&g, &rep)?.grouped();
            if cli.json {
                return Ok(Report::plain(to_json(&grouped)));
            }
            let mut text = format!(
                "{} spectrum ({} eigenvalues)\n",
                rep.name(),
                grouped.iter().map(|e| e.multiplicity).sum::<usize>()
            );
            for Eigenvalue {
                value,
                multiplicity,
            } in grouped
            {
                let value = if value.abs() < 5e-13 { 0.0 } else { value };
                if multiplicity == 1 {
                    writeln!(text, "{value:>20.12}").unwrap();
                } else {
                    writeln!(text, "{value:>20.12}  ({multiplicity})").unwrap();
                }
            }
            Ok(Report::plain(text))
        }
        Command::Cospectral {
            first,
            second,
            mode,
        } => {
            let (a, b) = (load(first)?, load(second)?);
            let (relation, verdict, detail) = match mode.as_str() {
                "g" => {
                    let hmax = cli.hmax.unwrap_or_else(|| default_horizon(&a, &b));
                    let diff = first_profile_difference(&a, &b, hmax)?;
                    let detail = diff.map(|(h, c)| {
                        serde_json::json!({
                            "hmax": hmax,
                            "first_difference": {"h": h, "class": a.group().class_name(c)},
                        })
                    });
                    (
                        "G-cospectral",
                        diff.is_none(),
                        detail.or(Some(serde_json::json!({"hmax": hmax}))),
                    )
                }
                "lambda" => {
                    let hmax = cli
                        .hmax
                        .unwrap_or(a.vertex_count().max(b.vertex_count()) * a.group().order());
                    (
                        "lambda-cospectral",
                        lambda_cospectral_with_horizon(&a, &b, hmax)?,
                        Some(serde_json::json!({"hmax": hmax})),
                    )
                }
                other => match other.strip_prefix("rep:") {
                    Some(name) => {
                        let rep = Representation::from_name(name, a.group())?;
                        let verdict = pi_cospectral(&a, &b, &rep, cli.tol)?;
                        (
                            "pi-cospectral",
                            verdict,
                            Some(serde_json::json!({"representation": rep.name()})),
                        )
                    }
                    None => {
                        return Err(Failure::Usage(format!(
                            "unknown mode `{other}`; expected g, lambda or rep:<NAME>"
                        )))
                    }
                },
            };
            if cli.json {
                return Ok(Report::predicate(
                    to_json(&Verdict {
                        relation,
                        result: verdict,
                        detail,
                    }),
                    verdict,
                ));
            }
            let mut text = format!("{relation}: {}\n", yes_no(verdict));
            if let Some(serde_json::Value::Object(map)) = &detail {
                if let Some(diff) = map.get("first_difference") {
                    writeln!(
                        text,
                        "profiles first differ at h = {} in class {}",
                        diff["h"],
                        diff["class"].as_str().unwrap_or("?")
                    )
                    .unwrap();
                }
            }
            Ok(Report::predicate(text, verdict))
        }
        Command::Sweq { first, second } => {
            let (a, b) = (load(first)?, load(second)?);
            let witness = switching_equivalent(&a, &b)?;
            let components = a.underlying().components().len();
            let names = |f: &gainspec_core::SwitchingFunction| -> Vec<String> {
                f.values()
                    .iter()
                    .map(|&x| a.group().name(x).to_string())
                    .collect()
            };
            if cli.json {
                let detail = serde_json::json!({
                    "components": components,
                    "witness": witness.as_ref().map(names),
                });
                let verdict = witness.is_some();
                return Ok(Report::predicate(
                    to_json(&Verdict {
                        relation: "switching-equivalent",
                        result: verdict,
                        detail: Some(detail),
                    }),
                    verdict,
                ));
            }
            let mut text = format!("switching equivalent: {}\n", yes_no(witness.is_some()));
            if components > 1 {
                writeln!(text, "decided separately on {components} components").unwrap();
            }
            if let Some(f) = &witness {
                for (v, name) in names(f).iter().enumerate() {
                    writeln!(text, "f({}) = {name}", v + 1).unwrap();
                }
            }
            Ok(Report::predicate(text, witness.is_some()))
        }
        Command::Swiso {
            first,
            second,
            max_vertices,
        } => {
            let (a, b) = (load(first)?, load(second)?);
            let found = switching_isomorphic_with_limit(&a, &b, *max_vertices)?;
            let verdict = found.is_some();
            if cli.json {
                let detail = found.as_ref().map(|w| {
                    serde_json::json!({
                        "phi": w.phi.iter().map(|&v| v + 1).collect::<Vec<_>>(),
                        "switching": w.switching.values().iter().map(|&x| a.group().name(x)).collect::<Vec<_>>(),
                    })
                });
                return Ok(Report::predicate(
                    to_json(&Verdict {
                        relation: "switching-isomorphic",
                        result: verdict,
                        detail,
                    }),
                    verdict,
                ));
            }
            let mut text = format!("switching isomorphic: {}\n", yes_no(verdict));
            if let Some(w) = found {
                for (v, &b) in w.phi.iter().enumerate() {
                    writeln!(
                        text,
                        "{} -> {}  f = {}",
                        v + 1,
                        b + 1,
                        a.group().name(w.switching.values()[v])
                    )
                    .unwrap();
                }
            }
            Ok(Report::predicate(text, verdict))
        }
        Command::Balance { file } => {
            let g = load(file)?;
            let verdict = is_balanced(&g);
            if cli.json {
                return Ok(Report::predicate(
                    to_json(&Verdict {
                        relation: "balanced",
                        result: verdict,
                        detail: None,
                    }),
                    verdict,
                ));
            }
            Ok(Report::predicate(
                format!("balanced: {}\n", yes_no(verdict)),
                verdict,
            ))
        }
        Command::Classes { file } => {
            let g = load(file)?;
            let count = count_switching_classes(g.underlying(), g.group())?;
            let rank = g.underlying().circuit_rank();
            if cli.json {
                let value = serde_json::json!({
                    "group": g.group().to_string(),
                    "circuit_rank": rank,
                    "switching_classes": serde_json::Number::from_string_unchecked(count.to_string()),
                });
                return Ok(Report::plain(to_json(&value)));
            }
            Ok(Report::plain(format!(
                "{} gains on a graph of circuit rank {rank}: {count} switching classes\n",
                g.group()
            )))
        }
        Command::Cover { file, output } => {
            let g = load(file)?;
            let cover = cover_graph(&g)?;
            std::fs::write(output, cover.to_text(&g))
                .map_err(|e| Error::Io(format!("{}: {e}", output.display())))?;
            let (n, m, c) = (
                cover.graph.vertex_count(),
                cover.graph.edge_count(),
                cover.graph.components().len(),
            );
            if cli.json {
                let value = serde_json::json!({"vertices": n, "edges": m, "components": c, "output": output.display().to_string()});
                return Ok(Report::plain(to_json(&value)));
            }
            Ok(Report::plain(format!(
                "cover graph: {n} vertices, {m} edges, {c} components -> {}\n",
                output.display()
            )))
        }
        Command::Cycle { file, other } => {
            let g = load(file)?;
            let report = cycle_classify(&g)?;
            let grp = g.group();
            let comparison = match other {
                Some(path) => {
                    let h = load(path)?;
                    if !h.group().same_as(grp) {
                        return Err(Error::GroupMismatch.into());
                    }
                    Some(report.compare(&cycle_classify(&h)?))
                }
                None => None,
            };
            if cli.json {
                let value = serde_json::json!({
                    "walk": report.walk.iter().map(|&v| v + 1).collect::<Vec<_>>(),
                    "gain": grp.name(report.gain),
                    "class": grp.class_name(report.class),
                    "inverse_class": grp.class_name(report.inverse_class),
                    "order": report.order,
                    "comparison": comparison,
                });
                return Ok(Report::plain(to_json(&value)));
            }
            let walk: Vec<String> = report.walk.iter().map(|v| (v + 1).to_string()).collect();
            let mut text = format!(
                "walk {}\ngain {}  class {}  inverse class {}  order {}\n",
                walk.join(" "),
                grp.name(report.gain),
                grp.class_name(report.class),
                grp.class_name(report.inverse_class),
                report.order
            );
            if let Some(c) = comparison {
                writeln!(
                    text,
                    "switching equivalent: {}",
                    yes_no(c.switching_equivalent)
                )
                .unwrap();
                writeln!(
                    text,
                    "switching isomorphic: {}",
                    yes_no(c.switching_isomorphic)
                )
                .unwrap();
                writeln!(text, "G-cospectral: {}", yes_no(c.g_cospectral)).unwrap();
                writeln!(text, "lambda-cospectral: {}", yes_no(c.lambda_cospectral)).unwrap();
            }
            Ok(Report::plain(text))
        }
        Command::Profile { file } => {
            let g = load(file)?;
            let hmax = cli.hmax.unwrap_or_else(|| default_horizon(&g, &g));
            let profile = walk_class_profile(&g, hmax);
            if cli.json {
                return Ok(Report::plain(to_json(&profile.to_record())));
            }
            let grp = g.group();
            let mut text = String::from("h");
            for c in 0..grp.num_classes() {
                write!(text, "\t{}", grp.class_name(c)).unwrap();
            }
            text.push('\n');
            for (h, row) in profile.counts().iter().enumerate() {
                write!(text, "{h}").unwrap();
                for k in row {
                    write!(text, "\t{k}").unwrap();
                }
                text.push('\n');
            }
            Ok(Report::plain(text))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.text);
            match report.verdict {
                Some(false) => ExitCode::from(EXIT_NO),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("gainspec: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("gainspec: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
