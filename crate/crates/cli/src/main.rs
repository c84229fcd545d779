//! `qtorbit`: command-line front end for the orbit-space toolkit.
//!
//! Exit codes: 0 = ok / verified, 1 = verification failed, 2 = invalid input.

use std::fs;
use std::io::{self, Read};
use std::panic;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qtorbit_core::charpair::{
    build_lambda_hat, check_star_condition, connected_stabilizer_failures, general_position_degree,
    has_isolated_fixed_points, isolated_by_weights, kspec, special_vertices, PairFile, SubtorusSpec,
};
use qtorbit_core::homology::reduced_homology;
use qtorbit_core::orbit::{verify_theorem1, verify_theorem5, OrbitOptions};
use qtorbit_core::{catalog, sample, FVector, SimplicialComplex, VertexLabel};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "qtorbit", version, about = "Orbit spaces of restricted quasitoric torus actions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Seed for sampled runs.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Combinatorial Alexander dual of a complex.
    Dual { input: PathBuf },
    /// Reduced integral homology of a complex.
    Homology { input: PathBuf },
    /// Characteristic pair for L, written as a pair file.
    Construct {
        input: PathBuf,
        /// Subtorus covector, comma separated (default 0,…,0,1).
        #[arg(long, value_parser = parse_covector, allow_hyphen_values = true)]
        subtorus: Option<CovectorArg>,
    },
    /// Hypothesis checks and general-position degree for a pair file.
    Analyze { input: PathBuf },
    /// Full verification for L, or for s^(j-1)(M) with --m and --j.
    Verify {
        input: Option<PathBuf>,
        #[arg(long, requires = "m")]
        j: Option<u32>,
        #[arg(long, requires = "j")]
        m: Option<PathBuf>,
        #[arg(long, value_parser = parse_covector, allow_hyphen_values = true)]
        subtorus: Option<CovectorArg>,
        /// Largest n for which the direct route runs.
        #[arg(long, default_value_t = 5)]
        direct_max_n: usize,
    },
    /// Random 1-neighborly complex on n vertices, from --seed.
    Sample {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// Print a bundled catalog complex.
    Catalog {
        /// Catalog name; omit to list the names.
        name: Option<String>,
    },
}

enum Failure {
    /// Ran to completion but something did not hold.
    Unverified(String),
    Invalid(String),
}

type Outcome = Result<String, (Option<String>, Failure)>;

/// Comma-separated covector given on the command line.
#[derive(Clone, Debug)]
struct CovectorArg(Vec<i64>);

fn parse_covector(s: &str) -> Result<CovectorArg, String> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("bad covector entry {t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(CovectorArg)
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Invalid(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn invalid<E: std::fmt::Display>(e: E) -> (Option<String>, Failure) {
    (None, Failure::Invalid(e.to_string()))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("report types serialize");
    s.push('\n');
    s
}

fn complex_text(k: &SimplicialComplex) -> String {
    let labels = |f: &[VertexLabel]| f.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let mut s = format!("ground: {}\n", labels(k.ground()));
    for f in k.facets() {
        s.push_str(&format!("facet: {{{}}}\n", labels(&f)));
    }
    s
}

fn emit_complex(k: &SimplicialComplex, format: Format) -> String {
    match format {
        Format::Json => json(k),
        Format::Text => complex_text(k),
    }
}

#[derive(Serialize)]
struct Analysis {
    n: usize,
    subtorus: Vec<i64>,
    star_condition: bool,
    isolated_fixed_points: bool,
    isolated_by_weights: bool,
    connected_stabilizers: bool,
    connected_stabilizer_failures: Vec<Vec<VertexLabel>>,
    special_vertices: Vec<VertexLabel>,
    kspec_dim: isize,
    kspec_f: FVector,
    j_star: i64,
}

impl Analysis {
    fn holds(&self) -> bool {
        self.star_condition && self.isolated_fixed_points && self.connected_stabilizers
    }

    fn render_text(&self) -> String {
        let mut s = format!("n = {}, subtorus = {:?}\n", self.n, self.subtorus);
        s.push_str(&format!("star condition:         {}\n", self.star_condition));
        s.push_str(&format!("isolated fixed points:  {}\n", self.isolated_fixed_points));
        s.push_str(&format!("  (by tangent weights): {}\n", self.isolated_by_weights));
        s.push_str(&format!("connected stabilizers:  {}\n", self.connected_stabilizers));
        for f in &self.connected_stabilizer_failures {
            let f: Vec<String> = f.iter().map(ToString::to_string).collect();
            s.push_str(&format!("  fails on {{{}}}\n", f.join(" ")));
        }
        s.push_str(&format!("special vertices: {}\n", self.special_vertices.len()));
        s.push_str(&format!("K_spec: dim {}, f = {:?}\n", self.kspec_dim, self.kspec_f.0));
        s.push_str(&format!("j* = {}\n", self.j_star));
        s
    }
}

fn run(cli: Cli) -> Outcome {
    let fmt = cli.format;
    match cli.command {
        Command::Dual { input } => {
            let k = read_complex(&input).map_err(|f| (None, f))?;
            let d = k.alexander_dual().map_err(invalid)?;
            Ok(emit_complex(&d, fmt))
        }
        Command::Homology { input } => {
            let k = read_complex(&input).map_err(|f| (None, f))?;
            let h = reduced_homology(&k);
            Ok(match fmt {
                Format::Json => json(&h),
                Format::Text => h.render_text(),
            })
        }
        Command::Construct { input, subtorus } => {
            let l = read_complex(&input).map_err(|f| (None, f))?;
            let pair = build_lambda_hat(&l).map_err(invalid)?;
            let sub = match subtorus {
                Some(p) => SubtorusSpec::new(p.0).map_err(invalid)?,
                None => SubtorusSpec::standard(pair.n()),
            };
            let file = PairFile::new(&pair, &sub);
            file.clone().into_parts().map_err(invalid)?;
            Ok(json(&file))
        }
        Command::Analyze { input } => {
            let text = read_input(&input).map_err(|f| (None, f))?;
            let file: PairFile = serde_json::from_str(&text).map_err(|e| invalid(format!("{}: {e}", input.display())))?;
            let (pair, sub) = file.into_parts().map_err(invalid)?;
            let star = check_star_condition(&pair);
            let failures = connected_stabilizer_failures(&pair, &sub).map_err(invalid)?;
            let k = kspec(&pair, &sub).map_err(invalid)?;
            let a = Analysis {
                n: pair.n(),
                subtorus: sub.covector().to_i64(),
                star_condition: star,
                isolated_fixed_points: has_isolated_fixed_points(&pair, &sub),
                isolated_by_weights: star && isolated_by_weights(&pair, &sub).map_err(invalid)?,
                connected_stabilizers: failures.is_empty(),
                connected_stabilizer_failures: failures,
                special_vertices: special_vertices(&pair, &sub).map_err(invalid)?,
                kspec_dim: k.dim(),
                kspec_f: k.f_vector(),
                j_star: general_position_degree(&pair, &sub).map_err(invalid)?,
            };
            let out = match fmt {
                Format::Json => json(&a),
                Format::Text => a.render_text(),
            };
            if a.holds() {
                Ok(out)
            } else {
                Err((Some(out), Failure::Unverified("hypothesis checks failed".into())))
            }
        }
        Command::Verify { input, j, m, subtorus, direct_max_n } => {
            let opts = OrbitOptions { subtorus: subtorus.map(|c| c.0), direct_max_n };
            let report = match (input, m, j) {
                (Some(l), None, None) => {
                    let l = read_complex(&l).map_err(|f| (None, f))?;
                    verify_theorem1(&l, &opts)
                }
                (None, Some(m), Some(j)) => {
                    let m = read_complex(&m).map_err(|f| (None, f))?;
                    verify_theorem5(&m, j, &opts)
                }
                (Some(_), Some(_), _) => return Err(invalid("give either L or --m with --j, not both")),
                _ => return Err(invalid("verify needs a complex L, or --m M with --j J")),
            }
            .map_err(invalid)?;
            let out = match fmt {
                Format::Json => json(&report),
                Format::Text => report.render_text(),
            };
            if report.verified() {
                Ok(out)
            } else {
                Err((Some(out), Failure::Unverified("verification failed".into())))
            }
        }
        Command::Sample { n } => {
            if !(1..=20).contains(&n) {
                return Err(invalid(format!("n must be between 1 and 20, got {n}")));
            }
            let k = sample::random_neighborly(&mut sample::rng(cli.seed), n);
            Ok(emit_complex(&k, fmt))
        }
        Command::Catalog { name: None } => Ok(catalog::NAMES.iter().map(|n| format!("{n}\n")).collect()),
        Command::Catalog { name: Some(name) } => {
            let k = catalog::by_name(&name).ok_or_else(|| invalid(format!("unknown catalog name {name:?}")))?;
            Ok(emit_complex(&k, fmt))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    panic::set_hook(Box::new(|_| {}));
    let result = panic::catch_unwind(|| run(cli));
    match result {
        Ok(Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Err((out, failure))) => {
            if let Some(out) = out {
                print!("{out}");
            }
            match failure {
                Failure::Unverified(msg) => {
                    eprintln!("qtorbit: {msg}");
                    ExitCode::from(1)
                }
                Failure::Invalid(msg) => {
                    eprintln!("qtorbit: error: {msg}");
                    ExitCode::from(2)
                }
            }
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown".into());
            eprintln!("qtorbit: error: internal failure: {msg}");
            ExitCode::from(2)
        }
    }
}
