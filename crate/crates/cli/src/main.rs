use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use knotconc::obstruction::{certify_independence, verify_certificate};
use knotconc::seifert::SeifertMatrix;
use knotconc::twist::{self, Rho1Table};
use knotconc::{Error, LaurentPoly};
use knotconc_cli::family_spec::FamilySpec;
use knotconc_cli::output;
use knotconc_cli::report::{self, sha256_hex, Subject};

#[derive(Parser)]
#[command(name = "knotconc", version, about = "Concordance invariants and independence certificates for knots")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// JSON output (the default).
    #[arg(long, global = true, conflicts_with = "tsv")]
    json: bool,
    /// Tab-separated output.
    #[arg(long, global = true)]
    tsv: bool,
    /// ρ⁽¹⁾ assertion table replacing the built-in one.
    #[arg(long, global = true, value_name = "PATH")]
    rho1_table: Option<PathBuf>,
    /// Largest complexity checked.
    #[arg(long, global = true, value_name = "N", default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=64))]
    cmax: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant report for a twist knot or a Seifert matrix.
    Analyze {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "seifert", required_unless_present = "seifert")]
        twist: Option<i64>,
        #[arg(long, value_name = "PATH")]
        seifert: Option<PathBuf>,
    },
    /// Checks on the family n = 36k² − 6k + 4 for odd k ≤ K.
    Family {
        #[arg(long, value_name = "K", allow_hyphen_values = true)]
        kmax: i64,
    },
    /// Independence certificate for the knots listed in a family file.
    Certify {
        family: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Recomputes a certificate; exit 0 iff it is valid.
    Verify { certificate: PathBuf },
    /// Submodules and isotropy of the localized Blanchfield module.
    Blanchfield {
        #[arg(long, allow_hyphen_values = true)]
        twist: i64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=64))]
        complexity: u32,
        /// Localizing polynomial, e.g. "2*t^2 + -1*t^1 + -2*t^0"; defaults to the order.
        #[arg(long, value_name = "POLY", allow_hyphen_values = true)]
        localize: Option<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

/// Error code for library errors: bad Seifert data and non-cyclic modules
/// are 3, everything else is an input error.
fn classify(e: Error) -> Failure {
    let code = match e {
        Error::InvalidSeifert(_) | Error::NonCyclic(_) => 3,
        _ => 2,
    };
    Failure::new(code, e.to_string())
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::new(2, format!("cannot read {}: {e}", path.display())))
}

fn read_text(path: &Path) -> Result<String, Failure> {
    String::from_utf8(read(path)?).map_err(|_| Failure::new(2, format!("{} is not UTF-8", path.display())))
}

fn load_table(g: &Global) -> Result<Rho1Table, Failure> {
    match &g.rho1_table {
        None => Ok(Rho1Table::shipped()),
        Some(p) => Rho1Table::from_json(&read_text(p)?).map_err(classify),
    }
}

fn emit(g: &Global, v: &Value) {
    if g.tsv {
        print!("{}", output::tsv_pairs(v));
    } else {
        print!("{}", output::json(v));
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let g = &cli.global;
    match cli.command {
        Command::Analyze { twist, seifert } => {
            let table = load_table(g)?;
            let v = match (&twist, &seifert) {
                (Some(n), _) => report::analyze(&Subject::Twist(*n), &twist::seifert_matrix(*n).map_err(classify)?, g.cmax, &table),
                (None, Some(path)) => {
                    let bytes = read(path)?;
                    let text = std::str::from_utf8(&bytes).map_err(|_| Failure::new(2, "Seifert file is not UTF-8"))?;
                    let m = SeifertMatrix::from_json(text).map_err(classify)?;
                    let shown = path.display().to_string();
                    report::analyze(&Subject::Seifert { path: &shown, bytes: &bytes }, &m, g.cmax, &table)
                }
                (None, None) => unreachable!("clap requires one input"),
            }
            .map_err(classify)?;
            emit(g, &v);
            Ok(0)
        }
        Command::Family { kmax } => {
            if kmax < 1 {
                return Err(Failure::new(2, "--kmax must be at least 1"));
            }
            let v = report::family(kmax).map_err(classify)?;
            if g.tsv {
                print!("{}", output::tsv_table(v["rows"].as_array().expect("rows")));
            } else {
                print!("{}", output::json(&v));
            }
            Ok(0)
        }
        Command::Certify { family, out } => {
            let table = load_table(g)?;
            let spec = FamilySpec::from_json(&read_text(&family)?).map_err(classify)?;
            let base = family.parent().map(Path::to_path_buf).unwrap_or_default();
            let members = spec
                .resolve(&base, &table, g.cmax, |p| {
                    let text = fs::read_to_string(p).map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display())))?;
                    SeifertMatrix::from_json(&text)
                })
                .map_err(classify)?;
            match certify_independence(&members, g.cmax) {
                Ok(cert) => {
                    let text = cert.to_canonical_json();
                    match out {
                        Some(path) => {
                            fs::write(&path, &text).map_err(|e| Failure::new(2, format!("cannot write {}: {e}", path.display())))?;
                            emit(
                                g,
                                &json!({
                                    "status": "certified",
                                    "certificate": path.display().to_string(),
                                    "certificate_sha256": sha256_hex(text.as_bytes()),
                                    "hypotheses_sha256": cert.hypotheses_sha256,
                                    "members": cert.family.len(),
                                    "c_max": cert.c_max,
                                }),
                            );
                        }
                        None => print!("{text}"),
                    }
                    Ok(0)
                }
                Err(f) => {
                    eprintln!("{f}");
                    emit(g, &json!({"status": "failed", "kind": f.kind(), "message": f.to_string()}));
                    Ok(1)
                }
            }
        }
        Command::Verify { certificate } => {
            let bytes = read(&certificate)?;
            let text = String::from_utf8(bytes).map_err(|_| Failure::new(2, "certificate is not UTF-8"))?;
            let valid = verify_certificate(&text).map_err(|e| Failure::new(2, e.to_string()))?;
            emit(g, &json!({"valid": valid, "input_sha256": sha256_hex(text.as_bytes())}));
            Ok(if valid { 0 } else { 1 })
        }
        Command::Blanchfield { twist, complexity, localize } => {
            let p = localize
                .map(|s| s.parse::<LaurentPoly>())
                .transpose()
                .map_err(classify)?;
            let v = report::blanchfield(twist, complexity, p.as_ref()).map_err(classify)?;
            emit(g, &v);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
