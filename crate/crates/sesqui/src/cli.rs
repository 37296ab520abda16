//! Command implementations behind the `sesqui` binary.
//!
//! Exit codes: 0 success or confirmed, 1 a false predicate or failed
//! hypothesis, 2 a search cap was hit, 3 an I/O, parse or usage error, and
//! 4 a theorem check whose hypotheses all hold but whose sign rule fails.

use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sesqui_core::generators::{generate, random_schedule, shelling_order_of, GeneratorSpec, Lcg};
use sesqui_core::invariants::{f_vector, h_vector, is_flag, kappa, minimal_non_faces, DEFAULT_NON_FACE_CAP};
use sesqui_core::iso::find_isomorphism;
use sesqui_core::pipeline::{check_theorem, CertificateSource, Outcome, ScheduleChoice};
use sesqui_core::search::{
    certificate_from_shelling_order, classify_topology, promote_to_sesquiconstructible, verify_certificate, Kind,
    SearchCaps, Searcher, TopologyVerdict,
};
use sesqui_core::subdivision::{apex_label, barycentric_subdivision, odd_iterated_subdivide, stellar_subdivide};
use sesqui_core::{Error, Face, SimplicialComplex};

use crate::formats::{self, print_certificate, print_scx, read_certificate, read_scx, write_file};
use crate::render::{dyadic_json, dyadic_text, f_vector_json, face_json, report_json, report_text, topology_json};
use crate::FileError;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_CAP: u8 = 2;
pub const EXIT_INPUT: u8 = 3;
pub const EXIT_VIOLATED: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "sesqui", version, about = "Simplicial complexes, stellar subdivisions and decomposition certificates")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Facet cap for every structure search (default: 20 shellable, 14 otherwise).
    #[arg(long, global = true)]
    pub cap_facets: Option<usize>,
    /// Seed for randomized generators and schedules.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List faces, optionally of one dimension.
    Faces {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        dim: Option<isize>,
    },
    /// Print the boundary complex.
    Boundary { file: PathBuf },
    /// Stellar subdivision at one face, or odd iterated along a schedule.
    #[command(group(ArgGroup::new("how").required(true).args(["face", "schedule"])))]
    Subdivide {
        file: PathBuf,
        /// Vertex tokens of the face, e.g. "a b".
        #[arg(long)]
        face: Option<String>,
        #[arg(long)]
        schedule: Option<PathBuf>,
    },
    /// Print the barycentric subdivision.
    Barycentric { file: PathBuf },
    /// f-vector (f_{-1}, ..., f_{d-1}).
    Fvec { file: PathBuf },
    /// h-vector (h_0, ..., h_d).
    Hvec { file: PathBuf },
    /// Charney-Davis quantity, exact with a decimal annotation.
    Kappa { file: PathBuf },
    /// Flagness, listing minimal non-faces with three or more vertices.
    Flag { file: PathBuf },
    /// Search for a decomposition certificate.
    Check {
        file: PathBuf,
        #[arg(long)]
        kind: Kind,
        /// Write the certificate here.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Replay a certificate against a complex.
    Verify {
        file: PathBuf,
        cert: PathBuf,
        /// Override the kind named in the certificate file.
        #[arg(long)]
        kind: Option<Kind>,
    },
    /// Ball/sphere classification of a constructible complex.
    Classify {
        file: PathBuf,
        /// Constructibility certificate; searched for when absent.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Generate a corpus complex, e.g. `stacked-sphere:3:10`.
    Gen {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write a shelling certificate here.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Find a vertex bijection carrying one complex onto another.
    Iso { a: PathBuf, b: PathBuf },
    /// End-to-end check of the sign theorem.
    #[command(group(ArgGroup::new("sched").required(true).args(["schedule", "barycentric", "random_schedule"])))]
    Theorem {
        file: PathBuf,
        #[arg(long)]
        schedule: Option<PathBuf>,
        #[arg(long)]
        barycentric: bool,
        /// Random valid schedule drawn with `--seed`.
        #[arg(long)]
        random_schedule: bool,
        /// Use this certificate instead of searching. Shelling certificates
        /// are promoted to sesquiconstructible ones first.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    File(#[from] FileError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::File(_) | CliError::Usage(_) => EXIT_INPUT,
            CliError::Core(Error::SearchCapExceeded(_)) => EXIT_CAP,
            CliError::Core(Error::InvalidLabel(_) | Error::InvalidParameters(_)) => EXIT_INPUT,
            CliError::Core(_) => EXIT_NEGATIVE,
        }
    }
}

/// What a command prints, in both formats, and its exit code.
pub struct Response {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

impl Response {
    fn ok(text: String, json: Value) -> Self {
        Response { text, json, code: EXIT_OK }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
        }
    }
}

fn caps(cli_cap: Option<usize>) -> SearchCaps {
    cli_cap.map_or_else(SearchCaps::default, SearchCaps::uniform)
}

fn facets_json(c: &SimplicialComplex) -> Value {
    json!(c.facets().iter().map(face_json).collect::<Vec<_>>())
}

fn complex_response(c: &SimplicialComplex) -> Response {
    Response::ok(print_scx(c), json!({ "facets": facets_json(c) }))
}

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
fn bigint_json(x: &impl ToString) -> Value {
    let s = x.to_string();
    s.parse::<i64>().map_or_else(|_| json!(s), |n| json!(n))
}

pub fn run(cli: &Cli) -> Result<Response, CliError> {
    match &cli.command {
        Command::Faces { file, dim } => {
            let c = read_scx(file)?;
            let faces: Vec<Face> = match dim {
                Some(i) => c.faces_of_dim(*i),
                None => c.all_faces(),
            };
            Ok(Response::ok(formats::print_faces(&faces), json!({ "faces": faces.iter().map(face_json).collect::<Vec<_>>() })))
        }
        Command::Boundary { file } => Ok(complex_response(&read_scx(file)?.boundary()?)),
        Command::Subdivide { file, face, schedule } => {
            let c = read_scx(file)?;
            let out = match (face, schedule) {
                (Some(tokens), _) => {
                    let f = Face::parse(tokens.split_whitespace())?;
                    stellar_subdivide(&c, &f, &apex_label(&f))?
                }
                (None, Some(path)) => odd_iterated_subdivide(&c, &formats::read_schedule(path)?)?,
                (None, None) => unreachable!("clap requires one of --face and --schedule"),
            };
            Ok(complex_response(&out))
        }
        Command::Barycentric { file } => Ok(complex_response(&barycentric_subdivision(&read_scx(file)?)?)),
        Command::Fvec { file } => {
            let f = f_vector(&read_scx(file)?)?;
            Ok(Response::ok(format!("{f}\n"), json!({ "f_vector": f_vector_json(&f) })))
        }
        Command::Hvec { file } => {
            let h = h_vector(&read_scx(file)?)?;
            let text = h.entries().iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            Ok(Response::ok(
                format!("{text}\n"),
                json!({ "h_vector": h.entries().iter().map(bigint_json).collect::<Vec<_>>() }),
            ))
        }
        Command::Kappa { file } => {
            let k = kappa(&read_scx(file)?)?;
            Ok(Response::ok(format!("{}\n", dyadic_text(&k)), json!({ "kappa": dyadic_json(&k) })))
        }
        Command::Flag { file } => {
            let c = read_scx(file)?;
            let flag = is_flag(&c)?;
            let witnesses: Option<Vec<Face>> = match minimal_non_faces(&c, DEFAULT_NON_FACE_CAP) {
                Ok(all) => Some(all.into_iter().filter(|f| f.len() >= 3).collect()),
                Err(Error::Overflow { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let mut text = format!("flag: {}\n", if flag { "yes" } else { "no" });
            for w in witnesses.iter().flatten() {
                text.push_str(&format!("minimal non-face: {w}\n"));
            }
            Ok(Response {
                text,
                json: json!({
                    "flag": flag,
                    "minimal_non_faces": witnesses.map(|w| w.iter().map(face_json).collect::<Vec<_>>()),
                }),
                code: if flag { EXIT_OK } else { EXIT_NEGATIVE },
            })
        }
        Command::Check { file, kind, cert_out } => {
            let c = read_scx(file)?;
            let caps = caps(cli.cap_facets);
            match Searcher::new(caps).check(*kind, &c)? {
                Some(cert) => {
                    let body = print_certificate(*kind, &cert);
                    if let Some(path) = cert_out {
                        write_file(path, &body)?;
                    }
                    Ok(Response::ok(
                        format!("{kind}: yes\n{body}"),
                        json!({ "kind": kind.name(), "holds": true, "certificate": body, "nodes": cert.node_count() }),
                    ))
                }
                None => Ok(Response {
                    text: format!("{kind}: no (exhaustive within caps)\n"),
                    json: json!({ "kind": kind.name(), "holds": false, "exhaustive_within_caps": true }),
                    code: EXIT_NEGATIVE,
                }),
            }
        }
        Command::Verify { file, cert, kind } => {
            let c = read_scx(file)?;
            let (file_kind, cert) = read_certificate(cert)?;
            let kind = kind.unwrap_or(file_kind);
            Ok(match verify_certificate(&c, kind, &cert) {
                Ok(()) => Response::ok(format!("{kind}: certificate verified\n"), json!({ "kind": kind.name(), "ok": true })),
                Err(v) => Response {
                    text: format!("{kind}: certificate rejected at {v}\n"),
                    json: json!({ "kind": kind.name(), "ok": false, "violation": v.to_string() }),
                    code: EXIT_NEGATIVE,
                },
            })
        }
        Command::Classify { file, cert } => {
            let c = read_scx(file)?;
            let cert = match cert {
                Some(path) => Some(read_certificate(path)?.1),
                None => Searcher::new(caps(cli.cap_facets)).check(Kind::Constructible, &c)?,
            };
            let verdict = match &cert {
                Some(cert) => classify_topology(&c, cert)?,
                None => TopologyVerdict::Unknown {
                    reason: "not constructible (exhaustive within caps)".to_string(),
                },
            };
            Ok(Response {
                text: format!("{}: {}\n", verdict.name(), verdict.reason()),
                json: topology_json(&verdict),
                code: if verdict.is_ball_or_sphere() { EXIT_OK } else { EXIT_NEGATIVE },
            })
        }
        Command::Gen { spec, output, cert_out } => {
            let mut spec: GeneratorSpec = spec.parse()?;
            if let Some(seed) = cli.seed {
                spec = spec.with_seed(seed);
            }
            let c = generate(&spec)?;
            if let Some(path) = cert_out {
                let cert = certificate_from_shelling_order(&c, &shelling_order_of(&spec)?)?;
                write_file(path, &print_certificate(Kind::Shellable, &cert))?;
            }
            let scx = format!("# {spec}\n{}", print_scx(&c));
            let text = match output {
                Some(path) => {
                    write_file(path, &scx)?;
                    String::new()
                }
                None => scx,
            };
            Ok(Response::ok(text, json!({ "spec": spec.to_string(), "facets": facets_json(&c) })))
        }
        Command::Iso { a, b } => {
            let (a, b) = (read_scx(a)?, read_scx(b)?);
            Ok(match find_isomorphism(&a, &b) {
                Some(map) => {
                    let text: String = map.iter().map(|(x, y)| format!("{x} -> {y}\n")).collect();
                    let pairs: serde_json::Map<String, Value> =
                        map.iter().map(|(x, y)| (x.to_string(), json!(y.as_str()))).collect();
                    Response::ok(format!("isomorphic\n{text}"), json!({ "isomorphic": true, "map": pairs }))
                }
                None => Response {
                    text: "not isomorphic\n".to_string(),
                    json: json!({ "isomorphic": false }),
                    code: EXIT_NEGATIVE,
                },
            })
        }
        Command::Theorem { file, schedule, barycentric: _, random_schedule: random, cert } => {
            let c = read_scx(file)?;
            let choice = match (schedule, random) {
                (Some(path), _) => ScheduleChoice::Explicit(formats::read_schedule(path)?),
                (None, true) => ScheduleChoice::Explicit(random_schedule(&c, &mut Lcg::new(cli.seed.unwrap_or(0)))),
                (None, false) => ScheduleChoice::Barycentric,
            };
            let source = match cert {
                Some(path) => CertificateSource::Given(given_certificate(&c, path)?),
                None => CertificateSource::Search(caps(cli.cap_facets)),
            };
            let report = check_theorem(&c, &choice, &source)?;
            let code = match report.outcome {
                Outcome::Confirmed => EXIT_OK,
                Outcome::HypothesisFailed { .. } => EXIT_NEGATIVE,
                Outcome::NotEstablished { .. } => EXIT_CAP,
                Outcome::Violated => EXIT_VIOLATED,
            };
            Ok(Response { text: report_text(&report), json: report_json(&report), code })
        }
    }
}

/// Reads a certificate for the theorem check, promoting a shelling
/// certificate that verifies.
fn given_certificate(
    c: &SimplicialComplex,
    path: &Path,
) -> Result<sesqui_core::search::DecompositionCertificate, CliError> {
    let (kind, cert) = read_certificate(path)?;
    if kind == Kind::Shellable && verify_certificate(c, Kind::Shellable, &cert).is_ok() {
        return Ok(promote_to_sesquiconstructible(c, &cert)?);
    }
    Ok(cert)
}

/// Parses arguments, runs the command and prints the result. Returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut impl std::io::Write, stderr: &mut impl std::io::Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(response) => {
            let _ = write!(stdout, "{}", response.render(cli.format));
            response.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
