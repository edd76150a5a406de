// SPDX-License-Identifier: Apache-2.0

//! The `drg-distort` command line.
//!
//! [`run`] does all the work and returns what to print, so the binary is a
//! thin shell and tests can call it in-process.
//!
//! Exit codes: 0 success; 2 usage, parse or I/O error; 3 invalid or
//! infeasible parameters; 4 numerical failure; 5 instance above the vertex
//! cap; 6 graph not distance-regular. Nothing is written to standard output
//! on a nonzero exit.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::certify::{
    class_certificate_ratio, class_matrix_eigenvalues, class_row_sum, srg_bound, srg_bound_checked, theorem1_bound,
    BoundResult, ClassMatrix, DEFAULT_TOL,
};
use crate::error::Error;
use crate::exact_lp::{faithful_lp, FaithfulResult};
use crate::format::to_json_string;
use crate::graph_lab::{
    all_pairs_bfs, build_hamming, build_johnson, build_named, coords_from_gram, embed_hamming, embed_johnson,
    expand_class_matrix, extract_intersection_array, load_edge_list, matrix_certificate_ratio, measure_distortion,
    measure_distortion_gram, psd_min_eig, write_coordinates_csv, Coordinates, DistortionReport, ExplicitGraph,
    JACOBI_MAX_DIM, VERTEX_CAP,
};
use crate::scheme::{hamming_array, johnson_array, srg_array, IntersectionArray};
use crate::spectral::{full_spectrum, Spectrum};

/// Version of the JSON layout emitted by every subcommand.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "drg-distort", version, about = "Least Euclidean distortion of distance-regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectral lower bound on the squared distortion
    Bound {
        #[command(flatten)]
        source: ArraySource,
        #[command(flatten)]
        common: Common,
    },
    /// Exact squared distortion from the faithful-embedding LP
    Exact {
        #[command(flatten)]
        source: ArraySource,
        #[command(flatten)]
        common: Common,
    },
    /// Coordinates of the optimal Hamming or Johnson embedding
    Embed {
        #[command(flatten)]
        source: ArraySource,
        #[command(flatten)]
        common: Common,
    },
    /// Cross-check bound, LP, embedding and certificate on an explicit graph
    Verify {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        common: Common,
    },
    /// The certificate matrix behind the lower bound
    Certify {
        #[command(flatten)]
        source: ArraySource,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Hamming,
    Johnson,
    Srg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct FamilyParams {
    /// Alphabet size of H(q, n)
    #[arg(long)]
    q: Option<u64>,
    /// Word length of H(q, n) or subset size of J(v, n)
    #[arg(long)]
    n: Option<u64>,
    /// Ground set size of J(v, n)
    #[arg(long)]
    v: Option<u64>,
    /// Vertex count of SRG(nu, k, lambda, mu)
    #[arg(long)]
    nu: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    lambda: Option<u64>,
    #[arg(long)]
    mu: Option<u64>,
}

#[derive(Debug, Args)]
struct ArraySource {
    #[arg(long, value_enum, required_unless_present = "array", conflicts_with = "array")]
    family: Option<Family>,
    /// Intersection array such as `3,2;1,1`
    #[arg(long)]
    array: Option<String>,
    #[command(flatten)]
    params: FamilyParams,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "graph_source")]
struct GraphSource {
    /// Catalog graph: petersen, c5, k33, clebsch, paley<p>
    #[arg(long, group = "graph_source")]
    named: Option<String>,
    /// Edge-list file
    #[arg(long, group = "graph_source")]
    graph: Option<PathBuf>,
    /// Build H(q, n) or J(v, n) explicitly
    #[arg(long, value_enum, group = "graph_source")]
    family: Option<Family>,
    #[command(flatten)]
    params: FamilyParams,
}

#[derive(Debug, Args)]
struct Common {
    /// Tolerance for PSD, row-sum and agreement checks
    #[arg(long, env = "DRG_DISTORT_TOL", default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
    tol: f64,
    /// Output format; csv is only available for `embed`
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if t.is_finite() && t > 0.0 {
        Ok(t)
    } else {
        Err(format!("tolerance must be positive and finite, got {s}"))
    }
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::MalformedArray(_)
        | Error::Io { .. }
        | Error::Disconnected
        | Error::SelfLoop(_)
        | Error::UnknownName(_) => 2,
        Error::InvalidParameters(_)
        | Error::InfeasibleParameters(_)
        | Error::NonIntegralDegree { .. }
        | Error::NegativeIntersectionNumber { .. }
        | Error::Overflow(_) => 3,
        Error::TooLarge { .. } => 5,
        Error::NotDistanceRegular { .. } => 6,
        Error::NumericalFailure(_)
        | Error::NoConstraint
        | Error::NotPsd { .. }
        | Error::RowSumsNonzero { .. }
        | Error::ZeroDenominator
        | Error::Infeasible
        | Error::Unbounded
        | Error::PivotTolerance(_)
        | Error::DegenerateEmbedding
        | Error::DimensionMismatch { .. }
        | Error::NoConvergence(_) => 4,
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut notes = Vec::new();
    let result = dispatch(cli.command, &mut notes);
    let mut stderr: String = notes.iter().map(|n| format!("{n}\n")).collect();
    match result {
        Ok(Emit { text, out }) => match out {
            None => Outcome {
                code: 0,
                stdout: text,
                stderr,
            },
            Some(path) => match std::fs::write(&path, text) {
                Ok(()) => Outcome {
                    code: 0,
                    stdout: String::new(),
                    stderr,
                },
                Err(e) => {
                    stderr.push_str(&format!("error: cannot write {}: {e}\n", path.display()));
                    Outcome {
                        code: 2,
                        stdout: String::new(),
                        stderr,
                    }
                }
            },
        },
        Err(Failure::Usage(msg)) => {
            stderr.push_str(&format!("error: {msg}\n"));
            Outcome {
                code: 2,
                stdout: String::new(),
                stderr,
            }
        }
        Err(Failure::Lib(e)) => {
            stderr.push_str(&format!("error: {e}\n"));
            if let Error::NotDistanceRegular { x, y, distance, .. } = &e {
                stderr.push_str(&format!("witness: x={x} y={y} distance={distance}\n"));
            }
            Outcome {
                code: exit_code(&e),
                stdout: String::new(),
                stderr,
            }
        }
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

struct Emit {
    text: String,
    out: Option<PathBuf>,
}

type Run<T> = std::result::Result<T, Failure>;

fn dispatch(cmd: Command, notes: &mut Vec<String>) -> Run<Emit> {
    match cmd {
        Command::Bound { source, common } => {
            json_only(&common)?;
            emit(bound_report(&source)?, common.out)
        }
        Command::Exact { source, common } => {
            json_only(&common)?;
            emit(exact_report(&source)?, common.out)
        }
        Command::Certify { source, common } => {
            json_only(&common)?;
            emit(certify_report(&source, common.tol, notes)?, common.out)
        }
        Command::Embed { source, common } => embed(&source, &common, notes),
        Command::Verify { source, common } => {
            json_only(&common)?;
            emit(verify_report(&source, common.tol, notes)?, common.out)
        }
    }
}

fn json_only(common: &Common) -> Run<()> {
    match common.format {
        Some(Format::Csv) => Err(Failure::Usage("csv output is only available for `embed`".into())),
        _ => Ok(()),
    }
}

fn emit(text: String, out: Option<PathBuf>) -> Run<Emit> {
    Ok(Emit { text, out })
}

fn need(value: Option<u64>, flag: &str, family: &str) -> Run<u64> {
    value.ok_or_else(|| Failure::Usage(format!("--family {family} requires --{flag}")))
}

fn resolve_array(source: &ArraySource) -> Run<IntersectionArray> {
    if let Some(text) = &source.array {
        return Ok(text.parse()?);
    }
    let p = &source.params;
    let array = match source.family.expect("clap requires --family or --array") {
        Family::Hamming => hamming_array(need(p.q, "q", "hamming")?, need(p.n, "n", "hamming")?)?,
        Family::Johnson => johnson_array(need(p.v, "v", "johnson")?, need(p.n, "n", "johnson")?)?,
        Family::Srg => srg_array(
            need(p.nu, "nu", "srg")?,
            need(p.k, "k", "srg")?,
            need(p.lambda, "lambda", "srg")?,
            need(p.mu, "mu", "srg")?,
        )?,
    };
    Ok(array)
}

/// Closed-form squared bound when the array has diameter 2.
fn srg_closed_form(sp: &Spectrum, source: Option<&ArraySource>) -> Run<Option<f64>> {
    if let Some(ArraySource {
        family: Some(Family::Srg),
        params: p,
        ..
    }) = source
    {
        let value = srg_bound_checked(
            need(p.nu, "nu", "srg")?,
            need(p.k, "k", "srg")?,
            need(p.lambda, "lambda", "srg")?,
            need(p.mu, "mu", "srg")?,
        )?;
        return Ok(Some(value));
    }
    if sp.diameter() != 2 {
        return Ok(None);
    }
    let ia = sp.array();
    let params = sp.params();
    Ok(Some(srg_bound(params.n_vertices, ia.valency(), params.a[1], ia.c()[1])?))
}

#[derive(Serialize)]
struct BoundReport<'a> {
    schema_version: u32,
    command: &'static str,
    array: String,
    diameter: usize,
    n_vertices: u64,
    #[serde(flatten)]
    bound: BoundResult,
    srg_bound_sq: Option<f64>,
    spectrum: &'a Spectrum,
}

fn bound_report(source: &ArraySource) -> Run<String> {
    let sp = full_spectrum(&resolve_array(source)?)?;
    let report = BoundReport {
        schema_version: SCHEMA_VERSION,
        command: "bound",
        array: sp.array().to_string(),
        diameter: sp.diameter(),
        n_vertices: sp.n_vertices(),
        bound: theorem1_bound(&sp)?,
        srg_bound_sq: srg_closed_form(&sp, Some(source))?,
        spectrum: &sp,
    };
    to_json(&report)
}

#[derive(Serialize)]
struct ExactReport {
    schema_version: u32,
    command: &'static str,
    array: String,
    diameter: usize,
    n_vertices: u64,
    #[serde(flatten)]
    exact: FaithfulResult,
    c2: f64,
    bound_sq: f64,
    gap_to_bound: f64,
}

fn exact_report(source: &ArraySource) -> Run<String> {
    let sp = full_spectrum(&resolve_array(source)?)?;
    let bound = theorem1_bound(&sp)?;
    let exact = faithful_lp(&sp)?;
    let report = ExactReport {
        schema_version: SCHEMA_VERSION,
        command: "exact",
        array: sp.array().to_string(),
        diameter: sp.diameter(),
        n_vertices: sp.n_vertices(),
        c2: exact.c2(),
        gap_to_bound: exact.c2_sq - bound.bound_sq,
        bound_sq: bound.bound_sq,
        exact,
    };
    to_json(&report)
}

#[derive(Serialize)]
struct CertifyReport {
    schema_version: u32,
    command: &'static str,
    array: String,
    diameter: usize,
    alpha: f64,
    coef: Vec<f64>,
    /// Eigenvalue on eigenspace `j`, in the order of `theta`.
    eigenvalues: Vec<f64>,
    theta: Vec<f64>,
    multiplicities: Vec<f64>,
    min_eigenvalue: f64,
    psd: bool,
    row_sum: f64,
    row_sums_vanish: bool,
    ratio: Option<f64>,
    bound_sq: f64,
    tol: f64,
}

fn certify_report(source: &ArraySource, tol: f64, notes: &mut Vec<String>) -> Run<String> {
    let sp = full_spectrum(&resolve_array(source)?)?;
    let bound = theorem1_bound(&sp)?;
    let cm = ClassMatrix::new(bound.certificate_coef.clone())?;
    let eigenvalues = class_matrix_eigenvalues(&cm, &sp)?;
    let row_sum = class_row_sum(&cm, &sp);
    let min_eigenvalue = eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    let ratio = match class_certificate_ratio(&cm, &sp, tol) {
        Ok(r) => Some(r),
        Err(Error::ZeroDenominator) => {
            notes.push("note: the certificate has no negative class, so its ratio is undefined".into());
            None
        }
        Err(e) => return Err(e.into()),
    };
    let report = CertifyReport {
        schema_version: SCHEMA_VERSION,
        command: "certify",
        array: sp.array().to_string(),
        diameter: sp.diameter(),
        alpha: bound.alpha,
        coef: cm.coef,
        eigenvalues,
        theta: sp.theta.clone(),
        multiplicities: sp.m.clone(),
        min_eigenvalue,
        psd: true,
        row_sum,
        row_sums_vanish: true,
        ratio,
        bound_sq: bound.bound_sq,
        tol,
    };
    to_json(&report)
}

#[derive(Serialize)]
struct EmbedReport<'a> {
    schema_version: u32,
    command: &'static str,
    family: String,
    n_points: usize,
    dim: usize,
    distortion: &'a DistortionReport,
    labels: &'a [String],
    coordinates: Vec<&'a [f64]>,
}

fn embed(source: &ArraySource, common: &Common, notes: &mut Vec<String>) -> Run<Emit> {
    if source.array.is_some() {
        return Err(Failure::Usage("embed needs --family hamming or --family johnson".into()));
    }
    let p = &source.params;
    let (family, graph, coords): (String, ExplicitGraph, Coordinates) = match source.family {
        Some(Family::Hamming) => {
            let (q, n) = (need(p.q, "q", "hamming")?, need(p.n, "n", "hamming")?);
            (format!("H({q},{n})"), build_hamming(q, n)?, embed_hamming(q, n)?)
        }
        Some(Family::Johnson) => {
            let (v, n) = (need(p.v, "v", "johnson")?, need(p.n, "n", "johnson")?);
            (format!("J({v},{n})"), build_johnson(v, n)?, embed_johnson(v, n)?)
        }
        _ => return Err(Failure::Usage("embed supports --family hamming and --family johnson".into())),
    };
    let dm = all_pairs_bfs(&graph);
    let report = measure_distortion(&dm, &coords)?;
    notes.push(format!(
        "{family}: {} points in dimension {}, distortion {}",
        coords.n_points(),
        coords.dim(),
        crate::format::fmt_g17(report.distortion)
    ));
    let text = match common.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut buf = Vec::new();
            write_coordinates_csv(&mut buf, &coords, graph.labels()).expect("writing to memory");
            String::from_utf8(buf).expect("CSV is UTF-8")
        }
        Format::Json => to_json(&EmbedReport {
            schema_version: SCHEMA_VERSION,
            command: "embed",
            family,
            n_points: coords.n_points(),
            dim: coords.dim(),
            distortion: &report,
            labels: graph.labels(),
            coordinates: (0..coords.n_points()).map(|x| coords.row(x)).collect(),
        })?,
    };
    Ok(Emit {
        text,
        out: common.out.clone(),
    })
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    passed: bool,
    value: f64,
    reference: f64,
}

#[derive(Serialize)]
struct CertificateSummary {
    coef: Vec<f64>,
    min_eigenvalue: f64,
    max_row_sum: f64,
    ratio_explicit: Option<f64>,
    ratio_classwise: Option<f64>,
}

#[derive(Serialize)]
struct VerifyReport {
    schema_version: u32,
    command: &'static str,
    source: String,
    n_vertices: usize,
    n_edges: usize,
    diameter: usize,
    array: String,
    bound: BoundResult,
    srg_bound_sq: Option<f64>,
    exact: FaithfulResult,
    gap_to_bound: f64,
    embedding: DistortionReport,
    embedding_rank: Option<usize>,
    certificate: CertificateSummary,
    checks: Vec<Check>,
    consistent: bool,
    tol: f64,
}

fn load_graph(source: &GraphSource) -> Run<(String, ExplicitGraph)> {
    if let Some(name) = &source.named {
        return Ok((format!("named:{name}"), build_named(name)?));
    }
    if let Some(path) = &source.graph {
        let g = load_edge_list(path)?;
        if g.n_vertices() > VERTEX_CAP {
            return Err(Error::TooLarge {
                vertices: g.n_vertices() as u128,
                cap: VERTEX_CAP,
            }
            .into());
        }
        return Ok((format!("graph:{}", path.display()), g));
    }
    let p = &source.params;
    match source.family {
        Some(Family::Hamming) => {
            let (q, n) = (need(p.q, "q", "hamming")?, need(p.n, "n", "hamming")?);
            Ok((format!("hamming:{q},{n}"), build_hamming(q, n)?))
        }
        Some(Family::Johnson) => {
            let (v, n) = (need(p.v, "v", "johnson")?, need(p.n, "n", "johnson")?);
            Ok((format!("johnson:{v},{n}"), build_johnson(v, n)?))
        }
        _ => Err(Failure::Usage(
            "verify needs --named, --graph, or --family hamming|johnson".into(),
        )),
    }
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

fn verify_report(source: &GraphSource, tol: f64, notes: &mut Vec<String>) -> Run<String> {
    let (label, graph) = load_graph(source)?;
    let dm = all_pairs_bfs(&graph);
    let ia = extract_intersection_array(&graph, &dm)?;
    let sp = full_spectrum(&ia)?;
    let bound = theorem1_bound(&sp)?;
    let srg_bound_sq = srg_closed_form(&sp, None)?;
    let exact = faithful_lp(&sp)?;

    let gram = expand_class_matrix(&ClassMatrix::new(exact.gram_class.clone())?, &dm)?;
    let embedding = measure_distortion_gram(&dm, &gram)?;
    let embedding_rank = if graph.n_vertices() <= JACOBI_MAX_DIM {
        Some(coords_from_gram(&gram)?.dim())
    } else {
        None
    };

    let cm = ClassMatrix::new(bound.certificate_coef.clone())?;
    let q = expand_class_matrix(&cm, &dm)?;
    let norm = q.norm();
    let min_eigenvalue = psd_min_eig(&q)?;
    let max_row_sum = q.row_sums().iter().fold(0.0f64, |m, s| m.max(s.abs()));
    let defined = |r: crate::error::Result<f64>| match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::ZeroDenominator) => Ok(None),
        Err(e) => Err(e),
    };
    let ratio_explicit = defined(matrix_certificate_ratio(&q, &dm, tol))?;
    let ratio_classwise = defined(class_certificate_ratio(&cm, &sp, tol))?;
    if ratio_explicit.is_none() {
        notes.push("note: the certificate has no negative class; ratio checks skipped".into());
    }

    let mut checks = vec![
        Check {
            name: "bound_at_most_exact",
            passed: bound.bound_sq <= exact.c2_sq + tol * exact.c2_sq.max(1.0),
            value: bound.bound_sq,
            reference: exact.c2_sq,
        },
        Check {
            name: "measured_distortion_matches_lp",
            passed: rel_close(embedding.distortion.powi(2), exact.c2_sq, tol),
            value: embedding.distortion.powi(2),
            reference: exact.c2_sq,
        },
        Check {
            name: "certificate_psd",
            passed: min_eigenvalue >= -tol * norm,
            value: min_eigenvalue,
            reference: -tol * norm,
        },
        Check {
            name: "certificate_row_sums_vanish",
            passed: max_row_sum <= tol * norm,
            value: max_row_sum,
            reference: tol * norm,
        },
    ];
    if let (Some(explicit), Some(classwise)) = (ratio_explicit, ratio_classwise) {
        checks.push(Check {
            name: "certificate_ratio_matches_bound",
            passed: rel_close(explicit, bound.bound_sq, tol),
            value: explicit,
            reference: bound.bound_sq,
        });
        checks.push(Check {
            name: "classwise_ratio_matches_explicit",
            passed: rel_close(classwise, explicit, tol),
            value: classwise,
            reference: explicit,
        });
    }
    if let Some(srg) = srg_bound_sq {
        checks.push(Check {
            name: "srg_closed_form_matches_bound",
            passed: rel_close(srg, bound.bound_sq, tol),
            value: srg,
            reference: bound.bound_sq,
        });
    }
    if let Some(rank) = embedding_rank {
        checks.push(Check {
            name: "embedding_rank_matches_lp",
            passed: rank as u64 == exact.embedding_dim,
            value: rank as f64,
            reference: exact.embedding_dim as f64,
        });
    }
    let consistent = checks.iter().all(|c| c.passed);
    for c in checks.iter().filter(|c| !c.passed) {
        notes.push(format!("check failed: {} ({} vs {})", c.name, c.value, c.reference));
    }

    let report = VerifyReport {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        source: label,
        n_vertices: graph.n_vertices(),
        n_edges: graph.n_edges(),
        diameter: dm.diameter(),
        array: ia.to_string(),
        gap_to_bound: exact.c2_sq - bound.bound_sq,
        bound,
        srg_bound_sq,
        exact,
        embedding,
        embedding_rank,
        certificate: CertificateSummary {
            coef: cm.coef,
            min_eigenvalue,
            max_row_sum,
            ratio_explicit,
            ratio_classwise,
        },
        checks,
        consistent,
        tol,
    };
    to_json(&report)
}

fn to_json<T: Serialize>(report: &T) -> Run<String> {
    to_json_string(report).map_err(|e| Failure::Lib(Error::NumericalFailure(e.to_string())))
}
