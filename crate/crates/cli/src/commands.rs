//! Command-line surface: argument parsing, dispatch and exit codes.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use hochschild::algebra::{format_combination, hochschild_extension, is_symmetric_algebra, FrobeniusOutcome};
use hochschild::complexes::{hochschild_cohomology, hochschild_homology, hochschild_homology_with_coefficients};
use hochschild::cyclic::{cyclic_cohomology, cyclic_homology, TOTAL_COMPLEX_CONVENTION};
use hochschild::pencil::GridCertificate;
use hochschild::quiver::{relative_group_dim, relative_hochschild_cohomology, relative_hochschild_homology};
use hochschild::symmetry::{build_bimodule_iso, CriterionRegistry};
use hochschild::{tensor, Error, ExtensionProblem, Field, FieldSpec, Limits, Method, PrimeField, Rationals};

use crate::format::{write_algebra, Document, RawDocument};
use crate::report::{
    AlgebraSummary, DimRow, Evidence, MethodReport, Payload, QuiverSummary, RelativeRow, Report, WitnessReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hochsym",
    version,
    about = "Exact Hochschild and cyclic (co)homology, and symmetry of Hochschild extensions"
)]
pub struct Cli {
    /// Coefficient field: `rationals`, `q`, or a prime such as `5`; overrides the file's [field].
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Human)]
    pub emit: Emit,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Human,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Coeffs {
    #[value(name = "self")]
    Regular,
    Dual,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and validate the input.
    Validate { input: PathBuf },
    /// Hochschild homology HH_n(A, A) or HH_n(A, A*) for n <= N.
    Hh {
        input: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Coeffs::Regular)]
        coeffs: Coeffs,
    },
    /// Cyclic homology and cohomology for n <= N.
    Hc {
        input: PathBuf,
        #[arg(long)]
        max_degree: usize,
    },
    /// HH^n(A, M) with representatives; M is `dual`, `self` or a named bimodule.
    Cohomology {
        input: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value = "dual")]
        coeffs: String,
    },
    /// Write the Hochschild extension T(A, alpha) as a new input file.
    Extend {
        input: PathBuf,
        #[arg(long)]
        cocycle: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decide whether the algebra itself is symmetric.
    Symmetric { input: PathBuf },
    /// Decide whether T(A, alpha) is symmetric.
    Check {
        input: PathBuf,
        /// Defaults to the file's only cocycle, or `zero` when it has none.
        #[arg(long)]
        cocycle: Option<String>,
        /// `1`, `2`, `3`, `itagaki`, `oty` or `all`.
        #[arg(long, default_value = "all")]
        criterion: String,
    },
    /// K-relative Hochschild (co)homology of a quiver algebra next to the absolute one.
    RelativeHh {
        input: PathBuf,
        #[arg(long)]
        max_degree: usize,
    },
}

impl Command {
    fn input(&self) -> &PathBuf {
        match self {
            Command::Validate { input }
            | Command::Hh { input, .. }
            | Command::Hc { input, .. }
            | Command::Cohomology { input, .. }
            | Command::Extend { input, .. }
            | Command::Symmetric { input }
            | Command::Check { input, .. }
            | Command::RelativeHh { input, .. } => input,
        }
    }

    /// Canonical echo; the input path is reported separately.
    fn echo(&self) -> String {
        match self {
            Command::Validate { .. } => "validate".into(),
            Command::Hh { max_degree, coeffs, .. } => {
                let c = if *coeffs == Coeffs::Dual { "dual" } else { "self" };
                format!("hh --max-degree {max_degree} --coeffs {c}")
            }
            Command::Hc { max_degree, .. } => format!("hc --max-degree {max_degree}"),
            Command::Cohomology { degree, coeffs, .. } => format!("cohomology --degree {degree} --coeffs {coeffs}"),
            Command::Extend { cocycle, out, .. } => format!("extend --cocycle {cocycle} --out {}", out.display()),
            Command::Symmetric { .. } => "symmetric".into(),
            Command::Check { cocycle, criterion, .. } => match cocycle {
                Some(c) => format!("check --cocycle {c} --criterion {criterion}"),
                None => format!("check --criterion {criterion}"),
            },
            Command::RelativeHh { max_degree, .. } => format!("relative-hh --max-degree {max_degree}"),
        }
    }
}

/// What the process prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit: i32,
}

struct Failure {
    message: String,
    dump: Option<String>,
    exit: i32,
}

impl Failure {
    fn msg(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            dump: None,
            exit: EXIT_ERROR,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Disagreement(dump) => Self {
                message: "internal disagreement between equivalent criteria".into(),
                dump: Some(dump),
                exit: EXIT_DISAGREEMENT,
            },
            other => Self::msg(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    exit: EXIT_ERROR,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    exit: EXIT_OK,
                }
            };
        }
    };
    let report = execute(&cli);
    let exit = report.exit_status;
    match cli.emit {
        Emit::Machine => Outcome {
            stdout: report.to_machine(),
            stderr: String::new(),
            exit,
        },
        Emit::Human => {
            if let Payload::Error { message, dump } = &report.result {
                let mut stderr = format!("error: {message}\n");
                if let Some(d) = dump {
                    stderr.push_str(d);
                    stderr.push('\n');
                }
                Outcome {
                    stdout: String::new(),
                    stderr,
                    exit,
                }
            } else {
                Outcome {
                    stdout: report.to_human(),
                    stderr: String::new(),
                    exit,
                }
            }
        }
    }
}

/// Runs the parsed command and always produces a report.
pub fn execute(cli: &Cli) -> Report {
    let input = cli.command.input().display().to_string();
    let mut report = Report {
        command: cli.command.echo(),
        input: input.clone(),
        field: cli.field.clone().unwrap_or_default(),
        algebra: None,
        result: Payload::Error {
            message: String::new(),
            dump: None,
        },
        notes: Vec::new(),
        exit_status: EXIT_ERROR,
    };
    let result = load(cli, &mut report);
    if let Err(f) = result {
        report.result = Payload::Error {
            message: f.message,
            dump: f.dump,
        };
        report.exit_status = f.exit;
    }
    report
}

fn load(cli: &Cli, report: &mut Report) -> Result<(), Failure> {
    let path = cli.command.input();
    let text = std::fs::read_to_string(path).map_err(|e| Failure::msg(format!("cannot read {}: {e}", path.display())))?;
    let raw = RawDocument::parse(&text).map_err(|e| Failure::msg(e.to_string()))?;
    let spec = match &cli.field {
        Some(s) => FieldSpec::parse(s).map_err(|e| Failure::msg(format!("bad --field `{s}`: {e}")))?,
        None => raw.field.unwrap_or(FieldSpec::Rationals),
    };
    report.field = spec.to_string();
    match spec {
        FieldSpec::Rationals => dispatch(cli, &raw, spec, &Rationals, report),
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p).map_err(|e| Failure::msg(e.to_string()))?;
            dispatch(cli, &raw, spec, &f, report)
        }
    }
}

fn dispatch<F: Field>(cli: &Cli, raw: &RawDocument, spec: FieldSpec, f: &F, report: &mut Report) -> Result<(), Failure> {
    let doc = Document::build(raw, spec, f).map_err(|e| Failure::msg(e.to_string()))?;
    let a = &doc.algebra;
    report.algebra = Some(AlgebraSummary {
        dim: a.dim(),
        center_dim: a.center_basis().len(),
        commutator_dim: a.commutator_subspace().len(),
        basis: a.labels().to_vec(),
        unit: a.format_vector(a.unit()),
    });
    let limits = Limits::default();
    let (payload, exit) = match &cli.command {
        Command::Validate { .. } => (validate(&doc), EXIT_OK),
        Command::Hh { max_degree, coeffs, .. } => (hh(&doc, *max_degree, *coeffs, &limits)?, EXIT_OK),
        Command::Hc { max_degree, .. } => {
            report.notes.push(format!("total complex: {TOTAL_COMPLEX_CONVENTION}"));
            (hc(&doc, *max_degree, &limits)?, EXIT_OK)
        }
        Command::Cohomology { degree, coeffs, .. } => (cohomology(&doc, *degree, coeffs, &limits)?, EXIT_OK),
        Command::Extend { cocycle, out, .. } => (extend(&doc, cocycle, out, &report.input)?, EXIT_OK),
        Command::Symmetric { .. } => symmetric(&doc)?,
        Command::Check { cocycle, criterion, .. } => check(&doc, cocycle.as_deref(), criterion, &mut report.notes)?,
        Command::RelativeHh { max_degree, .. } => (relative_hh(&doc, *max_degree, &limits)?, EXIT_OK),
    };
    report.result = payload;
    report.exit_status = exit;
    Ok(())
}

fn strings<F: Field>(f: &F, v: &[F::Elem]) -> Vec<String> {
    v.iter().map(|x| f.format(x)).collect()
}

fn dual_labels(labels: &[String]) -> Vec<String> {
    labels.iter().map(|l| format!("{l}*")).collect()
}

fn cocycle_names<F: Field>(doc: &Document<F>) -> Vec<String> {
    let mut names: Vec<String> = doc.cocycles.iter().map(|(n, _)| n.clone()).collect();
    if !names.iter().any(|n| n == "zero") {
        names.push("zero".into());
    }
    names
}

fn validate<F: Field>(doc: &Document<F>) -> Payload {
    let quiver = doc.quiver.as_ref().map(|(p, _)| QuiverSummary {
        vertices: p.vertices().to_vec(),
        arrows: p
            .arrows()
            .iter()
            .map(|a| format!("{}: {} -> {}", a.name, p.vertices()[a.source], p.vertices()[a.target]))
            .collect(),
        relations: p.relations().len(),
        nilpotency: p.nilpotency(),
    });
    Payload::Validate {
        quiver,
        cocycles: cocycle_names(doc),
        bimodules: doc.bimodules.iter().map(|(n, _)| n.clone()).collect(),
    }
}

fn hh<F: Field>(doc: &Document<F>, max: usize, coeffs: Coeffs, limits: &Limits) -> Result<Payload, Failure> {
    let a = &doc.algebra;
    let dual = a.dual_bimodule();
    let mut groups = Vec::new();
    for n in 0..=max {
        let dim = match coeffs {
            Coeffs::Regular => hochschild_homology(a, n, limits)?.dim,
            Coeffs::Dual => hochschild_homology_with_coefficients(a, &dual, n, limits)?.dim,
        };
        groups.push(DimRow { degree: n, dim });
    }
    let coefficients = if coeffs == Coeffs::Dual { "A*" } else { "A" };
    Ok(Payload::Homology {
        coefficients: coefficients.into(),
        groups,
    })
}

fn hc<F: Field>(doc: &Document<F>, max: usize, limits: &Limits) -> Result<Payload, Failure> {
    let a = &doc.algebra;
    let mut homology = Vec::new();
    let mut cohomology = Vec::new();
    for n in 0..=max {
        homology.push(DimRow {
            degree: n,
            dim: cyclic_homology(a, n, limits)?,
        });
        cohomology.push(DimRow {
            degree: n,
            dim: cyclic_cohomology(a, n, limits)?,
        });
    }
    Ok(Payload::Cyclic { homology, cohomology })
}

fn cohomology<F: Field>(doc: &Document<F>, n: usize, coeffs: &str, limits: &Limits) -> Result<Payload, Failure> {
    let a = &doc.algebra;
    let (m, name) = match coeffs {
        "dual" => (a.dual_bimodule(), "A*".to_string()),
        "self" => (a.regular_bimodule(), "A".to_string()),
        other => match doc.bimodule_named(other) {
            Some(b) => (b.clone(), other.to_string()),
            None => return Err(Failure::msg(format!("unknown bimodule `{other}`"))),
        },
    };
    let group = hochschild_cohomology(a, &m, n, limits)?;
    let d = a.dim();
    let md = m.dim();
    let labels = a.labels();
    let representatives = group
        .representatives
        .iter()
        .map(|rep| {
            let mut lines = Vec::new();
            for (t, value) in rep.chunks(md.max(1)).enumerate() {
                if md == 0 || value.iter().all(|x| a.field().is_zero(x)) {
                    continue;
                }
                let args: Vec<&str> = tensor::decode(d, n, t).into_iter().map(|i| labels[i].as_str()).collect();
                lines.push(format!("phi({}) = {}", args.join(", "), m.format_vector(value)));
            }
            lines
        })
        .collect();
    Ok(Payload::Cohomology {
        coefficients: name,
        degree: n,
        dim: group.dim,
        representatives,
    })
}

fn extend<F: Field>(doc: &Document<F>, name: &str, out: &PathBuf, input: &str) -> Result<Payload, Failure> {
    let a = &doc.algebra;
    let alpha = doc
        .cocycle(name)
        .ok_or_else(|| Failure::msg(format!("unknown cocycle `{name}`")))?;
    let t = hochschild_extension(a, &a.dual_bimodule(), &alpha)?;
    let text = write_algebra(doc.spec, &t, &format!("T(A, {name}) for {input}"));
    std::fs::write(out, text).map_err(|e| Failure::msg(format!("cannot write {}: {e}", out.display())))?;
    Ok(Payload::Extend {
        cocycle: name.into(),
        out: out.display().to_string(),
        dim: t.dim(),
        basis: t.labels().to_vec(),
        unit: t.format_vector(t.unit()),
    })
}

fn evidence(space: usize, g: &GridCertificate) -> Evidence {
    Evidence {
        searched_space_dim: space,
        params: g.params,
        degree: g.degree,
        points: g.points,
        extension_degree: g.extension_degree,
        prime_points: g.prime_points.to_string(),
    }
}

fn symmetric<F: Field>(doc: &Document<F>) -> Result<(Payload, i32), Failure> {
    let f = &doc.field;
    Ok(match is_symmetric_algebra(&doc.algebra)? {
        FrobeniusOutcome::Symmetric(form) => (
            Payload::Symmetric {
                verdict: "symmetric".into(),
                form: Some(strings(f, &form.lambda)),
                evidence: None,
            },
            EXIT_OK,
        ),
        FrobeniusOutcome::NotSymmetric {
            trace_forms,
            certificate,
        } => (
            Payload::Symmetric {
                verdict: "not-symmetric".into(),
                form: None,
                evidence: Some(evidence(trace_forms.len(), &certificate)),
            },
            EXIT_NEGATIVE,
        ),
    })
}

fn default_cocycle<F: Field>(doc: &Document<F>) -> Result<String, Failure> {
    match doc.cocycles.as_slice() {
        [] => Ok("zero".into()),
        [(name, _)] => Ok(name.clone()),
        _ => Err(Failure::msg("the input has several cocycles; choose one with --cocycle")),
    }
}

fn check<F: Field>(
    doc: &Document<F>,
    cocycle: Option<&str>,
    criterion: &str,
    notes: &mut Vec<String>,
) -> Result<(Payload, i32), Failure> {
    let f = &doc.field;
    let a = &doc.algebra;
    let name = match cocycle {
        Some(c) => c.to_string(),
        None => default_cocycle(doc)?,
    };
    let alpha = doc
        .cocycle(&name)
        .ok_or_else(|| Failure::msg(format!("unknown cocycle `{name}`")))?;
    let methods = if criterion.eq_ignore_ascii_case("all") {
        Method::ALL.to_vec()
    } else {
        vec![Method::parse(criterion)?]
    };
    let problem = ExtensionProblem::new(a.clone(), alpha)?;
    let registry = CriterionRegistry::default();
    let decision = registry.decide(&problem, &methods)?;
    let labels = a.labels();
    let duals = dual_labels(labels);
    let mut verdicts = Vec::new();
    for cert in &decision.certificates {
        let witness = match &cert.witness {
            Some(w) => {
                let iso = build_bimodule_iso(&problem, w)?;
                let rank = iso.rank();
                if rank != 2 * a.dim() {
                    return Err(Error::Disagreement(format!(
                        "{} witness gives a bimodule map of rank {rank} < {}",
                        cert.method,
                        2 * a.dim()
                    ))
                    .into());
                }
                Some(WitnessReport {
                    c: strings(f, &w.c),
                    h: strings(f, &w.h),
                    c_display: format_combination(f, labels, &w.c),
                    h_display: format_combination(f, &duals, &w.h),
                    iso_rank: rank,
                })
            }
            None => None,
        };
        verdicts.push(MethodReport {
            method: cert.method.name().into(),
            description: registry.get(cert.method)?.description().into(),
            verdict: cert.verdict.as_str().into(),
            complete: cert.method.is_complete(),
            witness,
            form: cert.form.as_ref().map(|l| strings(f, l)),
            evidence: cert.grid.as_ref().map(|g| evidence(cert.solution_space.len(), g)),
            failing_pair: cert.failing_pair.map(|(x, y)| (labels[x].clone(), labels[y].clone())),
        });
    }
    if verdicts.iter().any(|m| m.verdict == "not-symmetric" && m.evidence.is_none()) {
        notes.push("not-symmetric without grid evidence: the searched space of central elements is empty".into());
    }
    let exit = if decision.has_negative() { EXIT_NEGATIVE } else { EXIT_OK };
    Ok((
        Payload::Check {
            cocycle: name,
            consensus: decision.consensus().map(|v| v.as_str().to_string()),
            verdicts,
        },
        exit,
    ))
}

fn relative_hh<F: Field>(doc: &Document<F>, max: usize, limits: &Limits) -> Result<Payload, Failure> {
    let Some((p, qa)) = &doc.quiver else {
        return Err(Failure::msg("relative-hh needs a [quiver] input"));
    };
    let a = &qa.algebra;
    let dual = a.dual_bimodule();
    let mut rows = Vec::new();
    for n in 0..=max {
        let row = RelativeRow {
            degree: n,
            relative_homology: relative_hochschild_homology(qa, n, limits)?,
            absolute_homology: hochschild_homology(a, n, limits)?.dim,
            relative_cohomology: relative_hochschild_cohomology(qa, n, limits)?,
            absolute_cohomology: hochschild_cohomology(a, &dual, n, limits)?.dim,
            relative_group_size: relative_group_dim(qa, n).to_string(),
            absolute_group_size: (a.dim() as u128).pow(n as u32 + 1).to_string(),
        };
        rows.push(row);
    }
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| r.relative_homology != r.absolute_homology || r.relative_cohomology != r.absolute_cohomology)
        .map(|r| {
            format!(
                "degree {}: HH_n relative {} absolute {}; HH^n(A, A*) relative {} absolute {}",
                r.degree, r.relative_homology, r.absolute_homology, r.relative_cohomology, r.absolute_cohomology
            )
        })
        .collect();
    if !bad.is_empty() {
        return Err(Error::Disagreement(bad.join("\n")).into());
    }
    Ok(Payload::RelativeHh {
        nilpotency: p.nilpotency(),
        rows,
    })
}
