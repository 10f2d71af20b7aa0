//! Command-line front end: reads JSON documents, runs the exact
//! classification and certification routines, and writes JSON.
//!
//! Exit codes: `0` success, `1` malformed input, `2` a mathematical
//! precondition failed, `3` a negative verdict.

pub mod document;

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;
use spreal_core::canonical::{symplectic_transform, Policy};
use spreal_core::corpus::conjugated_build;
use spreal_core::jordan::{jordan_structure, JordanStructure};
use spreal_core::reality::{
    classify_strong, skew_reverser, strong_reverser, verify_with_structure, StrongOutcome,
};
use spreal_core::skew_hamiltonian::{is_similar_to_negative, negation_involution, NegationOutcome};
use spreal_core::structure::is_hamiltonian;
use spreal_core::{Error, Matrix};

use document::{
    structure_to_json, BlockEntry, CertificateDocument, ChecksDocument, MatrixDocument, Metadata,
    ReportDocument, SpecDocument,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "spreal", version, about = "Exact reversibility certificates for Hamiltonian matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Input JSON file; standard input when omitted.
    path: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolicyArg {
    Prop24,
    ReverserFriendly,
}

impl From<PolicyArg> for Policy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Prop24 => Policy::Prop24,
            PolicyArg::ReverserFriendly => Policy::ReverserFriendly,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Jordan structure and strong-reality verdict of a Hamiltonian matrix.
    Classify(Input),
    /// Symplectic skew-involution reversing a Hamiltonian matrix.
    SkewReverser(Input),
    /// Symplectic involution reversing a Hamiltonian matrix, if one exists.
    StrongReverser(Input),
    /// Whether a skew-Hamiltonian matrix is similar to its negative.
    ShClassify(Input),
    /// Symplectic involution negating a skew-Hamiltonian matrix, if one exists.
    ShReverser(Input),
    /// Symplectic transform onto the canonical form.
    Canonical {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "prop24")]
        policy: PolicyArg,
    },
    /// Re-derives every check of a certificate.
    Verify(Input),
    /// Canonical matrix for a spec, conjugated by a seeded symplectic matrix.
    Generate {
        /// Inline spec JSON.
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Used when the spec names no policy.
        #[arg(long, value_enum, default_value = "prop24")]
        policy: PolicyArg,
    },
}

/// Exit status and standard output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn json(code: i32, value: &impl Serialize) -> Self {
        let mut stdout = serde_json::to_string_pretty(value).expect("documents serialize");
        stdout.push('\n');
        Self { code, stdout }
    }

    fn error(code: i32, name: &str, message: impl Into<String>) -> Self {
        Self::json(code, &json!({ "error": { "code": name, "message": message.into() } }))
    }
}

/// The exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::NonSquareInput { .. }
        | Error::OddOrderInput(_)
        | Error::DimensionMismatch(_) => EXIT_MALFORMED,
        _ => EXIT_PRECONDITION,
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::error(exit_code(&e), e.code(), e.to_string())
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                },
                _ => Outcome::error(EXIT_MALFORMED, "Usage", e.to_string()),
            };
        }
    };
    dispatch(cli.command, stdin).unwrap_or_else(|o| o)
}

type Step<T> = std::result::Result<T, Outcome>;

fn read_document<T: DeserializeOwned>(input: &Input, stdin: &mut dyn Read) -> Step<T> {
    let text = match &input.path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Outcome::error(EXIT_MALFORMED, "Io", format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Outcome::error(EXIT_MALFORMED, "Io", e.to_string()))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Outcome::error(EXIT_MALFORMED, "MalformedInput", e.to_string()))
}

fn read_matrix(input: &Input, stdin: &mut dyn Read) -> Step<Matrix> {
    Ok(read_document::<MatrixDocument>(input, stdin)?.to_matrix()?)
}

/// Blocks whose multiplicity differs from that of their `λ ↦ −λ` image.
fn negation_violations(js: &JordanStructure) -> Vec<BlockEntry> {
    js.iter()
        .filter(|(b, m)| js.multiplicity(&-&b.lambda, b.size) != *m)
        .map(|(b, m)| BlockEntry::new(b, m))
        .collect()
}

fn negation_report(similar: bool, js: &JordanStructure) -> serde_json::Value {
    json!({
        "similar_to_negative": similar,
        "jordan_structure": structure_to_json(js),
        "violations": negation_violations(js),
    })
}

fn verdict_code(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Step<Outcome> {
    Ok(match command {
        Command::Classify(input) => {
            let x = read_matrix(&input, stdin)?;
            if !is_hamiltonian(&x)? {
                return Err(Error::NotHamiltonian.into());
            }
            let js = jordan_structure(&x)?;
            let report = classify_strong(&js)?;
            Outcome::json(
                verdict_code(report.verdict),
                &json!({
                    "jordan_structure": structure_to_json(&js),
                    "report": ReportDocument::from(&report),
                }),
            )
        }
        Command::SkewReverser(input) => {
            let cert = skew_reverser(&read_matrix(&input, stdin)?)?;
            Outcome::json(EXIT_OK, &CertificateDocument::new(&cert, None))
        }
        Command::StrongReverser(input) => match strong_reverser(&read_matrix(&input, stdin)?)? {
            StrongOutcome::Certified(cert) => {
                let report = ReportDocument { verdict: true, violations: Vec::new() };
                Outcome::json(EXIT_OK, &CertificateDocument::new(&cert, Some(report)))
            }
            StrongOutcome::NotStronglyReal(report) => {
                Outcome::json(EXIT_NEGATIVE, &json!({ "report": ReportDocument::from(&report) }))
            }
        },
        Command::ShClassify(input) => {
            let x = read_matrix(&input, stdin)?;
            let similar = is_similar_to_negative(&x)?;
            let js = jordan_structure(&x)?;
            Outcome::json(verdict_code(similar), &negation_report(similar, &js))
        }
        Command::ShReverser(input) => match negation_involution(&read_matrix(&input, stdin)?)? {
            NegationOutcome::Certified(cert) => Outcome::json(EXIT_OK, &CertificateDocument::new(&cert, None)),
            NegationOutcome::NotSimilarToNegative(js) => {
                Outcome::json(EXIT_NEGATIVE, &negation_report(false, &js))
            }
        },
        Command::Canonical { input, policy } => {
            let (s, spec) = symplectic_transform(&read_matrix(&input, stdin)?, policy.into())?;
            Outcome::json(
                EXIT_OK,
                &json!({
                    "transform": MatrixDocument::from_matrix(&s),
                    "spec": SpecDocument::from_spec(&spec),
                }),
            )
        }
        Command::Verify(input) => {
            let doc: CertificateDocument = read_document(&input, stdin)?;
            let subject = doc.subject.to_matrix()?;
            let reverser = doc.reverser.to_matrix()?;
            let checks = verify_with_structure(&subject, &reverser, doc.kind.into(), doc.structure.into())?;
            Outcome::json(
                verdict_code(checks.all()),
                &json!({ "valid": checks.all(), "checks": ChecksDocument::from(checks) }),
            )
        }
        Command::Generate { spec, seed, policy } => {
            let doc: SpecDocument = serde_json::from_str(&spec)
                .map_err(|e| Outcome::error(EXIT_MALFORMED, "MalformedInput", e.to_string()))?;
            let spec = doc.to_spec(policy.into())?;
            let x = conjugated_build(&spec, seed);
            let provenance = serde_json::to_string(&SpecDocument::from_spec(&spec)).expect("serializable");
            let metadata = Metadata {
                label: Some("generated".into()),
                seed: Some(seed),
                provenance: Some(provenance),
            };
            Outcome::json(EXIT_OK, &MatrixDocument::from_matrix(&x).with_metadata(metadata))
        }
    })
}
