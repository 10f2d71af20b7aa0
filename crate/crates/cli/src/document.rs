//! JSON documents exchanged on the command line.
//!
//! Scalars are written as `[re, im]` pairs of rational strings so that every
//! document is bit-exact.

use serde::{Deserialize, Serialize};
use spreal_core::canonical::{CanonicalBlock, CanonicalSpec, Policy};
use spreal_core::field::{format_rational, parse_rational};
use spreal_core::jordan::{JordanBlock, JordanStructure};
use spreal_core::reality::{Checks, ReverserCertificate, ReverserKind, StrongRealityReport};
use spreal_core::structure::Structure;
use spreal_core::{Error, GaussianRational, Matrix, Result};

pub type Scalar = [String; 2];

pub fn scalar_to_json(z: &GaussianRational) -> Scalar {
    [format_rational(z.re()), format_rational(z.im())]
}

pub fn scalar_from_json(s: &Scalar) -> Result<GaussianRational> {
    Ok(GaussianRational::new(parse_rational(&s[0])?, parse_rational(&s[1])?))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub order: usize,
    pub entries: Vec<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &Matrix) -> Self {
        assert!(m.is_square(), "documents hold square matrices");
        Self {
            order: m.rows(),
            entries: m
                .to_rows()
                .iter()
                .map(|row| row.iter().map(scalar_to_json).collect())
                .collect(),
            metadata: None,
        }
    }

    pub fn with_metadata(mut self, metadata: Metadata) -> Self {
        self.metadata = Some(metadata);
        self
    }

    /// Parses the entries, rejecting ragged or mis-sized arrays.
    pub fn to_matrix(&self) -> Result<Matrix> {
        let n = self.order;
        if self.entries.len() != n || self.entries.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(format!("entries do not form a {n}x{n} array")));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(scalar_from_json).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if n == 0 {
            return Err(Error::Parse("empty matrix".into()));
        }
        Ok(Matrix::from_rows(rows))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockEntry {
    pub lambda: Scalar,
    pub size: usize,
    pub multiplicity: usize,
}

impl BlockEntry {
    pub fn new(block: &JordanBlock, multiplicity: usize) -> Self {
        Self {
            lambda: scalar_to_json(&block.lambda),
            size: block.size,
            multiplicity,
        }
    }
}

pub fn structure_to_json(js: &JordanStructure) -> Vec<BlockEntry> {
    js.iter().map(|(b, m)| BlockEntry::new(b, m)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub verdict: bool,
    pub violations: Vec<BlockEntry>,
}

impl From<&StrongRealityReport> for ReportDocument {
    fn from(r: &StrongRealityReport) -> Self {
        Self {
            verdict: r.verdict,
            violations: r.violations.iter().map(|(b, m)| BlockEntry::new(b, *m)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KindDocument {
    Involution,
    SkewInvolution,
}

impl From<ReverserKind> for KindDocument {
    fn from(k: ReverserKind) -> Self {
        match k {
            ReverserKind::Involution => Self::Involution,
            ReverserKind::SkewInvolution => Self::SkewInvolution,
        }
    }
}

impl From<KindDocument> for ReverserKind {
    fn from(k: KindDocument) -> Self {
        match k {
            KindDocument::Involution => Self::Involution,
            KindDocument::SkewInvolution => Self::SkewInvolution,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureDocument {
    #[default]
    Hamiltonian,
    SkewHamiltonian,
}

impl From<Structure> for StructureDocument {
    fn from(s: Structure) -> Self {
        match s {
            Structure::Hamiltonian => Self::Hamiltonian,
            Structure::SkewHamiltonian => Self::SkewHamiltonian,
        }
    }
}

impl From<StructureDocument> for Structure {
    fn from(s: StructureDocument) -> Self {
        match s {
            StructureDocument::Hamiltonian => Self::Hamiltonian,
            StructureDocument::SkewHamiltonian => Self::SkewHamiltonian,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChecksDocument {
    pub symplectic: bool,
    pub order: bool,
    pub reversal: bool,
    pub subject: bool,
}

impl From<Checks> for ChecksDocument {
    fn from(c: Checks) -> Self {
        Self {
            symplectic: c.symplectic,
            order: c.order,
            reversal: c.reversal,
            subject: c.subject,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub subject: MatrixDocument,
    pub reverser: MatrixDocument,
    pub kind: KindDocument,
    #[serde(default)]
    pub structure: StructureDocument,
    pub checks: ChecksDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ReportDocument>,
}

impl CertificateDocument {
    pub fn new(cert: &ReverserCertificate, classification: Option<ReportDocument>) -> Self {
        Self {
            subject: MatrixDocument::from_matrix(&cert.subject),
            reverser: MatrixDocument::from_matrix(&cert.reverser),
            kind: cert.kind.into(),
            structure: cert.structure.into(),
            checks: cert.checks.into(),
            classification,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum BlockDocument {
    Pair { lambda: Scalar, k: usize },
    EvenNil { l: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolicyDocument {
    Prop24,
    ReverserFriendly,
}

impl From<Policy> for PolicyDocument {
    fn from(p: Policy) -> Self {
        match p {
            Policy::Prop24 => Self::Prop24,
            Policy::ReverserFriendly => Self::ReverserFriendly,
        }
    }
}

impl From<PolicyDocument> for Policy {
    fn from(p: PolicyDocument) -> Self {
        match p {
            PolicyDocument::Prop24 => Self::Prop24,
            PolicyDocument::ReverserFriendly => Self::ReverserFriendly,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub policy: Option<PolicyDocument>,
    pub blocks: Vec<BlockDocument>,
}

impl SpecDocument {
    pub fn from_spec(spec: &CanonicalSpec) -> Self {
        Self {
            policy: Some(spec.policy.into()),
            blocks: spec
                .blocks
                .iter()
                .map(|b| match b {
                    CanonicalBlock::Pair { lambda, k } => BlockDocument::Pair {
                        lambda: scalar_to_json(lambda),
                        k: *k,
                    },
                    CanonicalBlock::EvenNil { l } => BlockDocument::EvenNil { l: *l },
                })
                .collect(),
        }
    }

    /// The spec with blocks in canonical order; `fallback` applies when the
    /// document names no policy.
    pub fn to_spec(&self, fallback: Policy) -> Result<CanonicalSpec> {
        if self.blocks.is_empty() {
            return Err(Error::Parse("spec has no blocks".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| match b {
                BlockDocument::Pair { k: 0, .. } | BlockDocument::EvenNil { l: 0 } => {
                    Err(Error::Parse("block sizes must be positive".into()))
                }
                BlockDocument::Pair { lambda, k } => Ok(CanonicalBlock::Pair {
                    lambda: scalar_from_json(lambda)?,
                    k: *k,
                }),
                BlockDocument::EvenNil { l } => Ok(CanonicalBlock::EvenNil { l: *l }),
            })
            .collect::<Result<Vec<_>>>()?;
        let policy = self.policy.map_or(fallback, Policy::from);
        Ok(CanonicalSpec::new(blocks, policy))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let m = Matrix::from_rows(vec![
            vec![GaussianRational::from_fractions(-3, 4, 1, 1), GaussianRational::zero()],
            vec![GaussianRational::i(), GaussianRational::from(7)],
        ]);
        let doc = MatrixDocument::from_matrix(&m);
        assert_eq!(doc.entries[0][0], ["-3/4".to_string(), "1".to_string()]);
        let text = serde_json::to_string(&doc).unwrap();
        let back: MatrixDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_matrix().unwrap(), m);
    }

    #[test]
    fn ragged_entries_rejected() {
        let doc: MatrixDocument =
            serde_json::from_str(r#"{"order":2,"entries":[[["0","0"],["1","0"]],[["0","0"]]]}"#).unwrap();
        assert!(doc.to_matrix().is_err());
    }

    #[test]
    fn spec_document_orders_blocks() {
        let doc: SpecDocument = serde_json::from_str(
            r#"{"blocks":[{"type":"pair","lambda":["1","0"],"k":1},{"type":"even-nil","l":1}]}"#,
        )
        .unwrap();
        let spec = doc.to_spec(Policy::Prop24).unwrap();
        assert_eq!(spec.blocks[0], CanonicalBlock::EvenNil { l: 1 });
        assert_eq!(spec.blocks[1], CanonicalBlock::Pair { lambda: GaussianRational::one(), k: 1 });
        assert_eq!(SpecDocument::from_spec(&spec).to_spec(Policy::Prop24).unwrap(), spec);
    }
}
