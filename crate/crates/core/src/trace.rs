//! Versioned JSON documents wrapping a certificate tree.

use serde::{Deserialize, Serialize};

use crate::certify::{self, Certificate, CertifyConfig, Outcome};
use crate::error::{Error, Result};
use crate::signomial::Signomial;
use crate::text::parse_signomial_with_dim;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceInput {
    pub polynomial: String,
    pub signomial: Signomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub schema: u32,
    pub input: TraceInput,
    pub config: CertifyConfig,
    pub outcome: Outcome,
    pub tree: Certificate,
}

impl TraceDocument {
    pub fn new(f: &Signomial, config: &CertifyConfig, tree: Certificate) -> Self {
        TraceDocument {
            schema: SCHEMA_VERSION,
            input: TraceInput {
                polynomial: f.to_string(),
                signomial: f.clone(),
            },
            config: config.clone(),
            outcome: tree.outcome,
            tree,
        }
    }

    /// Certifies `f` and wraps the result.
    pub fn certify(f: &Signomial, config: &CertifyConfig) -> Self {
        Self::new(f, config, certify::certify_connectivity(f, config))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TraceDocument = serde_json::from_str(text).map_err(|e| Error::Trace(e.to_string()))?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Trace(format!("unsupported schema version {}", doc.schema)));
        }
        Ok(doc)
    }

    /// Re-verifies every witness in the tree exactly.
    pub fn verify(&self) -> Result<()> {
        let f = &self.input.signomial;
        let reparsed = parse_signomial_with_dim(&self.input.polynomial, Some(f.dimension()));
        if !f.is_empty() && reparsed.as_ref() != Ok(f) {
            return Err(Error::Trace("input text and structured signomial disagree".into()));
        }
        if self.outcome != self.tree.outcome {
            return Err(Error::Trace("document outcome differs from the tree's".into()));
        }
        certify::verify_certificate(f, &self.tree).map_err(Error::Trace)
    }
}
