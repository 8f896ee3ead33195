use std::fmt;

use serde::Serialize;

use crate::ring::Element;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Proven,
    Refuted,
    Unfalsified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    #[serde(rename = "oracle")]
    Oracle,
    #[serde(rename = "fast-path")]
    FastPath,
    #[serde(rename = "certificate")]
    Certificate,
}

/// Elements demonstrating a refutation. `residues` holds the residue-class
/// labels when the witness came from a residue scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub elements: Vec<Element>,
    pub residues: Option<Vec<String>>,
}

impl Witness {
    pub fn new(elements: Vec<Element>) -> Self {
        Witness { elements, residues: None }
    }

    pub fn with_residues(elements: Vec<Element>, residues: Vec<String>) -> Self {
        Witness { elements, residues: Some(residues) }
    }
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Witness", 2)?;
        let elements: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        st.serialize_field("elements", &elements)?;
        st.serialize_field("residues", &self.residues)?;
        st.end()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Outcome of a decision procedure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub method: Method,
    pub bound: Option<String>,
}

impl Verdict {
    pub fn proven(method: Method) -> Self {
        Verdict { status: Status::Proven, witness: None, method, bound: None }
    }

    pub fn refuted(method: Method, witness: Witness) -> Self {
        Verdict { status: Status::Refuted, witness: Some(witness), method, bound: None }
    }

    pub fn unfalsified(bound: impl Into<String>) -> Self {
        Verdict {
            status: Status::Unfalsified,
            witness: None,
            method: Method::Oracle,
            bound: Some(bound.into()),
        }
    }

    pub fn with_bound(mut self, bound: impl Into<String>) -> Self {
        self.bound = Some(bound.into());
        self
    }

    pub fn is_proven(&self) -> bool {
        self.status == Status::Proven
    }

    pub fn is_refuted(&self) -> bool {
        self.status == Status::Refuted
    }

    /// Witness elements, empty when there is none.
    pub fn witness_elements(&self) -> &[Element] {
        self.witness.as_ref().map_or(&[], |w| &w.elements)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Proven => "proven",
            Status::Refuted => "refuted",
            Status::Unfalsified => "unfalsified",
        };
        write!(f, "{status}")?;
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        if let Some(b) = &self.bound {
            write!(f, " [{b}]")?;
        }
        Ok(())
    }
}
