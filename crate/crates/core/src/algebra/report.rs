use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::linalg::Scalar;

/// One failed identity: which axiom, at which basis indices, and both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

/// Outcome of an axiom check. Passed exactly when no failures were recorded.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    failures: Vec<Failure>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_failures(failures: Vec<Failure>) -> Self {
        ValidationReport { failures }
    }

    pub fn push(&mut self, axiom: &str, indices: Vec<usize>, lhs: Vec<Scalar>, rhs: Vec<Scalar>) {
        self.failures.push(Failure { axiom: axiom.to_string(), indices, lhs, rhs });
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.failures.extend(other.failures);
    }

    pub fn merged(mut self, other: ValidationReport) -> Self {
        self.merge(other);
        self
    }

    pub fn summary(&self) -> String {
        match self.failures.first() {
            None => "passed".to_string(),
            Some(f) => format!("{} failure(s), first: {} at {:?}", self.failures.len(), f.axiom, f.indices),
        }
    }
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

impl Serialize for Failure {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Failure", 4)?;
        st.serialize_field("axiom", &self.axiom)?;
        st.serialize_field("indices", &self.indices)?;
        st.serialize_field("lhs", &strings(&self.lhs))?;
        st.serialize_field("rhs", &strings(&self.rhs))?;
        st.end()
    }
}

impl Serialize for ValidationReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ValidationReport", 2)?;
        st.serialize_field("passed", &self.passed())?;
        st.serialize_field("failures", &self.failures)?;
        st.end()
    }
}
