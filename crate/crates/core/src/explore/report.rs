use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A search found the object it was looking for.
    Witness,
    /// A bounded search found nothing; no conclusion is drawn.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Witness => "witness",
            Status::Inconclusive => "inconclusive",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl Claim {
    pub fn new(id: impl Into<String>, paper_ref: impl Into<String>, status: Status) -> Self {
        Claim {
            id: id.into(),
            paper_ref: paper_ref.into(),
            status,
            witness: None,
        }
    }

    pub fn check(id: impl Into<String>, paper_ref: impl Into<String>, ok: bool) -> Self {
        Self::new(id, paper_ref, if ok { Status::Pass } else { Status::Fail })
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub max_leaves: usize,
    pub max_depth: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            max_leaves: 6,
            max_depth: 12,
        }
    }
}

/// Claims in a fixed order; identical parameters give byte-identical JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Params,
    pub claims: Vec<Claim>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, params: Params) -> Self {
        VerificationReport {
            suite: suite.into(),
            params,
            claims: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Claim) {
        self.claims.push(c);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.claims.extend(other.claims);
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One line per claim followed by a tally.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "suite {} (max_leaves={}, max_depth={})\n",
            self.suite, self.params.max_leaves, self.params.max_depth
        );
        for c in &self.claims {
            s.push_str(&format!("  [{:>12}] {}", c.status.to_string(), c.id));
            if let Some(w) = &c.witness {
                s.push_str(&format!("  ({w})"));
            }
            s.push('\n');
        }
        let count = |st| self.claims.iter().filter(|c| c.status == st).count();
        s.push_str(&format!(
            "{} claims: {} pass, {} fail, {} witness, {} inconclusive\n",
            self.claims.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Witness),
            count(Status::Inconclusive)
        ));
        s
    }
}
