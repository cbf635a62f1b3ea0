//! Integral closure of powers, normality certificates and associated primes.

mod closure;
mod decomposition;
pub mod lp;
mod primes;

pub use closure::{closure_power, normality_certify, rrv_bound};
pub use decomposition::{decomposition_certificate, DecompositionNode};
pub use primes::{associated_primes, persistence_check, MonomialPrime, PersistenceReport};

use crate::monomial::Monomial;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    LatticePoints,
    Decomposition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Verdict {
    CertifiedNormal,
    IntegrallyClosedUpToK { k: u32 },
    /// `witness` is in the integral closure of `I^k` but not in `I^k`.
    Failed { witness: Monomial, k: u32 },
    /// The decomposition replay found violated containments or hypotheses.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityCertificate {
    pub method: Method,
    /// Exponents whose powers were compared with their closures.
    pub checked_k: Vec<u32>,
    pub verdict: Verdict,
    /// External fact the verdict relies on, if any.
    pub criterion: Option<String>,
    pub tree: Option<DecompositionNode>,
    /// Messages for failed checks or a resource stop.
    pub notes: Vec<String>,
}

impl NormalityCertificate {
    pub fn is_failure(&self) -> bool {
        matches!(self.verdict, Verdict::Failed { .. } | Verdict::Inconclusive)
    }
}
