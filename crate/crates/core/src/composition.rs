//! `D_π` for composite groups given by their composition factors, and the
//! reduction of `D_π` to `D_σ ∧ D_τ` when a `π`-Hall subgroup splits as
//! `H_σ × H_τ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::arith::{self, PrimeSet};
use crate::catalog::{self, CatalogError, SimpleGroupId};
use crate::criterion::{self, Verdict};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompositionError {
    #[error("composition factor list is empty")]
    Empty,
    #[error("Cyclic:{0} is not of prime order")]
    CyclicNotPrime(u64),
    #[error("bad factor `{spec}`: {reason}")]
    Parse { spec: String, reason: String },
    #[error("prime sets overlap in {0}")]
    Overlap(PrimeSet),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// A composition factor: a nonabelian simple group or a cyclic group of prime order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Simple(SimpleGroupId),
    Cyclic(u64),
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Simple(id) => write!(f, "{id}"),
            Factor::Cyclic(p) => write!(f, "Cyclic:{p}"),
        }
    }
}

impl FromStr for Factor {
    type Err = CompositionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("Cyclic:") {
            let p: u64 = rest.parse().map_err(|_| CompositionError::Parse {
                spec: s.to_string(),
                reason: format!("`{rest}` is not a positive integer"),
            })?;
            if !arith::is_prime(p) {
                return Err(CompositionError::CyclicNotPrime(p));
            }
            return Ok(Factor::Cyclic(p));
        }
        let id: SimpleGroupId = s.parse()?;
        catalog::validate(&id)?;
        Ok(Factor::Simple(id))
    }
}

impl Serialize for Factor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Factor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Non-empty multiset of composition factors, e.g. `"Alt:5,Cyclic:7,Lie:A:2:7"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Factor>", into = "Vec<Factor>")]
pub struct CompositionSpec {
    factors: Vec<Factor>,
}

impl CompositionSpec {
    pub fn new(factors: Vec<Factor>) -> Result<Self, CompositionError> {
        if factors.is_empty() {
            return Err(CompositionError::Empty);
        }
        for f in &factors {
            match f {
                Factor::Simple(id) => catalog::validate(id)?,
                Factor::Cyclic(p) if !arith::is_prime(*p) => return Err(CompositionError::CyclicNotPrime(*p)),
                Factor::Cyclic(_) => {}
            }
        }
        Ok(CompositionSpec { factors })
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }
}

impl TryFrom<Vec<Factor>> for CompositionSpec {
    type Error = CompositionError;

    fn try_from(v: Vec<Factor>) -> Result<Self, Self::Error> {
        CompositionSpec::new(v)
    }
}

impl From<CompositionSpec> for Vec<Factor> {
    fn from(c: CompositionSpec) -> Self {
        c.factors
    }
}

impl fmt::Display for CompositionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for CompositionSpec {
    type Err = CompositionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let factors = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Factor>, _>>()?;
        CompositionSpec::new(factors)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorVerdict {
    pub factor: Factor,
    pub dpi: bool,
    /// Absent for cyclic factors, which satisfy `D_π` for every `π`.
    pub verdict: Option<Verdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositeVerdict {
    pub pi: PrimeSet,
    pub dpi: bool,
    pub trace: Vec<FactorVerdict>,
}

impl CompositeVerdict {
    /// Factors whose verdict is false.
    pub fn failing(&self) -> impl Iterator<Item = &Factor> {
        self.trace.iter().filter(|t| !t.dpi).map(|t| &t.factor)
    }
}

/// `G ∈ D_π` iff every composition factor of `G` is in `D_π`.
pub fn decide_dpi_composite(spec: &CompositionSpec, pi: &PrimeSet) -> Result<CompositeVerdict, CompositionError> {
    let trace = spec
        .factors
        .iter()
        .map(|&factor| match factor {
            Factor::Cyclic(_) => Ok(FactorVerdict { factor, dpi: true, verdict: None }),
            Factor::Simple(id) => {
                let v = criterion::decide_dpi_simple(&id, pi)?;
                Ok(FactorVerdict { factor, dpi: v.dpi, verdict: Some(v) })
            }
        })
        .collect::<Result<Vec<_>, CompositionError>>()?;
    let dpi = trace.iter().all(|t| t.dpi);
    Ok(CompositeVerdict { pi: pi.clone(), dpi, trace })
}

/// Provenance of the hypothesis that a `π`-Hall subgroup is the direct
/// product of its parts. The arithmetic layer cannot decide it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HallSplit {
    /// Asserted by the caller.
    Assumed,
    /// Checked on a concrete realization.
    BruteVerified,
    /// Checked on a concrete realization and found false.
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitHypothesis {
    pub sigma: PrimeSet,
    pub tau: PrimeSet,
    pub status: HallSplit,
}

impl SplitHypothesis {
    pub fn assumed(sigma: PrimeSet, tau: PrimeSet) -> Self {
        SplitHypothesis { sigma, tau, status: HallSplit::Assumed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitVerdict {
    pub pi: PrimeSet,
    pub parts: Vec<PrimeSet>,
    /// Conjunction of the per-part verdicts.
    pub dpi: bool,
    pub status: HallSplit,
    pub label: String,
    pub per_part: Vec<CompositeVerdict>,
}

impl SplitVerdict {
    /// True when the equivalence `D_π ⟺ ∧ D_{π_i}` is known to apply.
    pub fn is_unconditional(&self) -> bool {
        self.status == HallSplit::BruteVerified
    }
}

fn split_label(status: HallSplit) -> &'static str {
    match status {
        HallSplit::Assumed => "conditional on the Hall split H = H_1 × … × H_n (assumed, not verified)",
        HallSplit::BruteVerified => "Hall split verified on a realization",
        HallSplit::Refuted => "Hall split refuted on a realization; the equivalence does not apply",
    }
}

/// `D_π` as the conjunction of `D_{π_i}` over pairwise disjoint parts, valid
/// when a `π`-Hall subgroup is the direct product of `π_i`-subgroups.
pub fn corollary_partition(
    spec: &CompositionSpec,
    parts: &[PrimeSet],
    status: HallSplit,
) -> Result<SplitVerdict, CompositionError> {
    let mut pi = PrimeSet::empty();
    for part in parts {
        let overlap = pi.intersection(part);
        if !overlap.is_empty() {
            return Err(CompositionError::Overlap(overlap));
        }
        pi = pi.union(part);
    }
    let per_part = parts.iter().map(|p| decide_dpi_composite(spec, p)).collect::<Result<Vec<_>, _>>()?;
    Ok(SplitVerdict {
        dpi: per_part.iter().all(|v| v.dpi),
        pi,
        parts: parts.to_vec(),
        status,
        label: split_label(status).to_string(),
        per_part,
    })
}

/// Two-part case of [`corollary_partition`]: `D_{σ∪τ} ⟺ D_σ ∧ D_τ` under
/// `H = H_σ × H_τ`.
pub fn wielandt_split(spec: &CompositionSpec, hyp: &SplitHypothesis) -> Result<SplitVerdict, CompositionError> {
    corollary_partition(spec, &[hyp.sigma.clone(), hyp.tau.clone()], hyp.status)
}
