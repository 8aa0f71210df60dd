//! Agreement between the arithmetic verdicts and the brute-force engine on
//! realized groups.

use serde::{Deserialize, Serialize};

use crate::arith::PrimeSet;
use crate::composition;
use crate::criterion;
use crate::permbrute::{self, BruteError, Lattice, RealizationSpec};

/// Simple groups with a built-in realization small enough for a full lattice.
pub const SIMPLE_CORPUS: [&str; 8] =
    ["Alt:5", "Alt:6", "Lie:A:2:4", "Lie:A:2:5", "Lie:A:2:7", "Lie:A:2:8", "Lie:A:2:9", "Lie:A:2:11"];

const CORPUS_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub pi: PrimeSet,
    pub brute: bool,
    pub arithmetic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub group: RealizationSpec,
    pub order: usize,
    /// `"simple"` when compared against the simple-group criterion,
    /// `"composite"` when against the composition-factor verdict.
    pub method: String,
    pub subsets_checked: usize,
    pub disagreements: Vec<Disagreement>,
}

impl CrosscheckReport {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compares the brute-force `D_π` with the arithmetic verdict for every
/// `π ⊆ π(G)`.
pub fn crosscheck(spec: &RealizationSpec, bound: usize) -> Result<CrosscheckReport, CrosscheckError> {
    let g = permbrute::realize_with_table(spec, bound)?;
    let lattice = Lattice::build_with_bound(&g, bound)?;
    let simple = spec.simple_id();
    let factors = spec.composition_factors();
    let mut disagreements = Vec::new();
    let mut checked = 0;
    for pi in g.spectrum().subsets() {
        checked += 1;
        let brute = permbrute::is_dpi_brute(&lattice, &pi);
        let arithmetic = match &simple {
            Some(id) => criterion::decide_dpi_simple(id, &pi)?.dpi,
            None => composition::decide_dpi_composite(&factors, &pi)?.dpi,
        };
        if brute != arithmetic {
            disagreements.push(Disagreement { pi, brute, arithmetic });
        }
    }
    Ok(CrosscheckReport {
        group: spec.clone(),
        order: g.order(),
        method: if simple.is_some() { "simple" } else { "composite" }.to_string(),
        subsets_checked: checked,
        disagreements,
    })
}

/// Direct products of two corpus groups or cyclic groups of order at most 11,
/// with order within `bound`.
pub fn product_corpus(bound: usize) -> Result<Vec<RealizationSpec>, CrosscheckError> {
    let mut factors: Vec<(String, usize)> = Vec::new();
    for s in SIMPLE_CORPUS {
        factors.push((s.to_string(), permbrute::realize(&s.parse()?)?.order()));
    }
    factors.extend(CORPUS_PRIMES.iter().map(|p| (format!("Cyclic:{p}"), *p as usize)));
    let mut out = Vec::new();
    for (i, (a, na)) in factors.iter().enumerate() {
        for (b, nb) in &factors[i..] {
            if na * nb <= bound {
                out.push(format!("{a}*{b}").parse()?);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCheck {
    pub group: RealizationSpec,
    /// `(π, σ, τ)` triples with a verified split Hall subgroup.
    pub instances: usize,
    /// Triples where `D_π ≠ D_σ ∧ D_τ`.
    pub violations: Vec<(PrimeSet, PrimeSet, PrimeSet)>,
}

/// On a realized group, `D_π ⟺ D_σ ∧ D_τ` for every `π ⊆ π(G)` and every
/// partition `π = σ ⊔ τ` admitting a Hall subgroup `H_σ × H_τ`.
pub fn split_check(spec: &RealizationSpec, bound: usize) -> Result<SplitCheck, CrosscheckError> {
    let g = permbrute::realize_with_table(spec, bound)?;
    let lattice = Lattice::build_with_bound(&g, bound)?;
    let mut instances = 0;
    let mut violations = Vec::new();
    for pi in g.spectrum().subsets() {
        let dpi = permbrute::is_dpi_brute(&lattice, &pi);
        for sigma in pi.subsets() {
            let tau = pi.difference(&sigma);
            if !permbrute::verify_hall_split(&lattice, &sigma, &tau)? {
                continue;
            }
            instances += 1;
            if dpi != (permbrute::is_dpi_brute(&lattice, &sigma) && permbrute::is_dpi_brute(&lattice, &tau)) {
                violations.push((pi.clone(), sigma, tau));
            }
        }
    }
    Ok(SplitCheck { group: spec.clone(), instances, violations })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub crosschecks: Vec<CrosscheckReport>,
    pub splits: Vec<SplitCheck>,
}

impl CorpusReport {
    pub fn disagreements(&self) -> usize {
        self.crosschecks.iter().map(|c| c.disagreements.len()).sum::<usize>()
            + self.splits.iter().map(|s| s.violations.len()).sum::<usize>()
    }
}

/// Crosschecks every simple corpus group and product, and checks the split
/// equivalence on every product.
pub fn corpus_sweep(bound: usize) -> Result<CorpusReport, CrosscheckError> {
    let mut crosschecks = Vec::new();
    for s in SIMPLE_CORPUS {
        crosschecks.push(crosscheck(&s.parse()?, bound)?);
    }
    let mut splits = Vec::new();
    for spec in product_corpus(bound)? {
        crosschecks.push(crosscheck(&spec, bound)?);
        splits.push(split_check(&spec, bound)?);
    }
    Ok(CorpusReport { crosschecks, splits })
}

#[derive(Debug, thiserror::Error)]
pub enum CrosscheckError {
    #[error(transparent)]
    Brute(#[from] BruteError),
    #[error(transparent)]
    Catalog(#[from] crate::catalog::CatalogError),
    #[error(transparent)]
    Composition(#[from] composition::CompositionError),
}
