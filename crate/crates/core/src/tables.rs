//! Classification data for `E_π` in symmetric, alternating, sporadic and
//! Tits groups.
//!
//! Table 1 lists the `π`-Hall subgroups of `Sym_n` when
//! `|π ∩ π(n!)| > 1` and `π(n!) ⊄ π`. Table 2 lists the sporadic pairs
//! `(G, π ∩ π(G))` with `2 ∉ π` and `G ∈ E_π`; Table 3 the pairs with
//! `2 ∈ π`, `π(G) ⊄ π`, `|π ∩ π(G)| > 1`. The `π` column is always matched
//! against `π ∩ π(G)` (resp. `π ∩ π(n!)`).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::PrimeSet;
use crate::catalog::Sporadic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("Sym({0}) lookup needs n >= 5")]
    Degree(u32),
    #[error("Sym({n}) lookup with pi = {pi}: needs |pi ∩ π(n!)| > 1 and π(n!) not contained in pi")]
    Hypothesis { n: u32, pi: PrimeSet },
}

/// One concrete table row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub group: String,
    pub pi: PrimeSet,
    pub structure: String,
}

enum DegreeRule {
    Prime,
    Exactly(u32),
}

enum PiRule {
    /// `π((n-1)!)`, the primes below `n`.
    BelowDegree,
    Fixed(&'static [u64]),
}

struct SymmetricEntry {
    degree: DegreeRule,
    pi: PiRule,
    structure: &'static str,
}

const TABLE_1: [SymmetricEntry; 3] = [
    SymmetricEntry { degree: DegreeRule::Prime, pi: PiRule::BelowDegree, structure: "Sym_{n-1}" },
    SymmetricEntry { degree: DegreeRule::Exactly(7), pi: PiRule::Fixed(&[2, 3]), structure: "Sym_3×Sym_4" },
    SymmetricEntry { degree: DegreeRule::Exactly(8), pi: PiRule::Fixed(&[2, 3]), structure: "Sym_4 wr Sym_2" },
];

pub(crate) const TABLE_2: [(Sporadic, [u64; 2]); 30] = [
    (Sporadic::M11, [5, 11]),
    (Sporadic::M23, [5, 11]),
    (Sporadic::M23, [11, 23]),
    (Sporadic::Ru, [7, 29]),
    (Sporadic::Fi23, [11, 23]),
    (Sporadic::J1, [3, 5]),
    (Sporadic::J1, [3, 7]),
    (Sporadic::J1, [3, 19]),
    (Sporadic::J1, [5, 11]),
    (Sporadic::Co1, [11, 23]),
    (Sporadic::M12, [5, 11]),
    (Sporadic::M24, [5, 11]),
    (Sporadic::M24, [11, 23]),
    (Sporadic::Fi24Prime, [11, 23]),
    (Sporadic::J4, [5, 7]),
    (Sporadic::J4, [5, 11]),
    (Sporadic::J4, [5, 31]),
    (Sporadic::J4, [7, 29]),
    (Sporadic::J4, [7, 43]),
    (Sporadic::Co2, [11, 23]),
    (Sporadic::M22, [5, 11]),
    (Sporadic::Ly, [11, 67]),
    (Sporadic::ON, [3, 5]),
    (Sporadic::ON, [5, 11]),
    (Sporadic::ON, [5, 31]),
    (Sporadic::B, [11, 23]),
    (Sporadic::B, [23, 47]),
    (Sporadic::M, [23, 47]),
    (Sporadic::M, [29, 59]),
    (Sporadic::Co3, [11, 23]),
];

pub(crate) const TABLE_3: [(Sporadic, &[u64], &str); 15] = [
    (Sporadic::M11, &[2, 3], "3^2:Q_8.2"),
    (Sporadic::M11, &[2, 3, 5], "Alt_6.2"),
    (Sporadic::M22, &[2, 3, 5], "2^4:Alt_6"),
    (Sporadic::M23, &[2, 3], "2^4:(3×A_4):2"),
    (Sporadic::M23, &[2, 3, 5], "2^4:Alt_6"),
    (Sporadic::M23, &[2, 3, 5], "2^4:(3×Alt_5):2"),
    (Sporadic::M23, &[2, 3, 5, 7], "L_3(4):2_2"),
    (Sporadic::M23, &[2, 3, 5, 7], "2^4:Alt_7"),
    (Sporadic::M23, &[2, 3, 5, 7, 11], "M_22"),
    (Sporadic::M24, &[2, 3, 5], "2^6:3.Sym_6"),
    (Sporadic::J1, &[2, 3], "2×Alt_4"),
    (Sporadic::J1, &[2, 7], "2^3:7"),
    (Sporadic::J1, &[2, 3, 5], "2×A_5"),
    (Sporadic::J1, &[2, 3, 7], "2^3:7:3"),
    (Sporadic::J4, &[2, 3, 5], "2^11:(2^6:3.Sym_6)"),
];

fn primes(list: &[u64]) -> PrimeSet {
    list.iter().copied().collect()
}

pub fn table2_rows() -> Vec<TableRow> {
    TABLE_2
        .iter()
        .map(|(g, pi)| TableRow { group: g.name().to_string(), pi: primes(pi), structure: String::new() })
        .collect()
}

pub fn table3_rows() -> Vec<TableRow> {
    TABLE_3
        .iter()
        .map(|(g, pi, s)| TableRow { group: g.name().to_string(), pi: primes(pi), structure: s.to_string() })
        .collect()
}

/// Result of a table lookup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpiLookup {
    pub exists: bool,
    pub basis: EpiBasis,
    pub rows: Vec<TableRow>,
}

/// Why a lookup returned its answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EpiBasis {
    /// `π(G) ⊆ π`: the group itself is the Hall subgroup.
    WholeGroup,
    /// `|π ∩ π(G)| ≤ 1`: a Sylow subgroup (or the trivial group).
    Sylow,
    /// Answer read off a classification table.
    Table,
    /// `2 ∉ π` or `3 ∉ π` for an alternating group.
    AlternatingParity,
}

fn sym_spectrum(n: u32) -> PrimeSet {
    PrimeSet::primes_up_to(n as u64)
}

fn check_symmetric_gate(n: u32, pi: &PrimeSet) -> Result<PrimeSet, TableError> {
    if n < 5 {
        return Err(TableError::Degree(n));
    }
    let spectrum = sym_spectrum(n);
    let eff = pi.intersection(&spectrum);
    if eff.len() <= 1 || spectrum.is_subset(pi) {
        return Err(TableError::Hypothesis { n, pi: pi.clone() });
    }
    Ok(eff)
}

/// Table 1 lookup for `Sym_n`. Callers handle the trivial cases
/// (`|π ∩ π(n!)| ≤ 1` or `π(n!) ⊆ π`) themselves; those are rejected here.
pub fn sym_epi(n: u32, pi: &PrimeSet) -> Result<EpiLookup, TableError> {
    let eff = check_symmetric_gate(n, pi)?;
    let n_is_prime = crate::arith::is_prime(n as u64);
    let rows: Vec<TableRow> = TABLE_1
        .iter()
        .filter(|e| match e.degree {
            DegreeRule::Prime => n_is_prime,
            DegreeRule::Exactly(m) => m == n,
        })
        .filter_map(|e| {
            let row_pi = match e.pi {
                PiRule::BelowDegree => PrimeSet::primes_up_to(n as u64 - 1),
                PiRule::Fixed(list) => primes(list),
            };
            (row_pi == eff).then(|| {
                let structure = match e.degree {
                    DegreeRule::Prime => format!("Sym_{}", n - 1),
                    DegreeRule::Exactly(_) => e.structure.to_string(),
                };
                TableRow { group: format!("Sym_{n}"), pi: row_pi, structure }
            })
        })
        .collect();
    Ok(EpiLookup { exists: !rows.is_empty(), basis: EpiBasis::Table, rows })
}

/// `Alt_n ∈ E_π`, under the same hypotheses as [`sym_epi`]. The Hall
/// subgroups of `Alt_n` are the intersections with those of `Sym_n`.
pub fn alt_epi(n: u32, pi: &PrimeSet) -> Result<EpiLookup, TableError> {
    check_symmetric_gate(n, pi)?;
    if !pi.contains(2) || !pi.contains(3) {
        return Ok(EpiLookup { exists: false, basis: EpiBasis::AlternatingParity, rows: Vec::new() });
    }
    sym_epi(n, pi)
}

/// `G ∈ E_π` for a sporadic group or the Tits group.
pub fn sporadic_epi(name: Sporadic, pi: &PrimeSet) -> EpiLookup {
    let spectrum = name.spectrum();
    let eff = pi.intersection(&spectrum);
    if spectrum.is_subset(pi) {
        return EpiLookup { exists: true, basis: EpiBasis::WholeGroup, rows: Vec::new() };
    }
    if eff.len() <= 1 {
        return EpiLookup { exists: true, basis: EpiBasis::Sylow, rows: Vec::new() };
    }
    let rows: Vec<TableRow> = if eff.contains(2) {
        table3_rows()
            .into_iter()
            .zip(TABLE_3.iter())
            .filter(|(row, (g, _, _))| *g == name && row.pi == eff)
            .map(|(row, _)| row)
            .collect()
    } else {
        table2_rows()
            .into_iter()
            .zip(TABLE_2.iter())
            .filter(|(row, (g, _))| *g == name && row.pi == eff)
            .map(|(row, _)| row)
            .collect()
    };
    EpiLookup { exists: !rows.is_empty(), basis: EpiBasis::Table, rows }
}

/// `π` column of a dumped row: Table 1's first row is symbolic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PiColumn {
    Primes(PrimeSet),
    Symbolic(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DumpRow {
    pub group: String,
    pub pi: PiColumn,
    pub structure: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesDump {
    pub schema: u32,
    pub table1: Vec<DumpRow>,
    pub table2: Vec<DumpRow>,
    pub table3: Vec<DumpRow>,
    pub condition_ii: Vec<DumpRow>,
}

/// All embedded classification data, in table order.
pub fn dump() -> TablesDump {
    let table1 = TABLE_1
        .iter()
        .map(|e| DumpRow {
            group: match e.degree {
                DegreeRule::Prime => "Sym_n (n prime)".to_string(),
                DegreeRule::Exactly(n) => format!("Sym_{n}"),
            },
            pi: match e.pi {
                PiRule::BelowDegree => PiColumn::Symbolic("pi((n-1)!)".to_string()),
                PiRule::Fixed(list) => PiColumn::Primes(primes(list)),
            },
            structure: e.structure.to_string(),
        })
        .collect();
    let plain = |rows: Vec<TableRow>| {
        rows.into_iter()
            .map(|r| DumpRow { group: r.group, pi: PiColumn::Primes(r.pi), structure: r.structure })
            .collect()
    };
    let condition_ii = crate::criterion::condition_ii_pairs()
        .into_iter()
        .map(|(item, g, pi)| DumpRow {
            group: g.name().to_string(),
            pi: PiColumn::Primes(pi),
            structure: format!("Condition II({item})"),
        })
        .collect();
    TablesDump { schema: 1, table1, table2: plain(table2_rows()), table3: plain(table3_rows()), condition_ii }
}
