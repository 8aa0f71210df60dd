//! Finite simple group identifiers, their parameter constraints, and the
//! order data the criterion consumes: `|G|`, `π(G)`, the defining
//! characteristic and the Weyl-group order.
//!
//! Group-spec grammar: `Alt:n`, `Spor:<AtlasName>`, `Lie:<type>:<n>:<q>`,
//! with `n` omitted for the exceptional and rank-fixed twisted types
//! (`Lie:E8:4`, `Lie:2B2:8`).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, ArithError, PrimeSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("Alt({0}) is not simple: degree must be at least 5")]
    AltDegree(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{ty}: {reason}")]
    LieParameters { ty: LieType, reason: String },
    #[error("{0}(q) has no Weyl group order in scope")]
    NoWeylGroup(LieType),
    #[error("unknown sporadic group {0:?}")]
    UnknownSporadic(String),
    #[error("cannot parse group spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },
    #[error("order data: {0}")]
    Arith(#[from] ArithError),
}

/// Lie type labels, including the twisted forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    #[serde(rename = "2A")]
    TwistedA,
    B,
    C,
    D,
    #[serde(rename = "2D")]
    TwistedD,
    #[serde(rename = "3D4")]
    TrialityD4,
    E6,
    #[serde(rename = "2E6")]
    TwistedE6,
    E7,
    E8,
    F4,
    #[serde(rename = "2F4")]
    ReeF4,
    G2,
    #[serde(rename = "2G2")]
    ReeG2,
    #[serde(rename = "2B2")]
    Suzuki,
}

impl LieType {
    pub const ALL: [LieType; 16] = [
        LieType::A,
        LieType::TwistedA,
        LieType::B,
        LieType::C,
        LieType::D,
        LieType::TwistedD,
        LieType::TrialityD4,
        LieType::E6,
        LieType::TwistedE6,
        LieType::E7,
        LieType::E8,
        LieType::F4,
        LieType::ReeF4,
        LieType::G2,
        LieType::ReeG2,
        LieType::Suzuki,
    ];

    pub fn label(self) -> &'static str {
        match self {
            LieType::A => "A",
            LieType::TwistedA => "2A",
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
            LieType::TwistedD => "2D",
            LieType::TrialityD4 => "3D4",
            LieType::E6 => "E6",
            LieType::TwistedE6 => "2E6",
            LieType::E7 => "E7",
            LieType::E8 => "E8",
            LieType::F4 => "F4",
            LieType::ReeF4 => "2F4",
            LieType::G2 => "G2",
            LieType::ReeG2 => "2G2",
            LieType::Suzuki => "2B2",
        }
    }

    /// Types whose spec string carries the parameter `n`.
    pub fn has_rank_parameter(self) -> bool {
        matches!(
            self,
            LieType::A | LieType::TwistedA | LieType::B | LieType::C | LieType::D | LieType::TwistedD
        )
    }

    /// The rank stored for types without a free parameter.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            LieType::TrialityD4 | LieType::F4 | LieType::ReeF4 => Some(4),
            LieType::E6 | LieType::TwistedE6 => Some(6),
            LieType::E7 => Some(7),
            LieType::E8 => Some(8),
            LieType::G2 | LieType::ReeG2 | LieType::Suzuki => Some(2),
            _ => None,
        }
    }

    /// Suzuki and Ree groups: excluded from Conditions IV and V.
    pub fn is_suzuki_or_ree(self) -> bool {
        matches!(self, LieType::Suzuki | LieType::ReeG2 | LieType::ReeF4)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for LieType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LieType::ALL
            .into_iter()
            .find(|t| t.label() == s)
            .ok_or_else(|| format!("unknown Lie type {s:?}"))
    }
}

/// The 26 sporadic groups and the Tits group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sporadic {
    M11,
    M12,
    M22,
    M23,
    M24,
    J1,
    J2,
    J3,
    J4,
    HS,
    McL,
    Suz,
    Co1,
    Co2,
    Co3,
    He,
    Ru,
    ON,
    Ly,
    Th,
    HN,
    Fi22,
    Fi23,
    Fi24Prime,
    B,
    M,
    Tits,
}

struct SporadicRecord {
    group: Sporadic,
    name: &'static str,
    order_factorisation: &'static [(u64, u32)],
}

// Atlas orders, as prime factorisations.
const SPORADIC_DATA: [SporadicRecord; 27] = [
    SporadicRecord { group: Sporadic::M11, name: "M11", order_factorisation: &[(2, 4), (3, 2), (5, 1), (11, 1)] },
    SporadicRecord { group: Sporadic::M12, name: "M12", order_factorisation: &[(2, 6), (3, 3), (5, 1), (11, 1)] },
    SporadicRecord { group: Sporadic::M22, name: "M22", order_factorisation: &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)] },
    SporadicRecord {
        group: Sporadic::M23,
        name: "M23",
        order_factorisation: &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)],
    },
    SporadicRecord {
        group: Sporadic::M24,
        name: "M24",
        order_factorisation: &[(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)],
    },
    SporadicRecord {
        group: Sporadic::J1,
        name: "J1",
        order_factorisation: &[(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)],
    },
    SporadicRecord { group: Sporadic::J2, name: "J2", order_factorisation: &[(2, 7), (3, 3), (5, 2), (7, 1)] },
    SporadicRecord { group: Sporadic::J3, name: "J3", order_factorisation: &[(2, 7), (3, 5), (5, 1), (17, 1), (19, 1)] },
    SporadicRecord {
        group: Sporadic::J4,
        name: "J4",
        order_factorisation: &[(2, 21), (3, 3), (5, 1), (7, 1), (11, 3), (23, 1), (29, 1), (31, 1), (37, 1), (43, 1)],
    },
    SporadicRecord { group: Sporadic::HS, name: "HS", order_factorisation: &[(2, 9), (3, 2), (5, 3), (7, 1), (11, 1)] },
    SporadicRecord { group: Sporadic::McL, name: "McL", order_factorisation: &[(2, 7), (3, 6), (5, 3), (7, 1), (11, 1)] },
    SporadicRecord {
        group: Sporadic::Suz,
        name: "Suz",
        order_factorisation: &[(2, 13), (3, 7), (5, 2), (7, 1), (11, 1), (13, 1)],
    },
    SporadicRecord {
        group: Sporadic::Co1,
        name: "Co1",
        order_factorisation: &[(2, 21), (3, 9), (5, 4), (7, 2), (11, 1), (13, 1), (23, 1)],
    },
    SporadicRecord {
        group: Sporadic::Co2,
        name: "Co2",
        order_factorisation: &[(2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1)],
    },
    SporadicRecord {
        group: Sporadic::Co3,
        name: "Co3",
        order_factorisation: &[(2, 10), (3, 7), (5, 3), (7, 1), (11, 1), (23, 1)],
    },
    SporadicRecord { group: Sporadic::He, name: "He", order_factorisation: &[(2, 10), (3, 3), (5, 2), (7, 3), (17, 1)] },
    SporadicRecord {
        group: Sporadic::Ru,
        name: "Ru",
        order_factorisation: &[(2, 14), (3, 3), (5, 3), (7, 1), (13, 1), (29, 1)],
    },
    SporadicRecord {
        group: Sporadic::ON,
        name: "O'N",
        order_factorisation: &[(2, 9), (3, 4), (5, 1), (7, 3), (11, 1), (19, 1), (31, 1)],
    },
    SporadicRecord {
        group: Sporadic::Ly,
        name: "Ly",
        order_factorisation: &[(2, 8), (3, 7), (5, 6), (7, 1), (11, 1), (31, 1), (37, 1), (67, 1)],
    },
    SporadicRecord {
        group: Sporadic::Th,
        name: "Th",
        order_factorisation: &[(2, 15), (3, 10), (5, 3), (7, 2), (13, 1), (19, 1), (31, 1)],
    },
    SporadicRecord {
        group: Sporadic::HN,
        name: "HN",
        order_factorisation: &[(2, 14), (3, 6), (5, 6), (7, 1), (11, 1), (19, 1)],
    },
    SporadicRecord {
        group: Sporadic::Fi22,
        name: "Fi22",
        order_factorisation: &[(2, 17), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)],
    },
    SporadicRecord {
        group: Sporadic::Fi23,
        name: "Fi23",
        order_factorisation: &[(2, 18), (3, 13), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (23, 1)],
    },
    SporadicRecord {
        group: Sporadic::Fi24Prime,
        name: "Fi24'",
        order_factorisation: &[(2, 21), (3, 16), (5, 2), (7, 3), (11, 1), (13, 1), (17, 1), (23, 1), (29, 1)],
    },
    SporadicRecord {
        group: Sporadic::B,
        name: "B",
        order_factorisation: &[
            (2, 41),
            (3, 13),
            (5, 6),
            (7, 2),
            (11, 1),
            (13, 1),
            (17, 1),
            (19, 1),
            (23, 1),
            (31, 1),
            (47, 1),
        ],
    },
    SporadicRecord {
        group: Sporadic::M,
        name: "M",
        order_factorisation: &[
            (2, 46),
            (3, 20),
            (5, 9),
            (7, 6),
            (11, 2),
            (13, 3),
            (17, 1),
            (19, 1),
            (23, 1),
            (29, 1),
            (31, 1),
            (41, 1),
            (47, 1),
            (59, 1),
            (71, 1),
        ],
    },
    SporadicRecord {
        group: Sporadic::Tits,
        name: "2F4(2)'",
        order_factorisation: &[(2, 11), (3, 3), (5, 2), (13, 1)],
    },
];

const SPORADIC_ALIASES: [(&str, Sporadic); 6] = [
    ("M(23)", Sporadic::Fi23),
    ("M(24)'", Sporadic::Fi24Prime),
    ("ON", Sporadic::ON),
    ("Fi24", Sporadic::Fi24Prime),
    ("Tits", Sporadic::Tits),
    ("2F4(2)", Sporadic::Tits),
];

impl Sporadic {
    pub const ALL: [Sporadic; 27] = {
        let mut out = [Sporadic::M11; 27];
        let mut i = 0;
        while i < 27 {
            out[i] = SPORADIC_DATA[i].group;
            i += 1;
        }
        out
    };

    fn record(self) -> &'static SporadicRecord {
        SPORADIC_DATA.iter().find(|r| r.group == self).expect("every variant has a record")
    }

    /// Atlas name.
    pub fn name(self) -> &'static str {
        self.record().name
    }

    pub fn order(self) -> BigUint {
        self.record()
            .order_factorisation
            .iter()
            .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }

    pub fn spectrum(self) -> PrimeSet {
        self.record().order_factorisation.iter().map(|&(p, _)| p).collect()
    }
}

impl fmt::Display for Sporadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sporadic {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SPORADIC_DATA
            .iter()
            .find(|r| r.name == s)
            .map(|r| r.group)
            .or_else(|| SPORADIC_ALIASES.iter().find(|(a, _)| *a == s).map(|&(_, g)| g))
            .ok_or_else(|| CatalogError::UnknownSporadic(s.to_string()))
    }
}

impl Serialize for Sporadic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Sporadic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A group of Lie type `ty` over `F_q`. For `A` and `2A` the parameter `n`
/// is the dimension of the natural module (`A_{n-1}(q) = PSL_n(q)`); for
/// `B`, `C`, `D`, `2D` it is the rank; for the other types it is the fixed
/// rank of the root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieGroup {
    pub ty: LieType,
    pub n: u32,
    pub q: u64,
}

impl LieGroup {
    /// Characteristic and exponent, `q = p^f`. Panics if `q` is not a prime
    /// power; validated ids never are.
    pub fn field(&self) -> (u64, u32) {
        arith::prime_power(self.q).expect("validated q is a prime power")
    }

    pub fn characteristic(&self) -> u64 {
        self.field().0
    }
}

/// Serialises as its spec string, e.g. `"Lie:A:2:7"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleGroupId {
    Alt { n: u32 },
    Sporadic { name: Sporadic },
    Lie(LieGroup),
}

impl SimpleGroupId {
    pub fn alt(n: u32) -> Self {
        SimpleGroupId::Alt { n }
    }

    pub fn sporadic(name: Sporadic) -> Self {
        SimpleGroupId::Sporadic { name }
    }

    /// `n` is ignored for types with a fixed rank.
    pub fn lie(ty: LieType, n: u32, q: u64) -> Self {
        let n = ty.fixed_rank().unwrap_or(n);
        SimpleGroupId::Lie(LieGroup { ty, n, q })
    }

    /// `A_{n-1}(q) = PSL_n(q)`.
    pub fn psl(n: u32, q: u64) -> Self {
        SimpleGroupId::lie(LieType::A, n, q)
    }

    pub fn as_lie(&self) -> Option<&LieGroup> {
        match self {
            SimpleGroupId::Lie(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_sporadic(&self) -> Option<Sporadic> {
        match self {
            SimpleGroupId::Sporadic { name } => Some(*name),
            _ => None,
        }
    }
}

impl fmt::Display for SimpleGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleGroupId::Alt { n } => write!(f, "Alt:{n}"),
            SimpleGroupId::Sporadic { name } => write!(f, "Spor:{name}"),
            SimpleGroupId::Lie(g) if g.ty.has_rank_parameter() => write!(f, "Lie:{}:{}:{}", g.ty, g.n, g.q),
            SimpleGroupId::Lie(g) => write!(f, "Lie:{}:{}", g.ty, g.q),
        }
    }
}

impl FromStr for SimpleGroupId {
    type Err = CatalogError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| CatalogError::Parse { spec: spec.to_string(), reason: reason.to_string() };
        let int = |s: &str, what: &str| -> Result<u64, CatalogError> {
            s.trim().parse::<u64>().map_err(|_| err(&format!("{what} {s:?} is not a decimal integer")))
        };
        let (family, rest) = spec.trim().split_once(':').ok_or_else(|| err("expected <family>:<params>"))?;
        match family {
            "Alt" => {
                let n = int(rest, "degree")?;
                Ok(SimpleGroupId::alt(u32::try_from(n).map_err(|_| err("degree too large"))?))
            }
            "Spor" => Ok(SimpleGroupId::sporadic(rest.trim().parse()?)),
            "Lie" => {
                let parts: Vec<&str> = rest.split(':').collect();
                let ty: LieType = parts[0].trim().parse().map_err(|e: String| err(&e))?;
                let (n, q) = match (ty.has_rank_parameter(), parts.len()) {
                    (true, 3) => (int(parts[1], "n")?, int(parts[2], "q")?),
                    (true, _) => return Err(err("classical types need Lie:<type>:<n>:<q>")),
                    (false, 2) => (ty.fixed_rank().unwrap() as u64, int(parts[1], "q")?),
                    (false, 3) => {
                        let n = int(parts[1], "n")?;
                        if n != ty.fixed_rank().unwrap() as u64 {
                            return Err(err("rank does not match the exceptional type"));
                        }
                        (n, int(parts[2], "q")?)
                    }
                    (false, _) => return Err(err("exceptional types need Lie:<type>:<q>")),
                };
                Ok(SimpleGroupId::lie(ty, u32::try_from(n).map_err(|_| err("n too large"))?, q))
            }
            other => Err(err(&format!("unknown family {other:?} (expected Alt, Spor or Lie)"))),
        }
    }
}

impl Serialize for SimpleGroupId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleGroupId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn lie_reject(ty: LieType, reason: impl Into<String>) -> CatalogError {
    CatalogError::LieParameters { ty, reason: reason.into() }
}

/// `q = base^(2m+1)` with `m ≥ 1`; returns `m`.
fn odd_power_m(q: u64, base: u64) -> Option<u32> {
    let (p, f) = arith::prime_power(q)?;
    (p == base && f % 2 == 1 && f >= 3).then_some((f - 1) / 2)
}

/// Checks the simplicity constraints on the parameters.
pub fn validate(id: &SimpleGroupId) -> Result<(), CatalogError> {
    match *id {
        SimpleGroupId::Alt { n } => (n >= 5).then_some(()).ok_or(CatalogError::AltDegree(n)),
        SimpleGroupId::Sporadic { .. } => Ok(()),
        SimpleGroupId::Lie(LieGroup { ty, n, q }) => {
            let (p, _) = arith::prime_power(q).ok_or(CatalogError::NotPrimePower(q))?;
            if let Some(rank) = ty.fixed_rank() {
                if n != rank {
                    return Err(lie_reject(ty, format!("rank must be {rank}")));
                }
            }
            match ty {
                LieType::A => {
                    if n < 2 {
                        return Err(lie_reject(ty, "A_{n-1}(q) needs n >= 2"));
                    }
                    if n == 2 && q <= 3 {
                        return Err(lie_reject(ty, format!("PSL(2,{q}) is solvable")));
                    }
                }
                LieType::TwistedA => {
                    if n < 3 {
                        return Err(lie_reject(ty, "2A_{n-1}(q) needs n >= 3"));
                    }
                    if n == 3 && q == 2 {
                        return Err(lie_reject(ty, "PSU(3,2) is solvable"));
                    }
                }
                LieType::B | LieType::C => {
                    if n < 2 {
                        return Err(lie_reject(ty, "rank must be at least 2"));
                    }
                    if n == 2 && q == 2 {
                        return Err(lie_reject(ty, "B2(2) = Sym6 is not simple"));
                    }
                }
                LieType::D | LieType::TwistedD => {
                    if n < 4 {
                        return Err(lie_reject(ty, "rank must be at least 4"));
                    }
                }
                LieType::G2 => {
                    if q < 3 {
                        return Err(lie_reject(ty, "G2(2) is not simple"));
                    }
                }
                LieType::Suzuki => {
                    if odd_power_m(q, 2).is_none() {
                        return Err(lie_reject(ty, "q must be 2^(2m+1) with m >= 1"));
                    }
                }
                LieType::ReeG2 => {
                    if odd_power_m(q, 3).is_none() {
                        return Err(lie_reject(ty, "q must be 3^(2m+1) with m >= 1"));
                    }
                }
                LieType::ReeF4 => {
                    if q == 2 {
                        return Err(lie_reject(ty, "2F4(2) is not simple; use Spor:Tits for its derived group"));
                    }
                    if odd_power_m(q, 2).is_none() {
                        return Err(lie_reject(ty, "q must be 2^(2m+1) with m >= 1"));
                    }
                }
                _ => {}
            }
            debug_assert!(p >= 2);
            Ok(())
        }
    }
}

/// Order data of a simple group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFacts {
    #[serde(with = "decimal")]
    pub order: BigUint,
    pub spectrum: PrimeSet,
    pub characteristic: Option<u64>,
    #[serde(with = "decimal_opt")]
    pub weyl_order: Option<BigUint>,
}

/// Polynomial part of a Lie-type order: `q^N · Π Φ_d(q)^{m_d} / d`.
struct OrderShape {
    q_exponent: u64,
    cyclotomic: Vec<u64>,
    centre: u64,
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

fn minus_one(i: u64, out: &mut Vec<u64>) {
    out.extend(divisors(i));
}

fn plus_one(i: u64, out: &mut Vec<u64>) {
    out.extend(divisors(2 * i).filter(|d| !i.is_multiple_of(*d)));
}

fn mobius(n: u64) -> i32 {
    let primes = arith::prime_divisors(n).expect("n >= 1");
    if primes.iter().any(|p| n.is_multiple_of(p * p)) {
        0
    } else if primes.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Φ_d(q)` via `Π_{e | d} (q^e - 1)^{μ(d/e)}`.
pub fn cyclotomic_value(d: u64, q: u64) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let q = BigUint::from(q);
    for e in divisors(d) {
        let term = q.pow(e as u32) - 1u32;
        match mobius(d / e) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

fn order_shape(g: &LieGroup) -> OrderShape {
    let LieGroup { ty, n, q } = *g;
    let n = n as u64;
    let mut cyc = Vec::new();
    let gcd = |a: u64, b: u64| a.gcd(&b);
    let (q_exponent, centre) = match ty {
        LieType::A => {
            (2..=n).for_each(|i| minus_one(i, &mut cyc));
            (n * (n - 1) / 2, gcd(n, q - 1))
        }
        LieType::TwistedA => {
            for i in 2..=n {
                if i % 2 == 0 {
                    minus_one(i, &mut cyc)
                } else {
                    plus_one(i, &mut cyc)
                }
            }
            (n * (n - 1) / 2, gcd(n, q + 1))
        }
        LieType::B | LieType::C => {
            (1..=n).for_each(|i| minus_one(2 * i, &mut cyc));
            (n * n, gcd(2, q - 1))
        }
        LieType::D => {
            minus_one(n, &mut cyc);
            (1..n).for_each(|i| minus_one(2 * i, &mut cyc));
            let qn_mod4 = arith::pow_mod(q, n, 4);
            (n * (n - 1), gcd(4, (qn_mod4 + 3) % 4))
        }
        LieType::TwistedD => {
            plus_one(n, &mut cyc);
            (1..n).for_each(|i| minus_one(2 * i, &mut cyc));
            let qn_mod4 = arith::pow_mod(q, n, 4);
            (n * (n - 1), gcd(4, (qn_mod4 + 1) % 4))
        }
        LieType::TrialityD4 => {
            // q^8 + q^4 + 1 = Φ3 Φ6 Φ12
            cyc.extend([3, 6, 12]);
            minus_one(6, &mut cyc);
            minus_one(2, &mut cyc);
            (12, 1)
        }
        LieType::E6 => {
            [12, 9, 8, 6, 5, 2].into_iter().for_each(|i| minus_one(i, &mut cyc));
            (36, gcd(3, q - 1))
        }
        LieType::TwistedE6 => {
            [12, 8, 6, 2].into_iter().for_each(|i| minus_one(i, &mut cyc));
            [9, 5].into_iter().for_each(|i| plus_one(i, &mut cyc));
            (36, gcd(3, q + 1))
        }
        LieType::E7 => {
            [18, 14, 12, 10, 8, 6, 2].into_iter().for_each(|i| minus_one(i, &mut cyc));
            (63, gcd(2, q - 1))
        }
        LieType::E8 => {
            [30, 24, 20, 18, 14, 12, 8, 2].into_iter().for_each(|i| minus_one(i, &mut cyc));
            (120, 1)
        }
        LieType::F4 => {
            [12, 8, 6, 2].into_iter().for_each(|i| minus_one(i, &mut cyc));
            (24, 1)
        }
        LieType::G2 => {
            [6, 2].into_iter().for_each(|i| minus_one(i, &mut cyc));
            (6, 1)
        }
        LieType::Suzuki => {
            // (q^2 + 1)(q - 1)
            plus_one(2, &mut cyc);
            minus_one(1, &mut cyc);
            (2, 1)
        }
        LieType::ReeG2 => {
            plus_one(3, &mut cyc);
            minus_one(1, &mut cyc);
            (3, 1)
        }
        LieType::ReeF4 => {
            plus_one(6, &mut cyc);
            minus_one(4, &mut cyc);
            plus_one(3, &mut cyc);
            minus_one(1, &mut cyc);
            (12, 1)
        }
    };
    OrderShape { q_exponent, cyclotomic: cyc, centre }
}

/// `|W|` for the root system of `ty` with parameter `n` (see [`LieGroup`]).
/// Twisted types `2A`, `2D`, `3D4`, `2E6` get the Weyl group of the ambient
/// untwisted root system; Suzuki and Ree types are rejected.
pub fn weyl_order(ty: LieType, n: u32) -> Result<BigUint, CatalogError> {
    let n64 = n as u64;
    let two_pow = |k: u64| BigUint::one() << k;
    Ok(match ty {
        LieType::A | LieType::TwistedA => arith::factorial(n64),
        LieType::B | LieType::C => two_pow(n64) * arith::factorial(n64),
        LieType::D | LieType::TwistedD => two_pow(n64 - 1) * arith::factorial(n64),
        LieType::TrialityD4 => BigUint::from(192u32),
        LieType::G2 => BigUint::from(12u32),
        LieType::F4 => BigUint::from(1152u32),
        LieType::E6 | LieType::TwistedE6 => BigUint::from(51_840u32),
        LieType::E7 => BigUint::from(2_903_040u32),
        LieType::E8 => BigUint::from(696_729_600u32),
        LieType::Suzuki | LieType::ReeG2 | LieType::ReeF4 => return Err(CatalogError::NoWeylGroup(ty)),
    })
}

/// Weyl group of the ambient algebraic group, defined for every Lie type:
/// `2B2 → B2`, `2G2 → G2`, `2F4 → F4`, otherwise as [`weyl_order`].
pub fn ambient_weyl_order(ty: LieType, n: u32) -> BigUint {
    match ty {
        LieType::Suzuki => weyl_order(LieType::B, 2),
        LieType::ReeG2 => weyl_order(LieType::G2, 2),
        LieType::ReeF4 => weyl_order(LieType::F4, 4),
        _ => weyl_order(ty, n),
    }
    .expect("ambient types always have a Weyl group")
}

/// Order, spectrum, characteristic and Weyl order of a validated group.
pub fn facts(id: &SimpleGroupId) -> Result<GroupFacts, CatalogError> {
    validate(id)?;
    match *id {
        SimpleGroupId::Alt { n } => {
            let order = arith::factorial(n as u64) / 2u32;
            Ok(GroupFacts {
                order,
                spectrum: PrimeSet::primes_up_to(n as u64),
                characteristic: None,
                weyl_order: None,
            })
        }
        SimpleGroupId::Sporadic { name } => Ok(GroupFacts {
            order: name.order(),
            spectrum: name.spectrum(),
            characteristic: None,
            weyl_order: None,
        }),
        SimpleGroupId::Lie(g) => {
            let shape = order_shape(&g);
            let p = g.characteristic();
            let mut cyc = shape.cyclotomic.clone();
            cyc.sort_unstable();
            let mut order = BigUint::from(g.q).pow(shape.q_exponent as u32);
            let mut candidates = PrimeSet::new([p])?;
            let mut last = 0;
            let mut value = BigUint::zero();
            for &d in &cyc {
                if d != last {
                    value = cyclotomic_value(d, g.q);
                    candidates = candidates.union(&arith::prime_divisors_big(&value)?);
                    last = d;
                }
                order *= &value;
            }
            debug_assert!((&order % shape.centre).is_zero());
            order /= shape.centre;
            let spectrum = PrimeSet::new(candidates.iter().filter(|&r| (&order % r).is_zero()))?;
            Ok(GroupFacts {
                order,
                spectrum,
                characteristic: Some(p),
                weyl_order: Some(ambient_weyl_order(g.ty, g.n)),
            })
        }
    }
}

pub(crate) mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) mod decimal_opt {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_some(&v.to_str_radix(10)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}
