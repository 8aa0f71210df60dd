use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith;
use crate::catalog::{LieType, SimpleGroupId};
use crate::composition::{CompositionSpec, Factor};

use super::field::SmallField;
use super::group::PermGroup;
use super::perm::Permutation;
use super::{BruteError, MAX_DEGREE, ORDER_BOUND};

const PSL2_FIELDS: [u64; 6] = [4, 5, 7, 8, 9, 11];
const CYCLIC_MAX: u64 = 31;

/// A group with a built-in permutation representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    Alt(u32),
    Sym(u32),
    /// `PSL_2(q)` on the projective line.
    Psl2(u64),
    Cyclic(u64),
}

impl Builtin {
    fn degree(self) -> usize {
        match self {
            Builtin::Alt(n) | Builtin::Sym(n) => n as usize,
            Builtin::Psl2(q) => q as usize + 1,
            Builtin::Cyclic(p) => p as usize,
        }
    }

    fn check(self) -> Result<Self, BruteError> {
        let ok = match self {
            Builtin::Alt(n) | Builtin::Sym(n) => (5..=8).contains(&n),
            Builtin::Psl2(q) => PSL2_FIELDS.contains(&q),
            Builtin::Cyclic(p) => arith::is_prime(p) && p <= CYCLIC_MAX,
        };
        if ok {
            Ok(self)
        } else {
            Err(BruteError::Unsupported(self.to_string()))
        }
    }

    fn generators(self) -> Vec<Permutation> {
        let d = self.degree();
        let cycle = |pts: Vec<u16>| Permutation::from_cycles(d, &[&pts]).expect("points in range");
        match self {
            Builtin::Alt(n) => {
                let long = if n % 2 == 1 { (0..n as u16).collect() } else { (1..n as u16).collect() };
                vec![cycle(vec![0, 1, 2]), cycle(long)]
            }
            Builtin::Sym(n) => vec![cycle(vec![0, 1]), cycle((0..n as u16).collect())],
            Builtin::Cyclic(p) => vec![cycle((0..p as u16).collect())],
            Builtin::Psl2(q) => psl2_generators(q),
        }
    }

    pub fn composition_factors(self) -> Vec<Factor> {
        match self {
            Builtin::Alt(n) => vec![Factor::Simple(SimpleGroupId::alt(n))],
            Builtin::Sym(n) => vec![Factor::Simple(SimpleGroupId::alt(n)), Factor::Cyclic(2)],
            Builtin::Psl2(q) => vec![Factor::Simple(SimpleGroupId::psl(2, q))],
            Builtin::Cyclic(p) => vec![Factor::Cyclic(p)],
        }
    }

    pub fn simple_id(self) -> Option<SimpleGroupId> {
        match self {
            Builtin::Alt(n) => Some(SimpleGroupId::alt(n)),
            Builtin::Psl2(q) => Some(SimpleGroupId::psl(2, q)),
            _ => None,
        }
    }
}

/// Point `q` is ∞; field elements are points `0..q`.
fn psl2_generators(q: u64) -> Vec<Permutation> {
    let f = SmallField::new(q).expect("supported field");
    let q = f.order();
    let inf = q;
    let perm = |map: &dyn Fn(usize) -> usize| {
        Permutation::from_images((0..=q).map(|x| map(x) as u16).collect()).expect("Möbius maps are bijective")
    };
    let omega = f.primitive();
    let (_, deg) = arith::prime_power(q as u64).expect("prime power");
    let mut gens = Vec::new();
    let mut b = 1;
    for _ in 0..deg {
        gens.push(perm(&|x| if x == inf { inf } else { f.add(x, b) }));
        b = f.mul(b, omega);
    }
    let square = f.mul(omega, omega);
    gens.push(perm(&|x| if x == inf { inf } else { f.mul(square, x) }));
    gens.push(perm(&|x| {
        if x == inf {
            0
        } else if x == 0 {
            inf
        } else {
            f.neg(f.inv(x).expect("non-zero"))
        }
    }));
    gens
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Alt(n) => write!(f, "Alt:{n}"),
            Builtin::Sym(n) => write!(f, "Sym:{n}"),
            Builtin::Psl2(q) => write!(f, "Lie:A:2:{q}"),
            Builtin::Cyclic(p) => write!(f, "Cyclic:{p}"),
        }
    }
}

impl FromStr for Builtin {
    type Err = BruteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let num = |rest: &str| rest.parse::<u64>().map_err(|_| BruteError::Parse(format!("`{s}`: bad number")));
        let b = if let Some(rest) = s.strip_prefix("Sym:") {
            Builtin::Sym(num(rest)? as u32)
        } else if let Some(rest) = s.strip_prefix("Cyclic:") {
            Builtin::Cyclic(num(rest)?)
        } else {
            let id: SimpleGroupId = s.parse().map_err(|e| BruteError::Parse(format!("{e}")))?;
            Builtin::from_simple(&id)?
        };
        b.check()
    }
}

impl Builtin {
    pub fn from_simple(id: &SimpleGroupId) -> Result<Self, BruteError> {
        match *id {
            SimpleGroupId::Alt { n } => Builtin::Alt(n).check(),
            SimpleGroupId::Lie(g) if g.ty == LieType::A && g.n == 2 => Builtin::Psl2(g.q).check(),
            _ => Err(BruteError::Unsupported(id.to_string())),
        }
    }
}

/// Direct product of built-in groups on disjoint point sets, written with `*`,
/// e.g. `"Alt:5*Cyclic:7"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RealizationSpec {
    parts: Vec<Builtin>,
}

impl RealizationSpec {
    pub fn new(parts: Vec<Builtin>) -> Result<Self, BruteError> {
        if parts.is_empty() {
            return Err(BruteError::Parse("empty realization".to_string()));
        }
        let parts = parts.into_iter().map(Builtin::check).collect::<Result<Vec<_>, _>>()?;
        let degree: usize = parts.iter().map(|b| b.degree()).sum();
        if degree > MAX_DEGREE {
            return Err(BruteError::DegreeBound(degree));
        }
        Ok(RealizationSpec { parts })
    }

    pub fn parts(&self) -> &[Builtin] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().map(|b| b.degree()).sum()
    }

    /// The simple group realised, when there is a single simple part.
    pub fn simple_id(&self) -> Option<SimpleGroupId> {
        match self.parts.as_slice() {
            [b] => b.simple_id(),
            _ => None,
        }
    }

    pub fn composition_factors(&self) -> CompositionSpec {
        let factors = self.parts.iter().flat_map(|b| b.composition_factors()).collect();
        CompositionSpec::new(factors).expect("built-in factors are valid")
    }
}

impl fmt::Display for RealizationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(Builtin::to_string).collect();
        f.write_str(&parts.join("*"))
    }
}

impl FromStr for RealizationSpec {
    type Err = BruteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RealizationSpec::new(s.split('*').map(str::parse).collect::<Result<Vec<_>, _>>()?)
    }
}

impl Serialize for RealizationSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RealizationSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// The permutation group of a realization spec, without a Cayley table.
pub fn realize(spec: &RealizationSpec) -> Result<PermGroup, BruteError> {
    let degree = spec.degree();
    let mut gens = Vec::new();
    let mut offset = 0;
    for b in &spec.parts {
        gens.extend(b.generators().iter().map(|g| g.shifted(offset, degree)));
        offset += b.degree();
    }
    PermGroup::generate(degree, gens, ORDER_BOUND)
}

/// As [`realize`], with the Cayley table built when the order is within `bound`.
pub fn realize_with_table(spec: &RealizationSpec, bound: usize) -> Result<PermGroup, BruteError> {
    realize(spec)?.with_table(bound)
}
