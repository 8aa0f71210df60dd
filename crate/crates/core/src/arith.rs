//! Number-theoretic primitives: primality, factorisation into prime sets,
//! multiplicative orders and `r`-parts.
//!
//! Group orders are handled as [`BigUint`]; the primes that occur in them are
//! always small enough to be stored as `u64`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("expected a positive integer, got 0")]
    Zero,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is even; an odd prime is required")]
    EvenModulus(u64),
    #[error("{r} divides {q}; the multiplicative order is undefined")]
    NotCoprime { q: u64, r: u64 },
    #[error("{0} is even; an odd integer is required")]
    EvenArgument(u64),
    #[error("duplicate prime {0} in prime list")]
    DuplicatePrime(u64),
    #[error("prime factor exceeds 64 bits")]
    PrimeTooLarge,
    #[error("factorisation budget exhausted on a {0}-bit cofactor")]
    FactorBudget(u64),
    #[error("cannot parse prime list: {0}")]
    Parse(String),
}

/// A finite set of primes, kept sorted and free of duplicates.
///
/// Only membership is ever asked of the complement, so `π′` is never
/// materialised.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PrimeSet(Vec<u64>);

impl PrimeSet {
    pub fn empty() -> Self {
        PrimeSet(Vec::new())
    }

    /// Builds a set from arbitrary primes; duplicates are merged.
    pub fn new<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self, ArithError> {
        let mut set = BTreeSet::new();
        for p in primes {
            if !is_prime(p) {
                return Err(ArithError::NotPrime(p));
            }
            set.insert(p);
        }
        Ok(PrimeSet(set.into_iter().collect()))
    }

    /// Like [`PrimeSet::new`] but rejects repeated entries.
    pub fn from_list(primes: &[u64]) -> Result<Self, ArithError> {
        let mut seen = BTreeSet::new();
        for &p in primes {
            if !seen.insert(p) {
                return Err(ArithError::DuplicatePrime(p));
            }
        }
        Self::new(primes.iter().copied())
    }

    /// Primes `p` with `p <= bound`.
    pub fn primes_up_to(bound: u64) -> Self {
        PrimeSet((2..=bound).filter(|&p| is_prime(p)).collect())
    }

    fn from_sorted_unchecked(v: Vec<u64>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        PrimeSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u64> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn smallest(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.0.iter().all(|&p| other.contains(p))
    }

    pub fn is_disjoint(&self, other: &PrimeSet) -> bool {
        self.0.iter().all(|&p| !other.contains(p))
    }

    pub fn intersection(&self, other: &PrimeSet) -> PrimeSet {
        Self::from_sorted_unchecked(self.0.iter().copied().filter(|&p| other.contains(p)).collect())
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        let merged: BTreeSet<u64> = self.0.iter().chain(other.0.iter()).copied().collect();
        Self::from_sorted_unchecked(merged.into_iter().collect())
    }

    pub fn difference(&self, other: &PrimeSet) -> PrimeSet {
        Self::from_sorted_unchecked(self.0.iter().copied().filter(|&p| !other.contains(p)).collect())
    }

    pub fn without(&self, p: u64) -> PrimeSet {
        Self::from_sorted_unchecked(self.0.iter().copied().filter(|&x| x != p).collect())
    }

    /// Every subset, in order of the bitmask over the sorted elements.
    pub fn subsets(&self) -> impl Iterator<Item = PrimeSet> + '_ {
        assert!(self.0.len() < 32, "too many primes to enumerate subsets");
        (0u32..(1 << self.0.len())).map(move |mask| {
            Self::from_sorted_unchecked(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &p)| p)
                    .collect(),
            )
        })
    }

    /// Ordered pairs `(σ, τ)` of non-empty disjoint sets with `σ ∪ τ = self`.
    pub fn bipartitions(&self) -> Vec<(PrimeSet, PrimeSet)> {
        self.subsets()
            .filter(|s| !s.is_empty() && s.len() < self.len())
            .map(|s| {
                let rest = self.difference(&s);
                (s, rest)
            })
            .collect()
    }

    /// The `π`-part of `n`: the largest divisor of `n` whose primes lie in `self`.
    pub fn part_of(&self, n: &BigUint) -> BigUint {
        self.0
            .iter()
            .fold(BigUint::one(), |acc, &p| acc * r_part(n, p).expect("n is positive"))
    }

    /// `π`-part for machine-size integers.
    pub fn part_of_u64(&self, mut n: u64) -> u64 {
        let mut part = 1;
        for &p in &self.0 {
            while n.is_multiple_of(p) {
                n /= p;
                part *= p;
            }
        }
        part
    }

    /// Whether every prime divisor of `n` lies in the set.
    pub fn is_pi_number(&self, n: u64) -> bool {
        assert!(n > 0);
        self.part_of_u64(n) == n
    }
}

impl TryFrom<Vec<u64>> for PrimeSet {
    type Error = ArithError;

    fn try_from(v: Vec<u64>) -> Result<Self, Self::Error> {
        PrimeSet::from_list(&v)
    }
}

impl From<PrimeSet> for Vec<u64> {
    fn from(s: PrimeSet) -> Self {
        s.0
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Parses a comma-separated list such as `2,3,7`. Duplicates are an error;
/// the empty string is the empty set.
impl FromStr for PrimeSet {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        if s.trim().is_empty() {
            return Ok(PrimeSet::empty());
        }
        let mut primes = Vec::new();
        for (i, tok) in s.split(',').enumerate() {
            let tok = tok.trim();
            let p: u64 = tok
                .parse()
                .map_err(|_| ArithError::Parse(format!("item {} ({tok:?}) is not a decimal integer", i + 1)))?;
            if !is_prime(p) {
                return Err(ArithError::Parse(format!("item {} ({p}) is not a prime", i + 1)));
            }
            if primes.contains(&p) {
                return Err(ArithError::Parse(format!("item {} duplicates prime {p}", i + 1)));
            }
            primes.push(p);
        }
        PrimeSet::from_list(&primes)
    }
}

impl FromIterator<u64> for PrimeSet {
    /// Panics on non-primes; intended for literals in tests and static tables.
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        PrimeSet::new(iter).expect("all elements must be prime")
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// The first 13 primes are a deterministic Miller-Rabin witness set below
// 3_317_044_064_679_887_385_961_981.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const MR_EXTRA_BASES: [u64; 7] = [43, 47, 53, 59, 61, 67, 71];

/// Deterministic primality test for machine integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES[..12] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin on big integers. Exact below 3.3·10²⁴; above that the
/// extended witness set makes it a strong probable-prime test.
pub fn is_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    for &p in MR_BASES.iter().chain(MR_EXTRA_BASES.iter()) {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n > 1");
    let d = &n_minus_1 >> s;
    'witness: for &a in MR_BASES.iter().chain(MR_EXTRA_BASES.iter()) {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

const POLLARD_BUDGET: u64 = 1 << 22;

fn pollard_brent_u64(n: u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    for c in 1..64u64 {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut steps = 0u64;
        while g == 1 && steps < POLLARD_BUDGET {
            x = f(x);
            y = f(f(y));
            g = x.abs_diff(y).gcd(&n);
            steps += 1;
        }
        if g != 1 && g != n {
            return Some(g);
        }
    }
    None
}

fn pollard_brent_big(n: &BigUint) -> Option<BigUint> {
    let one = BigUint::one();
    for c in 1..16u32 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = one.clone();
        let mut g = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m = 128u64;
        let mut spent = 0u64;
        while g == one && spent < POLLARD_BUDGET {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            spent += r;
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != one && g != *n {
            return Some(g);
        }
    }
    None
}

fn collect_factors_u64(n: u64, out: &mut BTreeSet<u64>) -> Result<(), ArithError> {
    if n == 1 {
        return Ok(());
    }
    if is_prime(n) {
        out.insert(n);
        return Ok(());
    }
    let d = pollard_brent_u64(n).ok_or(ArithError::FactorBudget(64 - n.leading_zeros() as u64))?;
    collect_factors_u64(d, out)?;
    collect_factors_u64(n / d, out)
}

fn collect_factors_big(n: &BigUint, out: &mut BTreeSet<u64>) -> Result<(), ArithError> {
    if let Some(small) = n.to_u64() {
        return collect_factors_u64(small, out);
    }
    if is_prime_big(n) {
        return Err(ArithError::PrimeTooLarge);
    }
    let d = pollard_brent_big(n).ok_or(ArithError::FactorBudget(n.bits()))?;
    collect_factors_big(&d, out)?;
    collect_factors_big(&(n / &d), out)
}

/// The set of primes dividing `n`; empty for `n = 1`.
pub fn prime_divisors(n: u64) -> Result<PrimeSet, ArithError> {
    if n == 0 {
        return Err(ArithError::Zero);
    }
    let mut out = BTreeSet::new();
    let mut m = n;
    for p in 2..1000u64 {
        if m.is_multiple_of(p) {
            out.insert(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        if p * p > m {
            break;
        }
    }
    collect_factors_u64(m, &mut out)?;
    Ok(PrimeSet(out.into_iter().collect()))
}

/// [`prime_divisors`] for big integers. Fails if some prime factor does not
/// fit in 64 bits or if a cofactor resists Pollard-Brent within its budget.
pub fn prime_divisors_big(n: &BigUint) -> Result<PrimeSet, ArithError> {
    if n.is_zero() {
        return Err(ArithError::Zero);
    }
    if let Some(small) = n.to_u64() {
        return prime_divisors(small);
    }
    let mut out = BTreeSet::new();
    let mut m = n.clone();
    for p in 2..10_000u64 {
        if !is_prime(p) {
            continue;
        }
        if (&m % p).is_zero() {
            out.insert(p);
            while (&m % p).is_zero() {
                m /= p;
            }
        }
    }
    collect_factors_big(&m, &mut out)?;
    Ok(PrimeSet(out.into_iter().collect()))
}

/// `e(q, r)`: the least `e ≥ 1` with `q^e ≡ 1 (mod r)`, for an odd prime `r`
/// not dividing `q`.
pub fn mult_order(q: u64, r: u64) -> Result<u64, ArithError> {
    if r.is_multiple_of(2) {
        return Err(ArithError::EvenModulus(r));
    }
    if !is_prime(r) {
        return Err(ArithError::NotPrime(r));
    }
    if q.is_multiple_of(r) {
        return Err(ArithError::NotCoprime { q, r });
    }
    let mut e = r - 1;
    for l in prime_divisors(r - 1)?.iter() {
        while e.is_multiple_of(l) && pow_mod(q, e / l, r) == 1 {
            e /= l;
        }
    }
    Ok(e)
}

/// `(m)_r`: the largest power of the prime `r` dividing `m`.
pub fn r_part(m: &BigUint, r: u64) -> Result<BigUint, ArithError> {
    if m.is_zero() {
        return Err(ArithError::Zero);
    }
    if !is_prime(r) {
        return Err(ArithError::NotPrime(r));
    }
    let mut rest = m.clone();
    let mut part = BigUint::one();
    loop {
        let (quot, rem) = rest.div_rem(&BigUint::from(r));
        if !rem.is_zero() {
            return Ok(part);
        }
        rest = quot;
        part *= r;
    }
}

/// `(q^(r-1) - 1)_r == r`, decided modulo `r²` so it never materialises `q^(r-1)`.
pub fn r_part_of_fermat_quotient_is_r(q: u64, r: u64) -> bool {
    let r2 = r as u128 * r as u128;
    let mut acc: u128 = 1;
    let mut base = q as u128 % r2;
    let mut exp = r - 1;
    // r2 < 2^64 for every prime handled here, so the products fit in u128.
    assert!(r2 < (1u128 << 64), "prime too large for the modular r-part test");
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % r2;
        }
        base = base * base % r2;
        exp >>= 1;
    }
    acc % r as u128 == 1 && acc != 1
}

/// True iff `t` is a prime of the form `2^k + 1`.
pub fn is_fermat_prime(t: u64) -> bool {
    t >= 2 && (t - 1).is_power_of_two() && is_prime(t)
}

/// `ε ∈ {+1, -1}` with `q ≡ ε (mod 4)`.
pub fn eps_mod4(q: u64) -> Result<i8, ArithError> {
    match q % 4 {
        1 => Ok(1),
        3 => Ok(-1),
        _ => Err(ArithError::EvenArgument(q)),
    }
}

/// `p^f` decomposition of a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let primes = prime_divisors(q).ok()?;
    if primes.len() != 1 {
        return None;
    }
    let p = primes.smallest()?;
    let mut f = 0;
    let mut m = q;
    while m.is_multiple_of(p) {
        m /= p;
        f += 1;
    }
    Some((p, f))
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}
