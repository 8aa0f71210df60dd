//! Finite fields of order at most 11, as lookup tables.

use crate::arith;

use super::BruteError;

/// `F_q` with elements `0..q` encoded as base-`p` digit vectors of a
/// polynomial modulo a fixed irreducible.
pub struct SmallField {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

/// Monic irreducible `x^f + c_{f-1}x^{f-1} + … + c_0`, lowest coefficient first.
fn modulus(q: u64) -> Option<&'static [u8]> {
    match q {
        4 => Some(&[1, 1]),    // x² + x + 1
        8 => Some(&[1, 1, 0]), // x³ + x + 1
        9 => Some(&[1, 0]),    // x² + 1
        _ => None,
    }
}

impl SmallField {
    pub fn new(q: u64) -> Result<Self, BruteError> {
        let (p, f) = arith::prime_power(q).ok_or(BruteError::Unsupported(format!("F_{q}")))?;
        if q > 11 {
            return Err(BruteError::Unsupported(format!("F_{q}")));
        }
        let (p, f, qs) = (p as usize, f as usize, q as usize);
        let digits = |x: usize| -> Vec<usize> { (0..f).map(|i| (x / p.pow(i as u32)) % p).collect() };
        let encode = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let tail: Vec<usize> = match modulus(q) {
            Some(m) => m.iter().map(|&c| c as usize).collect(),
            None => vec![0],
        };
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..qs {
            for b in 0..qs {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = encode(&sum) as u8;
                let mut prod = vec![0usize; 2 * f];
                for i in 0..f {
                    for j in 0..f {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                // x^k = -tail(x) · x^{k-f}
                for k in (f..2 * f).rev() {
                    let c = prod[k];
                    prod[k] = 0;
                    for (i, &t) in tail.iter().enumerate() {
                        prod[k - f + i] = (prod[k - f + i] + (p - t) * c) % p;
                    }
                }
                mul[a * qs + b] = encode(&prod[..f]) as u8;
            }
        }
        Ok(SmallField { q: qs, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("additive inverse exists")
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> usize {
        (2..self.q)
            .find(|&g| {
                let mut x = g;
                let mut k = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    k += 1;
                }
                k == self.q - 1
            })
            .unwrap_or(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11] {
            let f = SmallField::new(q).unwrap();
            let n = f.order();
            for a in 0..n {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
                }
                for b in 0..n {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..n {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)), "q={q}");
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c), "q={q}");
                    }
                }
            }
            // primitive element generates all nonzero elements
            let g = f.primitive();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1;
            for _ in 0..n - 1 {
                seen.insert(x);
                x = f.mul(x, g);
            }
            assert_eq!(seen.len(), n - 1, "q={q}");
        }
    }

    #[test]
    fn rejects_unsupported_orders() {
        assert!(SmallField::new(6).is_err());
        assert!(SmallField::new(13).is_err());
    }
}
