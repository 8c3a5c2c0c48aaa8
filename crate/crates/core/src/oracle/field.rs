//! Small finite fields `GF(p^f)` with full addition and multiplication tables.
//!
//! Element `a_0 + a_1 ω + … + a_{f-1} ω^{f-1}` is stored as the integer
//! `a_0 + a_1 p + … + a_{f-1} p^{f-1}`, where `ω` is a root of the least monic
//! irreducible polynomial of degree `f` (coefficients compared lexicographically
//! from the constant term upward).

use crate::error::{Error, Result};
use crate::numtheory::is_prime;

pub const MAX_Q: u64 = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    pub p: u64,
    pub f: u32,
    pub q: usize,
    /// Coefficients `c_0..c_{f-1}` of the modulus `x^f + Σ c_i x^i`.
    pub modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

fn digits(mut a: usize, p: usize, f: usize) -> Vec<usize> {
    let mut d = vec![0; f];
    for slot in d.iter_mut() {
        *slot = a % p;
        a /= p;
    }
    d
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Polynomial product modulo `x^f + Σ c_i x^i` over `F_p`.
fn poly_mul(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let f = modulus.len();
    let mut prod = vec![0; 2 * f];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (f..2 * f).rev() {
        let c = prod[k];
        if c != 0 {
            prod[k] = 0;
            for (i, &m) in modulus.iter().enumerate() {
                prod[k - f + i] = (prod[k - f + i] + (p - m) * c) % p;
            }
        }
    }
    prod.truncate(f);
    prod
}

/// The quotient ring is a field exactly when every nonzero element is invertible.
fn is_field_modulus(modulus: &[usize], p: usize) -> bool {
    let f = modulus.len();
    let q = p.pow(f as u32);
    for a in 1..q {
        let da = digits(a, p, f);
        let invertible = (1..q).any(|b| {
            let prod = poly_mul(&da, &digits(b, p, f), modulus, p);
            undigits(&prod, p) == 1
        });
        if !invertible {
            return false;
        }
    }
    true
}

impl Field {
    pub fn new(q: u64) -> Result<Field> {
        let (p, f) = crate::numtheory::prime_power(q)
            .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        if q > MAX_Q {
            return Err(Error::Unsupported(format!("field size {q} exceeds {MAX_Q}")));
        }
        debug_assert!(is_prime(p));
        let (pu, fu, qu) = (p as usize, f as usize, q as usize);
        let modulus: Vec<usize> = if fu == 1 {
            vec![0]
        } else {
            (0..qu)
                .map(|c| digits(c, pu, fu))
                .find(|m| is_field_modulus(m, pu))
                .ok_or_else(|| Error::Arithmetic(format!("no irreducible polynomial for q = {q}")))?
        };
        let mut add = vec![0u8; qu * qu];
        let mut mul = vec![0u8; qu * qu];
        for a in 0..qu {
            let da = digits(a, pu, fu);
            for b in 0..qu {
                let db = digits(b, pu, fu);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % pu).collect();
                add[a * qu + b] = undigits(&s, pu) as u8;
                mul[a * qu + b] = if fu == 1 { ((a * b) % pu) as u8 } else { undigits(&poly_mul(&da, &db, &modulus, pu), pu) as u8 };
            }
        }
        let mut neg = vec![0u8; qu];
        let mut inv = vec![0u8; qu];
        for a in 0..qu {
            neg[a] = (0..qu).find(|&b| add[a * qu + b] == 0).unwrap_or(0) as u8;
            if a != 0 {
                inv[a] = (1..qu).find(|&b| mul[a * qu + b] == 1).unwrap_or(0) as u8;
            }
        }
        Ok(Field { p, f, q: qu, modulus: modulus.into_iter().map(|x| x as u8).collect(), add, mul, neg, inv })
    }

    pub fn from_pf(p: u64, f: u32) -> Result<Field> {
        if !is_prime(p) || f == 0 {
            return Err(Error::InvalidArgument(format!("field p={p} f={f}")));
        }
        let q = p.checked_pow(f).filter(|&q| q <= MAX_Q).ok_or_else(|| Error::Unsupported(format!("field {p}^{f} too large")))?;
        Field::new(q)
    }

    pub fn is_prime_field(&self) -> bool {
        self.f == 1
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// The generator `ω` of the polynomial basis (equal to 1 for prime fields).
    pub fn omega(&self) -> u8 {
        if self.f == 1 {
            1
        } else {
            self.p as u8
        }
    }

    /// Nonzero scalars `λ` with `λ^k = 1`.
    pub fn roots_of_unity(&self, k: u64) -> Vec<u8> {
        (1..self.q as u8)
            .filter(|&a| {
                let mut x = 1u8;
                for _ in 0..k {
                    x = self.mul(x, a);
                }
                x == 1
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32] {
            let k = Field::new(q).unwrap();
            for a in 0..q as u8 {
                assert_eq!(k.add(a, k.neg(a)), 0);
                if a != 0 {
                    assert_eq!(k.mul(a, k.inv(a).unwrap()), 1);
                }
                for b in 0..q as u8 {
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    for c in [0u8, 1, (q - 1) as u8] {
                        assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn gf4_and_gf25() {
        let k = Field::new(4).unwrap();
        assert_eq!(k.modulus, vec![1, 1]);
        let w = k.omega();
        assert_eq!(k.add(k.mul(w, w), k.add(w, 1)), 0);
        assert_eq!(Field::new(25).unwrap().roots_of_unity(2).len(), 2);
        assert!(Field::new(6).is_err());
        assert!(Field::new(49).is_err());
    }
}
