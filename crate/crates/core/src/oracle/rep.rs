//! Concrete group elements: matrices over a small field, or permutations.
//! Elements are byte vectors; each representation packs them into a `u128` key.

use crate::error::{Error, Result};

use super::field::Field;

#[derive(Clone, Debug)]
pub enum Rep {
    /// `dim × dim` matrices, row-major; `central` lists scalars `λ` such that `λI` is
    /// factored out (elements are identified up to these scalars).
    Matrix { field: Field, dim: usize, central: Vec<u8> },
    /// Permutations of `0..n` as image arrays.
    Perm { n: usize },
}

impl Rep {
    pub fn matrix(field: Field, dim: usize, central: Vec<u8>) -> Result<Rep> {
        let bits = (field.q as f64).log2() * (dim * dim) as f64;
        if bits > 128.0 {
            return Err(Error::Unsupported(format!("{dim}x{dim} matrices over GF({}) do not fit a 128-bit key", field.q)));
        }
        Ok(Rep::Matrix { field, dim, central })
    }

    pub fn perm(n: usize) -> Result<Rep> {
        if n == 0 || n > 32 {
            return Err(Error::Unsupported(format!("permutation degree {n}")));
        }
        Ok(Rep::Perm { n })
    }

    pub fn len(&self) -> usize {
        match self {
            Rep::Matrix { dim, .. } => dim * dim,
            Rep::Perm { n } => *n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn identity(&self) -> Vec<u8> {
        match self {
            Rep::Matrix { dim, .. } => {
                let mut m = vec![0u8; dim * dim];
                for i in 0..*dim {
                    m[i * dim + i] = 1;
                }
                m
            }
            Rep::Perm { n } => (0..*n as u8).collect(),
        }
    }

    /// `out = a · b`. Matrices act on column vectors; permutations compose as
    /// "apply `b` first, then `a`" so both conventions agree with function composition.
    pub fn mul_into(&self, a: &[u8], b: &[u8], out: &mut [u8]) {
        match self {
            Rep::Matrix { field, dim, .. } => {
                let d = *dim;
                if field.is_prime_field() {
                    let p = field.p as u32;
                    for i in 0..d {
                        for j in 0..d {
                            let mut acc = 0u32;
                            for k in 0..d {
                                acc += a[i * d + k] as u32 * b[k * d + j] as u32;
                            }
                            out[i * d + j] = (acc % p) as u8;
                        }
                    }
                } else {
                    for i in 0..d {
                        for j in 0..d {
                            let mut acc = 0u8;
                            for k in 0..d {
                                acc = field.add(acc, field.mul(a[i * d + k], b[k * d + j]));
                            }
                            out[i * d + j] = acc;
                        }
                    }
                }
            }
            Rep::Perm { n } => {
                for x in 0..*n {
                    out[x] = a[b[x] as usize];
                }
            }
        }
    }

    pub fn mul(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; self.len()];
        self.mul_into(a, b, &mut out);
        out
    }

    fn base(&self) -> u64 {
        match self {
            Rep::Matrix { field, .. } => field.q as u64,
            Rep::Perm { n } => *n as u64,
        }
    }

    /// Digits per 64-bit chunk, and `base^chunk`.
    fn chunking(&self) -> (usize, u64) {
        let base = self.base();
        let mut c = 0;
        let mut pow: u64 = 1;
        while let Some(next) = pow.checked_mul(base) {
            pow = next;
            c += 1;
        }
        (c, pow)
    }

    fn raw_key(&self, a: &[u8]) -> u128 {
        let base = self.base();
        let (c, pow) = self.chunking();
        let mut key: u128 = 0;
        for chunk in a.rchunks(c) {
            let v = chunk.iter().rev().fold(0u64, |acc, &x| acc * base + x as u64);
            let width = if chunk.len() == c { pow } else { base.pow(chunk.len() as u32) };
            key = key * width as u128 + v as u128;
        }
        key
    }

    /// Key of the element modulo the central scalars: the least key among `λa`.
    pub fn key(&self, a: &[u8]) -> u128 {
        match self {
            Rep::Matrix { field, central, .. } if !central.is_empty() => {
                let mut best = self.raw_key(a);
                let mut scaled = vec![0u8; a.len()];
                for &lambda in central {
                    for (s, &x) in scaled.iter_mut().zip(a) {
                        *s = field.mul(lambda, x);
                    }
                    best = best.min(self.raw_key(&scaled));
                }
                best
            }
            _ => self.raw_key(a),
        }
    }

    pub fn decode(&self, key: u128) -> Vec<u8> {
        let mut out = vec![0u8; self.len()];
        self.decode_into(key, &mut out);
        out
    }

    pub fn decode_into(&self, mut key: u128, out: &mut [u8]) {
        let base = self.base();
        let (c, pow) = self.chunking();
        for chunk in out.chunks_mut(c) {
            let width = if chunk.len() == c { pow } else { base.pow(chunk.len() as u32) };
            let mut v = (key % width as u128) as u64;
            key /= width as u128;
            for slot in chunk.iter_mut() {
                *slot = (v % base) as u8;
                v /= base;
            }
        }
    }

    pub fn is_identity(&self, a: &[u8]) -> bool {
        self.key(a) == self.key(&self.identity())
    }

    /// Inverse of a matrix (Gauss–Jordan) or permutation; `None` if singular.
    pub fn inverse(&self, a: &[u8]) -> Option<Vec<u8>> {
        match self {
            Rep::Perm { n } => {
                let mut out = vec![0u8; *n];
                for (x, &y) in a.iter().enumerate() {
                    out[y as usize] = x as u8;
                }
                Some(out)
            }
            Rep::Matrix { field, dim, .. } => {
                let d = *dim;
                let mut m = a.to_vec();
                let mut inv = self.identity();
                for col in 0..d {
                    let pivot = (col..d).find(|&r| m[r * d + col] != 0)?;
                    if pivot != col {
                        for j in 0..d {
                            m.swap(pivot * d + j, col * d + j);
                            inv.swap(pivot * d + j, col * d + j);
                        }
                    }
                    let s = field.inv(m[col * d + col])?;
                    for j in 0..d {
                        m[col * d + j] = field.mul(s, m[col * d + j]);
                        inv[col * d + j] = field.mul(s, inv[col * d + j]);
                    }
                    for r in 0..d {
                        let c = m[r * d + col];
                        if r != col && c != 0 {
                            let nc = field.neg(c);
                            for j in 0..d {
                                m[r * d + j] = field.add(m[r * d + j], field.mul(nc, m[col * d + j]));
                                inv[r * d + j] = field.add(inv[r * d + j], field.mul(nc, inv[col * d + j]));
                            }
                        }
                    }
                }
                Some(inv)
            }
        }
    }

    /// Order of `a` modulo the centre, or `None` past `cap`.
    pub fn element_order(&self, a: &[u8], cap: u64) -> Option<u64> {
        let id = self.key(&self.identity());
        let mut x = a.to_vec();
        let mut tmp = vec![0u8; a.len()];
        for k in 1..=cap {
            if self.key(&x) == id {
                return Some(k);
            }
            self.mul_into(&x, a, &mut tmp);
            std::mem::swap(&mut x, &mut tmp);
        }
        None
    }

    pub fn validate_element(&self, a: &[u8]) -> Result<()> {
        if a.len() != self.len() {
            return Err(Error::Generators(format!("element has {} entries, expected {}", a.len(), self.len())));
        }
        match self {
            Rep::Matrix { field, .. } => {
                if a.iter().any(|&x| x as usize >= field.q) {
                    return Err(Error::Generators("matrix entry outside the field".into()));
                }
                if self.inverse(a).is_none() {
                    return Err(Error::Generators("singular generator".into()));
                }
            }
            Rep::Perm { n } => {
                let mut seen = vec![false; *n];
                for &x in a {
                    if x as usize >= *n || std::mem::replace(&mut seen[x as usize], true) {
                        return Err(Error::Generators("not a permutation".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_order() {
        let rep = Rep::matrix(Field::new(5).unwrap(), 2, vec![1, 4]).unwrap();
        let x = vec![1, 1, 0, 1];
        let xi = rep.inverse(&x).unwrap();
        assert!(rep.is_identity(&rep.mul(&x, &xi)));
        assert_eq!(rep.element_order(&x, 100), Some(5));
        // [[0,1],[-1,0]] has order 4 in SL_2(5), 2 modulo ±I
        assert_eq!(rep.element_order(&[0, 1, 4, 0], 100), Some(2));
        let d = rep.decode(rep.key(&[0, 1, 4, 0]));
        assert!(d == vec![0, 1, 4, 0] || d == vec![0, 4, 1, 0]);
    }

    #[test]
    fn perm_composition() {
        let rep = Rep::perm(4).unwrap();
        let a = vec![1, 2, 3, 0];
        assert_eq!(rep.element_order(&a, 10), Some(4));
        let inv = rep.inverse(&a).unwrap();
        assert!(rep.is_identity(&rep.mul(&a, &inv)));
        assert!(rep.validate_element(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn key_width() {
        assert!(Rep::matrix(Field::new(3).unwrap(), 7, vec![]).is_ok());
        assert!(Rep::matrix(Field::new(4).unwrap(), 8, vec![]).is_ok());
        assert!(Rep::matrix(Field::new(5).unwrap(), 8, vec![]).is_err());
    }
}
