//! Generator data files.
//!
//! ```text
//! # comment
//! label Sp(4,4)
//! field 2 2
//! dim 4
//! central 1 2          (optional: scalars factored out)
//! order 979200         (optional)
//!
//! 1 0 0 0
//! ...                  (one matrix per block, rows of integers mod p^f)
//! ```
//!
//! Permutation groups use `perm n` in place of `field`/`dim` and one generator per
//! block as a single line of 1-based images.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::GroupId;

use super::field::Field;
use super::rep::Rep;

/// Generators of a concrete group, with the identification of its label.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub label: GroupId,
    pub rep: Rep,
    pub generators: Vec<Vec<u8>>,
    pub expected_order: Option<BigUint>,
}

impl Presentation {
    pub fn new(label: GroupId, rep: Rep, generators: Vec<Vec<u8>>, expected_order: Option<BigUint>) -> Result<Presentation> {
        for g in &generators {
            rep.validate_element(g)?;
        }
        Ok(Presentation { label, rep, generators, expected_order })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("label {}\n", self.label);
        match &self.rep {
            Rep::Matrix { field, dim, central } => {
                out += &format!("field {} {}\ndim {}\n", field.p, field.f, dim);
                if !central.is_empty() {
                    let c: Vec<String> = central.iter().map(|x| x.to_string()).collect();
                    out += &format!("central {}\n", c.join(" "));
                }
            }
            Rep::Perm { n } => out += &format!("perm {n}\n"),
        }
        if let Some(o) = &self.expected_order {
            out += &format!("order {o}\n");
        }
        for g in &self.generators {
            out.push('\n');
            match &self.rep {
                Rep::Matrix { dim, .. } => {
                    for row in g.chunks(*dim) {
                        let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                        out += &r.join(" ");
                        out.push('\n');
                    }
                }
                Rep::Perm { .. } => {
                    let r: Vec<String> = g.iter().map(|x| (x + 1).to_string()).collect();
                    out += &r.join(" ");
                    out.push('\n');
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Presentation> {
        let mut label = None;
        let mut field = None;
        let mut dim = None;
        let mut perm = None;
        let mut central = Vec::new();
        let mut order = None;
        let mut blocks: Vec<Vec<Vec<u64>>> = Vec::new();
        let mut in_block = false;
        let err = |line: usize, msg: String| Error::Parse { pos: line + 1, msg };
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                in_block = false;
                continue;
            }
            let mut words = line.split_whitespace();
            let head = words.next().unwrap_or("");
            let nums = |ws: std::str::SplitWhitespace| -> Result<Vec<u64>> {
                ws.map(|w| w.parse::<u64>().map_err(|_| err(ln, format!("not an integer: {w}")))).collect()
            };
            match head {
                "label" => {
                    let spec = line["label".len()..].trim();
                    label = Some(spec.parse::<GroupId>().map_err(|e| err(ln, e.to_string()))?);
                }
                "field" => {
                    let v = nums(words)?;
                    if v.len() != 2 {
                        return Err(err(ln, "expected `field p f`".into()));
                    }
                    field = Some(Field::from_pf(v[0], v[1] as u32)?);
                }
                "dim" => dim = nums(words)?.first().copied(),
                "perm" => perm = nums(words)?.first().copied(),
                "central" => central = nums(words)?.into_iter().map(|x| x as u8).collect(),
                "order" => {
                    let w = words.next().ok_or_else(|| err(ln, "missing order".into()))?;
                    order = Some(w.parse::<BigUint>().map_err(|_| err(ln, format!("bad order {w}")))?);
                }
                _ => {
                    let row = nums(line.split_whitespace())?;
                    if !in_block {
                        blocks.push(Vec::new());
                        in_block = true;
                    }
                    blocks.last_mut().expect("block").push(row);
                }
            }
        }
        let label = label.ok_or_else(|| Error::Generators("missing label".into()))?;
        let (rep, generators) = match (field, dim, perm) {
            (Some(field), Some(d), None) => {
                let d = d as usize;
                let q = field.q as u64;
                let mut gens = Vec::new();
                for b in &blocks {
                    if b.len() != d || b.iter().any(|r| r.len() != d) {
                        return Err(Error::Generators(format!("matrix block is not {d}x{d}")));
                    }
                    if b.iter().flatten().any(|&x| x >= q) {
                        return Err(Error::Generators("matrix entry out of range".into()));
                    }
                    gens.push(b.iter().flatten().map(|&x| x as u8).collect());
                }
                (Rep::matrix(field, d, central)?, gens)
            }
            (None, None, Some(n)) => {
                let mut gens = Vec::new();
                for b in &blocks {
                    let images: Vec<u64> = b.iter().flatten().copied().collect();
                    if images.len() != n as usize || images.iter().any(|&x| x == 0 || x > n) {
                        return Err(Error::Generators(format!("permutation block is not on 1..{n}")));
                    }
                    gens.push(images.iter().map(|&x| (x - 1) as u8).collect());
                }
                (Rep::perm(n as usize)?, gens)
            }
            _ => return Err(Error::Generators("need either `field`+`dim` or `perm`".into())),
        };
        Presentation::new(label, rep, generators, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "label L(2,5)\nfield 5 1\ndim 2\ncentral 1 4\norder 60\n\n1 1\n0 1\n\n1 0\n1 1\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.generators.len(), 2);
        assert_eq!(p.to_text(), text);
        let perm = "label A(4)\nperm 4\n\n2 3 1 4\n\n1 3 4 2\n";
        assert_eq!(Presentation::parse(perm).unwrap().to_text(), perm);
    }

    #[test]
    fn rejects_bad_data() {
        assert!(Presentation::parse("label A(4)\nfield 5 1\ndim 2\n\n1 1\n").is_err());
        assert!(Presentation::parse("label A(4)\nfield 5 1\ndim 2\n\n1 0\n0 0\n").is_err());
        assert!(Presentation::parse("label A(4)\nperm 3\n\n1 1 2\n").is_err());
        assert!(matches!(Presentation::parse("label A(4)\nfield 5 x\n"), Err(Error::Parse { pos: 2, .. })));
    }
}
