//! Symbolic group identifiers and the textual group-spec grammar.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! spec := name [ '(' arg { ',' arg } ')' ]
//! arg  := integer | spec
//! ```
//!
//! Examples: `A(10)`, `Sp(8,2)`, `POmega+(8,3)`, `O-(8,2)`, `M11`,
//! `Sk-x-Sn-k(7,10)`, `P(1,L(6,2))`, `Sp2Ext(5)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numtheory::prime_power;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sporadic {
    M11,
    M12,
    M22,
    M23,
    M24,
    HS,
    McL,
    Co2,
    Co3,
    /// The Tits group `2F4(2)'`.
    Tits,
}

impl Sporadic {
    pub const ALL: [Sporadic; 10] = [
        Sporadic::M11,
        Sporadic::M12,
        Sporadic::M22,
        Sporadic::M23,
        Sporadic::M24,
        Sporadic::HS,
        Sporadic::McL,
        Sporadic::Co2,
        Sporadic::Co3,
        Sporadic::Tits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sporadic::M11 => "M11",
            Sporadic::M12 => "M12",
            Sporadic::M22 => "M22",
            Sporadic::M23 => "M23",
            Sporadic::M24 => "M24",
            Sporadic::HS => "HS",
            Sporadic::McL => "McL",
            Sporadic::Co2 => "Co2",
            Sporadic::Co3 => "Co3",
            Sporadic::Tits => "2F4(2)'",
        }
    }
}

/// Which group in the isogeny/extension chain of a classical family is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    /// The simple (projective) quotient: `L`, `U`, `PSp`, `Ω_{odd}`, `PΩ`.
    Simple,
    /// The quasisimple matrix group: `SL`, `SU`, `Sp`, `Ω`.
    Omega,
    /// The full isometry group: `GL`, `GU`, `O`.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Alternating { n: u32 },
    Symmetric { n: u32 },
    /// `sign = Minus` is the unitary family.
    Linear { dim: u32, q: u64, sign: Sign },
    Symplectic { dim: u32, q: u64 },
    OrthogonalOdd { dim: u32, q: u64 },
    OrthogonalEven { dim: u32, q: u64, sign: Sign },
    G2 { q: u64 },
    Sporadic(Sporadic),
    /// `(S_k × S_{n-k}) ∩ A_n`.
    DirectFactorIntersection { k: u32, n: u32 },
    /// Maximal parabolic obtained by deleting Dynkin node `node` of `host`.
    Parabolic { host: Box<GroupId>, node: u32 },
    /// Subgroup of type `Sp_2(q^2)` (i.e. `Sp_2(q^2).2`) in `PSp_4(q)`.
    ExtensionFieldSymplectic { q: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId {
    pub family: Family,
    pub flavor: Flavor,
}

impl GroupId {
    fn simple(family: Family) -> GroupId {
        GroupId { family, flavor: Flavor::Simple }
    }

    pub fn alternating(n: u32) -> GroupId {
        GroupId::simple(Family::Alternating { n })
    }

    pub fn symmetric(n: u32) -> GroupId {
        GroupId::simple(Family::Symmetric { n })
    }

    pub fn linear(dim: u32, q: u64) -> GroupId {
        GroupId::simple(Family::Linear { dim, q, sign: Sign::Plus })
    }

    pub fn unitary(dim: u32, q: u64) -> GroupId {
        GroupId::simple(Family::Linear { dim, q, sign: Sign::Minus })
    }

    /// `PSp_dim(q)`; equal to `Sp_dim(q)` for even `q`.
    pub fn symplectic(dim: u32, q: u64) -> GroupId {
        GroupId::simple(Family::Symplectic { dim, q })
    }

    /// The matrix group `Sp_dim(q)`.
    pub fn symplectic_matrix(dim: u32, q: u64) -> GroupId {
        GroupId { family: Family::Symplectic { dim, q }, flavor: Flavor::Omega }.normalized()
    }

    pub fn omega_odd(dim: u32, q: u64) -> GroupId {
        GroupId::simple(Family::OrthogonalOdd { dim, q })
    }

    pub fn orthogonal_odd_full(dim: u32, q: u64) -> GroupId {
        GroupId { family: Family::OrthogonalOdd { dim, q }, flavor: Flavor::Full }
    }

    /// `PΩ^ε_dim(q)`.
    pub fn omega_even(dim: u32, q: u64, sign: Sign) -> GroupId {
        GroupId::simple(Family::OrthogonalEven { dim, q, sign })
    }

    /// The matrix group `Ω^ε_dim(q)`.
    pub fn omega_even_matrix(dim: u32, q: u64, sign: Sign) -> GroupId {
        GroupId { family: Family::OrthogonalEven { dim, q, sign }, flavor: Flavor::Omega }.normalized()
    }

    /// The full isometry group `O^ε_dim(q)`.
    pub fn orthogonal_full(dim: u32, q: u64, sign: Sign) -> GroupId {
        GroupId { family: Family::OrthogonalEven { dim, q, sign }, flavor: Flavor::Full }
    }

    pub fn g2(q: u64) -> GroupId {
        GroupId::simple(Family::G2 { q })
    }

    pub fn sporadic(s: Sporadic) -> GroupId {
        GroupId::simple(Family::Sporadic(s))
    }

    pub fn intransitive(k: u32, n: u32) -> GroupId {
        GroupId::simple(Family::DirectFactorIntersection { k, n })
    }

    pub fn parabolic(host: GroupId, node: u32) -> GroupId {
        GroupId::simple(Family::Parabolic { host: Box::new(host), node })
    }

    pub fn extension_field_symplectic(q: u64) -> GroupId {
        GroupId::simple(Family::ExtensionFieldSymplectic { q })
    }

    /// Collapses flavors that name the same group (`Sp = PSp` and `Ω = PΩ`
    /// for even `q`, `Sp` full = `Sp`).
    pub fn normalized(mut self) -> GroupId {
        match &self.family {
            Family::Symplectic { q, .. } => {
                if self.flavor == Flavor::Full {
                    self.flavor = Flavor::Omega;
                }
                if q % 2 == 0 {
                    self.flavor = Flavor::Simple;
                }
            }
            Family::OrthogonalOdd { .. } if self.flavor == Flavor::Omega => {
                self.flavor = Flavor::Simple;
            }
            Family::OrthogonalEven { q, .. } if q % 2 == 0 && self.flavor == Flavor::Omega => {
                self.flavor = Flavor::Simple;
            }
            Family::Linear { dim, q, sign } => {
                let d = num_integer::gcd(*dim as u64, if *sign == Sign::Plus { q - 1 } else { q + 1 });
                if d == 1 && self.flavor == Flavor::Omega {
                    self.flavor = Flavor::Simple;
                }
            }
            _ => {}
        }
        self
    }

    /// Field size for classical and Lie-type families.
    pub fn field(&self) -> Option<u64> {
        match &self.family {
            Family::Linear { q, .. }
            | Family::Symplectic { q, .. }
            | Family::OrthogonalOdd { q, .. }
            | Family::OrthogonalEven { q, .. }
            | Family::G2 { q }
            | Family::ExtensionFieldSymplectic { q } => Some(*q),
            _ => None,
        }
    }

    /// Defining characteristic for families of Lie type.
    pub fn characteristic(&self) -> Option<u64> {
        self.field().and_then(prime_power).map(|(p, _)| p)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        let check_q = |q: u64| -> Result<()> {
            match prime_power(q) {
                Some(_) => Ok(()),
                None => Err(Error::InvalidArgument(format!("{q} is not a prime power"))),
            }
        };
        match &self.family {
            Family::Alternating { n } | Family::Symmetric { n } if *n < 2 => bad(format!("degree {n} < 2")),
            Family::Linear { dim, q, .. } => {
                check_q(*q)?;
                if *dim < 2 {
                    return bad(format!("linear dimension {dim} < 2"));
                }
                Ok(())
            }
            Family::Symplectic { dim, q } => {
                check_q(*q)?;
                if *dim < 2 || dim % 2 != 0 {
                    return bad(format!("symplectic dimension {dim} must be even"));
                }
                Ok(())
            }
            Family::OrthogonalOdd { dim, q } => {
                check_q(*q)?;
                if *dim < 3 || dim % 2 != 1 {
                    return bad(format!("odd orthogonal dimension {dim}"));
                }
                Ok(())
            }
            Family::OrthogonalEven { dim, q, .. } => {
                check_q(*q)?;
                if *dim < 2 || dim % 2 != 0 {
                    return bad(format!("even orthogonal dimension {dim}"));
                }
                Ok(())
            }
            Family::G2 { q } | Family::ExtensionFieldSymplectic { q } => check_q(*q),
            Family::DirectFactorIntersection { k, n } if !(1 < *k && k < n) => {
                bad(format!("need 1 < k < n, got k = {k}, n = {n}"))
            }
            Family::Parabolic { host, node } => {
                let ok = match (&host.family, *node) {
                    (Family::OrthogonalEven { dim: 8, q: 2, sign: Sign::Plus }, 1 | 3 | 4) => true,
                    (Family::Linear { dim: 6, q: 2, sign: Sign::Plus }, 1 | 5) => true,
                    (Family::Linear { dim: 4, q: 2, sign: Sign::Minus }, 2) => true,
                    _ => false,
                };
                if ok {
                    Ok(())
                } else {
                    bad(format!("parabolic P_{node} of {host} is not in the supported table"))
                }
            }
            _ => Ok(()),
        }
    }

    /// Representative of the isomorphism class used for computation
    /// (e.g. `U_4(2) → PSp_4(3)`, `O_4^-(2) → S_5`).
    pub fn canonical(&self) -> GroupId {
        use Family::*;
        let g = self.clone().normalized();
        match (&g.family, g.flavor) {
            (Linear { dim: 2, q: 4 | 5, sign: Sign::Plus }, Flavor::Simple) => GroupId::alternating(5),
            (Linear { dim: 2, q: 9, sign: Sign::Plus }, Flavor::Simple) => GroupId::alternating(6),
            (Linear { dim: 4, q: 2, sign: Sign::Plus }, Flavor::Simple) => GroupId::alternating(8),
            (Linear { dim: 3, q: 2, sign: Sign::Plus }, Flavor::Simple) => GroupId::linear(2, 7),
            (Linear { dim: 4, q: 2, sign: Sign::Minus }, Flavor::Simple) => GroupId::symplectic(4, 3),
            (Linear { dim: 4, q: 3, sign: Sign::Minus }, Flavor::Simple) => GroupId::omega_even(6, 3, Sign::Minus),
            (OrthogonalOdd { dim: 5, q: 3 }, Flavor::Simple) => GroupId::symplectic(4, 3),
            (OrthogonalOdd { dim, q }, Flavor::Simple) if q % 2 == 0 => GroupId::symplectic(dim - 1, *q),
            (Symplectic { dim: 4, q: 2 }, _) => GroupId::symmetric(6),
            (OrthogonalEven { dim: 4, q: 2, sign: Sign::Minus }, Flavor::Full) => GroupId::symmetric(5),
            (OrthogonalEven { dim: 6, q: 2, sign: Sign::Plus }, Flavor::Full) => GroupId::symmetric(8),
            (DirectFactorIntersection { k, n }, _) if *k + 1 == *n => GroupId::alternating(*k),
            (DirectFactorIntersection { k: 1, n }, _) => GroupId::alternating(n - 1),
            _ => g,
        }
    }
}

fn q_power_label(q: u64) -> String {
    q.to_string()
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        let g = self.clone().normalized();
        let odd = |q: u64| q % 2 == 1;
        match (&g.family, g.flavor) {
            (Alternating { n }, _) => write!(f, "A({n})"),
            (Symmetric { n }, _) => write!(f, "S({n})"),
            (Linear { dim, q, sign }, fl) => {
                let base = if *sign == Sign::Plus { "L" } else { "U" };
                let prefix = match fl {
                    Flavor::Simple => "",
                    Flavor::Omega => "S",
                    Flavor::Full => "G",
                };
                let base = match (prefix, base) {
                    ("", b) => b.to_string(),
                    (p, "L") => format!("{p}L"),
                    (p, _) => format!("{p}U"),
                };
                write!(f, "{base}({dim},{})", q_power_label(*q))
            }
            (Symplectic { dim, q }, Flavor::Simple) if odd(*q) => write!(f, "PSp({dim},{q})"),
            (Symplectic { dim, q }, _) => write!(f, "Sp({dim},{q})"),
            (OrthogonalOdd { dim, q }, Flavor::Full) => write!(f, "O({dim},{q})"),
            (OrthogonalOdd { dim, q }, _) => write!(f, "Omega({dim},{q})"),
            (OrthogonalEven { dim, q, sign }, Flavor::Simple) if odd(*q) => {
                write!(f, "POmega{}({dim},{q})", sign.symbol())
            }
            (OrthogonalEven { dim, q, sign }, Flavor::Full) => write!(f, "O{}({dim},{q})", sign.symbol()),
            (OrthogonalEven { dim, q, sign }, _) => write!(f, "Omega{}({dim},{q})", sign.symbol()),
            (G2 { q }, _) => write!(f, "G2({q})"),
            (Sporadic(s), _) => write!(f, "{}", s.name()),
            (DirectFactorIntersection { k, n }, _) => write!(f, "Sk-x-Sn-k({k},{n})"),
            (Parabolic { host, node }, _) => write!(f, "P({node},{host})"),
            (ExtensionFieldSymplectic { q }, _) => write!(f, "Sp2Ext({q})"),
        }
    }
}

impl Serialize for GroupId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

enum Arg {
    Int(u64),
    Group(GroupId, usize),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn name(&mut self) -> Result<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        while let Some(&c) = self.src.get(self.pos) {
            let part_of_name = c.is_ascii_alphanumeric() || matches!(c, b'+' | b'-' | b'\'');
            // `2F4(2)'` carries its parameter inside the name
            let tits = self.src[start..self.pos].starts_with(b"2F4") && matches!(c, b'(' | b')');
            if !(part_of_name || tits) {
                break;
            }
            self.pos += 1;
            if &self.src[start..self.pos] == b"2F4(2)'" {
                break;
            }
        }
        if self.pos == start {
            return self.err(start, "expected a group name");
        }
        Ok((String::from_utf8_lossy(&self.src[start..self.pos]).into_owned(), start))
    }

    fn arg(&mut self) -> Result<Arg> {
        self.skip_ws();
        let start = self.pos;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let mut end = self.pos;
            while end < self.src.len() && self.src[end].is_ascii_digit() {
                end += 1;
            }
            // digits followed by letters start a name such as `2F4(2)'`
            if end < self.src.len() && self.src[end].is_ascii_alphabetic() {
                return Ok(Arg::Group(self.spec()?, start));
            }
            let text = std::str::from_utf8(&self.src[start..end]).unwrap_or_default();
            self.pos = end;
            return match text.parse() {
                Ok(v) => Ok(Arg::Int(v)),
                Err(_) => self.err(start, "integer out of range"),
            };
        }
        Ok(Arg::Group(self.spec()?, start))
    }

    fn spec(&mut self) -> Result<GroupId> {
        let (name, name_pos) = self.name()?;
        let mut args = Vec::new();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                args.push(self.arg()?);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return self.err(self.pos, "expected ',' or ')'"),
                }
            }
        }
        build(&name, name_pos, args)
    }
}

fn build(name: &str, pos: usize, args: Vec<Arg>) -> Result<GroupId> {
    let perr = |msg: String| Err(Error::Parse { pos, msg });
    let ints = |want: usize| -> Result<Vec<u64>> {
        if args.len() != want {
            return Err(Error::Parse { pos, msg: format!("{name} takes {want} argument(s), got {}", args.len()) });
        }
        args.iter()
            .map(|a| match a {
                Arg::Int(v) => Ok(*v),
                Arg::Group(_, p) => Err(Error::Parse { pos: *p, msg: "expected an integer".into() }),
            })
            .collect()
    };
    let dim_q = || -> Result<(u32, u64)> {
        let v = ints(2)?;
        Ok((v[0] as u32, v[1]))
    };
    let sign_of = |c: char| if c == '+' { Sign::Plus } else { Sign::Minus };
    if let Some(s) = Sporadic::ALL.iter().find(|s| s.name() == name) {
        if !args.is_empty() {
            return perr(format!("{name} takes no arguments"));
        }
        return Ok(GroupId::sporadic(*s));
    }
    let g = match name {
        "A" => GroupId::alternating(ints(1)?[0] as u32),
        "S" => GroupId::symmetric(ints(1)?[0] as u32),
        "L" | "PSL" => {
            let (d, q) = dim_q()?;
            GroupId::linear(d, q)
        }
        "U" | "PSU" => {
            let (d, q) = dim_q()?;
            GroupId::unitary(d, q)
        }
        "SL" | "GL" | "SU" | "GU" => {
            let (dim, q) = dim_q()?;
            let sign = if name.ends_with('L') { Sign::Plus } else { Sign::Minus };
            let flavor = if name.starts_with('S') { Flavor::Omega } else { Flavor::Full };
            GroupId { family: Family::Linear { dim, q, sign }, flavor }
        }
        "PSp" => {
            let (d, q) = dim_q()?;
            GroupId::symplectic(d, q)
        }
        "Sp" => {
            let (d, q) = dim_q()?;
            if q % 2 == 0 {
                GroupId::symplectic(d, q)
            } else {
                GroupId::symplectic_matrix(d, q)
            }
        }
        "Omega" => {
            let (d, q) = dim_q()?;
            GroupId::omega_odd(d, q)
        }
        "O" => {
            let (d, q) = dim_q()?;
            GroupId::orthogonal_odd_full(d, q)
        }
        "Omega+" | "Omega-" => {
            let (d, q) = dim_q()?;
            GroupId::omega_even_matrix(d, q, sign_of(name.chars().last().unwrap_or('+')))
        }
        "POmega+" | "POmega-" => {
            let (d, q) = dim_q()?;
            GroupId::omega_even(d, q, sign_of(name.chars().last().unwrap_or('+')))
        }
        "O+" | "O-" => {
            let (d, q) = dim_q()?;
            GroupId::orthogonal_full(d, q, sign_of(name.chars().last().unwrap_or('+')))
        }
        "G2" => GroupId::g2(ints(1)?[0]),
        "Sk-x-Sn-k" => {
            let v = ints(2)?;
            GroupId::intransitive(v[0] as u32, v[1] as u32)
        }
        "Sp2Ext" => GroupId::extension_field_symplectic(ints(1)?[0]),
        "P" => {
            if args.len() != 2 {
                return perr("P takes (node, host)".into());
            }
            let mut it = args.into_iter();
            let node = match it.next() {
                Some(Arg::Int(v)) => v as u32,
                _ => return perr("P: first argument must be a node index".into()),
            };
            let host = match it.next() {
                Some(Arg::Group(h, _)) => h,
                _ => return perr("P: second argument must be a group".into()),
            };
            GroupId::parabolic(host, node)
        }
        _ => return perr(format!("unknown group name `{name}`")),
    };
    g.validate().map_err(|e| Error::Parse { pos, msg: e.to_string() })?;
    Ok(g)
}

impl FromStr for GroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupId> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let g = p.spec()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return p.err(p.pos, "trailing input");
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let cases = [
            ("Sp(8,2)", GroupId::symplectic(8, 2)),
            ("POmega+(8,3)", GroupId::omega_even(8, 3, Sign::Plus)),
            ("A(10)", GroupId::alternating(10)),
            ("M11", GroupId::sporadic(Sporadic::M11)),
            ("Sk-x-Sn-k(7,10)", GroupId::intransitive(7, 10)),
            ("P(1, L(6,2))", GroupId::parabolic(GroupId::linear(6, 2), 1)),
            ("2F4(2)'", GroupId::sporadic(Sporadic::Tits)),
            ("O-(8,2)", GroupId::orthogonal_full(8, 2, Sign::Minus)),
            ("Omega+(8,2)", GroupId::omega_even(8, 2, Sign::Plus)),
        ];
        for (text, want) in cases {
            let got: GroupId = text.parse().unwrap();
            assert_eq!(got, want, "{text}");
            let again: GroupId = got.to_string().parse().unwrap();
            assert_eq!(again, got);
        }
    }

    #[test]
    fn parse_errors_carry_position() {
        match "Sp(8,2".parse::<GroupId>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        match "Sp(7,2)".parse::<GroupId>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 0),
            other => panic!("{other:?}"),
        }
        assert!("Foo(3)".parse::<GroupId>().is_err());
        assert!("P(2,L(6,2))".parse::<GroupId>().is_err());
        assert!("L(2,6)".parse::<GroupId>().is_err());
    }

    #[test]
    fn canonical_normalizations() {
        assert_eq!(GroupId::unitary(4, 2).canonical(), GroupId::symplectic(4, 3));
        assert_eq!(GroupId::omega_odd(5, 3).canonical(), GroupId::symplectic(4, 3));
        assert_eq!(GroupId::orthogonal_full(4, 2, Sign::Minus).canonical(), GroupId::symmetric(5));
        assert_eq!(GroupId::linear(2, 5).canonical(), GroupId::alternating(5));
    }
}
