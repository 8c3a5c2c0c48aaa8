//! Explicit generating sets. The shipped data files are the output of these
//! functions; a test keeps the two in sync.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::group::{GroupId, Sign, Sporadic};
use crate::orders;

use super::field::Field;
use super::genfile::Presentation;
use super::rep::Rep;

fn order_of(g: &GroupId) -> Result<BigUint> {
    Ok(orders::order(g)?.order.value().clone())
}

fn identity(d: usize) -> Vec<u8> {
    let mut m = vec![0u8; d * d];
    for i in 0..d {
        m[i * d + i] = 1;
    }
    m
}

/// Matrix with columns `cols[j]`.
fn from_columns(cols: &[Vec<u8>]) -> Vec<u8> {
    let d = cols.len();
    let mut m = vec![0u8; d * d];
    for (j, c) in cols.iter().enumerate() {
        for i in 0..d {
            m[i * d + j] = c[i];
        }
    }
    m
}

fn unit(d: usize, i: usize) -> Vec<u8> {
    let mut v = vec![0u8; d];
    v[i] = 1;
    v
}

fn vadd(k: &Field, a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(&x, &y)| k.add(x, y)).collect()
}

fn vscale(k: &Field, s: u8, a: &[u8]) -> Vec<u8> {
    a.iter().map(|&x| k.mul(s, x)).collect()
}

fn minus_one(k: &Field) -> Vec<u8> {
    if k.p == 2 {
        Vec::new()
    } else {
        vec![k.neg(1)]
    }
}

/// Permutation matrix of the cycle `0 → 1 → … → d-1 → 0`.
fn cycle_matrix(d: usize) -> Vec<u8> {
    from_columns(&(0..d).map(|j| unit(d, (j + 1) % d)).collect::<Vec<_>>())
}

/// `I + E_{01}` of size `d`.
fn elementary(d: usize) -> Vec<u8> {
    let mut m = identity(d);
    m[1] = 1;
    m
}

/// `Sp_dim(q)` from symplectic transvections `x ↦ x + λB(x,v)v`; modulo `±I` when `projective`.
///
/// Coordinates are `(e_1..e_m, f_1..f_m)` with `B(e_i, f_i) = 1`.
pub fn symplectic(dim: usize, q: u64, projective: bool) -> Result<Presentation> {
    let k = Field::new(q)?;
    let m = dim / 2;
    let form = |x: &[u8], y: &[u8]| -> u8 {
        let mut acc = 0u8;
        for i in 0..m {
            acc = k.add(acc, k.mul(x[i], y[m + i]));
            acc = k.sub(acc, k.mul(x[m + i], y[i]));
        }
        acc
    };
    let mut vs: Vec<Vec<u8>> = Vec::new();
    for i in 0..m {
        vs.push(unit(dim, i));
        vs.push(unit(dim, m + i));
    }
    for i in 0..m.saturating_sub(1) {
        vs.push(vadd(&k, &unit(dim, i), &unit(dim, i + 1)));
        vs.push(vadd(&k, &unit(dim, i), &unit(dim, m + i + 1)));
    }
    let mut scalars = vec![1u8];
    if k.f > 1 {
        scalars.push(k.omega());
    }
    let mut gens = Vec::new();
    for v in &vs {
        for &lambda in &scalars {
            let cols: Vec<Vec<u8>> = (0..dim)
                .map(|j| {
                    let e = unit(dim, j);
                    let c = k.mul(lambda, form(&e, v));
                    vadd(&k, &e, &vscale(&k, c, v))
                })
                .collect();
            gens.push(from_columns(&cols));
        }
    }
    let (label, central) = if projective && q % 2 == 1 {
        (GroupId::symplectic(dim as u32, q), minus_one(&k))
    } else {
        (GroupId::symplectic_matrix(dim as u32, q), Vec::new())
    };
    let expected = order_of(&label)?;
    Presentation::new(label, Rep::matrix(k.clone(), dim, central)?, gens, Some(expected))
}

/// `L_2(q)` as `SL_2(q)` modulo `±I`, generated by `x(λ)` and `y(λ)` for `λ ∈ {1, ω}`.
pub fn sl2(q: u64) -> Result<Presentation> {
    let k = Field::new(q)?;
    let mut scalars = vec![1u8];
    if k.f > 1 {
        scalars.push(k.omega());
    }
    let mut gens = Vec::new();
    for &l in &scalars {
        gens.push(vec![1, l, 0, 1]);
        gens.push(vec![1, 0, l, 1]);
    }
    let label = GroupId::linear(2, q);
    let expected = order_of(&label)?;
    Presentation::new(label, Rep::matrix(k.clone(), 2, minus_one(&k))?, gens, Some(expected))
}

/// Products of pairs of reflections in vectors of the given norm, for the quadratic form `quad`.
fn reflection_products(k: &Field, dim: usize, quad: &dyn Fn(&[u8]) -> u8, vs: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let bil = |x: &[u8], y: &[u8]| -> u8 { k.sub(k.sub(quad(&vadd(k, x, y)), quad(x)), quad(y)) };
    let reflection = |v: &[u8]| -> Vec<u8> {
        let qv_inv = k.inv(quad(v)).expect("nonsingular vector");
        let cols: Vec<Vec<u8>> = (0..dim)
            .map(|j| {
                let e = unit(dim, j);
                let c = k.neg(k.mul(bil(&e, v), qv_inv));
                vadd(k, &e, &vscale(k, c, v))
            })
            .collect();
        from_columns(&cols)
    };
    let rep = Rep::Matrix { field: k.clone(), dim, central: Vec::new() };
    let first = reflection(&vs[0]);
    vs[1..].iter().map(|w| rep.mul(&first, &reflection(w))).collect()
}

fn vector(dim: usize, support: &[usize]) -> Vec<u8> {
    let mut v = vec![0u8; dim];
    for &i in support {
        v[i] = 1;
    }
    v
}

/// `U_4(3) ≅ PΩ_6^-(3)` for `Q = x_1x_2 + x_3x_4 + x_5^2 + x_6^2`.
pub fn omega6_minus_3() -> Result<Presentation> {
    let k = Field::new(3)?;
    let quad = |x: &[u8]| -> u8 {
        let t = x[0] as u32 * x[1] as u32 + x[2] as u32 * x[3] as u32 + (x[4] as u32).pow(2) + (x[5] as u32).pow(2);
        (t % 3) as u8
    };
    let vs: Vec<Vec<u8>> = [&[4][..], &[5], &[0, 1], &[2, 3], &[0, 4], &[2, 5], &[1, 3, 4]]
        .iter()
        .map(|s| vector(6, s))
        .collect();
    debug_assert!(vs.iter().all(|v| quad(v) == 1));
    let gens = reflection_products(&k, 6, &quad, &vs);
    let label = GroupId::omega_even(6, 3, Sign::Minus);
    let expected = order_of(&label)?;
    Presentation::new(label, Rep::matrix(k.clone(), 6, minus_one(&k))?, gens, Some(expected))
}

/// `Ω_8^+(2)` for `Q = x_1x_2 + x_3x_4 + x_5x_6 + x_7x_8`, from products of orthogonal transvections.
pub fn omega8_plus_2() -> Result<Presentation> {
    let k = Field::new(2)?;
    let quad = |x: &[u8]| -> u8 { ((x[0] & x[1]) ^ (x[2] & x[3]) ^ (x[4] & x[5]) ^ (x[6] & x[7])) as u8 };
    let vs: Vec<Vec<u8>> = [&[0, 1][..], &[2, 3], &[4, 5], &[6, 7], &[0, 1, 2], &[1, 2, 3], &[3, 4, 5, 6], &[0, 5, 6, 7]]
        .iter()
        .map(|s| vector(8, s))
        .collect();
    debug_assert!(vs.iter().all(|v| quad(v) == 1));
    let gens = reflection_products(&k, 8, &quad, &vs);
    let label = GroupId::omega_even(8, 2, Sign::Plus);
    let expected = order_of(&label)?;
    Presentation::new(label, Rep::matrix(k, 8, Vec::new())?, gens, Some(expected))
}

/// Octonion multiplication on `F_3^8` with `e_0 = 1`, `e_i^2 = -1` and
/// `e_i e_j = e_k` along the oriented lines `(i, i+1, i+3)` mod 7.
pub struct Octonions {
    k: Field,
    table: [[(u8, usize); 8]; 8],
}

impl Octonions {
    pub fn new() -> Result<Octonions> {
        let k = Field::new(3)?;
        let minus = k.neg(1);
        let mut table = [[(0u8, 0usize); 8]; 8];
        for i in 0..8 {
            table[0][i] = (1, i);
            table[i][0] = (1, i);
        }
        for i in 1..8 {
            table[i][i] = (minus, 0);
        }
        for a in 0..7 {
            let line = [a + 1, (a + 1) % 7 + 1, (a + 3) % 7 + 1];
            for t in 0..3 {
                let (x, y, z) = (line[t], line[(t + 1) % 3], line[(t + 2) % 3]);
                table[x][y] = (1, z);
                table[y][x] = (minus, z);
            }
        }
        Ok(Octonions { k, table })
    }

    pub fn mul(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let k = &self.k;
        let mut out = vec![0u8; 8];
        for i in 0..8 {
            if x[i] == 0 {
                continue;
            }
            for j in 0..8 {
                if y[j] == 0 {
                    continue;
                }
                let (s, t) = self.table[i][j];
                out[t] = k.add(out[t], k.mul(s, k.mul(x[i], y[j])));
            }
        }
        out
    }

    fn dot(&self, x: &[u8], y: &[u8]) -> u8 {
        x.iter().zip(y).fold(0, |acc, (&a, &b)| self.k.add(acc, self.k.mul(a, b)))
    }

    /// Images of the eight basis words of a basic triple `(a, b, c)`.
    fn words(&self, a: &[u8], b: &[u8], c: &[u8]) -> Vec<Vec<u8>> {
        let ab = self.mul(a, b);
        vec![unit(8, 0), a.to_vec(), b.to_vec(), ab.clone(), c.to_vec(), self.mul(a, c), self.mul(b, c), self.mul(&ab, c)]
    }

    fn random_unit(&self, rng: &mut ChaCha8Rng, orth: &[Vec<u8>]) -> Vec<u8> {
        loop {
            let mut v: Vec<u8> = (0..8).map(|_| rng.gen_range(0..3u8)).collect();
            v[0] = 0;
            if self.dot(&v, &v) == 1 && orth.iter().all(|w| self.dot(&v, w) == 0) {
                return v;
            }
        }
    }

    /// The automorphism sending the standard triple `(e_1, e_2, e_3)` to a random basic triple,
    /// as a `7 × 7` matrix on the imaginary octonions.
    pub fn random_automorphism(&self, rng: &mut ChaCha8Rng) -> Vec<u8> {
        let a = self.random_unit(rng, &[]);
        let b = self.random_unit(rng, &[a.clone()]);
        let ab = self.mul(&a, &b);
        let c = self.random_unit(rng, &[a.clone(), b.clone(), ab]);
        let target = from_columns(&self.words(&a, &b, &c));
        let base = from_columns(&self.words(&unit(8, 1), &unit(8, 2), &unit(8, 3)));
        let rep = Rep::Matrix { field: self.k.clone(), dim: 8, central: Vec::new() };
        let full = rep.mul(&target, &rep.inverse(&base).expect("basis"));
        let mut m = vec![0u8; 49];
        for i in 0..7 {
            for j in 0..7 {
                m[i * 7 + j] = full[(i + 1) * 8 + j + 1];
            }
        }
        m
    }

    /// Whether the `7 × 7` matrix `m` (fixing 1) preserves the product on basis elements.
    pub fn is_automorphism(&self, m: &[u8]) -> bool {
        let apply = |v: &[u8]| -> Vec<u8> {
            let mut out = vec![0u8; 8];
            out[0] = v[0];
            for i in 0..7 {
                let mut acc = 0u8;
                for j in 0..7 {
                    acc = self.k.add(acc, self.k.mul(m[i * 7 + j], v[j + 1]));
                }
                out[i + 1] = acc;
            }
            out
        };
        (0..8).all(|i| {
            (0..8).all(|j| {
                let (ei, ej) = (unit(8, i), unit(8, j));
                apply(&self.mul(&ei, &ej)) == self.mul(&apply(&ei), &apply(&ej))
            })
        })
    }
}

pub const G2_SEED: u64 = 3;

/// `G_2(3)` as the automorphism group of the octonions over `F_3`, from two random
/// automorphisms.
pub fn g2_3() -> Result<Presentation> {
    let o = Octonions::new()?;
    let mut rng = ChaCha8Rng::seed_from_u64(G2_SEED);
    let gens = vec![o.random_automorphism(&mut rng), o.random_automorphism(&mut rng)];
    let label = GroupId::g2(3);
    let expected = order_of(&label)?;
    Presentation::new(label, Rep::matrix(o.k.clone(), 7, Vec::new())?, gens, Some(expected))
}

/// `e_i ∧ e_j` coordinates for `i < j < 4`.
const WEDGE: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn wedge_square(a: &[u8]) -> Vec<u8> {
    let at = |r: usize, c: usize| a[r * 4 + c];
    let mut m = vec![0u8; 36];
    for (col, &(i, j)) in WEDGE.iter().enumerate() {
        for (row, &(k, l)) in WEDGE.iter().enumerate() {
            m[row * 6 + col] = (at(k, i) * at(l, j) + at(l, i) * at(k, j)) % 2;
        }
    }
    m
}

/// Block matrix `[[a, b], [c, d]]` with square blocks of size `n`.
fn blocks(n: usize, a: &[u8], b: &[u8], c: &[u8], d: &[u8]) -> Vec<u8> {
    let mut m = vec![0u8; 4 * n * n];
    for i in 0..n {
        for j in 0..n {
            m[i * 2 * n + j] = a[i * n + j];
            m[i * 2 * n + n + j] = b[i * n + j];
            m[(n + i) * 2 * n + j] = c[i * n + j];
            m[(n + i) * 2 * n + n + j] = d[i * n + j];
        }
    }
    m
}

/// `(d+1) × (d+1)` affine matrix `[[a, v], [0, 1]]`.
fn affine(d: usize, a: &[u8], v: &[u8]) -> Vec<u8> {
    let n = d + 1;
    let mut m = vec![0u8; n * n];
    for i in 0..d {
        for j in 0..d {
            m[i * n + j] = a[i * d + j];
        }
        m[i * n + d] = v[i];
    }
    m[d * n + d] = 1;
    m
}

fn transpose(n: usize, a: &[u8]) -> Vec<u8> {
    let mut t = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            t[j * n + i] = a[i * n + j];
        }
    }
    t
}

fn gl2_rep(n: usize) -> Rep {
    Rep::Matrix { field: Field::new(2).expect("GF(2)"), dim: n, central: Vec::new() }
}

/// `P_1 ≤ Ω_8^+(2)` as the affine group `2^6 : L_4(2)` on `∧^2 F_2^4`.
pub fn omega8_plus_2_p1() -> Result<Presentation> {
    let gens = vec![
        affine(6, &wedge_square(&elementary(4)), &[0; 6]),
        affine(6, &wedge_square(&cycle_matrix(4)), &[0; 6]),
        affine(6, &identity(6), &unit(6, 0)),
    ];
    let label = GroupId::parabolic(GroupId::omega_even(8, 2, Sign::Plus), 1);
    let expected = order_of(&label)?;
    Presentation::new(label, gl2_rep(7), gens, Some(expected))
}

/// Stabilizer in `Ω_8^+(2)` of a totally singular 4-space, for `Q(x, y) = x·y` on `W ⊕ W*`.
/// Node 4 is the stabilizer of `⟨e_1, e_2, e_3, f_4⟩`, obtained by conjugating with `e_4 ↔ f_4`.
pub fn omega8_plus_2_p34(node: u32) -> Result<Presentation> {
    let rep = gl2_rep(8);
    let levi = |a: &[u8]| -> Vec<u8> {
        let inv_t = transpose(4, &gl2_rep(4).inverse(a).expect("invertible"));
        blocks(4, a, &[0; 16], &[0; 16], &inv_t)
    };
    let mut alt = vec![0u8; 16];
    alt[1] = 1;
    alt[4] = 1;
    let mut gens = vec![levi(&elementary(4)), levi(&cycle_matrix(4)), blocks(4, &identity(4), &alt, &[0; 16], &identity(4))];
    if node == 4 {
        let mut swap = identity(8);
        swap[3 * 8 + 3] = 0;
        swap[7 * 8 + 7] = 0;
        swap[3 * 8 + 7] = 1;
        swap[7 * 8 + 3] = 1;
        gens = gens.iter().map(|g| rep.mul(&rep.mul(&swap, g), &swap)).collect();
    }
    let label = GroupId::parabolic(GroupId::omega_even(8, 2, Sign::Plus), node);
    let expected = order_of(&label)?;
    Presentation::new(label, rep, gens, Some(expected))
}

/// `P_1 ≤ L_6(2)` (stabilizer of a point, `[[1, v], [0, A]]`) and `P_5` (its transpose).
pub fn linear6_2_parabolic(node: u32) -> Result<Presentation> {
    let embed = |a: &[u8], v: &[u8]| -> Vec<u8> {
        let mut m = vec![0u8; 36];
        m[0] = 1;
        for j in 0..5 {
            m[j + 1] = v[j];
        }
        for i in 0..5 {
            for j in 0..5 {
                m[(i + 1) * 6 + j + 1] = a[i * 5 + j];
            }
        }
        m
    };
    let mut gens = vec![embed(&elementary(5), &[0; 5]), embed(&cycle_matrix(5), &[0; 5]), embed(&identity(5), &unit(5, 0))];
    if node == 5 {
        gens = gens.iter().map(|g| transpose(6, g)).collect();
    }
    let label = GroupId::parabolic(GroupId::linear(6, 2), node);
    let expected = order_of(&label)?;
    Presentation::new(label, gl2_rep(6), gens, Some(expected))
}

fn perm_matrix(images: &[usize]) -> Vec<u8> {
    let n = images.len();
    from_columns(&(0..n).map(|j| unit(n, images[j])).collect::<Vec<_>>())
}

/// `P_2 ≤ U_4(2)` as `2^4 : A_5`, with `A_5` permuting coordinates of the even-weight
/// subspace of `F_2^5` and translations by even-weight vectors.
pub fn unitary4_2_p2() -> Result<Presentation> {
    let gens = vec![
        affine(5, &perm_matrix(&[1, 2, 3, 4, 0]), &[0; 5]),
        affine(5, &perm_matrix(&[1, 2, 0, 3, 4]), &[0; 5]),
        affine(5, &identity(5), &[1, 1, 0, 0, 0]),
    ];
    let label = GroupId::parabolic(GroupId::unitary(4, 2), 2);
    let expected = order_of(&label)?;
    Presentation::new(label, gl2_rep(6), gens, Some(expected))
}

fn perm_from_cycles(n: usize, cycles: &[&[usize]]) -> Vec<u8> {
    let mut p: Vec<u8> = (0..n as u8).collect();
    for c in cycles {
        for t in 0..c.len() {
            p[c[t] - 1] = (c[(t + 1) % c.len()] - 1) as u8;
        }
    }
    p
}

/// `M_11` on 11 points, standard generators `(2,10)(4,11)(5,7)(8,9)` and `(1,4,3,8)(2,5,6,9)`.
pub fn m11() -> Result<Presentation> {
    let a = perm_from_cycles(11, &[&[2, 10], &[4, 11], &[5, 7], &[8, 9]]);
    let b = perm_from_cycles(11, &[&[1, 4, 3, 8], &[2, 5, 6, 9]]);
    let label = GroupId::sporadic(Sporadic::M11);
    let expected = order_of(&label)?;
    Presentation::new(label, Rep::perm(11)?, vec![a, b], Some(expected))
}

/// `A_n` on `n` points from `(1,2,3)` and an `n`- or `(n-1)`-cycle.
pub fn alternating(n: usize) -> Result<Presentation> {
    let three = perm_from_cycles(n, &[&[1, 2, 3]]);
    let long: Vec<usize> = if n % 2 == 1 { (1..=n).collect() } else { (2..=n).collect() };
    let gens = if n >= 4 { vec![three, perm_from_cycles(n, &[&long])] } else { vec![three] };
    let label = GroupId::alternating(n as u32);
    let expected = order_of(&label)?;
    Presentation::new(label, Rep::perm(n)?, gens, Some(expected))
}

/// Every presentation shipped as a data file, with its file name.
pub fn shipped() -> Result<Vec<(&'static str, Presentation)>> {
    Ok(vec![
        ("sp4_2.gens", symplectic(4, 2, false)?),
        ("sp4_4.gens", symplectic(4, 4, false)?),
        ("sp6_2.gens", symplectic(6, 2, false)?),
        ("psp4_3.gens", symplectic(4, 3, true)?),
        ("l2_4.gens", sl2(4)?),
        ("l2_5.gens", sl2(5)?),
        ("l2_7.gens", sl2(7)?),
        ("l2_11.gens", sl2(11)?),
        ("l2_13.gens", sl2(13)?),
        ("l2_25.gens", sl2(25)?),
        ("pomega6m_3.gens", omega6_minus_3()?),
        ("g2_3.gens", g2_3()?),
        ("omega8p_2.gens", omega8_plus_2()?),
        ("omega8p_2_p1.gens", omega8_plus_2_p1()?),
        ("omega8p_2_p3.gens", omega8_plus_2_p34(3)?),
        ("omega8p_2_p4.gens", omega8_plus_2_p34(4)?),
        ("l6_2_p1.gens", linear6_2_parabolic(1)?),
        ("l6_2_p5.gens", linear6_2_parabolic(5)?),
        ("u4_2_p2.gens", unitary4_2_p2()?),
        ("m11.gens", m11()?),
    ])
}
