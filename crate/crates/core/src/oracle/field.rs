use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// 2^62 - 57, the largest prime below 2^62.
pub const DEFAULT_PRIME: u64 = (1u64 << 62) - 57;

/// The coefficient field of an oracle computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    Prime(u64),
    Rational,
}

impl Field {
    /// A prime field, checked for primality and size.
    pub fn prime(p: u64) -> Result<Self> {
        if p < 1 << 31 {
            return Err(Error::Precondition(format!("prime {p} is below 2^31")));
        }
        if !is_prime_u64(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }
}

/// An element of Q or of F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldElem {
    Rational(BigRational),
    Mod { residue: u64, p: u64 },
}

impl FieldElem {
    pub fn from_i64(field: Field, v: i64) -> Self {
        match field {
            Field::Rational => FieldElem::Rational(BigRational::from_integer(v.into())),
            Field::Prime(p) => FieldElem::Mod {
                residue: (v as i128).rem_euclid(p as i128) as u64,
                p,
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_zero(),
            FieldElem::Mod { residue, .. } => *residue == 0,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rational(_) => Field::Rational,
            FieldElem::Mod { p, .. } => Field::Prime(*p),
        }
    }
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'bases: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Arithmetic used by jet evaluation; one implementation per field.
pub(crate) trait Arith: Sync {
    type E: Clone + Send + Sync;
    fn zero(&self) -> Self::E;
    fn from_i64(&self, v: i64) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn to_elem(&self, a: &Self::E) -> FieldElem;
}

pub(crate) struct ModP(pub u64);

impl Arith for ModP {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.0 as i128) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        add_mod(*a, *b, self.0)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.0)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn to_elem(&self, a: &u64) -> FieldElem {
        FieldElem::Mod {
            residue: *a,
            p: self.0,
        }
    }
}

pub(crate) struct Rat;

impl Arith for Rat {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn to_elem(&self, a: &BigRational) -> FieldElem {
        FieldElem::Rational(a.clone())
    }
}

/// Rank over F_p by incremental row echelon form.
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut basis = Echelon::new(p);
    for r in rows {
        basis.insert(r.clone());
        if rows.first().is_some_and(|f| basis.rank() == f.len()) {
            break;
        }
    }
    basis.rank()
}

/// Row echelon basis over F_p; rows are reduced against earlier rows on insertion.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for (piv, b) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                let f = p - c;
                for (x, y) in v.iter_mut().zip(b).skip(*piv) {
                    if *y != 0 {
                        *x = add_mod(*x, mul_mod(f, *y, p), p);
                    }
                }
            }
        }
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[piv], p);
        for x in v.iter_mut().skip(piv) {
            *x = mul_mod(*x, inv, p);
        }
        self.rows.push((piv, v));
        true
    }
}

/// Rank over Q: rows are scaled to integers and reduced by Bareiss elimination.
pub fn rank_rational(rows: &[Vec<BigRational>]) -> usize {
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, q| num_integer::Integer::lcm(&acc, q.denom()));
            row.iter().map(|q| (q * &l).to_integer()).collect()
        })
        .collect();
    bareiss_rank(ints)
}

/// Fraction-free Gaussian elimination over Z.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let pivot = m[rank][c].clone();
        for i in rank + 1..rows {
            let lead = m[i][c].clone();
            for j in c + 1..cols {
                let v = (&pivot * &m[i][j] - &lead * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank of a matrix whose entries all live in the same field.
pub fn rank(m: &[Vec<FieldElem>]) -> Result<usize> {
    let Some(first) = m.iter().flatten().next() else {
        return Ok(0);
    };
    let field = first.field();
    if m.iter().flatten().any(|e| e.field() != field) {
        return Err(Error::ContextMismatch("matrix mixes fields".into()));
    }
    Ok(match field {
        Field::Prime(p) => {
            let rows: Vec<Vec<u64>> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| match e {
                            FieldElem::Mod { residue, .. } => *residue,
                            FieldElem::Rational(_) => unreachable!(),
                        })
                        .collect()
                })
                .collect();
            rank_mod_p(&rows, p)
        }
        Field::Rational => {
            let rows: Vec<Vec<BigRational>> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| match e {
                            FieldElem::Rational(q) => q.clone(),
                            FieldElem::Mod { .. } => unreachable!(),
                        })
                        .collect()
                })
                .collect();
            rank_rational(&rows)
        }
    })
}
