//! Schubert varieties in G(r,n): partitions, containment, singular loci,
//! multiplicities and the degree of the Grassmannian.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::comb::binom_big;
use crate::oracle::det_big;
use crate::{Error, Result};

/// A partition `n-r >= λ_1 >= ... >= λ_{r+1} >= 0` indexing a Schubert variety in G(r,n).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
    r: usize,
    n: usize,
}

impl Partition {
    /// Zero-pads `parts` to length `r+1`.
    pub fn new(r: usize, n: usize, parts: &[usize]) -> Result<Self> {
        if n <= r {
            return Err(Error::InvalidShape(format!("G({r},{n}) needs n > r")));
        }
        if parts.len() > r + 1 {
            return Err(Error::InvalidShape(format!(
                "partition has {} parts, at most {} allowed",
                parts.len(),
                r + 1
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.first().is_some_and(|&p| p > n - r) {
            return Err(Error::InvalidShape(format!("parts of {parts:?} exceed n-r = {}", n - r)));
        }
        let mut parts = parts.to_vec();
        parts.resize(r + 1, 0);
        Ok(Partition { parts, r, n })
    }

    /// The partition with complementary diagram `λ̃`.
    pub fn from_complement(r: usize, n: usize, tilde: &[usize]) -> Result<Self> {
        if n <= r || tilde.len() != r + 1 || tilde.iter().any(|&t| t > n - r) {
            return Err(Error::InvalidShape(format!("{tilde:?} is not a complement in G({r},{n})")));
        }
        Partition::new(r, n, &tilde.iter().map(|&t| n - r - t).collect::<Vec<_>>())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn context(&self) -> (usize, usize) {
        (self.r, self.n)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    fn same_context(&self, other: &Partition) -> Result<()> {
        if self.context() != other.context() {
            return Err(Error::ContextMismatch(format!(
                "partitions live in G{:?} and G{:?}",
                self.context(),
                other.context()
            )));
        }
        Ok(())
    }
}

/// `λ̃_j = n - r - λ_j`, listed in the order of `λ` (so weakly increasing).
pub fn complementary(l: &Partition) -> Vec<usize> {
    l.parts.iter().map(|&p| l.n - l.r - p).collect()
}

pub fn schubert_dim(l: &Partition) -> usize {
    complementary(l).iter().sum()
}

pub fn codim(l: &Partition) -> usize {
    l.size()
}

/// Whether `Σ_μ ⊆ Σ_λ`, i.e. `μ >= λ` entrywise.
pub fn contains(l: &Partition, mu: &Partition) -> Result<bool> {
    l.same_context(mu)?;
    Ok(l.parts.iter().zip(&mu.parts).all(|(a, b)| b >= a))
}

/// Rows of `λ̃` as drawn: one row per part, in partition order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FerrersDiagram {
    pub rows: Vec<usize>,
}

impl FerrersDiagram {
    pub fn of(l: &Partition) -> Self {
        FerrersDiagram { rows: complementary(l) }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for &len in &self.rows {
            if len == 0 {
                out.push('.');
            } else {
                out.push_str(&"[]".repeat(len));
            }
            out.push('\n');
        }
        out
    }
}

/// Components of `Sing(Σ_λ)`, one per removable hook of `λ̃`.
///
/// In decreasing orientation `ν`, each descent `ν_i > ν_{i+1} >= 1` gives a hook: row `i`
/// and every following row of length `ν_{i+1}` shrink to `ν_{i+1} - 1`.
pub fn singular_locus(l: &Partition) -> Vec<Partition> {
    let mut nu = complementary(l);
    nu.reverse();
    let mut out = BTreeSet::new();
    for i in 0..nu.len().saturating_sub(1) {
        let j = nu[i + 1];
        if nu[i] > j && j >= 1 {
            let mut m = nu.clone();
            m[i] = j - 1;
            for x in m.iter_mut().skip(i + 1).take_while(|x| **x == j) {
                *x = j - 1;
            }
            m.reverse();
            out.insert(Partition::from_complement(l.r, l.n, &m).expect("hook removal stays in the box"));
        }
    }
    out.into_iter().collect()
}

/// Multiplicity of `Σ_λ` at a general point of `Σ_μ`, via the binomial determinant.
pub fn multiplicity(l: &Partition, mu: &Partition) -> Result<BigInt> {
    if !contains(l, mu)? {
        return Err(Error::Precondition(format!(
            "multiplicity needs Σ_μ ⊆ Σ_λ, i.e. μ >= λ entrywise; got λ={:?}, μ={:?}",
            l.parts, mu.parts
        )));
    }
    let m = l.r + 1;
    let nr = (l.n - l.r) as i64;
    let lam = |i: usize| l.parts[i - 1] as i64;
    let mu_ = |i: usize| mu.parts[i - 1] as i64;
    let s: Vec<i64> = (1..=m)
        .map(|i| (1..=m).filter(|&j| mu_(j) - (j as i64) < lam(i) - i as i64).count() as i64)
        .collect();
    let t: Vec<i64> = (1..=m).map(|i| nr + i as i64 - lam(i)).collect();
    let mat: Vec<Vec<BigInt>> = (1..=m as i64)
        .map(|k| (0..m).map(|l| binom_big(t[l], k - 1 - s[l])).collect())
        .collect();
    Ok(det_big(&mat).abs())
}

/// Degree of G(r,n) in the Plücker embedding: standard Young tableaux of the
/// `(r+1) × (n-r)` rectangle, by the hook-length formula.
pub fn grass_degree(r: usize, n: usize) -> Result<BigInt> {
    if n < r + 1 {
        return Err(Error::InvalidShape(format!("G({r},{n}) needs n >= r+1")));
    }
    let (a, b) = (r + 1, n - r);
    let mut num = BigInt::one();
    for x in 2..=(a * b) {
        num *= x;
    }
    let mut den = BigInt::one();
    for i in 0..a {
        for j in 0..b {
            den *= (a - i) + (b - j) - 1;
        }
    }
    Ok(num / den)
}

/// Number of distinct nonzero row lengths of `λ̃`.
pub fn rectangle_count(l: &Partition) -> usize {
    complementary(l).into_iter().filter(|&x| x > 0).collect::<BTreeSet<_>>().len()
}

/// `R'_i = Σ_{((n-r-i)^{r+1-i}, 0^i)}`, a Schubert variety of dimension `i(n+1-i)`.
pub fn r_prime(r: usize, n: usize, i: usize) -> Result<Partition> {
    if i > r + 1 {
        return Err(Error::Precondition(format!("R'_i needs i <= r+1, got {i}")));
    }
    Partition::new(r, n, &vec![n.saturating_sub(r + i); r + 1 - i])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: usize, n: usize, v: &[usize]) -> Partition {
        Partition::new(r, n, v).unwrap()
    }

    #[test]
    fn complement_and_dimension() {
        let l = p(4, 9, &[2, 2, 2, 1, 0]);
        assert_eq!(complementary(&l), vec![3, 3, 3, 4, 5]);
        assert_eq!(schubert_dim(&l) + codim(&l), 25);
        assert_eq!(rectangle_count(&l), 3);
        for i in 0..=3 {
            assert_eq!(schubert_dim(&r_prime(2, 7, i).unwrap()), i * (8 - i));
        }
        assert_eq!(FerrersDiagram { rows: vec![1, 2] }.render(), "[]\n[][]\n");
    }

    #[test]
    fn containment_in_g14() {
        let s = |v: &[usize]| p(1, 4, v);
        assert!(contains(&s(&[1]), &s(&[2])).unwrap());
        assert!(contains(&s(&[2]), &s(&[3])).unwrap());
        assert!(!contains(&s(&[3]), &s(&[1, 1])).unwrap());
        assert!(contains(&s(&[1]), &s(&[1, 1])).unwrap());
        assert!(contains(&s(&[]), &s(&[3, 2])).unwrap());
    }

    #[test]
    fn singular_locus_by_hooks() {
        let sing = singular_locus(&p(4, 9, &[2, 2, 2, 1]));
        let tildes: BTreeSet<Vec<usize>> = sing.iter().map(complementary).collect();
        assert_eq!(tildes, BTreeSet::from([vec![2, 2, 2, 2, 5], vec![3, 3, 3, 3, 3]]));
        assert!(singular_locus(&p(4, 9, &[2, 2, 2, 2, 2])).is_empty());
        assert!(singular_locus(&p(4, 9, &[])).is_empty());
        // Sing(R'_i) = R'_{i-1} for 1 <= i <= r; R'_{r+1} is all of G(r,n)
        assert!(singular_locus(&r_prime(2, 7, 3).unwrap()).is_empty());
        for i in 1..=2 {
            assert_eq!(singular_locus(&r_prime(2, 7, i).unwrap()), vec![r_prime(2, 7, i - 1).unwrap()]);
        }
    }

    #[test]
    fn multiplicities() {
        let m = multiplicity(&p(4, 9, &[2, 2, 2, 1]), &p(4, 9, &[3, 3, 3, 3, 2])).unwrap();
        assert_eq!(m, BigInt::from(14));
        for n in 5..=9 {
            let d = p(2, n, &[1]);
            let got: Vec<BigInt> = (0..3).map(|i| multiplicity(&d, &r_prime(2, n, i).unwrap()).unwrap()).collect();
            assert_eq!(got, vec![BigInt::from(3), BigInt::from(2), BigInt::from(1)]);
        }
        assert!(multiplicity(&p(1, 4, &[3]), &p(1, 4, &[1, 1])).is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(grass_degree(1, 4).unwrap(), BigInt::from(5));
        assert_eq!(grass_degree(1, 3).unwrap(), BigInt::from(2));
        assert_eq!(grass_degree(2, 5).unwrap(), BigInt::from(42));
        assert_eq!(grass_degree(0, 7).unwrap(), BigInt::from(1));
    }
}
