use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::comb::binom_big;
use crate::{Error, Result};

/// Coefficients `c_0..c_s` of the limit hyperplane `Σ c_k t^k (...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LimitHyperplane {
    /// `s < D - k2`: the coordinate hyperplane `c = (1, 0, ..., 0)` already works.
    Trivial(Vec<BigInt>),
    Solved(Vec<BigInt>),
}

impl LimitHyperplane {
    pub fn coefficients(&self) -> &[BigInt] {
        match self {
            LimitHyperplane::Trivial(c) | LimitHyperplane::Solved(c) => c,
        }
    }
}

fn check(d: i64, s: i64, sbar: i64, k1: i64, k2: i64) -> Result<()> {
    if d <= k1 + k2 + 1 || s < 0 || s > d || sbar < 0 || k1 < 0 || k2 < 0 {
        return Err(Error::Precondition(format!(
            "limit system needs D > k1+k2+1, 0 <= s <= D, sbar, k1, k2 >= 0; got D={d}, s={s}, sbar={sbar}, k1={k1}, k2={k2}"
        )));
    }
    Ok(())
}

/// The `m × m` block `binom(sbar + j, j - k)`, `j ∈ [D-k2, s]`, `k ∈ [1, m]`.
pub fn limit_minor(d: i64, s: i64, sbar: i64, k2: i64) -> Vec<Vec<BigInt>> {
    let m = s - d + k2 + 1;
    (d - k2..=s)
        .map(|j| (1..=m).map(|k| binom_big(sbar + j, j - k)).collect())
        .collect()
}

/// Solves the limit-hyperplane system with `c_0` normalized to be positive.
///
/// Equations: `c_j = 0` for `j ∈ [D-k1, s]` and `Σ_{k<=j} binom(sbar+j, j-k) c_k = 0`
/// for `j ∈ [D-k2, s]`. The returned solution is supported on `c_0..c_m`, `m = s-D+k2+1`.
pub fn limit_hyperplane_coeffs(d: i64, s: i64, sbar: i64, k1: i64, k2: i64) -> Result<LimitHyperplane> {
    check(d, s, sbar, k1, k2)?;
    let len = s as usize + 1;
    if s < d - k2 {
        let mut c = vec![BigInt::zero(); len];
        c[0] = BigInt::one();
        return Ok(LimitHyperplane::Trivial(c));
    }
    let m = (s - d + k2 + 1) as usize;
    // M x = -b with b_j = binom(sbar + j, j)
    let mut a: Vec<Vec<BigRational>> = limit_minor(d, s, sbar, k2)
        .into_iter()
        .zip(d - k2..=s)
        .map(|(row, j)| {
            let mut r: Vec<BigRational> = row.into_iter().map(BigRational::from_integer).collect();
            r.push(BigRational::from_integer(-binom_big(sbar + j, j)));
            r
        })
        .collect();
    for col in 0..m {
        let piv = (col..m)
            .find(|&i| !a[i][col].is_zero())
            .expect("limit minor is nonsingular");
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in col..=m {
                    let v = &f * &a[col][j];
                    a[i][j] -= v;
                }
            }
        }
    }
    let mut sol = vec![BigRational::zero(); len];
    sol[0] = BigRational::one();
    for k in 0..m {
        sol[k + 1] = a[k][m].clone();
    }
    let den = sol.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut c: Vec<BigInt> = sol.iter().map(|q| (q * &den).to_integer()).collect();
    let g = c.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    for x in c.iter_mut() {
        *x /= &g;
    }
    if c[0].is_negative() {
        for x in c.iter_mut() {
            *x = -x.clone();
        }
    }
    let res = limit_residuals(d, s, sbar, k1, k2, &c)?;
    if res.iter().any(|r| !r.is_zero()) {
        return Err(Error::Precondition("limit system has no solution with c_0 != 0".into()));
    }
    Ok(LimitHyperplane::Solved(c))
}

/// Left-hand sides of every equation of the system at `c` (zero conditions first).
pub fn limit_residuals(d: i64, s: i64, sbar: i64, k1: i64, k2: i64, c: &[BigInt]) -> Result<Vec<BigInt>> {
    check(d, s, sbar, k1, k2)?;
    if c.len() != s as usize + 1 {
        return Err(Error::ContextMismatch(format!("need {} coefficients", s + 1)));
    }
    let mut out: Vec<BigInt> = (d - k1..=s).map(|j| c[j as usize].clone()).collect();
    for j in d - k2..=s {
        out.push(
            (0..=j)
                .map(|k| binom_big(sbar + j, j - k) * &c[k as usize])
                .sum(),
        );
    }
    Ok(out)
}

/// Exact determinant by fraction-free elimination.
pub fn det_big(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}
