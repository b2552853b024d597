//! Closed-form non-defectivity bounds and osculating-space dimensions.

use serde::{Deserialize, Serialize};

use crate::comb::binom;
use crate::plucker_index::{normalize_grass, IndexShape};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundName {
    MainGrass,
    LinearCorollary,
    Aop,
    MainSv,
}

/// Result of a bound evaluation, normalized to "not h-defective for every h <= max_h".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub shape: IndexShape,
    pub bound_name: BoundName,
    pub max_h: u128,
    /// The value appearing in the theorem as stated.
    pub raw_value: u128,
    pub raw_statement: String,
    pub case_taken: String,
    pub alpha: Option<u64>,
    pub r_prime: Option<i64>,
    pub r_double_prime: Option<i64>,
    /// Original `(r, n)` when the Grassmannian was rewritten as its dual.
    pub normalized_from: Option<(usize, usize)>,
}

/// `h_m(k) = Σ m^(λ_i - 1)` where `k+1 = Σ 2^λ_i + ε`, `λ_i >= 1`, `ε ∈ {0,1}`.
pub fn h_m(m: u64, k: u64) -> Result<u128> {
    if m < 2 {
        return Err(Error::Precondition(format!("h_m needs m >= 2, got {m}")));
    }
    let bits = (k + 1) >> 1;
    let mut total: u128 = 0;
    for lambda in 1..=64u32 {
        if bits >> (lambda - 1) & 1 == 1 {
            let term = (m as u128)
                .checked_pow(lambda - 1)
                .ok_or(Error::Overflow("h_m"))?;
            total = total.checked_add(term).ok_or(Error::Overflow("h_m"))?;
        }
    }
    Ok(total)
}

/// `h_m` extended by zero to negative arguments.
fn h_or_zero(m: u64, k: i64) -> Result<u128> {
    if k < 0 {
        Ok(0)
    } else {
        h_m(m, k as u64)
    }
}

fn grass_domain(r: usize, n: usize) -> Result<(u64, u64, Option<(usize, usize)>)> {
    let (r2, n2, flipped) = normalize_grass(r, n)?;
    if r2 < 2 {
        return Err(Error::Precondition(format!(
            "the Grassmannian bounds assume r >= 2 (got G({r2},{n2}))"
        )));
    }
    Ok((r2 as u64, n2 as u64, flipped.then_some((r, n))))
}

fn mul_add(a: u128, b: u128, c: u128) -> Result<u128> {
    a.checked_mul(b)
        .and_then(|x| x.checked_add(c))
        .ok_or(Error::Overflow("bound"))
}

pub fn grass_bound(r: usize, n: usize) -> Result<BoundReport> {
    let (r, n, normalized_from) = grass_domain(r, n)?;
    let alpha = (n + 1) / (r + 1);
    let threshold = r * r + 3 * r + 1;
    let (raw, case, rp, rpp) = if n >= threshold {
        let v = mul_add(alpha as u128, h_m(alpha, r - 1)?, 0)?;
        (v, "n >= r^2+3r+1", None, None)
    } else if r % 2 == 0 {
        let rp = n as i64 - 2 - (alpha * r) as i64;
        let v = mul_add((alpha - 1) as u128, h_m(alpha, r - 1)?, h_or_zero(alpha, rp)?)?;
        (v, "n < r^2+3r+1, r even", Some(rp), None)
    } else {
        let rpp = (n as i64 - 3 - (alpha * (r - 1)) as i64).min(r as i64 - 2);
        let v = mul_add((alpha - 1) as u128, h_m(alpha, r - 2)?, h_or_zero(alpha, rpp)?)?;
        (v, "n < r^2+3r+1, r odd", None, Some(rpp))
    };
    Ok(BoundReport {
        shape: IndexShape::Grass {
            r: r as usize,
            n: n as usize,
        },
        bound_name: BoundName::MainGrass,
        max_h: raw + 1,
        raw_value: raw,
        raw_statement: format!("not (h+1)-defective for h <= {raw}"),
        case_taken: case.into(),
        alpha: Some(alpha),
        r_prime: rp,
        r_double_prime: rpp,
        normalized_from,
    })
}

pub fn linear_bound(r: usize, n: usize) -> Result<BoundReport> {
    let (r, n, normalized_from) = grass_domain(r, n)?;
    let alpha = (n + 1) / (r + 1);
    let (v, case) = if n > r * r + 3 * r {
        ((r / 2) * alpha + 1, "n >= r^2+3r+1")
    } else if r % 2 == 0 {
        (n.div_ceil(2) - r / 2, "n < r^2+3r+1, r even")
    } else {
        (
            ((r - 1) / 2 * alpha + 1).min(n / 2 - (r - 1) / 2),
            "n < r^2+3r+1, r odd",
        )
    };
    Ok(BoundReport {
        shape: IndexShape::Grass {
            r: r as usize,
            n: n as usize,
        },
        bound_name: BoundName::LinearCorollary,
        max_h: v as u128,
        raw_value: v as u128,
        raw_statement: format!("not h-defective for h <= {v}"),
        case_taken: case.into(),
        alpha: Some(alpha),
        r_prime: None,
        r_double_prime: None,
        normalized_from,
    })
}

pub fn aop_bound(r: usize, n: usize) -> Result<BoundReport> {
    let (r, n, normalized_from) = grass_domain(r, n)?;
    let v = (n - r) / 3 + 1;
    Ok(BoundReport {
        shape: IndexShape::Grass {
            r: r as usize,
            n: n as usize,
        },
        bound_name: BoundName::Aop,
        max_h: v as u128,
        raw_value: v as u128,
        raw_statement: format!("not h-defective for h <= (n-r)/3+1, i.e. h <= {v}"),
        case_taken: "h <= (n-r)/3+1".into(),
        alpha: None,
        r_prime: None,
        r_double_prime: None,
        normalized_from,
    })
}

pub fn sv_bound(ns: &[usize], ds: &[usize]) -> Result<BoundReport> {
    let shape = IndexShape::segre_veronese(ns, ds)?;
    let IndexShape::SegreVeronese { ns, ds } = &shape else {
        unreachable!()
    };
    let d: usize = ds.iter().sum();
    if d < 3 {
        return Err(Error::Precondition(format!(
            "the Segre–Veronese bound needs d = d_1+...+d_r >= 3, got {d}"
        )));
    }
    let n1 = ns[0] as u64;
    let v = mul_add(n1 as u128, h_m(n1 + 1, d as u64 - 2)?, 1)?;
    Ok(BoundReport {
        shape: shape.clone(),
        bound_name: BoundName::MainSv,
        max_h: v,
        raw_value: v,
        raw_statement: format!("not h-defective for h <= {v}"),
        case_taken: "h <= n_1 h_{n_1+1}(d-2) + 1".into(),
        alpha: None,
        r_prime: None,
        r_double_prime: None,
        normalized_from: None,
    })
}

/// Projective dimension of the s-th osculating space of `G(r,n)` at any point.
pub fn osculating_dim_grass(r: usize, n: usize, s: usize) -> Result<u128> {
    let (r, n, _) = normalize_grass(r, n)?;
    let full = binom(n as u64 + 1, r as u64 + 1).ok_or(Error::Overflow("ambient dimension"))? - 1;
    if s > r {
        return Ok(full);
    }
    let mut total: u128 = 0;
    for l in 1..=s as u64 {
        let a = binom(r as u64 + 1, l).ok_or(Error::Overflow("osculating dimension"))?;
        let b = binom((n - r) as u64, l).ok_or(Error::Overflow("osculating dimension"))?;
        total = mul_add(a, b, total)?;
    }
    Ok(total)
}

/// Projective dimension of the s-th osculating space of a Segre–Veronese variety.
pub fn osculating_dim_sv(ns: &[usize], ds: &[usize], s: usize) -> Result<u128> {
    let shape = IndexShape::segre_veronese(ns, ds)?;
    let IndexShape::SegreVeronese { ns, ds } = &shape else {
        unreachable!()
    };
    let d: usize = ds.iter().sum();
    if s >= d {
        return shape
            .coordinate_count()
            .map(|c| c - 1)
            .ok_or(Error::Overflow("ambient dimension"));
    }
    // counts[l] = number of ways to split total order l over the factors with l_j <= d_j,
    // weighted by Π binom(n_j + l_j - 1, l_j)
    let mut counts = vec![0u128; s + 1];
    counts[0] = 1;
    for (&n, &dj) in ns.iter().zip(ds) {
        let mut next = vec![0u128; s + 1];
        for (l, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for lj in 0..=dj.min(s - l) {
                let w = binom((n + lj) as u64 - 1, lj as u64).ok_or(Error::Overflow("osculating dimension"))?;
                next[l + lj] = mul_add(c, w, next[l + lj])?;
            }
        }
        counts = next;
    }
    counts[1..]
        .iter()
        .try_fold(0u128, |acc, &c| acc.checked_add(c))
        .ok_or(Error::Overflow("osculating dimension"))
}
