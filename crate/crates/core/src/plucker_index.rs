//! Plücker and Segre–Veronese coordinate indices, their distances, balls and
//! the translate families `Δ(I, l)`.

use serde::{Deserialize, Serialize};

use crate::comb::{binom, combinations, multisets};
use crate::{Error, Result};

/// Which variety the coordinates belong to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IndexShape {
    Grass { r: usize, n: usize },
    SegreVeronese { ns: Vec<usize>, ds: Vec<usize> },
}

/// Rewrites `G(r,n)` as `G(n-r-1,n)` when `n < 2r+1`. Returns the new pair and whether it changed.
pub fn normalize_grass(r: usize, n: usize) -> Result<(usize, usize, bool)> {
    if n < r + 1 {
        return Err(Error::InvalidShape(format!(
            "G({r},{n}) needs n >= r+1"
        )));
    }
    if n < 2 * r + 1 {
        Ok((n - r - 1, n, true))
    } else {
        Ok((r, n, false))
    }
}

impl IndexShape {
    /// Grassmannian of r-planes in P^n, normalized so that n >= 2r+1.
    pub fn grass(r: usize, n: usize) -> Result<Self> {
        let (r, n, _) = normalize_grass(r, n)?;
        Ok(IndexShape::Grass { r, n })
    }

    /// Segre–Veronese variety; factors are sorted by `(n_j, d_j)`.
    pub fn segre_veronese(ns: &[usize], ds: &[usize]) -> Result<Self> {
        if ns.is_empty() || ns.len() != ds.len() {
            return Err(Error::InvalidShape(
                "need the same positive number of dimensions and degrees".into(),
            ));
        }
        if ns.iter().chain(ds).any(|&x| x == 0) {
            return Err(Error::InvalidShape(
                "all n_j and d_j must be at least 1".into(),
            ));
        }
        let mut f: Vec<(usize, usize)> = ns.iter().copied().zip(ds.iter().copied()).collect();
        f.sort();
        Ok(IndexShape::SegreVeronese {
            ns: f.iter().map(|x| x.0).collect(),
            ds: f.iter().map(|x| x.1).collect(),
        })
    }

    /// Dimension of the variety.
    pub fn dim(&self) -> usize {
        match self {
            IndexShape::Grass { r, n } => (r + 1) * (n - r),
            IndexShape::SegreVeronese { ns, .. } => ns.iter().sum(),
        }
    }

    /// Number of homogeneous coordinates `N+1`, or `None` if it does not fit.
    pub fn coordinate_count(&self) -> Option<u128> {
        match self {
            IndexShape::Grass { r, n } => binom(*n as u64 + 1, *r as u64 + 1),
            IndexShape::SegreVeronese { ns, ds } => {
                ns.iter().zip(ds).try_fold(1u128, |acc, (&n, &d)| {
                    acc.checked_mul(binom((n + d) as u64, n as u64)?)
                })
            }
        }
    }

    /// Largest possible distance between two indices.
    pub fn diameter(&self) -> usize {
        match self {
            IndexShape::Grass { r, .. } => r + 1,
            IndexShape::SegreVeronese { ds, .. } => ds.iter().sum(),
        }
    }

    /// The coordinate point used as the default base point: `{0..r}` or all zeros.
    pub fn base_index(&self) -> Index {
        match self {
            IndexShape::Grass { r, n } => Index::Grass(PluckerIndex {
                entries: (0..=*r).collect(),
                r: *r,
                n: *n,
            }),
            IndexShape::SegreVeronese { ns, ds } => Index::Sv(SVIndex {
                parts: ds.iter().map(|&d| vec![0; d]).collect(),
                ns: ns.clone(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PluckerIndex {
    entries: Vec<usize>,
    r: usize,
    n: usize,
}

impl PluckerIndex {
    pub fn new(r: usize, n: usize, entries: &[usize]) -> Result<Self> {
        let mut e = entries.to_vec();
        e.sort_unstable();
        e.dedup();
        if e.len() != r + 1 || e.iter().any(|&x| x > n) {
            return Err(Error::InvalidShape(format!(
                "{entries:?} is not an (r+1)-subset of {{0..{n}}} for r={r}"
            )));
        }
        Ok(PluckerIndex { entries: e, r, n })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn context(&self) -> (usize, usize) {
        (self.r, self.n)
    }

    fn intersection_size(&self, other: &PluckerIndex) -> usize {
        let (mut i, mut j, mut c) = (0, 0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            match self.entries[i].cmp(&other.entries[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    c += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        c
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SVIndex {
    parts: Vec<Vec<usize>>,
    ns: Vec<usize>,
}

impl SVIndex {
    pub fn new(ns: &[usize], ds: &[usize], parts: &[Vec<usize>]) -> Result<Self> {
        if parts.len() != ns.len() || ds.len() != ns.len() {
            return Err(Error::InvalidShape("wrong number of factors".into()));
        }
        let mut out = Vec::with_capacity(parts.len());
        for ((p, &n), &d) in parts.iter().zip(ns).zip(ds) {
            let mut p = p.clone();
            p.sort_unstable();
            if p.len() != d || p.iter().any(|&x| x > n) {
                return Err(Error::InvalidShape(format!(
                    "factor {p:?} is not a {d}-multiset of {{0..{n}}}"
                )));
            }
            out.push(p);
        }
        Ok(SVIndex {
            parts: out,
            ns: ns.to_vec(),
        })
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    fn degrees(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Index {
    Grass(PluckerIndex),
    Sv(SVIndex),
}

impl Index {
    pub fn distance(&self, other: &Index) -> Result<usize> {
        match (self, other) {
            (Index::Grass(a), Index::Grass(b)) => grass_distance(a, b),
            (Index::Sv(a), Index::Sv(b)) => sv_distance(a, b),
            _ => Err(Error::ContextMismatch(
                "Plücker index compared with Segre–Veronese index".into(),
            )),
        }
    }

    fn belongs_to(&self, shape: &IndexShape) -> bool {
        match (self, shape) {
            (Index::Grass(i), IndexShape::Grass { r, n }) => i.context() == (*r, *n),
            (Index::Sv(i), IndexShape::SegreVeronese { ns, ds }) => {
                &i.ns == ns && &i.degrees() == ds
            }
            _ => false,
        }
    }
}

/// Every coordinate index of the shape in lexicographic order.
pub fn enumerate_indices(shape: &IndexShape) -> Vec<Index> {
    match shape {
        IndexShape::Grass { r, n } => grass_indices(*r, *n).into_iter().map(Index::Grass).collect(),
        IndexShape::SegreVeronese { ns, ds } => {
            sv_indices(ns, ds).into_iter().map(Index::Sv).collect()
        }
    }
}

pub fn grass_indices(r: usize, n: usize) -> Vec<PluckerIndex> {
    combinations(n + 1, r + 1)
        .into_iter()
        .map(|entries| PluckerIndex { entries, r, n })
        .collect()
}

pub fn sv_indices(ns: &[usize], ds: &[usize]) -> Vec<SVIndex> {
    let factors: Vec<Vec<Vec<usize>>> = ns.iter().zip(ds).map(|(&n, &d)| multisets(n, d)).collect();
    let mut out = vec![Vec::<Vec<usize>>::new()];
    for f in &factors {
        let mut next = Vec::with_capacity(out.len() * f.len());
        for prefix in &out {
            for t in f {
                let mut p = prefix.clone();
                p.push(t.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|parts| SVIndex {
            parts,
            ns: ns.to_vec(),
        })
        .collect()
}

pub fn grass_distance(a: &PluckerIndex, b: &PluckerIndex) -> Result<usize> {
    if a.context() != b.context() {
        return Err(Error::ContextMismatch(format!(
            "G{:?} vs G{:?}",
            a.context(),
            b.context()
        )));
    }
    Ok(a.entries.len() - a.intersection_size(b))
}

/// Per factor, `d_j` minus the size of the multiset intersection, summed.
pub fn sv_distance(a: &SVIndex, b: &SVIndex) -> Result<usize> {
    if a.ns != b.ns || a.parts.iter().zip(&b.parts).any(|(p, q)| p.len() != q.len()) {
        return Err(Error::ContextMismatch("different Segre–Veronese shapes".into()));
    }
    let mut total = 0;
    for (p, q) in a.parts.iter().zip(&b.parts) {
        let (mut i, mut j, mut common) = (0, 0, 0);
        while i < p.len() && j < q.len() {
            match p[i].cmp(&q[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    common += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        total += p.len() - common;
    }
    Ok(total)
}

/// All indices at distance at most `s` from `center`.
pub fn ball(shape: &IndexShape, center: &Index, s: usize) -> Result<Vec<Index>> {
    if !center.belongs_to(shape) {
        return Err(Error::ContextMismatch("center does not belong to shape".into()));
    }
    let mut out = Vec::new();
    for j in enumerate_indices(shape) {
        if center.distance(&j)? <= s {
            out.push(j);
        }
    }
    Ok(out)
}

/// `Δ(I, l)` relative to the coordinate pair `I₁ = {0..r}`, `I₂ = {r+1..2r+1}`.
///
/// For `l >= 0` the members are `(I∖J) ∪ (J+r+1)` with `J ⊂ I ∩ I₁`, `|J| = l`;
/// for `l < 0` they are the `J` with `I ∈ Δ(J, -l)`.
pub fn delta_set(i: &PluckerIndex, l: i64) -> Result<Vec<PluckerIndex>> {
    let (r, n) = i.context();
    if n < 2 * r + 1 {
        return Err(Error::InvalidShape(format!(
            "Δ-sets need n >= 2r+1, got G({r},{n})"
        )));
    }
    let shift = r + 1;
    let (pool, forward): (Vec<usize>, bool) = if l >= 0 {
        (i.entries.iter().copied().filter(|&x| x <= r).collect(), true)
    } else {
        (
            i.entries.iter().copied().filter(|&x| x > r && x <= 2 * r + 1).collect(),
            false,
        )
    };
    let l = l.unsigned_abs() as usize;
    let mut out = Vec::new();
    for pick in combinations(pool.len(), l) {
        let moved: Vec<usize> = pick.iter().map(|&p| pool[p]).collect();
        let mut entries: Vec<usize> = i.entries.iter().copied().filter(|x| !moved.contains(x)).collect();
        let kept = entries.len();
        for m in &moved {
            let t = if forward { m + shift } else { m - shift };
            if entries[..kept].contains(&t) {
                break;
            }
            entries.push(t);
        }
        if entries.len() == r + 1 {
            entries.sort_unstable();
            out.push(PluckerIndex { entries, r, n });
        }
    }
    out.sort();
    Ok(out)
}
