use serde::{Deserialize, Serialize};

use crate::plucker_index::{enumerate_indices, grass_indices, sv_indices, Index, IndexShape};
use crate::{Error, Result};

/// A variety the oracle knows how to parametrize.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExtendedShape {
    Grass { r: usize, n: usize },
    SegreVeronese { ns: Vec<usize>, ds: Vec<usize> },
    RationalNormalCurve { n: usize },
    TangentDevelopable { n: usize },
}

impl From<IndexShape> for ExtendedShape {
    fn from(s: IndexShape) -> Self {
        match s {
            IndexShape::Grass { r, n } => ExtendedShape::Grass { r, n },
            IndexShape::SegreVeronese { ns, ds } => ExtendedShape::SegreVeronese { ns, ds },
        }
    }
}

impl ExtendedShape {
    pub fn grass(r: usize, n: usize) -> Result<Self> {
        Ok(IndexShape::grass(r, n)?.into())
    }

    pub fn segre_veronese(ns: &[usize], ds: &[usize]) -> Result<Self> {
        Ok(IndexShape::segre_veronese(ns, ds)?.into())
    }

    pub fn rational_normal_curve(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidShape("rational normal curve needs n >= 1".into()));
        }
        Ok(ExtendedShape::RationalNormalCurve { n })
    }

    pub fn tangent_developable(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidShape("tangent developable needs n >= 2".into()));
        }
        Ok(ExtendedShape::TangentDevelopable { n })
    }

    pub fn dim(&self) -> usize {
        match self {
            ExtendedShape::Grass { r, n } => (r + 1) * (n - r),
            ExtendedShape::SegreVeronese { ns, .. } => ns.iter().sum(),
            ExtendedShape::RationalNormalCurve { .. } => 1,
            ExtendedShape::TangentDevelopable { .. } => 2,
        }
    }

    /// Number of homogeneous coordinates.
    pub fn coordinate_count(&self) -> Option<u128> {
        match self {
            ExtendedShape::Grass { r, n } => IndexShape::Grass { r: *r, n: *n }.coordinate_count(),
            ExtendedShape::SegreVeronese { ns, ds } => IndexShape::SegreVeronese {
                ns: ns.clone(),
                ds: ds.clone(),
            }
            .coordinate_count(),
            ExtendedShape::RationalNormalCurve { n } | ExtendedShape::TangentDevelopable { n } => {
                Some(*n as u128 + 1)
            }
        }
    }

    /// The index shape whose distance governs osculating spaces at coordinate points.
    /// The rational normal curve of degree n is the Veronese embedding of P^1.
    pub fn index_shape(&self) -> Option<IndexShape> {
        match self {
            ExtendedShape::Grass { r, n } => Some(IndexShape::Grass { r: *r, n: *n }),
            ExtendedShape::SegreVeronese { ns, ds } => Some(IndexShape::SegreVeronese {
                ns: ns.clone(),
                ds: ds.clone(),
            }),
            ExtendedShape::RationalNormalCurve { n } => Some(IndexShape::SegreVeronese {
                ns: vec![1],
                ds: vec![*n],
            }),
            ExtendedShape::TangentDevelopable { .. } => None,
        }
    }
}

/// `coeff · Π x_v^exps[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: i64,
    pub exps: Vec<u32>,
}

/// Size limits guarding parametrization and jet construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_coordinates: u128,
    pub max_terms: u128,
    pub max_jet_rows: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_coordinates: 20_000,
            max_terms: 5_000_000,
            max_jet_rows: 2_000_000,
        }
    }
}

/// A polynomial map from affine space onto the affine cone over a variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parametrization {
    pub shape: ExtendedShape,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub coords: Vec<Vec<Monomial>>,
    /// Variables that, with the others held at a general value, give an affine chart.
    pub chart_vars: Vec<usize>,
}

pub fn build_parametrization(shape: &ExtendedShape, caps: &Caps) -> Result<Parametrization> {
    let count = shape.coordinate_count().unwrap_or(u128::MAX);
    if count > caps.max_coordinates {
        return Err(Error::CapExceeded {
            name: "max_coordinates",
            value: count,
            limit: caps.max_coordinates,
        });
    }
    match shape {
        ExtendedShape::Grass { r, n } => grass_param(shape, *r, *n, caps),
        ExtendedShape::SegreVeronese { ns, ds } => Ok(sv_param(shape, ns, ds)),
        ExtendedShape::RationalNormalCurve { n } => {
            let coords = (0..=*n)
                .map(|k| {
                    vec![Monomial {
                        coeff: 1,
                        exps: vec![k as u32],
                    }]
                })
                .collect();
            Ok(Parametrization {
                shape: shape.clone(),
                domain_dim: 1,
                codomain_dim: n + 1,
                coords,
                chart_vars: vec![0],
            })
        }
        ExtendedShape::TangentDevelopable { n } => {
            // (1, t+u, t^2+2tu, ..., t^n + n t^(n-1) u)
            let mut coords = vec![vec![Monomial {
                coeff: 1,
                exps: vec![0, 0],
            }]];
            for k in 1..=*n as u32 {
                coords.push(vec![
                    Monomial {
                        coeff: 1,
                        exps: vec![k, 0],
                    },
                    Monomial {
                        coeff: k as i64,
                        exps: vec![k - 1, 1],
                    },
                ]);
            }
            Ok(Parametrization {
                shape: shape.clone(),
                domain_dim: 2,
                codomain_dim: n + 1,
                coords,
                chart_vars: vec![0, 1],
            })
        }
    }
}

fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let inversions = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        out.push((perm.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
        // next permutation in lexicographic order
        let Some(i) = (1..k).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

fn grass_param(shape: &ExtendedShape, r: usize, n: usize, caps: &Caps) -> Result<Parametrization> {
    if r > 5 {
        return Err(Error::CapExceeded {
            name: "minor expansion (r <= 5)",
            value: r as u128,
            limit: 5,
        });
    }
    let k = r + 1;
    let cols = n + 1;
    let perms = permutations_with_sign(k);
    let indices = grass_indices(r, n);
    let terms = indices.len() as u128 * perms.len() as u128;
    if terms > caps.max_terms {
        return Err(Error::CapExceeded {
            name: "max_terms",
            value: terms,
            limit: caps.max_terms,
        });
    }
    let var = |row: usize, col: usize| row * cols + col;
    let coords = indices
        .iter()
        .map(|idx| {
            let j = idx.entries();
            perms
                .iter()
                .map(|(p, sign)| {
                    let mut exps = vec![0u32; k * cols];
                    for (row, &c) in p.iter().enumerate() {
                        exps[var(row, j[c])] += 1;
                    }
                    Monomial { coeff: *sign, exps }
                })
                .collect()
        })
        .collect();
    let chart_vars = (0..k)
        .flat_map(|row| (k..cols).map(move |c| var(row, c)))
        .collect();
    Ok(Parametrization {
        shape: shape.clone(),
        domain_dim: k * cols,
        codomain_dim: indices.len(),
        coords,
        chart_vars,
    })
}

fn sv_param(shape: &ExtendedShape, ns: &[usize], ds: &[usize]) -> Parametrization {
    let offsets: Vec<usize> = ns
        .iter()
        .scan(0, |acc, &n| {
            let o = *acc;
            *acc += n + 1;
            Some(o)
        })
        .collect();
    let domain_dim: usize = ns.iter().map(|n| n + 1).sum();
    let coords: Vec<Vec<Monomial>> = sv_indices(ns, ds)
        .iter()
        .map(|idx| {
            let mut exps = vec![0u32; domain_dim];
            for (f, part) in idx.parts().iter().enumerate() {
                for &i in part {
                    exps[offsets[f] + i] += 1;
                }
            }
            vec![Monomial { coeff: 1, exps }]
        })
        .collect();
    let chart_vars = ns
        .iter()
        .zip(&offsets)
        .flat_map(|(&n, &o)| (1..=n).map(move |i| o + i))
        .collect();
    Parametrization {
        shape: shape.clone(),
        domain_dim,
        codomain_dim: coords.len(),
        coords,
        chart_vars,
    }
}

/// Coordinate labels in column order, when the shape has coordinate points.
pub fn coordinate_labels(shape: &ExtendedShape) -> Option<Vec<Index>> {
    shape.index_shape().map(|s| enumerate_indices(&s))
}

/// The domain point mapping to the coordinate point `e_I` of a Grassmannian or
/// Segre–Veronese variety, with chart variables valid at that point.
pub fn coordinate_point(shape: &ExtendedShape, idx: &Index) -> Result<(Vec<i64>, Vec<usize>)> {
    match (shape, idx) {
        (ExtendedShape::Grass { r, n }, Index::Grass(i)) if i.context() == (*r, *n) => {
            let cols = n + 1;
            let mut pt = vec![0i64; (r + 1) * cols];
            let mut chart = Vec::new();
            for (row, &c) in i.entries().iter().enumerate() {
                pt[row * cols + c] = 1;
                for col in (0..cols).filter(|col| !i.entries().contains(col)) {
                    chart.push(row * cols + col);
                }
            }
            Ok((pt, chart))
        }
        (ExtendedShape::SegreVeronese { ns, .. }, Index::Sv(i)) => {
            let (mut pt, mut chart) = (Vec::new(), Vec::new());
            for (part, &n) in i.parts().iter().zip(ns) {
                if part.iter().any(|&x| x != part[0]) {
                    return Err(Error::Precondition(
                        "coordinate points of a Segre–Veronese variety have constant factors".into(),
                    ));
                }
                let o = pt.len();
                chart.extend((0..=n).filter(|&v| v != part[0]).map(|v| o + v));
                let mut f = vec![0i64; n + 1];
                f[part[0]] = 1;
                pt.extend(f);
            }
            Ok((pt, chart))
        }
        (ExtendedShape::RationalNormalCurve { .. }, Index::Sv(i)) if i.parts()[0].iter().all(|&x| x == 0) => {
            Ok((vec![0], vec![0]))
        }
        _ => Err(Error::ContextMismatch("index is not a supported coordinate point of the shape".into())),
    }
}
