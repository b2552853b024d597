//! Blow-ups of G(r,n), smooth quadrics and P^n at k general points: anticanonical
//! classes, intersection numbers, curve cones, Fano and spherical catalogs, effective
//! cones and the Mori chambers of G(1,n)_1.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::comb::{binom, combinations};
use crate::plucker_index::normalize_grass;
use crate::schubert::grass_degree;
use crate::{Error, Result};

/// The variety being blown up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Ambient {
    Grass { r: usize, n: usize },
    Quadric { n: usize },
    Proj { n: usize },
}

impl Ambient {
    /// G(r,n) normalized to `n >= 2r+1`; `r = 0` is refused in favour of [`Ambient::proj`].
    pub fn grass(r: usize, n: usize) -> Result<Self> {
        let (r, n, _) = normalize_grass(r, n)?;
        if r == 0 {
            return Err(Error::Precondition(format!("G(0,{n}) is P^{n}; use the projective space")));
        }
        Ok(Ambient::Grass { r, n })
    }

    pub fn quadric(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidShape(format!("quadric Q^{n} needs n >= 2")));
        }
        Ok(Ambient::Quadric { n })
    }

    pub fn proj(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidShape(format!("P^{n} needs n >= 2")));
        }
        Ok(Ambient::Proj { n })
    }

    pub fn dim(&self) -> usize {
        match *self {
            Ambient::Grass { r, n } => (r + 1) * (n - r),
            Ambient::Quadric { n } | Ambient::Proj { n } => n,
        }
    }

    /// `H^dim`.
    pub fn degree(&self) -> BigInt {
        match *self {
            Ambient::Grass { r, n } => grass_degree(r, n).expect("normalized Grassmannian"),
            Ambient::Quadric { .. } => BigInt::from(2),
            Ambient::Proj { .. } => BigInt::from(1),
        }
    }

    /// Codimension in the minimal homogeneous embedding.
    pub fn codim(&self) -> u128 {
        match *self {
            Ambient::Grass { r, n } => {
                binom(n as u64 + 1, r as u64 + 1).expect("small Grassmannian") - 1 - self.dim() as u128
            }
            Ambient::Quadric { .. } => 1,
            Ambient::Proj { .. } => 0,
        }
    }

    /// `(index, discrepancy)` so that `-K = index·H - discrepancy·ΣE_i`.
    fn anticanonical_coeffs(&self) -> (i64, i64) {
        let d = self.dim() as i64 - 1;
        match *self {
            Ambient::Grass { n, .. } | Ambient::Proj { n } => (n as i64 + 1, d),
            Ambient::Quadric { n } => (n as i64, d),
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Grass { r, n } => write!(f, "G({r},{n})"),
            Ambient::Quadric { n } => write!(f, "Q^{n}"),
            Ambient::Proj { n } => write!(f, "P^{n}"),
        }
    }
}

/// `a·H - Σ b_i·E_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub a: i64,
    pub b: Vec<i64>,
}

impl DivisorClass {
    pub fn new(a: i64, b: Vec<i64>) -> Self {
        DivisorClass { a, b }
    }

    pub fn h(k: usize) -> Self {
        DivisorClass { a: 1, b: vec![0; k] }
    }

    /// The exceptional divisor `E_i` (0-based).
    pub fn e(i: usize, k: usize) -> Self {
        let mut b = vec![0; k];
        b[i] = -1;
        DivisorClass { a: 0, b }
    }
}

/// `c·h + Σ m_i·e_i`, with `h` a line pulled back and `e_i` a line in `E_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    pub c: i64,
    pub m: Vec<i64>,
}

impl CurveClass {
    pub fn new(c: i64, m: Vec<i64>) -> Self {
        CurveClass { c, m }
    }

    pub fn h(k: usize) -> Self {
        CurveClass { c: 1, m: vec![0; k] }
    }

    pub fn e(i: usize, k: usize) -> Self {
        let mut m = vec![0; k];
        m[i] = 1;
        CurveClass { c: 0, m }
    }

    /// `d·h - Σ_{i ∈ pts} e_i`.
    pub fn through(d: i64, pts: &[usize], k: usize) -> Self {
        let mut m = vec![0; k];
        for &i in pts {
            m[i] = -1;
        }
        CurveClass { c: d, m }
    }
}

fn fmt_class(f: &mut fmt::Formatter<'_>, lead: i64, base: &str, rest: &[i64], ebase: &str) -> fmt::Result {
    let mut terms = Vec::new();
    if lead != 0 {
        terms.push((lead, base.to_string()));
    }
    for (i, &x) in rest.iter().enumerate() {
        if x != 0 {
            terms.push((x, format!("{ebase}{}", i + 1)));
        }
    }
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (j, (x, name)) in terms.iter().enumerate() {
        let sign = if *x < 0 { "-" } else { "+" };
        if j == 0 {
            if *x < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        if x.abs() != 1 {
            write!(f, "{}", x.abs())?;
        }
        write!(f, "{name}")?;
    }
    Ok(())
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let neg: Vec<i64> = self.b.iter().map(|x| -x).collect();
        fmt_class(f, self.a, "H", &neg, "E")
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_class(f, self.c, "h", &self.m, "e")
    }
}

/// `-K` of the blow-up at `k` points.
pub fn anticanonical(amb: &Ambient, k: usize) -> DivisorClass {
    let (a, b) = amb.anticanonical_coeffs();
    DivisorClass { a, b: vec![b; k] }
}

/// `D·C` with `H·h = 1`, `E_i·e_i = -1`, all mixed products zero.
pub fn intersect(d: &DivisorClass, c: &CurveClass) -> Result<i64> {
    if d.b.len() != c.m.len() {
        return Err(Error::ContextMismatch(format!(
            "divisor on a blow-up at {} points, curve at {}",
            d.b.len(),
            c.m.len()
        )));
    }
    Ok(d.a * c.c + d.b.iter().zip(&c.m).map(|(b, m)| b * m).sum::<i64>())
}

/// `D^dim` using `H^dim = deg`, `E_i^dim = (-1)^(dim-1)`, mixed monomials zero.
pub fn top_self_intersection(amb: &Ambient, d: &DivisorClass) -> BigInt {
    let dim = amb.dim() as u32;
    let sign = if dim % 2 == 1 { 1 } else { -1 };
    let mut total = BigInt::from(d.a).pow(dim) * amb.degree();
    for &b in &d.b {
        total += BigInt::from(-b).pow(dim) * sign;
    }
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConeStatus {
    Proven,
    Conjectural,
}

/// Extremal generators of a cone with the result they come from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeData<T> {
    pub generators: Vec<T>,
    pub provenance: String,
    pub status: ConeStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "cone", rename_all = "snake_case")]
pub enum MoriCone {
    Proven(ConeData<CurveClass>),
    Unknown { reason: String },
}

fn lines_through_points(k: usize) -> Vec<CurveClass> {
    (0..k)
        .map(|i| CurveClass::e(i, k))
        .chain((0..k).map(|i| CurveClass::through(1, &[i], k)))
        .collect()
}

fn quadric_curve_bound(n: usize) -> usize {
    if n.is_multiple_of(2) {
        (3 * n + 2) / 2
    } else {
        (3 * n + 3) / 2
    }
}

fn quadric_cone(n: usize, k: usize) -> MoriCone {
    if n == 2 {
        return MoriCone::Unknown {
            reason: "Q^2 has Picard rank two; only the classification table applies".into(),
        };
    }
    if k <= 2 {
        return MoriCone::Proven(ConeData {
            generators: lines_through_points(k),
            provenance: "lines through the points; k <= codim + 1 = 2".into(),
            status: ConeStatus::Proven,
        });
    }
    let top = quadric_curve_bound(n);
    if k > top {
        return MoriCone::Unknown {
            reason: format!("conic generators are proven only for k <= {top} on Q^{n}"),
        };
    }
    let mut g = lines_through_points(k);
    g.extend(combinations(k, 3).into_iter().map(|t| CurveClass::through(2, &t, k)));
    MoriCone::Proven(ConeData {
        generators: g,
        provenance: format!("lines and conics through three points; 3 <= k <= {top}"),
        status: ConeStatus::Proven,
    })
}

/// Generators of the cone of curves where they are known.
pub fn mori_cone_generators(amb: &Ambient, k: usize) -> MoriCone {
    if k == 0 {
        return MoriCone::Proven(ConeData {
            generators: vec![CurveClass::h(0)],
            provenance: "Picard rank one".into(),
            status: ConeStatus::Proven,
        });
    }
    match *amb {
        Ambient::Grass { r: 1, n: 3 } if k >= 3 => quadric_cone(4, k),
        Ambient::Grass { .. } => {
            let codim = amb.codim();
            if k as u128 <= codim + 1 {
                MoriCone::Proven(ConeData {
                    generators: lines_through_points(k),
                    provenance: format!("lines through the points; k <= codim + 1 = {}", codim + 1),
                    status: ConeStatus::Proven,
                })
            } else {
                MoriCone::Unknown {
                    reason: format!("k = {k} exceeds codim + 1 = {}", codim + 1),
                }
            }
        }
        Ambient::Quadric { n } => quadric_cone(n, k),
        Ambient::Proj { n } => {
            if k == 1 {
                MoriCone::Proven(ConeData {
                    generators: lines_through_points(1),
                    provenance: "lines through the point; k <= codim + 1 = 1".into(),
                    status: ConeStatus::Proven,
                })
            } else if k <= 2 * n {
                let mut g: Vec<CurveClass> = (0..k).map(|i| CurveClass::e(i, k)).collect();
                g.extend(combinations(k, 2).into_iter().map(|p| CurveClass::through(1, &p, k)));
                MoriCone::Proven(ConeData {
                    generators: g,
                    provenance: format!("lines through two points; 2 <= k <= 2n = {}", 2 * n),
                    status: ConeStatus::Proven,
                })
            } else {
                MoriCone::Unknown {
                    reason: format!("line generators are proven only for k <= {}", 2 * n),
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FanoVerdict {
    Fano,
    WeakFanoOnly,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictSource {
    /// Derived from proven curve-cone generators and checked against the table.
    Computed,
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intersection {
    pub curve: CurveClass,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoReport {
    pub ambient: Ambient,
    pub k: usize,
    pub verdict: FanoVerdict,
    pub source: VerdictSource,
    pub computed: Option<FanoVerdict>,
    pub table: FanoVerdict,
    pub anticanonical: DivisorClass,
    pub intersections: Vec<Intersection>,
    /// `(-K)^dim` in decimal.
    pub top_self_intersection: String,
    pub cone_provenance: Option<String>,
}

/// The classification of Fano and weak Fano blow-ups at general points.
pub fn table_verdict(amb: &Ambient, k: usize) -> FanoVerdict {
    if k == 0 {
        return FanoVerdict::Fano;
    }
    let (fano, weak) = match *amb {
        Ambient::Proj { n } => {
            let fano = k == 1 || (n == 2 && k <= 8);
            (fano, fano || (n == 3 && k <= 7))
        }
        Ambient::Quadric { n } => {
            let fano = k <= 2 || (n == 2 && k <= 7);
            (fano, fano || (n == 3 && k <= 6))
        }
        Ambient::Grass { r, n } => {
            let fano = (r, n) == (1, 3) && k <= 2;
            (fano, fano || ((r, n) == (1, 4) && k <= 4))
        }
    };
    if fano {
        FanoVerdict::Fano
    } else if weak {
        FanoVerdict::WeakFanoOnly
    } else {
        FanoVerdict::Neither
    }
}

/// Fano / weak Fano verdict, computed from curve-cone generators where they are proven.
pub fn classify_fano(amb: &Ambient, k: usize) -> FanoReport {
    let mk = anticanonical(amb, k);
    let top = top_self_intersection(amb, &mk);
    let table = table_verdict(amb, k);
    let (computed, intersections, prov) = match mori_cone_generators(amb, k) {
        MoriCone::Proven(cone) => {
            let ints: Vec<Intersection> = cone
                .generators
                .iter()
                .map(|g| Intersection {
                    curve: g.clone(),
                    value: intersect(&mk, g).expect("same k"),
                })
                .collect();
            let v = if ints.iter().all(|x| x.value > 0) {
                FanoVerdict::Fano
            } else if ints.iter().all(|x| x.value >= 0) && top.is_positive() {
                FanoVerdict::WeakFanoOnly
            } else {
                FanoVerdict::Neither
            };
            (Some(v), ints, Some(cone.provenance))
        }
        MoriCone::Unknown { .. } => (None, Vec::new(), None),
    };
    FanoReport {
        ambient: *amb,
        k,
        verdict: table,
        source: if computed.is_some() {
            VerdictSource::Computed
        } else {
            VerdictSource::Table
        },
        computed,
        table,
        anticanonical: mk,
        intersections,
        top_self_intersection: top.to_string(),
        cone_provenance: prov,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalReport {
    pub r: usize,
    pub n: usize,
    pub k: usize,
    pub spherical: bool,
    pub case: String,
    /// `dim B_2 - dim G(r,n) = (n-2r-2)(n-4r-1)/2`.
    pub f: i64,
    /// `k = 2` and `2r+2 < n < 4r+1`: too few Borel dimensions for a dense orbit.
    pub gap_rule: bool,
    /// Codimension of a general Borel orbit when it is known.
    pub orbit_codim: Option<u64>,
}

/// `(n-2r-2)(n-4r-1)/2`.
pub fn borel_excess(r: usize, n: usize) -> i64 {
    let (r, n) = (r as i64, n as i64);
    (n - 2 * r - 2) * (n - 4 * r - 1) / 2
}

/// Whether `G(r,n)_k` is spherical.
pub fn spherical_status(r: usize, n: usize, k: usize) -> Result<SphericalReport> {
    if n < 2 * r + 1 || k == 0 {
        return Err(Error::Precondition(format!(
            "spherical classification needs n >= 2r+1 and k >= 1; got (r,n,k) = ({r},{n},{k})"
        )));
    }
    let gap_rule = k == 2 && 2 * r + 2 < n && n < 4 * r + 1;
    let (spherical, case) = if r == 0 {
        (k <= n + 1, format!("projective space: spherical iff k <= n+1 = {}", n + 1))
    } else if k == 1 {
        (true, "one point".to_string())
    } else if k == 2 {
        if r == 1 {
            (true, "two points on G(1,n)".to_string())
        } else if n == 2 * r + 1 || n == 2 * r + 2 {
            (true, "two points with n in {2r+1, 2r+2}".to_string())
        } else if gap_rule {
            (false, "two points, 2r+2 < n < 4r+1: Borel group too small".to_string())
        } else {
            (false, "two points, n >= 4r+1: no dense Borel orbit".to_string())
        }
    } else if k == 3 && (r, n) == (1, 5) {
        (true, "three points on G(1,5)".to_string())
    } else {
        (false, format!("{k} points: outside the spherical list"))
    };
    let orbit_codim = if spherical {
        Some(0)
    } else if k == 2 && r >= 2 && n > 4 * r {
        Some((r * (r - 1) / 2) as u64)
    } else if k == 3 && r == 1 && n >= 7 {
        Some(1)
    } else {
        None
    };
    Ok(SphericalReport {
        r,
        n,
        k,
        spherical,
        case,
        f: borel_excess(r, n),
        gap_rule,
        orbit_codim,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "cone", rename_all = "snake_case")]
pub enum EffectiveCone {
    Known(ConeData<DivisorClass>),
    Unknown { reason: String },
}

fn div(a: i64, b: &[i64]) -> DivisorClass {
    DivisorClass::new(a, b.to_vec())
}

/// Effective cone of `G(r,n)_k` where it is known.
pub fn effective_cone(r: usize, n: usize, k: usize) -> Result<EffectiveCone> {
    if n < 2 * r + 1 || k == 0 {
        return Err(Error::Precondition(format!(
            "effective cones need n >= 2r+1 and k >= 1; got (r,n,k) = ({r},{n},{k})"
        )));
    }
    let r1 = r as i64 + 1;
    let known = |gens: Vec<DivisorClass>, prov: &str| {
        Ok(EffectiveCone::Known(ConeData {
            generators: gens,
            provenance: prov.to_string(),
            status: ConeStatus::Proven,
        }))
    };
    let e = |i: usize| DivisorClass::e(i, k);
    match k {
        1 => known(vec![e(0), div(1, &[r1])], "one point: E and the Schubert divisor H-(r+1)E"),
        2 if r >= 1 && n == 2 * r + 1 => known(
            vec![e(0), e(1), div(1, &[r1, 0]), div(1, &[0, r1])],
            "two points, n = 2r+1",
        ),
        2 if r >= 1 && n == 2 * r + 2 => known(
            vec![e(0), e(1), div(1, &[r1, 1]), div(1, &[1, r1])],
            "two points, n = 2r+2",
        ),
        2 if r == 1 && n >= 5 => known(vec![e(0), e(1), div(1, &[2, 2])], "two points on G(1,n), n >= 5"),
        3 if (r, n) == (1, 5) => known(
            vec![e(0), e(1), e(2), div(1, &[2, 2, 0]), div(1, &[2, 0, 2]), div(1, &[0, 2, 2])],
            "three points on G(1,5)",
        ),
        _ => Ok(EffectiveCone::Unknown {
            reason: format!("no effective cone is known for G({r},{n})_{k}"),
        }),
    }
}

/// `u × v` for classes on a single blow-up (`k = 1`), in coordinates `(a, b)`.
fn cross(u: &DivisorClass, v: &DivisorClass) -> i64 {
    u.a * v.b[0] - u.b[0] * v.a
}

/// Whether `v` lies strictly inside the two-dimensional cone spanned by `lo`, `hi`.
pub fn strictly_inside(lo: &DivisorClass, hi: &DivisorClass, v: &DivisorClass) -> bool {
    let s = cross(lo, hi).signum();
    s != 0 && cross(lo, v).signum() == s && cross(v, hi).signum() == s
}

/// The dual of a two-ray cone of divisors on a one-point blow-up: the curve rays
/// orthogonal to each wall, oriented to pair nonnegatively with the other wall.
pub fn dual_curve_cone(lo: &DivisorClass, hi: &DivisorClass) -> Result<[CurveClass; 2]> {
    if lo.b.len() != 1 || hi.b.len() != 1 || cross(lo, hi) == 0 {
        return Err(Error::Precondition("need two independent classes on a one-point blow-up".into()));
    }
    let orth = |d: &DivisorClass, other: &DivisorClass| {
        let g = num_integer::gcd(d.a, d.b[0]).max(1);
        let c = CurveClass::new(d.b[0] / g, vec![-d.a / g]);
        if intersect(other, &c).expect("k = 1") < 0 {
            CurveClass::new(-c.c, vec![-c.m[0]])
        } else {
            c
        }
    };
    Ok([orth(lo, hi), orth(hi, lo)])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chamber {
    pub generators: [DivisorClass; 2],
    pub model: String,
    pub contraction: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberDecomposition {
    pub n: usize,
    pub walls: Vec<DivisorClass>,
    pub chambers: Vec<Chamber>,
    pub nef: [DivisorClass; 2],
    pub movable: [DivisorClass; 2],
    pub effective: [DivisorClass; 2],
    /// `-K` of the flipped model, when the model exists.
    pub flip_anticanonical: Option<DivisorClass>,
    pub fano_flip_model: bool,
}

/// Mori chamber decomposition of `G(1,n)_1`.
pub fn mori_chambers_g1n1(n: usize) -> Result<ChamberDecomposition> {
    if n < 3 {
        return Err(Error::Precondition(format!("G(1,n)_1 needs n >= 3, got {n}")));
    }
    let [e, h, h1, h2] = [div(0, &[-1]), div(1, &[0]), div(1, &[1]), div(1, &[2])];
    let ch = |a: &DivisorClass, b: &DivisorClass, model: &str, contraction: String| Chamber {
        generators: [a.clone(), b.clone()],
        model: model.to_string(),
        contraction,
    };
    if n == 3 {
        return Ok(ChamberDecomposition {
            n,
            walls: vec![e.clone(), h.clone(), h1.clone(), h2.clone()],
            chambers: vec![
                ch(&e, &h, "blow-down", "the blow-down to G(1,3) = Q^4".into()),
                ch(&h, &h1, "nef", "divisorial contraction to P^4 of the cone over Q^2 (class H-2E)".into()),
                ch(&h1, &h2, "divisorial", "pullbacks from P^4 plus the contracted divisor".into()),
            ],
            nef: [h.clone(), h1.clone()],
            movable: [h, h1],
            effective: [e, h2],
            flip_anticanonical: None,
            fano_flip_model: false,
        });
    }
    let k_plus = div(n as i64 + 1, &[2 * n as i64 - 3]);
    let fano = strictly_inside(&h1, &h2, &k_plus);
    Ok(ChamberDecomposition {
        n,
        walls: vec![e.clone(), h.clone(), h1.clone(), h2.clone()],
        chambers: vec![
            ch(&e, &h, "blow-down", format!("alpha: the blow-down to G(1,{n})")),
            ch(&h, &h1, "nef", "small contraction given by H-E, flipped next".into()),
            ch(
                &h1,
                &h2,
                "flip",
                format!("delta on the flip G(1,{n})_1^+: fibration over G(1,{}) with P^4 fibers", n - 2),
            ),
        ],
        nef: [h.clone(), h1],
        movable: [h, h2.clone()],
        effective: [e, h2],
        flip_anticanonical: Some(k_plus),
        fano_flip_model: fano,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MdsReason {
    Spherical,
    WeakFano,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason")]
pub enum MdsVerdict {
    KnownMds(MdsReason),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjecturalChambers {
    pub movable: ConeData<DivisorClass>,
    pub walls: Vec<DivisorClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdsStatus {
    pub verdict: MdsVerdict,
    pub notes: Vec<String>,
    /// Expected movable cone and walls of `G(r,n)_1`, never used as a verdict.
    pub conjectural: Option<ConjecturalChambers>,
}

/// `k_max` with `P^n_k` a Mori dream space exactly for `k <= k_max`.
fn projective_mds_limit(n: usize) -> usize {
    match n {
        2 => 8,
        3 => 7,
        4 => 8,
        _ => n + 3,
    }
}

/// Whether `G(r,n)_k` is known to be a Mori dream space.
pub fn mds_status(r: usize, n: usize, k: usize) -> Result<MdsStatus> {
    let sph = spherical_status(r, n, k)?;
    let mut notes = Vec::new();
    let verdict = if sph.spherical {
        MdsVerdict::KnownMds(MdsReason::Spherical)
    } else if r >= 1 && table_verdict(&Ambient::grass(r, n)?, k) != FanoVerdict::Neither {
        MdsVerdict::KnownMds(MdsReason::WeakFano)
    } else {
        MdsVerdict::Unknown
    };
    if r == 0 {
        notes.push(format!(
            "blow-ups of P^{n} at general points are Mori dream spaces exactly for k <= {}",
            projective_mds_limit(n)
        ));
    }
    if (r, n, k) == (1, 4, 6) {
        notes.push(
            "a conditional result says G(1,4)_6 is not a Mori dream space; with the k = 4 case this pins the threshold to 4 or 5".into(),
        );
    }
    let conjectural = (k == 1 && r >= 2).then(|| {
        let top = if n == 2 * r + 1 { r } else { r + 1 } as i64;
        ConjecturalChambers {
            movable: ConeData {
                generators: vec![div(1, &[0]), div(1, &[top])],
                provenance: "expected movable cone of a one-point blow-up".into(),
                status: ConeStatus::Conjectural,
            },
            walls: std::iter::once(div(0, &[-1]))
                .chain((0..=r as i64 + 1).map(|j| div(1, &[j])))
                .collect(),
        }
    });
    Ok(MdsStatus {
        verdict,
        notes,
        conjectural,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anticanonical_classes_and_pairings() {
        let g14 = Ambient::grass(1, 4).unwrap();
        assert_eq!(anticanonical(&g14, 3), div(5, &[5, 5, 5]));
        assert_eq!(anticanonical(&Ambient::quadric(3).unwrap(), 2), div(3, &[2, 2]));
        assert_eq!(anticanonical(&Ambient::proj(4).unwrap(), 0), div(5, &[]));
        for (r, n) in [(1, 4), (2, 5), (2, 7), (3, 9)] {
            let mk = anticanonical(&Ambient::grass(r, n).unwrap(), 1);
            let (ri, ni) = (r as i64, n as i64);
            assert_eq!(intersect(&mk, &CurveClass::through(1, &[0], 1)).unwrap(), -ni * ri + ri * ri + ri + 2);
        }
        for n in 3..8 {
            let mk = anticanonical(&Ambient::quadric(n).unwrap(), 3);
            assert_eq!(intersect(&mk, &CurveClass::through(2, &[0, 1, 2], 3)).unwrap(), 3 - n as i64);
        }
        assert_eq!(intersect(&DivisorClass::h(2), &CurveClass::e(1, 2)).unwrap(), 0);
        assert!(intersect(&DivisorClass::h(2), &CurveClass::e(0, 1)).is_err());
        assert_eq!(div(5, &[5, 5]).to_string(), "5H - 5E1 - 5E2");
        assert_eq!(CurveClass::through(2, &[0, 2], 3).to_string(), "2h - e1 - e3");
    }

    #[test]
    fn top_self_intersections() {
        let g14 = Ambient::grass(1, 4).unwrap();
        for k in 0..8 {
            let v = top_self_intersection(&g14, &anticanonical(&g14, k));
            assert_eq!(v, BigInt::from(15625) * (5 - k as i64));
        }
        let q3 = Ambient::quadric(3).unwrap();
        for k in 0..10 {
            assert_eq!(top_self_intersection(&q3, &anticanonical(&q3, k)), BigInt::from(54 - 8 * k as i64));
        }
        assert_eq!(top_self_intersection(&g14, &DivisorClass::h(2)), BigInt::from(5));
    }

    #[test]
    fn curve_cones() {
        let MoriCone::Proven(c) = mori_cone_generators(&Ambient::grass(1, 4).unwrap(), 4) else {
            panic!("expected generators")
        };
        assert_eq!(c.generators.len(), 8);
        let MoriCone::Proven(c) = mori_cone_generators(&Ambient::quadric(3).unwrap(), 6) else {
            panic!("expected generators")
        };
        assert_eq!(c.generators.iter().filter(|g| g.c == 2).count(), 20);
        assert!(matches!(mori_cone_generators(&Ambient::quadric(3).unwrap(), 7), MoriCone::Unknown { .. }));
        assert_eq!(Ambient::grass(2, 9).unwrap().codim(), 98);
        assert!(matches!(mori_cone_generators(&Ambient::grass(2, 9).unwrap(), 5), MoriCone::Proven(_)));
    }

    #[test]
    fn fano_examples() {
        let v = |a: Ambient, k| classify_fano(&a, k);
        let r = v(Ambient::grass(1, 3).unwrap(), 2);
        assert_eq!((r.verdict, r.computed), (FanoVerdict::Fano, Some(FanoVerdict::Fano)));
        let r = v(Ambient::grass(1, 4).unwrap(), 3);
        assert_eq!(r.computed, Some(FanoVerdict::WeakFanoOnly));
        assert_eq!(v(Ambient::grass(2, 5).unwrap(), 1).computed, Some(FanoVerdict::Neither));
    }

    #[test]
    fn spherical_and_mds() {
        assert!(spherical_status(1, 5, 3).unwrap().spherical);
        let s = spherical_status(2, 9, 2).unwrap();
        assert_eq!((s.spherical, s.orbit_codim), (false, Some(1)));
        let s = spherical_status(3, 12, 2).unwrap();
        assert!(!s.spherical && s.gap_rule);
        assert_eq!(mds_status(1, 4, 4).unwrap().verdict, MdsVerdict::KnownMds(MdsReason::WeakFano));
        assert_eq!(mds_status(2, 5, 2).unwrap().verdict, MdsVerdict::KnownMds(MdsReason::Spherical));
        let m = mds_status(1, 4, 6).unwrap();
        assert_eq!(m.verdict, MdsVerdict::Unknown);
        assert_eq!(m.notes.len(), 1);
        assert!(mds_status(2, 7, 1).unwrap().conjectural.is_some());
    }

    #[test]
    fn chambers_and_duality() {
        for n in 4..8 {
            let c = mori_chambers_g1n1(n).unwrap();
            assert_eq!(c.fano_flip_model, n >= 5);
        }
        let [a, b] = dual_curve_cone(&div(0, &[-1]), &div(1, &[3])).unwrap();
        assert_eq!(a, CurveClass::h(1));
        assert_eq!(b, CurveClass::new(3, vec![-1]));
    }
}
