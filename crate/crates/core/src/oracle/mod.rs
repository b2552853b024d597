//! Exact rank oracle: parametrizations, jets, Terracini secant dimensions and
//! generic finiteness of tangential and osculating projections.

mod field;
mod jets;
mod limit;
mod param;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::plucker_index::Index;
use crate::{Error, Result};

pub use field::{
    bareiss_rank, is_prime_u64, rank, rank_mod_p, rank_rational, Echelon, Field, FieldElem, DEFAULT_PRIME,
};
pub use jets::{jet_matrix, jet_matrix_in, JetMatrix};
pub use limit::{det_big, limit_hyperplane_coeffs, limit_minor, limit_residuals, LimitHyperplane};
pub use param::{
    build_parametrization, coordinate_labels, coordinate_point, Caps, ExtendedShape, Monomial, Parametrization,
};

use field::{Arith, ModP, Rat};

/// Default seed of the random point streams.
pub const DEFAULT_SEED: u64 = 0x5EC4_A47D_E7EC_7001;

const SAMPLE_RETRIES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub field: Field,
    pub trials: usize,
    pub seed: u64,
    pub caps: Caps,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            field: Field::Prime(DEFAULT_PRIME),
            trials: 3,
            seed: DEFAULT_SEED,
            caps: Caps::default(),
        }
    }
}

impl OracleConfig {
    fn prime(&self) -> Option<u64> {
        match self.field {
            Field::Prime(p) => Some(p),
            Field::Rational => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SecantVerdict {
    CertifiedNonDefective,
    DefectEvidence,
}

/// Outcome of a Terracini rank computation for the h-secant variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectivityCertificate {
    pub shape: ExtendedShape,
    pub h: usize,
    pub expected: u128,
    pub computed: u128,
    pub defect: u128,
    pub verdict: SecantVerdict,
    pub prime: Option<u64>,
    pub seed: u64,
    pub trials: usize,
    pub trial_ranks: Vec<usize>,
    pub escalated_to_rationals: bool,
    pub elapsed_ms: u64,
    pub note: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProjectionVerdict {
    GenericallyFinite,
    FiberEvidence,
    /// At most one coordinate survives: the image is a point.
    ConstantMap,
    /// The span of the tangent spaces leaves too little room for the hypothesis of the test.
    HypothesisViolated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionReport {
    pub shape: ExtendedShape,
    pub verdict: ProjectionVerdict,
    /// `dim X + 1`, the rank of a finite map's differential on the cone.
    pub required_rank: usize,
    pub observed_rank: Option<usize>,
    pub span_rank: Option<usize>,
    pub surviving_coordinates: Option<usize>,
    pub prime: Option<u64>,
    pub seed: u64,
    pub trials: usize,
    pub elapsed_ms: u64,
}

/// An osculating-space center at a coordinate point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Center {
    pub index: Index,
    pub order: usize,
}

fn stream(seed: u64, trial: usize) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn sample(rng: &mut ChaCha20Rng, len: usize) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(1..=1i64 << 20)).collect()
}

fn lift<A: Arith>(a: &A, pt: &[i64]) -> Vec<A::E> {
    pt.iter().map(|&x| a.from_i64(x)).collect()
}

/// Order-1 jet rows in the chart variables: the affine tangent space of the cone.
fn tangent_rows<A: Arith>(a: &A, p: &Parametrization, pt: &[i64], caps: &Caps) -> Result<Vec<Vec<A::E>>> {
    Ok(jets::jet_rows(a, p, &lift(a, pt), 1, &p.chart_vars, caps)?
        .into_iter()
        .map(|(_, r)| r)
        .collect())
}

/// Draws a point whose tangent space has full dimension, within a bounded number of retries.
fn general_point(p: &Parametrization, rng: &mut ChaCha20Rng, prime: u64, caps: &Caps) -> Result<Vec<i64>> {
    let a = ModP(prime);
    let need = p.shape.dim() + 1;
    let mut pt = sample(rng, p.domain_dim);
    for _ in 0..SAMPLE_RETRIES {
        if rank_mod_p(&tangent_rows(&a, p, &pt, caps)?, prime) == need {
            break;
        }
        pt = sample(rng, p.domain_dim);
    }
    Ok(pt)
}

/// Field used for sampling checks; rational runs still sample over the default prime.
fn sampling_prime(cfg: &OracleConfig) -> u64 {
    cfg.prime().unwrap_or(DEFAULT_PRIME)
}

fn stacked_rank(p: &Parametrization, points: &[Vec<i64>], field: Field, caps: &Caps) -> Result<usize> {
    match field {
        Field::Prime(q) => {
            let a = ModP(q);
            let mut e = Echelon::new(q);
            for pt in points {
                for row in tangent_rows(&a, p, pt, caps)? {
                    e.insert(row);
                }
            }
            Ok(e.rank())
        }
        Field::Rational => {
            let mut rows = Vec::new();
            for pt in points {
                rows.extend(tangent_rows(&Rat, p, pt, caps)?);
            }
            Ok(rank_rational(&rows))
        }
    }
}

fn check_trials(cfg: &OracleConfig) -> Result<()> {
    if cfg.trials == 0 || cfg.trials > 64 {
        return Err(Error::Precondition(format!("trials must be in 1..=64, got {}", cfg.trials)));
    }
    Ok(())
}

/// Terracini test: rank of the span of `h` general tangent spaces.
pub fn secant_dimension(shape: &ExtendedShape, h: usize, cfg: &OracleConfig) -> Result<DefectivityCertificate> {
    if h == 0 {
        return Err(Error::Precondition("h must be at least 1".into()));
    }
    check_trials(cfg)?;
    let start = Instant::now();
    let p = build_parametrization(shape, &cfg.caps)?;
    let rows = h as u128 * (p.chart_vars.len() as u128 + 1);
    if rows > cfg.caps.max_jet_rows {
        return Err(Error::CapExceeded {
            name: "max_jet_rows",
            value: rows,
            limit: cfg.caps.max_jet_rows,
        });
    }
    let sp = sampling_prime(cfg);
    let runs: Vec<(usize, Vec<Vec<i64>>)> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| -> Result<_> {
            let mut rng = stream(cfg.seed, t);
            let pts = (0..h)
                .map(|_| general_point(&p, &mut rng, sp, &cfg.caps))
                .collect::<Result<Vec<_>>>()?;
            Ok((stacked_rank(&p, &pts, cfg.field, &cfg.caps)?, pts))
        })
        .collect::<Result<Vec<_>>>()?;
    let trial_ranks: Vec<usize> = runs.iter().map(|r| r.0).collect();
    let mut best = *trial_ranks.iter().max().expect("at least one trial");
    let escalated = cfg.field != Field::Rational && trial_ranks.iter().any(|&r| r != best);
    if escalated {
        let worst = runs.iter().min_by_key(|r| r.0).expect("at least one trial");
        best = best.max(stacked_rank(&p, &worst.1, Field::Rational, &cfg.caps)?);
    }
    let n_plus_1 = p.codomain_dim as u128;
    let expected = (h as u128 * (shape.dim() as u128 + 1)).min(n_plus_1) - 1;
    let computed = best as u128 - 1;
    let verdict = if computed == expected {
        SecantVerdict::CertifiedNonDefective
    } else {
        SecantVerdict::DefectEvidence
    };
    Ok(DefectivityCertificate {
        shape: shape.clone(),
        h,
        expected,
        computed,
        defect: expected - computed,
        verdict,
        prime: cfg.prime(),
        seed: cfg.seed,
        trials: cfg.trials,
        trial_ranks,
        escalated_to_rationals: escalated,
        elapsed_ms: start.elapsed().as_millis() as u64,
        note: match verdict {
            SecantVerdict::CertifiedNonDefective => {
                "rank at a specific point bounds the generic rank from below, so the expected dimension is attained".into()
            }
            SecantVerdict::DefectEvidence => {
                "every sampled point fell short of the expected rank; this is evidence of a defect, not a proof".into()
            }
        },
    })
}

/// Projection of X from the span of `h` general tangent spaces.
pub fn tangential_projection_finite(shape: &ExtendedShape, h: usize, cfg: &OracleConfig) -> Result<ProjectionReport> {
    if h == 0 {
        return Err(Error::Precondition("h must be at least 1".into()));
    }
    check_trials(cfg)?;
    let start = Instant::now();
    let p = build_parametrization(shape, &cfg.caps)?;
    let sp = sampling_prime(cfg);
    let q = cfg.prime().unwrap_or(DEFAULT_PRIME);
    let a = ModP(q);
    let runs: Vec<(usize, usize)> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| -> Result<_> {
            let mut rng = stream(cfg.seed, t);
            let mut e = Echelon::new(q);
            for _ in 0..h {
                let pt = general_point(&p, &mut rng, sp, &cfg.caps)?;
                for row in tangent_rows(&a, &p, &pt, &cfg.caps)? {
                    e.insert(row);
                }
            }
            let span = e.rank();
            let x = general_point(&p, &mut rng, sp, &cfg.caps)?;
            for row in tangent_rows(&a, &p, &x, &cfg.caps)? {
                e.insert(row);
            }
            Ok((span, e.rank() - span))
        })
        .collect::<Result<Vec<_>>>()?;
    let span = runs.iter().map(|r| r.0).max().expect("at least one trial");
    let gain = runs.iter().filter(|r| r.0 == span).map(|r| r.1).max().expect("at least one trial");
    let required = shape.dim() + 1;
    let ambient = p.codomain_dim - 1;
    let verdict = if ambient < span || ambient - span < shape.dim() {
        ProjectionVerdict::HypothesisViolated
    } else if gain == required {
        ProjectionVerdict::GenericallyFinite
    } else {
        ProjectionVerdict::FiberEvidence
    };
    Ok(ProjectionReport {
        shape: shape.clone(),
        verdict,
        required_rank: required,
        observed_rank: Some(gain),
        span_rank: Some(span),
        surviving_coordinates: None,
        prime: Some(q),
        seed: cfg.seed,
        trials: cfg.trials,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Coordinates that survive projection from the osculating spaces of the given centers.
pub fn surviving_coordinates(shape: &ExtendedShape, centers: &[Center]) -> Result<Vec<usize>> {
    let labels = coordinate_labels(shape)
        .ok_or_else(|| Error::Precondition("shape has no coordinate points".into()))?;
    for c in centers {
        if !labels.contains(&c.index) {
            return Err(Error::ContextMismatch("center is not a coordinate point of the shape".into()));
        }
    }
    if let ExtendedShape::Grass { .. } = shape {
        for (i, a) in centers.iter().enumerate() {
            for b in &centers[i + 1..] {
                if let (Index::Grass(x), Index::Grass(y)) = (&a.index, &b.index) {
                    if x.entries().iter().any(|e| y.entries().contains(e)) {
                        return Err(Error::Precondition(
                            "Grassmannian centers must have pairwise disjoint index supports".into(),
                        ));
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for (col, j) in labels.iter().enumerate() {
        let mut keep = true;
        for c in centers {
            if c.index.distance(j)? <= c.order {
                keep = false;
                break;
            }
        }
        if keep {
            out.push(col);
        }
    }
    Ok(out)
}

/// Projection of X from the span of osculating spaces at coordinate points.
pub fn osculating_projection_finite(
    shape: &ExtendedShape,
    centers: &[Center],
    cfg: &OracleConfig,
) -> Result<ProjectionReport> {
    check_trials(cfg)?;
    let start = Instant::now();
    let cols = surviving_coordinates(shape, centers)?;
    let required = shape.dim() + 1;
    let mut report = ProjectionReport {
        shape: shape.clone(),
        verdict: ProjectionVerdict::ConstantMap,
        required_rank: required,
        observed_rank: None,
        span_rank: None,
        surviving_coordinates: Some(cols.len()),
        prime: cfg.prime(),
        seed: cfg.seed,
        trials: cfg.trials,
        elapsed_ms: 0,
    };
    if cols.len() > 1 {
        let p = build_parametrization(shape, &cfg.caps)?;
        let sp = sampling_prime(cfg);
        let field = cfg.field;
        let ranks: Vec<usize> = (0..cfg.trials)
            .into_par_iter()
            .map(|t| -> Result<usize> {
                let mut rng = stream(cfg.seed, t);
                let pt = general_point(&p, &mut rng, sp, &cfg.caps)?;
                Ok(match field {
                    Field::Prime(q) => {
                        let a = ModP(q);
                        let rows: Vec<Vec<u64>> = tangent_rows(&a, &p, &pt, &cfg.caps)?
                            .into_iter()
                            .map(|r| cols.iter().map(|&c| r[c]).collect())
                            .collect();
                        rank_mod_p(&rows, q)
                    }
                    Field::Rational => {
                        let rows: Vec<Vec<_>> = tangent_rows(&Rat, &p, &pt, &cfg.caps)?
                            .into_iter()
                            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
                            .collect();
                        rank_rational(&rows)
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let best = *ranks.iter().max().expect("at least one trial");
        report.observed_rank = Some(best);
        report.verdict = if best == required {
            ProjectionVerdict::GenericallyFinite
        } else {
            ProjectionVerdict::FiberEvidence
        };
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Where to evaluate jets for osculating-space ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JetPoint {
    Coordinate(Index),
    Random,
}

/// Ranks of the jet matrices of orders `0..=s` (so entry `k` minus one is `dim T^k`).
pub fn osculating_ranks(shape: &ExtendedShape, at: &JetPoint, s: usize, cfg: &OracleConfig) -> Result<Vec<usize>> {
    let p = build_parametrization(shape, &cfg.caps)?;
    let (pt, vars) = match at {
        JetPoint::Coordinate(idx) => coordinate_point(shape, idx)?,
        JetPoint::Random => {
            let mut rng = stream(cfg.seed, 0);
            (general_point(&p, &mut rng, sampling_prime(cfg), &cfg.caps)?, p.chart_vars.clone())
        }
    };
    let q = cfg.prime().unwrap_or(DEFAULT_PRIME);
    let a = ModP(q);
    let rows = jets::jet_rows(&a, &p, &lift(&a, &pt), s, &vars, &cfg.caps)?;
    let mut e = Echelon::new(q);
    let mut ranks = vec![0usize; s + 1];
    for (key, row) in rows {
        let order: u32 = key.iter().sum();
        e.insert(row);
        ranks[order as usize] = e.rank();
    }
    for k in 1..=s {
        ranks[k] = ranks[k].max(ranks[k - 1]);
    }
    Ok(ranks)
}
