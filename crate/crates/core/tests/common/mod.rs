//! Invariant checks shared by the property tests and the acceptance runner.
//! Each returns a one-line summary on success and a description of the first
//! counterexample on failure.

#![allow(dead_code)]

use std::collections::BTreeSet;

use grassdef_core::birational::*;
use grassdef_core::bounds::*;
use grassdef_core::oracle::*;
use grassdef_core::plucker_index::*;
use grassdef_core::schubert::*;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<String, String>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// All Segre–Veronese shapes (factors sorted by `(n, d)`) with at most `max_coords` coordinates.
pub fn sv_shapes(max_coords: u128) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn binom(n: u128, k: u128) -> u128 {
        let k = k.min(n - k);
        (0..k).fold(1, |acc, i| acc.saturating_mul(n - i) / (i + 1))
    }
    let mut factors = Vec::new();
    for n in 1..max_coords as usize {
        if n as u128 + 1 > max_coords {
            break;
        }
        for d in 1.. {
            if binom((n + d) as u128, n as u128) > max_coords {
                break;
            }
            factors.push((n, d));
        }
    }
    factors.sort();
    let mut out = Vec::new();
    fn go(
        factors: &[(usize, usize)],
        start: usize,
        prod: u128,
        max: u128,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
        binom: fn(u128, u128) -> u128,
    ) {
        if !cur.is_empty() {
            out.push((cur.iter().map(|f| f.0).collect(), cur.iter().map(|f| f.1).collect()));
        }
        for i in start..factors.len() {
            let (n, d) = factors[i];
            let p = prod * binom((n + d) as u128, n as u128);
            if p <= max {
                cur.push((n, d));
                go(factors, i, p, max, cur, out, binom);
                cur.pop();
            }
        }
    }
    go(&factors, 0, 1, max_coords, &mut Vec::new(), &mut out, binom);
    out
}

/// Weakly decreasing sequences of length `r+1` with entries at most `n-r`.
pub fn partitions(r: usize, n: usize) -> Vec<Partition> {
    fn go(len: usize, top: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in 0..=top {
            cur.push(x);
            go(len, x, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    go(r + 1, n - r, &mut Vec::new(), &mut raw);
    raw.iter().map(|p| Partition::new(r, n, p).unwrap()).collect()
}

pub fn grass_distance_is_metric() -> Check {
    let mut pairs = 0u64;
    for r in 0..=2 {
        for n in r + 1..=6 {
            let ix = grass_indices(r, n);
            let mut diam = 0;
            for a in &ix {
                for b in &ix {
                    let d = grass_distance(a, b).unwrap();
                    ensure(d == grass_distance(b, a).unwrap(), || format!("asymmetric at {a:?},{b:?}"))?;
                    ensure((d == 0) == (a == b), || format!("d = 0 off the diagonal at {a:?},{b:?}"))?;
                    for c in &ix {
                        let t = grass_distance(a, c).unwrap() + grass_distance(c, b).unwrap();
                        ensure(d <= t, || format!("triangle fails at {a:?},{c:?},{b:?}"))?;
                    }
                    diam = diam.max(d);
                    pairs += 1;
                }
            }
            if n > 2 * r {
                ensure(diam == r + 1, || format!("G({r},{n}) diameter {diam}, expected {}", r + 1))?;
            }
        }
    }
    Ok(format!("{pairs} pairs, r <= 2, n <= 6"))
}

/// All pairs for shapes with at most 200 coordinates; above that, every index
/// against the base point and 16 sampled points.
pub fn sv_distance_diameter() -> Check {
    let shapes = sv_shapes(500);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut exhaustive = 0;
    for (ns, ds) in &shapes {
        let ix = sv_indices(ns, ds);
        let d: usize = ds.iter().sum();
        let sources: Vec<usize> = if ix.len() <= 200 {
            exhaustive += 1;
            (0..ix.len()).collect()
        } else {
            std::iter::once(0).chain((0..16).map(|_| rng.gen_range(0..ix.len()))).collect()
        };
        let mut diam = 0;
        for &s in &sources {
            let a = &ix[s];
            for b in &ix {
                let dist = sv_distance(a, b).unwrap();
                ensure((dist == 0) == (a == b), || format!("d = 0 off the diagonal at {a:?},{b:?}"))?;
                ensure(dist <= d, || format!("d({a:?},{b:?}) = {dist} exceeds {d}"))?;
                diam = diam.max(dist);
            }
        }
        if ix.len() <= 60 {
            for a in &ix {
                for b in &ix {
                    let ab = sv_distance(a, b).unwrap();
                    ensure(ab == sv_distance(b, a).unwrap(), || format!("asymmetric at {a:?},{b:?}"))?;
                    for c in &ix {
                        let t = sv_distance(a, c).unwrap() + sv_distance(c, b).unwrap();
                        ensure(ab <= t, || format!("triangle fails at {a:?},{c:?},{b:?}"))?;
                    }
                }
            }
        }
        ensure(diam == d, || format!("SV {ns:?},{ds:?}: diameter {diam}, expected {d}"))?;
    }
    Ok(format!(
        "{} shapes with at most 500 coordinates, {exhaustive} checked on all pairs",
        shapes.len()
    ))
}

pub fn grass_ball_increments() -> Check {
    let mut cases = 0;
    for r in 1..=3usize {
        for n in 2 * r + 1..=8 {
            let shape = IndexShape::grass(r, n).unwrap();
            let base = shape.base_index();
            let sizes: Vec<usize> = (0..=r + 1).map(|s| ball(&shape, &base, s).unwrap().len()).collect();
            for s in 1..=r + 1 {
                let want = binom_small(r + 1, s) * binom_small(n - r, s);
                ensure(sizes[s] - sizes[s - 1] == want, || {
                    format!("G({r},{n}) s={s}: increment {}, expected {want}", sizes[s] - sizes[s - 1])
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (r,n,s) triples"))
}

pub fn binom_small(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn delta_set_distances() -> Check {
    let (r, n) = (2, 5);
    let origin = PluckerIndex::new(r, n, &[0, 1, 2]).unwrap();
    let mut members = 0;
    for i in grass_indices(r, n) {
        for l in -3i64..=3 {
            for j in delta_set(&i, l).unwrap() {
                ensure(grass_distance(&j, &i).unwrap() == l.unsigned_abs() as usize, || {
                    format!("d({j:?},{i:?}) != |{l}|")
                })?;
                let lhs = grass_distance(&j, &origin).unwrap() as i64;
                let rhs = grass_distance(&i, &origin).unwrap() as i64 + l;
                ensure(lhs == rhs, || format!("d({j:?},I1) = {lhs}, expected {rhs}"))?;
                members += 1;
            }
        }
    }
    Ok(format!("{members} members over all I, |l| <= 3 on G(2,5)"))
}

pub fn h_m_monotonicity() -> Check {
    for m in 2..=6u64 {
        for k in 1..=64u64 {
            let v = h_m(m, k).unwrap();
            if k >= 2 {
                ensure(v >= h_m(m, k - 1).unwrap(), || format!("h_{m} decreases at k={k}"))?;
            }
            if k % 2 == 0 {
                ensure(v == h_m(m, k - 1).unwrap(), || format!("h_{m}({k}) != h_{m}({})", k - 1))?;
            }
            if m < 6 {
                let next = h_m(m + 1, k).unwrap();
                // only the 2^1 term is present for k <= 2, and it is 1 for every m
                if k >= 3 {
                    ensure(next > v, || format!("h_m({k}) not increasing at m={m}"))?;
                } else {
                    ensure(next == v, || format!("h_m({k}) should not depend on m"))?;
                }
            }
        }
    }
    Ok("m in 2..=6, k in 1..=64".into())
}

pub fn bounds_are_ordered() -> Check {
    let mut cases = 0;
    for r in 2..=12usize {
        for n in 2 * r + 1..=200 {
            let g = grass_bound(r, n).unwrap().max_h;
            let l = linear_bound(r, n).unwrap().max_h;
            let a = aop_bound(r, n).unwrap().max_h;
            ensure(g >= 1 && l >= 1 && a >= 1, || format!("bound below 1 at ({r},{n})"))?;
            ensure(g >= l, || format!("grass {g} < linear {l} at ({r},{n})"))?;
            // dual input gives the same answer
            ensure(grass_bound(n - r - 1, n).unwrap().max_h == g, || format!("duality fails at ({r},{n})"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} pairs, 2 <= r <= 12, n <= 200"))
}

pub fn osculating_dims_at_random_points() -> Check {
    let cfg = OracleConfig::default();
    let mut cases = 0;
    for r in 1..=3usize {
        for n in 2 * r + 1..=8 {
            let shape = ExtendedShape::grass(r, n).unwrap();
            let ranks = osculating_ranks(&shape, &JetPoint::Random, r, &cfg).map_err(|e| e.to_string())?;
            for s in 0..=r {
                let want = osculating_dim_grass(r, n, s).unwrap();
                ensure(ranks[s] as u128 - 1 == want, || {
                    format!("G({r},{n}) s={s}: jet rank - 1 = {}, formula {want}", ranks[s] - 1)
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (r,n,s) triples at random points"))
}

/// Jet rank at a coordinate point, ball size and dimension formula agree.
pub fn osculating_dims_at_coordinate_points() -> Check {
    let cfg = OracleConfig::default();
    let mut cases = 0;
    let mut shapes: Vec<(IndexShape, usize)> = Vec::new();
    for r in 1..=3usize {
        for n in 2 * r + 1..=8 {
            shapes.push((IndexShape::grass(r, n).unwrap(), r + 1));
        }
    }
    for (ns, ds) in sv_shapes(300) {
        let d = ds.iter().sum();
        shapes.push((IndexShape::segre_veronese(&ns, &ds).unwrap(), d));
    }
    for (shape, top) in &shapes {
        let ext: ExtendedShape = shape.clone().into();
        let base = shape.base_index();
        let ranks = osculating_ranks(&ext, &JetPoint::Coordinate(base.clone()), *top, &cfg)
            .map_err(|e| format!("{shape:?}: {e}"))?;
        for s in 0..=*top {
            let formula = match shape {
                IndexShape::Grass { r, n } => osculating_dim_grass(*r, *n, s).unwrap(),
                IndexShape::SegreVeronese { ns, ds } => osculating_dim_sv(ns, ds, s).unwrap(),
            };
            let balls = ball(shape, &base, s).unwrap().len() as u128 - 1;
            let jet = ranks[s] as u128 - 1;
            ensure(jet == formula && balls == formula, || {
                format!("{shape:?} s={s}: jet {jet}, ball {balls}, formula {formula}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{} shapes, {cases} orders", shapes.len()))
}

/// Every h up to the Grassmannian bound is certified by the oracle.
pub fn bound_consistent_with_oracle() -> Check {
    let cfg = OracleConfig::default();
    let mut cases = 0;
    for r in 2..=5usize {
        for n in 2 * r + 1..=20 {
            if binom_small(n + 1, r + 1) > 462 {
                continue;
            }
            let max_h = grass_bound(r, n).unwrap().max_h as usize;
            let shape = ExtendedShape::grass(r, n).unwrap();
            for h in 1..=max_h {
                let c = secant_dimension(&shape, h, &cfg).map_err(|e| e.to_string())?;
                ensure(c.verdict == SecantVerdict::CertifiedNonDefective, || {
                    format!("G({r},{n}) h={h}: computed {} < expected {}", c.computed, c.expected)
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (r,n,h) triples with at most 462 coordinates"))
}

/// Once the expected dimension reaches the ambient space it stays there.
pub fn secant_expected_caps() -> Check {
    let cfg = OracleConfig::default();
    let shapes = [
        ExtendedShape::grass(1, 4).unwrap(),
        ExtendedShape::grass(2, 5).unwrap(),
        ExtendedShape::grass(2, 6).unwrap(),
        ExtendedShape::segre_veronese(&[1, 1], &[2, 2]).unwrap(),
        ExtendedShape::segre_veronese(&[2], &[3]).unwrap(),
        ExtendedShape::rational_normal_curve(6).unwrap(),
    ];
    let mut cases = 0;
    for shape in &shapes {
        let n_plus_1 = shape.coordinate_count().unwrap();
        let mut h = 1;
        loop {
            let c = secant_dimension(shape, h, &cfg).map_err(|e| e.to_string())?;
            ensure(c.computed <= c.expected && c.expected < n_plus_1, || format!("{shape:?} h={h}: bad dims"))?;
            let fills = (h as u128) * (shape.dim() as u128 + 1) >= n_plus_1;
            if c.verdict == SecantVerdict::CertifiedNonDefective && fills {
                let next = secant_dimension(shape, h + 1, &cfg).map_err(|e| e.to_string())?;
                ensure(next.expected == n_plus_1 - 1 && next.computed == n_plus_1 - 1, || {
                    format!("{shape:?}: filled at h={h} but not at h+1")
                })?;
                cases += 1;
                break;
            }
            h += 1;
            if h > 12 {
                break;
            }
        }
    }
    Ok(format!("{cases} shapes reach the ambient space and stay there"))
}

/// Tangential projections are finite exactly when the next secant is non-defective.
pub fn tangential_matches_secant() -> Check {
    let cfg = OracleConfig::default();
    let cases: Vec<(ExtendedShape, usize)> = vec![
        (ExtendedShape::grass(2, 5).unwrap(), 1),
        (ExtendedShape::grass(2, 6).unwrap(), 1),
        (ExtendedShape::grass(2, 7).unwrap(), 2),
        (ExtendedShape::grass(3, 7).unwrap(), 1),
        (ExtendedShape::grass(3, 7).unwrap(), 2),
        (ExtendedShape::grass(2, 8).unwrap(), 2),
        (ExtendedShape::grass(2, 8).unwrap(), 3),
        (ExtendedShape::segre_veronese(&[3], &[2]).unwrap(), 1),
        (ExtendedShape::segre_veronese(&[2], &[4]).unwrap(), 2),
        (ExtendedShape::segre_veronese(&[1, 1], &[2, 2]).unwrap(), 2),
        (ExtendedShape::segre_veronese(&[1, 1, 1], &[1, 1, 2]).unwrap(), 2),
        (ExtendedShape::rational_normal_curve(8).unwrap(), 3),
    ];
    let mut checked = 0;
    for (shape, h) in &cases {
        let t = tangential_projection_finite(shape, *h, &cfg).map_err(|e| e.to_string())?;
        if t.verdict == ProjectionVerdict::HypothesisViolated {
            continue;
        }
        let s = secant_dimension(shape, h + 1, &cfg).map_err(|e| e.to_string())?;
        let finite = t.verdict == ProjectionVerdict::GenericallyFinite;
        let nondef = s.verdict == SecantVerdict::CertifiedNonDefective;
        ensure(finite == nondef, || {
            format!("{shape:?} h={h}: projection {:?}, secant h+1 {:?}", t.verdict, s.verdict)
        })?;
        checked += 1;
    }
    ensure(checked >= 10, || format!("only {checked} cases met the hypothesis"))?;
    Ok(format!("{checked} of {} shapes meet the hypothesis and agree", cases.len()))
}

/// Random feasible limit systems: exact residuals and a nonsingular binomial block.
pub fn limit_systems_random(count: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut solved = 0;
    for _ in 0..count {
        let k1 = rng.gen_range(0..=4i64);
        let k2 = rng.gen_range(0..=4i64);
        let d = rng.gen_range(k1 + k2 + 2..=k1 + k2 + 8);
        let s = rng.gen_range(0..=d);
        let sbar = rng.gen_range(0..=6i64);
        let sol = limit_hyperplane_coeffs(d, s, sbar, k1, k2).map_err(|e| e.to_string())?;
        let c = sol.coefficients();
        let res = limit_residuals(d, s, sbar, k1, k2, c).unwrap();
        ensure(res.iter().all(Zero::is_zero), || format!("nonzero residual at {:?}", (d, s, sbar, k1, k2)))?;
        ensure(c[0] > BigInt::zero(), || "c_0 must be positive".into())?;
        let g = c.iter().fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
        ensure(g.is_one(), || format!("coefficients not primitive at {:?}", (d, s, sbar, k1, k2)))?;
        if s >= d - k2 {
            ensure(!det_big(&limit_minor(d, s, sbar, k2)).is_zero(), || {
                format!("singular minor at {:?}", (d, s, sbar, k1, k2))
            })?;
            solved += 1;
        }
    }
    Ok(format!("{count} tuples, {solved} with a nontrivial system"))
}

pub fn schubert_dimensions() -> Check {
    let mut cases = 0;
    for r in 0..=4 {
        for n in r + 1..=10 {
            for l in partitions(r, n) {
                ensure(schubert_dim(&l) + codim(&l) == (r + 1) * (n - r), || format!("{l:?}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} partitions, r <= 4, n <= 10"))
}

pub fn schubert_order_and_singularities() -> Check {
    let mut cases = 0;
    for r in 0..=3 {
        for n in r + 1..=8 {
            let ps = partitions(r, n);
            if ps.len() <= 60 {
                for a in &ps {
                    ensure(contains(a, a).unwrap(), || format!("not reflexive at {a:?}"))?;
                    for b in &ps {
                        let ab = contains(a, b).unwrap();
                        if ab && contains(b, a).unwrap() {
                            ensure(a == b, || format!("not antisymmetric at {a:?},{b:?}"))?;
                        }
                        for c in &ps {
                            if ab && contains(b, c).unwrap() {
                                ensure(contains(a, c).unwrap(), || format!("not transitive at {a:?},{b:?},{c:?}"))?;
                            }
                        }
                    }
                }
            }
            for l in &ps {
                ensure(multiplicity(l, l).unwrap().is_one(), || format!("mult at own general point of {l:?}"))?;
                for mu in singular_locus(l) {
                    ensure(contains(l, &mu).unwrap(), || format!("{mu:?} not inside {l:?}"))?;
                    ensure(schubert_dim(&mu) < schubert_dim(l), || format!("{mu:?} not smaller than {l:?}"))?;
                    let m = multiplicity(l, &mu).unwrap();
                    ensure(m >= BigInt::from(2), || format!("mult {m} at singular {mu:?} of {l:?}"))?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} partitions, r <= 3, n <= 8"))
}

pub fn degree_duality() -> Check {
    let mut cases = 0;
    for r in 0..=4 {
        for n in r + 1..=12 {
            ensure(grass_degree(r, n).unwrap() == grass_degree(n - r - 1, n).unwrap(), || {
                format!("deg G({r},{n}) != deg G({},{n})", n - r - 1)
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} pairs"))
}

pub fn fano_computed_matches_table() -> Check {
    let mut ambients = Vec::new();
    for r in 1..=3 {
        for n in 2 * r + 1..=9 {
            ambients.push((Ambient::grass(r, n).unwrap(), 6));
        }
    }
    for n in 2..=6 {
        ambients.push((Ambient::quadric(n).unwrap(), 8));
    }
    for n in 2..=5 {
        ambients.push((Ambient::proj(n).unwrap(), 8));
    }
    let (mut overlap, mut total) = (0, 0);
    for (a, kmax) in &ambients {
        for k in 0..=*kmax {
            let rep = classify_fano(a, k);
            if let Some(c) = rep.computed {
                ensure(c == rep.table, || format!("{a} k={k}: computed {c:?}, table {:?}", rep.table))?;
                overlap += 1;
            }
            total += 1;
        }
    }
    Ok(format!("{overlap} of {total} cases have proven curve cones; all agree"))
}

/// `(-K)^dim` is affine in `k` with slope `-b^dim`, since `E^dim = (-1)^(dim-1)`.
pub fn top_self_intersection_linear() -> Check {
    let ambients = [
        Ambient::grass(1, 4).unwrap(),
        Ambient::grass(2, 5).unwrap(),
        Ambient::grass(1, 3).unwrap(),
        Ambient::quadric(3).unwrap(),
        Ambient::quadric(4).unwrap(),
        Ambient::proj(2).unwrap(),
        Ambient::proj(3).unwrap(),
        Ambient::proj(5).unwrap(),
    ];
    for a in &ambients {
        let dim = a.dim() as u32;
        let b = anticanonical(a, 1).b[0];
        let slope = -BigInt::from(b).pow(dim);
        let base = top_self_intersection(a, &anticanonical(a, 0));
        for k in 0..=12i64 {
            let v = top_self_intersection(a, &anticanonical(a, k as usize));
            ensure(v == &base + &slope * k, || format!("{a} k={k}: {v} is off the line"))?;
        }
    }
    Ok(format!("{} ambients, k <= 12", ambients.len()))
}

/// Dual of `Eff(G(r,n)_1)` is `cone(h, (r+1)h - e)`, each ray orthogonal to one wall.
pub fn effective_movable_duality() -> Check {
    let mut cases = 0;
    for r in 1..=5usize {
        for n in 2 * r + 1..=2 * r + 6 {
            let EffectiveCone::Known(eff) = effective_cone(r, n, 1).unwrap() else {
                return Err(format!("no effective cone for G({r},{n})_1"));
            };
            let [lo, hi] = [&eff.generators[0], &eff.generators[1]];
            let dual = dual_curve_cone(lo, hi).map_err(|e| e.to_string())?;
            let want = [CurveClass::h(1), CurveClass::new(r as i64 + 1, vec![-1])];
            ensure(dual == want, || format!("G({r},{n})_1: dual {dual:?}"))?;
            ensure(intersect(lo, &dual[0]).unwrap() == 0 && intersect(hi, &dual[1]).unwrap() == 0, || {
                "rays not orthogonal to walls".into()
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} one-point blow-ups"))
}

/// Consecutive chambers share one ray and together sweep out Eff.
pub fn chambers_tile() -> Check {
    for n in 3..=9 {
        let c = mori_chambers_g1n1(n).unwrap();
        ensure(c.chambers.first().unwrap().generators[0] == c.effective[0], || format!("n={n}: first ray"))?;
        ensure(c.chambers.last().unwrap().generators[1] == c.effective[1], || format!("n={n}: last ray"))?;
        for w in c.chambers.windows(2) {
            ensure(w[0].generators[1] == w[1].generators[0], || format!("n={n}: chambers do not share a ray"))?;
            ensure(w[0].generators[0] != w[1].generators[1], || format!("n={n}: chamber repeats"))?;
        }
        for ch in &c.chambers {
            // every chamber is a proper sub-interval of Eff, oriented the same way
            let [a, b] = &ch.generators;
            ensure(strictly_inside(&c.effective[0], &c.effective[1], &mid(a, b)), || {
                format!("n={n}: chamber leaves Eff")
            })?;
        }
        let walls: BTreeSet<String> = c.walls.iter().map(|w| w.to_string()).collect();
        ensure(walls.len() == c.walls.len(), || format!("n={n}: repeated wall"))?;
    }
    Ok("n in 3..=9".into())
}

fn mid(a: &DivisorClass, b: &DivisorClass) -> DivisorClass {
    DivisorClass::new(a.a + b.a, vec![a.b[0] + b.b[0]])
}

/// Rank over F_p, Q (Gaussian) and Z (Bareiss) agrees and survives row scaling,
/// permutation and an appended combination, on low-rank random integer matrices.
pub fn rank_metamorphic(cases: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ranks = |m: &[Vec<i64>]| {
        let modp: Vec<Vec<u64>> = m
            .iter()
            .map(|r| r.iter().map(|&x| (x as i128).rem_euclid(DEFAULT_PRIME as i128) as u64).collect())
            .collect();
        let q: Vec<Vec<num_rational::BigRational>> = m
            .iter()
            .map(|r| r.iter().map(|&x| num_rational::BigRational::from_integer(x.into())).collect())
            .collect();
        let z: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect();
        (rank_mod_p(&modp, DEFAULT_PRIME), rank_rational(&q), bareiss_rank(z))
    };
    for case in 0..cases {
        let (rows, cols, k) = (rng.gen_range(1..=8), rng.gen_range(1..=8), rng.gen_range(0..=8));
        let a: Vec<Vec<i64>> = (0..rows).map(|_| (0..k).map(|_| rng.gen_range(-5..=5)).collect()).collect();
        let b: Vec<Vec<i64>> = (0..k).map(|_| (0..cols).map(|_| rng.gen_range(-5..=5)).collect()).collect();
        let m: Vec<Vec<i64>> = (0..rows)
            .map(|i| (0..cols).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect())
            .collect();
        let (p, q, z) = ranks(&m);
        ensure(p == q && q == z && p <= k.min(rows).min(cols), || format!("case {case}: ranks {p},{q},{z}"))?;
        let mut t: Vec<Vec<i64>> = m
            .iter()
            .map(|r| {
                let c = rng.gen_range(1..=7) * if rng.gen_bool(0.5) { 1 } else { -1 };
                r.iter().map(|x| x * c).collect()
            })
            .collect();
        for i in (1..t.len()).rev() {
            t.swap(i, rng.gen_range(0..=i));
        }
        let coeffs: Vec<i64> = t.iter().map(|_| rng.gen_range(-3..=3)).collect();
        let combo: Vec<i64> = (0..cols)
            .map(|j| t.iter().zip(&coeffs).map(|(r, c)| r[j] * c).sum())
            .collect();
        t.push(combo);
        ensure(ranks(&t) == (p, p, p), || format!("case {case}: rank changed under row operations of {m:?}"))?;
    }
    Ok(format!("{cases} matrices over F_p, Q and Z"))
}
