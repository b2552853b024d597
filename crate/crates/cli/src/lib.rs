//! Argument parsing, command dispatch and report rendering for the `grassdef` binary.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use grassdef_core::birational::*;
use grassdef_core::bounds::*;
use grassdef_core::oracle::*;
use grassdef_core::plucker_index::*;
use grassdef_core::schubert::*;
use grassdef_core::Error;
use serde::{Deserialize, Serialize};

pub const SEED_ENV: &str = "GRASSDEF_SEED";

#[derive(Debug, Parser)]
#[command(name = "grassdef", version, about = "Secant defectivity, osculating projections, Schubert calculus and blow-up classification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// A prime of at least 31 bits, or `rational` for exact arithmetic over Q.
    #[arg(long, global = true)]
    pub prime: Option<String>,
    /// Independent random trials, 1 to 64.
    #[arg(long, global = true, default_value_t = 3)]
    pub trials: usize,
    /// A 64-bit seed, or `random`. Defaults to $GRASSDEF_SEED, then a fixed constant.
    #[arg(long, global = true)]
    pub seed: Option<String>,
    /// Record wall-clock time in reports (otherwise `elapsed_ms` is 0).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Largest number of ambient coordinates the oracle will build.
    #[arg(long, global = true)]
    pub max_coordinates: Option<u128>,
    /// Largest number of monomial terms the oracle will expand.
    #[arg(long, global = true)]
    pub max_terms: Option<u128>,
}

#[derive(Debug, Args, Default)]
pub struct ShapeArgs {
    /// Grassmannian G(R,N) of projective R-planes in P^N.
    #[arg(long, num_args = 2, value_names = ["R", "N"])]
    pub grass: Option<Vec<usize>>,
    /// Segre-Veronese variety, e.g. `1,1:2,2`.
    #[arg(long, value_name = "N1,..:D1,..")]
    pub sv: Option<String>,
    /// Rational normal curve of degree N.
    #[arg(long, value_name = "N")]
    pub rnc: Option<usize>,
    /// Tangent developable of the rational normal curve of degree N.
    #[arg(long, value_name = "N")]
    pub tangent_developable: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AmbientArgs {
    #[arg(long, num_args = 2, value_names = ["R", "N"])]
    pub grass: Option<Vec<usize>>,
    /// Smooth quadric Q^N.
    #[arg(long, value_name = "N")]
    pub quadric: Option<usize>,
    /// Projective space P^N.
    #[arg(long, value_name = "N")]
    pub proj: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Largest h certified by the non-defectivity bounds.
    Bound {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Dimension of the h-th secant variety by Terracini's lemma.
    Secant {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        h: usize,
    },
    /// Generic finiteness of the projection from h general tangent spaces.
    Tangproj {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        h: usize,
    },
    /// Generic finiteness of a projection from osculating spaces at coordinate points.
    Oscproj {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Semicolon-separated centers; a Grassmannian index is `0,1,2`, a
        /// Segre-Veronese index lists its factors as `0,0/1`. Defaults to the base point.
        #[arg(long)]
        centers: Option<String>,
        /// Comma-separated orders, one per center.
        #[arg(long)]
        orders: String,
    },
    /// Schubert varieties in G(r,n).
    Schubert {
        #[command(subcommand)]
        op: SchubertOp,
    },
    /// Fano, weak Fano and Mori dream space status of a blow-up at k general points.
    Classify {
        #[command(flatten)]
        ambient: AmbientArgs,
        #[arg(long)]
        k: usize,
    },
    /// Mori chamber decomposition of G(1,n) blown up at one point.
    Chambers {
        #[arg(long, num_args = 2, value_names = ["R", "N"])]
        grass: Vec<usize>,
    },
    /// Whether G(r,n) blown up at k general points is spherical.
    Spherical {
        #[arg(long, num_args = 2, value_names = ["R", "N"])]
        grass: Vec<usize>,
        #[arg(long)]
        k: usize,
    },
    /// Effective cone of G(r,n) blown up at k general points, where known.
    Effcone {
        #[arg(long, num_args = 2, value_names = ["R", "N"])]
        grass: Vec<usize>,
        #[arg(long)]
        k: usize,
    },
    /// Coefficients of the limit hyperplane in a degeneration.
    LimitHyperplane {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        sbar: i64,
        #[arg(long)]
        k1: i64,
        #[arg(long)]
        k2: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SchubertOp {
    Dim(PartitionArgs),
    Contains(PairArgs),
    /// Singular locus, iterated until smooth.
    Sing(PartitionArgs),
    Mult(PairArgs),
    Degree {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub lambda: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_delimiter = ',')]
    pub lambda: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    pub mu: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertClass {
    pub partition: Partition,
    pub complement: Vec<usize>,
    pub dim: usize,
    pub codim: usize,
    pub rectangles: usize,
}

impl SchubertClass {
    fn of(p: &Partition) -> Self {
        SchubertClass {
            partition: p.clone(),
            complement: complementary(p),
            dim: schubert_dim(p),
            codim: codim(p),
            rectangles: rectangle_count(p),
        }
    }
}

/// The structured result of one command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", content = "report", rename_all = "snake_case")]
pub enum Report {
    Bound {
        main: BoundReport,
        linear: Option<BoundReport>,
        aop: Option<BoundReport>,
    },
    Secant(DefectivityCertificate),
    Tangproj(ProjectionReport),
    Oscproj(ProjectionReport),
    SchubertDim(SchubertClass),
    SchubertContains {
        lambda: Partition,
        mu: Partition,
        contains: bool,
    },
    SchubertSing {
        class: SchubertClass,
        /// `levels[0]` is `Sing(Σ_λ)`, `levels[i+1]` the singular locus of `levels[i]`.
        levels: Vec<Vec<SchubertClass>>,
    },
    SchubertMult {
        lambda: Partition,
        mu: Partition,
        multiplicity: String,
    },
    SchubertDegree {
        r: usize,
        n: usize,
        degree: String,
    },
    Classify {
        fano: FanoReport,
        mds: Option<MdsStatus>,
        spherical: Option<SphericalReport>,
    },
    Chambers(ChamberDecomposition),
    Spherical(SphericalReport),
    Effcone {
        r: usize,
        n: usize,
        k: usize,
        cone: EffectiveCone,
        dual_curves: Option<[CurveClass; 2]>,
    },
    LimitHyperplane {
        d: i64,
        s: i64,
        sbar: i64,
        k1: i64,
        k2: i64,
        trivial: bool,
        coefficients: Vec<String>,
    },
}

/// A failure with its process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::CapExceeded { .. }) { 3 } else { 2 };
        CliError { code, message: e.to_string() }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn parse_list(s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| CliError::usage(format!("`{x}` is not a nonnegative integer"))))
        .collect()
}

fn parse_sv(spec: &str) -> CliResult<(Vec<usize>, Vec<usize>)> {
    let (ns, ds) = spec
        .split_once(':')
        .ok_or_else(|| CliError::usage(format!("--sv expects N1,..:D1,.., got `{spec}`")))?;
    Ok((parse_list(ns)?, parse_list(ds)?))
}

fn grass_pair(v: &[usize]) -> (usize, usize) {
    (v[0], v[1])
}

fn shape_of(a: &ShapeArgs) -> CliResult<ExtendedShape> {
    let given = [a.grass.is_some(), a.sv.is_some(), a.rnc.is_some(), a.tangent_developable.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(CliError::usage("give exactly one of --grass, --sv, --rnc, --tangent-developable"));
    }
    Ok(if let Some(g) = &a.grass {
        let (r, n) = grass_pair(g);
        ExtendedShape::grass(r, n)?
    } else if let Some(spec) = &a.sv {
        let (ns, ds) = parse_sv(spec)?;
        ExtendedShape::segre_veronese(&ns, &ds)?
    } else if let Some(n) = a.rnc {
        ExtendedShape::rational_normal_curve(n)?
    } else {
        ExtendedShape::tangent_developable(a.tangent_developable.unwrap())?
    })
}

fn ambient_of(a: &AmbientArgs) -> CliResult<Ambient> {
    match (&a.grass, a.quadric, a.proj) {
        (Some(g), None, None) => Ok(Ambient::grass(g[0], g[1])?),
        (None, Some(n), None) => Ok(Ambient::quadric(n)?),
        (None, None, Some(n)) => Ok(Ambient::proj(n)?),
        _ => Err(CliError::usage("give exactly one of --grass, --quadric, --proj")),
    }
}

fn parse_center(shape: &ExtendedShape, s: &str) -> CliResult<Index> {
    match shape.index_shape() {
        Some(IndexShape::Grass { r, n }) => Ok(Index::Grass(PluckerIndex::new(r, n, &parse_list(s)?)?)),
        Some(IndexShape::SegreVeronese { ns, ds }) => {
            let parts = s.split('/').map(parse_list).collect::<CliResult<Vec<_>>>()?;
            Ok(Index::Sv(SVIndex::new(&ns, &ds, &parts)?))
        }
        None => Err(CliError::usage("this shape has no coordinate points")),
    }
}

/// Oracle settings from the global flags; `env_seed` is the value of `GRASSDEF_SEED`.
pub fn oracle_config(cli: &Cli, env_seed: Option<&str>) -> CliResult<OracleConfig> {
    let field = match cli.prime.as_deref() {
        None => Field::Prime(DEFAULT_PRIME),
        Some("rational") => Field::Rational,
        Some(p) => Field::prime(p.parse().map_err(|_| CliError::usage(format!("`{p}` is not a prime or `rational`")))?)?,
    };
    if !(1..=64).contains(&cli.trials) {
        return Err(CliError::usage(format!("--trials must be in 1..=64, got {}", cli.trials)));
    }
    let seed = match cli.seed.as_deref().or(env_seed) {
        None => DEFAULT_SEED,
        Some("random") => rand::random(),
        Some(s) => s.parse().map_err(|_| CliError::usage(format!("`{s}` is not a 64-bit seed or `random`")))?,
    };
    let mut caps = Caps::default();
    if let Some(c) = cli.max_coordinates {
        caps.max_coordinates = c;
    }
    if let Some(t) = cli.max_terms {
        caps.max_terms = t;
    }
    Ok(OracleConfig { field, trials: cli.trials, seed, caps })
}

fn sing_levels(p: &Partition) -> Vec<Vec<SchubertClass>> {
    let mut levels = Vec::new();
    let mut current: BTreeSet<Partition> = singular_locus(p).into_iter().collect();
    while !current.is_empty() {
        levels.push(current.iter().map(SchubertClass::of).collect());
        current = current.iter().flat_map(singular_locus).collect();
    }
    levels
}

/// Runs one command. `env_seed` is the value of `GRASSDEF_SEED`, if set.
pub fn run(cli: &Cli, env_seed: Option<&str>) -> CliResult<Report> {
    let mut report = match &cli.command {
        Command::Bound { shape } => match (&shape.grass, &shape.sv) {
            (Some(g), None) if shape.rnc.is_none() && shape.tangent_developable.is_none() => {
                let (r, n) = grass_pair(g);
                Report::Bound {
                    main: grass_bound(r, n)?,
                    linear: linear_bound(r, n).ok(),
                    aop: aop_bound(r, n).ok(),
                }
            }
            (None, Some(spec)) if shape.rnc.is_none() && shape.tangent_developable.is_none() => {
                let (ns, ds) = parse_sv(spec)?;
                Report::Bound { main: sv_bound(&ns, &ds)?, linear: None, aop: None }
            }
            _ => return Err(CliError::usage("bound takes exactly one of --grass or --sv")),
        },
        Command::Secant { shape, h } => {
            Report::Secant(secant_dimension(&shape_of(shape)?, *h, &oracle_config(cli, env_seed)?)?)
        }
        Command::Tangproj { shape, h } => {
            Report::Tangproj(tangential_projection_finite(&shape_of(shape)?, *h, &oracle_config(cli, env_seed)?)?)
        }
        Command::Oscproj { shape, centers, orders } => {
            let s = shape_of(shape)?;
            let orders = parse_list(orders)?;
            let indices: Vec<Index> = match centers {
                Some(c) => c.split(';').map(|x| parse_center(&s, x)).collect::<CliResult<_>>()?,
                None => vec![s
                    .index_shape()
                    .ok_or_else(|| CliError::usage("this shape has no coordinate points"))?
                    .base_index()],
            };
            if indices.len() != orders.len() {
                return Err(CliError::usage(format!(
                    "{} centers but {} orders",
                    indices.len(),
                    orders.len()
                )));
            }
            let centers: Vec<Center> =
                indices.into_iter().zip(orders).map(|(index, order)| Center { index, order }).collect();
            Report::Oscproj(osculating_projection_finite(&s, &centers, &oracle_config(cli, env_seed)?)?)
        }
        Command::Schubert { op } => match op {
            SchubertOp::Dim(a) => Report::SchubertDim(SchubertClass::of(&Partition::new(a.r, a.n, &a.lambda)?)),
            SchubertOp::Contains(a) => {
                let (l, m) = (Partition::new(a.r, a.n, &a.lambda)?, Partition::new(a.r, a.n, &a.mu)?);
                let c = contains(&l, &m)?;
                Report::SchubertContains { lambda: l, mu: m, contains: c }
            }
            SchubertOp::Sing(a) => {
                let p = Partition::new(a.r, a.n, &a.lambda)?;
                Report::SchubertSing { class: SchubertClass::of(&p), levels: sing_levels(&p) }
            }
            SchubertOp::Mult(a) => {
                let (l, m) = (Partition::new(a.r, a.n, &a.lambda)?, Partition::new(a.r, a.n, &a.mu)?);
                let mult = multiplicity(&l, &m)?.to_string();
                Report::SchubertMult { lambda: l, mu: m, multiplicity: mult }
            }
            SchubertOp::Degree { r, n } => {
                Report::SchubertDegree { r: *r, n: *n, degree: grass_degree(*r, *n)?.to_string() }
            }
        },
        Command::Classify { ambient, k } => {
            let amb = ambient_of(ambient)?;
            let (mds, spherical) = match amb {
                Ambient::Grass { r, n } if *k >= 1 => (Some(mds_status(r, n, *k)?), Some(spherical_status(r, n, *k)?)),
                _ => (None, None),
            };
            Report::Classify { fano: classify_fano(&amb, *k), mds, spherical }
        }
        Command::Chambers { grass } => {
            let (r, n) = grass_pair(grass);
            if r != 1 {
                return Err(CliError::usage(format!("chambers are known for G(1,n)_1 only, got r = {r}")));
            }
            Report::Chambers(mori_chambers_g1n1(n)?)
        }
        Command::Spherical { grass, k } => {
            let (r, n) = grass_pair(grass);
            Report::Spherical(spherical_status(r, n, *k)?)
        }
        Command::Effcone { grass, k } => {
            let (r, n) = grass_pair(grass);
            let cone = effective_cone(r, n, *k)?;
            let dual_curves = match &cone {
                EffectiveCone::Known(c) if c.generators.len() == 2 && *k == 1 => {
                    dual_curve_cone(&c.generators[0], &c.generators[1]).ok()
                }
                _ => None,
            };
            Report::Effcone { r, n, k: *k, cone, dual_curves }
        }
        Command::LimitHyperplane { d, s, sbar, k1, k2 } => {
            let sol = limit_hyperplane_coeffs(*d, *s, *sbar, *k1, *k2)?;
            Report::LimitHyperplane {
                d: *d,
                s: *s,
                sbar: *sbar,
                k1: *k1,
                k2: *k2,
                trivial: matches!(sol, LimitHyperplane::Trivial(_)),
                coefficients: sol.coefficients().iter().map(ToString::to_string).collect(),
            }
        }
    };
    if !cli.timing {
        match &mut report {
            Report::Secant(c) => c.elapsed_ms = 0,
            Report::Tangproj(p) | Report::Oscproj(p) => p.elapsed_ms = 0,
            _ => {}
        }
    }
    Ok(report)
}

fn shape_name(s: &ExtendedShape) -> String {
    match s {
        ExtendedShape::Grass { r, n } => format!("G({r},{n})"),
        ExtendedShape::SegreVeronese { ns, ds } => format!("SV{ns:?}{ds:?}"),
        ExtendedShape::RationalNormalCurve { n } => format!("RNC({n})"),
        ExtendedShape::TangentDevelopable { n } => format!("Tan(RNC({n}))"),
    }
}

fn field_name(prime: Option<u64>) -> String {
    prime.map_or_else(|| "Q".to_string(), |p| format!("F_{p}"))
}

fn diagram(p: &Partition) -> String {
    FerrersDiagram::of(p).render()
}

fn mds_text(m: &MdsStatus) -> String {
    match m.verdict {
        MdsVerdict::KnownMds(MdsReason::Spherical) => "KnownMDS(spherical)".into(),
        MdsVerdict::KnownMds(MdsReason::WeakFano) => "KnownMDS(weakFano)".into(),
        MdsVerdict::Unknown => "Unknown".into(),
    }
}

fn class_line(c: &SchubertClass) -> String {
    format!("Σ{:?}  complement {:?}  dim {}  codim {}", c.partition.parts(), c.complement, c.dim, c.codim)
}

fn bound_text(out: &mut String, label: &str, b: &BoundReport) {
    let _ = writeln!(out, "{label}: not h-defective for h <= {}", b.max_h);
    let _ = writeln!(out, "  {}  [{}]", b.raw_statement, b.case_taken);
    if let Some((r, n)) = b.normalized_from {
        let _ = writeln!(out, "  computed on the dual of G({r},{n})");
    }
}

/// Human-readable rendering of a report.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Bound { main, linear, aop } => {
            bound_text(&mut out, "bound", main);
            if let Some(l) = linear {
                bound_text(&mut out, "linear bound", l);
            }
            if let Some(a) = aop {
                bound_text(&mut out, "AOP bound", a);
            }
        }
        Report::Secant(c) => {
            let _ = writeln!(out, "{} h={}: {:?}", shape_name(&c.shape), c.h, c.verdict);
            let _ = writeln!(out, "expected dim {}  computed dim {}  defect {}", c.expected, c.computed, c.defect);
            let _ = writeln!(
                out,
                "field {}  seed {}  trials {}  ranks {:?}{}",
                field_name(c.prime),
                c.seed,
                c.trials,
                c.trial_ranks,
                if c.escalated_to_rationals { "  (escalated to Q)" } else { "" }
            );
            let _ = writeln!(out, "{}", c.note);
        }
        Report::Tangproj(p) | Report::Oscproj(p) => {
            let _ = writeln!(out, "{}: {:?}", shape_name(&p.shape), p.verdict);
            let _ = writeln!(
                out,
                "required rank {}  observed {}  span {}  surviving coordinates {}",
                p.required_rank,
                p.observed_rank.map_or("-".into(), |x| x.to_string()),
                p.span_rank.map_or("-".into(), |x| x.to_string()),
                p.surviving_coordinates.map_or("-".into(), |x| x.to_string()),
            );
            let _ = writeln!(out, "field {}  seed {}  trials {}", field_name(p.prime), p.seed, p.trials);
        }
        Report::SchubertDim(c) => {
            let _ = writeln!(out, "{}  rectangles {}", class_line(c), c.rectangles);
            out.push_str(&diagram(&c.partition));
        }
        Report::SchubertContains { lambda, mu, contains } => {
            let rel = if *contains { "⊆" } else { "⊄" };
            let _ = writeln!(out, "Σ{:?} {rel} Σ{:?}", mu.parts(), lambda.parts());
        }
        Report::SchubertSing { class, levels } => {
            let _ = writeln!(out, "{}", class_line(class));
            out.push_str(&diagram(&class.partition));
            if levels.is_empty() {
                let _ = writeln!(out, "smooth");
            }
            for (i, level) in levels.iter().enumerate() {
                let _ = writeln!(out, "Sing^{}:", i + 1);
                for c in level {
                    let _ = writeln!(out, "  {}", class_line(c));
                    for line in diagram(&c.partition).lines() {
                        let _ = writeln!(out, "    {line}");
                    }
                }
            }
        }
        Report::SchubertMult { multiplicity, .. } => {
            let _ = writeln!(out, "{multiplicity}");
        }
        Report::SchubertDegree { r, n, degree } => {
            let _ = writeln!(out, "deg G({r},{n}) = {degree}");
        }
        Report::Classify { fano, mds, spherical } => {
            let _ = writeln!(out, "{}_{}: {:?} ({:?})", fano.ambient, fano.k, fano.verdict, fano.source);
            let _ = writeln!(out, "-K = {}  (-K)^dim = {}", fano.anticanonical, fano.top_self_intersection);
            for i in &fano.intersections {
                let _ = writeln!(out, "  -K · ({}) = {}", i.curve, i.value);
            }
            if let Some(m) = mds {
                let _ = writeln!(out, "MDS: {}", mds_text(m));
                for note in &m.notes {
                    let _ = writeln!(out, "  {note}");
                }
            }
            if let Some(s) = spherical {
                let _ = writeln!(out, "spherical: {} ({})", s.spherical, s.case);
            }
        }
        Report::Chambers(c) => {
            let walls: Vec<String> = c.walls.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "G(1,{})_1 walls: {}", c.n, walls.join(", "));
            for ch in &c.chambers {
                let _ = writeln!(out, "  [{}, {}] {}: {}", ch.generators[0], ch.generators[1], ch.model, ch.contraction);
            }
            let _ = writeln!(out, "Nef = cone({}, {})", c.nef[0], c.nef[1]);
            let _ = writeln!(out, "Mov = cone({}, {})", c.movable[0], c.movable[1]);
            let _ = writeln!(out, "Eff = cone({}, {})", c.effective[0], c.effective[1]);
            if let Some(k) = &c.flip_anticanonical {
                let _ = writeln!(out, "-K of the flip: {k}  Fano: {}", c.fano_flip_model);
            }
        }
        Report::Spherical(s) => {
            let _ = writeln!(out, "G({},{})_{}: spherical {} ({})", s.r, s.n, s.k, s.spherical, s.case);
            let _ = writeln!(out, "f = {}  gap rule {}", s.f, s.gap_rule);
        }
        Report::Effcone { r, n, k, cone, dual_curves } => match cone {
            EffectiveCone::Known(c) => {
                let gens: Vec<String> = c.generators.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "Eff(G({r},{n})_{k}) = cone({})  [{:?}: {}]", gens.join(", "), c.status, c.provenance);
                if let Some([a, b]) = dual_curves {
                    let _ = writeln!(out, "dual curve cone = cone({a}, {b})");
                }
            }
            EffectiveCone::Unknown { reason } => {
                let _ = writeln!(out, "Eff(G({r},{n})_{k}) unknown: {reason}");
            }
        },
        Report::LimitHyperplane { coefficients, trivial, .. } => {
            let _ = writeln!(out, "({}){}", coefficients.join(","), if *trivial { "  trivial" } else { "" });
        }
    }
    out
}
