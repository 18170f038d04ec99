//! Structured command output. Every payload serializes to JSON with
//! rationals as `"p/q"` strings (or `"p"` when `q = 1`).

use std::sync::Arc;

use coterie::arrangement::{Arrangement, Orbit};
use coterie::coterie::{
    cross_section, edge_conditions, inequalities, ConstraintKind, EdgeCondition, MembershipTester, Method, Mode,
    VERTEX_RANK_BOUND,
};
use coterie::exactla::int;
use coterie::faces::{cube_report, extremal_rays, EdgeOrientation};
use coterie::{Family, Rational, RationalVector, RootSystem};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub schema: u32,
    #[serde(flatten)]
    pub payload: Payload,
}

impl Document {
    pub fn new(payload: Payload) -> Self {
        Self {
            schema: SCHEMA,
            payload,
        }
    }

    /// Message describing a failed internal check, if any.
    pub fn violation(&self) -> Option<String> {
        match &self.payload {
            Payload::Member(m) if !m.agree => Some(format!("membership methods disagree on {}", vector_text(&m.point))),
            Payload::Rays(r) if !r.anomalies.is_empty() => Some(format!("{} ray anomalies", r.anomalies.len())),
            Payload::Faces(f) if !f.isomorphic => Some("face poset is not isomorphic to the cube".into()),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Payload {
    Inequalities(InequalityReport),
    Rays(RayReport),
    Member(MemberReport),
    Faces(FaceReport),
    Polytope(PolytopeReport),
    Arrangement(ArrangementReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    #[serde(rename = "type")]
    pub root_type: String,
    pub reduced: bool,
    pub positivity: Vec<String>,
    pub edges: Vec<EdgeLine>,
    pub pairs: Vec<PairLine>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbolic: Option<Vec<String>>,
}

/// `lower a_i < a_j < upper a_i`, nodes 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeLine {
    pub i: usize,
    pub j: usize,
    pub lower: String,
    pub upper: String,
    pub text: String,
    pub swapped: String,
}

/// `a_beta > coefficient a_alpha`, nodes 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairLine {
    pub beta: usize,
    pub alpha: usize,
    pub coefficient: String,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayReport {
    #[serde(rename = "type")]
    pub root_type: String,
    pub rays: Vec<RayEntry>,
    pub anomalies: Vec<AnomalyEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayEntry {
    pub orientation: String,
    pub ray: Vec<String>,
    pub equalities: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnomalyEntry {
    pub orientation: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberReport {
    #[serde(rename = "type")]
    pub root_type: String,
    pub point: Vec<String>,
    pub mode: String,
    pub verdicts: Vec<Verdict>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub method: String,
    pub member: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceReport {
    #[serde(rename = "type")]
    pub root_type: String,
    pub faces: usize,
    /// Entry `d` counts faces of dimension `d`.
    pub dim_histogram: Vec<usize>,
    pub order_isomorphic: bool,
    pub dimensions_consistent: bool,
    pub relative_interiors_nonempty: bool,
    pub covers_consistent: bool,
    pub isomorphic: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeReport {
    #[serde(rename = "type")]
    pub root_type: String,
    pub y: Vec<String>,
    pub empty: bool,
    pub constraints: Vec<String>,
    /// Absent above the vertex rank bound.
    pub vertices: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementReport {
    #[serde(rename = "type")]
    pub root_type: String,
    pub fundamental: Vec<Vec<String>>,
    pub orbit: OrbitSummary,
    pub classifying_map: Vec<Vec<String>>,
    pub saturation: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum OrbitSummary {
    Explicit { size: usize },
    Capped { cap: usize, partial: usize },
}

fn strings(v: &RationalVector) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn vector_text(coords: &[String]) -> String {
    format!("({})", coords.join(", "))
}

fn term(coef: &Rational, node: usize) -> String {
    if *coef == int(1) {
        format!("a{}", node + 1)
    } else {
        format!("{coef}a{}", node + 1)
    }
}

/// `q a_alpha` cleared against `a_beta`: `d a_beta <rel> p a_alpha`.
fn cleared_pair(beta: usize, alpha: usize, q: &Rational, rel: &str) -> String {
    let d = Rational::from_integer(q.denom().clone());
    let p = Rational::from_integer(q.numer().clone());
    format!("{} {rel} {}", term(&d, beta), term(&p, alpha))
}

fn pair_coefficient(rs: &RootSystem, beta: usize, alpha: usize) -> Rational {
    rs.coeff(beta, alpha) / rs.coeff(alpha, alpha)
}

pub fn inequalities_report(rs: &RootSystem, reduced: bool, symbolic: bool) -> InequalityReport {
    let desc = inequalities(rs, reduced);
    let mut positivity = Vec::new();
    let mut pairs = Vec::new();
    for kind in &desc.kinds {
        match *kind {
            ConstraintKind::Positive(a) => positivity.push(format!("a{} > 0", a + 1)),
            ConstraintKind::Pair { beta, alpha } => {
                let q = pair_coefficient(rs, beta, alpha);
                pairs.push(PairLine {
                    beta: beta + 1,
                    alpha: alpha + 1,
                    text: cleared_pair(beta, alpha, &q, ">"),
                    coefficient: q.to_string(),
                });
            }
        }
    }
    let edges = edge_conditions(rs).iter().map(edge_line).collect();
    InequalityReport {
        root_type: rs.simple_type().to_string(),
        reduced,
        positivity,
        edges,
        pairs,
        symbolic: symbolic.then(|| symbolic_pattern(rs.simple_type().family())).flatten(),
    }
}

fn edge_line(c: &EdgeCondition) -> EdgeLine {
    EdgeLine {
        i: c.i + 1,
        j: c.j + 1,
        lower: c.lower.to_string(),
        upper: c.upper.to_string(),
        text: c.to_string(),
        swapped: c.swapped().to_string(),
    }
}

/// Closed-form edge conditions of the classical families at rank `n`.
pub fn symbolic_pattern(family: Family) -> Option<Vec<String>> {
    let lines: &[&str] = match family {
        Family::A => &[
            "a_j > j/(j+1) a_(j+1) for 1 <= j <= n-1",
            "a_j > (n+1-j)/(n+2-j) a_(j-1) for 2 <= j <= n",
        ],
        Family::B => &[
            "a_j > j/(j+1) a_(j+1) for 1 <= j <= n-1",
            "a_j > a_(j-1) for 2 <= j <= n",
        ],
        Family::C => &[
            "a_j > j/(j+1) a_(j+1) for 1 <= j <= n-2",
            "a_j > a_(j-1) for 2 <= j <= n-1",
            "a_(n-1) > 2(n-1)/n a_n",
            "a_n > 1/2 a_(n-1)",
        ],
        Family::D => &[
            "a_j > j/(j+1) a_(j+1) for 1 <= j <= n-3",
            "a_j > a_(j-1) for 2 <= j <= n-2",
            "a_(n-2) > 2(n-2)/n a_(n-1)",
            "a_(n-2) > 2(n-2)/n a_n",
            "a_(n-1) > 1/2 a_(n-2)",
            "a_n > 1/2 a_(n-2)",
        ],
        _ => return None,
    };
    Some(lines.iter().map(|s| s.to_string()).collect())
}

pub fn rays_report(rs: &RootSystem) -> RayReport {
    let found = extremal_rays(rs);
    let rays = found
        .rays
        .iter()
        .map(|(orientation, ray)| {
            let equalities = rs
                .edges()
                .iter()
                .zip(orientation.edges())
                .filter_map(|(&(i, j), e)| {
                    let (beta, alpha) = match e {
                        EdgeOrientation::Right => (i, j),
                        EdgeOrientation::Left => (j, i),
                        EdgeOrientation::Neutral => return None,
                    };
                    Some(cleared_pair(beta, alpha, &pair_coefficient(rs, beta, alpha), "="))
                })
                .collect();
            RayEntry {
                orientation: orientation.to_string(),
                ray: strings(ray),
                equalities,
            }
        })
        .collect();
    let anomalies = found
        .anomalies
        .into_iter()
        .map(|a| AnomalyEntry {
            orientation: a.orientation.to_string(),
            reason: a.reason,
        })
        .collect();
    RayReport {
        root_type: rs.simple_type().to_string(),
        rays,
        anomalies,
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Geometric => "geometric",
        Method::Full => "full",
        Method::Edges => "edges",
    }
}

pub fn member_report(
    rs: &RootSystem,
    x: &RationalVector,
    mode: Mode,
    methods: &[Method],
) -> Result<MemberReport, CliError> {
    let tester = MembershipTester::new(rs);
    let verdicts = methods
        .iter()
        .map(|&m| {
            Ok(Verdict {
                method: method_name(m).into(),
                member: tester.member(x, mode, m)?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let agree = verdicts.windows(2).all(|w| w[0].member == w[1].member);
    Ok(MemberReport {
        root_type: rs.simple_type().to_string(),
        point: strings(x),
        mode: match mode {
            Mode::Open => "open",
            Mode::Closed => "closed",
        }
        .into(),
        verdicts,
        agree,
    })
}

pub fn faces_report(rs: &RootSystem, rank_bound: usize) -> Result<FaceReport, CliError> {
    let r = cube_report(rs, rank_bound)?;
    Ok(FaceReport {
        root_type: rs.simple_type().to_string(),
        faces: r.faces,
        isomorphic: r.is_isomorphic(),
        dim_histogram: r.dim_histogram,
        order_isomorphic: r.order_isomorphic,
        dimensions_consistent: r.dimensions_consistent,
        relative_interiors_nonempty: r.relative_interiors_nonempty,
        covers_consistent: r.covers_consistent,
        failures: r.failures,
    })
}

pub fn polytope_report(rs: &RootSystem, y: &RationalVector) -> Result<PolytopeReport, CliError> {
    let cs = cross_section(rs, y)?;
    let vertices = if rs.rank() <= VERTEX_RANK_BOUND {
        Some(cs.vertices()?.iter().map(strings).collect())
    } else {
        None
    };
    Ok(PolytopeReport {
        root_type: rs.simple_type().to_string(),
        y: strings(y),
        empty: cs.is_empty()?,
        constraints: cs.system.constraints().iter().map(ToString::to_string).collect(),
        vertices,
    })
}

pub fn arrangement_report(arr: &Arrangement, orbit_cap: usize) -> Result<ArrangementReport, CliError> {
    let map = arr.classifying_map()?;
    let orbit = match arr.weyl_orbit(orbit_cap).orbit() {
        Orbit::Explicit(members) => OrbitSummary::Explicit { size: members.len() },
        Orbit::Implicit { partial } => OrbitSummary::Capped {
            cap: orbit_cap,
            partial: *partial,
        },
        Orbit::NotComputed => unreachable!("weyl_orbit always computes"),
    };
    Ok(ArrangementReport {
        root_type: arr.root_system().simple_type().to_string(),
        fundamental: arr.fundamental().iter().map(|h| strings(h.functional())).collect(),
        orbit,
        classifying_map: (0..map.matrix.rows()).map(|i| strings(&map.matrix.row(i))).collect(),
        saturation: map.saturation.iter().map(ToString::to_string).collect(),
    })
}

pub fn canonical_arrangement(rs: RootSystem) -> Arrangement {
    Arrangement::canonical(Arc::new(rs))
}
