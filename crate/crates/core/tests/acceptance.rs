//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every check is exact. Printed tables and example data are transcribed
//! here as literal strings or closed formulas; derived quantities are
//! recomputed from first principles where the library has a shortcut.

mod common;

use std::collections::{BTreeSet, VecDeque};
use std::process::ExitCode;
use std::time::Instant;

use coterie::coterie::{
    additivity_check, edge_conditions, general_member_report, inequalities, member, r_alpha, r_i_general,
    u_identity_check, GeneralCoterieInstance, MembershipTester, Method, Mode,
};
use coterie::exactla::{feasible, implies, int, rat, ConeSystem, LinearConstraint, Rational, RationalVector};
use coterie::faces::{cube_report, extremal_rays, face_of, DEFAULT_CUBE_RANK_BOUND};
use coterie::rootsys::root_system;
use coterie::{RootSystem, SimpleType};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use common::{box_mixed, box_point, positive, rational, rng, strictly_dominant, RaySampler};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn types_up_to_8() -> Vec<SimpleType> {
    SimpleType::all_up_to_rank(8)
}

fn system_for(t: SimpleType) -> RootSystem {
    RootSystem::build(t)
}

// ---------------------------------------------------------------------------
// Criterion 1: the printed inequality tables.

/// `p a_u > q a_v`, nodes 1-based, as the functional `p e_u - q e_v`.
fn gt(n: usize, p: Rational, u: usize, q: Rational, v: usize) -> RationalVector {
    let mut f = RationalVector::zeros(n);
    f[u - 1] = &f[u - 1] + &p;
    f[v - 1] = &f[v - 1] - &q;
    f
}

/// `a_u > (num/den) a_v`.
fn frac(n: usize, u: usize, num: i64, den: i64, v: usize) -> RationalVector {
    gt(n, Rational::one(), u, rat(num, den), v)
}

fn term(text: &str) -> (Rational, usize) {
    let (coef, node) = text.trim().split_once('a').expect("term has a node");
    let coef = if coef.is_empty() {
        Rational::one()
    } else {
        int(coef.parse().unwrap())
    };
    (coef, node.parse().unwrap())
}

/// `"r a_i > s a_j > t a_i"` as its two strict inequalities.
fn chain(n: usize, line: &str) -> Vec<RationalVector> {
    let parts: Vec<(Rational, usize)> = line.split('>').map(term).collect();
    parts
        .windows(2)
        .map(|w| gt(n, w[0].0.clone(), w[0].1, w[1].0.clone(), w[1].1))
        .collect()
}

fn positivity(n: usize) -> Vec<RationalVector> {
    (0..n).map(|i| RationalVector::unit(n, i)).collect()
}

const E6_LINES: [&str; 5] = [
    "8a1 > 4a2 > 5a1",
    "5a3 > 6a2 > 4a3",
    "5a3 > 6a4 > 4a3",
    "4a3 > 6a6 > 3a3",
    "8a5 > 4a4 > 5a5",
];
const E7_LINES: [&str; 6] = [
    "3a1 > 4a2 > 2a1",
    "6a2 > 4a3 > 5a2",
    "10a4 > 12a3 > 9a4",
    "9a5 > 6a4 > 8a5",
    "7a4 > 12a7 > 6a4",
    "4a6 > 2a5 > 3a6",
];
const E8_LINES: [&str; 7] = [
    "4a1 > 2a2 > 3a1",
    "9a2 > 6a3 > 8a2",
    "16a3 > 12a4 > 15a3",
    "25a4 > 20a5 > 24a4",
    "16a8 > 8a5 > 15a8",
    "21a6 > 14a5 > 20a6",
    "8a7 > 4a6 > 7a7",
];
const F4_LINES: [&str; 3] = ["4a1 > 2a2 > 3a1", "9a2 > 12a3 > 8a2", "4a3 > 6a4 > 3a3"];
const G2_LINES: [&str; 1] = ["4a2 > 2a1 > 3a2"];

/// The table exactly as printed, generic families instantiated at rank `n`.
fn printed_table(name: &str) -> Vec<RationalVector> {
    let t: SimpleType = name.parse().unwrap();
    let n = t.rank();
    let nn = n as i64;
    let mut out = positivity(n);
    let lines: &[&str] = match name {
        "E6" => &E6_LINES,
        "E7" => &E7_LINES,
        "E8" => &E8_LINES,
        "F4" => &F4_LINES,
        "G2" => &G2_LINES,
        _ => &[],
    };
    for line in lines {
        out.extend(chain(n, line));
    }
    match name.as_bytes()[0] {
        b'A' => {
            for j in 1..=n {
                let jj = j as i64;
                if j < n {
                    out.push(frac(n, j, jj, jj + 1, j + 1));
                }
                if j > 1 {
                    out.push(frac(n, j, nn + 1 - jj, nn + 2 - jj, j - 1));
                }
            }
        }
        b'B' => {
            for j in 1..=n {
                let jj = j as i64;
                if j < n {
                    out.push(frac(n, j, jj, jj + 1, j + 1));
                }
                if j > 1 {
                    out.push(frac(n, j, 1, 1, j - 1));
                }
            }
        }
        b'C' => {
            for j in 1..=n {
                let jj = j as i64;
                if j > 1 && j < n {
                    out.push(frac(n, j, 1, 1, j - 1));
                }
                if j + 1 < n {
                    out.push(frac(n, j, jj, jj + 1, j + 1));
                }
            }
            out.push(frac(n, n, 1, 2, n - 1));
            out.push(frac(n, n - 1, 2 * (nn - 1), nn, n));
        }
        b'D' => {
            for j in 1..n - 2 {
                let jj = j as i64;
                out.push(frac(n, j, jj, jj + 1, j + 1));
            }
            out.push(frac(n, n - 2, 2 * (nn - 2), nn, n - 1));
            out.push(frac(n, n - 2, 2 * (nn - 2), nn, n));
            out.push(frac(n, n, 1, 2, n - 2));
            out.push(frac(n, n - 1, 1, 2, n - 2));
        }
        _ => {}
    }
    out
}

/// The printed table with the documented errata repaired: the first E7
/// line has `a1` and `a2` transposed, and the D table omits
/// `a_j > a_{j-1}` for `2 <= j <= n-2`.
fn corrected_table(name: &str) -> Vec<RationalVector> {
    let n: usize = name[1..].parse().unwrap();
    match name.as_bytes()[0] {
        b'E' if n == 7 => {
            let mut out = positivity(n);
            out.extend(chain(n, "3a2 > 4a1 > 2a2"));
            for line in &E7_LINES[1..] {
                out.extend(chain(n, line));
            }
            out
        }
        b'D' => {
            let mut out = printed_table(name);
            out.extend((2..=n - 2).map(|j| frac(n, j, 1, 1, j - 1)));
            out
        }
        _ => printed_table(name),
    }
}

fn directions(fs: &[RationalVector]) -> BTreeSet<Vec<BigInt>> {
    fs.iter().map(RationalVector::primitive).collect()
}

fn open_system(n: usize, fs: &[RationalVector]) -> ConeSystem {
    ConeSystem::new(n, fs.iter().cloned().map(LinearConstraint::strict).collect()).unwrap()
}

fn from_direction(d: &[BigInt]) -> RationalVector {
    RationalVector::from_integers(d)
}

/// A point satisfying `base` but violating `c`, if any.
fn separating_point(base: &ConeSystem, c: &RationalVector) -> Option<RationalVector> {
    let neg = LinearConstraint::strict(c.clone()).negations();
    feasible(&base.with(neg).unwrap()).unwrap().witness().cloned()
}

fn criterion_tables() -> Outcome {
    let mut errata = Vec::new();
    for name in ["A4", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
        let rs = root_system(name);
        let n = rs.rank();
        let ours: Vec<RationalVector> = inequalities(&rs, true)
            .open_system
            .constraints()
            .iter()
            .map(|c| c.functional.clone())
            .collect();
        let ours_set = directions(&ours);
        let printed = directions(&printed_table(name));
        let corrected = directions(&corrected_table(name));
        ensure(ours_set == corrected, || {
            format!(
                "{name}: generated {} conditions, table has {}; missing {:?}, extra {:?}",
                ours_set.len(),
                corrected.len(),
                corrected.difference(&ours_set).collect::<Vec<_>>(),
                ours_set.difference(&corrected).collect::<Vec<_>>()
            )
        })?;
        if printed == corrected {
            continue;
        }
        // Each printed deviation must be refuted by the geometric criterion.
        let printed_sys = open_system(n, &printed.iter().map(|d| from_direction(d)).collect::<Vec<_>>());
        let ours_sys = open_system(n, &ours);
        if !feasible(&printed_sys).unwrap().is_feasible() {
            // the printed table describes the empty set
            let x = strictly_dominant(&mut rng(1), &rs);
            ensure(member(&rs, &x, Mode::Open, Method::Geometric).unwrap(), || {
                format!("{name}: {x}")
            })?;
            errata.push(format!("{name} (printed system empty)"));
            continue;
        }
        let mut witnesses = 0;
        for d in ours_set.difference(&printed) {
            if let Some(w) = separating_point(&printed_sys, &from_direction(d)) {
                ensure(!member(&rs, &w, Mode::Open, Method::Geometric).unwrap(), || {
                    format!("{name}: {w} meets the printed table and the geometric criterion")
                })?;
                witnesses += 1;
            }
        }
        for d in printed.difference(&ours_set) {
            if let Some(w) = separating_point(&ours_sys, &from_direction(d)) {
                ensure(member(&rs, &w, Mode::Open, Method::Geometric).unwrap(), || {
                    format!("{name}: {w} refutes printed {d:?} but is not a member")
                })?;
                witnesses += 1;
            }
        }
        ensure(witnesses > 0, || {
            format!("{name}: printed and generated cones coincide")
        })?;
        errata.push(name.to_string());
    }
    // Spot-check the rendering of two printed lines.
    let render = |name: &str| -> Vec<String> {
        edge_conditions(&root_system(name))
            .iter()
            .flat_map(|c| [c.to_string(), c.swapped().to_string()])
            .collect()
    };
    ensure(render("E8").contains(&"25a4 > 20a5 > 24a4".to_string()), || {
        "E8 rendering".into()
    })?;
    ensure(render("F4").contains(&"9a2 > 12a3 > 8a2".to_string()), || {
        "F4 rendering".into()
    })?;
    ensure(render("E7").contains(&"10a4 > 12a3 > 9a4".to_string()), || {
        "E7 rendering".into()
    })?;
    for (name, lines) in [
        ("E6", &E6_LINES[..]),
        ("E8", &E8_LINES[..]),
        ("F4", &F4_LINES[..]),
        ("G2", &G2_LINES[..]),
    ] {
        let r = render(name);
        for line in lines {
            ensure(r.contains(&line.to_string()), || {
                format!("{name}: printed line {line:?} not rendered")
            })?;
        }
    }
    Ok(format!(
        "9 tables; verbatim except documented errata in {} (confirmed by witness points)",
        errata.join(", ")
    ))
}

// ---------------------------------------------------------------------------
// Criterion 2: the A4 extremal rays.

fn criterion_a4_rays() -> Outcome {
    let rs = root_system("A4");
    let q = |xs: [(i64, i64); 4]| RationalVector::new(xs.iter().map(|&(p, d)| rat(p, d)).collect());
    let expected = [
        (">>>", q([(1, 4), (1, 2), (3, 4), (1, 1)])),
        (">><", q([(2, 3), (4, 3), (2, 1), (1, 1)])),
        ("><>", q([(9, 16), (9, 8), (3, 4), (1, 1)])),
        ("><<", q([(3, 2), (3, 1), (2, 1), (1, 1)])),
        ("<>>", q([(2, 3), (1, 2), (3, 4), (1, 1)])),
        ("<><", q([(16, 9), (4, 3), (2, 1), (1, 1)])),
        ("<<>", q([(3, 2), (9, 8), (3, 4), (1, 1)])),
        ("<<<", q([(4, 1), (3, 1), (2, 1), (1, 1)])),
    ];
    // Printed defining conditions; the list for item 5 is a misprint and is
    // checked through its representative only.
    let printed: [Option<[&str; 3]>; 8] = [
        Some(["2a1=a2", "3a2=2a3", "4a3=3a4"]),
        Some(["2a1=a2", "3a2=2a3", "a3=2a4"]),
        Some(["2a1=a2", "2a2=3a3", "4a3=3a4"]),
        Some(["2a1=a2", "2a2=3a3", "a3=2a4"]),
        None,
        Some(["3a1=4a2", "3a2=2a3", "a3=2a4"]),
        Some(["3a1=4a2", "2a2=3a3", "4a3=3a4"]),
        Some(["3a1=4a2", "2a2=3a3", "a3=2a4"]),
    ];
    let got = extremal_rays(&rs);
    ensure(got.anomalies.is_empty(), || format!("anomalies: {:?}", got.anomalies))?;
    ensure(got.rays.len() == 8, || format!("{} rays", got.rays.len()))?;
    for (k, ((f, ray), (ef, eray))) in got.rays.iter().zip(&expected).enumerate() {
        ensure(f.to_string() == *ef, || {
            format!("item {}: orientation {f}, expected {ef}", k + 1)
        })?;
        ensure(ray == eray, || format!("item {}: ray {ray}, expected {eray}", k + 1))?;
        let face = face_of(&rs, f).unwrap();
        let ours: BTreeSet<RationalVector> = face
            .equalities()
            .iter()
            .map(|c| c.functional.canonical_direction())
            .collect();
        for c in face.equalities() {
            ensure(c.functional.dot(eray).is_zero(), || {
                format!("item {}: {c} fails on the representative", k + 1)
            })?;
        }
        if let Some(lines) = printed[k] {
            let theirs: BTreeSet<RationalVector> = lines
                .iter()
                .map(|l| {
                    let (lhs, rhs) = l.split_once('=').unwrap();
                    let (p, u) = term(lhs);
                    let (q, v) = term(rhs);
                    gt(4, p, u, q, v).canonical_direction()
                })
                .collect();
            ensure(ours == theirs, || format!("item {}: defining conditions differ", k + 1))?;
        }
    }
    Ok("8 rays and orientations in printed order; conditions match items 1-4, 6-8; item 5 by representative".into())
}

// ---------------------------------------------------------------------------
// Criterion 3: face lattice is a cube.

fn criterion_cube() -> Outcome {
    let mut faces = 0;
    let types = types_up_to_8();
    for &t in &types {
        let rs = system_for(t);
        let report = cube_report(&rs, DEFAULT_CUBE_RANK_BOUND).map_err(|e| e.to_string())?;
        ensure(report.is_isomorphic(), || format!("{t}: {:?}", report.failures))?;
        // dimension histogram of the (n-1)-cube: binomial(n-1, d-1) faces of dim d
        let m = t.rank() - 1;
        let mut binom = vec![1usize; m + 1];
        for k in 1..=m {
            binom[k] = binom[k - 1] * (m + 1 - k) / k;
        }
        for d in 1..=t.rank() {
            let expect = binom[d - 1] * (1 << (m - (d - 1)));
            ensure(report.dim_histogram[d] == expect, || {
                format!(
                    "{t}: {} faces of dimension {d}, expected {expect}",
                    report.dim_histogram[d]
                )
            })?;
        }
        let rays = extremal_rays(&rs);
        ensure(rays.anomalies.is_empty() && rays.rays.len() == 1 << m, || {
            format!("{t}: ray anomalies")
        })?;
        let distinct: BTreeSet<_> = rays.rays.iter().map(|(_, r)| r.clone()).collect();
        ensure(distinct.len() == rays.rays.len(), || format!("{t}: repeated rays"))?;
        for (_, r) in rays.rays.iter().filter(|_| t.rank() > 1) {
            ensure(
                r.all_positive()
                    && member(&rs, r, Mode::Closed, Method::Full).unwrap()
                    && !member(&rs, r, Mode::Open, Method::Full).unwrap(),
                || format!("{t}: ray {r} not on the boundary"),
            )?;
        }
        faces += report.faces;
    }
    Ok(format!("{} types, {faces} faces, E8 included", types.len()))
}

// ---------------------------------------------------------------------------
// Criterion 4: rank two.

/// Drops constraints implied by the remaining ones.
fn irredundant(n: usize, fs: Vec<RationalVector>) -> BTreeSet<Vec<BigInt>> {
    let mut keep: Vec<RationalVector> = fs;
    let mut k = 0;
    while k < keep.len() {
        let others: Vec<RationalVector> = keep
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, f)| f.clone())
            .collect();
        if implies(&open_system(n, &others), &LinearConstraint::strict(keep[k].clone())).unwrap() {
            keep.remove(k);
        } else {
            k += 1;
        }
    }
    directions(&keep)
}

/// Open chamber in root coordinates from the Cartan matrix directly:
/// `<x, alpha_j^vee> = sum_i a_i cartan[i][j] > 0`.
fn chamber_rows(rs: &RootSystem) -> Vec<RationalVector> {
    let n = rs.rank();
    (0..n)
        .map(|j| (0..n).map(|i| rs.cartan()[(i, j)].clone()).collect())
        .collect()
}

fn criterion_rank_two() -> Outcome {
    let mut r = rng(4);
    for name in ["A2", "B2", "G2"] {
        let rs = root_system(name);
        let cone: Vec<RationalVector> = inequalities(&rs, false)
            .open_system
            .constraints()
            .iter()
            .map(|c| c.functional.clone())
            .collect();
        let chamber = chamber_rows(&rs);
        ensure(irredundant(2, cone) == irredundant(2, chamber.clone()), || {
            format!("{name}: H-representations differ")
        })?;
        for k in 0..1000 {
            let x = if k % 2 == 0 {
                box_point(&mut r, 2, -2, 4)
            } else {
                strictly_dominant(&mut r, &rs)
            };
            let in_chamber = chamber.iter().all(|f| f.dot(&x) > Rational::zero());
            for m in Method::ALL {
                let got = member(&rs, &x, Mode::Open, m).unwrap();
                ensure(got == in_chamber, || {
                    format!("{name}: {x} chamber {in_chamber}, {m:?} {got}")
                })?;
            }
        }
    }
    Ok("A2, B2, G2: equal irredundant H-representations, 1000 points each".into())
}

// ---------------------------------------------------------------------------
// Criterion 5: three membership methods agree.

fn criterion_methods() -> Outcome {
    let mut total = 0;
    let mut members = 0;
    for (seed, &t) in types_up_to_8().iter().enumerate() {
        let rs = system_for(t);
        let sampler = RaySampler::new(&rs);
        let tester = MembershipTester::new(&rs);
        let mut r = rng(500 + seed as u64);
        // 500 grid points in [-2, 4]^n, then 100 exact boundary points
        for k in 0..600 {
            let x = if k < 500 {
                box_mixed(&mut r, &rs, &sampler)
            } else if k % 2 == 0 {
                sampler.ray(&mut r)
            } else {
                sampler.closed(&mut r)
            };
            for mode in [Mode::Open, Mode::Closed] {
                let v: Vec<bool> = Method::ALL
                    .iter()
                    .map(|&m| tester.member(&x, mode, m).unwrap())
                    .collect();
                ensure(v.iter().all(|&b| b == v[0]), || {
                    format!("{t}: {x} {mode:?} verdicts {v:?}")
                })?;
                members += v[0] as usize;
            }
            total += 1;
        }
    }
    Ok(format!(
        "{total} points x 2 modes, {members} positive verdicts, zero disagreements"
    ))
}

// ---------------------------------------------------------------------------
// Criterion 6: chain identity.

fn path(rs: &RootSystem, from: usize, to: usize) -> Vec<usize> {
    let n = rs.rank();
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in rs.edges() {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([from]);
    prev[from] = from;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if prev[v] == usize::MAX {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    let mut p = vec![to];
    while *p.last().unwrap() != from {
        p.push(prev[*p.last().unwrap()]);
    }
    p.reverse();
    p
}

fn criterion_chain() -> Outcome {
    let mut triples = 0;
    for t in types_up_to_8() {
        let rs = system_for(t);
        let n = rs.rank();
        // independent oracle for the coefficient table: (C^T) c = I
        let c = rs.inv_coeffs();
        for i in 0..n {
            for j in 0..n {
                let v: Rational = (0..n).map(|k| &rs.cartan()[(k, i)] * &c[(k, j)]).sum();
                ensure(v == if i == j { Rational::one() } else { Rational::zero() }, || {
                    format!("{t}: coefficient table")
                })?;
            }
        }
        for a in 0..n {
            for g in 0..n {
                for &b in &path(&rs, a, g) {
                    let lhs = &c[(a, g)];
                    let rhs = &c[(a, b)] / &c[(b, b)] * &c[(b, g)];
                    ensure(*lhs == rhs, || format!("{t}: ({}, {}, {})", a + 1, b + 1, g + 1))?;
                    triples += 1;
                }
            }
        }
        ensure(rs.chain_identity_check(), || format!("{t}: library check disagrees"))?;
    }
    Ok(format!("{triples} path triples"))
}

// ---------------------------------------------------------------------------
// Criterion 7: additivity.

fn r_choice(r: &mut rand_chacha::ChaCha8Rng) -> u8 {
    r.gen_range(0..3)
}

fn criterion_additivity() -> Outcome {
    let mut pairs = 0;
    for (seed, &t) in types_up_to_8().iter().enumerate() {
        let rs = system_for(t);
        let sampler = RaySampler::new(&rs);
        let tester = MembershipTester::new(&rs);
        let mut r = rng(700 + seed as u64);
        let draw = |r: &mut _| loop {
            let p = match r_choice(r) {
                0 => sampler.interior(r),
                1 => sampler.dominant(r),
                _ => box_mixed(r, &rs, &sampler),
            };
            if tester.member(&p, Mode::Open, Method::Edges).unwrap() {
                break p;
            }
        };
        for _ in 0..200 {
            let x = draw(&mut r);
            let y = draw(&mut r);
            ensure(additivity_check(&rs, &x, &y).unwrap(), || format!("{t}: {x} + {y}"))?;
            let s = &x + &y;
            ensure(tester.member(&s, Mode::Open, Method::Geometric).unwrap(), || {
                format!("{t}: sum {s}")
            })?;
            for a in 0..rs.rank() {
                let lhs = r_alpha(&rs, &s, a).unwrap();
                ensure(lhs == &s[a] / &rs.inv_coeffs()[(a, a)], || format!("{t}: r_{a}"))?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

// ---------------------------------------------------------------------------
// Criterion 8: the u identity on canonical instances.

fn criterion_u_identity() -> Outcome {
    let mut triples = 0;
    for (seed, name) in ["A2", "A3", "A4", "B3"].into_iter().enumerate() {
        let rs = std::sync::Arc::new(root_system(name));
        let inst = GeneralCoterieInstance::canonical(rs.clone());
        let n = rs.rank();
        let mut r = rng(800 + seed as u64);
        for k in 0..100 {
            let delta: RationalVector = (0..n).map(|_| positive(&mut r, 4)).collect();
            let i = r.gen_range(0..n);
            let ri = r_i_general(&inst, i, &delta).unwrap();
            // closed form: r_i(delta) = (delta_i / c_{i,i}) lambda_i
            let closed = rs.fundamental_weight(i).unwrap().scale(&(&delta[i] / rs.coeff(i, i)));
            ensure(ri == closed, || {
                format!("{name}: r_{} = {ri}, expected {closed}", i + 1)
            })?;
            let lam = match k % 4 {
                0 => RationalVector::zeros(n),
                1 => ri.clone(),
                _ => box_point(&mut r, n, -2, 4),
            };
            ensure(u_identity_check(&inst, i, &delta, &lam).unwrap(), || {
                format!("{name}: u identity at {delta}, {lam}")
            })?;
            let lhs = &delta[i] - &lam[i];
            let rr = rs.inner(&ri, &ri).unwrap();
            let rhs = &delta[i] / &rr * rs.inner(&(&ri - &lam), &ri).unwrap();
            ensure(lhs == rhs, || format!("{name}: sides {lhs} vs {rhs}"))?;
            match k % 4 {
                0 => ensure(lhs == delta[i], || format!("{name}: anchor lambda = 0"))?,
                1 => ensure(lhs.is_zero(), || format!("{name}: anchor lambda = r_i"))?,
                _ => {}
            }
            triples += 1;
        }
    }
    Ok(format!("{triples} triples on A2, A3, A4, B3 including anchors"))
}

// ---------------------------------------------------------------------------
// Criterion 9: general criterion against the closed form.

fn criterion_general() -> Outcome {
    let mut count = 0;
    let mut members = 0;
    let mut witnesses = 0;
    for (seed, name) in ["A2", "A3", "A4", "B3", "G2"].into_iter().enumerate() {
        let rs = std::sync::Arc::new(root_system(name));
        let inst = GeneralCoterieInstance::canonical(rs.clone());
        let sampler = RaySampler::new(&rs);
        let mut r = rng(900 + seed as u64);
        for k in 0..200 {
            let delta = match k % 4 {
                0 => sampler.interior(&mut r),
                1 => sampler.closed(&mut r),
                2 => strictly_dominant(&mut r, &rs),
                _ => box_point(&mut r, rs.rank(), 0, 4),
            };
            let report = general_member_report(&inst, &delta).unwrap();
            let expected = member(&rs, &delta, Mode::Open, Method::Edges).unwrap();
            ensure(report.is_member() == expected, || {
                format!("{name}: {delta} general {} closed form {expected}", report.is_member())
            })?;
            for check in &report.checks {
                if let Some(w) = check.verdict.witness() {
                    ensure(check.system.is_satisfied_by(w), || {
                        format!("{name}: witness {w} fails its system")
                    })?;
                    ensure(rs.dominant_in_root_coords(w, true).unwrap(), || {
                        format!("{name}: witness {w} not strictly dominant")
                    })?;
                    witnesses += 1;
                }
            }
            members += expected as usize;
            count += 1;
        }
    }
    ensure(members > 0 && members < count, || "sample is one-sided".into())?;
    Ok(format!(
        "{count} characters ({members} members), {witnesses} witnesses verified"
    ))
}

// ---------------------------------------------------------------------------
// Criterion 10: inclusions.

/// 33 types at 300 points each, well above the 1000 points required.
const DOMINANT_PER_TYPE: usize = 300;

fn criterion_inclusions() -> Outcome {
    let mut dominant = 0;
    let mut members = 0;
    for (seed, &t) in types_up_to_8().iter().enumerate() {
        let rs = system_for(t);
        let sampler = RaySampler::new(&rs);
        let tester = MembershipTester::new(&rs);
        let mut r = rng(1000 + seed as u64);
        for _ in 0..DOMINANT_PER_TYPE {
            let x = sampler.dominant(&mut r);
            ensure(rs.dominant_in_root_coords(&x, true).unwrap(), || {
                format!("{t}: sampler produced {x}")
            })?;
            for m in Method::ALL {
                ensure(tester.member(&x, Mode::Open, m).unwrap(), || {
                    format!("{t}: dominant {x} rejected by {m:?}")
                })?;
            }
            dominant += 1;
        }
        for _ in 0..DOMINANT_PER_TYPE {
            let x = if r.gen_bool(0.5) {
                box_mixed(&mut r, &rs, &sampler)
            } else {
                (0..rs.rank()).map(|_| rational(&mut r, -1, 4)).collect()
            };
            if tester.member(&x, Mode::Open, Method::Edges).unwrap() {
                ensure(x.all_positive(), || {
                    format!("{t}: member {x} has a nonpositive coordinate")
                })?;
                members += 1;
            }
        }
    }
    Ok(format!(
        "{dominant} strictly dominant points accepted; {members} sampled members all positive"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("inequality tables", criterion_tables),
        ("A4 extremal rays", criterion_a4_rays),
        ("cube face lattice", criterion_cube),
        ("rank-two chamber identity", criterion_rank_two),
        ("three-way membership agreement", criterion_methods),
        ("chain identity", criterion_chain),
        ("additivity", criterion_additivity),
        ("u identity", criterion_u_identity),
        ("general criterion vs closed form", criterion_general),
        ("chamber and orthant inclusions", criterion_inclusions),
    ];
    // optional criterion numbers on the command line restrict the run
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    let mut ran = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        if !only.is_empty() && !only.contains(&(k + 1)) {
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.2}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!("{} of {ran} criteria passed", ran - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
