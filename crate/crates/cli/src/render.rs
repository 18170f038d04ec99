//! Plain-text and LaTeX renderings of a [`Document`].

use std::fmt::Write;

use crate::report::{
    vector_text, ArrangementReport, Document, FaceReport, InequalityReport, MemberReport, OrbitSummary, Payload,
    PolytopeReport, RayReport,
};

pub fn plain(doc: &Document) -> String {
    let mut out = String::new();
    match &doc.payload {
        Payload::Inequalities(r) => plain_inequalities(&mut out, r),
        Payload::Rays(r) => plain_rays(&mut out, r),
        Payload::Member(r) => plain_member(&mut out, r),
        Payload::Faces(r) => plain_faces(&mut out, r),
        Payload::Polytope(r) => plain_polytope(&mut out, r),
        Payload::Arrangement(r) => plain_arrangement(&mut out, r),
    }
    out
}

fn plain_inequalities(out: &mut String, r: &InequalityReport) {
    let _ = writeln!(out, "{} {}", r.root_type, if r.reduced { "reduced" } else { "full" });
    for p in &r.positivity {
        let _ = writeln!(out, "{p}");
    }
    if r.reduced {
        for e in &r.edges {
            let _ = writeln!(out, "{}  <=>  {}", e.text, e.swapped);
        }
    } else {
        for p in &r.pairs {
            let _ = writeln!(out, "{}", p.text);
        }
    }
    if let Some(lines) = &r.symbolic {
        let _ = writeln!(out, "pattern:");
        for l in lines {
            let _ = writeln!(out, "  {l}");
        }
    }
}

fn plain_rays(out: &mut String, r: &RayReport) {
    let _ = writeln!(out, "{} extremal rays: {}", r.root_type, r.rays.len());
    for ray in &r.rays {
        let _ = writeln!(
            out,
            "{}  {}  {}",
            ray.orientation,
            vector_text(&ray.ray),
            ray.equalities.join(", ")
        );
    }
    if r.anomalies.is_empty() {
        let _ = writeln!(out, "anomalies: none");
    } else {
        let _ = writeln!(out, "anomalies:");
        for a in &r.anomalies {
            let _ = writeln!(out, "  {}: {}", a.orientation, a.reason);
        }
    }
}

fn plain_member(out: &mut String, r: &MemberReport) {
    let _ = writeln!(out, "{} {} {}", r.root_type, vector_text(&r.point), r.mode);
    for v in &r.verdicts {
        let _ = writeln!(out, "{}: {}", v.method, v.member);
    }
    let _ = writeln!(out, "agree: {}", r.agree);
}

fn plain_faces(out: &mut String, r: &FaceReport) {
    let _ = writeln!(out, "{} faces: {}", r.root_type, r.faces);
    let hist: Vec<String> = r
        .dim_histogram
        .iter()
        .enumerate()
        .map(|(d, c)| format!("{d}:{c}"))
        .collect();
    let _ = writeln!(out, "dimensions: {}", hist.join(" "));
    let _ = writeln!(out, "order isomorphic: {}", r.order_isomorphic);
    let _ = writeln!(out, "dimensions consistent: {}", r.dimensions_consistent);
    let _ = writeln!(out, "relative interiors nonempty: {}", r.relative_interiors_nonempty);
    let _ = writeln!(out, "covers consistent: {}", r.covers_consistent);
    let _ = writeln!(out, "iso: {}", r.isomorphic);
    for f in &r.failures {
        let _ = writeln!(out, "failure: {f}");
    }
}

fn plain_polytope(out: &mut String, r: &PolytopeReport) {
    let _ = writeln!(out, "{} y = {}", r.root_type, vector_text(&r.y));
    let _ = writeln!(out, "empty: {}", r.empty);
    let _ = writeln!(out, "constraints:");
    for c in &r.constraints {
        let _ = writeln!(out, "  {c}");
    }
    match &r.vertices {
        Some(vs) => {
            let _ = writeln!(out, "vertices: {}", vs.len());
            for v in vs {
                let _ = writeln!(out, "  {}", vector_text(v));
            }
        }
        None => {
            let _ = writeln!(out, "vertices: not enumerated above the rank bound");
        }
    }
}

fn plain_arrangement(out: &mut String, r: &ArrangementReport) {
    let _ = writeln!(out, "{} arrangement", r.root_type);
    let _ = writeln!(out, "fundamental:");
    for f in &r.fundamental {
        let _ = writeln!(out, "  {}", vector_text(f));
    }
    match &r.orbit {
        OrbitSummary::Explicit { size } => {
            let _ = writeln!(out, "orbit size: {size}");
        }
        OrbitSummary::Capped { cap, partial } => {
            let _ = writeln!(out, "orbit size: capped at {cap} ({partial} found)");
        }
    }
    let _ = writeln!(out, "classifying map:");
    for row in &r.classifying_map {
        let _ = writeln!(out, "  {}", vector_text(row));
    }
    let _ = writeln!(out, "k = {}", vector_text(&r.saturation));
}

/// `4a1 > 2a2` becomes `4a_{1} > 2a_{2}`.
fn tex_terms(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 8);
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == 'a' && chars.peek().is_some_and(char::is_ascii_digit) {
            out.push_str("_{");
            while let Some(d) = chars.next_if(char::is_ascii_digit) {
                out.push(d);
            }
            out.push('}');
        }
    }
    out
}

fn tex_vector(coords: &[String]) -> String {
    let parts: Vec<String> = coords
        .iter()
        .map(|c| match c.split_once('/') {
            Some((p, q)) if p.starts_with('-') => format!("-\\frac{{{}}}{{{q}}}", &p[1..]),
            Some((p, q)) => format!("\\frac{{{p}}}{{{q}}}"),
            None => c.clone(),
        })
        .collect();
    format!("\\left({}\\right)", parts.join(", "))
}

pub fn latex(doc: &Document) -> String {
    let mut out = String::new();
    match &doc.payload {
        Payload::Inequalities(r) => {
            let _ = writeln!(out, "% {} {}", r.root_type, if r.reduced { "reduced" } else { "full" });
            let _ = writeln!(out, "\\begin{{enumerate}}");
            for p in &r.positivity {
                let _ = writeln!(out, "  \\item ${}$", tex_terms(p));
            }
            let lines: Vec<&str> = if r.reduced {
                r.edges.iter().map(|e| e.text.as_str()).collect()
            } else {
                r.pairs.iter().map(|p| p.text.as_str()).collect()
            };
            for l in lines {
                let _ = writeln!(out, "  \\item ${}$", tex_terms(l));
            }
            let _ = writeln!(out, "\\end{{enumerate}}");
            if let Some(lines) = &r.symbolic {
                let _ = writeln!(out, "\\begin{{itemize}}");
                for l in lines {
                    let _ = writeln!(out, "  \\item \\verb|{l}|");
                }
                let _ = writeln!(out, "\\end{{itemize}}");
            }
        }
        Payload::Rays(r) => {
            let _ = writeln!(out, "% {} extremal rays", r.root_type);
            let _ = writeln!(out, "\\begin{{enumerate}}");
            for ray in &r.rays {
                let eqs: Vec<String> = ray.equalities.iter().map(|e| tex_terms(e)).collect();
                let _ = writeln!(
                    out,
                    "  \\item \\verb|{}|: ${}$; ${}$",
                    ray.orientation,
                    tex_vector(&ray.ray),
                    eqs.join(",\\ ")
                );
            }
            let _ = writeln!(out, "\\end{{enumerate}}");
        }
        Payload::Polytope(r) => {
            let _ = writeln!(out, "% {} cross section at y = {}", r.root_type, vector_text(&r.y));
            let _ = writeln!(out, "\\begin{{itemize}}");
            for v in r.vertices.iter().flatten() {
                let _ = writeln!(out, "  \\item ${}$", tex_vector(v));
            }
            let _ = writeln!(out, "\\end{{itemize}}");
        }
        _ => {
            let _ = writeln!(out, "\\begin{{verbatim}}");
            out.push_str(&plain(doc));
            let _ = writeln!(out, "\\end{{verbatim}}");
        }
    }
    out
}
