use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use eqdeg_core::search::{compute_p, Mode, SearchConfig};
use eqdeg_core::triangles::{triangle_profile, MantelClass};
use eqdeg_core::{find_equal_degree_path, from_graph6, to_graph6, ConstructionSpec, Graph};

use crate::report::{extremal_table, Report};

/// A graph together with the text it was read from.
pub struct Input {
    pub label: String,
    pub graph: Graph,
}

/// Graph6 text, or a construction spec when the line contains a colon.
pub fn parse_graph(text: &str) -> Result<Input> {
    let text = text.trim();
    let graph = if text.contains(':') {
        let spec: ConstructionSpec = text.parse()?;
        spec.build()?
    } else {
        from_graph6(text.as_bytes()).with_context(|| format!("parsing graph6 {text:?}"))?
    };
    Ok(Input {
        label: text.to_string(),
        graph,
    })
}

pub fn read_inputs(
    construct: Option<&str>,
    graph6: Option<&str>,
    file: Option<&PathBuf>,
) -> Result<(Vec<Input>, Vec<u8>)> {
    match (construct, graph6, file) {
        (Some(spec), None, None) => {
            let spec: ConstructionSpec = spec.parse()?;
            let graph = spec.build()?;
            Ok((
                vec![Input {
                    label: spec.to_string(),
                    graph,
                }],
                spec.to_string().into_bytes(),
            ))
        }
        (None, Some(text), None) => Ok((vec![parse_graph(text)?], text.trim().as_bytes().to_vec())),
        (None, None, Some(path)) => {
            let raw = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
            let text = String::from_utf8(raw.clone())
                .with_context(|| format!("{} is not UTF-8", path.display()))?;
            let inputs = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| {
                    parse_graph(l).with_context(|| format!("{}:{}", path.display(), i + 1))
                })
                .collect::<Result<Vec<_>>>()?;
            if inputs.is_empty() {
                bail!("{} holds no graphs", path.display());
            }
            Ok((inputs, raw))
        }
        _ => bail!("give exactly one of --construct, --graph6 or --file"),
    }
}

pub fn check(
    inputs: Vec<Input>,
    input_bytes: Vec<u8>,
    len: usize,
    expect: Option<bool>,
) -> Result<Report> {
    if len == 0 {
        bail!("--len must be at least 1");
    }
    let mut report = Report::new(
        "check",
        json!({ "len": len, "expect": expect.map(verdict) }),
    );
    report.input = input_bytes;
    let mut results = Vec::new();
    for Input { label, graph } in inputs {
        let witness = find_equal_degree_path(&graph, len)?;
        let present = witness.is_some();
        report.line(format!(
            "{label}: order {}, {} edges, equal-degree {len}-path {}",
            graph.order(),
            graph.edge_count(),
            verdict(present)
        ));
        if let Some(w) = &witness {
            report.line(format!(
                "  endpoints {} and {} (degree {}), path {:?}",
                w.endpoints.0, w.endpoints.1, w.shared_degree, w.path
            ));
        }
        if let Some(e) = expect {
            report.expect(
                present == e,
                format!("{label}: expected {}, got {}", verdict(e), verdict(present)),
            );
        }
        results.push(json!({
            "input": label,
            "order": graph.order(),
            "edges": graph.edge_count(),
            "verdict": verdict(present),
            "witness": witness,
        }));
    }
    report.results = Value::Array(results);
    Ok(report)
}

pub fn verdict(present: bool) -> &'static str {
    if present {
        "present"
    } else {
        "absent"
    }
}

pub fn construct(spec: &str, len: Option<usize>) -> Result<Report> {
    let spec: ConstructionSpec = spec.parse()?;
    let g = spec.build()?;
    let mut report = Report::new("construct", json!({ "spec": spec.to_string(), "len": len }));
    let graph6 = to_graph6(&g).ok();
    let profile = g.degree_profile();
    let triangles = triangle_profile(&g);
    report.line(format!(
        "{spec}: order {}, {} edges",
        g.order(),
        g.edge_count()
    ));
    if let Some(text) = &graph6 {
        report.line(format!("graph6 {text}"));
    }
    report.line(format!("degrees (descending) {:?}", profile.sorted_desc()));
    report.line(format!(
        "triangles {}, book {}",
        triangles.triangles, triangles.book
    ));
    let mut results = json!({
        "spec": spec.to_string(),
        "order": g.order(),
        "edges": g.edge_count(),
        "formula_edges": spec.formula_edge_count(),
        "graph6": graph6,
        "degree_profile": profile,
        "triangles": triangles,
    });
    report.expect(
        g.edge_count() == spec.formula_edge_count(),
        "edge count differs from the family formula",
    );
    if let Some(len) = len {
        let witness = find_equal_degree_path(&g, len)?;
        report.line(format!(
            "equal-degree {len}-path {}",
            verdict(witness.is_some())
        ));
        results["verdict"] = json!(verdict(witness.is_some()));
        results["witness"] = json!(witness);
    }
    if g.order() % 2 == 0 && g.order() > 0 {
        let n = g.order() / 2;
        if g.edge_count() + 1 >= n * n {
            let class = eqdeg_core::triangles::mantel_classify(&g)?;
            report.line(format!(
                "triangle-free classification {}",
                mantel_label(&class)
            ));
            results["mantel_class"] = json!(class);
        }
    }
    report.results = results;
    Ok(report)
}

fn mantel_label(c: &MantelClass) -> String {
    match c {
        MantelClass::UnbalancedBipartite => "K_{n-1,n+1}".into(),
        MantelClass::BalancedMinusEdge => "K_{n,n} minus an edge".into(),
        MantelClass::Balanced => "K_{n,n}".into(),
        MantelClass::HasTriangle(t) => format!("has triangle {t:?}"),
        MantelClass::Unrecognized => "unrecognized".into(),
    }
}

pub fn extremal(len: usize, order: usize, cfg: &SearchConfig) -> Result<Report> {
    let mut report = Report::new(
        "extremal",
        json!({ "len": len, "order": order, "mode": cfg.mode, "strategy": cfg.strategy }),
    );
    let r = compute_p(len, order, cfg)?;
    report.text = extremal_table(std::slice::from_ref(&r));
    for w in &r.witnesses {
        report.line(format!("  witness {w}"));
    }
    for c in &r.constructions {
        report.line(format!("  construction {c}"));
    }
    if r.stats.from_cache {
        report.line("  (from cache)");
    }
    report.results = serde_json::to_value(&r)?;
    report.rows.push(r);
    Ok(report)
}

pub fn table(lens: &[usize], orders: &[usize], cfg: &SearchConfig) -> Result<Report> {
    let mut report = Report::new(
        "table",
        json!({ "lens": lens, "orders": orders, "mode": cfg.mode, "strategy": cfg.strategy }),
    );
    for &n in orders {
        for &ell in lens {
            if cfg.mode == Mode::ConstructionsOnly && n < 2 {
                continue;
            }
            report.rows.push(compute_p(ell, n, cfg)?);
        }
    }
    report.text = extremal_table(&report.rows);
    report.results = serde_json::to_value(&report.rows)?;
    Ok(report)
}

/// Parses `3`, `3,5,7` or `3..8` (inclusive).
pub fn parse_list(text: &str) -> Result<Vec<usize>> {
    if let Some((a, b)) = text.split_once("..") {
        let (a, b): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
        if a > b {
            bail!("empty range {text}");
        }
        return Ok((a..=b).collect());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .with_context(|| format!("bad number {s:?}"))
        })
        .collect()
}
