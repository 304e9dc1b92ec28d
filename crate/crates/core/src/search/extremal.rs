//! Exact values of p_ℓ(n): the most edges an n-vertex graph can have
//! without two equal-degree vertices joined by a path of length exactly ℓ.
//!
//! The property is not monotone under edge addition, so nothing is pruned
//! by sub/supergraph relations: every class is enumerated and tested.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::enumerate::fold_classes;
use super::{cache, Mode, SearchConfig};
use crate::canon::{canonical_form, CanonicalForm};
use crate::constructions::ConstructionSpec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6, MAX_ORDER};
use crate::paths::find_equal_degree_path;

/// Outcome of an extremal computation.
///
/// `witnesses` holds graph6 strings of the canonical forms of every
/// extremal class (exhaustive mode) or of the best verified constructions
/// (constructions mode), sorted by canonical form. Constructions above
/// graph6's order limit are reported only through `constructions`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtremalResult {
    pub ell: usize,
    pub n: usize,
    pub value: usize,
    pub exact: bool,
    /// ℓ ≥ n: no path of that length fits, so K_n qualifies vacuously.
    pub degenerate: bool,
    pub witnesses: Vec<String>,
    pub classes_enumerated: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constructions: Vec<String>,
    #[serde(skip)]
    pub stats: RunStats,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    pub wall_ms: u128,
    pub workers: usize,
    pub from_cache: bool,
}

impl ExtremalResult {
    /// Witness graphs decoded from their graph6 strings.
    pub fn witness_graphs(&self) -> Result<Vec<Graph>> {
        self.witnesses
            .iter()
            .map(|w| from_graph6(w.as_bytes()))
            .collect()
    }

    /// JSON of the result payload; excludes timing, so equal computations
    /// give byte-identical text.
    pub fn payload_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serialises")
    }
}

fn satisfies(g: &Graph, ell: usize) -> bool {
    find_equal_degree_path(g, ell).expect("ell >= 1").is_none()
}

fn degenerate(ell: usize, n: usize) -> Result<ExtremalResult> {
    let witnesses = if n <= MAX_ORDER {
        vec![to_graph6(&Graph::complete(n))?]
    } else {
        Vec::new()
    };
    Ok(ExtremalResult {
        ell,
        n,
        value: n * n.saturating_sub(1) / 2,
        exact: true,
        degenerate: true,
        witnesses,
        classes_enumerated: 0,
        constructions: Vec::new(),
        stats: RunStats::default(),
    })
}

/// Computes p_ℓ(n). Exhaustive mode enumerates every class on `n` vertices;
/// constructions mode returns [`lower_bound_from_constructions`].
pub fn compute_p(ell: usize, n: usize, cfg: &SearchConfig) -> Result<ExtremalResult> {
    if ell == 0 || n == 0 {
        return Err(Error::Input(format!(
            "need ell >= 1 and n >= 1, got ell={ell}, n={n}"
        )));
    }
    cfg.validate()?;
    let start = Instant::now();
    if ell >= n {
        let mut r = degenerate(ell, n)?;
        r.stats = RunStats {
            wall_ms: start.elapsed().as_millis(),
            workers: cfg.workers,
            from_cache: false,
        };
        return Ok(r);
    }
    if cfg.mode == Mode::ConstructionsOnly {
        return lower_bound_from_constructions(ell, n);
    }
    cfg.check_order(n)?;
    if let Some(dir) = &cfg.cache_dir {
        if let Some(mut r) = cache::load(dir, ell, n) {
            r.stats = RunStats {
                wall_ms: start.elapsed().as_millis(),
                workers: cfg.workers,
                from_cache: true,
            };
            return Ok(r);
        }
    }

    struct Best {
        value: Option<usize>,
        forms: Vec<CanonicalForm>,
    }
    let (best, classes) = fold_classes(
        n,
        cfg,
        || Best {
            value: None,
            forms: Vec::new(),
        },
        |best, form| {
            let e = form.edge_count();
            if best.value.is_some_and(|v| e < v) || !satisfies(&form.to_graph(), ell) {
                return;
            }
            if best.value != Some(e) {
                best.value = Some(e);
                best.forms.clear();
            }
            best.forms.push(form.clone());
        },
        |a, b| match a.value.cmp(&b.value) {
            std::cmp::Ordering::Less => b,
            std::cmp::Ordering::Greater => a,
            std::cmp::Ordering::Equal => {
                let mut forms = a.forms;
                forms.extend(b.forms);
                Best {
                    value: a.value,
                    forms,
                }
            }
        },
    )?;
    let mut forms = best.forms;
    forms.sort_unstable();
    let witnesses = forms
        .iter()
        .map(|f| to_graph6(&f.to_graph()))
        .collect::<Result<Vec<_>>>()?;
    let result = ExtremalResult {
        ell,
        n,
        // The empty graph always qualifies when ℓ < n, so a value exists.
        value: best.value.expect("the empty graph qualifies"),
        exact: true,
        degenerate: false,
        witnesses,
        classes_enumerated: classes,
        constructions: Vec::new(),
        stats: RunStats {
            wall_ms: start.elapsed().as_millis(),
            workers: cfg.workers,
            from_cache: false,
        },
    };
    if let Some(dir) = &cfg.cache_dir {
        cache::store(dir, &result)?;
    }
    Ok(result)
}

/// Every named family that has exactly `n` vertices.
fn candidate_constructions(n: usize) -> Vec<ConstructionSpec> {
    use ConstructionSpec::*;
    let mut out: Vec<ConstructionSpec> = (1..=n / 2)
        .map(|a| CompleteBipartite { a, b: n - a })
        .collect();
    if n.is_multiple_of(2) {
        let h = n / 2;
        out.push(HalfGraph { n: h });
        if h.is_multiple_of(2) {
            out.push(ModifiedHalfGraph { n: h });
        }
        if h >= 2 {
            out.extend([KnnMinus { n: h }, TightTriangleA { n: h }]);
        }
        if h >= 3 {
            out.push(TightTriangleB { n: h });
        }
    }
    let m = triangular_root(n);
    if m * (m + 1) / 2 == n {
        out.push(CliqueUnionComplement { m });
    }
    out
}

/// Largest `m` with `m(m+1)/2 <= n`.
fn triangular_root(n: usize) -> usize {
    let mut m = 0;
    while (m + 1) * (m + 2) / 2 <= n {
        m += 1;
    }
    m
}

/// Best lower bound on p_ℓ(n) among the named families, each verified with
/// the path checker rather than trusted.
pub fn lower_bound_from_constructions(ell: usize, n: usize) -> Result<ExtremalResult> {
    if ell == 0 || n < 2 {
        return Err(Error::Input(format!(
            "need ell >= 1 and n >= 2, got ell={ell}, n={n}"
        )));
    }
    let start = Instant::now();
    if ell >= n {
        return degenerate(ell, n);
    }
    let mut value = 0;
    let mut best: Vec<(ConstructionSpec, Graph)> = Vec::new();
    for spec in candidate_constructions(n) {
        let g = spec.build()?;
        let e = g.edge_count();
        if e < value || !satisfies(&g, ell) {
            continue;
        }
        if e > value {
            value = e;
            best.clear();
        }
        best.push((spec, g));
    }
    let (witnesses, constructions) = if best.is_empty() {
        // Nothing beat the edgeless graph, which has no paths at all.
        let w = if n <= MAX_ORDER {
            vec![to_graph6(&Graph::empty(n))?]
        } else {
            Vec::new()
        };
        (w, Vec::new())
    } else if n <= MAX_ORDER {
        let mut forms: Vec<(CanonicalForm, ConstructionSpec)> =
            best.iter().map(|(s, g)| (canonical_form(g), *s)).collect();
        forms.sort();
        let specs = forms.iter().map(|(_, s)| s.to_string()).collect();
        forms.dedup_by(|a, b| a.0 == b.0);
        let w = forms
            .iter()
            .map(|(f, _)| to_graph6(&f.to_graph()))
            .collect::<Result<Vec<_>>>()?;
        (w, specs)
    } else {
        (
            Vec::new(),
            best.iter().map(|(s, _)| s.to_string()).collect(),
        )
    };
    Ok(ExtremalResult {
        ell,
        n,
        value,
        exact: false,
        degenerate: false,
        witnesses,
        classes_enumerated: 0,
        constructions,
        stats: RunStats {
            wall_ms: start.elapsed().as_millis(),
            workers: 1,
            from_cache: false,
        },
    })
}

/// Closed-form upper bound on p_1(n), rounded down:
/// n(n − m − 1)/2 + m(m + 1)(m + 2)/12 with m the largest integer such that
/// m(m + 1)/2 ≤ n.
pub fn p1_upper_bound(n: usize) -> usize {
    let m = triangular_root(n) as i128;
    let n = n as i128;
    // m(m+1)(m+2)/6 is an integer, so the bound is (n(n-m-1) + that) / 2.
    let twice = n * (n - m - 1) + m * (m + 1) * (m + 2) / 6;
    (twice.div_euclid(2)).max(0) as usize
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CensusEntry {
    pub graph6: String,
    pub edges: usize,
    pub degrees: Vec<usize>,
    pub matches_expected: bool,
    /// Named construction isomorphic to this witness, if any.
    pub known_as: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UniquenessReport {
    pub ell: usize,
    pub n: usize,
    pub value: usize,
    pub expected: String,
    pub expected_edges: usize,
    pub expected_satisfies: bool,
    pub expected_is_witness: bool,
    /// The expected construction is the only extremal class.
    pub unique: bool,
    pub census: Vec<CensusEntry>,
}

/// Compares the exhaustive witness list for (ℓ, n) with a named construction.
pub fn verify_uniqueness(
    ell: usize,
    n: usize,
    expected: &ConstructionSpec,
    cfg: &SearchConfig,
) -> Result<UniquenessReport> {
    if expected.order() != n {
        return Err(Error::Input(format!(
            "{expected} has {} vertices, not {n}",
            expected.order()
        )));
    }
    let cfg = SearchConfig {
        mode: Mode::Exhaustive,
        ..cfg.clone()
    };
    cfg.check_order(n)?;
    let result = compute_p(ell, n, &cfg)?;
    let g = expected.build()?;
    let expected_form = canonical_form(&g);
    let named: Vec<(CanonicalForm, ConstructionSpec)> = candidate_constructions(n)
        .into_iter()
        .map(|s| s.build().map(|h| (canonical_form(&h), s)))
        .collect::<Result<_>>()?;
    let mut census = Vec::new();
    for (w, graph) in result.witnesses.iter().zip(result.witness_graphs()?) {
        let form = canonical_form(&graph);
        census.push(CensusEntry {
            graph6: w.clone(),
            edges: graph.edge_count(),
            degrees: graph.degree_profile().sorted_desc(),
            matches_expected: form == expected_form,
            known_as: named
                .iter()
                .find(|(f, _)| *f == form)
                .map(|(_, s)| s.to_string()),
        });
    }
    let expected_is_witness = census.iter().any(|c| c.matches_expected);
    Ok(UniquenessReport {
        ell,
        n,
        value: result.value,
        expected: expected.to_string(),
        expected_edges: g.edge_count(),
        expected_satisfies: ell >= n || satisfies(&g, ell),
        expected_is_witness,
        unique: expected_is_witness && census.len() == 1,
        census,
    })
}
