//! Named graph families with their edge counts.
//!
//! Numbering is fixed per family: bipartite parts are contiguous (first part
//! first), and half graphs list `u_1..u_n` as `0..n` followed by `v_1..v_n`
//! as `n..2n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// K_{a,b} on parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a + b == 0 {
        return Err(Error::Input(
            "complete_bipartite needs at least one vertex".into(),
        ));
    }
    let mut g = Graph::empty(a + b);
    for i in 0..a {
        for j in a..a + b {
            g.link(i, j);
        }
    }
    Ok(g)
}

/// Half graph H_n: `u_i ~ v_j` iff `i <= j`.
pub fn half_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Input("half_graph needs n >= 1".into()));
    }
    let mut g = Graph::empty(2 * n);
    for i in 0..n {
        for j in i..n {
            g.link(i, n + j);
        }
    }
    Ok(g)
}

/// H_n with the cross edges `u_{n/2} v_{n/2}` and `u_{n/2+1} v_{n/2+1}`
/// replaced by `u_{n/2} u_{n/2+1}` and `v_{n/2} v_{n/2+1}`.
pub fn modified_half_graph(n: usize) -> Result<Graph> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Input(format!(
            "modified_half_graph needs an even n >= 2, got {n}"
        )));
    }
    let mut g = half_graph(n)?;
    // 1-based u_{n/2} is vertex n/2 - 1.
    let (a, b) = (n / 2 - 1, n / 2);
    g.unlink(a, n + a);
    g.unlink(b, n + b);
    g.link(a, b);
    g.link(n + a, n + b);
    Ok(g)
}

/// Complement of the disjoint union of cliques of sizes `1, 2, ..., m`.
/// Clique `k` occupies the vertices `k(k-1)/2 .. k(k+1)/2`.
pub fn clique_union_complement(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::Input("clique_union_complement needs m >= 1".into()));
    }
    let n = m * (m + 1) / 2;
    let mut cliques = Graph::empty(n);
    for k in 1..=m {
        let start = k * (k - 1) / 2;
        for i in start..start + k {
            for j in i + 1..start + k {
                cliques.link(i, j);
            }
        }
    }
    Ok(cliques.complement())
}

/// K_{n,n} minus the edge `(0, n)`.
pub fn k_nn_minus(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Input(format!("k_nn_minus needs n >= 2, got {n}")));
    }
    let mut g = complete_bipartite(n, n)?;
    g.unlink(0, n);
    Ok(g)
}

/// K_{n-1,n+1} plus the edge `xy` inside the larger part, minus the first
/// other edge at `x`. Here `x = n - 1`, `y = n` and the removed edge is `(0, x)`.
pub fn tight_triangle_a(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Input(format!(
            "tight_triangle_a needs n >= 2, got {n}"
        )));
    }
    let mut g = complete_bipartite(n - 1, n + 1)?;
    let (x, y) = (n - 1, n);
    g.link(x, y);
    g.unlink(0, x);
    Ok(g)
}

/// K_{n,n} plus the edge `xy` inside the first part, minus the first two
/// other edges at `x`. Here `x = 0`, `y = 1` and the removed edges are
/// `(0, n)` and `(0, n + 1)`.
pub fn tight_triangle_b(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Input(format!(
            "tight_triangle_b needs n >= 3, got {n}"
        )));
    }
    let mut g = complete_bipartite(n, n)?;
    g.link(0, 1);
    g.unlink(0, n);
    g.unlink(0, n + 1);
    Ok(g)
}

/// A construction family together with its parameters.
///
/// The textual form is `family:p1,p2,...`, e.g. `complete_bipartite:3,4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum ConstructionSpec {
    CompleteBipartite { a: usize, b: usize },
    HalfGraph { n: usize },
    ModifiedHalfGraph { n: usize },
    CliqueUnionComplement { m: usize },
    KnnMinus { n: usize },
    TightTriangleA { n: usize },
    TightTriangleB { n: usize },
}

impl ConstructionSpec {
    pub const FAMILIES: [&'static str; 7] = [
        "complete_bipartite",
        "half_graph",
        "modified_half_graph",
        "clique_union_complement",
        "k_nn_minus",
        "tight_triangle_a",
        "tight_triangle_b",
    ];

    pub fn family(&self) -> &'static str {
        use ConstructionSpec::*;
        match self {
            CompleteBipartite { .. } => "complete_bipartite",
            HalfGraph { .. } => "half_graph",
            ModifiedHalfGraph { .. } => "modified_half_graph",
            CliqueUnionComplement { .. } => "clique_union_complement",
            KnnMinus { .. } => "k_nn_minus",
            TightTriangleA { .. } => "tight_triangle_a",
            TightTriangleB { .. } => "tight_triangle_b",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        use ConstructionSpec::*;
        match *self {
            CompleteBipartite { a, b } => vec![a, b],
            HalfGraph { n }
            | ModifiedHalfGraph { n }
            | KnnMinus { n }
            | TightTriangleA { n }
            | TightTriangleB { n } => {
                vec![n]
            }
            CliqueUnionComplement { m } => vec![m],
        }
    }

    pub fn build(&self) -> Result<Graph> {
        use ConstructionSpec::*;
        match *self {
            CompleteBipartite { a, b } => complete_bipartite(a, b),
            HalfGraph { n } => half_graph(n),
            ModifiedHalfGraph { n } => modified_half_graph(n),
            CliqueUnionComplement { m } => clique_union_complement(m),
            KnnMinus { n } => k_nn_minus(n),
            TightTriangleA { n } => tight_triangle_a(n),
            TightTriangleB { n } => tight_triangle_b(n),
        }
    }

    /// Vertex count of the built graph.
    pub fn order(&self) -> usize {
        use ConstructionSpec::*;
        match *self {
            CompleteBipartite { a, b } => a + b,
            HalfGraph { n }
            | ModifiedHalfGraph { n }
            | KnnMinus { n }
            | TightTriangleA { n }
            | TightTriangleB { n } => 2 * n,
            CliqueUnionComplement { m } => m * (m + 1) / 2,
        }
    }

    /// Edge count given by the family's closed form.
    pub fn formula_edge_count(&self) -> usize {
        use ConstructionSpec::*;
        match *self {
            CompleteBipartite { a, b } => a * b,
            HalfGraph { n } | ModifiedHalfGraph { n } => n * (n + 1) / 2,
            CliqueUnionComplement { m } => {
                let n = m * (m + 1) / 2;
                // n(n-m-1)/2 + m(m+1)(m+2)/12, kept in integers.
                (6 * n * (n - m - 1) + m * (m + 1) * (m + 2)) / 12
            }
            KnnMinus { n } | TightTriangleA { n } | TightTriangleB { n } => n * n - 1,
        }
    }

    fn validate(self, text: &str) -> Result<Self> {
        self.build().map(|_| self).map_err(|e| Error::Spec {
            spec: text.to_string(),
            reason: match e {
                Error::Input(r) => r,
                other => other.to_string(),
            },
        })
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        write!(f, "{}:{}", self.family(), params.join(","))
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |reason: String| Error::Spec {
            spec: text.to_string(),
            reason,
        };
        let (family, rest) = text
            .trim()
            .split_once(':')
            .ok_or_else(|| bad("expected `family:params`".into()))?;
        let params = rest
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| bad(format!("`{p}` is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        let one = |params: &[usize]| match params {
            [x] => Ok(*x),
            _ => Err(bad(format!(
                "{family} takes one parameter, got {}",
                params.len()
            ))),
        };
        use ConstructionSpec::*;
        let spec = match family {
            "complete_bipartite" => match params[..] {
                [a, b] => CompleteBipartite { a, b },
                _ => {
                    return Err(bad(format!(
                        "complete_bipartite takes two parameters, got {}",
                        params.len()
                    )))
                }
            },
            "half_graph" => HalfGraph { n: one(&params)? },
            "modified_half_graph" => ModifiedHalfGraph { n: one(&params)? },
            "clique_union_complement" => CliqueUnionComplement { m: one(&params)? },
            "k_nn_minus" => KnnMinus { n: one(&params)? },
            "tight_triangle_a" => TightTriangleA { n: one(&params)? },
            "tight_triangle_b" => TightTriangleB { n: one(&params)? },
            other => {
                return Err(bad(format!(
                    "unknown family `{other}` (expected one of {})",
                    Self::FAMILIES.join(", ")
                )))
            }
        };
        spec.validate(text)
    }
}

impl TryFrom<String> for ConstructionSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ConstructionSpec> for String {
    fn from(spec: ConstructionSpec) -> String {
        spec.to_string()
    }
}
