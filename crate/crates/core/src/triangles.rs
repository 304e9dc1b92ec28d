//! Triangle statistics: counts, book number, the (vertex, triangle)
//! incidence profile, and the triangle-free classification at n^2 - 1 edges.

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleProfile {
    pub triangles: u64,
    /// Largest number of triangles sharing one edge.
    pub book: usize,
    /// `t[i]` counts pairs (v, T) with v outside triangle T and adjacent to
    /// exactly `i` of its vertices.
    pub t: [u64; 4],
    /// Sum over edges uv of |N(u) ∩ N(v)| times the number of vertices
    /// adjacent to neither u nor v (u and v excluded).
    pub m: u64,
}

impl TriangleProfile {
    /// Both counting identities: Σ t_i = triangles · (order − 3) and M = t_1 + 3 t_0.
    pub fn identities_hold(&self, order: usize) -> bool {
        let outside = order.saturating_sub(3) as u64;
        self.t.iter().sum::<u64>() == self.triangles * outside
            && self.m == self.t[1] + 3 * self.t[0]
    }
}

/// Triangles counted through per-edge common neighbourhoods (each triangle
/// is seen from its three edges).
pub fn triangle_count(g: &Graph) -> u64 {
    let per_edge: u64 = g.edges().map(|(u, v)| g.codegree(u, v) as u64).sum();
    per_edge / 3
}

pub fn book_size(g: &Graph) -> usize {
    g.edges().map(|(u, v)| g.codegree(u, v)).max().unwrap_or(0)
}

/// Lexicographically first triangle, if any.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    g.edges().find_map(|(a, b)| {
        bits::first_common(g.row(a), g.row(b)).map(|c| {
            let mut t = [a, b, c];
            t.sort_unstable();
            t
        })
    })
}

/// Triangles `[a, b, c]` with `a < b < c`, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        for c in g.neighbors(b).filter(|&c| c > b) {
            if g.has_edge(a, c) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

pub fn triangle_profile(g: &Graph) -> TriangleProfile {
    let n = g.order();
    if n < 3 {
        return TriangleProfile::default();
    }
    let words = g.row_words();
    let mut profile = TriangleProfile {
        book: book_size(g),
        ..Default::default()
    };
    let mut any = vec![0u64; words];
    let mut two = vec![0u64; words];
    let mut all = vec![0u64; words];
    for [a, b, c] in triangles(g) {
        profile.triangles += 1;
        let (ra, rb, rc) = (g.row(a), g.row(b), g.row(c));
        for i in 0..words {
            any[i] = ra[i] | rb[i] | rc[i];
            two[i] = (ra[i] & rb[i]) | (ra[i] & rc[i]) | (rb[i] & rc[i]);
            all[i] = ra[i] & rb[i] & rc[i];
        }
        // Each triangle vertex is adjacent to the other two, so it sits in
        // `any` and `two` but never in `all`.
        let ge1 = bits::count(&any) as u64 - 3;
        let ge2 = bits::count(&two) as u64 - 3;
        let eq3 = bits::count(&all) as u64;
        profile.t[3] += eq3;
        profile.t[2] += ge2 - eq3;
        profile.t[1] += ge1 - ge2;
        profile.t[0] += (n as u64 - 3) - ge1;
    }
    let mut union = vec![0u64; words];
    for (u, v) in g.edges() {
        for (x, (p, q)) in union.iter_mut().zip(g.row(u).iter().zip(g.row(v))) {
            *x = p | q;
        }
        let outside = n - bits::count(&union);
        profile.m += (g.codegree(u, v) * outside) as u64;
    }
    profile
}

/// Outcome of classifying a 2n-vertex graph with at least n^2 − 1 edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MantelClass {
    /// K_{n−1,n+1}
    UnbalancedBipartite,
    /// K_{n,n} minus one edge
    BalancedMinusEdge,
    /// K_{n,n}
    Balanced,
    HasTriangle([usize; 3]),
    /// Triangle-free but none of the three graphs above; never expected.
    Unrecognized,
}

pub fn mantel_classify(g: &Graph) -> Result<MantelClass> {
    let order = g.order();
    if order == 0 || order % 2 == 1 {
        return Err(Error::Precondition(format!(
            "order must be even and positive, got {order}"
        )));
    }
    let n = order / 2;
    if g.edge_count() + 1 < n * n {
        return Err(Error::Precondition(format!(
            "need at least {} edges on {order} vertices, got {}",
            n * n - 1,
            g.edge_count()
        )));
    }
    if let Some(t) = find_triangle(g) {
        return Ok(MantelClass::HasTriangle(t));
    }
    let form = canonical_form(g);
    let balanced = bipartite(n, n);
    let mut minus = balanced.clone();
    minus.unlink(0, n);
    let candidates = [
        (bipartite(n - 1, n + 1), MantelClass::UnbalancedBipartite),
        (minus, MantelClass::BalancedMinusEdge),
        (balanced, MantelClass::Balanced),
    ];
    Ok(candidates
        .into_iter()
        .find(|(h, _)| h.edge_count() == g.edge_count() && canonical_form(h) == form)
        .map_or(MantelClass::Unrecognized, |(_, class)| class))
}

fn bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for i in 0..a {
        for j in a..a + b {
            g.link(i, j);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_bipartite, k_nn_minus, tight_triangle_a};

    #[test]
    fn counts_on_small_graphs() {
        assert_eq!(triangle_count(&Graph::complete(3)), 1);
        assert_eq!(triangle_count(&Graph::complete(4)), 4);
        assert_eq!(triangle_count(&complete_bipartite(2, 3).unwrap()), 0);
        assert_eq!(triangle_count(&tight_triangle_a(6).unwrap()), 4);
    }

    #[test]
    fn book_examples() {
        assert_eq!(book_size(&Graph::complete(4)), 2);
        assert_eq!(book_size(&Graph::complete(5)), 3);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(book_size(&c5), 0);
        assert_eq!(book_size(&Graph::empty(3)), 0);
    }

    #[test]
    fn profile_of_k4() {
        let p = triangle_profile(&Graph::complete(4));
        assert_eq!(p.triangles, 4);
        assert_eq!(p.t, [0, 0, 0, 4]);
        assert_eq!(p.m, 0);
        assert!(p.identities_hold(4));
    }

    #[test]
    fn profile_of_triangle_plus_isolated_vertex() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let p = triangle_profile(&g);
        assert_eq!(p.triangles, 1);
        assert_eq!(p.t, [1, 0, 0, 0]);
        assert_eq!(p.m, 3);
        assert_eq!(p.book, 1);
    }

    #[test]
    fn profile_below_order_three_is_zero() {
        assert_eq!(
            triangle_profile(&Graph::complete(2)),
            TriangleProfile::default()
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            mantel_classify(&complete_bipartite(3, 3).unwrap()).unwrap(),
            MantelClass::Balanced
        );
        assert_eq!(
            mantel_classify(&k_nn_minus(3).unwrap()).unwrap(),
            MantelClass::BalancedMinusEdge
        );
        assert_eq!(
            mantel_classify(&complete_bipartite(2, 4).unwrap()).unwrap(),
            MantelClass::UnbalancedBipartite
        );
        assert!(matches!(
            mantel_classify(&tight_triangle_a(4).unwrap()).unwrap(),
            MantelClass::HasTriangle(_)
        ));
    }

    #[test]
    fn classify_preconditions() {
        assert!(matches!(
            mantel_classify(&Graph::complete(3)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            mantel_classify(&Graph::empty(6)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            mantel_classify(&Graph::empty(0)),
            Err(Error::Precondition(_))
        ));
    }
}
