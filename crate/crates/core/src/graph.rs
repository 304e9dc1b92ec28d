//! Immutable simple undirected graphs stored as adjacency bitset rows.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bits::{self, Ones};
use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..order`.
///
/// Row `i` is a bitset over `0..order` holding the neighbours of `i`. Rows
/// are `ceil(order / 64)` words wide, so the same layout serves ten-vertex
/// enumeration graphs and thousand-vertex constructions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        let words = bits::words_for(order);
        Graph {
            order,
            words,
            rows: vec![0; order * words],
        }
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Graph::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                g.link(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse to one edge.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::EndpointOutOfRange { u, v, order });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Erdős–Rényi sample: each pair is an edge independently with probability `p`.
    pub fn random<R: Rng + ?Sized>(order: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Graph::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                if rng.gen_bool(p) {
                    g.link(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order && v < self.order);
        let w = self.words;
        bits::set(&mut self.rows[u * w..(u + 1) * w], v);
        bits::set(&mut self.rows[v * w..(v + 1) * w], u);
    }

    pub(crate) fn unlink(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::clear(&mut self.rows[u * w..(u + 1) * w], v);
        bits::clear(&mut self.rows[v * w..(v + 1) * w], u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of 64-bit words in each adjacency row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `v` as a word slice; bit `j` is set iff `v ~ j`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        bits::count(&self.rows) / 2
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        Ones::new(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Number of common neighbours of `u` and `v`.
    #[inline]
    pub fn codegree(&self, u: usize, v: usize) -> usize {
        bits::count_and(self.row(u), self.row(v))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.order);
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.has_edge(u, v) {
                    g.link(u, v);
                }
            }
        }
        g
    }

    /// Copy of the graph with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    /// Copy of the graph with the edge `{u, v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.order || v >= self.order {
            return Err(Error::EndpointOutOfRange {
                u,
                v,
                order: self.order,
            });
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        Ok(())
    }

    /// Appends a new vertex `order` adjacent to every vertex of `neighbors`
    /// (a bitmask over the current vertices, which must number at most 64).
    pub fn extended(&self, neighbors: u64) -> Graph {
        assert!(self.order < 64, "extended() takes a 64-bit neighbour mask");
        let n = self.order;
        let mut g = Graph::empty(n + 1);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for u in Ones::new(&[neighbors]) {
            g.link(u, n);
        }
        g
    }

    /// The graph with vertex `v` removed; vertices above `v` shift down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        assert!(v < self.order);
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let mut g = Graph::empty(self.order - 1);
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.link(shift(a), shift(b));
            }
        }
        g
    }

    /// Relabels the graph: vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut g = Graph::empty(self.order);
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        g
    }

    /// True if every edge of `self` is an edge of `host` under the identity
    /// labelling (`self` may have fewer vertices).
    pub fn is_subgraph_of(&self, host: &Graph) -> bool {
        self.order <= host.order && self.edges().all(|(u, v)| host.has_edge(u, v))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::new(self.degrees())
    }

    /// Checks symmetry, irreflexivity and that no bits are set past `order`.
    pub fn is_well_formed(&self) -> bool {
        (0..self.order).all(|u| {
            !self.has_edge(u, u)
                && self
                    .neighbors(u)
                    .all(|v| v < self.order && self.has_edge(v, u))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Degree multiset of a graph plus the scalars the extremal arguments track.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    /// `degrees[v]` is the degree of vertex `v`.
    pub degrees: Vec<usize>,
    /// Maximum degree; `None` for the graph with no vertices.
    pub max_degree: Option<usize>,
    /// Largest degree shared by at least two vertices.
    pub beta: Option<usize>,
    pub distinct_count: usize,
}

impl DegreeProfile {
    pub fn new(degrees: Vec<usize>) -> Self {
        let mut sorted = degrees.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let max_degree = sorted.first().copied();
        let beta = sorted.windows(2).find(|w| w[0] == w[1]).map(|w| w[0]);
        let mut distinct = sorted;
        distinct.dedup();
        DegreeProfile {
            degrees,
            max_degree,
            beta,
            distinct_count: distinct.len(),
        }
    }

    /// Degree multiset in non-increasing order.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23() -> Graph {
        Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn from_edges_basic_cases() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(Graph::from_edges(4, &[]).unwrap().edge_count(), 0);
        assert_eq!(k23().degree_profile().sorted_desc(), vec![3, 3, 2, 2, 2]);
    }

    #[test]
    fn from_edges_collapses_duplicates() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn from_edges_rejects_bad_pairs() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::EndpointOutOfRange {
                u: 0,
                v: 3,
                order: 3
            })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::Loop(1)));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        assert_eq!(Graph::empty(4).complement(), Graph::complete(4));
        // Cliques of sizes 1, 2, 3 on 6 vertices.
        let cliques = Graph::from_edges(6, &[(1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert_eq!(cliques.edge_count(), 4);
        assert_eq!(cliques.complement().edge_count(), 11);
    }

    #[test]
    fn degree_profile_examples() {
        let p = k23().degree_profile();
        assert_eq!(
            (p.max_degree, p.beta, p.distinct_count),
            (Some(3), Some(3), 2)
        );
        let p = Graph::complete(4).degree_profile();
        assert_eq!(
            (p.max_degree, p.beta, p.distinct_count),
            (Some(3), Some(3), 1)
        );
        let p = Graph::empty(0).degree_profile();
        assert_eq!((p.max_degree, p.beta, p.distinct_count), (None, None, 0));
        let p = Graph::empty(1).degree_profile();
        assert_eq!((p.max_degree, p.beta, p.distinct_count), (Some(0), None, 1));
    }

    #[test]
    fn wide_rows() {
        let mut g = Graph::empty(200);
        g.link(3, 150);
        g.link(199, 0);
        assert!(g.is_well_formed());
        assert_eq!(g.row_words(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 199), (3, 150)]);
        assert_eq!(g.complement().edge_count(), 200 * 199 / 2 - 2);
    }

    #[test]
    fn vertex_surgery() {
        let g = k23();
        let h = g.without_vertex(0);
        assert_eq!(h.order(), 4);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
        let back = h.extended(0b0111);
        assert_eq!(back.edge_count(), 6);
        assert!(back.is_well_formed());
        assert!(Graph::empty(2).is_subgraph_of(&g));
        assert!(!Graph::complete(3).is_subgraph_of(&g));
    }
}
