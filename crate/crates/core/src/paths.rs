//! Equal-degree endpoints joined by a simple path of an exact length.
//!
//! A path of length `len` has `len` edges and `len + 1` distinct vertices;
//! its endpoints are distinct. Shorter or longer connections do not count.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Ones};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Two distinct vertices of equal degree and a simple path joining them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub endpoints: (usize, usize),
    /// Vertex sequence from the first endpoint to the second.
    pub path: Vec<usize>,
    pub shared_degree: usize,
}

impl PathWitness {
    pub fn len(&self) -> usize {
        self.path.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.path.len() < 2
    }

    /// Re-checks the witness against `g` without trusting how it was found.
    pub fn is_valid_for(&self, g: &Graph, len: usize) -> bool {
        let (u, w) = self.endpoints;
        let n = g.order();
        if self.path.len() != len + 1 || u == w || u >= n || w >= n {
            return false;
        }
        if self.path.first() != Some(&u) || self.path.last() != Some(&w) {
            return false;
        }
        if self.path.iter().any(|&x| x >= n) {
            return false;
        }
        let mut seen = self.path.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.path.len()
            && self.path.windows(2).all(|p| g.has_edge(p[0], p[1]))
            && g.degree(u) == self.shared_degree
            && g.degree(w) == self.shared_degree
    }
}

/// All pairs `(u, w)`, `u < w`, of equal degree, in lexicographic order.
pub fn equal_degree_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let deg = g.degrees();
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            if deg[u] == deg[w] {
                out.push((u, w));
            }
        }
    }
    out
}

fn check_query(g: &Graph, u: usize, w: usize, len: usize) -> Result<()> {
    let n = g.order();
    if u >= n || w >= n {
        return Err(Error::Input(format!(
            "vertex pair ({u}, {w}) outside 0..{n}"
        )));
    }
    if u == w {
        return Err(Error::Input(format!(
            "path endpoints must differ, got {u} twice"
        )));
    }
    if len == 0 || len >= n {
        return Err(Error::Input(format!(
            "path length {len} outside 1..={}",
            n - 1
        )));
    }
    Ok(())
}

/// Whether a simple path with exactly `len` edges joins `u` and `w`.
pub fn path_exists_exact(g: &Graph, u: usize, w: usize, len: usize) -> Result<bool> {
    Ok(find_path_exact(g, u, w, len)?.is_some())
}

/// The lexicographically smallest simple `u`–`w` path with exactly `len` edges.
pub fn find_path_exact(g: &Graph, u: usize, w: usize, len: usize) -> Result<Option<Vec<usize>>> {
    check_query(g, u, w, len)?;
    Ok(PathSearch::new(g, w, len).find_from(u))
}

/// Depth-limited DFS towards a fixed target. `walks[r]` holds the vertices
/// with a walk of exactly `r` edges to the target; a simple path can only
/// continue through such vertices, which in particular cuts every branch
/// with the wrong parity in a bipartite graph.
struct PathSearch<'g> {
    g: &'g Graph,
    target: usize,
    len: usize,
    walks: Vec<Vec<u64>>,
    visited: Vec<u64>,
    path: Vec<usize>,
}

impl<'g> PathSearch<'g> {
    fn new(g: &'g Graph, target: usize, len: usize) -> Self {
        let words = g.row_words();
        let mut walks = Vec::with_capacity(len);
        let mut cur = vec![0u64; words];
        bits::set(&mut cur, target);
        walks.push(cur);
        for r in 1..len {
            let mut next = vec![0u64; words];
            for y in Ones::new(&walks[r - 1]) {
                for (a, b) in next.iter_mut().zip(g.row(y)) {
                    *a |= b;
                }
            }
            walks.push(next);
        }
        PathSearch {
            g,
            target,
            len,
            walks,
            visited: vec![0u64; words],
            path: Vec::with_capacity(len + 1),
        }
    }

    fn find_from(&mut self, start: usize) -> Option<Vec<usize>> {
        self.visited.iter_mut().for_each(|w| *w = 0);
        bits::set(&mut self.visited, start);
        bits::set(&mut self.visited, self.target);
        self.path.clear();
        self.path.push(start);
        if self.extend(start, self.len) {
            self.path.push(self.target);
            Some(self.path.clone())
        } else {
            None
        }
    }

    fn extend(&mut self, x: usize, remaining: usize) -> bool {
        if remaining == 1 {
            return self.g.has_edge(x, self.target);
        }
        let reach = &self.walks[remaining - 1];
        let cand: Vec<u64> = (self.g.row(x).iter().zip(reach).zip(&self.visited))
            .map(|((r, w), v)| r & w & !v)
            .collect();
        for y in Ones::new(&cand) {
            bits::set(&mut self.visited, y);
            self.path.push(y);
            if self.extend(y, remaining - 1) {
                return true;
            }
            self.path.pop();
            bits::clear(&mut self.visited, y);
        }
        false
    }
}

/// First equal-degree pair (lexicographic) joined by a simple path of
/// exactly `len` edges, with the smallest such path. `len >= order` yields
/// `None`, since no path that long fits in the graph.
pub fn has_equal_degree_path(g: &Graph, len: usize) -> Result<Option<PathWitness>> {
    if len == 0 {
        return Err(Error::Input("path length must be at least 1".into()));
    }
    if len >= g.order() {
        return Ok(None);
    }
    let deg = g.degrees();
    let mut current: Option<(usize, PathSearch)> = None;
    for (u, w) in equal_degree_pairs(g) {
        if current.as_ref().map(|(t, _)| *t) != Some(w) {
            current = Some((w, PathSearch::new(g, w, len)));
        }
        let search = &mut current.as_mut().expect("just set").1;
        if let Some(path) = search.find_from(u) {
            return Ok(Some(PathWitness {
                endpoints: (u, w),
                path,
                shared_degree: deg[u],
            }));
        }
    }
    Ok(None)
}

/// Length-three specialisation of [`has_equal_degree_path`]; returns the
/// same witness.
///
/// A pair `(u, w)` is joined by a path `u a b w` iff some `a` in
/// `N(u) - {w}` has a common neighbour with `w` other than `u`. For each `w`
/// the vertices with at least one (resp. two) common neighbours with `w` are
/// collected once as bitsets, so each pair costs one row intersection.
pub fn has_equal_degree_p3(g: &Graph) -> Option<PathWitness> {
    let n = g.order();
    if n < 4 {
        return None;
    }
    let words = g.row_words();
    let deg = g.degrees();
    // Per vertex: [at least one common neighbour | at least two], built lazily.
    let mut shared = vec![0u64; n * 2 * words];
    let mut built = vec![false; n];
    let mut cand = vec![0u64; words];
    for u in 0..n {
        for w in u + 1..n {
            if deg[u] != deg[w] || deg[u] == 0 {
                continue;
            }
            let block = &mut shared[w * 2 * words..(w + 1) * 2 * words];
            if !built[w] {
                let (once, twice) = block.split_at_mut(words);
                for b in g.neighbors(w) {
                    for ((o, t), r) in once.iter_mut().zip(twice.iter_mut()).zip(g.row(b)) {
                        *t |= *o & r;
                        *o |= r;
                    }
                }
                built[w] = true;
            }
            let reach = if g.has_edge(u, w) {
                &block[words..]
            } else {
                &block[..words]
            };
            for ((c, r), s) in cand.iter_mut().zip(g.row(u)).zip(reach) {
                *c = r & s;
            }
            bits::clear(&mut cand, w);
            let Some(a) = Ones::new(&cand).next() else {
                continue;
            };
            let b = Ones::new(g.row(a))
                .find(|&b| b != u && g.has_edge(b, w))
                .expect("a has a common neighbour with w besides u");
            return Some(PathWitness {
                endpoints: (u, w),
                path: vec![u, a, b, w],
                shared_degree: deg[u],
            });
        }
    }
    None
}

/// Dispatches to the length-three fast path when it applies.
pub fn find_equal_degree_path(g: &Graph, len: usize) -> Result<Option<PathWitness>> {
    if len == 3 {
        Ok(has_equal_degree_p3(g))
    } else {
        has_equal_degree_path(g, len)
    }
}
