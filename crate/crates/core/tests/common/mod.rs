//! Brute-force oracles shared by the integration tests. None of them use
//! the library's algorithms beyond the plain `Graph` accessors.
#![allow(dead_code)]

use std::collections::HashSet;

use eqdeg_core::Graph;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    for (k, (i, j)) in pairs.enumerate() {
        idx[i][j] = k;
        idx[j][i] = k;
    }
    idx
}

pub fn edge_mask(g: &Graph) -> u64 {
    let idx = pair_index(g.order());
    g.edges().fold(0, |m, (u, v)| m | 1 << idx[u][v])
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Smallest edge mask over all relabelings: a slow but obviously correct
/// class invariant.
pub fn brute_canonical_mask(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.order();
    let idx = pair_index(n);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |m, &(u, v)| m | 1 << idx[p[u]][p[v]])
        })
        .min()
        .unwrap_or(0)
}

/// Number of isomorphism classes of labelled graphs on `n` vertices.
pub fn labeled_orbit_count(n: usize) -> usize {
    let perms = permutations(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let mut seen = HashSet::new();
    for mask in 0..1u64 << pairs {
        seen.insert(brute_canonical_mask(&graph_from_mask(n, mask), &perms));
    }
    seen.len()
}

/// All classes on `n` vertices as brute canonical masks.
pub fn labeled_classes(n: usize) -> HashSet<u64> {
    let perms = permutations(n);
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs)
        .map(|mask| brute_canonical_mask(&graph_from_mask(n, mask), &perms))
        .collect()
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && permutations(g.order())
            .iter()
            .any(|p| g.edges().all(|(u, v)| h.has_edge(p[u], p[v])))
}

pub fn naive_triangle_count(g: &Graph) -> u64 {
    let n = g.order();
    let mut t = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    t += 1;
                }
            }
        }
    }
    t
}

/// (t_0..t_3, M) by direct enumeration of triangles and outside vertices.
pub fn naive_profile(g: &Graph) -> ([u64; 4], u64) {
    let n = g.order();
    let mut t = [0u64; 4];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
                    continue;
                }
                for v in (0..n).filter(|&v| v != a && v != b && v != c) {
                    let k = [a, b, c].iter().filter(|&&x| g.has_edge(v, x)).count();
                    t[k] += 1;
                }
            }
        }
    }
    let mut m = 0;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                continue;
            }
            let others = (0..n).filter(|&x| x != u && x != v);
            let common = others
                .clone()
                .filter(|&x| g.has_edge(u, x) && g.has_edge(v, x))
                .count();
            let neither = others
                .filter(|&x| !g.has_edge(u, x) && !g.has_edge(v, x))
                .count();
            m += (common * neither) as u64;
        }
    }
    (t, m)
}

/// Whether some simple path with exactly `len` edges joins two distinct
/// vertices of equal degree, by unpruned depth-first search.
pub fn naive_equal_degree_path(g: &Graph, len: usize) -> bool {
    fn walk(g: &Graph, path: &mut Vec<usize>, len: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == len + 1 {
            return g.degree(path[0]) == g.degree(last);
        }
        for x in 0..g.order() {
            if g.has_edge(last, x) && !path.contains(&x) {
                path.push(x);
                if walk(g, path, len) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..g.order()).any(|s| walk(g, &mut vec![s], len))
}

pub fn bipartite_oracle(a: usize, b: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..a)
        .flat_map(|i| (a..a + b).map(move |j| (i, j)))
        .collect();
    Graph::from_edges(a + b, &edges).unwrap()
}

/// Half graph written out from its definition: u_i ~ v_j iff i <= j.
pub fn half_graph_oracle(k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=k {
        for j in i..=k {
            edges.push((i - 1, k + j - 1));
        }
    }
    Graph::from_edges(2 * k, &edges).unwrap()
}
