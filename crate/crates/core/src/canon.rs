//! Canonical labelling by individualisation and refinement.
//!
//! The root partition (optionally seeded from a vertex colouring) is refined
//! to an equitable ordered partition. Non-discrete partitions branch on the
//! first non-singleton cell; every discrete leaf yields a relabelling whose
//! upper-triangle bitstring is its certificate, and the smallest certificate
//! reached is the canonical form. Leaves that reproduce the first or the best
//! certificate give automorphisms, which prune sibling branches lying in one
//! orbit of the pointwise stabiliser of the current prefix and let the search
//! jump back to the level where the equivalent paths diverged.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::graph::Graph;

/// Label-invariant encoding of an isomorphism class.
///
/// `bytes` is the upper triangle of the canonically relabelled adjacency
/// matrix, row-major (pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...), packed
/// most significant bit first. Ordering compares order first, then bytes,
/// which for equal orders is the lexicographic order of the bitstrings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    order: usize,
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn edge_count(&self) -> usize {
        self.bytes.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// The canonically labelled representative this form encodes.
    pub fn to_graph(&self) -> Graph {
        let n = self.order;
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.bytes[bit / 8] >> (7 - bit % 8) & 1 == 1 {
                    g.link(i, j);
                }
                bit += 1;
            }
        }
        g
    }
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `canon_pos[v]` is the canonical position of vertex `v`.
    pub canon_pos: Vec<usize>,
    pub form: CanonicalForm,
    /// Automorphisms discovered during the search, as vertex maps.
    pub generators: Vec<Vec<usize>>,
    /// Cell index of each vertex in the refined root partition.
    pub root_cell: Vec<usize>,
}

impl Labeling {
    /// Vertex placed at canonical position `p`.
    pub fn vertex_at(&self, p: usize) -> usize {
        self.canon_pos
            .iter()
            .position(|&q| q == p)
            .expect("position in range")
    }

    /// Orbit representative (smallest member) of each vertex under the group
    /// generated by the discovered automorphisms.
    pub fn orbits(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.canon_pos.len());
        for gen in &self.generators {
            for (v, &w) in gen.iter().enumerate() {
                uf.union(v, w);
            }
        }
        (0..self.canon_pos.len()).map(|v| uf.find(v)).collect()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_colored(g, &vec![0; g.order()])
}

/// Canonical labelling that only uses relabellings preserving `colors`; cells
/// of the root partition are ordered by increasing colour value.
pub fn canonical_labeling_colored(g: &Graph, colors: &[usize]) -> Labeling {
    assert_eq!(colors.len(), g.order());
    let mut root = Partition::colored(colors);
    root.refine(g);
    let mut root_cell = vec![0; g.order()];
    for (c, &(start, len)) in root.cells.iter().enumerate() {
        for &v in &root.lab[start..start + len] {
            root_cell[v] = c;
        }
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
        seq: Vec::new(),
    };
    search.visit(root);
    let best = search.best.expect("the search always reaches a leaf");
    let mut canon_pos = vec![0; g.order()];
    for (p, &v) in best.lab.iter().enumerate() {
        canon_pos[v] = p;
    }
    Labeling {
        canon_pos,
        form: CanonicalForm {
            order: g.order(),
            bytes: best.cert,
        },
        generators: search.generators,
        root_cell,
    }
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && canonical_form(g) == canonical_form(h)
}

/// Ordered partition of the vertex set: `lab` lists vertices cell by cell.
#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    cells: Vec<(usize, usize)>,
}

impl Partition {
    fn colored(colors: &[usize]) -> Self {
        let mut lab: Vec<usize> = (0..colors.len()).collect();
        lab.sort_by_key(|&v| colors[v]);
        let mut cells = Vec::new();
        let mut start = 0;
        while start < lab.len() {
            let c = colors[lab[start]];
            let len = lab[start..].iter().take_while(|&&v| colors[v] == c).count();
            cells.push((start, len));
            start += len;
        }
        Partition { lab, cells }
    }

    fn is_discrete(&self) -> bool {
        self.cells.len() == self.lab.len()
    }

    /// Refines to the coarsest equitable partition finer than `self`. Split
    /// fragments are ordered by increasing neighbour count in the splitter.
    fn refine(&mut self, g: &Graph) {
        let n = self.lab.len();
        if n == 0 {
            return;
        }
        let words = g.row_words();
        let mut splitter = vec![0u64; words];
        let mut counts = vec![0usize; n];
        let mut changed = true;
        while changed && !self.is_discrete() {
            changed = false;
            let mut s = 0;
            while s < self.cells.len() {
                let (ss, sl) = self.cells[s];
                splitter.iter_mut().for_each(|w| *w = 0);
                for &v in &self.lab[ss..ss + sl] {
                    bits::set(&mut splitter, v);
                }
                let mut c = 0;
                while c < self.cells.len() {
                    let (start, len) = self.cells[c];
                    if len == 1 {
                        c += 1;
                        continue;
                    }
                    let cell = &mut self.lab[start..start + len];
                    for &v in cell.iter() {
                        counts[v] = bits::count_and(g.row(v), &splitter);
                    }
                    let k0 = counts[cell[0]];
                    if cell.iter().all(|&v| counts[v] == k0) {
                        c += 1;
                        continue;
                    }
                    cell.sort_unstable_by_key(|&v| counts[v]);
                    let mut pieces = Vec::new();
                    let mut i = 0;
                    while i < len {
                        let k = counts[cell[i]];
                        let run = cell[i..].iter().take_while(|&&v| counts[v] == k).count();
                        pieces.push((start + i, run));
                        i += run;
                    }
                    let added = pieces.len();
                    self.cells.splice(c..c + 1, pieces);
                    c += added;
                    changed = true;
                }
                s += 1;
            }
        }
    }

    /// Moves `v` to the front of cell `c` and splits it off as a singleton.
    fn individualize(&self, c: usize, v: usize) -> Partition {
        let mut p = self.clone();
        let (start, len) = p.cells[c];
        let at = p.lab[start..start + len]
            .iter()
            .position(|&x| x == v)
            .expect("vertex belongs to the target cell");
        p.lab.swap(start, start + at);
        p.cells.splice(c..c + 1, [(start, 1), (start + 1, len - 1)]);
        p
    }

    fn certificate(&self, g: &Graph) -> Vec<u8> {
        let n = self.lab.len();
        let mut out = vec![0u8; (n * n.saturating_sub(1) / 2).div_ceil(8)];
        let mut bit = 0;
        for i in 0..n {
            let row = g.row(self.lab[i]);
            for j in i + 1..n {
                if bits::test(row, self.lab[j]) {
                    out[bit / 8] |= 0x80 >> (bit % 8);
                }
                bit += 1;
            }
        }
        out
    }
}

struct Leaf {
    lab: Vec<usize>,
    cert: Vec<u8>,
    seq: Vec<usize>,
}

struct Search<'g> {
    g: &'g Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    /// Individualised vertices on the current root-to-node path.
    seq: Vec<usize>,
}

impl Search<'_> {
    /// Explores the subtree at `p`. `Some(k)` asks the caller to abandon
    /// everything below depth `k` and resume with the next child there.
    fn visit(&mut self, p: Partition) -> Option<usize> {
        if p.is_discrete() {
            return self.leaf(p);
        }
        let depth = self.seq.len();
        let target = p
            .cells
            .iter()
            .position(|&(_, len)| len > 1)
            .expect("non-discrete");
        let (start, len) = p.cells[target];
        let mut cell = p.lab[start..start + len].to_vec();
        cell.sort_unstable();

        let mut explored: Vec<usize> = Vec::new();
        let mut orbits = UnionFind::new(self.g.order());
        let mut absorbed = 0;
        for &v in &cell {
            if !explored.is_empty() {
                for gen in &self.generators[absorbed..] {
                    if self.seq.iter().all(|&x| gen[x] == x) {
                        for (a, &b) in gen.iter().enumerate() {
                            orbits.union(a, b);
                        }
                    }
                }
                absorbed = self.generators.len();
                let rv = orbits.find(v);
                if explored.iter().any(|&w| orbits.find(w) == rv) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = p.individualize(target, v);
            child.refine(self.g);
            self.seq.push(v);
            let jump = self.visit(child);
            self.seq.pop();
            if let Some(k) = jump {
                if k < depth {
                    return Some(k);
                }
            }
        }
        None
    }

    fn leaf(&mut self, p: Partition) -> Option<usize> {
        let cert = p.certificate(self.g);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                lab: p.lab,
                cert,
                seq: self.seq.clone(),
            };
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                cert: leaf.cert.clone(),
                seq: leaf.seq.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        let best = self.best.as_ref().expect("set with first");
        let twin = if cert == first.cert {
            Some(first)
        } else if cert == best.cert {
            Some(best)
        } else {
            None
        };
        if let Some(twin) = twin {
            let mut gamma = vec![0; p.lab.len()];
            for (&a, &b) in twin.lab.iter().zip(&p.lab) {
                gamma[a] = b;
            }
            let common = twin
                .seq
                .iter()
                .zip(&self.seq)
                .take_while(|(a, b)| a == b)
                .count();
            if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                self.generators.push(gamma);
            }
            return Some(common);
        }
        if cert.as_slice().cmp(best.cert.as_slice()) == Ordering::Less {
            self.best = Some(Leaf {
                lab: p.lab,
                cert,
                seq: self.seq.clone(),
            });
        }
        None
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Unions by keeping the smaller root, so roots are orbit minima.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        match ra.cmp(&rb) {
            Ordering::Less => self.parent[rb] = ra,
            Ordering::Greater => self.parent[ra] = rb,
            Ordering::Equal => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn c4_and_k22_agree() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let k22 = g(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(canonical_form(&c4), canonical_form(&k22));
        assert!(is_isomorphic(&c4, &k22));
    }

    #[test]
    fn p4_and_star_differ() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_form(&p4), canonical_form(&star));
        assert!(!is_isomorphic(&p4, &star));
    }

    #[test]
    fn paw_has_one_image_under_all_labelings() {
        let paw = g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let forms: std::collections::BTreeSet<_> = permutations(4)
            .iter()
            .map(|p| canonical_form(&paw.relabeled(p)))
            .collect();
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn canonical_graph_is_a_fixed_point() {
        let paw = g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let c = canonical_graph(&paw);
        assert_eq!(canonical_form(&c), canonical_form(&paw));
        assert_eq!(canonical_graph(&c), c);
        assert_eq!(c.edge_count(), 4);
    }

    #[test]
    fn labeling_maps_onto_form() {
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let lab = canonical_labeling(&c5);
        assert_eq!(c5.relabeled(&lab.canon_pos), lab.form.to_graph());
        // C5 is vertex transitive.
        assert!(lab.orbits().iter().all(|&r| r == 0));
        for gen in &lab.generators {
            assert_eq!(c5.relabeled(gen), c5);
        }
    }

    #[test]
    fn symmetric_graphs_finish() {
        for n in 0..=12 {
            let e = Graph::empty(n);
            assert_eq!(canonical_form(&e).edge_count(), 0);
            let k = Graph::complete(n);
            assert_eq!(
                canonical_labeling(&k)
                    .orbits()
                    .iter()
                    .filter(|&&r| r == 0)
                    .count(),
                n
            );
        }
    }

    #[test]
    fn coloring_distinguishes_orbits() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let end0 = canonical_labeling_colored(&p3, &[1, 0, 0]).form;
        let end2 = canonical_labeling_colored(&p3, &[0, 0, 1]).form;
        let mid = canonical_labeling_colored(&p3, &[0, 1, 0]).form;
        assert_eq!(end0, end2);
        assert_ne!(end0, mid);
    }
}
