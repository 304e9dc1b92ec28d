//! Isomorph-free enumeration of simple graphs by vertex augmentation.
//!
//! Every class on `k + 1` vertices arises from some class on `k` vertices by
//! adding a vertex joined to a subset of the old ones. Two strategies turn
//! that into one representative per class:
//!
//! * levelwise dedup keeps a global set of canonical forms per level;
//! * canonical augmentation keeps a child only if the new vertex lies in the
//!   automorphism orbit of the child's canonical deletion vertex (the vertex
//!   at the last canonical position), so each class has exactly one parent
//!   class. Duplicates from one parent are removed with a per-parent set,
//!   which keeps memory proportional to a single parent's children.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{SearchConfig, Strategy};
use crate::canon::{canonical_form, canonical_labeling, canonical_labeling_colored, CanonicalForm};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub order: usize,
    /// Classes visited at the requested order.
    pub classes: u64,
    /// Augmented graphs canonicalised on the final level.
    pub candidates: u64,
}

fn single_vertex() -> Vec<CanonicalForm> {
    vec![canonical_form(&Graph::empty(1))]
}

/// Children of `parent` accepted by canonical augmentation, in subset order.
fn augment(parent: &Graph, mut emit: impl FnMut(CanonicalForm)) -> u64 {
    let k = parent.order();
    let mut seen = HashSet::new();
    let mut candidates = 0;
    for mask in 0..1u64 << k {
        let child = parent.extended(mask);
        candidates += 1;
        let lab = canonical_labeling(&child);
        let deletion = lab.vertex_at(k);
        if !same_orbit(&child, &lab, k, deletion) {
            continue;
        }
        if seen.insert(lab.form.clone()) {
            emit(lab.form);
        }
    }
    candidates
}

fn same_orbit(g: &Graph, lab: &crate::canon::Labeling, a: usize, b: usize) -> bool {
    if a == b {
        return true;
    }
    if lab.root_cell[a] != lab.root_cell[b] {
        return false;
    }
    let orbits = lab.orbits();
    if orbits[a] == orbits[b] {
        return true;
    }
    let mark = |v: usize| -> Vec<usize> { (0..g.order()).map(|x| (x == v) as usize).collect() };
    canonical_labeling_colored(g, &mark(a)).form == canonical_labeling_colored(g, &mark(b)).form
}

fn dedup_children(parent: &Graph, set: &mut HashSet<CanonicalForm>) {
    for mask in 0..1u64 << parent.order() {
        set.insert(canonical_form(&parent.extended(mask)));
    }
}

fn next_level(parents: &[CanonicalForm], strategy: Strategy) -> Vec<CanonicalForm> {
    let mut level: Vec<CanonicalForm> = match strategy {
        Strategy::CanonicalAugmentation => parents
            .par_iter()
            .flat_map_iter(|p| {
                let mut kids = Vec::new();
                augment(&p.to_graph(), |f| kids.push(f));
                kids
            })
            .collect(),
        _ => parents
            .par_iter()
            .fold(HashSet::new, |mut set, p| {
                dedup_children(&p.to_graph(), &mut set);
                set
            })
            .reduce(HashSet::new, |a, b| {
                if a.len() < b.len() {
                    merge(b, a)
                } else {
                    merge(a, b)
                }
            })
            .into_iter()
            .collect(),
    };
    level.par_sort_unstable();
    level
}

fn merge(mut a: HashSet<CanonicalForm>, b: HashSet<CanonicalForm>) -> HashSet<CanonicalForm> {
    a.extend(b);
    a
}

/// Sorted canonical forms of every class on `order - 1` vertices.
fn parents_of(order: usize, strategy: Strategy) -> Vec<CanonicalForm> {
    let mut level = single_vertex();
    for _ in 2..order {
        level = next_level(&level, strategy);
    }
    level
}

fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool")
}

/// Sorted canonical forms of all classes on `order` vertices.
pub fn class_forms(order: usize, strategy: Strategy, workers: usize) -> Result<Vec<CanonicalForm>> {
    let cfg = SearchConfig {
        workers,
        strategy,
        ..SearchConfig::default()
    };
    cfg.check_order(order)?;
    let strategy = cfg.resolved_strategy(order);
    Ok(pool(cfg.workers).install(|| {
        if order == 1 {
            return single_vertex();
        }
        next_level(&parents_of(order, strategy), strategy)
    }))
}

/// Visits one canonically labelled representative per class on `order`
/// vertices. With levelwise dedup the visit order is the canonical-form
/// order; with canonical augmentation it follows parents in canonical-form
/// order and children in subset order.
pub fn enumerate_graphs(
    order: usize,
    cfg: &SearchConfig,
    mut visit: impl FnMut(&Graph),
) -> Result<EnumerationStats> {
    cfg.check_order(order)?;
    let strategy = cfg.resolved_strategy(order);
    let mut stats = EnumerationStats {
        order,
        ..Default::default()
    };
    if order == 1 {
        visit(&Graph::empty(1));
        stats.classes = 1;
        return Ok(stats);
    }
    let parents = pool(cfg.workers).install(|| parents_of(order, strategy));
    match strategy {
        Strategy::CanonicalAugmentation => {
            for p in &parents {
                stats.candidates += augment(&p.to_graph(), |f| {
                    stats.classes += 1;
                    visit(&f.to_graph());
                });
            }
        }
        _ => {
            stats.candidates = parents.iter().map(|p| 1u64 << p.order()).sum();
            let level = pool(cfg.workers).install(|| next_level(&parents, strategy));
            for f in &level {
                stats.classes += 1;
                visit(&f.to_graph());
            }
        }
    }
    Ok(stats)
}

/// Parallel fold over all classes on `order` vertices. The work is split by
/// parent class; per-worker accumulators are combined with `merge`, which
/// must be associative and commutative for the result to be independent of
/// the worker count.
pub(crate) fn fold_classes<A, I, F, M>(
    order: usize,
    cfg: &SearchConfig,
    init: I,
    fold: F,
    merge: M,
) -> Result<(A, u64)>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &CanonicalForm) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    cfg.check_order(order)?;
    let strategy = cfg.resolved_strategy(order);
    let out = pool(cfg.workers).install(|| {
        if order == 1 {
            let mut acc = init();
            fold(&mut acc, &single_vertex()[0]);
            return (acc, 1);
        }
        let parents = parents_of(order, strategy);
        match strategy {
            Strategy::CanonicalAugmentation => parents
                .par_iter()
                .fold(
                    || (init(), 0u64),
                    |(mut acc, mut count), p| {
                        augment(&p.to_graph(), |f| {
                            count += 1;
                            fold(&mut acc, &f);
                        });
                        (acc, count)
                    },
                )
                .reduce(|| (init(), 0), |(a, ca), (b, cb)| (merge(a, b), ca + cb)),
            _ => {
                let level = next_level(&parents, strategy);
                let count = level.len() as u64;
                let acc = level
                    .par_iter()
                    .fold(&init, |mut acc, f| {
                        fold(&mut acc, f);
                        acc
                    })
                    .reduce(&init, &merge);
                (acc, count)
            }
        }
    });
    Ok(out)
}
