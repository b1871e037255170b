//! Minimum partition of a vertex set into admissible classes.
//!
//! Backtracking assignment with a dynamic vertex order (fewest admissible
//! classes first), symmetry breaking on new classes, and a seed clique of
//! pairwise-conflicting vertices placed in distinct classes up front.

use std::cmp::Reverse;

use crate::bitset::VertexSet;
use crate::clique::max_clique;
use crate::solve::Budget;
use crate::visibility::Geodesics;

/// Admissibility of partition classes. Must be hereditary: if `C + v` is
/// admissible then so is every subset of it.
pub(crate) trait ClassRule {
    /// Whether `class + v` is admissible, given that `class` is.
    fn can_join(&self, class: &VertexSet, v: usize) -> bool;
    /// Vertices that can never share a class with `v`.
    fn conflicts(&self, v: usize) -> VertexSet;
}

/// Classes are kDMV sets.
pub(crate) struct KdmvRule<'a> {
    geo: &'a Geodesics,
    k: u32,
    far: Vec<VertexSet>,
}

impl<'a> KdmvRule<'a> {
    pub fn new(geo: &'a Geodesics, k: u32) -> Self {
        KdmvRule {
            geo,
            k,
            far: geo.far_graph(k),
        }
    }
}

impl ClassRule for KdmvRule<'_> {
    fn can_join(&self, class: &VertexSet, v: usize) -> bool {
        !class.intersects(&self.far[v]) && self.geo.can_extend(class, v, self.k)
    }

    fn conflicts(&self, v: usize) -> VertexSet {
        self.far[v]
    }
}

/// Classes are cliques of the given graph.
pub(crate) struct CliqueRule {
    adj: Vec<VertexSet>,
}

impl CliqueRule {
    pub fn new(adj: &[VertexSet]) -> Self {
        CliqueRule { adj: adj.to_vec() }
    }
}

impl ClassRule for CliqueRule {
    fn can_join(&self, class: &VertexSet, v: usize) -> bool {
        class.is_subset(&self.adj[v])
    }

    fn conflicts(&self, v: usize) -> VertexSet {
        self.adj[v].complement(self.adj.len()).without(v)
    }
}

pub(crate) struct Outcome {
    pub classes: Vec<VertexSet>,
    /// Proven lower bound; equals `classes.len()` when `exact`.
    pub lower: usize,
    pub exact: bool,
}

const SEED_CLIQUE_CAP: u64 = 200_000;

/// Minimum partition of `vertices` (all indices `< n`) into admissible classes.
pub(crate) fn min_partition<R: ClassRule>(
    rule: &R,
    n: usize,
    vertices: VertexSet,
    lower: usize,
    budget: &mut Budget,
) -> Outcome {
    if vertices.is_empty() {
        return Outcome {
            classes: Vec::new(),
            lower: 0,
            exact: true,
        };
    }
    let conflict: Vec<VertexSet> = (0..n).map(|v| rule.conflicts(v).without(v) & vertices).collect();
    let degree: Vec<usize> = conflict.iter().map(|c| c.len()).collect();

    let mut sub = budget.sub(SEED_CLIQUE_CAP);
    let seed = max_clique(&conflict, vertices, &mut sub);
    budget.charge(&sub);
    let lb = lower.max(seed.set.len()).max(1);

    let greedy = greedy_partition(rule, &conflict, &degree, vertices);
    if greedy.len() <= lb {
        return Outcome {
            lower: greedy.len(),
            classes: greedy,
            exact: true,
        };
    }
    let mut search = Search {
        rule,
        conflict: &conflict,
        degree: &degree,
        classes: seed.set.iter().map(VertexSet::singleton).collect(),
        uncolored: vertices - seed.set,
        best: greedy,
        lb,
        budget,
        aborted: false,
    };
    search.dfs();
    let exact = !search.aborted;
    let classes = search.best;
    Outcome {
        lower: if exact { classes.len() } else { lb },
        classes,
        exact,
    }
}

/// Admissible classes for `u` among `classes`.
fn options<R: ClassRule>(rule: &R, conflict: &[VertexSet], classes: &[VertexSet], u: usize) -> Vec<usize> {
    (0..classes.len())
        .filter(|&c| !classes[c].intersects(&conflict[u]) && rule.can_join(&classes[c], u))
        .collect()
}

/// First-fit along the dynamic order.
fn greedy_partition<R: ClassRule>(
    rule: &R,
    conflict: &[VertexSet],
    degree: &[usize],
    vertices: VertexSet,
) -> Vec<VertexSet> {
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut uncolored = vertices;
    while !uncolored.is_empty() {
        let (v, opts) = uncolored
            .iter()
            .map(|u| (u, options(rule, conflict, &classes, u)))
            .min_by_key(|(u, o)| (o.len(), Reverse(degree[*u]), *u))
            .expect("nonempty");
        uncolored.remove(v);
        match opts.first() {
            Some(&c) => classes[c].insert(v),
            None => classes.push(VertexSet::singleton(v)),
        }
    }
    classes
}

struct Search<'a, R> {
    rule: &'a R,
    conflict: &'a [VertexSet],
    degree: &'a [usize],
    classes: Vec<VertexSet>,
    uncolored: VertexSet,
    best: Vec<VertexSet>,
    lb: usize,
    budget: &'a mut Budget,
    aborted: bool,
}

impl<R: ClassRule> Search<'_, R> {
    fn done(&self) -> bool {
        self.aborted || self.best.len() <= self.lb
    }

    fn dfs(&mut self) {
        if !self.budget.tick() {
            self.aborted = true;
            return;
        }
        if self.uncolored.is_empty() {
            if self.classes.len() < self.best.len() {
                self.best = self.classes.clone();
            }
            return;
        }
        let can_open = self.classes.len() + 1 < self.best.len();
        let mut pick: Option<(usize, Vec<usize>)> = None;
        for u in self.uncolored.iter() {
            let opts = options(self.rule, self.conflict, &self.classes, u);
            if opts.is_empty() && !can_open {
                return;
            }
            let better = match &pick {
                None => true,
                Some((p, po)) => (opts.len(), Reverse(self.degree[u])) < (po.len(), Reverse(self.degree[*p])),
            };
            if better {
                let zero = opts.is_empty();
                pick = Some((u, opts));
                if zero {
                    break;
                }
            }
        }
        let (v, opts) = pick.expect("uncolored is nonempty");
        self.uncolored.remove(v);
        for c in opts {
            self.classes[c].insert(v);
            self.dfs();
            self.classes[c].remove(v);
            if self.done() {
                self.uncolored.insert(v);
                return;
            }
        }
        if self.classes.len() + 1 < self.best.len() {
            self.classes.push(VertexSet::singleton(v));
            self.dfs();
            self.classes.pop();
        }
        self.uncolored.insert(v);
    }
}
