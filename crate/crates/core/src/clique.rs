//! Budgeted maximum clique search with greedy-colouring bounds.
//!
//! An optional acceptance predicate lets callers search for maximum sets that
//! are cliques of an auxiliary graph *and* satisfy an extra hereditary
//! property (used for maximum kDMV sets).

use crate::bitset::VertexSet;
use crate::solve::Budget;

pub(crate) struct CliqueOutcome {
    pub set: VertexSet,
    pub exact: bool,
    /// Upper bound on the optimum (equals `set.len()` when exact).
    pub upper: usize,
}

struct Search<'a, F> {
    adj: Vec<VertexSet>,
    back: Vec<usize>,
    accept: &'a mut F,
    budget: &'a mut Budget,
    best: VertexSet,
    aborted: bool,
}

/// Maximum clique of `adj` inside `within`. `accept(s, y)` must say whether
/// `s + y` is admissible given that `s` is, and must be hereditary.
pub(crate) fn max_clique_with<F>(
    adj: &[VertexSet],
    within: VertexSet,
    budget: &mut Budget,
    mut accept: F,
) -> CliqueOutcome
where
    F: FnMut(&VertexSet, usize) -> bool,
{
    // relabel so that index order is degree-descending inside `within`
    let mut order: Vec<usize> = within.to_vec();
    order.sort_by_key(|&v| (std::cmp::Reverse((adj[v] & within).len()), v));
    let mut fwd = vec![usize::MAX; adj.len()];
    for (i, &v) in order.iter().enumerate() {
        fwd[v] = i;
    }
    let local: Vec<VertexSet> = order
        .iter()
        .map(|&v| (adj[v] & within).iter().map(|w| fwd[w]).collect())
        .collect();

    let mut remap_accept = |s: &VertexSet, y: usize| {
        let orig: VertexSet = s.iter().map(|i| order[i]).collect();
        accept(&orig, order[y])
    };
    let mut search = Search {
        adj: local,
        back: order.clone(),
        accept: &mut remap_accept,
        budget,
        best: VertexSet::new(),
        aborted: false,
    };
    let root = VertexSet::full(order.len());
    let root_bound = greedy_color_bound(&search.adj, root);
    search.expand(VertexSet::new(), root);
    let set: VertexSet = search.best.iter().map(|i| search.back[i]).collect();
    if search.aborted {
        CliqueOutcome {
            set,
            exact: false,
            upper: root_bound.max(set.len()),
        }
    } else {
        CliqueOutcome {
            set,
            exact: true,
            upper: set.len(),
        }
    }
}

pub(crate) fn max_clique(adj: &[VertexSet], within: VertexSet, budget: &mut Budget) -> CliqueOutcome {
    max_clique_with(adj, within, budget, |_, _| true)
}

/// Number of colours used by a greedy proper colouring of `adj` on `p`.
fn greedy_color_bound(adj: &[VertexSet], p: VertexSet) -> usize {
    let mut left = p;
    let mut colors = 0;
    while !left.is_empty() {
        colors += 1;
        let mut q = left;
        while let Some(v) = q.first() {
            left.remove(v);
            q.remove(v);
            q -= adj[v];
        }
    }
    colors
}

impl<F> Search<'_, F>
where
    F: FnMut(&VertexSet, usize) -> bool,
{
    /// Vertices of `p` grouped by greedy colour, with each vertex's colour.
    fn color_sort(&self, p: VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(p.len());
        let mut bound = Vec::with_capacity(p.len());
        let mut left = p;
        let mut color = 0;
        while !left.is_empty() {
            color += 1;
            let mut q = left;
            while let Some(v) = q.first() {
                left.remove(v);
                q.remove(v);
                q -= self.adj[v];
                order.push(v);
                bound.push(color);
            }
        }
        (order, bound)
    }

    fn expand(&mut self, s: VertexSet, mut p: VertexSet) {
        if !self.budget.tick() {
            self.aborted = true;
            return;
        }
        if s.len() > self.best.len() {
            self.best = s;
        }
        if p.is_empty() {
            return;
        }
        let (order, bound) = self.color_sort(p);
        for i in (0..order.len()).rev() {
            if s.len() + bound[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            let s2 = s.with(v);
            let mut p2 = VertexSet::new();
            for y in (p & self.adj[v]).iter() {
                if (self.accept)(&s2, y) {
                    p2.insert(y);
                }
            }
            self.expand(s2, p2);
            if self.aborted {
                return;
            }
            p.remove(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    #[test]
    fn finds_maximum_clique() {
        // a triangle plus a K4 on 3..6 sharing nothing
        let mut edges = vec![(0, 1), (1, 2), (0, 2), (2, 3)];
        for i in 3..7 {
            for j in i + 1..7 {
                edges.push((i, j));
            }
        }
        let adj = adjacency(7, &edges);
        let out = max_clique(&adj, VertexSet::full(7), &mut Budget::default());
        assert!(out.exact);
        assert_eq!(out.set.to_vec(), vec![3, 4, 5, 6]);
        let out = max_clique(&adj, (0..5).collect(), &mut Budget::default());
        assert_eq!(out.set.len(), 3);
    }

    #[test]
    fn acceptance_filter_applies() {
        let adj = adjacency(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        // forbid sets containing both 0 and 1
        let out = max_clique_with(&adj, VertexSet::full(4), &mut Budget::default(), |s, y| {
            !(s.with(y).contains(0) && s.with(y).contains(1))
        });
        assert_eq!(out.set.len(), 3);
    }

    #[test]
    fn exhausted_budget_reports_bounds() {
        let n = 30;
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).filter(move |j| (i + j) % 3 != 0).map(move |j| (i, j)))
            .collect();
        let adj = adjacency(n, &edges);
        let out = max_clique(&adj, VertexSet::full(n), &mut Budget::new(3));
        assert!(!out.exact);
        assert!(out.upper >= out.set.len());
    }
}
