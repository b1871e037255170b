//! Exhaustive generation of small graph classes up to isomorphism.
//!
//! Every class here is closed under deleting a non-cut vertex, so each member
//! on `n` vertices arises from a member on `n - 1` vertices by adding a vertex
//! joined to some nonempty subset. Duplicates are removed with an
//! isomorphism-invariant hash followed by an exact isomorphism test.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use super::{all_pairs_distances, blocks, girth, Graph};
use crate::bitset::VertexSet;

/// Isomorphism-invariant fingerprint (equal for isomorphic graphs; rarely
/// equal otherwise).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(u64);

impl CanonicalKey {
    pub fn of(g: &Graph) -> Self {
        let colors = refined_colors(g);
        let mut sorted = colors.clone();
        sorted.sort_unstable();
        let mut h = DefaultHasher::new();
        (g.n(), g.edge_count(), sorted).hash(&mut h);
        CanonicalKey(h.finish())
    }
}

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

/// Colour refinement seeded with each vertex's distance profile.
fn refined_colors(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let dm = all_pairs_distances(g);
    let mut colors: Vec<u64> = (0..n)
        .map(|v| {
            let mut row = dm.row(v).to_vec();
            row.sort_unstable();
            hash_of(&row)
        })
        .collect();
    let mut classes = count_distinct(&colors);
    loop {
        let next: Vec<u64> = (0..n)
            .map(|v| {
                let mut nb: Vec<u64> = g.adj(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                hash_of(&(colors[v], nb))
            })
            .collect();
        let c = count_distinct(&next);
        colors = next;
        if c == classes {
            return colors;
        }
        classes = c;
    }
}

fn count_distinct(xs: &[u64]) -> usize {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Exact isomorphism test by backtracking over colour-compatible maps.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let cg = refined_colors(g);
    let ch = refined_colors(h);
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return false;
    }
    // map g's vertices in BFS order so each new vertex has a mapped neighbour
    let mut order = Vec::with_capacity(g.n());
    let mut seen = VertexSet::new();
    for s in 0..g.n() {
        if seen.contains(s) {
            continue;
        }
        seen.insert(s);
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            for w in g.adj(order[i]).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let mut map = vec![usize::MAX; g.n()];
    let mut used = VertexSet::new();
    iso_extend(g, h, &cg, &ch, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn iso_extend(
    g: &Graph,
    h: &Graph,
    cg: &[u64],
    ch: &[u64],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.n() {
        if used.contains(w) || ch[w] != cg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if iso_extend(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        used.remove(w);
        map[v] = usize::MAX;
    }
    false
}

/// Isomorphism-class store preserving insertion order.
struct Store {
    graphs: Vec<Graph>,
    buckets: HashMap<CanonicalKey, Vec<usize>>,
}

impl Store {
    fn new() -> Self {
        Store {
            graphs: Vec::new(),
            buckets: HashMap::new(),
        }
    }

    fn insert(&mut self, g: Graph) {
        let key = CanonicalKey::of(&g);
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&self.graphs[i], &g)) {
            return;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
    }
}

/// One-vertex extensions of each graph in `prev` that satisfy `keep`.
/// `subsets` limits the neighbourhoods tried for the new vertex.
fn extend<F, S>(prev: &[Graph], subsets: S, keep: F) -> Vec<Graph>
where
    F: Fn(&Graph) -> bool,
    S: Fn(&Graph) -> Vec<VertexSet>,
{
    let mut store = Store::new();
    for g in prev {
        let n = g.n();
        for s in subsets(g) {
            let mut ext = Graph::empty(n + 1).expect("small");
            for (u, v) in g.edges() {
                ext.add_edge(u, v).expect("valid");
            }
            for u in s.iter() {
                ext.add_edge(u, n).expect("valid");
            }
            if keep(&ext) {
                store.insert(ext);
            }
        }
    }
    store.graphs
}

fn all_nonempty_subsets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    (1u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
        .collect()
}

fn k1() -> Graph {
    Graph::empty(1).expect("small")
}

fn layered<F>(n: usize, step: F) -> Vec<Graph>
where
    F: Fn(&[Graph]) -> Vec<Graph>,
{
    if n == 0 {
        return Vec::new();
    }
    let mut cur = vec![k1()];
    for _ in 1..n {
        cur = step(&cur);
    }
    cur
}

/// All connected graphs on `n` vertices up to isomorphism (`n <= 10`).
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "exhaustive generation is limited to n <= 10");
    layered(n, |prev| extend(prev, all_nonempty_subsets, |_| true))
}

/// Connected graphs on `1..=n` vertices, ordered by size.
pub fn connected_graphs_upto(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "exhaustive generation is limited to n <= 10");
    let mut out = Vec::new();
    let mut cur = vec![k1()];
    for size in 1..=n {
        if size > 1 {
            cur = extend(&cur, all_nonempty_subsets, |_| true);
        }
        out.extend(cur.iter().cloned());
    }
    out
}

/// All trees on `n` vertices up to isomorphism.
pub fn trees(n: usize) -> Vec<Graph> {
    layered(n, |prev| {
        extend(prev, |g| (0..g.n()).map(VertexSet::singleton).collect(), |_| true)
    })
}

/// Connected graphs on `n` vertices with girth at least `min_girth`
/// (forests count as infinite girth).
pub fn girth_at_least_graphs(min_girth: u32, n: usize) -> Vec<Graph> {
    assert!(n <= 12, "exhaustive generation is limited to n <= 12");
    let ok = |g: &Graph| girth(g).is_none_or(|c| c >= min_girth);
    layered(n, |prev| {
        extend(
            prev,
            |g| {
                // neighbours of the new vertex must be pairwise far apart
                let dm = all_pairs_distances(g);
                let far = min_girth.saturating_sub(2);
                let mut out = Vec::new();
                let mut stack: Vec<(usize, VertexSet)> = vec![(0, VertexSet::new())];
                while let Some((next, s)) = stack.pop() {
                    if !s.is_empty() {
                        out.push(s);
                    }
                    for v in next..g.n() {
                        if s.iter().all(|u| dm.get(u, v) >= far) {
                            stack.push((v + 1, s.with(v)));
                        }
                    }
                }
                out
            },
            ok,
        )
    })
}

/// All block graphs on `n` vertices up to isomorphism.
pub fn block_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 12, "exhaustive generation is limited to n <= 12");
    layered(n, |prev| {
        extend(
            prev,
            |g| {
                // the new vertex joins a clique
                all_nonempty_subsets(g)
                    .into_iter()
                    .filter(|s| s.iter().all(|u| (g.adj(u).with(u) & s) == *s))
                    .collect()
            },
            |g| blocks(g).map(|b| b.is_block_graph).unwrap_or(false),
        )
    })
}
