use serde::Serialize;

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{KdmvError, Result};

/// Distance between vertices in different components. Larger than any real
/// distance, and small enough that sums of two entries do not overflow.
pub const INF: u32 = u32::MAX / 4;

/// All-pairs shortest-path lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        self.d.iter().all(|&x| x < INF)
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0)
    }

    /// Largest finite-or-infinite distance; `INF` for disconnected graphs.
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Vertices at distance exactly `r` from `u`.
    pub fn sphere(&self, u: usize, r: u32) -> VertexSet {
        self.row(u)
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == r)
            .map(|(v, _)| v)
            .collect()
    }

    /// Vertices at distance at most `r` from `u`.
    pub fn ball(&self, u: usize, r: u32) -> VertexSet {
        self.row(u)
            .iter()
            .enumerate()
            .filter(|(_, &x)| x <= r)
            .map(|(v, _)| v)
            .collect()
    }

    /// Vertices lying on at least one `u,v`-geodesic (including `u` and `v`).
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        let d = self.get(u, v);
        if d >= INF {
            return VertexSet::new();
        }
        (0..self.n).filter(|&w| self.get(u, w) + self.get(w, v) == d).collect()
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![INF; n * n];
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        let mut dist = 0;
        row[s] = 0;
        while !frontier.is_empty() {
            dist += 1;
            let mut next = VertexSet::new();
            for u in frontier.iter() {
                next |= g.adj(u);
            }
            next -= seen;
            for v in next.iter() {
                row[v] = dist;
            }
            seen |= next;
            frontier = next;
        }
    }
    DistanceMatrix { n, d }
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<u32> {
    let n = g.n();
    let mut best = INF;
    let mut dist = vec![INF; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        dist.iter_mut().for_each(|x| *x = INF);
        queue.clear();
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if 2 * dist[u] >= best {
                break;
            }
            for w in g.adj(u).iter() {
                if dist[w] == INF {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best < INF).then_some(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CenterInfo {
    pub radius: u32,
    pub diameter: u32,
    pub center: VertexSet,
    pub radial_vertices: VertexSet,
    /// Number of components, after removing the center's internal edges (or
    /// all edges at a lone center vertex), that contain a radial vertex.
    pub deg_star: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub girth: Option<u32>,
    pub diameter: u32,
    pub radius: u32,
    pub center: CenterInfo,
}

pub fn center_info(g: &Graph, dm: &DistanceMatrix) -> Result<CenterInfo> {
    if !dm.is_connected() {
        return Err(KdmvError::Connectivity);
    }
    let n = g.n();
    if n == 0 {
        return Err(KdmvError::Domain("center of the empty graph".into()));
    }
    let ecc: Vec<u32> = (0..n).map(|v| dm.eccentricity(v)).collect();
    let radius = *ecc.iter().min().unwrap();
    let diameter = *ecc.iter().max().unwrap();
    let center: VertexSet = (0..n).filter(|&v| ecc[v] == radius).collect();
    let radial_vertices: VertexSet = (0..n)
        .filter(|&u| center.iter().any(|c| dm.get(u, c) == radius))
        .collect();

    let stripped = center_stripped(g, &center);
    let deg_star = stripped
        .components()
        .iter()
        .filter(|comp| comp.intersects(&radial_vertices))
        .count();
    Ok(CenterInfo {
        radius,
        diameter,
        center,
        radial_vertices,
        deg_star,
    })
}

/// `G - E(G[C])` when `|C| >= 2`, or `G - F` with `F` the edges at the single
/// center vertex.
pub(crate) fn center_stripped(g: &Graph, center: &VertexSet) -> Graph {
    let mut h = Graph::empty(g.n()).expect("same size");
    let lone = (center.len() == 1).then(|| center.first().unwrap());
    for (u, v) in g.edges() {
        let drop = match lone {
            Some(c) => u == c || v == c,
            None => center.contains(u) && center.contains(v),
        };
        if !drop {
            h.add_edge(u, v).expect("valid edge");
        }
    }
    h
}

pub fn metrics(g: &Graph) -> Result<Metrics> {
    let dm = all_pairs_distances(g);
    let center = center_info(g, &dm)?;
    Ok(Metrics {
        girth: girth(g),
        diameter: center.diameter,
        radius: center.radius,
        center,
    })
}

/// Whether `s` induces a convex subgraph: every geodesic between two members
/// stays inside `s`. Sets inducing a disconnected subgraph are never convex.
pub fn is_convex(g: &Graph, s: &VertexSet) -> bool {
    is_convex_with(g, &all_pairs_distances(g), s)
}

pub(crate) fn is_convex_with(g: &Graph, dm: &DistanceMatrix, s: &VertexSet) -> bool {
    let Some(first) = s.first() else {
        return false;
    };
    if g.reachable_from(first, s) != *s {
        return false;
    }
    let members = s.to_vec();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            if !(dm.interval(x, y) - s).is_empty() {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockInfo {
    pub cut_vertices: VertexSet,
    /// Vertex sets of the blocks, ordered by their smallest members.
    pub blocks: Vec<VertexSet>,
    pub is_block_graph: bool,
}

/// Block-cut decomposition (Hopcroft-Tarjan).
pub fn blocks(g: &Graph) -> Result<BlockInfo> {
    if !g.is_connected() {
        return Err(KdmvError::Connectivity);
    }
    let n = g.n();
    let mut out = BlockInfo {
        cut_vertices: VertexSet::new(),
        blocks: Vec::new(),
        is_block_graph: true,
    };
    if n == 0 {
        return Ok(out);
    }
    if n == 1 {
        out.blocks.push(VertexSet::singleton(0));
        return Ok(out);
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    // iterative DFS: (vertex, parent, remaining neighbors)
    let mut stack: Vec<(usize, usize, VertexSet)> = vec![(0, usize::MAX, *g.adj(0))];
    disc[0] = 0;
    low[0] = 0;
    time += 1;
    let mut root_children = 0;
    while let Some(top) = stack.last_mut() {
        let (u, parent) = (top.0, top.1);
        if let Some(w) = top.2.first() {
            top.2.remove(w);
            if disc[w] == usize::MAX {
                disc[w] = time;
                low[w] = time;
                time += 1;
                edge_stack.push((u, w));
                if u == 0 {
                    root_children += 1;
                }
                stack.push((w, u, *g.adj(w)));
            } else if w != parent && disc[w] < disc[u] {
                edge_stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[u]);
                if low[u] >= disc[p] {
                    if p != 0 {
                        out.cut_vertices.insert(p);
                    }
                    let mut block = VertexSet::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (p, u) {
                            break;
                        }
                    }
                    out.blocks.push(block);
                }
            }
        }
    }
    if root_children > 1 {
        out.cut_vertices.insert(0);
    }
    out.blocks.sort_by_key(|b| b.to_vec());
    out.is_block_graph = out
        .blocks
        .iter()
        .all(|b| b.iter().all(|v| b.without(v).is_subset(g.adj(v))));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn path_distances() {
        let dm = all_pairs_distances(&path(5));
        assert_eq!(dm.get(0, 4), 4);
        assert_eq!(dm.diameter(), 4);
        assert_eq!(dm.sphere(2, 2).to_vec(), vec![0, 4]);
        assert_eq!(dm.interval(0, 3).to_vec(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn disconnected_distances_are_inf() {
        let dm = all_pairs_distances(&Graph::empty(2).unwrap());
        assert_eq!(dm.get(0, 1), INF);
        assert!(!dm.is_connected());
        assert!(dm.interval(0, 1).is_empty());
    }

    #[test]
    fn girth_values() {
        assert_eq!(girth(&path(6)), None);
        assert_eq!(girth(&cycle(7)), Some(7));
        assert_eq!(girth(&cycle(3)), Some(3));
        let mut g = cycle(8);
        g.add_edge(0, 4).unwrap();
        assert_eq!(girth(&g), Some(5));
    }

    #[test]
    fn cycle_metrics() {
        let m = metrics(&cycle(7)).unwrap();
        assert_eq!(m.girth, Some(7));
        assert_eq!((m.diameter, m.radius), (3, 3));
        assert_eq!(m.center.center.len(), 7);
        assert!(metrics(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn convexity() {
        let c4 = cycle(4);
        assert!(!is_convex(&c4, &[0, 2].iter().collect()));
        assert!(is_convex(&c4, &c4.vertices()));
        assert!(is_convex(&c4, &[0, 1].iter().collect()));
        assert!(!is_convex(&c4, &VertexSet::new()));
        assert!(is_convex(&path(5), &[1, 2, 3].iter().collect()));
        assert!(!is_convex(&path(5), &[1, 3].iter().collect()));
    }

    #[test]
    fn block_decomposition() {
        let t = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let b = blocks(&t).unwrap();
        assert_eq!(b.blocks.len(), 4);
        assert!(b.is_block_graph);
        assert_eq!(b.cut_vertices.to_vec(), vec![1, 3]);

        let c5 = blocks(&cycle(5)).unwrap();
        assert_eq!(c5.blocks.len(), 1);
        assert!(!c5.is_block_graph);
        assert!(c5.cut_vertices.is_empty());

        // two triangles sharing vertex 2
        let bow = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let b = blocks(&bow).unwrap();
        assert_eq!(b.blocks.len(), 2);
        assert_eq!(b.cut_vertices.to_vec(), vec![2]);
        assert!(b.is_block_graph);
        assert!(blocks(&Graph::empty(2).unwrap()).is_err());
    }
}
