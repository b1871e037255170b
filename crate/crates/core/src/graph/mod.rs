//! Simple undirected graphs on at most [`MAX_VERTICES`](crate::MAX_VERTICES)
//! vertices, stored as one neighbor bit vector per vertex.

mod enumerate;
mod family;
mod graph6;
mod metrics;
mod product;

pub use enumerate::{
    block_graphs, connected_graphs, connected_graphs_upto, girth_at_least_graphs, trees, CanonicalKey,
};
pub(crate) use family::corona;
pub use family::{generate, FamilySpec, NamedGraph};
pub use graph6::{parse_graph6, to_graph6};
pub(crate) use metrics::center_stripped;
pub use metrics::{
    all_pairs_distances, blocks, center_info, girth, is_convex, metrics, BlockInfo, CenterInfo, DistanceMatrix,
    Metrics, INF,
};
pub use product::{exact_distance_graph, product, ProductKind};

use crate::bitset::VertexSet;
use crate::error::{KdmvError, Result};
use crate::MAX_VERTICES;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(KdmvError::Size(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(); n],
            name: None,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(KdmvError::Spec(format!("edge {u}-{v} out of range for n = {}", self.n)));
        }
        if u == v {
            return Err(KdmvError::Spec(format!("self-loop at {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adj(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn closed_nbhd(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|a| a.is_empty())
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let adj = (0..self.n).map(|v| (full - self.adj[v]).without(v)).collect();
        Graph {
            n: self.n,
            adj,
            name: None,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.n * self.n.saturating_sub(1)
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in increasing order.
    /// Returns the graph together with the map from new to old labels.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|w| index[w]).collect())
            .collect();
        (
            Graph {
                n: map.len(),
                adj,
                name: None,
            },
            map,
        )
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let comp = self.reachable_from(v, &VertexSet::full(self.n));
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `v` inside `within` (which must contain `v`).
    pub fn reachable_from(&self, v: usize, within: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for u in frontier.iter() {
                next |= self.adj[u];
            }
            next = (next & *within) - comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable_from(0, &VertexSet::full(self.n)).len() == self.n
    }

    /// Same graph with vertex `v` of `self` becoming vertex `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: vec![VertexSet::new(); self.n],
            name: self.name.clone(),
        };
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        g
    }

    /// Plain edge-list text: `n m` on the first line, then one `u v` per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut nums = text.split_whitespace().map(|t| {
            t.parse::<usize>()
                .map_err(|_| KdmvError::Parse(format!("bad integer {t:?} in edge list")))
        });
        let mut next = |what: &str| {
            nums.next()
                .unwrap_or_else(|| Err(KdmvError::Parse(format!("edge list truncated: missing {what}"))))
        };
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut g = Graph::empty(n)?;
        for _ in 0..m {
            let u = next("edge endpoint")?;
            let v = next("edge endpoint")?;
            g.add_edge(u, v).map_err(|e| KdmvError::Parse(e.to_string()))?;
        }
        if g.edge_count() != m {
            return Err(KdmvError::Parse("edge list contains duplicate edges".into()));
        }
        Ok(g)
    }
}

/// Equality compares labelled edge sets; the display name is ignored.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?}", self.n, self.edges().collect::<Vec<_>>())?;
        if let Some(name) = &self.name {
            write!(f, ", name={name:?}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_oversize() {
        let mut g = Graph::empty(3).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert!(matches!(Graph::empty(513), Err(KdmvError::Size(513))));
        assert!(Graph::empty(512).is_ok());
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_edges(4, [(0, 1), (2, 1), (3, 0)]).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
            assert!(!g.has_edge(u, u));
        }
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[1].to_vec(), vec![2]);
        assert!(!g.is_connected());
        let (h, map) = g.induced(&[0, 1, 4].iter().collect());
        assert_eq!(map, vec![0, 1, 4]);
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n1 0\n").is_err());
    }
}
