//! Geodesic avoidance, kDMV sets and the maximum kDMV set solver.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::clique::max_clique_with;
use crate::error::{KdmvError, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, INF};
use crate::solve::{Budget, SolveResult, Status};

/// The `u,v`-geodesic interval: every vertex on at least one shortest path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeodesicLayers {
    pub source: usize,
    pub target: usize,
    pub dist: u32,
    pub on_geodesic: VertexSet,
}

impl GeodesicLayers {
    pub fn new(dm: &DistanceMatrix, u: usize, v: usize) -> Result<Self> {
        let dist = dm.get(u, v);
        if dist >= INF {
            return Err(KdmvError::Distance(u, v));
        }
        Ok(GeodesicLayers {
            source: u,
            target: v,
            dist,
            on_geodesic: dm.interval(u, v),
        })
    }

    /// Members at distance `i` from the source.
    pub fn layer(&self, dm: &DistanceMatrix, i: u32) -> VertexSet {
        self.on_geodesic
            .iter()
            .filter(|&w| dm.get(self.source, w) == i)
            .collect()
    }
}

/// Whether some `u,v`-geodesic has no internal vertex in `forbidden`.
pub fn geodesic_avoiding_exists(
    g: &Graph,
    dm: &DistanceMatrix,
    u: usize,
    v: usize,
    forbidden: &VertexSet,
) -> Result<bool> {
    if u == v {
        return Ok(true);
    }
    let layers = GeodesicLayers::new(dm, u, v)?;
    let allowed = layers.on_geodesic.without(u).without(v) - forbidden;
    let mut frontier = VertexSet::singleton(u);
    for i in 1..layers.dist {
        let mut next = VertexSet::new();
        for w in frontier.iter() {
            next |= g.adj(w);
        }
        frontier = next & allowed & layers.layer(dm, i);
        if frontier.is_empty() {
            return Ok(false);
        }
    }
    Ok(layers.dist <= 1 || frontier.intersects(g.adj(v)))
}

pub fn is_kdmv_set(g: &Graph, dm: &DistanceMatrix, s: &VertexSet, k: u32) -> bool {
    let vs = s.to_vec();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if dm.get(u, v) > k {
                return false;
            }
            if !geodesic_avoiding_exists(g, dm, u, v, s).unwrap_or(false) {
                return false;
            }
        }
    }
    true
}

/// Mutual-visibility set: kDMV with no distance limit.
pub fn is_mv_set(g: &Graph, dm: &DistanceMatrix, s: &VertexSet) -> bool {
    is_kdmv_set(g, dm, s, INF - 1)
}

/// Precomputed distances, geodesic interiors and distance spheres for fast
/// repeated visibility queries.
#[derive(Clone, Debug)]
pub struct Geodesics {
    n: usize,
    adj: Vec<VertexSet>,
    dm: DistanceMatrix,
    /// `interior[u * n + v]`: vertices strictly inside some `u,v`-geodesic.
    interior: Vec<VertexSet>,
    /// `spheres[u][r]`: vertices at distance `r` from `u`.
    spheres: Vec<Vec<VertexSet>>,
}

impl Geodesics {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let dm = all_pairs_distances(g);
        let mut spheres = Vec::with_capacity(n);
        let mut interior = vec![VertexSet::new(); n * n];
        for u in 0..n {
            let ecc = dm.row(u).iter().copied().filter(|&d| d < INF).max().unwrap_or(0);
            let mut layers = vec![VertexSet::new(); ecc as usize + 1];
            for (v, &d) in dm.row(u).iter().enumerate() {
                if d < INF {
                    layers[d as usize].insert(v);
                }
            }
            // closed intervals by dynamic programming over BFS layers
            let row = &mut interior[u * n..(u + 1) * n];
            row[u] = VertexSet::singleton(u);
            for r in 1..layers.len() {
                for v in layers[r].iter() {
                    let mut iv = VertexSet::singleton(v);
                    for w in (*g.adj(v) & layers[r - 1]).iter() {
                        iv |= row[w];
                    }
                    row[v] = iv;
                }
            }
            for (v, iv) in row.iter_mut().enumerate() {
                *iv = iv.without(u).without(v);
            }
            spheres.push(layers);
        }
        Geodesics {
            n,
            adj: g.adjacency().to_vec(),
            dm,
            interior,
            spheres,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dm(&self) -> &DistanceMatrix {
        &self.dm
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dm.get(u, v)
    }

    /// Vertices strictly inside some `u,v`-geodesic.
    #[inline]
    pub fn interior(&self, u: usize, v: usize) -> &VertexSet {
        &self.interior[u * self.n + v]
    }

    /// Whether some `u,v`-geodesic avoids `s` internally. False for pairs in
    /// different components.
    pub fn visible(&self, u: usize, v: usize, s: &VertexSet) -> bool {
        let d = self.dist(u, v);
        if d <= 1 {
            return true;
        }
        if d >= INF {
            return false;
        }
        let allowed = *self.interior(u, v) - s;
        if d == 2 {
            return !allowed.is_empty();
        }
        let layers = &self.spheres[u];
        let mut frontier = VertexSet::singleton(u);
        for layer in &layers[1..d as usize] {
            let mut next = VertexSet::new();
            for w in frontier.iter() {
                next |= self.adj[w];
            }
            frontier = next & allowed & layer;
            if frontier.is_empty() {
                return false;
            }
        }
        true
    }

    pub fn is_kdmv(&self, s: &VertexSet, k: u32) -> bool {
        let vs = s.to_vec();
        vs.iter().enumerate().all(|(i, &u)| {
            vs[i + 1..]
                .iter()
                .all(|&v| self.dist(u, v) <= k && self.visible(u, v, s))
        })
    }

    /// Whether `s + y` is kDMV, given that `s` is.
    pub fn can_extend(&self, s: &VertexSet, y: usize, k: u32) -> bool {
        if s.contains(y) {
            return true;
        }
        let s2 = s.with(y);
        for a in s.iter() {
            if self.dist(a, y) > k || !self.visible(a, y, &s2) {
                return false;
            }
        }
        let vs = s.to_vec();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if self.interior(a, b).contains(y) && !self.visible(a, b, &s2) {
                    return false;
                }
            }
        }
        true
    }

    /// `near[u]`: vertices `v != u` with `d(u, v) <= k`.
    pub fn near_graph(&self, k: u32) -> Vec<VertexSet> {
        (0..self.n)
            .map(|u| (0..self.n).filter(|&v| v != u && self.dist(u, v) <= k).collect())
            .collect()
    }

    /// `far[u]`: vertices with `d(u, v) > k` (including other components).
    pub fn far_graph(&self, k: u32) -> Vec<VertexSet> {
        (0..self.n)
            .map(|u| (0..self.n).filter(|&v| self.dist(u, v) > k).collect())
            .collect()
    }
}

/// Maximum kDMV set (`mu_k`) by branch and bound over the distance-`k` graph.
pub fn max_kdmv(g: &Graph, k: u32, budget: u64) -> SolveResult<VertexSet> {
    let geo = Geodesics::new(g);
    max_kdmv_with(&geo, k, &mut Budget::new(budget))
}

pub(crate) fn max_kdmv_with(geo: &Geodesics, k: u32, budget: &mut Budget) -> SolveResult<VertexSet> {
    let before = budget.used();
    let near = geo.near_graph(k);
    let out = max_clique_with(&near, VertexSet::full(geo.n()), budget, |s, y| geo.can_extend(s, y, k));
    let value = out.set.len();
    let status = if out.exact {
        Status::Exact
    } else {
        Status::BoundsOnly {
            lower: value,
            upper: out.upper,
        }
    };
    SolveResult {
        value,
        witness: out.set,
        status,
        nodes: budget.used() - before,
    }
}

/// Shape of a vertex set of `Q_n` whose members are pairwise within distance 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QnDiam2Class {
    /// Contained in `N[v]`; `v` is the smallest such vertex.
    WithinClosedNeighborhood(usize),
    /// The four vertices of an induced 4-cycle.
    Square,
    /// One colour class of a 3-dimensional subcube.
    Q3PartiteSet,
    /// Some pair is at distance more than 2.
    NotDiam2,
}

/// Classify `s` (vertices as bit strings of length `n`) by the structure of
/// sets of diameter at most 2 in the hypercube.
pub fn classify_q_n_diam2_set(n: usize, s: &VertexSet) -> Result<QnDiam2Class> {
    if n > 9 {
        return Err(KdmvError::Domain(format!("Q_{n} exceeds the vertex limit")));
    }
    let size = 1usize << n;
    let vs = s.to_vec();
    if let Some(&bad) = vs.iter().find(|&&v| v >= size) {
        return Err(KdmvError::Domain(format!("vertex {bad} is not in Q_{n}")));
    }
    let dist = |a: usize, b: usize| (a ^ b).count_ones();
    for (i, &a) in vs.iter().enumerate() {
        if vs[i + 1..].iter().any(|&b| dist(a, b) > 2) {
            return Ok(QnDiam2Class::NotDiam2);
        }
    }
    if let Some(v) = (0..size).find(|&v| vs.iter().all(|&x| dist(v, x) <= 1)) {
        return Ok(QnDiam2Class::WithinClosedNeighborhood(v));
    }
    if vs.len() == 4 {
        let or = vs.iter().fold(0, |acc, &x| acc | (x ^ vs[0]));
        let varying = or.count_ones();
        let degrees: Vec<usize> = vs
            .iter()
            .map(|&a| vs.iter().filter(|&&b| dist(a, b) == 1).count())
            .collect();
        if varying == 2 && degrees.iter().all(|&d| d == 2) {
            return Ok(QnDiam2Class::Square);
        }
        let pairwise_two = vs
            .iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| dist(a, b) == 2));
        if varying == 3 && pairwise_two {
            return Ok(QnDiam2Class::Q3PartiteSet);
        }
    }
    Err(KdmvError::Domain(format!(
        "unclassified diameter-2 set {vs:?} in Q_{n}"
    )))
}
