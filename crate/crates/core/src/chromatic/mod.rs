//! Partitions into kDMV sets, clique covers, and their exact solvers.

mod engine;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::domination::gamma_k_lower_bound;
use crate::error::{KdmvError, Result};
use crate::graph::{all_pairs_distances, exact_distance_graph, Graph, INF};
use crate::solve::{Budget, SolveResult, Status};
use crate::visibility::{geodesic_avoiding_exists, max_kdmv_with, Geodesics};

use engine::{min_partition, CliqueRule, KdmvRule};

/// A partition of `{0, .., n-1}`, stored as a colour per vertex.
///
/// Colours are `0..num_classes()` and always normalised: classes are numbered
/// in order of their smallest member.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    color: Vec<usize>,
    classes: usize,
}

impl Coloring {
    /// Any labelling; colours are renumbered by first appearance.
    pub fn from_colors(colors: &[usize]) -> Self {
        let mut remap = std::collections::HashMap::new();
        let color = colors
            .iter()
            .map(|c| {
                let next = remap.len();
                *remap.entry(*c).or_insert(next)
            })
            .collect();
        Coloring {
            color,
            classes: remap.len(),
        }
    }

    /// From disjoint classes covering `0..n`. Empty classes are ignored.
    pub fn from_classes(n: usize, classes: &[VertexSet]) -> Result<Self> {
        let mut color = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            for v in class.iter() {
                if v >= n {
                    return Err(KdmvError::Domain(format!("vertex {v} out of range for n = {n}")));
                }
                if color[v] != usize::MAX {
                    return Err(KdmvError::Domain(format!("vertex {v} lies in two classes")));
                }
                color[v] = i;
            }
        }
        if let Some(v) = color.iter().position(|&c| c == usize::MAX) {
            return Err(KdmvError::Domain(format!("vertex {v} is in no class")));
        }
        Ok(Coloring::from_colors(&color))
    }

    /// Every vertex in one class.
    pub fn single_class(n: usize) -> Self {
        Coloring {
            color: vec![0; n],
            classes: usize::from(n > 0),
        }
    }

    pub fn n(&self) -> usize {
        self.color.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes
    }

    pub fn color(&self, v: usize) -> usize {
        self.color[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.color
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::new(); self.classes];
        for (v, &c) in self.color.iter().enumerate() {
            out[c].insert(v);
        }
        out
    }

    pub fn class_lists(&self) -> Vec<Vec<usize>> {
        self.classes().iter().map(|c| c.to_vec()).collect()
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring{:?}", self.class_lists())
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.class_lists().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let lists = Vec::<Vec<usize>>::deserialize(d)?;
        let n = lists.iter().map(|c| c.len()).sum();
        let classes: Vec<VertexSet> = lists.iter().map(|c| c.iter().collect()).collect();
        Coloring::from_classes(n, &classes).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationReason {
    DistanceExceedsK,
    NoAvoidingGeodesic,
}

/// First failing pair of a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub class: usize,
    pub u: usize,
    pub v: usize,
    pub reason: ViolationReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Ok,
    Violations(Vec<Violation>),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

/// Check that every class of `c` is a kDMV set of `g`.
pub fn verify_kdmv_coloring(g: &Graph, k: u32, c: &Coloring) -> Verdict {
    assert_eq!(g.n(), c.n(), "coloring does not cover the graph");
    let dm = all_pairs_distances(g);
    let mut out = Vec::new();
    'classes: for (i, class) in c.classes().iter().enumerate() {
        let vs = class.to_vec();
        for (a, &u) in vs.iter().enumerate() {
            for &v in &vs[a + 1..] {
                let reason = if dm.get(u, v) > k {
                    Some(ViolationReason::DistanceExceedsK)
                } else if !geodesic_avoiding_exists(g, &dm, u, v, class).unwrap_or(false) {
                    Some(ViolationReason::NoAvoidingGeodesic)
                } else {
                    None
                };
                if let Some(reason) = reason {
                    out.push(Violation { class: i, u, v, reason });
                    continue 'classes;
                }
            }
        }
    }
    if out.is_empty() {
        Verdict::Ok
    } else {
        Verdict::Violations(out)
    }
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(KdmvError::Domain("k must be positive".into()))
    } else {
        Ok(())
    }
}

const LOWER_BOUND_CAP: u64 = 500_000;

/// `chi_mu_k` of a connected graph.
fn chi_connected(g: &Graph, k: u32, budget: &mut Budget) -> engine::Outcome {
    let n = g.n();
    let geo = Geodesics::new(g);
    let diam = geo.dm().diameter();
    let k = k.min(diam.max(1));

    // the seed clique inside the engine is a set of vertices pairwise at
    // distance > k; for k = 2 that is exactly a 2-packing
    let mut sub = budget.sub(LOWER_BOUND_CAP);
    let mu = max_kdmv_with(&geo, k, &mut sub);
    budget.charge(&sub);
    let mu_upper = mu.bounds().1.max(1);
    let mut lower = n.div_ceil(mu_upper);

    let mut sub = budget.sub(LOWER_BOUND_CAP);
    lower = lower.max(gamma_k_lower_bound(geo.dm(), k, &mut sub));
    budget.charge(&sub);

    min_partition(&KdmvRule::new(&geo, k), n, VertexSet::full(n), lower, budget)
}

fn assemble(n: usize, parts: Vec<(Vec<usize>, engine::Outcome)>, budget: &Budget) -> Result<SolveResult<Coloring>> {
    let mut classes = Vec::new();
    let mut lower = 0;
    let mut exact = true;
    for (map, out) in parts {
        lower += out.lower;
        exact &= out.exact;
        classes.extend(
            out.classes
                .iter()
                .map(|c| c.iter().map(|v| map[v]).collect::<VertexSet>()),
        );
    }
    let coloring = Coloring::from_classes(n, &classes)?;
    let value = coloring.num_classes();
    let status = if exact {
        Status::Exact
    } else {
        Status::BoundsOnly {
            lower: lower.min(value),
            upper: value,
        }
    };
    Ok(SolveResult {
        value,
        witness: coloring,
        status,
        nodes: budget.used(),
    })
}

/// Exact `chi_mu_k(g)`. Disconnected graphs are solved per component and
/// summed, since no class can span two components.
pub fn chi_mu_k_exact(g: &Graph, k: u32, budget: u64) -> Result<SolveResult<Coloring>> {
    check_k(k)?;
    let mut b = Budget::new(budget);
    let mut parts = Vec::new();
    for comp in g.components() {
        let (h, map) = g.induced(&comp);
        let out = chi_connected(&h, k, &mut b);
        parts.push((map, out));
    }
    assemble(g.n(), parts, &b)
}

/// Minimum partition of `g` into cliques of `h` (same vertex set).
fn clique_cover_of(h: &Graph, budget: u64) -> Result<SolveResult<Coloring>> {
    let mut b = Budget::new(budget);
    let n = h.n();
    let out = min_partition(&CliqueRule::new(h.adjacency()), n, VertexSet::full(n), 0, &mut b);
    assemble(n, vec![((0..n).collect(), out)], &b)
}

/// Clique cover number `theta(g)`, i.e. the chromatic number of the complement.
pub fn clique_cover_theta(g: &Graph, budget: u64) -> Result<SolveResult<Coloring>> {
    clique_cover_of(g, budget)
}

/// Minimum partition into independent 2DMV sets, computed as the clique cover
/// number of the exact distance-2 graph.
pub fn chi_i_mu2_exact(g: &Graph, budget: u64) -> Result<SolveResult<Coloring>> {
    clique_cover_of(&exact_distance_graph(g, 2), budget)
}

/// First-fit kDMV colouring in vertex index order.
pub fn greedy_kdmv_upper(g: &Graph, k: u32) -> Coloring {
    let geo = Geodesics::new(g);
    let k = k.max(1);
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in 0..g.n() {
        match classes
            .iter()
            .position(|c| c.iter().all(|u| geo.dist(u, v) <= k && geo.dist(u, v) < INF) && geo.can_extend(c, v, k))
        {
            Some(i) => classes[i].insert(v),
            None => classes.push(VertexSet::singleton(v)),
        }
    }
    let c = Coloring::from_classes(g.n(), &classes).expect("first-fit yields a partition");
    debug_assert!(verify_kdmv_coloring(g, k, &c).is_ok());
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn g(s: &str) -> Graph {
        generate(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn chi(s: &str, k: u32) -> usize {
        let r = chi_mu_k_exact(&g(s), k, 10_000_000).unwrap();
        assert!(r.is_exact(), "{s} not solved");
        assert!(verify_kdmv_coloring(&g(s), k, &r.witness).is_ok());
        r.value
    }

    #[test]
    fn coloring_normalisation() {
        let c = Coloring::from_colors(&[5, 2, 5, 7]);
        assert_eq!(c.colors(), &[0, 1, 0, 2]);
        assert_eq!(serde_json::to_string(&c).unwrap(), "[[0,2],[1],[3]]");
        let back: Coloring = serde_json::from_str("[[0,2],[1],[3]]").unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Coloring>("[[0,1],[1]]").is_err());
        let two: Vec<VertexSet> = vec![[1].iter().collect(), [0].iter().collect()];
        assert_eq!(Coloring::from_classes(2, &two).unwrap().colors(), &[0, 1]);
    }

    #[test]
    fn verification_reports_reasons() {
        let p3 = g("path:3");
        match verify_kdmv_coloring(&p3, 2, &Coloring::single_class(3)) {
            Verdict::Violations(v) => assert_eq!(v[0].reason, ViolationReason::NoAvoidingGeodesic),
            Verdict::Ok => panic!("P_3 in one class is not 2DMV"),
        }
        match verify_kdmv_coloring(&g("path:4"), 2, &Coloring::from_colors(&[0, 1, 1, 0])) {
            Verdict::Violations(v) => assert_eq!(v[0].reason, ViolationReason::DistanceExceedsK),
            Verdict::Ok => panic!("endpoints of P_4 are at distance 3"),
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(chi("path:5", 1), 3);
        assert_eq!(chi("path:5", 2), 3);
        assert_eq!(chi("cycle:6", 2), 2);
        assert_eq!(chi("cycle:7", 2), 4);
        assert_eq!(chi("complete:5", 2), 1);
        assert_eq!(chi("cartesian(complete:3,complete:3)", 1), 3);
        let theta = clique_cover_theta(&g("cycle:5"), 1000).unwrap();
        assert_eq!(theta.value, 3);
        assert_eq!(chi_i_mu2_exact(&g("star:4"), 1000).unwrap().value, 2);
        assert_eq!(chi_i_mu2_exact(&g("complete:4"), 1000).unwrap().value, 4);
    }

    #[test]
    fn disconnected_graphs_sum_components() {
        let two_paths = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let r = chi_mu_k_exact(&two_paths, 2, 100_000).unwrap();
        assert_eq!(r.value, 4);
        assert!(verify_kdmv_coloring(&two_paths, 2, &r.witness).is_ok());
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_kdmv_upper(&g("complete:5"), 2).num_classes(), 1);
        assert_eq!(greedy_kdmv_upper(&g("path:4"), 2).num_classes(), 2);
    }

    #[test]
    fn zero_k_is_rejected() {
        assert!(chi_mu_k_exact(&g("path:3"), 0, 10).is_err());
    }
}
