//! Domination-type parameters and the partitions built from dominating sets.

use crate::bitset::VertexSet;
use crate::chromatic::{verify_kdmv_coloring, Coloring, Verdict};
use crate::clique::max_clique;
use crate::error::{KdmvError, Result};
use crate::graph::{all_pairs_distances, girth, DistanceMatrix, Graph};
use crate::solve::{Budget, SolveResult, Status};

/// Minimum set cover: pick vertices `v` so the union of `cov[v]` is `0..n`.
struct Cover<'a> {
    cov: &'a [VertexSet],
    /// `by[u]`: vertices whose cover contains `u`.
    by: Vec<VertexSet>,
    best: VertexSet,
    budget: &'a mut Budget,
    aborted: bool,
}

struct CoverOutcome {
    set: VertexSet,
    lower: usize,
    exact: bool,
}

fn min_cover(cov: &[VertexSet], budget: &mut Budget) -> CoverOutcome {
    let n = cov.len();
    let mut by = vec![VertexSet::new(); n];
    for (v, c) in cov.iter().enumerate() {
        for u in c.iter() {
            by[u].insert(v);
        }
    }
    let universe = VertexSet::full(n);
    let best = greedy_cover(cov, universe);
    let root_lower = cover_lower(cov, &by, universe, VertexSet::new());
    let mut search = Cover {
        cov,
        by,
        best,
        budget,
        aborted: false,
    };
    if search.best.len() > root_lower {
        search.dfs(VertexSet::new(), universe, VertexSet::new(), root_lower);
    }
    let exact = !search.aborted;
    let set = search.best;
    CoverOutcome {
        lower: if exact { set.len() } else { root_lower },
        set,
        exact,
    }
}

fn greedy_cover(cov: &[VertexSet], universe: VertexSet) -> VertexSet {
    let mut chosen = VertexSet::new();
    let mut left = universe;
    while !left.is_empty() {
        let v = (0..cov.len())
            .max_by_key(|&v| ((cov[v] & left).len(), std::cmp::Reverse(v)))
            .expect("nonempty");
        chosen.insert(v);
        left -= cov[v];
    }
    chosen
}

/// Lower bound on the extra vertices needed to cover `left` without using
/// `excluded`: the larger of a counting bound and a greedy packing of
/// vertices with disjoint candidate sets.
fn cover_lower(cov: &[VertexSet], by: &[VertexSet], left: VertexSet, excluded: VertexSet) -> usize {
    if left.is_empty() {
        return 0;
    }
    let max_gain = (0..cov.len())
        .filter(|&v| !excluded.contains(v))
        .map(|v| (cov[v] & left).len())
        .max()
        .unwrap_or(0);
    if max_gain == 0 {
        return usize::MAX / 2;
    }
    let counting = left.len().div_ceil(max_gain);
    let mut used = VertexSet::new();
    let mut packing = 0;
    for u in left.iter() {
        let cand = by[u] - excluded;
        if !cand.intersects(&used) {
            used |= cand;
            packing += 1;
        }
    }
    counting.max(packing)
}

impl Cover<'_> {
    fn dfs(&mut self, chosen: VertexSet, left: VertexSet, mut excluded: VertexSet, lower: usize) {
        if !self.budget.tick() {
            self.aborted = true;
            return;
        }
        if left.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen;
            }
            return;
        }
        if chosen.len() + lower >= self.best.len() {
            return;
        }
        let u = left
            .iter()
            .min_by_key(|&u| (self.by[u] - excluded).len())
            .expect("left is nonempty");
        let mut cands: Vec<usize> = (self.by[u] - excluded).to_vec();
        cands.sort_by_key(|&v| (std::cmp::Reverse((self.cov[v] & left).len()), v));
        for v in cands {
            let left2 = left - self.cov[v];
            let lb = cover_lower(self.cov, &self.by, left2, excluded);
            if chosen.len() + 1 + lb < self.best.len() {
                self.dfs(chosen.with(v), left2, excluded, lb);
                if self.aborted {
                    return;
                }
            }
            // solutions containing v have been explored
            excluded.insert(v);
        }
    }
}

fn cover_result(out: CoverOutcome, budget: &Budget) -> SolveResult<VertexSet> {
    let value = out.set.len();
    let status = if out.exact {
        Status::Exact
    } else {
        Status::BoundsOnly {
            lower: out.lower,
            upper: value,
        }
    };
    SolveResult {
        value,
        witness: out.set,
        status,
        nodes: budget.used(),
    }
}

/// Domination number `gamma(g)`.
pub fn gamma_exact(g: &Graph, budget: u64) -> SolveResult<VertexSet> {
    let cov: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_nbhd(v)).collect();
    let mut b = Budget::new(budget);
    let out = min_cover(&cov, &mut b);
    cover_result(out, &b)
}

/// Total domination number `gamma_t(g)`.
pub fn gamma_t_exact(g: &Graph, budget: u64) -> Result<SolveResult<VertexSet>> {
    if g.has_isolated_vertex() {
        return Err(KdmvError::Domain(
            "total domination needs a graph without isolated vertices".into(),
        ));
    }
    let cov: Vec<VertexSet> = g.adjacency().to_vec();
    let mut b = Budget::new(budget);
    let out = min_cover(&cov, &mut b);
    Ok(cover_result(out, &b))
}

/// Distance-`k` domination number `gamma_k(g)`.
pub fn gamma_k_exact(g: &Graph, k: u32, budget: u64) -> Result<SolveResult<VertexSet>> {
    if k == 0 {
        return Err(KdmvError::Domain("k must be positive".into()));
    }
    let dm = all_pairs_distances(g);
    let cov: Vec<VertexSet> = (0..g.n()).map(|v| dm.ball(v, k)).collect();
    let mut b = Budget::new(budget);
    let out = min_cover(&cov, &mut b);
    Ok(cover_result(out, &b))
}

/// Proven lower bound on `gamma_k` from a budgeted exact run.
pub(crate) fn gamma_k_lower_bound(dm: &DistanceMatrix, k: u32, budget: &mut Budget) -> usize {
    let cov: Vec<VertexSet> = (0..dm.n()).map(|v| dm.ball(v, k)).collect();
    min_cover(&cov, budget).lower
}

/// 2-packing number `rho_2(g)`: most vertices with pairwise disjoint closed
/// neighbourhoods, i.e. pairwise at distance at least 3.
pub fn rho2_exact(g: &Graph, budget: u64) -> SolveResult<VertexSet> {
    let dm = all_pairs_distances(g);
    let n = g.n();
    let far: Vec<VertexSet> = (0..n)
        .map(|u| (0..n).filter(|&v| dm.get(u, v) >= 3).collect())
        .collect();
    let mut b = Budget::new(budget);
    let out = max_clique(&far, VertexSet::full(n), &mut b);
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
        nodes: b.used(),
    }
}

fn check_total_dominating(g: &Graph, d: &[usize]) -> Result<()> {
    if g.has_isolated_vertex() {
        return Err(KdmvError::Domain("graph has an isolated vertex".into()));
    }
    if let Some(&bad) = d.iter().find(|&&v| v >= g.n()) {
        return Err(KdmvError::Domain(format!("vertex {bad} out of range")));
    }
    let ds: VertexSet = d.iter().collect();
    if let Some(v) = (0..g.n()).find(|&v| !g.adj(v).intersects(&ds)) {
        return Err(KdmvError::Domain(format!(
            "vertex {v} has no neighbour in the given set"
        )));
    }
    Ok(())
}

/// `D_i = N(v_i) \ (N(v_1) u .. u N(v_{i-1}))`, empty parts dropped.
fn neighbourhood_parts(g: &Graph, d: &[usize]) -> Vec<VertexSet> {
    let mut seen = VertexSet::new();
    let mut parts = Vec::new();
    for &v in d {
        let part = *g.adj(v) - seen;
        seen |= part;
        if !part.is_empty() {
            parts.push(part);
        }
    }
    parts
}

pub(crate) fn ensure_kdmv(g: &Graph, k: u32, c: &Coloring) -> Result<()> {
    match verify_kdmv_coloring(g, k, c) {
        Verdict::Ok => Ok(()),
        Verdict::Violations(v) => Err(KdmvError::Construction(format!("{:?}", v[0]))),
    }
}

/// 2DMV colouring from a total dominating set `d` (taken in the given order):
/// class `i` is `N(v_i)` minus the earlier neighbourhoods.
pub fn total_dom_partition(g: &Graph, d: &[usize]) -> Result<Coloring> {
    check_total_dominating(g, d)?;
    let c = Coloring::from_classes(g.n(), &neighbourhood_parts(g, d))?;
    ensure_kdmv(g, 2, &c)?;
    Ok(c)
}

/// The same rule on graphs of girth at least 7, where every class is also
/// independent.
pub fn neighborhood_i2dmv_partition(g: &Graph, d: &[usize]) -> Result<Coloring> {
    if girth(g).is_some_and(|c| c < 7) {
        return Err(KdmvError::Domain("girth must be at least 7".into()));
    }
    check_total_dominating(g, d)?;
    let parts = neighbourhood_parts(g, d);
    for p in &parts {
        if p.iter().any(|v| g.adj(v).intersects(p)) {
            return Err(KdmvError::Construction("class is not independent".into()));
        }
    }
    let c = Coloring::from_classes(g.n(), &parts)?;
    ensure_kdmv(g, 2, &c)?;
    Ok(c)
}

/// A set whose open neighbourhoods partition `V(g)`, if one exists.
pub fn efficient_open_dominating_set(g: &Graph) -> Option<VertexSet> {
    fn search(g: &Graph, covered: VertexSet, chosen: VertexSet, n: usize) -> Option<VertexSet> {
        let Some(u) = covered.complement(n).first() else {
            return Some(chosen);
        };
        // u must be covered by exactly one neighbour whose neighbourhood is fresh
        for x in g.adj(u).iter() {
            if chosen.contains(x) || g.adj(x).intersects(&covered) {
                continue;
            }
            if let Some(found) = search(g, covered | g.adj(x), chosen.with(x), n) {
                return Some(found);
            }
        }
        None
    }
    let n = g.n();
    if g.has_isolated_vertex() {
        return None;
    }
    search(g, VertexSet::new(), VertexSet::new(), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn g(s: &str) -> Graph {
        generate(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn paths_and_cliques() {
        for n in 1usize..=15 {
            let r = gamma_exact(&g(&format!("path:{n}")), 1_000_000);
            assert!(r.is_exact());
            assert_eq!(r.value, n.div_ceil(3), "gamma(P_{n})");
        }
        for n in 2..=6 {
            assert_eq!(gamma_t_exact(&g(&format!("complete:{n}")), 1000).unwrap().value, 2);
        }
        assert!(gamma_t_exact(&Graph::empty(3).unwrap(), 10).is_err());
        assert_eq!(gamma_k_exact(&g("path:7"), 3, 1000).unwrap().value, 1);
        assert_eq!(gamma_k_exact(&g("path:8"), 3, 1000).unwrap().value, 2);
    }

    #[test]
    fn packings() {
        assert_eq!(rho2_exact(&g("cycle:4"), 1000).value, 1);
        assert_eq!(rho2_exact(&g("path:4"), 1000).value, 2);
        assert_eq!(rho2_exact(&g("complete:5"), 1000).value, 1);
        assert_eq!(rho2_exact(&g("corona(cycle:5)"), 1000).value, 5);
    }

    #[test]
    fn neighbourhood_partitions() {
        let star = g("star:4");
        let c = total_dom_partition(&star, &[0, 1]).unwrap();
        assert_eq!(c.num_classes(), 2);
        assert!(total_dom_partition(&star, &[1, 2]).is_err());
        let c6 = g("cycle:6");
        let d = gamma_t_exact(&c6, 1000).unwrap();
        assert_eq!(d.value, 4);
        assert!(total_dom_partition(&c6, &d.witness.to_vec()).is_ok());
        let c7 = g("cycle:7");
        let d = gamma_t_exact(&c7, 1000).unwrap().witness.to_vec();
        assert!(neighborhood_i2dmv_partition(&c7, &d).is_ok());
        assert!(neighborhood_i2dmv_partition(&c6, &[0, 1, 3, 4]).is_err());
    }

    #[test]
    fn efficient_open_domination() {
        let eod = efficient_open_dominating_set(&g("cycle:4")).unwrap();
        assert_eq!(eod.len(), 2);
        assert!(efficient_open_dominating_set(&g("complete:3")).is_none());
        let torus = g("cartesian(cycle:8,cycle:8)");
        assert_eq!(efficient_open_dominating_set(&torus).unwrap().len(), 16);
    }
}
