//! Closed-form values of `chi_{mu_k}` and explicit colourings that attain
//! or bound them.
//!
//! Every builder verifies its output with [`verify_kdmv_coloring`] and
//! returns [`KdmvError::Construction`] instead of an invalid colouring.
//!
//! [`verify_kdmv_coloring`]: crate::chromatic::verify_kdmv_coloring

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::chromatic::{verify_kdmv_coloring, Coloring};
use crate::domination::ensure_kdmv;
use crate::error::{KdmvError, Result};
use crate::graph::{
    all_pairs_distances, blocks, center_info, center_stripped, corona, generate, girth, product, FamilySpec, Graph,
    ProductKind,
};

/// Known closed form for `chi_{mu_k}` of the graph described by `spec`, or
/// `None` when no formula applies.
pub fn formula_chi_mu_k(spec: &FamilySpec, k: u32) -> Option<usize> {
    if k == 0 {
        return None;
    }
    let k = k as usize;
    match spec {
        FamilySpec::Path(n) if *n >= 1 => return Some(n.div_ceil(2)),
        FamilySpec::Cycle(n) if *n >= 3 => {
            return Some(if *n <= 3 * k { n.div_ceil(3) } else { n.div_ceil(2) });
        }
        FamilySpec::Strong(a, b) => {
            if let (FamilySpec::Path(n), FamilySpec::Complete(m)) = (a.as_ref(), b.as_ref()) {
                if let Some(v) = strong_path_complete_value(*n, *m, k) {
                    return Some(v);
                }
            }
        }
        FamilySpec::Cartesian(a, b) => {
            if let (FamilySpec::Cycle(m), FamilySpec::Cycle(n)) = (a.as_ref(), b.as_ref()) {
                if k == 2 && m % 4 == 0 && n % 4 == 0 && *m >= 4 && *n >= 4 {
                    return Some(m * n / 4);
                }
            }
        }
        _ => {}
    }
    // block graphs once k reaches the diameter
    let g = generate(spec).ok()?;
    if g.n() == 0 || !g.is_connected() || !blocks(&g).ok()?.is_block_graph {
        return None;
    }
    let d = all_pairs_distances(&g).diameter() as usize;
    (k >= d).then(|| (d + 1).div_ceil(2))
}

/// `chi_{mu_k}(P_n strong K_m)` for `n >= 4`, `m >= 2`, `2 <= k <= n - 2`.
fn strong_path_complete_value(n: usize, m: usize, k: usize) -> Option<usize> {
    if n < 4 || m < 2 || k < 2 || k > n - 2 {
        return None;
    }
    let eta = n / (k + 2);
    Some(match n % (k + 2) {
        0 => 2 * eta,
        1 | 2 => 2 * eta + 1,
        _ => 2 * eta + 2,
    })
}

fn built(spec: FamilySpec) -> Result<Graph> {
    generate(&spec)
}

fn verified(g: &Graph, k: u32, colors: &[usize]) -> Result<Coloring> {
    let c = Coloring::from_colors(colors);
    ensure_kdmv(g, k, &c)?;
    Ok(c)
}

/// Consecutive pairs `{v_1, v_2}, {v_3, v_4}, ..` on `path:n`.
pub fn color_path(n: usize, k: u32) -> Result<Coloring> {
    check_k(k)?;
    let g = built(FamilySpec::Path(n))?;
    let colors: Vec<usize> = (0..n).map(|i| i / 2).collect();
    verified(&g, k, &colors)
}

/// `ceil(n/3)` colours via `f(v_i) = f(v_{m+i}) = f(v_{2m+i}) = i` when
/// `n <= 3k`, consecutive pairs otherwise.
pub fn color_cycle(n: usize, k: u32) -> Result<Coloring> {
    check_k(k)?;
    let g = built(FamilySpec::Cycle(n))?;
    let colors: Vec<usize> = if n <= 3 * k as usize {
        let m = n.div_ceil(3);
        (0..n).map(|i| i % m).collect()
    } else {
        (0..n).map(|i| i / 2).collect()
    };
    verified(&g, k, &colors)
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(KdmvError::Domain("k must be positive".into()));
    }
    Ok(())
}

/// Block colouring of `P_n strong K_m` (vertex `(i, j)` is `i * m + j`).
///
/// Fibres are grouped into blocks of `k + 2`. In each block the first fibre
/// and `m - 1` vertices of each inner fibre get one colour, the rest the
/// other. A tail of one or two fibres is a clique and gets one colour; a
/// longer tail is coloured like a block.
pub fn color_strong_path_complete(n: usize, m: usize, k: u32) -> Result<Coloring> {
    let ku = k as usize;
    let Some(expected) = strong_path_complete_value(n, m, ku) else {
        return Err(KdmvError::Spec(format!(
            "need n >= 4, m >= 2 and 2 <= k <= n - 2 (got n = {n}, m = {m}, k = {k})"
        )));
    };
    let g = built(FamilySpec::strong(FamilySpec::Path(n), FamilySpec::Complete(m)))?;
    let width = ku + 2;
    let mut colors = vec![0; n * m];
    let mut paint_block = |start: usize, len: usize, base: usize| {
        for local in 0..len {
            for j in 0..m {
                let second = local == len - 1 || (local > 0 && j == 0);
                colors[(start + local) * m + j] = base + usize::from(second);
            }
        }
    };
    let eta = n / width;
    for b in 0..eta {
        paint_block(b * width, width, 2 * b);
    }
    let tail = n % width;
    match tail {
        0 => {}
        1 | 2 => {
            for i in eta * width..n {
                for j in 0..m {
                    colors[i * m + j] = 2 * eta;
                }
            }
        }
        _ => paint_block(eta * width, tail, 2 * eta),
    }
    let c = verified(&g, k, &colors)?;
    if c.num_classes() != expected {
        return Err(KdmvError::Construction(format!(
            "{} classes, expected {expected}",
            c.num_classes()
        )));
    }
    Ok(c)
}

/// Classes `V_i x W_j` on `G strong H` from kDMV colourings of the factors.
pub fn product_coloring_strong(g: &Graph, cg: &Coloring, h: &Graph, ch: &Coloring, k: u32) -> Result<Coloring> {
    check_k(k)?;
    check_input(g, k, cg, "first factor")?;
    check_input(h, k, ch, "second factor")?;
    let p = product(ProductKind::Strong, g, h)?;
    let t = ch.num_classes();
    let colors: Vec<usize> = (0..p.n())
        .map(|x| cg.color(x / h.n()) * t + ch.color(x % h.n()))
        .collect();
    verified(&p, k, &colors)
}

fn check_input(g: &Graph, k: u32, c: &Coloring, what: &str) -> Result<()> {
    if c.n() != g.n() {
        return Err(KdmvError::Domain(format!(
            "{what}: colouring has {} vertices, graph has {}",
            c.n(),
            g.n()
        )));
    }
    if !verify_kdmv_coloring(g, k, c).is_ok() {
        return Err(KdmvError::Domain(format!("{what}: not a {k}DMV colouring")));
    }
    Ok(())
}

fn lex_lift(g: &Graph, c: &Coloring, h: &Graph) -> Result<Coloring> {
    let p = product(ProductKind::Lex, g, h)?;
    let colors: Vec<usize> = (0..p.n()).map(|x| c.color(x / h.n())).collect();
    verified(&p, 2, &colors)
}

/// Classes `Q_i x V(H)` on `G lex H` from a partition of `G` into
/// independent 2DMV sets.
pub fn lex_coloring_from_i2dmv(g: &Graph, partition: &Coloring, h: &Graph) -> Result<Coloring> {
    if g.n() < 2 || !g.is_connected() {
        return Err(KdmvError::Domain(
            "G must be connected with at least two vertices".into(),
        ));
    }
    check_input(g, 2, partition, "partition")?;
    for class in partition.classes() {
        if class.iter().any(|v| g.adj(v).intersects(&class)) {
            return Err(KdmvError::Domain("partition class is not independent".into()));
        }
    }
    lex_lift(g, partition, h)
}

/// Classes `A_i x V(H)` on `G lex H` from a 2DMV colouring of `G`, for `G`
/// with minimum degree at least 2 and girth at least 5.
pub fn lex_coloring_from_2dmv(g: &Graph, cg: &Coloring, h: &Graph) -> Result<Coloring> {
    if g.n() == 0 || g.min_degree() < 2 {
        return Err(KdmvError::Domain("minimum degree must be at least 2".into()));
    }
    if girth(g).is_some_and(|c| c < 5) {
        return Err(KdmvError::Domain("girth must be at least 5".into()));
    }
    check_input(g, 2, cg, "colouring of G")?;
    lex_lift(g, cg, h)
}

/// `ceil((d+1)/2)` colours forming a `(d-1)`DMV colouring of a block graph
/// of diameter `d`, built level by level from the center.
///
/// Components holding radial vertices come first, each group ordered by
/// smallest vertex.
pub fn block_graph_coloring(g: &Graph) -> Result<Coloring> {
    if g.n() == 0 || !g.is_connected() {
        return Err(KdmvError::Domain("block graph must be connected and nonempty".into()));
    }
    if !blocks(g)?.is_block_graph {
        return Err(KdmvError::Domain("not a block graph".into()));
    }
    let dm = all_pairs_distances(g);
    let info = center_info(g, &dm)?;
    let d = info.diameter as usize;
    if d < 2 {
        return Err(KdmvError::Domain("diameter must be at least 2".into()));
    }
    let target = (d + 1).div_ceil(2);
    if info.deg_star > target {
        return Err(KdmvError::Condition(format!(
            "deg* = {} exceeds {target}",
            info.deg_star
        )));
    }
    let r = info.radius as usize;
    let center = info.center;
    let level: Vec<usize> = (0..g.n())
        .map(|x| center.iter().map(|c| dm.get(x, c)).min().unwrap() as usize)
        .collect();

    let lone = (center.len() == 1).then(|| center.first().unwrap());
    let mut comps: Vec<VertexSet> = center_stripped(g, &center)
        .components()
        .into_iter()
        .filter(|c| lone.is_none_or(|v| !c.contains(v)))
        .collect();
    comps.sort_by_key(|c| (!c.intersects(&info.radial_vertices), c.first()));
    let p = info.deg_star;
    let ncomp = comps.len();

    let mut colors = vec![0usize; g.n()];
    // comps are 1-based below to follow the level formulas
    let mut set = |j: usize, lvl: usize, col: usize| {
        for x in comps[j - 1].iter().filter(|&x| level[x] == lvl) {
            colors[x] = col;
        }
    };
    match lone {
        None => {
            for i in 1..=p {
                set(i, r - 1, i);
            }
            for i in 1..=p.min(r - 1) {
                for j in i + 1..=ncomp {
                    set(j, r - 1 - i, i);
                }
            }
            for i in 2..=p.min(r) {
                for j in 1..i {
                    set(j, r - i, i);
                }
            }
            if p < r {
                for (x, c) in colors.iter_mut().enumerate() {
                    if *c == 0 && level[x] < r - p {
                        *c = r - level[x];
                    }
                }
            }
        }
        Some(c) => {
            let full = p == r + 1;
            for i in 1..=p {
                set(i, r, i);
            }
            for i in 1..=(if full { p - 2 } else { p - 1 }) {
                for j in i + 1..=ncomp {
                    set(j, r - i, i);
                }
            }
            for i in 2..=(if full { p - 1 } else { p }) {
                for j in 1..i {
                    set(j, r + 1 - i, i);
                }
            }
            if full {
                colors[c] = p;
            } else {
                for (x, col) in colors.iter_mut().enumerate() {
                    if *col == 0 && level[x] <= r - p {
                        *col = r + 1 - level[x];
                    }
                }
            }
        }
    }
    if let Some(x) = colors.iter().position(|&c| c == 0) {
        return Err(KdmvError::Construction(format!("vertex {x} left uncoloured")));
    }
    let c = verified(g, (d - 1) as u32, &colors)?;
    if c.num_classes() != target {
        return Err(KdmvError::Construction(format!(
            "{} classes, expected {target}",
            c.num_classes()
        )));
    }
    Ok(c)
}

/// Each vertex of `Q_n` joins the closed neighbourhood of the first vertex
/// of `d` that dominates it.
pub fn hypercube_neighborhood_coloring(n: usize, d: &[usize]) -> Result<Coloring> {
    let g = built(FamilySpec::Hypercube(n))?;
    if let Some(&bad) = d.iter().find(|&&v| v >= g.n()) {
        return Err(KdmvError::Domain(format!("vertex {bad} out of range")));
    }
    let mut colors = vec![usize::MAX; g.n()];
    for (i, &v) in d.iter().enumerate() {
        for x in g.closed_nbhd(v).iter() {
            if colors[x] == usize::MAX {
                colors[x] = i;
            }
        }
    }
    if let Some(x) = colors.iter().position(|&c| c == usize::MAX) {
        return Err(KdmvError::Domain(format!("vertex {x} is not dominated")));
    }
    verified(&g, 2, &colors)
}

/// Open neighbourhoods of the efficient open dominating set
/// `{(i, j) : i = 0, j in {0, 1}} u {(i, j) : i = 2, j in {2, 3}}` (mod 4)
/// of `C_m box C_n`; vertex `(i, j)` is `i * n + j`.
pub fn torus_eod_coloring(m: usize, n: usize) -> Result<Coloring> {
    if m < 4 || n < 4 || !m.is_multiple_of(4) || !n.is_multiple_of(4) {
        return Err(KdmvError::Spec(format!(
            "torus needs m, n >= 4 divisible by 4 (got {m}, {n})"
        )));
    }
    let g = built(FamilySpec::cartesian(FamilySpec::Cycle(m), FamilySpec::Cycle(n)))?;
    let mut colors = vec![usize::MAX; m * n];
    let mut next = 0;
    for i in 0..m {
        for j in 0..n {
            let inside = matches!((i % 4, j % 4), (0, 0) | (0, 1) | (2, 2) | (2, 3));
            if !inside {
                continue;
            }
            for x in g.adj(i * n + j).iter() {
                if colors[x] != usize::MAX {
                    return Err(KdmvError::Construction("neighbourhoods overlap".into()));
                }
                colors[x] = next;
            }
            next += 1;
        }
    }
    if colors.contains(&usize::MAX) {
        return Err(KdmvError::Construction("neighbourhoods do not cover".into()));
    }
    verified(&g, 2, &colors)
}

/// At most `ceil(n/2)` classes for a connected graph: leaf pairs are peeled
/// off a BFS spanning tree rooted at 0, each pair getting a new colour.
pub fn tree_half_coloring(g: &Graph) -> Result<Coloring> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return Err(KdmvError::Connectivity);
    }
    let mut tree = vec![VertexSet::new(); n];
    let mut seen = VertexSet::singleton(0);
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for w in (*g.adj(u) - seen).iter() {
            seen.insert(w);
            tree[u].insert(w);
            tree[w].insert(u);
            queue.push_back(w);
        }
    }

    let mut alive = VertexSet::full(n);
    let mut colors = vec![0; n];
    let mut next = 0;
    let mut paint = |set: &[usize], colors: &mut Vec<usize>| {
        for &v in set {
            colors[v] = next;
        }
        next += 1;
    };
    loop {
        if alive.len() <= 2 {
            if !alive.is_empty() {
                paint(&alive.to_vec(), &mut colors);
            }
            break;
        }
        let start = alive.first().unwrap();
        let (r, _, _) = farthest(&tree, &alive, start);
        let (v, diam, parent) = farthest(&tree, &alive, r);
        if diam <= 2 {
            // a star: center versus leaves
            let center = alive
                .iter()
                .find(|&x| (tree[x] & alive).len() == alive.len() - 1)
                .unwrap();
            paint(&[center], &mut colors);
            paint(&alive.without(center).to_vec(), &mut colors);
            break;
        }
        let u = parent[v];
        let sibling = (tree[u] & alive).without(v).without(parent[u]).iter().next();
        let pair = match sibling {
            Some(w) => [v, w],
            None => [u, v],
        };
        paint(&pair, &mut colors);
        alive.remove(pair[0]);
        alive.remove(pair[1]);
    }
    verified(g, 2, &colors)
}

/// BFS in the tree restricted to `alive`: farthest vertex (smallest index on
/// ties), its distance, and the BFS parents.
fn farthest(tree: &[VertexSet], alive: &VertexSet, s: usize) -> (usize, usize, Vec<usize>) {
    let mut dist = vec![usize::MAX; tree.len()];
    let mut parent = vec![usize::MAX; tree.len()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    let mut best = (s, 0);
    while let Some(u) = queue.pop_front() {
        if dist[u] > best.1 || (dist[u] == best.1 && u < best.0) {
            best = (u, dist[u]);
        }
        for w in (tree[u] & *alive).iter() {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    (best.0, best.1, parent)
}

/// Four colours on `P_4 box C_4`: `P4_C4_PATTERN[i][c]` for path position `i` and
/// cycle position `c`.
const P4_C4_PATTERN: [[usize; 4]; 4] = [[4, 4, 1, 4], [4, 1, 2, 1], [3, 2, 1, 2], [3, 3, 2, 3]];

/// `2|V(G)|` classes on `cor(G) box C_4`: each perfect-matching edge `gg'`
/// with its leaves `h, h'` spans a copy of `P_4 box C_4` coloured like
/// [`P4_C4_PATTERN`]. Vertex `(x, c)` is `4x + c`.
pub fn cartesian_corona_c4_coloring(g: &Graph) -> Result<Coloring> {
    let matching = perfect_matching(g).ok_or_else(|| KdmvError::Domain("graph has no perfect matching".into()))?;
    let cor = corona(g)?;
    let c4 = built(FamilySpec::Cycle(4))?;
    let p = product(ProductKind::Cartesian, &cor, &c4)?;
    let n = g.n();
    let mut colors = vec![0; p.n()];
    for (t, &(a, b)) in matching.iter().enumerate() {
        for (pos, x) in [n + a, a, b, n + b].into_iter().enumerate() {
            for c in 0..4 {
                colors[4 * x + c] = 4 * t + P4_C4_PATTERN[pos][c] - 1;
            }
        }
    }
    verified(&p, 2, &colors)
}

/// Perfect matching by backtracking on the smallest unmatched vertex.
fn perfect_matching(g: &Graph) -> Option<Vec<(usize, usize)>> {
    fn go(g: &Graph, free: VertexSet, acc: &mut Vec<(usize, usize)>) -> bool {
        let Some(u) = free.first() else {
            return true;
        };
        for w in (*g.adj(u) & free).iter() {
            acc.push((u, w));
            if go(g, free.without(u).without(w), acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    if g.n() == 0 || g.n() % 2 == 1 {
        return None;
    }
    let mut acc = Vec::new();
    go(g, g.vertices(), &mut acc).then_some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chi_mu_k_exact;
    use crate::domination::gamma_exact;
    use crate::graph::NamedGraph;

    fn g(s: &str) -> Graph {
        generate(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(formula_chi_mu_k(&spec("strong(path:15,complete:3)"), 3), Some(6));
        assert_eq!(formula_chi_mu_k(&spec("cycle:7"), 2), Some(4));
        assert_eq!(formula_chi_mu_k(&spec("cartesian(cycle:8,cycle:8)"), 2), Some(16));
        assert_eq!(formula_chi_mu_k(&spec("path:1"), 5), Some(1));
        assert_eq!(formula_chi_mu_k(&spec("star:3"), 2), Some(2));
        assert_eq!(formula_chi_mu_k(&spec("star:3"), 1), None);
        assert_eq!(formula_chi_mu_k(&spec("cycle:5"), 0), None);
    }

    #[test]
    fn paths_and_cycles() {
        let c = color_path(4, 1).unwrap();
        assert_eq!(c.class_lists(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(
            color_cycle(6, 2).unwrap().class_lists(),
            vec![vec![0, 2, 4], vec![1, 3, 5]]
        );
        assert_eq!(color_cycle(9, 2).unwrap().num_classes(), 5);
        for n in 3..=14 {
            for k in 1..=5 {
                let want = formula_chi_mu_k(&FamilySpec::Cycle(n), k).unwrap();
                assert_eq!(color_cycle(n, k).unwrap().num_classes(), want, "C_{n}, k = {k}");
            }
        }
    }

    #[test]
    fn strong_blocks() {
        let c = color_strong_path_complete(15, 3, 3).unwrap();
        assert_eq!(c.num_classes(), 6);
        // first block: u_1 and two vertices of u_2..u_4 share a colour
        assert_eq!(c.color(0), c.color(4));
        assert_ne!(c.color(3), c.color(4));
        assert_eq!(color_strong_path_complete(6, 2, 2).unwrap().num_classes(), 3);
        assert_eq!(color_strong_path_complete(8, 2, 2).unwrap().num_classes(), 4);
        assert!(matches!(color_strong_path_complete(4, 2, 3), Err(KdmvError::Spec(_))));
        for n in 4..=12 {
            for k in 2..=(n as u32 - 2) {
                color_strong_path_complete(n, 2, k).unwrap();
            }
        }
    }

    #[test]
    fn strong_product_classes() {
        let p5 = g("path:5");
        let k4 = g("complete:4");
        let c = product_coloring_strong(&p5, &color_path(5, 2).unwrap(), &k4, &Coloring::single_class(4), 2).unwrap();
        assert_eq!(c.num_classes(), 3);
        let c6 = g("cycle:6");
        let cc = color_cycle(6, 2).unwrap();
        assert_eq!(product_coloring_strong(&c6, &cc, &c6, &cc, 2).unwrap().num_classes(), 4);
        let bad = Coloring::single_class(5);
        assert!(matches!(
            product_coloring_strong(&p5, &bad, &k4, &Coloring::single_class(4), 2),
            Err(KdmvError::Domain(_))
        ));
    }

    #[test]
    fn lexicographic_lifts() {
        let star = g("star:3");
        let part = Coloring::from_colors(&[0, 1, 1, 1]);
        let c = lex_coloring_from_i2dmv(&star, &part, &g("path:2")).unwrap();
        assert_eq!(c.num_classes(), 2);
        lex_coloring_from_i2dmv(&star, &part, &g("empty:2")).unwrap();
        let p4 = g("path:4");
        let c = lex_coloring_from_i2dmv(&p4, &Coloring::from_colors(&[0, 1, 0, 1]), &g("complete:2")).unwrap();
        assert_eq!(c.num_classes(), 2);
        assert!(lex_coloring_from_i2dmv(&p4, &Coloring::from_colors(&[0, 0, 1, 1]), &g("path:2")).is_err());

        let c5 = g("cycle:5");
        let cc = chi_mu_k_exact(&c5, 2, 10_000).unwrap().witness;
        assert_eq!(lex_coloring_from_2dmv(&c5, &cc, &g("path:3")).unwrap().num_classes(), 2);
        let c8 = g("named:chordedc8");
        let cc = chi_mu_k_exact(&c8, 2, 100_000).unwrap();
        assert_eq!(cc.value, 2);
        assert_eq!(
            lex_coloring_from_2dmv(&c8, &cc.witness, &g("path:3"))
                .unwrap()
                .num_classes(),
            2
        );
        let pr = g("named:propprgraph");
        let cpr = chi_mu_k_exact(&pr, 2, 100_000).unwrap().witness;
        assert!(matches!(
            lex_coloring_from_2dmv(&pr, &cpr, &g("path:3")),
            Err(KdmvError::Domain(_))
        ));
    }

    #[test]
    fn block_levels() {
        let fig = generate(&FamilySpec::Named(NamedGraph::BlockFig)).unwrap();
        let c = block_graph_coloring(&fig).unwrap();
        assert_eq!(c.num_classes(), 3);
        // center c1..c4 = 0..3 and their displayed labels 3, 3, 2, 2
        assert_eq!(c.color(0), c.color(1));
        assert_eq!(c.color(2), c.color(3));
        assert_ne!(c.color(0), c.color(2));
        for n in 3usize..=10 {
            assert_eq!(
                block_graph_coloring(&g(&format!("path:{n}"))).unwrap().num_classes(),
                n.div_ceil(2)
            );
        }
        assert!(matches!(
            block_graph_coloring(&g("star:3")),
            Err(KdmvError::Condition(_))
        ));
        assert!(matches!(block_graph_coloring(&g("cycle:5")), Err(KdmvError::Domain(_))));
        block_graph_coloring(&g("doublestar(2,2)")).unwrap();
    }

    #[test]
    fn hypercube_neighbourhoods() {
        assert_eq!(hypercube_neighborhood_coloring(3, &[0, 7]).unwrap().num_classes(), 2);
        assert_eq!(hypercube_neighborhood_coloring(1, &[0]).unwrap().num_classes(), 1);
        let q4 = g("hypercube:4");
        let d = gamma_exact(&q4, 1_000_000);
        assert_eq!(d.value, 4);
        let c = hypercube_neighborhood_coloring(4, &d.witness.to_vec()).unwrap();
        assert_eq!(c.num_classes(), 4);
        assert!(hypercube_neighborhood_coloring(3, &[0]).is_err());
    }

    #[test]
    fn tori() {
        assert_eq!(torus_eod_coloring(4, 4).unwrap().num_classes(), 4);
        assert_eq!(torus_eod_coloring(8, 8).unwrap().num_classes(), 16);
        assert_eq!(torus_eod_coloring(12, 8).unwrap().num_classes(), 24);
        assert!(matches!(torus_eod_coloring(6, 4), Err(KdmvError::Spec(_))));
    }

    #[test]
    fn tree_halves() {
        assert_eq!(tree_half_coloring(&g("path:7")).unwrap().num_classes(), 4);
        assert!(tree_half_coloring(&g("complete:4")).unwrap().num_classes() <= 2);
        let sharp = g("named:thmgeneralsharp(complete:2,2,2)");
        assert_eq!(tree_half_coloring(&sharp).unwrap().num_classes(), sharp.n() / 2);
        for s in ["cycle:9", "named:figgirth", "hypercube:4", "named:blockfig", "star:6"] {
            let h = g(s);
            assert!(
                tree_half_coloring(&h).unwrap().num_classes() <= h.n().div_ceil(2),
                "{s}"
            );
        }
    }

    #[test]
    fn corona_c4() {
        assert_eq!(cartesian_corona_c4_coloring(&g("complete:2")).unwrap().num_classes(), 4);
        let c = cartesian_corona_c4_coloring(&g("path:4")).unwrap();
        assert_eq!((c.n(), c.num_classes()), (32, 8));
        assert!(matches!(
            cartesian_corona_c4_coloring(&g("complete:3")),
            Err(KdmvError::Domain(_))
        ));
    }
}
