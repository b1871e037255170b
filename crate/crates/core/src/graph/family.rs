//! Named graph families and the textual spec syntax used by the CLI.
//!
//! Syntax (case-insensitive keywords):
//!
//! ```text
//! path:n  cycle:n  complete:n  empty:n  star:r  hypercube:n  doublestar(a,b)
//! tree(0-1,1-2,...)  corona(S)  cartesian(S,T)  strong(S,T)  lex(S,T)
//! named:figgirth  named:fig1tree(a,b,l)  named:propprgraph  named:propprtree
//! named:thmgeneralsharp(S,t1,..,ts)  named:kn1rlexempty(r,t)
//! named:blockfig  named:dissharp  named:chordedc8  g6:<graph6>
//! ```
//!
//! Vertex labels are documented on each variant. Products use `g * |V(H)| + h`.

use std::fmt;
use std::str::FromStr;

use super::{parse_graph6, product, to_graph6, Graph, ProductKind};
use crate::error::{KdmvError, Result};
use crate::MAX_VERTICES;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `0 - 1 - .. - n-1`.
    Path(usize),
    /// `0 - 1 - .. - n-1 - 0`.
    Cycle(usize),
    Complete(usize),
    EmptyGraph(usize),
    /// `K_{1,r}` with center 0.
    Star(usize),
    /// Adjacent centers 0 and 1; leaves of 0 are `2..2+a`, leaves of 1 follow.
    DoubleStar(usize, usize),
    /// `Q_n`; vertex index is the bit string.
    Hypercube(usize),
    /// Tree on `max label + 1` vertices given by its edges.
    Tree(Vec<(usize, usize)>),
    /// Leaf of vertex `v` is `n + v`.
    Corona(Box<FamilySpec>),
    Cartesian(Box<FamilySpec>, Box<FamilySpec>),
    Strong(Box<FamilySpec>, Box<FamilySpec>),
    Lex(Box<FamilySpec>, Box<FamilySpec>),
    Named(NamedGraph),
    Graph6(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    /// Girth-6 graph on 16 vertices with `chi_mu2 = 3 < gamma`.
    ///
    /// Labels: inner hexagon `a..f = 0..5`, outer hexagon `a1..f1 = 6..11`,
    /// `u = 12`, `u1, u2, u3 = 13, 14, 15`.
    FigGirth,
    /// Double star `S(a, b)` with `l` pendant `P_4`s hung at `x`.
    ///
    /// Labels: `x = 0`, `y = 1`, leaves of `x`, leaves of `y`, then each path
    /// `p1, p2, p3` with `p1` adjacent to `x`.
    Fig1Tree { a: usize, b: usize, l: usize },
    /// 15-vertex girth-4 graph with `chi_mu2 = 2`, proposed as a case where
    /// `chi_mu2(G o P_3) > chi_mu2(G)`; the solver finds `chi_mu2(G o P_3) = 2`.
    ///
    /// Labels: `a, b, c, d = 0..3` (a 4-cycle), children `b11, b12, c11, c12,
    /// d11, d12 = 4..9`, `e = 10`, `e1..e4 = 11..14`.
    PropPrGraph,
    /// 11-vertex tree `T` with `chi_mu2(T o 2K_1) > chi_mu2(T)`.
    ///
    /// Labels: `x = 0`, `y = 1`, leaves of `x` `2..4`, leaves of `y` `5..7`,
    /// path `x - 8 - 9 - 10`.
    PropPrTree,
    /// `H` plus paths `P_{2 t_i - 1}`, the first vertex of path `i` joined to
    /// vertex `i` of `H`. Labels: `H` first, then the paths in order.
    ThmGeneralSharp { h: Box<FamilySpec>, ts: Vec<usize> },
    /// `K_{1,r} o complement(K_t)`.
    Kn1rLexEmpty { r: usize, t: usize },
    /// 16-vertex block graph with center `{0, 1, 2, 3}`, radius 3, diameter 5.
    ///
    /// Labels: center clique `c1..c4 = 0..3`; `d2 = 4` on `c2` with the clique
    /// `{d2, d3, d3', d3''} = 4..7`; `a2 = 8` on `c1` with the triangle
    /// `{a2, 9, 10}`; `u = 11` on `c4`; triangle `{c3, 12, 13}` with pendants
    /// `12 - 14` and `13 - 15`.
    BlockFig,
    /// `C_6` with pendants at 0, 2, 4 (labels 6, 7, 8).
    DisSharp,
    /// `C_8` with chords `0-4` and `2-6`.
    ChordedC8,
}

fn spec_err(msg: impl Into<String>) -> KdmvError {
    KdmvError::Spec(msg.into())
}

fn bx(s: FamilySpec) -> Box<FamilySpec> {
    Box::new(s)
}

impl FamilySpec {
    pub fn path(n: usize) -> Self {
        FamilySpec::Path(n)
    }

    pub fn cartesian(a: FamilySpec, b: FamilySpec) -> Self {
        FamilySpec::Cartesian(bx(a), bx(b))
    }

    pub fn strong(a: FamilySpec, b: FamilySpec) -> Self {
        FamilySpec::Strong(bx(a), bx(b))
    }

    pub fn lex(a: FamilySpec, b: FamilySpec) -> Self {
        FamilySpec::Lex(bx(a), bx(b))
    }

    pub fn corona(a: FamilySpec) -> Self {
        FamilySpec::Corona(bx(a))
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    Ok(build(spec)?.with_name(spec.to_string()))
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(KdmvError::Size(n))
    } else {
        Ok(())
    }
}

fn build(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match spec {
        Path(n) => {
            if *n == 0 {
                return Err(spec_err("path needs at least one vertex"));
            }
            check_size(*n)?;
            Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i)))
        }
        Cycle(n) => {
            if *n < 3 {
                return Err(spec_err(format!("cycle needs at least 3 vertices, got {n}")));
            }
            check_size(*n)?;
            Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n)))
        }
        Complete(n) => {
            if *n == 0 {
                return Err(spec_err("complete graph needs at least one vertex"));
            }
            check_size(*n)?;
            Graph::from_edges(*n, (0..*n).flat_map(|i| (i + 1..*n).map(move |j| (i, j))))
        }
        EmptyGraph(n) => {
            if *n == 0 {
                return Err(spec_err("empty graph needs at least one vertex"));
            }
            Graph::empty(*n)
        }
        Star(r) => {
            if *r == 0 {
                return Err(spec_err("star needs at least one leaf"));
            }
            check_size(r + 1)?;
            Graph::from_edges(r + 1, (1..=*r).map(|i| (0, i)))
        }
        DoubleStar(a, b) => {
            if *a == 0 || *b == 0 {
                return Err(spec_err("double star needs a, b >= 1"));
            }
            double_star(*a, *b)
        }
        Hypercube(d) => {
            if *d == 0 || *d > 9 {
                return Err(spec_err(format!("hypercube dimension must be in 1..=9, got {d}")));
            }
            let n = 1usize << d;
            Graph::from_edges(
                n,
                (0..n)
                    .flat_map(|v| (0..*d).map(move |i| (v, v ^ (1 << i))))
                    .filter(|(u, v)| u < v),
            )
        }
        Tree(edges) => {
            let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1);
            check_size(n)?;
            let g = Graph::from_edges(n, edges.iter().copied())?;
            if g.edge_count() != n - 1 || !g.is_connected() {
                return Err(spec_err("tree edge list does not describe a tree"));
            }
            Ok(g)
        }
        Corona(inner) => corona(&build(inner)?),
        Cartesian(a, b) => product(ProductKind::Cartesian, &build(a)?, &build(b)?),
        Strong(a, b) => product(ProductKind::Strong, &build(a)?, &build(b)?),
        Lex(a, b) => product(ProductKind::Lex, &build(a)?, &build(b)?),
        Named(id) => build_named(id),
        Graph6(s) => parse_graph6(s),
    }
}

fn double_star(a: usize, b: usize) -> Result<Graph> {
    let n = a + b + 2;
    check_size(n)?;
    let mut g = Graph::from_edges(n, [(0, 1)])?;
    for i in 0..a {
        g.add_edge(0, 2 + i)?;
    }
    for i in 0..b {
        g.add_edge(1, 2 + a + i)?;
    }
    Ok(g)
}

/// `cor(G)`: leaf `n + v` attached to each vertex `v`.
pub(crate) fn corona(g: &Graph) -> Result<Graph> {
    let n = g.n();
    check_size(2 * n)?;
    Graph::from_edges(2 * n, g.edges().chain((0..n).map(|v| (v, n + v))))
}

fn build_named(id: &NamedGraph) -> Result<Graph> {
    match id {
        NamedGraph::FigGirth => {
            let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
            let (b1, d1, f1) = (7, 9, 11);
            let (u, u1, u2, u3) = (12, 13, 14, 15);
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for i in 0..6 {
                edges.push((i, (i + 1) % 6));
                edges.push((6 + i, 6 + (i + 1) % 6));
            }
            edges.extend([(u, u1), (u1, e), (u, u2), (u2, c), (u, u3), (u3, a)]);
            edges.extend([(f1, f), (b1, b), (d1, d)]);
            edges.extend([(u2, f1), (u3, d1), (u1, b1)]);
            Graph::from_edges(16, edges)
        }
        NamedGraph::Fig1Tree { a, b, l } => {
            if *a < 2 || *b < 2 || *l == 0 {
                return Err(spec_err("fig1tree needs a, b >= 2 and l >= 1"));
            }
            let mut g = double_star(*a, *b)?;
            let base = g.n();
            let n = base + 3 * l;
            check_size(n)?;
            let mut out = Graph::empty(n)?;
            for (u, v) in g.edges() {
                out.add_edge(u, v)?;
            }
            for i in 0..*l {
                let p = base + 3 * i;
                out.add_edge(0, p)?;
                out.add_edge(p, p + 1)?;
                out.add_edge(p + 1, p + 2)?;
            }
            g = out;
            Ok(g)
        }
        NamedGraph::PropPrGraph => {
            let (a, b, c, d) = (0, 1, 2, 3);
            let (b11, b12, c11, c12, d11, d12) = (4, 5, 6, 7, 8, 9);
            let (e, e1, e2, e3, e4) = (10, 11, 12, 13, 14);
            Graph::from_edges(
                15,
                [
                    (a, b),
                    (b, c),
                    (c, d),
                    (d, a),
                    (b, b11),
                    (b, b12),
                    (c, c11),
                    (c, c12),
                    (d, d11),
                    (d, d12),
                    (e, e1),
                    (e, e2),
                    (e, e3),
                    (e, e4),
                    (a, e1),
                    (a, e4),
                    (e1, b11),
                    (e1, c11),
                    (e1, d11),
                    (e2, b11),
                    (e2, c12),
                    (e2, d12),
                    (e3, b12),
                    (e3, c11),
                    (e3, d12),
                    (e4, b12),
                    (e4, c12),
                    (e4, d11),
                ],
            )
        }
        NamedGraph::PropPrTree => Graph::from_edges(
            11,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 5),
                (1, 6),
                (1, 7),
                (0, 8),
                (8, 9),
                (9, 10),
            ],
        ),
        NamedGraph::ThmGeneralSharp { h, ts } => {
            let hg = build(h)?;
            if ts.is_empty() || ts.len() > hg.n() {
                return Err(spec_err("thmgeneralsharp needs 1..=|V(H)| path lengths"));
            }
            if ts.contains(&0) {
                return Err(spec_err("thmgeneralsharp path parameters must be positive"));
            }
            let n = hg.n() + ts.iter().map(|t| 2 * t - 1).sum::<usize>();
            check_size(n)?;
            let mut g = Graph::from_edges(n, hg.edges())?;
            let mut next = hg.n();
            for (i, &t) in ts.iter().enumerate() {
                g.add_edge(i, next)?;
                for j in 1..2 * t - 1 {
                    g.add_edge(next + j - 1, next + j)?;
                }
                next += 2 * t - 1;
            }
            Ok(g)
        }
        NamedGraph::Kn1rLexEmpty { r, t } => {
            if *r == 0 || *t == 0 {
                return Err(spec_err("kn1rlexempty needs r, t >= 1"));
            }
            product(ProductKind::Lex, &build(&FamilySpec::Star(*r))?, &Graph::empty(*t)?)
        }
        NamedGraph::BlockFig => Graph::from_edges(
            16,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (1, 4),
                (4, 5),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 7),
                (6, 7),
                (0, 8),
                (8, 9),
                (8, 10),
                (9, 10),
                (3, 11),
                (2, 12),
                (2, 13),
                (12, 13),
                (12, 14),
                (13, 15),
            ],
        ),
        NamedGraph::DisSharp => Graph::from_edges(9, (0..6).map(|i| (i, (i + 1) % 6)).chain([(0, 6), (2, 7), (4, 8)])),
        NamedGraph::ChordedC8 => Graph::from_edges(8, (0..8).map(|i| (i, (i + 1) % 8)).chain([(0, 4), (2, 6)])),
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            EmptyGraph(n) => write!(f, "empty:{n}"),
            Star(r) => write!(f, "star:{r}"),
            DoubleStar(a, b) => write!(f, "doublestar({a},{b})"),
            Hypercube(n) => write!(f, "hypercube:{n}"),
            Tree(edges) => {
                let parts: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                write!(f, "tree({})", parts.join(","))
            }
            Corona(a) => write!(f, "corona({a})"),
            Cartesian(a, b) => write!(f, "cartesian({a},{b})"),
            Strong(a, b) => write!(f, "strong({a},{b})"),
            Lex(a, b) => write!(f, "lex({a},{b})"),
            Named(id) => write!(f, "named:{id}"),
            Graph6(s) => write!(f, "g6:{s}"),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::FigGirth => write!(f, "FigGirth"),
            NamedGraph::Fig1Tree { a, b, l } => write!(f, "Fig1Tree({a},{b},{l})"),
            NamedGraph::PropPrGraph => write!(f, "PropPrGraph"),
            NamedGraph::PropPrTree => write!(f, "PropPrTree"),
            NamedGraph::ThmGeneralSharp { h, ts } => {
                write!(f, "ThmGeneralSharp({h}")?;
                for t in ts {
                    write!(f, ",{t}")?;
                }
                write!(f, ")")
            }
            NamedGraph::Kn1rLexEmpty { r, t } => write!(f, "Kn1rLexEmpty({r},{t})"),
            NamedGraph::BlockFig => write!(f, "BlockFig"),
            NamedGraph::DisSharp => write!(f, "DisSharp"),
            NamedGraph::ChordedC8 => write!(f, "ChordedC8"),
        }
    }
}

/// Split `s` at top-level commas.
fn split_args(s: &str) -> Result<Vec<&str>> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(spec_err(format!("unbalanced parentheses in {s:?}")));
                }
            }
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(spec_err(format!("unbalanced parentheses in {s:?}")));
    }
    let last = s[start..].trim();
    if !(out.is_empty() && last.is_empty()) {
        out.push(last);
    }
    Ok(out)
}

fn parse_num(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| spec_err(format!("expected a nonnegative integer, got {s:?}")))
}

fn parse_nums(args: &[&str], expect: usize, what: &str) -> Result<Vec<usize>> {
    if args.len() != expect {
        return Err(spec_err(format!("{what} takes {expect} arguments, got {}", args.len())));
    }
    args.iter().map(|a| parse_num(a)).collect()
}

/// `name(args)` -> `(name, Some(args))`; `name` -> `(name, None)`.
fn call_form(s: &str) -> Result<(&str, Option<&str>)> {
    match s.find('(') {
        Some(i) => {
            let inner = s[i + 1..]
                .strip_suffix(')')
                .ok_or_else(|| spec_err(format!("missing closing parenthesis in {s:?}")))?;
            Ok((&s[..i], Some(inner)))
        }
        None => Ok((s, None)),
    }
}

fn parse_named(s: &str) -> Result<NamedGraph> {
    let (name, args) = call_form(s)?;
    let args = match args {
        Some(a) => split_args(a)?,
        None => Vec::new(),
    };
    let bare = |id: NamedGraph| {
        if args.is_empty() {
            Ok(id)
        } else {
            Err(spec_err(format!("named:{name} takes no arguments")))
        }
    };
    match name.to_ascii_lowercase().as_str() {
        "figgirth" => bare(NamedGraph::FigGirth),
        "propprgraph" => bare(NamedGraph::PropPrGraph),
        "propprtree" => bare(NamedGraph::PropPrTree),
        "blockfig" => bare(NamedGraph::BlockFig),
        "dissharp" => bare(NamedGraph::DisSharp),
        "chordedc8" => bare(NamedGraph::ChordedC8),
        "fig1tree" => {
            let v = parse_nums(&args, 3, "fig1tree")?;
            Ok(NamedGraph::Fig1Tree {
                a: v[0],
                b: v[1],
                l: v[2],
            })
        }
        "kn1rlexempty" => {
            let v = parse_nums(&args, 2, "kn1rlexempty")?;
            Ok(NamedGraph::Kn1rLexEmpty { r: v[0], t: v[1] })
        }
        "thmgeneralsharp" => {
            if args.len() < 2 {
                return Err(spec_err("thmgeneralsharp takes a graph spec and at least one length"));
            }
            let h = args[0].parse::<FamilySpec>()?;
            let ts = args[1..].iter().map(|a| parse_num(a)).collect::<Result<Vec<_>>>()?;
            Ok(NamedGraph::ThmGeneralSharp { h: bx(h), ts })
        }
        other => Err(spec_err(format!("unknown named graph {other:?}"))),
    }
}

impl FromStr for FamilySpec {
    type Err = KdmvError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("g6:") {
            // graph6 payloads are case-sensitive and must not be lowercased
            return Ok(FamilySpec::Graph6(rest.to_string()));
        }
        if let Some((key, val)) = s.split_once(':') {
            if !key.contains('(') {
                let key = key.trim().to_ascii_lowercase();
                if key == "named" {
                    return Ok(FamilySpec::Named(parse_named(val.trim())?));
                }
                let n = parse_num(val)?;
                return match key.as_str() {
                    "path" => Ok(FamilySpec::Path(n)),
                    "cycle" => Ok(FamilySpec::Cycle(n)),
                    "complete" => Ok(FamilySpec::Complete(n)),
                    "empty" => Ok(FamilySpec::EmptyGraph(n)),
                    "star" => Ok(FamilySpec::Star(n)),
                    "hypercube" => Ok(FamilySpec::Hypercube(n)),
                    _ => Err(spec_err(format!("unknown family {key:?}"))),
                };
            }
        }
        let (name, args) = call_form(s)?;
        let args = split_args(args.ok_or_else(|| spec_err(format!("cannot parse graph spec {s:?}")))?)?;
        let name = name.trim().to_ascii_lowercase();
        let two = |args: &[&str]| -> Result<(Box<FamilySpec>, Box<FamilySpec>)> {
            if args.len() != 2 {
                return Err(spec_err(format!("{name} takes exactly two graph specs")));
            }
            Ok((bx(args[0].parse()?), bx(args[1].parse()?)))
        };
        match name.as_str() {
            "corona" => {
                if args.len() != 1 {
                    return Err(spec_err("corona takes exactly one graph spec"));
                }
                Ok(FamilySpec::Corona(bx(args[0].parse()?)))
            }
            "cartesian" => two(&args).map(|(a, b)| FamilySpec::Cartesian(a, b)),
            "strong" => two(&args).map(|(a, b)| FamilySpec::Strong(a, b)),
            "lex" => two(&args).map(|(a, b)| FamilySpec::Lex(a, b)),
            "doublestar" => {
                let v = parse_nums(&args, 2, "doublestar")?;
                Ok(FamilySpec::DoubleStar(v[0], v[1]))
            }
            "tree" => {
                let edges = args
                    .iter()
                    .map(|e| {
                        let (u, v) = e
                            .split_once('-')
                            .ok_or_else(|| spec_err(format!("tree edge {e:?} is not u-v")))?;
                        Ok((parse_num(u)?, parse_num(v)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(FamilySpec::Tree(edges))
            }
            _ => Err(spec_err(format!("unknown family {name:?}"))),
        }
    }
}

impl From<&Graph> for FamilySpec {
    fn from(g: &Graph) -> Self {
        FamilySpec::Graph6(to_graph6(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, girth};

    fn gen(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn basic_families() {
        let q3 = gen("hypercube:3");
        assert_eq!((q3.n(), q3.edge_count()), (8, 12));
        assert!((0..8).all(|v| q3.degree(v) == 3));
        assert_eq!(girth(&q3), Some(4));
        assert_eq!(gen("star:4").degree(0), 4);
        assert_eq!(gen("doublestar(2,3)").n(), 7);
        assert!(matches!(
            "cycle:2".parse::<FamilySpec>().map(|s| generate(&s)),
            Ok(Err(KdmvError::Spec(_)))
        ));
        assert!("path:x".parse::<FamilySpec>().is_err());
        assert!("lex(path:2)".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn corona_of_edge_is_p4() {
        let g = gen("corona(path:2)");
        let dm = all_pairs_distances(&g);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(dm.diameter(), 3);
    }

    #[test]
    fn spec_strings_roundtrip() {
        for s in [
            "strong(path:15,complete:3)",
            "lex(named:PropPrGraph,path:3)",
            "corona(cartesian(cycle:4,path:2))",
            "named:Fig1Tree(2,2,1)",
            "named:ThmGeneralSharp(complete:2,2,2)",
            "tree(0-1,1-2,1-3)",
            "g6:D?{",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        }
    }

    #[test]
    fn named_sizes() {
        let cases = [
            ("named:figgirth", 16, 24),
            ("named:propprgraph", 15, 28),
            ("named:propprtree", 11, 10),
            ("named:blockfig", 16, 23),
            ("named:dissharp", 9, 9),
            ("named:chordedc8", 8, 10),
            ("named:fig1tree(2,2,2)", 12, 11),
            ("named:kn1rlexempty(3,2)", 8, 12),
        ];
        for (s, n, m) in cases {
            let g = gen(s);
            assert_eq!((g.n(), g.edge_count()), (n, m), "{s}");
        }
        let sharp = gen("named:thmgeneralsharp(complete:2,2,2)");
        assert_eq!((sharp.n(), sharp.edge_count()), (8, 7));
        assert!(sharp.is_connected());
    }

    #[test]
    fn tree_validation() {
        assert!(generate(&FamilySpec::Tree(vec![(0, 1), (1, 2), (0, 2)])).is_err());
        assert!(generate(&FamilySpec::Tree(vec![(0, 1), (2, 3)])).is_err());
        assert_eq!(generate(&FamilySpec::Tree(vec![])).unwrap().n(), 1);
    }
}
