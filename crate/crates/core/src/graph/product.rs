use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{all_pairs_distances, Graph};
use crate::error::{KdmvError, Result};
use crate::MAX_VERTICES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Strong,
    Lex,
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
            ProductKind::Lex => "lex",
        })
    }
}

impl FromStr for ProductKind {
    type Err = KdmvError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "strong" => Ok(ProductKind::Strong),
            "lex" | "lexicographic" => Ok(ProductKind::Lex),
            _ => Err(KdmvError::Spec(format!("unknown product {s:?}"))),
        }
    }
}

/// Product graph on `V(G) x V(H)`; vertex `(g, h)` gets index `g * |V(H)| + h`.
pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.n(), h.n());
    if ng == 0 || nh == 0 {
        return Err(KdmvError::Spec("product factors must be nonempty".into()));
    }
    if ng * nh > MAX_VERTICES {
        return Err(KdmvError::Size(ng * nh));
    }
    let mut p = Graph::empty(ng * nh)?;
    let idx = |a: usize, b: usize| a * nh + b;
    for a in 0..ng {
        for b in 0..nh {
            for a2 in 0..ng {
                for b2 in 0..nh {
                    if idx(a2, b2) <= idx(a, b) {
                        continue;
                    }
                    let same_g = a == a2;
                    let same_h = b == b2;
                    let eg = g.has_edge(a, a2);
                    let eh = h.has_edge(b, b2);
                    let cartesian = (same_g && eh) || (eg && same_h);
                    let adjacent = match kind {
                        ProductKind::Cartesian => cartesian,
                        ProductKind::Strong => cartesian || (eg && eh),
                        ProductKind::Lex => eg || (same_g && eh),
                    };
                    if adjacent {
                        p.add_edge(idx(a, b), idx(a2, b2))?;
                    }
                }
            }
        }
    }
    Ok(p)
}

/// `G^[#p]`: same vertices, `uv` an edge iff `d_G(u, v) = p`.
pub fn exact_distance_graph(g: &Graph, p: u32) -> Graph {
    let dm = all_pairs_distances(g);
    let mut out = Graph::empty(g.n()).expect("same size");
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if dm.get(u, v) == p {
                out.add_edge(u, v).expect("valid edge");
            }
        }
    }
    out
}
