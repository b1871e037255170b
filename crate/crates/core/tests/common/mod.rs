//! Brute-force reference implementations. Deliberately naive: adjacency
//! lists, plain BFS, explicit path enumeration and full subset/partition
//! enumeration. Only usable on tiny graphs.
#![allow(dead_code)]

use std::collections::VecDeque;

use kdmv::{Graph, VertexSet};

pub const UNREACHABLE: u32 = u32::MAX;

pub struct Oracle {
    pub n: usize,
    pub adj: Vec<Vec<usize>>,
    pub dist: Vec<Vec<u32>>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let adj: Vec<Vec<usize>> = (0..n).map(|v| (0..n).filter(|&w| g.has_edge(v, w)).collect()).collect();
        let dist = (0..n).map(|s| bfs(&adj, s)).collect();
        Oracle { n, adj, dist }
    }

    pub fn diameter(&self) -> u32 {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Every shortest `u,v`-path, as vertex sequences.
    pub fn geodesics(&self, u: usize, v: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if self.dist[u][v] == UNREACHABLE {
            return out;
        }
        let mut path = vec![u];
        self.extend(v, &mut path, &mut out);
        out
    }

    fn extend(&self, target: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == target {
            out.push(path.clone());
            return;
        }
        for &w in &self.adj[last] {
            if self.dist[w][target] + 1 == self.dist[last][target] {
                path.push(w);
                self.extend(target, path, out);
                path.pop();
            }
        }
    }

    pub fn sees(&self, u: usize, v: usize, s: &[usize]) -> bool {
        u == v
            || self
                .geodesics(u, v)
                .iter()
                .any(|p| p[1..p.len() - 1].iter().all(|w| !s.contains(w)))
    }

    pub fn is_kdmv(&self, s: &[usize], k: u32) -> bool {
        s.iter().all(|&u| {
            s.iter()
                .all(|&v| u == v || (self.dist[u][v] <= k && self.sees(u, v, s)))
        })
    }

    /// Fewest classes over every set partition.
    pub fn chi(&self, k: u32) -> usize {
        let mut best = self.n;
        let mut labels = vec![0usize; self.n];
        self.partitions(0, 0, &mut labels, &mut |labels, used| {
            if used < best && (0..used).all(|c| self.is_kdmv(&class(labels, c), k)) {
                best = used;
            }
        });
        best
    }

    /// Restricted growth strings: vertex `i` joins one of the `used`
    /// classes or opens a new one.
    fn partitions(&self, i: usize, used: usize, labels: &mut [usize], f: &mut dyn FnMut(&[usize], usize)) {
        if i == self.n {
            f(labels, used);
            return;
        }
        for c in 0..=used {
            labels[i] = c;
            self.partitions(i + 1, used.max(c + 1), labels, f);
        }
    }

    /// Fewest classes of a partition into sets with property `ok`, which
    /// must be closed under taking subsets (so partial classes can be pruned).
    pub fn min_hereditary_partition(&self, ok: &dyn Fn(&[usize]) -> bool) -> usize {
        let mut best = self.n;
        let mut labels = vec![0usize; self.n];
        self.grow(0, 0, &mut labels, ok, &mut best);
        best
    }

    fn grow(&self, i: usize, used: usize, labels: &mut [usize], ok: &dyn Fn(&[usize]) -> bool, best: &mut usize) {
        if used >= *best {
            return;
        }
        if i == self.n {
            *best = used;
            return;
        }
        for c in 0..=used {
            labels[i] = c;
            if ok(&class(&labels[..=i], c)) {
                self.grow(i + 1, used.max(c + 1), labels, ok, best);
            }
        }
    }

    /// Fewest classes that are independent 2DMV sets.
    pub fn chi_i2(&self) -> usize {
        self.min_hereditary_partition(&|s| {
            s.iter().all(|&u| s.iter().all(|&v| !self.adj[u].contains(&v))) && self.is_kdmv(s, 2)
        })
    }

    pub fn subsets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0u32..1 << self.n).map(|m| (0..self.n).filter(|&v| m >> v & 1 == 1).collect())
    }

    fn min_subset(&self, ok: impl Fn(&[usize]) -> bool) -> Option<usize> {
        self.subsets().filter(|s| ok(s)).map(|s| s.len()).min()
    }

    fn max_subset(&self, ok: impl Fn(&[usize]) -> bool) -> usize {
        self.subsets().filter(|s| ok(s)).map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn mu(&self, k: u32) -> usize {
        self.max_subset(|s| self.is_kdmv(s, k))
    }

    pub fn clique_number(&self) -> usize {
        self.max_subset(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || self.adj[u].contains(&v))))
    }

    pub fn gamma_k(&self, k: u32) -> usize {
        self.min_subset(|s| (0..self.n).all(|v| s.iter().any(|&d| self.dist[d][v] <= k)))
            .unwrap()
    }

    pub fn gamma(&self) -> usize {
        self.gamma_k(1)
    }

    pub fn gamma_t(&self) -> Option<usize> {
        self.min_subset(|s| (0..self.n).all(|v| self.adj[v].iter().any(|w| s.contains(w))))
    }

    pub fn rho2(&self) -> usize {
        self.max_subset(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || self.dist[u][v] >= 3)))
    }

    /// Clique cover number of the graph whose edges are the pairs at
    /// distance exactly `p` (`p = 1` gives `theta(G)`).
    pub fn theta_exact_distance(&self, p: u32) -> usize {
        let mut best = self.n;
        let mut labels = vec![0usize; self.n];
        self.partitions(0, 0, &mut labels, &mut |labels, used| {
            let cliques = (0..used).all(|c| {
                let s = class(labels, c);
                s.iter().all(|&u| s.iter().all(|&v| u == v || self.dist[u][v] == p))
            });
            if cliques && used < best {
                best = used;
            }
        });
        best
    }
}

fn class(labels: &[usize], c: usize) -> Vec<usize> {
    (0..labels.len()).filter(|&v| labels[v] == c).collect()
}

pub fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<u32> {
    let mut d = vec![UNREACHABLE; adj.len()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        for &w in &adj[v] {
            if d[w] == UNREACHABLE {
                d[w] = d[v] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().collect()
}

/// Random graph on `n` vertices from an edge-presence mask.
pub fn from_mask(n: usize, mask: &[bool]) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask[i % mask.len()] {
                g.add_edge(u, v).unwrap();
            }
            i += 1;
        }
    }
    g
}
