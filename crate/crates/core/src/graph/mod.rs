//! Simple undirected graphs on at most 64 vertices, stored as adjacency
//! bitmasks.

mod families;
mod io;
mod matching;
pub(crate) mod structure;

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub use families::{make_complete, make_path, make_spider, make_star, make_windmill, SpiderSpec};
pub use io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use matching::{has_almost_perfect_matching, has_perfect_matching};
pub use structure::{contains_claw, cut_vertex_components, is_bipartite_with_parts, spider_reduction};

pub const MAX_VERTICES: usize = 64;

/// A finite simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeBound(format!("{n} vertices (at most {MAX_VERTICES} supported)")));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Rejects loops, repeated edges and endpoints `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) has an endpoint >= {n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("repeated edge ({u}, {v})")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask of all vertices.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components of the subgraph induced on `mask`, each as a mask,
    /// ordered by lowest vertex.
    pub fn components_within(&self, mask: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut left = mask;
        while left != 0 {
            let start = left & left.wrapping_neg();
            let comp = self.reach(start, mask);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Vertices reachable from `seed` inside `mask`.
    pub fn reach(&self, seed: u64, mask: u64) -> u64 {
        let mut comp = seed & mask;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= mask & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected_within(&self, mask: u64) -> bool {
        mask == 0 || self.reach(mask & mask.wrapping_neg(), mask) == mask
    }

    /// Components as sorted vertex lists, ordered by lowest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(self.full_mask()).into_iter().map(|m| bits(m).collect()).collect()
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.full_mask())
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components_within(self.full_mask()).len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        let edges = self.edges().into_iter().chain(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, edges)
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        if set.len() != vertices.len() {
            return Err(Error::InvalidGraph("repeated vertex in induced subgraph".into()));
        }
        let pos = |x: usize| vertices.iter().position(|&y| y == x).unwrap();
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            if u >= self.n {
                return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
            }
            for v in self.neighbors(u) {
                if set.contains(&v) && pos(v) > i {
                    edges.push((i, pos(v)));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }
}

/// Iterates the set bit positions of `mask`, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
