//! Undirected simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so neighborhood
//! intersections, degree counts and subset tests are single word operations.

mod build;
mod canon;
mod enumerate;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{argument, domain, Result};

pub use build::{complete, complete_bipartite, cycle, double_star, path, star};
pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use enumerate::{
    enumerate_connected, enumerate_trees, TreeIter, MAX_CONNECTED_ORDER, MAX_TREE_ORDER,
};
pub use graph6::{from_graph6, to_graph6, GRAPH6_HEADER, MAX_GRAPH6_ORDER};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_ORDER: usize = 64;

/// Iterates the set bits of `mask` in increasing order.
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

/// Mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An undirected simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n > MAX_ORDER`; use [`Graph::try_new`] for untrusted sizes.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn try_new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(crate::Error::UnsupportedSize {
                n,
                limit: MAX_ORDER,
            });
        }
        Ok(Graph::new(n))
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and repeated edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::try_new(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(argument(format!("edge {u}-{v} out of range for n={n}")));
            }
            if u == v {
                return Err(argument(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(argument(format!("repeated edge {u}-{v}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor masks. The masks must be
    /// symmetric and loop-free.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_ORDER);
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.check_invariants());
        g
    }

    /// Inserts edge `uv` (idempotent). Panics on a loop or an out-of-range
    /// endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge {u}-{v} out of range");
        assert_ne!(u, v, "self-loop at {u}");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Adds a fresh isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        assert!(self.n < MAX_ORDER, "graph order would exceed {MAX_ORDER}");
        self.adj.push(0);
        self.n += 1;
        self.n - 1
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood of `v` as a bitmask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Symmetric, irreflexive and confined to `0..n`.
    pub fn check_invariants(&self) -> bool {
        let all = self.vertex_mask();
        (0..self.n).all(|v| {
            let a = self.adj[v];
            a & !all == 0 && a >> v & 1 == 0 && bits(a).all(|u| self.adj[u] >> v & 1 == 1)
        })
    }

    /// Vertices reachable from `v` as a bitmask.
    pub fn component_mask(&self, v: usize) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components, each a sorted vertex list, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let comp = self.component_mask(v);
            left &= !comp;
            out.push(bits(comp).collect());
        }
        out
    }

    /// True for the empty graph and for every graph with one component.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_mask(0) == self.vertex_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// Degree-1 vertices.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distance matrix; `usize::MAX` marks unreachable pairs.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|s| {
                self.distances_from(s)
                    .into_iter()
                    .map(|d| d.unwrap_or(usize::MAX))
                    .collect()
            })
            .collect()
    }

    /// Maximum shortest-path distance. Errors on disconnected or empty input.
    pub fn diameter(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(domain("diameter of the empty graph"));
        }
        if !self.is_connected() {
            return Err(domain("diameter of a disconnected graph"));
        }
        Ok((0..self.n)
            .map(|s| {
                self.distances_from(s)
                    .into_iter()
                    .flatten()
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(argument(format!(
                    "vertex {v} out of range for n={}",
                    self.n
                )));
            }
            if pos[v] != usize::MAX {
                return Err(argument(format!("vertex {v} listed twice")));
            }
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                bits(self.adj[v])
                    .filter(|&u| pos[u] != usize::MAX)
                    .fold(0u64, |acc, u| acc | 1 << pos[u])
            })
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph::from_adjacency(adj)
    }

    /// Disjoint union, `other` numbered after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        assert!(shift + other.n <= MAX_ORDER);
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| a << shift));
        Graph::from_adjacency(adj)
    }

    /// Graph with vertex `v` deleted; later vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep).expect("valid vertex list")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
