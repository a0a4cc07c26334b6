//! Independent oracles for integration tests. Nothing here calls the
//! crate's verifiers, solvers, enumerators or canonical forms; graphs come
//! in as plain adjacency lists.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rid_lab::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Every 0 has neighbor sum >= 2 (Italian) and a 0-neighbor (restrained).
pub fn is_rid(adj: &[Vec<usize>], f: &[u8]) -> bool {
    (0..adj.len()).all(|v| {
        f[v] != 0 || {
            let sum: u32 = adj[v].iter().map(|&u| f[u] as u32).sum();
            sum >= 2 && adj[v].iter().any(|&u| f[u] == 0)
        }
    })
}

pub fn is_id(adj: &[Vec<usize>], f: &[u8]) -> bool {
    (0..adj.len()).all(|v| f[v] != 0 || adj[v].iter().map(|&u| f[u] as u32).sum::<u32>() >= 2)
}

pub fn is_rrd(adj: &[Vec<usize>], f: &[u8]) -> bool {
    (0..adj.len()).all(|v| {
        f[v] != 0 || (adj[v].iter().any(|&u| f[u] == 2) && adj[v].iter().any(|&u| f[u] == 0))
    })
}

/// Minimum weight over all `3^n` labelings satisfying `pred`.
pub fn brute_min(adj: &[Vec<usize>], pred: fn(&[Vec<usize>], &[u8]) -> bool) -> u32 {
    let n = adj.len();
    let mut f = vec![0u8; n];
    let mut best = 2 * n as u32;
    loop {
        let w: u32 = f.iter().map(|&x| x as u32).sum();
        if w < best && pred(adj, &f) {
            best = w;
        }
        let mut i = 0;
        while i < n && f[i] == 2 {
            f[i] = 0;
            i += 1;
        }
        if i == n {
            return best;
        }
        f[i] += 1;
    }
}

pub fn brute_rid(g: &Graph) -> u32 {
    brute_min(&adjacency(g), is_rid)
}

/// Minimum restrained dominating set size over all `2^n` subsets.
pub fn brute_gamma_r(g: &Graph) -> u32 {
    let adj = adjacency(g);
    let n = adj.len();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|v| {
                s >> v & 1 == 1
                    || (adj[v].iter().any(|&u| s >> u & 1 == 1)
                        && adj[v].iter().any(|&u| s >> u & 1 == 0))
            })
        })
        .map(u32::count_ones)
        .min()
        .unwrap()
}

pub fn brute_gamma(g: &Graph) -> u32 {
    let adj = adjacency(g);
    let n = adj.len();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || adj[v].iter().any(|&u| s >> u & 1 == 1)))
        .map(u32::count_ones)
        .min()
        .unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, out);
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn encode(n: usize, edges: &HashSet<(usize, usize)>, p: &[usize]) -> u64 {
    pairs(n).iter().enumerate().fold(0u64, |acc, (k, &(i, j))| {
        let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
        if edges.contains(&(a, b)) {
            acc | 1 << k
        } else {
            acc
        }
    })
}

/// Same graph up to relabeling, by trying every permutation.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let ge: HashSet<_> = g.edges().collect();
    let he: HashSet<_> = h.edges().collect();
    permutations(g.n()).iter().any(|p| {
        ge.iter()
            .all(|&(u, v)| he.contains(&(p[u].min(p[v]), p[u].max(p[v]))))
    })
}

/// Isomorphism classes of connected graphs on `n` vertices, via the minimum
/// edge encoding over all permutations of every labeled graph.
pub fn brute_connected_classes(n: usize) -> BTreeSet<u64> {
    let ps = pairs(n);
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for mask in 0u64..1 << ps.len() {
        let edges: HashSet<(usize, usize)> = ps
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if !connected(n, &edges) {
            continue;
        }
        let canon = perms.iter().map(|p| encode(n, &edges, p)).min().unwrap();
        seen.insert(canon);
    }
    seen
}

fn connected(n: usize, edges: &HashSet<(usize, usize)>) -> bool {
    let mut reach = vec![false; n];
    let mut stack = vec![0];
    reach[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !reach[w] {
                reach[w] = true;
                stack.push(w);
            }
        }
    }
    reach.into_iter().all(|r| r)
}

/// Minimum edge encoding over all permutations; a complete invariant.
pub fn brute_canonical(g: &Graph) -> u64 {
    let edges: HashSet<_> = g.edges().collect();
    permutations(g.n())
        .iter()
        .map(|p| encode(g.n(), &edges, p))
        .min()
        .unwrap()
}

/// Trees decoded from every Prüfer sequence.
pub fn prufer_trees(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n <= 2 {
        return vec![prufer_decode(n, &[])];
    }
    (0..n.pow(n as u32 - 2))
        .map(|mut code| {
            let seq: Vec<usize> = (0..n - 2)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            prufer_decode(n, &seq)
        })
        .collect()
}

/// Adjacency lists of the tree with Prüfer sequence `seq` (length `n - 2`).
pub fn prufer_decode(n: usize, seq: &[usize]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    if n < 2 {
        return adj;
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        adj[leaf].push(s);
        adj[s].push(leaf);
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    adj[rest[0]].push(rest[1]);
    adj[rest[1]].push(rest[0]);
    adj
}

pub fn to_graph(adj: &[Vec<usize>]) -> Graph {
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)));
    Graph::from_edges(adj.len(), edges).unwrap()
}

fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| ahu(adj, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Unrooted tree canonical string: the smallest AHU encoding over the
/// tree's centers.
pub fn tree_code(adj: &[Vec<usize>]) -> String {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in &adj[v] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| ahu(adj, c, usize::MAX))
        .min()
        .unwrap()
}

pub fn brute_tree_classes(n: usize) -> BTreeSet<String> {
    prufer_trees(n).iter().map(|t| tree_code(t)).collect()
}

pub fn tree_code_of(g: &Graph) -> String {
    tree_code(&adjacency(g))
}

/// Free trees, orders 1 to 16.
pub const TREE_COUNTS: [usize; 16] = [
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
];
/// Connected graphs, orders 1 to 8.
pub const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];
