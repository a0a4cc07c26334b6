//! Isomorph-free enumeration of free trees and connected graphs.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::{canonical_form, Graph};
use crate::error::{argument, Result};

pub const MAX_TREE_ORDER: usize = 16;
pub const MAX_CONNECTED_ORDER: usize = 8;

/// One representative per isomorphism class of free trees on `n` vertices.
///
/// Rooted trees are produced as canonical level sequences (Beyer and
/// Hedetniemi), each rooted class exactly once. A rooted tree is kept when
/// its root is the center, or, for bicentral trees, when the side of the
/// central edge containing the root has the larger canonical sequence.
pub fn enumerate_trees(n: usize) -> Result<TreeIter> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(argument(format!(
            "tree order must be in 1..={MAX_TREE_ORDER}, got {n}"
        )));
    }
    Ok(TreeIter {
        levels: Some((1..=n as u8).collect()),
    })
}

/// Streams the free trees of one order; see [`enumerate_trees`].
pub struct TreeIter {
    levels: Option<Vec<u8>>,
}

impl Iterator for TreeIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let current = self.levels.take()?;
            self.levels = successor(&current);
            if rooted_at_canonical_center(&current) {
                return Some(tree_from_levels(&current));
            }
        }
    }
}

/// Next canonical level sequence in reverse lexicographic order; the root
/// has level 1 and the star `1,2,...,2` is last.
fn successor(l: &[u8]) -> Option<Vec<u8>> {
    let p = l.iter().rposition(|&x| x > 2)?;
    let q = l[..p]
        .iter()
        .rposition(|&x| x == l[p] - 1)
        .expect("parent level exists");
    let mut next = l.to_vec();
    for i in p..l.len() {
        next[i] = next[i - (p - q)];
    }
    Some(next)
}

/// Index ranges of the root's child subtrees.
fn child_blocks(l: &[u8]) -> Vec<(usize, usize)> {
    let starts: Vec<usize> = (1..l.len()).filter(|&i| l[i] == 2).collect();
    starts
        .iter()
        .enumerate()
        .map(|(k, &s)| (s, starts.get(k + 1).copied().unwrap_or(l.len())))
        .collect()
}

fn rooted_at_canonical_center(l: &[u8]) -> bool {
    if l.len() == 1 {
        return true;
    }
    let blocks = child_blocks(l);
    let mut depths: Vec<(u8, usize)> = blocks
        .iter()
        .enumerate()
        .map(|(k, &(s, e))| (l[s..e].iter().max().unwrap() - 1, k))
        .collect();
    depths.sort_by(|a, b| b.cmp(a));
    let d1 = depths[0].0;
    let d2 = depths.get(1).map_or(0, |d| d.0);
    if d1 == d2 {
        return true;
    }
    if d1 != d2 + 1 {
        return false;
    }
    // Bicentral: compare root side against the deep child's side.
    let (s, e) = blocks[depths[0].1];
    let root_side: Vec<u8> = l[..s].iter().chain(&l[e..]).copied().collect();
    let child_side: Vec<u8> = l[s..e].iter().map(|x| x - 1).collect();
    root_side >= child_side
}

fn tree_from_levels(l: &[u8]) -> Graph {
    let mut g = Graph::new(l.len());
    let mut last_at_level = [0usize; MAX_TREE_ORDER + 2];
    for (i, &lv) in l.iter().enumerate() {
        if i > 0 {
            g.add_edge(last_at_level[lv as usize - 1], i);
        }
        last_at_level[lv as usize] = i;
    }
    g
}

static CONNECTED: [OnceLock<Vec<Graph>>; MAX_CONNECTED_ORDER + 1] =
    [const { OnceLock::new() }; MAX_CONNECTED_ORDER + 1];

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, each in canonical labeling, sorted by canonical form.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// level `n` is obtained from level `n - 1` by attaching a new vertex to
/// every nonempty neighbor set and deduplicating on canonical form.
pub fn enumerate_connected(n: usize) -> Result<std::vec::IntoIter<Graph>> {
    if !(1..=MAX_CONNECTED_ORDER).contains(&n) {
        return Err(argument(format!(
            "connected graph order must be in 1..={MAX_CONNECTED_ORDER}, got {n}"
        )));
    }
    Ok(connected_level(n).clone().into_iter())
}

fn connected_level(n: usize) -> &'static Vec<Graph> {
    CONNECTED[n].get_or_init(|| {
        if n == 1 {
            return vec![Graph::new(1)];
        }
        let mut seen = BTreeSet::new();
        for base in connected_level(n - 1) {
            for subset in 1u64..(1 << (n - 1)) {
                let mut g = base.clone();
                let v = g.add_vertex();
                for u in super::bits(subset) {
                    g.add_edge(u, v);
                }
                seen.insert(canonical_form(&g));
            }
        }
        seen.into_iter().map(|c| c.to_graph()).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tree_orders() {
        let t1: Vec<_> = enumerate_trees(1).unwrap().collect();
        assert_eq!(t1, vec![Graph::new(1)]);
        let t4: Vec<_> = enumerate_trees(4).unwrap().collect();
        assert_eq!(t4.len(), 2);
        let mut maxdeg: Vec<_> = t4.iter().map(|t| t.max_degree()).collect();
        maxdeg.sort();
        assert_eq!(maxdeg, vec![2, 3]);
    }

    #[test]
    fn free_tree_counts() {
        let expected = [
            1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
        ];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let trees: Vec<_> = enumerate_trees(n).unwrap().collect();
            assert_eq!(trees.len(), want, "n={n}");
            assert!(trees.iter().all(|t| t.is_tree() && t.m() == n - 1));
        }
    }

    #[test]
    fn connected_counts() {
        let expected = [1, 1, 2, 6, 21, 112, 853, 11117];
        for (i, &want) in expected.iter().enumerate() {
            let gs: Vec<_> = enumerate_connected(i + 1).unwrap().collect();
            assert_eq!(gs.len(), want, "n={}", i + 1);
            assert!(gs.iter().all(|g| g.is_connected() && g.check_invariants()));
        }
    }

    #[test]
    fn order_out_of_range() {
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(17).is_err());
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(9).is_err());
    }
}
