//! Canonical labeling by individualization and refinement.
//!
//! The ordered partition is refined to an equitable one by splitting cells
//! on neighbor counts into every other cell. The first non-singleton cell is
//! then individualized vertex by vertex. Every discrete leaf yields a
//! relabeled adjacency matrix; the lexicographically smallest is the
//! canonical form. Leaves with equal matrices expose automorphisms, which
//! prune sibling branches lying in the same orbit of the pointwise
//! stabilizer of the current prefix.

use super::{bits, Graph};

/// Adjacency rows of a canonically relabeled graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency(self.rows.clone())
    }
}

/// Canonical form of `g`: equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Canonical form together with the labeling that produced it
/// (`labeling[i]` is the vertex placed at position `i`).
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (
            CanonicalForm {
                n,
                rows: Vec::new(),
            },
            Vec::new(),
        );
    }
    let mut search = Search {
        g,
        best: None,
        first: None,
        automorphisms: Vec::new(),
    };
    let root = vec![(0..n).collect::<Vec<_>>()];
    let mut prefix = Vec::new();
    search.run(root, &mut prefix);
    let (rows, lab) = search.best.expect("at least one leaf");
    (CanonicalForm { n, rows }, lab)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    /// Stored as images: `perm[v]`.
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, mut partition: Partition, prefix: &mut Vec<usize>) {
        refine(self.g, &mut partition);
        let Some(target) = partition.iter().position(|c| c.len() > 1) else {
            self.leaf(&partition);
            return;
        };
        let cell = partition[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit(prefix, v, &explored) {
                continue;
            }
            let mut child = partition.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            prefix.push(v);
            self.run(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, partition: &Partition) {
        let lab: Vec<usize> = partition.iter().map(|c| c[0]).collect();
        let mut pos = vec![0; lab.len()];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = lab
            .iter()
            .map(|&v| bits(self.g.neighbor_mask(v)).fold(0u64, |acc, u| acc | 1 << pos[u]))
            .collect();

        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == rows {
                let mut perm = vec![0; lab.len()];
                for (i, &v) in reference.1.iter().enumerate() {
                    perm[v] = lab[i];
                }
                if perm.iter().enumerate().any(|(i, &p)| i != p) {
                    self.automorphisms.push(perm);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((rows.clone(), lab.clone()));
        }
        if self.best.as_ref().is_none_or(|b| rows < b.0) {
            self.best = Some((rows, lab));
        }
    }

    /// Whether `v` shares an orbit with an explored vertex under the group
    /// generated by known automorphisms fixing `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for perm in &self.automorphisms {
            if prefix.iter().any(|&x| perm[x] != x) {
                continue;
            }
            any = true;
            for (x, &y) in perm.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// Refines `partition` in place to the coarsest equitable refinement.
/// Sub-cells are ordered by their count signature, which keeps the result
/// invariant under relabeling.
fn refine(g: &Graph, partition: &mut Partition) {
    loop {
        let masks: Vec<u64> = partition
            .iter()
            .map(|c| c.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect();
        let mut changed = false;
        let mut next: Partition = Vec::with_capacity(partition.len());
        for cell in partition.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let adj = g.neighbor_mask(v);
                    (masks.iter().map(|m| (adj & m).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            if next.last().map(|c| c.len()) != Some(cell.len()) {
                changed = true;
            }
        }
        *partition = next;
        if !changed {
            return;
        }
    }
}
