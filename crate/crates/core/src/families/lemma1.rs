//! Five structural conditions, each forcing `γ_rI(G) <= n - 2`.
//!
//! 1. Two adjacent vertices of degree at least 3.
//! 2. Diameter at least 9.
//! 3. `d(u, v) = 4` with `deg(u) >= 3` and `deg(v) >= 2`.
//! 4. A vertex `u` with three paths `u-a_i-b_i-c_i` sharing only `u`.
//! 5. A (not necessarily induced) `P_7` `v_1 ... v_7` with extra distinct
//!    neighbors `v_3'` of `v_3` and `v_5'` of `v_5` off the path.

use std::collections::BTreeSet;

use crate::error::{domain, Result};
use crate::graph::{bits, Graph};

pub fn lemma1_conditions(g: &Graph) -> Result<BTreeSet<u8>> {
    if g.n() == 0 || !g.is_connected() {
        return Err(domain("lemma conditions need a connected, nonempty graph"));
    }
    let mut out = BTreeSet::new();
    if adjacent_high_degree(g) {
        out.insert(1);
    }
    let dist = g.distance_matrix();
    if dist.iter().flatten().any(|&d| d >= 9) {
        out.insert(2);
    }
    if distance_four_pair(g, &dist) {
        out.insert(3);
    }
    if three_disjoint_rays(g) {
        out.insert(4);
    }
    if seven_path_with_two_pendants(g) {
        out.insert(5);
    }
    Ok(out)
}

fn adjacent_high_degree(g: &Graph) -> bool {
    g.edges().any(|(u, v)| g.degree(u) >= 3 && g.degree(v) >= 3)
}

fn distance_four_pair(g: &Graph, dist: &[Vec<usize>]) -> bool {
    (0..g.n()).any(|u| g.degree(u) >= 3 && (0..g.n()).any(|v| dist[u][v] == 4 && g.degree(v) >= 2))
}

fn three_disjoint_rays(g: &Graph) -> bool {
    (0..g.n()).filter(|&u| g.degree(u) >= 3).any(|u| {
        let not_u = !(1u64 << u);
        let mut rays: Vec<u64> = Vec::new();
        for a in g.neighbors(u) {
            for b in bits(g.neighbor_mask(a) & not_u) {
                for c in bits(g.neighbor_mask(b) & not_u & !(1 << a)) {
                    rays.push(1 << a | 1 << b | 1 << c);
                }
            }
        }
        rays.sort_unstable();
        rays.dedup();
        pick_disjoint(&rays, 0, 0, 3)
    })
}

fn pick_disjoint(rays: &[u64], from: usize, used: u64, left: usize) -> bool {
    if left == 0 {
        return true;
    }
    (from..rays.len())
        .any(|i| rays[i] & used == 0 && pick_disjoint(rays, i + 1, used | rays[i], left - 1))
}

fn seven_path_with_two_pendants(g: &Graph) -> bool {
    let mut path = Vec::with_capacity(7);
    (0..g.n()).any(|s| {
        path.clear();
        path.push(s);
        extend_path(g, &mut path, 1 << s)
    })
}

fn extend_path(g: &Graph, path: &mut Vec<usize>, used: u64) -> bool {
    if path.len() == 7 {
        let a = g.neighbor_mask(path[2]) & !used;
        let b = g.neighbor_mask(path[4]) & !used;
        return a != 0 && b != 0 && (a | b).count_ones() >= 2;
    }
    let last = *path.last().unwrap();
    for w in bits(g.neighbor_mask(last) & !used) {
        path.push(w);
        let found = extend_path(g, path, used | 1 << w);
        path.pop();
        if found {
            return true;
        }
    }
    false
}
