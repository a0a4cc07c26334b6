//! The reduction from dominating set.
//!
//! For every vertex `v_i` of `G` a double star `T_i` (supports `a_i`, `b_i`;
//! leaves `c_i`, `d_i` on `a_i` and `e_i`, `f_i` on `b_i`) and a vertex
//! `g_i` are added, with edges `v_i a_i` and `v_i g_i`. The result `G'` has
//! `8n` vertices and `γ_rI(G') = 5n + γ(G)`.
//!
//! Numbering: `v_i = i`, then block `i` occupies `n + 7i .. n + 7i + 7` in
//! the order `a, b, c, d, e, f, g`.

use super::{FamilyInstance, FamilyTag};
use crate::error::{argument, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::rid::{is_restrained_italian, Labeling, VertexSet};
use crate::solvers::domination_number;

/// [`reduction_gadget`] as a family member with predicted value
/// `5n + γ(g)`.
pub fn gadget_instance(g: &Graph) -> Result<FamilyInstance> {
    let h = reduction_gadget(g)?;
    let n = g.n();
    let predicted = 5 * n as u32 + domination_number(g).value;
    Ok(FamilyInstance::new(
        FamilyTag::Gadget,
        "G'",
        &[("n", n as i64)],
        h,
        predicted,
    ))
}

/// Vertices per attached block.
pub const GADGET_BLOCK: usize = 7;

const A: usize = 0;
const B: usize = 1;
const G: usize = 6;
/// Block edges in block-local numbering.
const BLOCK_EDGES: [(usize, usize); 5] = [(A, B), (A, 2), (A, 3), (B, 4), (B, 5)];

pub fn reduction_gadget(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n < 1 {
        return Err(argument("reduction gadget needs at least one vertex"));
    }
    if 8 * n > MAX_ORDER {
        return Err(crate::Error::UnsupportedSize {
            n: 8 * n,
            limit: MAX_ORDER,
        });
    }
    let mut h = Graph::new(8 * n);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    for i in 0..n {
        let base = n + GADGET_BLOCK * i;
        for (x, y) in BLOCK_EDGES {
            h.add_edge(base + x, base + y);
        }
        h.add_edge(i, base + A);
        h.add_edge(i, base + G);
    }
    Ok(h)
}

/// The labeling built from a dominating set `s`: `a_i`, `b_i` and every
/// `v ∉ s` get 0, everything else 1. Weight `5n + |s|`.
pub fn gadget_upper_labeling(g: &Graph, s: VertexSet) -> Result<Labeling> {
    let n = g.n();
    let mut values = vec![1u8; 8 * n];
    for i in 0..n {
        if !s.contains(i) {
            values[i] = 0;
        }
        let base = n + GADGET_BLOCK * i;
        values[base + A] = 0;
        values[base + B] = 0;
    }
    Labeling::new(values)
}

/// Minimum weight of one block given the label of its attachment vertex.
///
/// `attached[l]` is the block minimum when `v` is labeled `l ∈ {1, 2}`
/// (index 0 unused). `zero[c][z]` is the minimum when `v` is labeled 0 and
/// the block must supply at least `c` coverage to `v` through `a`, `g` and,
/// if `z == 1`, a 0-neighbor among `a`, `g`. `u32::MAX` marks infeasible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTable {
    pub attached: [u32; 3],
    pub zero: [[u32; 2]; 3],
}

impl BlockTable {
    /// Cheapest block for a 0-labeled `v` that already gets `cov` coverage
    /// and (if `has_zero`) a 0-neighbor from inside `G`.
    pub fn for_zero(&self, cov: u32, has_zero: bool) -> u32 {
        let need = 2u32.saturating_sub(cov) as usize;
        self.zero[need][(!has_zero) as usize]
    }
}

/// Exhausts the `3^7` labelings of one block.
pub fn block_table() -> BlockTable {
    let mut adj = [0u8; GADGET_BLOCK];
    for (x, y) in BLOCK_EDGES {
        adj[x] |= 1 << y;
        adj[y] |= 1 << x;
    }
    let mut table = BlockTable {
        attached: [u32::MAX; 3],
        zero: [[u32::MAX; 2]; 3],
    };
    let mut f = [0u8; GADGET_BLOCK];
    for code in 0..3u32.pow(GADGET_BLOCK as u32) {
        let mut c = code;
        for x in f.iter_mut() {
            *x = (c % 3) as u8;
            c /= 3;
        }
        let weight: u32 = f.iter().map(|&x| x as u32).sum();
        for v_label in 0..3u8 {
            let ok = (0..GADGET_BLOCK).all(|x| {
                if f[x] != 0 {
                    return true;
                }
                let mut sum: u32 = (0..GADGET_BLOCK)
                    .filter(|&y| adj[x] >> y & 1 == 1)
                    .map(|y| f[y] as u32)
                    .sum();
                let mut zero_nb = (0..GADGET_BLOCK).any(|y| adj[x] >> y & 1 == 1 && f[y] == 0);
                if x == A || x == G {
                    sum += v_label as u32;
                    zero_nb |= v_label == 0;
                }
                sum >= 2 && zero_nb
            });
            if !ok {
                continue;
            }
            if v_label > 0 {
                let slot = &mut table.attached[v_label as usize];
                *slot = (*slot).min(weight);
                continue;
            }
            let supplied = (f[A] + f[G]) as usize;
            let gives_zero = f[A] == 0 || f[G] == 0;
            for need in 0..3 {
                for need_zero in 0..2 {
                    if supplied >= need && (need_zero == 0 || gives_zero) {
                        let slot = &mut table.zero[need][need_zero];
                        *slot = (*slot).min(weight);
                    }
                }
            }
        }
    }
    table
}

/// `γ_rI(G')` computed through the blocks: minimize over all labelings
/// `h` of `V(G)` the weight of `h` plus, per vertex, the cheapest
/// compatible block. Exact, since blocks touch `G` only at their own `v_i`.
pub fn gadget_by_blocks(g: &Graph, table: &BlockTable) -> u32 {
    let n = g.n();
    let mut best = u32::MAX;
    let mut h = vec![0u8; n];
    for code in 0..3u64.pow(n as u32) {
        let mut c = code;
        for x in h.iter_mut() {
            *x = (c % 3) as u8;
            c /= 3;
        }
        let mut total: u32 = h.iter().map(|&x| x as u32).sum();
        for v in 0..n {
            let block = if h[v] > 0 {
                table.attached[h[v] as usize]
            } else {
                let cov: u32 = g.neighbors(v).map(|u| h[u] as u32).sum();
                let has_zero = g.neighbors(v).any(|u| h[u] == 0);
                table.for_zero(cov, has_zero)
            };
            if block == u32::MAX {
                total = u32::MAX;
                break;
            }
            total += block;
        }
        best = best.min(total);
    }
    best
}

/// Two-sided evidence for `γ_rI(G') = 5n + γ(G)` that never searches `G'`
/// directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetCertificate {
    pub n: usize,
    pub gamma: u32,
    /// `5n + γ(G)`.
    pub claimed: u32,
    /// Labeling from a minimum dominating set.
    pub upper_witness: Labeling,
    /// The witness is an RID function of `G'` of weight `claimed`.
    pub upper_ok: bool,
    /// Exact value from [`gadget_by_blocks`].
    pub by_blocks: u32,
    /// Smallest block weight over all attachment labels (at least 5).
    pub block_floor: u32,
    /// Smallest block weight when `v` is 0 and `G` gives it nothing (at
    /// least 6).
    pub unsupported_floor: u32,
}

impl GadgetCertificate {
    pub fn holds(&self) -> bool {
        self.upper_ok
            && self.by_blocks == self.claimed
            && self.block_floor >= 5
            && self.unsupported_floor >= 6
    }
}

pub fn gadget_certificate(g: &Graph) -> Result<GadgetCertificate> {
    let gadget = reduction_gadget(g)?;
    let dom = domination_number(g);
    let n = g.n();
    let claimed = 5 * n as u32 + dom.value;
    let upper_witness = gadget_upper_labeling(g, dom.witness)?;
    let upper_ok =
        is_restrained_italian(&gadget, &upper_witness)? && upper_witness.weight() == claimed;
    let table = block_table();
    let block_floor = table.attached[1..]
        .iter()
        .chain(table.zero.iter().flatten())
        .copied()
        .min()
        .unwrap();
    let unsupported_floor = table.zero[2][0].min(table.zero[2][1]);
    Ok(GadgetCertificate {
        n,
        gamma: dom.value,
        claimed,
        upper_witness,
        upper_ok,
        by_blocks: gadget_by_blocks(g, &table),
        block_floor,
        unsupported_floor,
    })
}
