use super::SolveResult;
use crate::graph::Graph;
use crate::rid::{dominating_mask, restrained_dominating_mask, VertexSet};

/// Smallest set satisfying `pred`, scanning sizes upward and, within a size,
/// masks in increasing numeric order. The full vertex set always qualifies
/// for both predicates used here.
fn smallest_set(
    g: &Graph,
    start: usize,
    pred: impl Fn(&Graph, u64) -> bool,
) -> SolveResult<VertexSet> {
    let n = g.n();
    let mut nodes = 0u64;
    for k in start..=n {
        if k == 0 {
            nodes += 1;
            if pred(g, 0) {
                return SolveResult {
                    value: 0,
                    witness: VertexSet::from_mask(0),
                    nodes_explored: nodes,
                };
            }
            continue;
        }
        let last = g.vertex_mask();
        let mut s: u64 = crate::graph::full_mask(k);
        loop {
            nodes += 1;
            if pred(g, s) {
                return SolveResult {
                    value: k as u32,
                    witness: VertexSet::from_mask(s),
                    nodes_explored: nodes,
                };
            }
            // Gosper's hack: next mask with the same popcount.
            let c = s & s.wrapping_neg();
            let r = s.wrapping_add(c);
            if r == 0 || r > last {
                break;
            }
            let next = (((r ^ s) >> 2) / c) | r;
            if next > last {
                break;
            }
            s = next;
        }
    }
    unreachable!("the full vertex set qualifies")
}

/// `γ(g)`: minimum dominating set.
pub fn domination_number(g: &Graph) -> SolveResult<VertexSet> {
    let n = g.n();
    let start = if n == 0 {
        0
    } else {
        n.div_ceil(g.max_degree() + 1)
    };
    smallest_set(g, start, dominating_mask)
}

/// `γ_r(g)`: minimum restrained dominating set.
pub fn restrained_domination_number(g: &Graph) -> SolveResult<VertexSet> {
    let n = g.n();
    let start = if n == 0 {
        0
    } else {
        n.div_ceil(g.max_degree() + 1)
    };
    smallest_set(g, start, restrained_dominating_mask)
}
