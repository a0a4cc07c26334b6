//! `γ_rI` on trees in linear time.
//!
//! Root the tree at vertex 0 and summarize each rooted subtree by the state
//! of its root: labeled 1, labeled 2, or labeled 0 together with the
//! coverage it still needs from its parent (0, 1 or 2) and whether it still
//! needs a 0-labeled parent (it has no 0-child). A 0-labeled vertex merges
//! its children by a min-plus knapsack over (coverage received, capped at
//! 2) x (has a 0-child).

use super::SolveResult;
use crate::error::{domain, Result};
use crate::graph::Graph;
use crate::rid::Labeling;

const STATES: usize = 8;
const L1: usize = 6;
const L2: usize = 7;
const INF: u32 = u32::MAX / 4;

/// The root summary of a rooted subtree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DpState {
    One,
    Two,
    Zero {
        /// Coverage still missing, supplied by the parent's label.
        owed: u8,
        /// No 0-child, so the parent must be labeled 0.
        needs_zero_parent: bool,
    },
}

impl DpState {
    /// Position in the tie-breaking order: all 0-states first, then 1, 2.
    pub fn index(self) -> usize {
        match self {
            DpState::Zero {
                owed,
                needs_zero_parent,
            } => owed as usize * 2 + needs_zero_parent as usize,
            DpState::One => L1,
            DpState::Two => L2,
        }
    }

    pub fn from_index(i: usize) -> Self {
        match i {
            L1 => DpState::One,
            L2 => DpState::Two,
            _ => DpState::Zero {
                owed: (i / 2) as u8,
                needs_zero_parent: i % 2 == 1,
            },
        }
    }

    pub fn label(self) -> u8 {
        match self {
            DpState::One => 1,
            DpState::Two => 2,
            DpState::Zero { .. } => 0,
        }
    }

    /// Can a child in this state sit under a parent labeled `parent`?
    pub fn fits_under(self, parent: u8) -> bool {
        match self {
            DpState::One | DpState::Two => true,
            DpState::Zero {
                owed,
                needs_zero_parent,
            } => owed <= parent && (!needs_zero_parent || parent == 0),
        }
    }

    /// Admissible at the root, where there is no parent.
    pub fn is_root_feasible(self) -> bool {
        self.fits_under(0)
            && !matches!(
                self,
                DpState::Zero {
                    owed: 0,
                    needs_zero_parent: true
                }
            )
    }
}

/// Accumulator for a 0-labeled vertex: coverage (0..=2) and has-0-child.
const ACCS: usize = 6;

fn acc_index(cov: u32, has_zero_child: bool) -> usize {
    cov.min(2) as usize * 2 + has_zero_child as usize
}

/// Back-pointers for one vertex.
struct Choices {
    /// For labels 1 and 2: the chosen state of each child.
    labeled: [Vec<u8>; 2],
    /// For label 0: per child step and resulting accumulator,
    /// `(previous accumulator, child state)`.
    zero: Vec<[(u8, u8); ACCS]>,
    /// Final accumulator cost for label 0.
    zero_final: [u32; ACCS],
}

/// `γ_rI(t)` for a tree `t` by dynamic programming, with a witness.
pub fn rid_number_tree_dp(t: &Graph) -> Result<SolveResult<Labeling>> {
    if !t.is_tree() {
        return Err(domain("tree dynamic program needs a tree"));
    }
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    let mut seen = 1u64;
    while let Some(v) = stack.pop() {
        order.push(v);
        for w in t.neighbors(v) {
            if seen >> w & 1 == 0 {
                seen |= 1 << w;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let children: Vec<Vec<usize>> = (0..n)
        .map(|v| t.neighbors(v).filter(|&w| parent[w] == v).collect())
        .collect();

    let mut cost = vec![[INF; STATES]; n];
    let mut choices: Vec<Option<Choices>> = (0..n).map(|_| None).collect();
    let mut nodes = 0u64;

    for &v in order.iter().rev() {
        let kids = &children[v];
        let mut c = [INF; STATES];

        let mut labeled: [Vec<u8>; 2] = [Vec::new(), Vec::new()];
        for label in 1..=2u8 {
            let mut total = label as u32;
            for &k in kids {
                let (s, best) = (0..STATES)
                    .filter(|&s| DpState::from_index(s).fits_under(label))
                    .map(|s| (s, cost[k][s]))
                    .min_by_key(|&(s, x)| (x, s))
                    .unwrap();
                nodes += STATES as u64;
                total = total.saturating_add(best);
                labeled[label as usize - 1].push(s as u8);
            }
            c[if label == 1 { L1 } else { L2 }] = total.min(INF);
        }

        let mut acc = [INF; ACCS];
        acc[acc_index(0, false)] = 0;
        let mut zero = Vec::with_capacity(kids.len());
        for &k in kids {
            let mut next = [INF; ACCS];
            let mut back = [(0u8, 0u8); ACCS];
            for (a, &acc_a) in acc.iter().enumerate() {
                if acc_a >= INF {
                    continue;
                }
                let (cov, hz) = ((a / 2) as u32, a % 2 == 1);
                for (s, &kid_cost) in cost[k].iter().enumerate() {
                    let st = DpState::from_index(s);
                    if !st.fits_under(0) || kid_cost >= INF {
                        continue;
                    }
                    nodes += 1;
                    let b = match st {
                        DpState::One => acc_index(cov + 1, hz),
                        DpState::Two => acc_index(cov + 2, hz),
                        DpState::Zero { .. } => acc_index(cov, true),
                    };
                    let x = acc_a + kid_cost;
                    if x < next[b] {
                        next[b] = x;
                        back[b] = (a as u8, s as u8);
                    }
                }
            }
            acc = next;
            zero.push(back);
        }
        for (a, &x) in acc.iter().enumerate() {
            if x < INF {
                let (cov, hz) = (a / 2, a % 2 == 1);
                let st = DpState::Zero {
                    owed: (2 - cov) as u8,
                    needs_zero_parent: !hz,
                };
                c[st.index()] = x;
            }
        }
        cost[v] = c;
        choices[v] = Some(Choices {
            labeled,
            zero,
            zero_final: acc,
        });
    }

    let (root_state, value) = (0..STATES)
        .filter(|&s| DpState::from_index(s).is_root_feasible())
        .map(|s| (s, cost[0][s]))
        .min_by_key(|&(s, x)| (x, s))
        .unwrap();

    let mut state = vec![0usize; n];
    state[0] = root_state;
    let mut values = vec![0u8; n];
    for &v in &order {
        let st = DpState::from_index(state[v]);
        values[v] = st.label();
        let ch = choices[v].as_ref().unwrap();
        let kids = &children[v];
        match st {
            DpState::One | DpState::Two => {
                for (i, &k) in kids.iter().enumerate() {
                    state[k] = ch.labeled[st.label() as usize - 1][i] as usize;
                }
            }
            DpState::Zero {
                owed,
                needs_zero_parent,
            } => {
                let mut a = acc_index(2 - owed as u32, !needs_zero_parent);
                debug_assert!(ch.zero_final[a] < INF);
                for i in (0..kids.len()).rev() {
                    let (prev, s) = ch.zero[i][a];
                    state[kids[i]] = s as usize;
                    a = prev as usize;
                }
            }
        }
    }

    Ok(SolveResult {
        value,
        witness: Labeling::new(values)?,
        nodes_explored: nodes,
    })
}
