use super::SolveResult;
use crate::graph::{bits, Graph};
use crate::rid::Labeling;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rule {
    /// Neighbor value sum at least 2.
    Italian,
    /// Some neighbor labeled 2.
    Roman,
}

/// `γ_rI(g)` by branch and bound.
///
/// The optimum is found by searching each component in BFS order from a
/// maximum-degree vertex. A second, bounded search in vertex order
/// `0..n-1` then returns the lexicographically first optimal labeling
/// (label order `0 < 1 < 2`).
pub fn rid_number_exact(g: &Graph) -> SolveResult<Labeling> {
    solve(g, Rule::Italian)
}

/// `γ_rR(g)`, the restrained Roman domination number.
pub fn rrd_number(g: &Graph) -> SolveResult<Labeling> {
    solve(g, Rule::Roman)
}

fn solve(g: &Graph, rule: Rule) -> SolveResult<Labeling> {
    let mut ones = 0u64;
    let mut twos = 0u64;
    let mut value = 0;
    let mut nodes = 0;
    for comp in g.components() {
        let mut search = Search::new(g, rule, bfs_order(g, &comp), comp.len() as u32 + 1, false);
        search.run(0);
        let opt = search.bound;
        nodes += search.nodes;

        let mut lex = Search::new(g, rule, comp, opt + 1, true);
        lex.run(0);
        let (o, t) = lex.best.expect("an optimal labeling exists");
        nodes += lex.nodes;
        ones |= o;
        twos |= t;
        value += opt;
    }
    SolveResult {
        value,
        witness: Labeling::from_masks(g.n(), ones, twos),
        nodes_explored: nodes,
    }
}

/// BFS from the lowest-indexed vertex of maximum degree in `comp`.
fn bfs_order(g: &Graph, comp: &[usize]) -> Vec<usize> {
    let start = *comp
        .iter()
        .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    let mut order = vec![start];
    let mut seen = 1u64 << start;
    let mut i = 0;
    while i < order.len() {
        let fresh = g.neighbor_mask(order[i]) & !seen;
        seen |= fresh;
        order.extend(bits(fresh));
        i += 1;
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    rule: Rule,
    order: Vec<usize>,
    assigned: u64,
    zeros: u64,
    ones: u64,
    twos: u64,
    weight: u32,
    /// Only labelings of weight strictly below this are sought.
    bound: u32,
    best: Option<(u64, u64)>,
    stop_at_first: bool,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, rule: Rule, order: Vec<usize>, bound: u32, stop_at_first: bool) -> Self {
        Search {
            g,
            rule,
            order,
            assigned: 0,
            zeros: 0,
            ones: 0,
            twos: 0,
            weight: 0,
            bound,
            best: None,
            stop_at_first,
            nodes: 0,
        }
    }

    /// Returns true when the search should stop.
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            self.best = Some((self.ones, self.twos));
            self.bound = self.weight;
            return self.stop_at_first;
        }
        let v = self.order[depth];
        let bit = 1u64 << v;
        for label in 0..3u32 {
            if self.weight + label >= self.bound {
                break;
            }
            self.nodes += 1;
            self.assigned |= bit;
            match label {
                0 => self.zeros |= bit,
                1 => self.ones |= bit,
                _ => self.twos |= bit,
            }
            self.weight += label;

            let viable = self.locally_viable(v) && self.weight + self.lower_bound() < self.bound;
            let stop = viable && self.run(depth + 1);

            self.weight -= label;
            self.assigned &= !bit;
            self.zeros &= !bit;
            self.ones &= !bit;
            self.twos &= !bit;
            if stop {
                return true;
            }
        }
        false
    }

    /// Can every 0-vertex in `N[v]` still be satisfied?
    fn locally_viable(&self, v: usize) -> bool {
        let closed = self.g.neighbor_mask(v) | 1 << v;
        bits(closed & self.zeros).all(|w| {
            let nb = self.g.neighbor_mask(w);
            let open = nb & !self.assigned;
            let covered = match self.rule {
                Rule::Italian => {
                    (nb & self.ones).count_ones() + 2 * (nb & self.twos).count_ones() >= 2
                        || open != 0
                }
                Rule::Roman => nb & self.twos != 0 || open != 0,
            };
            covered && (nb & self.zeros != 0 || open != 0)
        })
    }

    /// Weight still owed to under-covered 0-vertices, summed over a greedy
    /// family of them whose unassigned neighborhoods are pairwise disjoint.
    fn lower_bound(&self) -> u32 {
        let mut used = 0u64;
        let mut total = 0;
        for w in bits(self.zeros) {
            let nb = self.g.neighbor_mask(w);
            let deficit = match self.rule {
                Rule::Italian => 2u32.saturating_sub(
                    (nb & self.ones).count_ones() + 2 * (nb & self.twos).count_ones(),
                ),
                Rule::Roman => {
                    if nb & self.twos == 0 {
                        2
                    } else {
                        0
                    }
                }
            };
            let open = nb & !self.assigned;
            if deficit > 0 && open & used == 0 {
                used |= open;
                total += deficit;
            }
        }
        total
    }
}
