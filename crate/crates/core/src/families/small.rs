//! Membership predicates for the `γ_rI ∈ {2, 3}` characterizations, and the
//! sharpness witnesses of the η bound.

use super::{FamilyInstance, FamilyTag};
use crate::error::{argument, domain, Result};
use crate::graph::{bits, Graph};

/// `Ω`: a complete bipartite graph with parts `X`, `Y`, `|X| ∈ {1, 2}`,
/// `|Y| >= 2`, `|X| <= |Y|`, plus edges inside `Y` such that `G[Y]` has no
/// isolated vertex. `X` is independent. Tried for every `X` of size 1
/// and 2.
pub fn is_in_omega(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n < 3 {
        return Err(domain(format!("Ω membership needs n >= 3, got {n}")));
    }
    let all = g.vertex_mask();
    let fits = |x: u64| {
        let y = all & !x;
        y.count_ones() >= 2
            && bits(x).all(|v| g.neighbor_mask(v) == y)
            && bits(y).all(|v| g.neighbor_mask(v) & y != 0)
    };
    for u in 0..n {
        if fits(1 << u) {
            return Ok(true);
        }
        for v in u + 1..n {
            if fits(1 << u | 1 << v) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// `Ψ`: either (i) some vertex has degree `n-1` and exactly one vertex has
/// degree 1, or (ii) there are `x`, `y` with `N(x) = V(H)` for
/// `H = G - {x, y}`, `δ(H) >= 1`, `N(y) ⊆ V(H)` and
/// `1 <= deg(y) <= |V(H)| - 1`.
pub fn is_in_psi(g: &Graph) -> bool {
    let n = g.n();
    if n < 2 {
        return false;
    }
    let degree_one = (0..n).filter(|&v| g.degree(v) == 1).count();
    if g.max_degree() == n - 1 && degree_one == 1 {
        return true;
    }
    let all = g.vertex_mask();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let h = all & !(1 << x) & !(1 << y);
            let hn = h.count_ones() as usize;
            let ny = g.neighbor_mask(y);
            if g.neighbor_mask(x) == h
                && ny & !h == 0
                && (1..hn).contains(&(ny.count_ones() as usize))
                && bits(h).all(|v| g.neighbor_mask(v) & h != 0)
            {
                return true;
            }
        }
    }
    false
}

/// `Θ`: some 3-set `S` (any edges inside) such that `K = G - S` is nonempty
/// with `δ(K) >= 1` and every vertex of `K` has at least two neighbors in
/// `S`.
pub fn is_in_theta(g: &Graph) -> bool {
    let n = g.n();
    let all = g.vertex_mask();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let s = 1u64 << a | 1 << b | 1 << c;
                let k = all & !s;
                if k != 0
                    && bits(k).all(|v| {
                        let nb = g.neighbor_mask(v);
                        nb & k != 0 && (nb & s).count_ones() >= 2
                    })
                {
                    return true;
                }
            }
        }
    }
    false
}

/// `k >= 2` triangles sharing vertex 0; triangle `i` is `0, 2i+1, 2i+2`.
pub fn friendship(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(argument("friendship graph needs k >= 2 triangles"));
    }
    let mut g = Graph::try_new(2 * k + 1)?;
    for i in 0..k {
        let (p, q) = (2 * i + 1, 2 * i + 2);
        g.add_edge(0, p);
        g.add_edge(0, q);
        g.add_edge(p, q);
    }
    Ok(g)
}

/// [`friendship`] with the last vertex removed, leaving a pendant at the
/// shared vertex. Sharpness of the third η term needs `k >= 4`.
pub fn friendship_minus_vertex(k: usize) -> Result<Graph> {
    let g = friendship(k)?;
    Ok(g.remove_vertex(2 * k))
}

/// An `Ω` member: `K_{x,y}` (`X = 0..x`) with `G[Y]` a path.
pub fn omega_member(x: usize, y: usize) -> Result<FamilyInstance> {
    if !(1..=2).contains(&x) || y < 2 || y < x {
        return Err(argument(format!(
            "Ω needs x in {{1, 2}}, y >= max(2, x); got ({x}, {y})"
        )));
    }
    let mut g = Graph::try_new(x + y)?;
    for u in 0..x {
        for v in x..x + y {
            g.add_edge(u, v);
        }
    }
    for v in x..x + y - 1 {
        g.add_edge(v, v + 1);
    }
    let params = [("x", x as i64), ("y", y as i64)];
    Ok(FamilyInstance::new(
        FamilyTag::Omega,
        format!("K_{{{x},{y}}} + P_{y}"),
        &params,
        g,
        2,
    ))
}

/// A `Ψ` member of the first kind: [`friendship_minus_vertex`].
pub fn psi_member(k: usize) -> Result<FamilyInstance> {
    let g = friendship_minus_vertex(k)?;
    Ok(FamilyInstance::new(
        FamilyTag::Psi,
        format!("F_{k} - v"),
        &[("k", k as i64)],
        g,
        3,
    ))
}

/// A `Θ \ Ω` member: `S = {0, 1, 2}` independent, `K` is `k` disjoint
/// edges `a-b` (`a = 3+2i`, `b = 4+2i`) with `a ~ 0, 1` and `b ~ 1, 2`.
pub fn theta_member(k: usize) -> Result<FamilyInstance> {
    if k < 1 {
        return Err(argument("Θ member needs k >= 1"));
    }
    let mut g = Graph::try_new(3 + 2 * k)?;
    for i in 0..k {
        let (a, b) = (3 + 2 * i, 4 + 2 * i);
        for (u, v) in [(a, b), (a, 0), (a, 1), (b, 1), (b, 2)] {
            g.add_edge(u, v);
        }
    }
    Ok(FamilyInstance::new(
        FamilyTag::Theta,
        format!("Theta_{k}"),
        &[("k", k as i64)],
        g,
        3,
    ))
}
