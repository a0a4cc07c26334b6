//! Deterministic constructors.
//!
//! Numbering is part of the contract: paths and cycles follow traversal
//! order, the star center is 0, double-star supports are 0 and 1 (leaves of
//! 0 first), complete bipartite parts are `0..a` and `a..a+b`.

use super::{Graph, MAX_ORDER};
use crate::error::{argument, Result};

fn check_order(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(argument(format!(
            "{what} needs at least {min} vertices, got {n}"
        )));
    }
    if n > MAX_ORDER {
        return Err(crate::Error::UnsupportedSize {
            n,
            limit: MAX_ORDER,
        });
    }
    Ok(())
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    check_order(n, 1, "path")?;
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

/// Cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    check_order(n, 3, "cycle")?;
    let mut g = path(n)?;
    g.add_edge(n - 1, 0);
    Ok(g)
}

/// Star `K_{1,n-1}` on `n` vertices with center 0.
pub fn star(n: usize) -> Result<Graph> {
    check_order(n, 1, "star")?;
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(0, v);
    }
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph> {
    check_order(n, 1, "complete graph")?;
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(argument(format!(
            "complete_bipartite needs a,b >= 1, got ({a},{b})"
        )));
    }
    check_order(a + b, 2, "complete bipartite graph")?;
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Double star `S_{p,q}`: supports 0 and 1, leaves `2..2+p` on 0 and
/// `2+p..2+p+q` on 1.
pub fn double_star(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < 1 {
        return Err(argument(format!(
            "double_star needs p,q >= 1, got ({p},{q})"
        )));
    }
    check_order(p + q + 2, 4, "double star")?;
    let mut g = Graph::new(p + q + 2);
    g.add_edge(0, 1);
    for i in 0..p {
        g.add_edge(0, 2 + i);
    }
    for i in 0..q {
        g.add_edge(1, 2 + p + i);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_star_2_2() {
        let g = double_star(2, 2).unwrap();
        assert_eq!((g.n(), g.m()), (6, 5));
        assert_eq!((0..6).filter(|&v| g.degree(v) == 3).count(), 2);
    }

    #[test]
    fn cycle_is_2_regular() {
        let g = cycle(5).unwrap();
        assert!((0..5).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn k_1_4_is_star_5() {
        assert_eq!(complete_bipartite(1, 4).unwrap(), star(5).unwrap());
    }

    #[test]
    fn parameters_below_minimum() {
        assert!(path(0).is_err());
        assert!(star(0).is_err());
        assert!(cycle(2).is_err());
        assert!(complete_bipartite(0, 3).is_err());
        assert!(double_star(0, 2).is_err());
        assert!(path(65).is_err());
    }
}
