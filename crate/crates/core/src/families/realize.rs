use super::{FamilyInstance, FamilyTag};
use crate::error::{argument, Result};
use crate::graph::{star, Graph};

/// A tree with `γ_r = a` and `γ_rI = b`, for `2 <= a <= b <= 2a`,
/// `(a, b) != (2, 3)`.
///
/// * `b = 2a`: `K_{1,a-1}` (center 0) with every edge subdivided twice; ray
///   `i` is `0 - 3i+1 - 3i+2 - 3i+3`.
/// * `b = a`: the star `K_{1,a-1}`, center 0.
/// * `a < b < 2a`: `K_{1,a}` (center 0, leaves `1..=a`) with a pendant
///   `a+i` on leaf `i` for `i = 1..=b-a`.
pub fn realizability_tree(a: usize, b: usize) -> Result<FamilyInstance> {
    if !(2 <= a && a <= b && b <= 2 * a) {
        return Err(argument(format!(
            "(a, b) = ({a}, {b}) violates 2 <= a <= b <= 2a"
        )));
    }
    if (a, b) == (2, 3) {
        return Err(argument(
            "(a, b) = (2, 3) is not realizable: γ_r(T) = 2 forces T ∈ {P_2, P_4}",
        ));
    }
    let g = if b == 2 * a {
        let mut g = Graph::try_new(1 + 3 * (a - 1))?;
        for i in 0..a - 1 {
            let base = 3 * i;
            g.add_edge(0, base + 1);
            g.add_edge(base + 1, base + 2);
            g.add_edge(base + 2, base + 3);
        }
        g
    } else if a == b {
        star(a)?
    } else {
        let mut g = star(a + 1)?;
        for i in 1..=b - a {
            let w = g.add_vertex();
            g.add_edge(i, w);
        }
        g
    };
    Ok(FamilyInstance::new(
        FamilyTag::Realize,
        format!("R({a},{b})"),
        &[("a", a as i64), ("b", b as i64)],
        g,
        b as u32,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let r = realizability_tree(3, 6).unwrap();
        assert_eq!(r.graph.n(), 7);
        assert_eq!(r.graph.degree(0), 2);
        assert_eq!(realizability_tree(4, 4).unwrap().graph, star(4).unwrap());
        let r = realizability_tree(3, 4).unwrap();
        assert_eq!((r.graph.n(), r.graph.leaves().len()), (5, 3));
    }

    #[test]
    fn excluded_pairs() {
        assert!(realizability_tree(2, 3).is_err());
        assert!(realizability_tree(1, 1).is_err());
        assert!(realizability_tree(3, 7).is_err());
        assert!(realizability_tree(4, 3).is_err());
    }
}
