//! The extremal trees with `2 γ_rI(T) = n + 3`.

use std::fmt;
use std::str::FromStr;

use super::{FamilyInstance, FamilyTag};
use crate::error::{argument, Result};
use crate::graph::{double_star, path, Graph};

/// The five sporadic members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JTag {
    T1,
    T2,
    T3,
    T4,
    T5,
}

impl JTag {
    pub const ALL: [JTag; 5] = [JTag::T1, JTag::T2, JTag::T3, JTag::T4, JTag::T5];
}

impl fmt::Display for JTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = *self as usize + 1;
        write!(f, "T{i}")
    }
}

impl FromStr for JTag {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim_start_matches("J.") {
            "T1" => Ok(JTag::T1),
            "T2" => Ok(JTag::T2),
            "T3" => Ok(JTag::T3),
            "T4" => Ok(JTag::T4),
            "T5" => Ok(JTag::T5),
            _ => Err(argument(format!(
                "unknown extremal tree tag {s:?} (expected T1..T5)"
            ))),
        }
    }
}

/// `T_{4,k}`: `k` copies of `K_{1,3}` (center `u_i = 4i`, leaves
/// `v_i, w_i, x_i = 4i+1, 4i+2, 4i+3`) plus `z = 4k` joined to every `x_i`.
pub fn build_t4k(k: usize) -> Result<FamilyInstance> {
    if k < 1 {
        return Err(argument("T_{4,k} needs k >= 1"));
    }
    let n = 4 * k + 1;
    let mut g = Graph::try_new(n)?;
    for i in 0..k {
        let u = 4 * i;
        for leaf in 1..=3 {
            g.add_edge(u, u + leaf);
        }
        g.add_edge(u + 3, 4 * k);
    }
    Ok(FamilyInstance::new(
        FamilyTag::JT4k,
        format!("T_{{4,{k}}}"),
        &[("k", k as i64)],
        g,
        2 * k as u32 + 2,
    ))
}

/// The sporadic extremal trees.
///
/// * T1: `P_3`.
/// * T2: `S_{2,3}` (numbering of [`double_star`]).
/// * T3: spine `0-1-2`, each spine vertex with two leaves (`3,4`, `5,6`,
///   `7,8`).
/// * T4: `S_{2,2}` (supports 0, 1; leaves 2, 3 on 0 and 4, 5 on 1), then
///   `5-6`, a leaf 7 on 6, `6-8`, and two leaves 9, 10 on 8.
/// * T5: `S_{2,2}` with vertex 6 pendant at leaf 5.
pub fn build_j(tag: JTag) -> FamilyInstance {
    let (ftag, g) = match tag {
        JTag::T1 => (FamilyTag::JT1, path(3).unwrap()),
        JTag::T2 => (FamilyTag::JT2, double_star(2, 3).unwrap()),
        JTag::T3 => (
            FamilyTag::JT3,
            Graph::from_edges(
                9,
                [
                    (0, 1),
                    (1, 2),
                    (0, 3),
                    (0, 4),
                    (1, 5),
                    (1, 6),
                    (2, 7),
                    (2, 8),
                ],
            )
            .unwrap(),
        ),
        JTag::T4 => {
            let mut g = double_star(2, 2).unwrap();
            for _ in 0..5 {
                g.add_vertex();
            }
            for (u, v) in [(5, 6), (6, 7), (6, 8), (8, 9), (8, 10)] {
                g.add_edge(u, v);
            }
            (FamilyTag::JT4, g)
        }
        JTag::T5 => {
            let mut g = double_star(2, 2).unwrap();
            let z = g.add_vertex();
            g.add_edge(5, z);
            (FamilyTag::JT5, g)
        }
    };
    let n = g.n() as u32;
    FamilyInstance::new(ftag, tag.to_string(), &[], g, (n + 3) / 2)
}

/// Every member of the extremal family on exactly `n` vertices.
pub fn j_members(n: usize) -> Vec<FamilyInstance> {
    let mut out: Vec<FamilyInstance> = JTag::ALL
        .iter()
        .map(|&t| build_j(t))
        .filter(|inst| inst.graph.n() == n)
        .collect();
    if n >= 5 && (n - 1).is_multiple_of(4) {
        out.push(build_t4k((n - 1) / 4).unwrap());
    }
    out
}
