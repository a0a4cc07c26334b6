use super::{FamilyInstance, FamilyTag};
use crate::graph::{cycle, path, star, Graph};

/// Connected graphs with `γ_rI = n`: `K_1`, the stars `K_{1,n-1}`, `C_4`,
/// `C_5`, `P_4`, `P_5`, `P_6`, restricted to order `n`.
pub fn terminal_family(n: usize) -> Vec<Graph> {
    terminal_instances(n).into_iter().map(|i| i.graph).collect()
}

pub fn terminal_instances(n: usize) -> Vec<FamilyInstance> {
    let mk = |label: String, g: Graph| {
        FamilyInstance::new(FamilyTag::TerminalN, label, &[("n", n as i64)], g, n as u32)
    };
    let mut out = Vec::new();
    match n {
        0 => return out,
        1 => out.push(mk("K_1".into(), Graph::new(1))),
        _ => out.push(mk(format!("K_{{1,{}}}", n - 1), star(n).unwrap())),
    }
    if n == 4 || n == 5 {
        out.push(mk(format!("C_{n}"), cycle(n).unwrap()));
    }
    if (4..=6).contains(&n) {
        out.push(mk(format!("P_{n}"), path(n).unwrap()));
    }
    out
}
