//! Named graph families: extremal trees, small- and large-value
//! characterizations, realizability witnesses, the NP-hardness gadget and
//! the structural conditions that force `γ_rI <= n - 2`.

mod gadget;
mod jfamily;
mod lemma1;
mod realize;
mod small;
mod terminal;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{argument, Result};
use crate::graph::{to_graph6, Graph};

pub use gadget::{
    block_table, gadget_by_blocks, gadget_certificate, gadget_instance, gadget_upper_labeling,
    reduction_gadget, BlockTable, GadgetCertificate, GADGET_BLOCK,
};
pub use jfamily::{build_j, build_t4k, j_members, JTag};
pub use lemma1::lemma1_conditions;
pub use realize::realizability_tree;
pub use small::{
    friendship, friendship_minus_vertex, is_in_omega, is_in_psi, is_in_theta, omega_member,
    psi_member, theta_member,
};
pub use terminal::{terminal_family, terminal_instances};

/// Family tag of a [`FamilyInstance`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyTag {
    #[serde(rename = "J.T1")]
    JT1,
    #[serde(rename = "J.T2")]
    JT2,
    #[serde(rename = "J.T3")]
    JT3,
    #[serde(rename = "J.T4")]
    JT4,
    #[serde(rename = "J.T5")]
    JT5,
    #[serde(rename = "J.T4k")]
    JT4k,
    #[serde(rename = "OMEGA")]
    Omega,
    #[serde(rename = "PSI")]
    Psi,
    #[serde(rename = "THETA")]
    Theta,
    #[serde(rename = "GADGET")]
    Gadget,
    #[serde(rename = "REALIZE")]
    Realize,
    #[serde(rename = "TERMINAL_N")]
    TerminalN,
}

impl FamilyTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::JT1 => "J.T1",
            FamilyTag::JT2 => "J.T2",
            FamilyTag::JT3 => "J.T3",
            FamilyTag::JT4 => "J.T4",
            FamilyTag::JT5 => "J.T5",
            FamilyTag::JT4k => "J.T4k",
            FamilyTag::Omega => "OMEGA",
            FamilyTag::Psi => "PSI",
            FamilyTag::Theta => "THETA",
            FamilyTag::Gadget => "GADGET",
            FamilyTag::Realize => "REALIZE",
            FamilyTag::TerminalN => "TERMINAL_N",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "J.T1" => FamilyTag::JT1,
            "J.T2" => FamilyTag::JT2,
            "J.T3" => FamilyTag::JT3,
            "J.T4" => FamilyTag::JT4,
            "J.T5" => FamilyTag::JT5,
            "J.T4k" => FamilyTag::JT4k,
            "OMEGA" => FamilyTag::Omega,
            "PSI" => FamilyTag::Psi,
            "THETA" => FamilyTag::Theta,
            "GADGET" => FamilyTag::Gadget,
            "REALIZE" => FamilyTag::Realize,
            "TERMINAL_N" => FamilyTag::TerminalN,
            _ => return Err(argument(format!("unknown family tag {s:?}"))),
        })
    }
}

/// A named, parameterized member of a family with its predicted `γ_rI`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub tag: FamilyTag,
    /// Human-readable member name, e.g. `"T_{4,2}"` or `"C_4"`.
    pub label: String,
    pub params: BTreeMap<String, i64>,
    pub graph: Graph,
    pub predicted_rid: u32,
}

/// JSON sidecar emitted next to a family's graph6 line.
#[derive(Clone, Debug, Serialize)]
pub struct Sidecar {
    pub name: String,
    pub label: String,
    pub params: BTreeMap<String, i64>,
    pub n: usize,
    pub m: usize,
    pub predicted_rid: u32,
    pub graph6: String,
}

impl FamilyInstance {
    pub(crate) fn new(
        tag: FamilyTag,
        label: impl Into<String>,
        params: &[(&str, i64)],
        graph: Graph,
        predicted_rid: u32,
    ) -> Self {
        FamilyInstance {
            tag,
            label: label.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            graph,
            predicted_rid,
        }
    }

    pub fn sidecar(&self) -> Result<Sidecar> {
        Ok(Sidecar {
            name: self.tag.to_string(),
            label: self.label.clone(),
            params: self.params.clone(),
            n: self.graph.n(),
            m: self.graph.m(),
            predicted_rid: self.predicted_rid,
            graph6: to_graph6(&self.graph)?,
        })
    }
}
