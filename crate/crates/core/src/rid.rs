//! Labelings, vertex sets and the verifiers for each domination variant.
//!
//! All verifiers work on bitmasks and allocate nothing beyond the three
//! value classes of the labeling. An isolated vertex labeled 0 fails every
//! labeling condition on its own (empty neighborhood sum), so no special
//! case is needed.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{argument, Result};
use crate::graph::{bits, Graph};

/// A total assignment `V -> {0, 1, 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling(Vec<u8>);

impl Labeling {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if let Some(i) = values.iter().position(|&x| x > 2) {
            return Err(argument(format!(
                "label {} at vertex {i} is not in {{0,1,2}}",
                values[i]
            )));
        }
        Ok(Labeling(values))
    }

    pub fn uniform(n: usize, value: u8) -> Self {
        assert!(value <= 2);
        Labeling(vec![value; n])
    }

    /// Builds a labeling of `n` vertices from the masks of its 1- and
    /// 2-vertices; everything else is 0.
    pub fn from_masks(n: usize, ones: u64, twos: u64) -> Self {
        assert_eq!(ones & twos, 0);
        Labeling(
            (0..n)
                .map(|v| (ones >> v & 1) as u8 + 2 * (twos >> v & 1) as u8)
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    /// `|V1| + 2 |V2|`.
    pub fn weight(&self) -> u32 {
        self.0.iter().map(|&x| x as u32).sum()
    }

    /// Masks of `(V0, V1, V2)`.
    pub fn classes(&self) -> (u64, u64, u64) {
        let mut m = [0u64; 3];
        for (v, &x) in self.0.iter().enumerate() {
            m[x as usize] |= 1 << v;
        }
        (m[0], m[1], m[2])
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Labeling {
    type Err = crate::Error;

    /// Parses the digit-string form, e.g. `"011012"`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .trim()
            .bytes()
            .enumerate()
            .map(|(i, b)| match b {
                b'0'..=b'2' => Ok(b - b'0'),
                _ => Err(argument(format!(
                    "invalid label character {:?} at {i}",
                    b as char
                ))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Labeling(values))
    }
}

impl Serialize for Labeling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A subset of `0..n`, `n <= 64`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn from_vertices(vs: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = 0u64;
        for v in vs {
            if v >= 64 {
                return Err(argument(format!("vertex {v} out of range")));
            }
            mask |= 1 << v;
        }
        Ok(VertexSet(mask))
    }

    pub fn mask(&self) -> u64 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

fn check_len(g: &Graph, f: &Labeling) -> Result<()> {
    if f.len() != g.n() {
        return Err(argument(format!(
            "labeling has length {}, graph has {} vertices",
            f.len(),
            g.n()
        )));
    }
    Ok(())
}

fn check_set(g: &Graph, s: VertexSet) -> Result<()> {
    if s.mask() & !g.vertex_mask() != 0 {
        return Err(argument(format!(
            "vertex set {:?} not contained in 0..{}",
            s.iter().collect::<Vec<_>>(),
            g.n()
        )));
    }
    Ok(())
}

/// Every 0-vertex has neighbor value sum at least 2.
pub(crate) fn italian_masks(g: &Graph, zeros: u64, ones: u64, twos: u64) -> bool {
    bits(zeros).all(|v| {
        let nb = g.neighbor_mask(v);
        nb & twos != 0 || (nb & ones).count_ones() >= 2
    })
}

/// Every 0-vertex has a 0-neighbor.
pub(crate) fn restrained_masks(g: &Graph, zeros: u64) -> bool {
    bits(zeros).all(|v| g.neighbor_mask(v) & zeros != 0)
}

pub fn is_italian(g: &Graph, f: &Labeling) -> Result<bool> {
    check_len(g, f)?;
    let (z, o, t) = f.classes();
    Ok(italian_masks(g, z, o, t))
}

pub fn is_restrained_italian(g: &Graph, f: &Labeling) -> Result<bool> {
    check_len(g, f)?;
    let (z, o, t) = f.classes();
    Ok(italian_masks(g, z, o, t) && restrained_masks(g, z))
}

/// Every 0-vertex has a 2-neighbor and a 0-neighbor.
pub fn is_rrd_function(g: &Graph, f: &Labeling) -> Result<bool> {
    check_len(g, f)?;
    let (z, _, t) = f.classes();
    Ok(bits(z).all(|v| g.neighbor_mask(v) & t != 0) && restrained_masks(g, z))
}

pub(crate) fn dominating_mask(g: &Graph, s: u64) -> bool {
    bits(g.vertex_mask() & !s).all(|v| g.neighbor_mask(v) & s != 0)
}

pub(crate) fn restrained_dominating_mask(g: &Graph, s: u64) -> bool {
    let outside = g.vertex_mask() & !s;
    dominating_mask(g, s) && bits(outside).all(|v| g.neighbor_mask(v) & outside != 0)
}

pub fn is_dominating_set(g: &Graph, s: VertexSet) -> Result<bool> {
    check_set(g, s)?;
    Ok(dominating_mask(g, s.mask()))
}

pub fn is_restrained_dominating_set(g: &Graph, s: VertexSet) -> Result<bool> {
    check_set(g, s)?;
    Ok(restrained_dominating_mask(g, s.mask()))
}
