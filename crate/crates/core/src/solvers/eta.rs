use num_rational::Ratio;

use super::rrd_number;
use crate::error::{domain, Result};
use crate::graph::Graph;

pub type Rational = Ratio<i64>;

/// The three quantities whose minimum is η.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EtaTerms {
    /// `γ_rR(g)`.
    pub rrd: Rational,
    /// `n - 2m/5`.
    pub sparse: Rational,
    /// `n - (2m - 5)/3`.
    pub mixed: Rational,
}

impl EtaTerms {
    pub fn min(&self) -> Rational {
        self.rrd.min(self.sparse).min(self.mixed)
    }
}

pub fn eta_terms(g: &Graph) -> Result<EtaTerms> {
    if g.n() < 3 {
        return Err(domain(format!("η needs n >= 3, got {}", g.n())));
    }
    if !g.is_connected() {
        return Err(domain("η needs a connected graph"));
    }
    let n = g.n() as i64;
    let m = g.m() as i64;
    Ok(EtaTerms {
        rrd: Rational::from_integer(rrd_number(g).value as i64),
        sparse: Rational::from_integer(n) - Rational::new(2 * m, 5),
        mixed: Rational::from_integer(n) - Rational::new(2 * m - 5, 3),
    })
}

/// `η(g) = min{γ_rR, n - 2m/5, n - (2m-5)/3}`, exact.
pub fn eta_bound(g: &Graph) -> Result<Rational> {
    Ok(eta_terms(g)?.min())
}
