//! Degree invariants, maximum average degree, bound formulas and vertex classes.

mod classify;
mod mad;

pub use classify::{classify, classify_theta7, classify_theta8, Class, Classification, Scheme, Warning};
pub use mad::{mad_bruteforce, mad_exact, MadResult, BRUTEFORCE_LIMIT};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Ore-degree: the largest `d(u) + d(v)` over edges `uv`.
pub fn ore_degree(g: &Graph) -> Result<usize> {
    g.edges()
        .iter()
        .map(|&(u, v)| g.degree(u) + g.degree(v))
        .max()
        .ok_or(Error::Edgeless("Ore-degree"))
}

pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

/// Conjectured upper bound on the strong chromatic index for Ore-degree `theta`.
pub fn conjectured_bound(theta: usize) -> Result<u64> {
    if theta < 5 {
        return Err(Error::Domain(format!("bound formula needs theta >= 5, got {theta}")));
    }
    let c = theta.div_ceil(4) as u64;
    Ok(match theta % 4 {
        1 => 5 * c * c - 8 * c + 3,
        2 => 5 * c * c - 6 * c + 2,
        3 => 5 * c * c - 4 * c + 1,
        _ => 5 * c * c,
    })
}

/// Largest possible mad of a graph with Ore-degree `theta`.
pub fn mad_upper_bound(theta: usize) -> Result<Rational> {
    if theta < 2 {
        return Err(Error::Domain(format!("mad bound needs theta >= 2, got {theta}")));
    }
    let k = (theta / 2) as i64;
    Ok(if theta % 2 == 1 { Rational::new(2 * k * (k + 1), 2 * k + 1) } else { Rational::integer(k) })
}

/// Exact mad together with a densest vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MadReport {
    #[serde(flatten)]
    pub value: Rational,
    pub witness: Vec<usize>,
}

/// Everything `metrics` reports about one graph. Fields undefined for the graph are `None`.
#[derive(Clone, Debug, Serialize)]
pub struct GraphMetrics {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub theta: Option<usize>,
    pub mad: Option<MadReport>,
    pub conjectured_bound: Option<u64>,
    pub mad_upper_bound: Option<Rational>,
    pub classes_theta7: Classification,
    pub classes_theta8: Classification,
}

pub fn compute_metrics(g: &Graph) -> GraphMetrics {
    let theta = ore_degree(g).ok();
    GraphMetrics {
        graph6: g.to_graph6(),
        n: g.n(),
        m: g.m(),
        delta: g.max_degree(),
        theta,
        mad: mad_exact(g).ok().map(|r| MadReport { value: r.mad, witness: r.witness }),
        conjectured_bound: theta.and_then(|t| conjectured_bound(t).ok()),
        mad_upper_bound: theta.and_then(|t| mad_upper_bound(t).ok()),
        classes_theta7: classify_theta7(g),
        classes_theta8: classify_theta8(g),
    }
}
