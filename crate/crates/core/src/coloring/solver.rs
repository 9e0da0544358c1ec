//! Exact strong edge-coloring as vertex coloring of the conflict graph:
//! DSATUR-ordered branch and bound with a greedy clique lower bound.

use std::time::{Duration, Instant};

use serde::Serialize;

use super::PartialColoring;
use crate::error::{Error, Result};
use crate::graph::{ConflictGraph, EdgeId};

pub const DEFAULT_BUDGET: Duration = Duration::from_secs(10);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub time_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SolveOutcome {
    Sat { coloring: PartialColoring },
    Unsat,
    Timeout,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub outcome: SolveOutcome,
    pub stats: SolveStats,
}

/// Greedy clique: from every seed, repeatedly add the highest-degree vertex adjacent
/// to all chosen ones (ties by id). Returns the largest found.
pub(crate) fn greedy_clique(cg: &ConflictGraph<'_>) -> Vec<EdgeId> {
    let m = cg.len();
    let mut by_degree: Vec<EdgeId> = (0..m).collect();
    by_degree.sort_by_key(|&e| (std::cmp::Reverse(cg.sees(e).len()), e));
    let mut best = Vec::new();
    for seed in 0..m {
        let mut clique = vec![seed];
        for &e in &by_degree {
            if e != seed && clique.iter().all(|&f| cg.sees_pair(e, f)) {
                clique.push(e);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

struct Search<'a, 'g> {
    cg: &'a ConflictGraph<'g>,
    k: usize,
    colors: Vec<u32>,
    /// `blocked[e][c]` counts colored neighbors of `e` with color `c`.
    blocked: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Search<'_, '_> {
    fn assign(&mut self, e: EdgeId, c: u32) {
        self.colors[e] = c;
        for &f in self.cg.sees(e) {
            let slot = &mut self.blocked[f][c as usize];
            if *slot == 0 {
                self.saturation[f] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, e: EdgeId, c: u32) {
        self.colors[e] = 0;
        for &f in self.cg.sees(e) {
            let slot = &mut self.blocked[f][c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[f] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<EdgeId> {
        (0..self.colors.len())
            .filter(|&e| self.colors[e] == 0)
            .max_by_key(|&e| (self.saturation[e], std::cmp::Reverse(e)))
    }

    fn solve(&mut self, max_used: u32) -> bool {
        self.nodes += 1;
        if self.nodes % 1024 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return false;
        }
        let Some(e) = self.pick() else { return true };
        // Colors above max_used + 1 are interchangeable with max_used + 1.
        let limit = (max_used + 1).min(self.k as u32);
        for c in 1..=limit {
            if self.blocked[e][c as usize] != 0 {
                continue;
            }
            self.assign(e, c);
            if self.solve(max_used.max(c)) {
                return true;
            }
            self.unassign(e, c);
            if self.timed_out {
                return false;
            }
        }
        false
    }
}

/// Decides whether the conflict graph has a proper `k`-coloring.
pub fn k_colorable(cg: &ConflictGraph<'_>, k: u32, budget: Option<Duration>) -> SolveResult {
    let start = Instant::now();
    let m = cg.len();
    let finish = |outcome, nodes| SolveResult {
        outcome,
        stats: SolveStats { nodes, time_ms: start.elapsed().as_millis() as u64 },
    };
    if m == 0 {
        return finish(SolveOutcome::Sat { coloring: PartialColoring::new(k, 0) }, 0);
    }
    if greedy_clique(cg).len() > k as usize {
        return finish(SolveOutcome::Unsat, 0);
    }
    let mut search = Search {
        cg,
        k: k as usize,
        colors: vec![0; m],
        blocked: vec![vec![0; k as usize + 1]; m],
        saturation: vec![0; m],
        nodes: 0,
        deadline: budget.map(|b| start + b),
        timed_out: false,
    };
    let found = search.solve(0);
    let nodes = search.nodes;
    if found {
        let coloring = PartialColoring { k, colors: search.colors.iter().map(|&c| Some(c)).collect() };
        finish(SolveOutcome::Sat { coloring }, nodes)
    } else if search.timed_out {
        finish(SolveOutcome::Timeout, nodes)
    } else {
        finish(SolveOutcome::Unsat, nodes)
    }
}

/// DSATUR without backtracking, using as many colors as needed.
fn greedy_coloring(cg: &ConflictGraph<'_>) -> Vec<u32> {
    let m = cg.len();
    let mut colors = vec![0u32; m];
    for _ in 0..m {
        let sat = |e: EdgeId| {
            let mut cs: Vec<u32> = cg.sees(e).iter().map(|&f| colors[f]).filter(|&c| c > 0).collect();
            cs.sort_unstable();
            cs.dedup();
            cs.len()
        };
        let e = (0..m).filter(|&e| colors[e] == 0).max_by_key(|&e| (sat(e), std::cmp::Reverse(e))).unwrap();
        let c = (1..).find(|c| cg.sees(e).iter().all(|&f| colors[f] != *c)).unwrap();
        colors[e] = c;
    }
    colors
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiResult {
    pub chi_s: usize,
    pub coloring: PartialColoring,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub stats: SolveStats,
}

/// Strong chromatic index with a certificate coloring using exactly `chi_s` colors.
pub fn chi_s_exact(cg: &ConflictGraph<'_>, budget: Option<Duration>) -> Result<ChiResult> {
    let start = Instant::now();
    let m = cg.len();
    if m == 0 {
        return Ok(ChiResult {
            chi_s: 0,
            coloring: PartialColoring::new(0, 0),
            lower_bound: 0,
            upper_bound: 0,
            stats: SolveStats::default(),
        });
    }
    let lb = greedy_clique(cg).len();
    let greedy = greedy_coloring(cg);
    let ub = *greedy.iter().max().unwrap() as usize;
    let mut nodes = 0;
    let elapsed = |nodes| SolveStats { nodes, time_ms: start.elapsed().as_millis() as u64 };
    for k in lb..ub {
        let r = k_colorable(cg, k as u32, budget);
        nodes += r.stats.nodes;
        match r.outcome {
            SolveOutcome::Sat { coloring } => {
                return Ok(ChiResult { chi_s: k, coloring, lower_bound: lb, upper_bound: ub, stats: elapsed(nodes) });
            }
            SolveOutcome::Unsat => {}
            SolveOutcome::Timeout => return Err(Error::Timeout { lb: k, ub }),
        }
    }
    let coloring = PartialColoring { k: ub as u32, colors: greedy.into_iter().map(Some).collect() };
    Ok(ChiResult { chi_s: ub, coloring, lower_bound: lb, upper_bound: ub, stats: elapsed(nodes) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_valid_strong_coloring;
    use crate::graph::Graph;

    fn chi(g: &Graph) -> usize {
        let cg = ConflictGraph::new(g);
        let r = chi_s_exact(&cg, None).unwrap();
        assert!(is_valid_strong_coloring(&cg, &r.coloring).unwrap().0);
        assert!(r.coloring.is_total());
        assert_eq!(r.coloring.colors_used(), r.chi_s);
        r.chi_s
    }

    #[test]
    fn small_families() {
        assert_eq!(chi(&Graph::complete_bipartite(3, 3)), 9);
        assert_eq!(chi(&Graph::cycle(6)), 3);
        assert_eq!(chi(&Graph::cycle(5)), 5);
        assert_eq!(chi(&Graph::star(5)), 5);
        assert_eq!(chi(&Graph::path(4)), 3);
        assert_eq!(chi(&Graph::empty(3)), 0);
    }

    #[test]
    fn decision_examples() {
        let c5 = Graph::cycle(5);
        let cg = ConflictGraph::new(&c5);
        assert_eq!(k_colorable(&cg, 4, None).outcome, SolveOutcome::Unsat);
        assert!(matches!(k_colorable(&cg, 5, None).outcome, SolveOutcome::Sat { .. }));
        let star = Graph::star(5);
        let cg = ConflictGraph::new(&star);
        assert_eq!(k_colorable(&cg, 4, None).outcome, SolveOutcome::Unsat);
        assert!(matches!(k_colorable(&cg, 5, None).outcome, SolveOutcome::Sat { .. }));
    }

    #[test]
    fn deterministic_certificates() {
        let g = Graph::petersen();
        let cg = ConflictGraph::new(&g);
        let a = chi_s_exact(&cg, None).unwrap();
        let b = chi_s_exact(&cg, None).unwrap();
        assert_eq!(a.coloring, b.coloring);
    }

    #[test]
    fn zero_budget_times_out_on_hard_instance() {
        let g = Graph::petersen();
        let cg = ConflictGraph::new(&g);
        let r = k_colorable(&cg, 4, Some(Duration::ZERO));
        // Either the clique bound settles it immediately or the deadline stops the search.
        assert!(matches!(r.outcome, SolveOutcome::Unsat | SolveOutcome::Timeout));
    }
}
