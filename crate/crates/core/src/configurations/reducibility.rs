//! Replays a configuration's recipe on a concrete match: color `g - v` exactly,
//! erase the designated edges, and try to extend to all of `g`.

use std::time::Duration;

use serde::Serialize;

use super::{ConfigurationMatch, EdgeRole, Pattern};
use crate::coloring::{
    available_colors, erase_and_extend, k_colorable, EraseOutcome, PartialColoring, SolveOutcome, SolveStats,
    Strategy,
};
use crate::error::{Error, Result};
use crate::graph::{ConflictGraph, EdgeId, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// `g - v` is not k-colorable, so the minimality argument has nothing to extend.
    Vacuous,
    Timeout,
    Extended,
    Failed,
}

/// Conflict counts and list sizes of one recipe edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCheck {
    pub edge: EdgeId,
    pub endpoints: (Vertex, Vertex),
    pub erased: bool,
    /// Edges of `g - v` this edge sees.
    pub observed_before: usize,
    /// Same, minus the erased edges.
    pub observed_after: usize,
    pub bound_before: Option<usize>,
    pub bound_after: Option<usize>,
    /// `l_f(e)` under the coloring of `g - v`, and after erasing.
    pub list_before: usize,
    pub list_after: usize,
    pub within_bounds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibilityReport {
    pub pattern: &'static str,
    pub case: &'static str,
    pub palette: u32,
    pub deleted: Vertex,
    pub targets: Vec<EdgeId>,
    pub erased: Vec<EdgeId>,
    pub verdict: Verdict,
    pub strategy: Option<Strategy>,
    pub edges: Vec<EdgeCheck>,
    /// True when every bounded edge stayed within its bound (vacuously true before coloring).
    pub bounds_respected: bool,
    pub coloring: Option<PartialColoring>,
    pub stats: SolveStats,
}

pub fn verify_reducibility(
    g: &Graph,
    pattern: &Pattern,
    m: &ConfigurationMatch,
    budget: Option<Duration>,
) -> Result<ReducibilityReport> {
    if m.pattern != pattern.id {
        return Err(Error::Precondition(format!("match of {} replayed with pattern {}", m.pattern, pattern.id)));
    }
    let recipe = m.recipe(pattern);
    let a = &m.oriented;
    let v = a[recipe.delete];
    let k = pattern.palette;
    let cg = ConflictGraph::new(g);
    let targets = g.incident_edges(v);
    let erased: Vec<EdgeId> = recipe
        .erase
        .iter()
        .map(|&(i, j)| g.edge_id(a[i], a[j]).ok_or_else(|| Error::Precondition("erase edge missing".into())))
        .collect::<Result<_>>()?;

    let mut report = ReducibilityReport {
        pattern: pattern.id,
        case: m.case,
        palette: k,
        deleted: v,
        targets: targets.clone(),
        erased: erased.clone(),
        verdict: Verdict::Vacuous,
        strategy: None,
        edges: Vec::new(),
        bounds_respected: true,
        coloring: None,
        stats: SolveStats::default(),
    };

    let (h, map) = g.delete_vertex(v)?;
    let ch = ConflictGraph::new(&h);
    let solved = k_colorable(&ch, k, budget);
    report.stats = solved.stats;
    let sub = match solved.outcome {
        SolveOutcome::Sat { coloring } => coloring,
        SolveOutcome::Unsat => return Ok(report),
        SolveOutcome::Timeout => {
            report.verdict = Verdict::Timeout;
            return Ok(report);
        }
    };

    let mut f = PartialColoring::new(k, g.m());
    for (e, &(x, y)) in g.edges().iter().enumerate() {
        if let (Some(x2), Some(y2)) = (map[x], map[y]) {
            let id = h.edge_id(x2, y2).expect("surviving edge");
            f.colors[e] = sub.colors[id];
        }
    }
    let mut f_erased = f.clone();
    erased.iter().for_each(|&e| f_erased.clear(e));

    let in_image = |w: Vertex| a.contains(&w);
    let mut checked: Vec<EdgeId> = targets.clone();
    checked.extend(erased.iter().filter(|e| !targets.contains(e)));
    for e in checked {
        let (x, y) = g.edges()[e];
        let seen: Vec<EdgeId> = cg
            .sees(e)
            .iter()
            .copied()
            .filter(|&o| {
                let (p, q) = g.edges()[o];
                p != v && q != v
            })
            .collect();
        let before = seen.len();
        let after = before - seen.iter().filter(|o| erased.contains(o)).count();
        let applies = |role: EdgeRole| match role {
            EdgeRole::Pattern(i, j) => g.edge_id(a[i], a[j]) == Some(e),
            EdgeRole::OtherAt(i) => {
                let u = a[i];
                (x == u && !in_image(y)) || (y == u && !in_image(x))
            }
        };
        let mut bound_before: Option<usize> = None;
        let mut bound_after: Option<usize> = None;
        for bd in recipe.bounds.iter().filter(|bd| applies(bd.role)) {
            bound_before = Some(bound_before.map_or(bd.before, |b| b.min(bd.before)));
            if let Some(aft) = bd.after {
                bound_after = Some(bound_after.map_or(aft, |b| b.min(aft)));
            }
        }
        let within = bound_before.is_none_or(|b| before <= b) && bound_after.is_none_or(|b| after <= b);
        report.bounds_respected &= within;
        report.edges.push(EdgeCheck {
            edge: e,
            endpoints: (x, y),
            erased: erased.contains(&e),
            observed_before: before,
            observed_after: after,
            bound_before,
            bound_after,
            list_before: available_colors(&cg, &f, e)?.len(),
            list_after: available_colors(&cg, &f_erased, e)?.len(),
            within_bounds: within,
        });
    }

    match erase_and_extend(&cg, &f, &erased, &targets)? {
        EraseOutcome::Extended { coloring, strategy, .. } => {
            report.verdict = Verdict::Extended;
            report.strategy = Some(strategy);
            report.coloring = Some(coloring);
        }
        EraseOutcome::Failed { .. } => report.verdict = Verdict::Failed,
    }
    Ok(report)
}
