//! Extending partial colorings: greedy by list size, and erase-then-extend.

use serde::Serialize;

use super::hall::{hall_sdr, SdrOutcome, SetFamily};
use super::{available_unchecked, is_valid_strong_coloring, PartialColoring};
use crate::error::{Error, Result};
use crate::graph::{ConflictGraph, EdgeId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExtendOutcome {
    /// `order` lists the targets in the order they were colored.
    Extended { coloring: PartialColoring, order: Vec<EdgeId> },
    /// `edge` had an empty list when its turn came.
    Stuck { edge: EdgeId, order: Vec<EdgeId> },
}

fn check_targets(cg: &ConflictGraph<'_>, c: &PartialColoring, targets: &[EdgeId]) -> Result<()> {
    c.check_fits(cg)?;
    for &e in targets {
        if e >= cg.len() {
            return Err(Error::InvalidEdge(e));
        }
        if c.get(e).is_some() {
            return Err(Error::Precondition(format!("target edge {e} is already colored")));
        }
    }
    Ok(())
}

fn greedy_unchecked(cg: &ConflictGraph<'_>, mut c: PartialColoring, targets: &[EdgeId]) -> ExtendOutcome {
    let mut left: Vec<EdgeId> = targets.to_vec();
    left.sort_unstable();
    left.dedup();
    let mut order = Vec::with_capacity(left.len());
    while !left.is_empty() {
        // Smallest current list first, ties by edge id.
        let (pos, list) = left
            .iter()
            .enumerate()
            .map(|(i, &e)| (i, available_unchecked(cg, &c, e)))
            .min_by_key(|(i, l)| (l.len(), left[*i]))
            .unwrap();
        let e = left.remove(pos);
        order.push(e);
        match list.first() {
            Some(&col) => c.set(e, col),
            None => return ExtendOutcome::Stuck { edge: e, order },
        }
    }
    ExtendOutcome::Extended { coloring: c, order }
}

/// Colors `targets` one at a time, always taking the target with the fewest
/// available colors and giving it the smallest one.
pub fn greedy_extend(cg: &ConflictGraph<'_>, c: &PartialColoring, targets: &[EdgeId]) -> Result<ExtendOutcome> {
    check_targets(cg, c, targets)?;
    Ok(greedy_unchecked(cg, c.clone(), targets))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Two non-seeing edges share one color, the rest are greedy.
    SameColor,
    /// Distinct representatives of all the lists.
    Sdr,
    Greedy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EraseOutcome {
    Extended {
        coloring: PartialColoring,
        strategy: Strategy,
        /// The pair sharing a color, for `SameColor`.
        pair: Option<(EdgeId, EdgeId)>,
    },
    Failed {
        attempted: Vec<Strategy>,
        /// Lists of every edge to color right after erasing.
        lists: Vec<(EdgeId, Vec<u32>)>,
    },
}

/// Uncolors `erase`, then tries to color `erase ∪ targets`: first by reusing one
/// color on a non-seeing pair (at least one of them erased), then by an SDR over
/// all the lists, then greedily.
pub fn erase_and_extend(
    cg: &ConflictGraph<'_>,
    c: &PartialColoring,
    erase: &[EdgeId],
    targets: &[EdgeId],
) -> Result<EraseOutcome> {
    check_targets(cg, c, targets)?;
    let mut base = c.clone();
    for &e in erase {
        if e >= cg.len() {
            return Err(Error::InvalidEdge(e));
        }
        if base.get(e).is_none() {
            return Err(Error::Precondition(format!("erase edge {e} is not colored")));
        }
        base.clear(e);
    }
    let mut all: Vec<EdgeId> = erase.iter().chain(targets).copied().collect();
    all.sort_unstable();
    all.dedup();
    let lists: Vec<(EdgeId, Vec<u32>)> = all.iter().map(|&e| (e, available_unchecked(cg, &base, e))).collect();
    let mut attempted = Vec::new();

    let done = |coloring: PartialColoring, strategy, pair| -> Result<EraseOutcome> {
        debug_assert!(is_valid_strong_coloring(cg, &coloring)?.0);
        Ok(EraseOutcome::Extended { coloring, strategy, pair })
    };

    if !erase.is_empty() {
        attempted.push(Strategy::SameColor);
        let erased = |e: EdgeId| erase.contains(&e);
        let mut pairs = Vec::new();
        for (i, &a) in all.iter().enumerate() {
            for &b in &all[i + 1..] {
                if (erased(a) || erased(b)) && !cg.sees_pair(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        // Pairs of erased edges first.
        pairs.sort_by_key(|&(a, b)| (!(erased(a) && erased(b)), a, b));
        let list_of = |e: EdgeId| &lists.iter().find(|(f, _)| *f == e).unwrap().1;
        for (a, b) in pairs {
            for &col in list_of(a).iter().filter(|col| list_of(b).contains(col)) {
                let mut trial = base.clone();
                trial.set(a, col);
                trial.set(b, col);
                let rest: Vec<EdgeId> = all.iter().copied().filter(|&e| e != a && e != b).collect();
                if let ExtendOutcome::Extended { coloring, .. } = greedy_unchecked(cg, trial, &rest) {
                    return done(coloring, Strategy::SameColor, Some((a, b)));
                }
            }
        }
    }

    attempted.push(Strategy::Sdr);
    let fam = SetFamily { universe: base.k, sets: lists.iter().map(|(_, l)| l.clone()).collect() };
    if let SdrOutcome::Sdr { reps } = hall_sdr(&fam) {
        let mut coloring = base.clone();
        for (&(e, _), &col) in lists.iter().zip(&reps) {
            coloring.set(e, col);
        }
        return done(coloring, Strategy::Sdr, None);
    }

    attempted.push(Strategy::Greedy);
    if let ExtendOutcome::Extended { coloring, .. } = greedy_unchecked(cg, base, &all) {
        return done(coloring, Strategy::Greedy, None);
    }
    Ok(EraseOutcome::Failed { attempted, lists })
}
