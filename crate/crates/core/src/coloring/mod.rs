//! Partial strong edge-colorings, color lists, extension procedures and an exact solver.

mod extend;
mod hall;
mod solver;

pub use extend::{erase_and_extend, greedy_extend, EraseOutcome, ExtendOutcome, Strategy};
pub use hall::{hall_sdr, SdrOutcome, SetFamily};
pub use solver::{chi_s_exact, k_colorable, ChiResult, SolveOutcome, SolveResult, SolveStats, DEFAULT_BUDGET};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ConflictGraph, EdgeId};

/// A palette size plus a partial map from edge ids to colors `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartialColoring {
    pub k: u32,
    pub colors: Vec<Option<u32>>,
}

impl PartialColoring {
    pub fn new(k: u32, m: usize) -> Self {
        PartialColoring { k, colors: vec![None; m] }
    }

    pub fn get(&self, e: EdgeId) -> Option<u32> {
        self.colors[e]
    }

    pub fn set(&mut self, e: EdgeId, color: u32) {
        self.colors[e] = Some(color);
    }

    pub fn clear(&mut self, e: EdgeId) {
        self.colors[e] = None;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn uncolored(&self) -> Vec<EdgeId> {
        (0..self.colors.len()).filter(|&e| self.colors[e].is_none()).collect()
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    fn check_fits(&self, cg: &ConflictGraph<'_>) -> Result<()> {
        if self.colors.len() != cg.len() {
            return Err(Error::Precondition(format!(
                "coloring covers {} edges but the graph has {}",
                self.colors.len(),
                cg.len()
            )));
        }
        for (edge, c) in self.colors.iter().enumerate() {
            if let Some(color) = *c {
                if color == 0 || color > self.k {
                    return Err(Error::ColorOutOfRange { edge, color, k: self.k });
                }
            }
        }
        Ok(())
    }
}

/// Two edges that see each other and share a color (`e < f`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub e: EdgeId,
    pub f: EdgeId,
    pub color: u32,
}

/// Lists every conflicting pair; the coloring is valid iff the list is empty.
pub fn is_valid_strong_coloring(cg: &ConflictGraph<'_>, c: &PartialColoring) -> Result<(bool, Vec<Violation>)> {
    c.check_fits(cg)?;
    let mut violations = Vec::new();
    for e in 0..cg.len() {
        let Some(color) = c.get(e) else { continue };
        for &f in cg.sees(e) {
            if f > e && c.get(f) == Some(color) {
                violations.push(Violation { e, f, color });
            }
        }
    }
    Ok((violations.is_empty(), violations))
}

/// `L_f(e)`: palette colors not used on any edge that `e` sees, ascending.
pub fn available_colors(cg: &ConflictGraph<'_>, c: &PartialColoring, e: EdgeId) -> Result<Vec<u32>> {
    if e >= cg.len() {
        return Err(Error::InvalidEdge(e));
    }
    Ok(available_unchecked(cg, c, e))
}

pub(crate) fn available_unchecked(cg: &ConflictGraph<'_>, c: &PartialColoring, e: EdgeId) -> Vec<u32> {
    let mut used = vec![false; c.k as usize + 1];
    for &f in cg.sees(e) {
        if let Some(col) = c.get(f) {
            used[col as usize] = true;
        }
    }
    (1..=c.k).filter(|&col| !used[col as usize]).collect()
}
