//! Systems of distinct representatives via bipartite matching.

use serde::Serialize;

/// Subsets of `{1..=universe}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetFamily {
    pub universe: u32,
    pub sets: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SdrOutcome {
    /// `reps[i]` is the representative of set `i`; all distinct.
    Sdr { reps: Vec<u32> },
    /// Set indices whose union (also given) is smaller than their number.
    Violator { indices: Vec<usize>, union: Vec<u32> },
}

struct Matcher<'a> {
    sets: &'a [Vec<u32>],
    owner: Vec<Option<usize>>,
    seen_sets: Vec<bool>,
    seen_elems: Vec<bool>,
}

impl Matcher<'_> {
    fn augment(&mut self, i: usize) -> bool {
        self.seen_sets[i] = true;
        for &x in &self.sets[i] {
            let x = x as usize;
            if self.seen_elems[x] {
                continue;
            }
            self.seen_elems[x] = true;
            match self.owner[x] {
                None => {
                    self.owner[x] = Some(i);
                    return true;
                }
                Some(j) => {
                    if self.augment(j) {
                        self.owner[x] = Some(i);
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Finds an SDR or a Hall violator. On failure the violator is the set of sets
/// reachable by alternating paths from the first unmatched set.
pub fn hall_sdr(fam: &SetFamily) -> SdrOutcome {
    let size = fam.universe as usize + 1;
    let mut m = Matcher {
        sets: &fam.sets,
        owner: vec![None; size],
        seen_sets: vec![false; fam.sets.len()],
        seen_elems: vec![false; size],
    };
    for i in 0..fam.sets.len() {
        m.seen_sets.iter_mut().for_each(|s| *s = false);
        m.seen_elems.iter_mut().for_each(|s| *s = false);
        if !m.augment(i) {
            let indices: Vec<usize> = (0..fam.sets.len()).filter(|&j| m.seen_sets[j]).collect();
            let union: Vec<u32> = (0..size as u32).filter(|&x| m.seen_elems[x as usize]).collect();
            return SdrOutcome::Violator { indices, union };
        }
    }
    let mut reps = vec![0; fam.sets.len()];
    for (x, o) in m.owner.iter().enumerate() {
        if let Some(i) = *o {
            reps[i] = x as u32;
        }
    }
    SdrOutcome::Sdr { reps }
}
