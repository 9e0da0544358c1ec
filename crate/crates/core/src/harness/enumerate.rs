//! Connected graphs up to isomorphism, by vertex augmentation and canonical codes.
//!
//! Every connected graph on `n` vertices has a non-cut vertex, so it arises from a
//! connected graph on `n - 1` vertices by adding one vertex with a nonempty
//! neighborhood. Duplicates are removed by canonical form.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const MAX_ENUMERATION_N: usize = 9;
pub const MAX_CANON_N: usize = 16;

/// Ordered partition of the vertex set.
type Partition = Vec<Vec<Vertex>>;

fn refine(adj: &[u32], mut cells: Partition) -> Partition {
    let mut changed = true;
    while changed {
        changed = false;
        'outer: for s in 0..cells.len() {
            let splitter: u32 = cells[s].iter().fold(0, |acc, &v| acc | 1 << v);
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let count = |v: Vertex| (adj[v] & splitter).count_ones();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut cell = std::mem::take(&mut cells[c]);
                cell.sort_by_key(|&v| (count(v), v));
                let mut pieces: Vec<Vec<Vertex>> = Vec::new();
                for v in cell {
                    match pieces.last_mut() {
                        Some(p) if count(p[0]) == count(v) => p.push(v),
                        _ => pieces.push(vec![v]),
                    }
                }
                cells.splice(c..=c, pieces);
                changed = true;
                break 'outer;
            }
        }
    }
    cells
}

fn code_of(adj: &[u32], order: &[Vertex]) -> u128 {
    let n = order.len();
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | u128::from(adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

fn search(adj: &[u32], cells: Partition, best: &mut Option<(u128, Vec<Vertex>)>) {
    let cells = refine(adj, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<Vertex> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(adj, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    // Twins inside a cell give isomorphic branches; try one per twin class.
    let mut tried: Vec<Vertex> = Vec::new();
    for &v in &cells[target] {
        let twin = tried.iter().any(|&u| {
            let (au, av) = (adj[u] & !(1 << v), adj[v] & !(1 << u));
            au == av
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<Vertex> = next[target].iter().copied().filter(|&w| w != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(adj, next, best);
    }
}

/// Canonical code and the vertex order realizing it; isomorphic graphs get equal codes.
pub fn canonical_form(g: &Graph) -> Result<(u128, Vec<Vertex>)> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(Error::TooLarge { n, limit: MAX_CANON_N });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |acc, &w| acc | 1 << w)).collect();
    let mut best = None;
    search(&adj, vec![(0..n).collect()], &mut best);
    let (code, order) = best.expect("at least one leaf");
    Ok((code, order))
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<(u128, Graph)> {
    let (code, order) = canonical_form(g)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((code, g.permute(&perm)))
}

fn augment(g: &Graph, mask: u32) -> Graph {
    let n = g.n();
    let mut edges = g.edges().to_vec();
    edges.extend((0..n).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n)));
    Graph::from_edges(n + 1, &edges).expect("augmentation stays simple")
}

/// Connected graphs on exactly `n` vertices with at most `max_edges` edges, one per
/// isomorphism class, in canonical labeling, sorted by canonical code.
pub fn enumerate_connected_max_edges(n: usize, max_edges: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::Domain(format!("enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")));
    }
    let mut level = vec![Graph::empty(1)];
    for size in 1..n {
        let found: HashMap<u128, Graph> = level
            .par_iter()
            .flat_map_iter(|g| {
                let room = max_edges.saturating_sub(g.m());
                (1u32..1 << size)
                    .filter(move |mask| mask.count_ones() as usize <= room)
                    .map(move |mask| canonical_graph(&augment(g, mask)).expect("n within limit"))
            })
            .collect();
        let mut next: Vec<(u128, Graph)> = found.into_iter().collect();
        next.sort_by_key(|(c, _)| *c);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    enumerate_connected_max_edges(n, usize::MAX)
}

/// All connected graphs with `1 <= n <= max_n` vertices, smallest first.
pub fn enumerate_connected_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(enumerate_connected(n)?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn range_errors() {
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(10).is_err());
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = Graph::petersen();
        let (code, _) = canonical_form(&g).unwrap();
        let perm = [3, 7, 1, 0, 9, 4, 2, 8, 6, 5];
        assert_eq!(canonical_form(&g.permute(&perm)).unwrap().0, code);
        assert_ne!(canonical_form(&Graph::cycle(10)).unwrap().0, code);
    }

    #[test]
    fn edge_limited_trees() {
        // Connected graphs on 5 vertices with 4 edges are the 3 trees.
        assert_eq!(enumerate_connected_max_edges(5, 4).unwrap().len(), 3);
    }
}
