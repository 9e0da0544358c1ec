//! Maximum average degree, exactly.
//!
//! `mad(G) = 2 · max_S |E(G[S])| / |S|`. The densest-subgraph value is located by
//! bisection with a min-cut feasibility test and then recovered exactly, since
//! distinct candidate densities (denominators at most `n`) are at least
//! `1/(n(n-1))` apart.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::Rational;

pub const BRUTEFORCE_LIMIT: usize = 20;

/// The exact value plus one vertex set attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MadResult {
    pub mad: Rational,
    pub witness: Vec<Vertex>,
}

struct FlowEdge {
    to: usize,
    cap: i128,
}

/// Dinic's algorithm on a small dense-ish network.
struct Network {
    edges: Vec<FlowEdge>,
    adj: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { edges: Vec::new(), adj: vec![Vec::new(); nodes], level: vec![0; nodes], iter: vec![0; nodes] }
    }

    fn add(&mut self, from: usize, to: usize, cap: i128) {
        self.adj[from].push(self.edges.len());
        self.edges.push(FlowEdge { to, cap });
        self.adj[to].push(self.edges.len());
        self.edges.push(FlowEdge { to: from, cap: 0 });
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &id in &self.adj[v] {
                let e = &self.edges[id];
                if e.cap > 0 && self.level[e.to] < 0 {
                    self.level[e.to] = self.level[v] + 1;
                    queue.push_back(e.to);
                }
            }
        }
    }

    fn dfs(&mut self, v: usize, t: usize, pushed: i128) -> i128 {
        if v == t {
            return pushed;
        }
        while self.iter[v] < self.adj[v].len() {
            let id = self.adj[v][self.iter[v]];
            let (to, cap) = (self.edges[id].to, self.edges[id].cap);
            if cap > 0 && self.level[to] == self.level[v] + 1 {
                let d = self.dfs(to, t, pushed.min(cap));
                if d > 0 {
                    self.edges[id].cap -= d;
                    self.edges[id ^ 1].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i128 {
        let mut flow = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return flow;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i128::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }
}

/// If some vertex set has density `|E(S)|/|S|` strictly above `p/q`, returns one such set.
fn denser_than(g: &Graph, p: i128, q: i128) -> Option<Vec<Vertex>> {
    let (n, m) = (g.n(), g.m());
    let s = 0;
    let t = 1 + m + n;
    let inf = q * (m as i128) + 1;
    let mut net = Network::new(t + 1);
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        net.add(s, 1 + i, q);
        net.add(1 + i, 1 + m + u, inf);
        net.add(1 + i, 1 + m + v, inf);
    }
    for v in 0..n {
        net.add(1 + m + v, t, p);
    }
    // cut = q·m − max_S (q·|E(S)| − p·|S|)
    let cut = net.max_flow(s, t);
    if cut >= q * m as i128 {
        return None;
    }
    net.bfs(s);
    Some((0..n).filter(|&v| net.level[1 + m + v] >= 0).collect())
}

fn as_pair(r: &Rational) -> (i128, i128) {
    r.to_i128_pair().expect("bisection midpoints stay small")
}

/// Exact mad with a witnessing vertex set, via max-flow.
pub fn mad_exact(g: &Graph) -> Result<MadResult> {
    if g.m() == 0 {
        return Err(Error::Edgeless("mad"));
    }
    let n = g.n();
    let mut lo = Rational::new(g.m() as i64, n as i64);
    let (p, q) = as_pair(&lo);
    let Some(mut witness) = denser_than(g, p, q) else {
        return Ok(MadResult { mad: lo * 2, witness: (0..n).collect() });
    };
    let mut hi = Rational::new(g.max_degree() as i64, 2);
    let gap = Rational::new(1, (n * (n - 1)) as i64);
    let half = Rational::new(1, 2);
    while &hi - &lo >= gap {
        let mid = (&lo + &hi) * &half;
        let (p, q) = as_pair(&mid);
        match denser_than(g, p, q) {
            Some(set) => {
                lo = mid;
                witness = set;
            }
            None => hi = mid,
        }
    }
    let density = Rational::simplest_in(&lo, &hi);
    debug_assert_eq!(induced_density(g, &witness), density);
    Ok(MadResult { mad: density * 2, witness })
}

fn induced_density(g: &Graph, set: &[Vertex]) -> Rational {
    let mut inside = vec![false; g.n()];
    set.iter().for_each(|&v| inside[v] = true);
    let e = g.edges().iter().filter(|&&(u, v)| inside[u] && inside[v]).count();
    Rational::new(e as i64, set.len() as i64)
}

/// Exhaustive maximum over all nonempty vertex subsets; an oracle for [`mad_exact`].
pub fn mad_bruteforce(g: &Graph) -> Result<MadResult> {
    let n = g.n();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge { n, limit: BRUTEFORCE_LIMIT });
    }
    if g.m() == 0 {
        return Err(Error::Edgeless("mad"));
    }
    let adj: Vec<u32> =
        (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w)).collect();
    // Compare e/s as cross products to stay in integers.
    let (mut best_e, mut best_s, mut best_mask) = (0u64, 1u64, 1u32);
    for mask in 1u32..(1u32 << n) {
        let mut twice = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            twice += u64::from((adj[v] & mask).count_ones());
            rest &= rest - 1;
        }
        let e = twice / 2;
        let s = u64::from(mask.count_ones());
        if e * best_s > best_e * s {
            (best_e, best_s, best_mask) = (e, s, mask);
        }
    }
    let witness = (0..n).filter(|&v| best_mask >> v & 1 == 1).collect();
    Ok(MadResult { mad: Rational::new(2 * best_e as i64, best_s as i64), witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(g: &Graph) -> Rational {
        let exact = mad_exact(g).unwrap();
        let brute = mad_bruteforce(g).unwrap();
        assert_eq!(exact.mad, brute.mad);
        assert_eq!(induced_density(g, &exact.witness) * 2, exact.mad);
        exact.mad
    }

    #[test]
    fn named_values() {
        assert_eq!(both(&Graph::petersen()), Rational::integer(3));
        assert_eq!(both(&Graph::complete_bipartite(3, 4)), Rational::new(24, 7));
        assert_eq!(both(&Graph::path(4)), Rational::new(3, 2));
        assert_eq!(both(&Graph::complete(4)), Rational::integer(3));
        assert_eq!(both(&Graph::path(2)), Rational::integer(1));
        assert_eq!(both(&Graph::complete_bipartite(4, 4)), Rational::integer(4));
    }

    #[test]
    fn c5_with_pendant_is_two() {
        let mut edges: Vec<_> = Graph::cycle(5).edges().to_vec();
        edges.push((0, 5));
        let g = Graph::from_edges(6, &edges).unwrap();
        assert_eq!(both(&g), Rational::integer(2));
        let w = mad_exact(&g).unwrap().witness;
        let inside = g.edges().iter().filter(|(u, v)| w.contains(u) && w.contains(v)).count();
        assert_eq!(inside, w.len());
    }

    #[test]
    fn dense_core_with_isolated_vertices() {
        // K4 plus three isolated vertices: density is found inside the K4.
        let g = Graph::complete(4).disjoint_union(&Graph::empty(3));
        assert_eq!(both(&g), Rational::integer(3));
    }

    #[test]
    fn errors() {
        assert!(matches!(mad_exact(&Graph::empty(3)), Err(Error::Edgeless(_))));
        assert!(matches!(mad_bruteforce(&Graph::path(21)), Err(Error::TooLarge { n: 21, .. })));
    }
}
