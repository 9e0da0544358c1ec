//! Slow, obviously-correct reference implementations shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use strongedge::{Graph, Rational};

/// Pairwise "sees" matrix straight from the definition: two distinct edges see each
/// other if they share an endpoint or some edge joins an endpoint of one to the other.
pub fn sees_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let edges = g.edges();
    let m = edges.len();
    let mut adj = vec![vec![false; g.n()]; g.n()];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut out = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            let share = a == c || a == d || b == c || b == d;
            let joined = [a, b].iter().any(|&x| [c, d].iter().any(|&y| adj[x][y]));
            out[i][j] = share || joined;
        }
    }
    out
}

/// Does a strong edge-coloring with `k` colors exist? Plain backtracking over edges
/// in id order, with the usual "new color is the next unused one" symmetry cut.
pub fn k_assignable(sees: &[Vec<bool>], k: usize) -> bool {
    fn go(sees: &[Vec<bool>], k: usize, colors: &mut Vec<usize>, used: usize) -> bool {
        let e = colors.len();
        if e == sees.len() {
            return true;
        }
        for c in 0..k.min(used + 1) {
            if (0..e).all(|f| !sees[e][f] || colors[f] != c) {
                colors.push(c);
                if go(sees, k, colors, used.max(c + 1)) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    go(sees, k, &mut Vec::new(), 0)
}

pub fn chi_s_oracle(g: &Graph) -> usize {
    let sees = sees_matrix(g);
    (0..=sees.len()).find(|&k| k_assignable(&sees, k)).unwrap()
}

/// max over nonempty S of 2|E(S)|/|S| by enumerating subsets.
pub fn mad_oracle(g: &Graph) -> Rational {
    let n = g.n();
    assert!(n <= 20);
    let (mut best_e, mut best_s) = (0i64, 1i64);
    for mask in 1u32..(1 << n) {
        let s = mask.count_ones() as i64;
        let e = g.edges().iter().filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1).count() as i64;
        if e * best_s > best_e * s {
            best_e = e;
            best_s = s;
        }
    }
    Rational::new(2 * best_e, best_s)
}

pub fn ore_oracle(g: &Graph) -> usize {
    g.edges().iter().map(|&(u, v)| g.degree(u) + g.degree(v)).max().unwrap()
}

/// Number of isomorphism classes of connected graphs on `n` vertices, by generating
/// every labeled graph and keeping the minimum edge-mask over all relabelings.
pub fn connected_classes_bruteforce(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut perms = vec![(0..n).collect::<Vec<_>>()];
    loop {
        let mut p = perms.last().unwrap().clone();
        if !next_permutation(&mut p) {
            break;
        }
        perms.push(p);
    }
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let relabel: Vec<Vec<usize>> =
        perms.iter().map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect()).collect();
    let mut seen = std::collections::HashSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        if !Graph::from_edges(n, &edges).unwrap().is_connected() {
            continue;
        }
        let canon = relabel
            .iter()
            .map(|r| (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).fold(0u32, |acc, i| acc | 1 << r[i]))
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.len()
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph grown edge by edge while keeping Ore-degree at most `theta` and
/// maximum degree at most `max_deg`.
pub fn ore_bounded<R: Rng>(rng: &mut R, n: usize, theta: usize, max_deg: usize) -> Graph {
    let mut adj = vec![Vec::<usize>::new(); n];
    let mut edges = Vec::new();
    for _ in 0..n * n * 2 {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v || adj[u].contains(&v) {
            continue;
        }
        let (du, dv) = (adj[u].len() + 1, adj[v].len() + 1);
        if du > max_deg || dv > max_deg || du + dv > theta {
            continue;
        }
        if adj[u].iter().any(|&w| du + adj[w].len() > theta) || adj[v].iter().any(|&w| dv + adj[w].len() > theta) {
            continue;
        }
        adj[u].push(v);
        adj[v].push(u);
        edges.push((u.min(v), u.max(v)));
    }
    Graph::from_edges(n, &edges).unwrap()
}
