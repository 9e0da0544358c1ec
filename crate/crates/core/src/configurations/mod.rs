//! Reducible configurations as labeled patterns: the catalog, a matcher, and a
//! replay of each configuration's deletion/erase/extend recipe.

mod catalog;
mod reducibility;

pub use catalog::catalog;
pub use reducibility::{verify_reducibility, EdgeCheck, ReducibilityReport, Verdict};

use serde::Serialize;

use crate::graph::{EdgeId, Graph, Vertex};
use crate::metrics::{Class, Classification, Scheme};

/// A membership test over a value type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint<T> {
    Any,
    OneOf(Vec<T>),
    NoneOf(Vec<T>),
}

impl<T: PartialEq> Constraint<T> {
    pub fn accepts(&self, value: &T) -> bool {
        match self {
            Constraint::Any => true,
            Constraint::OneOf(v) => v.contains(value),
            Constraint::NoneOf(v) => !v.contains(value),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeSpec {
    pub name: &'static str,
    pub degree: Constraint<usize>,
    pub class: Constraint<Class>,
}

impl NodeSpec {
    fn accepts(&self, g: &Graph, labels: &Classification, v: Vertex) -> bool {
        self.degree.accepts(&g.degree(v)) && self.class.accepts(&labels.label(v))
    }
}

/// Which pattern edges a conflict bound applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeRole {
    /// The edge between two pattern nodes.
    Pattern(usize, usize),
    /// Every edge from this node to a vertex outside the matched image.
    OtherAt(usize),
}

/// Upper bounds on how many edges a recipe edge sees in `g - v`, before and
/// after the erase step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub role: EdgeRole,
    pub before: usize,
    pub after: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recipe {
    /// Node whose vertex is deleted; its incident edges are the targets.
    pub delete: usize,
    pub erase: Vec<(usize, usize)>,
    pub bounds: Vec<Bound>,
}

impl Recipe {
    pub fn generic(delete: usize) -> Self {
        Recipe { delete, erase: Vec::new(), bounds: Vec::new() }
    }

    pub fn is_generic(&self) -> bool {
        self.erase.is_empty() && self.bounds.is_empty()
    }
}

/// Extra node constraints (conjoined with the base ones) selecting a recipe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub name: &'static str,
    pub refine: Vec<(usize, NodeSpec)>,
    pub recipe: Recipe,
}

#[derive(Clone, Debug, Serialize)]
pub struct Pattern {
    pub id: &'static str,
    pub scheme: Scheme,
    pub description: &'static str,
    pub palette: u32,
    pub nodes: Vec<NodeSpec>,
    pub edges: Vec<(usize, usize)>,
    pub nonedges: Vec<(usize, usize)>,
    /// A match must satisfy at least one case; the first that fits supplies the recipe.
    pub cases: Vec<Case>,
    #[serde(skip)]
    automorphisms: Vec<Vec<usize>>,
}

impl Pattern {
    fn new(
        id: &'static str,
        scheme: Scheme,
        description: &'static str,
        nodes: Vec<NodeSpec>,
        edges: Vec<(usize, usize)>,
        nonedges: Vec<(usize, usize)>,
        cases: Vec<Case>,
    ) -> Self {
        let mut p = Pattern {
            id,
            scheme,
            description,
            palette: scheme.palette(),
            nodes,
            edges,
            nonedges,
            cases,
            automorphisms: Vec::new(),
        };
        p.automorphisms = p.compute_automorphisms();
        p
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.name == name)
    }

    /// Node permutations preserving specs, edges and nonedges; identity first.
    pub fn automorphisms(&self) -> &[Vec<usize>] {
        &self.automorphisms
    }

    fn compute_automorphisms(&self) -> Vec<Vec<usize>> {
        let k = self.nodes.len();
        let norm = |list: &[(usize, usize)]| {
            let mut v: Vec<(usize, usize)> = list.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            v.sort_unstable();
            v
        };
        let edges = norm(&self.edges);
        let nonedges = norm(&self.nonedges);
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..k).collect();
        loop {
            let ok = (0..k).all(|i| self.nodes[perm[i]].degree == self.nodes[i].degree
                && self.nodes[perm[i]].class == self.nodes[i].class)
                && norm(&edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect::<Vec<_>>()) == edges
                && norm(&nonedges.iter().map(|&(a, b)| (perm[a], perm[b])).collect::<Vec<_>>()) == nonedges;
            if ok {
                out.push(perm.clone());
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }

    fn base_ok(&self, g: &Graph, labels: &Classification, a: &[Vertex]) -> bool {
        let mut sorted = a.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == a.len()
            && self.nodes.iter().zip(a).all(|(spec, &v)| spec.accepts(g, labels, v))
            && self.edges.iter().all(|&(i, j)| g.has_edge(a[i], a[j]))
            && self.nonedges.iter().all(|&(i, j)| !g.has_edge(a[i], a[j]))
    }

    /// First case (and automorphism) whose refinement `a` satisfies; the returned
    /// assignment is `a` reindexed by that automorphism.
    fn select_case(&self, g: &Graph, labels: &Classification, a: &[Vertex]) -> Option<(usize, Vec<Vertex>)> {
        for (ci, case) in self.cases.iter().enumerate() {
            for sigma in &self.automorphisms {
                let b: Vec<Vertex> = sigma.iter().map(|&s| a[s]).collect();
                if case.refine.iter().all(|(i, spec)| spec.accepts(g, labels, b[*i])) {
                    return Some((ci, b));
                }
            }
        }
        None
    }

    fn is_canonical(&self, a: &[Vertex]) -> bool {
        self.automorphisms.iter().all(|sigma| {
            let b: Vec<Vertex> = sigma.iter().map(|&s| a[s]).collect();
            a <= b.as_slice()
        })
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigurationMatch {
    pub pattern: &'static str,
    /// Canonical representative: pattern node i ↦ `assignment[i]`.
    pub assignment: Vec<Vertex>,
    /// Graph edge ids realizing the pattern edges, in pattern order.
    pub edges: Vec<EdgeId>,
    pub case: &'static str,
    /// The assignment oriented so that `case`'s constraints hold.
    pub oriented: Vec<Vertex>,
    #[serde(skip)]
    case_index: usize,
}

impl ConfigurationMatch {
    pub fn recipe<'p>(&self, pattern: &'p Pattern) -> &'p Recipe {
        &pattern.cases[self.case_index].recipe
    }
}

fn extend(
    p: &Pattern,
    g: &Graph,
    labels: &Classification,
    a: &mut Vec<Vertex>,
    used: &mut [bool],
    out: &mut Vec<ConfigurationMatch>,
) {
    let i = a.len();
    if i == p.nodes.len() {
        if !p.is_canonical(a) {
            return;
        }
        if let Some((case_index, oriented)) = p.select_case(g, labels, a) {
            out.push(ConfigurationMatch {
                pattern: p.id,
                assignment: a.clone(),
                edges: p.edges.iter().map(|&(x, y)| g.edge_id(a[x], a[y]).unwrap()).collect(),
                case: p.cases[case_index].name,
                oriented,
                case_index,
            });
        }
        return;
    }
    let anchor = p.edges.iter().find_map(|&(x, y)| match (x, y) {
        (x, y) if y == i && x < i => Some(a[x]),
        (x, y) if x == i && y < i => Some(a[y]),
        _ => None,
    });
    let candidates: Vec<Vertex> = match anchor {
        Some(u) => g.neighbors(u).to_vec(),
        None => (0..g.n()).collect(),
    };
    for v in candidates {
        if used[v] || !p.nodes[i].accepts(g, labels, v) {
            continue;
        }
        let consistent = p.edges.iter().all(|&(x, y)| match (x, y) {
            (x, y) if x == i && y < i => g.has_edge(v, a[y]),
            (x, y) if y == i && x < i => g.has_edge(v, a[x]),
            _ => true,
        }) && p.nonedges.iter().all(|&(x, y)| match (x, y) {
            (x, y) if x == i && y < i => !g.has_edge(v, a[y]),
            (x, y) if y == i && x < i => !g.has_edge(v, a[x]),
            _ => true,
        });
        if !consistent {
            continue;
        }
        a.push(v);
        used[v] = true;
        extend(p, g, labels, a, used, out);
        used[v] = false;
        a.pop();
    }
}

/// All matches of one pattern, one per automorphism orbit, sorted by assignment.
pub fn find_pattern(p: &Pattern, g: &Graph, labels: &Classification) -> Vec<ConfigurationMatch> {
    let mut out = Vec::new();
    let mut used = vec![false; g.n()];
    extend(p, g, labels, &mut Vec::with_capacity(p.nodes.len()), &mut used, &mut out);
    out.sort_by(|x, y| x.assignment.cmp(&y.assignment));
    out
}

/// Matches of every catalog pattern of `scheme`, sorted by pattern id then assignment.
pub fn find_configurations(g: &Graph, scheme: Scheme, labels: &Classification) -> Vec<ConfigurationMatch> {
    let mut out: Vec<ConfigurationMatch> =
        catalog(scheme).iter().flat_map(|p| find_pattern(p, g, labels)).collect();
    out.sort_by(|x, y| (x.pattern, &x.assignment).cmp(&(y.pattern, &y.assignment)));
    out
}

/// Whether the graph contains any catalog configuration (stops at the first hit).
pub fn has_configuration(g: &Graph, scheme: Scheme, labels: &Classification) -> bool {
    catalog(scheme).iter().any(|p| !find_pattern(p, g, labels).is_empty())
}

/// Independent re-check of a match against its pattern's constraints.
pub fn validate_match(p: &Pattern, g: &Graph, labels: &Classification, m: &ConfigurationMatch) -> bool {
    m.pattern == p.id
        && m.assignment.len() == p.nodes.len()
        && p.base_ok(g, labels, &m.assignment)
        && p.base_ok(g, labels, &m.oriented)
        && p.cases.iter().any(|c| c.refine.iter().all(|(i, spec)| spec.accepts(g, labels, m.oriented[*i])))
}

pub fn pattern_by_id(id: &str) -> Option<&'static Pattern> {
    [Scheme::Theta7, Scheme::Theta8].into_iter().flat_map(catalog).find(|p| p.id == id)
}
