//! Signed incidence graphs: the bipartite view of a formula with positive
//! and negative edge sets, plus the BFS queries the detection machinery
//! relies on.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{ClauseId, Formula, Polarity, Var};

/// A vertex of an incidence graph. Clause vertices order before variable
/// vertices; this is the tie-breaking order used by all BFS queries.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize,
)]
#[serde(tag = "kind", content = "id", rename_all = "lowercase")]
pub enum Vertex {
    Clause(ClauseId),
    Var(Var),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Clause(id) => write!(f, "{id}"),
            Vertex::Var(v) => write!(f, "{v}"),
        }
    }
}

/// The bipartite signed incidence graph of a formula.
///
/// Both adjacency directions are materialized; the graph is immutable after
/// construction and indexes the formula it was built from by id only.
#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    var_adj: BTreeMap<Var, Vec<(ClauseId, Polarity)>>,
    clause_adj: BTreeMap<ClauseId, Vec<(Var, Polarity)>>,
}

impl IncidenceGraph {
    pub fn new(formula: &Formula) -> IncidenceGraph {
        let mut var_adj: BTreeMap<Var, Vec<(ClauseId, Polarity)>> = BTreeMap::new();
        let mut clause_adj: BTreeMap<ClauseId, Vec<(Var, Polarity)>> = BTreeMap::new();
        for (id, clause) in formula.clauses() {
            let row: Vec<(Var, Polarity)> =
                clause.literals().map(|l| (l.var, l.polarity)).collect();
            for &(var, pol) in &row {
                var_adj.entry(var).or_default().push((id, pol));
            }
            clause_adj.insert(id, row);
        }
        // Clause ids arrive in ascending order, so the rows are sorted.
        IncidenceGraph { var_adj, clause_adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.var_adj.len() + self.clause_adj.len()
    }

    pub fn contains(&self, vertex: Vertex) -> bool {
        match vertex {
            Vertex::Var(v) => self.var_adj.contains_key(&v),
            Vertex::Clause(c) => self.clause_adj.contains_key(&c),
        }
    }

    /// All vertices, clauses first, ascending ids.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.clause_adj
            .keys()
            .map(|&c| Vertex::Clause(c))
            .chain(self.var_adj.keys().map(|&v| Vertex::Var(v)))
    }

    /// Signed edge query: is variable connected to clause with the given
    /// polarity?
    pub fn has_edge(&self, var: Var, clause: ClauseId, polarity: Polarity) -> bool {
        self.clause_adj
            .get(&clause)
            .is_some_and(|row| row.iter().any(|&(v, p)| v == var && p == polarity))
    }

    pub fn clause_neighbors(&self, clause: ClauseId) -> &[(Var, Polarity)] {
        self.clause_adj.get(&clause).map_or(&[], Vec::as_slice)
    }

    pub fn var_neighbors(&self, var: Var) -> &[(ClauseId, Polarity)] {
        self.var_adj.get(&var).map_or(&[], Vec::as_slice)
    }

    /// Neighbors of a vertex in the tie-breaking order (clauses before
    /// variables; within a kind, ascending id). Bipartiteness makes each
    /// neighbor list single-kind, so sorting by id suffices.
    pub fn neighbors(&self, vertex: Vertex) -> Vec<Vertex> {
        match vertex {
            Vertex::Var(v) => self
                .var_neighbors(v)
                .iter()
                .map(|&(c, _)| Vertex::Clause(c))
                .collect(),
            Vertex::Clause(c) => self
                .clause_neighbors(c)
                .iter()
                .map(|&(v, _)| Vertex::Var(v))
                .collect(),
        }
    }

    /// BFS distances from a single vertex.
    fn distances_from(&self, start: Vertex) -> BTreeMap<Vertex, usize> {
        let mut dist = BTreeMap::new();
        dist.insert(start, 0usize);
        let mut frontier = vec![start];
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let mut next = Vec::new();
            for &v in &frontier {
                for w in self.neighbors(v) {
                    if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(w) {
                        e.insert(depth);
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    /// Maximum over connected components of the largest pairwise distance
    /// (edge-count metric). Isolated vertices contribute zero.
    pub fn component_diameter(&self) -> usize {
        self.vertices()
            .flat_map(|v| self.distances_from(v).into_values())
            .max()
            .unwrap_or(0)
    }
}

/// A shortest path between two vertex sets, as an alternating vertex list,
/// or `None` when no source reaches a target.
///
/// The path is deterministic: BFS layers expand in vertex order (clauses
/// before variables, ascending ids), the first discoverer becomes the
/// parent, and among the targets in the first reachable layer the smallest
/// is chosen. A source that is itself a target yields a single-vertex path.
pub fn shortest_path(
    graph: &IncidenceGraph,
    sources: &BTreeSet<Vertex>,
    targets: &BTreeSet<Vertex>,
) -> Option<Vec<Vertex>> {
    assert!(!sources.is_empty(), "shortest_path requires nonempty sources");
    assert!(!targets.is_empty(), "shortest_path requires nonempty targets");
    let mut parent: BTreeMap<Vertex, Option<Vertex>> = BTreeMap::new();
    let mut layer: Vec<Vertex> = sources
        .iter()
        .copied()
        .filter(|&v| graph.contains(v))
        .collect();
    for &v in &layer {
        parent.insert(v, None);
    }
    loop {
        if let Some(&hit) = layer.iter().filter(|v| targets.contains(v)).min() {
            let mut path = vec![hit];
            let mut cur = hit;
            while let Some(&Some(prev)) = parent.get(&cur) {
                path.push(prev);
                cur = prev;
            }
            path.reverse();
            return Some(path);
        }
        let mut next = Vec::new();
        for &v in &layer {
            for w in graph.neighbors(v) {
                if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(w) {
                    e.insert(Some(v));
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        next.sort_unstable();
        next.dedup();
        layer = next;
    }
}
