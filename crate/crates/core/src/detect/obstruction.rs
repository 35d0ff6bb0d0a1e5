//! Obstruction trees: inductive certificates that a formula admits no
//! shallow strong recursive backdoor to the empty class.
//!
//! A level-d tree is a clause of width exactly d together with its
//! variables. A level-(i+1) tree joins two level-i trees whose destroy
//! neighborhoods are disjoint by a path of bounded length. The destroy
//! neighborhood of a tree contains its variables plus every variable that
//! sees clauses of the tree with both polarities; assigning any variable
//! outside it leaves the tree intact in at least one polarity branch.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cnf::{ClauseId, Formula, IncidenceGraph, Polarity, Var, Vertex};
use crate::srb::Violation;

use super::{path_length_bound, tree_size_bound, Params};

/// The two constructors of an obstruction tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionNode {
    /// A clause of width exactly `degree` with its variable set.
    Base { clause: ClauseId, vars: BTreeSet<Var> },
    /// Two trees of the level below, connected by a short path.
    Join {
        left: Box<ObstructionTree>,
        path: Vec<Vertex>,
        right: Box<ObstructionTree>,
    },
}

/// An obstruction tree with its cached parameters and destroy neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionTree {
    node: ObstructionNode,
    level: u32,
    degree: u32,
    k: u32,
    destroy: BTreeSet<Var>,
}

impl ObstructionTree {
    /// A base tree on a clause of width exactly `degree`. Its destroy
    /// neighborhood is exactly its variable set.
    pub fn base(clause: ClauseId, vars: BTreeSet<Var>, degree: u32, k: u32) -> ObstructionTree {
        let destroy = vars.clone();
        ObstructionTree {
            node: ObstructionNode::Base { clause, vars },
            level: degree,
            degree,
            k,
            destroy,
        }
    }

    /// Joins two trees one level up; the destroy neighborhood is computed
    /// in `host`.
    pub fn join(
        left: ObstructionTree,
        path: Vec<Vertex>,
        right: ObstructionTree,
        host: &Formula,
    ) -> ObstructionTree {
        debug_assert_eq!(left.level, right.level);
        let level = left.level + 1;
        let degree = left.degree;
        let k = left.k;
        let node = ObstructionNode::Join {
            left: Box::new(left),
            path,
            right: Box::new(right),
        };
        let mut tree = ObstructionTree {
            node,
            level,
            degree,
            k,
            destroy: BTreeSet::new(),
        };
        tree.destroy = destroy_neighborhood(&tree, host);
        tree
    }

    pub fn node(&self) -> &ObstructionNode {
        &self.node
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn param_k(&self) -> u32 {
        self.k
    }

    /// The cached destroy neighborhood, as computed in the graph the tree
    /// was found in. Lifting preserves it.
    pub fn destroy(&self) -> &BTreeSet<Var> {
        &self.destroy
    }

    /// All element vertices of the tree: base clauses with their variables
    /// and every join-path vertex.
    pub fn vertices(&self) -> BTreeSet<Vertex> {
        let mut out = BTreeSet::new();
        self.collect_vertices(&mut out);
        out
    }

    fn collect_vertices(&self, out: &mut BTreeSet<Vertex>) {
        match &self.node {
            ObstructionNode::Base { clause, vars } => {
                out.insert(Vertex::Clause(*clause));
                out.extend(vars.iter().map(|&v| Vertex::Var(v)));
            }
            ObstructionNode::Join { left, path, right } => {
                left.collect_vertices(out);
                out.extend(path.iter().copied());
                right.collect_vertices(out);
            }
        }
    }

    pub fn clause_ids(&self) -> BTreeSet<ClauseId> {
        self.vertices()
            .into_iter()
            .filter_map(|v| match v {
                Vertex::Clause(c) => Some(c),
                Vertex::Var(_) => None,
            })
            .collect()
    }

    pub fn var_ids(&self) -> BTreeSet<Var> {
        self.vertices()
            .into_iter()
            .filter_map(|v| match v {
                Vertex::Var(x) => Some(x),
                Vertex::Clause(_) => None,
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        let doc = ObstructionDoc {
            format: FORMAT.to_string(),
            degree: self.degree,
            param_k: self.k,
            root: encode(self),
        };
        serde_json::to_string_pretty(&doc).expect("obstruction serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<ObstructionTree, String> {
        let doc: ObstructionDoc = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if doc.format != FORMAT {
            return Err(format!("unsupported format '{}', expected '{FORMAT}'", doc.format));
        }
        decode(doc.root, doc.degree, doc.param_k)
    }
}

/// The destroy neighborhood of a tree in `host`: the tree's variables plus
/// every variable with a positive edge to one tree clause and a negative
/// edge to another (possibly the same).
pub fn destroy_neighborhood(tree: &ObstructionTree, host: &Formula) -> BTreeSet<Var> {
    let clauses = tree.clause_ids();
    let mut seen_pos = BTreeSet::new();
    let mut seen_neg = BTreeSet::new();
    for id in &clauses {
        if let Some(clause) = host.clause(*id) {
            for lit in clause.literals() {
                match lit.polarity {
                    Polarity::Pos => seen_pos.insert(lit.var),
                    Polarity::Neg => seen_neg.insert(lit.var),
                };
            }
        }
    }
    let mut out = tree.var_ids();
    out.extend(seen_pos.intersection(&seen_neg).copied());
    out
}

/// Checks every invariant of an obstruction tree in `host` at the given
/// parameters, including the size bounds. Violations carry node paths.
pub fn validate_obstruction(
    tree: &ObstructionTree,
    host: &Formula,
    params: Params,
) -> Vec<Violation> {
    let mut out = Vec::new();
    if host.max_clause_width() > params.degree as usize {
        out.push(Violation {
            path: "host".into(),
            message: format!(
                "host has clause width {} but the tree degree is {}",
                host.max_clause_width(),
                params.degree
            ),
        });
    }
    let graph = host.incidence_graph();
    check(tree, host, &graph, params.level, params, "root", &mut out);
    out
}

fn check(
    tree: &ObstructionTree,
    host: &Formula,
    graph: &IncidenceGraph,
    expected_level: u32,
    params: Params,
    path: &str,
    out: &mut Vec<Violation>,
) {
    let mut report = |message: String| {
        out.push(Violation {
            path: path.to_string(),
            message,
        });
    };
    if tree.level != expected_level {
        report(format!(
            "node has level {} but level {} is expected here",
            tree.level, expected_level
        ));
    }
    if tree.degree != params.degree || tree.k != params.k {
        report(format!(
            "node carries parameters (degree {}, k {}) instead of (degree {}, k {})",
            tree.degree, tree.k, params.degree, params.k
        ));
    }

    let computed = destroy_neighborhood(tree, host);
    if tree.destroy != computed {
        report(format!(
            "cached destroy neighborhood has {} variable(s) but {} were computed",
            tree.destroy.len(),
            computed.len()
        ));
    }

    let lambda = path_length_bound(params.k);
    let size_bound = tree_size_bound(expected_level, params.degree, params.k);
    let vertex_count = tree.vertices().len() as u64;
    if vertex_count > size_bound {
        report(format!(
            "tree has {vertex_count} vertices, exceeding the bound {size_bound}"
        ));
    }
    let destroy_bound = size_bound.saturating_mul(u64::from(params.degree));
    if computed.len() as u64 > destroy_bound {
        report(format!(
            "destroy neighborhood has {} variables, exceeding the bound {destroy_bound}",
            computed.len()
        ));
    }

    match &tree.node {
        ObstructionNode::Base { clause, vars } => {
            if expected_level != params.degree {
                report(format!(
                    "base node at level {expected_level}; bases exist only at level {}",
                    params.degree
                ));
            }
            match host.clause(*clause) {
                None => report(format!("base clause {clause} is not in the host")),
                Some(c) => {
                    if c.width() != params.degree as usize {
                        report(format!(
                            "base clause {clause} has width {} but must have width exactly {}",
                            c.width(),
                            params.degree
                        ));
                    }
                    let clause_vars: BTreeSet<Var> = c.vars().collect();
                    if *vars != clause_vars {
                        report(format!("base variable set does not match var({clause})"));
                    }
                }
            }
        }
        ObstructionNode::Join { left, path: walk, right } => {
            let left_destroy = destroy_neighborhood(left, host);
            let right_destroy = destroy_neighborhood(right, host);
            if left_destroy.intersection(&right_destroy).next().is_some() {
                report("joined trees have overlapping destroy neighborhoods".into());
            }
            check_path(walk, left, right, graph, lambda, &mut report);
            check(left, host, graph, expected_level - 1, params, &format!("{path}/left"), out);
            check(right, host, graph, expected_level - 1, params, &format!("{path}/right"), out);
        }
    }
}

fn check_path(
    walk: &[Vertex],
    left: &ObstructionTree,
    right: &ObstructionTree,
    graph: &IncidenceGraph,
    lambda: u64,
    report: &mut impl FnMut(String),
) {
    if walk.is_empty() {
        report("join path is empty".into());
        return;
    }
    let edges = (walk.len() - 1) as u64;
    if edges > lambda {
        report(format!("join path has length {edges}, exceeding the bound {lambda}"));
    }
    if !left.vertices().contains(&walk[0]) {
        report("join path does not start in the left tree".into());
    }
    if !right.vertices().contains(walk.last().expect("nonempty path")) {
        report("join path does not end in the right tree".into());
    }
    let distinct: BTreeSet<Vertex> = walk.iter().copied().collect();
    if distinct.len() != walk.len() {
        report("join path repeats a vertex".into());
    }
    for pair in walk.windows(2) {
        let adjacent = match (pair[0], pair[1]) {
            (Vertex::Var(v), Vertex::Clause(c)) | (Vertex::Clause(c), Vertex::Var(v)) => graph
                .has_edge(v, c, Polarity::Pos)
                || graph.has_edge(v, c, Polarity::Neg),
            _ => false,
        };
        if !adjacent {
            report(format!("join path step {} -> {} is not an edge", pair[0], pair[1]));
        }
    }
}

const FORMAT: &str = "rbdsat.obstruction/1";

#[derive(Serialize, Deserialize)]
struct ObstructionDoc {
    format: String,
    degree: u32,
    param_k: u32,
    root: JsonNode,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum JsonNode {
    Base {
        level: u32,
        clause: u32,
        vars: Vec<u32>,
        destroy: Vec<u32>,
    },
    Join {
        level: u32,
        destroy: Vec<u32>,
        left: Box<JsonNode>,
        path: Vec<Vertex>,
        right: Box<JsonNode>,
    },
}

fn encode(tree: &ObstructionTree) -> JsonNode {
    let destroy = tree.destroy.iter().map(|v| v.0).collect();
    match &tree.node {
        ObstructionNode::Base { clause, vars } => JsonNode::Base {
            level: tree.level,
            clause: clause.0,
            vars: vars.iter().map(|v| v.0).collect(),
            destroy,
        },
        ObstructionNode::Join { left, path, right } => JsonNode::Join {
            level: tree.level,
            destroy,
            left: Box::new(encode(left)),
            path: path.clone(),
            right: Box::new(encode(right)),
        },
    }
}

fn decode(node: JsonNode, degree: u32, k: u32) -> Result<ObstructionTree, String> {
    match node {
        JsonNode::Base { level, clause, vars, destroy } => Ok(ObstructionTree {
            node: ObstructionNode::Base {
                clause: ClauseId(clause),
                vars: vars.into_iter().map(Var).collect(),
            },
            level,
            degree,
            k,
            destroy: destroy.into_iter().map(Var).collect(),
        }),
        JsonNode::Join { level, destroy, left, path, right } => {
            let left = decode(*left, degree, k)?;
            let right = decode(*right, degree, k)?;
            if left.level != right.level || left.level + 1 != level {
                return Err("join levels are inconsistent".into());
            }
            Ok(ObstructionTree {
                node: ObstructionNode::Join {
                    left: Box::new(left),
                    path,
                    right: Box::new(right),
                },
                level,
                degree,
                k,
                destroy: destroy.into_iter().map(Var).collect(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fm(clauses: &[&[i64]]) -> Formula {
        Formula::from_ints(clauses).expect("valid test formula")
    }

    fn base_on(host: &Formula, clause: ClauseId, degree: u32, k: u32) -> ObstructionTree {
        let vars = host.clause(clause).expect("clause exists").vars().collect();
        ObstructionTree::base(clause, vars, degree, k)
    }

    #[test]
    fn base_destroy_is_the_clause_variable_set() {
        let host = fm(&[&[1, -2]]);
        let tree = base_on(&host, ClauseId(1), 2, 2);
        let expected: BTreeSet<Var> = [Var(1), Var(2)].into();
        assert_eq!(destroy_neighborhood(&tree, &host), expected);
        assert!(validate_obstruction(&tree, &host, Params { level: 2, degree: 2, k: 2 }).is_empty());
    }

    /// Two disjoint width-2 bases joined through a middle variable: no
    /// outside variable sees the joined clauses with both polarities, so
    /// the destroy neighborhood is exactly the tree's variables.
    fn plain_join() -> (Formula, ObstructionTree) {
        let host = fm(&[&[1, 2], &[4, 5], &[2, 3], &[3, 4]]);
        let left = base_on(&host, ClauseId(1), 2, 2);
        let right = base_on(&host, ClauseId(2), 2, 2);
        let path = vec![
            Vertex::Var(Var(2)),
            Vertex::Clause(ClauseId(3)),
            Vertex::Var(Var(3)),
            Vertex::Clause(ClauseId(4)),
            Vertex::Var(Var(4)),
        ];
        let tree = ObstructionTree::join(left, path, right, &host);
        (host, tree)
    }

    #[test]
    fn join_without_mixed_polarities_adds_nothing() {
        let (host, tree) = plain_join();
        assert_eq!(tree.destroy(), &tree.var_ids());
        assert!(validate_obstruction(&tree, &host, Params { level: 3, degree: 2, k: 2 }).is_empty());
    }

    #[test]
    fn join_destroy_adds_variables_seeing_both_polarities() {
        // Two disjoint 3-clause bases bridged through w; the outside
        // variable z is positive in one bridge clause and negative in the
        // other, so it joins the destroy neighborhood. Checked against a
        // direct computation of the defining set.
        let host = fm(&[
            &[1, 2, 3],    // c1: left base
            &[4, 5, 6],    // c2: right base
            &[1, 7, 8],    // c3: bridge, z = x8 positive
            &[7, 4, -8],   // c4: bridge, z negative
        ]);
        let left = base_on(&host, ClauseId(1), 3, 3);
        let right = base_on(&host, ClauseId(2), 3, 3);
        let path = vec![
            Vertex::Var(Var(1)),
            Vertex::Clause(ClauseId(3)),
            Vertex::Var(Var(7)),
            Vertex::Clause(ClauseId(4)),
            Vertex::Var(Var(4)),
        ];
        let tree = ObstructionTree::join(left, path, right, &host);
        let mut expected = tree.var_ids();
        assert!(!expected.contains(&Var(8)));
        expected.insert(Var(8));
        assert_eq!(destroy_neighborhood(&tree, &host), expected);
        assert!(validate_obstruction(&tree, &host, Params { level: 4, degree: 3, k: 3 }).is_empty());
    }

    #[test]
    fn overlapping_destroy_neighborhoods_are_reported() {
        // Both bases contain x2, so their destroy neighborhoods overlap.
        let host = fm(&[&[1, 2], &[2, 3]]);
        let left = base_on(&host, ClauseId(1), 2, 2);
        let right = base_on(&host, ClauseId(2), 2, 2);
        let path = vec![Vertex::Var(Var(2))];
        let tree = ObstructionTree::join(left, path, right, &host);
        let violations = validate_obstruction(&tree, &host, Params { level: 3, degree: 2, k: 2 });
        assert!(violations.iter().any(|v| v.message.contains("overlapping")));
    }

    #[test]
    fn overlong_join_paths_are_reported() {
        // A chain of 10 width-2 bridges puts the bases 20 edges apart,
        // above the bound 16 for k = 2.
        let mut clauses: Vec<Vec<i64>> = vec![vec![1, 2], vec![12, 13]];
        for i in 2..=11i64 {
            clauses.push(vec![i, i + 1]);
        }
        let slices: Vec<&[i64]> = clauses.iter().map(Vec::as_slice).collect();
        let host = fm(&slices);
        let left = base_on(&host, ClauseId(1), 2, 2);
        let right = base_on(&host, ClauseId(2), 2, 2);
        let mut path = vec![Vertex::Var(Var(2))];
        for i in 2..=11u32 {
            path.push(Vertex::Clause(ClauseId(i + 1)));
            path.push(Vertex::Var(Var(i + 1)));
        }
        assert_eq!(path.len(), 21);
        let tree = ObstructionTree::join(left, path, right, &host);
        let violations = validate_obstruction(&tree, &host, Params { level: 3, degree: 2, k: 2 });
        assert!(
            violations.iter().any(|v| v.message.contains("length 20")),
            "{violations:?}"
        );
    }

    #[test]
    fn foreign_and_wrong_width_bases_are_reported() {
        let host = fm(&[&[1, 2]]);
        let missing = ObstructionTree::base(ClauseId(9), [Var(1)].into(), 1, 2);
        let violations = validate_obstruction(&missing, &host, Params { level: 1, degree: 1, k: 2 });
        assert!(violations.iter().any(|v| v.message.contains("not in the host")));
        // Width 2 clause cannot be a degree-1 base; the host also exceeds
        // the degree, which is reported separately.
        let narrow = ObstructionTree::base(ClauseId(1), [Var(1), Var(2)].into(), 1, 2);
        let violations = validate_obstruction(&narrow, &host, Params { level: 1, degree: 1, k: 2 });
        assert!(violations.iter().any(|v| v.message.contains("width exactly")));
    }

    #[test]
    fn json_round_trips() {
        let (host, tree) = plain_join();
        let restored = ObstructionTree::from_json(&tree.to_json()).unwrap();
        assert_eq!(tree, restored);
        assert!(validate_obstruction(&restored, &host, Params { level: 3, degree: 2, k: 2 }).is_empty());
    }
}
