//! Strong-recursive-backdoor trees.
//!
//! A tree alternates graph-labeled nodes with variable branchings. Graph
//! labels are stored as clause-id sets; the labeled subformula is
//! materialized on demand by replaying the branch decisions on the root
//! formula, so validation re-derives every label independently of whoever
//! built the tree.
//!
//! Node shape: a graph-labeled node is either a leaf, carries exactly one
//! variable branching (two graph children, one per polarity), or splits
//! into the connected components of its label. The depth of a tree is the
//! maximum number of variable branchings on a root-to-leaf path, and every
//! leaf label must have clause width at most the tree's target width.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cnf::{ClauseId, Formula, Var};

/// How strictly structure is checked against the defining shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitPolicy {
    /// A disconnected label may carry a variable branching instead of a
    /// component split. Trees produced by the detector branch entire
    /// variable sets consecutively and need this form.
    #[default]
    AllowDeferredSplit,
    /// The literal shape: connected labels branch on a variable,
    /// disconnected labels split into components.
    Strict,
}

/// A structural violation, located by a node path like `root/x3+/[1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Debug, Error)]
pub enum TreeError {
    #[error("tree failed validation with {} violation(s); first: {}", .0.len(), .0[0])]
    Invalid(Vec<Violation>),
    #[error("malformed tree document: {0}")]
    Document(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// How a graph-labeled node continues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SrbChildren {
    Leaf,
    /// One variable branching: the children are labeled with the label
    /// under the positive and negative assignment of `var`.
    Branch {
        var: Var,
        pos: Box<SrbNode>,
        neg: Box<SrbNode>,
    },
    /// One child per connected component of the label.
    Split(Vec<SrbNode>),
}

/// A graph-labeled node: the clause ids of its label plus the continuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrbNode {
    clauses: Vec<ClauseId>,
    children: SrbChildren,
}

impl SrbNode {
    fn label_of(formula: &Formula) -> Vec<ClauseId> {
        formula.clause_ids().collect()
    }

    pub fn leaf(label: &Formula) -> SrbNode {
        SrbNode {
            clauses: Self::label_of(label),
            children: SrbChildren::Leaf,
        }
    }

    pub fn branch(label: &Formula, var: Var, pos: SrbNode, neg: SrbNode) -> SrbNode {
        SrbNode {
            clauses: Self::label_of(label),
            children: SrbChildren::Branch {
                var,
                pos: Box::new(pos),
                neg: Box::new(neg),
            },
        }
    }

    pub fn split(label: &Formula, children: Vec<SrbNode>) -> SrbNode {
        SrbNode {
            clauses: Self::label_of(label),
            children: SrbChildren::Split(children),
        }
    }

    pub fn clause_ids(&self) -> &[ClauseId] {
        &self.clauses
    }

    pub fn children(&self) -> &SrbChildren {
        &self.children
    }

    /// Maximum number of variable branchings from this node to a leaf.
    pub fn depth(&self) -> usize {
        match &self.children {
            SrbChildren::Leaf => 0,
            SrbChildren::Branch { pos, neg, .. } => 1 + pos.depth().max(neg.depth()),
            SrbChildren::Split(children) => {
                children.iter().map(SrbNode::depth).max().unwrap_or(0)
            }
        }
    }

    pub fn node_count(&self) -> usize {
        match &self.children {
            SrbChildren::Leaf => 1,
            SrbChildren::Branch { pos, neg, .. } => 1 + pos.node_count() + neg.node_count(),
            SrbChildren::Split(children) => {
                1 + children.iter().map(SrbNode::node_count).sum::<usize>()
            }
        }
    }

    /// Replaces every leaf by the subtree `f` builds for its label.
    /// The replacement's root label must equal the leaf label.
    pub(crate) fn map_leaves<E>(
        self,
        label: &Formula,
        f: &mut impl FnMut(&Formula) -> Result<SrbNode, E>,
    ) -> Result<SrbNode, E> {
        match self.children {
            SrbChildren::Leaf => f(label),
            SrbChildren::Branch { var, pos, neg } => {
                let pos_label = label.assign(var, crate::cnf::Polarity::Pos);
                let neg_label = label.assign(var, crate::cnf::Polarity::Neg);
                let pos = pos.map_leaves(&pos_label, f)?;
                let neg = neg.map_leaves(&neg_label, f)?;
                Ok(SrbNode {
                    clauses: self.clauses,
                    children: SrbChildren::Branch {
                        var,
                        pos: Box::new(pos),
                        neg: Box::new(neg),
                    },
                })
            }
            SrbChildren::Split(children) => {
                let mut mapped = Vec::with_capacity(children.len());
                for child in children {
                    let ids: BTreeSet<ClauseId> = child.clauses.iter().copied().collect();
                    let child_label = label.restrict_to(&ids);
                    mapped.push(child.map_leaves(&child_label, f)?);
                }
                Ok(SrbNode {
                    clauses: self.clauses,
                    children: SrbChildren::Split(mapped),
                })
            }
        }
    }
}

/// Leaf statistics: how many leaves the tree has and how many incidence
/// graph vertices their labels contain in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeafStats {
    pub leaf_count: u64,
    pub leaf_vertex_sum: u64,
}

/// A strong recursive backdoor tree for one formula, to the class of
/// formulas with clause width at most `target_width`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrbTree {
    root: SrbNode,
    target_width: usize,
}

impl SrbTree {
    pub fn new(root: SrbNode, target_width: usize) -> SrbTree {
        SrbTree { root, target_width }
    }

    /// A single-leaf tree labeled with the whole formula.
    pub fn single_leaf(formula: &Formula, target_width: usize) -> SrbTree {
        SrbTree::new(SrbNode::leaf(formula), target_width)
    }

    pub fn root(&self) -> &SrbNode {
        &self.root
    }

    pub fn into_root(self) -> SrbNode {
        self.root
    }

    pub fn target_width(&self) -> usize {
        self.target_width
    }

    pub fn depth(&self) -> usize {
        self.root.depth()
    }

    pub fn node_count(&self) -> usize {
        self.root.node_count()
    }

    /// Checks the tree against its defining invariants over `formula`,
    /// re-deriving every label. All violations are collected rather than
    /// failing fast.
    pub fn validate(&self, formula: &Formula, policy: SplitPolicy) -> Vec<Violation> {
        let mut out = Vec::new();
        check_node(
            &self.root,
            formula.clone(),
            formula,
            self.target_width,
            policy,
            "root",
            &mut out,
        );
        out
    }

    pub fn leaf_stats(&self, formula: &Formula) -> LeafStats {
        let mut stats = LeafStats {
            leaf_count: 0,
            leaf_vertex_sum: 0,
        };
        visit_leaves(&self.root, formula.clone(), &mut |label| {
            stats.leaf_count += 1;
            stats.leaf_vertex_sum += label.vertex_count() as u64;
        });
        stats
    }

    /// Bottom-up satisfiability: a variable branching is satisfiable if
    /// either polarity child is, a component split if all children are, a
    /// leaf as the leaf solver decides. The tree is validated first.
    pub fn solve_sat(
        &self,
        formula: &Formula,
        leaf_solver: &dyn Fn(&Formula) -> bool,
    ) -> Result<bool, TreeError> {
        let violations = self.validate(formula, SplitPolicy::AllowDeferredSplit);
        if !violations.is_empty() {
            return Err(TreeError::Invalid(violations));
        }
        Ok(eval_sat(&self.root, formula.clone(), leaf_solver))
    }

    /// [`SrbTree::solve_sat`] with the empty-class leaf rule: a leaf is
    /// satisfiable iff it contains no clause (a present clause is empty and
    /// unsatisfiable).
    pub fn solve_sat_empty_class(&self, formula: &Formula) -> Result<bool, TreeError> {
        self.solve_sat(formula, &|leaf| leaf.clause_count() == 0)
    }

    /// Bottom-up model counting over the variables of each node's label.
    /// At a variable branching, each polarity child's count is scaled by
    /// 2^(number of label variables, other than the branched one, that
    /// vanish in that child) — variables of satisfied clauses are free.
    /// Branchings on variables absent from the label are no-ops and take
    /// the positive child's count. Splits multiply, since components
    /// partition the label's variables.
    pub fn count_models(
        &self,
        formula: &Formula,
        leaf_counter: &dyn Fn(&Formula) -> BigUint,
    ) -> Result<BigUint, TreeError> {
        let violations = self.validate(formula, SplitPolicy::AllowDeferredSplit);
        if !violations.is_empty() {
            return Err(TreeError::Invalid(violations));
        }
        Ok(eval_count(&self.root, formula.clone(), leaf_counter))
    }

    /// [`SrbTree::count_models`] with the empty-class leaf rule: an empty
    /// label has exactly one (empty) satisfying assignment, a label with a
    /// clause has none.
    pub fn count_models_empty_class(&self, formula: &Formula) -> Result<BigUint, TreeError> {
        self.count_models(formula, &|leaf| {
            if leaf.clause_count() == 0 {
                BigUint::from(1u8)
            } else {
                BigUint::from(0u8)
            }
        })
    }

    pub fn to_json(&self) -> String {
        let doc = TreeDoc {
            format: FORMAT.to_string(),
            target_width: self.target_width,
            root: encode(&self.root),
        };
        serde_json::to_string_pretty(&doc).expect("tree serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<SrbTree, TreeError> {
        let doc: TreeDoc = serde_json::from_str(text)?;
        if doc.format != FORMAT {
            return Err(TreeError::Document(format!(
                "unsupported format '{}', expected '{FORMAT}'",
                doc.format
            )));
        }
        Ok(SrbTree {
            root: decode(doc.root)?,
            target_width: doc.target_width,
        })
    }
}

fn visit_leaves(node: &SrbNode, label: Formula, f: &mut impl FnMut(&Formula)) {
    match &node.children {
        SrbChildren::Leaf => f(&label),
        SrbChildren::Branch { var, pos, neg } => {
            visit_leaves(pos, label.assign(*var, crate::cnf::Polarity::Pos), f);
            visit_leaves(neg, label.assign(*var, crate::cnf::Polarity::Neg), f);
        }
        SrbChildren::Split(children) => {
            for child in children {
                let ids: BTreeSet<ClauseId> = child.clauses.iter().copied().collect();
                visit_leaves(child, label.restrict_to(&ids), f);
            }
        }
    }
}

fn eval_sat(node: &SrbNode, label: Formula, leaf_solver: &dyn Fn(&Formula) -> bool) -> bool {
    match &node.children {
        SrbChildren::Leaf => leaf_solver(&label),
        SrbChildren::Branch { var, pos, neg } => {
            eval_sat(pos, label.assign(*var, crate::cnf::Polarity::Pos), leaf_solver)
                || eval_sat(neg, label.assign(*var, crate::cnf::Polarity::Neg), leaf_solver)
        }
        SrbChildren::Split(children) => children.iter().all(|child| {
            let ids: BTreeSet<ClauseId> = child.clauses.iter().copied().collect();
            eval_sat(child, label.restrict_to(&ids), leaf_solver)
        }),
    }
}

fn eval_count(node: &SrbNode, label: Formula, leaf_counter: &dyn Fn(&Formula) -> BigUint) -> BigUint {
    match &node.children {
        SrbChildren::Leaf => leaf_counter(&label),
        SrbChildren::Branch { var, pos, neg } => {
            if !label.contains_var(*var) {
                // No-op branching: both children carry this same label.
                return eval_count(pos, label, leaf_counter);
            }
            let label_vars = label.var_count();
            let mut total = BigUint::from(0u8);
            for (child, polarity) in [(pos, crate::cnf::Polarity::Pos), (neg, crate::cnf::Polarity::Neg)] {
                let child_label = label.assign(*var, polarity);
                let vanished_others = label_vars - 1 - child_label.var_count();
                total += eval_count(child, child_label, leaf_counter) << vanished_others;
            }
            total
        }
        SrbChildren::Split(children) => {
            let mut total = BigUint::from(1u8);
            for child in children {
                let ids: BTreeSet<ClauseId> = child.clauses.iter().copied().collect();
                total *= eval_count(child, label.restrict_to(&ids), leaf_counter);
            }
            total
        }
    }
}

fn check_node(
    node: &SrbNode,
    label: Formula,
    root_formula: &Formula,
    target_width: usize,
    policy: SplitPolicy,
    path: &str,
    out: &mut Vec<Violation>,
) {
    let derived: Vec<ClauseId> = label.clause_ids().collect();
    if node.clauses != derived {
        out.push(Violation {
            path: path.to_string(),
            message: format!(
                "label claims {} clause(s) but the derived label has {}",
                node.clauses.len(),
                derived.len()
            ),
        });
    }
    match &node.children {
        SrbChildren::Leaf => {
            if label.max_clause_width() > target_width {
                out.push(Violation {
                    path: path.to_string(),
                    message: format!(
                        "leaf label has clause width {} but the target class allows at most {}",
                        label.max_clause_width(),
                        target_width
                    ),
                });
            }
        }
        SrbChildren::Branch { var, pos, neg } => {
            if !root_formula.contains_var(*var) {
                out.push(Violation {
                    path: path.to_string(),
                    message: format!("branch variable {var} does not occur in the root formula"),
                });
            }
            if policy == SplitPolicy::Strict && label.components().len() != 1 {
                out.push(Violation {
                    path: path.to_string(),
                    message: "variable branching on a label that is not connected".to_string(),
                });
            }
            let pos_label = label.assign(*var, crate::cnf::Polarity::Pos);
            let neg_label = label.assign(*var, crate::cnf::Polarity::Neg);
            check_node(
                pos,
                pos_label,
                root_formula,
                target_width,
                policy,
                &format!("{path}/{var}+"),
                out,
            );
            check_node(
                neg,
                neg_label,
                root_formula,
                target_width,
                policy,
                &format!("{path}/{var}-"),
                out,
            );
        }
        SrbChildren::Split(children) => {
            let components = label.components();
            if components.len() < 2 {
                out.push(Violation {
                    path: path.to_string(),
                    message: format!(
                        "component split on a label with {} component(s)",
                        components.len()
                    ),
                });
            }
            if children.len() != components.len() {
                out.push(Violation {
                    path: path.to_string(),
                    message: format!(
                        "split has {} child(ren) but the label has {} component(s)",
                        children.len(),
                        components.len()
                    ),
                });
                return;
            }
            for (i, (child, component)) in children.iter().zip(components).enumerate() {
                check_node(
                    child,
                    component,
                    root_formula,
                    target_width,
                    policy,
                    &format!("{path}/[{i}]"),
                    out,
                );
            }
        }
    }
}

const FORMAT: &str = "rbdsat.srb/1";

#[derive(Serialize, Deserialize)]
struct TreeDoc {
    format: String,
    target_width: usize,
    root: JsonNode,
}

/// The document mirrors the three node kinds of the defining shape: graph
/// nodes (`component`, `leaf`) and `variable` nodes with polarity edges.
#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum JsonNode {
    Component {
        clauses: Vec<u32>,
        children: Vec<JsonNode>,
    },
    Variable {
        var: u32,
        pos: Box<JsonNode>,
        neg: Box<JsonNode>,
    },
    Leaf {
        clauses: Vec<u32>,
    },
}

fn encode(node: &SrbNode) -> JsonNode {
    let clauses = node.clauses.iter().map(|c| c.0).collect();
    match &node.children {
        SrbChildren::Leaf => JsonNode::Leaf { clauses },
        SrbChildren::Branch { var, pos, neg } => JsonNode::Component {
            clauses,
            children: vec![JsonNode::Variable {
                var: var.0,
                pos: Box::new(encode(pos)),
                neg: Box::new(encode(neg)),
            }],
        },
        SrbChildren::Split(children) => JsonNode::Component {
            clauses,
            children: children.iter().map(encode).collect(),
        },
    }
}

fn decode(node: JsonNode) -> Result<SrbNode, TreeError> {
    match node {
        JsonNode::Leaf { clauses } => Ok(SrbNode {
            clauses: clauses.into_iter().map(ClauseId).collect(),
            children: SrbChildren::Leaf,
        }),
        JsonNode::Variable { .. } => Err(TreeError::Document(
            "variable node outside a component node".to_string(),
        )),
        JsonNode::Component { clauses, children } => {
            let clauses: Vec<ClauseId> = clauses.into_iter().map(ClauseId).collect();
            let mut nodes = Vec::with_capacity(children.len());
            let mut branch = None;
            let arity = children.len();
            for child in children {
                match child {
                    JsonNode::Variable { var, pos, neg } => {
                        if arity != 1 {
                            return Err(TreeError::Document(
                                "a component node with a variable child must have exactly one child"
                                    .to_string(),
                            ));
                        }
                        branch = Some(SrbChildren::Branch {
                            var: Var(var),
                            pos: Box::new(decode(*pos)?),
                            neg: Box::new(decode(*neg)?),
                        });
                    }
                    other => nodes.push(decode(other)?),
                }
            }
            let children = match branch {
                Some(b) => b,
                None if nodes.is_empty() => {
                    return Err(TreeError::Document(
                        "component node with no children; use a leaf node".to_string(),
                    ))
                }
                None => SrbChildren::Split(nodes),
            };
            Ok(SrbNode { clauses, children })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::Polarity;

    fn fm(clauses: &[&[i64]]) -> Formula {
        Formula::from_ints(clauses).expect("valid test formula")
    }

    /// Fully expands a formula into a strict tree by branching its smallest
    /// variable and splitting components, until the empty class is reached.
    fn expand(label: &Formula) -> SrbNode {
        if label.is_empty_class() {
            return SrbNode::leaf(label);
        }
        let comps = label.components();
        if comps.len() > 1 {
            return SrbNode::split(label, comps.iter().map(expand).collect());
        }
        let var = label.vars().next().expect("non-empty-class label has a variable");
        let pos = label.assign(var, Polarity::Pos);
        let neg = label.assign(var, Polarity::Neg);
        SrbNode::branch(label, var, expand(&pos), expand(&neg))
    }

    fn tree_for(label: &Formula) -> SrbTree {
        SrbTree::new(expand(label), 0)
    }

    #[test]
    fn depth_of_single_leaf_is_zero() {
        let phi = Formula::empty();
        let tree = SrbTree::single_leaf(&phi, 0);
        assert_eq!(tree.depth(), 0);
        assert!(tree.validate(&phi, SplitPolicy::Strict).is_empty());
    }

    #[test]
    fn depth_counts_variable_branchings() {
        let unit = fm(&[&[1]]);
        assert_eq!(tree_for(&unit).depth(), 1);
        // Branch x1; the negative child must branch x2 as well.
        let pair = fm(&[&[1, 2]]);
        assert_eq!(tree_for(&pair).depth(), 2);
    }

    #[test]
    fn strict_validation_accepts_expanded_trees() {
        for phi in [fm(&[&[1]]), fm(&[&[1, 2], &[-1, 3]]), fm(&[&[1], &[2]])] {
            let tree = tree_for(&phi);
            assert_eq!(tree.validate(&phi, SplitPolicy::Strict), vec![]);
        }
    }

    #[test]
    fn leaf_width_violation_is_reported() {
        let phi = fm(&[&[1, 2]]);
        let tree = SrbTree::single_leaf(&phi, 1);
        let violations = tree.validate(&phi, SplitPolicy::Strict);
        assert_eq!(violations.len(), 1);
        assert!(violations[0].message.contains("width 2"));
    }

    #[test]
    fn mutated_branch_child_label_is_reported() {
        let phi = fm(&[&[1]]);
        // The positive child claims the clause survives, which contradicts
        // the derived label {} after x1 -> +.
        let bad = SrbTree::new(
            SrbNode::branch(&phi, Var(1), SrbNode::leaf(&phi), SrbNode::leaf(&phi.assign(Var(1), Polarity::Neg))),
            0,
        );
        let violations = bad.validate(&phi, SplitPolicy::Strict);
        assert!(violations.iter().any(|v| v.path == "root/x1+"));
    }

    #[test]
    fn split_on_connected_label_is_reported() {
        let phi = fm(&[&[1, 2]]);
        let tree = SrbTree::new(SrbNode::split(&phi, vec![SrbNode::leaf(&phi)]), 2);
        let violations = tree.validate(&phi, SplitPolicy::AllowDeferredSplit);
        assert!(violations.iter().any(|v| v.message.contains("1 component")));
    }

    #[test]
    fn deferred_split_is_policy_dependent() {
        // Branch x1 on the disconnected {{x1}, {x2}}: the chain form.
        let phi = fm(&[&[1], &[2]]);
        let pos = phi.assign(Var(1), Polarity::Pos);
        let neg = phi.assign(Var(1), Polarity::Neg);
        let chain = SrbTree::new(
            SrbNode::branch(&phi, Var(1), expand(&pos), expand(&neg)),
            0,
        );
        assert_eq!(chain.validate(&phi, SplitPolicy::AllowDeferredSplit), vec![]);
        assert!(!chain.validate(&phi, SplitPolicy::Strict).is_empty());
    }

    #[test]
    fn leaf_stats_of_single_leaf() {
        let phi = fm(&[&[1, 2]]);
        let stats = SrbTree::single_leaf(&phi, 2).leaf_stats(&phi);
        assert_eq!(stats.leaf_count, 1);
        assert_eq!(stats.leaf_vertex_sum, phi.vertex_count() as u64);
    }

    #[test]
    fn leaf_bound_on_depth_one_tree() {
        let phi = fm(&[&[1]]);
        let tree = tree_for(&phi);
        let stats = tree.leaf_stats(&phi);
        assert_eq!(stats.leaf_count, 2);
        assert!(stats.leaf_count <= (1 << tree.depth()) * phi.length() as u64);
        assert!(stats.leaf_vertex_sum <= (1 << tree.depth()) * phi.length() as u64);
    }

    #[test]
    fn solve_examples() {
        let sat = fm(&[&[1]]);
        assert!(tree_for(&sat).solve_sat_empty_class(&sat).unwrap());
        let unsat = fm(&[&[1], &[-1]]);
        assert!(!tree_for(&unsat).solve_sat_empty_class(&unsat).unwrap());
    }

    #[test]
    fn count_examples() {
        let unit = fm(&[&[1]]);
        assert_eq!(tree_for(&unit).count_models_empty_class(&unit).unwrap(), BigUint::from(1u8));
        // Truth table over {x1, x2}: three of four assignments satisfy x1 | x2.
        let pair = fm(&[&[1, 2]]);
        assert_eq!(tree_for(&pair).count_models_empty_class(&pair).unwrap(), BigUint::from(3u8));
        // Independent components multiply: 1 * 1.
        let two = fm(&[&[1], &[2]]);
        assert_eq!(tree_for(&two).count_models_empty_class(&two).unwrap(), BigUint::from(1u8));
    }

    #[test]
    fn counting_handles_noop_branchings() {
        // A chain that branches x2 first even though assigning x1 can erase
        // it: the x1+ child branches x2 on an empty label.
        let phi = fm(&[&[1, 2]]);
        let pos = phi.assign(Var(1), Polarity::Pos); // {}
        let neg = phi.assign(Var(1), Polarity::Neg); // {{x2}}
        let chain = SrbTree::new(
            SrbNode::branch(
                &phi,
                Var(1),
                SrbNode::branch(&pos, Var(2), SrbNode::leaf(&pos), SrbNode::leaf(&pos)),
                expand(&neg),
            ),
            0,
        );
        assert!(chain.validate(&phi, SplitPolicy::AllowDeferredSplit).is_empty());
        assert_eq!(chain.count_models_empty_class(&phi).unwrap(), BigUint::from(3u8));
    }

    #[test]
    fn invalid_tree_is_rejected_before_evaluation() {
        let phi = fm(&[&[1, 2]]);
        let wrong = SrbTree::single_leaf(&phi, 0);
        assert!(matches!(
            wrong.solve_sat_empty_class(&phi),
            Err(TreeError::Invalid(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let phi = fm(&[&[1, 2], &[-1, 3], &[4]]);
        let tree = tree_for(&phi);
        let restored = SrbTree::from_json(&tree.to_json()).unwrap();
        assert_eq!(tree, restored);
        assert!(restored.validate(&phi, SplitPolicy::Strict).is_empty());
    }

    #[test]
    fn json_rejects_wrong_format() {
        let text = r#"{"format":"other/9","target_width":0,"root":{"kind":"leaf","clauses":[]}}"#;
        assert!(matches!(SrbTree::from_json(text), Err(TreeError::Document(_))));
    }
}
