//! Fixed-parameter detection of strong recursive backdoors to the empty
//! class, through obstruction trees.
//!
//! The core procedure, [`find_obstruction_or_backdoor`], takes a formula of
//! clause width at most `degree` and returns exactly one of: an obstruction
//! tree at the requested level, a backdoor tree that lowers the maximum
//! clause width by one, or the conclusion that the recursive backdoor depth
//! exceeds `k`. [`find_srb`] drives it down the widths until the empty
//! class is reached, and [`permissive_solve`] evaluates the resulting tree.
//!
//! All choices are deterministic: base clauses are picked by smallest id,
//! destroy-neighborhood assignments enumerate variables ascending with the
//! positive polarity first, and path queries inherit the BFS tie-breaking
//! of the incidence graph.

mod obstruction;

pub use obstruction::{destroy_neighborhood, validate_obstruction, ObstructionNode, ObstructionTree};

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cnf::{shortest_path, Assignment, Formula, Polarity, Var};
use crate::guard::{GuardError, ResourceGuard};
use crate::srb::{SrbNode, SrbTree};

/// The path-length bound for joining obstruction trees at parameter `k`
/// (also one more than the diameter bound of depth-`k` formulas).
pub fn path_length_bound(k: u32) -> u64 {
    4u64.saturating_mul(2u64.saturating_pow(k))
}

/// The vertex-count bound of a level-`level` obstruction tree.
pub(crate) fn tree_size_bound(level: u32, degree: u32, k: u32) -> u64 {
    3u64.saturating_pow(level.saturating_sub(degree))
        .saturating_mul(path_length_bound(k))
}

/// The depth bound of the backdoor trees produced at the given parameters.
pub fn depth_bound(level: u32, degree: u32, k: u32) -> u64 {
    tree_size_bound(level, degree, k).saturating_mul(u64::from(degree))
}

/// Parameters of one detection run: find a `level` obstruction in a formula
/// of clause width at most `degree`, under depth budget `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub level: u32,
    pub degree: u32,
    pub k: u32,
}

impl Params {
    /// Requires `1 <= degree <= level <= k + 1`.
    pub fn new(level: u32, degree: u32, k: u32) -> Result<Params, DetectError> {
        if degree == 0 {
            return Err(DetectError::Precondition(
                "degree must be at least 1; width-0 formulas are already in the empty class".into(),
            ));
        }
        if !(degree <= level && level <= k + 1) {
            return Err(DetectError::Precondition(format!(
                "parameters must satisfy degree <= level <= k + 1, got ({level}, {degree}, {k})"
            )));
        }
        Ok(Params { level, degree, k })
    }
}

#[derive(Debug, Error)]
pub enum DetectError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Guard(#[from] GuardError),
    #[error("internal invariant breached: {0}")]
    Internal(String),
}

/// The three mutually exclusive results of a detection run.
#[derive(Debug)]
pub enum DetectionOutcome {
    /// A certificate that the recursive backdoor depth is at least the
    /// requested level.
    Obstruction(ObstructionTree),
    /// A backdoor tree to the class one clause width below the input's.
    Backdoor(SrbTree),
    /// The recursive backdoor depth exceeds `k`.
    TooDeep,
}

/// SAT verdicts of the permissive solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Sat,
    Unsat,
    /// The formula may have recursive backdoor depth greater than `k`;
    /// never returned when the exact depth is within budget.
    TooDeep,
}

/// Observer invoked with every obstruction tree and the host formula it
/// certifies.
pub type ObstructionSink<'a> = Box<dyn FnMut(&Formula, &ObstructionTree) + 'a>;

/// Shared state of one search: the resource guard and an optional observer.
pub struct SrbSearch<'a> {
    guard: ResourceGuard,
    sink: Option<ObstructionSink<'a>>,
}

impl<'a> SrbSearch<'a> {
    pub fn new(guard: ResourceGuard) -> SrbSearch<'a> {
        SrbSearch { guard, sink: None }
    }

    pub fn with_sink(
        guard: ResourceGuard,
        sink: impl FnMut(&Formula, &ObstructionTree) + 'a,
    ) -> SrbSearch<'a> {
        SrbSearch {
            guard,
            sink: Some(Box::new(sink)),
        }
    }

    /// Work units spent so far.
    pub fn nodes(&self) -> u64 {
        self.guard.nodes()
    }

    fn tick(&mut self) -> Result<(), DetectError> {
        self.guard.tick().map_err(DetectError::Guard)
    }

    fn emit(&mut self, host: &Formula, tree: &ObstructionTree) {
        if let Some(sink) = &mut self.sink {
            sink(host, tree);
        }
    }
}

impl Default for SrbSearch<'_> {
    fn default() -> Self {
        SrbSearch::new(ResourceGuard::unlimited())
    }
}

/// Runs the detection procedure at the given parameters.
///
/// Preconditions: the formula's maximum clause width is at most
/// `params.degree`, and `degree <= level <= k + 1`.
pub fn find_obstruction_or_backdoor(
    formula: &Formula,
    params: Params,
    search: &mut SrbSearch<'_>,
) -> Result<DetectionOutcome, DetectError> {
    Params::new(params.level, params.degree, params.k)?;
    if formula.max_clause_width() > params.degree as usize {
        return Err(DetectError::Precondition(format!(
            "formula has clause width {} but the run degree is {}",
            formula.max_clause_width(),
            params.degree
        )));
    }
    detect(formula, params.level, params.degree, params.k, search)
}

fn leaf_backdoor(formula: &Formula, degree: u32) -> DetectionOutcome {
    DetectionOutcome::Backdoor(SrbTree::new(SrbNode::leaf(formula), degree as usize - 1))
}

fn detect(
    g: &Formula,
    level: u32,
    degree: u32,
    k: u32,
    search: &mut SrbSearch<'_>,
) -> Result<DetectionOutcome, DetectError> {
    search.tick()?;

    // Labels already in the empty class are leaves of any backdoor tree.
    if g.is_empty_class() {
        return Ok(leaf_backdoor(g, degree));
    }

    if level == degree {
        // Scan for a clause of width exactly `degree`; the smallest id wins.
        let hit = g
            .clauses()
            .find(|(_, c)| c.width() == degree as usize)
            .map(|(id, c)| (id, c.vars().collect::<BTreeSet<Var>>()));
        return Ok(match hit {
            Some((id, vars)) => {
                let tree = ObstructionTree::base(id, vars, degree, k);
                search.emit(g, &tree);
                DetectionOutcome::Obstruction(tree)
            }
            // No width-d clause: the formula is one width class down.
            None => leaf_backdoor(g, degree),
        });
    }

    let components = g.components();
    if components.len() > 1 {
        // Per-component recursion at the same level. An obstruction of a
        // component is one of the whole graph with the same destroy
        // neighborhood, since no outside variable touches its clauses.
        let mut roots = Vec::with_capacity(components.len());
        for component in &components {
            match detect(component, level, degree, k, search)? {
                DetectionOutcome::Obstruction(tree) => {
                    search.emit(g, &tree);
                    return Ok(DetectionOutcome::Obstruction(tree));
                }
                DetectionOutcome::TooDeep => return Ok(DetectionOutcome::TooDeep),
                DetectionOutcome::Backdoor(sub) => roots.push(sub.into_root()),
            }
        }
        let root = SrbNode::split(g, roots);
        return Ok(DetectionOutcome::Backdoor(SrbTree::new(root, degree as usize - 1)));
    }

    // Connected: find a witness one level down, then branch its destroy
    // neighborhood exhaustively.
    let first = match detect(g, level - 1, degree, k, search)? {
        DetectionOutcome::Backdoor(tree) => return Ok(DetectionOutcome::Backdoor(tree)),
        DetectionOutcome::TooDeep => return Ok(DetectionOutcome::TooDeep),
        DetectionOutcome::Obstruction(tree) => tree,
    };
    let branch_vars: Vec<Var> = first.destroy().iter().copied().collect();
    let graph = g.incidence_graph();
    let first_vertices = first.vertices();

    let mut branches: Vec<SrbNode> = Vec::new();
    let mut polarities = vec![Polarity::Pos; branch_vars.len()];
    loop {
        search.tick()?;
        let tau = Assignment::from_pairs(
            branch_vars.iter().copied().zip(polarities.iter().copied()),
        );
        let residual = g.apply(&tau);
        match detect(&residual, level - 1, degree, k, search)? {
            // Depth is closed under assignments: a too-deep residual makes
            // the whole formula too deep.
            DetectionOutcome::TooDeep => return Ok(DetectionOutcome::TooDeep),
            DetectionOutcome::Obstruction(second) => {
                // The tree lifts unchanged from the residual to g; check it.
                let lifted_violations =
                    validate_obstruction(&second, g, Params { level: level - 1, degree, k });
                if !lifted_violations.is_empty() {
                    return Err(DetectError::Internal(format!(
                        "lifted obstruction tree fails validation in the host: {}",
                        lifted_violations[0]
                    )));
                }
                debug_assert!(
                    first.destroy().intersection(second.destroy()).next().is_none(),
                    "destroy neighborhoods must be disjoint by construction"
                );
                let path = shortest_path(&graph, &first_vertices, &second.vertices())
                    .ok_or_else(|| {
                        DetectError::Internal("no path between trees of a connected graph".into())
                    })?;
                if (path.len() - 1) as u64 > path_length_bound(k) {
                    // Components of shallow formulas have small diameter.
                    return Ok(DetectionOutcome::TooDeep);
                }
                let joined = ObstructionTree::join(first, path, second, g);
                search.emit(g, &joined);
                return Ok(DetectionOutcome::Obstruction(joined));
            }
            DetectionOutcome::Backdoor(sub) => branches.push(sub.into_root()),
        }
        if !advance(&mut polarities) {
            break;
        }
    }

    // Every residual has a backdoor: branch the destroy neighborhood as a
    // complete binary tree and plug each residual's backdoor into its leaf.
    let mut queue = branches.into_iter();
    let root = build_branch_chain(g.clone(), &branch_vars, &mut queue);
    debug_assert!(queue.next().is_none(), "one backdoor per assignment");
    Ok(DetectionOutcome::Backdoor(SrbTree::new(root, degree as usize - 1)))
}

/// Advances a polarity odometer in lexicographic order (positive first);
/// false when the sequence is exhausted.
fn advance(polarities: &mut [Polarity]) -> bool {
    for slot in polarities.iter_mut().rev() {
        match slot {
            Polarity::Pos => {
                *slot = Polarity::Neg;
                return true;
            }
            Polarity::Neg => *slot = Polarity::Pos,
        }
    }
    false
}

/// Builds the complete branching tree over `vars`, consuming one plugged
/// subtree per assignment in enumeration order.
fn build_branch_chain(
    label: Formula,
    vars: &[Var],
    plugged: &mut impl Iterator<Item = SrbNode>,
) -> SrbNode {
    match vars.split_first() {
        None => {
            let node = plugged.next().expect("one backdoor per assignment");
            debug_assert_eq!(
                node.clause_ids(),
                label.clause_ids().collect::<Vec<_>>().as_slice()
            );
            node
        }
        Some((&var, rest)) => {
            let pos = build_branch_chain(label.assign(var, Polarity::Pos), rest, plugged);
            let neg = build_branch_chain(label.assign(var, Polarity::Neg), rest, plugged);
            SrbNode::branch(&label, var, pos, neg)
        }
    }
}

/// Searches a strong recursive backdoor of the formula to the empty class
/// with depth at most `3^k * path_length_bound(k) * k^2`. `None` certifies
/// that the recursive backdoor depth exceeds `k`.
pub fn find_srb(
    formula: &Formula,
    k: u32,
    search: &mut SrbSearch<'_>,
) -> Result<Option<SrbTree>, DetectError> {
    // Depth-k formulas have clause width at most k.
    if formula.max_clause_width() > k as usize {
        return Ok(None);
    }
    match descend(formula, k, search)? {
        Some(root) => Ok(Some(SrbTree::new(root, 0))),
        None => Ok(None),
    }
}

enum DescendStop {
    TooDeep,
    Error(DetectError),
}

/// Lowers the maximum clause width stage by stage, splicing the
/// lower-stage trees into the leaves of the current one.
fn descend(
    g: &Formula,
    k: u32,
    search: &mut SrbSearch<'_>,
) -> Result<Option<SrbNode>, DetectError> {
    search.tick()?;
    if g.is_empty_class() {
        return Ok(Some(SrbNode::leaf(g)));
    }
    let degree = g.max_clause_width() as u32;
    debug_assert!(degree <= k, "width guard holds for every residual");
    let outcome = detect(g, k + 1, degree, k, search)?;
    let stage = match outcome {
        // A level-(k+1) obstruction certifies depth greater than k.
        DetectionOutcome::Obstruction(_) | DetectionOutcome::TooDeep => return Ok(None),
        DetectionOutcome::Backdoor(tree) => tree,
    };
    let result = stage.into_root().map_leaves(g, &mut |leaf_label| {
        match descend(leaf_label, k, search) {
            Ok(Some(node)) => Ok(node),
            Ok(None) => Err(DescendStop::TooDeep),
            Err(e) => Err(DescendStop::Error(e)),
        }
    });
    match result {
        Ok(root) => Ok(Some(root)),
        Err(DescendStop::TooDeep) => Ok(None),
        Err(DescendStop::Error(e)) => Err(e),
    }
}

/// Decides satisfiability whenever the formula's recursive backdoor depth
/// to the empty class is within `k`; otherwise may report
/// [`Verdict::TooDeep`].
pub fn permissive_solve(
    formula: &Formula,
    k: u32,
    search: &mut SrbSearch<'_>,
) -> Result<Verdict, DetectError> {
    match find_srb(formula, k, search)? {
        None => Ok(Verdict::TooDeep),
        Some(tree) => {
            let sat = tree
                .solve_sat_empty_class(formula)
                .map_err(|e| DetectError::Internal(format!("produced tree is invalid: {e}")))?;
            Ok(if sat { Verdict::Sat } else { Verdict::Unsat })
        }
    }
}
