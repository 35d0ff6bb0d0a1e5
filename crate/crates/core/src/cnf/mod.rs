//! CNF formulas with set semantics, partial assignments, and the signed
//! incidence-graph view.
//!
//! A formula is a finite set of clauses; a clause is a finite set of
//! literals over distinct variables with no complementary pair. Variables
//! exist only through clause membership: `var(phi)` is always the union of
//! the clause variable sets. Clause and variable ids are stable across
//! [`Formula::apply`] and component splits, so subformulas can be referenced
//! by id sets against the original formula.

mod dimacs;
mod graph;

pub use dimacs::{parse_dimacs, serialize_dimacs, DimacsOutcome, ParseOptions};
pub use graph::{shortest_path, IncidenceGraph, Vertex};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// A propositional variable, identified by a positive integer id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct Var(pub u32);

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// A clause id, stable for the lifetime of a formula and its subformulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct ClauseId(pub u32);

impl fmt::Display for ClauseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

/// Literal polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Pos,
    Neg,
}

impl Polarity {
    /// Both polarities, positive first. This is the branching order used
    /// everywhere determinism matters.
    pub const BOTH: [Polarity; 2] = [Polarity::Pos, Polarity::Neg];

    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Pos => Polarity::Neg,
            Polarity::Neg => Polarity::Pos,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Polarity::Pos => 1,
            Polarity::Neg => -1,
        }
    }
}

/// A variable with a polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: Var,
    pub polarity: Polarity,
}

impl Literal {
    pub fn new(var: Var, polarity: Polarity) -> Literal {
        Literal { var, polarity }
    }

    pub fn pos(var: Var) -> Literal {
        Literal::new(var, Polarity::Pos)
    }

    pub fn neg(var: Var) -> Literal {
        Literal::new(var, Polarity::Neg)
    }

    /// DIMACS-style signed integer encoding.
    pub fn to_int(self) -> i64 {
        self.polarity.sign() * i64::from(self.var.0)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_int())
    }
}

/// Errors raised while building or parsing formulas.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CnfError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("clause {clause} is tautological: contains {var} with both polarities")]
    Tautology { clause: ClauseId, var: Var },
    #[error("variable id 0 is not allowed")]
    ZeroVar,
    #[error("assignments overlap on {var}")]
    AssignmentOverlap { var: Var },
}

/// A clause: a set of literals over pairwise distinct variables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Clause {
    lits: BTreeMap<Var, Polarity>,
}

impl Clause {
    pub fn empty() -> Clause {
        Clause::default()
    }

    /// Builds a clause from literals. Duplicate literals collapse;
    /// a complementary pair is a tautology and is rejected (the id is only
    /// used for error reporting).
    pub fn new(id: ClauseId, lits: impl IntoIterator<Item = Literal>) -> Result<Clause, CnfError> {
        let mut map = BTreeMap::new();
        for lit in lits {
            if lit.var.0 == 0 {
                return Err(CnfError::ZeroVar);
            }
            match map.insert(lit.var, lit.polarity) {
                Some(prev) if prev != lit.polarity => {
                    return Err(CnfError::Tautology {
                        clause: id,
                        var: lit.var,
                    });
                }
                _ => {}
            }
        }
        Ok(Clause { lits: map })
    }

    pub fn width(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    pub fn contains_var(&self, var: Var) -> bool {
        self.lits.contains_key(&var)
    }

    pub fn polarity_of(&self, var: Var) -> Option<Polarity> {
        self.lits.get(&var).copied()
    }

    /// Literals in ascending variable order.
    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        self.lits.iter().map(|(&var, &polarity)| Literal { var, polarity })
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.lits.keys().copied()
    }

    /// True if some literal of the clause is made true by `assignment`.
    pub fn satisfied_by(&self, assignment: &Assignment) -> bool {
        self.lits
            .iter()
            .any(|(var, &pol)| assignment.get(*var) == Some(pol))
    }
}

/// A partial truth assignment: a map from variables to polarities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment {
    map: BTreeMap<Var, Polarity>,
}

impl Assignment {
    pub fn empty() -> Assignment {
        Assignment::default()
    }

    pub fn singleton(var: Var, polarity: Polarity) -> Assignment {
        let mut map = BTreeMap::new();
        map.insert(var, polarity);
        Assignment { map }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, Polarity)>) -> Assignment {
        Assignment {
            map: pairs.into_iter().collect(),
        }
    }

    pub fn get(&self, var: Var) -> Option<Polarity> {
        self.map.get(&var).copied()
    }

    pub fn contains(&self, var: Var) -> bool {
        self.map.contains_key(&var)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, Polarity)> + '_ {
        self.map.iter().map(|(&v, &p)| (v, p))
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.map.keys().copied()
    }

    /// Extends the assignment in place; the variable must be unassigned.
    pub fn insert(&mut self, var: Var, polarity: Polarity) -> Result<(), CnfError> {
        match self.map.insert(var, polarity) {
            Some(prev) if prev != polarity => Err(CnfError::AssignmentOverlap { var }),
            _ => Ok(()),
        }
    }

    /// Union of two assignments with disjoint domains.
    pub fn union(&self, other: &Assignment) -> Result<Assignment, CnfError> {
        let mut merged = self.clone();
        for (var, pol) in other.iter() {
            if merged.map.insert(var, pol).is_some() {
                return Err(CnfError::AssignmentOverlap { var });
            }
        }
        Ok(merged)
    }

    /// DIMACS-style signed integers, ascending by variable id.
    pub fn to_ints(&self) -> Vec<i64> {
        self.iter()
            .map(|(var, pol)| Literal::new(var, pol).to_int())
            .collect()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (var, pol)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", Literal::new(var, pol))?;
        }
        write!(f, "}}")
    }
}

/// A CNF formula: a set of clauses keyed by stable ids, with the derived
/// variable set cached.
///
/// Formulas are immutable after construction; every operation returns a new
/// value. Duplicate clauses (same literal set) collapse to the occurrence
/// with the smallest id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Formula {
    clauses: BTreeMap<ClauseId, Clause>,
    vars: BTreeSet<Var>,
}

impl Formula {
    pub fn empty() -> Formula {
        Formula::default()
    }

    /// Builds a formula from id/clause pairs. Duplicate literal sets
    /// collapse to the smallest id.
    pub fn from_clauses(clauses: impl IntoIterator<Item = (ClauseId, Clause)>) -> Formula {
        let mut map: BTreeMap<ClauseId, Clause> = BTreeMap::new();
        let mut seen: BTreeMap<Vec<Literal>, ClauseId> = BTreeMap::new();
        for (id, clause) in clauses {
            let key: Vec<Literal> = clause.literals().collect();
            match seen.get(&key) {
                Some(&prev) if prev <= id => continue,
                Some(&prev) => {
                    map.remove(&prev);
                }
                None => {}
            }
            seen.insert(key, id);
            map.insert(id, clause);
        }
        let vars = map.values().flat_map(|c| c.vars()).collect();
        Formula { clauses: map, vars }
    }

    /// Builds a formula from DIMACS-style integer clauses; ids are assigned
    /// 1.. in order.
    pub fn from_ints(clauses: &[&[i64]]) -> Result<Formula, CnfError> {
        let mut out = Vec::with_capacity(clauses.len());
        for (i, ints) in clauses.iter().enumerate() {
            let id = ClauseId(u32::try_from(i + 1).expect("clause count fits u32"));
            let lits = ints.iter().map(|&n| {
                let var = Var(u32::try_from(n.unsigned_abs()).expect("var id fits u32"));
                let polarity = if n >= 0 { Polarity::Pos } else { Polarity::Neg };
                Literal::new(var, polarity)
            });
            out.push((id, Clause::new(id, lits)?));
        }
        Ok(Formula::from_clauses(out))
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn var_count(&self) -> usize {
        self.vars.len()
    }

    /// Number of incidence-graph vertices: variables plus clauses.
    pub fn vertex_count(&self) -> usize {
        self.vars.len() + self.clauses.len()
    }

    /// Formula length: the sum of clause widths (the edge count of the
    /// incidence graph).
    pub fn length(&self) -> usize {
        self.clauses.values().map(Clause::width).sum()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.vars.iter().copied()
    }

    pub fn var_set(&self) -> &BTreeSet<Var> {
        &self.vars
    }

    pub fn contains_var(&self, var: Var) -> bool {
        self.vars.contains(&var)
    }

    /// Clauses in ascending id order.
    pub fn clauses(&self) -> impl Iterator<Item = (ClauseId, &Clause)> + '_ {
        self.clauses.iter().map(|(&id, c)| (id, c))
    }

    pub fn clause(&self, id: ClauseId) -> Option<&Clause> {
        self.clauses.get(&id)
    }

    pub fn clause_ids(&self) -> impl Iterator<Item = ClauseId> + '_ {
        self.clauses.keys().copied()
    }

    /// Smallest d such that the formula lies in the class of formulas with
    /// clause width at most d. Zero when there are no clauses or only empty
    /// clauses.
    pub fn max_clause_width(&self) -> usize {
        self.clauses.values().map(Clause::width).max().unwrap_or(0)
    }

    /// True when every clause is empty (or there is no clause): the target
    /// class of all detection in this crate.
    pub fn is_empty_class(&self) -> bool {
        self.clauses.values().all(Clause::is_empty)
    }

    pub fn has_empty_clause(&self) -> bool {
        self.clauses.values().any(Clause::is_empty)
    }

    /// Applies a partial assignment: clauses with a satisfied literal are
    /// removed, falsified literals are dropped from the remaining clauses.
    /// Assignments to absent variables are no-ops. Ids are preserved;
    /// clauses whose literal sets become equal collapse to the smallest id.
    pub fn apply(&self, assignment: &Assignment) -> Formula {
        let retained = self.clauses.iter().filter_map(|(&id, clause)| {
            if clause.satisfied_by(assignment) {
                return None;
            }
            let lits: BTreeMap<Var, Polarity> = clause
                .lits
                .iter()
                .filter(|(var, _)| !assignment.contains(**var))
                .map(|(&v, &p)| (v, p))
                .collect();
            Some((id, Clause { lits }))
        });
        Formula::from_clauses(retained)
    }

    /// Applies a single literal.
    pub fn assign(&self, var: Var, polarity: Polarity) -> Formula {
        self.apply(&Assignment::singleton(var, polarity))
    }

    /// The subformula induced by a set of clause ids.
    pub fn restrict_to(&self, ids: &BTreeSet<ClauseId>) -> Formula {
        Formula::from_clauses(
            ids.iter()
                .filter_map(|id| self.clauses.get(id).map(|c| (*id, c.clone()))),
        )
    }

    /// Connected components of the incidence graph, as subformulas.
    /// Components are ordered by their smallest clause id (every component
    /// contains at least one clause, because variables exist only through
    /// clauses).
    pub fn components(&self) -> Vec<Formula> {
        let mut var_to_clauses: BTreeMap<Var, Vec<ClauseId>> = BTreeMap::new();
        for (&id, clause) in &self.clauses {
            for var in clause.vars() {
                var_to_clauses.entry(var).or_default().push(id);
            }
        }
        let mut assigned: BTreeMap<ClauseId, usize> = BTreeMap::new();
        let mut groups: Vec<BTreeSet<ClauseId>> = Vec::new();
        for &start in self.clauses.keys() {
            if assigned.contains_key(&start) {
                continue;
            }
            let index = groups.len();
            let mut group = BTreeSet::new();
            let mut queue = vec![start];
            assigned.insert(start, index);
            while let Some(id) = queue.pop() {
                group.insert(id);
                let clause = &self.clauses[&id];
                for var in clause.vars() {
                    for &next in &var_to_clauses[&var] {
                        if assigned.insert(next, index).is_none() {
                            queue.push(next);
                        }
                    }
                }
            }
            groups.push(group);
        }
        groups.iter().map(|ids| self.restrict_to(ids)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Maximum over components of the component diameter in the incidence
    /// graph (edge-count metric); zero for isolated vertices and the empty
    /// formula.
    pub fn component_diameter(&self) -> usize {
        self.incidence_graph().component_diameter()
    }

    pub fn incidence_graph(&self) -> IncidenceGraph {
        IncidenceGraph::new(self)
    }

    /// A canonical, deterministic encoding of the formula: sorted clause ids
    /// with their current literals. Used as a memoization key; two formulas
    /// have equal keys iff they are equal.
    pub fn canonical_key(&self) -> String {
        let mut out = String::new();
        for (id, clause) in &self.clauses {
            out.push_str(&id.0.to_string());
            out.push(':');
            for lit in clause.literals() {
                out.push_str(&lit.to_int().to_string());
                out.push(' ');
            }
            out.push('|');
        }
        out
    }

    /// Structural equality ignoring clause ids: equal multisets of literal
    /// sets. Set semantics make this a set comparison.
    pub fn same_clauses(&self, other: &Formula) -> bool {
        let key = |f: &Formula| -> BTreeSet<Vec<Literal>> {
            f.clauses.values().map(|c| c.literals().collect()).collect()
        };
        key(self) == key(other)
    }

    /// True if the full assignment satisfies every clause.
    pub fn satisfied_by(&self, assignment: &Assignment) -> bool {
        self.clauses.values().all(|c| c.satisfied_by(assignment))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (id, clause)) in self.clauses().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:(", id)?;
            for (j, lit) in clause.literals().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", lit)?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}
