//! Brute-force ground truth for small instances: truth-table SAT and model
//! counting, and the exact strong/weak recursive backdoor depth measures by
//! direct evaluation of their defining recursions.
//!
//! Everything here is deliberately independent of the detection machinery;
//! these functions are the reference the rest of the crate is tested
//! against. The depth recursions evaluate their cases in definition order —
//! class membership first, then connectedness — with variables ascending
//! and the positive polarity first, memoized on the canonically serialized
//! residual (not on graph isomorphism).

use std::collections::HashMap;

use thiserror::Error;

use crate::cnf::{Formula, Polarity, Var};

/// Guards keeping the oracle at desk scale.
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    /// Maximum variable count accepted by any oracle entry point.
    pub max_vars: usize,
    /// Work-unit budget for the depth recursions.
    pub max_nodes: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vars: 25,
            max_nodes: 200_000_000,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("formula has {found} variables, above the oracle limit {limit}")]
    TooManyVars { found: usize, limit: usize },
    #[error("oracle work budget of {limit} nodes exhausted")]
    Budget { limit: u64 },
}

/// An exact depth value, or the reason none was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DepthResult {
    Finite(u32),
    /// Only weak recursive backdoor depth can be infinite, and exactly for
    /// unsatisfiable formulas: every branch bottoms out in an unsatisfiable
    /// empty-class leaf.
    Infinite,
    /// The depth exceeds the cap; a proof, not a timeout.
    ExceedsCap(u32),
}

impl DepthResult {
    pub fn finite(self) -> Option<u32> {
        match self {
            DepthResult::Finite(v) => Some(v),
            _ => None,
        }
    }
}

fn check_vars(formula: &Formula, limits: &OracleLimits) -> Result<(), OracleError> {
    if formula.var_count() > limits.max_vars {
        return Err(OracleError::TooManyVars {
            found: formula.var_count(),
            limit: limits.max_vars,
        });
    }
    Ok(())
}

/// Compiles each clause to (variable index, expected bit) pairs so the
/// enumeration loop is a bit test per literal.
fn compile(formula: &Formula) -> (usize, Vec<Vec<(usize, bool)>>) {
    let vars: Vec<Var> = formula.vars().collect();
    let index: HashMap<Var, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let clauses = formula
        .clauses()
        .map(|(_, clause)| {
            clause
                .literals()
                .map(|lit| (index[&lit.var], lit.polarity == Polarity::Pos))
                .collect()
        })
        .collect();
    (vars.len(), clauses)
}

/// Exhaustive satisfiability over all assignments of the formula's
/// variables.
pub fn truth_table_sat(formula: &Formula, limits: &OracleLimits) -> Result<bool, OracleError> {
    check_vars(formula, limits)?;
    let (n, clauses) = compile(formula);
    Ok((0u64..1 << n).any(|mask| {
        clauses
            .iter()
            .all(|clause| clause.iter().any(|&(i, pos)| ((mask >> i) & 1 == 1) == pos))
    }))
}

/// Exhaustive model count over all assignments of the formula's variables.
/// The empty formula has exactly one (empty) model.
pub fn truth_table_count(formula: &Formula, limits: &OracleLimits) -> Result<u64, OracleError> {
    check_vars(formula, limits)?;
    let (n, clauses) = compile(formula);
    Ok((0u64..1 << n)
        .filter(|mask| {
            clauses
                .iter()
                .all(|clause| clause.iter().any(|&(i, pos)| ((mask >> i) & 1 == 1) == pos))
        })
        .count() as u64)
}

#[derive(Clone, Copy)]
enum MemoEntry {
    Exact(u32),
    /// The value is known to exceed this budget.
    ExceedsBudget(u32),
}

struct DepthSearch<'a> {
    memo: HashMap<String, MemoEntry>,
    limits: &'a OracleLimits,
    nodes: u64,
}

impl<'a> DepthSearch<'a> {
    fn new(limits: &'a OracleLimits) -> DepthSearch<'a> {
        DepthSearch {
            memo: HashMap::new(),
            limits,
            nodes: 0,
        }
    }

    fn tick(&mut self) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes {
            return Err(OracleError::Budget {
                limit: self.limits.max_nodes,
            });
        }
        Ok(())
    }

    fn lookup(&self, key: &str, budget: u32) -> Option<Option<u32>> {
        match self.memo.get(key) {
            Some(MemoEntry::Exact(v)) => Some((*v <= budget).then_some(*v)),
            Some(MemoEntry::ExceedsBudget(b)) if *b >= budget => Some(None),
            _ => None,
        }
    }

    fn store(&mut self, key: String, budget: u32, result: Option<u32>) {
        match result {
            Some(v) => {
                self.memo.insert(key, MemoEntry::Exact(v));
            }
            None => match self.memo.get(&key) {
                Some(MemoEntry::ExceedsBudget(b)) if *b >= budget => {}
                Some(MemoEntry::Exact(_)) => {}
                _ => {
                    self.memo.insert(key, MemoEntry::ExceedsBudget(budget));
                }
            },
        }
    }

    /// Exact strong depth when it is at most `budget`, `None` otherwise.
    ///
    /// Pruned branches only ever hide values larger than every returned
    /// minimum, so a `Some` is the true depth.
    fn strong_bounded(&mut self, phi: &Formula, budget: u32) -> Result<Option<u32>, OracleError> {
        if phi.is_empty_class() {
            return Ok(Some(0));
        }
        self.tick()?;
        let key = phi.canonical_key();
        if let Some(hit) = self.lookup(&key, budget) {
            return Ok(hit);
        }
        let components = phi.components();
        let result = if components.len() > 1 {
            let mut worst = 0u32;
            let mut within = true;
            for component in &components {
                match self.strong_bounded(component, budget)? {
                    Some(v) => worst = worst.max(v),
                    None => {
                        within = false;
                        break;
                    }
                }
            }
            within.then_some(worst)
        } else if budget == 0 {
            None
        } else {
            let mut best: Option<u32> = None;
            let vars: Vec<Var> = phi.vars().collect();
            for var in vars {
                let mut worst: Option<u32> = Some(0);
                for polarity in Polarity::BOTH {
                    match self.strong_bounded(&phi.assign(var, polarity), budget - 1)? {
                        Some(v) => worst = worst.map(|w| w.max(v)),
                        None => {
                            worst = None;
                            break;
                        }
                    }
                }
                if let Some(w) = worst {
                    best = Some(best.map_or(w, |b| b.min(w)));
                }
            }
            best.map(|b| b + 1)
        };
        self.store(key, budget, result);
        Ok(result)
    }

    /// Weak depth at most `budget`: `Ok(Some(Finite))`, infinite, or
    /// above-budget. Unsatisfiable formulas are exactly the infinite ones,
    /// so a budget-exhausted residual is classified by satisfiability.
    fn weak_bounded(&mut self, phi: &Formula, budget: u32) -> Result<WeakValue, OracleError> {
        if phi.is_empty_class() {
            return Ok(if phi.clause_count() == 0 {
                WeakValue::Finite(0)
            } else {
                WeakValue::Infinite
            });
        }
        self.tick()?;
        let key = phi.canonical_key();
        match self.memo.get(&key) {
            Some(MemoEntry::Exact(v)) if *v == u32::MAX => return Ok(WeakValue::Infinite),
            Some(MemoEntry::Exact(v)) => {
                return Ok(if *v <= budget {
                    WeakValue::Finite(*v)
                } else {
                    WeakValue::Exceeds
                });
            }
            Some(MemoEntry::ExceedsBudget(b)) if *b >= budget => return Ok(WeakValue::Exceeds),
            _ => {}
        }
        let components = phi.components();
        let result = if components.len() > 1 {
            let mut worst = WeakValue::Finite(0);
            for component in &components {
                let value = self.weak_bounded(component, budget)?;
                worst = worst.max_combine(value);
                if worst == WeakValue::Infinite {
                    break;
                }
            }
            worst
        } else if budget == 0 {
            if truth_table_sat(phi, self.limits)? {
                WeakValue::Exceeds
            } else {
                WeakValue::Infinite
            }
        } else {
            let mut best = WeakValue::Infinite;
            let vars: Vec<Var> = phi.vars().collect();
            for var in vars {
                for polarity in Polarity::BOTH {
                    let value = self.weak_bounded(&phi.assign(var, polarity), budget - 1)?;
                    best = best.min_combine(value);
                }
            }
            best.bump()
        };
        match result {
            WeakValue::Finite(v) => {
                self.memo.insert(key, MemoEntry::Exact(v));
            }
            WeakValue::Infinite => {
                self.memo.insert(key, MemoEntry::Exact(u32::MAX));
            }
            WeakValue::Exceeds => self.store(key, budget, None),
        }
        Ok(result)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WeakValue {
    Finite(u32),
    Infinite,
    /// Above the current budget; satisfiable, so finite, but unknown.
    Exceeds,
}

impl WeakValue {
    /// Combination for the max over components: infinity dominates, and any
    /// above-budget component pushes the whole formula above budget.
    fn max_combine(self, other: WeakValue) -> WeakValue {
        use WeakValue::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (Exceeds, _) | (_, Exceeds) => Exceeds,
            (Finite(a), Finite(b)) => Finite(a.max(b)),
        }
    }

    /// Combination for the min over literals: any finite branch wins, an
    /// above-budget branch beats only infinity.
    fn min_combine(self, other: WeakValue) -> WeakValue {
        use WeakValue::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.min(b)),
            (Finite(a), _) | (_, Finite(a)) => Finite(a),
            (Exceeds, _) | (_, Exceeds) => Exceeds,
            (Infinite, Infinite) => Infinite,
        }
    }

    /// Accounts for the branching step.
    fn bump(self) -> WeakValue {
        match self {
            WeakValue::Finite(v) => WeakValue::Finite(v + 1),
            other => other,
        }
    }
}

/// Exact strong recursive backdoor depth to the empty class, up to `cap`.
///
/// Evaluates the defining recursion by iterative deepening, so the returned
/// finite value is the true minimum. `ExceedsCap` proves the depth is
/// greater than `cap`.
pub fn srbd_exact(
    formula: &Formula,
    cap: u32,
    limits: &OracleLimits,
) -> Result<DepthResult, OracleError> {
    check_vars(formula, limits)?;
    let mut search = DepthSearch::new(limits);
    for budget in 0..=cap {
        if let Some(v) = search.strong_bounded(formula, budget)? {
            return Ok(DepthResult::Finite(v));
        }
    }
    Ok(DepthResult::ExceedsCap(cap))
}

/// Exact weak recursive backdoor depth to the empty class, up to `cap`.
/// `Infinite` is returned exactly for unsatisfiable formulas, at any cap.
pub fn wrbd_exact(
    formula: &Formula,
    cap: u32,
    limits: &OracleLimits,
) -> Result<DepthResult, OracleError> {
    check_vars(formula, limits)?;
    let mut search = DepthSearch::new(limits);
    for budget in 0..=cap {
        match search.weak_bounded(formula, budget)? {
            WeakValue::Finite(v) => return Ok(DepthResult::Finite(v)),
            WeakValue::Infinite => return Ok(DepthResult::Infinite),
            WeakValue::Exceeds => {}
        }
    }
    Ok(DepthResult::ExceedsCap(cap))
}
