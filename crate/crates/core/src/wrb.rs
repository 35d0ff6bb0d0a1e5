//! Depth-bounded branching search for weak recursive backdoors: recursively
//! assign one literal at a time, solving the connected components that
//! arise independently under the same remaining budget.

use std::collections::HashMap;

use crate::cnf::{Assignment, Formula, Polarity, Var};
use crate::guard::{GuardError, ResourceGuard};

/// Search options.
#[derive(Debug, Clone, Copy)]
pub struct WrbOptions {
    /// Memoize failed (residual, budget) pairs. Disable to audit the raw
    /// branching order.
    pub memoize: bool,
}

impl Default for WrbOptions {
    fn default() -> Self {
        WrbOptions { memoize: true }
    }
}

/// The search result. `NotWithinDepth` means the formula is unsatisfiable
/// or its weak recursive backdoor depth exceeds the budget; the naive
/// search cannot tell these apart outside the empty class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WrbOutcome {
    Satisfiable { witness: Assignment },
    NotWithinDepth,
}

struct Search<'a> {
    guard: &'a mut ResourceGuard,
    // Residual key -> largest budget known to fail.
    failed: HashMap<String, u32>,
    memoize: bool,
}

impl Search<'_> {
    fn solve(&mut self, phi: &Formula, budget: u32) -> Result<Option<Assignment>, GuardError> {
        if phi.is_empty_class() {
            return Ok(if phi.clause_count() == 0 {
                Some(Assignment::empty())
            } else {
                None
            });
        }
        self.guard.tick()?;
        let key = self.memoize.then(|| phi.canonical_key());
        if let Some(key) = &key {
            if self.failed.get(key).is_some_and(|&b| b >= budget) {
                return Ok(None);
            }
        }
        let result = self.branch(phi, budget)?;
        if result.is_none() {
            if let Some(key) = key {
                let slot = self.failed.entry(key).or_insert(budget);
                *slot = (*slot).max(budget);
            }
        }
        Ok(result)
    }

    fn branch(&mut self, phi: &Formula, budget: u32) -> Result<Option<Assignment>, GuardError> {
        let components = phi.components();
        if components.len() > 1 {
            // Component witnesses have disjoint domains and merge freely.
            let mut witness = Assignment::empty();
            for component in &components {
                match self.solve(component, budget)? {
                    Some(part) => {
                        witness = witness
                            .union(&part)
                            .expect("components have disjoint variable sets");
                    }
                    None => return Ok(None),
                }
            }
            return Ok(Some(witness));
        }
        if budget == 0 {
            return Ok(None);
        }
        let vars: Vec<Var> = phi.vars().collect();
        for var in vars {
            for polarity in Polarity::BOTH {
                if let Some(rest) = self.solve(&phi.assign(var, polarity), budget - 1)? {
                    let mut witness = Assignment::singleton(var, polarity);
                    witness = witness
                        .union(&rest)
                        .expect("assigned variable vanishes from the residual");
                    return Ok(Some(witness));
                }
            }
        }
        Ok(None)
    }
}

/// Searches for an assignment that empties the formula within `k` nested
/// branchings per component. The witness is the sequentially first success
/// (variables ascending, positive polarity first) and satisfies the formula
/// under any completion of the untouched variables.
pub fn wrb_solve(
    phi: &Formula,
    k: u32,
    options: WrbOptions,
    guard: &mut ResourceGuard,
) -> Result<WrbOutcome, GuardError> {
    let mut search = Search {
        guard,
        failed: HashMap::new(),
        memoize: options.memoize,
    };
    Ok(match search.solve(phi, k)? {
        Some(witness) => WrbOutcome::Satisfiable { witness },
        None => WrbOutcome::NotWithinDepth,
    })
}
