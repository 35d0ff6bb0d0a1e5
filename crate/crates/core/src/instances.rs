//! Deterministic instance generators: the grid witness family, the
//! set-cover reduction, seeded random CNF, and exhaustive enumeration of
//! small formulas.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cnf::{Clause, ClauseId, Formula, Literal, Polarity, Var};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("grid size must be at least 1")]
    GridSize,
    #[error("cannot draw clauses of width up to {max_width} from {n} variables")]
    RandomWidth { max_width: u32, n: u32 },
    #[error("set {index} contains {element}, which is not in the universe")]
    SetCoverElement { index: usize, element: u32 },
    #[error("enumeration of {estimated} formulas exceeds the limit {limit}")]
    EnumerationTooLarge { estimated: u128, limit: u128 },
}

/// Vertex roles of a generated grid formula, for test introspection.
///
/// The grid of size `k` has one clause per cell (row-major ids `1..=k*k`),
/// a private variable on each distinct corner cell, and every grid edge
/// replaced by a path of length 6: three fresh variables with two fresh
/// clauses between them, each path clause holding its two neighbor
/// variables positively. The special variable is connected to the path
/// clauses with alternating polarity, positive first along each path, so
/// assigning it either way cuts every path.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridRoles {
    pub size: u32,
    /// Absent for size 1, where there are no paths to host it.
    pub special_var: Option<Var>,
    pub corner_vars: Vec<Var>,
    pub path_vars: Vec<Var>,
    pub grid_clauses: Vec<GridCell>,
    pub path_clauses: Vec<ClauseId>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GridCell {
    pub row: u32,
    pub col: u32,
    pub clause: ClauseId,
}

/// Builds the size-`k` grid-family formula.
///
/// Numbering: the special variable is 1; corner variables follow in corner
/// order (1,1), (1,k), (k,1), (k,k); path variables follow in path order
/// (row-major cells, the rightward edge before the downward one). Grid
/// clause ids are row-major `1..=k*k`; each path then contributes two
/// clause ids in construction order.
pub fn grid_family(k: u32) -> Result<(Formula, GridRoles), InstanceError> {
    if k == 0 {
        return Err(InstanceError::GridSize);
    }
    let cell = |row: u32, col: u32| ClauseId((row - 1) * k + col);
    let special = Var(1);
    let mut next_var = 2u32;

    // One private variable per distinct corner cell; the four corner
    // coordinates coincide for k = 1.
    let mut corner_cells = BTreeSet::new();
    for (row, col) in [(1, 1), (1, k), (k, 1), (k, k)] {
        corner_cells.insert((row, col));
    }
    let mut corner_vars = Vec::new();
    let mut grid_lits: Vec<Vec<Literal>> = vec![Vec::new(); (k * k) as usize];
    for &(row, col) in &corner_cells {
        let var = Var(next_var);
        next_var += 1;
        corner_vars.push(var);
        grid_lits[cell(row, col).0 as usize - 1].push(Literal::pos(var));
    }

    // Replace every grid edge by a path of length 6: three fresh variables
    // and two fresh clauses, alternating from the edge's first cell.
    let mut edges = Vec::new();
    for row in 1..=k {
        for col in 1..=k {
            if col < k {
                edges.push((cell(row, col), cell(row, col + 1)));
            }
            if row < k {
                edges.push((cell(row, col), cell(row + 1, col)));
            }
        }
    }
    let mut path_vars = Vec::new();
    let mut path_clauses = Vec::new();
    let mut extra_clauses: Vec<(ClauseId, Clause)> = Vec::new();
    let mut next_clause = k * k + 1;
    for &(from, to) in &edges {
        let fresh: [Var; 3] = std::array::from_fn(|i| Var(next_var + i as u32));
        next_var += 3;
        path_vars.extend_from_slice(&fresh);
        grid_lits[from.0 as usize - 1].push(Literal::pos(fresh[0]));
        grid_lits[to.0 as usize - 1].push(Literal::pos(fresh[2]));
        for (i, polarity) in [Polarity::Pos, Polarity::Neg].into_iter().enumerate() {
            let id = ClauseId(next_clause);
            next_clause += 1;
            path_clauses.push(id);
            let lits = [
                Literal::pos(fresh[i]),
                Literal::pos(fresh[i + 1]),
                Literal::new(special, polarity),
            ];
            extra_clauses.push((id, Clause::new(id, lits).expect("path clause is consistent")));
        }
    }

    let mut clauses = Vec::new();
    let mut grid_cells = Vec::new();
    for row in 1..=k {
        for col in 1..=k {
            let id = cell(row, col);
            grid_cells.push(GridCell { row, col, clause: id });
            let lits = grid_lits[id.0 as usize - 1].clone();
            clauses.push((id, Clause::new(id, lits).expect("grid clause is consistent")));
        }
    }
    clauses.extend(extra_clauses);
    let formula = Formula::from_clauses(clauses);
    let roles = GridRoles {
        size: k,
        special_var: formula.contains_var(special).then_some(special),
        corner_vars,
        path_vars,
        grid_clauses: grid_cells,
        path_clauses,
    };
    Ok((formula, roles))
}

/// A set-cover instance: can `k` of the given sets cover the universe?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub universe: BTreeSet<u32>,
    pub sets: Vec<BTreeSet<u32>>,
    pub k: u32,
}

impl SetCoverInstance {
    pub fn new(
        universe: BTreeSet<u32>,
        sets: Vec<BTreeSet<u32>>,
        k: u32,
    ) -> Result<SetCoverInstance, InstanceError> {
        for (index, set) in sets.iter().enumerate() {
            if let Some(&element) = set.difference(&universe).next() {
                return Err(InstanceError::SetCoverElement { index, element });
            }
        }
        Ok(SetCoverInstance { universe, sets, k })
    }

    /// Brute-force decision by enumerating all choices of at most `k` sets.
    pub fn is_yes_instance(&self) -> bool {
        fn covers(
            sets: &[BTreeSet<u32>],
            chosen: &mut Vec<usize>,
            start: usize,
            remaining: u32,
            universe: &BTreeSet<u32>,
        ) -> bool {
            let union: BTreeSet<u32> = chosen
                .iter()
                .flat_map(|&i| sets[i].iter().copied())
                .collect();
            if union == *universe {
                return true;
            }
            if remaining == 0 {
                return false;
            }
            for i in start..sets.len() {
                chosen.push(i);
                if covers(sets, chosen, i + 1, remaining - 1, universe) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        covers(&self.sets, &mut Vec::new(), 0, self.k, &self.universe)
    }
}

/// Variable and clause roles of a reduction formula.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SetCoverRoles {
    pub blocker_vars: Vec<Var>,
    pub set_vars: Vec<Var>,
    pub blocker_clauses: Vec<ClauseId>,
    pub element_clauses: Vec<ClauseId>,
}

/// Reduces a set-cover instance to weak-recursive-backdoor detection.
///
/// The formula has `k + 2` blocker variables, each forced positively by its
/// own unit clause, and one set variable per set. Every universe element
/// contributes a clause holding all blockers negatively plus, positively,
/// the variables of the sets containing it. The returned budget is `k + 1`:
/// the instance is a yes-instance iff the formula's weak recursive backdoor
/// depth is within that budget.
pub fn set_cover_reduction(instance: &SetCoverInstance) -> (Formula, u32, SetCoverRoles) {
    let blockers = instance.k + 2;
    let blocker_vars: Vec<Var> = (1..=blockers).map(Var).collect();
    let set_vars: Vec<Var> = (0..instance.sets.len())
        .map(|i| Var(blockers + 1 + i as u32))
        .collect();

    let mut clauses = Vec::new();
    let mut blocker_clauses = Vec::new();
    for (i, &var) in blocker_vars.iter().enumerate() {
        let id = ClauseId(i as u32 + 1);
        blocker_clauses.push(id);
        clauses.push((id, Clause::new(id, [Literal::pos(var)]).expect("unit clause")));
    }
    // Elements contained in exactly the same sets produce the same clause;
    // set semantics keep one, so the roles list only surviving ids.
    let mut element_clauses = Vec::new();
    let mut seen: BTreeSet<Vec<Literal>> = BTreeSet::new();
    for (offset, &element) in instance.universe.iter().enumerate() {
        let id = ClauseId(blockers + 1 + offset as u32);
        let mut lits: Vec<Literal> = blocker_vars.iter().map(|&b| Literal::neg(b)).collect();
        for (i, set) in instance.sets.iter().enumerate() {
            if set.contains(&element) {
                lits.push(Literal::pos(set_vars[i]));
            }
        }
        lits.sort();
        if seen.insert(lits.clone()) {
            element_clauses.push(id);
            clauses.push((id, Clause::new(id, lits).expect("element clause is consistent")));
        }
    }
    let formula = Formula::from_clauses(clauses);
    let roles = SetCoverRoles {
        blocker_vars,
        set_vars,
        blocker_clauses,
        element_clauses,
    };
    (formula, instance.k + 1, roles)
}

/// Generation parameters of a random formula, echoed into its sidecar.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct RandomRoles {
    pub vars: u32,
    pub draws: u32,
    pub max_width: u32,
    pub seed: u64,
}

/// Draws `m` clauses with widths uniform in `1..=max_width`, variables
/// sampled without replacement per clause and uniform polarities. Distinct
/// variables per clause rule out tautologies by construction; duplicate
/// draws collapse under set semantics, so the formula may have fewer than
/// `m` clauses. Ids are contiguous in draw order. Deterministic in `seed`.
pub fn random_formula(n: u32, m: u32, max_width: u32, seed: u64) -> Result<Formula, InstanceError> {
    if m > 0 && (max_width == 0 || max_width > n) {
        return Err(InstanceError::RandomWidth { max_width, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawn: Vec<Vec<Literal>> = Vec::new();
    let mut seen: BTreeSet<Vec<Literal>> = BTreeSet::new();
    let mut pool: Vec<u32> = (1..=n).collect();
    for _ in 0..m {
        let width = rng.gen_range(1..=max_width) as usize;
        // Partial Fisher-Yates over the id pool.
        for i in 0..width {
            let j = rng.gen_range(i..pool.len());
            pool.swap(i, j);
        }
        let mut lits: Vec<Literal> = pool[..width]
            .iter()
            .map(|&id| {
                let polarity = if rng.gen_bool(0.5) { Polarity::Pos } else { Polarity::Neg };
                Literal::new(Var(id), polarity)
            })
            .collect();
        lits.sort();
        if seen.insert(lits.clone()) {
            drawn.push(lits);
        }
    }
    let clauses = drawn.into_iter().enumerate().map(|(i, lits)| {
        let id = ClauseId(i as u32 + 1);
        (id, Clause::new(id, lits).expect("distinct variables per clause"))
    });
    Ok(Formula::from_clauses(clauses))
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut out = 1u128;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// Advances a 0-based ascending index combination over `n` items to its
/// lexicographic successor; false when exhausted.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - (k - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exhaustive, duplicate-free enumeration of all formulas over variables
/// `1..=max_vars` with at most `max_clauses` clauses of width at most
/// `max_width`.
///
/// Clause ids are assigned `1..` in canonical clause order (width, then
/// variables, then polarities with positive first). Formulas stream in
/// ascending clause count, combinations lexicographic. Refuses bounds that
/// would enumerate more than `limit` formulas.
pub fn enumerate_small(
    max_vars: u32,
    max_clauses: u32,
    max_width: u32,
    limit: u128,
) -> Result<SmallFormulas, InstanceError> {
    let clauses = all_clauses(max_vars, max_width);
    let estimated: u128 = (0..=max_clauses as u128)
        .map(|m| binomial(clauses.len() as u128, m))
        .sum();
    if estimated > limit {
        return Err(InstanceError::EnumerationTooLarge { estimated, limit });
    }
    Ok(SmallFormulas {
        clauses,
        max_clauses: max_clauses as usize,
        size: 0,
        combination: Vec::new(),
        done: false,
    })
}

/// All candidate clauses in canonical order: width ascending, variable
/// combinations lexicographic, polarity patterns with positive first.
fn all_clauses(max_vars: u32, max_width: u32) -> Vec<Vec<Literal>> {
    let mut out = vec![Vec::new()];
    for width in 1..=max_width.min(max_vars) as usize {
        let mut combo: Vec<usize> = (0..width).collect();
        loop {
            for mask in 0..(1u32 << width) {
                let lits = combo
                    .iter()
                    .enumerate()
                    .map(|(i, &var)| {
                        let polarity = if mask >> (width - 1 - i) & 1 == 0 {
                            Polarity::Pos
                        } else {
                            Polarity::Neg
                        };
                        Literal::new(Var(var as u32 + 1), polarity)
                    })
                    .collect();
                out.push(lits);
            }
            if !next_combination(&mut combo, max_vars as usize) {
                break;
            }
        }
    }
    out
}

/// The stream produced by [`enumerate_small`].
pub struct SmallFormulas {
    clauses: Vec<Vec<Literal>>,
    max_clauses: usize,
    size: usize,
    combination: Vec<usize>,
    done: bool,
}

impl Iterator for SmallFormulas {
    type Item = Formula;

    fn next(&mut self) -> Option<Formula> {
        if self.done {
            return None;
        }
        let formula = Formula::from_clauses(self.combination.iter().enumerate().map(|(i, &c)| {
            let id = ClauseId(i as u32 + 1);
            (id, Clause::new(id, self.clauses[c].iter().copied()).expect("enumerated clause"))
        }));

        // Advance to the next combination of the current size, or grow.
        let n = self.clauses.len();
        if !next_combination(&mut self.combination, n) {
            self.size += 1;
            if self.size > self.max_clauses || self.size > n {
                self.done = true;
            } else {
                self.combination = (0..self.size).collect();
            }
        }
        Some(formula)
    }
}
