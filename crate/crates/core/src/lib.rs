//! Recursive backdoors for SAT.
//!
//! A strong recursive backdoor is a rooted tree that alternates branching
//! on variables with splitting into the connected components the branching
//! creates; its quality is the maximum number of variable branchings on a
//! root-to-leaf path. This crate provides:
//!
//! - [`cnf`]: CNF formulas, partial assignments, signed incidence graphs,
//!   and DIMACS I/O;
//! - [`srb`]: strong-recursive-backdoor trees, their validation, and
//!   SAT solving / model counting driven by a tree;
//! - [`oracle`]: exact brute-force references for satisfiability, model
//!   counts, and both recursive backdoor depth measures on small instances;
//! - [`detect`]: the fixed-parameter detector that either produces a
//!   backdoor tree to the class of empty formulas, or certifies via an
//!   obstruction tree that no shallow backdoor exists;
//! - [`wrb`]: the depth-bounded branching search for weak recursive
//!   backdoors;
//! - [`instances`]: deterministic generators for grid-family formulas, the
//!   set-cover reduction, seeded random CNF, and exhaustive small-formula
//!   enumeration.

pub mod cnf;
pub mod detect;
pub mod guard;
pub mod instances;
pub mod oracle;
pub mod srb;
pub mod wrb;

pub use cnf::{
    parse_dimacs, serialize_dimacs, Assignment, Clause, ClauseId, CnfError, DimacsOutcome,
    Formula, IncidenceGraph, Literal, ParseOptions, Polarity, Var, Vertex,
};
pub use detect::{
    depth_bound, destroy_neighborhood, find_obstruction_or_backdoor, find_srb, path_length_bound,
    permissive_solve, validate_obstruction, DetectError, DetectionOutcome, ObstructionNode,
    ObstructionTree, Params, SrbSearch, Verdict,
};
pub use guard::{GuardError, ResourceGuard};
pub use instances::{
    enumerate_small, grid_family, random_formula, set_cover_reduction, GridRoles, InstanceError,
    RandomRoles, SetCoverInstance, SetCoverRoles,
};
pub use oracle::{
    srbd_exact, truth_table_count, truth_table_sat, wrbd_exact, DepthResult, OracleError,
    OracleLimits,
};
pub use srb::{LeafStats, SplitPolicy, SrbChildren, SrbNode, SrbTree, TreeError, Violation};
pub use wrb::{wrb_solve, WrbOptions, WrbOutcome};
