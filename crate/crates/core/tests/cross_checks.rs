//! Cross-module agreement on a moderate corpus: every solver and measure in
//! the crate against the brute-force references, plus the structural
//! properties of obstruction trees. The full-scale runs live in the
//! acceptance suite of the CLI crate.

use num_bigint::BigUint;
use rbdsat::cnf::{Assignment, Formula, ParseOptions, Polarity};
use rbdsat::detect::{
    destroy_neighborhood, find_srb, permissive_solve, validate_obstruction, ObstructionTree,
    Params, SrbSearch, Verdict,
};
use rbdsat::guard::ResourceGuard;
use rbdsat::instances::{enumerate_small, random_formula};
use rbdsat::oracle::{srbd_exact, truth_table_count, truth_table_sat, wrbd_exact, DepthResult, OracleLimits};
use rbdsat::srb::SplitPolicy;
use rbdsat::wrb::{wrb_solve, WrbOptions, WrbOutcome};

fn limits() -> OracleLimits {
    OracleLimits::default()
}

fn small_family() -> impl Iterator<Item = Formula> {
    enumerate_small(3, 3, 2, 1_000_000).expect("bounds fit")
}

fn random_corpus() -> impl Iterator<Item = Formula> {
    (0..120u64).map(|seed| random_formula(6, 7, 3, seed).expect("valid parameters"))
}

#[test]
fn permissive_verdicts_match_truth_tables() {
    for phi in small_family() {
        let depth = srbd_exact(&phi, 16, &limits())
            .unwrap()
            .finite()
            .expect("small formulas are within any reasonable cap");
        let mut search = SrbSearch::default();
        let verdict = permissive_solve(&phi, depth, &mut search).unwrap();
        let expected = if truth_table_sat(&phi, &limits()).unwrap() {
            Verdict::Sat
        } else {
            Verdict::Unsat
        };
        assert_eq!(verdict, expected, "k = exact depth leaves no room for TooDeep on {phi}");
    }
}

#[test]
fn tree_counting_matches_truth_tables() {
    for phi in random_corpus() {
        let mut search = SrbSearch::default();
        let tree = find_srb(&phi, 8, &mut search)
            .unwrap()
            .expect("six-variable formulas are shallow");
        let counted = tree.count_models_empty_class(&phi).unwrap();
        let expected = BigUint::from(truth_table_count(&phi, &limits()).unwrap());
        assert_eq!(counted, expected, "{phi}");
    }
}

#[test]
fn produced_trees_validate_with_leaf_bounds() {
    for phi in random_corpus() {
        let mut search = SrbSearch::default();
        let tree = find_srb(&phi, 8, &mut search).unwrap().expect("shallow");
        assert!(tree.validate(&phi, SplitPolicy::AllowDeferredSplit).is_empty());
        let stats = tree.leaf_stats(&phi);
        if phi.length() > 0 {
            let bound = (1u64 << tree.depth().min(62)) * phi.length() as u64;
            assert!(stats.leaf_count <= bound, "leaf count bound on {phi}");
            assert!(stats.leaf_vertex_sum <= bound, "leaf size bound on {phi}");
        } else {
            assert_eq!(stats.leaf_count, 1);
        }
    }
}

#[test]
fn weak_search_agrees_with_weak_depth() {
    for phi in small_family() {
        for k in 0..=4u32 {
            let outcome = wrb_solve(
                &phi,
                k,
                WrbOptions::default(),
                &mut ResourceGuard::unlimited(),
            )
            .unwrap();
            let depth = wrbd_exact(&phi, k, &limits()).unwrap();
            match (&outcome, depth) {
                (WrbOutcome::Satisfiable { witness }, DepthResult::Finite(v)) => {
                    assert!(v <= k);
                    assert_eq!(phi.apply(witness).clause_count(), 0, "witness empties {phi}");
                }
                (WrbOutcome::NotWithinDepth, DepthResult::Finite(v)) => {
                    panic!("search missed a depth-{v} backdoor of {phi} at budget {k}")
                }
                (WrbOutcome::Satisfiable { .. }, other) => {
                    panic!("search found a backdoor of {phi} but the measure is {other:?}")
                }
                (WrbOutcome::NotWithinDepth, _) => {}
            }
        }
    }
}

#[test]
fn weak_budget_is_monotone() {
    for phi in small_family() {
        let mut succeeded = false;
        for k in 0..=4u32 {
            let outcome = wrb_solve(
                &phi,
                k,
                WrbOptions::default(),
                &mut ResourceGuard::unlimited(),
            )
            .unwrap();
            let hit = matches!(outcome, WrbOutcome::Satisfiable { .. });
            assert!(!succeeded || hit, "success at a smaller budget persists for {phi}");
            succeeded = hit;
        }
    }
}

#[test]
fn strong_depth_is_closed_under_assignments() {
    for phi in small_family() {
        let base = srbd_exact(&phi, 16, &limits()).unwrap().finite().unwrap();
        for var in phi.vars().collect::<Vec<_>>() {
            for polarity in Polarity::BOTH {
                let residual = phi.assign(var, polarity);
                let reduced = srbd_exact(&residual, 16, &limits()).unwrap().finite().unwrap();
                assert!(reduced <= base, "assigning {var} raised depth on {phi}");
            }
        }
    }
}

#[test]
fn finite_weak_depth_implies_satisfiable() {
    for phi in small_family() {
        if let DepthResult::Finite(_) = wrbd_exact(&phi, 8, &limits()).unwrap() {
            assert!(truth_table_sat(&phi, &limits()).unwrap(), "{phi}");
        }
    }
}

/// Obstruction trees collected from detector runs over the random corpus,
/// with the host each was certified in.
fn collected_obstructions() -> Vec<(Formula, ObstructionTree)> {
    let mut seen = Vec::new();
    for phi in random_corpus() {
        let mut search = SrbSearch::with_sink(ResourceGuard::unlimited(), |host, tree| {
            seen.push((host.clone(), tree.clone()));
        });
        let _ = find_srb(&phi, 6, &mut search).unwrap();
    }
    assert!(seen.len() > 100, "corpus produces plenty of witnesses");
    seen
}

#[test]
fn destroy_neighborhoods_destroy() {
    // Assigning any variable outside the destroy neighborhood leaves the
    // tree valid in at least one polarity branch.
    let mut checked = 0u32;
    for (host, tree) in collected_obstructions() {
        let params = Params { level: tree.level(), degree: tree.degree(), k: tree.param_k() };
        let destroy = destroy_neighborhood(&tree, &host);
        assert_eq!(&destroy, tree.destroy());
        for var in host.vars().collect::<Vec<_>>() {
            if destroy.contains(&var) {
                continue;
            }
            let survives = Polarity::BOTH.into_iter().any(|polarity| {
                let residual = host.assign(var, polarity);
                residual.max_clause_width() <= params.degree as usize
                    && validate_obstruction(&tree, &residual, params).is_empty()
            });
            assert!(survives, "assigning {var} destroyed the tree in both branches");
            checked += 1;
        }
        if checked > 3000 {
            break;
        }
    }
    assert!(checked > 100);
}

#[test]
fn untouched_trees_survive_unrelated_assignments() {
    // A variable with no edge of polarity p into the tree's clauses leaves
    // the tree valid under p.
    let mut checked = 0u32;
    for (host, tree) in collected_obstructions() {
        let params = Params { level: tree.level(), degree: tree.degree(), k: tree.param_k() };
        let graph = host.incidence_graph();
        let tree_vars = tree.var_ids();
        let tree_clauses = tree.clause_ids();
        for var in host.vars().collect::<Vec<_>>() {
            if tree_vars.contains(&var) {
                continue;
            }
            for polarity in Polarity::BOTH {
                let touches = tree_clauses.iter().any(|&c| graph.has_edge(var, c, polarity));
                if touches {
                    continue;
                }
                let residual = host.assign(var, polarity);
                assert!(
                    validate_obstruction(&tree, &residual, params).is_empty(),
                    "untouched tree failed in the residual"
                );
                checked += 1;
            }
        }
        if checked > 3000 {
            break;
        }
    }
    assert!(checked > 500);
}

#[test]
fn lifted_trees_keep_their_destroy_neighborhood() {
    // A tree valid in host[x -> p] is valid in the host with the same
    // destroy neighborhood.
    let mut checked = 0u32;
    for (host, tree) in collected_obstructions() {
        let params = Params { level: tree.level(), degree: tree.degree(), k: tree.param_k() };
        let destroy = destroy_neighborhood(&tree, &host);
        for var in host.vars().collect::<Vec<_>>() {
            if destroy.contains(&var) {
                continue;
            }
            for polarity in Polarity::BOTH {
                let residual = host.assign(var, polarity);
                if residual.max_clause_width() > params.degree as usize {
                    continue;
                }
                if validate_obstruction(&tree, &residual, params).is_empty() {
                    assert!(validate_obstruction(&tree, &host, params).is_empty());
                    assert_eq!(destroy_neighborhood(&tree, &residual), destroy_neighborhood(&tree, &host));
                    checked += 1;
                }
            }
        }
        if checked > 2000 {
            break;
        }
    }
    assert!(checked > 300);
}

#[test]
fn obstructions_bound_the_exact_depth_from_below() {
    let mut checked = 0u32;
    for (host, tree) in collected_obstructions() {
        if host.var_count() > 10 || tree.level() == 0 {
            continue;
        }
        let result = srbd_exact(&host, tree.level() - 1, &limits()).unwrap();
        assert_eq!(
            result,
            DepthResult::ExceedsCap(tree.level() - 1),
            "a level-{} witness demands depth >= {}",
            tree.level(),
            tree.level()
        );
        checked += 1;
        if checked > 400 {
            break;
        }
    }
    assert!(checked > 100);
}

#[test]
fn dimacs_round_trips_over_random_formulas() {
    for seed in 0..100u64 {
        let phi = random_formula(8, 10, 3, seed).unwrap();
        let text = rbdsat::cnf::serialize_dimacs(&phi);
        let reparsed = rbdsat::cnf::parse_dimacs(&text, ParseOptions::default())
            .unwrap()
            .formula;
        assert_eq!(phi, reparsed, "seed {seed}");
    }
}

#[test]
fn too_deep_never_appears_below_the_exact_depth() {
    // The soundness direction on the moderate family, including budgets
    // above the exact depth.
    for phi in small_family() {
        let depth = srbd_exact(&phi, 16, &limits()).unwrap().finite().unwrap();
        for k in depth..=depth + 2 {
            let mut search = SrbSearch::default();
            let verdict = permissive_solve(&phi, k, &mut search).unwrap();
            assert_ne!(verdict, Verdict::TooDeep, "{phi} at k={k}, depth={depth}");
        }
    }
}

#[test]
fn assignments_merge_only_when_disjoint() {
    let a = Assignment::from_pairs([(rbdsat::cnf::Var(1), Polarity::Pos)]);
    let b = Assignment::from_pairs([(rbdsat::cnf::Var(2), Polarity::Neg)]);
    assert!(a.union(&b).is_ok());
    assert!(a.union(&a).is_err());
}
