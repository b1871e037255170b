use kdmv::chromatic::chi_mu_k_exact;
use kdmv::constructions::formula_chi_mu_k;
use kdmv::domination::gamma_t_exact;
use kdmv::graph::{all_pairs_distances, block_graphs, connected_graphs, generate, to_graph6, FamilySpec};
use kdmv::harness::{load_corpus, run_suite, CheckId, CheckSpec};
use kdmv::DEFAULT_BUDGET;
use rayon::prelude::*;

fn chi2(g: &kdmv::Graph) -> usize {
    let r = chi_mu_k_exact(g, 2, DEFAULT_BUDGET).unwrap();
    assert!(r.is_exact());
    r.value
}

#[test]
fn total_domination_bounds_all_connected_graphs_on_nine_vertices() {
    let bad: Vec<String> = connected_graphs(9)
        .par_iter()
        .filter(|g| {
            let gt = gamma_t_exact(g, DEFAULT_BUDGET).unwrap();
            assert!(gt.is_exact());
            chi2(g) > gt.value
        })
        .map(to_graph6)
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn tree_family_gap_grows_with_l() {
    for l in 1..=2 {
        let g = generate(&format!("named:fig1tree(2,2,{l})").parse().unwrap()).unwrap();
        let gt = gamma_t_exact(&g, DEFAULT_BUDGET).unwrap().value;
        assert_eq!(gt, 2 * l + 2);
        assert_eq!(chi2(&g), l + 2);
    }
}

#[test]
fn strict_chain_on_long_strong_path() {
    let spec = FamilySpec::strong(FamilySpec::Path(60), FamilySpec::Complete(2));
    let vals: Vec<usize> = (2..=4).map(|k| formula_chi_mu_k(&spec, k).unwrap()).collect();
    assert!(vals.windows(2).all(|w| w[1] < w[0]), "{vals:?}");
}

#[test]
fn formulas_match_solver_up_to_eighteen_vertices() {
    let mut specs = Vec::new();
    for n in 1..=18 {
        specs.push(FamilySpec::Path(n));
        if n >= 3 {
            specs.push(FamilySpec::Cycle(n));
        }
    }
    for n in 4..=9 {
        for m in 2..=18 / n {
            specs.push(FamilySpec::strong(FamilySpec::Path(n), FamilySpec::Complete(m)));
        }
    }
    specs.push(FamilySpec::cartesian(FamilySpec::Cycle(4), FamilySpec::Cycle(4)));
    specs.push(FamilySpec::Star(5));
    specs.push(FamilySpec::DoubleStar(3, 4));
    let checked: usize = specs
        .par_iter()
        .map(|spec| {
            let g = generate(spec).unwrap();
            let d = all_pairs_distances(&g).diameter().max(1);
            let mut count = 0;
            for k in 1..=d {
                if let Some(f) = formula_chi_mu_k(spec, k) {
                    let r = chi_mu_k_exact(&g, k, DEFAULT_BUDGET).unwrap();
                    assert!(r.is_exact(), "{spec} k={k}");
                    assert_eq!(r.value, f, "{spec} k={k}");
                    count += 1;
                }
            }
            count
        })
        .sum();
    assert!(checked > 100);
}

#[test]
fn block_formula_on_generated_block_graphs() {
    for n in 2..=8 {
        for g in block_graphs(n) {
            let spec = FamilySpec::Graph6(to_graph6(&g));
            let d = all_pairs_distances(&g).diameter();
            let want = formula_chi_mu_k(&spec, d).unwrap();
            assert_eq!(want, (d as usize + 1).div_ceil(2));
            assert_eq!(chi_mu_k_exact(&g, d, DEFAULT_BUDGET).unwrap().value, want);
        }
    }
}

#[test]
fn suite_on_connected_graphs_up_to_seven_covers_every_inequality() {
    let corpus = load_corpus("geng:n<=7").unwrap();
    let checks: Vec<CheckSpec> = CheckId::ALL.iter().map(|&id| CheckSpec::new(id)).collect();
    let report = run_suite("geng:n<=7", &corpus, &checks);
    assert_eq!(report.summary.instances, 1 + 1 + 2 + 6 + 21 + 112 + 853);
    assert_eq!(report.summary.failed, 0);
    assert_eq!(report.summary.skipped_budget, 0);
    for &id in CheckId::ALL {
        if !matches!(id, CheckId::QnStructure | CheckId::OpenQnEquality) {
            assert!(
                report.summary.coverage.get(&id).copied().unwrap_or(0) > 0,
                "{id} never ran"
            );
        }
    }
}
