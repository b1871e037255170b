//! Bounded searches for counterexamples to the open problems.

use rayon::prelude::*;

use super::checks::{cartesian_gamma, Facts};
use super::{run_suite, CheckId, CheckSpec, CheckVerdict, CorpusItem, InstanceRecord, Outcome, Report};
use crate::error::{KdmvError, Result};
use crate::graph::{block_graphs, connected_graphs, product, to_graph6, FamilySpec, ProductKind};

/// Searches every instance up to `limit` for a counterexample to an open
/// problem:
///
/// * `OpenQnEquality`: `Q_d` for `d <= limit`.
/// * `OpenCartesianGamma`: connected `G`, `H` with `2 <= |G| <= |H|` and
///   `|G| |H| <= limit`, each unordered pair once.
/// * `OpenBlockTheta`: block graphs on at most `limit` vertices.
///
/// Counterexamples show up as findings with `holds: false`.
pub fn counterexample_search(problem: CheckId, limit: usize, budget: u64) -> Result<Report> {
    let spec = CheckSpec::new(problem).with_budget(budget);
    let source = format!("probe:{problem}:{limit}");
    match problem {
        CheckId::OpenQnEquality => {
            let corpus = (1..=limit.min(9))
                .map(|d| CorpusItem::from_spec(FamilySpec::Hypercube(d)))
                .collect::<Result<Vec<_>>>()?;
            Ok(run_suite(&source, &corpus, &[spec]))
        }
        CheckId::OpenBlockTheta => {
            let corpus: Vec<CorpusItem> = (1..=limit.min(super::MAX_BLOCK_ORDER))
                .flat_map(block_graphs)
                .map(CorpusItem::from_graph)
                .collect();
            Ok(run_suite(&source, &corpus, &[spec]))
        }
        CheckId::OpenCartesianGamma => {
            let graphs: Vec<_> = (2..=(limit / 2).min(super::MAX_GENERATED_ORDER))
                .flat_map(connected_graphs)
                .collect();
            let mut pairs = Vec::new();
            for (i, g) in graphs.iter().enumerate() {
                for h in &graphs[i..] {
                    if g.n() * h.n() <= limit {
                        pairs.push((g, h));
                    }
                }
            }
            let instances = pairs
                .par_iter()
                .map(|(g, h)| -> Result<InstanceRecord> {
                    let (g6g, g6h) = (to_graph6(g), to_graph6(h));
                    let id = FamilySpec::cartesian(FamilySpec::Graph6(g6g), FamilySpec::Graph6(g6h));
                    let p = product(ProductKind::Cartesian, g, h)?;
                    let mut record = InstanceRecord::new(&id.to_string(), &p);
                    let gf = Facts::new(g, &id, budget);
                    let verdict = |outcome, detail| CheckVerdict {
                        check: problem,
                        outcome,
                        detail,
                    };
                    record.verdicts.push(match gf.chi_and_gamma() {
                        Err(detail) => verdict(Outcome::SkipBudget, detail),
                        Ok((c, gm)) => match cartesian_gamma(c, gm, h, g, budget) {
                            Ok((holds, detail)) => verdict(Outcome::Finding { holds }, detail),
                            Err(stop) => verdict(Outcome::SkipBudget, stop.describe()),
                        },
                    });
                    record.nodes = gf.nodes();
                    Ok(record)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Report::assemble(&source, vec![spec], instances))
        }
        other => Err(KdmvError::Domain(format!("{other} is not an open problem"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probes_small_instances() {
        let r = counterexample_search(CheckId::OpenQnEquality, 3, 1_000_000).unwrap();
        assert_eq!(r.summary.findings, 3);
        assert_eq!(r.summary.counterexamples, 0);

        let r = counterexample_search(CheckId::OpenBlockTheta, 6, 1_000_000).unwrap();
        assert!(r.summary.findings > 10);

        let r = counterexample_search(CheckId::OpenCartesianGamma, 9, 1_000_000).unwrap();
        // K2 with the 2 + 6 graphs on 3 and 4 vertices and with itself,
        // plus the 3 pairs among P3 and K3.
        assert_eq!(r.instances.len(), 12);
        assert_eq!(r.summary.findings, 12);
    }

    #[test]
    fn rejects_closed_checks() {
        assert!(matches!(
            counterexample_search(CheckId::ThmDis, 5, 10),
            Err(KdmvError::Domain(_))
        ));
    }
}
