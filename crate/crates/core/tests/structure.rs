use parhopf::algebra::bialgebra;
use parhopf::checks::{run_suite, Suite, SuiteConfig};
use parhopf::diagram::enumerate_diagrams;
use parhopf::parqsym::{self, ParQSymM};
use parhopf::LinComb;

#[test]
fn grid_antipode_matches_takeuchi_at_order_three() {
    for d in enumerate_diagrams(3) {
        let takeuchi = bialgebra::takeuchi_antipode(&ParQSymM, &LinComb::basis(d.clone())).unwrap();
        assert_eq!(parqsym::antipode_m_explicit(&d), takeuchi, "S(M_{d})");
        let back = takeuchi.map_linear(parqsym::antipode_inverse_m_explicit);
        assert_eq!(back, LinComb::basis(d.clone()), "inverse antipode on M_{d}");
    }
}

#[test]
fn every_suite_passes_at_order_three() {
    let report = run_suite(Suite::All, &SuiteConfig::with_max_order(3)).unwrap();
    assert!(report.passed(), "{:#?}", report.all_counterexamples());
    assert_eq!(report.reports.len(), Suite::EACH.len());
}

#[test]
fn reports_are_deterministic() {
    let cfg = SuiteConfig::with_max_order(2);
    let a = run_suite(Suite::All, &cfg).unwrap().to_json_pretty();
    let b = run_suite(Suite::All, &cfg).unwrap().to_json_pretty();
    assert_eq!(a, b);
}
