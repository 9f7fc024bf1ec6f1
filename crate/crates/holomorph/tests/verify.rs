use std::collections::BTreeSet;

use holomorph::verify::{
    check_aut_zn_z2_orders, check_dihedral_aut, check_elementary_abelian_aut, run_all, Fault,
    Status, VerifyConfig,
};
use holomorph_core::Limits;

#[test]
fn default_run_passes_with_unique_claims() {
    let (reports, summary) = run_all(&VerifyConfig::default());
    let failures: Vec<_> = reports
        .iter()
        .filter(|r| r.failed())
        .map(|r| (&r.claim, &r.actual))
        .collect();
    assert!(failures.is_empty(), "{failures:?}");
    assert!(summary.all_passed());
    let ids: BTreeSet<&str> = reports.iter().map(|r| r.claim.as_str()).collect();
    assert_eq!(ids.len(), reports.len());
}

#[test]
fn runs_are_deterministic() {
    let cfg = VerifyConfig::with_max_n(5);
    let strip = |v: Vec<holomorph::verify::VerifyReport>| {
        v.into_iter()
            .map(|r| (r.claim, r.status, r.expected, r.actual))
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(run_all(&cfg).0), strip(run_all(&cfg).0));
}

#[test]
fn small_config_is_smaller() {
    let (small, s) = run_all(&VerifyConfig::with_max_n(3));
    let (full, _) = run_all(&VerifyConfig::default());
    assert!(small.len() < full.len());
    assert!(s.all_passed());
}

#[test]
fn order_examples() {
    let r = check_aut_zn_z2_orders(6, &Limits::default(), None);
    let by_n: Vec<&str> = r.iter().map(|r| r.actual.as_str()).collect();
    assert_eq!(by_n, ["6", "2", "8", "4", "12"]);
    let bad = check_aut_zn_z2_orders(6, &Limits::default(), Some(Fault::WrongOrderFormula));
    assert_eq!(bad.iter().filter(|r| r.failed()).count(), 2);
}

#[test]
fn elementary_cap_is_a_skip() {
    let r = check_elementary_abelian_aut(&[(2, 3), (2, 4)], &Limits::default());
    assert_eq!(r[0].status, Status::Pass);
    assert_eq!(r[0].actual, "168");
    assert!(matches!(r[1].status, Status::Skipped(_)));
}

#[test]
fn dihedral_examples() {
    let r = check_dihedral_aut(5, &Limits::default());
    assert!(r.iter().all(|r| r.passed()));
    assert!(r.iter().any(|r| r.actual.starts_with("|Aut(D5)| = 20")));
}

#[test]
fn corrupted_table_fails_with_witness() {
    let cfg = VerifyConfig {
        fault: Some(Fault::CorruptedTable),
        ..VerifyConfig::with_max_n(3)
    };
    let (reports, summary) = run_all(&cfg);
    assert!(!summary.all_passed());
    let bad = reports.iter().find(|r| r.failed()).unwrap();
    assert!(bad.actual.starts_with("violation:"), "{}", bad.actual);
}
