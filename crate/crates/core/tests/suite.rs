//! Every registered identity, at its default orders.

use hankel_core::verify::{identities, named_suite, verify, Status, VerifyOptions};

#[test]
fn every_identity_holds() {
    let reports = named_suite(None, 1).unwrap();
    assert_eq!(reports.len(), identities().len());
    for r in &reports {
        eprintln!("{:<40} {:<16} {:>6} checks {:>7} ms", r.identity, r.status.as_str(), r.checks, r.elapsed_ms.unwrap_or(0));
    }
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| (&r.identity, &r.witnesses)).collect();
    assert!(failed.is_empty(), "{failed:#?}");
    let d = reports.iter().find(|r| r.identity == "d-root").unwrap();
    assert!(matches!(d.status, Status::ConjecturePass | Status::ConjectureFail));
}

#[test]
fn aliases_resolve_to_the_same_report() {
    let by_alias = verify("thm1", &VerifyOptions::default().with_n_max(3)).unwrap().without_timing();
    let by_id = verify("two-root-sum", &VerifyOptions::default().with_n_max(3)).unwrap().without_timing();
    assert_eq!(by_alias, by_id);
}
