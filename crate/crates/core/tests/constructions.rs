use commutator_core::centrality::relative_commutator;
use commutator_core::congruence::DEFAULT_LATTICE_BUDGET;
use commutator_core::constructions::semidistributivity_failure;
use commutator_core::fixtures;
use commutator_core::properties::{check_all, recheck_violation};
use commutator_core::Partition;

#[test]
fn sd_failure_algebra_breaks_every_property() {
    let f = semidistributivity_failure(&fixtures::z2s2(), DEFAULT_LATTICE_BUDGET).unwrap().unwrap();
    let h = &f.herringbone;
    assert!(f.all_hold());
    assert_eq!(h.d.size(), 13);
    assert_eq!(h.e.size(), 12);
    let zero = Partition::zero(h.e.size());
    assert!(relative_commutator(&h.e, &h.x, &h.y, &zero).unwrap().is_zero());

    let all = check_all(&h.e, DEFAULT_LATTICE_BUDGET).unwrap();
    assert_eq!(all.congruences, 295);
    assert_eq!(all.reports.len(), 11);
    for r in &all.reports[..10] {
        assert!(!r.holds, "{}", r.property.name());
        assert!(recheck_violation(&h.e, r).unwrap(), "{}", r.property.name());
    }
    assert!(all.reports[10].holds);
}
