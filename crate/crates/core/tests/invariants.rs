use commutator_core::algebra::OperationTable;
use commutator_core::centrality::{
    centralizes_delta, centralizes_matrix, commutator, matrix_set, relative_commutator, relative_commutator_matrix,
};
use commutator_core::congruence::{con_lattice, DEFAULT_LATTICE_BUDGET};
use commutator_core::maltsev::{classify_term, find_term, free_algebra, TermKind, TermSearch, DEFAULT_FREE_BUDGET};
use commutator_core::{FiniteAlgebra, Partition, Term};
use proptest::prelude::*;

const BUDGET: usize = 1 << 20;

fn groupoid(n: usize) -> impl Strategy<Value = FiniteAlgebra> {
    proptest::collection::vec(0..n, n * n)
        .prop_map(move |t| FiniteAlgebra::new("G", n, vec![OperationTable::new("f", 2, t)]).unwrap())
}

fn lattice(alg: &FiniteAlgebra) -> Vec<Partition> {
    con_lattice(alg, DEFAULT_LATTICE_BUDGET).unwrap().congruences().to_vec()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn commutator_is_least_centralizing(alg in groupoid(3)) {
        let cs = lattice(&alg);
        for a in &cs {
            for b in &cs {
                let c = commutator(&alg, a, b).unwrap();
                prop_assert!(c.leq(&a.meet(b).unwrap()));
                prop_assert!(centralizes_delta(&alg, a, b, &c).unwrap());
                for d in &cs {
                    prop_assert_eq!(centralizes_delta(&alg, a, b, d).unwrap(), c.leq(d));
                }
            }
        }
    }

    #[test]
    fn centrality_depends_on_meet_with_second_place(alg in groupoid(3)) {
        let cs = lattice(&alg);
        for a in &cs {
            for b in &cs {
                for d in &cs {
                    for d2 in &cs {
                        if b.meet(d).unwrap() == b.meet(d2).unwrap() {
                            prop_assert_eq!(
                                centralizes_delta(&alg, a, b, d).unwrap(),
                                centralizes_delta(&alg, a, b, d2).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn commutator_is_monotone(alg in groupoid(3)) {
        let cs = lattice(&alg);
        for a in &cs {
            for b in &cs {
                let c = commutator(&alg, a, b).unwrap();
                for a2 in cs.iter().filter(|x| a.leq(x)) {
                    for b2 in cs.iter().filter(|x| b.leq(x)) {
                        prop_assert!(c.leq(&commutator(&alg, a2, b2).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn relative_commutator_methods_agree(alg in groupoid(3)) {
        let cs = lattice(&alg);
        for a in &cs {
            for b in &cs {
                for e in &cs {
                    prop_assert_eq!(
                        relative_commutator(&alg, a, b, e).unwrap(),
                        relative_commutator_matrix(&alg, a, b, e, BUDGET).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn matrix_provenance_reevaluates(alg in groupoid(3)) {
        let one = Partition::one(3);
        let m = matrix_set(&alg, &one, &one, BUDGET).unwrap();
        for i in 0..m.len() {
            let t = m.provenance(i);
            let mut q = [0; 4];
            for (c, slot) in q.iter_mut().enumerate() {
                let assign: Vec<usize> = m.generators().iter().map(|g| g[c]).collect();
                *slot = alg.eval_term(&t, &assign).unwrap();
            }
            prop_assert_eq!(q, m.quad(i));
        }
    }

    #[test]
    fn free_provenance_reevaluates(alg in groupoid(2)) {
        let f = free_algebra(&alg, 3, DEFAULT_FREE_BUDGET).unwrap();
        for i in 0..f.len() {
            prop_assert_eq!(alg.term_table(&f.provenance(i), 3).unwrap(), f.elements[i].clone());
        }
    }

    #[test]
    fn found_terms_certify(alg in groupoid(2)) {
        for kind in TermKind::ALL {
            if let TermSearch::Found { certificate, .. } = find_term(&alg, kind, DEFAULT_FREE_BUDGET).unwrap() {
                let t = Term::parse(&certificate.term, &alg, certificate.arity).unwrap();
                if certificate.arity == 3 {
                    prop_assert!(classify_term(&alg, &t, DEFAULT_FREE_BUDGET).unwrap().has(kind));
                }
            }
        }
    }
}

#[test]
fn oracles_agree_on_four_element_groupoids() {
    for alg in commutator_core::fixtures::random_groupoids(11, 25, 4) {
        let cs = lattice(&alg);
        for a in &cs {
            for b in &cs {
                for d in &cs {
                    assert_eq!(
                        centralizes_matrix(&alg, a, b, d, BUDGET).unwrap().holds,
                        centralizes_delta(&alg, a, b, d).unwrap()
                    );
                }
            }
        }
    }
}
