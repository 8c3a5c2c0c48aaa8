use primegraph::engine::{self, Policy, Proposition, WitnessPath};

#[test]
fn generic_main_table_rows_pass() {
    // the fixed rows need the oracle and run in the acceptance target
    for row in engine::main_table_rows().into_iter().filter(|r| r.q.is_some()) {
        let rep = engine::verify_main_row(&row, &Policy::formulas_only()).unwrap();
        assert!(rep.pass() && rep.components_match(), "{} vs {}: {:?}", row.g, row.h, rep);
    }
}

#[test]
fn pi_table_rows_all_pass() {
    for rep in engine::verify_pi_table().unwrap() {
        assert!(rep.pass(), "{} vs {}: {:?} vs {:?}", rep.row.g, rep.row.h, rep.pi_g, rep.pi_h);
    }
}

#[test]
fn corollary_cases() {
    let rep = engine::verify_corollary(&Policy::default()).unwrap();
    for v in &rep.second_maximal {
        assert!(v.is_equal(), "{v:?}");
    }
    for c in &rep.chain {
        assert!(c.separated(), "{c:?}");
        assert_eq!(c.path == WitnessPath::Direct, (c.m, c.q) == (4, 2));
    }
}

#[test]
fn negative_witnesses_replay() {
    let cases = [
        (Proposition::SymplecticOMinus, 6, 2, (17, 5)),
        (Proposition::SymplecticOMinus, 8, 2, (7, 31)),
        (Proposition::OddOmegaOMinus, 4, 3, (3, 7)),
        (Proposition::ExtensionField, 2, 5, (5, 3)),
        (Proposition::ExtensionField, 2, 4, (2, 3)),
        (Proposition::OddOmegaOMinus, 2, 5, (5, 3)),
        (Proposition::OmegaPlusSymplectic, 6, 2, (17, 5)),
        (Proposition::OmegaPlusOddOmega, 6, 3, (41, 5)),
    ];
    for (prop, m, q, pair) in cases {
        let rep = engine::replay_witness(prop, m, q).unwrap();
        assert_eq!(rep.witness.pair, pair, "{prop} m={m} q={q}");
        assert!(rep.reproduced().unwrap(), "{prop} m={m} q={q}: {:?}", rep.witness);
    }
}
