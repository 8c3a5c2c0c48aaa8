use primegraph::oracle::{self, construct, enumerate};
use primegraph::{orders, GroupId, Sign};

#[test]
fn data_files_match_constructions() {
    let built = construct::shipped().unwrap();
    if std::env::var_os("PRIMEGRAPH_WRITE_DATA").is_some() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
        for (name, p) in &built {
            std::fs::write(dir.join(name), p.to_text()).unwrap();
        }
        return;
    }
    let files = oracle::data_files();
    assert_eq!(files.len(), built.len());
    for ((name, text), (bname, p)) in files.iter().zip(&built) {
        assert_eq!(name, bname);
        assert_eq!(*text, p.to_text(), "{name} is out of date");
        let parsed = oracle::Presentation::parse(text).unwrap();
        assert_eq!(parsed.to_text(), *text);
    }
}

#[test]
fn small_enumerations_match_orders() {
    for (name, p) in construct::shipped().unwrap() {
        let expected: u64 = p.expected_order.as_ref().unwrap().try_into().unwrap();
        if expected > 100_000 {
            continue;
        }
        let els = enumerate::enumerate_elements(&p, 200_000).unwrap();
        assert_eq!(els.len() as u64, expected, "{name}");
    }
}

#[test]
fn header_orders_match_formulas() {
    for (name, p) in construct::shipped().unwrap() {
        let formula = orders::order(&p.label).unwrap();
        assert_eq!(p.expected_order.as_ref(), Some(formula.order.value()), "{name}");
    }
}

#[test]
fn psp4_3_has_5184_elements_of_order_5() {
    let p = oracle::presentation_for(&GroupId::unitary(4, 2)).unwrap().unwrap();
    let rep = oracle::enumerate_spectrum(&p, 100_000).unwrap();
    assert_eq!(rep.group_size, Some(25920));
    assert_eq!(rep.order_counts[&5], 5184);
    assert_eq!(rep.orders.iter().copied().collect::<Vec<_>>(), vec![1, 2, 3, 4, 5, 6, 9, 12]);
}

#[test]
fn l2_11_spectrum() {
    let p = oracle::presentation_for(&GroupId::linear(2, 11)).unwrap().unwrap();
    let rep = oracle::enumerate_spectrum(&p, 100_000).unwrap();
    assert_eq!(rep.orders.iter().copied().collect::<Vec<_>>(), vec![1, 2, 3, 5, 6, 11]);
}

#[test]
fn sampling_is_seeded_and_replayable() {
    let p = oracle::presentation_for(&GroupId::omega_even(8, 2, Sign::Plus)).unwrap().unwrap();
    let a = oracle::sample_spectrum(&p, 3000, 7).unwrap();
    let b = oracle::sample_spectrum(&p, 3000, 7).unwrap();
    assert_eq!(a, b);
    for (&order, &step) in &a.sample.as_ref().unwrap().witnesses {
        assert_eq!(oracle::replay_sample(&p, 7, step).unwrap(), order);
    }
    // element orders of Ω_8^+(2) that realise its three edges
    for m in [6, 10, 15] {
        assert!(a.witness(m).is_some(), "no element of order divisible by {m}");
    }
    assert!(a.orders.iter().all(|o| o % 14 != 0 && o % 21 != 0 && o % 35 != 0));
}

#[test]
fn l6_2_parabolic_sampling_finds_every_edge() {
    let p = oracle::presentation_for(&GroupId::parabolic(GroupId::linear(6, 2), 1)).unwrap().unwrap();
    let rep = oracle::sample_spectrum(&p, 20_000, 1).unwrap();
    for m in [6, 10, 14, 15, 21] {
        assert!(rep.witness(m).is_some(), "no element of order divisible by {m}");
    }
}
