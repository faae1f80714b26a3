//! The five defining conditions taken literally accept a tree whose maximal
//! open packings have two sizes. Support 13 has two non-leaf neighbors, 3 and
//! 11, each leading to a distance-2 vertex (12 and 9), and a packing can use
//! the leaf at 13 together with both of them.

use openpack::classifier::{expected_spectrum_value, recognize_f_literal, Condition, FViolation, Rule};
use openpack::{diagnose, oracle, recognize_f, Graph, Verdict, VertexSet};

fn tree() -> Graph {
    let edges = [
        (0, 9),
        (0, 10),
        (1, 13),
        (2, 5),
        (2, 10),
        (2, 14),
        (3, 12),
        (3, 13),
        (4, 8),
        (6, 7),
        (6, 12),
        (7, 8),
        (9, 11),
        (11, 13),
    ];
    Graph::new(15, &edges).unwrap()
}

#[test]
fn literal_conditions_accept_a_non_uniform_tree() {
    let g = tree();
    assert!(g.is_tree());
    let p = recognize_f_literal(&g).unwrap();
    assert!(p.is_valid_for(&g));
    assert_eq!(p.s1, VertexSet::from([2, 8, 13]));
    assert_eq!(expected_spectrum_value(&p), 6);
    assert_eq!(oracle::packing_spectrum(&g), vec![6, 7]);
    assert!(oracle::maximal_open_packings(&g).contains(&VertexSet::from([0, 1, 4, 5, 6, 9, 12])));
}

#[test]
fn extra_condition_rejects_it() {
    let g = tree();
    assert_eq!(recognize_f(&g), Err(FViolation { condition: Condition::C6, witness: vec![13, 3, 11] }));
    let d = diagnose(&g);
    assert_eq!(d.verdict, Verdict::NotInU);
    assert_eq!(d.reasons[0].rule, Rule::R5);
}

#[test]
fn extra_condition_serializes() {
    let rule = Rule::F(Condition::C6);
    let json = serde_json::to_string(&rule).unwrap();
    assert_eq!(json, "\"F-C6\"");
    assert_eq!(serde_json::from_str::<Rule>(&json).unwrap(), rule);
}
