use holomorph::expr::{eval_expr, parse_expr, ActionSpec, GroupExpr};
use holomorph_core::iso::{are_isomorphic, identify};
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = GroupExpr> {
    prop_oneof![
        (1usize..=8).prop_map(GroupExpr::Cyclic),
        (1usize..=5).prop_map(GroupExpr::Dihedral),
        (2usize..=7).prop_map(GroupExpr::Holomorph),
    ]
}

/// Small expressions, all of which evaluate.
fn small_expr() -> impl Strategy<Value = GroupExpr> {
    prop_oneof![
        leaf(),
        (leaf(), (1usize..=4).prop_map(GroupExpr::Cyclic))
            .prop_filter("order", |(a, b)| order_hint(a) * order_hint(b) <= 64)
            .prop_map(|(a, b)| GroupExpr::Product(Box::new(a), Box::new(b))),
        (2usize..=12, 1usize..=4, 0u64..12).prop_map(|(m, n, i)| {
            GroupExpr::Semidirect(
                Box::new(GroupExpr::Cyclic(m)),
                Box::new(GroupExpr::Cyclic(n)),
                ActionSpec::CyclicPower(i),
            )
        }),
        (2usize..=8, 1usize..=4, 0usize..4).prop_map(|(m, n, j)| {
            GroupExpr::Semidirect(
                Box::new(GroupExpr::Cyclic(m)),
                Box::new(GroupExpr::Cyclic(n)),
                ActionSpec::Index(j),
            )
        }),
    ]
}

fn order_hint(e: &GroupExpr) -> usize {
    match e {
        GroupExpr::Cyclic(n) => *n,
        GroupExpr::Dihedral(n) => 2 * n,
        GroupExpr::Holomorph(n) => n * n,
        _ => 64,
    }
}

proptest! {
    #[test]
    fn parser_never_panics(s in "[ZDHolx:#r^\\[\\]() 0-9]{0,24}") {
        let _ = parse_expr(&s);
    }

    #[test]
    fn parser_never_panics_on_arbitrary_text(s in "\\PC{0,32}") {
        let _ = parse_expr(&s);
    }

    #[test]
    fn display_parses_back(e in small_expr()) {
        prop_assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn identified_names_evaluate_to_the_same_group(e in small_expr()) {
        let Ok(g) = eval_expr(&e) else { return Ok(()) };
        let name = identify(&g).unwrap();
        prop_assume!(name.is_identified());
        let again = eval_expr(&parse_expr(&name.to_string()).unwrap()).unwrap();
        prop_assert!(are_isomorphic(&g, &again).unwrap().is_some(), "{} vs {}", e, name);
    }
}
