use holomorph::json::{self, JsonError, TableJson};
use holomorph_core::construct::{dihedral, semidirect_cyclic};
use holomorph_core::AxiomViolation;

#[test]
fn round_trip_keeps_everything() {
    let g = semidirect_cyclic(8, 2, 3).unwrap().into_table();
    let text = json::to_string(&g);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&str> = value
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(keys.len(), 4);
    for k in ["order", "identity", "mul", "names"] {
        assert!(keys.contains(&k));
    }
    let back = json::from_str(&text).unwrap();
    assert_eq!(back, g);
}

#[test]
fn corrupted_tables_are_rejected_with_witness() {
    let mut t = TableJson::from(&dihedral(3).unwrap());
    t.mul[2][3] = t.mul[2][4];
    let err = t.into_table().unwrap_err();
    assert!(
        matches!(
            err,
            JsonError::Axiom(
                AxiomViolation::Closure { .. }
                    | AxiomViolation::Inverse { .. }
                    | AxiomViolation::Associativity { .. }
                    | AxiomViolation::Identity { .. }
            )
        ),
        "{err}"
    );

    let broken = r#"{"order":2,"identity":0,"mul":[[0,1],[1,1]],"names":["e","a"]}"#;
    assert!(matches!(json::from_str(broken), Err(JsonError::Axiom(_))));
    let mismatch = r#"{"order":3,"identity":0,"mul":[[0,1],[1,0]],"names":["e","a"]}"#;
    assert!(matches!(
        json::from_str(mismatch),
        Err(JsonError::OrderMismatch {
            declared: 3,
            rows: 2
        })
    ));
    let names = r#"{"order":2,"identity":0,"mul":[[0,1],[1,0]],"names":["e"]}"#;
    assert!(matches!(
        json::from_str(names),
        Err(JsonError::Axiom(AxiomViolation::NameCount { .. }))
    ));
    assert!(matches!(json::from_str("{"), Err(JsonError::Syntax(_))));
}

#[test]
fn non_zero_identity_imports() {
    let text = r#"{"order":2,"identity":1,"mul":[[1,0],[0,1]],"names":["a","e"]}"#;
    let g = json::from_str(text).unwrap();
    assert_eq!(g.identity(), 1);
    assert_eq!(g.inv(0), 0);
}
