use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;

use serde_json::json;
use z2z4::verify::{
    audit, find_claim, register_claims, run_claims, run_suite, structural_audit, ClaimKind, ClaimValue, Grid, Oracle,
    Params, Verdict,
};
use z2z4::Budget;

fn params(pairs: &[(&str, serde_json::Value)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn rep(i: u8, n: usize) -> Params {
    params(&[
        ("family", json!("repetition")),
        ("code", json!(format!("Cα{i}"))),
        ("n", json!(n)),
    ])
}

#[test]
fn catalog_shape() {
    let claims = register_claims();
    assert!(claims.len() >= 16);
    let ids: BTreeSet<_> = claims.iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), claims.len());
    for c in &claims {
        assert!(c.source.contains('"'), "{} has no quote", c.id);
        assert!(!c.conventions.is_empty());
    }
    for id in [
        "thm1-euclid",
        "thm2-euclid",
        "thm3-euclid-Cα6",
        "thm4-euclid-7n",
        "thm5-lee",
        "thm6-lee-bound",
        "thm14-lee-dual",
        "macdonald-dual-lee",
        "arm-first-order-lee",
        "thm7-columns",
        "gray-arm-params",
    ] {
        assert!(ids.contains(id), "{id}");
    }
}

#[test]
fn repetition_claims_use_both_conventions() {
    for c in register_claims() {
        if ["thm1-", "thm2-", "thm3-", "thm4-"].iter().any(|p| c.id.starts_with(p)) {
            assert_eq!(c.conventions, ["pair", "digit"], "{}", c.id);
        }
    }
}

#[test]
fn repetition_lee_pair_convention() {
    let o = Oracle::new(Budget::default());
    let c = find_claim("thm1-lee").unwrap();
    assert_eq!(c.evaluate(&rep(1, 2), "pair", &o).unwrap(), Ok(ClaimValue::int(3)));
}

#[test]
fn alpha2_euclidean_single_pair() {
    let o = Oracle::new(Budget::default());
    let e = audit(&find_claim("thm3-euclid-Cα2").unwrap(), &rep(2, 1), &o).unwrap();
    assert_eq!(e.conventions["pair"], Some(ClaimValue::int(1)));
    assert_eq!(e.computed, Some(ClaimValue::int(2)));
    assert_eq!(e.convention_verdicts["pair"], Verdict::Mismatch);
    assert_eq!(e.convention_verdicts["digit"], Verdict::Match);
    assert_eq!(e.verdict, Verdict::Match);
}

#[test]
fn gray_transfer_on_alpha4() {
    let o = Oracle::new(Budget::default());
    let e = audit(&find_claim("prop1-gray-transfer").unwrap(), &rep(4, 2), &o).unwrap();
    assert_eq!(e.verdict, Verdict::Match);
}

#[test]
fn structural_examples() {
    let o = Oracle::new(Budget::default());
    let simplex = params(&[
        ("family", json!("simplex")),
        ("k", json!(1)),
        ("variant", json!("alpha")),
    ]);
    let e = structural_audit(&find_claim("thm7-columns").unwrap(), &simplex, &o).unwrap();
    assert_eq!(e.convention_verdicts["alpha_columns"], Verdict::Match);
    assert_eq!(e.computed, Some(ClaimValue::text("12 copies of m_1^alpha")));

    let zero = find_claim("gray-zero-identity").unwrap();
    let p = zero.points(&Grid::default()).remove(0);
    assert_eq!(structural_audit(&zero, &p, &o).unwrap().verdict, Verdict::Match);

    let arm = params(&[
        ("family", json!("arm_first_order")),
        ("m", json!(3)),
        ("layout", json!("half_simplex")),
    ]);
    let e = structural_audit(&find_claim("gray-arm-params").unwrap(), &arm, &o).unwrap();
    assert_eq!(e.verdict, Verdict::Match);
    assert!(structural_audit(&find_claim("thm1-lee").unwrap(), &rep(1, 1), &o).is_err());
}

#[test]
fn euclidean_weight_typo_is_flagged() {
    let o = Oracle::new(Budget::default());
    let e = audit(&find_claim("euclid-weight-formula").unwrap(), &Params::new(), &o).unwrap();
    assert_eq!(e.convention_verdicts["as_printed"], Verdict::Mismatch);
    assert_eq!(e.convention_verdicts["squared"], Verdict::Match);
}

#[test]
fn out_of_budget_is_not_computable() {
    let o = Oracle::new(Budget::default());
    let p = params(&[
        ("family", json!("simplex")),
        ("k", json!(2)),
        ("variant", json!("alpha")),
    ]);
    let e = audit(&find_claim("thm5-lee").unwrap(), &p, &o).unwrap();
    assert_eq!(e.verdict, Verdict::NotComputable);
    assert!(e.notes.iter().any(|n| n.contains("budget")), "{:?}", e.notes);
}

#[test]
fn bound_claims_never_report_match() {
    let mut grid = Grid::repetition_only(vec![1, 2]);
    grid.k_component = vec![1, 2];
    grid.mattson_trials = 5;
    let report = run_claims(&register_claims(), &grid, &Budget::default()).unwrap();
    let kinds: HashMap<_, _> = register_claims().iter().map(|c| (c.id.to_string(), c.kind)).collect();
    for e in &report.entries {
        if matches!(
            kinds[&e.claim_id],
            ClaimKind::UpperBound | ClaimKind::LowerBound | ClaimKind::Interval
        ) {
            assert_ne!(e.verdict, Verdict::Match, "{}", e.claim_id);
        }
    }
}

#[test]
fn every_claim_appears_once_per_point() {
    let grid = Grid::default();
    let claims = register_claims();
    let report = run_claims(&claims, &grid, &Budget::default()).unwrap();
    let expected: usize = claims.iter().map(|c| c.points(&grid).len()).sum();
    assert_eq!(report.entries.len(), expected);
    let keys: BTreeSet<_> = report
        .entries
        .iter()
        .map(|e| (e.claim_id.clone(), serde_json::to_string(&e.params).unwrap()))
        .collect();
    assert_eq!(keys.len(), expected);
}

#[test]
fn mattson_bounds_hold() {
    let mut grid = Grid::repetition_only(vec![]);
    grid.mattson_trials = 20;
    grid.seed = 7;
    let claims: Vec<_> = [
        "prop3-mattson-lee",
        "prop3-mattson-euclid",
        "prop3-direct-sum-lee",
        "prop3-direct-sum-euclid",
    ]
    .iter()
    .map(|id| find_claim(id).unwrap())
    .collect();
    let report = run_claims(&claims, &grid, &Budget::default()).unwrap();
    assert_eq!(report.entries.len(), 80);
    for e in &report.entries {
        assert_eq!(e.verdict, Verdict::BoundHolds, "{} {:?}", e.claim_id, e.notes);
    }
}

#[test]
fn empty_report_is_empty_array() {
    let mut grid = Grid::repetition_only(vec![]);
    grid.mattson_trials = 0;
    let claims = [find_claim("thm1-lee").unwrap()];
    let report = run_claims(&claims, &grid, &Budget::default()).unwrap();
    assert_eq!(report.to_json().unwrap().trim(), "[]");
}

/// Golden comparison of the default-grid report. Set `UPDATE_GOLDEN=1` to rewrite.
#[test]
fn default_report_matches_golden() {
    let mut report = run_suite(&Grid::default(), &Budget::default()).unwrap();
    report.stabilize();
    let json = report.to_json().unwrap();
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/default_report.json");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &json).unwrap();
    }
    let golden = std::fs::read_to_string(&path).expect("golden report; run with UPDATE_GOLDEN=1");
    assert!(json == golden, "default report differs from {}", path.display());
}
