//! Comparison against independently computed arbitrary-precision reference
//! values (frozen under tests/data/ before the implementation existed).

use std::path::PathBuf;

use zeta_ladder::quadrature::{hl_integral, CheckpointStore};
use zeta_ladder::zeta::{theta, z};

fn data(name: &str) -> Vec<Vec<f64>> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|f| f.parse().expect("numeric field"))
                .collect()
        })
        .collect()
}

#[test]
fn z_matches_high_precision_oracle() {
    let rows = data("z_oracle.tsv");
    assert_eq!(rows.len(), 100);
    let mut worst: (f64, f64) = (0.0, 0.0);
    for row in rows {
        let (t, expect) = (row[0], row[1]);
        let got = z(t).unwrap().z;
        let err = (got - expect).abs();
        if err > worst.1 {
            worst = (t, err);
        }
    }
    assert!(
        worst.1 <= 1e-6,
        "worst |Z - oracle| = {:.3e} at t = {}",
        worst.1,
        worst.0
    );
}

#[test]
fn theta_matches_high_precision_oracle() {
    for row in data("theta_oracle.tsv") {
        let (t, expect) = (row[0], row[1]);
        let got = theta(t).unwrap();
        // the asymptotic branch (t >= 100) is good to ~1e-10 absolute; the
        // loggamma branch below is tighter; the relative term covers ulp
        // granularity once theta reaches ~1e7
        let tol = if t >= 100.0 { 1e-9 } else { 1e-10 } + 4.0 * f64::EPSILON * expect.abs();
        assert!(
            (got - expect).abs() <= tol,
            "theta({t}) = {got}, oracle {expect}"
        );
    }
}

#[test]
fn z_changes_sign_across_each_known_zero() {
    for row in data("zeros.tsv") {
        let gamma = row[0];
        let below = z(gamma - 1e-3).unwrap().z;
        let above = z(gamma + 1e-3).unwrap().z;
        assert!(
            below * above < 0.0,
            "no sign change across the zero at {gamma}"
        );
    }
}

#[test]
fn j_matches_independent_quadrature_oracle() {
    let rows = data("j_oracle.tsv");
    let mut store = CheckpointStore::new();
    for row in rows {
        let (t, expect) = (row[0], row[1]);
        let got = hl_integral(t, 1e-6, &mut store).unwrap().value;
        assert!(
            (got - expect).abs() <= 1e-4,
            "J({t}) = {got:.10}, oracle {expect:.10}, diff {:.3e}",
            (got - expect).abs()
        );
    }
}
