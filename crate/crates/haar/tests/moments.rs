use wg_core::coeff::Rational;
use wg_core::table::Group;
use wg_haar::*;

fn unitary(tau: usize, i: &[usize], j: &[usize], ic: &[usize], jc: &[usize]) -> Rational {
    Predictor::new(Group::Unitary, tau)
        .unwrap()
        .predict(&Indices::unitary(i, j, ic, jc))
        .unwrap()
}

fn orthogonal(tau: usize, i: &[usize], j: &[usize]) -> Rational {
    Predictor::new(Group::Orthogonal, tau)
        .unwrap()
        .predict(&Indices::orthogonal(i, j))
        .unwrap()
}

#[test]
fn closed_form_predictions() {
    assert_eq!(unitary(3, &[1], &[1], &[1], &[1]), Rational::new(1, 3));
    assert_eq!(orthogonal(4, &[1, 1], &[1, 1]), Rational::new(1, 4));
    // E|U11|^2 |U22|^2 = Wg(1,1) at τ = 3
    assert_eq!(unitary(3, &[1, 2], &[1, 2], &[1, 2], &[1, 2]), Rational::new(1, 8));
    // E|U11|^2 |U12|^2 = Wg(1,1) + Wg(2)
    assert_eq!(unitary(3, &[1, 1], &[1, 2], &[1, 1], &[1, 2]), Rational::new(1, 12));
    // E|U11|^4 = 2 / (τ(τ+1))
    assert_eq!(unitary(3, &[1, 1], &[1, 1], &[1, 1], &[1, 1]), Rational::new(1, 6));
    // E O11^4 = 3 / (τ(τ+2))
    assert_eq!(orthogonal(4, &[1, 1, 1, 1], &[1, 1, 1, 1]), Rational::new(1, 8));
}

#[test]
fn vanishing_predictions() {
    assert_eq!(unitary(3, &[1, 2], &[1, 1], &[1], &[1]), Rational::from_int(0));
    assert_eq!(orthogonal(4, &[1, 2, 1], &[1, 1, 1]), Rational::from_int(0));
    assert_eq!(unitary(3, &[1], &[1], &[2], &[1]), Rational::from_int(0));
}

#[test]
fn invalid_indices() {
    let mut p = Predictor::new(Group::Unitary, 2).unwrap();
    assert!(p.predict(&Indices::unitary(&[3], &[1], &[1], &[1])).is_err());
    assert!(p.predict(&Indices::unitary(&[1, 1], &[1], &[1], &[1])).is_err());
    let mut q = Predictor::new(Group::Orthogonal, 2).unwrap();
    assert!(q.predict(&Indices::unitary(&[1], &[1], &[1], &[1])).is_err());
    assert!(Predictor::new(Group::Unitary, 0).is_err());
}

#[test]
fn grids_are_deduplicated() {
    assert_eq!(degree_grid(Group::Unitary, 3, 2).len(), 45 * 45);
    assert_eq!(degree_grid(Group::Orthogonal, 4, 2).len(), 3876);
}

#[test]
fn unbalanced_and_odd_moments_estimate_zero() {
    let u = estimate_batch(
        Group::Unitary,
        3,
        &[Indices::unitary(&[1, 2], &[1, 1], &[1], &[1]), Indices::unitary(&[1], &[1], &[], &[])],
        50_000,
        3,
    )
    .unwrap();
    let o = estimate_batch(
        Group::Orthogonal,
        4,
        &[Indices::orthogonal(&[1], &[1]), Indices::orthogonal(&[1, 1, 2], &[1, 2, 2])],
        50_000,
        3,
    )
    .unwrap();
    for r in u.iter().chain(&o) {
        assert_eq!(r.exact, Rational::from_int(0));
        assert!(r.within(4.0), "{}", r.to_json());
    }
}

#[test]
fn report_json_shape() {
    let spec = MomentSpec {
        group: Group::Orthogonal,
        tau: 4,
        indices: Indices::orthogonal(&[1, 1], &[1, 1]),
        samples: 1000,
        seed: 7,
    };
    let r = estimate_moment(&spec).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["spec", "estimate", "stderr", "exact", "z", "samples", "seed"]);
    assert_eq!(v["exact"], "1/4");
    let back: MomentSpec = serde_json::from_value(v["spec"].clone()).unwrap();
    assert_eq!(back, spec);
    assert!(estimate_moment(&MomentSpec { samples: 10, ..spec }).is_err());
}

#[test]
fn false_alarm_rate_at_four_sigma() {
    assert!((false_alarm_rate(4.0) - 6.334e-5).abs() < 1e-8);
}
