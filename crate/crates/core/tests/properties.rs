mod common;

use common::{interval_region, rel_diff};
use proptest::prelude::*;
use qtm_core::otto::otto_strokes;
use qtm_core::thermo::region_for_alpha_sq;
use qtm_core::{
    admissible_designs, alpha_bounds, alpha_squared, carnot_efficiency, classify_region, efficiency,
    gap_medium, otto_cycle_energies, ring_medium, ExchangeTriple, OperationalRegion,
    PhysicalConstants, QtmDesign, RingOttoSetup, DEFAULT_TOLERANCE,
};

fn design() -> impl Strategy<Value = QtmDesign> {
    prop::sample::select(QtmDesign::ALL.to_vec())
}

fn away_from(alpha_sq: f64, theta_sq: f64) -> bool {
    [1.0 / theta_sq, 1.0, theta_sq].iter().all(|t| ((alpha_sq - t) / t).abs() > 1e-6)
}

proptest! {
    #[test]
    fn classification_is_scale_invariant(
        e_high in 1e-3..1e3f64,
        ratio in 0.01..50.0f64,
        theta_sq in 1.1..20.0f64,
        factor in 1e-20..1e20f64,
    ) {
        // engine-like or pumper-like signs depending on the ratio side of θ²
        let (h, l) = if ratio < theta_sq { (e_high, -e_high / ratio) } else { (-e_high, e_high / ratio) };
        let ex = ExchangeTriple::new(h, l).unwrap();
        let a = classify_region(&ex, theta_sq, DEFAULT_TOLERANCE).unwrap();
        let b = classify_region(&ex.scaled(factor).unwrap(), theta_sq, DEFAULT_TOLERANCE).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!(rel_diff(alpha_squared(&ex).value(), ratio) < 1e-14);
    }

    #[test]
    fn region_agrees_with_alpha_sq_interval(alpha_sq in 1e-3..100.0f64, theta_sq in 1.1..20.0f64) {
        prop_assume!(away_from(alpha_sq, theta_sq));
        let region = region_for_alpha_sq(alpha_sq, theta_sq, DEFAULT_TOLERANCE).unwrap();
        prop_assert_eq!(region, interval_region(alpha_sq, theta_sq));
        for d in admissible_designs(region).unwrap() {
            prop_assert_eq!(d.region(), region);
            prop_assert!(alpha_bounds(d, theta_sq).unwrap().admits(alpha_sq));
        }
    }

    #[test]
    fn carnot_bounds_dominate_efficiency(d in design(), theta_sq in 1.1..20.0f64, u in 0.0..1.0f64) {
        let b = alpha_bounds(d, theta_sq).unwrap();
        let hi = if b.alpha_sq_max.is_infinite() { b.alpha_sq_min * 1e3 } else { b.alpha_sq_max };
        let alpha_sq = b.alpha_sq_min + u * (hi - b.alpha_sq_min);
        prop_assume!(alpha_sq > 0.0 && alpha_sq != 1.0 && b.admits(alpha_sq));
        let eff = efficiency(d, alpha_sq).unwrap();
        let carnot = carnot_efficiency(d, theta_sq).unwrap();
        let slack = 1e-12 * carnot.abs().max(eff.abs());
        match d {
            QtmDesign::Qll => prop_assert!(eff >= carnot - slack),
            _ => prop_assert!(eff <= carnot + slack),
        }
    }

    #[test]
    fn carnot_reached_at_bound(d in design(), theta_sq in 1.1..20.0f64) {
        let b = alpha_bounds(d, theta_sq).unwrap();
        let at = efficiency(d, b.carnot_alpha_sq).unwrap();
        prop_assert!(rel_diff(at, carnot_efficiency(d, theta_sq).unwrap()) < 1e-12);
    }

    #[test]
    fn paired_carnot_forms_are_symmetric(theta_sq in 1.1..100.0f64) {
        let c = |d| carnot_efficiency(d, theta_sq).unwrap();
        prop_assert!(rel_diff(c(QtmDesign::Qco), c(QtmDesign::Qre)) < 1e-14);
        prop_assert!(rel_diff(c(QtmDesign::Qht), c(QtmDesign::Qhp)) < 1e-14);
        prop_assert!((c(QtmDesign::Qen) + c(QtmDesign::Qll) - 1.0).abs() < 1e-14);
        prop_assert!((c(QtmDesign::Qho) - c(QtmDesign::Qdp) - 1.0).abs() < 1e-12 * c(QtmDesign::Qho));
    }

    #[test]
    fn efficiency_is_monotone_in_window(d in design(), a in 0.0..1.0f64, b in 0.0..1.0f64) {
        let (lo, hi) = d.region_interval();
        let hi = if hi.is_infinite() { lo * 100.0 } else { hi };
        let x = lo + (hi - lo) * a.min(b);
        let y = lo + (hi - lo) * a.max(b);
        prop_assume!(x > lo && y < hi && y > x * (1.0 + 1e-9));
        let (ex, ey) = (efficiency(d, x).unwrap(), efficiency(d, y).unwrap());
        let increasing = matches!(d, QtmDesign::Qco | QtmDesign::Qht | QtmDesign::Qen);
        if increasing { prop_assert!(ey > ex) } else { prop_assert!(ey < ex) }
    }

    #[test]
    fn otto_ratio_and_zero_crossing(
        gap_low in 0.05..5.0f64,
        alpha_sq in 0.01..20.0f64,
        t_low in 0.1..5.0f64,
        theta_sq in 1.05..20.0f64,
    ) {
        let m = gap_medium(gap_low, alpha_sq, 0.0, 0.0).unwrap();
        let e = otto_cycle_energies(&m, t_low, theta_sq, 1.0).unwrap();
        prop_assert!(rel_diff(e.e_high_gamma / e.e_low_gamma, -alpha_sq) < 1e-12);
        // heat flows in from TR^h exactly below the α² = θ² crossing
        prop_assume!(((alpha_sq - theta_sq) / theta_sq).abs() > 1e-9);
        prop_assert_eq!(e.e_high_gamma > 0.0, alpha_sq < theta_sq);
        prop_assert!((e.e_out - (e.e_high_gamma + e.e_low_gamma)).abs() <= 1e-15 * e.e_high_gamma.abs());
    }

    #[test]
    fn ground_offsets_do_not_change_exchanges(
        alpha_sq in 0.05..10.0f64,
        g_low in -5.0..5.0f64,
        g_high in -5.0..5.0f64,
    ) {
        let a = otto_cycle_energies(&gap_medium(1.0, alpha_sq, 0.0, 0.0).unwrap(), 1.0, 4.0, 1.0).unwrap();
        let b = otto_cycle_energies(&gap_medium(1.0, alpha_sq, g_low, g_high).unwrap(), 1.0, 4.0, 1.0).unwrap();
        prop_assert!(rel_diff(a.e_high_gamma, b.e_high_gamma) < 1e-12);
        prop_assert!(rel_diff(a.e_low_gamma, b.e_low_gamma) < 1e-12);
    }

    #[test]
    fn strokes_close_and_match_cycle(
        alpha_sq in 0.05..10.0f64,
        t_low in 0.2..3.0f64,
        theta_sq in 1.1..10.0f64,
    ) {
        let m = gap_medium(0.7, alpha_sq, 0.3, -0.2).unwrap();
        let s = otto_strokes(&m, t_low, theta_sq, 1.0).unwrap();
        let e = otto_cycle_energies(&m, t_low, theta_sq, 1.0).unwrap();
        let scale = s.magnitude().max(f64::MIN_POSITIVE);
        prop_assert!(s.net().abs() <= 1e-12 * scale);
        prop_assert!((s.heat_high - e.e_high_gamma).abs() <= 1e-12 * scale);
        prop_assert!((s.heat_low - e.e_low_gamma).abs() <= 1e-12 * scale);
        prop_assert!((s.work_in + s.work_out + e.e_out).abs() <= 1e-12 * scale);
    }

    #[test]
    fn ring_cycle_depends_on_rho_only_through_alpha(
        rho in 0.1..3.0f64,
        r_low in 5e-8..2e-7f64,
    ) {
        let c = PhysicalConstants::default();
        let setup = RingOttoSetup::from_rho(r_low, rho, 1.0, 5.0).unwrap();
        let ring = ring_medium(&setup, &c).unwrap();
        prop_assert!(rel_diff(ring.alpha_sq(), rho * rho) < 1e-14);
        let generic = gap_medium(ring.gap_low(), rho * rho, 0.0, 0.0).unwrap();
        let a = otto_cycle_energies(&ring, 1.0, 5.0, c.boltzmann_k).unwrap();
        let b = otto_cycle_energies(&generic, 1.0, 5.0, c.boltzmann_k).unwrap();
        prop_assert!(rel_diff(a.e_high_gamma, b.e_high_gamma) < 1e-10);
    }
}

#[test]
fn boundary_regions_have_no_designs() {
    for r in OperationalRegion::ALL.into_iter().filter(|r| r.is_boundary()) {
        assert!(admissible_designs(r).is_err());
    }
}
