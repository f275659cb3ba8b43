use otto_core::cubic::{all_roots, trig_root, MonicCubic, TrigBranch};
use otto_core::cycle::{
    energy_ledger, feasible_interval, high_t_engine_quantities, high_t_fridge_quantities,
    CycleConfig, ReducedParams,
};
use otto_core::engine::{eta_at_max_omega, eta_ht, eta_max, eta_max_work};
use otto_core::fridge::{cop_at_max_omega, cop_ht, cop_max};
use otto_core::{Device, Regime, StrokeProtocol, SuddenStroke};
use proptest::prelude::*;

fn regime() -> impl Strategy<Value = Regime> {
    prop::sample::select(Regime::ALL.to_vec())
}

fn stroke() -> impl Strategy<Value = SuddenStroke> {
    prop::sample::select(SuddenStroke::ALL.to_vec())
}

proptest! {
    #[test]
    fn first_law_holds(
        beta_h in 0.01f64..5.0,
        ratio in 1.0f64..20.0,
        omega_h in 0.1f64..10.0,
        z in 0.01f64..1.0,
        regime in regime(),
    ) {
        let cfg = CycleConfig::with_regime(beta_h * ratio, beta_h, z * omega_h, omega_h, regime).unwrap();
        let l = energy_ledger(&cfg);
        let scale = l.h_a.abs() + l.h_b.abs() + l.h_c.abs() + l.h_d.abs();
        prop_assert!((l.w_net - (l.q_h + l.q_c)).abs() <= 1e-12 * scale);
        prop_assert!((l.q_h - (l.h_c - l.h_b)).abs() <= 1e-12 * scale);
    }

    #[test]
    fn sudden_switch_never_helps(
        beta_h in 0.01f64..5.0,
        ratio in 1.0f64..20.0,
        z in 0.05f64..1.0,
        stroke in stroke(),
    ) {
        let adi = energy_ledger(&CycleConfig::with_regime(beta_h * ratio, beta_h, z, 1.0, Regime::Adiabatic).unwrap());
        let sudden = energy_ledger(&CycleConfig::with_regime(beta_h * ratio, beta_h, z, 1.0, stroke.regime()).unwrap());
        let both = energy_ledger(&CycleConfig::with_regime(beta_h * ratio, beta_h, z, 1.0, Regime::SuddenSwitch).unwrap());
        let tol = 1e-12 * (1.0 + adi.w_net.abs());
        prop_assert!(sudden.w_net <= adi.w_net + tol);
        prop_assert!(both.w_net <= sudden.w_net + tol);
    }

    #[test]
    fn high_t_limit_matches_ledger(tau in 0.05f64..0.95, z in 0.1f64..1.0, stroke in stroke()) {
        let beta_h = 1e-3 / 1.0;
        let cfg = CycleConfig::with_regime(beta_h / tau, beta_h, z, 1.0, stroke.regime()).unwrap();
        let l = energy_ledger(&cfg);
        let p = ReducedParams::new(z, tau).unwrap();
        let ht = high_t_engine_quantities(stroke, &p);
        prop_assert!((l.q_h * beta_h - ht.q_h).abs() <= 1e-5 * (1.0 + ht.q_h.abs()) / tau.min(z * z));
        prop_assert!((l.w_net * beta_h - ht.w).abs() <= 1e-5 / tau.min(z * z));
        let f = high_t_fridge_quantities(stroke, &p);
        prop_assert!((l.q_c * beta_h - f.q_c).abs() <= 1e-5 / tau.min(z * z));
        prop_assert!((-l.w_net * beta_h - f.w_in).abs() <= 1e-5 / tau.min(z * z));
    }

    #[test]
    fn feasible_points_are_feasible(tau in 0.01f64..0.99, t in 0.0f64..1.0, regime in regime()) {
        let (c, e) = regime.protocols();
        for device in [Device::Engine, Device::Fridge] {
            let i = feasible_interval(device, regime, tau).unwrap();
            if i.is_empty() {
                continue;
            }
            let z = i.lo + (i.hi - i.lo) * (0.001 + 0.998 * t);
            let l = otto_core::cycle::high_t_ledger(c, e, &ReducedParams::new(z, tau).unwrap());
            match device {
                Device::Engine => prop_assert!(l.w_net > 0.0 && l.q_h > 0.0, "{regime:?} z={z} τ={tau}"),
                Device::Fridge => prop_assert!(l.q_c > 0.0 && l.w_net < 0.0, "{regime:?} z={z} τ={tau}"),
            }
        }
    }

    #[test]
    fn efficiency_bounded_by_carnot(tau in 0.01f64..0.99, t in 0.001f64..0.999, stroke in stroke()) {
        let i = feasible_interval(Device::Engine, stroke.regime(), tau).unwrap();
        let z = i.lo + (i.hi - i.lo) * t;
        let eta = eta_ht(stroke, z, tau).unwrap();
        prop_assert!(eta > 0.0 && eta <= eta_max(stroke, tau).unwrap().value + 1e-12);
        prop_assert!(eta < 1.0 - tau);
    }

    #[test]
    fn cop_bounded_by_carnot(zeta_c in 1.001f64..20.0, t in 0.001f64..0.999, stroke in stroke()) {
        let tau = zeta_c / (1.0 + zeta_c);
        let i = feasible_interval(Device::Fridge, stroke.regime(), tau).unwrap();
        let z = i.hi * t;
        let cop = cop_ht(stroke, z, tau).unwrap();
        prop_assert!(cop > 0.0 && cop <= cop_max(stroke, zeta_c).unwrap().value * (1.0 + 1e-12));
        prop_assert!(cop < zeta_c);
    }

    #[test]
    fn engine_orderings(eta_c in 0.01f64..0.99) {
        let v = |r| eta_at_max_omega(r, eta_c).unwrap().value;
        prop_assert!(v(Regime::Adiabatic) > v(Regime::SuddenCompression));
        prop_assert!(v(Regime::SuddenCompression) > v(Regime::SuddenExpansion));
        prop_assert!(v(Regime::SuddenExpansion) > v(Regime::SuddenSwitch));
        for stroke in SuddenStroke::ALL {
            let mw = eta_max_work(stroke, eta_c).unwrap();
            let om = v(stroke.regime());
            let mx = eta_max(stroke, 1.0 - eta_c).unwrap().value;
            prop_assert!(mw < om && om < mx && mx < eta_c, "{stroke:?} {mw} {om} {mx}");
        }
    }

    #[test]
    fn fridge_orderings(zeta_c in 1.01f64..9.0) {
        let v = |r| cop_at_max_omega(r, zeta_c).unwrap().value;
        prop_assert!(v(Regime::Adiabatic) > v(Regime::SuddenCompression));
        prop_assert!(v(Regime::SuddenCompression) > v(Regime::SuddenExpansion));
        prop_assert!(v(Regime::SuddenExpansion) > v(Regime::SuddenSwitch));
        for stroke in SuddenStroke::ALL {
            let om = v(stroke.regime());
            let mx = cop_max(stroke, zeta_c).unwrap().value;
            prop_assert!(om < mx && mx < zeta_c);
        }
    }

    #[test]
    fn trig_roots_solve_cubic(r1 in -10.0f64..10.0, d1 in 1e-3f64..5.0, d2 in 1e-3f64..5.0) {
        let (r2, r3) = (r1 + d1, r1 + d1 + d2);
        let m = MonicCubic::new(-(r1 + r2 + r3), r1 * r2 + r2 * r3 + r1 * r3, -r1 * r2 * r3);
        let scale = 1.0 + m.constant.abs();
        for branch in TrigBranch::ALL {
            let y = trig_root(&m, branch).unwrap();
            prop_assert!(m.residual(y) <= 1e-10 * scale * (1.0 + y.abs()).powi(3));
        }
        let roots = all_roots(&m).unwrap();
        let sum: f64 = roots.iter().sum();
        prop_assert!((sum + m.quadratic).abs() <= 1e-9 * (1.0 + m.quadratic.abs()));
        let product = roots[0] * roots[1] * roots[2];
        prop_assert!((product + m.constant).abs() <= 1e-8 * scale);
    }

    #[test]
    fn adiabaticity_at_least_one(omega_c in 0.01f64..10.0, gap in 0.0f64..10.0) {
        for protocol in [StrokeProtocol::Adiabatic, StrokeProtocol::SuddenSwitch] {
            let l = otto_core::cycle::adiabaticity(protocol, omega_c, omega_c + gap).unwrap();
            prop_assert!(l >= 1.0);
        }
    }
}
