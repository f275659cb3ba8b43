//! Single operating points as flat JSON objects.
//!
//! Keys (engine): `device`, `regime`, `eta_c`, `tau`, `eta_omega`, `r_omega`,
//! and for sc/se also `eta_mw`, `eta_max`, `r_mw`, `z_star_omega`,
//! `z_star_mw`, `z_star_max`, `omega_value` (Omega at `z_star_omega`).
//! Keys (fridge): `device`, `regime`, `zeta_c`, `tau`, `cop_omega`, and for
//! sc/se also `cop_max`, `z_star_omega`, `z_star_max`, `omega_value`.
//! Closed-form intermediates appear as `trace_<symbol>`. With `--z` the
//! point at that compression ratio is added as `z`, `eta`/`cop`, `w`/`w_in`,
//! `q_h`/`q_c` and `omega_at_z`.

use otto_core::engine::{
    engine_point, eta_at_max_omega, eta_max, eta_max_work, fractional_loss, fractional_loss_max_work,
    omega_objective, z_star_max_eta, z_star_max_work,
};
use otto_core::fridge::{cop_at_max_omega, cop_max, fridge_point, omega_objective_fridge, z_star_max_cop};
use otto_core::{Device, Error, Regime, Trace};
use serde_json::{Map, Value};

use crate::sweep::device_tag;

type Object = Map<String, Value>;

fn put(obj: &mut Object, key: &str, value: f64) {
    if let Some(n) = serde_json::Number::from_f64(value) {
        obj.insert(key.to_string(), Value::Number(n));
    }
}

fn put_trace(obj: &mut Object, trace: &Trace) {
    for (symbol, value) in trace.iter() {
        put(obj, &format!("trace_{symbol}"), value);
    }
}

fn header(device: Device, regime: Regime) -> Object {
    let mut obj = Object::new();
    obj.insert("device".into(), device_tag(device).into());
    obj.insert("regime".into(), regime.tag().into());
    obj
}

fn needs_asymmetric(regime: Regime) -> otto_core::Result<otto_core::SuddenStroke> {
    regime.sudden_stroke().ok_or(Error::InfeasibleDevice {
        reason: "a compression ratio query needs the sc or se regime",
    })
}

pub fn engine_json(regime: Regime, eta_c: f64, z: Option<f64>) -> otto_core::Result<Object> {
    let mut obj = header(Device::Engine, regime);
    let omega = eta_at_max_omega(regime, eta_c)?;
    let tau = 1.0 - eta_c;
    put(&mut obj, "eta_c", eta_c);
    put(&mut obj, "tau", tau);
    put(&mut obj, "eta_omega", omega.value);
    put(&mut obj, "r_omega", fractional_loss(omega.value, eta_c)?);
    put_trace(&mut obj, &omega.trace);
    if let Some(stroke) = regime.sudden_stroke() {
        let max = eta_max(stroke, tau)?;
        put(&mut obj, "eta_mw", eta_max_work(stroke, eta_c)?);
        put(&mut obj, "eta_max", max.value);
        put(&mut obj, "r_mw", fractional_loss_max_work(stroke, eta_c)?);
        if let Some(zo) = omega.trace.get("z_star") {
            put(&mut obj, "z_star_omega", zo);
            put(&mut obj, "omega_value", omega_objective(stroke, zo, tau)?);
        }
        put(&mut obj, "z_star_mw", z_star_max_work(stroke, tau)?);
        let zm = z_star_max_eta(stroke, tau)?;
        put(&mut obj, "z_star_max", zm.value);
        for (symbol, value) in zm.trace.iter().chain(max.trace.iter()) {
            if symbol != "z_star" {
                put(&mut obj, &format!("trace_{symbol}"), value);
            }
        }
    }
    if let Some(z) = z {
        let stroke = needs_asymmetric(regime)?;
        let p = engine_point(stroke, z, tau)?;
        put(&mut obj, "z", p.z);
        put(&mut obj, "eta", p.eta);
        put(&mut obj, "w", p.w);
        put(&mut obj, "q_h", p.q_h);
        put(&mut obj, "omega_at_z", p.omega_value);
    }
    Ok(obj)
}

pub fn fridge_json(regime: Regime, zeta_c: f64, z: Option<f64>) -> otto_core::Result<Object> {
    let mut obj = header(Device::Fridge, regime);
    let omega = cop_at_max_omega(regime, zeta_c)?;
    let tau = zeta_c / (1.0 + zeta_c);
    put(&mut obj, "zeta_c", zeta_c);
    put(&mut obj, "tau", tau);
    put(&mut obj, "cop_omega", omega.value);
    put_trace(&mut obj, &omega.trace);
    if let Some(stroke) = regime.sudden_stroke() {
        let zo = omega.trace.get(if stroke.regime() == Regime::SuddenCompression { "M" } else { "Y" });
        if let Some(zo) = zo {
            put(&mut obj, "z_star_omega", zo);
            put(&mut obj, "omega_value", omega_objective_fridge(stroke, zo, tau)?);
        }
        put(&mut obj, "cop_max", cop_max(stroke, zeta_c)?.value);
        put(&mut obj, "z_star_max", z_star_max_cop(stroke, zeta_c)?.value);
    } else if let Some(p) = omega.trace.get("P") {
        put(&mut obj, "z_star_omega", p);
    }
    if let Some(z) = z {
        let stroke = needs_asymmetric(regime)?;
        let p = fridge_point(stroke, z, tau)?;
        put(&mut obj, "z", p.z);
        put(&mut obj, "cop", p.zeta);
        put(&mut obj, "w_in", p.w_in);
        put(&mut obj, "q_c", p.q_c);
        put(&mut obj, "omega_at_z", p.omega_value);
    }
    Ok(obj)
}

pub fn point_json(device: Device, regime: Regime, value: f64, z: Option<f64>) -> otto_core::Result<Object> {
    match device {
        Device::Engine => engine_json(regime, value, z),
        Device::Fridge => fridge_json(regime, value, z),
    }
}

/// `{"error": <kind>, "message": <text>}`.
pub fn error_json(kind: &str, message: &str) -> Object {
    let mut obj = Object::new();
    obj.insert("error".into(), kind.into());
    obj.insert("message".into(), message.into());
    obj
}
