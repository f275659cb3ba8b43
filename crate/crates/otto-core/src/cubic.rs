//! Trigonometric roots of cubics with three real roots (casus irreducibilis).
//!
//! For `y³ + A y² + B y + C = 0` with `A² − 3B > 0` the roots are
//!
//! ```text
//! y_k = −A/3 + (2/3)·√(A² − 3B)·cos[(1/3)·arccos(−(2A³ − 9AB + 27C) / (2(A² − 3B)^{3/2})) + 2πk/3]
//! ```
//!
//! for `k ∈ {0, 1, 2}`. Only this regime is supported; there is no complex
//! Cardano path.

use core::f64::consts::PI;

use crate::{Error, Result};

/// Slack allowed on the arccos argument before it is treated as out of range.
pub const ARCCOS_CLAMP: f64 = 1e-12;

/// `18abcd − 4b³d + b²c² − 4ac³ − 27a²d²` for `a y³ + b y² + c y + d`.
pub fn discriminant(a: f64, b: f64, c: f64, d: f64) -> Result<f64> {
    if a == 0.0 || !a.is_finite() {
        return Err(Error::NotCubic);
    }
    Ok(18.0 * a * b * c * d - 4.0 * b * b * b * d + b * b * c * c
        - 4.0 * a * c * c * c
        - 27.0 * a * a * d * d)
}

/// `y³ + A y² + B y + C`, remembering the discriminant of the cubic it came
/// from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonicCubic {
    /// `A`
    pub quadratic: f64,
    /// `B`
    pub linear: f64,
    /// `C`
    pub constant: f64,
    /// Discriminant of the cubic before division by the leading coefficient.
    pub discriminant: f64,
}

impl MonicCubic {
    /// Normalizes `a y³ + b y² + c y + d` by `a`.
    pub fn from_coefficients(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let discriminant = discriminant(a, b, c, d)?;
        Ok(Self { quadratic: b / a, linear: c / a, constant: d / a, discriminant })
    }

    pub fn new(quadratic: f64, linear: f64, constant: f64) -> Self {
        // a = 1, so this cannot fail.
        let discriminant = 18.0 * quadratic * linear * constant
            - 4.0 * quadratic * quadratic * quadratic * constant
            + quadratic * quadratic * linear * linear
            - 4.0 * linear * linear * linear
            - 27.0 * constant * constant;
        Self { quadratic, linear, constant, discriminant }
    }

    pub fn eval(&self, y: f64) -> f64 {
        ((y + self.quadratic) * y + self.linear) * y + self.constant
    }

    pub fn residual(&self, y: f64) -> f64 {
        self.eval(y).abs()
    }
}

/// Phase offset `2πk/3` of the cosine form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TrigBranch(u8);

impl TrigBranch {
    pub const K0: TrigBranch = TrigBranch(0);
    pub const K1: TrigBranch = TrigBranch(1);
    pub const K2: TrigBranch = TrigBranch(2);
    pub const ALL: [TrigBranch; 3] = [Self::K0, Self::K1, Self::K2];

    pub fn new(k: u8) -> Option<Self> {
        (k < 3).then_some(TrigBranch(k))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn offset(self) -> f64 {
        2.0 * PI * f64::from(self.0) / 3.0
    }
}

fn clamp_arccos_arg(x: f64) -> Result<f64> {
    if !(x.abs() <= 1.0 + ARCCOS_CLAMP) {
        return Err(Error::NotTrigRegime { arccos_arg: x });
    }
    Ok(x.clamp(-1.0, 1.0))
}

/// `cos[(1/3)·arccos(x) + 2πk/3]`, with `x` clamped into `[−1, 1]` when it
/// is at most [`ARCCOS_CLAMP`] outside.
pub fn cos_third_arccos(x: f64, branch: TrigBranch) -> Result<f64> {
    let x = clamp_arccos_arg(x)?;
    Ok(libm::cos(libm::acos(x) / 3.0 + branch.offset()))
}

/// `(cos θ, cos 2θ)` for `θ = (1/3)·arccos(x)`, continued analytically to
/// `x > 1` where `θ` is imaginary and the cosines become `cosh`. The
/// continuation gives the single real root of a cubic whose discriminant has
/// turned negative.
pub fn third_angle_cosines(x: f64) -> Result<(f64, f64)> {
    if x > 1.0 {
        let y = libm::acosh(x) / 3.0;
        return Ok((libm::cosh(y), libm::cosh(2.0 * y)));
    }
    let x = clamp_arccos_arg(x)?;
    let theta = libm::acos(x) / 3.0;
    Ok((libm::cos(theta), libm::cos(2.0 * theta)))
}

/// `θ = (1/3)·arccos(−√(1 − e²))` for `e ∈ [0, 1]`, evaluated as
/// `(π − arcsin e)/3` so that small `e` keeps full precision.
pub(crate) fn third_angle_of_neg_sqrt(e: f64) -> f64 {
    (PI - libm::asin(e.clamp(0.0, 1.0))) / 3.0
}

/// `(cos θ, cos 2θ)` for `θ = (1/3)·arccos(2r² − 1)`, `r ≥ 0`.
///
/// `arccos(2r² − 1) = π − 2·arcsin r` for `r ≤ 1`; past `r = 1` the argument
/// exceeds one and the continuation `arcosh(2r² − 1) = 2·arcosh r` is used
/// (see [`third_angle_cosines`]).
pub(crate) fn third_angle_of_double(r: f64) -> (f64, f64) {
    if r > 1.0 {
        let y = 2.0 * libm::acosh(r) / 3.0;
        (libm::cosh(y), libm::cosh(2.0 * y))
    } else {
        let theta = (PI - 2.0 * libm::asin(r.max(0.0))) / 3.0;
        (libm::cos(theta), libm::cos(2.0 * theta))
    }
}

/// The root on `branch` of a cubic with three real roots.
pub fn trig_root(m: &MonicCubic, branch: TrigBranch) -> Result<f64> {
    let (a, b, c) = (m.quadratic, m.linear, m.constant);
    let p = a * a - 3.0 * b;
    if !(p > 0.0) {
        return Err(Error::Domain { what: "A² − 3B", value: p });
    }
    let arg = -(2.0 * a * a * a - 9.0 * a * b + 27.0 * c) / (2.0 * p * libm::sqrt(p));
    let cos = cos_third_arccos(arg, branch)?;
    Ok(-a / 3.0 + 2.0 / 3.0 * libm::sqrt(p) * cos)
}

/// All three branch roots in ascending order.
pub fn all_roots(m: &MonicCubic) -> Result<[f64; 3]> {
    let mut roots = [0.0; 3];
    for (slot, branch) in roots.iter_mut().zip(TrigBranch::ALL) {
        *slot = trig_root(m, branch)?;
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `(2−τ)z³ − 3τz + 2τ²`, the stationarity cubic of the sudden-compression
    /// efficiency.
    fn sc_cubic(tau: f64) -> MonicCubic {
        MonicCubic::from_coefficients(2.0 - tau, 0.0, -3.0 * tau, 2.0 * tau * tau).unwrap()
    }

    /// `2z³ − 3τz² + τ(2τ−1)`.
    fn se_cubic(tau: f64) -> MonicCubic {
        MonicCubic::from_coefficients(2.0, -3.0 * tau, 0.0, tau * (2.0 * tau - 1.0)).unwrap()
    }

    fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
        let flo = f(lo);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (f(mid) > 0.0) == (flo > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn discriminant_examples() {
        // monic SC form at τ = 0.5 is y³ − y + 1/3; the closed form belongs to the
        // unnormalized (2−τ)z³ − 3τz + 2τ².
        let d = discriminant(1.5, 0.0, -1.5, 0.5).unwrap();
        assert!((d - 5.0625).abs() < 1e-12);
        assert_eq!(sc_cubic(0.5).discriminant, d);
        assert_eq!(discriminant(1.0, 0.0, -3.0, 2.0).unwrap(), 0.0);
        assert!((se_cubic(0.75).discriminant - 1.8984375).abs() < 1e-12);
        assert_eq!(discriminant(0.0, 1.0, 1.0, 1.0), Err(Error::NotCubic));
    }

    #[test]
    fn double_root_factorization() {
        let m = MonicCubic::new(0.0, -3.0, 2.0);
        assert!((trig_root(&m, TrigBranch::K0).unwrap() - 1.0).abs() < 1e-12);
        assert!((trig_root(&m, TrigBranch::K1).unwrap() + 2.0).abs() < 1e-12);
        let r = all_roots(&m).unwrap();
        assert!((r[0] + 2.0).abs() < 1e-12);
        assert!((r[1] - 1.0).abs() < 1e-7 && (r[2] - 1.0).abs() < 1e-7);
    }

    #[test]
    fn sc_root_matches_bisection_and_specialized_form() {
        let tau = 0.5;
        let m = sc_cubic(tau);
        let root = trig_root(&m, TrigBranch::K0).unwrap();
        let oracle = bisect(|z| m.eval(z), 0.5, 1.0);
        assert!((root - oracle).abs() < 1e-13);
        assert!((root - 0.742227).abs() < 1e-6);
        let special = 2.0 * libm::sqrt(tau / (2.0 - tau))
            * libm::cos(libm::acos(-libm::sqrt(tau * (2.0 - tau))) / 3.0);
        assert!((root - special).abs() < 1e-14);
        for r in all_roots(&m).unwrap() {
            assert!(m.residual(r) <= 1e-10);
        }
    }

    #[test]
    fn se_cubic_contains_fridge_root() {
        let m = se_cubic(0.75);
        let oracle = bisect(|z| m.eval(z), 0.3, 0.7);
        assert!((oracle - 0.594519).abs() < 1e-6);
        let roots = all_roots(&m).unwrap();
        assert!(roots.iter().any(|r| (r - oracle).abs() < 1e-12));
    }

    #[test]
    fn out_of_regime() {
        // y³ + y + 1: A² − 3B < 0
        assert!(matches!(
            trig_root(&MonicCubic::new(0.0, 1.0, 1.0), TrigBranch::K0),
            Err(Error::Domain { .. })
        ));
        // y³ − 3y + 3: one real root, |arg| = 1.5
        assert!(matches!(
            trig_root(&MonicCubic::new(0.0, -3.0, 3.0), TrigBranch::K0),
            Err(Error::NotTrigRegime { .. })
        ));
        assert!(cos_third_arccos(1.0 + 5e-13, TrigBranch::K0).is_ok());
        assert!(cos_third_arccos(1.0 + 1e-11, TrigBranch::K0).is_err());
    }

    #[test]
    fn continuation_is_continuous_at_one() {
        let (c_in, c2_in) = third_angle_cosines(1.0 - 1e-14).unwrap();
        let (c_out, c2_out) = third_angle_cosines(1.0 + 1e-14).unwrap();
        assert!((c_in - c_out).abs() < 1e-7 && (c2_in - c2_out).abs() < 1e-7);
        assert!(third_angle_cosines(-1.1).is_err());
    }

    #[test]
    fn branch_indices() {
        assert_eq!(TrigBranch::new(2), Some(TrigBranch::K2));
        assert_eq!(TrigBranch::new(3), None);
        assert!((TrigBranch::K2.offset() - 4.0 * PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn stable_angles_agree_with_naive_arccos() {
        for &e in &[0.05, 0.3, 0.5, 0.77, 0.99] {
            let naive = libm::acos(-libm::sqrt(1.0 - e * e)) / 3.0;
            assert!((third_angle_of_neg_sqrt(e) - naive).abs() < 1e-12);
        }
        for &r in &[0.1, 0.6, 0.999, 1.0, 1.3, 4.0] {
            let (c, c2) = third_angle_of_double(r);
            let (nc, nc2) = third_angle_cosines(2.0 * r * r - 1.0).unwrap();
            assert!((c - nc).abs() < 1e-7 && (c2 - nc2).abs() < 1e-7, "r = {r}");
        }
    }
}
