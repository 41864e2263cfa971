//! Riesz kernels, power-law external fields, their gradients, and the
//! admissibility classification of a (kernel, field) pair.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::log_gamma;

/// Dimension and Riesz exponent of the interaction kernel
/// K_s(x) = sign(s) |x|^{-s} (s != 0), K_0(x) = -log |x|.
///
/// The exponent is restricted to s > -2, the regime where the energy
/// functional is strictly convex and the equilibrium measure is unique.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RieszParams {
    pub d: usize,
    pub s: f64,
}

impl RieszParams {
    pub fn new(d: usize, s: f64) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidInput("dimension d must be >= 1".into()));
        }
        if !s.is_finite() || s <= -2.0 {
            return Err(Error::UnsupportedRegime(format!(
                "Riesz exponent s = {s} must satisfy s > -2 (uniqueness is lost below)"
            )));
        }
        Ok(Self { d, s })
    }
}

/// Confining field V(x) = gamma |x|_p^alpha with gamma > 0, alpha > 0, p >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExternalField {
    pub gamma: f64,
    pub alpha: f64,
    pub p: f64,
}

impl ExternalField {
    /// Euclidean-norm field (p = 2).
    pub fn new(gamma: f64, alpha: f64) -> Result<Self> {
        Self::with_norm(gamma, alpha, 2.0)
    }

    pub fn with_norm(gamma: f64, alpha: f64, p: f64) -> Result<Self> {
        if !(gamma > 0.0) || !gamma.is_finite() {
            return Err(Error::InvalidInput(format!("gamma = {gamma} must be > 0")));
        }
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidInput(format!("alpha = {alpha} must be > 0")));
        }
        if !(p >= 1.0) || !p.is_finite() {
            return Err(Error::InvalidInput(format!("norm index p = {p} must be >= 1")));
        }
        Ok(Self { gamma, alpha, p })
    }

    pub fn norm(&self, x: &[f64]) -> f64 {
        if self.p == 2.0 {
            x.iter().map(|v| v * v).sum::<f64>().sqrt()
        } else {
            x.iter()
                .map(|v| v.abs().powf(self.p))
                .sum::<f64>()
                .powf(1.0 / self.p)
        }
    }
}

/// Classification of a (kernel, field) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Admissibility {
    /// An equilibrium measure exists and is not trapped at the origin.
    Admissible,
    /// The equilibrium measure collapses to the Dirac mass at the origin.
    DegeneratePointMass,
    /// No equilibrium measure exists (energy unbounded below).
    NonExistent,
}

/// Kernel value K_s at distance r.
///
/// For s >= 0 the kernel is singular at r = 0 and evaluating there is an
/// error. For s < 0 it vanishes at r = 0.
pub fn riesz_kernel(params: &RieszParams, r: f64) -> Result<f64> {
    if r < 0.0 {
        return Err(Error::Domain(format!("distance r = {r} must be >= 0")));
    }
    let s = params.s;
    if r == 0.0 {
        if s >= 0.0 {
            return Err(Error::Singularity(
                "Riesz kernel with s >= 0 is singular at r = 0".into(),
            ));
        }
        return Ok(0.0);
    }
    if s == 0.0 {
        Ok(-r.ln())
    } else {
        Ok(s.signum() * r.powf(-s))
    }
}

/// Gradient of the kernel at a separation vector:
/// grad K_s(x) = -|s| x / |x|^{s+2} for s != 0 and -x / |x|^2 for s = 0.
pub fn riesz_kernel_gradient(params: &RieszParams, diff: &[f64]) -> Result<Vec<f64>> {
    let r2: f64 = diff.iter().map(|v| v * v).sum();
    if r2 == 0.0 {
        return Err(Error::Singularity(
            "Riesz kernel gradient undefined at the zero vector".into(),
        ));
    }
    let s = params.s;
    let scale = if s == 0.0 {
        -1.0 / r2
    } else {
        -s.abs() * r2.sqrt().powf(-(s + 2.0))
    };
    Ok(diff.iter().map(|v| scale * v).collect())
}

/// Field value gamma (sum |x_i|^p)^{alpha/p}.
pub fn field_value(field: &ExternalField, x: &[f64]) -> f64 {
    field.gamma * field.norm(x).powf(field.alpha)
}

/// Gradient of the external field, with a flag for points where the field is
/// not differentiable (the flagged gradient is the zero subgradient so that
/// line searches can recover).
#[derive(Debug, Clone, PartialEq)]
pub struct FieldGradient {
    pub values: Vec<f64>,
    pub subgradient: bool,
}

/// Componentwise gradient gamma alpha |x|_p^{alpha-p} |x_i|^{p-1} sign(x_i);
/// for p = 2 this is the familiar alpha gamma |x|^{alpha-2} x.
pub fn field_gradient(field: &ExternalField, x: &[f64]) -> FieldGradient {
    let norm = field.norm(x);
    if norm == 0.0 {
        // At the origin the gradient exists (and is zero) only when alpha >= p.
        return FieldGradient {
            values: vec![0.0; x.len()],
            subgradient: field.alpha < field.p,
        };
    }
    if field.p == 1.0 && x.iter().any(|&v| v == 0.0) {
        // |x_i| contributes a kink whenever a component vanishes.
        return FieldGradient {
            values: vec![0.0; x.len()],
            subgradient: true,
        };
    }
    let scale = field.gamma * field.alpha * norm.powf(field.alpha - field.p);
    let values = x
        .iter()
        .map(|&v| {
            if v == 0.0 {
                0.0
            } else {
                scale * v.abs().powf(field.p - 1.0) * v.signum()
            }
        })
        .collect();
    FieldGradient {
        values,
        subgradient: false,
    }
}

/// Existence classification for the Euclidean field (p = 2).
///
/// For s >= 0 the pair is always admissible. For -2 < s < 0 the kernel is
/// bounded near zero but grows at infinity, and the field power decides:
/// alpha < |s| (or alpha = |s| with gamma < 1) leaves the energy unbounded
/// below, alpha = |s| with gamma >= 1 pins the measure at the origin, and
/// alpha > |s| is admissible.
pub fn admissibility(params: &RieszParams, field: &ExternalField) -> Result<Admissibility> {
    if field.p != 2.0 {
        return Err(Error::UnsupportedRegime(
            "admissibility classification is implemented for p = 2 only".into(),
        ));
    }
    let s = params.s;
    if s >= 0.0 {
        return Ok(Admissibility::Admissible);
    }
    let critical = -s;
    if (field.alpha - critical).abs() < 1e-14 {
        if field.gamma >= 1.0 {
            Ok(Admissibility::DegeneratePointMass)
        } else {
            Ok(Admissibility::NonExistent)
        }
    } else if field.alpha < critical {
        Ok(Admissibility::NonExistent)
    } else {
        Ok(Admissibility::Admissible)
    }
}

/// Coulomb normalization constant: c_2 = 2 pi, otherwise
/// c_d = (d - 2) |S^{d-1}| = (d - 2) 2 pi^{d/2} / Gamma(d/2).
pub fn coulomb_constant(d: usize) -> f64 {
    if d == 2 {
        return 2.0 * std::f64::consts::PI;
    }
    let df = d as f64;
    (df - 2.0) * unit_sphere_area(d)
}

/// Surface measure of the unit sphere S^{d-1} in R^d.
pub fn unit_sphere_area(d: usize) -> f64 {
    let df = d as f64;
    2.0 * std::f64::consts::PI.powf(df / 2.0) / log_gamma(df / 2.0).unwrap().exp()
}
