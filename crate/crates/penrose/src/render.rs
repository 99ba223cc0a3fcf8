//! Float render basis. Nothing here feeds back into a membership decision.

use std::f64::consts::PI;

use penrose_core::golden::TAU_F64;
use penrose_core::{InternalPoint, LatticePoint};

#[derive(Clone, Debug, PartialEq)]
pub struct RenderBasis {
    /// `e_j = (cos 2π(j-1)/5, sin 2π(j-1)/5)`.
    pub e: [[f64; 2]; 5],
    /// `(cos 4π(j-1)/5, sin 4π(j-1)/5)`, for internal-space plots.
    pub doubled: [[f64; 2]; 5],
    /// `cos(π/5) = τ/2`
    pub c: f64,
    pub s: f64,
    /// `cos(2π/5) = (τ - 1)/2`
    pub c_prime: f64,
    pub s_prime: f64,
    /// `√(2/5)`
    pub rho: f64,
    /// `√(5/2)`, the factor between the unit lattice and unit edges.
    pub kappa: f64,
}

impl RenderBasis {
    pub fn new() -> Self {
        let at = |theta: f64| [theta.cos(), theta.sin()];
        RenderBasis {
            e: std::array::from_fn(|j| at(2.0 * PI * j as f64 / 5.0)),
            doubled: std::array::from_fn(|j| at(4.0 * PI * j as f64 / 5.0)),
            c: TAU_F64 / 2.0,
            s: (PI / 5.0).sin(),
            c_prime: (TAU_F64 - 1.0) / 2.0,
            s_prime: (2.0 * PI / 5.0).sin(),
            rho: (0.4f64).sqrt(),
            kappa: (2.5f64).sqrt(),
        }
    }

    fn combine(vs: &[[f64; 2]; 5], x: &[f64; 5]) -> [f64; 2] {
        let mut p = [0.0; 2];
        for (v, c) in vs.iter().zip(x) {
            p[0] += c * v[0];
            p[1] += c * v[1];
        }
        p
    }

    /// `Σ x_j e_j`; lattice steps become unit edges.
    pub fn physical(&self, x: &LatticePoint) -> [f64; 2] {
        Self::combine(&self.e, &x.coords().map(|c| c as f64))
    }

    /// `Σ x_j e_j` for a real 5-vector.
    pub fn physical_f64(&self, x: &[f64; 5]) -> [f64; 2] {
        Self::combine(&self.e, x)
    }

    /// Internal-space picture of `z = π'x` on the doubled-angle star, at the
    /// same scale as [`RenderBasis::physical`].
    pub fn internal(&self, z: &InternalPoint) -> [f64; 2] {
        Self::combine(&self.doubled, &z.to_f64())
    }
}

impl Default for RenderBasis {
    fn default() -> Self {
        Self::new()
    }
}

pub fn render_physical(x: &LatticePoint) -> [f64; 2] {
    RenderBasis::new().physical(x)
}
