//! Quaternion arithmetic underlying the hypercomplex image model.
//!
//! Uses the standard Hamilton basis table
//!
//! ```text
//! ij = -ji = k,   jk = -kj = i,   ki = -ik = j,
//! i^2 = j^2 = k^2 = ijk = -1.
//! ```
//!
//! Some texts print the third rule as `ki = -ik = -j`; that variant is
//! inconsistent with the first two under associativity (it breaks
//! `ijk = -1`), so the standard table is used throughout.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A quaternion `w + x*i + y*j + z*k` with `f64` components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    /// Scalar part.
    pub w: f64,
    /// i component.
    pub x: f64,
    /// j component.
    pub y: f64,
    /// k component.
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// Conjugate `w - x*i - y*j - z*k`.
    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Squared modulus `w^2 + x^2 + y^2 + z^2`.
    pub fn norm_sq(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Modulus (Euclidean norm of the four components).
    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Multiply every component by a real scalar.
    pub fn scale(self, c: f64) -> Self {
        Self::new(self.w * c, self.x * c, self.y * c, self.z * c)
    }

    /// True when the quaternion is pure (`w == 0`) with modulus 1, both
    /// within `tol`.
    pub fn is_pure_unit(self, tol: f64) -> bool {
        self.w.abs() <= tol && (self.norm() - 1.0).abs() <= tol
    }

    /// Exponential kernel `cos(theta) - axis * sin(theta)` for a pure unit
    /// `axis`. This is the basis function of the quaternion Fourier
    /// transforms; its modulus is always 1.
    ///
    /// Rejects axes that are not pure unit quaternions.
    pub fn kernel(axis: Quaternion, theta: f64) -> Result<Quaternion> {
        if !axis.is_pure_unit(1e-12) {
            return Err(Error::NonUnitAxis);
        }
        let (sin, cos) = theta.sin_cos();
        Ok(Self::new(cos, -axis.x * sin, -axis.y * sin, -axis.z * sin))
    }
}

impl Add for Quaternion {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.w + rhs.w,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }
}

impl Sub for Quaternion {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.w - rhs.w,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
        )
    }
}

impl Neg for Quaternion {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (self, rhs);
        Self::new(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;

    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}
