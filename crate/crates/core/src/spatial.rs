//! Six-dimensional wrench/twist algebra for planar-rotation frame placements.
//!
//! Wrenches are ordered `(Fx, Fy, Fz, Mx, My, Mz)` and twists
//! `(dx, dy, dz, θx, θy, θz)`. Units are fixed to N, mm and rad throughout the
//! crate; degree inputs are converted by the file parser only.
//!
//! A [`FramePlacement`] carries a member (or limb tip) frame onto a target
//! frame: the member frame is rotated by `theta` about z and `r` points from the
//! member origin to the target origin, expressed in target coordinates.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Index};

use nalgebra::{Matrix3, Matrix6, Vector6};

use crate::error::{Error, Result};

pub type Vec3 = nalgebra::Vector3<f64>;

/// Largest condition number accepted by [`invert`].
pub const MAX_CONDITION: f64 = 1e12;

/// Rotation about z followed by a displacement, as used by the amplification
/// matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FramePlacement {
    theta: f64,
    r: Vec3,
}

impl FramePlacement {
    pub fn new(theta: f64, r: Vec3) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::InvalidPlacement(format!("non-finite angle {theta}")));
        }
        if !r.iter().all(|c| c.is_finite()) {
            return Err(Error::InvalidPlacement(format!(
                "non-finite displacement ({}, {}, {})",
                r.x, r.y, r.z
            )));
        }
        // fmod keeps the sign, so the result lies in (-2π, 2π)
        Ok(Self { theta: theta % TAU, r })
    }

    pub fn from_degrees(theta_deg: f64, r: Vec3) -> Result<Self> {
        Self::new(theta_deg.to_radians(), r)
    }

    pub fn identity() -> Self {
        Self {
            theta: 0.0,
            r: Vec3::zeros(),
        }
    }

    pub fn translation(r: Vec3) -> Result<Self> {
        Self::new(0.0, r)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn r(&self) -> Vec3 {
        self.r
    }

    /// Placement equivalent to applying `inner` first and then `self`.
    ///
    /// `amplification_force(outer.compose(&inner)) ==
    ///  amplification_force(outer) * amplification_force(inner)`.
    pub fn compose(&self, inner: &FramePlacement) -> FramePlacement {
        FramePlacement {
            theta: (self.theta + inner.theta) % TAU,
            r: self.r + rot_z(self.theta) * inner.r,
        }
    }

    pub fn inverse(&self) -> FramePlacement {
        FramePlacement {
            theta: -self.theta,
            r: -(rot_z(self.theta).transpose() * self.r),
        }
    }
}

impl Default for FramePlacement {
    fn default() -> Self {
        Self::identity()
    }
}

pub fn rot_z(theta: f64) -> Matrix3<f64> {
    let (s, c) = theta.sin_cos();
    Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0)
}

/// Moment-transfer operator with the sign convention
/// `S(r) = [[0, rz, -ry], [-rz, 0, rx], [ry, -rx, 0]]`, i.e. `S(r) v = -r × v`.
pub fn s_matrix(r: &Vec3) -> Matrix3<f64> {
    Matrix3::new(0.0, r.z, -r.y, -r.z, 0.0, r.x, r.y, -r.x, 0.0)
}

/// Wrench amplification `[R, 0; S(r) R, R]`.
pub fn amplification_force(p: &FramePlacement) -> Matrix6<f64> {
    let rot = rot_z(p.theta);
    let mut j = Matrix6::zeros();
    j.fixed_view_mut::<3, 3>(0, 0).copy_from(&rot);
    j.fixed_view_mut::<3, 3>(3, 3).copy_from(&rot);
    j.fixed_view_mut::<3, 3>(3, 0).copy_from(&(s_matrix(&p.r) * rot));
    j
}

/// Twist amplification, the inverse transpose of [`amplification_force`].
///
/// Closed form `[R, S(r) R; 0, R]`.
pub fn amplification_displacement(p: &FramePlacement) -> Matrix6<f64> {
    let rot = rot_z(p.theta);
    let mut j = Matrix6::zeros();
    j.fixed_view_mut::<3, 3>(0, 0).copy_from(&rot);
    j.fixed_view_mut::<3, 3>(3, 3).copy_from(&rot);
    j.fixed_view_mut::<3, 3>(0, 3).copy_from(&(s_matrix(&p.r) * rot));
    j
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Compliance,
    Stiffness,
}

impl MatrixKind {
    pub fn flipped(self) -> Self {
        match self {
            MatrixKind::Compliance => MatrixKind::Stiffness,
            MatrixKind::Stiffness => MatrixKind::Compliance,
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixKind::Compliance => "compliance",
            MatrixKind::Stiffness => "stiffness",
        })
    }
}

/// Unit of entry `(row, col)` (zero-based) of a matrix of the given kind.
pub fn block_unit(kind: MatrixKind, row: usize, col: usize) -> &'static str {
    let (row_t, col_t) = (row < 3, col < 3);
    match (kind, row_t, col_t) {
        (MatrixKind::Stiffness, true, true) => "N/mm",
        (MatrixKind::Stiffness, true, false) => "N/rad",
        (MatrixKind::Stiffness, false, true) => "Nmm/mm",
        (MatrixKind::Stiffness, false, false) => "Nmm/rad",
        (MatrixKind::Compliance, true, true) => "mm/N",
        (MatrixKind::Compliance, true, false) => "mm/Nmm",
        (MatrixKind::Compliance, false, true) => "rad/N",
        (MatrixKind::Compliance, false, false) => "rad/Nmm",
    }
}

/// 6×6 compliance or stiffness matrix in (N, mm, rad).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialMatrix6 {
    entries: Matrix6<f64>,
    kind: MatrixKind,
}

impl SpatialMatrix6 {
    pub fn new(entries: Matrix6<f64>, kind: MatrixKind) -> Self {
        Self { entries, kind }
    }

    pub fn compliance(entries: Matrix6<f64>) -> Self {
        Self::new(entries, MatrixKind::Compliance)
    }

    pub fn stiffness(entries: Matrix6<f64>) -> Self {
        Self::new(entries, MatrixKind::Stiffness)
    }

    pub fn zeros(kind: MatrixKind) -> Self {
        Self::new(Matrix6::zeros(), kind)
    }

    pub fn from_diagonal(diag: [f64; 6], kind: MatrixKind) -> Self {
        Self::new(Matrix6::from_diagonal(&Vector6::from(diag)), kind)
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn matrix(&self) -> &Matrix6<f64> {
        &self.entries
    }

    pub fn into_matrix(self) -> Matrix6<f64> {
        self.entries
    }

    /// Entry by one-based indices, matching the `K_ij` notation of reports.
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.entries[(i - 1, j - 1)]
    }

    pub fn diagonal(&self) -> [f64; 6] {
        std::array::from_fn(|i| self.entries[(i, i)])
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// `‖M − Mᵀ‖ / ‖M‖` in the Frobenius norm.
    pub fn symmetry_error(&self) -> f64 {
        let norm = self.entries.norm();
        if norm == 0.0 {
            return 0.0;
        }
        (self.entries - self.entries.transpose()).norm() / norm
    }

    /// Smallest eigenvalue of the symmetric part.
    pub fn min_eigenvalue(&self) -> f64 {
        let sym = (self.entries + self.entries.transpose()) * 0.5;
        sym.symmetric_eigenvalues().min()
    }

    /// Positive semidefinite within `rel_tol` of the largest eigenvalue magnitude.
    pub fn is_psd(&self, rel_tol: f64) -> bool {
        let sym = (self.entries + self.entries.transpose()) * 0.5;
        let eig = sym.symmetric_eigenvalues();
        let scale = eig.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        eig.min() >= -rel_tol * scale
    }

    /// Two-norm condition number from the singular values.
    pub fn condition_number(&self) -> f64 {
        let sv = self.entries.singular_values();
        let (max, min) = (sv.max(), sv.min());
        if min == 0.0 {
            f64::INFINITY
        } else {
            max / min
        }
    }

    fn expect_kind(&self, expected: MatrixKind) -> Result<()> {
        if self.kind == expected {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                expected,
                found: self.kind,
            })
        }
    }
}

impl Index<(usize, usize)> for SpatialMatrix6 {
    type Output = f64;

    fn index(&self, idx: (usize, usize)) -> &f64 {
        &self.entries[idx]
    }
}

impl Add for SpatialMatrix6 {
    type Output = SpatialMatrix6;

    fn add(self, rhs: SpatialMatrix6) -> SpatialMatrix6 {
        assert_eq!(self.kind, rhs.kind, "cannot add {} to {}", rhs.kind, self.kind);
        SpatialMatrix6::new(self.entries + rhs.entries, self.kind)
    }
}

/// Maps a member compliance into the target frame: `J C Jᵀ`.
pub fn transform_compliance(c: &SpatialMatrix6, p: &FramePlacement) -> Result<SpatialMatrix6> {
    c.expect_kind(MatrixKind::Compliance)?;
    let j = amplification_displacement(p);
    Ok(SpatialMatrix6::compliance(j * c.entries * j.transpose()))
}

/// Maps a stiffness into the target frame: `J_F K J⁻¹`, where `J⁻¹ = J_Fᵀ`.
pub fn transform_stiffness(k: &SpatialMatrix6, p: &FramePlacement) -> Result<SpatialMatrix6> {
    k.expect_kind(MatrixKind::Stiffness)?;
    let jf = amplification_force(p);
    Ok(SpatialMatrix6::stiffness(jf * k.entries * jf.transpose()))
}

/// Stiffness ↔ compliance. Fails when the condition number exceeds
/// [`MAX_CONDITION`].
pub fn invert(m: &SpatialMatrix6) -> Result<SpatialMatrix6> {
    let condition = m.condition_number();
    if condition.is_nan() || condition > MAX_CONDITION {
        return Err(Error::Singular { condition });
    }
    let inv = m
        .entries
        .try_inverse()
        .ok_or(Error::Singular { condition })?;
    Ok(SpatialMatrix6::new(inv, m.kind.flipped()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn rot_z_cases() {
        assert_eq!(rot_z(0.0), Matrix3::identity());
        let v = rot_z(FRAC_PI_2) * Vec3::new(1.0, 0.0, 0.0);
        assert_relative_eq!(v, Vec3::new(0.0, 1.0, 0.0), epsilon = 1e-15);
        let r = rot_z(20f64.to_radians());
        assert_relative_eq!(r[(0, 0)], 0.939_692_620_785_908_4, epsilon = 1e-15);
        assert_relative_eq!(r.determinant(), 1.0, epsilon = 1e-15);
        assert_relative_eq!(r * r.transpose(), Matrix3::identity(), epsilon = 1e-15);
    }

    #[test]
    fn s_matrix_pattern() {
        assert_eq!(s_matrix(&Vec3::zeros()), Matrix3::zeros());
        let s = s_matrix(&Vec3::new(1.0, 0.0, 0.0));
        // one-based (2,3) and (3,2)
        assert_eq!(s[(1, 2)], 1.0);
        assert_eq!(s[(2, 1)], -1.0);
        let r = Vec3::new(3.0, -2.0, 5.0);
        assert_eq!(s_matrix(&r) * r, Vec3::zeros());
        assert_eq!(s_matrix(&r).transpose(), -s_matrix(&r));
        // printed convention is the negated cross-product matrix
        let v = Vec3::new(0.3, 1.1, -0.7);
        assert_relative_eq!(s_matrix(&r) * v, -r.cross(&v), epsilon = 1e-15);
    }

    #[test]
    fn amplification_identity_and_inverse_transpose() {
        let id = FramePlacement::identity();
        assert_eq!(amplification_force(&id), Matrix6::identity());
        assert_eq!(amplification_displacement(&id), Matrix6::identity());

        let hinge_a = FramePlacement::translation(Vec3::new(42.85, 14.765, 0.0)).unwrap();
        let prod = amplification_displacement(&hinge_a) * amplification_force(&hinge_a).transpose();
        assert_relative_eq!(prod, Matrix6::identity(), epsilon = 1e-12);

        let p = FramePlacement::from_degrees(-20.0, Vec3::new(10.4, -3.0, 1.5)).unwrap();
        let explicit = amplification_force(&p).try_inverse().unwrap().transpose();
        assert_relative_eq!(amplification_displacement(&p), explicit, epsilon = 1e-12);
        assert_relative_eq!(amplification_force(&p).determinant(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn composition_matches_matrix_product() {
        let p1 = FramePlacement::from_degrees(20.0, Vec3::new(10.4, 0.0, 0.0)).unwrap();
        let p2 = FramePlacement::from_degrees(-35.0, Vec3::new(-2.5, 10.325, -8.65)).unwrap();
        let composed = amplification_force(&p2.compose(&p1));
        let product = amplification_force(&p2) * amplification_force(&p1);
        assert_relative_eq!(composed, product, epsilon = 1e-12);
        assert_relative_eq!(
            amplification_force(&p1.inverse().compose(&p1)),
            Matrix6::identity(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn theta_is_normalized() {
        let p = FramePlacement::new(5.0 * TAU + 0.25, Vec3::zeros()).unwrap();
        assert!(p.theta().abs() < TAU);
        assert_relative_eq!(p.theta(), 0.25, epsilon = 1e-12);
        assert!(FramePlacement::new(f64::NAN, Vec3::zeros()).is_err());
        assert!(FramePlacement::translation(Vec3::new(f64::INFINITY, 0.0, 0.0)).is_err());
    }

    #[test]
    fn transform_identity_and_kind_checks() {
        let c = SpatialMatrix6::from_diagonal([1.0, 2.0, 3.0, 4.0, 5.0, 6.0], MatrixKind::Compliance);
        let id = FramePlacement::identity();
        assert_eq!(transform_compliance(&c, &id).unwrap(), c);
        assert!(matches!(
            transform_stiffness(&c, &id),
            Err(Error::KindMismatch { .. })
        ));
        let k = SpatialMatrix6::from_diagonal([1.0; 6], MatrixKind::Stiffness);
        assert_eq!(transform_stiffness(&k, &id).unwrap(), k);
        assert!(transform_compliance(&k, &id).is_err());
    }

    #[test]
    fn lever_arm_coupling_from_translation() {
        // pure rotational compliance c66 moved d along x picks up C22 = d² c66, C26 = d c66
        let (c66, c55, d) = (0.02, 0.03, 4.0);
        let mut m = Matrix6::zeros();
        m[(5, 5)] = c66;
        m[(4, 4)] = c55;
        let c = SpatialMatrix6::compliance(m);
        let p = FramePlacement::translation(Vec3::new(d, 0.0, 0.0)).unwrap();
        let t = transform_compliance(&c, &p).unwrap();
        assert_relative_eq!(t.at(2, 2), d * d * c66, epsilon = 1e-15);
        assert_relative_eq!(t.at(2, 6), d * c66, epsilon = 1e-15);
        assert_relative_eq!(t.at(6, 2), d * c66, epsilon = 1e-15);
        assert_relative_eq!(t.at(3, 3), d * d * c55, epsilon = 1e-15);
        assert_relative_eq!(t.at(3, 5), -d * c55, epsilon = 1e-15);
        assert_relative_eq!(t.at(6, 6), c66, epsilon = 1e-15);
    }

    #[test]
    fn stiffness_duality_at_table_placement() {
        let c = SpatialMatrix6::compliance(Matrix6::from_fn(|i, j| {
            if i == j {
                1.0 + i as f64
            } else {
                0.1 / (1.0 + (i + j) as f64)
            }
        }));
        let p = FramePlacement::translation(Vec3::new(-2.5, 10.325, -8.65)).unwrap();
        let lhs = transform_stiffness(&invert(&c).unwrap(), &p).unwrap();
        let rhs = invert(&transform_compliance(&c, &p).unwrap()).unwrap();
        let scale = lhs.max_abs();
        assert!((lhs.matrix() - rhs.matrix()).abs().max() <= 1e-7 * scale);
    }

    #[test]
    fn invert_cases() {
        let id = SpatialMatrix6::from_diagonal([1.0; 6], MatrixKind::Stiffness);
        let inv = invert(&id).unwrap();
        assert_eq!(inv.kind(), MatrixKind::Compliance);
        assert_relative_eq!(*inv.matrix(), Matrix6::identity(), epsilon = 1e-15);
        let two = SpatialMatrix6::from_diagonal([2.0; 6], MatrixKind::Stiffness);
        assert_relative_eq!(invert(&two).unwrap().at(4, 4), 0.5, epsilon = 1e-15);

        let singular = SpatialMatrix6::from_diagonal([1.0, 1.0, 0.0, 1.0, 1.0, 1.0], MatrixKind::Stiffness);
        assert!(matches!(invert(&singular), Err(Error::Singular { .. })));
        let bad = SpatialMatrix6::from_diagonal([1.0, 1.0, 1e-13, 1.0, 1.0, 1.0], MatrixKind::Stiffness);
        match invert(&bad) {
            Err(Error::Singular { condition }) => assert!(condition > MAX_CONDITION),
            other => panic!("expected singular, got {other:?}"),
        }
    }

    #[test]
    fn block_units_follow_stiffness_statement() {
        assert_eq!(block_unit(MatrixKind::Stiffness, 0, 0), "N/mm");
        assert_eq!(block_unit(MatrixKind::Stiffness, 1, 5), "N/rad");
        assert_eq!(block_unit(MatrixKind::Stiffness, 4, 2), "Nmm/mm");
        assert_eq!(block_unit(MatrixKind::Stiffness, 3, 3), "Nmm/rad");
        assert_eq!(block_unit(MatrixKind::Compliance, 5, 1), "rad/N");
    }
}
