#pragma once

#include <Eigen/Dense>
#include <array>

namespace rfv::geometry {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/**
 * Rigid-body transform x -> R*x + t, stored as an explicit rotation matrix
 * plus translation. The 4x4 view has bottom row (0,0,0,1).
 *
 * Rotation validity (orthonormal, det +1) is checked, never silently
 * re-orthogonalized.
 */
struct RigidTransform {
    Mat3 rotation = Mat3::Identity();
    Vec3 translation = Vec3::Zero();

    static RigidTransform identity() { return {}; }
    static RigidTransform from_translation(const Vec3& t);
    /// Rotation of `radians` about a (not necessarily unit) axis, plus optional translation.
    static RigidTransform from_axis_angle(const Vec3& axis, double radians,
                                          const Vec3& t = Vec3::Zero());
    /// Parse a 4x4 matrix; throws ParseError unless the bottom row is (0,0,0,1).
    static RigidTransform from_matrix(const Mat4& m);
    static RigidTransform from_row_major(const std::array<double, 16>& m);

    Mat4 as_matrix() const;
    std::array<double, 16> row_major() const;

    /// R^T R = I within `tol` per entry and det(R) = +1 within `tol`.
    bool is_valid(double tol = 1e-6) const;
};

/// a∘b: matrix product a*b, i.e. b applied first, then a.
RigidTransform compose(const RigidTransform& a, const RigidTransform& b);
RigidTransform invert(const RigidTransform& a);
Vec3 apply(const RigidTransform& a, const Vec3& p);

/// Rotation angle (radians, in [0, pi]) of an orthonormal matrix; metric for pose error.
double rotation_angle(const Mat3& r);

}  // namespace rfv::geometry
