#include "rfv/geometry/transform.hpp"

#include <algorithm>
#include <cmath>

#include "rfv/errors.hpp"

namespace rfv::geometry {

RigidTransform RigidTransform::from_translation(const Vec3& t) {
    return {Mat3::Identity(), t};
}

RigidTransform RigidTransform::from_axis_angle(const Vec3& axis, double radians, const Vec3& t) {
    const Vec3 u = axis.normalized();
    return {Eigen::AngleAxisd(radians, u).toRotationMatrix(), t};
}

RigidTransform RigidTransform::from_matrix(const Mat4& m) {
    if (m(3, 0) != 0.0 || m(3, 1) != 0.0 || m(3, 2) != 0.0 || m(3, 3) != 1.0)
        throw ParseError("4x4 transform bottom row must be (0,0,0,1)");
    RigidTransform out;
    out.rotation = m.block<3, 3>(0, 0);
    out.translation = m.block<3, 1>(0, 3);
    return out;
}

RigidTransform RigidTransform::from_row_major(const std::array<double, 16>& m) {
    Mat4 mat;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) mat(r, c) = m[static_cast<size_t>(r * 4 + c)];
    return from_matrix(mat);
}

Mat4 RigidTransform::as_matrix() const {
    Mat4 m = Mat4::Identity();
    m.block<3, 3>(0, 0) = rotation;
    m.block<3, 1>(0, 3) = translation;
    return m;
}

std::array<double, 16> RigidTransform::row_major() const {
    const Mat4 m = as_matrix();
    std::array<double, 16> out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[static_cast<size_t>(r * 4 + c)] = m(r, c);
    return out;
}

bool RigidTransform::is_valid(double tol) const {
    if (!rotation.allFinite() || !translation.allFinite()) return false;
    const Mat3 err = rotation.transpose() * rotation - Mat3::Identity();
    if (err.cwiseAbs().maxCoeff() > tol) return false;
    return std::abs(rotation.determinant() - 1.0) <= tol;
}

RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
    return {a.rotation * b.rotation, a.rotation * b.translation + a.translation};
}

RigidTransform invert(const RigidTransform& a) {
    const Mat3 rt = a.rotation.transpose();
    return {rt, -(rt * a.translation)};
}

Vec3 apply(const RigidTransform& a, const Vec3& p) {
    return a.rotation * p + a.translation;
}

double rotation_angle(const Mat3& r) {
    const double c = std::clamp((r.trace() - 1.0) * 0.5, -1.0, 1.0);
    return std::acos(c);
}

}  // namespace rfv::geometry
