#include "rfv/geometry/camera.hpp"

#include "rfv/errors.hpp"

namespace rfv::geometry {

Vec3 back_project(double u, double v, double z, const CameraIntrinsics& k) {
    if (z <= 0.0) throw NonPositiveDepth();
    return {(u - k.cx) * z / k.fx, (v - k.cy) * z / k.fy, z};
}

std::pair<double, double> project(const Vec3& p, const CameraIntrinsics& k) {
    if (p.z() <= 0.0) throw BehindCamera();
    return {k.fx * p.x() / p.z() + k.cx, k.fy * p.y() / p.z() + k.cy};
}

}  // namespace rfv::geometry
